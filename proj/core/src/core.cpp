#include "neutro/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace neutro {

namespace {

bool unit(double x) noexcept { return std::isfinite(x) && x >= -kEps && x <= 1.0 + kEps; }
bool neg_unit(double x) noexcept { return std::isfinite(x) && x >= -1.0 - kEps && x <= kEps; }

std::vector<double> canonical(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

double mean(const std::vector<double>& v) noexcept {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

const char* error_kind_name(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::Parameter: return "parameter";
        case ErrorKind::Lookup: return "lookup";
        case ErrorKind::LengthMismatch: return "length_mismatch";
        case ErrorKind::Dimension: return "dimension";
        case ErrorKind::Invalid: return "invalid";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::MissingWeights: return "missing_weights";
        case ErrorKind::Infeasible: return "infeasible";
    }
    return "unknown";
}

double safe_pow(double x, double y) noexcept {
    if (y == 0.0) return 1.0;
    return std::pow(x, y);
}

bool SVNN::valid() const noexcept { return unit(t) && unit(i) && unit(f) && t + i + f <= 3.0 + kEps; }

bool IVNN::valid() const noexcept {
    for (double x : bounds())
        if (!unit(x)) return false;
    return tL <= tU + kEps && iL <= iU + kEps && fL <= fU + kEps && tU + iU + fU <= 3.0 + kEps;
}

bool BNN::valid() const noexcept {
    return unit(tp) && unit(ip) && unit(fp) && neg_unit(tn) && neg_unit(in) && neg_unit(fn) &&
           tp + ip + fp - tn - in - fn <= 6.0 + kEps;
}

SVNHFE::SVNHFE(std::vector<double> t, std::vector<double> i, std::vector<double> f)
    : t_(canonical(std::move(t))), i_(canonical(std::move(i))), f_(canonical(std::move(f))) {}

bool SVNHFE::valid() const noexcept {
    if (t_.empty() || i_.empty() || f_.empty()) return false;
    for (int c = 0; c < 3; ++c)
        for (double x : component(c))
            if (!unit(x)) return false;
    return t_.front() + i_.front() + f_.front() <= 3.0 + kEps;
}

bool RoughSVNN::valid() const noexcept {
    // Only the truth ordering is enforced; published rough tables list I and F in either order.
    return lower.valid() && upper.valid() && lower.t <= upper.t + kEps;
}

SVNN RoughSVNN::mid() const noexcept {
    return {(lower.t + upper.t) / 2.0, (lower.i + upper.i) / 2.0, (lower.f + upper.f) / 2.0};
}

bool LinguisticScale::valid() const noexcept {
    for (std::size_t a = 0; a < entries.size(); ++a) {
        for (std::size_t b = a + 1; b < entries.size(); ++b)
            if (entries[a].first == entries[b].first) return false;
        bool ok = std::visit([](const auto& v) { return v.valid(); }, entries[a].second);
        if (!ok) return false;
    }
    return true;
}

const LinguisticScale& builtin_scale(const std::string& name) {
    static const LinguisticScale ivnn9{
        "ivnn9",
        {
            {"EG", IVNN{0.95, 1.0, 0.05, 0.1, 0.0, 0.1}},
            {"VG", IVNN{0.75, 0.95, 0.1, 0.15, 0.1, 0.2}},
            {"G", IVNN{0.6, 0.75, 0.1, 0.2, 0.2, 0.25}},
            {"MG", IVNN{0.5, 0.6, 0.2, 0.25, 0.25, 0.35}},
            {"M", IVNN{0.4, 0.5, 0.2, 0.3, 0.35, 0.45}},
            {"ML", IVNN{0.3, 0.4, 0.15, 0.25, 0.45, 0.5}},
            {"L", IVNN{0.2, 0.3, 0.1, 0.2, 0.5, 0.65}},
            {"VL", IVNN{0.05, 0.2, 0.1, 0.15, 0.65, 0.8}},
            {"EL", IVNN{0.0, 0.05, 0.05, 0.1, 0.8, 0.95}},
        }};
    static const LinguisticScale svnn5{
        "svnn5",
        {
            {"VP", SVNN{0.05, 0.95, 0.95}},
            {"P", SVNN{0.25, 0.75, 0.75}},
            {"G", SVNN{0.5, 0.5, 0.5}},
            {"VG", SVNN{0.75, 0.25, 0.25}},
            {"EX", SVNN{0.95, 0.05, 0.05}},
        }};
    if (name == "ivnn9") return ivnn9;
    if (name == "svnn5") return svnn5;
    throw Error(ErrorKind::Lookup, "unknown linguistic scale '" + name + "'");
}

ScaleValue linguistic_to_value(const std::string& label, const LinguisticScale& scale) {
    for (const auto& [l, v] : scale.entries)
        if (l == label) return v;
    throw Error(ErrorKind::Lookup, "unknown linguistic label '" + label + "' in scale '" + scale.name + "'");
}

void require_valid(const SVNN& a) {
    if (!a.valid()) throw Error(ErrorKind::Invalid, "invalid SVNN");
}
void require_valid(const IVNN& a) {
    if (!a.valid()) throw Error(ErrorKind::Invalid, "invalid IVNN");
}
void require_valid(const BNN& a) {
    if (!a.valid()) throw Error(ErrorKind::Invalid, "invalid BNN");
}
void require_valid(const SVNHFE& a) {
    if (!a.valid()) throw Error(ErrorKind::Invalid, "invalid SVNHFE");
}
void require_valid(const RoughSVNN& a) {
    if (!a.valid()) throw Error(ErrorKind::Invalid, "invalid rough SVNN");
}

void require_weights(const std::vector<double>& w, std::size_t n) {
    if (w.empty()) throw Error(ErrorKind::Parameter, "empty weight vector");
    if (w.size() != n) throw Error(ErrorKind::LengthMismatch, "weight vector length does not match");
    double s = 0.0;
    for (double x : w) {
        if (!std::isfinite(x) || x < -kEps) throw Error(ErrorKind::Parameter, "negative weight");
        s += x;
    }
    if (std::abs(s - 1.0) > kEps) throw Error(ErrorKind::Parameter, "weights must sum to 1");
}

SVNN complement(const SVNN& a) noexcept { return {a.f, 1.0 - a.i, a.t}; }

SVNN svnn_add(const SVNN& a, const SVNN& b) noexcept {
    return {a.t + b.t - a.t * b.t, a.i + b.i - a.i * b.i, a.f + b.f - a.f * b.f};
}

SVNN svnn_mul(const SVNN& a, const SVNN& b) noexcept { return {a.t * b.t, a.i * b.i, a.f * b.f}; }

SVNN svnn_power(const SVNN& a, double p) noexcept {
    return {safe_pow(a.t, p), safe_pow(a.i, p), safe_pow(a.f, p)};
}

SVNN svnn_scale_clamped(double lambda, const SVNN& a) noexcept {
    return {std::min(lambda * a.t, 1.0), std::min(lambda * a.i, 1.0), std::min(lambda * a.f, 1.0)};
}

bool svnn_contained(const SVNN& a, const SVNN& b, double tol) noexcept {
    return a.t <= b.t + tol && a.i >= b.i - tol && a.f >= b.f - tol;
}

double score(const SVNN& a, ScoreVariant v, double alpha) {
    require_valid(a);
    switch (v) {
        case ScoreVariant::Liu: return 2.0 + a.t - a.i - a.f;
        case ScoreVariant::YeHybrid: {
            if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::Parameter, "alpha must lie in [0,1]");
            double s = (1.0 + a.t - a.f) / 2.0;
            double ac = (2.0 + a.t - a.i - a.f) / 3.0;
            return alpha * s + (1.0 - alpha) * ac;
        }
        case ScoreVariant::Trig: {
            constexpr double h = std::numbers::pi / 2.0;
            return a.t * (1.0 + std::sin(a.t * h)) + std::cos(a.i * h) / (2.0 * (1.0 + a.i)) +
                   std::cos(a.f * h) / (1.0 + a.f);
        }
    }
    return 0.0;
}

double certainty(const SVNN& a) {
    require_valid(a);
    constexpr double pi = std::numbers::pi;
    return (std::abs(std::cos(a.t * pi)) + std::abs(std::cos(a.i * pi)) + std::abs(std::cos(a.f * pi))) / 3.0;
}

double score(const SVNHFE& n) noexcept { return (2.0 + mean(n.t()) - mean(n.i()) - mean(n.f())) / 3.0; }

double accuracy(const SVNHFE& n) noexcept { return mean(n.t()) - mean(n.f()); }

std::weak_ordering compare(const SVNHFE& a, const SVNHFE& b) noexcept {
    double sa = score(a), sb = score(b);
    if (std::abs(sa - sb) > kEps) return sa < sb ? std::weak_ordering::less : std::weak_ordering::greater;
    double aa = accuracy(a), ab = accuracy(b);
    if (std::abs(aa - ab) > kEps) return aa < ab ? std::weak_ordering::less : std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

std::array<AlignedPair, 3> align(const SVNHFE& a, const SVNHFE& b, Attitude att) {
    std::array<AlignedPair, 3> out;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> x = a.component(c), y = b.component(c);
        std::size_t l = std::max(x.size(), y.size());
        // Pessimistic pads truth with its smallest value and i, f with their largest.
        bool use_min = (c == 0) == (att == Attitude::Pessimistic);
        auto pad = [&](std::vector<double>& v) {
            double fill = use_min ? v.back() : v.front();
            v.resize(l, fill);
            std::sort(v.begin(), v.end(), std::greater<>());
        };
        pad(x);
        pad(y);
        out[c] = {std::move(x), std::move(y)};
    }
    return out;
}

BNN bnn_scale(double w, const BNN& b) {
    if (!(w > 0.0)) throw Error(ErrorKind::Parameter, "bipolar scale factor must be positive");
    return {1.0 - std::pow(1.0 - b.tp, w), std::pow(b.ip, w),  std::pow(b.fp, w),
            -std::pow(-b.tn, w),           -std::pow(-b.in, w), -(1.0 - std::pow(1.0 + b.fn, w))};
}

BNN bnn_power(const BNN& b, double w) {
    if (!(w > 0.0)) throw Error(ErrorKind::Parameter, "bipolar exponent must be positive");
    return {std::pow(b.tp, w),  1.0 - std::pow(1.0 - b.ip, w), 1.0 - std::pow(1.0 - b.fp, w),
            -(1.0 - std::pow(1.0 + b.tn, w)), -std::pow(-b.in, w), -std::pow(-b.fn, w)};
}

BNN bnn_add(const BNN& a, const BNN& b) noexcept {
    return {a.tp + b.tp - a.tp * b.tp, a.ip * b.ip, a.fp * b.fp,
            -(a.tn * b.tn), -(a.in * b.in), -(-a.fn - b.fn - a.fn * b.fn)};
}

BNN bnn_mul(const BNN& a, const BNN& b) noexcept {
    return {a.tp * b.tp, a.ip + b.ip - a.ip * b.ip, a.fp + b.fp - a.fp * b.fp,
            -(-a.tn - b.tn - a.tn * b.tn), -(a.in * b.in), -(a.fn * b.fn)};
}

IVNN ivnn_complement(const IVNN& a) noexcept { return {a.fL, a.fU, 1.0 - a.iU, 1.0 - a.iL, a.tL, a.tU}; }

SVNN svnn_weighted_average(const std::vector<SVNN>& values, const std::vector<double>& w) {
    if (values.empty()) throw Error(ErrorKind::Parameter, "empty value list");
    require_weights(w, values.size());
    double pt = 1.0, pi = 1.0, pf = 1.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        require_valid(values[j]);
        pt *= safe_pow(1.0 - values[j].t, w[j]);
        pi *= safe_pow(values[j].i, w[j]);
        pf *= safe_pow(values[j].f, w[j]);
    }
    return {1.0 - pt, pi, pf};
}

SVNN svnn_weighted_geometric(const std::vector<SVNN>& values, const std::vector<double>& w) {
    if (values.empty()) throw Error(ErrorKind::Parameter, "empty value list");
    require_weights(w, values.size());
    double pt = 1.0, pi = 1.0, pf = 1.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        require_valid(values[j]);
        pt *= safe_pow(values[j].t, w[j]);
        pi *= safe_pow(1.0 - values[j].i, w[j]);
        pf *= safe_pow(1.0 - values[j].f, w[j]);
    }
    return {pt, 1.0 - pi, 1.0 - pf};
}

}  // namespace neutro
