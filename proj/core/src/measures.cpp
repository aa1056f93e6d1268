#include "neutro/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace neutro {

namespace {

bool is_hausdorff(SvnhfForm f) {
    return f == SvnhfForm::HausdorffGeneralized || f == SvnhfForm::HausdorffHamming ||
           f == SvnhfForm::HausdorffEuclidean;
}

double order_of(const DistanceSpec& s) {
    switch (s.form) {
        case SvnhfForm::Hamming:
        case SvnhfForm::HausdorffHamming: return 1.0;
        case SvnhfForm::Euclidean:
        case SvnhfForm::HausdorffEuclidean: return 2.0;
        default: return s.lambda;
    }
}

// |x|^p and s^(1/p) with exact paths for orders 1 and 2.
double raise(double x, double p) {
    x = std::abs(x);
    if (p == 1.0) return x;
    if (p == 2.0) return x * x;
    return std::pow(x, p);
}

double root(double s, double p) {
    if (p == 1.0) return s;
    if (p == 2.0) return std::sqrt(s);
    return std::pow(s, 1.0 / p);
}

void check_lengths(std::size_t a, std::size_t b) {
    if (a != b) throw Error(ErrorKind::LengthMismatch, "operand lists differ in length");
    if (a == 0) throw Error(ErrorKind::LengthMismatch, "operand lists are empty");
}

// Per-element component weights (t, i, f) and the overall prefactor.
struct ElementWeights {
    std::array<double, 3> c;
};

ElementWeights element_weights(const DistanceSpec& s, std::size_t idx, std::size_t n) {
    if (s.triple) return {{(*s.triple)[0][idx], (*s.triple)[1][idx], (*s.triple)[2][idx]}};
    double w = s.weights ? (*s.weights)[idx] : 1.0 / static_cast<double>(n);
    return {{w, w, w}};
}

}  // namespace

void DistanceSpec::check(std::size_t n) const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorKind::Parameter, "lambda must be positive");
    if (weights && triple) throw Error(ErrorKind::Parameter, "give either one weight vector or a triple");
    if (weights) require_weights(*weights, n);
    if (triple)
        for (const auto& w : *triple) require_weights(w, n);
    if (normalization == SvnhfNormalization::BiswasL && (is_hausdorff(form) || triple))
        throw Error(ErrorKind::Parameter, "biswas_l normalization supports plain forms with one weight vector");
}

double svnhf_distance(const std::vector<SVNHFE>& a, const std::vector<SVNHFE>& b, const DistanceSpec& spec) {
    check_lengths(a.size(), b.size());
    spec.check(a.size());
    const double p = order_of(spec);
    const std::size_t n = a.size();
    double total = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        require_valid(a[x]);
        require_valid(b[x]);
        auto al = align(a[x], b[x], spec.attitude);
        ElementWeights ew = element_weights(spec, x, n);
        if (spec.normalization == SvnhfNormalization::BiswasL) {
            double sum = 0.0;
            std::size_t len = 0;
            for (int c = 0; c < 3; ++c) {
                const auto& [u, v] = al[c];
                for (std::size_t j = 0; j < u.size(); ++j) sum += raise(u[j] - v[j], p);
                len += u.size();
            }
            total += ew.c[0] * sum / static_cast<double>(len);
        } else if (is_hausdorff(spec.form)) {
            double m = 0.0;
            for (int c = 0; c < 3; ++c) {
                const auto& [u, v] = al[c];
                for (std::size_t j = 0; j < u.size(); ++j) m = std::max(m, ew.c[c] * raise(u[j] - v[j], p));
            }
            total += m;
        } else {
            for (int c = 0; c < 3; ++c) {
                const auto& [u, v] = al[c];
                double s = 0.0;
                for (std::size_t j = 0; j < u.size(); ++j) s += raise(u[j] - v[j], p);
                total += ew.c[c] * s / static_cast<double>(u.size());
            }
        }
    }
    return root(total / 3.0, p);
}

double svnhf_similarity(const std::vector<SVNHFE>& a, const std::vector<SVNHFE>& b, SimilarityForm form,
                        const DistanceSpec& spec) {
    if (form == SimilarityForm::OneMinusDistance) return 1.0 - svnhf_distance(a, b, spec);
    check_lengths(a.size(), b.size());
    spec.check(a.size());
    const std::size_t n = a.size();
    double total = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        require_valid(a[x]);
        require_valid(b[x]);
        auto al = align(a[x], b[x], spec.attitude);
        // Component weights only matter relative to each other inside one element.
        std::array<double, 3> cw{1.0, 1.0, 1.0};
        double ew = 1.0 / static_cast<double>(n);
        if (spec.triple) cw = {(*spec.triple)[0][x], (*spec.triple)[1][x], (*spec.triple)[2][x]};
        if (spec.weights) ew = (*spec.weights)[x];
        double num = 0.0, den = 0.0, sa = 0.0, sb = 0.0;
        for (int c = 0; c < 3; ++c) {
            const auto& [u, v] = al[c];
            for (std::size_t j = 0; j < u.size(); ++j) {
                if (form == SimilarityForm::SetTheoretic) {
                    num += cw[c] * std::min(u[j], v[j]);
                    den += cw[c] * std::max(u[j], v[j]);
                } else {
                    num += cw[c] * u[j] * v[j];
                    sa += cw[c] * u[j] * u[j];
                    sb += cw[c] * v[j] * v[j];
                }
            }
        }
        if (form == SimilarityForm::MatchingFunction) den = std::max(sa, sb);
        total += ew * (den == 0.0 ? 1.0 : num / den);
    }
    return total;
}

double bnn_distance(const std::vector<BNN>& a, const std::vector<BNN>& b, BnnDistanceForm form) {
    check_lengths(a.size(), b.size());
    double s = 0.0;
    bool squared = form == BnnDistanceForm::Euclidean || form == BnnDistanceForm::NormalizedEuclidean;
    for (std::size_t j = 0; j < a.size(); ++j) {
        require_valid(a[j]);
        require_valid(b[j]);
        auto pa = a[j].parts(), pb = b[j].parts();
        for (int k = 0; k < 6; ++k) {
            double d = pa[k] - pb[k];
            s += squared ? d * d : std::abs(d);
        }
    }
    double m6 = 6.0 * static_cast<double>(a.size());
    switch (form) {
        case BnnDistanceForm::Hamming: return s;
        case BnnDistanceForm::NormalizedHamming: return s / m6;
        case BnnDistanceForm::Euclidean: return std::sqrt(s);
        case BnnDistanceForm::NormalizedEuclidean: return std::sqrt(s / m6);
    }
    return s;
}

double ivnn_distance(const std::vector<IVNN>& a, const std::vector<IVNN>& b, IvnnDistanceForm form,
                     const std::optional<std::vector<double>>& w) {
    check_lengths(a.size(), b.size());
    if (w) require_weights(*w, a.size());
    const double n = static_cast<double>(a.size());
    double total = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        require_valid(a[j]);
        require_valid(b[j]);
        auto pa = a[j].bounds(), pb = b[j].bounds();
        double s = 0.0;
        for (int k = 0; k < 6; ++k) {
            double d = pa[k] - pb[k];
            s += form == IvnnDistanceForm::Euclidean ? d * d : std::abs(d);
        }
        total += (w ? (*w)[j] : 1.0 / n) * s / 6.0;
    }
    return form == IvnnDistanceForm::Euclidean ? std::sqrt(total) : total;
}

namespace {

double rough_kernel(double d, RoughForm form) {
    constexpr double pi = std::numbers::pi;
    switch (form) {
        case RoughForm::Cosine: return std::cos(pi / 6.0 * d);
        case RoughForm::Sine: return 1.0 - std::sin(pi / 6.0 * d);
        case RoughForm::Cotangent: return 1.0 / std::tan(pi / 4.0 + pi / 12.0 * d);
    }
    return 0.0;
}

double rough_core(const std::vector<SVNN>& ma, const std::vector<SVNN>& mb, RoughForm form,
                  const std::optional<std::vector<double>>& w) {
    check_lengths(ma.size(), mb.size());
    if (w) require_weights(*w, ma.size());
    const double n = static_cast<double>(ma.size());
    double s = 0.0;
    for (std::size_t j = 0; j < ma.size(); ++j) {
        double d = std::abs(ma[j].t - mb[j].t) + std::abs(ma[j].i - mb[j].i) + std::abs(ma[j].f - mb[j].f);
        s += (w ? (*w)[j] : 1.0 / n) * rough_kernel(d, form);
    }
    return s;
}

}  // namespace

double rough_trig_similarity(const std::vector<RoughSVNN>& a, const std::vector<RoughSVNN>& b, RoughForm form,
                             const std::optional<std::vector<double>>& w) {
    check_lengths(a.size(), b.size());
    std::vector<SVNN> ma, mb;
    for (std::size_t j = 0; j < a.size(); ++j) {
        require_valid(a[j]);
        require_valid(b[j]);
        ma.push_back(a[j].mid());
        mb.push_back(b[j].mid());
    }
    return rough_core(ma, mb, form, w);
}

double rough_trig_similarity(const std::vector<RoughSVNN>& a, const std::vector<SVNN>& ref, RoughForm form,
                             const std::optional<std::vector<double>>& w) {
    check_lengths(a.size(), ref.size());
    std::vector<SVNN> ma;
    for (std::size_t j = 0; j < a.size(); ++j) {
        require_valid(a[j]);
        require_valid(ref[j]);
        ma.push_back(a[j].mid());
    }
    return rough_core(ma, ref, form, w);
}

}  // namespace neutro
