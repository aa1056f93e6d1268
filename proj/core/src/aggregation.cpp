#include "neutro/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace neutro {

namespace {

void check_scalars(const std::vector<double>& a, const Weights& w) {
    if (a.empty()) throw Error(ErrorKind::Parameter, "empty value list");
    require_weights(w, a.size());
    for (double x : a)
        if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::Parameter, "values must lie in [0,1]");
}

}  // namespace

double wam(const std::vector<double>& a, const Weights& w) {
    check_scalars(a, w);
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += w[j] * a[j];
    return s;
}

double wgm(const std::vector<double>& a, const Weights& w) {
    check_scalars(a, w);
    double p = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j) p *= safe_pow(a[j], w[j]);
    return p;
}

double giwagm(const std::vector<double>& a, const Weights& w, double k) {
    check_scalars(a, w);
    if (k == 0.0 || !std::isfinite(k)) throw Error(ErrorKind::Parameter, "k must be a nonzero real");
    if (k < 0.0 && std::any_of(a.begin(), a.end(), [](double x) { return x == 0.0; }))
        throw Error(ErrorKind::Parameter, "negative k needs strictly positive values");
    double s = 0.0, p = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        s += w[j] * std::pow(a[j], 1.0 / k);
        p *= safe_pow(a[j], w[j] / k);
    }
    double base = s * p;
    return k == 2.0 ? base : std::pow(base, k / 2.0);
}

double iwagm(const std::vector<double>& a, const Weights& w) {
    check_scalars(a, w);
    double s = 0.0, p = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        s += w[j] * std::sqrt(a[j]);
        p *= safe_pow(a[j], w[j] / 2.0);
    }
    return s * p;
}

SVNN isvwag(const std::vector<SVNN>& values, const Weights& w, double k) {
    if (values.empty()) throw Error(ErrorKind::Parameter, "empty value list");
    require_weights(w, values.size());
    if (k == 0.0 || !std::isfinite(k)) throw Error(ErrorKind::Parameter, "k must be a nonzero real");
    SVNN sum{0.0, 0.0, 0.0};
    SVNN prod{1.0, 1.0, 1.0};
    for (std::size_t j = 0; j < values.size(); ++j) {
        require_valid(values[j]);
        sum = svnn_add(sum, svnn_scale_clamped(w[j], svnn_power(values[j], 1.0 / k)));
        prod = svnn_mul(prod, svnn_power(values[j], w[j] / k));
    }
    SVNN r = svnn_mul(sum, prod);
    return k == 2.0 ? r : svnn_power(r, k / 2.0);
}

SVNN refined_group_aggregate(const std::vector<SVNN>& cells, const Weights& gamma) {
    if (cells.size() != gamma.size()) throw Error(ErrorKind::LengthMismatch, "one weight per decision maker");
    require_weights(gamma, cells.size());
    SVNN r{1.0, 1.0, 1.0};
    for (std::size_t d = 0; d < cells.size(); ++d) {
        require_valid(cells[d]);
        r = svnn_mul(r, svnn_power(cells[d], gamma[d]));
    }
    return r;
}

Weights crispify_dm_weights(const std::vector<SVNN>& w) {
    if (w.empty()) throw Error(ErrorKind::Parameter, "no decision makers");
    Weights c;
    double total = 0.0;
    for (const auto& x : w) {
        require_valid(x);
        double v = 1.0 - std::sqrt(((1.0 - x.t) * (1.0 - x.t) + x.i * x.i + x.f * x.f) / 3.0);
        c.push_back(v);
        total += v;
    }
    if (!(total > 0.0)) throw Error(ErrorKind::Degenerate, "every decision maker has zero crisp weight");
    for (double& v : c) v /= total;
    return c;
}

EntropyResult entropy_weights(const std::vector<std::vector<SVNN>>& matrix) {
    if (matrix.empty() || matrix.front().empty()) throw Error(ErrorKind::Dimension, "empty matrix");
    const std::size_t n = matrix.size(), m = matrix.front().size();
    EntropyResult r;
    r.entropy.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (matrix[i].size() != m) throw Error(ErrorKind::Dimension, "ragged matrix");
            const SVNN& x = matrix[i][j];
            require_valid(x);
            s += (x.t + x.f) * std::abs(2.0 * x.i - 1.0);
        }
        r.entropy[j] = 1.0 - s / static_cast<double>(n);
    }
    double total = 0.0;
    for (double e : r.entropy) total += 1.0 - e;
    if (!(std::abs(total) > kEps)) throw Error(ErrorKind::Degenerate, "every entropy equals 1");
    for (double e : r.entropy) r.weights.push_back((1.0 - e) / total);
    return r;
}

void check_bounds(const WeightBounds& b) {
    if (b.empty()) throw Error(ErrorKind::Parameter, "empty bounds");
    double lo = 0.0, hi = 0.0;
    for (const auto& x : b) {
        if (!(x.lo >= 0.0 && x.lo <= x.hi + kEps && x.hi <= 1.0))
            throw Error(ErrorKind::Infeasible, "each bound needs 0 <= lo <= hi <= 1");
        lo += x.lo;
        hi += x.hi;
    }
    if (lo > 1.0 + kEps || hi < 1.0 - kEps) throw Error(ErrorKind::Infeasible, "bounds admit no simplex point");
}

Weights lp_criteria_weights(const std::vector<double>& c, const WeightBounds& bounds) {
    check_bounds(bounds);
    if (c.size() != bounds.size()) throw Error(ErrorKind::LengthMismatch, "one bound per criterion");
    Weights w;
    double rem = 1.0;
    for (const auto& b : bounds) {
        w.push_back(b.lo);
        rem -= b.lo;
    }
    std::vector<std::size_t> order(c.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return c[x] > c[y]; });
    for (std::size_t j : order) {
        if (rem <= 0.0) break;
        double d = std::min(bounds[j].hi - w[j], rem);
        w[j] += d;
        rem -= d;
    }
    return w;
}

Weights lp_criteria_weights(const std::vector<std::vector<double>>& H, const WeightBounds& bounds) {
    if (H.empty()) throw Error(ErrorKind::Dimension, "empty score matrix");
    std::vector<double> cs(H.front().size(), 0.0);
    for (const auto& row : H) {
        if (row.size() != cs.size()) throw Error(ErrorKind::Dimension, "ragged score matrix");
        for (std::size_t j = 0; j < row.size(); ++j) cs[j] += row[j];
    }
    return lp_criteria_weights(cs, bounds);
}

Weights lp_vertex_enumeration(const std::vector<double>& c, const WeightBounds& bounds) {
    check_bounds(bounds);
    const std::size_t m = c.size();
    if (m != bounds.size()) throw Error(ErrorKind::LengthMismatch, "one bound per criterion");
    // A vertex fixes every coordinate but one at a bound; the free one absorbs the remaining mass.
    Weights best;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t free = 0; free < m; ++free) {
        std::size_t combos = std::size_t{1} << (m - 1);
        for (std::size_t mask = 0; mask < combos; ++mask) {
            Weights w(m, 0.0);
            double used = 0.0;
            std::size_t bit = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == free) continue;
                w[j] = (mask >> bit++) & 1U ? bounds[j].hi : bounds[j].lo;
                used += w[j];
            }
            w[free] = 1.0 - used;
            if (w[free] < bounds[free].lo - kEps || w[free] > bounds[free].hi + kEps) continue;
            double val = 0.0;
            for (std::size_t j = 0; j < m; ++j) val += w[j] * c[j];
            if (val > best_val + 1e-12) {
                best_val = val;
                best = w;
            }
        }
    }
    return best;
}

}  // namespace neutro
