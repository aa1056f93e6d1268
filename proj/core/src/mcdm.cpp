#include "neutro/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace neutro {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

template <class T, std::size_t K, class F>
Tensor flat(const std::vector<T>& v, F parts) {
    Tensor t{{v.size(), K}, {}};
    for (const auto& x : v)
        for (double d : parts(x)) t.data.push_back(d);
    return t;
}

template <class T, std::size_t K, class F>
Tensor flat(const Matrix<T>& m, F parts) {
    Tensor t{{m.size(), m.empty() ? 0 : m.front().size(), K}, {}};
    for (const auto& row : m)
        for (const auto& x : row)
            for (double d : parts(x)) t.data.push_back(d);
    return t;
}

std::array<double, 3> svnn_parts(const SVNN& a) { return {a.t, a.i, a.f}; }
std::array<double, 6> bnn_parts(const BNN& a) { return a.parts(); }
std::array<double, 6> ivnn_parts(const IVNN& a) { return a.bounds(); }

Trail start_trail(const std::string& method, const std::vector<std::string>& alts) {
    Trail t;
    t.method = method;
    t.alternatives = alts;
    return t;
}

Tensor tensor(const std::vector<SVNHFE>& v) {
    // Hesitant values are summarized by score and accuracy in trails.
    Tensor t{{v.size(), 2}, {}};
    for (const auto& x : v) {
        t.data.push_back(score(x));
        t.data.push_back(accuracy(x));
    }
    return t;
}

}  // namespace

Ranking make_ranking(const std::vector<double>& scores, Direction dir) {
    Ranking r;
    r.scores = scores;
    r.order.resize(scores.size());
    std::iota(r.order.begin(), r.order.end(), 0);
    // Scores within kEps count as equal so ties fall back to the original index.
    std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
        if (std::abs(scores[a] - scores[b]) <= kEps) return false;
        return dir == Direction::Descending ? scores[a] > scores[b] : scores[a] < scores[b];
    });
    for (std::size_t k = 0; k < r.order.size(); ++k) {
        if (k == 0 || std::abs(scores[r.order[k]] - scores[r.order[k - 1]]) > kEps)
            r.ties.push_back({r.order[k]});
        else
            r.ties.back().push_back(r.order[k]);
    }
    return r;
}

Tensor tensor(const std::vector<double>& v) { return {{v.size()}, v}; }
Tensor tensor(const Matrix<double>& m) {
    Tensor t{{m.size(), m.empty() ? 0 : m.front().size()}, {}};
    for (const auto& row : m) t.data.insert(t.data.end(), row.begin(), row.end());
    return t;
}
Tensor tensor(const std::vector<SVNN>& v) { return flat<SVNN, 3>(v, svnn_parts); }
Tensor tensor(const Matrix<SVNN>& m) { return flat<SVNN, 3>(m, svnn_parts); }
Tensor tensor(const std::vector<BNN>& v) { return flat<BNN, 6>(v, bnn_parts); }
Tensor tensor(const Matrix<BNN>& m) { return flat<BNN, 6>(m, bnn_parts); }
Tensor tensor(const std::vector<IVNN>& v) { return flat<IVNN, 6>(v, ivnn_parts); }
Tensor tensor(const Matrix<IVNN>& m) { return flat<IVNN, 6>(m, ivnn_parts); }

const Tensor& Trail::at(const std::string& label) const {
    for (const auto& [l, t] : entries)
        if (l == label) return t;
    throw Error(ErrorKind::Lookup, "no trail entry '" + label + "'");
}

// ---------------------------------------------------------------------------
// Ideal-distance ranking over hesitant values.

IdealDistanceResult svnhf_ideal_rank(const DecisionProblem<SVNHFE>& p, DistanceSpec spec) {
    p.validate();
    if (!spec.weights && !spec.triple) {
        if (!p.weights) throw Error(ErrorKind::MissingWeights, "ideal-distance ranking needs weights");
        spec.weights = p.weights;
    }
    std::vector<SVNHFE> ideal;
    for (const auto& c : p.criteria)
        ideal.push_back(c.kind == CriterionKind::Benefit ? SVNHFE({1.0}, {0.0}, {0.0}) : SVNHFE({0.0}, {1.0}, {1.0}));
    IdealDistanceResult r;
    for (const auto& row : p.cells) r.distances.push_back(svnhf_distance(row, ideal, spec));
    r.ranking = make_ranking(r.distances, Direction::Ascending);
    r.trail = start_trail("ideal-distance", p.alternatives);
    r.trail.params = {{"lambda", fmt(spec.lambda)},
                      {"normalization", spec.normalization == SvnhfNormalization::BiswasL ? "biswas_l" : "sahin_liu"}};
    r.trail.entries.emplace_back("distance", tensor(r.distances));
    r.trail.ranking = r.ranking;
    return r;
}

// ---------------------------------------------------------------------------
// Grey relational analysis over hesitant values.

namespace {

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

double gra_distance(const SVNHFE& a, const SVNHFE& b) {
    return (std::abs(mean_of(a.t()) - mean_of(b.t())) + std::abs(mean_of(a.i()) - mean_of(b.i())) +
            std::abs(mean_of(a.f()) - mean_of(b.f()))) /
           3.0;
}

Matrix<double> grey_coefficients(const Matrix<SVNHFE>& x, const std::vector<SVNHFE>& ref, double rho) {
    Matrix<double> d(x.size(), std::vector<double>(ref.size()));
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < ref.size(); ++j) {
            d[i][j] = gra_distance(x[i][j], ref[j]);
            lo = std::min(lo, d[i][j]);
            hi = std::max(hi, d[i][j]);
        }
    for (auto& row : d)
        for (double& v : row) v = (hi == 0.0) ? 1.0 : (lo + rho * hi) / (v + rho * hi);
    return d;
}

}  // namespace

GraResult gra_svnhf(const DecisionProblem<SVNHFE>& p, GraParams params) {
    p.validate();
    if (!p.weights) throw Error(ErrorKind::MissingWeights, "GRA needs weights");
    if (!(params.rho >= 0.0 && params.rho <= 1.0)) throw Error(ErrorKind::Parameter, "rho must lie in [0,1]");
    const auto& w = *p.weights;
    GraResult r;
    for (std::size_t j = 0; j < p.m(); ++j) {
        std::size_t best = 0, worst = 0;
        for (std::size_t i = 1; i < p.n(); ++i) {
            if (compare(p.cells[i][j], p.cells[best][j]) > 0) best = i;
            if (compare(p.cells[i][j], p.cells[worst][j]) < 0) worst = i;
        }
        if (p.criteria[j].kind == CriterionKind::Cost) std::swap(best, worst);
        r.pis.push_back(p.cells[best][j]);
        r.nis.push_back(p.cells[worst][j]);
    }
    r.coeff_pos = grey_coefficients(p.cells, r.pis, params.rho);
    r.coeff_neg = grey_coefficients(p.cells, r.nis, params.rho);
    for (std::size_t i = 0; i < p.n(); ++i) {
        double dp = 0.0, dn = 0.0;
        for (std::size_t j = 0; j < p.m(); ++j) {
            dp += w[j] * r.coeff_pos[i][j];
            dn += w[j] * r.coeff_neg[i][j];
        }
        r.degree_pos.push_back(dp);
        r.degree_neg.push_back(dn);
        r.closeness.push_back(dp / (dp + dn));
    }
    r.ranking = make_ranking(r.closeness, Direction::Descending);
    r.trail = start_trail("gra", p.alternatives);
    r.trail.params = {{"rho", fmt(params.rho)}};
    r.trail.entries = {{"pis_score_accuracy", tensor(r.pis)},   {"nis_score_accuracy", tensor(r.nis)},
                       {"coefficient_pos", tensor(r.coeff_pos)}, {"coefficient_neg", tensor(r.coeff_neg)},
                       {"degree_pos", tensor(r.degree_pos)},     {"degree_neg", tensor(r.degree_neg)},
                       {"closeness", tensor(r.closeness)}};
    r.trail.ranking = r.ranking;
    return r;
}

// ---------------------------------------------------------------------------
// Bipolar TOPSIS.

BipolarTopsisResult topsis_bipolar(const DecisionProblem<BNN>& p) {
    p.validate();
    BipolarTopsisResult r;
    if (p.weights) {
        r.weights = *p.weights;
    } else {
        std::function<double(const BNN&, const BNN&)> d = [](const BNN& a, const BNN& b) {
            return bnn_distance({a}, {b}, BnnDistanceForm::NormalizedHamming);
        };
        r.weights = maximizing_deviation_weights<BNN>(p.cells, d);
    }
    r.weighted.assign(p.n(), std::vector<BNN>(p.m()));
    for (std::size_t i = 0; i < p.n(); ++i)
        for (std::size_t j = 0; j < p.m(); ++j) r.weighted[i][j] = bnn_scale(r.weights[j], p.cells[i][j]);
    for (std::size_t j = 0; j < p.m(); ++j) {
        std::array<double, 6> hi, lo;
        hi.fill(-INFINITY);
        lo.fill(INFINITY);
        for (std::size_t i = 0; i < p.n(); ++i) {
            auto x = r.weighted[i][j].parts();
            for (int k = 0; k < 6; ++k) {
                hi[k] = std::max(hi[k], x[k]);
                lo[k] = std::min(lo[k], x[k]);
            }
        }
        // Positive ideal: large tp and in, fn; small ip, fp, tn. Cost criteria swap roles.
        std::array<bool, 6> take_max{true, false, false, false, true, true};
        std::array<double, 6> pos, neg;
        bool cost = p.criteria[j].kind == CriterionKind::Cost;
        for (int k = 0; k < 6; ++k) {
            bool mx = take_max[k] != cost;
            pos[k] = mx ? hi[k] : lo[k];
            neg[k] = mx ? lo[k] : hi[k];
        }
        r.pis.push_back(BNN::from_parts(pos));
        r.nis.push_back(BNN::from_parts(neg));
    }
    for (std::size_t i = 0; i < p.n(); ++i) {
        double dp = bnn_distance(r.weighted[i], r.pis, BnnDistanceForm::NormalizedEuclidean);
        double dn = bnn_distance(r.weighted[i], r.nis, BnnDistanceForm::NormalizedEuclidean);
        r.dist_pos.push_back(dp);
        r.dist_neg.push_back(dn);
        if (dp + dn == 0.0) throw Error(ErrorKind::Degenerate, "ideal solutions coincide");
        r.closeness.push_back(dn / (dp + dn));
    }
    r.ranking = make_ranking(r.closeness, Direction::Descending);
    r.trail = start_trail("topsis-bipolar", p.alternatives);
    r.trail.entries = {{"weights", tensor(r.weights)},   {"weighted", tensor(r.weighted)},
                       {"pis", tensor(r.pis)},           {"nis", tensor(r.nis)},
                       {"dist_pos", tensor(r.dist_pos)}, {"dist_neg", tensor(r.dist_neg)},
                       {"closeness", tensor(r.closeness)}};
    r.trail.ranking = r.ranking;
    return r;
}

// ---------------------------------------------------------------------------
// Refined group TOPSIS.

namespace {

void ideal_svnn(const Matrix<SVNN>& x, const std::vector<Criterion>& crit, std::vector<SVNN>& pis,
                std::vector<SVNN>& nis) {
    for (std::size_t j = 0; j < crit.size(); ++j) {
        SVNN hi{-INFINITY, -INFINITY, -INFINITY}, lo{INFINITY, INFINITY, INFINITY};
        for (const auto& row : x) {
            hi = {std::max(hi.t, row[j].t), std::max(hi.i, row[j].i), std::max(hi.f, row[j].f)};
            lo = {std::min(lo.t, row[j].t), std::min(lo.i, row[j].i), std::min(lo.f, row[j].f)};
        }
        SVNN best{hi.t, lo.i, lo.f}, worst{lo.t, hi.i, hi.f};
        if (crit[j].kind == CriterionKind::Cost) std::swap(best, worst);
        pis.push_back(best);
        nis.push_back(worst);
    }
}

double svnn_norm_euclid(const std::vector<SVNN>& a, const std::vector<SVNN>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double dt = a[j].t - b[j].t, di = a[j].i - b[j].i, df = a[j].f - b[j].f;
        s += dt * dt + di * di + df * df;
    }
    return std::sqrt(s / (3.0 * static_cast<double>(a.size())));
}

}  // namespace

RefinedTopsisResult topsis_refined_group(const DecisionProblem<SVNN>& p) {
    p.validate();
    if (p.dm_layers.empty()) throw Error(ErrorKind::Dimension, "refined TOPSIS needs decision-maker layers");
    if (p.dm_weights.size() != p.dm_layers.size())
        throw Error(ErrorKind::Dimension, "one SVNN weight per decision maker");
    if (p.criteria_weight_layers.size() != p.dm_layers.size())
        throw Error(ErrorKind::Dimension, "one criteria-weight layer per decision maker");
    const std::size_t dms = p.dm_layers.size();
    RefinedTopsisResult r;
    r.dm_weights = crispify_dm_weights(p.dm_weights);
    r.aggregated.assign(p.n(), std::vector<SVNN>(p.m()));
    for (std::size_t i = 0; i < p.n(); ++i)
        for (std::size_t j = 0; j < p.m(); ++j) {
            std::vector<SVNN> cells;
            for (std::size_t d = 0; d < dms; ++d) cells.push_back(p.dm_layers[d][i][j]);
            r.aggregated[i][j] = refined_group_aggregate(cells, r.dm_weights);
        }
    for (std::size_t j = 0; j < p.m(); ++j) {
        std::vector<SVNN> cells;
        for (std::size_t d = 0; d < dms; ++d) cells.push_back(p.criteria_weight_layers[d][j]);
        r.criteria_weights.push_back(refined_group_aggregate(cells, r.dm_weights));
    }
    r.weighted.assign(p.n(), std::vector<SVNN>(p.m()));
    for (std::size_t i = 0; i < p.n(); ++i)
        for (std::size_t j = 0; j < p.m(); ++j) {
            const SVNN& w = r.criteria_weights[j];
            const SVNN& x = r.aggregated[i][j];
            r.weighted[i][j] = {w.t * x.t, w.i + x.i - w.i * x.i, w.f + x.f - w.f * x.f};
        }
    ideal_svnn(r.weighted, p.criteria, r.pis, r.nis);
    for (std::size_t i = 0; i < p.n(); ++i) {
        double dp = svnn_norm_euclid(r.weighted[i], r.pis);
        double dn = svnn_norm_euclid(r.weighted[i], r.nis);
        if (dp + dn == 0.0) throw Error(ErrorKind::Degenerate, "ideal solutions coincide");
        r.dist_pos.push_back(dp);
        r.dist_neg.push_back(dn);
        r.closeness.push_back(dp / (dp + dn));
    }
    r.ranking = make_ranking(r.closeness, Direction::Ascending);
    r.trail = start_trail("topsis-refined", p.alternatives);
    r.trail.entries = {{"dm_weights", tensor(r.dm_weights)},
                       {"aggregated", tensor(r.aggregated)},
                       {"criteria_weights", tensor(r.criteria_weights)},
                       {"weighted", tensor(r.weighted)},
                       {"pis", tensor(r.pis)},
                       {"nis", tensor(r.nis)},
                       {"dist_pos", tensor(r.dist_pos)},
                       {"dist_neg", tensor(r.dist_neg)},
                       {"closeness", tensor(r.closeness)}};
    r.trail.ranking = r.ranking;
    return r;
}

// ---------------------------------------------------------------------------
// Projection models over interval values.

ProjectionResult projection_rank_ivns(const DecisionProblem<IVNN>& p, ProjParams params) {
    p.validate();
    if (!(params.xi >= 0.0 && params.xi <= 1.0)) throw Error(ErrorKind::Parameter, "xi must lie in [0,1]");
    ProjectionResult r;
    r.standardized = p.cells;
    for (auto& row : r.standardized)
        for (std::size_t j = 0; j < p.m(); ++j)
            if (p.criteria[j].kind == CriterionKind::Cost) row[j] = ivnn_complement(row[j]);
    if (p.weights) {
        r.weights = *p.weights;
    } else {
        std::function<double(const IVNN&, const IVNN&)> d = [](const IVNN& a, const IVNN& b) {
            return ivnn_distance({a}, {b}, IvnnDistanceForm::Euclidean);
        };
        r.weights = maximizing_deviation_weights<IVNN>(r.standardized, d);
    }
    for (std::size_t j = 0; j < p.m(); ++j) {
        std::array<double, 6> z{-INFINITY, -INFINITY, INFINITY, INFINITY, INFINITY, INFINITY};
        for (const auto& row : r.standardized) {
            auto b = row[j].bounds();
            for (int k = 0; k < 6; ++k) z[k] = k < 2 ? std::max(z[k], b[k]) : std::min(z[k], b[k]);
        }
        r.ideal.push_back(IVNN::from_bounds(z));
    }
    double zz = 0.0, zz_w = 0.0;
    for (std::size_t j = 0; j < p.m(); ++j) {
        double s = 0.0;
        for (double b : r.ideal[j].bounds()) s += b * b;
        zz += s;
        zz_w += r.weights[j] * r.weights[j] * s;
    }
    if (!(zz > 0.0) || !(zz_w > 0.0)) throw Error(ErrorKind::Degenerate, "ideal solution has zero modulus");
    for (std::size_t i = 0; i < p.n(); ++i) {
        double dot = 0.0, dot_w = 0.0, xx = 0.0;
        for (std::size_t j = 0; j < p.m(); ++j) {
            auto x = r.standardized[i][j].bounds();
            auto z = r.ideal[j].bounds();
            double d = 0.0;
            for (int k = 0; k < 6; ++k) {
                d += x[k] * z[k];
                xx += x[k] * x[k];
            }
            dot += d;
            dot_w += r.weights[j] * r.weights[j] * d;
        }
        r.proj_weighted.push_back(dot_w / std::sqrt(zz_w));
        r.proj.push_back(dot / std::sqrt(zz));
        r.cosine.push_back(xx > 0.0 ? dot / (std::sqrt(xx) * std::sqrt(zz)) : 0.0);
        r.rho.push_back(params.xi * r.cosine.back() + (1.0 - params.xi) * r.proj.back());
    }
    const auto& key = params.mode == ProjectionMode::WeightedProjection ? r.proj_weighted : r.rho;
    r.ranking = make_ranking(key, Direction::Descending);
    r.trail = start_trail("projection", p.alternatives);
    r.trail.params = {{"mode", params.mode == ProjectionMode::WeightedProjection ? "weighted_projection"
                                                                                 : "cosine_projection"},
                      {"xi", fmt(params.xi)}};
    r.trail.entries = {{"standardized", tensor(r.standardized)}, {"weights", tensor(r.weights)},
                       {"ideal", tensor(r.ideal)},               {"proj_weighted", tensor(r.proj_weighted)},
                       {"cosine", tensor(r.cosine)},             {"projection", tensor(r.proj)},
                       {"rho", tensor(r.rho)}};
    r.trail.ranking = r.ranking;
    return r;
}

// ---------------------------------------------------------------------------
// Hybrid score-accuracy group method.

HybridResult hybrid_group_rank(const DecisionProblem<SVNN>& p, double alpha) {
    p.validate();
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::Parameter, "alpha must lie in [0,1]");
    if (p.dm_layers.empty()) throw Error(ErrorKind::Dimension, "hybrid method needs decision-maker layers");
    if (!p.weight_bounds) throw Error(ErrorKind::Parameter, "hybrid method needs weight bounds");
    const std::size_t dms = p.dm_layers.size(), n = p.n(), m = p.m();
    HybridResult r;
    for (const auto& layer : p.dm_layers) {
        Matrix<double> h(n, std::vector<double>(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) h[i][j] = score(layer[i][j], ScoreVariant::YeHybrid, alpha);
        r.h_layers.push_back(std::move(h));
    }
    r.h_mean.assign(n, std::vector<double>(m, 0.0));
    for (const auto& h : r.h_layers)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) r.h_mean[i][j] += h[i][j] / static_cast<double>(dms);
    for (const auto& h : r.h_layers) {
        double omega = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double dot = 0.0, a = 0.0, b = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                dot += h[i][j] * r.h_mean[i][j];
                a += h[i][j] * h[i][j];
                b += r.h_mean[i][j] * r.h_mean[i][j];
            }
            if (a == 0.0 || b == 0.0) throw Error(ErrorKind::Degenerate, "zero score row in correlation");
            omega += dot / (std::sqrt(a) * std::sqrt(b));
        }
        r.omega_corr.push_back(omega);
    }
    double total = std::accumulate(r.omega_corr.begin(), r.omega_corr.end(), 0.0);
    for (double o : r.omega_corr) r.dm_weights.push_back(o / total);
    r.h_collective.assign(n, std::vector<double>(m, 0.0));
    for (std::size_t s = 0; s < dms; ++s)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) r.h_collective[i][j] += r.dm_weights[s] * r.h_layers[s][i][j];
    r.weights = lp_criteria_weights(r.h_collective, *p.weight_bounds);
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0.0;
        for (std::size_t j = 0; j < m; ++j) v += r.weights[j] * r.h_collective[i][j];
        r.overall.push_back(v);
    }
    r.ranking = make_ranking(r.overall, Direction::Descending);
    r.trail = start_trail("hybrid-group", p.alternatives);
    r.trail.params = {{"alpha", fmt(alpha)}};
    for (std::size_t s = 0; s < dms; ++s) r.trail.entries.emplace_back("h_" + std::to_string(s + 1), tensor(r.h_layers[s]));
    r.trail.entries.emplace_back("h_mean", tensor(r.h_mean));
    r.trail.entries.emplace_back("omega_correlation", tensor(r.omega_corr));
    r.trail.entries.emplace_back("dm_weights", tensor(r.dm_weights));
    r.trail.entries.emplace_back("h_collective", tensor(r.h_collective));
    r.trail.entries.emplace_back("weights", tensor(r.weights));
    r.trail.entries.emplace_back("overall", tensor(r.overall));
    r.trail.ranking = r.ranking;
    return r;
}

// ---------------------------------------------------------------------------
// Entropy-weight MADM over crisp data.

EntropyMadmResult entropy_madm(const DecisionProblem<double>& p, Normalization norm) {
    p.validate();
    const std::size_t n = p.n(), m = p.m();
    EntropyMadmResult r;
    r.normalized.assign(n, std::vector<double>(m));
    for (std::size_t j = 0; j < m; ++j) {
        double mx = -INFINITY, mn = INFINITY, sum = 0.0, sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double x = p.cells[i][j];
            if (x < 0.0) throw Error(ErrorKind::Parameter, "crisp values must be nonnegative");
            mx = std::max(mx, x);
            mn = std::min(mn, x);
            sum += x;
            sq += x * x;
        }
        bool cost = p.criteria[j].kind == CriterionKind::Cost;
        for (std::size_t i = 0; i < n; ++i) {
            double x = p.cells[i][j], v = 0.0;
            switch (norm) {
                case Normalization::Lstmm:
                    if (cost ? x == 0.0 : mx == 0.0)
                        throw Error(ErrorKind::Parameter, "zero value in max-method column " + p.criteria[j].name);
                    v = cost ? mn / x : x / mx;
                    break;
                case Normalization::Lstmmm:
                    if (mx == mn)
                        throw Error(ErrorKind::Degenerate, "constant column " + p.criteria[j].name +
                                                               " under max-min normalization");
                    v = cost ? (mx - x) / (mx - mn) : (x - mn) / (mx - mn);
                    break;
                case Normalization::Lstsm:
                    if (sum == 0.0) throw Error(ErrorKind::Parameter, "zero column " + p.criteria[j].name);
                    v = cost ? 1.0 - x / sum : x / sum;
                    break;
                case Normalization::Vnm:
                    if (sq == 0.0) throw Error(ErrorKind::Parameter, "zero column " + p.criteria[j].name);
                    v = cost ? 1.0 - x / std::sqrt(sq) : x / std::sqrt(sq);
                    break;
            }
            r.normalized[i][j] = v;
        }
    }
    r.svns.assign(n, std::vector<SVNN>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double v = r.normalized[i][j];
            r.svns[i][j] = p.criteria[j].kind == CriterionKind::Cost ? SVNN{1.0 - v, v, v} : SVNN{v, 1.0 - v, 1.0 - v};
        }
    auto ew = entropy_weights(r.svns);
    r.entropy = ew.entropy;
    r.weights = ew.weights;
    for (std::size_t i = 0; i < n; ++i) {
        double a = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const SVNN& s = r.svns[i][j];
            SVNN ideal = p.criteria[j].kind == CriterionKind::Cost ? SVNN{0.0, 1.0, 1.0} : SVNN{1.0, 0.0, 0.0};
            a += r.weights[j] * (s.t * ideal.t + s.i * ideal.i + s.f * ideal.f);
        }
        r.values.push_back(a);
    }
    r.ranking = make_ranking(r.values, Direction::Descending);
    static const char* names[] = {"lstmm", "lstmmm", "lstsm", "vnm"};
    r.trail = start_trail("entropy-madm", p.alternatives);
    r.trail.params = {{"normalization", names[static_cast<int>(norm)]}};
    r.trail.entries = {{"normalized", tensor(r.normalized)}, {"svns", tensor(r.svns)},
                       {"entropy", tensor(r.entropy)},       {"weights", tensor(r.weights)},
                       {"values", tensor(r.values)}};
    r.trail.ranking = r.ranking;
    return r;
}

// ---------------------------------------------------------------------------
// Attribute screening.

const char* zone_name(Zone z) noexcept {
    switch (z) {
        case Zone::High: return "high";
        case Zone::Tolerable: return "tolerable";
        case Zone::Unacceptable: return "unacceptable";
    }
    return "unknown";
}

ScreenResult svnsf_screen(const DecisionProblem<SVNN>& p) {
    p.validate();
    ScreenResult r;
    for (std::size_t j = 0; j < p.m(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.n(); ++i) {
            const SVNN& x = p.cells[i][j];
            s += (2.0 + x.t - x.i - x.f) / 3.0;
        }
        s /= static_cast<double>(p.n());
        r.scores.push_back(s);
        r.zones.push_back(s >= 0.5 ? Zone::High : (s >= 0.25 ? Zone::Tolerable : Zone::Unacceptable));
    }
    r.ranking = make_ranking(r.scores, Direction::Descending);
    std::vector<std::string> names;
    for (const auto& c : p.criteria) names.push_back(c.name);
    r.trail = start_trail("svnsf-screen", names);
    std::vector<double> zone_codes;
    for (Zone z : r.zones) zone_codes.push_back(static_cast<double>(z));
    r.trail.entries = {{"score", tensor(r.scores)}, {"zone", tensor(zone_codes)}};
    r.trail.ranking = r.ranking;
    return r;
}

// ---------------------------------------------------------------------------
// Row aggregation followed by a scalar score.

AggregateRankResult aggregate_rank(const DecisionProblem<SVNN>& p, AggregationOperator op, ScoreVariant score_variant,
                                   double k) {
    p.validate();
    if (!p.weights) throw Error(ErrorKind::MissingWeights, "aggregation needs weights");
    AggregateRankResult r;
    std::vector<double> s;
    for (const auto& row : p.cells) {
        SVNN a;
        switch (op) {
            case AggregationOperator::Svwa: a = svnn_weighted_average(row, *p.weights); break;
            case AggregationOperator::Svwg: a = svnn_weighted_geometric(row, *p.weights); break;
            case AggregationOperator::Isvwag: a = isvwag(row, *p.weights, k); break;
        }
        r.aggregated.push_back(a);
        s.push_back(score(a, score_variant));
    }
    r.ranking = make_ranking(s, Direction::Descending);
    return r;
}

// ---------------------------------------------------------------------------
// Rough trigonometric ranking.

std::vector<SVNN> rough_ideal(const DecisionProblem<RoughSVNN>& p) {
    p.validate();
    Matrix<SVNN> mids;
    for (const auto& row : p.cells) {
        std::vector<SVNN> r;
        for (const auto& c : row) r.push_back(c.mid());
        mids.push_back(std::move(r));
    }
    std::vector<SVNN> pis, nis;
    ideal_svnn(mids, p.criteria, pis, nis);
    return pis;
}

RoughRankResult rough_trig_rank(const DecisionProblem<RoughSVNN>& p, const std::vector<SVNN>& ideal, RoughForm form) {
    p.validate();
    if (ideal.size() != p.m()) throw Error(ErrorKind::LengthMismatch, "one ideal value per criterion");
    RoughRankResult r;
    std::optional<std::vector<double>> w;
    if (p.weights) w = *p.weights;
    for (const auto& row : p.cells) r.similarity.push_back(rough_trig_similarity(row, ideal, form, w));
    r.ranking = make_ranking(r.similarity, Direction::Descending);
    return r;
}

}  // namespace neutro
