#include "support.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace neutro::testing {

std::string Outcome::summary() const {
    std::ostringstream os;
    os << name << ": " << violations << "/" << cases << " violations";
    if (!first.empty()) os << " (first: " << first << ")";
    return os.str();
}

namespace {

std::string str(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

bool near(double a, double b, double tol = kTol) { return std::abs(a - b) <= tol; }

bool near(const SVNN& a, const SVNN& b, double tol = kTol) {
    return near(a.t, b.t, tol) && near(a.i, b.i, tol) && near(a.f, b.f, tol);
}

bool on_simplex(const std::vector<double>& w) {
    double s = 0.0;
    for (double x : w) {
        if (x < -kTol) return false;
        s += x;
    }
    return near(s, 1.0);
}

std::vector<std::size_t> order_of(const std::vector<double>& s, bool descending) {
    std::vector<std::size_t> idx(s.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return descending ? s[a] > s[b] : s[a] < s[b]; });
    return idx;
}

}  // namespace

IVNN Gen::ivnn() {
    auto pair = [&] {
        double a = unit(), b = unit();
        return std::pair{std::min(a, b), std::max(a, b)};
    };
    auto [tl, tu] = pair();
    auto [il, iu] = pair();
    auto [fl, fu] = pair();
    return {tl, tu, il, iu, fl, fu};
}

BNN Gen::bnn() { return {unit(), unit(), unit(), -unit(), -unit(), -unit()}; }

SVNHFE Gen::svnhfe(int max_len) {
    auto comp = [&] {
        std::vector<double> v(static_cast<std::size_t>(integer(1, max_len)));
        for (double& x : v) x = unit();
        return v;
    };
    auto t = comp(), i = comp(), f = comp();
    return SVNHFE(t, i, f);
}

RoughSVNN Gen::rough() {
    SVNN lo = svnn(), up = svnn();
    if (lo.t > up.t) std::swap(lo.t, up.t);
    return {lo, up};
}

std::vector<double> Gen::weights(std::size_t n) {
    std::vector<double> w(n);
    double s = 0.0;
    for (double& x : w) s += (x = 0.05 + unit());
    for (double& x : w) x /= s;
    return w;
}

WeightBounds Gen::bounds(std::size_t n) {
    for (;;) {
        WeightBounds b(n);
        double lo = 0.0, hi = 0.0;
        for (auto& x : b) {
            x.lo = unit() / static_cast<double>(n);
            x.hi = std::min(1.0, x.lo + unit());
            lo += x.lo;
            hi += x.hi;
        }
        if (lo <= 1.0 && hi >= 1.0) return b;
    }
}

SvnGraph Gen::svn_graph(int max_vertices, double edge_prob) {
    SvnGraph g;
    const int n = integer(1, max_vertices);
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), svnn());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (unit() >= edge_prob) continue;
            const SVNN& a = g.vertex("v" + std::to_string(u));
            const SVNN& b = g.vertex("v" + std::to_string(v));
            double hi_i = std::max(a.i, b.i), hi_f = std::max(a.f, b.f);
            SVNN e{unit() * std::min(a.t, b.t), hi_i + unit() * (1.0 - hi_i), hi_f + unit() * (1.0 - hi_f)};
            g.add_edge("v" + std::to_string(u), "v" + std::to_string(v), e);
        }
    return g;
}

IvnGraph Gen::ivn_graph(int max_vertices, const std::string& prefix) {
    IvnGraph g;
    const int n = integer(1, max_vertices);
    for (int v = 0; v < n; ++v) g.add_vertex(prefix + std::to_string(v), ivnn());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (unit() >= 0.6) continue;
            const IVNN& a = g.vertex(prefix + std::to_string(u));
            const IVNN& b = g.vertex(prefix + std::to_string(v));
            double tu = unit() * std::min(a.tU, b.tU);
            double tl = unit() * std::min(std::min(a.tL, b.tL), tu);
            auto up = [&](double lo_bound, double floor) {
                double base = std::max(lo_bound, floor);
                return base + unit() * (1.0 - base);
            };
            double il = up(std::max(a.iL, b.iL), 0.0);
            double iu = up(std::max(a.iU, b.iU), il);
            double fl = up(std::max(a.fL, b.fL), 0.0);
            double fu = up(std::max(a.fU, b.fU), fl);
            g.add_edge(prefix + std::to_string(u), prefix + std::to_string(v), {tl, tu, il, iu, fl, fu});
        }
    return g;
}

// ---------------------------------------------------------------------------

std::vector<Outcome> measure_axioms(std::uint64_t seed, std::size_t cases) {
    Gen g(seed);
    Outcome ident{"svnhf_identity"}, sym{"svnhf_symmetry"}, bounded{"svnhf_bounds"}, chain{"svnhf_containment"},
        gen_paths{"svnhf_generalized_paths"}, duality{"similarity_duality"}, sim{"similarity_bounds_identity"},
        haus{"hausdorff_zero_iff_equal"}, bnn{"bnn_distance_axioms"}, ivn{"ivnn_distance_axioms"},
        rough{"rough_similarity_axioms"};
    const std::array<SvnhfForm, 6> forms{SvnhfForm::Generalized,          SvnhfForm::Hamming,
                                         SvnhfForm::Euclidean,            SvnhfForm::HausdorffGeneralized,
                                         SvnhfForm::HausdorffHamming,     SvnhfForm::HausdorffEuclidean};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
        std::vector<SVNHFE> a(n), b(n);
        for (auto& x : a) x = g.svnhfe();
        for (auto& x : b) x = g.svnhfe();
        const auto w = g.weights(n);

        for (SvnhfForm form : forms) {
            DistanceSpec s;
            s.form = form;
            s.lambda = g.uniform(0.5, 4.0);
            s.weights = w;
            s.attitude = g.unit() < 0.5 ? Attitude::Pessimistic : Attitude::Optimistic;
            double dab = svnhf_distance(a, b, s), dba = svnhf_distance(b, a, s), daa = svnhf_distance(a, a, s);
            ident.check(near(daa, 0.0), "d(A,A)=" + str(daa));
            sym.check(near(dab, dba), "d(A,B)=" + str(dab) + " d(B,A)=" + str(dba));
            bounded.check(dab >= -kTol && dab <= 1.0 + kTol, "d=" + str(dab));
            double sm = svnhf_similarity(a, b, SimilarityForm::OneMinusDistance, s);
            duality.check(near(sm + dab, 1.0, 1e-12), "s+d=" + str(sm + dab));
            if (form == SvnhfForm::Generalized || form == SvnhfForm::Hamming || form == SvnhfForm::Euclidean) {
                s.normalization = SvnhfNormalization::BiswasL;
                double bl = svnhf_distance(a, b, s), bl0 = svnhf_distance(a, a, s);
                ident.check(near(bl0, 0.0), "biswas d(A,A)=" + str(bl0));
                bounded.check(bl >= -kTol && bl <= 1.0 + kTol, "biswas d=" + str(bl));
            }
            ident.cases += 1;
            sym.cases += 1;
            bounded.cases += 1;
            duality.cases += 1;
        }

        DistanceSpec gs{SvnhfForm::Generalized, 1.0, w};
        DistanceSpec hs{SvnhfForm::Hamming, 1.0, w};
        DistanceSpec es{SvnhfForm::Euclidean, 1.0, w};
        double g1 = svnhf_distance(a, b, gs);
        gs.lambda = 2.0;
        double g2 = svnhf_distance(a, b, gs);
        gen_paths.check(g1 == svnhf_distance(a, b, hs), "lambda=1 differs from Hamming");
        gen_paths.check(g2 == svnhf_distance(a, b, es), "lambda=2 differs from Euclidean");
        gen_paths.cases += 1;

        for (SimilarityForm f : {SimilarityForm::SetTheoretic, SimilarityForm::MatchingFunction}) {
            DistanceSpec s;
            s.weights = w;
            double v = svnhf_similarity(a, b, f, s), self = svnhf_similarity(a, a, f, s);
            sim.check(v >= -kTol && v <= 1.0 + kTol, "s=" + str(v));
            sim.check(near(self, 1.0), "s(A,A)=" + str(self));
            sim.cases += 1;
        }

        {
            DistanceSpec s{SvnhfForm::HausdorffHamming, 1.0, w};
            double self = svnhf_distance(a, a, s), other = svnhf_distance(a, b, s);
            bool same = true;
            for (std::size_t x = 0; x < n; ++x) {
                auto al = align(a[x], b[x]);
                for (const auto& [u, v] : al) same = same && u == v;
            }
            haus.check(near(self, 0.0), "H(A,A)=" + str(self));
            haus.check((other <= kTol) == same, "H(A,B)=" + str(other));
            haus.cases += 1;
        }

        // Containment chains A <= B <= C with equal component lengths.
        {
            const int len = g.integer(1, 3);
            std::vector<SVNHFE> A, B, C;
            bool usable = true;
            for (std::size_t x = 0; x < n; ++x) {
                std::array<std::vector<double>, 3> pa, pb, pc;
                for (int k = 0; k < 3; ++k) {
                    for (int j = 0; j < len; ++j) {
                        double v = g.unit();
                        double up = k == 0 ? v + g.unit() * (1.0 - v) : v * g.unit();
                        double up2 = k == 0 ? up + g.unit() * (1.0 - up) : up * g.unit();
                        pa[k].push_back(v);
                        pb[k].push_back(up);
                        pc[k].push_back(up2);
                    }
                    std::sort(pa[k].begin(), pa[k].end(), std::greater<>());
                    std::sort(pb[k].begin(), pb[k].end(), std::greater<>());
                    std::sort(pc[k].begin(), pc[k].end(), std::greater<>());
                }
                A.emplace_back(pa[0], pa[1], pa[2]);
                B.emplace_back(pb[0], pb[1], pb[2]);
                C.emplace_back(pc[0], pc[1], pc[2]);
                for (int k = 0; k < 3; ++k)
                    usable = usable && A.back().component(k).size() == static_cast<std::size_t>(len) &&
                             B.back().component(k).size() == static_cast<std::size_t>(len) &&
                             C.back().component(k).size() == static_cast<std::size_t>(len);
            }
            if (usable) {
                DistanceSpec s{SvnhfForm::Hamming, 1.0, w};
                double ab = svnhf_distance(A, B, s), ac = svnhf_distance(A, C, s), bc = svnhf_distance(B, C, s);
                chain.check(ab <= ac + kTol && bc <= ac + kTol,
                            "d(A,B)=" + str(ab) + " d(B,C)=" + str(bc) + " d(A,C)=" + str(ac));
                chain.cases += 1;
            }
        }

        {
            std::vector<BNN> x(n), y(n);
            for (auto& v : x) v = g.bnn();
            for (auto& v : y) v = g.bnn();
            const double m6 = 6.0 * static_cast<double>(n);
            for (auto f : {BnnDistanceForm::Hamming, BnnDistanceForm::NormalizedHamming, BnnDistanceForm::Euclidean,
                           BnnDistanceForm::NormalizedEuclidean}) {
                double d = bnn_distance(x, y, f);
                bnn.check(near(bnn_distance(x, x, f), 0.0), "d(A,A) != 0");
                bnn.check(near(d, bnn_distance(y, x, f)), "asymmetric");
                double cap = (f == BnnDistanceForm::Hamming) ? m6 : (f == BnnDistanceForm::Euclidean ? std::sqrt(m6) : 1.0);
                bnn.check(d >= -kTol && d <= cap + kTol, "out of range " + str(d));
                bnn.cases += 1;
            }
        }

        {
            std::vector<IVNN> x(n), y(n);
            for (auto& v : x) v = g.ivnn();
            for (auto& v : y) v = g.ivnn();
            for (auto f : {IvnnDistanceForm::Hamming, IvnnDistanceForm::Euclidean}) {
                for (const auto& wo : {std::optional<std::vector<double>>{}, std::optional<std::vector<double>>{w}}) {
                    double d = ivnn_distance(x, y, f, wo);
                    ivn.check(near(ivnn_distance(x, x, f, wo), 0.0), "d(A,A) != 0");
                    ivn.check(near(d, ivnn_distance(y, x, f, wo)), "asymmetric");
                    ivn.check(d >= -kTol && d <= 1.0 + kTol, "out of range " + str(d));
                    ivn.cases += 1;
                }
            }
        }

        {
            std::vector<RoughSVNN> x(n), y(n);
            for (auto& v : x) v = g.rough();
            for (auto& v : y) v = g.rough();
            for (auto f : {RoughForm::Cosine, RoughForm::Sine, RoughForm::Cotangent}) {
                for (const auto& wo : {std::optional<std::vector<double>>{}, std::optional<std::vector<double>>{w}}) {
                    double s = rough_trig_similarity(x, y, f, wo);
                    rough.check(near(s, rough_trig_similarity(y, x, f, wo)), "asymmetric");
                    rough.check(s >= -kTol && s <= 1.0 + kTol, "out of range " + str(s));
                    rough.check(near(rough_trig_similarity(x, x, f, wo), 1.0), "s(A,A) != 1");
                    rough.cases += 1;
                }
            }
        }
    }
    return {ident, sym, bounded, chain, gen_paths, duality, sim, haus, bnn, ivn, rough};
}

Outcome mean_sandwich(std::uint64_t seed, std::size_t cases) {
    Gen g(seed);
    Outcome o{"wgm_iwagm_wam_sandwich"};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
        std::vector<double> a(n);
        for (double& x : a) x = g.unit();
        auto w = g.weights(n);
        double lo = wgm(a, w), mid = iwagm(a, w), hi = wam(a, w);
        o.check(lo <= mid + 1e-12 && mid <= hi + 1e-12,
                "wgm=" + str(lo) + " iwagm=" + str(mid) + " wam=" + str(hi));
        o.cases += 1;
    }
    return o;
}

std::vector<Outcome> operator_laws(std::uint64_t seed, std::size_t cases) {
    Gen g(seed);
    Outcome svwa_id{"svwa_idempotent"}, svwg_id{"svwg_idempotent"}, isv_id{"isvwag_idempotent"},
        iw_id{"iwagm_idempotent"}, giw_id{"giwagm_idempotent"}, giw2{"giwagm_k2_equals_iwagm"},
        svwa_b{"svwa_bounded"}, svwg_b{"svwg_bounded"}, isv_b{"isvwag_bounded"}, svwa_m{"svwa_monotone"},
        svwg_m{"svwg_monotone"}, isv_m{"isvwag_monotone"}, perm{"svwa_svwg_permutation"},
        invol{"complement_involution"}, cert{"certainty_symmetry_minimum"}, bscale{"bnn_scale_laws"},
        alig{"align_lengths_membership"}, refined{"group_aggregate_idempotent_bounded"};

    using Op = std::function<SVNN(const std::vector<SVNN>&, const Weights&)>;
    const Op ops[3] = {svnn_weighted_average, svnn_weighted_geometric,
                       [](const std::vector<SVNN>& v, const Weights& w) { return isvwag(v, w); }};
    Outcome* idem[3] = {&svwa_id, &svwg_id, &isv_id};
    Outcome* bnd[3] = {&svwa_b, &svwg_b, &isv_b};
    Outcome* mono[3] = {&svwa_m, &svwg_m, &isv_m};

    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
        std::vector<SVNN> v(n);
        for (auto& x : v) x = g.svnn();
        auto w = g.weights(n);
        SVNN x = g.svnn();
        std::vector<SVNN> same(n, x);

        SVNN lo{1, 1, 1}, hi{0, 0, 0};
        for (const auto& y : v) {
            lo = {std::min(lo.t, y.t), std::min(lo.i, y.i), std::min(lo.f, y.f)};
            hi = {std::max(hi.t, y.t), std::max(hi.i, y.i), std::max(hi.f, y.f)};
        }
        const std::size_t k = static_cast<std::size_t>(g.integer(0, static_cast<int>(n) - 1));
        for (int o = 0; o < 3; ++o) {
            SVNN r = ops[o](same, w);
            idem[o]->check(near(r, x), "x=(" + str(x.t) + "," + str(x.i) + "," + str(x.f) + ") -> (" + str(r.t) +
                                           "," + str(r.i) + "," + str(r.f) + ")");
            idem[o]->cases += 1;

            SVNN a = ops[o](v, w);
            bnd[o]->check(a.t >= lo.t - kTol && a.t <= hi.t + kTol && a.i >= lo.i - kTol && a.i <= hi.i + kTol &&
                              a.f >= lo.f - kTol && a.f <= hi.f + kTol,
                          "(" + str(a.t) + "," + str(a.i) + "," + str(a.f) + ") outside envelope");
            bnd[o]->cases += 1;

            auto up = v;
            up[k].t = up[k].t + g.unit() * (1.0 - up[k].t);
            auto down_i = v;
            down_i[k].i *= g.unit();
            auto down_f = v;
            down_f[k].f *= g.unit();
            mono[o]->check(ops[o](up, w).t >= a.t - kTol, "raising t lowered the output t");
            mono[o]->check(ops[o](down_i, w).i <= a.i + kTol, "lowering i raised the output i");
            mono[o]->check(ops[o](down_f, w).f <= a.f + kTol, "lowering f raised the output f");
            mono[o]->cases += 1;
        }

        {
            std::vector<std::size_t> p(n);
            for (std::size_t j = 0; j < n; ++j) p[j] = j;
            std::shuffle(p.begin(), p.end(), std::mt19937(static_cast<unsigned>(c)));
            std::vector<SVNN> pv;
            Weights pw;
            for (std::size_t j : p) {
                pv.push_back(v[j]);
                pw.push_back(w[j]);
            }
            perm.check(near(svnn_weighted_average(v, w), svnn_weighted_average(pv, pw)), "SVWA permutation");
            perm.check(near(svnn_weighted_geometric(v, w), svnn_weighted_geometric(pv, pw)), "SVWG permutation");
            perm.cases += 1;
        }

        {
            std::vector<double> a(n);
            for (double& y : a) y = g.unit();
            double s = g.unit();
            std::vector<double> flat(n, s);
            double kk = g.uniform(0.2, 5.0);
            iw_id.check(near(iwagm(flat, w), s), "iwagm(a..a) != a");
            giw_id.check(near(giwagm(flat, w, kk), s), "giwagm(a..a) != a at k=" + str(kk));
            giw2.check(near(giwagm(a, w, 2.0), iwagm(a, w), 1e-12), "k=2 differs");
            iw_id.cases += 1;
            giw_id.cases += 1;
            giw2.cases += 1;
        }

        {
            SVNN cc = complement(complement(x));
            invol.check(near(cc, x), "complement twice differs");
            invol.cases += 1;
            SVNN swapped{x.f, x.i, x.t};
            cert.check(near(certainty(x), certainty(swapped)), "t/f swap changes certainty");
            cert.check(certainty(x) >= certainty({0.5, 0.5, 0.5}) - kTol, "below the (0.5,0.5,0.5) minimum");
            cert.cases += 1;
        }

        {
            BNN b = g.bnn();
            auto p = bnn_scale(1.0, b).parts(), q = b.parts();
            bool same = true;
            for (int j = 0; j < 6; ++j) same = same && near(p[j], q[j]);
            bscale.check(same, "w=1 is not the identity");
            double ww = 0.01 + 0.99 * g.unit();
            bscale.check(bnn_scale(ww, b).valid(), "scaled value invalid");
            bscale.cases += 1;
        }

        {
            SVNHFE a = g.svnhfe(4), b = g.svnhfe(4);
            for (auto att : {Attitude::Pessimistic, Attitude::Optimistic}) {
                auto al = align(a, b, att);
                for (int comp = 0; comp < 3; ++comp) {
                    const auto& [u, vv] = al[comp];
                    alig.check(u.size() == vv.size(), "unequal aligned lengths");
                    for (double y : u)
                        alig.check(std::find(a.component(comp).begin(), a.component(comp).end(), y) !=
                                       a.component(comp).end(),
                                   "aligned value not a member");
                    for (double y : vv)
                        alig.check(std::find(b.component(comp).begin(), b.component(comp).end(), y) !=
                                       b.component(comp).end(),
                                   "aligned value not a member");
                }
                alig.cases += 1;
            }
        }

        {
            SVNN r = refined_group_aggregate(same, w);
            refined.check(near(r, x), "identical decision makers changed the value");
            SVNN a = refined_group_aggregate(v, w);
            refined.check(a.t >= lo.t - kTol && a.t <= hi.t + kTol && a.i >= lo.i - kTol && a.i <= hi.i + kTol &&
                              a.f >= lo.f - kTol && a.f <= hi.f + kTol,
                          "outside envelope");
            refined.cases += 1;
        }
    }
    return {svwa_id, svwg_id, isv_id, iw_id,  giw_id, giw2,  svwa_b, svwg_b, isv_b,
            svwa_m,  svwg_m,  isv_m,  perm,   invol,  cert,  bscale, alig,   refined};
}

std::vector<Outcome> weight_simplex(std::uint64_t seed, std::size_t cases) {
    Gen g(seed);
    Outcome ent{"entropy_weights_simplex"}, dev{"deviation_weights_simplex"}, lp{"lp_weights_simplex_bounds"},
        crisp{"crispify_simplex_permutation"};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t n = static_cast<std::size_t>(g.integer(2, 5)), m = static_cast<std::size_t>(g.integer(1, 5));
        Matrix<SVNN> x(n, std::vector<SVNN>(m));
        for (auto& row : x)
            for (auto& v : row) v = g.svnn();
        auto e = entropy_weights(x);
        ent.check(on_simplex(e.weights), "entropy weights off the simplex");
        ent.cases += 1;

        Matrix<BNN> b(n, std::vector<BNN>(m));
        for (auto& row : b)
            for (auto& v : row) v = g.bnn();
        std::function<double(const BNN&, const BNN&)> d = [](const BNN& p, const BNN& q) {
            return bnn_distance({p}, {q}, BnnDistanceForm::NormalizedHamming);
        };
        dev.check(on_simplex(maximizing_deviation_weights<BNN>(b, d)), "deviation weights off the simplex");
        dev.cases += 1;

        auto bounds = g.bounds(m);
        std::vector<double> cs(m);
        for (double& v : cs) v = g.uniform(0.0, 5.0);
        auto w = lp_criteria_weights(cs, bounds);
        bool inside = on_simplex(w);
        for (std::size_t j = 0; j < m; ++j) inside = inside && w[j] >= bounds[j].lo - kTol && w[j] <= bounds[j].hi + kTol;
        lp.check(inside, "LP weights violate the simplex or a bound");
        lp.cases += 1;

        std::vector<SVNN> dm(n);
        for (auto& v : dm) v = g.svnn();
        auto cw = crispify_dm_weights(dm);
        std::vector<SVNN> rev(dm.rbegin(), dm.rend());
        auto cr = crispify_dm_weights(rev);
        bool coherent = on_simplex(cw);
        for (std::size_t k = 0; k < n; ++k) coherent = coherent && near(cw[k], cr[n - 1 - k]);
        crisp.check(coherent, "crisp weights off the simplex or not permutation coherent");
        crisp.cases += 1;
    }
    return {ent, dev, lp, crisp};
}

Outcome lp_oracle(std::uint64_t seed, std::size_t cases) {
    Gen g(seed);
    Outcome o{"lp_greedy_vs_vertex_enumeration"};
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t m = static_cast<std::size_t>(g.integer(1, 4));
        auto bounds = g.bounds(m);
        std::vector<double> cs(m);
        // Rounded coefficients make ties common.
        for (double& v : cs) v = g.unit() < 0.3 ? std::round(g.uniform(0.0, 3.0)) : g.uniform(0.0, 3.0);
        auto a = lp_criteria_weights(cs, bounds), b = lp_vertex_enumeration(cs, bounds);
        double va = 0.0, vb = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            va += cs[j] * a[j];
            vb += cs[j] * b[j];
        }
        o.check(near(va, vb), "greedy objective " + str(va) + " vs enumeration " + str(vb));
        o.cases += 1;
    }
    return o;
}

// ---------------------------------------------------------------------------
// Straight-line transcriptions of each pipeline on 2 alternatives x 2 criteria.

namespace {

double avg(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

std::vector<double> hand_ideal_distance(const Matrix<SVNHFE>& x, const std::vector<double>& w) {
    std::vector<double> out;
    for (const auto& row : x) {
        double d = 0.0;
        for (std::size_t j = 0; j < 2; ++j) {
            double dt = 0.0, di = 0.0, df = 0.0;
            for (double t : row[j].t()) dt += std::abs(t - 1.0);
            for (double i : row[j].i()) di += std::abs(i);
            for (double f : row[j].f()) df += std::abs(f);
            d += w[j] * (dt / row[j].t().size() + di / row[j].i().size() + df / row[j].f().size());
        }
        out.push_back(d / 3.0);
    }
    return out;
}

std::vector<double> hand_gra(const Matrix<SVNHFE>& x, const std::vector<double>& w, double rho) {
    auto sc = [](const SVNHFE& e) { return (2.0 + avg(e.t()) - avg(e.i()) - avg(e.f())) / 3.0; };
    auto ac = [](const SVNHFE& e) { return avg(e.t()) - avg(e.f()); };
    auto better = [&](const SVNHFE& a, const SVNHFE& b) {
        return sc(a) > sc(b) || (sc(a) == sc(b) && ac(a) > ac(b));
    };
    SVNHFE pis[2], nis[2];
    for (std::size_t j = 0; j < 2; ++j) {
        pis[j] = better(x[1][j], x[0][j]) ? x[1][j] : x[0][j];
        nis[j] = better(x[0][j], x[1][j]) ? x[1][j] : x[0][j];
    }
    auto dist = [](const SVNHFE& a, const SVNHFE& b) {
        return (std::abs(avg(a.t()) - avg(b.t())) + std::abs(avg(a.i()) - avg(b.i())) +
                std::abs(avg(a.f()) - avg(b.f()))) /
               3.0;
    };
    auto degrees = [&](const SVNHFE* ref) {
        double d[2][2], lo = 1e9, hi = -1e9;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                d[i][j] = dist(x[i][j], ref[j]);
                lo = std::min(lo, d[i][j]);
                hi = std::max(hi, d[i][j]);
            }
        std::vector<double> out;
        for (int i = 0; i < 2; ++i) {
            double s = 0.0;
            for (int j = 0; j < 2; ++j) s += w[j] * (hi == 0.0 ? 1.0 : (lo + rho * hi) / (d[i][j] + rho * hi));
            out.push_back(s);
        }
        return out;
    };
    auto p = degrees(pis), q = degrees(nis);
    return {p[0] / (p[0] + q[0]), p[1] / (p[1] + q[1])};
}

std::vector<double> hand_bipolar(const Matrix<BNN>& x) {
    auto nh = [](const BNN& a, const BNN& b) {
        return (std::abs(a.tp - b.tp) + std::abs(a.ip - b.ip) + std::abs(a.fp - b.fp) + std::abs(a.tn - b.tn) +
                std::abs(a.in - b.in) + std::abs(a.fn - b.fn)) /
               6.0;
    };
    double d0 = 2.0 * nh(x[0][0], x[1][0]), d1 = 2.0 * nh(x[0][1], x[1][1]);
    double w[2] = {d0 / (d0 + d1), d1 / (d0 + d1)};
    BNN y[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const BNN& b = x[i][j];
            y[i][j] = {1.0 - std::pow(1.0 - b.tp, w[j]), std::pow(b.ip, w[j]),         std::pow(b.fp, w[j]),
                       -std::pow(-b.tn, w[j]),            -std::pow(-b.in, w[j]), -(1.0 - std::pow(1.0 + b.fn, w[j]))};
        }
    BNN pis[2], nis[2];
    for (int j = 0; j < 2; ++j) {
        const BNN &a = y[0][j], &b = y[1][j];
        pis[j] = {std::max(a.tp, b.tp), std::min(a.ip, b.ip), std::min(a.fp, b.fp),
                  std::min(a.tn, b.tn), std::max(a.in, b.in), std::max(a.fn, b.fn)};
        nis[j] = {std::min(a.tp, b.tp), std::max(a.ip, b.ip), std::max(a.fp, b.fp),
                  std::max(a.tn, b.tn), std::min(a.in, b.in), std::min(a.fn, b.fn)};
    }
    auto sq = [](const BNN& a, const BNN& b) {
        return (a.tp - b.tp) * (a.tp - b.tp) + (a.ip - b.ip) * (a.ip - b.ip) + (a.fp - b.fp) * (a.fp - b.fp) +
               (a.tn - b.tn) * (a.tn - b.tn) + (a.in - b.in) * (a.in - b.in) + (a.fn - b.fn) * (a.fn - b.fn);
    };
    std::vector<double> cc;
    for (int i = 0; i < 2; ++i) {
        double dp = std::sqrt((sq(y[i][0], pis[0]) + sq(y[i][1], pis[1])) / 12.0);
        double dn = std::sqrt((sq(y[i][0], nis[0]) + sq(y[i][1], nis[1])) / 12.0);
        cc.push_back(dn / (dp + dn));
    }
    return cc;
}

std::vector<double> hand_refined(const std::vector<Matrix<SVNN>>& layers, const std::vector<SVNN>& dmw,
                                 const std::vector<std::vector<SVNN>>& cw) {
    double c0 = 1.0 - std::sqrt(((1 - dmw[0].t) * (1 - dmw[0].t) + dmw[0].i * dmw[0].i + dmw[0].f * dmw[0].f) / 3.0);
    double c1 = 1.0 - std::sqrt(((1 - dmw[1].t) * (1 - dmw[1].t) + dmw[1].i * dmw[1].i + dmw[1].f * dmw[1].f) / 3.0);
    double g0 = c0 / (c0 + c1), g1 = c1 / (c0 + c1);
    auto geo = [&](const SVNN& a, const SVNN& b) {
        return SVNN{std::pow(a.t, g0) * std::pow(b.t, g1), std::pow(a.i, g0) * std::pow(b.i, g1),
                    std::pow(a.f, g0) * std::pow(b.f, g1)};
    };
    SVNN y[2][2];
    for (int j = 0; j < 2; ++j) {
        SVNN wj = geo(cw[0][j], cw[1][j]);
        for (int i = 0; i < 2; ++i) {
            SVNN a = geo(layers[0][i][j], layers[1][i][j]);
            y[i][j] = {wj.t * a.t, wj.i + a.i - wj.i * a.i, wj.f + a.f - wj.f * a.f};
        }
    }
    SVNN pis[2], nis[2];
    for (int j = 0; j < 2; ++j) {
        pis[j] = {std::max(y[0][j].t, y[1][j].t), std::min(y[0][j].i, y[1][j].i), std::min(y[0][j].f, y[1][j].f)};
        nis[j] = {std::min(y[0][j].t, y[1][j].t), std::max(y[0][j].i, y[1][j].i), std::max(y[0][j].f, y[1][j].f)};
    }
    auto sq = [](const SVNN& a, const SVNN& b) {
        return (a.t - b.t) * (a.t - b.t) + (a.i - b.i) * (a.i - b.i) + (a.f - b.f) * (a.f - b.f);
    };
    std::vector<double> r;
    for (int i = 0; i < 2; ++i) {
        double dp = std::sqrt((sq(y[i][0], pis[0]) + sq(y[i][1], pis[1])) / 6.0);
        double dn = std::sqrt((sq(y[i][0], nis[0]) + sq(y[i][1], nis[1])) / 6.0);
        r.push_back(dp / (dp + dn));
    }
    return r;
}

std::vector<double> hand_projection(const Matrix<IVNN>& x, double xi, std::vector<double>& projw) {
    auto b = [](const IVNN& a) { return std::array<double, 6>{a.tL, a.tU, a.iL, a.iU, a.fL, a.fU}; };
    auto eu = [&](const IVNN& p, const IVNN& q) {
        auto u = b(p), v = b(q);
        double s = 0.0;
        for (int k = 0; k < 6; ++k) s += (u[k] - v[k]) * (u[k] - v[k]);
        return std::sqrt(s / 6.0);
    };
    double d0 = 2.0 * eu(x[0][0], x[1][0]), d1 = 2.0 * eu(x[0][1], x[1][1]);
    double w[2] = {d0 / (d0 + d1), d1 / (d0 + d1)};
    std::array<double, 6> z[2];
    for (int j = 0; j < 2; ++j) {
        auto p = b(x[0][j]), q = b(x[1][j]);
        for (int k = 0; k < 6; ++k) z[j][k] = k < 2 ? std::max(p[k], q[k]) : std::min(p[k], q[k]);
    }
    double zz = 0.0, zzw = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 6; ++k) {
            zz += z[j][k] * z[j][k];
            zzw += w[j] * w[j] * z[j][k] * z[j][k];
        }
    std::vector<double> rho;
    projw.clear();
    for (int i = 0; i < 2; ++i) {
        double dot = 0.0, dotw = 0.0, xx = 0.0;
        for (int j = 0; j < 2; ++j) {
            auto p = b(x[i][j]);
            for (int k = 0; k < 6; ++k) {
                dot += p[k] * z[j][k];
                dotw += w[j] * w[j] * p[k] * z[j][k];
                xx += p[k] * p[k];
            }
        }
        projw.push_back(dotw / std::sqrt(zzw));
        double proj = dot / std::sqrt(zz), cosv = dot / (std::sqrt(xx) * std::sqrt(zz));
        rho.push_back(xi * cosv + (1.0 - xi) * proj);
    }
    return rho;
}

std::vector<double> hand_hybrid(const std::vector<Matrix<SVNN>>& layers, double alpha, const WeightBounds& bd) {
    double h[2][2][2];
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const SVNN& a = layers[s][i][j];
                h[s][i][j] = alpha / 2.0 * (1.0 + a.t - a.f) + (1.0 - alpha) / 3.0 * (2.0 + a.t - a.i - a.f);
            }
    double om[2] = {0.0, 0.0};
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 2; ++i) {
            double m0 = (h[0][i][0] + h[1][i][0]) / 2.0, m1 = (h[0][i][1] + h[1][i][1]) / 2.0;
            double dot = h[s][i][0] * m0 + h[s][i][1] * m1;
            om[s] += dot / (std::sqrt(h[s][i][0] * h[s][i][0] + h[s][i][1] * h[s][i][1]) * std::sqrt(m0 * m0 + m1 * m1));
        }
    double g0 = om[0] / (om[0] + om[1]), g1 = om[1] / (om[0] + om[1]);
    double hc[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) hc[i][j] = g0 * h[0][i][j] + g1 * h[1][i][j];
    double cs0 = hc[0][0] + hc[1][0], cs1 = hc[0][1] + hc[1][1];
    double w[2] = {bd[0].lo, bd[1].lo};
    double rem = 1.0 - w[0] - w[1];
    int first = cs1 > cs0 ? 1 : 0, second = 1 - first;
    double add = std::min(bd[first].hi - bd[first].lo, rem);
    w[first] += add;
    rem -= add;
    w[second] += std::min(bd[second].hi - bd[second].lo, rem);
    return {w[0] * hc[0][0] + w[1] * hc[0][1], w[0] * hc[1][0] + w[1] * hc[1][1]};
}

// Column 0 is a benefit criterion, column 1 a cost criterion; lstmm normalization.
std::vector<double> hand_entropy(const Matrix<double>& x) {
    double r[2][2];
    double mx0 = std::max(x[0][0], x[1][0]), mn1 = std::min(x[0][1], x[1][1]);
    for (int i = 0; i < 2; ++i) {
        r[i][0] = x[i][0] / mx0;
        r[i][1] = mn1 / x[i][1];
    }
    SVNN s[2][2];
    for (int i = 0; i < 2; ++i) {
        s[i][0] = {r[i][0], 1.0 - r[i][0], 1.0 - r[i][0]};
        s[i][1] = {1.0 - r[i][1], r[i][1], r[i][1]};
    }
    double e[2];
    for (int j = 0; j < 2; ++j)
        e[j] = 1.0 - ((s[0][j].t + s[0][j].f) * std::abs(2.0 * s[0][j].i - 1.0) +
                      (s[1][j].t + s[1][j].f) * std::abs(2.0 * s[1][j].i - 1.0)) /
                         2.0;
    double w0 = (1.0 - e[0]) / (2.0 - e[0] - e[1]), w1 = (1.0 - e[1]) / (2.0 - e[0] - e[1]);
    return {w0 * s[0][0].t + w1 * (s[0][1].i + s[0][1].f), w0 * s[1][0].t + w1 * (s[1][1].i + s[1][1].f)};
}

std::vector<double> hand_screen(const Matrix<SVNN>& x) {
    std::vector<double> out;
    for (int j = 0; j < 2; ++j) {
        double a = (2.0 + x[0][j].t - x[0][j].i - x[0][j].f) / 3.0;
        double b = (2.0 + x[1][j].t - x[1][j].i - x[1][j].f) / 3.0;
        out.push_back((a + b) / 2.0);
    }
    return out;
}

std::vector<double> hand_svwa_liu(const Matrix<SVNN>& x, const std::vector<double>& w) {
    std::vector<double> out;
    for (int i = 0; i < 2; ++i) {
        double t = 1.0 - std::pow(1.0 - x[i][0].t, w[0]) * std::pow(1.0 - x[i][1].t, w[1]);
        double ii = std::pow(x[i][0].i, w[0]) * std::pow(x[i][1].i, w[1]);
        double f = std::pow(x[i][0].f, w[0]) * std::pow(x[i][1].f, w[1]);
        out.push_back(2.0 + t - ii - f);
    }
    return out;
}

std::vector<double> hand_rough_cos(const Matrix<RoughSVNN>& x, const std::vector<double>& w) {
    double mt[2][2], mi[2][2], mf[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mt[i][j] = (x[i][j].lower.t + x[i][j].upper.t) / 2.0;
            mi[i][j] = (x[i][j].lower.i + x[i][j].upper.i) / 2.0;
            mf[i][j] = (x[i][j].lower.f + x[i][j].upper.f) / 2.0;
        }
    std::vector<double> out(2, 0.0);
    for (int j = 0; j < 2; ++j) {
        double it = std::max(mt[0][j], mt[1][j]), ii = std::min(mi[0][j], mi[1][j]), iff = std::min(mf[0][j], mf[1][j]);
        for (int i = 0; i < 2; ++i) {
            double d = std::abs(mt[i][j] - it) + std::abs(mi[i][j] - ii) + std::abs(mf[i][j] - iff);
            out[i] += w[j] * std::cos(std::numbers::pi / 6.0 * d);
        }
    }
    return out;
}

template <class T>
DecisionProblem<T> two_by_two(const Matrix<T>& cells) {
    DecisionProblem<T> p;
    p.alternatives = {"A1", "A2"};
    p.criteria = {{"C1", CriterionKind::Benefit}, {"C2", CriterionKind::Benefit}};
    p.cells = cells;
    return p;
}

void cross_check(Outcome& o, const std::vector<double>& lib, const std::vector<double>& hand, const Ranking& r,
             bool descending) {
    bool same = lib.size() == hand.size();
    for (std::size_t i = 0; same && i < lib.size(); ++i) same = near(lib[i], hand[i]);
    std::string why = "library (";
    for (double v : lib) why += str(v) + " ";
    why += ") hand (";
    for (double v : hand) why += str(v) + " ";
    o.check(same, why + ")");
    if (same && std::abs(hand[0] - hand[1]) > 1e-6) o.check(r.order == order_of(hand, descending), "ranking differs");
    o.cases += 1;
}

}  // namespace

std::vector<Outcome> pipeline_oracles(std::uint64_t seed, std::size_t cases) {
    Gen g(seed);
    Outcome ideal{"oracle_ideal_distance"}, gra{"oracle_gra"}, bip{"oracle_topsis_bipolar"},
        ref{"oracle_topsis_refined"}, proj{"oracle_projection"}, hyb{"oracle_hybrid_group"},
        ent{"oracle_entropy_madm"}, scr{"oracle_svnsf_screen"}, agg{"oracle_aggregate_rank"},
        rough{"oracle_rough_trig"};
    auto svnn_pos = [&] { return SVNN{0.05 + 0.95 * g.unit(), 0.05 + 0.95 * g.unit(), 0.05 + 0.95 * g.unit()}; };
    for (std::size_t c = 0; c < cases; ++c) {
        {
            Matrix<SVNHFE> x{{g.svnhfe(), g.svnhfe()}, {g.svnhfe(), g.svnhfe()}};
            auto p = two_by_two(x);
            p.weights = g.weights(2);
            DistanceSpec s;
            s.form = SvnhfForm::Hamming;
            auto r = svnhf_ideal_rank(p, s);
            cross_check(ideal, r.distances, hand_ideal_distance(x, *p.weights), r.ranking, false);

            double rho = g.unit();
            auto gr = gra_svnhf(p, {rho});
            cross_check(gra, gr.closeness, hand_gra(x, *p.weights, rho), gr.ranking, true);
        }
        {
            Matrix<BNN> x{{g.bnn(), g.bnn()}, {g.bnn(), g.bnn()}};
            auto r = topsis_bipolar(two_by_two(x));
            cross_check(bip, r.closeness, hand_bipolar(x), r.ranking, true);
        }
        {
            DecisionProblem<SVNN> p = two_by_two<SVNN>({});
            p.cells.clear();
            for (int d = 0; d < 2; ++d) p.dm_layers.push_back({{svnn_pos(), svnn_pos()}, {svnn_pos(), svnn_pos()}});
            p.dm_weights = {g.svnn(), g.svnn()};
            p.criteria_weight_layers = {{svnn_pos(), svnn_pos()}, {svnn_pos(), svnn_pos()}};
            auto r = topsis_refined_group(p);
            cross_check(ref, r.closeness, hand_refined(p.dm_layers, p.dm_weights, p.criteria_weight_layers), r.ranking,
                    false);

            p.weight_bounds = g.bounds(2);
            double alpha = g.unit();
            auto h = hybrid_group_rank(p, alpha);
            cross_check(hyb, h.overall, hand_hybrid(p.dm_layers, alpha, *p.weight_bounds), h.ranking, true);
        }
        {
            Matrix<IVNN> x{{g.ivnn(), g.ivnn()}, {g.ivnn(), g.ivnn()}};
            double xi = g.unit();
            std::vector<double> projw;
            auto rho = hand_projection(x, xi, projw);
            auto r = projection_rank_ivns(two_by_two(x), {ProjectionMode::CosineProjection, xi});
            cross_check(proj, r.rho, rho, r.ranking, true);
            auto rw = projection_rank_ivns(two_by_two(x), {ProjectionMode::WeightedProjection, xi});
            cross_check(proj, rw.proj_weighted, projw, rw.ranking, true);
        }
        {
            Matrix<double> x{{g.uniform(0.1, 1.0), g.uniform(0.1, 1.0)}, {g.uniform(0.1, 1.0), g.uniform(0.1, 1.0)}};
            auto p = two_by_two(x);
            p.criteria[1].kind = CriterionKind::Cost;
            auto r = entropy_madm(p, Normalization::Lstmm);
            cross_check(ent, r.values, hand_entropy(x), r.ranking, true);
        }
        {
            Matrix<SVNN> x{{g.svnn(), g.svnn()}, {g.svnn(), g.svnn()}};
            auto p = two_by_two(x);
            auto s = svnsf_screen(p);
            cross_check(scr, s.scores, hand_screen(x), s.ranking, true);

            p.weights = g.weights(2);
            auto a = aggregate_rank(p, AggregationOperator::Svwa, ScoreVariant::Liu);
            std::vector<double> lib;
            for (const auto& v : a.aggregated) lib.push_back(score(v, ScoreVariant::Liu));
            cross_check(agg, lib, hand_svwa_liu(x, *p.weights), a.ranking, true);
        }
        {
            Matrix<RoughSVNN> x{{g.rough(), g.rough()}, {g.rough(), g.rough()}};
            auto p = two_by_two(x);
            p.weights = g.weights(2);
            auto r = rough_trig_rank(p, rough_ideal(p), RoughForm::Cosine);
            cross_check(rough, r.similarity, hand_rough_cos(x, *p.weights), r.ranking, true);
        }
    }
    return {ideal, gra, bip, ref, proj, hyb, ent, scr, agg, rough};
}

// ---------------------------------------------------------------------------

std::vector<Outcome> graph_axioms(HausdorffForm form, std::uint64_t seed, std::size_t triples) {
    Gen g(seed);
    const char* tag = form == HausdorffForm::Ngd ? "ngd_" : "mngd_";
    const char* comp[3] = {"T", "I", "F"};
    std::vector<Outcome> out;
    for (const char* ax : {"nonnegative_bounded", "symmetry", "coincidence", "triangle"})
        for (const char* c : comp) out.push_back({std::string(tag) + ax + "_" + c});
    auto at = [&](int axiom, int c) -> Outcome& { return out[static_cast<std::size_t>(axiom * 3 + c)]; };
    for (std::size_t k = 0; k < triples; ++k) {
        SvnGraph a = g.svn_graph(4), b = g.svn_graph(4), c = g.svn_graph(4);
        auto ab = graph_hausdorff(a, b, form), ba = graph_hausdorff(b, a, form);
        auto bc = graph_hausdorff(b, c, form), ac = graph_hausdorff(a, c, form);
        bool zero = ab[0] <= kTol && ab[1] <= kTol && ab[2] <= kTol;
        for (int x = 0; x < 3; ++x) {
            at(0, x).check(ab[x] >= -kTol && ab[x] <= 1.0 + kTol, "d=" + str(ab[x]));
            at(1, x).check(near(ab[x], ba[x]), "d(a,b)=" + str(ab[x]) + " d(b,a)=" + str(ba[x]));
            at(2, x).check(!zero || a == b, "zero distance between distinct graphs");
            at(3, x).check(ac[x] <= ab[x] + bc[x] + kTol,
                           "d(a,c)=" + str(ac[x]) + " > d(a,b)+d(b,c)=" + str(ab[x] + bc[x]));
            for (int axiom = 0; axiom < 4; ++axiom) at(axiom, x).cases += 1;
        }
    }
    return out;
}

Outcome product_closure(std::uint64_t seed, std::size_t cases) {
    Gen g(seed);
    Outcome o{"ivn_product_closure"};
    const std::pair<ProductKind, const char*> kinds[] = {{ProductKind::Cartesian, "cartesian"},
                                                         {ProductKind::Composition, "composition"},
                                                         {ProductKind::Union, "union"},
                                                         {ProductKind::Join, "join"}};
    for (std::size_t c = 0; c < cases; ++c) {
        IvnGraph a = g.ivn_graph(6, "a");
        IvnGraph b = g.ivn_graph(6, "b");
        IvnGraph shared = g.ivn_graph(6, "a");
        for (const auto& [kind, name] : kinds) {
            auto v = validate(ivn_product(a, b, kind));
            o.check(v.empty(), std::string(name) + ": " + (v.empty() ? "" : v.front()));
            o.cases += 1;
        }
        auto v = validate(ivn_product(a, shared, ProductKind::Union));
        o.check(v.empty(), "overlapping union: " + (v.empty() ? std::string() : v.front()));
        o.cases += 1;
    }
    return o;
}

Outcome complete_complement(std::uint64_t seed, std::size_t cases) {
    Gen g(seed);
    Outcome o{"complete_complement_edgeless"};
    for (std::size_t c = 0; c < cases; ++c) {
        SvnGraph s;
        const int n = g.integer(1, 6);
        for (int v = 0; v < n; ++v) s.add_vertex("v" + std::to_string(v), g.svnn());
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                std::string a = "v" + std::to_string(u), b = "v" + std::to_string(v);
                s.add_edge(a, b, edge_bound(s.vertex(a), s.vertex(b)));
            }
        auto cg = complement(s);
        o.check(cg.edges().empty(), std::to_string(cg.edges().size()) + " edges left");
        o.cases += 1;
    }
    return o;
}

}  // namespace neutro::testing
