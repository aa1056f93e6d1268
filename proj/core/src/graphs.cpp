#include "neutro/graphs.hpp"

#include <algorithm>
#include <cmath>

namespace neutro {

namespace {

using Tr = LabelTraits<IVNN>;

// Lower components take the min, Upper ones the max, across every argument.
IVNN meet(std::initializer_list<IVNN> xs) {
    std::array<double, Tr::K> r{};
    bool first = true;
    for (const auto& x : xs) {
        auto p = Tr::parts(x);
        for (std::size_t k = 0; k < Tr::K; ++k) {
            if (first) r[k] = p[k];
            else r[k] = Tr::bounds[k] == EdgeRule::Lower ? std::min(r[k], p[k]) : std::max(r[k], p[k]);
        }
        first = false;
    }
    return Tr::from(r);
}

// Dual of meet: max for Lower components, min for Upper ones.
IVNN join_labels(const IVNN& a, const IVNN& b) {
    auto pa = Tr::parts(a), pb = Tr::parts(b);
    std::array<double, Tr::K> r{};
    for (std::size_t k = 0; k < Tr::K; ++k)
        r[k] = Tr::bounds[k] == EdgeRule::Lower ? std::max(pa[k], pb[k]) : std::min(pa[k], pb[k]);
    return Tr::from(r);
}

void check_names(const IvnGraph& g) {
    for (const auto& [v, a] : g.vertices())
        if (v.find(kProductSeparator) != std::string::npos)
            throw Error(ErrorKind::Parameter, "vertex name '" + v + "' contains the reserved separator");
}

std::string pair_name(const std::string& a, const std::string& b) { return a + kProductSeparator + b; }

IvnGraph product(const IvnGraph& g1, const IvnGraph& g2, bool composition) {
    check_names(g1);
    check_names(g2);
    IvnGraph out;
    for (const auto& [x, a] : g1.vertices())
        for (const auto& [y, b] : g2.vertices()) out.add_vertex(pair_name(x, y), meet({a, b}));
    for (const auto& [x, a] : g1.vertices())
        for (const auto& [k, e] : g2.edges()) out.add_edge(pair_name(x, k.first), pair_name(x, k.second), meet({a, e}));
    for (const auto& [z, b] : g2.vertices())
        for (const auto& [k, e] : g1.edges()) out.add_edge(pair_name(k.first, z), pair_name(k.second, z), meet({e, b}));
    if (composition)
        for (const auto& [k, e] : g1.edges())
            for (const auto& [x2, a2] : g2.vertices())
                for (const auto& [y2, b2] : g2.vertices()) {
                    if (x2 == y2) continue;
                    out.add_edge(pair_name(k.first, x2), pair_name(k.second, y2), meet({a2, b2, e}));
                }
    return out;
}

IvnGraph graph_union(const IvnGraph& g1, const IvnGraph& g2) {
    IvnGraph out;
    for (const auto& [v, a] : g1.vertices()) {
        auto it = g2.vertices().find(v);
        out.add_vertex(v, it == g2.vertices().end() ? a : join_labels(a, it->second));
    }
    for (const auto& [v, b] : g2.vertices())
        if (!g1.vertices().count(v)) out.add_vertex(v, b);
    for (const auto& [k, e] : g1.edges()) {
        auto other = g2.edge(k.first, k.second);
        out.add_edge(k.first, k.second, other ? join_labels(e, *other) : e);
    }
    for (const auto& [k, e] : g2.edges())
        if (!g1.edge(k.first, k.second)) out.add_edge(k.first, k.second, e);
    return out;
}

}  // namespace

IvnGraph ivn_product(const IvnGraph& g1, const IvnGraph& g2, ProductKind kind) {
    require_valid_graph(g1);
    require_valid_graph(g2);
    switch (kind) {
        case ProductKind::Cartesian: return product(g1, g2, false);
        case ProductKind::Composition: return product(g1, g2, true);
        case ProductKind::Union: return graph_union(g1, g2);
        case ProductKind::Join: {
            for (const auto& [v, a] : g1.vertices())
                if (g2.vertices().count(v)) throw Error(ErrorKind::Parameter, "join needs disjoint vertex sets; shared " + v);
            IvnGraph out = graph_union(g1, g2);
            for (const auto& [u, a] : g1.vertices())
                for (const auto& [v, b] : g2.vertices()) out.add_edge(u, v, meet({a, b}));
            return out;
        }
    }
    throw Error(ErrorKind::Parameter, "unknown product kind");
}

namespace {

// V x V label matrix flattened; the diagonal holds vertex labels, absent edges hold zero.
std::vector<SVNN> label_matrix(const SvnGraph& g) {
    if (g.vertices().empty()) throw Error(ErrorKind::Parameter, "graph has no vertices");
    std::vector<SVNN> m;
    for (const auto& [u, a] : g.vertices())
        for (const auto& [v, b] : g.vertices()) {
            if (u == v) m.push_back(a);
            else m.push_back(g.edge(u, v).value_or(SVNN{0.0, 0.0, 0.0}));
        }
    return m;
}

double comp(const SVNN& x, int c) { return c == 0 ? x.t : (c == 1 ? x.i : x.f); }

std::array<double, 3> directed(const std::vector<SVNN>& m1, const std::vector<SVNN>& m2, HausdorffForm form) {
    std::array<double, 3> r{};
    const double n1 = static_cast<double>(m1.size()), n2 = static_cast<double>(m2.size());
    // Per source cell: min, mean and max distance to the target cells.
    std::array<std::vector<double>, 3> mins, means, maxs;
    for (int c = 0; c < 3; ++c)
        for (const auto& a : m1) {
            double lo = INFINITY, hi = 0.0, s = 0.0;
            for (const auto& b : m2) {
                double d = std::abs(comp(b, c) - comp(a, c));
                lo = std::min(lo, d);
                hi = std::max(hi, d);
                s += d;
            }
            mins[c].push_back(lo);
            means[c].push_back(s / n2);
            maxs[c].push_back(hi);
        }
    auto mean = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s / n1;
    };
    if (form == HausdorffForm::Ngd) {
        r[0] = *std::max_element(mins[0].begin(), mins[0].end());
        r[1] = *std::max_element(means[1].begin(), means[1].end());
        r[2] = *std::min_element(maxs[2].begin(), maxs[2].end());
    } else {
        r[0] = mean(mins[0]);
        r[1] = mean(means[1]);
        r[2] = mean(maxs[2]);
    }
    return r;
}

}  // namespace

std::array<double, 3> graph_hausdorff(const SvnGraph& g1, const SvnGraph& g2, HausdorffForm form) {
    auto m1 = label_matrix(g1), m2 = label_matrix(g2);
    auto a = directed(m1, m2, form), b = directed(m2, m1, form);
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

namespace {

std::array<double, 3> prob_directed(const SvnGraph& g1, const SvnGraph& g2, double sigma) {
    std::array<double, 3> r{};
    auto gauss = [&](double x, double y) { return std::exp(-(x - y) * (x - y) / (2.0 * sigma * sigma)); };
    for (int c = 0; c < 3; ++c) {
        double total = 0.0;
        for (const auto& [k1, e1] : g1.edges()) {
            double z = 0.0;
            for (const auto& [k2, e2] : g2.edges()) z += gauss(comp(e2, c), comp(e1, c));
            double best = c == 2 ? INFINITY : 0.0;
            for (const auto& [k2, e2] : g2.edges()) {
                double p = z > 0.0 ? gauss(comp(e2, c), comp(e1, c)) / z : 0.0;
                best = c == 2 ? std::min(best, p) : std::max(best, p);
            }
            total += best;
        }
        r[c] = total / static_cast<double>(g1.edges().size());
    }
    return r;
}

}  // namespace

std::array<double, 3> graph_prob_similarity(const SvnGraph& g1, const SvnGraph& g2, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw Error(ErrorKind::Parameter, "sigma must be positive");
    if (g1.edges().empty() || g2.edges().empty()) throw Error(ErrorKind::Parameter, "both graphs need an edge");
    auto a = prob_directed(g1, g2, sigma), b = prob_directed(g2, g1, sigma);
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

}  // namespace neutro
