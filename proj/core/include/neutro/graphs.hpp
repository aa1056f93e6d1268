#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

// How an edge component relates to its endpoints: Lower means edge <= min, Upper means edge >= max.
enum class EdgeRule { Lower, Upper };

template <class L>
struct LabelTraits;

template <>
struct LabelTraits<SVNN> {
    static constexpr std::size_t K = 3;
    static constexpr std::array<EdgeRule, K> bounds{EdgeRule::Lower, EdgeRule::Upper, EdgeRule::Upper};
    static constexpr std::array<const char*, K> names{"T", "I", "F"};
    static std::array<double, K> parts(const SVNN& a) { return {a.t, a.i, a.f}; }
    static SVNN from(const std::array<double, K>& p) { return {p[0], p[1], p[2]}; }
};

template <>
struct LabelTraits<BNN> {
    static constexpr std::size_t K = 6;
    static constexpr std::array<EdgeRule, K> bounds{EdgeRule::Lower, EdgeRule::Upper, EdgeRule::Upper,
                                                  EdgeRule::Upper, EdgeRule::Lower, EdgeRule::Lower};
    static constexpr std::array<const char*, K> names{"T+", "I+", "F+", "T-", "I-", "F-"};
    static std::array<double, K> parts(const BNN& a) { return a.parts(); }
    static BNN from(const std::array<double, K>& p) { return BNN::from_parts(p); }
};

template <>
struct LabelTraits<IVNN> {
    static constexpr std::size_t K = 6;
    static constexpr std::array<EdgeRule, K> bounds{EdgeRule::Lower, EdgeRule::Lower, EdgeRule::Upper,
                                                  EdgeRule::Upper, EdgeRule::Upper, EdgeRule::Upper};
    static constexpr std::array<const char*, K> names{"TL", "TU", "IL", "IU", "FL", "FU"};
    static std::array<double, K> parts(const IVNN& a) { return a.bounds(); }
    static IVNN from(const std::array<double, K>& p) { return IVNN::from_bounds(p); }
};

inline constexpr char kProductSeparator = '|';

using EdgeKey = std::pair<std::string, std::string>;  // stored with first < second

template <class L>
class NeutroGraph {
public:
    using Label = L;

    void add_vertex(const std::string& name, const L& label) {
        if (name.empty()) throw Error(ErrorKind::Invalid, "vertex name is empty");
        if (!vertices_.emplace(name, label).second) throw Error(ErrorKind::Invalid, "duplicate vertex " + name);
    }

    void add_edge(const std::string& u, const std::string& v, const L& label) {
        if (u == v) throw Error(ErrorKind::Invalid, "loop at " + u);
        if (!vertices_.count(u) || !vertices_.count(v))
            throw Error(ErrorKind::Lookup, "edge " + u + "-" + v + " has an unknown endpoint");
        if (!edges_.emplace(key(u, v), label).second)
            throw Error(ErrorKind::Invalid, "multi-edge " + u + "-" + v);
    }

    const std::map<std::string, L>& vertices() const noexcept { return vertices_; }
    const std::map<EdgeKey, L>& edges() const noexcept { return edges_; }

    const L& vertex(const std::string& v) const {
        auto it = vertices_.find(v);
        if (it == vertices_.end()) throw Error(ErrorKind::Lookup, "unknown vertex " + v);
        return it->second;
    }

    std::optional<L> edge(const std::string& u, const std::string& v) const {
        auto it = edges_.find(key(u, v));
        if (it == edges_.end()) return std::nullopt;
        return it->second;
    }

    static EdgeKey key(const std::string& u, const std::string& v) { return u < v ? EdgeKey{u, v} : EdgeKey{v, u}; }

    friend bool operator==(const NeutroGraph&, const NeutroGraph&) = default;

private:
    std::map<std::string, L> vertices_;
    std::map<EdgeKey, L> edges_;
};

using SvnGraph = NeutroGraph<SVNN>;
using BipolarGraph = NeutroGraph<BNN>;
using IvnGraph = NeutroGraph<IVNN>;

// Endpoint bound for each component: min for Lower components, max for Upper ones.
template <class L>
L edge_bound(const L& a, const L& b) {
    using Tr = LabelTraits<L>;
    auto pa = Tr::parts(a), pb = Tr::parts(b);
    std::array<double, Tr::K> r{};
    for (std::size_t k = 0; k < Tr::K; ++k)
        r[k] = Tr::bounds[k] == EdgeRule::Lower ? std::min(pa[k], pb[k]) : std::max(pa[k], pb[k]);
    return Tr::from(r);
}

template <class L>
std::vector<std::string> validate(const NeutroGraph<L>& g) {
    using Tr = LabelTraits<L>;
    std::vector<std::string> out;
    auto check_label = [&](const std::string& where, const L& x) {
        try {
            require_valid(x);
        } catch (const Error& e) {
            out.push_back(where + ": " + e.what());
        }
    };
    for (const auto& [v, a] : g.vertices()) check_label("vertex " + v, a);
    for (const auto& [k, e] : g.edges()) {
        const std::string name = "edge " + k.first + "-" + k.second;
        check_label(name, e);
        auto pe = Tr::parts(e);
        auto pb = Tr::parts(edge_bound(g.vertex(k.first), g.vertex(k.second)));
        for (std::size_t c = 0; c < Tr::K; ++c) {
            bool lower = Tr::bounds[c] == EdgeRule::Lower;
            if (lower ? pe[c] > pb[c] + kEps : pe[c] < pb[c] - kEps)
                out.push_back(name + ": " + Tr::names[c] + (lower ? " exceeds endpoint min" : " below endpoint max"));
        }
    }
    return out;
}

template <class L>
void require_valid_graph(const NeutroGraph<L>& g) {
    auto v = validate(g);
    if (!v.empty()) throw Error(ErrorKind::Invalid, "invalid graph: " + v.front());
}

template <class L>
L label_sum(const std::vector<L>& xs) {
    using Tr = LabelTraits<L>;
    std::array<double, Tr::K> s{};
    for (const auto& x : xs) {
        auto p = Tr::parts(x);
        for (std::size_t k = 0; k < Tr::K; ++k) s[k] += p[k];
    }
    return Tr::from(s);
}

template <class L>
bool label_close(const L& a, const L& b, double tol = kEps) {
    using Tr = LabelTraits<L>;
    auto pa = Tr::parts(a), pb = Tr::parts(b);
    for (std::size_t k = 0; k < Tr::K; ++k)
        if (std::abs(pa[k] - pb[k]) > tol) return false;
    return true;
}

template <class L>
L degree(const NeutroGraph<L>& g, const std::string& v) {
    g.vertex(v);
    std::vector<L> inc;
    for (const auto& [k, e] : g.edges())
        if (k.first == v || k.second == v) inc.push_back(e);
    return label_sum(inc);
}

// Degree plus the vertex's own label.
template <class L>
L total_degree(const NeutroGraph<L>& g, const std::string& v) {
    return label_sum<L>({degree(g, v), g.vertex(v)});
}

// Sum of the labels of adjacent vertices.
template <class L>
L neighborhood_degree(const NeutroGraph<L>& g, const std::string& v) {
    g.vertex(v);
    std::vector<L> nb;
    for (const auto& [k, e] : g.edges()) {
        if (k.first == v) nb.push_back(g.vertex(k.second));
        if (k.second == v) nb.push_back(g.vertex(k.first));
    }
    return label_sum(nb);
}

template <class L>
L order(const NeutroGraph<L>& g) {
    std::vector<L> xs;
    for (const auto& [v, a] : g.vertices()) xs.push_back(a);
    return label_sum(xs);
}

template <class L>
L size(const NeutroGraph<L>& g) {
    std::vector<L> xs;
    for (const auto& [k, e] : g.edges()) xs.push_back(e);
    return label_sum(xs);
}

template <class L>
struct Classification {
    bool strong = false;
    bool complete = false;
    std::optional<L> constant;          // shared degree, when every vertex has it
    std::optional<L> totally_constant;  // shared total degree
    std::optional<L> regular;           // shared neighborhood degree
};

template <class L>
Classification<L> classify(const NeutroGraph<L>& g) {
    require_valid_graph(g);
    Classification<L> c;
    c.strong = true;
    for (const auto& [k, e] : g.edges())
        if (!label_close(e, edge_bound(g.vertex(k.first), g.vertex(k.second)))) c.strong = false;
    const std::size_t n = g.vertices().size();
    c.complete = c.strong && g.edges().size() == n * (n - 1) / 2;
    auto shared = [&](auto fn) -> std::optional<L> {
        std::optional<L> first;
        for (const auto& [v, a] : g.vertices()) {
            L d = fn(v);
            if (!first) first = d;
            else if (!label_close(*first, d)) return std::nullopt;
        }
        return first;
    };
    c.constant = shared([&](const std::string& v) { return degree(g, v); });
    c.totally_constant = shared([&](const std::string& v) { return total_degree(g, v); });
    c.regular = shared([&](const std::string& v) { return neighborhood_degree(g, v); });
    return c;
}

// Every vertex pair gets bound - edge (absent edges count as zero); all-zero results are dropped.
template <class L>
NeutroGraph<L> complement(const NeutroGraph<L>& g) {
    using Tr = LabelTraits<L>;
    require_valid_graph(g);
    NeutroGraph<L> out;
    for (const auto& [v, a] : g.vertices()) out.add_vertex(v, a);
    for (auto u = g.vertices().begin(); u != g.vertices().end(); ++u)
        for (auto v = std::next(u); v != g.vertices().end(); ++v) {
            auto pb = Tr::parts(edge_bound(u->second, v->second));
            auto e = g.edge(u->first, v->first);
            std::array<double, Tr::K> pe{};
            if (e) pe = Tr::parts(*e);
            std::array<double, Tr::K> r{};
            bool zero = true;
            for (std::size_t k = 0; k < Tr::K; ++k) {
                r[k] = pb[k] - pe[k];
                if (std::abs(r[k]) > kEps) zero = false;
            }
            if (!zero) out.add_edge(u->first, v->first, Tr::from(r));
        }
    return out;
}

enum class ProductKind { Cartesian, Composition, Union, Join };

IvnGraph ivn_product(const IvnGraph& g1, const IvnGraph& g2, ProductKind kind);

enum class HausdorffForm { Ngd, Mngd };
std::array<double, 3> graph_hausdorff(const SvnGraph& g1, const SvnGraph& g2, HausdorffForm form);

std::array<double, 3> graph_prob_similarity(const SvnGraph& g1, const SvnGraph& g2, double sigma);

}  // namespace neutro
