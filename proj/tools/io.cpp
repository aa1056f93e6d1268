#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace neutro::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw DocumentError("parse", what); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

double num(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where + ": expected a number");
    return j.get<double>();
}

std::vector<double> nums(const json& j, const std::string& where, std::size_t arity = 0) {
    if (!j.is_array()) fail(where + ": expected an array");
    if (arity && j.size() != arity) fail(where + ": expected " + std::to_string(arity) + " numbers");
    std::vector<double> out;
    for (const auto& x : j) out.push_back(num(x, where));
    return out;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) fail(where + ": unknown field '" + k + "'");
}

void check_schema(const json& j) {
    if (!j.is_object()) fail("document must be a JSON object");
    const json& v = need(j, "schema_version");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
        fail("unsupported schema_version; expected " + std::to_string(kSchemaVersion));
}

// Cell decoding; a string cell goes through the linguistic scale when one is given.
struct CellDecoder {
    const LinguisticScale* scale = nullptr;

    template <class T>
    T from_label(const json& j, const std::string& where) const {
        if (!scale) fail(where + ": linguistic label without a scale");
        ScaleValue v = linguistic_to_value(j.get<std::string>(), *scale);
        if (!std::holds_alternative<T>(v)) throw DocumentError("family_mismatch", where + ": scale family differs");
        return std::get<T>(v);
    }

    void decode(const json& j, SVNN& out, const std::string& where) const {
        if (j.is_string()) {
            out = from_label<SVNN>(j, where);
            return;
        }
        auto v = nums(j, where, 3);
        out = {v[0], v[1], v[2]};
    }
    void decode(const json& j, IVNN& out, const std::string& where) const {
        if (j.is_string()) {
            out = from_label<IVNN>(j, where);
            return;
        }
        if (!j.is_array() || j.size() != 3) fail(where + ": expected [[tL,tU],[iL,iU],[fL,fU]]");
        auto t = nums(j[0], where, 2), i = nums(j[1], where, 2), f = nums(j[2], where, 2);
        out = {t[0], t[1], i[0], i[1], f[0], f[1]};
    }
    void decode(const json& j, BNN& out, const std::string& where) const {
        auto v = nums(j, where, 6);
        out = {v[0], v[1], v[2], v[3], v[4], v[5]};
    }
    void decode(const json& j, SVNHFE& out, const std::string& where) const {
        if (!j.is_array() || j.size() != 3) fail(where + ": expected [[t...],[i...],[f...]]");
        out = SVNHFE(nums(j[0], where), nums(j[1], where), nums(j[2], where));
    }
    void decode(const json& j, RoughSVNN& out, const std::string& where) const {
        if (!j.is_array() || j.size() != 2) fail(where + ": expected [[lower],[upper]]");
        auto lo = nums(j[0], where, 3), up = nums(j[1], where, 3);
        out = {{lo[0], lo[1], lo[2]}, {up[0], up[1], up[2]}};
    }
    void decode(const json& j, double& out, const std::string& where) const { out = num(j, where); }

    template <class T>
    Matrix<T> matrix(const json& j, const std::string& where) const {
        if (!j.is_array()) fail(where + ": expected an array of rows");
        Matrix<T> m;
        for (std::size_t r = 0; r < j.size(); ++r) {
            if (!j[r].is_array()) fail(where + ": row " + std::to_string(r) + " is not an array");
            std::vector<T> row(j[r].size());
            for (std::size_t c = 0; c < j[r].size(); ++c)
                decode(j[r][c], row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
            m.push_back(std::move(row));
        }
        return m;
    }
};

template <class T>
DecisionProblem<T> parse_body(const json& j, const CellDecoder& dec) {
    DecisionProblem<T> p;
    const json& alts = need(j, "alternatives");
    if (!alts.is_array()) fail("alternatives must be an array");
    for (const auto& a : alts) {
        if (!a.is_string()) fail("alternative names must be strings");
        p.alternatives.push_back(a.get<std::string>());
    }
    const json& crit = need(j, "criteria");
    if (!crit.is_array()) fail("criteria must be an array");
    for (const auto& c : crit) {
        if (c.is_string()) {
            p.criteria.push_back({c.get<std::string>(), CriterionKind::Benefit});
            continue;
        }
        if (!c.is_object()) fail("criterion must be a name or {name, kind}");
        check_keys(c, {"name", "kind"}, "criterion");
        const json& name = need(c, "name");
        if (!name.is_string()) fail("criterion name must be a string");
        std::string kind = c.value("kind", std::string("benefit"));
        if (kind != "benefit" && kind != "cost") fail("criterion kind must be benefit or cost");
        p.criteria.push_back({name.get<std::string>(), kind == "cost" ? CriterionKind::Cost : CriterionKind::Benefit});
    }
    if (j.contains("cells")) p.cells = dec.matrix<T>(j.at("cells"), "cells");
    if (j.contains("weights")) p.weights = nums(j.at("weights"), "weights");
    if (j.contains("weight_bounds")) {
        WeightBounds b;
        for (const auto& x : j.at("weight_bounds")) {
            auto v = nums(x, "weight_bounds", 2);
            b.push_back({v[0], v[1]});
        }
        p.weight_bounds = b;
    }
    if (j.contains("dm_layers")) {
        const json& l = j.at("dm_layers");
        if (!l.is_array()) fail("dm_layers must be an array");
        for (std::size_t d = 0; d < l.size(); ++d)
            p.dm_layers.push_back(dec.matrix<T>(l[d], "dm_layers[" + std::to_string(d) + "]"));
    }
    CellDecoder svnn_dec = dec;
    if (j.contains("dm_weights")) {
        const json& w = j.at("dm_weights");
        if (!w.is_array()) fail("dm_weights must be an array");
        for (const auto& x : w) {
            SVNN s;
            svnn_dec.decode(x, s, "dm_weights");
            p.dm_weights.push_back(s);
        }
    }
    if (j.contains("criteria_weight_layers"))
        p.criteria_weight_layers = svnn_dec.matrix<SVNN>(j.at("criteria_weight_layers"), "criteria_weight_layers");
    return p;
}

json encode_cell(double x) { return x; }

template <class T>
json encode_matrix(const Matrix<T>& m) {
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& c : row) {
            if constexpr (std::is_same_v<T, double>) r.push_back(c);
            else r.push_back(encode(c));
        }
        a.push_back(r);
    }
    return a;
}

template <class T>
json encode_body(const DecisionProblem<T>& p) {
    json j;
    j["alternatives"] = p.alternatives;
    json crit = json::array();
    for (const auto& c : p.criteria)
        crit.push_back({{"name", c.name}, {"kind", c.kind == CriterionKind::Cost ? "cost" : "benefit"}});
    j["criteria"] = crit;
    if (!p.cells.empty()) j["cells"] = encode_matrix(p.cells);
    if (p.weights) j["weights"] = *p.weights;
    if (p.weight_bounds) {
        json b = json::array();
        for (const auto& x : *p.weight_bounds) b.push_back({x.lo, x.hi});
        j["weight_bounds"] = b;
    }
    if (!p.dm_layers.empty()) {
        json l = json::array();
        for (const auto& m : p.dm_layers) l.push_back(encode_matrix(m));
        j["dm_layers"] = l;
    }
    if (!p.dm_weights.empty()) {
        json w = json::array();
        for (const auto& x : p.dm_weights) w.push_back(encode(x));
        j["dm_weights"] = w;
    }
    if (!p.criteria_weight_layers.empty()) j["criteria_weight_layers"] = encode_matrix(p.criteria_weight_layers);
    return j;
}

const std::set<std::string> kProblemKeys{"schema_version", "family",     "alternatives", "criteria",
                                         "cells",          "weights",    "weight_bounds", "dm_layers",
                                         "dm_weights",     "criteria_weight_layers",      "linguistic",
                                         "scale",          "params"};
const std::set<std::string> kParamKeys{"rho",       "xi",   "alpha", "lambda", "sigma",
                                       "normalization", "attitude", "mode", "form", "weight_triple"};

CellDecoder make_decoder(const json& j) {
    CellDecoder dec;
    if (j.value("linguistic", false)) {
        const json& s = need(j, "scale");
        if (!s.is_string()) fail("scale must be a name");
        try {
            dec.scale = &builtin_scale(s.get<std::string>());
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    return dec;
}

}  // namespace

Family family_from_name(const std::string& s) {
    if (s == "svnn") return Family::Svnn;
    if (s == "ivnn") return Family::Ivnn;
    if (s == "bnn") return Family::Bnn;
    if (s == "svnhfe") return Family::Svnhfe;
    if (s == "rough") return Family::Rough;
    if (s == "crisp") return Family::Crisp;
    fail("unknown family '" + s + "'");
}

const char* family_name(Family f) noexcept {
    switch (f) {
        case Family::Svnn: return "svnn";
        case Family::Ivnn: return "ivnn";
        case Family::Bnn: return "bnn";
        case Family::Svnhfe: return "svnhfe";
        case Family::Rough: return "rough";
        case Family::Crisp: return "crisp";
    }
    return "unknown";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(path + ": " + e.what());
    }
}

ProblemDocument parse_problem(const json& j, bool strict) {
    check_schema(j);
    if (strict) check_keys(j, kProblemKeys, "problem");
    const json& fam = need(j, "family");
    if (!fam.is_string()) fail("family must be a string");
    ProblemDocument doc;
    doc.family = family_from_name(fam.get<std::string>());
    CellDecoder dec = make_decoder(j);
    try {
        switch (doc.family) {
            case Family::Svnn: doc.problem = parse_body<SVNN>(j, dec); break;
            case Family::Ivnn: doc.problem = parse_body<IVNN>(j, dec); break;
            case Family::Bnn: doc.problem = parse_body<BNN>(j, dec); break;
            case Family::Svnhfe: doc.problem = parse_body<SVNHFE>(j, dec); break;
            case Family::Rough: doc.problem = parse_body<RoughSVNN>(j, dec); break;
            case Family::Crisp: doc.problem = parse_body<double>(j, dec); break;
        }
    } catch (const json::exception& e) {
        fail(e.what());
    }
    if (j.contains("params")) {
        const json& p = j.at("params");
        if (!p.is_object()) fail("params must be an object");
        if (strict) check_keys(p, kParamKeys, "params");
        for (const auto& [k, v] : p.items()) doc.params[k] = v;
    }
    return doc;
}

json problem_to_json(const ProblemDocument& doc) {
    json j = std::visit([](const auto& p) { return encode_body(p); }, doc.problem);
    j["schema_version"] = kSchemaVersion;
    j["family"] = family_name(doc.family);
    if (!doc.params.empty()) {
        json p = json::object();
        for (const auto& [k, v] : doc.params) p[k] = v;
        j["params"] = p;
    }
    return j;
}

json encode(const SVNN& a) { return {a.t, a.i, a.f}; }
json encode(const IVNN& a) { return {{a.tL, a.tU}, {a.iL, a.iU}, {a.fL, a.fU}}; }
json encode(const BNN& a) { return {a.tp, a.ip, a.fp, a.tn, a.in, a.fn}; }
json encode(const SVNHFE& a) { return {a.t(), a.i(), a.f()}; }
json encode(const RoughSVNN& a) { return {encode(a.lower), encode(a.upper)}; }

json trail_to_json(const Trail& t) {
    json j;
    j["method"] = t.method;
    json params = json::object();
    for (const auto& [k, v] : t.params) params[k] = v;
    j["params"] = params;
    j["alternatives"] = t.alternatives;
    json entries = json::array();
    for (const auto& [label, ten] : t.entries) entries.push_back({{"label", label}, {"shape", ten.shape}, {"data", ten.data}});
    j["entries"] = entries;
    auto name = [&](std::size_t k) { return k < t.alternatives.size() ? t.alternatives[k] : std::to_string(k); };
    json order = json::array(), ties = json::array();
    for (std::size_t k : t.ranking.order) order.push_back(name(k));
    for (const auto& g : t.ranking.ties) {
        json grp = json::array();
        for (std::size_t k : g) grp.push_back(name(k));
        ties.push_back(grp);
    }
    j["ranking"] = {{"order", order}, {"scores", t.ranking.scores}, {"ties", ties}};
    return j;
}

Trail trail_from_json(const json& j) {
    try {
        Trail t;
        t.method = need(j, "method").get<std::string>();
        for (const auto& [k, v] : need(j, "params").items()) t.params.emplace_back(k, v.get<std::string>());
        t.alternatives = need(j, "alternatives").get<std::vector<std::string>>();
        for (const auto& e : need(j, "entries"))
            t.entries.emplace_back(e.at("label").get<std::string>(),
                                   Tensor{e.at("shape").get<std::vector<std::size_t>>(), e.at("data").get<std::vector<double>>()});
        const json& r = need(j, "ranking");
        auto index = [&](const json& n) {
            auto it = std::find(t.alternatives.begin(), t.alternatives.end(), n.get<std::string>());
            if (it == t.alternatives.end()) fail("ranking names an unknown alternative");
            return static_cast<std::size_t>(it - t.alternatives.begin());
        };
        t.ranking.scores = r.at("scores").get<std::vector<double>>();
        for (const auto& n : r.at("order")) t.ranking.order.push_back(index(n));
        for (const auto& g : r.at("ties")) {
            std::vector<std::size_t> grp;
            for (const auto& n : g) grp.push_back(index(n));
            t.ranking.ties.push_back(grp);
        }
        return t;
    } catch (const json::exception& e) {
        fail(e.what());
    }
}

ValueList parse_values(const json& j, bool strict) {
    check_schema(j);
    if (strict) check_keys(j, {"schema_version", "family", "values"}, "values document");
    ValueList out;
    out.family = family_from_name(need(j, "family").get<std::string>());
    const json& v = need(j, "values");
    if (!v.is_array()) fail("values must be an array");
    CellDecoder dec;
    auto load = [&](auto tag) {
        using T = decltype(tag);
        std::vector<T> xs(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) dec.decode(v[k], xs[k], "values[" + std::to_string(k) + "]");
        out.values = xs;
    };
    switch (out.family) {
        case Family::Svnn: load(SVNN{}); break;
        case Family::Ivnn: load(IVNN{}); break;
        case Family::Bnn: load(BNN{}); break;
        case Family::Svnhfe: load(SVNHFE{}); break;
        case Family::Rough: load(RoughSVNN{}); break;
        case Family::Crisp: fail("crisp values have no measures");
    }
    return out;
}

namespace {

template <class L>
NeutroGraph<L> parse_graph_body(const json& j) {
    CellDecoder dec;
    NeutroGraph<L> g;
    const json& vs = need(j, "vertices");
    if (!vs.is_object()) fail("vertices must be an object of name -> label");
    for (const auto& [name, lab] : vs.items()) {
        L x;
        dec.decode(lab, x, "vertex " + name);
        g.add_vertex(name, x);
    }
    if (j.contains("edges")) {
        const json& es = j.at("edges");
        if (!es.is_array()) fail("edges must be an array");
        for (const auto& e : es) {
            if (!e.is_object()) fail("edge must be {u, v, label}");
            check_keys(e, {"u", "v", "label"}, "edge");
            L x;
            std::string u = need(e, "u").get<std::string>(), v = need(e, "v").get<std::string>();
            dec.decode(need(e, "label"), x, "edge " + u + "-" + v);
            g.add_edge(u, v, x);
        }
    }
    return g;
}

template <class L>
json graph_body(const NeutroGraph<L>& g, Family f) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = family_name(f);
    json vs = json::object();
    for (const auto& [v, a] : g.vertices()) vs[v] = encode(a);
    j["vertices"] = vs;
    json es = json::array();
    for (const auto& [k, e] : g.edges()) es.push_back({{"u", k.first}, {"v", k.second}, {"label", encode(e)}});
    j["edges"] = es;
    return j;
}

}  // namespace

AnyGraph parse_graph(const json& j, bool strict) {
    check_schema(j);
    if (strict) check_keys(j, {"schema_version", "family", "vertices", "edges"}, "graph");
    Family f = family_from_name(need(j, "family").get<std::string>());
    try {
        switch (f) {
            case Family::Svnn: return parse_graph_body<SVNN>(j);
            case Family::Bnn: return parse_graph_body<BNN>(j);
            case Family::Ivnn: return parse_graph_body<IVNN>(j);
            default: throw DocumentError("family_mismatch", "graphs carry svnn, bnn or ivnn labels");
        }
    } catch (const json::exception& e) {
        fail(e.what());
    }
}

json graph_to_json(const AnyGraph& g) {
    return std::visit(
        [](const auto& x) {
            using L = typename std::decay_t<decltype(x)>::Label;
            Family f = std::is_same_v<L, SVNN> ? Family::Svnn : (std::is_same_v<L, BNN> ? Family::Bnn : Family::Ivnn);
            return graph_body(x, f);
        },
        g);
}

namespace {

void write_fixed(std::ostringstream& os, const json& j, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(indent * depth), ' ');
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{" << nl;
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) os << "," << nl;
                first = false;
                os << pad << json(k).dump() << (indent > 0 ? ": " : ":");
                write_fixed(os, v, indent, depth + 1);
            }
            os << nl << close << "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
            os << "[";
            if (!flat) os << nl;
            bool first = true;
            for (const auto& v : j) {
                if (!first) os << (flat ? ", " : ",") << (flat ? "" : nl);
                first = false;
                if (!flat) os << pad;
                write_fixed(os, v, indent, depth + 1);
            }
            if (!flat) os << nl << close;
            os << "]";
            return;
        }
        case json::value_t::number_float: {
            double x = j.get<double>();
            if (!std::isfinite(x)) {
                os << "null";
                return;
            }
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);
            os << buf;
            return;
        }
        default: os << j.dump();
    }
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);
    return buf;
}

}  // namespace

std::string dump_fixed(const json& j, int indent) {
    std::ostringstream os;
    write_fixed(os, j, indent, 0);
    return os.str();
}

std::string trail_table(const json& trail) {
    std::ostringstream os;
    os << "method: " << trail.at("method").get<std::string>() << "\n";
    for (const auto& [k, v] : trail.at("params").items()) os << "  " << k << " = " << v.get<std::string>() << "\n";
    auto alts = trail.at("alternatives").get<std::vector<std::string>>();
    std::size_t w = 6;
    for (const auto& a : alts) w = std::max(w, a.size() + 2);
    for (const auto& e : trail.at("entries")) {
        auto shape = e.at("shape").get<std::vector<std::size_t>>();
        auto data = e.at("data").get<std::vector<double>>();
        os << "\n" << e.at("label").get<std::string>() << "\n";
        std::size_t rows = shape.empty() ? 0 : shape[0];
        std::size_t cols = rows ? data.size() / rows : 0;
        for (std::size_t r = 0; r < rows; ++r) {
            std::string name = rows == alts.size() ? alts[r] : std::to_string(r + 1);
            os << "  " << std::left << std::setw(static_cast<int>(w)) << name;
            for (std::size_t c = 0; c < cols; ++c) os << std::right << std::setw(12) << fixed6(data[r * cols + c]);
            os << "\n";
        }
    }
    const json& r = trail.at("ranking");
    os << "\nranking\n";
    auto scores = r.at("scores").get<std::vector<double>>();
    std::size_t rank = 1;
    for (const auto& g : r.at("ties")) {
        for (const auto& n : g) {
            auto name = n.get<std::string>();
            auto it = std::find(alts.begin(), alts.end(), name);
            double s = it != alts.end() && static_cast<std::size_t>(it - alts.begin()) < scores.size()
                           ? scores[static_cast<std::size_t>(it - alts.begin())]
                           : NAN;
            os << "  " << std::setw(3) << rank << "  " << std::left << std::setw(static_cast<int>(w)) << name
               << std::right << std::setw(12) << fixed6(s) << "\n";
        }
        rank += g.size();
    }
    return os.str();
}

}  // namespace neutro::io
