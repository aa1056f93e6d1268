#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"

using namespace neutro;
using io::json;

namespace {

struct Params {
    std::map<std::string, json> values;
    std::set<std::string> explicit_keys;  // given on the command line
    std::set<std::string> used;

    bool has(const std::string& k) const { return values.count(k) > 0; }

    double number(const std::string& k, double def) {
        used.insert(k);
        auto it = values.find(k);
        if (it == values.end()) return def;
        if (it->second.is_number()) return it->second.get<double>();
        if (it->second.is_string()) {
            const std::string s = it->second.get<std::string>();
            try {
                std::size_t pos = 0;
                double v = std::stod(s, &pos);
                if (pos == s.size()) return v;
            } catch (const std::exception&) {
            }
        }
        throw Error(ErrorKind::Parameter, "parameter '" + k + "' must be a number");
    }

    std::string text(const std::string& k, const std::string& def) {
        used.insert(k);
        auto it = values.find(k);
        if (it == values.end()) return def;
        if (!it->second.is_string()) throw Error(ErrorKind::Parameter, "parameter '" + k + "' must be text");
        return it->second.get<std::string>();
    }

    void reject_unused(const std::string& method) const {
        for (const auto& k : explicit_keys)
            if (!used.count(k)) throw Error(ErrorKind::Parameter, "method " + method + " takes no parameter '" + k + "'");
    }
};

template <class T>
const DecisionProblem<T>& need_family(const io::ProblemDocument& doc, const std::string& method) {
    if (!std::holds_alternative<DecisionProblem<T>>(doc.problem))
        throw io::DocumentError("family_mismatch", "method " + method + " does not accept family " +
                                                       io::family_name(doc.family));
    return std::get<DecisionProblem<T>>(doc.problem);
}

Attitude parse_attitude(const std::string& s) {
    if (s == "pessimistic") return Attitude::Pessimistic;
    if (s == "optimistic") return Attitude::Optimistic;
    throw Error(ErrorKind::Parameter, "attitude must be pessimistic or optimistic");
}

SvnhfNormalization parse_svnhf_norm(const std::string& s) {
    if (s == "sahin_liu") return SvnhfNormalization::SahinLiu;
    if (s == "biswas_l") return SvnhfNormalization::BiswasL;
    throw Error(ErrorKind::Parameter, "normalization must be sahin_liu or biswas_l");
}

SvnhfForm parse_svnhf_form(const std::string& s) {
    if (s == "hamming") return SvnhfForm::Hamming;
    if (s == "euclidean") return SvnhfForm::Euclidean;
    if (s == "generalized") return SvnhfForm::Generalized;
    if (s == "hausdorff_hamming") return SvnhfForm::HausdorffHamming;
    if (s == "hausdorff_euclidean") return SvnhfForm::HausdorffEuclidean;
    if (s == "hausdorff_generalized") return SvnhfForm::HausdorffGeneralized;
    throw Error(ErrorKind::Parameter, "unknown distance form '" + s + "'");
}

Trail solve(const io::ProblemDocument& doc, const std::string& method, Params& prm) {
    Trail trail;
    if (method == "ideal-distance") {
        const auto& p = need_family<SVNHFE>(doc, method);
        DistanceSpec spec;
        spec.form = parse_svnhf_form(prm.text("form", "generalized"));
        spec.lambda = prm.number("lambda", 1.0);
        spec.normalization = parse_svnhf_norm(prm.text("normalization", "sahin_liu"));
        spec.attitude = parse_attitude(prm.text("attitude", "pessimistic"));
        prm.used.insert("weight_triple");
        if (prm.has("weight_triple")) {
            const json& t = prm.values.at("weight_triple");
            if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::Parameter, "weight_triple needs three vectors");
            spec.triple = std::array<std::vector<double>, 3>{t[0].get<std::vector<double>>(), t[1].get<std::vector<double>>(),
                                                             t[2].get<std::vector<double>>()};
        }
        trail = svnhf_ideal_rank(p, spec).trail;
    } else if (method == "gra") {
        trail = gra_svnhf(need_family<SVNHFE>(doc, method), {prm.number("rho", 0.5)}).trail;
    } else if (method == "topsis-bipolar") {
        trail = topsis_bipolar(need_family<BNN>(doc, method)).trail;
    } else if (method == "topsis-refined") {
        trail = topsis_refined_group(need_family<SVNN>(doc, method)).trail;
    } else if (method == "projection") {
        ProjParams pp;
        std::string mode = prm.text("mode", "weighted");
        if (mode == "weighted") pp.mode = ProjectionMode::WeightedProjection;
        else if (mode == "cosine") pp.mode = ProjectionMode::CosineProjection;
        else throw Error(ErrorKind::Parameter, "mode must be weighted or cosine");
        pp.xi = prm.number("xi", 0.5);
        trail = projection_rank_ivns(need_family<IVNN>(doc, method), pp).trail;
    } else if (method == "hybrid-group") {
        trail = hybrid_group_rank(need_family<SVNN>(doc, method), prm.number("alpha", 0.5)).trail;
    } else if (method == "entropy-madm") {
        std::string n = prm.text("normalization", "lstmm");
        Normalization norm;
        if (n == "lstmm") norm = Normalization::Lstmm;
        else if (n == "lstmmm") norm = Normalization::Lstmmm;
        else if (n == "lstsm") norm = Normalization::Lstsm;
        else if (n == "vnm") norm = Normalization::Vnm;
        else throw Error(ErrorKind::Parameter, "normalization must be lstmm, lstmmm, lstsm or vnm");
        trail = entropy_madm(need_family<double>(doc, method), norm).trail;
    } else if (method == "svnsf-screen") {
        trail = svnsf_screen(need_family<SVNN>(doc, method)).trail;
    } else {
        throw Error(ErrorKind::Parameter, "unknown method '" + method + "'");
    }
    prm.reject_unused(method);
    return trail;
}

double measure(const io::ValueList& a, const io::ValueList& b, const std::string& name, double lambda,
               const std::vector<double>& weights, const std::string& normalization, const std::string& attitude) {
    if (a.family != b.family) throw io::DocumentError("family_mismatch", "operands belong to different families");
    if (!(lambda > 0.0)) throw Error(ErrorKind::Parameter, "lambda must be positive");
    std::optional<std::vector<double>> w;
    if (!weights.empty()) w = weights;
    switch (a.family) {
        case io::Family::Svnhfe: {
            static const std::map<std::string, std::pair<SvnhfForm, bool>> forms{
                {"nh", {SvnhfForm::Hamming, false}},
                {"ne", {SvnhfForm::Euclidean, false}},
                {"gn", {SvnhfForm::Generalized, false}},
                {"nhh", {SvnhfForm::HausdorffHamming, false}},
                {"neh", {SvnhfForm::HausdorffEuclidean, false}},
                {"gnh", {SvnhfForm::HausdorffGeneralized, false}},
                {"wh", {SvnhfForm::Hamming, true}},
                {"we", {SvnhfForm::Euclidean, true}},
                {"gw", {SvnhfForm::Generalized, true}},
                {"whh", {SvnhfForm::HausdorffHamming, true}},
                {"weh", {SvnhfForm::HausdorffEuclidean, true}},
                {"gwh", {SvnhfForm::HausdorffGeneralized, true}}};
            auto it = forms.find(name);
            if (it == forms.end()) throw Error(ErrorKind::Parameter, "unknown hesitant measure '" + name + "'");
            DistanceSpec spec;
            spec.form = it->second.first;
            spec.lambda = lambda;
            spec.normalization = parse_svnhf_norm(normalization);
            spec.attitude = parse_attitude(attitude);
            if (it->second.second) {
                if (!w) throw Error(ErrorKind::MissingWeights, "measure " + name + " needs --weights");
                spec.weights = w;
            } else if (w) {
                throw Error(ErrorKind::Parameter, "measure " + name + " is unweighted");
            }
            return svnhf_distance(std::get<std::vector<SVNHFE>>(a.values), std::get<std::vector<SVNHFE>>(b.values), spec);
        }
        case io::Family::Bnn: {
            static const std::map<std::string, BnnDistanceForm> forms{{"hamming", BnnDistanceForm::Hamming},
                                                                      {"nhamming", BnnDistanceForm::NormalizedHamming},
                                                                      {"euclidean", BnnDistanceForm::Euclidean},
                                                                      {"neuclidean", BnnDistanceForm::NormalizedEuclidean}};
            auto it = forms.find(name);
            if (it == forms.end()) throw Error(ErrorKind::Parameter, "unknown bipolar measure '" + name + "'");
            return bnn_distance(std::get<std::vector<BNN>>(a.values), std::get<std::vector<BNN>>(b.values), it->second);
        }
        case io::Family::Ivnn: {
            IvnnDistanceForm f;
            if (name == "hamming") f = IvnnDistanceForm::Hamming;
            else if (name == "euclidean") f = IvnnDistanceForm::Euclidean;
            else throw Error(ErrorKind::Parameter, "unknown interval measure '" + name + "'");
            return ivnn_distance(std::get<std::vector<IVNN>>(a.values), std::get<std::vector<IVNN>>(b.values), f, w);
        }
        case io::Family::Rough: {
            RoughForm f;
            if (name == "cos") f = RoughForm::Cosine;
            else if (name == "sin") f = RoughForm::Sine;
            else if (name == "cot") f = RoughForm::Cotangent;
            else throw Error(ErrorKind::Parameter, "unknown rough measure '" + name + "'");
            return rough_trig_similarity(std::get<std::vector<RoughSVNN>>(a.values),
                                         std::get<std::vector<RoughSVNN>>(b.values), f, w);
        }
        default: throw io::DocumentError("family_mismatch", "no measures for this family");
    }
}

template <class L>
json tuple_json(const L& x) {
    return io::encode(x);
}

template <class G>
json graph_metrics(const G& g, const std::string& op, const std::string& vertex) {
    json out;
    if (op == "validate") {
        auto v = validate(g);
        out["valid"] = v.empty();
        out["violations"] = v;
    } else if (op == "degree") {
        json d = json::object();
        if (!vertex.empty()) d[vertex] = tuple_json(degree(g, vertex));
        else
            for (const auto& [name, a] : g.vertices()) d[name] = tuple_json(degree(g, name));
        out["degrees"] = d;
        out["order"] = tuple_json(order(g));
        out["size"] = tuple_json(size(g));
    } else if (op == "classify") {
        auto c = classify(g);
        out["strong"] = c.strong;
        out["complete"] = c.complete;
        out["constant"] = c.constant ? tuple_json(*c.constant) : json(nullptr);
        out["totally_constant"] = c.totally_constant ? tuple_json(*c.totally_constant) : json(nullptr);
        out["regular"] = c.regular ? tuple_json(*c.regular) : json(nullptr);
    }
    return out;
}

json run_graph(const std::string& op, const std::vector<std::string>& inputs, bool strict, const std::string& vertex,
               const std::string& form, double sigma) {
    static const std::set<std::string> unary{"validate", "degree", "classify", "complement"};
    static const std::set<std::string> binary{"cartesian", "composition", "union", "join", "hausdorff", "prob-sim"};
    if (!unary.count(op) && !binary.count(op)) throw Error(ErrorKind::Parameter, "unknown graph op '" + op + "'");
    std::size_t want = unary.count(op) ? 1 : 2;
    if (inputs.size() != want)
        throw Error(ErrorKind::Parameter, "op " + op + " takes " + std::to_string(want) + " graph file(s)");
    std::vector<io::AnyGraph> gs;
    for (const auto& path : inputs) gs.push_back(io::parse_graph(io::read_json_file(path), strict));
    if (unary.count(op)) {
        if (op == "complement") {
            if (std::holds_alternative<IvnGraph>(gs[0]))
                throw io::DocumentError("family_mismatch", "complement takes svnn or bnn graphs");
            return std::visit([](const auto& g) { return io::graph_to_json(io::AnyGraph(complement(g))); }, gs[0]);
        }
        return std::visit([&](const auto& g) { return graph_metrics(g, op, vertex); }, gs[0]);
    }
    if (op == "hausdorff" || op == "prob-sim") {
        if (!std::holds_alternative<SvnGraph>(gs[0]) || !std::holds_alternative<SvnGraph>(gs[1]))
            throw io::DocumentError("family_mismatch", "op " + op + " takes svnn graphs");
        const auto& a = std::get<SvnGraph>(gs[0]);
        const auto& b = std::get<SvnGraph>(gs[1]);
        std::array<double, 3> r;
        if (op == "hausdorff") {
            HausdorffForm f;
            if (form == "ngd") f = HausdorffForm::Ngd;
            else if (form == "mngd") f = HausdorffForm::Mngd;
            else throw Error(ErrorKind::Parameter, "form must be ngd or mngd");
            r = graph_hausdorff(a, b, f);
        } else {
            r = graph_prob_similarity(a, b, sigma);
        }
        return {{"T", r[0]}, {"I", r[1]}, {"F", r[2]}};
    }
    if (!std::holds_alternative<IvnGraph>(gs[0]) || !std::holds_alternative<IvnGraph>(gs[1]))
        throw io::DocumentError("family_mismatch", "op " + op + " takes ivnn graphs");
    ProductKind k = op == "cartesian"     ? ProductKind::Cartesian
                    : op == "composition" ? ProductKind::Composition
                    : op == "union"       ? ProductKind::Union
                                          : ProductKind::Join;
    return io::graph_to_json(io::AnyGraph(ivn_product(std::get<IvnGraph>(gs[0]), std::get<IvnGraph>(gs[1]), k)));
}

int report(const std::string& kind, const std::string& message, int code) {
    json e = {{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << e.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neutrosophic decision making and graph toolkit"};
    app.require_subcommand(1);
    bool permissive = false;
    app.add_flag("--permissive", permissive, "Accept unknown document fields");

    auto* solve_cmd = app.add_subcommand("solve", "Rank alternatives of a decision problem");
    std::string problem_path, method, out = "json";
    std::vector<std::string> kv;
    solve_cmd->add_option("path", problem_path, "Problem document")->required();
    solve_cmd->add_option("--method", method, "Ranking method")
        ->required()
        ->check(CLI::IsMember({"ideal-distance", "gra", "topsis-bipolar", "topsis-refined", "projection",
                               "hybrid-group", "entropy-madm", "svnsf-screen"}));
    solve_cmd->add_option("--param", kv, "Method parameter key=value");
    solve_cmd->add_option("--out", out, "Output format")->check(CLI::IsMember({"json", "table"}));

    auto* measure_cmd = app.add_subcommand("measure", "Distance or similarity between two value lists");
    std::string a_path, b_path, measure_name, normalization = "sahin_liu", attitude = "pessimistic";
    double lambda = 1.0;
    std::vector<double> weights;
    measure_cmd->add_option("a", a_path, "First value document")->required();
    measure_cmd->add_option("b", b_path, "Second value document")->required();
    measure_cmd->add_option("--measure", measure_name, "Measure name")->required();
    measure_cmd->add_option("--lambda", lambda, "Order of the generalized forms");
    measure_cmd->add_option("--weights", weights, "Element weights")->delimiter(',');
    measure_cmd->add_option("--normalization", normalization, "sahin_liu or biswas_l");
    measure_cmd->add_option("--attitude", attitude, "pessimistic or optimistic");

    auto* graph_cmd = app.add_subcommand("graph", "Neutrosophic graph operations");
    std::string op, vertex, form = "ngd";
    std::vector<std::string> graph_inputs;
    double sigma = 1.0;
    graph_cmd->add_option("--op", op, "Operation")->required();
    graph_cmd->add_option("inputs", graph_inputs, "Graph documents")->required();
    graph_cmd->add_option("--vertex", vertex, "Vertex for degree");
    graph_cmd->add_option("--form", form, "ngd or mngd");
    graph_cmd->add_option("--sigma", sigma, "Gaussian width for prob-sim");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report("parameter", e.what(), 2);
    }

    const bool strict = !permissive;
    try {
        if (*solve_cmd) {
            auto doc = io::parse_problem(io::read_json_file(problem_path), strict);
            Params prm;
            prm.values = doc.params;
            for (const auto& s : kv) {
                auto eq = s.find('=');
                if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Parameter, "--param expects key=value");
                prm.values[s.substr(0, eq)] = s.substr(eq + 1);
                prm.explicit_keys.insert(s.substr(0, eq));
            }
            json trail = io::trail_to_json(solve(doc, method, prm));
            std::cout << (out == "table" ? io::trail_table(trail) : io::dump_fixed(trail) + "\n");
        } else if (*measure_cmd) {
            auto a = io::parse_values(io::read_json_file(a_path), strict);
            auto b = io::parse_values(io::read_json_file(b_path), strict);
            std::printf("%.6f\n", measure(a, b, measure_name, lambda, weights, normalization, attitude));
        } else if (*graph_cmd) {
            std::cout << io::dump_fixed(run_graph(op, graph_inputs, strict, vertex, form, sigma)) << "\n";
        }
    } catch (const io::DocumentError& e) {
        return report(e.kind(), e.what(), 2);
    } catch (const Error& e) {
        return report(error_kind_name(e.kind()), e.what(), e.kind() == ErrorKind::Degenerate ? 3 : 2);
    } catch (const std::exception& e) {
        return report("internal", e.what(), 2);
    }
    return 0;
}
