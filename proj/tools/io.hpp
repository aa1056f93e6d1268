#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "neutro/graphs.hpp"
#include "neutro/mcdm.hpp"

namespace neutro::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Document-level failure; kind is "parse" or "family_mismatch".
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

enum class Family { Svnn, Ivnn, Bnn, Svnhfe, Rough, Crisp };
Family family_from_name(const std::string& s);
const char* family_name(Family f) noexcept;

using AnyProblem = std::variant<DecisionProblem<SVNN>, DecisionProblem<IVNN>, DecisionProblem<BNN>,
                                DecisionProblem<SVNHFE>, DecisionProblem<RoughSVNN>, DecisionProblem<double>>;

struct ProblemDocument {
    Family family = Family::Svnn;
    AnyProblem problem;
    std::map<std::string, json> params;
};

json read_json_file(const std::string& path);

ProblemDocument parse_problem(const json& j, bool strict = true);
json problem_to_json(const ProblemDocument& doc);

json trail_to_json(const Trail& t);
Trail trail_from_json(const json& j);

// Value lists for the measure command: {"schema_version", "family", "values": [cells]}.
struct ValueList {
    Family family = Family::Svnn;
    std::variant<std::vector<SVNN>, std::vector<IVNN>, std::vector<BNN>, std::vector<SVNHFE>,
                 std::vector<RoughSVNN>>
        values;
};
ValueList parse_values(const json& j, bool strict = true);

using AnyGraph = std::variant<SvnGraph, BipolarGraph, IvnGraph>;
AnyGraph parse_graph(const json& j, bool strict = true);
json graph_to_json(const AnyGraph& g);

json encode(const SVNN& a);
json encode(const IVNN& a);
json encode(const BNN& a);
json encode(const SVNHFE& a);
json encode(const RoughSVNN& a);

// Serializes with every floating-point number in fixed 6-decimal notation.
std::string dump_fixed(const json& j, int indent = 2);

// Aligned text rendering of a trail document.
std::string trail_table(const json& trail);

}  // namespace neutro::io
