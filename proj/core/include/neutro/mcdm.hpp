#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neutro/aggregation.hpp"
#include "neutro/core.hpp"
#include "neutro/measures.hpp"

namespace neutro {

inline void require_valid(double x) {
    if (!std::isfinite(x)) throw Error(ErrorKind::Invalid, "non-finite crisp value");
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

enum class CriterionKind { Benefit, Cost };

struct Criterion {
    std::string name;
    CriterionKind kind = CriterionKind::Benefit;

    friend bool operator==(const Criterion&, const Criterion&) = default;
};

template <class T>
struct DecisionProblem {
    std::vector<std::string> alternatives;
    std::vector<Criterion> criteria;
    Matrix<T> cells;  // [alternative][criterion]
    std::optional<Weights> weights;
    std::optional<WeightBounds> weight_bounds;
    std::vector<Matrix<T>> dm_layers;                 // [decision maker][alternative][criterion]
    std::vector<SVNN> dm_weights;                     // one per decision maker
    std::vector<std::vector<SVNN>> criteria_weight_layers;  // [decision maker][criterion]

    friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;

    std::size_t n() const { return alternatives.size(); }
    std::size_t m() const { return criteria.size(); }

    void check_matrix(const Matrix<T>& mat) const {
        if (mat.size() != n()) throw Error(ErrorKind::Dimension, "row count does not match alternatives");
        for (const auto& row : mat) {
            if (row.size() != m()) throw Error(ErrorKind::Dimension, "column count does not match criteria");
            for (const auto& c : row) require_valid(c);
        }
    }

    void validate() const {
        if (n() == 0 || m() == 0) throw Error(ErrorKind::Dimension, "empty decision problem");
        if (!cells.empty() || dm_layers.empty()) check_matrix(cells);
        for (const auto& layer : dm_layers) check_matrix(layer);
        if (weights) require_weights(*weights, m());
        if (weight_bounds) {
            if (weight_bounds->size() != m()) throw Error(ErrorKind::Dimension, "one bound per criterion");
            check_bounds(*weight_bounds);
        }
        if (!dm_weights.empty() && dm_weights.size() != dm_layers.size())
            throw Error(ErrorKind::Dimension, "one weight per decision maker layer");
        for (const auto& w : dm_weights) require_valid(w);
        if (!criteria_weight_layers.empty()) {
            if (criteria_weight_layers.size() != dm_layers.size())
                throw Error(ErrorKind::Dimension, "one criteria-weight layer per decision maker");
            for (const auto& l : criteria_weight_layers) {
                if (l.size() != m()) throw Error(ErrorKind::Dimension, "criteria-weight layer length");
                for (const auto& w : l) require_valid(w);
            }
        }
    }
};

enum class Direction { Descending, Ascending };

struct Ranking {
    std::vector<double> scores;
    std::vector<std::size_t> order;             // best first
    std::vector<std::vector<std::size_t>> ties;  // groups of equal scores, in order

    friend bool operator==(const Ranking&, const Ranking&) = default;
};

Ranking make_ranking(const std::vector<double>& scores, Direction dir);

// Shape plus row-major data; the generic carrier for intermediate tables.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    friend bool operator==(const Tensor&, const Tensor&) = default;
};

Tensor tensor(const std::vector<double>& v);
Tensor tensor(const Matrix<double>& m);
Tensor tensor(const std::vector<SVNN>& v);
Tensor tensor(const Matrix<SVNN>& m);
Tensor tensor(const std::vector<BNN>& v);
Tensor tensor(const Matrix<BNN>& m);
Tensor tensor(const std::vector<IVNN>& v);
Tensor tensor(const Matrix<IVNN>& m);

struct Trail {
    std::string method;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> alternatives;
    std::vector<std::pair<std::string, Tensor>> entries;
    Ranking ranking;

    const Tensor& at(const std::string& label) const;
    friend bool operator==(const Trail&, const Trail&) = default;
};

// Ideal-distance ranking over hesitant data. Weights come from the DistanceSpec, else from the problem.
struct IdealDistanceResult {
    std::vector<double> distances;
    Ranking ranking;
    Trail trail;
};
IdealDistanceResult svnhf_ideal_rank(const DecisionProblem<SVNHFE>& p, DistanceSpec spec);

struct GraParams {
    double rho = 0.5;
};
struct GraResult {
    std::vector<SVNHFE> pis, nis;
    Matrix<double> coeff_pos, coeff_neg;
    std::vector<double> degree_pos, degree_neg, closeness;
    Ranking ranking;
    Trail trail;
};
GraResult gra_svnhf(const DecisionProblem<SVNHFE>& p, GraParams params = {});

struct BipolarTopsisResult {
    Weights weights;
    Matrix<BNN> weighted;
    std::vector<BNN> pis, nis;
    std::vector<double> dist_pos, dist_neg, closeness;
    Ranking ranking;
    Trail trail;
};
BipolarTopsisResult topsis_bipolar(const DecisionProblem<BNN>& p);

struct RefinedTopsisResult {
    Weights dm_weights;
    Matrix<SVNN> aggregated;
    std::vector<SVNN> criteria_weights;
    Matrix<SVNN> weighted;
    std::vector<SVNN> pis, nis;
    std::vector<double> dist_pos, dist_neg, closeness;
    Ranking ranking;
    Trail trail;
};
RefinedTopsisResult topsis_refined_group(const DecisionProblem<SVNN>& p);

enum class ProjectionMode { WeightedProjection, CosineProjection };
struct ProjParams {
    ProjectionMode mode = ProjectionMode::WeightedProjection;
    double xi = 0.5;
};
struct ProjectionResult {
    Matrix<IVNN> standardized;
    Weights weights;
    std::vector<IVNN> ideal;
    std::vector<double> proj_weighted, cosine, proj, rho;
    Ranking ranking;
    Trail trail;
};
ProjectionResult projection_rank_ivns(const DecisionProblem<IVNN>& p, ProjParams params = {});

struct HybridResult {
    std::vector<Matrix<double>> h_layers;
    Matrix<double> h_mean;
    std::vector<double> omega_corr;
    Weights dm_weights;
    Matrix<double> h_collective;
    Weights weights;
    std::vector<double> overall;
    Ranking ranking;
    Trail trail;
};
HybridResult hybrid_group_rank(const DecisionProblem<SVNN>& p, double alpha = 0.5);

enum class Normalization { Lstmm, Lstmmm, Lstsm, Vnm };
struct EntropyMadmResult {
    Matrix<double> normalized;
    Matrix<SVNN> svns;
    std::vector<double> entropy;
    Weights weights;
    std::vector<double> values;
    Ranking ranking;
    Trail trail;
};
EntropyMadmResult entropy_madm(const DecisionProblem<double>& p, Normalization norm);

enum class Zone { High, Tolerable, Unacceptable };
const char* zone_name(Zone z) noexcept;
struct ScreenResult {
    std::vector<double> scores;  // per attribute, input order
    std::vector<Zone> zones;
    Ranking ranking;             // attributes, best first
    Trail trail;
};
ScreenResult svnsf_screen(const DecisionProblem<SVNN>& p);

enum class AggregationOperator { Svwa, Svwg, Isvwag };
struct AggregateRankResult {
    std::vector<SVNN> aggregated;
    Ranking ranking;
};
AggregateRankResult aggregate_rank(const DecisionProblem<SVNN>& p, AggregationOperator op, ScoreVariant score_variant,
                                   double k = 2.0);

// Rough ideal from midpoints: benefit takes max t, min i, min f; cost the reverse.
std::vector<SVNN> rough_ideal(const DecisionProblem<RoughSVNN>& p);
struct RoughRankResult {
    std::vector<double> similarity;
    Ranking ranking;
};
RoughRankResult rough_trig_rank(const DecisionProblem<RoughSVNN>& p, const std::vector<SVNN>& ideal, RoughForm form);

}  // namespace neutro
