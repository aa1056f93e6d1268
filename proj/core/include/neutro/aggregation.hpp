#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

using Weights = std::vector<double>;

struct Bound {
    double lo = 0.0;
    double hi = 1.0;

    friend bool operator==(const Bound&, const Bound&) = default;
};
using WeightBounds = std::vector<Bound>;

double wam(const std::vector<double>& a, const Weights& w);
double wgm(const std::vector<double>& a, const Weights& w);
double iwagm(const std::vector<double>& a, const Weights& w);
double giwagm(const std::vector<double>& a, const Weights& w, double k);

SVNN isvwag(const std::vector<SVNN>& values, const Weights& w, double k = 2.0);

// Weighted geometric product of each component across decision makers.
SVNN refined_group_aggregate(const std::vector<SVNN>& cells, const Weights& gamma);

Weights crispify_dm_weights(const std::vector<SVNN>& w);

struct EntropyResult {
    std::vector<double> entropy;
    Weights weights;
};
// matrix[alternative][criterion]
EntropyResult entropy_weights(const std::vector<std::vector<SVNN>>& matrix);

// Column-wise sum of pairwise deviations, normalized. dist(a, b) is evaluated for every ordered pair.
template <class T>
Weights maximizing_deviation_weights(const std::vector<std::vector<T>>& matrix,
                                     const std::function<double(const T&, const T&)>& dist) {
    if (matrix.size() < 2) throw Error(ErrorKind::Parameter, "maximizing deviation needs at least two alternatives");
    const std::size_t m = matrix.front().size();
    for (const auto& row : matrix)
        if (row.size() != m) throw Error(ErrorKind::Dimension, "ragged decision matrix");
    Weights dev(m, 0.0);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < matrix.size(); ++i)
            for (std::size_t k = 0; k < matrix.size(); ++k) dev[j] += dist(matrix[i][j], matrix[k][j]);
    double total = 0.0;
    for (double d : dev) total += d;
    if (!(total > 0.0)) throw Error(ErrorKind::Degenerate, "all pairwise deviations are zero");
    for (double& d : dev) d /= total;
    return dev;
}

void check_bounds(const WeightBounds& b);

// Maximizes sum_j w_j c_j over the box-bounded simplex by greedy water-filling.
Weights lp_criteria_weights(const std::vector<double>& column_sums, const WeightBounds& bounds);
Weights lp_criteria_weights(const std::vector<std::vector<double>>& H, const WeightBounds& bounds);

// Brute-force optimum over all vertices of the bounded simplex; used as an oracle.
Weights lp_vertex_enumeration(const std::vector<double>& c, const WeightBounds& bounds);

}  // namespace neutro
