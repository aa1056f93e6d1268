#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace neutro {

inline constexpr double kEps = 1e-9;

enum class ErrorKind {
    Parameter,
    Lookup,
    LengthMismatch,
    Dimension,
    Invalid,
    Degenerate,
    MissingWeights,
    Infeasible,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k) noexcept;

// x^y with 0^0 = 1 so a zero weight annihilates its factor.
double safe_pow(double x, double y) noexcept;

struct SVNN {
    double t = 0.0;
    double i = 0.0;
    double f = 0.0;

    bool valid() const noexcept;
    friend bool operator==(const SVNN&, const SVNN&) = default;
};

struct IVNN {
    double tL = 0.0, tU = 0.0;
    double iL = 0.0, iU = 0.0;
    double fL = 0.0, fU = 0.0;

    bool valid() const noexcept;
    std::array<double, 6> bounds() const noexcept { return {tL, tU, iL, iU, fL, fU}; }
    static IVNN from_bounds(const std::array<double, 6>& b) noexcept { return {b[0], b[1], b[2], b[3], b[4], b[5]}; }
    friend bool operator==(const IVNN&, const IVNN&) = default;
};

struct BNN {
    double tp = 0.0, ip = 0.0, fp = 0.0;
    double tn = 0.0, in = 0.0, fn = 0.0;

    bool valid() const noexcept;
    std::array<double, 6> parts() const noexcept { return {tp, ip, fp, tn, in, fn}; }
    static BNN from_parts(const std::array<double, 6>& p) noexcept { return {p[0], p[1], p[2], p[3], p[4], p[5]}; }
    friend bool operator==(const BNN&, const BNN&) = default;
};

// Hesitant element; components are kept sorted descending without duplicates.
class SVNHFE {
public:
    SVNHFE() : t_{0.0}, i_{0.0}, f_{0.0} {}
    SVNHFE(std::vector<double> t, std::vector<double> i, std::vector<double> f);

    const std::vector<double>& t() const noexcept { return t_; }
    const std::vector<double>& i() const noexcept { return i_; }
    const std::vector<double>& f() const noexcept { return f_; }
    const std::vector<double>& component(int c) const noexcept { return c == 0 ? t_ : (c == 1 ? i_ : f_); }

    bool valid() const noexcept;
    friend bool operator==(const SVNHFE&, const SVNHFE&) = default;

private:
    std::vector<double> t_, i_, f_;
};

struct RoughSVNN {
    SVNN lower;
    SVNN upper;

    bool valid() const noexcept;
    SVNN mid() const noexcept;
    friend bool operator==(const RoughSVNN&, const RoughSVNN&) = default;
};

using ScaleValue = std::variant<SVNN, IVNN>;

struct LinguisticScale {
    std::string name;
    std::vector<std::pair<std::string, ScaleValue>> entries;

    bool valid() const noexcept;
};

// Builtin scales: "ivnn9" (nine IVNN grades) and "svnn5" (five SVNN grades).
const LinguisticScale& builtin_scale(const std::string& name);
ScaleValue linguistic_to_value(const std::string& label, const LinguisticScale& scale);

// Throwing validators used at API boundaries.
void require_valid(const SVNN& a);
void require_valid(const IVNN& a);
void require_valid(const BNN& a);
void require_valid(const SVNHFE& a);
void require_valid(const RoughSVNN& a);
void require_weights(const std::vector<double>& w, std::size_t n);

// SVNN algebra.
SVNN complement(const SVNN& a) noexcept;
SVNN svnn_add(const SVNN& a, const SVNN& b) noexcept;
SVNN svnn_mul(const SVNN& a, const SVNN& b) noexcept;
SVNN svnn_power(const SVNN& a, double p) noexcept;
SVNN svnn_scale_clamped(double lambda, const SVNN& a) noexcept;
bool svnn_contained(const SVNN& a, const SVNN& b, double tol = kEps) noexcept;

enum class ScoreVariant { Liu, YeHybrid, Trig };
double score(const SVNN& a, ScoreVariant v, double alpha = 0.5);
double certainty(const SVNN& a);

// Hesitant score, accuracy, and the score-then-accuracy ordering.
double score(const SVNHFE& n) noexcept;
double accuracy(const SVNHFE& n) noexcept;
std::weak_ordering compare(const SVNHFE& a, const SVNHFE& b) noexcept;

enum class Attitude { Pessimistic, Optimistic };
using AlignedPair = std::pair<std::vector<double>, std::vector<double>>;
std::array<AlignedPair, 3> align(const SVNHFE& a, const SVNHFE& b, Attitude att = Attitude::Pessimistic);

// Bipolar algebra.
BNN bnn_scale(double w, const BNN& b);
BNN bnn_power(const BNN& b, double w);
BNN bnn_add(const BNN& a, const BNN& b) noexcept;
BNN bnn_mul(const BNN& a, const BNN& b) noexcept;

IVNN ivnn_complement(const IVNN& a) noexcept;

SVNN svnn_weighted_average(const std::vector<SVNN>& values, const std::vector<double>& w);
SVNN svnn_weighted_geometric(const std::vector<SVNN>& values, const std::vector<double>& w);

}  // namespace neutro
