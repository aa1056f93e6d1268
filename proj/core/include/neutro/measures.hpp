#pragma once

#include <array>
#include <optional>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

enum class SvnhfForm {
    Generalized,
    Hamming,
    Euclidean,
    HausdorffGeneralized,
    HausdorffHamming,
    HausdorffEuclidean,
};

// SahinLiu: per-component averages with a 1/3 prefactor.
// BiswasL: one average over all t, i, f values of an element (length l = #t + #i + #f).
enum class SvnhfNormalization { SahinLiu, BiswasL };

struct DistanceSpec {
    SvnhfForm form = SvnhfForm::Hamming;
    double lambda = 1.0;
    // Either one element-weight vector, or a triple (omega for t, psi for i, phi for f).
    std::optional<std::vector<double>> weights;
    std::optional<std::array<std::vector<double>, 3>> triple;
    Attitude attitude = Attitude::Pessimistic;
    SvnhfNormalization normalization = SvnhfNormalization::SahinLiu;

    void check(std::size_t n) const;
};

enum class SimilarityForm { OneMinusDistance, SetTheoretic, MatchingFunction };

double svnhf_distance(const std::vector<SVNHFE>& a, const std::vector<SVNHFE>& b, const DistanceSpec& spec);
double svnhf_similarity(const std::vector<SVNHFE>& a, const std::vector<SVNHFE>& b, SimilarityForm form,
                        const DistanceSpec& spec = {});

enum class BnnDistanceForm { Hamming, NormalizedHamming, Euclidean, NormalizedEuclidean };
double bnn_distance(const std::vector<BNN>& a, const std::vector<BNN>& b, BnnDistanceForm form);

enum class IvnnDistanceForm { Hamming, Euclidean };
double ivnn_distance(const std::vector<IVNN>& a, const std::vector<IVNN>& b, IvnnDistanceForm form,
                     const std::optional<std::vector<double>>& w = std::nullopt);

enum class RoughForm { Cosine, Sine, Cotangent };
double rough_trig_similarity(const std::vector<RoughSVNN>& a, const std::vector<RoughSVNN>& b, RoughForm form,
                             const std::optional<std::vector<double>>& w = std::nullopt);

// Same kernels against a plain SVNN reference per element (the midpoint of a is used).
double rough_trig_similarity(const std::vector<RoughSVNN>& a, const std::vector<SVNN>& ref, RoughForm form,
                             const std::optional<std::vector<double>>& w = std::nullopt);

}  // namespace neutro
