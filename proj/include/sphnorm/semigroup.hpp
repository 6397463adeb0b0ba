#pragma once

#include <optional>
#include <vector>

#include "sphnorm/poset.hpp"

namespace sphnorm {

// (n_1..n_M, D) with D = sum n_i D_pi - C a; `correction` is a. For the sigma variant degrees is
// empty, `color` is the color expression of a and `correction` is a itself.
struct GradedElement {
    IntVec degrees;
    ColorVector color;
    SigmaVector correction;
    bool operator==(const GradedElement&) const = default;
};

struct SemigroupDescription {
    std::vector<GradedElement> generators;
    bool free = false;
    int degree_bound_used = 0;
    bool stable = false;  // generator set unchanged at twice the bound
    std::size_t element_count = 0;
};

SemigroupDescription gamma_multi(const SphericalSystem& sys, const std::vector<ColorVector>& divisors,
                                 int degree_bound = 8, bool check_stability = true);
SemigroupDescription gamma_single(const SphericalSystem& sys, const ColorVector& dp, int degree_bound = 8,
                                  bool check_stability = true);

bool in_gamma_sigma(const SphericalSystem& sys, const std::vector<int>& allowed, const SigmaVector& gamma);
SemigroupDescription gamma_sigma(const SphericalSystem& sys, const std::vector<int>& allowed, int degree_bound = 8,
                                 bool check_stability = true);

// Removing any generator leaves it outside the monoid spanned by the rest.
bool generators_minimal(const SemigroupDescription& desc);

struct WeightGenerator {
    Weight weight;
    i64 charge = 0;  // central character, sum n_i chi_i
    GradedElement source;
};

std::vector<WeightGenerator> weight_semigroup(const SphericalSystem& sys, const std::vector<ColorVector>& divisors,
                                              const std::vector<Weight>& lambda_star, const std::vector<i64>& charges,
                                              const SemigroupDescription& gamma);

struct NormalityVerdict {
    bool normal = true;
    std::vector<std::pair<std::size_t, MinusculeResult>> witnesses;  // failing divisor index
};

NormalityVerdict normality(const SphericalSystem& sys, const std::vector<ColorVector>& divisors);

}  // namespace sphnorm
