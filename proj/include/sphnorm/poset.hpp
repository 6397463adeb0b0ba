#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphnorm/sphersys.hpp"

namespace sphnorm {

// E - D as a nonnegative integer combination of spherical roots, if any.
std::optional<SigmaVector> leq_sigma(const SphericalSystem& sys, const ColorVector& d, const ColorVector& e);


ColorVector positive_part(const ColorVector& v);
ColorVector negative_part(const ColorVector& v);  // returned with nonnegative entries

struct CoveringDifference {
    SigmaVector gamma;
    ColorVector plus;
    ColorVector minus;
};

// True iff no F in N Delta satisfies minus <_Sigma F <_Sigma plus.
bool is_covering(const SphericalSystem& sys, const SigmaVector& gamma);

struct CoveringResult {
    std::vector<CoveringDifference> items;
    int bound = 0;
};

// Sorted by total degree, then lexicographically descending.
CoveringResult covering_differences(const SphericalSystem& sys, int search_bound = 8);

struct LowTriple {
    int d = 0;
    int e = 0;  // d <= e
    ColorVector f;
    SigmaVector gamma;
};

struct LowTripleResult {
    std::vector<LowTriple> items;
    std::vector<std::string> warnings;
};

LowTripleResult low_fundamental_triples(const SphericalSystem& sys, int search_bound = 8);

struct MinusculeResult {
    bool minuscule = true;
    SigmaVector witness;  // smallest gamma by (degree, lex) when not minuscule
    ColorVector remainder;
};

MinusculeResult is_minuscule(const SphericalSystem& sys, const ColorVector& d);

}  // namespace sphnorm
