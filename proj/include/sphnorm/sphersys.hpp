#pragma once

#include <string>
#include <vector>

#include "sphnorm/fm.hpp"
#include "sphnorm/rootsys.hpp"

namespace sphnorm {

using ColorVector = IntVec;
using SigmaVector = IntVec;

// Simple roots are indexed globally across the factors of K; labels are "a1".."an" for the first
// factor, "b1".. for the second and so on. Weights use the matching fundamental-weight basis.
struct SphericalSystem {
    std::string name;
    std::vector<SimpleType> ambient;
    std::vector<std::string> simple_roots;
    IntMat cartan;  // block diagonal over the factors
    std::vector<bool> sp;
    std::vector<std::string> sigma_names;
    IntMat sigma_roots;  // sigma_roots[j]: coefficients of sigma_j over simple_roots
    std::vector<std::string> colors;
    IntMat pairing;  // pairing[d][j] = c(D_d, sigma_j)
    std::vector<std::vector<int>> incidence;  // simple-root indices alpha with D in Delta(alpha)

    std::size_t num_colors() const { return colors.size(); }
    std::size_t num_sigma() const { return sigma_names.size(); }
    int color_index(const std::string& label) const;
    int simple_root_index(const std::string& label) const;
};

// Builds the labels and the block Cartan matrix for the given factors.
SphericalSystem make_system_frame(const std::vector<SimpleType>& ambient);
std::vector<std::string> simple_root_labels(const std::vector<SimpleType>& ambient);

struct Diagnostic {
    std::string check;
    bool ok = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<Diagnostic> checks;
    bool ok() const;
};

ValidationReport validate(const SphericalSystem& sys);

// Multiplicity of alpha in omega(D): 2 when 2*alpha is a spherical root, 1 otherwise.
i64 omega_multiplicity(const SphericalSystem& sys, int alpha);
Weight omega(const SphericalSystem& sys, const ColorVector& v);
Weight sigma_weight(const SphericalSystem& sys, std::size_t j);

std::vector<int> positive_colors(const SphericalSystem& sys);
SphericalSystem quotient_by_positive_color(const SphericalSystem& sys, int color);
SphericalSystem localization(const SphericalSystem& sys, const std::vector<int>& roots);
SphericalSystem localization(const SphericalSystem& sys);  // on the support of the spherical roots
std::vector<int> sigma_support(const SphericalSystem& sys);

// Lattice helpers shared by the order and semigroup layers.
ColorVector sigma_to_colors(const SphericalSystem& sys, const SigmaVector& a);

// {a in N^Sigma : C a <= v}, parametrised by v; valid only on strictly positive systems.
FMSystem sigma_box_system(const SphericalSystem& sys);

std::string format_color_vector(const SphericalSystem& sys, const ColorVector& v);
std::string format_sigma_vector(const SphericalSystem& sys, const SigmaVector& a);
std::string format_weight(const SphericalSystem& sys, const Weight& w);

}  // namespace sphnorm
