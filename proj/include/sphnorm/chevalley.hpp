#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sphnorm/rootsys.hpp"

namespace sphnorm {

// Basis order: h_1..h_n (simple coroots), x_a for a in R+, y_a for a in R+.
class ChevalleyAlgebra {
public:
    using Sparse = std::vector<std::pair<int, i64>>;

    explicit ChevalleyAlgebra(RootSystem rs);

    const RootSystem& root_system() const { return rs_; }
    int dim() const { return dim_; }
    int rank() const { return rs_.rank(); }

    int h_index(int i) const { return i; }
    int x_index(std::size_t k) const { return rank() + static_cast<int>(k); }
    int y_index(std::size_t k) const { return rank() + static_cast<int>(rs_.num_positive() + k); }
    std::string basis_label(int b) const;

    // N_{a,b} for roots a, b with a+b a root; 0 if a+b is not a root.
    i64 structure_constant(const Root& a, const Root& b) const;
    const Sparse& bracket_basis(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }

private:
    i64 special(std::size_t i, std::size_t j) const;
    i64 nval(const Root& a, const Root& b) const;
    void build_constants();
    void build_table();
    Root root_of(int b) const;  // root of a basis vector (zero for Cartan)

    RootSystem rs_;
    int dim_;
    std::map<std::pair<std::size_t, std::size_t>, i64> special_;
    std::vector<Sparse> table_;
};

using AlgebraElement = QVec;

AlgebraElement zero_element(const ChevalleyAlgebra& alg);
AlgebraElement basis_element(const ChevalleyAlgebra& alg, int b);
AlgebraElement x_root(const ChevalleyAlgebra& alg, const Root& a);  // e_a for a positive or negative
AlgebraElement h_root(const ChevalleyAlgebra& alg, const Root& a);  // h_a = [e_a, e_-a]

AlgebraElement bracket(const ChevalleyAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);

struct NormalTriple {
    std::string case_id;
    AlgebraElement e, h, f;
};

struct TripleReport {
    bool sl2_ok = false;
    bool cartan_ok = false;
    std::vector<std::string> failures;
};

TripleReport verify_triple(const ChevalleyAlgebra& alg, const NormalTriple& t);

struct Grading {
    std::map<i64, int> dims;
    i64 height = 0;
};

// Eigenspace dimensions of ad(h); h must lie in the Cartan span with integral eigenvalues.
Grading ad_grading(const ChevalleyAlgebra& alg, const AlgebraElement& h);

int centralizer_dim(const ChevalleyAlgebra& alg, const AlgebraElement& x);

// Parses sums like "x_101111 - y_001100 + 2*h_a1 + h_122321".
// x_L / y_L: root vectors of the root with digit label L; h_L: coroot of L; h_ak: simple coroot k.
AlgebraElement parse_element(const ChevalleyAlgebra& alg, const std::string& text);
std::string format_element(const ChevalleyAlgebra& alg, const AlgebraElement& x);

struct JacobiResult {
    std::size_t checked = 0;
    std::size_t failures = 0;
};
JacobiResult check_jacobi_exhaustive(const ChevalleyAlgebra& alg);
JacobiResult check_jacobi_random(const ChevalleyAlgebra& alg, std::size_t samples, unsigned seed);

}  // namespace sphnorm
