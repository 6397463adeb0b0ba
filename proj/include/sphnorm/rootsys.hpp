#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphnorm/rational.hpp"

namespace sphnorm {

struct SimpleType {
    char family = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const SimpleType&) const = default;
};

bool is_valid(const SimpleType& t);
// Parses "E6", "g2", "A1"; throws on anything else.
SimpleType parse_simple_type(const std::string& s);

using Root = IntVec;    // simple-root coordinates
using Weight = IntVec;  // fundamental-weight coordinates

class RootSystem {
public:
    explicit RootSystem(SimpleType type);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const IntMat& cartan() const { return cartan_; }  // cartan[i][j] = <alpha_i, alpha_j^vee>
    // (alpha_i, alpha_i) with short roots normalized to 2
    const IntVec& simple_norms() const { return norms_; }
    IntVec symmetrizer() const;

    std::size_t num_positive() const { return positive_.size(); }
    // index into positive_roots of +r or -r, or nullopt
    std::optional<std::size_t> positive_index(const Root& r) const;
    bool is_root(const Root& r) const;

    i64 inner(const Root& a, const Root& b) const;
    i64 norm(const Root& a) const { return inner(a, a); }
    i64 pairing(const Root& a, const Root& b) const;  // <a, b^vee>
    Root coroot(const Root& a) const;                  // b^vee in the simple-coroot basis
    Weight root_to_weight(const Root& a) const;
    QVec weight_to_root_coords(const Weight& w) const;
    Root reflect(const Root& a, const Root& b) const;  // s_a(b)

    const QMat& cartan_inverse() const { return cartan_inv_; }
    i64 cartan_determinant() const;

private:
    SimpleType type_;
    IntMat cartan_;
    IntVec norms_;
    std::vector<Root> positive_;
    std::map<Root, std::size_t> index_;
    QMat cartan_inv_;
};

Root highest_root(const RootSystem& rs);
i64 height(const Root& r);

// <w, a^vee>; throws if a is not a root.
i64 coroot_pairing(const RootSystem& rs, const Weight& w, const Root& a);

// Minimal m > 0 with m * omega_p^vee in the coroot lattice. p is 0-based.
// Throws if the coefficient of alpha_p in the highest root is not 1.
i64 hermitian_exponent(const RootSystem& rs, int p);

std::string root_label(const Root& r);

}  // namespace sphnorm
