#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sphnorm/rational.hpp"

namespace sphnorm {

// Parametric system A x <= B p over integer x, eliminated once by Fourier-Motzkin so that
// every coordinate gets exact bounds given the previous ones and the parameter vector p.
class FMSystem {
public:
    FMSystem(const IntMat& a, const IntMat& b);

    std::size_t num_vars() const { return nvars_; }
    std::size_t num_params() const { return nparams_; }

    bool feasible(const IntVec& p) const;
    std::optional<QVec> rational_point(const IntVec& p) const;

    // Visits integer points in lexicographic order; the visitor returns false to stop.
    // Throws if some coordinate is unbounded above.
    void enumerate(const IntVec& p, const std::function<bool(const IntVec&)>& visit) const;

private:
    struct Row {
        IntVec a;
        IntVec b;
        std::vector<bool> anc;
    };
    // bounds on x_k implied by level rows, given x_0..x_{k-1}
    bool bounds(std::size_t k, const IntVec& x, const IntVec& p, std::optional<Rational>& lo,
                std::optional<Rational>& hi) const;
    bool recurse(std::size_t k, IntVec& x, const IntVec& p, const std::function<bool(const IntVec&)>& visit) const;

    std::size_t nvars_, nparams_;
    std::vector<std::vector<Row>> levels_;  // levels_[k]: rows on x_0..x_k; levels_[nvars] unused
    std::vector<Row> ground_;              // rows with no variables left
};

}  // namespace sphnorm
