#include "sphnorm/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sphnorm {

namespace {

i64 total(const IntVec& v)
{
    i64 s = 0;
    for (i64 x : v) s = checked_add(s, x);
    return s;
}

bool dominates(const IntVec& x, const IntVec& y)
{
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] < y[k]) return false;
    return true;
}

IntVec minus(const IntVec& x, const IntVec& y)
{
    IntVec r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] - y[k];
    return r;
}

// All compositions n in N^m with total exactly t.
void compositions(std::size_t m, i64 t, const std::function<void(const IntVec&)>& f)
{
    IntVec n(m, 0);
    std::function<void(std::size_t, i64)> rec = [&](std::size_t k, i64 left) {
        if (k + 1 == m) {
            n[k] = left;
            f(n);
            return;
        }
        for (i64 v = left; v >= 0; --v) {
            n[k] = v;
            rec(k + 1, left - v);
        }
    };
    if (m == 0) return;
    rec(0, t);
}

IntVec flat(const GradedElement& g)
{
    IntVec v = g.degrees;
    v.insert(v.end(), g.correction.begin(), g.correction.end());
    v.insert(v.end(), g.color.begin(), g.color.end());
    return v;
}

bool element_less(const GradedElement& x, const GradedElement& y)
{
    i64 a = total(x.degrees) + (x.degrees.empty() ? total(x.correction) : 0);
    i64 b = total(y.degrees) + (y.degrees.empty() ? total(y.correction) : 0);
    if (a != b) return a < b;
    return flat(y) < flat(x);
}

// Greedy Hilbert basis over elements sorted by grading; `reducible(x, g)` tests x - g in the semigroup.
std::vector<GradedElement> reduce(std::vector<GradedElement> elems,
                                  const std::function<bool(const GradedElement&, const GradedElement&)>& reducible)
{
    std::sort(elems.begin(), elems.end(), element_less);
    std::vector<GradedElement> gens;
    for (const auto& x : elems) {
        bool red = false;
        for (const auto& g : gens)
            if (!(g == x) && reducible(x, g)) {
                red = true;
                break;
            }
        if (!red) gens.push_back(x);
    }
    return gens;
}

struct Enumerated {
    std::vector<GradedElement> elems;
};

Enumerated enumerate_multi(const SphericalSystem& sys, const std::vector<ColorVector>& divisors, int bound,
                           const FMSystem& fm)
{
    Enumerated out;
    std::size_t m = divisors.size(), nd = sys.num_colors();
    for (i64 t = 1; t <= bound; ++t) {
        compositions(m, t, [&](const IntVec& n) {
            ColorVector v(nd, 0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t d = 0; d < nd; ++d) v[d] = checked_add(v[d], checked_mul(n[i], divisors[i][d]));
            auto visit = [&](const IntVec& a) {
                ColorVector c = sigma_to_colors(sys, a);
                ColorVector dvec(nd);
                for (std::size_t d = 0; d < nd; ++d) dvec[d] = v[d] - c[d];
                out.elems.push_back({n, dvec, a});
                return true;
            };
            if (sys.num_sigma() == 0) visit(IntVec{});
            else fm.enumerate(v, visit);
        });
    }
    return out;
}

std::vector<GradedElement> multi_generators(const SphericalSystem& sys, const std::vector<ColorVector>& divisors,
                                            int bound, const FMSystem& fm, std::size_t* count)
{
    auto en = enumerate_multi(sys, divisors, bound, fm);
    if (count) *count = en.elems.size();
    return reduce(std::move(en.elems), [](const GradedElement& x, const GradedElement& g) {
        return dominates(x.degrees, g.degrees) && dominates(x.correction, g.correction) && dominates(x.color, g.color);
    });
}

// Number of monomials in the generators with total degree <= bound.
std::size_t monomial_count(const std::vector<i64>& degs, int bound)
{
    std::vector<std::size_t> ways(static_cast<std::size_t>(bound) + 1, 0);
    ways[0] = 1;
    for (i64 d : degs) {
        if (d <= 0) return 0;
        for (i64 t = d; t <= bound; ++t) ways[t] += ways[t - d];
    }
    std::size_t s = 0;
    for (int t = 1; t <= bound; ++t) s += ways[t];
    return s;
}

void mark_free(SemigroupDescription& desc, int bound)
{
    IntMat rows;
    std::vector<i64> degs;
    for (const auto& g : desc.generators) {
        IntVec r = g.degrees;
        r.insert(r.end(), g.correction.begin(), g.correction.end());
        rows.push_back(r);
        degs.push_back(g.degrees.empty() ? total(g.correction) : total(g.degrees));
    }
    bool independent = rows.empty() || rank(rows) == rows.size();
    desc.free = independent && monomial_count(degs, bound) == desc.element_count;
}

}  // namespace

SemigroupDescription gamma_multi(const SphericalSystem& sys, const std::vector<ColorVector>& divisors, int degree_bound,
                                 bool check_stability)
{
    if (divisors.empty()) throw std::invalid_argument("at least one divisor is required");
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be positive");
    for (const auto& d : divisors) {
        if (d.size() != sys.num_colors()) throw std::invalid_argument("divisor has wrong length");
        for (i64 c : d)
            if (c < 0) throw std::invalid_argument("divisor must lie in N Delta");
    }
    FMSystem fm = sigma_box_system(sys);
    SemigroupDescription desc;
    desc.degree_bound_used = degree_bound;
    desc.generators = multi_generators(sys, divisors, degree_bound, fm, &desc.element_count);
    if (check_stability) desc.stable = multi_generators(sys, divisors, 2 * degree_bound, fm, nullptr) == desc.generators;
    mark_free(desc, degree_bound);
    return desc;
}

SemigroupDescription gamma_single(const SphericalSystem& sys, const ColorVector& dp, int degree_bound,
                                  bool check_stability)
{
    Weight w = omega(sys, dp);
    if (std::all_of(w.begin(), w.end(), [](i64 x) { return x == 0; }))
        throw std::invalid_argument("divisor " + format_color_vector(sys, dp) + " has zero omega-image");
    return gamma_multi(sys, {dp}, degree_bound, check_stability);
}

bool in_gamma_sigma(const SphericalSystem& sys, const std::vector<int>& allowed, const SigmaVector& gamma)
{
    for (i64 a : gamma)
        if (a < 0) return false;
    ColorVector c = sigma_to_colors(sys, gamma);
    for (std::size_t d = 0; d < c.size(); ++d)
        if (c[d] > 0 && std::find(allowed.begin(), allowed.end(), static_cast<int>(d)) == allowed.end()) return false;
    return true;
}

namespace {

std::vector<GradedElement> sigma_generators(const SphericalSystem& sys, const std::vector<int>& allowed, int bound,
                                            std::size_t* count)
{
    std::size_t ns = sys.num_sigma();
    std::vector<GradedElement> elems;
    for (i64 t = 1; t <= bound; ++t)
        compositions(ns, t, [&](const IntVec& g) {
            if (in_gamma_sigma(sys, allowed, g)) elems.push_back({{}, sigma_to_colors(sys, g), g});
        });
    if (count) *count = elems.size();
    return reduce(std::move(elems), [&](const GradedElement& x, const GradedElement& g) {
        return in_gamma_sigma(sys, allowed, minus(x.correction, g.correction));
    });
}

}  // namespace

SemigroupDescription gamma_sigma(const SphericalSystem& sys, const std::vector<int>& allowed, int degree_bound,
                                 bool check_stability)
{
    if (allowed.empty()) throw std::invalid_argument("allowed color set must be nonempty");
    for (int d : allowed)
        if (d < 0 || static_cast<std::size_t>(d) >= sys.num_colors()) throw std::invalid_argument("unknown color index");
    SemigroupDescription desc;
    desc.degree_bound_used = degree_bound;
    desc.generators = sigma_generators(sys, allowed, degree_bound, &desc.element_count);
    if (check_stability) desc.stable = sigma_generators(sys, allowed, 2 * degree_bound, nullptr) == desc.generators;
    mark_free(desc, degree_bound);
    return desc;
}

bool generators_minimal(const SemigroupDescription& desc)
{
    std::vector<IntVec> gens;
    for (const auto& g : desc.generators) gens.push_back(flat(g));
    for (std::size_t skip = 0; skip < gens.size(); ++skip) {
        std::set<IntVec> dead;
        std::function<bool(const IntVec&)> reach = [&](const IntVec& x) {
            if (std::all_of(x.begin(), x.end(), [](i64 v) { return v == 0; })) return true;
            if (dead.count(x)) return false;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                if (k == skip || !dominates(x, gens[k])) continue;
                if (reach(minus(x, gens[k]))) return true;
            }
            dead.insert(x);
            return false;
        };
        if (reach(gens[skip])) return false;
    }
    return true;
}

std::vector<WeightGenerator> weight_semigroup(const SphericalSystem& sys, const std::vector<ColorVector>& divisors,
                                              const std::vector<Weight>& lambda_star, const std::vector<i64>& charges,
                                              const SemigroupDescription& gamma)
{
    if (lambda_star.size() != divisors.size())
        throw std::invalid_argument("catalog gap: highest weights of p* are missing for some divisors");
    std::size_t nw = sys.simple_roots.size(), nd = sys.num_colors();
    std::vector<WeightGenerator> out;
    for (const auto& g : gamma.generators) {
        if (g.degrees.size() != divisors.size()) throw std::invalid_argument("generator grading does not match divisors");
        Weight w(nw, 0);
        ColorVector corr(nd, 0);
        i64 charge = 0;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (lambda_star[i].size() != nw) throw std::invalid_argument("highest weight has wrong length");
            for (std::size_t k = 0; k < nw; ++k) w[k] += g.degrees[i] * lambda_star[i][k];
            for (std::size_t d = 0; d < nd; ++d) corr[d] += g.degrees[i] * divisors[i][d];
            if (i < charges.size()) charge += g.degrees[i] * charges[i];
        }
        for (std::size_t d = 0; d < nd; ++d) corr[d] -= g.color[d];
        Weight o = omega(sys, corr);
        for (std::size_t k = 0; k < nw; ++k) w[k] -= o[k];
        bool dup = std::any_of(out.begin(), out.end(),
                               [&](const WeightGenerator& x) { return x.weight == w && x.charge == charge; });
        if (!dup) out.push_back({w, charge, g});
    }
    return out;
}

NormalityVerdict normality(const SphericalSystem& sys, const std::vector<ColorVector>& divisors)
{
    NormalityVerdict v;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        auto r = is_minuscule(sys, divisors[i]);
        if (!r.minuscule) {
            v.normal = false;
            v.witnesses.emplace_back(i, r);
        }
    }
    return v;
}

}  // namespace sphnorm
