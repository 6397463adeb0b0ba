#include "sphnorm/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphnorm {

namespace {

bool nonnegative(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x >= 0; });
}

bool is_zero(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

i64 total(const IntVec& v)
{
    i64 s = 0;
    for (i64 x : v) s = checked_add(s, x);
    return s;
}

// degree ascending, then lexicographically descending
bool graded_less(const IntVec& x, const IntVec& y)
{
    i64 a = total(x), b = total(y);
    return a != b ? a < b : y < x;
}

// Adds C*b to v in place.
void add_columns(const SphericalSystem& sys, IntVec& v, const SigmaVector& b, i64 sign)
{
    for (std::size_t d = 0; d < v.size(); ++d)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) v[d] += sign * sys.pairing[d][j] * b[j];
}

}  // namespace

std::optional<SigmaVector> leq_sigma(const SphericalSystem& sys, const ColorVector& d, const ColorVector& e)
{
    std::size_t nd = sys.num_colors(), ns = sys.num_sigma();
    if (d.size() != nd || e.size() != nd) throw std::invalid_argument("color vector has wrong length");
    IntVec diff(nd);
    for (std::size_t k = 0; k < nd; ++k) diff[k] = checked_sub(e[k], d[k]);
    if (ns == 0) {
        if (is_zero(diff)) return SigmaVector{};
        return std::nullopt;
    }
    QVec x;
    if (!solve_unique(to_rational(sys.pairing), QVec(diff.begin(), diff.end()), x)) return std::nullopt;
    SigmaVector a(ns);
    for (std::size_t j = 0; j < ns; ++j) {
        if (!x[j].is_integer() || x[j].sign() < 0) return std::nullopt;
        a[j] = x[j].num();
    }
    return a;
}

ColorVector positive_part(const ColorVector& v)
{
    ColorVector p(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) p[k] = v[k] > 0 ? v[k] : 0;
    return p;
}

ColorVector negative_part(const ColorVector& v)
{
    ColorVector p(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) p[k] = v[k] < 0 ? -v[k] : 0;
    return p;
}

bool is_covering(const SphericalSystem& sys, const SigmaVector& gamma)
{
    if (is_zero(gamma)) return false;
    ColorVector minus = negative_part(sigma_to_colors(sys, gamma));
    std::size_t ns = gamma.size();
    // F = minus + C b with 0 < b < gamma; F in N Delta means F is strictly between minus and plus.
    auto intermediate = [&](const SigmaVector& b) {
        IntVec f = minus;
        add_columns(sys, f, b, 1);
        return nonnegative(f);
    };
    for (std::size_t j = 0; j < ns; ++j) {
        if (gamma[j] == 0) continue;
        SigmaVector b(ns, 0);
        b[j] = 1;
        if (b != gamma && intermediate(b)) return false;
        SigmaVector c = gamma;
        c[j] -= 1;
        if (!is_zero(c) && intermediate(c)) return false;
    }
    SigmaVector b(ns, 0);
    while (true) {
        std::size_t j = 0;
        while (j < ns && b[j] == gamma[j]) b[j++] = 0;
        if (j == ns) break;
        ++b[j];
        if (b != gamma && intermediate(b)) return false;
    }
    return true;
}

CoveringResult covering_differences(const SphericalSystem& sys, int search_bound)
{
    if (search_bound < 1) throw std::invalid_argument("search bound must be positive");
    CoveringResult res;
    res.bound = search_bound;
    std::size_t ns = sys.num_sigma();
    if (ns == 0) return res;
    SigmaVector g(ns, 0);
    while (true) {
        std::size_t j = 0;
        while (j < ns && g[j] == search_bound) g[j++] = 0;
        if (j == ns) break;
        ++g[j];
        if (is_covering(sys, g)) {
            ColorVector c = sigma_to_colors(sys, g);
            res.items.push_back({g, positive_part(c), negative_part(c)});
        }
    }
    std::sort(res.items.begin(), res.items.end(),
              [](const CoveringDifference& x, const CoveringDifference& y) { return graded_less(x.gamma, y.gamma); });
    return res;
}

LowTripleResult low_fundamental_triples(const SphericalSystem& sys, int search_bound)
{
    LowTripleResult res;
    for (const auto& cd : covering_differences(sys, search_bound).items) {
        i64 h = height(cd.plus);
        if (h != 2) {
            res.warnings.push_back("covering difference " + format_sigma_vector(sys, cd.gamma) + " has height(plus) = " +
                                   std::to_string(h));
            continue;
        }
        std::vector<int> parts;
        for (std::size_t d = 0; d < cd.plus.size(); ++d)
            for (i64 k = 0; k < cd.plus[d]; ++k) parts.push_back(static_cast<int>(d));
        res.items.push_back({parts[0], parts[1], cd.minus, cd.gamma});
    }
    return res;
}

MinusculeResult is_minuscule(const SphericalSystem& sys, const ColorVector& d)
{
    MinusculeResult res;
    if (d.size() != sys.num_colors()) throw std::invalid_argument("color vector has wrong length");
    if (!nonnegative(d)) throw std::invalid_argument("minuscule test needs an element of N Delta");
    if (sys.num_sigma() == 0) return res;
    FMSystem fm = sigma_box_system(sys);
    std::optional<SigmaVector> best;
    fm.enumerate(d, [&](const IntVec& a) {
        if (!is_zero(a) && (!best || graded_less(a, *best))) best = a;
        return true;
    });
    if (best) {
        res.minuscule = false;
        res.witness = *best;
        res.remainder = d;
        add_columns(sys, res.remainder, *best, -1);
    }
    return res;
}

}  // namespace sphnorm
