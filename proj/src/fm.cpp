#include "sphnorm/fm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sphnorm {

namespace {

i64 row_gcd(const IntVec& a, const IntVec& b)
{
    i64 g = 0;
    for (i64 v : a) g = std::gcd(g, v < 0 ? -v : v);
    for (i64 v : b) g = std::gcd(g, v < 0 ? -v : v);
    return g;
}

bool all_zero(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

std::size_t popcount(const std::vector<bool>& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

Rational rhs_value(const IntVec& b, const IntVec& p)
{
    i64 s = 0;
    for (std::size_t k = 0; k < b.size(); ++k) s = checked_add(s, checked_mul(b[k], p[k]));
    return Rational(s);
}

}  // namespace

FMSystem::FMSystem(const IntMat& a, const IntMat& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("constraint and parameter matrices differ in row count");
    nvars_ = a.empty() ? 0 : a[0].size();
    nparams_ = b.empty() ? 0 : b[0].size();
    std::vector<Row> current;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != nvars_ || b[i].size() != nparams_) throw std::invalid_argument("ragged constraint matrix");
        Row r{a[i], b[i], std::vector<bool>(a.size(), false)};
        r.anc[i] = true;
        current.push_back(std::move(r));
    }
    levels_.assign(nvars_, {});
    for (std::size_t step = 0; step < nvars_; ++step) {
        std::size_t k = nvars_ - 1 - step;
        std::vector<Row> pos, neg;
        std::map<std::pair<IntVec, IntVec>, std::size_t> seen;
        std::vector<Row> next;
        auto push = [&](Row r) {
            i64 g = row_gcd(r.a, r.b);
            if (g > 1) {
                for (auto& v : r.a) v /= g;
                for (auto& v : r.b) v /= g;
            }
            if (all_zero(r.a) && all_zero(r.b)) return;
            auto key = std::make_pair(r.a, r.b);
            auto it = seen.find(key);
            if (it != seen.end()) {
                if (popcount(r.anc) < popcount(next[it->second].anc)) next[it->second].anc = r.anc;
                return;
            }
            seen[key] = next.size();
            next.push_back(std::move(r));
        };
        for (auto& r : current) {
            if (r.a[k] > 0) pos.push_back(r);
            else if (r.a[k] < 0) neg.push_back(r);
            else push(r);
        }
        levels_[k] = pos;
        levels_[k].insert(levels_[k].end(), neg.begin(), neg.end());
        std::size_t eliminated = step + 1;
        for (const auto& rp : pos) {
            for (const auto& rn : neg) {
                std::vector<bool> anc(rp.anc.size());
                for (std::size_t t = 0; t < anc.size(); ++t) anc[t] = rp.anc[t] || rn.anc[t];
                if (popcount(anc) > eliminated + 1) continue;  // Chernikov redundancy
                i64 cp = -rn.a[k], cn = rp.a[k];
                Row r{IntVec(nvars_), IntVec(nparams_), std::move(anc)};
                for (std::size_t j = 0; j < nvars_; ++j)
                    r.a[j] = checked_add(checked_mul(cp, rp.a[j]), checked_mul(cn, rn.a[j]));
                for (std::size_t j = 0; j < nparams_; ++j)
                    r.b[j] = checked_add(checked_mul(cp, rp.b[j]), checked_mul(cn, rn.b[j]));
                push(std::move(r));
            }
        }
        current = std::move(next);
    }
    ground_ = std::move(current);
}

bool FMSystem::bounds(std::size_t k, const IntVec& x, const IntVec& p, std::optional<Rational>& lo,
                      std::optional<Rational>& hi) const
{
    lo.reset();
    hi.reset();
    for (const auto& r : levels_[k]) {
        Rational rhs = rhs_value(r.b, p);
        for (std::size_t j = 0; j < k; ++j)
            if (r.a[j] != 0) rhs -= Rational(checked_mul(r.a[j], x[j]));
        Rational v = rhs / Rational(r.a[k]);
        if (r.a[k] > 0) {
            if (!hi || v < *hi) hi = v;
        } else {
            if (!lo || *lo < v) lo = v;
        }
    }
    return !(lo && hi && *hi < *lo);
}

bool FMSystem::feasible(const IntVec& p) const
{
    if (p.size() != nparams_) throw std::invalid_argument("parameter vector has wrong length");
    for (const auto& r : ground_)
        if (rhs_value(r.b, p).sign() < 0) return false;
    return true;
}

std::optional<QVec> FMSystem::rational_point(const IntVec& p) const
{
    if (!feasible(p)) return std::nullopt;
    // Rational back-substitution; the projections are exact so no step can fail.
    QVec x(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) {
        std::optional<Rational> lo, hi;
        Rational pick(0);
        auto eval = [&](const Row& r) {
            Rational rhs = rhs_value(r.b, p);
            for (std::size_t j = 0; j < k; ++j) rhs -= Rational(r.a[j]) * x[j];
            return rhs / Rational(r.a[k]);
        };
        for (const auto& r : levels_[k]) {
            Rational v = eval(r);
            if (r.a[k] > 0) {
                if (!hi || v < *hi) hi = v;
            } else if (!lo || *lo < v) {
                lo = v;
            }
        }
        if (lo) pick = *lo;
        else if (hi) pick = *hi;
        if (lo && hi && *hi < *lo) throw std::logic_error("inconsistent projection");
        x[k] = pick;
    }
    return x;
}

bool FMSystem::recurse(std::size_t k, IntVec& x, const IntVec& p,
                       const std::function<bool(const IntVec&)>& visit) const
{
    if (k == nvars_) return visit(x);
    std::optional<Rational> lo, hi;
    if (!bounds(k, x, p, lo, hi)) return true;
    if (!lo || !hi) throw std::runtime_error("enumeration region is unbounded in coordinate " + std::to_string(k));
    for (i64 v = lo->ceil(); v <= hi->floor(); ++v) {
        x[k] = v;
        if (!recurse(k + 1, x, p, visit)) return false;
    }
    x[k] = 0;
    return true;
}

void FMSystem::enumerate(const IntVec& p, const std::function<bool(const IntVec&)>& visit) const
{
    if (!feasible(p)) return;
    IntVec x(nvars_, 0);
    recurse(0, x, p, visit);
}

}  // namespace sphnorm
