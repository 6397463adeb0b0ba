#include "sphnorm/chevalley.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

namespace sphnorm {

namespace {

Root negate(const Root& r)
{
    Root n(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) n[i] = -r[i];
    return n;
}

Root add(const Root& a, const Root& b)
{
    Root s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

bool is_positive(const Root& r)
{
    for (i64 c : r)
        if (c != 0) return c > 0;
    return false;
}

bool is_zero(const Root& r)
{
    for (i64 c : r)
        if (c != 0) return false;
    return true;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs)
    : rs_(std::move(rs)), dim_(rs_.rank() + 2 * static_cast<int>(rs_.num_positive()))
{
    build_constants();
    build_table();
}

i64 ChevalleyAlgebra::special(std::size_t i, std::size_t j) const
{
    auto it = special_.find({i, j});
    if (it == special_.end()) throw std::logic_error("special pair requested before it was computed");
    return it->second;
}

i64 ChevalleyAlgebra::nval(const Root& a, const Root& b) const
{
    Root s = add(a, b);
    if (is_zero(s) || !rs_.is_root(s)) return 0;
    bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) {
        std::size_t ia = *rs_.positive_index(a), ib = *rs_.positive_index(b);
        return ia < ib ? special(ia, ib) : -special(ib, ia);
    }
    if (!pa && !pb) return -nval(negate(a), negate(b));
    // a + b + c = 0: N_ab/(c,c) = N_bc/(a,a) = N_ca/(b,b)
    Root c = negate(s);
    bool pc = is_positive(c);
    i64 cc = rs_.norm(c);
    i64 num;
    i64 den;
    if (pb == pc) {
        num = nval(b, c) * cc;
        den = rs_.norm(a);
    } else {
        num = nval(c, a) * cc;
        den = rs_.norm(b);
    }
    if (num % den != 0) throw std::logic_error("non-integral structure constant");
    return num / den;
}

void ChevalleyAlgebra::build_constants()
{
    const auto& pos = rs_.positive_roots();
    std::size_t np = pos.size();
    // special pairs grouped by the index of their sum; sums are processed in height order
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_sum(np);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i + 1; j < np; ++j) {
            Root s = add(pos[i], pos[j]);
            auto k = rs_.positive_index(s);
            if (k && is_positive(s)) by_sum[*k].push_back({i, j});
        }
    for (std::size_t k = 0; k < np; ++k) {
        auto& pairs = by_sum[k];
        if (pairs.empty()) continue;
        std::sort(pairs.begin(), pairs.end());
        const Root& xi = pos[k];
        auto [g, d] = pairs.front();  // extraspecial
        const Root& gam = pos[g];
        const Root& del = pos[d];
        i64 p = 0;
        while (true) {
            Root down(del.size());
            for (std::size_t t = 0; t < del.size(); ++t) down[t] = del[t] - (p + 1) * gam[t];
            if (!rs_.is_root(down)) break;
            ++p;
        }
        i64 ngd = p + 1;
        special_[{g, d}] = ngd;
        i64 xixi = rs_.norm(xi);
        for (std::size_t t = 1; t < pairs.size(); ++t) {
            auto [ia, ib] = pairs[t];
            const Root& al = pos[ia];
            const Root& be = pos[ib];
            // N_ab = (xi,xi)/N_gd * [N_{b,-g} N_{a,-d}/|b-g|^2 + N_{-g,a} N_{b,-d}/|a-g|^2]
            Rational acc(0);
            Root bg = add(be, negate(gam));
            if (!is_zero(bg) && rs_.is_root(bg))
                acc += Rational(nval(be, negate(gam)) * nval(al, negate(del)), rs_.norm(bg));
            Root ag = add(al, negate(gam));
            if (!is_zero(ag) && rs_.is_root(ag))
                acc += Rational(nval(negate(gam), al) * nval(be, negate(del)), rs_.norm(ag));
            Rational v = acc * Rational(xixi, ngd);
            if (!v.is_integer()) throw std::logic_error("non-integral structure constant");
            special_[{ia, ib}] = v.num();
        }
    }
}

i64 ChevalleyAlgebra::structure_constant(const Root& a, const Root& b) const { return nval(a, b); }

Root ChevalleyAlgebra::root_of(int b) const
{
    int n = rank();
    std::size_t np = rs_.num_positive();
    if (b < n) return Root(n, 0);
    std::size_t k = static_cast<std::size_t>(b - n);
    if (k < np) return rs_.positive_roots()[k];
    return negate(rs_.positive_roots()[k - np]);
}

namespace {

int element_index(const RootSystem& rs, int n, const Root& r)
{
    auto k = rs.positive_index(r);
    if (!k) return -1;
    return is_positive(r) ? n + static_cast<int>(*k) : n + static_cast<int>(rs.num_positive() + *k);
}

}  // namespace

void ChevalleyAlgebra::build_table()
{
    int n = rank();
    table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Sparse out;
            Root ri = root_of(i), rj = root_of(j);
            bool ci = i < n, cj = j < n;
            if (ci && cj) {
            } else if (ci) {
                // [h_i, e_b] = <b, alpha_i^vee> e_b
                i64 v = 0;
                for (int t = 0; t < n; ++t) v += rj[t] * rs_.cartan()[t][i];
                if (v != 0) out.push_back({j, v});
            } else if (cj) {
                i64 v = 0;
                for (int t = 0; t < n; ++t) v += ri[t] * rs_.cartan()[t][j];
                if (v != 0) out.push_back({i, -v});
            } else {
                Root s = add(ri, rj);
                if (is_zero(s)) {
                    // [e_a, e_-a] = h_a
                    Root co = rs_.coroot(ri);
                    for (int t = 0; t < n; ++t)
                        if (co[t] != 0) out.push_back({t, co[t]});
                } else if (rs_.is_root(s)) {
                    out.push_back({element_index(rs_, n, s), nval(ri, rj)});
                }
            }
            table_[static_cast<std::size_t>(i) * dim_ + j] = std::move(out);
        }
}

std::string ChevalleyAlgebra::basis_label(int b) const
{
    int n = rank();
    if (b < n) return "h_a" + std::to_string(b + 1);
    std::size_t k = static_cast<std::size_t>(b - n);
    std::size_t np = rs_.num_positive();
    if (k < np) return "x_" + root_label(rs_.positive_roots()[k]);
    return "y_" + root_label(rs_.positive_roots()[k - np]);
}

AlgebraElement zero_element(const ChevalleyAlgebra& alg) { return AlgebraElement(alg.dim(), Rational(0)); }

AlgebraElement basis_element(const ChevalleyAlgebra& alg, int b)
{
    AlgebraElement x = zero_element(alg);
    x.at(b) = 1;
    return x;
}

AlgebraElement x_root(const ChevalleyAlgebra& alg, const Root& a)
{
    int b = element_index(alg.root_system(), alg.rank(), a);
    if (b < 0) throw std::invalid_argument("not a root: " + root_label(a));
    return basis_element(alg, b);
}

AlgebraElement h_root(const ChevalleyAlgebra& alg, const Root& a)
{
    if (!alg.root_system().is_root(a)) throw std::invalid_argument("not a root: " + root_label(a));
    Root co = alg.root_system().coroot(a);
    AlgebraElement x = zero_element(alg);
    for (int t = 0; t < alg.rank(); ++t) x[t] = co[t];
    return x;
}

AlgebraElement bracket(const ChevalleyAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y)
{
    if (static_cast<int>(x.size()) != alg.dim() || static_cast<int>(y.size()) != alg.dim())
        throw std::invalid_argument("dimension mismatch in bracket");
    AlgebraElement out = zero_element(alg);
    std::vector<int> nx, ny;
    for (int i = 0; i < alg.dim(); ++i) {
        if (!x[i].is_zero()) nx.push_back(i);
        if (!y[i].is_zero()) ny.push_back(i);
    }
    for (int i : nx)
        for (int j : ny) {
            const auto& s = alg.bracket_basis(i, j);
            if (s.empty()) continue;
            Rational c = x[i] * y[j];
            for (const auto& [k, v] : s) out[k] += c * Rational(v);
        }
    return out;
}

TripleReport verify_triple(const ChevalleyAlgebra& alg, const NormalTriple& t)
{
    TripleReport r;
    auto scaled = [](AlgebraElement v, i64 k) {
        for (auto& q : v) q *= Rational(k);
        return v;
    };
    bool ef = bracket(alg, t.e, t.f) == t.h;
    bool he = bracket(alg, t.h, t.e) == scaled(t.e, 2);
    bool hf = bracket(alg, t.h, t.f) == scaled(t.f, -2);
    if (!ef) r.failures.push_back("[e,f] != h");
    if (!he) r.failures.push_back("[h,e] != 2e");
    if (!hf) r.failures.push_back("[h,f] != -2f");
    r.sl2_ok = ef && he && hf;
    r.cartan_ok = true;
    for (int i = alg.rank(); i < alg.dim(); ++i)
        if (!t.h[i].is_zero()) r.cartan_ok = false;
    if (!r.cartan_ok) r.failures.push_back("h has root-vector components");
    return r;
}

Grading ad_grading(const ChevalleyAlgebra& alg, const AlgebraElement& h)
{
    int n = alg.rank();
    for (int i = n; i < alg.dim(); ++i)
        if (!h[i].is_zero()) throw std::invalid_argument("h is not in the Cartan subalgebra");
    Grading g;
    g.dims[0] += n;
    const auto& rs = alg.root_system();
    for (const auto& a : rs.positive_roots()) {
        Rational v(0);
        for (int i = 0; i < n; ++i) {
            i64 p = 0;
            for (int t = 0; t < n; ++t) p += a[t] * rs.cartan()[t][i];
            v += h[i] * Rational(p);
        }
        if (!v.is_integer()) throw std::invalid_argument("ad(h) has a non-integer eigenvalue " + v.str());
        g.dims[v.num()] += 1;
        g.dims[-v.num()] += 1;
    }
    for (const auto& [k, d] : g.dims)
        if (d > 0 && k > g.height) g.height = k;
    return g;
}

int centralizer_dim(const ChevalleyAlgebra& alg, const AlgebraElement& x)
{
    int d = alg.dim();
    QMat m(d, QVec(d, Rational(0)));
    for (int j = 0; j < d; ++j) {
        AlgebraElement col = bracket(alg, x, basis_element(alg, j));
        for (int i = 0; i < d; ++i) m[i][j] = col[i];
    }
    return d - static_cast<int>(rank(std::move(m)));
}

AlgebraElement parse_element(const ChevalleyAlgebra& alg, const std::string& text)
{
    const auto& rs = alg.root_system();
    AlgebraElement out = zero_element(alg);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("cannot parse element '" + text + "' at " + std::to_string(pos) + ": " + why);
    };
    bool first = true;
    skip();
    if (pos == text.size()) return out;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        i64 sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        i64 coef = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            coef = std::stoll(text.substr(start, pos - start));
            skip();
            if (pos < text.size() && text[pos] == '*') ++pos;
            skip();
        }
        if (pos + 1 >= text.size() || text[pos + 1] != '_') fail("expected x_, y_ or h_");
        char kind = text[pos];
        pos += 2;
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string label = text.substr(start, pos - start);
        if (label.empty()) fail("empty label");
        Rational c(sign * coef);
        if (kind == 'h' && label[0] == 'a') {
            int k = std::stoi(label.substr(1));
            if (k < 1 || k > alg.rank()) fail("simple coroot index out of range");
            out[k - 1] += c;
            continue;
        }
        if (static_cast<int>(label.size()) != rs.rank()) fail("label length does not match rank");
        Root r(rs.rank());
        for (int t = 0; t < rs.rank(); ++t) {
            if (!std::isdigit(static_cast<unsigned char>(label[t]))) fail("non-digit in root label");
            r[t] = label[t] - '0';
        }
        if (!rs.is_root(r)) fail("'" + label + "' is not a root of " + rs.type().name());
        AlgebraElement term;
        if (kind == 'x')
            term = x_root(alg, r);
        else if (kind == 'y')
            term = x_root(alg, negate(r));
        else if (kind == 'h')
            term = h_root(alg, r);
        else
            fail("unknown symbol");
        for (int t = 0; t < alg.dim(); ++t)
            if (!term[t].is_zero()) out[t] += c * term[t];
    }
    return out;
}

std::string format_element(const ChevalleyAlgebra& alg, const AlgebraElement& x)
{
    std::string s;
    for (int i = 0; i < alg.dim(); ++i) {
        if (x[i].is_zero()) continue;
        Rational c = x[i];
        if (s.empty())
            s += c.sign() < 0 ? "-" : "";
        else
            s += c.sign() < 0 ? " - " : " + ";
        Rational a = c.sign() < 0 ? -c : c;
        if (!(a == Rational(1))) s += a.str() + "*";
        s += alg.basis_label(i);
    }
    return s.empty() ? "0" : s;
}

namespace {

// [u,[v,w]] + [v,[w,u]] + [w,[u,v]] on basis vectors, integer arithmetic
bool jacobi_basis(const ChevalleyAlgebra& alg, int u, int v, int w, std::vector<i64>& acc)
{
    std::fill(acc.begin(), acc.end(), 0);
    auto term = [&](int a, int b, int c) {
        for (const auto& [k, val] : alg.bracket_basis(b, c))
            for (const auto& [l, val2] : alg.bracket_basis(a, k)) acc[l] += val * val2;
    };
    term(u, v, w);
    term(v, w, u);
    term(w, u, v);
    for (i64 a : acc)
        if (a != 0) return false;
    return true;
}

}  // namespace

JacobiResult check_jacobi_exhaustive(const ChevalleyAlgebra& alg)
{
    JacobiResult r;
    std::vector<i64> acc(alg.dim());
    for (int u = 0; u < alg.dim(); ++u)
        for (int v = u + 1; v < alg.dim(); ++v)
            for (int w = v + 1; w < alg.dim(); ++w) {
                ++r.checked;
                if (!jacobi_basis(alg, u, v, w, acc)) ++r.failures;
            }
    return r;
}

JacobiResult check_jacobi_random(const ChevalleyAlgebra& alg, std::size_t samples, unsigned seed)
{
    JacobiResult r;
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> pick(0, alg.dim() - 1);
    std::vector<i64> acc(alg.dim());
    for (std::size_t s = 0; s < samples; ++s) {
        ++r.checked;
        if (!jacobi_basis(alg, pick(gen), pick(gen), pick(gen), acc)) ++r.failures;
    }
    return r;
}

}  // namespace sphnorm
