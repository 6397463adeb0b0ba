#include "sphnorm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sphnorm {

bool is_valid(const SimpleType& t)
{
    switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B':
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 3;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
    }
}

SimpleType parse_simple_type(const std::string& s)
{
    if (s.size() < 2) throw std::invalid_argument("bad Dynkin type '" + s + "'");
    SimpleType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::size_t pos = 0;
    try {
        t.rank = std::stoi(s.substr(1), &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Dynkin type '" + s + "'");
    }
    if (pos != s.size() - 1 || !is_valid(t)) throw std::invalid_argument("bad Dynkin type '" + s + "'");
    return t;
}

namespace {

IntMat build_cartan(const SimpleType& t)
{
    int n = t.rank;
    IntMat a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 2][n - 1] = -2;  // alpha_n short
        break;
    case 'C':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 1][n - 2] = -2;  // alpha_n long
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'F':
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[1][2] = -2;
        break;
    case 'G':
        a[0][1] = -1;
        a[1][0] = -3;
        break;
    }
    return a;
}

IntVec build_norms(const SimpleType& t)
{
    int n = t.rank;
    IntVec d(n, 2);
    switch (t.family) {
    case 'B':
        for (int i = 0; i + 1 < n; ++i) d[i] = 4;
        break;
    case 'C': d[n - 1] = 4; break;
    case 'F': d[0] = d[1] = 4; break;
    case 'G': d[1] = 6; break;
    default: break;
    }
    return d;
}

}  // namespace

RootSystem::RootSystem(SimpleType type) : type_(type)
{
    if (!is_valid(type)) throw std::invalid_argument("invalid Dynkin type " + type.name());
    cartan_ = build_cartan(type);
    norms_ = build_norms(type);
    int n = type.rank;

    // Grow by height with root strings: beta + alpha_i is a root iff q > 0, q = p - <beta, alpha_i^vee>.
    std::vector<Root> layer;
    std::map<Root, bool> known;
    for (int i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        layer.push_back(r);
        known[r] = true;
    }
    while (!layer.empty()) {
        std::vector<Root> next;
        for (const auto& b : layer) {
            positive_.push_back(b);
            for (int i = 0; i < n; ++i) {
                i64 p = 0;
                Root down = b;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                i64 bpair = 0;
                for (int j = 0; j < n; ++j) bpair += b[j] * cartan_[j][i];
                if (p - bpair > 0) {
                    Root up = b;
                    up[i] += 1;
                    if (!known.count(up)) {
                        known[up] = true;
                        next.push_back(up);
                    }
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& x, const Root& y) {
        i64 hx = height(x), hy = height(y);
        return hx != hy ? hx < hy : x < y;
    });
    for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;
    cartan_inv_ = inverse(to_rational(cartan_));
}

IntVec RootSystem::symmetrizer() const
{
    IntVec d(norms_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = norms_[i] / 2;
    return d;
}

std::optional<std::size_t> RootSystem::positive_index(const Root& r) const
{
    auto it = index_.find(r);
    if (it != index_.end()) return it->second;
    Root neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    it = index_.find(neg);
    if (it != index_.end()) return it->second;
    return std::nullopt;
}

bool RootSystem::is_root(const Root& r) const
{
    return static_cast<int>(r.size()) == rank() && positive_index(r).has_value();
}

i64 RootSystem::inner(const Root& a, const Root& b) const
{
    i64 s = 0;
    int n = rank();
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            s = checked_add(s, checked_mul(checked_mul(a[i], b[j]), cartan_[i][j] * norms_[j] / 2));
    }
    return s;
}

i64 RootSystem::pairing(const Root& a, const Root& b) const
{
    i64 nb = norm(b);
    i64 ip = inner(a, b);
    if ((2 * ip) % nb != 0) throw std::logic_error("non-integral pairing");
    return 2 * ip / nb;
}

Root RootSystem::coroot(const Root& a) const
{
    i64 na = norm(a);
    Root c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        i64 v = a[k] * norms_[k];
        if (v % na != 0) throw std::logic_error("non-integral coroot");
        c[k] = v / na;
    }
    return c;
}

Weight RootSystem::root_to_weight(const Root& a) const
{
    int n = rank();
    Weight w(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[j] += a[i] * cartan_[i][j];
    return w;
}

QVec RootSystem::weight_to_root_coords(const Weight& w) const
{
    // lambda = sum_j w_j omega_j and omega_j = sum_i (A^{-1})_{ji} alpha_i
    int n = rank();
    QVec c(n, Rational(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) c[i] += Rational(w[j]) * cartan_inv_[j][i];
    return c;
}

Root RootSystem::reflect(const Root& a, const Root& b) const
{
    i64 k = pairing(b, a);
    Root r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - k * a[i];
    return r;
}

i64 RootSystem::cartan_determinant() const
{
    // det(A) = 1 / det(A^{-1}); computed by elimination on A
    QMat m = to_rational(cartan_);
    Rational det(1);
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det.num();
}

i64 height(const Root& r)
{
    i64 h = 0;
    for (i64 c : r) h += c;
    return h;
}

Root highest_root(const RootSystem& rs) { return rs.positive_roots().back(); }

i64 coroot_pairing(const RootSystem& rs, const Weight& w, const Root& a)
{
    if (!rs.is_root(a)) throw std::invalid_argument("not a root of " + rs.type().name() + ": " + root_label(a));
    if (static_cast<int>(w.size()) != rs.rank()) throw std::invalid_argument("weight has wrong length");
    Root c = rs.coroot(a);
    i64 s = 0;
    for (std::size_t k = 0; k < c.size(); ++k) s += w[k] * c[k];
    return s;
}

i64 hermitian_exponent(const RootSystem& rs, int p)
{
    if (p < 0 || p >= rs.rank()) throw std::invalid_argument("simple root index out of range");
    Root theta = highest_root(rs);
    if (theta[p] != 1)
        throw std::invalid_argument("alpha_" + std::to_string(p + 1) + " has coefficient " + std::to_string(theta[p]) +
                                    " in the highest root; the unipotent radical is Abelian only for coefficient 1");
    // omega_p^vee = sum_k (A^{-1})_{kp} alpha_k^vee
    QVec col(rs.rank());
    for (int k = 0; k < rs.rank(); ++k) col[k] = rs.cartan_inverse()[k][p];
    return lcm_of_denominators(col);
}

std::string root_label(const Root& r)
{
    std::string s;
    bool neg = false;
    for (i64 c : r) {
        if (c < 0) neg = true;
        i64 v = c < 0 ? -c : c;
        s += (v < 10) ? std::string(1, static_cast<char>('0' + v)) : "(" + std::to_string(v) + ")";
    }
    return neg ? "-" + s : s;
}

}  // namespace sphnorm
