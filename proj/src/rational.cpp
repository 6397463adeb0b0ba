#include "sphnorm/rational.hpp"

namespace sphnorm {

QMat to_rational(const IntMat& m)
{
    QMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

std::size_t rank(QMat m)
{
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMat& m) { return rank(to_rational(m)); }

QMat inverse(const QMat& m)
{
    std::size_t n = m.size();
    QMat a = m;
    QMat inv(n, QVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rational p = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

bool solve_unique(const QMat& a, const QVec& b, QVec& x)
{
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    QMat m(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational p = m[r][c];
        for (std::size_t j = c; j <= cols; ++j) m[r][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    if (pivcol.size() != cols) throw std::domain_error("columns are not independent");
    for (std::size_t i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return false;
    x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = m[i][cols];
    return true;
}

i64 lcm_of_denominators(const QVec& v)
{
    i64 l = 1;
    for (const auto& q : v) l = checked_mul(l / std::gcd(l, q.den()), q.den());
    return l;
}

}  // namespace sphnorm
