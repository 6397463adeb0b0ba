#include "sphnorm/sphersys.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sphnorm {

int SphericalSystem::color_index(const std::string& label) const
{
    for (std::size_t d = 0; d < colors.size(); ++d)
        if (colors[d] == label) return static_cast<int>(d);
    return -1;
}

int SphericalSystem::simple_root_index(const std::string& label) const
{
    for (std::size_t i = 0; i < simple_roots.size(); ++i)
        if (simple_roots[i] == label) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> simple_root_labels(const std::vector<SimpleType>& ambient)
{
    std::vector<std::string> labels;
    for (std::size_t f = 0; f < ambient.size(); ++f)
        for (int i = 1; i <= ambient[f].rank; ++i)
            labels.push_back(std::string(1, static_cast<char>('a' + f)) + std::to_string(i));
    return labels;
}

SphericalSystem make_system_frame(const std::vector<SimpleType>& ambient)
{
    SphericalSystem s;
    s.ambient = ambient;
    s.simple_roots = simple_root_labels(ambient);
    std::size_t n = s.simple_roots.size();
    s.cartan.assign(n, IntVec(n, 0));
    std::size_t off = 0;
    for (const auto& t : ambient) {
        RootSystem rs(t);
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j) s.cartan[off + i][off + j] = rs.cartan()[i][j];
        off += static_cast<std::size_t>(t.rank);
    }
    s.sp.assign(n, false);
    return s;
}

bool ValidationReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Diagnostic& d) { return d.ok; });
}

i64 omega_multiplicity(const SphericalSystem& sys, int alpha)
{
    for (const auto& s : sys.sigma_roots) {
        bool doubled = true;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != (static_cast<int>(i) == alpha ? 2 : 0)) doubled = false;
        if (doubled) return 2;
    }
    return 1;
}

Weight omega(const SphericalSystem& sys, const ColorVector& v)
{
    if (v.size() != sys.num_colors()) throw std::invalid_argument("color vector has wrong length");
    Weight w(sys.simple_roots.size(), 0);
    for (std::size_t d = 0; d < v.size(); ++d) {
        if (v[d] == 0) continue;
        for (int a : sys.incidence[d]) w[a] = checked_add(w[a], checked_mul(v[d], omega_multiplicity(sys, a)));
    }
    return w;
}

Weight sigma_weight(const SphericalSystem& sys, std::size_t j)
{
    std::size_t n = sys.simple_roots.size();
    Weight w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) w[k] += sys.sigma_roots[j][i] * sys.cartan[i][k];
    return w;
}

ColorVector sigma_to_colors(const SphericalSystem& sys, const SigmaVector& a)
{
    if (a.size() != sys.num_sigma()) throw std::invalid_argument("sigma vector has wrong length");
    ColorVector v(sys.num_colors(), 0);
    for (std::size_t d = 0; d < v.size(); ++d)
        for (std::size_t j = 0; j < a.size(); ++j) v[d] = checked_add(v[d], checked_mul(sys.pairing[d][j], a[j]));
    return v;
}

FMSystem sigma_box_system(const SphericalSystem& sys)
{
    std::size_t nd = sys.num_colors(), ns = sys.num_sigma();
    IntMat a, b;
    for (std::size_t d = 0; d < nd; ++d) {
        a.push_back(sys.pairing[d]);
        IntVec row(nd, 0);
        row[d] = 1;
        b.push_back(row);
    }
    for (std::size_t j = 0; j < ns; ++j) {
        IntVec row(ns, 0);
        row[j] = -1;
        a.push_back(row);
        b.push_back(IntVec(nd, 0));
    }
    return FMSystem(a, b);
}

namespace {

std::string join_terms(const std::vector<std::pair<i64, std::string>>& terms)
{
    std::string out;
    for (const auto& [c, name] : terms) {
        if (c == 0) continue;
        i64 m = c < 0 ? -c : c;
        std::string t = (m == 1 ? "" : std::to_string(m)) + name;
        if (out.empty()) out = (c < 0 ? "-" : "") + t;
        else out += (c < 0 ? " - " : " + ") + t;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string format_color_vector(const SphericalSystem& sys, const ColorVector& v)
{
    std::vector<std::pair<i64, std::string>> t;
    for (std::size_t d = 0; d < v.size(); ++d) t.emplace_back(v[d], sys.colors[d]);
    return join_terms(t);
}

std::string format_sigma_vector(const SphericalSystem& sys, const SigmaVector& a)
{
    std::vector<std::pair<i64, std::string>> t;
    for (std::size_t j = 0; j < a.size(); ++j) t.emplace_back(a[j], sys.sigma_names[j]);
    return join_terms(t);
}

std::string format_weight(const SphericalSystem& sys, const Weight& w)
{
    std::vector<std::pair<i64, std::string>> t;
    for (std::size_t i = 0; i < w.size(); ++i) t.emplace_back(w[i], "w_" + sys.simple_roots[i]);
    return join_terms(t);
}

ValidationReport validate(const SphericalSystem& sys)
{
    ValidationReport rep;
    std::size_t n = sys.simple_roots.size(), nd = sys.num_colors(), ns = sys.num_sigma();

    Diagnostic shape{"shape"};
    if (sys.cartan.size() != n || sys.sp.size() != n) shape.witness = "simple-root data has inconsistent length";
    else if (sys.sigma_roots.size() != ns) shape.witness = "spherical root expressions do not match names";
    else if (sys.pairing.size() != nd || sys.incidence.size() != nd) shape.witness = "pairing or incidence rows do not match colors";
    for (const auto& row : sys.pairing)
        if (row.size() != ns) shape.witness = "pairing row has wrong length";
    for (const auto& s : sys.sigma_roots) {
        if (s.size() != n) shape.witness = "spherical root has wrong length";
        for (i64 c : s)
            if (c < 0) shape.witness = "spherical root with negative coefficient";
    }
    for (const auto& inc : sys.incidence)
        for (int a : inc)
            if (a < 0 || static_cast<std::size_t>(a) >= n) shape.witness = "incidence refers to an unknown simple root";
    shape.ok = shape.witness.empty();
    rep.checks.push_back(shape);
    if (!shape.ok) return rep;

    Diagnostic positive{"positive color per spherical root"};
    for (std::size_t j = 0; j < ns && positive.ok; ++j) {
        bool found = false;
        for (std::size_t d = 0; d < nd; ++d)
            if (sys.pairing[d][j] > 0) found = true;
        if (!found) {
            positive.ok = false;
            positive.witness = sys.sigma_names[j];
        }
    }
    rep.checks.push_back(positive);

    Diagnostic indep{"spherical roots independent in colors"};
    if (ns > 0) {
        IntMat cols(ns, IntVec(nd));
        for (std::size_t j = 0; j < ns; ++j)
            for (std::size_t d = 0; d < nd; ++d) cols[j][d] = sys.pairing[d][j];
        indep.ok = rank(cols) == ns;
        if (!indep.ok) indep.witness = "rank " + std::to_string(rank(cols)) + " < " + std::to_string(ns);
    }
    rep.checks.push_back(indep);

    Diagnostic omega_ok{"omega consistency"};
    for (std::size_t j = 0; j < ns && omega_ok.ok; ++j) {
        ColorVector col(nd);
        for (std::size_t d = 0; d < nd; ++d) col[d] = sys.pairing[d][j];
        Weight lhs = omega(sys, col), rhs = sigma_weight(sys, j);
        if (lhs != rhs) {
            omega_ok.ok = false;
            omega_ok.witness = sys.sigma_names[j] + ": colors give " + format_weight(sys, lhs) + ", root gives " +
                               format_weight(sys, rhs);
        }
    }
    rep.checks.push_back(omega_ok);

    Diagnostic sp_ok{"S^p orthogonal to spherical roots and colorless"};
    for (std::size_t i = 0; i < n && sp_ok.ok; ++i) {
        if (!sys.sp[i]) continue;
        for (std::size_t j = 0; j < ns; ++j)
            if (sigma_weight(sys, j)[i] != 0) {
                sp_ok.ok = false;
                sp_ok.witness = sys.simple_roots[i] + " pairs nontrivially with " + sys.sigma_names[j];
            }
        for (std::size_t d = 0; d < nd; ++d)
            for (int a : sys.incidence[d])
                if (static_cast<std::size_t>(a) == i) {
                    sp_ok.ok = false;
                    sp_ok.witness = sys.colors[d] + " is a color of " + sys.simple_roots[i];
                }
    }
    rep.checks.push_back(sp_ok);

    // No nonzero a >= 0 with C a <= 0: infeasibility of {C a <= 0, a >= 0, sum a >= 1}.
    Diagnostic strict{"strict positivity"};
    if (ns > 0) {
        IntMat a, b;
        for (std::size_t d = 0; d < nd; ++d) {
            a.push_back(sys.pairing[d]);
            b.push_back({0});
        }
        for (std::size_t j = 0; j < ns; ++j) {
            IntVec row(ns, 0);
            row[j] = -1;
            a.push_back(row);
            b.push_back({0});
        }
        a.push_back(IntVec(ns, -1));
        b.push_back({-1});
        FMSystem fm(a, b);
        if (auto pt = fm.rational_point({1})) {
            strict.ok = false;
            i64 l = lcm_of_denominators(*pt);
            SigmaVector w(ns);
            for (std::size_t j = 0; j < ns; ++j) w[j] = ((*pt)[j] * Rational(l)).num();
            strict.witness = format_sigma_vector(sys, w) + " has nonpositive color expression " +
                             format_color_vector(sys, sigma_to_colors(sys, w));
        }
    }
    rep.checks.push_back(strict);
    return rep;
}

std::vector<int> positive_colors(const SphericalSystem& sys)
{
    std::vector<int> out;
    for (std::size_t d = 0; d < sys.num_colors(); ++d)
        if (std::all_of(sys.pairing[d].begin(), sys.pairing[d].end(), [](i64 c) { return c >= 0; }))
            out.push_back(static_cast<int>(d));
    return out;
}

namespace {

SphericalSystem restrict_system(const SphericalSystem& sys, const std::vector<int>& keep_colors,
                                const std::vector<int>& keep_sigma)
{
    SphericalSystem out = sys;
    out.colors.clear();
    out.pairing.clear();
    out.incidence.clear();
    out.sigma_names.clear();
    out.sigma_roots.clear();
    for (int j : keep_sigma) {
        out.sigma_names.push_back(sys.sigma_names[j]);
        out.sigma_roots.push_back(sys.sigma_roots[j]);
    }
    for (int d : keep_colors) {
        out.colors.push_back(sys.colors[d]);
        out.incidence.push_back(sys.incidence[d]);
        IntVec row;
        for (int j : keep_sigma) row.push_back(sys.pairing[d][j]);
        out.pairing.push_back(row);
    }
    return out;
}

}  // namespace

SphericalSystem quotient_by_positive_color(const SphericalSystem& sys, int color)
{
    auto pos = positive_colors(sys);
    if (std::find(pos.begin(), pos.end(), color) == pos.end())
        throw std::invalid_argument("color " + (color >= 0 && static_cast<std::size_t>(color) < sys.num_colors()
                                                    ? sys.colors[color]
                                                    : std::to_string(color)) +
                                    " is not positive");
    std::vector<int> kc, ks;
    for (std::size_t d = 0; d < sys.num_colors(); ++d)
        if (static_cast<int>(d) != color) kc.push_back(static_cast<int>(d));
    for (std::size_t j = 0; j < sys.num_sigma(); ++j)
        if (sys.pairing[color][j] == 0) ks.push_back(static_cast<int>(j));
    SphericalSystem out = restrict_system(sys, kc, ks);
    out.name = sys.name + "/" + sys.colors[color];
    return out;
}

std::vector<int> sigma_support(const SphericalSystem& sys)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < sys.simple_roots.size(); ++i)
        for (const auto& s : sys.sigma_roots)
            if (s[i] != 0) {
                out.push_back(static_cast<int>(i));
                break;
            }
    return out;
}

SphericalSystem localization(const SphericalSystem& sys, const std::vector<int>& roots)
{
    std::vector<bool> in(sys.simple_roots.size(), false);
    for (int r : roots) {
        if (r < 0 || static_cast<std::size_t>(r) >= in.size()) throw std::invalid_argument("simple root index out of range");
        in[r] = true;
    }
    std::vector<int> ks, kc;
    for (std::size_t j = 0; j < sys.num_sigma(); ++j) {
        bool inside = true;
        for (std::size_t i = 0; i < in.size(); ++i)
            if (sys.sigma_roots[j][i] != 0 && !in[i]) inside = false;
        if (inside) ks.push_back(static_cast<int>(j));
    }
    for (std::size_t d = 0; d < sys.num_colors(); ++d)
        for (int a : sys.incidence[d])
            if (in[a]) {
                kc.push_back(static_cast<int>(d));
                break;
            }
    SphericalSystem out = restrict_system(sys, kc, ks);
    std::vector<int> keep;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i]) keep.push_back(static_cast<int>(i));
    std::vector<int> remap(in.size(), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) remap[keep[k]] = static_cast<int>(k);
    out.simple_roots.clear();
    out.sp.clear();
    out.cartan.assign(keep.size(), IntVec(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
        out.simple_roots.push_back(sys.simple_roots[keep[k]]);
        out.sp.push_back(sys.sp[keep[k]]);
        for (std::size_t l = 0; l < keep.size(); ++l) out.cartan[k][l] = sys.cartan[keep[k]][keep[l]];
    }
    for (auto& s : out.sigma_roots) {
        IntVec t;
        for (int i : keep) t.push_back(s[i]);
        s = t;
    }
    for (auto& inc : out.incidence) {
        std::vector<int> t;
        for (int a : inc)
            if (in[a]) t.push_back(remap[a]);
        inc = t;
    }
    out.name = sys.name + "|loc";
    return out;
}

SphericalSystem localization(const SphericalSystem& sys) { return localization(sys, sigma_support(sys)); }

}  // namespace sphnorm
