#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphnorm/report.hpp"

namespace py = pybind11;
using namespace sphnorm;

namespace {

int root_index(const SimpleType& t, const std::string& label)
{
    auto labels = simple_root_labels({t});
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw py::value_error("unknown simple root '" + label + "' of " + t.name());
    return static_cast<int>(it - labels.begin());
}

const SphericalSystem& system_named(const Catalog& cat, const std::string& name)
{
    auto it = cat.systems.find(name);
    if (it == cat.systems.end()) throw py::key_error("unknown spherical system '" + name + "'");
    return it->second;
}

const OrbitRecord& record_of(const Catalog& cat, const std::string& id)
{
    const OrbitRecord* r = cat.find(id);
    if (!r) throw py::key_error("unknown case '" + id + "'");
    return *r;
}

py::dict to_dict(const CaseReport& r)
{
    py::dict d;
    d["id"] = r.id;
    d["normal"] = r.normal ? py::object(py::bool_(*r.normal)) : py::object(py::none());
    py::list secs;
    for (const auto& s : r.sections) {
        py::dict x;
        x["name"] = s.name;
        x["status"] = status_name(s.status);
        x["lines"] = s.lines;
        secs.append(x);
    }
    d["sections"] = secs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_sphnorm, m)
{
    py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);

    m.def("default_catalog_path", &default_catalog_path);
    m.def("positive_root_count", [](const std::string& t) { return RootSystem(parse_simple_type(t)).num_positive(); });
    m.def("highest_root", [](const std::string& t) { return highest_root(RootSystem(parse_simple_type(t))); });
    m.def(
        "hermitian_exponent",
        [](const std::string& t, const std::string& root) {
            RootSystem rs(parse_simple_type(t));
            return hermitian_exponent(rs, root_index(rs.type(), root));
        },
        py::arg("type"), py::arg("root"));
    m.def(
        "verify_triple",
        [](const std::string& t, const std::string& e, const std::string& h, const std::string& f) {
            ChevalleyAlgebra alg{RootSystem(parse_simple_type(t))};
            NormalTriple tr{"", parse_element(alg, e), parse_element(alg, h), parse_element(alg, f)};
            auto r = verify_triple(alg, tr);
            return r.sl2_ok && r.cartan_ok;
        },
        py::arg("type"), py::arg("e"), py::arg("h"), py::arg("f"));
    m.def(
        "centralizer_dim",
        [](const std::string& t, const std::string& e) {
            ChevalleyAlgebra alg{RootSystem(parse_simple_type(t))};
            return centralizer_dim(alg, parse_element(alg, e));
        },
        py::arg("type"), py::arg("e"));

    py::class_<Catalog>(m, "Catalog")
        .def(py::init([](const std::string& path) { return load_catalog(path); }), py::arg("path"))
        .def_readonly("version", &Catalog::version)
        .def("ids", &Catalog::ids)
        .def("systems", [](const Catalog& c) {
            std::vector<std::string> out;
            for (const auto& [k, v] : c.systems) out.push_back(k);
            return out;
        })
        .def("gap_count", &Catalog::gap_count)
        .def(
            "run_case",
            [](const Catalog& c, const std::string& id, std::vector<std::string> sections, std::optional<int> bound) {
                RunOptions o;
                o.bound = bound;
                o.sections.insert(sections.begin(), sections.end());
                return to_dict(run_case(c, record_of(c, id), o));
            },
            py::arg("id"), py::arg("sections") = std::vector<std::string>{}, py::arg("bound") = py::none())
        .def("verify_all", [](const Catalog& c) {
            CaseRunner runner(c);
            std::vector<CaseReport> reps;
            for (const auto& r : c.cases) reps.push_back(runner.run(r));
            Summary s = summarize(reps);
            py::dict d;
            d["pass"] = s.pass;
            d["fail"] = s.fail;
            d["skipped"] = s.skipped;
            d["non_normal"] = s.non_normal_ids;
            return d;
        })
        .def(
            "covering_differences",
            [](const Catalog& c, const std::string& name, int bound) {
                const auto& s = system_named(c, name);
                std::vector<std::string> out;
                for (const auto& cd : covering_differences(s, bound).items) out.push_back(format_sigma_vector(s, cd.gamma));
                return out;
            },
            py::arg("system"), py::arg("bound") = 8)
        .def(
            "low_triples",
            [](const Catalog& c, const std::string& name, int bound) {
                const auto& s = system_named(c, name);
                std::vector<std::tuple<std::string, std::string, std::string>> out;
                for (const auto& t : low_fundamental_triples(s, bound).items)
                    out.emplace_back(s.colors[t.d], s.colors[t.e], format_color_vector(s, t.f));
                return out;
            },
            py::arg("system"), py::arg("bound") = 8)
        .def(
            "is_minuscule",
            [](const Catalog& c, const std::string& name, const std::string& d) -> py::tuple {
                const auto& s = system_named(c, name);
                auto r = is_minuscule(s, parse_linear(d, s.colors));
                if (r.minuscule) return py::make_tuple(true, py::none(), py::none());
                return py::make_tuple(false, format_sigma_vector(s, r.witness), format_color_vector(s, r.remainder));
            },
            py::arg("system"), py::arg("d"))
        .def(
            "generators",
            [](const Catalog& c, const std::string& id, int bound) {
                const auto& rec = record_of(c, id);
                const SphericalSystem* s = c.system_of(rec);
                if (!s || rec.divisors.empty()) throw py::value_error("case '" + id + "' has no semigroup data");
                std::vector<std::tuple<std::vector<i64>, std::string, std::string>> out;
                for (const auto& g : gamma_multi(*s, rec.divisors, bound).generators)
                    out.emplace_back(g.degrees, format_color_vector(*s, g.color), format_sigma_vector(*s, g.correction));
                return out;
            },
            py::arg("id"), py::arg("bound") = 8);
}
