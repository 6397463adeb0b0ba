#include "sphnorm/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sphnorm;

namespace {

struct Options {
    std::string catalog = default_catalog_path();
    std::string format = "text";
    std::string output;
    int bound = 0;
    std::string sections;
};

RunOptions run_options(const Options& o)
{
    RunOptions r;
    if (o.bound > 0) r.bound = o.bound;
    std::stringstream ss(o.sections);
    std::string s;
    while (std::getline(ss, s, ','))
        if (!s.empty()) r.sections.insert(s);
    return r;
}

void emit(const Options& o, const std::string& text)
{
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw std::runtime_error("cannot write " + o.output);
    out << text;
}

int report(const Options& o, const Catalog& cat, const std::vector<const OrbitRecord*>& recs, bool with_summary)
{
    CaseRunner runner(cat);
    RunOptions ro = run_options(o);
    std::vector<CaseReport> reports;
    for (const auto* r : recs) reports.push_back(runner.run(*r, ro));
    Summary s = summarize(reports);
    if (o.format == "structured") {
        emit(o, render_structured(reports, s, cat.version));
    } else {
        std::string text;
        for (const auto& r : reports) text += render_text(r);
        if (with_summary) text += render_summary_text(s);
        emit(o, text);
    }
    return s.fail == 0 ? 0 : 1;
}

const OrbitRecord* lookup(const Catalog& cat, std::string id)
{
    if (id.size() == 1) id[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(id[0])));
    return cat.find(id);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spherical nilpotent orbit verifier"};
    app.require_subcommand(1);
    Options o;
    auto sections_check = CLI::Validator(
        [](std::string& v) -> std::string {
            std::stringstream ss(v);
            std::string s;
            while (std::getline(ss, s, ',')) {
                const auto& names = section_names();
                if (!s.empty() && std::find(names.begin(), names.end(), s) == names.end())
                    return "unknown section '" + s + "'";
            }
            return {};
        },
        "CSV of triples,covering,low-triples,normality,semigroup");
    auto common = [&](CLI::App* sub) {
        sub->add_option("--catalog", o.catalog, "catalog file")->capture_default_str();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--bound", o.bound, "search and degree bound")->check(CLI::PositiveNumber);
        sub->add_option("--sections", o.sections, "sections to run")->check(sections_check);
        sub->add_option("-o,--output", o.output, "write the report to a file");
    };

    auto* verify = app.add_subcommand("verify-all", "run every catalog record");
    common(verify);

    std::string case_id;
    auto* cs = app.add_subcommand("case", "inspect one catalog record");
    cs->add_option("id", case_id, "case id such as 12.2 or A")->required();
    common(cs);

    std::string htype, hroot;
    auto* herm = app.add_subcommand("hermitian", "minimal exponent m of a Hermitian simple root");
    herm->add_option("type", htype, "Dynkin type such as E6")->required();
    herm->add_option("root", hroot, "simple root a1..an")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*herm) {
            RootSystem rs(parse_simple_type(htype));
            auto labels = simple_root_labels({rs.type()});
            auto it = std::find(labels.begin(), labels.end(), hroot);
            if (it == labels.end()) throw std::invalid_argument("unknown simple root '" + hroot + "' of " + htype);
            std::cout << hermitian_exponent(rs, static_cast<int>(it - labels.begin())) << "\n";
            return 0;
        }
        Catalog cat = load_catalog(o.catalog);
        if (*verify) {
            std::vector<const OrbitRecord*> recs;
            for (const auto& r : cat.cases) recs.push_back(&r);
            return report(o, cat, recs, true);
        }
        const OrbitRecord* rec = lookup(cat, case_id);
        if (!rec) {
            std::cerr << "unknown case '" << case_id << "'; valid ids:";
            for (const auto& id : cat.ids()) std::cerr << " " << id;
            std::cerr << "\n";
            return 2;
        }
        return report(o, cat, {rec}, false);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
