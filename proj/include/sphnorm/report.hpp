#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphnorm/catalog.hpp"
#include "sphnorm/chevalley.hpp"
#include "sphnorm/semigroup.hpp"

namespace sphnorm {

enum class Status { pass, fail, skipped };

std::string status_name(Status s);

struct SectionResult {
    std::string name;
    Status status = Status::skipped;
    std::vector<std::string> lines;
};

struct CaseReport {
    std::string id;
    std::vector<SectionResult> sections;
    std::optional<bool> normal;  // computed verdict, when one was reached

    bool has_failure() const;
    const SectionResult* section(const std::string& name) const;
};

const std::vector<std::string>& section_names();  // triples, covering, low-triples, normality, semigroup

struct RunOptions {
    std::optional<int> bound;         // overrides the search and degree bounds (default 8)
    std::set<std::string> sections;   // empty means all
};

// Runs every section of a record against its expected data; keeps one Chevalley algebra per type.
class CaseRunner {
public:
    explicit CaseRunner(const Catalog& cat) : cat_(cat) {}
    CaseReport run(const OrbitRecord& rec, const RunOptions& opts = {});

private:
    const ChevalleyAlgebra& algebra(const SimpleType& t);
    SectionResult triples(const OrbitRecord& rec);
    SectionResult covering(const OrbitRecord& rec, int bound);
    SectionResult low_triples(const OrbitRecord& rec, int bound);
    SectionResult normality_section(const OrbitRecord& rec, std::optional<bool>& verdict);
    SectionResult semigroup(const OrbitRecord& rec, int bound);

    const Catalog& cat_;
    std::map<std::string, std::unique_ptr<ChevalleyAlgebra>> algebras_;
};

CaseReport run_case(const Catalog& cat, const OrbitRecord& rec, const RunOptions& opts = {});

struct Summary {
    std::size_t pass = 0, fail = 0, skipped = 0;
    std::size_t normal = 0, non_normal = 0, undecided = 0;
    std::vector<std::string> non_normal_ids;
};

Summary summarize(const std::vector<CaseReport>& reports);

std::string render_text(const CaseReport& r);
std::string render_summary_text(const Summary& s);
// Deterministic JSON document; schema version matches the catalog version.
std::string render_structured(const std::vector<CaseReport>& reports, const Summary& s, int catalog_version);

}  // namespace sphnorm
