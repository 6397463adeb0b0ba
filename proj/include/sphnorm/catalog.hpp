#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphnorm/sphersys.hpp"

namespace sphnorm {

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses "2D1 - D2 + 3*D4" over the given symbols; "0" is the zero vector.
IntVec parse_linear(const std::string& text, const std::vector<std::string>& symbols);

struct PairInfo {
    int id = 0;
    std::string name;
    SimpleType g;
    std::string k;
    std::optional<int> hermitian_root;  // 0-based simple root of g
};

struct ExpectedGenerator {
    IntVec n;
    ColorVector color;
    SigmaVector corr;
};

struct ExpectedLowTriple {
    int d = 0, e = 0;
    ColorVector f;
    SigmaVector gamma;
};

struct ExpectedGammaSigma {
    std::vector<int> allowed;
    std::vector<SigmaVector> generators;
};

struct ExpectedWitness {
    SigmaVector gamma;
    ColorVector remainder;
};

struct Expected {
    std::optional<bool> normal;
    std::optional<std::vector<SigmaVector>> covering;
    std::optional<std::vector<ExpectedLowTriple>> low_triples;
    std::optional<std::vector<ExpectedGenerator>> generators;
    std::optional<bool> free;
    std::optional<std::string> same_as;
    std::optional<ExpectedGammaSigma> gamma_sigma;
    std::optional<ExpectedWitness> witness;
};

struct TripleSource {
    std::string e, h, f;
};

struct Erratum {
    std::string field, printed, note;
};

enum class SystemKind { none, present, gap, rank0 };

struct OrbitRecord {
    std::string id;
    std::optional<int> pair;
    std::string kd_k;
    std::optional<TripleSource> triple;
    std::optional<Erratum> erratum;
    std::optional<std::string> alias_of;
    SystemKind kind = SystemKind::none;
    std::string system_name;
    std::string gap_reason;
    std::vector<ColorVector> divisors;
    std::vector<Weight> lambda_star;
    std::vector<i64> charges;
    Expected expected;
    int line = 0;
};

struct Catalog {
    int version = 0;
    std::vector<PairInfo> pairs;
    std::map<std::string, SphericalSystem> systems;
    std::vector<OrbitRecord> cases;

    const OrbitRecord* find(const std::string& id) const;
    const PairInfo* pair_of(const OrbitRecord& r) const;
    const SphericalSystem* system_of(const OrbitRecord& r) const;
    std::size_t gap_count() const;
    std::vector<std::string> ids() const;
};

Catalog load_catalog(const std::string& path);
Catalog load_catalog_text(const std::string& text);
std::string default_catalog_path();

}  // namespace sphnorm
