#ifndef HSOQ_CATALOG_HPP
#define HSOQ_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsoq/derive.hpp"

namespace hsoq {

struct CatalogEntry {
    enum class Source { ThisWork, Baseline };

    QuantumParams params;
    Source source = Source::ThisWork;
    std::string provenance;  // derivation chain or baseline citation
};

struct ComparisonVerdict {
    enum class Kind { Better, Equal, Worse, Incomparable };

    std::optional<CatalogEntry> ours;
    CatalogEntry theirs;
    Kind verdict = Kind::Incomparable;
};

const char* to_string(ComparisonVerdict::Kind k);

/// One named parameter table: a theorem family (q, m, n, k-range, skips)
/// optionally composed with lengthening. Tables are regenerated from these
/// specs through the derivation rules, never from stored row lists.
struct TableSpec {
    std::string name;
    uint64_t q = 0;
    uint64_t m = 0;
    uint64_t n = 0;
    uint64_t k_from = 0;
    uint64_t k_to = 0;
    std::vector<uint64_t> skip_k;
    uint64_t lengthen_steps = 0;
};

const std::vector<TableSpec>& builtin_tables();

/// derive_from_theorem for each k in [k_from, k_to] minus skips, in
/// ascending k order, each followed by `lengthen_steps` lengthenings.
std::vector<DerivationRecord> family(uint64_t q, uint64_t m, uint64_t n, uint64_t k_from,
                                     uint64_t k_to, const std::vector<uint64_t>& skip_k = {},
                                     uint64_t lengthen_steps = 0);

/// Known names: table1 (binary record closure), table2, table3, f4-153,
/// f4-765, f7-392, f8-566, f8-567, f9-400, f9-800, f9-810, f9-324.
/// Throws UnknownTable otherwise.
std::vector<DerivationRecord> generate_table(const std::string& name);

enum class RuleColumn { Names, Markers };

/// CSV with header q,N,K,D,rule,chain; chain entries are semicolon-joined.
/// Byte-identical for identical inputs.
std::string to_csv(const std::vector<DerivationRecord>& records,
                   RuleColumn style = RuleColumn::Names);

std::string to_csv(const std::vector<ComparisonVerdict>& verdicts);

/// Parses q,N,K,D[,...] rows (our own schema). Throws MalformedCsv with a
/// line number.
std::vector<CatalogEntry> parse_catalog_csv(const std::string& text);

/// Parses q,N,K,D,citation rows.
std::vector<CatalogEntry> parse_baseline_csv(const std::string& text);

/// Closure seeds from parsed entries.
std::vector<DerivationRecord> seeds_from_entries(const std::vector<CatalogEntry>& entries);

/// Verdict per baseline row: matched first on (q, N, D) (compare K), then on
/// (q, N, K) (compare D); unmatched rows pass through as incomparable.
std::vector<ComparisonVerdict> compare(const std::vector<CatalogEntry>& ours,
                                       const std::vector<CatalogEntry>& baseline);

}  // namespace hsoq

#endif
