#include "hsoq/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hsoq {

const char* to_string(ComparisonVerdict::Kind k) {
    switch (k) {
        case ComparisonVerdict::Kind::Better: return "better";
        case ComparisonVerdict::Kind::Equal: return "equal";
        case ComparisonVerdict::Kind::Worse: return "worse";
        case ComparisonVerdict::Kind::Incomparable: return "incomparable";
    }
    return "unknown";
}

const std::vector<TableSpec>& builtin_tables() {
    static const std::vector<TableSpec> tables = {
        {"table2", 4, 2, 76, 1, 7, {}, 0},
        {"table3", 5, 2, 234, 4, 11, {}, 0},
        {"f4-153", 4, 2, 76, 3, 6, {}, 1},
        {"f4-765", 4, 3, 255, 18, 31, {}, 0},
        {"f7-392", 7, 2, 196, 4, 24, {}, 0},
        {"f8-566", 8, 2, 283, 6, 28, {}, 0},
        {"f8-567", 8, 2, 283, 6, 28, {}, 1},
        {"f9-400", 9, 2, 200, 4, 33, {}, 0},
        {"f9-800", 9, 2, 400, 4, 40, {}, 0},
        {"f9-810", 9, 2, 405, 4, 40, {}, 0},
        {"f9-324", 9, 2, 162, 8, 40, {11}, 0},
    };
    return tables;
}

std::vector<DerivationRecord> family(uint64_t q, uint64_t m, uint64_t n, uint64_t k_from,
                                     uint64_t k_to, const std::vector<uint64_t>& skip_k,
                                     uint64_t lengthen_steps) {
    if (k_from < 1 || k_from > k_to)
        throw Error(ErrorKind::InvalidArgument, "empty or invalid k range");
    std::vector<DerivationRecord> out;
    for (uint64_t k = k_from; k <= k_to; ++k) {
        if (std::find(skip_k.begin(), skip_k.end(), k) != skip_k.end()) continue;
        DerivationRecord rec = derive_from_theorem(q, m, n, k);
        for (uint64_t i = 0; i < lengthen_steps; ++i) rec = lengthen(rec);
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

/// The eight chain roots behind the binary record table: lengths 60..63 over
/// F_256 (e = 16) with k = 6 and 7.
std::vector<DerivationRecord> binary_record_seeds() {
    std::vector<DerivationRecord> seeds;
    for (uint64_t n : {63, 62, 61, 60})
        for (uint64_t k : {6, 7}) seeds.push_back(derive_from_theorem(2, 4, n, k));
    return seeds;
}

}  // namespace

std::vector<DerivationRecord> generate_table(const std::string& name) {
    if (name == "table1") return closure(binary_record_seeds(), 252, 183);
    for (const TableSpec& spec : builtin_tables())
        if (spec.name == name)
            return family(spec.q, spec.m, spec.n, spec.k_from, spec.k_to, spec.skip_k,
                          spec.lengthen_steps);
    throw Error(ErrorKind::UnknownTable, "unknown table '" + name + "'");
}

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string to_csv(const std::vector<DerivationRecord>& records, RuleColumn style) {
    std::string out = "q,N,K,D,rule,chain\n";
    for (const DerivationRecord& r : records) {
        out += std::to_string(r.params.q) + "," + std::to_string(r.params.N) + "," +
               std::to_string(r.params.K) + "," + std::to_string(r.params.D) + ",";
        out += style == RuleColumn::Markers ? r.marker() : to_string(r.rule);
        out += "," + join(r.chain_strings(), ';') + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<ComparisonVerdict>& verdicts) {
    std::string out = "q,N,K_baseline,D_baseline,K_ours,D_ours,verdict,citation\n";
    for (const ComparisonVerdict& v : verdicts) {
        out += std::to_string(v.theirs.params.q) + "," + std::to_string(v.theirs.params.N) + "," +
               std::to_string(v.theirs.params.K) + "," + std::to_string(v.theirs.params.D) + ",";
        if (v.ours) {
            out += std::to_string(v.ours->params.K) + "," + std::to_string(v.ours->params.D);
        } else {
            out += ",";
        }
        out += std::string(",") + to_string(v.verdict) + "," + v.theirs.provenance + "\n";
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

uint64_t parse_u64(const std::string& s, size_t line_no, const char* col) {
    std::string t = trim(s);
    if (t.empty() || t.size() > 18 || t.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::MalformedCsv, "line " + std::to_string(line_no) + ": column " +
                                                 col + " is not a reasonable non-negative " +
                                                 "integer: '" + t + "'");
    return std::stoull(t);
}

std::vector<CatalogEntry> parse_csv(const std::string& text, bool baseline) {
    std::vector<CatalogEntry> out;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty()) continue;
        auto cells = split(t, ',');
        if (!saw_header) {
            if (cells.size() < 4 || trim(cells[0]) != "q" || trim(cells[1]) != "N" ||
                trim(cells[2]) != "K" || trim(cells[3]) != "D")
                throw Error(ErrorKind::MalformedCsv,
                            "line " + std::to_string(line_no) + ": expected header q,N,K,D,...");
            saw_header = true;
            continue;
        }
        if (cells.size() < 4)
            throw Error(ErrorKind::MalformedCsv,
                        "line " + std::to_string(line_no) + ": expected at least 4 columns");
        CatalogEntry entry;
        entry.params.q = parse_u64(cells[0], line_no, "q");
        entry.params.N = parse_u64(cells[1], line_no, "N");
        entry.params.K = parse_u64(cells[2], line_no, "K");
        entry.params.D = parse_u64(cells[3], line_no, "D");
        if (entry.params.K > entry.params.N || entry.params.D < 1)
            throw Error(ErrorKind::MalformedCsv,
                        "line " + std::to_string(line_no) + ": invalid parameters " +
                            entry.params.display());
        entry.source = baseline ? CatalogEntry::Source::Baseline : CatalogEntry::Source::ThisWork;
        if (baseline) {
            entry.provenance = cells.size() > 4 ? trim(cells[4]) : "";
        } else if (cells.size() > 5) {
            entry.provenance = trim(cells[5]);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog_csv(const std::string& text) {
    return parse_csv(text, false);
}

std::vector<CatalogEntry> parse_baseline_csv(const std::string& text) {
    return parse_csv(text, true);
}

std::vector<DerivationRecord> seeds_from_entries(const std::vector<CatalogEntry>& entries) {
    std::vector<DerivationRecord> seeds;
    for (const CatalogEntry& e : entries) {
        DerivationRecord rec;
        rec.params = e.params;
        rec.rule = Rule::Seed;
        rec.root_params = e.params;
        seeds.push_back(std::move(rec));
    }
    return seeds;
}

std::vector<ComparisonVerdict> compare(const std::vector<CatalogEntry>& ours,
                                       const std::vector<CatalogEntry>& baseline) {
    using KeyQND = std::tuple<uint64_t, uint64_t, uint64_t>;
    std::map<KeyQND, const CatalogEntry*> best_k;  // (q,N,D) -> max K
    std::map<KeyQND, const CatalogEntry*> best_d;  // (q,N,K) -> max D
    for (const CatalogEntry& e : ours) {
        KeyQND qnd{e.params.q, e.params.N, e.params.D};
        auto it = best_k.find(qnd);
        if (it == best_k.end() || e.params.K > it->second->params.K) best_k[qnd] = &e;
        KeyQND qnk{e.params.q, e.params.N, e.params.K};
        auto jt = best_d.find(qnk);
        if (jt == best_d.end() || e.params.D > jt->second->params.D) best_d[qnk] = &e;
    }

    std::vector<ComparisonVerdict> out;
    for (const CatalogEntry& b : baseline) {
        ComparisonVerdict v;
        v.theirs = b;
        auto it = best_k.find({b.params.q, b.params.N, b.params.D});
        if (it != best_k.end()) {
            v.ours = *it->second;
            uint64_t k_ours = it->second->params.K;
            v.verdict = k_ours > b.params.K   ? ComparisonVerdict::Kind::Better
                        : k_ours == b.params.K ? ComparisonVerdict::Kind::Equal
                                               : ComparisonVerdict::Kind::Worse;
        } else {
            auto jt = best_d.find({b.params.q, b.params.N, b.params.K});
            if (jt != best_d.end()) {
                v.ours = *jt->second;
                uint64_t d_ours = jt->second->params.D;
                v.verdict = d_ours > b.params.D   ? ComparisonVerdict::Kind::Better
                            : d_ours == b.params.D ? ComparisonVerdict::Kind::Equal
                                                   : ComparisonVerdict::Kind::Worse;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace hsoq
