#include "hsoq/derive.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace hsoq {

std::string QuantumParams::display() const {
    return "[[" + std::to_string(N) + "," + std::to_string(K) + ",>=" + std::to_string(D) +
           "]]_" + std::to_string(q);
}

const char* to_string(Rule r) {
    switch (r) {
        case Rule::Seed: return "seed";
        case Rule::BaseHermitian: return "base-hermitian";
        case Rule::Extension: return "extension";
        case Rule::Lengthen: return "lengthen";
        case Rule::Subcode: return "subcode";
        case Rule::BestExtension: return "best-extension";
    }
    return "unknown";
}

std::string DerivationRecord::marker() const {
    if (steps.empty()) return "*";
    if (marker_ambiguous) return "L|S";
    return steps.back() == Rule::Lengthen ? "L" : "S";
}

std::vector<std::string> DerivationRecord::chain_strings() const {
    std::vector<std::string> out;
    if (seed) {
        out.push_back("theorem q=" + std::to_string(seed->q) + " m=" + std::to_string(seed->m) +
                      " n=" + std::to_string(seed->n) + " k=" + std::to_string(seed->k));
    } else {
        out.push_back("seed " + root_params.display());
    }
    for (Rule step : steps) out.push_back(to_string(step));
    return out;
}

namespace {

void check_base_args(uint64_t q, uint64_t n, uint64_t k, uint64_t d_dual) {
    if (!is_prime_power(q))
        throw Error(ErrorKind::InvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
    if (d_dual < 1)
        throw Error(ErrorKind::InvalidArgument, "dual distance must be positive");
    if (2 * k > n)
        throw Error(ErrorKind::DimensionOverflow,
                    "2k=" + std::to_string(2 * k) + " exceeds n=" + std::to_string(n));
}

}  // namespace

QuantumParams derive_base(uint64_t q, uint64_t n, uint64_t k, uint64_t d_dual) {
    check_base_args(q, n, k, d_dual);
    return QuantumParams{q, n, n - 2 * k, d_dual, false};
}

QuantumParams derive_extended(uint64_t q, uint64_t m, uint64_t n, uint64_t k, uint64_t d_dual) {
    if (m < 1 || m > (uint64_t(1) << 16) || n > (uint64_t(1) << 32))
        throw Error(ErrorKind::InvalidArgument, "extension parameters out of supported range");
    check_base_args(q, n, k, d_dual);
    return QuantumParams{q, m * n, m * n - 2 * m * k, d_dual, false};
}

DerivationRecord derive_from_theorem(uint64_t q, uint64_t m, uint64_t n, uint64_t k) {
    if (!is_prime_power(q))
        throw Error(ErrorKind::InvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "extension multiplier m must be positive");
    uint64_t e = 1;
    for (uint64_t i = 0; i < m; ++i) {
        if (e > (uint64_t(1) << 32) / q)
            throw Error(ErrorKind::EOutOfRange, "q^m overflows the supported range");
        e *= q;
    }
    KmaxResult bound = kmax(e, n);  // validates e > 2 and 2 <= n <= e^2
    if (k < 1 || k > bound.value)
        throw Error(ErrorKind::KTooLarge,
                    "k=" + std::to_string(k) + " outside the valid range 1.." +
                        std::to_string(bound.value) + " for e=" + std::to_string(e) +
                        ", n=" + std::to_string(n));
    DerivationRecord rec;
    rec.params = derive_extended(q, m, n, k, k + 1);
    rec.rule = m == 1 ? Rule::BaseHermitian : Rule::Extension;
    rec.seed = TheoremSeed{q, m, n, k};
    rec.root_params = rec.params;
    return rec;
}

DerivationRecord lengthen(const DerivationRecord& r) {
    DerivationRecord out = r;
    out.params.N += 1;
    out.rule = Rule::Lengthen;
    out.steps.push_back(Rule::Lengthen);
    out.marker_ambiguous = false;
    return out;
}

DerivationRecord subcode(const DerivationRecord& r) {
    if (r.params.K < 1)
        throw Error(ErrorKind::DimensionUnderflow,
                    "subcode of " + r.params.display() + " would have negative dimension");
    DerivationRecord out = r;
    out.params.K -= 1;
    out.rule = Rule::Subcode;
    out.steps.push_back(Rule::Subcode);
    out.marker_ambiguous = false;
    return out;
}

namespace {

// Lengthen < Subcode, then lexicographic over step lists of equal length.
bool chain_less(const std::vector<Rule>& a, const std::vector<Rule>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::vector<DerivationRecord> closure(const std::vector<DerivationRecord>& seeds,
                                      uint64_t n_max, uint64_t k_min,
                                      const ClosureOptions& options) {
    using Key = std::tuple<uint64_t, uint64_t, uint64_t, uint64_t>;
    auto key_of = [](const QuantumParams& p) { return Key{p.q, p.N, p.K, p.D}; };
    auto in_bounds = [&](const QuantumParams& p) { return p.N <= n_max && p.K >= k_min; };

    std::map<Key, DerivationRecord> visited;
    std::vector<DerivationRecord> frontier;
    for (const DerivationRecord& s : seeds) {
        if (!in_bounds(s.params)) continue;
        Key key = key_of(s.params);
        auto it = visited.find(key);
        if (it == visited.end() || chain_less(s.steps, it->second.steps)) visited[key] = s;
    }
    for (auto& [key, rec] : visited) frontier.push_back(rec);

    uint64_t depth = 0;
    while (!frontier.empty() && depth < options.max_steps) {
        ++depth;
        if (frontier.size() > options.frontier_budget)
            throw Error(ErrorKind::BudgetExceeded,
                        "closure frontier exceeds " + std::to_string(options.frontier_budget));
        // Candidates of this level, grouped by parameter key. Expanding in
        // chain order with Lengthen before Subcode makes the first arrival
        // the lexicographically smallest chain of this length.
        std::sort(frontier.begin(), frontier.end(),
                  [](const DerivationRecord& a, const DerivationRecord& b) {
                      return chain_less(a.steps, b.steps);
                  });
        std::map<Key, DerivationRecord> level;
        for (const DerivationRecord& rec : frontier) {
            DerivationRecord children[2] = {lengthen(rec),
                                            rec.params.K >= 1 ? subcode(rec) : DerivationRecord{}};
            size_t child_count = rec.params.K >= 1 ? 2 : 1;
            for (size_t i = 0; i < child_count; ++i) {
                const DerivationRecord& child = children[i];
                if (!in_bounds(child.params)) continue;
                Key key = key_of(child.params);
                if (visited.count(key)) continue;  // shorter chain already known
                auto it = level.find(key);
                if (it == level.end()) {
                    level.emplace(key, child);
                } else if (it->second.steps.back() != child.steps.back()) {
                    it->second.marker_ambiguous = true;
                }
            }
        }
        frontier.clear();
        for (auto& [key, rec] : level) {
            visited.emplace(key, rec);
            frontier.push_back(rec);
        }
    }

    std::vector<DerivationRecord> out;
    out.reserve(visited.size());
    for (auto& [key, rec] : visited) out.push_back(rec);
    std::sort(out.begin(), out.end(), [](const DerivationRecord& a, const DerivationRecord& b) {
        return std::tuple(a.params.q, ~a.params.N, ~a.params.K, a.params.D) <
               std::tuple(b.params.q, ~b.params.N, ~b.params.K, b.params.D);
    });
    return out;
}

DerivationRecord best_extension(uint64_t q, uint64_t N_target, uint64_t d) {
    if (d < 2)
        throw Error(ErrorKind::InvalidArgument, "best_extension needs d >= 2");
    if (N_target < 2)
        throw Error(ErrorKind::InvalidArgument, "best_extension needs N >= 2");
    if (!is_prime_power(q))
        throw Error(ErrorKind::InvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
    for (uint64_t m = 1; m <= N_target; ++m) {
        if (N_target % m != 0) continue;
        uint64_t n = N_target / m;
        uint64_t e = 1;
        bool overflow = false;
        for (uint64_t i = 0; i < m; ++i) {
            if (e > (uint64_t(1) << 32) / q) {
                overflow = true;
                break;
            }
            e *= q;
        }
        if (overflow) break;  // larger m only grows e further
        if (e <= 2) continue;
        if (n < 2 || n > e * e) continue;
        if (d - 1 > kmax(e, n).value) continue;
        DerivationRecord rec = derive_from_theorem(q, m, n, d - 1);
        rec.rule = Rule::BestExtension;
        return rec;
    }
    throw Error(ErrorKind::NoValidExtension,
                "no extension degree yields [[" + std::to_string(N_target) + ", *, >=" +
                    std::to_string(d) + "]]_" + std::to_string(q));
}

}  // namespace hsoq
