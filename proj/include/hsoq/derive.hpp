#ifndef HSOQ_DERIVE_HPP
#define HSOQ_DERIVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsoq/error.hpp"
#include "hsoq/kmax.hpp"

namespace hsoq {

/// [[N, K, >= D]]_q. Distances are tracked as lower bounds only; nothing in
/// this library ever promotes one to exact.
struct QuantumParams {
    uint64_t q = 0;
    uint64_t N = 0;
    uint64_t K = 0;
    uint64_t D = 1;
    bool exact_d = false;

    bool operator==(const QuantumParams&) const = default;
    std::string display() const;  // "[[N,K,>=D]]_q"
};

enum class Rule { Seed, BaseHermitian, Extension, Lengthen, Subcode, BestExtension };

const char* to_string(Rule r);

/// The (q, m, n, k) tuple a derivation chain terminates at; always satisfies
/// k <= kmax(q^m, n) when produced by derive_from_theorem.
struct TheoremSeed {
    uint64_t q = 0;
    uint64_t m = 0;
    uint64_t n = 0;
    uint64_t k = 0;

    bool operator==(const TheoremSeed&) const = default;
};

/// Parameters plus the provenance needed to replay how they were obtained:
/// the chain root (a theorem application or an externally supplied seed)
/// followed by the propagation steps in order.
struct DerivationRecord {
    QuantumParams params;
    Rule rule = Rule::Seed;  // how this record was produced
    std::optional<TheoremSeed> seed;
    QuantumParams root_params;  // parameters at the start of the chain
    std::vector<Rule> steps;    // Lengthen / Subcode applications

    /// True when several distinct shortest chains reach these parameters
    /// with different final rules; only set by closure().
    bool marker_ambiguous = false;

    /// "*" for chain roots, else "L", "S" or "L|S".
    std::string marker() const;
    /// Chain root plus steps, e.g. {"theorem q=2 m=4 n=63 k=6", "lengthen"}.
    std::vector<std::string> chain_strings() const;
};

/// [[n, n-2k, >= d_dual]]_q from a Hermitian self-orthogonal [n, k] code
/// over F_{q^2}.
QuantumParams derive_base(uint64_t q, uint64_t n, uint64_t k, uint64_t d_dual);

/// [[mn, mn-2mk, >= d_dual]]_q from a Hermitian self-orthogonal [n, k] code
/// over F_{q^{2m}}. m = 1 specializes to derive_base.
QuantumParams derive_extended(uint64_t q, uint64_t m, uint64_t n, uint64_t k, uint64_t d_dual);

/// derive_extended with d_dual = k+1, valid whenever k <= kmax(q^m, n);
/// returns full provenance.
DerivationRecord derive_from_theorem(uint64_t q, uint64_t m, uint64_t n, uint64_t k);

/// [[N+1, K, >= D]]_q. Always applicable.
DerivationRecord lengthen(const DerivationRecord& r);

/// [[N, K-1, >= D]]_q. Requires K >= 1.
DerivationRecord subcode(const DerivationRecord& r);

struct ClosureOptions {
    uint64_t max_steps = UINT64_MAX;
    uint64_t frontier_budget = 1'000'000;
};

/// BFS fixed point of {lengthen, subcode} over the seeds, keeping records
/// with N <= n_max and K >= k_min. Deduplicates on (q, N, K, D), keeping the
/// lexicographically smallest among shortest chains (Lengthen < Subcode).
/// Output is sorted by (q asc, N desc, K desc, D asc).
std::vector<DerivationRecord> closure(const std::vector<DerivationRecord>& seeds,
                                      uint64_t n_max, uint64_t k_min,
                                      const ClosureOptions& options = {});

/// Smallest extension degree m' dividing N_target for which the theorem
/// yields [[N_target, N_target - 2 m' (d-1), >= d]]_q; smaller m' always
/// dominates since the dimension loss is 2 m' (d-1).
DerivationRecord best_extension(uint64_t q, uint64_t N_target, uint64_t d);

}  // namespace hsoq

#endif
