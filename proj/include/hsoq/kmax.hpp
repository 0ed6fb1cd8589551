#ifndef HSOQ_KMAX_HPP
#define HSOQ_KMAX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hsoq/error.hpp"

namespace hsoq {

/// n = a*e + b with 0 <= b < e, including the boundary a = e, b = 0 (n = e^2).
struct EadicForm {
    uint64_t e = 0;
    uint64_t n = 0;
    uint64_t a = 0;
    uint64_t b = 0;
};

/// A multiset {n_1, ..., n_t} with sum n, t <= e and 2 <= n_i <= e. Parts are
/// kept sorted descending so equal partitions serialize identically.
struct Partition {
    std::vector<uint64_t> parts;

    uint64_t sum() const;
    uint64_t min_part() const;
    size_t count() const { return parts.size(); }
    bool operator==(const Partition&) const = default;
};

enum class KmaxCase { BZero, AZero, Overflow, Balanced };

const char* to_string(KmaxCase c);

/// In the balanced case the quotient bound floor(n/(a+1)) always dominates
/// the tail bound a+b; the active branch is recorded so it can be reported.
enum class BalancedBranch { NotApplicable, Quotient, Tail };

struct KmaxResult {
    uint64_t value = 0;
    KmaxCase case_tag = KmaxCase::BZero;
    BalancedBranch balanced_branch = BalancedBranch::NotApplicable;
    Partition witness;
};

struct PartitionCheck {
    bool ok = true;
    std::vector<std::string> reasons;
    explicit operator bool() const { return ok; }
};

bool is_prime_power(uint64_t e);

/// Requires e > 2 a prime power and 2 <= n <= e^2.
EadicForm eadic(uint64_t e, uint64_t n);

/// The largest dimension K_n for which a suitable Hermitian self-orthogonal
/// [n, k <= K_n] code over F_{e^2} is guaranteed to exist, together with a
/// partition certifying achievability.
KmaxResult kmax(uint64_t e, uint64_t n);

/// Constructive partition with floor(min_part/2) = kmax(e, n).value.
Partition partition_witness(uint64_t e, uint64_t n);

/// True iff the partition has at most e parts, every part lies in [2, e],
/// and 2k <= min part. Violations are collected, not thrown.
PartitionCheck validate_partition(uint64_t e, uint64_t k, const Partition& p);

/// Independent verifier: floor(M/2) where M is the best achievable minimum
/// part over all partitions of n into at most e parts from [2, e], found by
/// dynamic programming with no reference to the closed K_n formula.
/// Returns 0 when no admissible partition exists. Requires e <= 32, n <= e^2.
uint64_t kmax_bruteforce_oracle(uint64_t e, uint64_t n);

}  // namespace hsoq

#endif
