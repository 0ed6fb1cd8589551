#ifndef HSOQ_CONSTRUCTOR_HPP
#define HSOQ_CONSTRUCTOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hsoq/linear_code.hpp"

namespace hsoq {

/// A re-verifiable witness: an explicit Hermitian self-orthogonal [n, k]
/// code over F_{e^2} whose Hermitian dual has minimum distance exactly k+1.
/// verify() recomputes every check from the generator matrix alone.
struct Certificate {
    LinearCode code;

    struct Claims {
        uint64_t n = 0;
        uint64_t k = 0;
        uint64_t dual_distance = 0;
    } claimed;

    struct Checks {
        bool self_orthogonal = false;
        uint64_t dual_dim = 0;
        uint64_t dual_distance = 0;
        std::string method;
    } checks;

    uint64_t rng_seed = 0;

    const Field& field() const { return code.field(); }
};

struct ConstructOptions {
    uint64_t point_set_budget = 200;    // fresh evaluation-point sets
    uint64_t sample_budget = 100'000;   // solution-space draws per point set
    uint64_t max_enum = kDefaultMaxEnum;
};

/// Randomized search for a witness: sample n distinct evaluation points,
/// solve for subfield column weights making all generator rows pairwise
/// Hermitian-orthogonal, lift the weights through the norm map, then verify.
/// Deterministic for a given rng_seed. Throws SearchExhausted when the
/// budget runs out (which does not disprove existence).
Certificate construct(uint64_t q, uint64_t m, uint64_t n, uint64_t k, uint64_t rng_seed,
                      const ConstructOptions& options = {});

/// Recomputes rank, self-orthogonality, dual dimension and dual distance
/// from the generator matrix, ignoring the stored check results. Names of
/// failed checks are appended to `failed` when provided.
bool verify(const Certificate& cert, std::vector<std::string>* failed = nullptr,
            uint64_t max_enum = kDefaultMaxEnum);

/// Deterministic k = 1 construction: scans subfield weight vectors with
/// u_1 = ... = u_{n-1} free and u_n forced by the zero-sum condition, and
/// emits the first witness in scan order.
Certificate exhaustive_construct_k1(uint64_t q, uint64_t m, uint64_t n);

/// Splits q into (p, r) with q = p^r; InvalidArgument when q is not a
/// prime power.
std::pair<uint64_t, uint32_t> prime_power_split(uint64_t q);

}  // namespace hsoq

#endif
