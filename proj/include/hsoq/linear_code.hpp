#ifndef HSOQ_LINEAR_CODE_HPP
#define HSOQ_LINEAR_CODE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hsoq/field.hpp"

namespace hsoq {

namespace linalg {

/// Deterministic reduced row echelon form: pivot on the leftmost nonzero
/// column, first nonzero row. Returns the rank. `m` is row-major.
size_t rref_in_place(const Field& f, std::vector<uint32_t>& m, size_t rows, size_t cols);

size_t rank_of(const Field& f, std::vector<uint32_t> m, size_t rows, size_t cols);

/// Basis of {x : m x = 0}, one row per free column in ascending column
/// order; deterministic.
std::vector<std::vector<uint32_t>> nullspace(const Field& f, std::vector<uint32_t> m,
                                             size_t rows, size_t cols);

}  // namespace linalg

/// A linear [n, k] code presented by a full-rank generator matrix over a
/// Field. k = 0 (empty generator) is permitted so that duals of the full
/// space have a value representation. Immutable.
class LinearCode {
  public:
    /// `generator` is row-major with k*n packed entries; rank must equal k.
    LinearCode(const Field& field, uint32_t n, std::vector<uint32_t> generator);

    const Field& field() const noexcept { return field_; }
    uint32_t length() const noexcept { return n_; }
    uint32_t dim() const noexcept { return k_; }

    uint32_t at(uint32_t r, uint32_t c) const { return gen_[size_t(r) * n_ + c]; }
    std::span<const uint32_t> row(uint32_t r) const {
        return {gen_.data() + size_t(r) * n_, n_};
    }
    const std::vector<uint32_t>& generator() const noexcept { return gen_; }

    /// Row-reduced echelon form of the generator (zero rows dropped); equal
    /// row spaces yield equal canonical forms.
    std::vector<uint32_t> canonical_form() const;

  private:
    Field field_;
    uint32_t n_;
    uint32_t k_;
    std::vector<uint32_t> gen_;
};

struct DistanceReport {
    enum class Method { Exhaustive, ColumnDependence };
    uint32_t value = 0;
    Method method = Method::Exhaustive;
    uint64_t enumerated_count = 0;
};

/// sum_i x_i * conj(y_i); the field must carry a conjugation exponent.
uint32_t hermitian_inner(const Field& f, std::span<const uint32_t> x,
                         std::span<const uint32_t> y);
FieldElement hermitian_inner(const std::vector<FieldElement>& x,
                             const std::vector<FieldElement>& y);

/// True iff every pair of generator rows is Hermitian-orthogonal,
/// equivalently C is contained in its Hermitian dual.
bool is_hermitian_self_orthogonal(const LinearCode& c);

/// The annihilator {x : x .h y = 0 for all y in C}, of dimension n - k.
LinearCode hermitian_dual(const LinearCode& c);

/// The code generated by the entrywise conjugate of the generator matrix.
LinearCode conjugated(const LinearCode& c);

constexpr uint64_t kDefaultMaxEnum = 10'000'000;

/// Minimum Hamming weight over all |F|^k - 1 nonzero codewords, enumerated
/// with a reflected mixed-radix Gray walk (one row update per codeword).
/// Throws TooLarge when |F|^k exceeds `max_enum`.
DistanceReport min_distance_exhaustive(const LinearCode& c, uint64_t max_enum = kDefaultMaxEnum);

/// d(C^perp_h) as the smallest w such that some w columns of the generator
/// are linearly dependent; the conjugated generator is a parity-check matrix
/// of the Hermitian dual and entrywise automorphisms preserve dependence.
/// Throws TooLarge when sum_{w<=k+1} C(n,w) exceeds `max_enum`.
DistanceReport dual_distance_via_columns(const LinearCode& c, uint64_t max_enum = kDefaultMaxEnum);

/// All minimal dependent column subsets (those with every proper subset
/// independent), for small n; used to cross-check dependence invariance
/// under conjugation.
std::vector<std::vector<uint32_t>> minimal_dependent_column_sets(const LinearCode& c);

}  // namespace hsoq

#endif
