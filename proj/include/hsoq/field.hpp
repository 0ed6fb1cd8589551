#ifndef HSOQ_FIELD_HPP
#define HSOQ_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hsoq/error.hpp"

namespace hsoq {

class FieldElement;

/// Exact arithmetic in F_{p^s}.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree s over F_p (scanning non-leading coefficient tuples in ascending
/// order of their packed encoding), so construction is deterministic and
/// reproducible across builds. Elements are packed as sum(c_i * p^i) with
/// little-endian coefficients c_i in [0, p); the packed integer is also the
/// canonical serialization.
///
/// When the field plays the role of F_{e^2}, the conjugation exponent e is
/// recorded and conj(x) = x^e implements the involution used by the Hermitian
/// inner product. A Field is immutable after construction and can be shared
/// freely across threads; every operation is a pure function.
class Field {
  public:
    /// Builds F_{p^s}. Requires p prime, s >= 1, p^s <= 2^32. With
    /// `with_conj` set, s must be even and conj_exponent() becomes p^(s/2).
    static Field make(uint64_t p, uint32_t s, bool with_conj = false);

    uint64_t characteristic() const noexcept { return p_; }
    uint32_t degree() const noexcept { return s_; }
    uint64_t order() const noexcept { return order_; }

    /// Monic modulus polynomial, s+1 little-endian coefficients.
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }

    bool has_conj() const noexcept { return conj_exp_ != 0; }

    /// The exponent e with conj(x) = x^e; throws NoConjugation when unset.
    uint64_t conj_exponent() const;

    // Arithmetic on packed values in [0, order).
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// x -> x^e where e = conj_exponent(). An involution: conj(conj(x)) = x.
    uint32_t conj(uint32_t a) const;

    /// Smallest v (in packed order) with v^(e+1) = u, for nonzero u in the
    /// fixed subfield F_e. Exists because the norm map is surjective.
    uint32_t norm_preimage(uint32_t u) const;

    std::vector<uint32_t> coeffs(uint32_t a) const;
    uint32_t pack(const std::vector<uint32_t>& coeffs) const;

    FieldElement element(uint32_t packed) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool operator==(const Field& other) const noexcept;
    bool operator!=(const Field& other) const noexcept { return !(*this == other); }

    std::string name() const;  // e.g. "GF(81)"

  private:
    Field() = default;

    // discrete exp/log tables, built for orders up to 2^16; shared between
    // copies of the same Field
    struct Tables {
        std::vector<uint32_t> exp;  // exp[i] = g^i, doubled to skip the mod
        std::vector<uint32_t> log;  // log[exp[i]] = i for i < order-1
    };

    uint32_t mul_poly(uint32_t a, uint32_t b) const;
    uint32_t pow_poly(uint32_t a, uint64_t e) const;
    void build_tables();

    uint64_t p_ = 0;
    uint32_t s_ = 0;
    uint64_t order_ = 0;
    std::vector<uint32_t> modulus_;
    uint64_t conj_exp_ = 0;  // 0 = no conjugation defined
    std::shared_ptr<const Tables> tables_;
};

/// A value of a Field. Holds the packed encoding plus a pointer to its field;
/// the Field must outlive the element.
class FieldElement {
  public:
    FieldElement(const Field& field, uint32_t packed)
        : field_(&field), value_(packed) {}

    uint32_t value() const noexcept { return value_; }
    const Field& field() const noexcept { return *field_; }
    std::vector<uint32_t> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;
    FieldElement conj() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    const Field* field_;
    uint32_t value_;
};

}  // namespace hsoq

#endif
