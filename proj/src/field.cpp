#include "hsoq/field.hpp"

#include <algorithm>

namespace hsoq {

namespace {

constexpr uint64_t kMaxOrder = uint64_t(1) << 32;

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Little-endian digit vectors over F_p. deg(f) is tracked by the caller;
// vectors may carry trailing zeros.

// Remainder of f by a monic divisor d of degree dd, in place.
void poly_mod(std::vector<uint64_t>& f, const std::vector<uint64_t>& d,
              size_t dd, uint64_t p) {
    for (size_t i = f.size(); i-- > dd;) {
        uint64_t c = f[i];
        if (c == 0) continue;
        f[i] = 0;
        for (size_t j = 0; j < dd; ++j) {
            uint64_t sub = (c * d[j]) % p;
            f[i - dd + j] = (f[i - dd + j] + p - sub) % p;
        }
    }
}

bool is_zero_below(const std::vector<uint64_t>& f, size_t deg) {
    for (size_t i = 0; i < deg && i < f.size(); ++i)
        if (f[i] != 0) return false;
    return true;
}

// Monic f of degree s, little-endian, f[s] == 1. Requires a nonzero constant
// term (so the degree-1 scan picks x+1, not x) and no monic divisor of degree
// 1..s/2, checked by trial division.
bool is_irreducible(const std::vector<uint32_t>& f, uint32_t s, uint64_t p) {
    if (f[0] == 0) return false;
    std::vector<uint64_t> divisor;
    for (uint32_t dd = 1; dd <= s / 2; ++dd) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < dd; ++i) count *= p;
        divisor.assign(dd + 1, 0);
        divisor[dd] = 1;
        for (uint64_t idx = 0; idx < count; ++idx) {
            uint64_t v = idx;
            for (uint32_t i = 0; i < dd; ++i) {
                divisor[i] = v % p;
                v /= p;
            }
            std::vector<uint64_t> rem(f.begin(), f.end());
            poly_mod(rem, divisor, dd, p);
            if (is_zero_below(rem, dd)) return false;
        }
    }
    return true;
}

}  // namespace

Field Field::make(uint64_t p, uint32_t s, bool with_conj) {
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrime, "characteristic " + std::to_string(p) + " is not prime");
    if (s == 0)
        throw Error(ErrorKind::DegreeTooLarge, "extension degree must be positive");
    uint64_t order = 1;
    for (uint32_t i = 0; i < s; ++i) {
        if (order > kMaxOrder / p)
            throw Error(ErrorKind::DegreeTooLarge,
                        "p^s exceeds 2^32 for p=" + std::to_string(p) + ", s=" + std::to_string(s));
        order *= p;
    }
    if (order > kMaxOrder)
        throw Error(ErrorKind::DegreeTooLarge, "p^s exceeds 2^32");
    if (with_conj && s % 2 != 0)
        throw Error(ErrorKind::ConjOnOddDegree,
                    "conjugation needs an even extension degree, got s=" + std::to_string(s));

    Field f;
    f.p_ = p;
    f.s_ = s;
    f.order_ = order;

    // Scan non-leading coefficient tuples in ascending packed order.
    std::vector<uint32_t> cand(s + 1, 0);
    cand[s] = 1;
    uint64_t limit = order;
    bool found = false;
    for (uint64_t enc = 0; enc < limit; ++enc) {
        uint64_t v = enc;
        for (uint32_t i = 0; i < s; ++i) {
            cand[i] = uint32_t(v % p);
            v /= p;
        }
        if (is_irreducible(cand, s, p)) {
            found = true;
            break;
        }
    }
    if (!found)
        throw Error(ErrorKind::DegreeTooLarge, "no irreducible modulus found");  // cannot happen
    f.modulus_ = cand;

    if (with_conj) {
        uint64_t e = 1;
        for (uint32_t i = 0; i < s / 2; ++i) e *= p;
        f.conj_exp_ = e;
    }
    if (order > 2 && order <= 65536) f.build_tables();
    return f;
}

void Field::build_tables() {
    // smallest multiplicative generator, certified by the prime factors of
    // the group order
    uint64_t group = order_ - 1;
    std::vector<uint64_t> factors;
    uint64_t rest = group;
    for (uint64_t d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            factors.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) factors.push_back(rest);

    uint32_t gen = 0;
    for (uint32_t g = 2; g < order_; ++g) {
        bool primitive = true;
        for (uint64_t pf : factors) {
            if (pow_poly(g, group / pf) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0)
        throw Error(ErrorKind::DegreeTooLarge, "no multiplicative generator");  // cannot happen

    auto tables = std::make_shared<Tables>();
    tables->exp.resize(2 * group - 1);
    tables->log.assign(order_, 0);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < group; ++i) {
        tables->exp[i] = cur;
        tables->log[cur] = uint32_t(i);
        cur = mul_poly(cur, gen);
    }
    for (uint64_t i = group; i < 2 * group - 1; ++i) tables->exp[i] = tables->exp[i - group];
    tables_ = std::move(tables);
}

uint64_t Field::conj_exponent() const {
    if (conj_exp_ == 0)
        throw Error(ErrorKind::NoConjugation, "field " + name() + " has no conjugation exponent");
    return conj_exp_;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint64_t x = a, y = b, out = 0, mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        out += ((x % p_ + y % p_) % p_) * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return uint32_t(out);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint64_t x = a, y = b, out = 0, mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        out += ((x % p_ + p_ - y % p_) % p_) * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return uint32_t(out);
}

uint32_t Field::neg(uint32_t a) const { return sub(0, a); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return tables_->exp[size_t(tables_->log[a]) + tables_->log[b]];
    return mul_poly(a, b);
}

uint32_t Field::mul_poly(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t da[32], db[32], t[63] = {0};
    uint64_t x = a, y = b;
    for (uint32_t i = 0; i < s_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    for (uint32_t i = 0; i < s_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < s_; ++j)
            t[i + j] = (t[i + j] + da[i] * db[j]) % p_;
    }
    // reduce by the monic modulus
    for (uint32_t i = 2 * s_ - 2 + 1; i-- > s_;) {
        uint64_t c = t[i];
        if (c == 0) continue;
        t[i] = 0;
        for (uint32_t j = 0; j < s_; ++j) {
            uint64_t sub_ = (c * modulus_[j]) % p_;
            t[i - s_ + j] = (t[i - s_ + j] + p_ - sub_) % p_;
        }
    }
    uint64_t out = 0, mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        out += t[i] * mult;
        mult *= p_;
    }
    return uint32_t(out);
}

uint32_t Field::pow_poly(uint32_t a, uint64_t e) const {
    uint32_t result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul_poly(result, base);
        base = mul_poly(base, base);
        e >>= 1;
    }
    return result;
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (tables_) {
        if (a == 0) return e == 0 ? 1 : 0;
        uint64_t group = order_ - 1;
        return tables_->exp[uint64_t(tables_->log[a]) * (e % group) % group];
    }
    return pow_poly(a, e);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0)
        throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + name());
    if (tables_) return tables_->exp[order_ - 1 - tables_->log[a]];
    return pow_poly(a, order_ - 2);
}

uint32_t Field::conj(uint32_t a) const { return pow(a, conj_exponent()); }

uint32_t Field::norm_preimage(uint32_t u) const {
    uint64_t e = conj_exponent();
    if (u == 0)
        throw Error(ErrorKind::ZeroInput, "norm preimage of zero");
    if (conj(u) != u)
        throw Error(ErrorKind::NotInSubfield,
                    "element " + std::to_string(u) + " is not fixed by conjugation");
    for (uint64_t v = 1; v < order_; ++v)
        if (pow(uint32_t(v), e + 1) == u) return uint32_t(v);
    throw Error(ErrorKind::ZeroInput, "norm map not surjective");  // cannot happen
}

std::vector<uint32_t> Field::coeffs(uint32_t a) const {
    std::vector<uint32_t> c(s_);
    uint64_t v = a;
    for (uint32_t i = 0; i < s_; ++i) {
        c[i] = uint32_t(v % p_);
        v /= p_;
    }
    return c;
}

uint32_t Field::pack(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() != s_)
        throw Error(ErrorKind::InvalidArgument, "coefficient vector must have length s");
    uint64_t out = 0, mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        if (coeffs[i] >= p_)
            throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
        out += uint64_t(coeffs[i]) * mult;
        mult *= p_;
    }
    return uint32_t(out);
}

FieldElement Field::element(uint32_t packed) const {
    if (packed >= order_)
        throw Error(ErrorKind::InvalidArgument, "packed value out of range for " + name());
    return FieldElement(*this, packed);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

bool Field::operator==(const Field& other) const noexcept {
    return p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_ &&
           conj_exp_ == other.conj_exp_;
}

std::string Field::name() const { return "GF(" + std::to_string(order_) + ")"; }

namespace {
const Field& same_field(const Field& a, const Field& b) {
    if (a != b)
        throw Error(ErrorKind::FieldMismatch,
                    "operands live in different fields: " + a.name() + " vs " + b.name());
    return a;
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const Field& f = same_field(*field_, *o.field_);
    return FieldElement(f, f.add(value_, o.value_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const Field& f = same_field(*field_, *o.field_);
    return FieldElement(f, f.sub(value_, o.value_));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(*field_, field_->neg(value_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const Field& f = same_field(*field_, *o.field_);
    return FieldElement(f, f.mul(value_, o.value_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    const Field& f = same_field(*field_, *o.field_);
    return FieldElement(f, f.mul(value_, f.inv(o.value_)));
}

FieldElement FieldElement::inverse() const {
    return FieldElement(*field_, field_->inv(value_));
}

FieldElement FieldElement::pow(uint64_t e) const {
    return FieldElement(*field_, field_->pow(value_, e));
}

FieldElement FieldElement::conj() const {
    return FieldElement(*field_, field_->conj(value_));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return *field_ == *o.field_ && value_ == o.value_;
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::ConjOnOddDegree: return "ConjOnOddDegree";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NoConjugation: return "NoConjugation";
        case ErrorKind::NotInSubfield: return "NotInSubfield";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::EOutOfRange: return "EOutOfRange";
        case ErrorKind::NOutOfRange: return "NOutOfRange";
        case ErrorKind::DimensionOverflow: return "DimensionOverflow";
        case ErrorKind::DimensionUnderflow: return "DimensionUnderflow";
        case ErrorKind::KTooLarge: return "KTooLarge";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NoValidExtension: return "NoValidExtension";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::MalformedCertificate: return "MalformedCertificate";
        case ErrorKind::MalformedCsv: return "MalformedCsv";
        case ErrorKind::UnknownTable: return "UnknownTable";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace hsoq
