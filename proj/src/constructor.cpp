#include "hsoq/constructor.hpp"

#include <algorithm>
#include <numeric>

#include "hsoq/kmax.hpp"

namespace hsoq {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Small deterministic generator; results must not depend on the platform's
/// std::uniform_int_distribution, so sampling is done by rejection here.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

  private:
    uint64_t state_;
};

struct FieldContext {
    Field field;
    uint64_t e = 0;
    std::vector<uint32_t> fixed;          // the subfield F_e, ascending packed order
    std::vector<uint32_t> fixed_nonzero;  // F_e^*, ascending packed order
    uint32_t basis_beta = 0;              // some beta with conj(beta) != beta
    uint32_t basis_delta_inv = 0;         // 1 / (beta - conj(beta))
};

FieldContext make_context(uint64_t p, uint32_t s, uint64_t expected_e) {
    FieldContext ctx{Field::make(p, s, /*with_conj=*/true), 0, {}, {}, 0, 0};
    ctx.e = ctx.field.conj_exponent();
    if (ctx.e != expected_e)
        throw Error(ErrorKind::InvalidArgument, "conjugation exponent mismatch");
    for (uint64_t v = 0; v < ctx.field.order(); ++v) {
        uint32_t x = uint32_t(v);
        if (ctx.field.conj(x) == x) {
            ctx.fixed.push_back(x);
            if (x != 0) ctx.fixed_nonzero.push_back(x);
        } else if (ctx.basis_beta == 0) {
            ctx.basis_beta = x;
        }
    }
    if (ctx.fixed.size() != ctx.e)
        throw Error(ErrorKind::InvalidArgument, "fixed subfield has unexpected size");
    uint32_t delta = ctx.field.sub(ctx.basis_beta, ctx.field.conj(ctx.basis_beta));
    ctx.basis_delta_inv = ctx.field.inv(delta);
    return ctx;
}

/// Coordinates of x in the F_e-basis {1, beta}: x = c0 + c1*beta with c0, c1
/// in the fixed subfield.
std::pair<uint32_t, uint32_t> subfield_coords(const FieldContext& ctx, uint32_t x) {
    const Field& f = ctx.field;
    uint32_t c1 = f.mul(f.sub(x, f.conj(x)), ctx.basis_delta_inv);
    uint32_t c0 = f.sub(x, f.mul(c1, ctx.basis_beta));
    return {c0, c1};
}

/// Orthogonality system for evaluation points a: sum_i u_i a_i^(s + t*e) = 0
/// for all 0 <= s, t < k, written as 2k^2 rows over the fixed subfield.
std::vector<uint32_t> weight_system(const FieldContext& ctx, const std::vector<uint32_t>& points,
                                    uint64_t k) {
    const Field& f = ctx.field;
    size_t n = points.size();
    std::vector<std::vector<uint32_t>> powers(n);  // powers[i][s] = a_i^s
    for (size_t i = 0; i < n; ++i) {
        powers[i].resize(k);
        powers[i][0] = 1;
        for (uint64_t s = 1; s < k; ++s) powers[i][s] = f.mul(powers[i][s - 1], points[i]);
    }
    std::vector<uint32_t> rows;
    rows.reserve(2 * k * k * n);
    for (uint64_t s = 0; s < k; ++s) {
        for (uint64_t t = 0; t < k; ++t) {
            std::vector<uint32_t> lo(n), hi(n);
            for (size_t i = 0; i < n; ++i) {
                uint32_t coef = f.mul(powers[i][s], f.conj(powers[i][t]));
                auto [c0, c1] = subfield_coords(ctx, coef);
                lo[i] = c0;
                hi[i] = c1;
            }
            rows.insert(rows.end(), lo.begin(), lo.end());
            rows.insert(rows.end(), hi.begin(), hi.end());
        }
    }
    return rows;
}

Certificate finish_certificate(const FieldContext& ctx, const std::vector<uint32_t>& points,
                               const std::vector<uint32_t>& weights, uint64_t k,
                               uint64_t rng_seed, uint64_t max_enum) {
    const Field& f = ctx.field;
    size_t n = weights.size();
    std::vector<uint32_t> lifted(n);
    for (size_t i = 0; i < n; ++i) lifted[i] = f.norm_preimage(weights[i]);

    std::vector<uint32_t> gen(size_t(k) * n);
    for (size_t i = 0; i < n; ++i) {
        uint32_t power = 1;
        for (uint64_t s = 0; s < k; ++s) {
            gen[s * n + i] = f.mul(lifted[i], power);
            if (s + 1 < k) power = f.mul(power, points[i]);
        }
    }
    LinearCode code(f, uint32_t(n), std::move(gen));
    if (!is_hermitian_self_orthogonal(code))
        throw Error(ErrorKind::SearchExhausted, "candidate failed self-orthogonality recheck");
    LinearCode dual = hermitian_dual(code);
    DistanceReport dist = dual_distance_via_columns(code, max_enum);
    if (dist.value != k + 1)
        throw Error(ErrorKind::SearchExhausted, "candidate dual distance is not k+1");

    Certificate cert{std::move(code), {}, {}, 0};
    cert.claimed = {n, k, k + 1};
    cert.checks.self_orthogonal = true;
    cert.checks.dual_dim = dual.dim();
    cert.checks.dual_distance = dist.value;
    cert.checks.method = "column-dependence";
    cert.rng_seed = rng_seed;
    return cert;
}

}  // namespace

std::pair<uint64_t, uint32_t> prime_power_split(uint64_t q) {
    if (q < 2)
        throw Error(ErrorKind::InvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t r = 0;
    uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1)
        throw Error(ErrorKind::InvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
    return {p, r};
}

Certificate construct(uint64_t q, uint64_t m, uint64_t n, uint64_t k, uint64_t rng_seed,
                      const ConstructOptions& options) {
    auto [p, r] = prime_power_split(q);
    if (m < 1 || m > 16)
        throw Error(ErrorKind::InvalidArgument, "extension multiplier m out of range");
    uint64_t e = 1;
    for (uint64_t i = 0; i < m * r; ++i) {  // e = q^m
        e *= p;
        if (e * e > (uint64_t(1) << 16))
            throw Error(ErrorKind::TooLarge, "Q = q^(2m) exceeds 2^16");
    }
    if (e <= 2)
        throw Error(ErrorKind::EOutOfRange, "e must exceed 2 (got e=" + std::to_string(e) + ")");
    KmaxResult bound = kmax(e, n);  // validates 2 <= n <= Q
    if (k < 1 || k > bound.value)
        throw Error(ErrorKind::KTooLarge, "k=" + std::to_string(k) + " outside the valid range 1.." +
                                              std::to_string(bound.value) + " for e=" +
                                              std::to_string(e) + ", n=" + std::to_string(n));

    FieldContext ctx = make_context(p, uint32_t(2 * m * r), e);
    const Field& f = ctx.field;
    const uint64_t Q = f.order();

    for (uint64_t trial = 0; trial < options.point_set_budget; ++trial) {
        Rng rng(splitmix64(rng_seed) ^ splitmix64(trial + 1));

        // distinct evaluation points via a partial Fisher-Yates shuffle
        std::vector<uint32_t> pool(Q);
        std::iota(pool.begin(), pool.end(), 0);
        for (uint64_t i = 0; i < n; ++i) {
            uint64_t j = i + rng.below(Q - i);
            std::swap(pool[i], pool[j]);
        }
        std::vector<uint32_t> points(pool.begin(), pool.begin() + n);

        std::vector<uint32_t> system = weight_system(ctx, points, k);
        auto basis = linalg::nullspace(f, std::move(system), 2 * k * k, n);
        if (basis.empty()) continue;

        // Scan the solution space for an all-nonzero weight vector:
        // exhaustively when small, by seeded sampling otherwise.
        uint64_t space = 1;
        bool small_space = true;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (space > options.sample_budget / ctx.e) {
                small_space = false;
                break;
            }
            space *= ctx.e;
        }
        uint64_t attempts = small_space ? space : options.sample_budget;

        std::vector<uint32_t> coeff(basis.size(), 0);
        std::vector<uint32_t> u(n);
        for (uint64_t attempt = 0; attempt < attempts; ++attempt) {
            if (small_space) {
                uint64_t idx = attempt;
                for (size_t i = 0; i < coeff.size(); ++i) {
                    coeff[i] = ctx.fixed[idx % ctx.e];
                    idx /= ctx.e;
                }
            } else {
                for (size_t i = 0; i < coeff.size(); ++i)
                    coeff[i] = ctx.fixed[rng.below(ctx.e)];
            }
            std::fill(u.begin(), u.end(), 0);
            for (size_t b = 0; b < basis.size(); ++b) {
                if (coeff[b] == 0) continue;
                for (size_t i = 0; i < n; ++i)
                    u[i] = f.add(u[i], f.mul(coeff[b], basis[b][i]));
            }
            if (std::any_of(u.begin(), u.end(), [](uint32_t v) { return v == 0; })) continue;
            try {
                return finish_certificate(ctx, points, u, k, rng_seed, options.max_enum);
            } catch (const Error& e) {
                // a failed recheck warrants fresh points; guard errors do not
                if (e.kind() != ErrorKind::SearchExhausted && e.kind() != ErrorKind::RankDeficient)
                    throw;
                break;
            }
        }
    }
    throw Error(ErrorKind::SearchExhausted,
                "no witness found for [" + std::to_string(n) + "," + std::to_string(k) + "]_" +
                    std::to_string(Q) + " within " + std::to_string(options.point_set_budget) +
                    " point sets (existence is not disproved)");
}

Certificate exhaustive_construct_k1(uint64_t q, uint64_t m, uint64_t n) {
    auto [p, r] = prime_power_split(q);
    if (m < 1 || m > 16)
        throw Error(ErrorKind::InvalidArgument, "extension multiplier m out of range");
    uint64_t e = 1;
    for (uint64_t i = 0; i < m * r; ++i) {
        e *= p;
        if (e * e > (uint64_t(1) << 12))
            throw Error(ErrorKind::TooLarge, "Q = q^(2m) exceeds 2^12");
    }
    if (e <= 2)
        throw Error(ErrorKind::EOutOfRange, "e must exceed 2 (got e=" + std::to_string(e) + ")");
    if (n < 2 || n > e * e)
        throw Error(ErrorKind::NOutOfRange,
                    "n=" + std::to_string(n) + " outside [2, Q=" + std::to_string(e * e) + "]");

    FieldContext ctx = make_context(p, uint32_t(2 * m * r), e);
    const Field& f = ctx.field;
    const auto& units = ctx.fixed_nonzero;

    // u_1..u_{n-1} scan in ascending order; u_n is forced by the zero sum.
    std::vector<size_t> idx(n - 1, 0);
    while (true) {
        uint32_t sum = 0;
        for (size_t i = 0; i < n - 1; ++i) sum = f.add(sum, units[idx[i]]);
        uint32_t last = f.neg(sum);
        if (last != 0) {
            std::vector<uint32_t> u;
            for (size_t i = 0; i < n - 1; ++i) u.push_back(units[idx[i]]);
            u.push_back(last);
            std::vector<uint32_t> points(n, 0);  // unused for k = 1
            return finish_certificate(ctx, points, u, 1, 0, kDefaultMaxEnum);
        }
        size_t pos = n - 1;
        while (pos > 0 && idx[pos - 1] + 1 == units.size()) {
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    throw Error(ErrorKind::NoSolution, "no zero-sum weight vector over the subfield units");
}

bool verify(const Certificate& cert, std::vector<std::string>* failed, uint64_t max_enum) {
    auto fail = [&failed](const char* name) {
        if (failed) failed->push_back(name);
    };
    bool ok = true;

    const LinearCode& code = cert.code;
    if (cert.claimed.n != code.length() || cert.claimed.k != code.dim()) {
        fail("claimed-shape");
        ok = false;
    }
    if (code.dim() == 0 || code.dim() >= code.length()) {
        fail("dimension-range");
        return false;
    }

    bool so = is_hermitian_self_orthogonal(code);
    if (!so || !cert.checks.self_orthogonal) {
        fail("self_orthogonal");
        ok = false;
    }

    LinearCode dual = hermitian_dual(code);
    uint64_t expected_dim = code.length() - code.dim();
    if (dual.dim() != expected_dim || cert.checks.dual_dim != expected_dim) {
        fail("dual_dim");
        ok = false;
    }

    DistanceReport dist = dual_distance_via_columns(code, max_enum);
    if (dist.value != cert.claimed.dual_distance ||
        cert.checks.dual_distance != cert.claimed.dual_distance) {
        fail("dual_distance");
        ok = false;
    }
    return ok;
}

}  // namespace hsoq
