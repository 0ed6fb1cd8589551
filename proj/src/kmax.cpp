#include "hsoq/kmax.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hsoq {

namespace {

void ensure(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace

uint64_t Partition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), uint64_t(0));
}

uint64_t Partition::min_part() const {
    ensure(!parts.empty(), "min part of empty partition");
    return *std::min_element(parts.begin(), parts.end());
}

const char* to_string(KmaxCase c) {
    switch (c) {
        case KmaxCase::BZero: return "b-zero";
        case KmaxCase::AZero: return "a-zero";
        case KmaxCase::Overflow: return "overflow";
        case KmaxCase::Balanced: return "balanced";
    }
    return "unknown";
}

bool is_prime_power(uint64_t e) {
    if (e < 2) return false;
    uint64_t p = e;
    for (uint64_t d = 2; d * d <= e; ++d) {
        if (e % d == 0) {
            p = d;
            break;
        }
    }
    while (e % p == 0) e /= p;
    return e == 1;
}

EadicForm eadic(uint64_t e, uint64_t n) {
    if (e <= 2)
        throw Error(ErrorKind::EOutOfRange, "e must exceed 2 (got e=" + std::to_string(e) + ")");
    if (e > (uint64_t(1) << 31))
        throw Error(ErrorKind::EOutOfRange, "e=" + std::to_string(e) + " exceeds 2^31");
    if (!is_prime_power(e))
        throw Error(ErrorKind::EOutOfRange, "e=" + std::to_string(e) + " is not a prime power");
    if (n < 2 || n > e * e)
        throw Error(ErrorKind::NOutOfRange, "n=" + std::to_string(n) + " outside [2, e^2=" +
                                                std::to_string(e * e) + "]");
    return EadicForm{e, n, n / e, n % e};
}

Partition partition_witness(uint64_t e, uint64_t n) {
    EadicForm f = eadic(e, n);
    Partition out;
    if (f.b == 0) {
        out.parts.assign(f.a, e);
    } else if (f.a == 0) {
        out.parts.assign(1, n);
    } else if (f.a + f.b >= e) {
        // i parts of e, then j+1 parts of e-1, with j = e-1-b and i = a-j.
        uint64_t j = e - 1 - f.b;
        ensure(j <= f.a, "overflow witness needs j <= a");
        uint64_t i = f.a - j;
        out.parts.assign(i, e);
        out.parts.insert(out.parts.end(), j + 1, e - 1);
    } else {
        uint64_t t = f.a + 1;
        uint64_t s = n / t;
        if (s >= f.a + f.b) {
            // near-equal split: r parts of s+1, t-r parts of s
            uint64_t r = n - s * t;
            out.parts.assign(r, s + 1);
            out.parts.insert(out.parts.end(), t - r, s);
        } else {
            out.parts.assign(f.a, e - 1);
            out.parts.push_back(f.a + f.b);
        }
    }
    std::sort(out.parts.begin(), out.parts.end(), std::greater<uint64_t>());
    ensure(out.sum() == n, "witness parts sum to n");
    ensure(out.count() >= 1 && out.count() <= e, "witness has between 1 and e parts");
    ensure(out.min_part() >= 2 && *std::max_element(out.parts.begin(), out.parts.end()) <= e,
           "witness parts lie in [2, e]");
    return out;
}

KmaxResult kmax(uint64_t e, uint64_t n) {
    EadicForm f = eadic(e, n);
    KmaxResult out;
    if (f.b == 0) {
        out.value = e / 2;
        out.case_tag = KmaxCase::BZero;
    } else if (f.a == 0) {
        out.value = n / 2;
        out.case_tag = KmaxCase::AZero;
    } else if (f.a + f.b >= e) {
        out.value = (e - 1) / 2;
        out.case_tag = KmaxCase::Overflow;
    } else {
        uint64_t quotient = n / (f.a + 1);
        uint64_t tail = f.a + f.b;
        out.value = std::max(quotient, tail) / 2;
        out.case_tag = KmaxCase::Balanced;
        out.balanced_branch = quotient >= tail ? BalancedBranch::Quotient : BalancedBranch::Tail;
    }
    out.witness = partition_witness(e, n);
    ensure(out.witness.min_part() / 2 >= out.value, "witness certifies K_n");
    return out;
}

PartitionCheck validate_partition(uint64_t e, uint64_t k, const Partition& p) {
    PartitionCheck check;
    auto fail = [&check](std::string reason) {
        check.ok = false;
        check.reasons.push_back(std::move(reason));
    };
    if (p.parts.empty()) {
        fail("partition has no parts");
        return check;
    }
    if (p.count() > e)
        fail("partition has " + std::to_string(p.count()) + " parts, more than e=" +
             std::to_string(e));
    for (uint64_t part : p.parts) {
        if (part < 2 || part > e) {
            fail("part " + std::to_string(part) + " outside [2, e=" + std::to_string(e) + "]");
            break;
        }
    }
    if (2 * k > p.min_part())
        fail("2k=" + std::to_string(2 * k) + " exceeds the minimum part " +
             std::to_string(p.min_part()));
    return check;
}

uint64_t kmax_bruteforce_oracle(uint64_t e, uint64_t n) {
    if (e > 32)
        throw Error(ErrorKind::TooLarge, "oracle limited to e <= 32");
    if (e < 2 || n > e * e)
        throw Error(ErrorKind::NOutOfRange, "oracle needs n <= e^2");
    // Largest m such that n splits into at most e parts from [m, e].
    for (uint64_t m = e; m >= 2; --m) {
        // reach[sum] after exactly t parts
        std::vector<char> reach(n + 1, 0);
        reach[0] = 1;
        for (uint64_t t = 1; t <= e; ++t) {
            std::vector<char> next(n + 1, 0);
            for (uint64_t sum = 0; sum <= n; ++sum) {
                if (!reach[sum]) continue;
                for (uint64_t c = m; c <= e && sum + c <= n; ++c) next[sum + c] = 1;
            }
            if (next[n]) return m / 2;
            reach.swap(next);
        }
    }
    return 0;
}

}  // namespace hsoq
