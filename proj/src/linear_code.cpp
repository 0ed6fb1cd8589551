#include "hsoq/linear_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsoq {

namespace linalg {

size_t rref_in_place(const Field& f, std::vector<uint32_t>& m, size_t rows, size_t cols) {
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = rows;
        for (size_t r = pivot_row; r < rows; ++r) {
            if (m[r * cols + col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (size_t c = 0; c < cols; ++c)
                std::swap(m[sel * cols + c], m[pivot_row * cols + c]);
        uint32_t scale = f.inv(m[pivot_row * cols + col]);
        for (size_t c = col; c < cols; ++c)
            m[pivot_row * cols + c] = f.mul(m[pivot_row * cols + c], scale);
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            uint32_t factor = m[r * cols + col];
            if (factor == 0) continue;
            for (size_t c = col; c < cols; ++c)
                m[r * cols + c] =
                    f.sub(m[r * cols + c], f.mul(factor, m[pivot_row * cols + c]));
        }
        ++pivot_row;
    }
    return pivot_row;
}

size_t rank_of(const Field& f, std::vector<uint32_t> m, size_t rows, size_t cols) {
    return rref_in_place(f, m, rows, cols);
}

std::vector<std::vector<uint32_t>> nullspace(const Field& f, std::vector<uint32_t> m,
                                             size_t rows, size_t cols) {
    size_t rank = rref_in_place(f, m, rows, cols);
    std::vector<size_t> pivot_col;
    std::vector<char> is_pivot(cols, 0);
    for (size_t r = 0, col = 0; r < rank; ++r) {
        while (col < cols && m[r * cols + col] == 0) ++col;
        pivot_col.push_back(col);
        is_pivot[col] = 1;
    }
    std::vector<std::vector<uint32_t>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = f.neg(m[r * cols + free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace linalg

LinearCode::LinearCode(const Field& field, uint32_t n, std::vector<uint32_t> generator)
    : field_(field), n_(n), gen_(std::move(generator)) {
    if (n_ == 0)
        throw Error(ErrorKind::InvalidArgument, "code length must be positive");
    if (gen_.size() % n_ != 0)
        throw Error(ErrorKind::InvalidArgument, "generator size is not a multiple of n");
    k_ = uint32_t(gen_.size() / n_);
    if (k_ > n_)
        throw Error(ErrorKind::InvalidArgument, "dimension exceeds length");
    for (uint32_t v : gen_)
        if (v >= field_.order())
            throw Error(ErrorKind::InvalidArgument, "generator entry out of field range");
    if (k_ > 0 && linalg::rank_of(field_, gen_, k_, n_) != k_)
        throw Error(ErrorKind::RankDeficient, "generator matrix is rank deficient");
}

std::vector<uint32_t> LinearCode::canonical_form() const {
    std::vector<uint32_t> m = gen_;
    size_t rank = linalg::rref_in_place(field_, m, k_, n_);
    m.resize(rank * n_);
    return m;
}

uint32_t hermitian_inner(const Field& f, std::span<const uint32_t> x,
                         std::span<const uint32_t> y) {
    if (x.size() != y.size())
        throw Error(ErrorKind::LengthMismatch, "vectors of length " + std::to_string(x.size()) +
                                                   " and " + std::to_string(y.size()));
    uint32_t acc = 0;
    for (size_t i = 0; i < x.size(); ++i)
        acc = f.add(acc, f.mul(x[i], f.conj(y[i])));
    return acc;
}

FieldElement hermitian_inner(const std::vector<FieldElement>& x,
                             const std::vector<FieldElement>& y) {
    if (x.size() != y.size())
        throw Error(ErrorKind::LengthMismatch, "vectors of length " + std::to_string(x.size()) +
                                                   " and " + std::to_string(y.size()));
    if (x.empty())
        throw Error(ErrorKind::InvalidArgument, "empty vectors");
    const Field& f = x.front().field();
    std::vector<uint32_t> xv, yv;
    for (const auto& e : x) {
        if (e.field() != f) throw Error(ErrorKind::FieldMismatch, "mixed fields in x");
        xv.push_back(e.value());
    }
    for (const auto& e : y) {
        if (e.field() != f) throw Error(ErrorKind::FieldMismatch, "mixed fields in y");
        yv.push_back(e.value());
    }
    return FieldElement(f, hermitian_inner(f, xv, yv));
}

bool is_hermitian_self_orthogonal(const LinearCode& c) {
    const Field& f = c.field();
    f.conj_exponent();  // throws NoConjugation when unset
    for (uint32_t i = 0; i < c.dim(); ++i)
        for (uint32_t j = i; j < c.dim(); ++j)
            if (hermitian_inner(f, c.row(i), c.row(j)) != 0) return false;
    return true;
}

LinearCode conjugated(const LinearCode& c) {
    const Field& f = c.field();
    std::vector<uint32_t> g(c.generator());
    for (uint32_t& v : g) v = f.conj(v);
    return LinearCode(f, c.length(), std::move(g));
}

LinearCode hermitian_dual(const LinearCode& c) {
    const Field& f = c.field();
    std::vector<uint32_t> g(c.generator());
    for (uint32_t& v : g) v = f.conj(v);
    auto basis = linalg::nullspace(f, std::move(g), c.dim(), c.length());
    std::vector<uint32_t> dual;
    dual.reserve(basis.size() * c.length());
    for (const auto& row : basis) dual.insert(dual.end(), row.begin(), row.end());
    return LinearCode(f, c.length(), std::move(dual));
}

DistanceReport min_distance_exhaustive(const LinearCode& c, uint64_t max_enum) {
    if (c.dim() == 0)
        throw Error(ErrorKind::InvalidArgument, "the zero code has no nonzero codewords");
    const Field& f = c.field();
    const uint64_t q = f.order();
    const uint32_t k = c.dim(), n = c.length();

    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (total > max_enum / q)
            throw Error(ErrorKind::TooLarge, "|F|^k exceeds the enumeration bound " +
                                                 std::to_string(max_enum));
        total *= q;
    }

    // Reflected mixed-radix Gray walk: exactly one message digit changes by
    // +-1 per step, so the codeword is maintained with one scaled row update.
    std::vector<uint64_t> digit(k, 0);
    std::vector<int> dir(k, 1);
    std::vector<uint32_t> focus(k + 1);
    for (uint32_t i = 0; i <= k; ++i) focus[i] = i;

    std::vector<uint32_t> cw(n, 0);
    uint32_t best = n;
    uint32_t weight = 0;
    uint64_t visited = 0;

    while (true) {
        uint32_t j = focus[0];
        focus[0] = 0;
        if (j == k) break;
        uint64_t old = digit[j];
        digit[j] = old + uint64_t(int64_t(dir[j]));
        uint32_t delta = f.sub(uint32_t(digit[j]), uint32_t(old));
        auto row = c.row(j);
        for (uint32_t pos = 0; pos < n; ++pos) {
            if (row[pos] == 0) continue;
            bool was = cw[pos] != 0;
            cw[pos] = f.add(cw[pos], f.mul(delta, row[pos]));
            bool is = cw[pos] != 0;
            weight += uint32_t(is) - uint32_t(was);
        }
        if (digit[j] == 0 || digit[j] == q - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        ++visited;
        if (weight < best) best = weight;
    }

    DistanceReport report;
    report.value = best;
    report.method = DistanceReport::Method::Exhaustive;
    report.enumerated_count = visited;
    return report;
}

namespace {

uint64_t binomial_clamped(uint64_t n, uint64_t w, uint64_t clamp) {
    uint64_t out = 1;
    for (uint64_t i = 0; i < w; ++i) {
        if (out > clamp) return clamp + 1;
        out = out * (n - i) / (i + 1);
    }
    return out;
}

// Forward elimination on the k x w submatrix given by `pick`, reusing `buf`.
// Returns true as soon as a column fails to produce a pivot.
bool columns_dependent(const Field& f, const LinearCode& c, const std::vector<uint32_t>& pick,
                       std::vector<uint32_t>& buf) {
    const uint32_t k = c.dim();
    const size_t w = pick.size();
    if (w > k) return true;
    buf.assign(size_t(k) * w, 0);
    for (uint32_t r = 0; r < k; ++r)
        for (size_t i = 0; i < w; ++i) buf[r * w + i] = c.at(r, pick[i]);
    size_t rank = 0;
    for (size_t col = 0; col < w; ++col) {
        size_t sel = k;
        for (size_t r = rank; r < k; ++r) {
            if (buf[r * w + col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel == k) return true;
        if (sel != rank)
            for (size_t i = col; i < w; ++i) std::swap(buf[sel * w + i], buf[rank * w + i]);
        uint32_t pivot_inv = f.inv(buf[rank * w + col]);
        for (size_t r = rank + 1; r < k; ++r) {
            uint32_t factor = buf[r * w + col];
            if (factor == 0) continue;
            factor = f.mul(factor, pivot_inv);
            for (size_t i = col; i < w; ++i)
                buf[r * w + i] = f.sub(buf[r * w + i], f.mul(factor, buf[rank * w + i]));
        }
        ++rank;
    }
    return false;
}

}  // namespace

DistanceReport dual_distance_via_columns(const LinearCode& c, uint64_t max_enum) {
    const uint32_t k = c.dim(), n = c.length();
    if (k == 0 || k >= n)
        throw Error(ErrorKind::InvalidArgument,
                    "Hermitian dual distance needs 1 <= k < n");
    const Field& f = c.field();

    uint64_t budget = 0;
    for (uint32_t w = 1; w <= k + 1; ++w) {
        budget += binomial_clamped(n, w, max_enum);
        if (budget > max_enum)
            throw Error(ErrorKind::TooLarge, "column-subset count exceeds the enumeration bound " +
                                                 std::to_string(max_enum));
    }

    uint64_t enumerated = 0;
    std::vector<uint32_t> buf;
    for (uint32_t w = 1; w <= k + 1; ++w) {
        std::vector<uint32_t> pick(w);
        for (uint32_t i = 0; i < w; ++i) pick[i] = i;
        while (true) {
            ++enumerated;
            if (columns_dependent(f, c, pick, buf)) {
                DistanceReport report;
                report.value = w;
                report.method = DistanceReport::Method::ColumnDependence;
                report.enumerated_count = enumerated;
                return report;
            }
            // next combination in lexicographic order
            uint32_t i = w;
            while (i > 0 && pick[i - 1] == n - w + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (uint32_t j = i; j < w; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("k+1 columns of a rank-k matrix must be dependent");
}

std::vector<std::vector<uint32_t>> minimal_dependent_column_sets(const LinearCode& c) {
    const uint32_t k = c.dim(), n = c.length();
    const Field& f = c.field();
    if (n > 16)
        throw Error(ErrorKind::TooLarge, "minimal dependent sets limited to n <= 16");

    auto dependent = [&](const std::vector<uint32_t>& cols) {
        std::vector<uint32_t> sub(size_t(k) * cols.size());
        for (uint32_t r = 0; r < k; ++r)
            for (size_t i = 0; i < cols.size(); ++i) sub[size_t(r) * cols.size() + i] = c.at(r, cols[i]);
        return linalg::rank_of(f, std::move(sub), k, cols.size()) < cols.size();
    };

    std::vector<std::vector<uint32_t>> minimal;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<uint32_t> cols;
        for (uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) cols.push_back(i);
        if (!dependent(cols)) continue;
        bool is_minimal = true;
        for (size_t drop = 0; drop < cols.size() && is_minimal; ++drop) {
            std::vector<uint32_t> sub = cols;
            sub.erase(sub.begin() + drop);
            if (!sub.empty() && dependent(sub)) is_minimal = false;
        }
        if (is_minimal) minimal.push_back(std::move(cols));
    }
    return minimal;
}

}  // namespace hsoq
