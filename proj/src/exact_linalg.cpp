#include "logenr/exact_linalg.hpp"

#include <optional>
#include <utility>

#include "logenr/error.hpp"

namespace logenr {

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> v;
    for (const auto& r : rows) v.emplace_back(r);
    *this = from_rows(v);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error(Errc::InvalidArgument, "matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j] != rows[j][i]) throw Error(Errc::InvalidArgument, "matrix is not symmetric");
            m.a_[i * m.n_ + j] = rows[i][j];
        }
    }
    return m;
}

SymMatrix SymMatrix::principal(std::span<const std::size_t> idx) const {
    SymMatrix out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.a_[i * out.n_ + j] = (*this)(idx[i], idx[j]);
    return out;
}

IntMatrix IntMatrix::principal(std::span<const std::size_t> idx) const {
    IntMatrix out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.a_[i * out.n_ + j] = (*this)(idx[i], idx[j]);
    return out;
}

SymMatrix IntMatrix::to_rational() const {
    SymMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) out.set(i, j, Rational(static_cast<long>((*this)(i, j))));
    return out;
}

namespace {

// Fast-path entries are kept below 2^62 in magnitude.
__extension__ typedef __int128 i128;

constexpr std::int64_t kFastLimit = std::int64_t{1} << 62;

bool fits_fast(const i128 v) { return v < kFastLimit && v > -kFastLimit; }

// One fraction-free elimination step at pivot k over the trailing block.
// Entries (i, j) with i, j > k become the (k+2)-order bordered minors divided
// by the previous pivot; the division is exact. With `symmetric` only the
// upper triangle is computed and mirrored. Returns false on overflow.
bool bareiss_step(std::vector<std::int64_t>& a, std::size_t n, std::size_t k, std::int64_t prev,
                  bool symmetric = false) {
    const std::int64_t p = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
        const std::int64_t aik = a[i * n + k];
        if (aik == 0) {
            // Only a rescaling; zeros stay zero. Intersection matrices are sparse.
            for (std::size_t j = symmetric ? i : k + 1; j < n; ++j) {
                std::int64_t& x = a[i * n + j];
                if (x == 0) continue;
                const i128 v = static_cast<i128>(p) * x / prev;
                if (!fits_fast(v)) return false;
                x = static_cast<std::int64_t>(v);
                if (symmetric) a[j * n + i] = x;
            }
            continue;
        }
        for (std::size_t j = symmetric ? i : k + 1; j < n; ++j) {
            // Both products stay below 2^124, so the 128-bit difference is exact.
            const i128 v =
                (static_cast<i128>(p) * a[i * n + j] - static_cast<i128>(aik) * a[k * n + j]) / prev;
            if (!fits_fast(v)) return false;
            a[i * n + j] = static_cast<std::int64_t>(v);
            if (symmetric) a[j * n + i] = a[i * n + j];
        }
    }
    return true;
}

bool bareiss_step(std::vector<BigInt>& a, std::size_t n, std::size_t k, const BigInt& prev,
                  bool /*symmetric*/ = false) {
    const BigInt p = a[k * n + k];
    BigInt t;
    for (std::size_t i = k + 1; i < n; ++i) {
        const BigInt aik = a[i * n + k];
        for (std::size_t j = k + 1; j < n; ++j) {
            t = p * a[i * n + j] - aik * a[k * n + j];
            mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
    }
    return true;
}

int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }
int sign_of(const BigInt& v) { return sgn(v); }

template <class T>
void swap_rows(std::vector<T>& a, std::size_t n, std::size_t r, std::size_t s) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a[r * n + j], a[s * n + j]);
}

// Determinant with row pivoting; nullopt when the fast path overflows.
template <class T>
std::optional<BigInt> bareiss_det(std::vector<T> a, std::size_t n) {
    if (n == 0) return BigInt(1);
    T prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sign_of(a[k * n + k]) == 0) {
            std::size_t r = k + 1;
            while (r < n && sign_of(a[r * n + k]) == 0) ++r;
            if (r == n) return BigInt(0);
            swap_rows(a, n, k, r);
            sign = -sign;
        }
        if (!bareiss_step(a, n, k, prev)) return std::nullopt;
        prev = a[k * n + k];
    }
    BigInt d(a[(n - 1) * n + (n - 1)]);
    return sign > 0 ? d : BigInt(-d);
}

// Sylvester sign pattern without pivoting; nullopt on fast-path overflow.
template <class T>
std::optional<bool> bareiss_negative_definite(std::vector<T> a, std::size_t n) {
    T prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const int want = (k % 2 == 0) ? -1 : 1;  // sign of the (k+1)-th leading minor
        if (sign_of(a[k * n + k]) != want) return false;
        if (k + 1 == n) break;
        if (!bareiss_step(a, n, k, prev, true)) return std::nullopt;
        prev = a[k * n + k];
    }
    return true;
}

// Runs `lead` steps; returns the trailing block entries (bordered minors) and
// the leading minor of order `lead`. nullopt on overflow or a vanishing
// intermediate pivot (caller falls back to rational elimination).
template <class T>
std::optional<std::pair<std::vector<BigInt>, BigInt>> bareiss_schur(std::vector<T> a, std::size_t n,
                                                                     std::size_t lead) {
    T prev = 1;
    for (std::size_t k = 0; k < lead; ++k) {
        if (sign_of(a[k * n + k]) == 0) {
            // Symmetric swap inside the leading block leaves the complement unchanged.
            std::size_t r = k + 1;
            while (r < lead && sign_of(a[r * n + r]) == 0) ++r;
            if (r == lead) return std::nullopt;
            swap_rows(a, n, k, r);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i * n + k], a[i * n + r]);
        }
        if (!bareiss_step(a, n, k, prev, true)) return std::nullopt;
        prev = a[k * n + k];
    }
    const std::size_t m = n - lead;
    std::vector<BigInt> tail(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) tail[i * m + j] = BigInt(a[(lead + i) * n + (lead + j)]);
    return std::make_pair(std::move(tail), BigInt(prev));
}

std::vector<BigInt> to_big(std::span<const std::int64_t> v) {
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

// Integer image L*m with L the lcm of all denominators (L > 0).
struct Cleared {
    std::vector<BigInt> big;
    BigInt scale;
    std::optional<std::vector<std::int64_t>> fast;
};

Cleared clear_denominators(const SymMatrix& m) {
    const std::size_t n = m.order();
    Cleared c;
    c.scale = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt d = m(i, j).den();
            mpz_lcm(c.scale.get_mpz_t(), c.scale.get_mpz_t(), d.get_mpz_t());
        }
    c.big.resize(n * n);
    bool small = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& r = m(i, j);
            c.big[i * n + j] = r.num() * (c.scale / r.den());
            const BigInt& v = c.big[i * n + j];
            if (!v.fits_slong_p() || abs(v) >= BigInt(static_cast<long>(kFastLimit))) small = false;
        }
    if (small) {
        std::vector<std::int64_t> f(n * n);
        for (std::size_t k = 0; k < n * n; ++k) f[k] = c.big[k].get_si();
        c.fast = std::move(f);
    }
    return c;
}

bool fast_eligible(std::span<const std::int64_t> v) {
    for (auto x : v)
        if (!fits_fast(x)) return false;
    return true;
}

SymMatrix assemble_schur(const std::vector<BigInt>& tail, const BigInt& minor, const BigInt& scale,
                         std::size_t m) {
    SymMatrix out(m);
    const BigInt den = minor * scale;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) out.set(i, j, Rational(tail[i * m + j], den));
    return out;
}

SymMatrix schur_by_solve(const SymMatrix& m, std::size_t lead) {
    const std::size_t n = m.order();
    const std::size_t t = n - lead;
    std::vector<std::size_t> head_idx(lead);
    for (std::size_t i = 0; i < lead; ++i) head_idx[i] = i;
    const SymMatrix a = m.principal(head_idx);
    std::vector<std::vector<Rational>> solved(t);
    for (std::size_t c = 0; c < t; ++c) {
        std::vector<Rational> col(lead);
        for (std::size_t i = 0; i < lead; ++i) col[i] = m(i, lead + c);
        solved[c] = solve_exact(a, col);
    }
    SymMatrix out(t);
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t c = r; c < t; ++c) {
            Rational v = m(lead + r, lead + c);
            for (std::size_t i = 0; i < lead; ++i) v -= m(i, lead + r) * solved[c][i];
            out.set(r, c, v);
        }
    return out;
}

}  // namespace

BigInt det_exact(const IntMatrix& m) {
    const auto data = m.data();
    if (fast_eligible(data)) {
        if (auto d = bareiss_det(std::vector<std::int64_t>(data.begin(), data.end()), m.order())) return *d;
    }
    return *bareiss_det(to_big(data), m.order());
}

Rational det_exact(const SymMatrix& m) {
    const std::size_t n = m.order();
    Cleared c = clear_denominators(m);
    std::optional<BigInt> d;
    if (c.fast) d = bareiss_det(std::move(*c.fast), n);
    if (!d) d = bareiss_det(std::move(c.big), n);
    BigInt scale_pow;
    mpz_pow_ui(scale_pow.get_mpz_t(), c.scale.get_mpz_t(), n);
    return Rational(*d, scale_pow);
}

bool is_negative_definite(const IntMatrix& m) {
    const auto data = m.data();
    if (fast_eligible(data)) {
        if (auto r = bareiss_negative_definite(std::vector<std::int64_t>(data.begin(), data.end()), m.order()))
            return *r;
    }
    return *bareiss_negative_definite(to_big(data), m.order());
}

bool is_negative_definite(const SymMatrix& m) {
    Cleared c = clear_denominators(m);
    if (c.fast) {
        if (auto r = bareiss_negative_definite(std::move(*c.fast), m.order())) return *r;
    }
    return *bareiss_negative_definite(std::move(c.big), m.order());
}

std::vector<Rational> solve_exact(const SymMatrix& m, std::span<const Rational> b) {
    const std::size_t n = m.order();
    if (b.size() != n) throw Error(Errc::InvalidArgument, "right-hand side has wrong length");
    // Gauss-Jordan on the augmented matrix [m | b].
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n] = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a[r][k].is_zero()) ++r;
        if (r == n) throw Error(Errc::SingularMatrix, "matrix of order " + std::to_string(n) + " is singular");
        std::swap(a[k], a[r]);
        const Rational inv = Rational(1) / a[k][k];
        for (std::size_t j = k; j <= n; ++j) a[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            const Rational f = a[i][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

SymMatrix schur_complement(const SymMatrix& m, std::size_t lead) {
    if (lead > m.order()) throw Error(Errc::InvalidArgument, "leading block larger than matrix");
    const std::size_t n = m.order();
    Cleared c = clear_denominators(m);
    std::optional<std::pair<std::vector<BigInt>, BigInt>> r;
    if (c.fast) r = bareiss_schur(std::move(*c.fast), n, lead);
    if (!r) r = bareiss_schur(std::move(c.big), n, lead);
    if (!r) return schur_by_solve(m, lead);
    return assemble_schur(r->first, r->second, c.scale, n - lead);
}

SymMatrix schur_complement(const IntMatrix& m, std::size_t lead) {
    if (lead > m.order()) throw Error(Errc::InvalidArgument, "leading block larger than matrix");
    const auto data = m.data();
    const std::size_t n = m.order();
    std::optional<std::pair<std::vector<BigInt>, BigInt>> r;
    if (fast_eligible(data)) r = bareiss_schur(std::vector<std::int64_t>(data.begin(), data.end()), n, lead);
    if (!r) r = bareiss_schur(to_big(data), n, lead);
    if (!r) return schur_by_solve(m.to_rational(), lead);
    return assemble_schur(r->first, r->second, BigInt(1), n - lead);
}

}  // namespace logenr
