#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "logenr/rational.hpp"

namespace logenr {

/// Square symmetric matrix of exact rationals. Writes through set() keep the
/// two mirrored entries in sync, so the symmetry invariant cannot be broken.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order) : n_(order), a_(order * order) {}
    SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    /// Throws InvalidArgument when rows are ragged or asymmetric.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t order() const { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const Rational& v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }

    /// Principal submatrix on the given rows/columns, in the given order.
    SymMatrix principal(std::span<const std::size_t> idx) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

/// Dense square integer matrix; the fast path for intersection matrices of
/// smooth models, where every entry is integral.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t order) : n_(order), a_(order * order, 0) {}

    std::size_t order() const { return n_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::int64_t& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    IntMatrix principal(std::span<const std::size_t> idx) const;
    SymMatrix to_rational() const;
    std::span<const std::int64_t> data() const { return a_; }

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> a_;
};

Rational det_exact(const SymMatrix& m);
BigInt det_exact(const IntMatrix& m);

/// Sylvester test: the k-th leading principal minor has sign (-1)^k for every k.
/// Semidefinite matrices are rejected. The empty matrix is negative definite.
bool is_negative_definite(const SymMatrix& m);
bool is_negative_definite(const IntMatrix& m);

/// Unique x with m*x = b. Throws SingularMatrix when det(m) = 0.
std::vector<Rational> solve_exact(const SymMatrix& m, std::span<const Rational> b);

/// D - B^T A^{-1} B for m = [[A, B], [B^T, D]] with A the leading `lead` block.
/// Throws SingularMatrix when A is singular.
SymMatrix schur_complement(const SymMatrix& m, std::size_t lead);
SymMatrix schur_complement(const IntMatrix& m, std::size_t lead);

}  // namespace logenr
