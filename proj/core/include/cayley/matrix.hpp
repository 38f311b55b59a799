#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/finite_field.hpp"

namespace cayley {

/// Position of a matrix in the canonical enumeration of M_n(GF(q)): the
/// entry codes read as base-q digits in row-major order, entry (0,0) least
/// significant.
struct MatrixIndex {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(MatrixIndex, MatrixIndex) = default;
};

/// Dense square matrix over a finite field. Entries are stored row-major.
class Matrix {
public:
    /// Zero matrix of side n (n >= 1).
    Matrix(FieldPtr field, int n);
    /// Takes n*n row-major entries; throws InvalidArgument on a bad length or
    /// an entry outside the field.
    Matrix(FieldPtr field, int n, std::vector<Element> entries);

    static Matrix identity(FieldPtr field, int n);
    /// Matrix unit with a single 1 at (i, j), 0-based.
    static Matrix unit(FieldPtr field, int n, int i, int j);
    /// Parses "1,0;0,1": rows split by ';', entries by ',', entries are codes.
    static Matrix from_literal(FieldPtr field, std::string_view literal);

    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] const Field& field() const noexcept { return *field_; }
    [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return field_; }

    [[nodiscard]] Element operator()(int i, int j) const noexcept {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }
    void set(int i, int j, Element value);

    [[nodiscard]] std::span<const Element> entries() const noexcept { return entries_; }

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] std::string to_literal() const;

    /// Throws Mismatch unless both matrices share the size and the field.
    void require_compatible(const Matrix& other) const;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.n_ == b.n_ && *a.field_ == *b.field_ && a.entries_ == b.entries_;
    }

private:
    FieldPtr field_;
    int n_;
    std::vector<Element> entries_;
};

[[nodiscard]] Matrix operator+(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator-(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator*(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix scalar_mul(Element c, const Matrix& a);

/// diag(I_r, 0) of side n. r = 1 gives E_11, r = 2 gives diag(1,1,0,...,0).
[[nodiscard]] Matrix canonical_rank_matrix(FieldPtr field, int n, int r);

/// Row rank by Gaussian elimination (pivot = first nonzero entry in the column).
[[nodiscard]] int rank(const Matrix& a);
[[nodiscard]] Element determinant(const Matrix& a);
/// rank(a) == n.
[[nodiscard]] bool is_invertible(const Matrix& a);
/// determinant(a) != 0. Same answer as is_invertible by a different route.
[[nodiscard]] bool is_invertible_by_determinant(const Matrix& a);
/// Gauss-Jordan inverse. Throws SingularError.
[[nodiscard]] Matrix inverse(const Matrix& a);

/// Invertible P, Q with P * source * Q = diag(I_rank, 0).
struct RankFactorization {
    Matrix row_ops;     // P
    Matrix column_ops;  // Q
    int rank = 0;
};

/// Full Gauss-Jordan reduction recording row operations into P and column
/// operations into Q. Only the factorization identity is guaranteed, not a
/// particular choice of P and Q.
[[nodiscard]] RankFactorization rank_factorize(const Matrix& a);

/// Neither 0 nor 1 is an eigenvalue: a and a - I both invertible.
[[nodiscard]] bool is_linear_derangement(const Matrix& a);

/// a invertible while a + E_11 is singular.
[[nodiscard]] bool has_singular_unit_shift(const Matrix& a);

/// Column test equivalent to has_singular_unit_shift: with columns a_1..a_n
/// and v = e_1, det(v, a_2, ..., a_n) != 0 and a_1 + v lies in the span of
/// a_2..a_n (decided by comparing ranks).
[[nodiscard]] bool unit_shift_column_criterion(const Matrix& a);

[[nodiscard]] MatrixIndex matrix_to_index(const Matrix& a);
/// Throws InvalidArgument when the index is outside [0, q^(n^2)).
[[nodiscard]] Matrix index_to_matrix(MatrixIndex index, FieldPtr field, int n);

/// In-place elimination routines on raw row-major n*n storage. The Matrix
/// functions above and the enumeration oracles both go through these.
namespace kernel {

/// Destroys `a`.
int rank_in_place(const Field& f, int n, std::span<Element> a) noexcept;
/// Destroys `a`. Stops at the first column without a pivot.
bool invertible_in_place(const Field& f, int n, std::span<Element> a) noexcept;
/// Destroys `a`.
Element determinant_in_place(const Field& f, int n, std::span<Element> a) noexcept;
/// Gauss-Jordan on `a` (destroyed), writing the inverse to `out`. False when singular.
bool inverse_into(const Field& f, int n, std::span<Element> a, std::span<Element> out) noexcept;

}  // namespace kernel

}  // namespace cayley
