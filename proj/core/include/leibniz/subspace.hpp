#ifndef LEIBNIZ_SUBSPACE_HPP
#define LEIBNIZ_SUBSPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

Vector zero_vector(const FieldDescriptor& f, std::size_t n);
Vector unit_vector(const FieldDescriptor& f, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
bool is_zero(const Vector& v);

/// A subspace of F^n held as a canonical reduced-row-echelon basis.
/// Two subspaces are equal iff their RREF matrices are identical.
class Subspace {
 public:
  static Subspace zero(const FieldDescriptor& f, std::size_t ambient_dim);
  static Subspace full(const FieldDescriptor& f, std::size_t ambient_dim);
  /// Canonical subspace spanned by the given rows (RREF, zero rows dropped).
  static Subspace span(const FieldDescriptor& f, std::size_t ambient_dim, const Matrix& rows);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }
  const FieldDescriptor& field() const { return field_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ambient_dim_; }

  /// Reduces v modulo the basis: the result has zero pivot coordinates and
  /// lies in v + this.  contains(v) iff the reduction is zero.
  Vector reduce(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.field_ == b.field_ && a.basis_ == b.basis_;
  }

  /// Stable sort key; also the serialized form used in reports.
  std::string key() const;

 private:
  Subspace(FieldDescriptor f, std::size_t n) : field_(f), ambient_dim_(n) {}
  void check_compatible(const Subspace& other) const;

  FieldDescriptor field_;
  std::size_t ambient_dim_ = 0;
  Matrix basis_;                      // RREF rows, no zero rows
  std::vector<std::size_t> pivots_;  // strictly increasing pivot columns
};

/// rref of arbitrary rows; rows must be nonempty and of equal length.
/// Throws EmptyAmbient on rows of length zero and MixedFields on field clashes.
Subspace rref(const Matrix& rows);

/// {x : M x = 0}, the kernel of the linear map given by the rows of M
/// (M has `cols` columns; an empty M means the zero map on F^cols).
Subspace kernel(const FieldDescriptor& f, std::size_t cols, const Matrix& M);

/// Coordinates for the quotient F^n / A: `projection` maps F^n onto the
/// complement coordinates (the non-pivot columns of A), `section` embeds them
/// back; projection . section = identity on the complement.
struct QuotientCoordinates {
  Matrix projection;                       // (n - dim A) x n
  Matrix section;                          // (n - dim A) rows of length n
  std::vector<std::size_t> complement_cols;  // the non-pivot columns of A

  Vector project(const Vector& v) const;
  Vector lift(const Vector& w) const;  // apply the section
};

QuotientCoordinates quotient_coordinates(const Subspace& A);

}  // namespace leibniz

#endif
