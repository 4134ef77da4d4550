#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

/// Which Leibniz identity the bracket satisfies, as found by the audit.
enum class Convention { Left, Right, Both, Neither };

std::string to_string(Convention c);

struct BracketEntry {
  int i = 0, j = 0;     // 1-based basis indices of [e_i, e_j]
  Vector value;         // length-dim coordinate vector
};

struct IdentityAudit {
  bool left_ok = false;
  bool right_ok = false;
  // (i, j, k, residual) for up to `cap` failing basis triples per side.
  struct Failure {
    int i, j, k;
    char side;  // 'L' or 'R'
    Vector residual;
  };
  std::vector<Failure> failing_triples;
};

struct IdealFlags {
  bool left = false;    // [g, U] subset of U
  bool right = false;   // [U, g] subset of U
  bool two_sided = false;
};

/// A finite-dimensional Leibniz algebra given by structure constants.
/// Immutable after build; the convention is always the audited one.
class LeibnizAlgebra {
 public:
  static LeibnizAlgebra build(std::string name, std::size_t dim, const FieldDescriptor& field,
                              const std::vector<BracketEntry>& entries);
  /// Abelian algebra (all brackets zero).
  static LeibnizAlgebra abelian(const FieldDescriptor& field, std::size_t dim,
                                std::string name = "abelian");

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const FieldDescriptor& field() const { return field_; }
  Convention convention() const { return convention_; }
  const IdentityAudit& audit() const { return audit_; }

  /// [e_i, e_j] with 0-based indices.
  const Vector& table(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Vector bracket(const Vector& x, const Vector& y) const;

  Subspace zero_subspace() const { return Subspace::zero(field_, dim_); }
  Subspace full_subspace() const { return Subspace::full(field_, dim_); }

  /// span{[a,b] : a in basis(A), b in basis(B)}.
  Subspace subspace_product(const Subspace& A, const Subspace& B) const;

  IdealFlags ideal_flags(const Subspace& U) const;

  /// Smallest two-sided ideal containing the given vectors.
  Subspace ideal_closure(const std::vector<Vector>& generators) const;

  /// Leib(g) = span{[x,x]}, computed by polarization (char != 2).
  Subspace leib() const;

  struct Centers {
    Subspace left, right, center;
  };
  Centers centers() const;

  struct Quotient;  // defined after the class (it holds a LeibnizAlgebra)
  Quotient quotient(const Subspace& I) const;

  /// Preimage of a subspace of the quotient under the projection.
  Subspace preimage(const Subspace& I, const QuotientCoordinates& coords,
                    const Subspace& sub_of_quotient) const;

  static LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

  /// Only ideals 0 and g, and [g,g] != 0 (the Lie reading of "simple").
  bool lie_simple() const;
  /// Only two-sided ideals 0, Leib(g), g, and [g,g] != Leib(g).
  bool leibniz_simple() const;

  /// Restriction of the algebra structure to an ideal, as an algebra on the
  /// ideal's own coordinates.  U must be closed under the bracket.
  LeibnizAlgebra restrict_to(const Subspace& U, std::string name = "restriction") const;

 private:
  LeibnizAlgebra() = default;

  std::string name_;
  std::size_t dim_ = 0;
  FieldDescriptor field_;
  std::vector<std::vector<Vector>> table_;  // table_[i][j] = [e_i, e_j]
  Convention convention_ = Convention::Both;
  IdentityAudit audit_;
};

struct LeibnizAlgebra::Quotient {
  LeibnizAlgebra algebra;
  QuotientCoordinates coords;
};

/// Runs both identity checks over all basis triples; cap bounds the number of
/// recorded failures per side.
IdentityAudit identity_audit(const LeibnizAlgebra& g, std::size_t cap = 8);

}  // namespace leibniz

#endif
