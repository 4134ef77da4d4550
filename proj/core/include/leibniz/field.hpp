#ifndef LEIBNIZ_FIELD_HPP
#define LEIBNIZ_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

/// Describes the coefficient field: the rationals or GF(p) with p an odd prime.
struct FieldDescriptor {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  long characteristic = 0;  // 0 for Q, p for GF(p)

  static FieldDescriptor rationals() { return {Kind::Rationals, 0}; }
  static FieldDescriptor prime_field(long p);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::string str() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// An exact field element: an arbitrary-precision rational in lowest terms,
/// or a residue in [0, p).  Equality is structural and includes the field.
class Scalar {
 public:
  Scalar() = default;  // zero of Q; use zero(field) when the field matters

  static Scalar zero(const FieldDescriptor& f);
  static Scalar one(const FieldDescriptor& f);
  static Scalar from_int(const FieldDescriptor& f, long v);
  /// Interprets p/q in the field; over GF(p) the denominator must be invertible.
  static Scalar from_fraction(const FieldDescriptor& f, const mpz_class& num, const mpz_class& den);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.rat_ == b.rat_ && a.res_ == b.res_;
  }

  /// Canonical rendering: "p/q" (lowest terms, q omitted when 1) or "k mod p".
  std::string str() const;
  /// Just the numeric part, without the "mod p" suffix.
  std::string value_str() const;

  const mpq_class& rational() const { return rat_; }
  long residue() const { return res_; }

 private:
  Scalar(FieldDescriptor f, mpq_class r, long m) : field_(f), rat_(std::move(r)), res_(m) {}
  void check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw MixedFields();
  }

  FieldDescriptor field_ = FieldDescriptor::rationals();
  mpq_class rat_ = 0;  // used when rational
  long res_ = 0;       // used when prime field
};

}  // namespace leibniz

#endif
