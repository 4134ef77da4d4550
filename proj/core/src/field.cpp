#include "leibniz/field.hpp"

namespace leibniz {

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_pos(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, a in [1, p).
long mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return mod_pos(t, p);
}

}  // namespace

FieldDescriptor FieldDescriptor::prime_field(long p) {
  if (p == 2) throw FieldCharTwo();
  if (!is_prime_long(p)) throw NotPrime(p);
  return {Kind::PrimeField, p};
}

std::string FieldDescriptor::str() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(characteristic) + ")";
}

Scalar Scalar::zero(const FieldDescriptor& f) { return Scalar(f, 0, 0); }

Scalar Scalar::one(const FieldDescriptor& f) {
  return f.is_rational() ? Scalar(f, 1, 0) : Scalar(f, 0, 1 % f.characteristic);
}

Scalar Scalar::from_int(const FieldDescriptor& f, long v) {
  if (f.is_rational()) return Scalar(f, v, 0);
  return Scalar(f, 0, mod_pos(v, f.characteristic));
}

Scalar Scalar::from_fraction(const FieldDescriptor& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, q, 0);
  }
  const long p = f.characteristic;
  long n = mpz_class(num % p).get_si();
  long d = mpz_class(den % p).get_si();
  n = mod_pos(n, p);
  d = mod_pos(d, p);
  if (d == 0) throw DivisionByZero();
  return Scalar(f, 0, static_cast<long>(static_cast<__int128>(n) * mod_inverse(d, p) % p));
}

bool Scalar::is_zero() const { return field_.is_rational() ? rat_ == 0 : res_ == 0; }

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, -rat_, 0);
  return Scalar(field_, 0, res_ == 0 ? 0 : field_.characteristic - res_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, rat_ + o.rat_, 0);
  return Scalar(field_, 0, (res_ + o.res_) % field_.characteristic);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, rat_ * o.rat_, 0);
  return Scalar(field_, 0,
                static_cast<long>(static_cast<__int128>(res_) * o.res_ % field_.characteristic));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_.is_rational()) return Scalar(field_, 1 / rat_, 0);
  return Scalar(field_, 0, mod_inverse(res_, field_.characteristic));
}

std::string Scalar::value_str() const {
  if (field_.is_rational()) return rat_.get_str();
  return std::to_string(res_);
}

std::string Scalar::str() const {
  if (field_.is_rational()) return rat_.get_str();
  return std::to_string(res_) + " mod " + std::to_string(field_.characteristic);
}

}  // namespace leibniz
