#include "leibniz/algebra.hpp"

#include <algorithm>
#include <set>

#include "leibniz/errors.hpp"

namespace leibniz {

std::string to_string(Convention c) {
  switch (c) {
    case Convention::Left: return "Left";
    case Convention::Right: return "Right";
    case Convention::Both: return "Both";
    case Convention::Neither: return "Neither";
  }
  return "?";
}

LeibnizAlgebra LeibnizAlgebra::build(std::string name, std::size_t dim,
                                     const FieldDescriptor& field,
                                     const std::vector<BracketEntry>& entries) {
  if (field.characteristic == 2) throw FieldCharTwo();
  LeibnizAlgebra g;
  g.name_ = std::move(name);
  g.dim_ = dim;
  g.field_ = field;
  g.table_.assign(dim, std::vector<Vector>(dim, zero_vector(field, dim)));

  std::set<std::pair<int, int>> seen;
  for (const auto& e : entries) {
    if (e.i < 1 || e.i > static_cast<int>(dim) || e.j < 1 || e.j > static_cast<int>(dim))
      throw IndexOutOfRange("bracket entry (e" + std::to_string(e.i) + ", e" + std::to_string(e.j) +
                            ") is outside [1, " + std::to_string(dim) + "]");
    if (!seen.insert({e.i, e.j}).second) throw DuplicateBracket(e.i, e.j);
    if (e.value.size() != dim) throw AmbientMismatch();
    for (const auto& c : e.value)
      if (!(c.field() == field)) throw MixedFields();
    g.table_[e.i - 1][e.j - 1] = e.value;
  }

  g.audit_ = identity_audit(g);
  if (g.audit_.left_ok && g.audit_.right_ok)
    g.convention_ = Convention::Both;
  else if (g.audit_.left_ok)
    g.convention_ = Convention::Left;
  else if (g.audit_.right_ok)
    g.convention_ = Convention::Right;
  else
    g.convention_ = Convention::Neither;
  return g;
}

LeibnizAlgebra LeibnizAlgebra::abelian(const FieldDescriptor& field, std::size_t dim,
                                       std::string name) {
  return build(std::move(name), dim, field, {});
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw AmbientMismatch();
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      const Vector& t = table_[i][j];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += c * t[k];
    }
  }
  return out;
}

IdentityAudit identity_audit(const LeibnizAlgebra& g, std::size_t cap) {
  IdentityAudit audit;
  audit.left_ok = audit.right_ok = true;
  const std::size_t n = g.dim();
  const auto& f = g.field();
  for (std::size_t i = 0; i < n; ++i) {
    Vector x = unit_vector(f, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vector y = unit_vector(f, n, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector z = unit_vector(f, n, k);
        // Left: [x,[y,z]] = [[x,y],z] + [y,[x,z]]
        Vector lres = g.bracket(x, g.bracket(y, z));
        Vector lrhs = add(g.bracket(g.bracket(x, y), z), g.bracket(y, g.bracket(x, z)));
        Vector ldiff = add(lres, scale(-Scalar::one(f), lrhs));
        if (!is_zero(ldiff)) {
          audit.left_ok = false;
          if (audit.failing_triples.size() < cap)
            audit.failing_triples.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1),
                                             static_cast<int>(k + 1), 'L', ldiff});
        }
        // Right: [[x,y],z] = [[x,z],y] + [x,[y,z]]
        Vector rres = g.bracket(g.bracket(x, y), z);
        Vector rrhs = add(g.bracket(g.bracket(x, z), y), g.bracket(x, g.bracket(y, z)));
        Vector rdiff = add(rres, scale(-Scalar::one(f), rrhs));
        if (!is_zero(rdiff)) {
          audit.right_ok = false;
          if (audit.failing_triples.size() < cap)
            audit.failing_triples.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1),
                                             static_cast<int>(k + 1), 'R', rdiff});
        }
      }
    }
  }
  return audit;
}

Subspace LeibnizAlgebra::subspace_product(const Subspace& A, const Subspace& B) const {
  if (A.ambient_dim() != dim_ || B.ambient_dim() != dim_) throw AmbientMismatch();
  Matrix rows;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis()) rows.push_back(bracket(a, b));
  return Subspace::span(field_, dim_, rows);
}

IdealFlags LeibnizAlgebra::ideal_flags(const Subspace& U) const {
  IdealFlags flags;
  const Subspace g = full_subspace();
  flags.left = U.contains(subspace_product(g, U));
  flags.right = U.contains(subspace_product(U, g));
  flags.two_sided = flags.left && flags.right;
  return flags;
}

Subspace LeibnizAlgebra::ideal_closure(const std::vector<Vector>& generators) const {
  Subspace U = Subspace::span(field_, dim_, generators);
  const Subspace g = full_subspace();
  for (;;) {
    Subspace next = U.sum(subspace_product(g, U)).sum(subspace_product(U, g));
    if (next == U) return U;
    U = next;
  }
}

Subspace LeibnizAlgebra::leib() const {
  if (convention_ == Convention::Neither) throw NoConvention();
  Matrix rows;
  for (std::size_t i = 0; i < dim_; ++i) {
    rows.push_back(table_[i][i]);
    for (std::size_t j = i + 1; j < dim_; ++j) rows.push_back(add(table_[i][j], table_[j][i]));
  }
  return Subspace::span(field_, dim_, rows);
}

LeibnizAlgebra::Centers LeibnizAlgebra::centers() const {
  // Z_right: [e_i, x] = 0 for all i; stack the left-multiplication matrices.
  Matrix left_mult, right_mult;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Vector lrow(dim_, Scalar::zero(field_));  // row k of L_{e_i}: [e_i, .]
      Vector rrow(dim_, Scalar::zero(field_));  // row k of R_{e_i}: [., e_i]
      for (std::size_t j = 0; j < dim_; ++j) {
        lrow[j] = table_[i][j][k];
        rrow[j] = table_[j][i][k];
      }
      left_mult.push_back(std::move(lrow));
      right_mult.push_back(std::move(rrow));
    }
  }
  Centers c{kernel(field_, dim_, right_mult), kernel(field_, dim_, left_mult), zero_subspace()};
  c.center = c.left.intersect(c.right);
  return c;
}

LeibnizAlgebra::Quotient LeibnizAlgebra::quotient(const Subspace& I) const {
  if (!ideal_flags(I).two_sided) throw NotAnIdeal();
  QuotientCoordinates qc = quotient_coordinates(I);
  const std::size_t q = qc.complement_cols.size();
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Vector v = qc.project(bracket(qc.section[a], qc.section[b]));
      if (!is_zero(v))
        entries.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1), v});
    }
  LeibnizAlgebra alg = build(name_ + "/" + std::to_string(I.dim()), q, field_, entries);
  return {std::move(alg), std::move(qc)};
}

Subspace LeibnizAlgebra::preimage(const Subspace& I, const QuotientCoordinates& coords,
                                  const Subspace& sub_of_quotient) const {
  Matrix rows = I.basis();
  for (const auto& w : sub_of_quotient.basis()) rows.push_back(coords.lift(w));
  return Subspace::span(field_, dim_, rows);
}

LeibnizAlgebra LeibnizAlgebra::direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  const std::size_t n = a.dim_ + b.dim_;
  std::vector<BracketEntry> entries;
  auto embed = [&](const Vector& v, std::size_t offset) {
    Vector out = zero_vector(a.field_, n);
    for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
    return out;
  };
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t j = 0; j < a.dim_; ++j)
      if (!is_zero(a.table_[i][j]))
        entries.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1),
                           embed(a.table_[i][j], 0)});
  for (std::size_t i = 0; i < b.dim_; ++i)
    for (std::size_t j = 0; j < b.dim_; ++j)
      if (!is_zero(b.table_[i][j]))
        entries.push_back({static_cast<int>(a.dim_ + i + 1), static_cast<int>(a.dim_ + j + 1),
                           embed(b.table_[i][j], a.dim_)});
  return build(a.name_ + "+" + b.name_, n, a.field_, entries);
}

LeibnizAlgebra LeibnizAlgebra::restrict_to(const Subspace& U, std::string name) const {
  const std::size_t k = U.dim();
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Vector w = bracket(U.basis()[a], U.basis()[b]);
      if (!U.contains(w)) throw NotAnIdeal("subspace is not closed under the bracket");
      // RREF basis: coordinates are read off at the pivot columns.
      Vector coords(k, Scalar::zero(field_));
      for (std::size_t t = 0; t < k; ++t) coords[t] = w[U.pivots()[t]];
      if (!is_zero(coords))
        entries.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1), coords});
    }
  return build(std::move(name), k, field_, entries);
}

namespace {

// Dimension of the unital associative algebra generated by the left and right
// multiplication operators.  Equal to dim^2 iff the algebra acts irreducibly
// over every extension field (Burnside), which certifies simplicity.
std::size_t multiplication_algebra_dim(const LeibnizAlgebra& g) {
  const std::size_t n = g.dim();
  if (n == 0) return 0;
  const auto& f = g.field();
  // Operators as flattened n*n vectors.
  auto flatten = [n](const Matrix& m) {
    Vector v;
    v.reserve(n * n);
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
  };
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix L(n, Vector(n, Scalar::zero(f))), R(n, Vector(n, Scalar::zero(f)));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        L[k][j] = g.table(i, j)[k];
        R[k][j] = g.table(j, i)[k];
      }
    gens.push_back(std::move(L));
    gens.push_back(std::move(R));
  }
  Matrix identity(n, Vector(n, Scalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = Scalar::one(f);

  std::vector<Matrix> span_elems = {identity};
  Matrix flat = {flatten(identity)};
  Subspace sp = Subspace::span(f, n * n, flat);
  std::size_t frontier_start = 0;
  while (frontier_start < span_elems.size()) {
    const std::size_t frontier_end = span_elems.size();
    for (std::size_t s = frontier_start; s < frontier_end; ++s)
      for (const auto& gmat : gens) {
        Matrix prod(n, Vector(n, Scalar::zero(f)));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t kk = 0; kk < n; ++kk) {
            if (gmat[i][kk].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) prod[i][j] += gmat[i][kk] * span_elems[s][kk][j];
          }
        Vector fv = flatten(prod);
        if (!sp.contains(fv)) {
          flat.push_back(fv);
          sp = Subspace::span(f, n * n, flat);
          span_elems.push_back(std::move(prod));
        }
      }
    frontier_start = frontier_end;
    if (sp.dim() == n * n) break;
  }
  return sp.dim();
}

}  // namespace

bool LeibnizAlgebra::lie_simple() const {
  const Subspace derived = subspace_product(full_subspace(), full_subspace());
  if (derived.is_zero() || dim_ == 0) return false;
  // Witness search: the closure of any nonzero vector is an ideal.
  for (std::size_t i = 0; i < dim_; ++i) {
    Subspace c = ideal_closure({unit_vector(field_, dim_, i)});
    if (!c.is_full()) return false;
  }
  if (!field_.is_rational()) {
    // Exact over GF(p): every ideal is a sum of closures of its vectors, and
    // every nonzero vector of a proper ideal has proper closure; enumerate.
    double work = 1;
    for (std::size_t i = 0; i < dim_; ++i) work *= field_.characteristic;
    if (work > 2e6) throw EnumerationTooLarge(static_cast<unsigned long long>(work), 2000000);
    std::vector<long> digits(dim_, 0);
    const long p = field_.characteristic;
    for (;;) {
      std::size_t pos = 0;
      while (pos < dim_ && digits[pos] == p - 1) digits[pos++] = 0;
      if (pos == dim_) break;
      ++digits[pos];
      Vector v(dim_, Scalar::zero(field_));
      for (std::size_t k = 0; k < dim_; ++k) v[k] = Scalar::from_int(field_, digits[k]);
      if (!ideal_closure({v}).is_full()) return false;
    }
    return true;
  }
  // Over Q a full multiplication algebra certifies that no invariant subspace
  // exists; otherwise simplicity is not decided by this search.
  if (multiplication_algebra_dim(*this) == dim_ * dim_) return true;
  throw Error("simplicity over Q undecided for '" + name_ + "': no witness found and no certificate");
}

bool LeibnizAlgebra::leibniz_simple() const {
  const Subspace L = leib();
  if (L.is_zero()) return lie_simple();
  const Subspace derived = subspace_product(full_subspace(), full_subspace());
  if (derived == L || dim_ == 0) return false;
  // Ideals other than 0, Leib, g must be excluded.
  for (std::size_t i = 0; i < dim_; ++i) {
    Subspace c = ideal_closure({unit_vector(field_, dim_, i)});
    if (!(c.is_full() || c == L || c.is_zero())) return false;
  }
  for (const auto& v : L.basis()) {
    Subspace c = ideal_closure({v});
    if (!(c == L || c.is_zero())) return false;
  }
  if (!field_.is_rational()) {
    double work = 1;
    for (std::size_t i = 0; i < dim_; ++i) work *= field_.characteristic;
    if (work > 2e6) throw EnumerationTooLarge(static_cast<unsigned long long>(work), 2000000);
    std::vector<long> digits(dim_, 0);
    const long p = field_.characteristic;
    for (;;) {
      std::size_t pos = 0;
      while (pos < dim_ && digits[pos] == p - 1) digits[pos++] = 0;
      if (pos == dim_) break;
      ++digits[pos];
      Vector v(dim_, Scalar::zero(field_));
      for (std::size_t k = 0; k < dim_; ++k) v[k] = Scalar::from_int(field_, digits[k]);
      Subspace c = ideal_closure({v});
      if (!(c.is_full() || c == L)) return false;
    }
    return true;
  }
  throw Error("Leibniz simplicity over Q undecided for '" + name_ + "'");
}

}  // namespace leibniz
