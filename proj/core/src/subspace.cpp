#include "leibniz/subspace.hpp"

#include <algorithm>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

Vector zero_vector(const FieldDescriptor& f, std::size_t n) {
  return Vector(n, Scalar::zero(f));
}

Vector unit_vector(const FieldDescriptor& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw AmbientMismatch();
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

namespace {

// In-place Gauss-Jordan to canonical RREF.  Returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);  // drop zero rows
  return pivots;
}

}  // namespace

Subspace Subspace::zero(const FieldDescriptor& f, std::size_t ambient_dim) {
  return Subspace(f, ambient_dim);
}

Subspace Subspace::full(const FieldDescriptor& f, std::size_t ambient_dim) {
  Subspace s(f, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(f, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const FieldDescriptor& f, std::size_t ambient_dim, const Matrix& rows) {
  Subspace s(f, ambient_dim);
  Matrix m;
  for (const auto& row : rows) {
    if (row.size() != ambient_dim) throw AmbientMismatch();
    for (const auto& x : row)
      if (!(x.field() == f)) throw MixedFields();
    m.push_back(row);
  }
  s.basis_ = std::move(m);
  s.pivots_ = rref_in_place(s.basis_);
  return s;
}

void Subspace::check_compatible(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw AmbientMismatch();
  if (!(field_ == other.field_)) throw FieldMismatch();
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw AmbientMismatch();
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) r[j] -= c * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return leibniz::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  Matrix m = basis_;
  m.insert(m.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_dim_, m);
}

// Zassenhaus: rref of [A|A; B|0]; rows whose left half vanished carry an
// intersection basis in the right half.
Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other);
  const std::size_t n = ambient_dim_;
  Matrix block;
  for (const auto& row : basis_) {
    Vector r(row);
    r.insert(r.end(), row.begin(), row.end());
    block.push_back(std::move(r));
  }
  for (const auto& row : other.basis_) {
    Vector r(row);
    Vector zeros = zero_vector(field_, n);
    r.insert(r.end(), zeros.begin(), zeros.end());
    block.push_back(std::move(r));
  }
  rref_in_place(block);
  Matrix inter;
  for (const auto& row : block) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = row[j].is_zero();
    if (left_zero) inter.emplace_back(row.begin() + n, row.end());
  }
  return span(field_, n, inter);
}

std::string Subspace::key() const {
  std::ostringstream os;
  for (const auto& row : basis_) {
    for (const auto& x : row) os << x.value_str() << ',';
    os << ';';
  }
  return os.str();
}

Subspace rref(const Matrix& rows) {
  if (rows.empty()) throw EmptyAmbient();
  if (rows[0].empty()) throw EmptyAmbient();
  const std::size_t n = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != n) throw AmbientMismatch();
  return Subspace::span(rows[0][0].field(), n, rows);
}

Subspace kernel(const FieldDescriptor& f, std::size_t cols, const Matrix& M) {
  Matrix m = M;
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vector v = zero_vector(f, cols);
    v[c] = Scalar::one(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, cols, basis);
}

Vector QuotientCoordinates::project(const Vector& v) const {
  Vector out;
  out.reserve(projection.size());
  for (const auto& row : projection) {
    if (row.size() != v.size()) throw AmbientMismatch();
    Scalar s = row.empty() ? Scalar() : Scalar::zero(row[0].field());
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
    out.push_back(s);
  }
  return out;
}

Vector QuotientCoordinates::lift(const Vector& w) const {
  if (w.size() != section.size()) throw AmbientMismatch();
  if (section.empty()) return {};
  Vector out = zero_vector(w.empty() ? FieldDescriptor::rationals() : w[0].field(),
                           section[0].size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += w[i] * section[i][j];
  return out;
}

QuotientCoordinates quotient_coordinates(const Subspace& A) {
  const std::size_t n = A.ambient_dim();
  const auto& f = A.field();
  std::vector<bool> is_pivot(n, false);
  for (auto p : A.pivots()) is_pivot[p] = true;

  QuotientCoordinates qc;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) qc.complement_cols.push_back(c);

  // Row j of the projection reads off complement coordinate j of v reduced mod A.
  Matrix reduced_units;
  for (std::size_t e = 0; e < n; ++e) reduced_units.push_back(A.reduce(unit_vector(f, n, e)));
  for (auto c : qc.complement_cols) {
    Vector row = zero_vector(f, n);
    for (std::size_t e = 0; e < n; ++e) row[e] = reduced_units[e][c];
    qc.projection.push_back(std::move(row));
    qc.section.push_back(unit_vector(f, n, c));
  }
  return qc;
}

}  // namespace leibniz
