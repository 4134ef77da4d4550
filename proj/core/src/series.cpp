#include "leibniz/series.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/primes.hpp"

namespace leibniz {

std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::Derived: return "derived";
    case SeriesKind::LowerCentral: return "lower-central";
    case SeriesKind::UpperCentral: return "upper-central";
  }
  return "?";
}

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> d;
  d.reserve(terms.size());
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

namespace {

SeriesReport iterate(SeriesKind kind, Subspace start,
                     const std::function<Subspace(const Subspace&)>& step) {
  SeriesReport rep{kind, {std::move(start)}, 0};
  for (;;) {
    Subspace next = step(rep.terms.back());
    if (next == rep.terms.back()) {
      rep.stabilized_at = rep.terms.size() - 1;
      return rep;
    }
    rep.terms.push_back(std::move(next));
  }
}

}  // namespace

SeriesReport derived_series(const LeibnizAlgebra& g) {
  return iterate(SeriesKind::Derived, g.full_subspace(),
                 [&g](const Subspace& t) { return g.subspace_product(t, t); });
}

SeriesReport lower_central_series(const LeibnizAlgebra& g) {
  const Subspace full = g.full_subspace();
  return iterate(SeriesKind::LowerCentral, full, [&](const Subspace& t) {
    return g.subspace_product(full, t).sum(g.subspace_product(t, full));
  });
}

SeriesReport upper_central_series(const LeibnizAlgebra& g) {
  return iterate(SeriesKind::UpperCentral, g.zero_subspace(), [&g](const Subspace& t) {
    if (t.is_full()) return t;
    auto q = g.quotient(t);
    return g.preimage(t, q.coords, q.algebra.centers().center);
  });
}

bool is_solvable(const LeibnizAlgebra& g) { return derived_series(g).stable_term().is_zero(); }

std::size_t derived_length(const LeibnizAlgebra& g) {
  const auto rep = derived_series(g);
  return rep.terms.size() - 1;  // last term is the stabilized one (0 when solvable)
}

bool is_nilpotent(const LeibnizAlgebra& g) {
  return lower_central_series(g).stable_term().is_zero();
}

bool is_hypercentral(const LeibnizAlgebra& g) {
  return upper_central_series(g).stable_term().is_full();
}

namespace {

// Radical of a Lie algebra over Q: the trace-form orthogonal of [L, L].
Subspace lie_radical_char0(const LeibnizAlgebra& L) {
  const std::size_t n = L.dim();
  const auto& f = L.field();
  // ad(e_j) matrices.
  std::vector<Matrix> ad(n, Matrix(n, Vector(n, Scalar::zero(f))));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k) ad[j][k][c] = L.table(j, c)[k];

  auto ad_of = [&](const Vector& x) {
    Matrix m(n, Vector(n, Scalar::zero(f)));
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r][c] += x[j] * ad[j][r][c];
    }
    return m;
  };

  const Subspace derived = L.subspace_product(L.full_subspace(), L.full_subspace());
  Matrix system;  // one row per y in basis([L,L]): x -> tr(ad x . ad y)
  for (const auto& y : derived.basis()) {
    const Matrix ady = ad_of(y);
    Vector row(n, Scalar::zero(f));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) row[j] += ad[j][r][c] * ady[c][r];
    system.push_back(std::move(row));
  }
  return kernel(f, n, system);
}

}  // namespace

Subspace solvable_radical(const LeibnizAlgebra& g, unsigned long long enumeration_guard) {
  if (g.convention() == Convention::Neither) throw NoConvention();
  if (g.field().is_rational()) {
    const Subspace L = g.leib();
    auto q = g.quotient(L);
    const Subspace rad_q = lie_radical_char0(q.algebra);
    return g.preimage(L, q.coords, rad_q);
  }
  const IdealLattice lattice = enumerate_ideals(g, enumeration_guard);
  Subspace rad = g.zero_subspace();
  for (const auto& I : lattice.ideals) {
    if (rad.contains(I)) continue;
    if (is_solvable(g.restrict_to(I))) rad = rad.sum(I);
  }
  return rad;
}

bool is_semisimple(const LeibnizAlgebra& g, unsigned long long enumeration_guard) {
  return solvable_radical(g, enumeration_guard) == g.leib();
}

}  // namespace leibniz
