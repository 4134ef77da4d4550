#include "leibniz/primes.hpp"

#include <algorithm>
#include <map>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

void sort_canonical(std::vector<Subspace>& ideals) {
  std::sort(ideals.begin(), ideals.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
  });
}

unsigned long long checked_pow(long p, std::size_t n, unsigned long long guard) {
  unsigned long long w = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (w > guard / static_cast<unsigned long long>(p) + 1) return guard + 1;
    w *= static_cast<unsigned long long>(p);
  }
  return w;
}

// Iterates over all vectors of GF(p)^n except zero.
template <typename F>
void for_each_nonzero_vector(const FieldDescriptor& f, std::size_t n, F&& fn) {
  const long p = f.characteristic;
  std::vector<long> digits(n, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < n && digits[pos] == p - 1) digits[pos++] = 0;
    if (pos == n) return;
    ++digits[pos];
    Vector v(n, Scalar::zero(f));
    for (std::size_t k = 0; k < n; ++k) v[k] = Scalar::from_int(f, digits[k]);
    fn(std::move(v));
  }
}

}  // namespace

bool IdealLattice::contains(const Subspace& s) const {
  return std::any_of(ideals.begin(), ideals.end(), [&](const Subspace& t) { return t == s; });
}

IdealLattice enumerate_ideals(const LeibnizAlgebra& g, unsigned long long guard) {
  if (g.field().is_rational()) throw NotFiniteField();
  const unsigned long long work = checked_pow(g.field().characteristic, g.dim(), guard);
  if (work > guard) throw EnumerationTooLarge(work, guard);

  std::map<std::string, Subspace> found;
  const Subspace zero = g.zero_subspace();
  found.emplace(zero.key(), zero);

  // Every ideal is the sum of the principal closures of its elements.
  for_each_nonzero_vector(g.field(), g.dim(), [&](Vector v) {
    Subspace c = g.ideal_closure({std::move(v)});
    found.emplace(c.key(), std::move(c));
  });

  // Close under pairwise sums to a fixpoint.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subspace> snapshot;
    snapshot.reserve(found.size());
    for (const auto& [k, s] : found) snapshot.push_back(s);
    for (std::size_t a = 0; a < snapshot.size(); ++a)
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        Subspace s = snapshot[a].sum(snapshot[b]);
        if (found.emplace(s.key(), s).second) grew = true;
      }
  }

  IdealLattice lattice;
  lattice.generated_by = IdealLattice::Provenance::PrincipalJoinClosure;
  for (auto& [k, s] : found) lattice.ideals.push_back(s);
  if (!lattice.contains(g.full_subspace()))
    lattice.ideals.push_back(g.full_subspace());  // dim 0 algebra: 0 = g already present
  sort_canonical(lattice.ideals);
  return lattice;
}

IdealLattice enumerate_ideals_exhaustive(const LeibnizAlgebra& g, unsigned long long guard) {
  if (g.field().is_rational()) throw NotFiniteField();
  const std::size_t n = g.dim();
  const unsigned long long vecs = checked_pow(g.field().characteristic, n, guard);
  if (vecs > guard) throw EnumerationTooLarge(vecs, guard);

  // All subspaces, as spans of subsets of the nonzero vectors, deduplicated by
  // canonical RREF.  Breadth-first by extending known subspaces one vector at
  // a time keeps this polynomial in the subspace count.
  std::vector<Vector> all;
  for_each_nonzero_vector(g.field(), n, [&](Vector v) { all.push_back(std::move(v)); });

  std::map<std::string, Subspace> spaces;
  const Subspace zero = g.zero_subspace();
  spaces.emplace(zero.key(), zero);
  std::vector<Subspace> frontier = {zero};
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier)
      for (const auto& v : all) {
        if (s.contains(v)) continue;
        Matrix rows = s.basis();
        rows.push_back(v);
        Subspace bigger = Subspace::span(g.field(), n, rows);
        if (spaces.emplace(bigger.key(), bigger).second) next.push_back(std::move(bigger));
      }
    frontier = std::move(next);
  }

  IdealLattice lattice;
  lattice.generated_by = IdealLattice::Provenance::ExhaustiveSubspaceFilter;
  for (const auto& [k, s] : spaces)
    if (g.ideal_flags(s).two_sided) lattice.ideals.push_back(s);
  sort_canonical(lattice.ideals);
  return lattice;
}

bool is_prime_ideal(const LeibnizAlgebra& g, const IdealLattice& lattice, const Subspace& K) {
  if (K.is_full()) throw NotProper();
  for (const auto& h1 : lattice.ideals)
    for (const auto& h2 : lattice.ideals) {
      if (!K.contains(g.subspace_product(h1, h2))) continue;
      if (!K.contains(h1) && !K.contains(h2)) return false;
    }
  return true;
}

bool is_semiprime_ideal(const LeibnizAlgebra& g, const IdealLattice& lattice, const Subspace& I) {
  if (I.is_full()) throw NotProper();
  for (const auto& h : lattice.ideals)
    if (I.contains(g.subspace_product(h, h)) && !I.contains(h)) return false;
  return true;
}

bool is_maximal_ideal(const LeibnizAlgebra& g, const IdealLattice& lattice, const Subspace& J) {
  if (J.is_full()) return false;  // proper ideals only; see the module notes
  for (const auto& I : lattice.ideals)
    if (I.contains(J) && !(I == J) && !I.is_full()) return false;
  return true;
}

bool is_prime_algebra(const LeibnizAlgebra& g, const IdealLattice& lattice) {
  const Subspace L = g.leib();
  for (const auto& h1 : lattice.ideals)
    for (const auto& h2 : lattice.ideals) {
      if (!L.contains(g.subspace_product(h1, h2))) continue;
      if (!L.contains(h1) && !L.contains(h2)) return false;
    }
  return true;
}

std::vector<Subspace> prime_ideals_over(const LeibnizAlgebra& g, const IdealLattice& lattice,
                                        const Subspace& H) {
  std::vector<Subspace> primes;
  for (const auto& P : lattice.ideals) {
    if (P.is_full() || !P.contains(H)) continue;
    if (is_prime_ideal(g, lattice, P)) primes.push_back(P);
  }
  return primes;
}

std::vector<Subspace> minimal_primes_over(const LeibnizAlgebra& g, const IdealLattice& lattice,
                                          const Subspace& H) {
  const auto primes = prime_ideals_over(g, lattice, H);
  std::vector<Subspace> minimal;
  for (const auto& P : primes) {
    bool is_minimal = true;
    for (const auto& P1 : primes)
      if (!(P1 == P) && P.contains(P1)) {
        is_minimal = false;
        break;
      }
    if (is_minimal) minimal.push_back(P);
  }
  return minimal;
}

Subspace prime_radical(const LeibnizAlgebra& g, const IdealLattice& lattice, const Subspace& H) {
  const auto minimal = minimal_primes_over(g, lattice, H);
  // The empty intersection in a bounded lattice is the top element.
  Subspace rad = g.full_subspace();
  for (const auto& P : minimal) rad = rad.intersect(P);
  return rad;
}

}  // namespace leibniz
