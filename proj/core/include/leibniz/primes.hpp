#ifndef LEIBNIZ_PRIMES_HPP
#define LEIBNIZ_PRIMES_HPP

#include "leibniz/algebra.hpp"

namespace leibniz {

/// The full lattice of two-sided ideals of a GF(p) algebra, canonically sorted.
struct IdealLattice {
  enum class Provenance { PrincipalJoinClosure, ExhaustiveSubspaceFilter };

  std::vector<Subspace> ideals;  // sorted by (dim, key); contains 0 and g
  Provenance generated_by = Provenance::PrincipalJoinClosure;

  bool contains(const Subspace& s) const;
};

/// Enumerates every two-sided ideal: principal closures of all nonzero
/// vectors, then closure under pairwise sums.  Requires a prime field and
/// p^dim within the guard.
IdealLattice enumerate_ideals(const LeibnizAlgebra& g, unsigned long long guard = 1000000);

/// Oracle: filter every subspace of GF(p)^dim for ideal-ness.  Exponential in
/// a worse way than the principal-join method; meant for small validation runs.
IdealLattice enumerate_ideals_exhaustive(const LeibnizAlgebra& g,
                                         unsigned long long guard = 1000000);

/// K proper; true iff [h1,h2] subset of K forces h1 or h2 inside K, over all
/// lattice pairs.
bool is_prime_ideal(const LeibnizAlgebra& g, const IdealLattice& lattice, const Subspace& K);
bool is_semiprime_ideal(const LeibnizAlgebra& g, const IdealLattice& lattice, const Subspace& I);
/// Proper J with nothing strictly between J and g.
bool is_maximal_ideal(const LeibnizAlgebra& g, const IdealLattice& lattice, const Subspace& J);

/// The algebra-level prime predicate: [h1,h2] inside Leib(g) forces a factor
/// inside Leib(g).
bool is_prime_algebra(const LeibnizAlgebra& g, const IdealLattice& lattice);

std::vector<Subspace> prime_ideals_over(const LeibnizAlgebra& g, const IdealLattice& lattice,
                                        const Subspace& H);
std::vector<Subspace> minimal_primes_over(const LeibnizAlgebra& g, const IdealLattice& lattice,
                                          const Subspace& H);
/// Intersection of the minimal primes over H; the whole algebra when none exist.
Subspace prime_radical(const LeibnizAlgebra& g, const IdealLattice& lattice, const Subspace& H);

}  // namespace leibniz

#endif
