#ifndef LEIBNIZ_SERIES_HPP
#define LEIBNIZ_SERIES_HPP

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class SeriesKind { Derived, LowerCentral, UpperCentral };

std::string to_string(SeriesKind k);

/// A stabilized ideal series.  Descending for Derived/LowerCentral, ascending
/// for UpperCentral; the last stored term repeats forever.
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace> terms;
  std::size_t stabilized_at = 0;  // first index whose term equals all later ones

  std::vector<std::size_t> dims() const;
  const Subspace& stable_term() const { return terms.back(); }
};

/// g^(0) = g, g^(k+1) = [g^(k), g^(k)].
SeriesReport derived_series(const LeibnizAlgebra& g);
/// C^0 = g, C^{k+1} = [g, C^k] + [C^k, g]  (two-sided, convention-neutral).
SeriesReport lower_central_series(const LeibnizAlgebra& g);
/// zeta_0 = 0, zeta_{k+1} = preimage of Z(g / zeta_k).
SeriesReport upper_central_series(const LeibnizAlgebra& g);

bool is_solvable(const LeibnizAlgebra& g);
/// First k with g^(k) = 0; meaningful only when solvable.
std::size_t derived_length(const LeibnizAlgebra& g);
bool is_nilpotent(const LeibnizAlgebra& g);
bool is_hypercentral(const LeibnizAlgebra& g);

/// The largest solvable two-sided ideal.  Over Q this reduces to the Lie
/// quotient g/Leib(g) and the trace-form radical criterion; over GF(p) it
/// enumerates the ideal lattice and sums the solvable members.
Subspace solvable_radical(const LeibnizAlgebra& g, unsigned long long enumeration_guard = 1000000);

/// Rad(g) = Leib(g).
bool is_semisimple(const LeibnizAlgebra& g, unsigned long long enumeration_guard = 1000000);

}  // namespace leibniz

#endif
