#ifndef LEIBNIZ_CHAINS_HPP
#define LEIBNIZ_CHAINS_HPP

#include <functional>
#include <optional>

#include "leibniz/algebra.hpp"
#include "leibniz/series.hpp"

namespace leibniz {

/// A descending chain of two-sided ideals: either a finite explicit list or a
/// generator rule explored to a declared depth.  Terms past the explored
/// prefix repeat the last explored term.
class ChainSpec {
 public:
  /// Explicit finite chain.
  ChainSpec(const LeibnizAlgebra& g, std::vector<Subspace> terms);
  /// Rule-generated chain, explored to `depth` terms (rule(0), rule(1), ...).
  ChainSpec(const LeibnizAlgebra& g, std::function<Subspace(std::size_t)> rule, std::size_t depth,
            bool generated = true);

  const LeibnizAlgebra& algebra() const { return *algebra_; }
  const std::vector<Subspace>& terms() const { return terms_; }
  bool generated() const { return generated_; }
  bool validated() const { return validated_; }

  /// The k-th term, clamping past the explored depth.
  const Subspace& term(std::size_t k) const {
    return terms_[std::min(k, terms_.size() - 1)];
  }

  /// Checks ideal-ness and monotonicity of every explored term.
  /// Throws NotAnIdeal / NotDescending; marks the chain validated.
  ChainSpec& validate();

 private:
  const LeibnizAlgebra* algebra_;
  std::vector<Subspace> terms_;
  bool generated_ = false;
  bool validated_ = false;
};

struct WitnessReport {
  std::optional<std::size_t> witness_m;        // smallest two-sided witness
  std::optional<std::size_t> witness_left;     // per-side results
  std::optional<std::size_t> witness_right;
  Subspace intersection;
  std::optional<std::size_t> stabilization_index;
  std::size_t search_depth = 0;
};

/// Intersection of all explored terms (the last term, for a validated
/// descending chain).
Subspace chain_intersection(const ChainSpec& spec);

/// Smallest k with term(k) = term(k+1) = ...; absent when the explored prefix
/// of a generated chain is still strictly decreasing at its end.
std::optional<std::size_t> stabilization_index(const ChainSpec& spec);

/// Searches m = 0..max_m for the smallest m with [g^(m), I_m] and [I_m, g^(m)]
/// inside the chain intersection.  Absence means only "none up to max_m".
WitnessReport qa_witness(const ChainSpec& spec, std::size_t max_m);

struct ArtinianReport {
  bool artinian = false;
  std::string evidence;
  std::size_t longest_strict_descent = 0;
};

/// Finite dimension forces Artinian (chains of length at most dim+1); sampled
/// chains only feed the evidence string.
ArtinianReport artinian_report(const LeibnizAlgebra& g, const std::vector<ChainSpec>& chains = {});

/// Bounded-depth verdict for an explored rule chain: reports "not Artinian up
/// to the explored depth" when the chain descends strictly throughout.
ArtinianReport artinian_report_bounded(const ChainSpec& chain);

}  // namespace leibniz

#endif
