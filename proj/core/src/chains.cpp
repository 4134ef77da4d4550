#include "leibniz/chains.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

ChainSpec::ChainSpec(const LeibnizAlgebra& g, std::vector<Subspace> terms)
    : algebra_(&g), terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("a chain needs at least one term");
}

ChainSpec::ChainSpec(const LeibnizAlgebra& g, std::function<Subspace(std::size_t)> rule,
                     std::size_t depth, bool generated)
    : algebra_(&g), generated_(generated) {
  if (depth == 0) throw BadDepth("chain exploration depth must be positive");
  terms_.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) terms_.push_back(rule(k));
}

ChainSpec& ChainSpec::validate() {
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (!algebra_->ideal_flags(terms_[k]).two_sided)
      throw NotAnIdeal("chain term " + std::to_string(k) + " is not a two-sided ideal");
    if (k > 0 && !terms_[k - 1].contains(terms_[k])) throw NotDescending(k);
  }
  validated_ = true;
  return *this;
}

Subspace chain_intersection(const ChainSpec& spec) {
  if (!spec.validated()) throw InputError("chain must be validated first");
  Subspace inter = spec.terms().front();
  for (const auto& t : spec.terms()) inter = inter.intersect(t);
  return inter;
}

std::optional<std::size_t> stabilization_index(const ChainSpec& spec) {
  if (!spec.validated()) throw InputError("chain must be validated first");
  const auto& terms = spec.terms();
  for (std::size_t k = 0; k + 1 < terms.size(); ++k)
    if (terms[k] == terms[k + 1]) return k;
  // A strictly decreasing prefix of a generated chain proves nothing yet.
  if (spec.generated() && terms.size() > 1) return std::nullopt;
  return terms.size() - 1;
}

WitnessReport qa_witness(const ChainSpec& spec, std::size_t max_m) {
  if (!spec.validated()) throw InputError("chain must be validated first");
  const auto& g = spec.algebra();
  WitnessReport rep{std::nullopt, std::nullopt, std::nullopt, chain_intersection(spec),
                    stabilization_index(spec), max_m};
  const auto derived = derived_series(g);
  auto derived_term = [&](std::size_t m) -> const Subspace& {
    return derived.terms[std::min(m, derived.terms.size() - 1)];
  };
  for (std::size_t m = 0; m <= max_m; ++m) {
    const Subspace& gm = derived_term(m);
    const Subspace& im = spec.term(m);
    const bool left = rep.intersection.contains(g.subspace_product(gm, im));
    const bool right = rep.intersection.contains(g.subspace_product(im, gm));
    if (left && !rep.witness_left) rep.witness_left = m;
    if (right && !rep.witness_right) rep.witness_right = m;
    if (left && right) {
      rep.witness_m = m;
      break;
    }
  }
  return rep;
}

ArtinianReport artinian_report(const LeibnizAlgebra& g, const std::vector<ChainSpec>& chains) {
  ArtinianReport rep;
  rep.artinian = true;
  rep.evidence = "finite dimension " + std::to_string(g.dim()) +
                 ": strictly descending chains have length <= " + std::to_string(g.dim() + 1);
  for (const auto& c : chains) {
    std::size_t strict = 1;
    for (std::size_t k = 0; k + 1 < c.terms().size(); ++k)
      if (!(c.terms()[k] == c.terms()[k + 1])) ++strict;
    rep.longest_strict_descent = std::max(rep.longest_strict_descent, strict);
  }
  return rep;
}

ArtinianReport artinian_report_bounded(const ChainSpec& chain) {
  ArtinianReport rep;
  bool strictly = true;
  for (std::size_t k = 0; k + 1 < chain.terms().size(); ++k)
    if (chain.terms()[k] == chain.terms()[k + 1]) {
      strictly = false;
      break;
    }
  rep.longest_strict_descent = strictly ? chain.terms().size() : 0;
  if (strictly && chain.terms().size() > 1) {
    rep.artinian = false;
    rep.evidence = "not Artinian up to depth " + std::to_string(chain.terms().size()) +
                   ": strictly descending chain of length " + std::to_string(chain.terms().size()) +
                   " exhibited";
  } else {
    rep.artinian = true;
    rep.evidence = "explored chain stabilizes within depth " + std::to_string(chain.terms().size());
  }
  return rep;
}

}  // namespace leibniz
