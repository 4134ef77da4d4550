#ifndef LEIBNIZ_LAZY_HPP
#define LEIBNIZ_LAZY_HPP

#include <map>

#include "leibniz/algebra.hpp"
#include "leibniz/chains.hpp"

namespace leibniz {

/// Basis index of a countable-basis rule algebra.
///   Basis    e_n            (example2)
///   XAlpha   x_alpha        (remark-sl2, alpha a nonzero rational)
///   Operator a word over {a,b,c} acting on the x-span; single letters are
///            the generators, longer words arise from iterated brackets
///   Copy     summand i, coordinate j                      (sum-simple)
struct LazyIndex {
  enum class Tag { Basis, XAlpha, Operator, Copy };
  Tag tag = Tag::Basis;
  long n = 0;
  long inner = 0;
  mpq_class alpha = 0;
  std::string word;

  static LazyIndex basis(long n) { return {Tag::Basis, n, 0, 0, {}}; }
  static LazyIndex x(mpq_class a) { return {Tag::XAlpha, 0, 0, std::move(a), {}}; }
  static LazyIndex op(std::string w) { return {Tag::Operator, 0, 0, 0, std::move(w)}; }
  static LazyIndex copy(long i, long j) { return {Tag::Copy, i, j, 0, {}}; }

  std::string str() const;
  friend bool operator<(const LazyIndex& a, const LazyIndex& b);
  friend bool operator==(const LazyIndex& a, const LazyIndex& b);
};

/// Finitely supported coordinate vector; zero coefficients are never stored.
using LazyElement = std::map<LazyIndex, Scalar>;

LazyElement lazy_single(const LazyIndex& i, const Scalar& c);
LazyElement lazy_add(const LazyElement& a, const LazyElement& b);
LazyElement lazy_scale(const Scalar& c, const LazyElement& e);
bool lazy_is_zero(const LazyElement& e);
std::string lazy_str(const LazyElement& e);

enum class ClaimStatus { Confirmed, FailedWithCounterexample, BoundedEvidenceOnly };

std::string to_string(ClaimStatus s);

struct ClaimAuditReport {
  std::string claim_id;
  std::string statement;
  ClaimStatus status;
  std::string detail;
  std::size_t depth_used = 0;
  // Replayable counterexample, when status is FailedWithCounterexample.
  // The meaning of the witness elements is per-claim; replay_counterexample
  // recomputes the violation from them.
  std::optional<LazyElement> witness_x, witness_y, witness_z, witness_product;
  std::string violation;
};

struct Truncation {
  LeibnizAlgebra algebra;
  std::vector<LazyIndex> coordinate_index;  // coordinate k  ->  basis index
  std::vector<std::string> escapes;         // rule applications leaving the grid
  bool exact = false;                       // true when the snapshot is a quotient
};

/// One of the three built-in rule algebras: "example2", "remark-sl2",
/// "sum-simple".
class LazyFamily {
 public:
  struct Params {
    // sum-simple: the finite simple summand (defaults to sl2 over Q).
    std::optional<LeibnizAlgebra> summand;
    // remark-sl2 grid: alpha = k/denominator with 0 < |k| <= radius*denominator.
    long grid_denominator = 2;
    long grid_radius = 2;
  };

  static LazyFamily instantiate(const std::string& name);
  static LazyFamily instantiate(const std::string& name, Params params);

  const std::string& name() const { return name_; }

  /// Bilinear extension of the family's bracket rule.
  LazyElement bracket(const LazyElement& x, const LazyElement& y) const;

  Truncation truncate(std::size_t depth) const;

  /// Materializes a chain rule inside the depth-`depth` truncation.
  ///   example2:   "tail"       T_k = span{e_i : i >= k}, k >= 4
  ///   sum-simple: "tail-sum"   T_s = sum of copies > s
  ///   sum-simple: "displayed"  J_s = sum of copies <= s  (as printed; increasing)
  ChainSpec chain(const std::string& rule_id, const Truncation& trunc) const;

  std::vector<ClaimAuditReport> audit_claims(std::size_t depth, unsigned seed = 1) const;

 private:
  LazyFamily() = default;
  LazyElement bracket_basis(const LazyIndex& a, const LazyIndex& b) const;

  Truncation truncate_example2(std::size_t depth) const;
  Truncation truncate_remark(std::size_t depth) const;
  Truncation truncate_sum(std::size_t depth) const;

  std::vector<ClaimAuditReport> audit_example2(std::size_t depth) const;
  std::vector<ClaimAuditReport> audit_remark(std::size_t depth, unsigned seed) const;
  std::vector<ClaimAuditReport> audit_sum(std::size_t depth) const;

  std::string name_;
  Params params_;
};

/// Replays a counterexample: recomputes the recorded bracket and checks it
/// still produces the recorded product.  Used by audits and tests.
bool replay_counterexample(const LazyFamily& f, const ClaimAuditReport& r);

}  // namespace leibniz

#endif
