#ifndef LEIBNIZ_TESTS_HELPERS_HPP
#define LEIBNIZ_TESTS_HELPERS_HPP

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/chains.hpp"
#include "leibniz/parse.hpp"
#include "leibniz/series.hpp"

namespace testhelpers {

using namespace leibniz;

inline std::string read_corpus_file(const std::string& name) {
  std::ifstream in(std::string(CORPUS_DIR) + "/" + name, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline LeibnizAlgebra corpus_algebra(const std::string& file, const std::string& name) {
  return parse_algebra_file(read_corpus_file(file)).find(name).build();
}

/// Independent identity oracle: expands both identities directly from the
/// bilinear bracket, no shared code with the library's audit.
struct NaiveAudit {
  bool left_ok = true, right_ok = true;
  std::vector<std::tuple<int, int, int>> left_failures, right_failures;
};

inline Vector naive_bracket(const LeibnizAlgebra& g, const Vector& x, const Vector& y) {
  Vector out = zero_vector(g.field(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const Scalar c = x[i] * y[j];
      if (c.is_zero()) continue;
      out = add(out, scale(c, g.table(i, j)));
    }
  return out;
}

inline NaiveAudit naive_identity_audit(const LeibnizAlgebra& g) {
  NaiveAudit a;
  const std::size_t n = g.dim();
  auto e = [&](std::size_t k) { return unit_vector(g.field(), n, k); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(i), y = e(j), z = e(k);
        // left: [x,[y,z]] = [[x,y],z] + [y,[x,z]]
        Vector lhs = naive_bracket(g, x, naive_bracket(g, y, z));
        Vector rhs = add(naive_bracket(g, naive_bracket(g, x, y), z),
                         naive_bracket(g, y, naive_bracket(g, x, z)));
        if (!(lhs == rhs)) {
          a.left_ok = false;
          a.left_failures.emplace_back(int(i + 1), int(j + 1), int(k + 1));
        }
        // right: [[x,y],z] = [[x,z],y] + [x,[y,z]]
        lhs = naive_bracket(g, naive_bracket(g, x, y), z);
        rhs = add(naive_bracket(g, naive_bracket(g, x, z), y),
                  naive_bracket(g, x, naive_bracket(g, y, z)));
        if (!(lhs == rhs)) {
          a.right_ok = false;
          a.right_failures.emplace_back(int(i + 1), int(j + 1), int(k + 1));
        }
      }
  return a;
}

inline Vector random_vector(const FieldDescriptor& f, std::size_t n, std::mt19937& rng) {
  Vector v;
  const long hi = f.is_rational() ? 9 : f.characteristic - 1;
  const long lo = f.is_rational() ? -9 : 0;
  std::uniform_int_distribution<long> d(lo, hi);
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, d(rng)));
  return v;
}

/// Random element of a given subspace.
inline Vector random_member(const Subspace& s, std::mt19937& rng) {
  Vector v = zero_vector(s.field(), s.ambient_dim());
  std::uniform_int_distribution<long> d(s.field().is_rational() ? -5 : 0,
                                        s.field().is_rational() ? 5 : s.field().characteristic - 1);
  for (const auto& row : s.basis()) v = add(v, scale(Scalar::from_int(s.field(), d(rng)), row));
  return v;
}

/// A random validated descending ideal chain: each term intersects the
/// previous one with the closure of a random element, so every term is an
/// ideal and the chain descends by construction.
inline ChainSpec random_chain(const LeibnizAlgebra& g, std::mt19937& rng, std::size_t max_len = 6) {
  std::vector<Subspace> terms;
  Subspace cur = g.full_subspace();
  terms.push_back(cur);
  for (std::size_t k = 1; k < max_len && !cur.is_zero(); ++k) {
    const Vector v = random_member(cur, rng);
    Subspace next = is_zero(v) ? g.zero_subspace() : cur.intersect(g.ideal_closure({v}));
    terms.push_back(next);
    cur = next;
  }
  ChainSpec chain(g, std::move(terms));
  chain.validate();
  return chain;
}

/// All vectors of a GF(p) subspace, by exhaustive coefficient enumeration of
/// its basis (oracle-side only; fine for dim <= 4, p <= 3).
inline std::set<std::string> enumerate_members(const Subspace& s) {
  const long p = s.field().characteristic;
  std::set<std::string> out;
  const std::size_t k = s.dim();
  std::vector<long> digits(k, 0);
  for (;;) {
    Vector v = zero_vector(s.field(), s.ambient_dim());
    for (std::size_t i = 0; i < k; ++i)
      v = add(v, scale(Scalar::from_int(s.field(), digits[i]), s.basis()[i]));
    std::ostringstream os;
    for (const auto& x : v) os << x.value_str() << ',';
    out.insert(os.str());
    std::size_t pos = 0;
    while (pos < k && digits[pos] == p - 1) digits[pos++] = 0;
    if (pos == k) return out;
    ++digits[pos];
  }
}

/// Brute-force span over GF(p): the set of all linear combinations of rows.
inline std::set<std::string> brute_span(const FieldDescriptor& f, std::size_t n,
                                        const Matrix& rows) {
  const long p = f.characteristic;
  std::set<std::string> out;
  const std::size_t k = rows.size();
  std::vector<long> digits(k, 0);
  for (;;) {
    Vector v = zero_vector(f, n);
    for (std::size_t i = 0; i < k; ++i)
      v = add(v, scale(Scalar::from_int(f, digits[i]), rows[i]));
    std::ostringstream os;
    for (const auto& x : v) os << x.value_str() << ',';
    out.insert(os.str());
    std::size_t pos = 0;
    while (pos < k && digits[pos] == p - 1) digits[pos++] = 0;
    if (pos == k) return out;
    ++digits[pos];
  }
}

}  // namespace testhelpers

#endif
