// Acceptance suite: one line per criterion, process exit code = number of
// failed criteria.  Each criterion recomputes its expected values through an
// independent oracle where one is called for, then checks the library.

#include <functional>
#include <iostream>
#include <sstream>

#include "helpers.hpp"
#include "leibniz/cli.hpp"
#include "leibniz/lazy.hpp"
#include "leibniz/primes.hpp"

using namespace leibniz;
using namespace testhelpers;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> body;
};

#define REQUIRE_OR(cond, msg)        \
  do {                               \
    if (!(cond)) {                   \
      detail = msg;                  \
      return false;                  \
    }                                \
  } while (0)

Subspace units(const LeibnizAlgebra& g, std::initializer_list<std::size_t> one_based) {
  Matrix rows;
  for (auto k : one_based) rows.push_back(unit_vector(g.field(), g.dim(), k - 1));
  return Subspace::span(g.field(), g.dim(), rows);
}

bool criterion1(std::string& detail) {
  const auto g = corpus_algebra("rational.alg", "ex1");
  const NaiveAudit oracle = naive_identity_audit(g);
  REQUIRE_OR(oracle.right_ok, "oracle: right identity should hold on all 216 triples");
  REQUIRE_OR(!oracle.left_ok, "oracle: left identity should fail");
  REQUIRE_OR(g.audit().right_ok && !g.audit().left_ok, "library disagrees with the oracle");
  bool found = false;
  for (const auto& f : g.audit().failing_triples)
    if (f.side == 'L' && f.i == 3 && f.j == 3 && f.k == 3) found = true;
  REQUIRE_OR(found, "(e3,e3,e3) not among the reported left failures");
  bool oracle_found = false;
  for (const auto& [i, j, k] : oracle.left_failures)
    if (i == 3 && j == 3 && k == 3) oracle_found = true;
  REQUIRE_OR(oracle_found, "oracle did not flag (e3,e3,e3)");
  return true;
}

bool criterion2(std::string& detail) {
  const auto g = corpus_algebra("rational.alg", "ex1");
  REQUIRE_OR(g.leib() == units(g, {1, 4, 5, 6}), "Leib != span{e1,e4,e5,e6}");
  const auto c = g.centers();
  REQUIRE_OR(c.left == units(g, {1, 6}), "Z_left != span{e1,e6}");
  REQUIRE_OR(c.right == units(g, {1, 4, 5, 6}), "Z_right != span{e1,e4,e5,e6}");
  REQUIRE_OR(derived_series(g).dims() == std::vector<std::size_t>({6, 4, 0}), "derived dims");
  REQUIRE_OR(lower_central_series(g).dims() == std::vector<std::size_t>({6, 4, 2, 1, 0}),
             "lower-central dims");
  const auto upper = upper_central_series(g);
  REQUIRE_OR(upper.dims() == std::vector<std::size_t>({0, 2, 4, 5, 6}), "upper-central dims");
  REQUIRE_OR(upper.stable_term().is_full(), "zeta_4 != g");
  const Subspace I = units(g, {1, 2});
  REQUIRE_OR(g.ideal_flags(I).two_sided, "I not two-sided");
  const auto q = g.quotient(I);
  REQUIRE_OR(q.algebra.dim() == 4, "quotient dim");
  // J's table in its own coordinates: [f1,f1]=f2, [f2,f1]=f3, [f3,f1]=f4
  const auto J = g.restrict_to(units(g, {3, 4, 5, 6}), "J");
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      REQUIRE_OR(q.algebra.table(a, b) == J.table(a, b), "quotient table differs from J");
  const auto Ialg = g.restrict_to(I, "I");
  REQUIRE_OR(!Ialg.lie_simple(), "I must not be Lie-simple");
  REQUIRE_OR(!Ialg.leibniz_simple(), "I must not be Leibniz-simple");
  const Subspace counter = Ialg.ideal_closure({unit_vector(g.field(), 2, 0)});
  REQUIRE_OR(counter.dim() == 1 && counter.contains(unit_vector(g.field(), 2, 0)),
             "counterexample ideal is not span{e1}");
  return true;
}

bool criterion3(std::string& detail) {
  const auto fam = LazyFamily::instantiate("example2");
  const Truncation t = fam.truncate(12);
  const auto& g = t.algebra;
  REQUIRE_OR(g.audit().right_ok && !g.audit().left_ok, "identity profile");
  bool found = false;
  for (const auto& f : g.audit().failing_triples)
    if (f.side == 'L' && f.i == 1 && f.j == 2 && f.k == 2) found = true;
  REQUIRE_OR(found, "left failure (e1,e2,e2) not reported");
  REQUIRE_OR(derived_series(g).dims() == std::vector<std::size_t>({12, 9, 0}), "derived dims");
  ChainSpec chain = fam.chain("tail", t);
  chain.validate();
  for (std::size_t k = 0; k + 1 < chain.terms().size(); ++k)
    REQUIRE_OR(chain.terms()[k].dim() > chain.terms()[k + 1].dim(), "tail chain not strict");
  REQUIRE_OR(!artinian_report_bounded(chain).artinian, "expected not-Artinian evidence");
  const auto w = qa_witness(chain, 12);
  REQUIRE_OR(w.witness_m.has_value(), "no witness found");
  // The minimal two-sided witness on this chain is m = 1: g^(1) already
  // misses e2 and e3, so both products fall inside every tail.
  REQUIRE_OR(*w.witness_m == 1, "minimal witness should be 1");
  REQUIRE_OR(*w.witness_m <= derived_length(g), "witness exceeds the derived length");
  return true;
}

bool criterion4(std::string& detail) {
  const std::vector<std::pair<std::string, std::string>> solvable = {
      {"rational.alg", "ex1"},     {"rational.alg", "ex2_12"},  {"rational.alg", "solv2"},
      {"rational.alg", "heis3"},   {"rational.alg", "abelian3"}, {"finite.alg", "heis3_gf3"},
      {"finite.alg", "solv2_gf3"}, {"finite.alg", "nil4_gf3"},  {"finite.alg", "abelian2_gf3"},
      {"finite.alg", "ex1_gf5"}};
  for (const auto& [file, name] : solvable) {
    const auto g = corpus_algebra(file, name);
    const std::size_t dl = derived_length(g);
    std::mt19937 rng(41);
    for (int t = 0; t < 25; ++t) {
      const ChainSpec chain = random_chain(g, rng);
      const auto w = qa_witness(chain, dl + 1);
      REQUIRE_OR(w.witness_m.has_value(), name + ": no witness on a random chain");
      REQUIRE_OR(*w.witness_m <= dl, name + ": witness exceeds derived length");
    }
  }
  return true;
}

bool criterion5(std::string& detail) {
  for (const char* name : {"abelian2_gf3", "heis3_gf3", "solv2_gf3", "nil4_gf3", "ex1_gf5"}) {
    const auto g = corpus_algebra("finite.alg", name);
    const auto lattice = enumerate_ideals(g);
    for (const auto& J : lattice.ideals) {
      if (J.is_full()) continue;
      const auto quot = g.quotient(J);
      const auto& q = quot.algebra;
      std::mt19937 rng(43);
      for (int t = 0; t < 10; ++t) {
        const ChainSpec qchain = random_chain(q, rng);
        std::vector<Subspace> pulled;
        for (const auto& term : qchain.terms())
          pulled.push_back(g.preimage(J, quot.coords, term));
        ChainSpec gchain(g, std::move(pulled));
        gchain.validate();
        const auto wg = qa_witness(gchain, g.dim() + 1);
        REQUIRE_OR(wg.witness_m.has_value(), std::string(name) + ": no upstairs witness");
        const std::size_t m = *wg.witness_m;
        const auto qderived = derived_series(q);
        const Subspace& qm = qderived.terms[std::min(m, qderived.terms.size() - 1)];
        const Subspace km = qchain.term(m);
        const Subspace qinter = chain_intersection(qchain);
        REQUIRE_OR(qinter.contains(q.subspace_product(qm, km)) &&
                       qinter.contains(q.subspace_product(km, qm)),
                   std::string(name) + ": pulled-back witness fails to project");
      }
    }
  }
  return true;
}

bool criterion6(std::string& detail) {
  // lattice oracle agreement on the small corpus
  for (const char* name : {"abelian2_gf3", "heis3_gf3", "solv2_gf3", "nil4_gf3"}) {
    const auto g = corpus_algebra("finite.alg", name);
    const auto fast = enumerate_ideals(g);
    const auto oracle = enumerate_ideals_exhaustive(g);
    REQUIRE_OR(fast.ideals.size() == oracle.ideals.size(),
               std::string(name) + ": lattice size mismatch");
    for (std::size_t i = 0; i < fast.ideals.size(); ++i)
      REQUIRE_OR(fast.ideals[i] == oracle.ideals[i], std::string(name) + ": lattice differs");
    // radical properties over every enumerated ideal pair
    for (const auto& h : fast.ideals)
      for (const auto& k : fast.ideals) {
        REQUIRE_OR(prime_radical(g, fast, h.intersect(k)) ==
                       prime_radical(g, fast, h).intersect(prime_radical(g, fast, k)),
                   std::string(name) + ": Rad_P(H cap K) != Rad_P(H) cap Rad_P(K)");
      }
    for (const auto& h : fast.ideals) {
      const Subspace r = prime_radical(g, fast, h);
      REQUIRE_OR(prime_radical(g, fast, r) == r, std::string(name) + ": idempotence");
    }
    const Subspace rad0 = prime_radical(g, fast, g.zero_subspace());
    if (!rad0.is_full()) {
      const auto q = g.quotient(rad0);
      const auto qlat = enumerate_ideals(q.algebra);
      REQUIRE_OR(prime_radical(q.algebra, qlat, q.algebra.zero_subspace()).is_zero(),
                 std::string(name) + ": Rad_P(g/Rad_P(g)) != 0");
    }
  }
  // sl2 over GF(5)
  const auto g = corpus_algebra("finite.alg", "sl2_gf5");
  const auto lat = enumerate_ideals(g);
  REQUIRE_OR(lat.ideals.size() == 2 && lat.ideals.front().is_zero() && lat.ideals.back().is_full(),
             "sl2/GF(5): lattice != {0, g}");
  REQUIRE_OR(is_prime_ideal(g, lat, g.zero_subspace()), "sl2/GF(5): 0 not prime");
  const Subspace rad = prime_radical(g, lat, g.zero_subspace());
  REQUIRE_OR(rad.is_zero() && rad == g.leib(), "sl2/GF(5): Rad_P != 0 = Leib");
  REQUIRE_OR(is_semisimple(g), "sl2/GF(5): not semisimple");
  return true;
}

bool criterion7(std::string& detail) {
  const auto fam = LazyFamily::instantiate("remark-sl2");
  const auto claims = fam.audit_claims(4, 1);
  bool hn_ok = false, ab_ok = false;
  for (const auto& c : claims) {
    if (c.claim_id == "Hn-ideal") {
      hn_ok = c.status == ClaimStatus::FailedWithCounterexample && c.witness_x &&
              lazy_str(*c.witness_x) == "1*x(1/2)" && c.witness_y &&
              lazy_str(*c.witness_y) == "1*a";
    }
    if (c.claim_id == "ab-minus-id")
      ab_ok = c.status == ClaimStatus::Confirmed &&
              c.detail.find("50 sampled") != std::string::npos;
    if (c.status == ClaimStatus::FailedWithCounterexample)
      REQUIRE_OR(replay_counterexample(fam, c), c.claim_id + ": replay failed");
  }
  REQUIRE_OR(hn_ok, "H_1 invariance: expected FailedWithCounterexample at (x(1/2), a)");
  REQUIRE_OR(ab_ok, "[a,b] = -id: expected Confirmed on 50 samples");
  // single-rule oracle: recompute the H_1 violation directly from the rule
  const auto prod = fam.bracket(lazy_single(LazyIndex::x(mpq_class(1, 2)), Scalar::one(FieldDescriptor::rationals())),
                                lazy_single(LazyIndex::op("a"), Scalar::one(FieldDescriptor::rationals())));
  REQUIRE_OR(lazy_str(prod) == "1*x(3/2)", "oracle: [x(1/2), a] != x(3/2)");
  return true;
}

bool criterion8(std::string& detail) {
  const FieldDescriptor gf2{FieldDescriptor::Kind::PrimeField, 2};
  std::mt19937 rng(47);
  std::uniform_int_distribution<std::size_t> nd(1, 4), rd(0, 3);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = nd(rng);
    Matrix m1, m2;
    const std::size_t r1 = rd(rng), r2 = rd(rng);
    for (std::size_t r = 0; r < r1; ++r) m1.push_back(random_vector(gf2, n, rng));
    for (std::size_t r = 0; r < r2; ++r) m2.push_back(random_vector(gf2, n, rng));
    const Subspace a = Subspace::span(gf2, n, m1);
    const Subspace b = Subspace::span(gf2, n, m2);
    const auto ea = enumerate_members(a), eb = enumerate_members(b);
    Matrix joint = m1;
    for (const auto& row : m2) joint.push_back(row);
    REQUIRE_OR(enumerate_members(a.sum(b)) == brute_span(gf2, n, joint), "sum disagrees");
    std::set<std::string> inter;
    for (const auto& k : ea)
      if (eb.count(k)) inter.insert(k);
    REQUIRE_OR(enumerate_members(a.intersect(b)) == inter, "intersection disagrees");
    const Vector v = random_vector(gf2, n, rng);
    std::ostringstream key;
    for (const auto& x : v) key << x.value_str() << ',';
    REQUIRE_OR(a.contains(v) == (ea.count(key.str()) == 1), "contains disagrees");
    REQUIRE_OR(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim(), "dim identity");
  }
  return true;
}

bool criterion9(std::string& detail) {
  const std::string rational = std::string(CORPUS_DIR) + "/rational.alg";
  const std::string finite = std::string(CORPUS_DIR) + "/finite.alg";
  std::vector<std::vector<std::string>> matrix;
  for (const char* name : {"ex1", "ex2_12", "sl2", "abelian3", "heis3", "solv2"}) {
    matrix.push_back({"check", rational, "-a", name});
    matrix.push_back({"series", rational, "-a", name, "--kind", "derived"});
    matrix.push_back({"series", rational, "-a", name, "--kind", "lower"});
    matrix.push_back({"series", rational, "-a", name, "--kind", "upper"});
    matrix.push_back({"leib", rational, "-a", name});
    matrix.push_back({"centers", rational, "-a", name});
    matrix.push_back({"radical", rational, "-a", name});
    matrix.push_back({"semisimple", rational, "-a", name});
    matrix.push_back({"chain", rational, "-a", name, "--terms", "e1"});
    matrix.push_back({"quotient", rational, "-a", name, "--by", "e1"});
  }
  for (const char* name :
       {"sl2_gf5", "abelian2_gf3", "heis3_gf3", "solv2_gf3", "ex1_gf5", "nil4_gf3"}) {
    matrix.push_back({"check", finite, "-a", name});
    matrix.push_back({"series", finite, "-a", name, "--kind", "derived"});
    matrix.push_back({"leib", finite, "-a", name});
    matrix.push_back({"centers", finite, "-a", name});
    matrix.push_back({"radical", finite, "-a", name});
    matrix.push_back({"semisimple", finite, "-a", name});
    matrix.push_back({"ideals", finite, "-a", name});
    matrix.push_back({"primes", finite, "-a", name, "--ideal", "0"});
    matrix.push_back({"prime-radical", finite, "-a", name, "--ideal", "0"});
  }
  matrix.push_back({"dsum", rational, "-a", "sl2", "-a", "solv2"});
  matrix.push_back({"lazy", "example2", "--depth", "12", "--audit"});
  matrix.push_back({"lazy", "remark-sl2", "--depth", "3", "--audit"});
  matrix.push_back({"lazy", "sum-simple", "--depth", "4", "--audit"});

  for (auto cmd : matrix) {
    cmd.push_back("--format");
    cmd.push_back("json");
    cmd.push_back("--seed");
    cmd.push_back("5");
    std::ostringstream out1, out2, err1, err2;
    const int c1 = run_cli(cmd, out1, err1);
    const int c2 = run_cli(cmd, out2, err2);
    std::string echo;
    for (const auto& a : cmd) echo += a + " ";
    REQUIRE_OR(c1 == c2, "exit codes differ for: " + echo);
    REQUIRE_OR(c1 == 0 || c1 == 3, "command failed: " + echo);
    REQUIRE_OR(out1.str() == out2.str() && !out1.str().empty(),
               "reports differ across runs for: " + echo);
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "identity audit on the six-dimensional example", criterion1},
      {2, "structure suite on the six-dimensional example", criterion2},
      {3, "depth-12 truncation of the countable chain family", criterion3},
      {4, "random chains in solvable algebras always yield a bounded witness", criterion4},
      {5, "witnesses pull back and project across quotients", criterion5},
      {6, "prime radical suite and lattice oracle agreement", criterion6},
      {7, "operator-family claim audit with replayable counterexamples", criterion7},
      {8, "linear-algebra oracle equivalence over GF(2)", criterion8},
      {9, "byte-identical machine reports across repeated runs", criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " — " << c.title;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
  }
  return failures;
}
