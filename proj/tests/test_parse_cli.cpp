#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "leibniz/cli.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/parse.hpp"

using namespace leibniz;
using namespace testhelpers;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::string corpus_path(const std::string& name) { return std::string(CORPUS_DIR) + "/" + name; }

}  // namespace

TEST_CASE("grammar: the worked examples") {
  const auto file = parse_algebra_file(
      "algebra ex1\n field Q\n dim 6\n"
      " bracket e2 e2 = e1\n bracket e3 e3 = e4\n"
      " bracket e4 e3 = e5\n bracket e5 e3 = e6\nend\n");
  REQUIRE(file.blocks.size() == 1);
  const auto g = file.blocks[0].build();
  CHECK(g.dim() == 6);
  CHECK(g.table(1, 1) == unit_vector(g.field(), 6, 0));

  const auto mixed = parse_algebra_file(
      "algebra t\n field Q\n dim 3\n bracket e2 e2 = 1/2*e1 - e3\nend\n");
  const Vector v = mixed.blocks[0].entries[0].value;
  CHECK(v[0] == Scalar::from_fraction(FieldDescriptor::rationals(), 1, 2));
  CHECK(v[2] == -Scalar::one(FieldDescriptor::rationals()));
  CHECK(v[1].is_zero());
}

TEST_CASE("grammar: every rejection names its line") {
  CHECK_THROWS_AS(parse_algebra_file("algebra t\n field GF 2\n dim 1\nend\n"), FieldCharTwo);
  try {
    parse_algebra_file("algebra t\n field Q\n dim 2\n bracket e1 e5 = e1\nend\n");
    FAIL("expected IndexOutOfRange");
  } catch (const IndexOutOfRange& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  try {
    parse_algebra_file("algebra t\n field Q\n dim 2\n junk\nend\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 4);
  }
  CHECK_THROWS_AS(parse_algebra_file("algebra t\n field Q\n dim 2\n"
                                     " bracket e1 e1 = e2\n bracket e1 e1 = e1\nend\n"),
                  DuplicateBracket);
  CHECK_THROWS_AS(
      parse_algebra_file("algebra t\n field Q\n dim 1\nend\nalgebra t\n field Q\n dim 1\nend\n"),
      DuplicateName);
  CHECK_THROWS_AS(parse_algebra_file("algebra t\n field Q\n dim 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_algebra_file("bracket e1 e1 = e1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_algebra_file("algebra t\n field GF 9\n dim 1\nend\n"), NotPrime);
}

TEST_CASE("comments and blank lines are ignored") {
  const auto file = parse_algebra_file(
      "# header comment\nalgebra t # trailing\n\n field Q\n dim 1\nend\n");
  CHECK(file.blocks.size() == 1);
}

TEST_CASE("round-trip: serialize then reparse is the identity") {
  for (const char* name : {"rational.alg", "finite.alg"}) {
    const auto original = parse_algebra_file(read_corpus_file(name));
    const auto reparsed = parse_algebra_file(serialize_algebra_file(original));
    REQUIRE(original.blocks.size() == reparsed.blocks.size());
    for (std::size_t b = 0; b < original.blocks.size(); ++b) {
      const auto& x = original.blocks[b];
      const auto& y = reparsed.blocks[b];
      CHECK(x.name == y.name);
      CHECK(x.field == y.field);
      CHECK(x.dim == y.dim);
      REQUIRE(x.entries.size() == y.entries.size());
      for (std::size_t e = 0; e < x.entries.size(); ++e) {
        CHECK(x.entries[e].i == y.entries[e].i);
        CHECK(x.entries[e].j == y.entries[e].j);
        CHECK(x.entries[e].value == y.entries[e].value);
      }
    }
  }
  // negative leading coefficients survive the trip
  AlgebraFile f;
  f.blocks.push_back({"neg", FieldDescriptor::rationals(), 2, {}});
  Vector v = zero_vector(FieldDescriptor::rationals(), 2);
  v[1] = Scalar::from_int(FieldDescriptor::rationals(), -1);
  f.blocks[0].entries.push_back({1, 1, v});
  const auto back = parse_algebra_file(serialize_algebra_file(f));
  CHECK(back.blocks[0].entries[0].value == v);
}

TEST_CASE("exit codes") {
  CHECK(run({"check", corpus_path("rational.alg"), "-a", "ex1"}) == 0);
  CHECK(run({"check", corpus_path("rational.alg"), "-a", "nope"}) == 1);
  CHECK(run({"check", "/nonexistent.alg", "-a", "x"}) == 1);
  CHECK(run({"bogus-command"}) == 1);
  CHECK(run({"ideals", corpus_path("finite.alg"), "-a", "sl2_gf5", "--guard", "10"}) == 2);
  CHECK(run({"ideals", corpus_path("rational.alg"), "-a", "sl2"}) == 1);  // NotFiniteField
  CHECK(run({"lazy", "example2", "--depth", "12", "--audit"}) == 3);
  CHECK(run({"lazy", "example2", "--depth", "12"}) == 0);
  CHECK(run({"lazy", "example2", "--depth", "2"}) == 1);  // BadDepth
  CHECK(run({"chain", corpus_path("rational.alg"), "-a", "ex1", "--terms", "e3", "e1"}) == 1);
}

TEST_CASE("check command reports the audited convention") {
  std::string text;
  REQUIRE(run({"check", corpus_path("rational.alg"), "-a", "ex1"}, &text) == 0);
  CHECK(text.find("left_ok: false") != std::string::npos);
  CHECK(text.find("right_ok: true") != std::string::npos);
  CHECK(text.find("convention: Right") != std::string::npos);
}

TEST_CASE("series json payload carries the derived dims") {
  std::string text;
  REQUIRE(run({"series", corpus_path("rational.alg"), "-a", "ex1", "--kind", "derived",
               "--format", "json"},
              &text) == 0);
  CHECK(text.find("\"dims\": [\n      6,\n      4,\n      0\n    ]") != std::string::npos);
}

TEST_CASE("machine reports are byte-identical across runs") {
  const std::vector<std::vector<std::string>> matrix = {
      {"check", corpus_path("rational.alg"), "-a", "ex1", "--format", "json"},
      {"primes", corpus_path("finite.alg"), "-a", "sl2_gf5", "--ideal", "0", "--format", "json"},
      {"lazy", "remark-sl2", "--depth", "3", "--audit", "--seed", "7", "--format", "json"},
  };
  for (const auto& cmd : matrix) {
    std::string first, second;
    const int c1 = run(cmd, &first);
    const int c2 = run(cmd, &second);
    CHECK(c1 == c2);
    CHECK(first == second);
    CHECK_FALSE(first.empty());
  }
}

TEST_CASE("quotient and dsum emit reparseable tables") {
  std::string text;
  REQUIRE(run({"quotient", corpus_path("rational.alg"), "-a", "ex1", "--by", "e1,e2",
               "--format", "json"},
              &text) == 0);
  // extract the embedded table and reparse it
  const auto pos = text.find("\"quotient_table\": \"");
  REQUIRE(pos != std::string::npos);
  CHECK(text.find("bracket e1 e1 = e2") != std::string::npos);

  REQUIRE(run({"dsum", corpus_path("rational.alg"), "-a", "sl2", "-a", "solv2"}, &text) == 0);
  CHECK(text.find("dim: 5") != std::string::npos);
}
