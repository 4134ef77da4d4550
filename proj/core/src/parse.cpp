#include "leibniz/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

long parse_long(const std::string& s, std::size_t line, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError(line, "expected " + what + ", got '" + s + "'");
  }
}

// e<k> with k in [1, dim]; returns the 0-based index.
std::size_t parse_basis_ref(const std::string& tok, std::size_t dim, std::size_t line) {
  if (tok.size() < 2 || tok[0] != 'e')
    throw SyntaxError(line, "expected a basis vector like e1, got '" + tok + "'");
  long k = parse_long(tok.substr(1), line, "a basis index");
  if (k < 1 || static_cast<std::size_t>(k) > dim)
    throw IndexOutOfRange("line " + std::to_string(line) + ": basis index " + std::to_string(k) +
                          " outside [1, " + std::to_string(dim) + "]");
  return static_cast<std::size_t>(k - 1);
}

// [<coeff>*]e<k>; coeff := integer | integer/integer.
void parse_term(const std::string& term, const FieldDescriptor& field, std::size_t dim,
                std::size_t line, bool negate, Vector& into) {
  std::string coeff_part, basis_part = term;
  if (auto star = term.find('*'); star != std::string::npos) {
    coeff_part = strip(term.substr(0, star));
    basis_part = strip(term.substr(star + 1));
  }
  Scalar c = Scalar::one(field);
  if (!coeff_part.empty()) {
    if (auto slash = coeff_part.find('/'); slash != std::string::npos) {
      long num = parse_long(coeff_part.substr(0, slash), line, "a numerator");
      long den = parse_long(coeff_part.substr(slash + 1), line, "a denominator");
      if (den == 0) throw SyntaxError(line, "zero denominator in '" + coeff_part + "'");
      c = Scalar::from_fraction(field, num, den);
    } else {
      c = Scalar::from_int(field, parse_long(coeff_part, line, "a coefficient"));
    }
  }
  if (negate) c = -c;
  const std::size_t k = parse_basis_ref(basis_part, dim, line);
  into[k] += c;
}

// <term> { (+|-) <term> }, tokens already split on whitespace.
Vector parse_rhs(const std::vector<std::string>& toks, std::size_t from,
                 const FieldDescriptor& field, std::size_t dim, std::size_t line) {
  Vector v = zero_vector(field, dim);
  bool negate = false, expect_term = true;
  for (std::size_t t = from; t < toks.size(); ++t) {
    const std::string& tok = toks[t];
    if (expect_term) {
      if (tok == "0" && toks.size() == from + 1) return v;  // explicit zero
      parse_term(tok, field, dim, line, negate, v);
      expect_term = false;
    } else if (tok == "+" || tok == "-") {
      negate = tok == "-";
      expect_term = true;
    } else {
      throw SyntaxError(line, "expected '+' or '-', got '" + tok + "'");
    }
  }
  if (expect_term) throw SyntaxError(line, "bracket right-hand side ends mid-expression");
  return v;
}

}  // namespace

const AlgebraBlock& AlgebraFile::find(const std::string& name) const {
  for (const auto& b : blocks)
    if (b.name == name) return b;
  throw InputError("no algebra named '" + name + "' in the input file");
}

AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile file;
  std::set<std::string> names;

  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;

  std::optional<AlgebraBlock> current;
  bool have_field = false, have_dim = false;
  std::set<std::pair<int, int>> seen_pairs;

  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string s = strip(raw);
    if (s.empty()) continue;
    const auto toks = split_ws(s);
    const std::string& head = toks[0];

    if (head == "algebra") {
      if (current) throw SyntaxError(line, "nested 'algebra' block");
      if (toks.size() != 2 || !is_ident(toks[1]))
        throw SyntaxError(line, "expected 'algebra <ident>'");
      if (!names.insert(toks[1]).second) throw DuplicateName(toks[1]);
      current.emplace();
      current->name = toks[1];
      have_field = have_dim = false;
      seen_pairs.clear();
      continue;
    }
    if (!current) throw SyntaxError(line, "'" + head + "' outside an algebra block");

    if (head == "field") {
      if (have_field) throw SyntaxError(line, "duplicate 'field' line");
      if (toks.size() == 2 && toks[1] == "Q") {
        current->field = FieldDescriptor::rationals();
      } else if (toks.size() == 3 && toks[1] == "GF") {
        current->field = FieldDescriptor::prime_field(parse_long(toks[2], line, "a prime"));
      } else {
        throw SyntaxError(line, "expected 'field Q' or 'field GF <odd-prime>'");
      }
      have_field = true;
      continue;
    }
    if (head == "dim") {
      if (have_dim) throw SyntaxError(line, "duplicate 'dim' line");
      if (toks.size() != 2) throw SyntaxError(line, "expected 'dim <n>'");
      long n = parse_long(toks[1], line, "a dimension");
      if (n < 0) throw SyntaxError(line, "dimension must be nonnegative");
      current->dim = static_cast<std::size_t>(n);
      have_dim = true;
      continue;
    }
    if (head == "bracket") {
      if (!have_field || !have_dim)
        throw SyntaxError(line, "'bracket' before 'field' and 'dim'");
      if (toks.size() < 5 || toks[3] != "=")
        throw SyntaxError(line, "expected 'bracket e<i> e<j> = <terms>'");
      const std::size_t i = parse_basis_ref(toks[1], current->dim, line);
      const std::size_t j = parse_basis_ref(toks[2], current->dim, line);
      const auto pair = std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + 1));
      if (!seen_pairs.insert(pair).second) throw DuplicateBracket(pair.first, pair.second);
      Vector v = parse_rhs(toks, 4, current->field, current->dim, line);
      current->entries.push_back({pair.first, pair.second, std::move(v)});
      continue;
    }
    if (head == "end") {
      if (toks.size() != 1) throw SyntaxError(line, "'end' takes no arguments");
      if (!have_field || !have_dim) throw SyntaxError(line, "block ends without field or dim");
      file.blocks.push_back(std::move(*current));
      current.reset();
      continue;
    }
    throw SyntaxError(line, "unrecognized directive '" + head + "'");
  }
  if (current) throw SyntaxError(line, "unterminated algebra block '" + current->name + "'");
  return file;
}

std::string serialize_algebra_file(const AlgebraFile& file) {
  std::ostringstream os;
  bool first = true;
  for (const auto& b : file.blocks) {
    if (!first) os << "\n";
    first = false;
    os << "algebra " << b.name << "\n";
    os << "  field " << (b.field.is_rational() ? "Q" : "GF " + std::to_string(b.field.characteristic))
       << "\n";
    os << "  dim " << b.dim << "\n";
    for (const auto& e : b.entries) {
      os << "  bracket e" << e.i << " e" << e.j << " =";
      bool any = false;
      for (std::size_t k = 0; k < e.value.size(); ++k) {
        const Scalar& c = e.value[k];
        if (c.is_zero()) continue;
        std::string cs = c.value_str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (any) {
          os << (neg ? " - " : " + ");
          if (cs != "1") os << cs << "*";
        } else if (neg) {
          os << " -" << cs << "*";  // "-1*e3": a bare "-e3" would not reparse
        } else if (cs != "1") {
          os << " " << cs << "*";
        } else {
          os << " ";
        }
        os << "e" << k + 1;
        any = true;
      }
      if (!any) os << " 0";
      os << "\n";
    }
    os << "end\n";
  }
  return os.str();
}

}  // namespace leibniz
