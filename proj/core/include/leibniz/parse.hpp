#ifndef LEIBNIZ_PARSE_HPP
#define LEIBNIZ_PARSE_HPP

#include "leibniz/algebra.hpp"

namespace leibniz {

/// One `algebra ... end` block, as written (1-based indices, source order).
struct AlgebraBlock {
  std::string name;
  FieldDescriptor field;
  std::size_t dim = 0;
  std::vector<BracketEntry> entries;

  LeibnizAlgebra build() const { return LeibnizAlgebra::build(name, dim, field, entries); }
};

struct AlgebraFile {
  std::vector<AlgebraBlock> blocks;

  const AlgebraBlock& find(const std::string& name) const;
};

/// Line-oriented grammar; '#' starts a comment anywhere on a line.
///
///   algebra <ident>
///     field Q | GF <odd-prime>
///     dim <n>
///     bracket e<i> e<j> = <term> { (+|-) <term> }   # term := [<coeff>*]e<k>
///   end
///
/// coeff := integer | integer/integer.  Unlisted pairs bracket to zero.
AlgebraFile parse_algebra_file(const std::string& text);

/// Canonical re-rendering; reparsing the result reproduces the structure.
std::string serialize_algebra_file(const AlgebraFile& file);

}  // namespace leibniz

#endif
