#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for every error raised by the kernel.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InputError : Error {
  using Error::Error;
};

struct MixedFields : InputError {
  MixedFields() : InputError("scalars belong to different fields") {}
};

struct FieldCharTwo : InputError {
  FieldCharTwo() : InputError("fields of characteristic two are not supported") {}
};

struct NotPrime : InputError {
  explicit NotPrime(long p) : InputError("characteristic " + std::to_string(p) + " is not prime") {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct EmptyAmbient : InputError {
  EmptyAmbient() : InputError("rows of length zero have no ambient space") {}
};

struct AmbientMismatch : InputError {
  AmbientMismatch() : InputError("operands live in different ambient spaces") {}
};

struct FieldMismatch : InputError {
  FieldMismatch() : InputError("operands are defined over different fields") {}
};

struct IndexOutOfRange : InputError {
  explicit IndexOutOfRange(const std::string& what) : InputError(what) {}
};

struct DuplicateBracket : InputError {
  DuplicateBracket(int i, int j)
      : InputError("duplicate bracket entry for (e" + std::to_string(i) + ", e" + std::to_string(j) + ")") {}
};

struct NotAnIdeal : InputError {
  explicit NotAnIdeal(const std::string& what = "subspace is not a two-sided ideal") : InputError(what) {}
};

struct NotDescending : InputError {
  explicit NotDescending(std::size_t k)
      : InputError("chain is not descending at index " + std::to_string(k)), index(k) {}
  std::size_t index;
};

struct NoConvention : InputError {
  NoConvention() : InputError("algebra satisfies neither Leibniz identity; operation undefined") {}
};

struct NotFiniteField : InputError {
  NotFiniteField() : InputError("ideal enumeration requires a finite prime field") {}
};

struct EnumerationTooLarge : Error {
  EnumerationTooLarge(unsigned long long work, unsigned long long guard)
      : Error("enumeration work " + std::to_string(work) + " exceeds guard " + std::to_string(guard)) {}
};

struct NotProper : InputError {
  NotProper() : InputError("the whole algebra is not a proper ideal") {}
};

struct SyntaxError : InputError {
  SyntaxError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct DuplicateName : InputError {
  explicit DuplicateName(const std::string& name) : InputError("duplicate algebra name '" + name + "'") {}
};

struct UnknownFamily : InputError {
  explicit UnknownFamily(const std::string& name) : InputError("unknown lazy family '" + name + "'") {}
};

struct UnknownRule : InputError {
  explicit UnknownRule(const std::string& name) : InputError("unknown chain rule '" + name + "'") {}
};

struct BadDepth : InputError {
  explicit BadDepth(const std::string& what) : InputError(what) {}
};

struct BadParams : InputError {
  explicit BadParams(const std::string& what) : InputError(what) {}
};

}  // namespace leibniz

#endif
