#ifndef KDEF_ERRORS_HPP
#define KDEF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kdef {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : std::domain_error(what) {}
};

struct PoleAtPoint : std::domain_error {
  explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

struct ContextMismatch : std::invalid_argument {
  explicit ContextMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

struct WeightMismatch : std::invalid_argument {
  explicit WeightMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NonHomogeneous : std::invalid_argument {
  explicit NonHomogeneous(const std::string& what)
      : std::invalid_argument(what) {}
};

struct UnknownName : std::invalid_argument {
  explicit UnknownName(const std::string& what) : std::invalid_argument(what) {}
};

struct NotProportional : std::runtime_error {
  explicit NotProportional(const std::string& what)
      : std::runtime_error(what) {}
};

struct NotTranslationInvariant : std::invalid_argument {
  explicit NotTranslationInvariant(const std::string& what)
      : std::invalid_argument(what) {}
};

struct IdealViolation : std::invalid_argument {
  explicit IdealViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

struct BasisDegeneracy : std::runtime_error {
  explicit BasisDegeneracy(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace kdef

#endif  // KDEF_ERRORS_HPP
