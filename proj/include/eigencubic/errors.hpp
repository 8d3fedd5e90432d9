#ifndef EIGENCUBIC_ERRORS_HPP
#define EIGENCUBIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eigencubic {

struct NotSquarefree : std::runtime_error {
  explicit NotSquarefree(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidRootIndex : std::runtime_error {
  explicit InvalidRootIndex(const std::string& m) : std::runtime_error(m) {}
};
struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& m) : std::runtime_error(m) {}
};
struct NotInvertible : std::runtime_error {
  explicit NotInvertible(const std::string& m) : std::runtime_error(m) {}
};
struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& m, std::size_t pos)
      : std::runtime_error(m + " at position " + std::to_string(pos)), position(pos) {}
};
struct UnknownVariable : std::runtime_error {
  explicit UnknownVariable(const std::string& m) : std::runtime_error(m) {}
};
struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct NotHomogeneous : std::runtime_error {
  explicit NotHomogeneous(const std::string& m) : std::runtime_error(m) {}
};
struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& m) : std::runtime_error(m) {}
};
struct NotACone : std::runtime_error {
  explicit NotACone(const std::string& m) : std::runtime_error(m) {}
};
struct ConditionsViolated : std::runtime_error {
  explicit ConditionsViolated(const std::string& m) : std::runtime_error(m) {}
};
struct NotZeroDimensional : std::runtime_error {
  explicit NotZeroDimensional(const std::string& m) : std::runtime_error(m) {}
};
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace eigencubic

#endif
