#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modtriple {

enum class ErrorKind {
  DegenerateInput,
  NotEffective,
  NotFiniteOverSource,
  NotInteriorPreserving,
  TypeMismatch,
  NotDisjoint,
  NotExcellent,
  NotMinClass,
  NotManClass,
  NotAdmissible,
  ParseError,
  SemanticError,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace modtriple
