#include "modtriple/error.hpp"

namespace modtriple {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::NotFiniteOverSource: return "NotFiniteOverSource";
    case ErrorKind::NotInteriorPreserving: return "NotInteriorPreserving";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotExcellent: return "NotExcellent";
    case ErrorKind::NotMinClass: return "NotMinClass";
    case ErrorKind::NotManClass: return "NotManClass";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace modtriple
