#include "nrt/errors.hpp"

namespace nrt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::SubgroupIsNormal: return "SubgroupIsNormal";
    case ErrorKind::SubgroupNotNormal: return "SubgroupNotNormal";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::InvalidLoopTable: return "InvalidLoopTable";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace nrt
