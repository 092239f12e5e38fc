#ifndef NRT_ERRORS_HPP_
#define NRT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nrt {

enum class ErrorKind {
  NoIdentityAtZero,
  NotLatinSquare,
  NotAssociative,
  MissingInverse,
  NotAPermutation,
  ClosureTooLarge,
  UnknownFamily,
  ParameterOutOfRange,
  GroupTooLarge,
  EnumerationTooLarge,
  SubgroupIsNormal,
  SubgroupNotNormal,
  NotASubgroup,
  InvalidLoopTable,
  BadIndex,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nrt

#endif  // NRT_ERRORS_HPP_
