#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logquant {

enum class ErrorKind {
  RankMismatch,
  NotFinite,
  NotSU2Character,
  SizeLimit,
  ParityInconsistent,
  NotProper,
  EmptyPiece,
  Unbounded,
  NotDelzant,
  InfiniteSupport,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace logquant
