#pragma once

#include <stdexcept>
#include <string>

namespace uniphy {

enum class ErrorKind {
  ParseError,
  DuplicateTaxon,
  DuplicateCharacter,
  OverlappingCells,
  EmptySet,
  UnknownTaxon,
  UnknownCharacter,
  TaxonMismatch,
  NotChordal,
  NotCliqueTree,
  NotDisplayed,
  NotProper,
  NoCandidateNode,
  MissingLabels,
  Disconnected,
  TooLarge,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace uniphy
