#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qposet/subset.hpp"

namespace qposet {

enum class ErrorKind {
  // structural
  IndexOutOfRange,
  TooManyElements,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  NotBounded,
  AntitoneViolation,
  InvolutionViolation,
  SectionViolation,
  // precondition failures of operators and theorem checks
  NotOrthogonal,
  NotALattice,
  NotJoinSemilattice,
  JoinMissing,
  UndefinedTerm,
  CompatibilityFailed,
  PreconditionUnmet,
  NoLeastElement,
  // pasted families
  BlockTooSmall,
  NotKleene,
  BadIntersection,
  NotAtomCoatom,
  K3Intersection,
  InvalidGlue,
  OrderViolation,
  InvolutionClash,
  // search, io
  BudgetExceeded,
  UnknownName,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure. Carries the offending elements when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<Element> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<Element> witness_;
};

/// Syntax or semantic error in a structure/family file. Lines are 1-based;
/// column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qposet
