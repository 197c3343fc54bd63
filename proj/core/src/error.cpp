#include "qposet/error.hpp"

namespace qposet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooManyElements: return "TooManyElements";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::AntitoneViolation: return "AntitoneViolation";
    case ErrorKind::InvolutionViolation: return "InvolutionViolation";
    case ErrorKind::SectionViolation: return "SectionViolation";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotJoinSemilattice: return "NotJoinSemilattice";
    case ErrorKind::JoinMissing: return "JoinMissing";
    case ErrorKind::UndefinedTerm: return "UndefinedTerm";
    case ErrorKind::CompatibilityFailed: return "CompatibilityFailed";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::NoLeastElement: return "NoLeastElement";
    case ErrorKind::BlockTooSmall: return "BlockTooSmall";
    case ErrorKind::NotKleene: return "NotKleene";
    case ErrorKind::BadIntersection: return "BadIntersection";
    case ErrorKind::NotAtomCoatom: return "NotAtomCoatom";
    case ErrorKind::K3Intersection: return "K3Intersection";
    case ErrorKind::InvalidGlue: return "InvalidGlue";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::InvolutionClash: return "InvolutionClash";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<Element> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::Parse,
            "line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : std::string()) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace qposet
