#include "eqgamma/error.hpp"

namespace eqgamma {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::InvalidCovers: return "InvalidCovers";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::InvalidLabeling: return "InvalidLabeling";
    case ErrorCode::NotConsistent: return "NotConsistent";
    case ErrorCode::NotParityConsistent: return "NotParityConsistent";
    case ErrorCode::IdentifierClash: return "IdentifierClash";
    case ErrorCode::NotASubgroupOfAut: return "NotASubgroupOfAut";
    case ErrorCode::QuotientNotPartialOrder: return "QuotientNotPartialOrder";
    case ErrorCode::RankOutOfParityRange: return "RankOutOfParityRange";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotVirtual: return "NotVirtual";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::TruncationUnstable: return "TruncationUnstable";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::GroupDoesNotPreserve: return "GroupDoesNotPreserve";
    case ErrorCode::NotPalindromic: return "NotPalindromic";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotOneGraded: return "NotOneGraded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace eqgamma
