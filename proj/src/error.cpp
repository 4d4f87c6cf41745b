#include "hnslope/error.hpp"

namespace hnslope {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyType: return "EmptyType";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::InvalidPoset: return "InvalidPoset";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotEffectiveAtN: return "NotEffectiveAtN";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadTrivialization: return "BadTrivialization";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::IoError:
      return 2;
    case ErrorKind::PrecisionExhausted:
      return 3;
    case ErrorKind::NotAdmissible:
      return 4;
    default:
      return 1;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace hnslope
