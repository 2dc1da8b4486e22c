#include "nphk/error.hpp"

namespace nphk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NotCriticalAtOrigin: return "NotCriticalAtOrigin";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::NormalizationFailed: return "NormalizationFailed";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Domain:
    case ErrorKind::SingularMap:
      return 2;
    case ErrorKind::NotCriticalAtOrigin:
    case ErrorKind::NormalizationFailed:
    case ErrorKind::TruncationTooSmall:
    case ErrorKind::Unsupported:
      return 3;
    case ErrorKind::QuadratureNotConverged:
    case ErrorKind::DegenerateFit:
      return 4;
    case ErrorKind::Io:
      return 1;
  }
  return 1;
}

}  // namespace nphk
