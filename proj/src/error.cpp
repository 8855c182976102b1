#include "nfrgauge/error.hpp"

namespace nfrgauge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Range: return "range";
    case ErrorKind::Argument: return "argument";
    case ErrorKind::Lookup: return "lookup";
    case ErrorKind::Completeness: return "completeness";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::Cycle: return "cycle";
    case ErrorKind::Reference: return "reference";
    case ErrorKind::Ingest: return "ingest";
    case ErrorKind::Label: return "label";
    case ErrorKind::Data: return "data";
    case ErrorKind::Run: return "run";
  }
  return "unknown";
}

}  // namespace nfrgauge
