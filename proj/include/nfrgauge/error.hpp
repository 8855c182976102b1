#pragma once

#include <stdexcept>
#include <string>

namespace nfrgauge {

/// Category of a failed precondition or invariant. Tests and callers branch
/// on the kind; the message carries the offending names and values.
enum class ErrorKind {
  Validation,    // malformed construction parameters
  Domain,        // input outside a declared domain
  Range,         // numeric argument outside its allowed range
  Argument,      // missing, empty, or ill-typed argument
  Lookup,        // name not found
  Completeness,  // answer set does not match the survey key
  Consistency,   // values from incompatible surveys mixed together
  Coverage,      // value not covered by any grading interval
  Cycle,         // goal graph contains a cycle
  Reference,     // dangling or duplicate reference
  Ingest,        // malformed input file
  Label,         // unknown category label
  Data,          // required data source missing or mismatched
  Run,           // I/O failure at run level
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nfrgauge
