#pragma once

#include <stdexcept>
#include <string>

namespace exlie {

// Failure categories shared by every module.  The CLI maps kUsage to exit
// code 2; everything else raised at runtime is an internal error.
enum class ErrorKind {
  kUsage,              // malformed input from the caller
  kAlgebraMismatch,    // operands live in different algebras
  kUnsupported,        // descriptor or type outside the supported set
  kInvalidIndex,       // node / root index out of range
  kUnknownLabel,       // label not present in a registry
  kUnclassified,       // Satake subdiagram missing from the Levi lookup
  kInconsistent,       // linear system without solution, registry mismatch
  kNotApplicable,      // query undefined for this input (e.g. simply-laced)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace exlie
