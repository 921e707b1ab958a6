#pragma once

#include <stdexcept>
#include <string>

namespace symgraph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed or out-of-contract arguments (bad image arrays, degree mismatch, unknown ids)
struct InvalidInput : Error {
  using Error::Error;
};

// a configured cap was exceeded; the message names the cap and the offending size
struct ResourceLimit : Error {
  using Error::Error;
};

// a claimed property failed recheck; the message carries the witness
struct CertificationFailure : Error {
  using Error::Error;
};

// a search that must succeed for the pipeline to continue found nothing
struct SearchFailure : Error {
  using Error::Error;
};

// a relation that must hold for every valid input failed; indicates a bug, not bad data
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace symgraph
