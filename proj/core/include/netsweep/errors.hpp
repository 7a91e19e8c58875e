// Error hierarchy shared across the library: parse failures carry a location,
// domain failures describe violated preconditions.
#ifndef NETSWEEP_ERRORS_HPP
#define NETSWEEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netsweep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists, strategy files, config files).
struct ParseError : Error {
    using Error::Error;
};

// Violated precondition or unsatisfiable request (s < 2, empty graph, ...).
struct DomainError : Error {
    using Error::Error;
};

// A broken library invariant (e.g. a constructed strategy that fails its own
// validation); reaching this is a bug in the library, not a caller mistake.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace netsweep

#endif  // NETSWEEP_ERRORS_HPP
