#pragma once

#include <stdexcept>
#include <string>

namespace phibound {

/// A graph contradicts one of the verified inequalities or characterizations.
/// The message always carries the graph6 string of the offending graph when known.
class TheoremFalsification : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact solver was asked to run beyond its configured size limit.
class SolverLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The greedy phi computation disagreed with the exhaustive oracle.
class OracleMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace phibound
