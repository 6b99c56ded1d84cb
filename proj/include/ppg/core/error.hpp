#pragma once

#include <stdexcept>
#include <string>

namespace ppg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid shapes disagree.
struct DimensionError : Error {
  using Error::Error;
};

// Action start outside the reachable region, or no positive push length exists.
struct InfeasibleActionError : Error {
  using Error::Error;
};

// Too few / coincident points for a rigid fit.
struct DegenerateInputError : Error {
  using Error::Error;
};

// Sample has no valid cell to compute a loss over.
struct DegenerateSampleError : Error {
  using Error::Error;
};

// Metric is undefined on the given input (e.g. no positive labels).
struct UndefinedMetricError : Error {
  using Error::Error;
};

// Not enough records for the requested split or training run.
struct InsufficientDataError : Error {
  using Error::Error;
};

// Model / sample channel layout disagreement.
struct ConfigError : Error {
  using Error::Error;
};

// Dataset or checkpoint file I/O failure.
struct StorageError : Error {
  using Error::Error;
};

// CEM found no feasible candidate in any iteration.
struct PlanningFailureError : Error {
  using Error::Error;
};

// Targeted revealing asked for an empty target region.
struct DegenerateTargetError : Error {
  using Error::Error;
};

}  // namespace ppg
