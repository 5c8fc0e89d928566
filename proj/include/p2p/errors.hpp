#pragma once

#include <stdexcept>
#include <string>

namespace p2p {

// Base class for all library errors. Subclasses map onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments, invalid configuration, contract violations.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Numerically degenerate input (singular matrix, collinear points, ...).
class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

// Robust fitting found no acceptable consensus set.
class NoConsensus : public Error {
 public:
  explicit NoConsensus(const std::string& msg) : Error(msg) {}
};

// Alignment starved before a homography could be fit. `stage` names the
// stage that ran dry ("matching" or "ransac").
class InsufficientMatches : public Error {
 public:
  InsufficientMatches(const std::string& stage, const std::string& msg)
      : Error("insufficient matches at stage '" + stage + "': " + msg),
        stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// File system / serialization failures.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Checkpoint exists but does not match the running model/spec.
class IncompatibleCheckpoint : public Error {
 public:
  explicit IncompatibleCheckpoint(const std::string& msg) : Error(msg) {}
};

}  // namespace p2p
