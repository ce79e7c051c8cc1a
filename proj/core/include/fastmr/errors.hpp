#pragma once

#include <stdexcept>
#include <string>

namespace fastmr {

// Invalid construction arguments or CLI configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Peer or wire-level failure during a collective operation.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed entry payload. A transport failure as far as the job is
// concerned: the bytes on the wire could not be understood.
class DecodeError : public TransportError {
 public:
  using TransportError::TransportError;
};

}  // namespace fastmr
