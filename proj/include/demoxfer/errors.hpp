#pragma once

#include <stdexcept>
#include <string>

namespace demoxfer {

// Shape mismatches, invalid config values, bad file contents.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Drawing from empty buffers or pools.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Training finished without reaching a required quality gate.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace demoxfer
