#pragma once

#include <stdexcept>
#include <string>

namespace ratt {

// Robot and target (or two linearization points) closer than the range guard.
struct CoincidentPose : std::runtime_error {
  explicit CoincidentPose(const std::string& what) : std::runtime_error(what) {}
};

struct SingularPrior : std::runtime_error {
  explicit SingularPrior(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive enumeration would exceed the configured evaluation cap.
struct ScaleExceeded : std::runtime_error {
  explicit ScaleExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotMonotone : std::runtime_error {
  explicit NotMonotone(const std::string& what) : std::runtime_error(what) {}
};

struct NotSubmodular : std::runtime_error {
  explicit NotSubmodular(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroSingleton : std::runtime_error {
  explicit ZeroSingleton(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigInvalid : std::runtime_error {
  explicit ConfigInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct CsvMalformed : std::runtime_error {
  explicit CsvMalformed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ratt
