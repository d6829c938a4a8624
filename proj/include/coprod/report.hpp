#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace coprod {

using Json = nlohmann::ordered_json;

/// One failed instance. `witness` holds every input needed to replay the
/// instance (elements in canonical text, alphabet sizes, field) plus the
/// intermediate values that exposed the failure.
struct Failure {
  std::string what;
  Json witness;
};

/// Outcome of running one checker over one or more instances.
///
/// Instances whose hypotheses do not hold are counted as not applicable and
/// never as failures.
struct CheckReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t not_applicable = 0;
  std::vector<Failure> failures{};

  bool ok() const noexcept { return failures.empty(); }

  void record_pass() { ++trials, ++passed; }
  void record_not_applicable() { ++trials, ++not_applicable; }
  void record_failure(std::string what, Json witness);
  /// Folds another report's counts and failures into this one.
  void absorb(const CheckReport& other);

  /// Lists at most `max_failures` witnesses; `failure_count` is always exact.
  Json to_json(std::size_t max_failures = static_cast<std::size_t>(-1)) const;
};

}  // namespace coprod
