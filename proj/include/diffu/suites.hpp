#pragma once

// Named end-to-end verification suites. `diffu verify --suite NAME` and the
// acceptance test binary both run these.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffu/funcspace.hpp"
#include "diffu/rng.hpp"

namespace diffu {

enum class CaseStatus { kPass, kFail, kInconclusive };

const char* status_name(CaseStatus s);

struct CaseResult {
  std::string name;
  CaseStatus status = CaseStatus::kPass;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::string description;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t count(CaseStatus s) const;
};

struct SuiteOptions {
  /// Restricts suites that sweep several field degrees to this one.
  std::optional<unsigned> m;
  std::uint64_t seed = 1;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

std::vector<SuiteInfo> list_suites();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

/// A random function in normal form with every exponent <= max_degree.
NormalizedPolyFunc random_normalized(const Field& field, std::uint32_t max_degree, SplitMix64& rng);

/// A random normal-form function whose leading exponent is odd and <= max_leading.
NormalizedPolyFunc random_odd_leading(const Field& field, std::uint32_t max_leading, SplitMix64& rng);

/// A random nonzero field element.
Elem random_nonzero(const Field& field, SplitMix64& rng);

}  // namespace diffu
