#pragma once

// Difference distribution table and differential uniformity.

#include <cstdint>
#include <map>
#include <vector>

#include "diffu/funcspace.hpp"

namespace diffu {

enum class DeltaMode { kExhaustive, kMonomialFast, kSampled };

const char* mode_name(DeltaMode mode);

/// counts[beta] = #{x : f(x + alpha) + f(x) = beta}.
struct DdtRow {
  Elem alpha = 0;
  std::vector<std::uint32_t> counts;

  std::uint32_t max() const;
  /// Smallest beta whose count equals max().
  Elem argmax() const;
};

struct DdtReport {
  /// Exact delta(f) in exhaustive and monomial-fast modes; a lower bound in sampled mode.
  std::uint32_t delta = 0;
  Elem witness_alpha = 0;
  Elem witness_beta = 0;
  /// count value -> number of (alpha, beta) cells with that count, over the rows examined.
  std::map<std::uint32_t, std::uint64_t> spectrum;
  DeltaMode mode = DeltaMode::kExhaustive;
  std::uint64_t rows_examined = 0;

  bool is_exact() const { return mode != DeltaMode::kSampled; }
};

/// Scans DDT rows of a fixed value table, reusing one histogram between rows.
class RowScanner {
 public:
  struct Summary {
    std::uint32_t max = 0;
    Elem beta = 0;  // smallest beta attaining max
    std::map<std::uint32_t, std::uint64_t> spectrum;
  };

  explicit RowScanner(std::span<const Elem> table);

  Summary scan(Elem alpha);
  DdtRow row(Elem alpha);

 private:
  void fill(Elem alpha);

  std::span<const Elem> table_;
  std::vector<Elem> diff_;
  std::vector<std::uint32_t> counts_;
  std::vector<Elem> touched_;
};

DdtRow ddt_row(const PolyFunc& f, Elem alpha);

inline constexpr unsigned kMaxExhaustiveDegree = 16;

/// Exact delta over every nonzero alpha. Throws ResourceLimit for m > 16.
DdtReport delta_exhaustive(const PolyFunc& f);
DdtReport delta_exhaustive(const Field& field, std::span<const Elem> table);

/// Exact delta(x^d) from the alpha = 1 row. Requires 3 <= d <= q-1.
DdtReport delta_monomial(std::uint64_t d, const Field& field);

struct SampleOptions {
  std::uint64_t alpha_budget = 1000;
  std::uint64_t seed = 0;
  /// Stop early once a row reaches this count (0 = examine the whole budget).
  std::uint32_t stop_at = 0;
};

/// Lower bound on delta from pseudo-randomly chosen distinct nonzero alphas.
/// The alpha order is a partial Fisher-Yates shuffle of 1..q-1 driven by
/// SplitMix64(seed): at step k, swap slot k with slot k + below(q-1-k).
DdtReport delta_sampled(const PolyFunc& f, const SampleOptions& options);

/// The alphas delta_sampled visits, in order, for a given field size and seed.
std::vector<Elem> sample_alphas(std::uint32_t q, std::uint64_t budget, std::uint64_t seed);

inline constexpr unsigned kMaxDdtDumpDegree = 8;

/// Full table, rows alpha = 0..q-1. Throws ResourceLimit for m > 8.
std::vector<std::vector<std::uint32_t>> full_ddt(const PolyFunc& f);

}  // namespace diffu
