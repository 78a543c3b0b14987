#include "diffu/uniformity.hpp"

#include <algorithm>
#include <unordered_map>

#include "diffu/errors.hpp"
#include "diffu/rng.hpp"
#include "parallel.hpp"

namespace diffu {

const char* mode_name(DeltaMode mode) {
  switch (mode) {
    case DeltaMode::kExhaustive: return "exhaustive";
    case DeltaMode::kMonomialFast: return "monomial-fast";
    case DeltaMode::kSampled: return "sampled";
  }
  return "?";
}

std::uint32_t DdtRow::max() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

Elem DdtRow::argmax() const {
  return static_cast<Elem>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

RowScanner::RowScanner(std::span<const Elem> table)
    : table_(table), diff_(table.size()), counts_(table.size(), 0) {
  touched_.reserve(table.size());
}

void RowScanner::fill(Elem alpha) {
  if (alpha == 0 || alpha >= table_.size()) throw std::invalid_argument("DDT row needs a nonzero alpha in the field");
  simd::derivative(table_, alpha, diff_);
}

RowScanner::Summary RowScanner::scan(Elem alpha) {
  fill(alpha);
  touched_.clear();
  for (Elem b : diff_) {
    if (counts_[b]++ == 0) touched_.push_back(b);
  }
  Summary s;
  s.beta = ~Elem{0};
  for (Elem b : touched_) {
    const std::uint32_t c = counts_[b];
    ++s.spectrum[c];
    if (c > s.max || (c == s.max && b < s.beta)) {
      s.max = c;
      s.beta = b;
    }
    counts_[b] = 0;
  }
  if (const std::uint64_t zeros = table_.size() - touched_.size()) s.spectrum[0] += zeros;
  return s;
}

DdtRow RowScanner::row(Elem alpha) {
  fill(alpha);
  DdtRow r{alpha, std::vector<std::uint32_t>(table_.size(), 0)};
  for (Elem b : diff_) ++r.counts[b];
  return r;
}

DdtRow ddt_row(const PolyFunc& f, Elem alpha) {
  const auto table = f.value_table();
  return RowScanner(table).row(alpha);
}

namespace {

struct Partial {
  std::uint32_t delta = 0;
  Elem alpha = 0;
  Elem beta = 0;
  std::map<std::uint32_t, std::uint64_t> spectrum;
  std::uint64_t rows = 0;
  bool any = false;
};

// Rows are visited in increasing alpha, so the first row reaching a new max
// carries the lexicographically smallest witness.
void absorb(Partial& p, Elem alpha, const RowScanner::Summary& s) {
  if (!p.any || s.max > p.delta) {
    p.delta = s.max;
    p.alpha = alpha;
    p.beta = s.beta;
    p.any = true;
  }
  for (const auto& [c, n] : s.spectrum) p.spectrum[c] += n;
  ++p.rows;
}

DdtReport to_report(const Partial& p, DeltaMode mode) {
  DdtReport r;
  r.delta = p.delta;
  r.witness_alpha = p.alpha;
  r.witness_beta = p.beta;
  r.spectrum = p.spectrum;
  r.mode = mode;
  r.rows_examined = p.rows;
  return r;
}

}  // namespace

DdtReport delta_exhaustive(const Field& field, std::span<const Elem> table) {
  if (field.degree() > kMaxExhaustiveDegree) {
    throw ResourceLimit("exhaustive DDT is limited to m <= " + std::to_string(kMaxExhaustiveDegree) +
                        "; use sampled mode");
  }
  if (table.size() != field.order()) throw std::invalid_argument("value table size does not match the field");
  const std::uint32_t q = field.order();
  std::vector<Partial> partials(detail::worker_count());
  detail::parallel_chunks(
      1, q,
      [&](unsigned k, std::uint64_t lo, std::uint64_t hi) {
        RowScanner scanner(table);
        for (std::uint64_t a = lo; a < hi; ++a) absorb(partials[k], static_cast<Elem>(a), scanner.scan(static_cast<Elem>(a)));
      },
      static_cast<unsigned>(partials.size()));

  Partial total;
  for (const auto& p : partials) {
    if (!p.any) continue;
    if (!total.any || p.delta > total.delta) {
      total.delta = p.delta;
      total.alpha = p.alpha;
      total.beta = p.beta;
      total.any = true;
    }
    for (const auto& [c, n] : p.spectrum) total.spectrum[c] += n;
    total.rows += p.rows;
  }
  return to_report(total, DeltaMode::kExhaustive);
}

DdtReport delta_exhaustive(const PolyFunc& f) {
  if (f.field().degree() > kMaxExhaustiveDegree) {
    throw ResourceLimit("exhaustive DDT is limited to m <= " + std::to_string(kMaxExhaustiveDegree) +
                        "; use sampled mode");
  }
  const auto table = f.value_table();
  return delta_exhaustive(f.field(), table);
}

DdtReport delta_monomial(std::uint64_t d, const Field& field) {
  if (d < 3 || d > field.order() - 1) {
    throw std::invalid_argument("delta_monomial needs 3 <= d <= q-1, got d = " + std::to_string(d));
  }
  // x = alpha*u turns row alpha into a rescaled copy of row 1.
  const auto table = PolyFunc::monomial(field, d).value_table();
  RowScanner scanner(table);
  Partial p;
  absorb(p, 1, scanner.scan(1));
  return to_report(p, DeltaMode::kMonomialFast);
}

std::vector<Elem> sample_alphas(std::uint32_t q, std::uint64_t budget, std::uint64_t seed) {
  const std::uint64_t n = q - 1;
  budget = std::min(budget, n);
  SplitMix64 rng(seed);
  // Sparse view of the array [1, 2, ..., q-1].
  std::unordered_map<std::uint64_t, Elem> moved;
  const auto slot = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? static_cast<Elem>(i + 1) : it->second;
  };
  std::vector<Elem> out;
  out.reserve(budget);
  for (std::uint64_t k = 0; k < budget; ++k) {
    const std::uint64_t j = k + rng.below(n - k);
    const Elem vk = slot(k), vj = slot(j);
    moved[j] = vk;
    moved[k] = vj;
    out.push_back(vj);
  }
  return out;
}

DdtReport delta_sampled(const PolyFunc& f, const SampleOptions& options) {
  if (options.alpha_budget < 1) throw std::invalid_argument("alpha_budget must be at least 1");
  const auto table = f.value_table();
  RowScanner scanner(table);
  Partial p;
  for (Elem alpha : sample_alphas(f.field().order(), options.alpha_budget, options.seed)) {
    const auto s = scanner.scan(alpha);
    // Samples are unordered, so ties resolve to the smaller (alpha, beta).
    if (p.any && s.max == p.delta && (alpha < p.alpha || (alpha == p.alpha && s.beta < p.beta))) {
      p.alpha = alpha;
      p.beta = s.beta;
    }
    absorb(p, alpha, s);
    if (options.stop_at != 0 && p.delta >= options.stop_at) break;
  }
  return to_report(p, DeltaMode::kSampled);
}

std::vector<std::vector<std::uint32_t>> full_ddt(const PolyFunc& f) {
  const Field& field = f.field();
  if (field.degree() > kMaxDdtDumpDegree) {
    throw ResourceLimit("full DDT dump is limited to m <= " + std::to_string(kMaxDdtDumpDegree));
  }
  const auto table = f.value_table();
  const std::uint32_t q = field.order();
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(q);
  std::vector<std::uint32_t> zero_row(q, 0);
  zero_row[0] = q;
  rows.push_back(std::move(zero_row));
  RowScanner scanner(table);
  for (Elem a = 1; a < q; ++a) rows.push_back(scanner.row(a).counts);
  return rows;
}

}  // namespace diffu
