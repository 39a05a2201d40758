#pragma once

#include <cstdint>
#include <memory>

#include "gasket/polyline.hpp"

namespace gasket {

enum class TripleKind { edge, cell, direct_sum };

const char* to_string(TripleKind k);
bool triple_kind_from_string(const std::string& text, TripleKind& out);

/// One generating curve of the construction: a cell side (side in {l,r,b}) or
/// a whole cell boundary (side = -1), with its length.
struct LengthItem {
  Word cell;
  int side = -1;  // 0..2 = Side, -1 = cell boundary
  double alpha = 0.0;
};

/// Deterministically ordered lengths of the generating curves, one batch per
/// level, truncated at max_level. The cell-boundary length is always the sum
/// (l + r) + b of the three side lengths of the same cell, so the identity
/// alpha_w = sum of alpha_{w,s} holds exactly.
class LengthSequence {
 public:
  static LengthSequence edges(Geometry g, int max_level,
                              int refine = kDefaultRefine);
  static LengthSequence cells(Geometry g, int max_level,
                              int refine = kDefaultRefine);
  static LengthSequence direct_sum(Geometry g, int max_level,
                                   int refine = kDefaultRefine);

  // Synthetic stream from explicit per-level length batches; batch 0 is
  // level 0. Each value becomes one generating curve.
  static LengthSequence from_lengths(std::vector<std::vector<double>> lengths);

  Geometry geometry() const { return geometry_; }
  TripleKind kind() const { return kind_; }
  int max_level() const { return max_level_; }
  int refine() const { return refine_; }

  // Items of one level in enumeration order; computed on first use.
  const std::vector<LengthItem>& level(int m) const;

  // Largest alpha over all levels <= max_level.
  double max_alpha() const;

  std::size_t item_budget = kMaxStreamItems;

 private:
  LengthSequence(Geometry g, TripleKind k, int max_level, int refine);

  Geometry geometry_;
  TripleKind kind_;
  int max_level_;
  int refine_;
  std::vector<std::vector<double>> custom_;
  mutable std::vector<std::shared_ptr<std::vector<LengthItem>>> cache_;
};

struct SpectrumEntry {
  int level = 0;
  std::uint32_t item = 0;  // index into LengthSequence::level(level)
  std::int64_t k = 0;
  double lambda = 0.0;
};

/// Materialized eigenvalues (2k+1)π/(2α) with |λ| <= cutoff, tagged by source
/// curve and integer index. Symmetric about 0 as a multiset and free of zero
/// eigenvalues by construction.
struct DiracSpectrum {
  double cutoff = 0.0;
  std::vector<SpectrumEntry> values;
};

DiracSpectrum eigenvalues(const LengthSequence& seq, double cutoff,
                          std::size_t budget = kMaxSpectrumValues);

// |{λ : |λ| <= cutoff}| by the per-curve closed form (count of odd integers
// in an interval), without materializing.
std::size_t counting_function(const LengthSequence& seq, double cutoff);

struct ZetaPartial {
  double value = 0.0;
  double p = 0.0;
  double cutoff = 0.0;
  std::size_t terms = 0;
};

// Partial sum of |λ|^-p over the truncated spectrum.
ZetaPartial zeta_partial(const LengthSequence& seq, double p, double cutoff);

struct SpecDimReport {
  double estimate = 0.0;
  int level_lo = 0;
  int level_hi = 0;
  // Root of the single-pair growth rate log(S_{m+1}(p)/S_m(p)) for each
  // consecutive level pair; NaN when not bracketed on (1, 4].
  std::vector<double> pair_roots;
  double last3_spread = 0.0;
};

/// Critical exponent of the length partition sums S_m(p) = Σ α^p: bisection
/// of the averaged growth rate over the last half of the level range, clamped
/// below at 1. Throws if the averaged growth rate does not change sign on
/// (1, 4].
SpecDimReport spectral_dimension(const LengthSequence& seq, int level_lo,
                                 int level_hi);

// Same estimator on explicit per-level length batches (first batch is level
// `level_lo`); used for synthetic sequences.
SpecDimReport spectral_dimension_from_lengths(
    const std::vector<std::vector<double>>& lengths_by_level, int level_lo);

// Sup over edges of levels 0..max_level of the tangential derivative of the
// linear functional <coeff, x> along arclength-parameterized edges. Bounded
// by |a| + |b|.
double commutator_bound_linear(const Eigen::Vector2d& coeff, Geometry g,
                               int max_level, int refine);

}  // namespace gasket
