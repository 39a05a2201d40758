#include "gasket/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <unordered_map>

namespace gasket {

const char* to_string(TripleKind k) {
  switch (k) {
    case TripleKind::edge:
      return "edge";
    case TripleKind::cell:
      return "cell";
    default:
      return "sum";
  }
}

bool triple_kind_from_string(const std::string& text, TripleKind& out) {
  if (text == "edge") {
    out = TripleKind::edge;
    return true;
  }
  if (text == "cell") {
    out = TripleKind::cell;
    return true;
  }
  if (text == "sum" || text == "direct-sum") {
    out = TripleKind::direct_sum;
    return true;
  }
  return false;
}

LengthSequence::LengthSequence(Geometry g, TripleKind k, int max_level,
                               int refine)
    : geometry_(g), kind_(k), max_level_(max_level), refine_(refine) {
  if (max_level < 0) throw config_error("max level must be nonnegative");
  if (refine < 0 || refine > kMaxRefine)
    throw config_error("refinement depth outside [0, 22]");
  cache_.resize(static_cast<std::size_t>(max_level) + 1);
}

LengthSequence LengthSequence::edges(Geometry g, int max_level, int refine) {
  return LengthSequence(g, TripleKind::edge, max_level, refine);
}

LengthSequence LengthSequence::cells(Geometry g, int max_level, int refine) {
  return LengthSequence(g, TripleKind::cell, max_level, refine);
}

LengthSequence LengthSequence::direct_sum(Geometry g, int max_level,
                                          int refine) {
  return LengthSequence(g, TripleKind::direct_sum, max_level, refine);
}

LengthSequence LengthSequence::from_lengths(
    std::vector<std::vector<double>> lengths) {
  if (lengths.empty()) throw config_error("empty length stream");
  LengthSequence seq(Geometry::euclidean, TripleKind::edge,
                     static_cast<int>(lengths.size()) - 1, 0);
  seq.custom_ = std::move(lengths);
  return seq;
}

const std::vector<LengthItem>& LengthSequence::level(int m) const {
  if (m < 0 || m > max_level_)
    throw config_error("level outside the sequence truncation");
  auto& slot = cache_[static_cast<std::size_t>(m)];
  if (slot) return *slot;

  if (!custom_.empty()) {
    auto batch = std::make_shared<std::vector<LengthItem>>();
    for (double alpha : custom_[static_cast<std::size_t>(m)]) {
      if (!(alpha > 0.0)) throw config_error("lengths must be positive");
      batch->push_back({Word{}, 0, alpha});
    }
    slot = std::move(batch);
    return *slot;
  }

  const double cells = std::pow(3.0, m);
  const double items =
      kind_ == TripleKind::direct_sum ? 4.0 * cells : 3.0 * cells;
  if (items > static_cast<double>(item_budget))
    throw budget_error("length stream level over budget");

  auto batch = std::make_shared<std::vector<LengthItem>>();
  const auto side_lengths = level_edge_lengths(geometry_, m, refine_);
  // direct sum = the edge stream followed by the cell stream, per level
  if (kind_ == TripleKind::edge || kind_ == TripleKind::direct_sum) {
    std::size_t idx = 0;
    for_each_word(m, [&](const Word& w) {
      batch->push_back({w, 0, (*side_lengths)[idx]});
      batch->push_back({w, 1, (*side_lengths)[idx + 1]});
      batch->push_back({w, 2, (*side_lengths)[idx + 2]});
      idx += 3;
    });
  }
  if (kind_ == TripleKind::cell || kind_ == TripleKind::direct_sum) {
    std::size_t idx = 0;
    for_each_word(m, [&](const Word& w) {
      const double l = (*side_lengths)[idx];
      const double r = (*side_lengths)[idx + 1];
      const double b = (*side_lengths)[idx + 2];
      idx += 3;
      batch->push_back({w, -1, (l + r) + b});
    });
  }
  slot = std::move(batch);
  return *slot;
}

double LengthSequence::max_alpha() const {
  double m = 0.0;
  for (int lvl = 0; lvl <= max_level_; ++lvl) {
    for (const auto& item : level(lvl)) m = std::max(m, item.alpha);
  }
  return m;
}

DiracSpectrum eigenvalues(const LengthSequence& seq, double cutoff,
                          std::size_t budget) {
  if (!(cutoff > 0.0)) throw config_error("cutoff must be positive");
  DiracSpectrum spec;
  spec.cutoff = cutoff;
  for (int m = 0; m <= seq.max_level(); ++m) {
    const auto& batch = seq.level(m);
    for (std::uint32_t i = 0; i < batch.size(); ++i) {
      const double scale = std::numbers::pi / (2.0 * batch[i].alpha);
      for (std::int64_t k = 0;; ++k) {
        const double lambda = static_cast<double>(2 * k + 1) * scale;
        if (lambda > cutoff) break;
        if (spec.values.size() + 2 > budget)
          throw budget_error("spectrum materialization over budget");
        spec.values.push_back({m, i, k, lambda});
        spec.values.push_back({m, i, -k - 1, -lambda});
      }
    }
  }
  return spec;
}

std::size_t counting_function(const LengthSequence& seq, double cutoff) {
  if (!(cutoff >= 0.0)) throw config_error("cutoff must be nonnegative");
  std::size_t count = 0;
  for (int m = 0; m <= seq.max_level(); ++m) {
    for (const auto& item : seq.level(m)) {
      // Odd integers o with |o| <= 2Λα/π.
      const double x = 2.0 * cutoff * item.alpha / std::numbers::pi;
      const double positives = std::floor((x + 1.0) / 2.0);
      if (positives > 0.0) count += 2 * static_cast<std::size_t>(positives);
    }
  }
  return count;
}

ZetaPartial zeta_partial(const LengthSequence& seq, double p, double cutoff) {
  if (!(p > 0.0)) throw config_error("exponent must be positive");
  ZetaPartial out;
  out.p = p;
  out.cutoff = cutoff;
  for (int m = 0; m <= seq.max_level(); ++m) {
    for (const auto& item : seq.level(m)) {
      const double scale = std::numbers::pi / (2.0 * item.alpha);
      for (std::int64_t k = 0;; ++k) {
        const double lambda = static_cast<double>(2 * k + 1) * scale;
        if (lambda > cutoff) break;
        out.value += 2.0 * std::pow(lambda, -p);
        out.terms += 2;
      }
    }
  }
  return out;
}

namespace {

// Lengths grouped by value so that self-similar levels cost O(1) per
// partition-sum evaluation.
struct GroupedLevel {
  std::vector<std::pair<double, double>> groups;  // (alpha, count)

  double sum(double p) const {
    double s = 0.0;
    for (const auto& [alpha, count] : groups) s += count * std::pow(alpha, p);
    return s;
  }
};

GroupedLevel group_lengths(const std::vector<double>& alphas) {
  std::unordered_map<double, double> counts;
  for (double a : alphas) {
    if (!(a > 0.0)) throw config_error("lengths must be positive");
    counts[a] += 1.0;
  }
  GroupedLevel g;
  g.groups.assign(counts.begin(), counts.end());
  std::sort(g.groups.begin(), g.groups.end());
  return g;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SpecDimReport spectral_dimension_from_lengths(
    const std::vector<std::vector<double>>& lengths_by_level, int level_lo) {
  if (lengths_by_level.size() < 3)
    throw config_error("need at least 3 consecutive levels");

  std::vector<GroupedLevel> grouped;
  grouped.reserve(lengths_by_level.size());
  for (const auto& batch : lengths_by_level) grouped.push_back(group_lengths(batch));

  const std::size_t pairs = grouped.size() - 1;
  const auto pair_growth = [&](std::size_t i, double p) {
    return std::log(grouped[i + 1].sum(p)) - std::log(grouped[i].sum(p));
  };
  // Average the per-level growth rates over the last half of the range; the
  // early levels carry the strongest finite-size transients.
  const std::size_t tail_start = pairs / 2;
  const auto avg_growth = [&](double p) {
    double s = 0.0;
    for (std::size_t i = tail_start; i < pairs; ++i) s += pair_growth(i, p);
    return s / static_cast<double>(pairs - tail_start);
  };

  const double lo = 1.0 + 1e-9;
  const double hi = 4.0;
  if (!(avg_growth(lo) > 0.0) || !(avg_growth(hi) < 0.0))
    throw validation_error(
        "partition-sum growth rate does not change sign on (1, 4]");

  SpecDimReport report;
  report.level_lo = level_lo;
  report.level_hi = level_lo + static_cast<int>(lengths_by_level.size()) - 1;
  report.estimate = std::max(bisect(avg_growth, lo, hi), 1.0);

  report.pair_roots.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto g = [&](double p) { return pair_growth(i, p); };
    if (g(lo) > 0.0 && g(hi) < 0.0) {
      report.pair_roots.push_back(bisect(g, lo, hi));
    } else {
      report.pair_roots.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }

  const std::size_t tail = std::min<std::size_t>(3, report.pair_roots.size());
  double mn = std::numeric_limits<double>::infinity();
  double mx = -mn;
  for (std::size_t i = report.pair_roots.size() - tail;
       i < report.pair_roots.size(); ++i) {
    mn = std::min(mn, report.pair_roots[i]);
    mx = std::max(mx, report.pair_roots[i]);
  }
  report.last3_spread = mx - mn;
  return report;
}

SpecDimReport spectral_dimension(const LengthSequence& seq, int level_lo,
                                 int level_hi) {
  if (level_lo < 0 || level_hi > seq.max_level() || level_hi - level_lo < 2)
    throw config_error("level range must hold at least 3 levels inside the sequence");
  std::vector<std::vector<double>> lengths;
  lengths.reserve(static_cast<std::size_t>(level_hi - level_lo) + 1);
  for (int m = level_lo; m <= level_hi; ++m) {
    std::vector<double> batch;
    const auto& items = seq.level(m);
    batch.reserve(items.size());
    for (const auto& item : items) batch.push_back(item.alpha);
    lengths.push_back(std::move(batch));
  }
  return spectral_dimension_from_lengths(lengths, level_lo);
}

double commutator_bound_linear(const Eigen::Vector2d& coeff, Geometry g,
                               int max_level, int refine) {
  if (max_level < 0 || max_level > 8)
    throw config_error("commutator sweep level outside [0, 8]");
  double sup = 0.0;
  for (int m = 0; m <= max_level; ++m) {
    for_each_word(m, [&](const Word& w) {
      for (Side s : {Side::l, Side::r, Side::b}) {
        const EdgeId e{w, s};
        const Polyline poly =
            edge_polyline(g, e, g == Geometry::euclidean ? 0 : refine);
        for (std::size_t i = 0; i + 1 < poly.points.size(); ++i) {
          const Eigen::Vector2d d = poly.points[i + 1] - poly.points[i];
          const double dn = d.norm();
          if (dn > 0.0) sup = std::max(sup, std::abs(coeff.dot(d)) / dn);
        }
      }
    });
  }
  return sup;
}

}  // namespace gasket
