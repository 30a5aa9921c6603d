#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "softaura/error.hpp"
#include "softaura/operators.hpp"

namespace softaura {

/// Non-negative exact fraction kept in lowest terms.
class Rational {
 public:
  Rational(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) throw Error(ErrorKind::PreconditionUnmet, "zero denominator");
    const auto g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
  }

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Decimal rendering at 6 significant digits: 1/4 -> "0.25".
  std::string decimal() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value());
    return buf;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num_) * b.den_ < static_cast<unsigned __int128>(b.num_) * a.den_;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

inline SoftSet lower_approximation(const SoftAuraSpace& space, const SoftSet& g) { return aura_interior(space, g); }
inline SoftSet upper_approximation(const SoftAuraSpace& space, const SoftSet& g) { return aura_closure(space, g); }

inline SoftSet boundary(const SoftAuraSpace& space, const SoftSet& g) {
  return soft_difference(upper_approximation(space, g), lower_approximation(space, g));
}

/// ρ = Σ|lower(e)| / Σ|upper(e)|. The ratio is undefined when the upper
/// approximation is null; the value 1 is then used and flagged.
struct Accuracy {
  std::size_t lower_sum = 0;
  std::size_t upper_sum = 0;
  Rational value{1, 1};
  bool convention_applied = false;

  /// Unreduced "2/8" form.
  std::string fraction() const { return std::to_string(lower_sum) + "/" + std::to_string(upper_sum); }
};

inline Accuracy make_accuracy(std::size_t lower_sum, std::size_t upper_sum) {
  Accuracy a;
  a.lower_sum = lower_sum;
  a.upper_sum = upper_sum;
  if (upper_sum == 0) {
    a.convention_applied = true;
  } else {
    a.value = Rational(lower_sum, upper_sum);
  }
  return a;
}

inline Accuracy accuracy(const SoftAuraSpace& space, const SoftSet& g) {
  return make_accuracy(lower_approximation(space, g).cardinality(), upper_approximation(space, g).cardinality());
}

struct ApproximationReport {
  SoftSet target;
  SoftSet lower;
  SoftSet upper;
  SoftSet boundary;
  Accuracy accuracy;
  /// Diagnostic |lower(e)|/|upper(e)| per parameter; same convention when upper(e) = ∅.
  std::vector<Accuracy> per_parameter;
};

inline ApproximationReport approximate(const SoftAuraSpace& space, const SoftSet& g) {
  auto lower = lower_approximation(space, g);
  auto upper = upper_approximation(space, g);
  auto bnd = soft_difference(upper, lower);
  std::vector<Accuracy> per;
  for (std::size_t e = 0; e < g.slices().size(); ++e) per.push_back(make_accuracy(popcount(lower[e]), popcount(upper[e])));
  auto acc = make_accuracy(lower.cardinality(), upper.cardinality());
  return {g, std::move(lower), std::move(upper), std::move(bnd), acc, std::move(per)};
}

/// A partition of the universe into equivalence classes.
class PawlakPartition {
 public:
  PawlakPartition(ContextPtr ctx, std::vector<PointMask> blocks) : ctx_(std::move(ctx)), blocks_(std::move(blocks)) {
    PointMask seen = 0;
    for (auto b : blocks_) {
      if (b == 0) throw Error(ErrorKind::InvalidPartition, "empty block");
      if (b & ~ctx_->full_mask()) throw Error(ErrorKind::InvalidPartition, "block outside the universe");
      if (b & seen) throw Error(ErrorKind::InvalidPartition, "blocks overlap");
      seen |= b;
    }
    if (seen != ctx_->full_mask()) throw Error(ErrorKind::InvalidPartition, "blocks do not cover the universe");
  }

  static PawlakPartition from_names(ContextPtr ctx, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<PointMask> masks;
    for (const auto& block : blocks) {
      PointMask m = 0;
      for (const auto& p : block) {
        const auto b = bit(ctx->point_index(p));
        if (m & b) throw Error(ErrorKind::InvalidPartition, "point '" + p + "' repeated in a block");
        m |= b;
      }
      masks.push_back(m);
    }
    return PawlakPartition(std::move(ctx), std::move(masks));
  }

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<PointMask>& blocks() const noexcept { return blocks_; }

  PointMask block_of(std::size_t point) const {
    for (auto b : blocks_) {
      if (b & bit(point)) return b;
    }
    throw Error(ErrorKind::UnknownPoint, "point index " + std::to_string(point));
  }

 private:
  ContextPtr ctx_;
  std::vector<PointMask> blocks_;
};

/// scope(x)(e) = [x] for every e, over the discrete topology.
inline SoftAuraSpace pawlak_space(const PawlakPartition& partition) {
  const auto& ctx = partition.context();
  const std::size_t n = ctx->universe_size();
  std::vector<PointMask> table(n * ctx->parameter_count());
  for (std::size_t e = 0; e < ctx->parameter_count(); ++e) {
    for (std::size_t x = 0; x < n; ++x) table[e * n + x] = partition.block_of(x);
  }
  return discrete_space(ctx, table);
}

inline ScopeFunction pawlak_scope(const PawlakPartition& partition) { return pawlak_space(partition).scope(); }

struct PawlakApproximation {
  PointMask lower = 0;
  PointMask upper = 0;
};

/// Classical approximations: union of blocks inside / meeting the target.
inline PawlakApproximation pawlak_block_scan(const PawlakPartition& partition, PointMask target) {
  PawlakApproximation out;
  for (auto b : partition.blocks()) {
    if ((b & ~target) == 0) out.lower |= b;
    if (b & target) out.upper |= b;
  }
  return out;
}

/// Soft approximations of the constant soft set `target` agree with the
/// block-scan approximations at every parameter.
inline bool pawlak_equivalence_check(const PawlakPartition& partition, PointMask target) {
  const auto& ctx = partition.context();
  if (target & ~ctx->full_mask()) throw Error(ErrorKind::UnknownPoint, "target outside the universe");
  const auto space = pawlak_space(partition);
  const auto g = SoftSet::constant(ctx, target);
  const auto lower = lower_approximation(space, g);
  const auto upper = upper_approximation(space, g);
  const auto expected = pawlak_block_scan(partition, target);
  for (std::size_t e = 0; e < ctx->parameter_count(); ++e) {
    if (lower[e] != expected.lower || upper[e] != expected.upper) return false;
  }
  return true;
}

}  // namespace softaura
