#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "softaura/error.hpp"

#ifndef SOFTAURA_MAX_UNIVERSE
#define SOFTAURA_MAX_UNIVERSE 64
#endif

namespace softaura {

/// One bit per universe point, in declaration order. Universes wider than
/// the mask need a multi-word slice type; every operator below only uses
/// `&`, `|`, `~`, popcount and equality on slices.
using PointMask = std::uint64_t;

inline constexpr std::size_t max_universe = SOFTAURA_MAX_UNIVERSE;
static_assert(max_universe >= 1 && max_universe <= 64, "slices are single 64-bit words");

constexpr PointMask bit(std::size_t index) noexcept { return PointMask{1} << index; }

constexpr PointMask low_mask(std::size_t count) noexcept {
  return count >= 64 ? ~PointMask{0} : (PointMask{1} << count) - 1;
}

constexpr std::size_t popcount(PointMask mask) noexcept {
  return static_cast<std::size_t>(std::popcount(mask));
}

/// The (universe, parameter set) pair every soft set is scoped to. Identifier
/// order is the declaration order and doubles as the canonical output order.
class Context {
 public:
  Context(std::vector<std::string> points, std::vector<std::string> parameters)
      : points_(std::move(points)), parameters_(std::move(parameters)) {
    if (points_.empty()) throw Error(ErrorKind::EmptyContext, "universe is empty");
    if (parameters_.empty()) throw Error(ErrorKind::EmptyContext, "parameter set is empty");
    if (points_.size() > max_universe) {
      throw Error(ErrorKind::UniverseTooLarge, std::to_string(points_.size()) + " points, limit " +
                                                   std::to_string(max_universe));
    }
    index(points_, point_index_, "point");
    index(parameters_, parameter_index_, "parameter");
  }

  static std::shared_ptr<const Context> make(std::vector<std::string> points,
                                             std::vector<std::string> parameters) {
    return std::make_shared<const Context>(std::move(points), std::move(parameters));
  }

  std::size_t universe_size() const noexcept { return points_.size(); }
  std::size_t parameter_count() const noexcept { return parameters_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }
  PointMask full_mask() const noexcept { return low_mask(points_.size()); }

  std::optional<std::size_t> find_point(std::string_view name) const {
    auto it = point_index_.find(std::string(name));
    if (it == point_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> find_parameter(std::string_view name) const {
    auto it = parameter_index_.find(std::string(name));
    if (it == parameter_index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t point_index(std::string_view name) const {
    if (auto i = find_point(name)) return *i;
    throw Error(ErrorKind::UnknownPoint, std::string(name));
  }

  std::size_t parameter_index(std::string_view name) const {
    if (auto i = find_parameter(name)) return *i;
    throw Error(ErrorKind::UnknownParameter, std::string(name));
  }

  friend bool operator==(const Context& a, const Context& b) {
    return a.points_ == b.points_ && a.parameters_ == b.parameters_;
  }

 private:
  static void index(const std::vector<std::string>& names,
                    std::unordered_map<std::string, std::size_t>& out, const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!out.emplace(names[i], i).second) {
        throw Error(ErrorKind::DuplicateIdentifier, std::string(what) + " '" + names[i] + "'");
      }
    }
  }

  std::vector<std::string> points_;
  std::vector<std::string> parameters_;
  std::unordered_map<std::string, std::size_t> point_index_;
  std::unordered_map<std::string, std::size_t> parameter_index_;
};

using ContextPtr = std::shared_ptr<const Context>;

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw Error(ErrorKind::ContextMismatch, "operands live in different contexts");
}

/// A total map from parameters to subsets of the universe. Immutable.
class SoftSet {
 public:
  SoftSet(ContextPtr ctx, std::vector<PointMask> slices)
      : ctx_(std::move(ctx)), slices_(std::move(slices)) {
    if (slices_.size() != ctx_->parameter_count()) {
      throw Error(slices_.size() < ctx_->parameter_count() ? ErrorKind::MissingParameter
                                                           : ErrorKind::ExtraParameter,
                  "expected " + std::to_string(ctx_->parameter_count()) + " slices, got " +
                      std::to_string(slices_.size()));
    }
    const PointMask outside = ~ctx_->full_mask();
    for (std::size_t e = 0; e < slices_.size(); ++e) {
      if (slices_[e] & outside) {
        throw Error(ErrorKind::UnknownPoint, "bit " + std::to_string(std::countr_zero(slices_[e] & outside)) +
                                                 " at parameter " + ctx_->parameters()[e]);
      }
    }
  }

  static SoftSet null(ContextPtr ctx) {
    const auto n = ctx->parameter_count();
    return SoftSet(std::move(ctx), std::vector<PointMask>(n, 0));
  }

  static SoftSet absolute(ContextPtr ctx) {
    const auto n = ctx->parameter_count();
    const auto full = ctx->full_mask();
    return SoftSet(std::move(ctx), std::vector<PointMask>(n, full));
  }

  /// Same slice in every parameter.
  static SoftSet constant(ContextPtr ctx, PointMask slice) {
    const auto n = ctx->parameter_count();
    return SoftSet(std::move(ctx), std::vector<PointMask>(n, slice));
  }

  const ContextPtr& context() const noexcept { return ctx_; }
  const Context& ctx() const noexcept { return *ctx_; }
  std::span<const PointMask> slices() const noexcept { return slices_; }
  PointMask slice(std::size_t parameter) const { return slices_.at(parameter); }
  PointMask operator[](std::size_t parameter) const noexcept { return slices_[parameter]; }

  bool contains(std::size_t point, std::size_t parameter) const {
    return (slices_.at(parameter) & bit(point)) != 0;
  }

  bool is_null() const noexcept {
    return std::all_of(slices_.begin(), slices_.end(), [](PointMask m) { return m == 0; });
  }

  bool is_absolute() const noexcept {
    const auto full = ctx_->full_mask();
    return std::all_of(slices_.begin(), slices_.end(), [full](PointMask m) { return m == full; });
  }

  /// Sum of slice cardinalities.
  std::size_t cardinality() const noexcept {
    std::size_t total = 0;
    for (auto m : slices_) total += popcount(m);
    return total;
  }

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.slices_ == b.slices_ && same_context(a.ctx_, b.ctx_);
  }

  /// Canonical order: slicewise bitmask comparison, first parameter most significant.
  friend bool operator<(const SoftSet& a, const SoftSet& b) { return a.slices_ < b.slices_; }

 private:
  ContextPtr ctx_;
  std::vector<PointMask> slices_;
};

/// Slices keyed by identifier, as read from documents.
using NamedSlices = std::map<std::string, std::vector<std::string>>;

inline SoftSet make_soft_set(const ContextPtr& ctx, const NamedSlices& slices) {
  std::vector<PointMask> masks(ctx->parameter_count(), 0);
  for (const auto& [param, points] : slices) {
    auto e = ctx->find_parameter(param);
    if (!e) throw Error(ErrorKind::ExtraParameter, param);
    for (const auto& p : points) {
      auto x = ctx->find_point(p);
      if (!x) throw Error(ErrorKind::UnknownPoint, "'" + p + "' at parameter " + param);
      masks[*e] |= bit(*x);
    }
  }
  for (const auto& param : ctx->parameters()) {
    if (!slices.contains(param)) throw Error(ErrorKind::MissingParameter, param);
  }
  return SoftSet(ctx, std::move(masks));
}

/// The soft point x_E: {x} in every slice.
inline SoftSet soft_point(const ContextPtr& ctx, std::string_view point) {
  return SoftSet::constant(ctx, bit(ctx->point_index(point)));
}

namespace detail {

template <class Op>
SoftSet zip(const SoftSet& a, const SoftSet& b, Op op) {
  require_same_context(a.context(), b.context());
  std::vector<PointMask> out(a.slices().size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = op(a[e], b[e]);
  return SoftSet(a.context(), std::move(out));
}

}  // namespace detail

inline SoftSet soft_union(const SoftSet& a, const SoftSet& b) {
  return detail::zip(a, b, [](PointMask x, PointMask y) { return x | y; });
}

inline SoftSet soft_intersection(const SoftSet& a, const SoftSet& b) {
  return detail::zip(a, b, [](PointMask x, PointMask y) { return x & y; });
}

/// Slicewise a \ b.
inline SoftSet soft_difference(const SoftSet& a, const SoftSet& b) {
  return detail::zip(a, b, [](PointMask x, PointMask y) { return x & ~y; });
}

inline SoftSet complement(const SoftSet& a) {
  const auto full = a.ctx().full_mask();
  std::vector<PointMask> out(a.slices().begin(), a.slices().end());
  for (auto& m : out) m = ~m & full;
  return SoftSet(a.context(), std::move(out));
}

inline SoftSet big_union(const ContextPtr& ctx, std::span<const SoftSet> sets) {
  std::vector<PointMask> out(ctx->parameter_count(), 0);
  for (const auto& s : sets) {
    require_same_context(ctx, s.context());
    for (std::size_t e = 0; e < out.size(); ++e) out[e] |= s[e];
  }
  return SoftSet(ctx, std::move(out));
}

inline SoftSet big_intersection(const ContextPtr& ctx, std::span<const SoftSet> sets) {
  std::vector<PointMask> out(ctx->parameter_count(), ctx->full_mask());
  for (const auto& s : sets) {
    require_same_context(ctx, s.context());
    for (std::size_t e = 0; e < out.size(); ++e) out[e] &= s[e];
  }
  return SoftSet(ctx, std::move(out));
}

inline bool is_subset(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.context(), b.context());
  for (std::size_t e = 0; e < a.slices().size(); ++e) {
    if (a[e] & ~b[e]) return false;
  }
  return true;
}

/// Like operator== but rejects operands from different contexts.
inline bool equals(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.context(), b.context());
  return std::equal(a.slices().begin(), a.slices().end(), b.slices().begin());
}

inline std::vector<std::string> point_names(const Context& ctx, PointMask mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ctx.universe_size(); ++i) {
    if (mask & bit(i)) out.push_back(ctx.points()[i]);
  }
  return out;
}

inline std::string format_slice(const Context& ctx, PointMask mask) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : point_names(ctx, mask)) {
    if (!first) out += ',';
    out += name;
    first = false;
  }
  return out + "}";
}

/// e1:{..}, e2:{..}
inline std::string format_soft_set(const SoftSet& s) {
  std::string out;
  for (std::size_t e = 0; e < s.slices().size(); ++e) {
    if (e) out += ", ";
    out += s.ctx().parameters()[e] + ":" + format_slice(s.ctx(), s[e]);
  }
  return out;
}

inline NamedSlices to_named_slices(const SoftSet& s) {
  NamedSlices out;
  for (std::size_t e = 0; e < s.slices().size(); ++e) {
    out[s.ctx().parameters()[e]] = point_names(s.ctx(), s[e]);
  }
  return out;
}

}  // namespace softaura
