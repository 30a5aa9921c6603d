#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "softaura/error.hpp"
#include "softaura/soft_set.hpp"
#include "softaura/topology.hpp"

namespace softaura {

/// Assignment of a soft open set to every point, stored as a parameter-major
/// table of slices so that scope(x)(e) is a single load.
class ScopeFunction {
 public:
  const ContextPtr& context() const noexcept { return ctx_; }

  PointMask slice(std::size_t point, std::size_t parameter) const noexcept {
    return table_[parameter * points_ + point];
  }

  /// Scopes of all points at one parameter, indexed by point.
  std::span<const PointMask> column(std::size_t parameter) const noexcept {
    return std::span<const PointMask>(table_).subspan(parameter * points_, points_);
  }

  SoftSet of(std::size_t point) const {
    std::vector<PointMask> slices(ctx_->parameter_count());
    for (std::size_t e = 0; e < slices.size(); ++e) slices[e] = slice(point, e);
    return SoftSet(ctx_, std::move(slices));
  }

  friend bool operator==(const ScopeFunction& a, const ScopeFunction& b) {
    return a.table_ == b.table_ && same_context(a.ctx_, b.ctx_);
  }

 private:
  friend struct ScopeAccess;

  ScopeFunction(ContextPtr ctx, std::vector<PointMask> table)
      : ctx_(std::move(ctx)), points_(ctx_->universe_size()), table_(std::move(table)) {}

  ContextPtr ctx_;
  std::size_t points_ = 0;
  std::vector<PointMask> table_;
};

struct ScopeAccess {
  static ScopeFunction make(ContextPtr ctx, std::vector<PointMask> table) {
    return ScopeFunction(std::move(ctx), std::move(table));
  }
  static std::vector<PointMask> table(const ScopeFunction& s) {
    std::vector<PointMask> out;
    for (std::size_t e = 0; e < s.context()->parameter_count(); ++e) {
      auto col = s.column(e);
      out.insert(out.end(), col.begin(), col.end());
    }
    return out;
  }
};

enum class ScopeViolationKind { Membership, NotOpen, Unassigned };

constexpr std::string_view to_string(ScopeViolationKind k) noexcept {
  switch (k) {
    case ScopeViolationKind::Membership: return "MembershipViolation";
    case ScopeViolationKind::NotOpen: return "NotOpen";
    case ScopeViolationKind::Unassigned: return "Unassigned";
  }
  return "unknown";
}

struct ScopeViolation {
  ScopeViolationKind kind;
  std::string point;
  std::optional<std::string> parameter;  // set for Membership only

  friend bool operator==(const ScopeViolation&, const ScopeViolation&) = default;
};

inline std::string describe(const ScopeViolation& v) {
  std::string out = std::string(to_string(v.kind)) + "(" + v.point;
  if (v.parameter) out += ", " + *v.parameter;
  return out + ")";
}

using ScopeCheck = std::variant<ScopeFunction, std::vector<ScopeViolation>>;

/// Checks x ∈ scope(x)(e) for every (x, e) and that every scope image is open.
/// All violations are reported, in point order; a missing entry is Unassigned.
inline ScopeCheck validate_scope(const ContextPtr& ctx, const SoftTopology& topology,
                                 const std::vector<std::optional<SoftSet>>& assignment) {
  require_same_context(ctx, topology.context());
  if (assignment.size() != ctx->universe_size()) {
    throw Error(assignment.size() < ctx->universe_size() ? ErrorKind::MissingPoint : ErrorKind::ExtraPoint,
                "scope assignment has " + std::to_string(assignment.size()) + " entries");
  }
  const std::size_t n = ctx->universe_size();
  const std::size_t m = ctx->parameter_count();
  std::vector<ScopeViolation> violations;
  std::vector<PointMask> table(n * m, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& point = ctx->points()[x];
    if (!assignment[x]) {
      violations.push_back({ScopeViolationKind::Unassigned, point, std::nullopt});
      continue;
    }
    const SoftSet& s = *assignment[x];
    require_same_context(ctx, s.context());
    for (std::size_t e = 0; e < m; ++e) {
      if (!(s[e] & bit(x))) violations.push_back({ScopeViolationKind::Membership, point, ctx->parameters()[e]});
      table[e * n + x] = s[e];
    }
    if (!topology.contains(s)) violations.push_back({ScopeViolationKind::NotOpen, point, std::nullopt});
  }
  if (!violations.empty()) return violations;
  return ScopeAccess::make(ctx, std::move(table));
}

inline ScopeCheck validate_scope(const ContextPtr& ctx, const SoftTopology& topology,
                                 const std::map<std::string, SoftSet>& assignment) {
  std::vector<std::optional<SoftSet>> by_index(ctx->universe_size());
  for (const auto& [name, set] : assignment) by_index[ctx->point_index(name)] = set;
  return validate_scope(ctx, topology, by_index);
}

/// The quadruple (X, topology, scope, E). The topology is shared between
/// spaces built over it.
class SoftAuraSpace {
 public:
  SoftAuraSpace(std::shared_ptr<const SoftTopology> topology, ScopeFunction scope)
      : topology_(std::move(topology)), scope_(std::move(scope)) {
    require_same_context(topology_->context(), scope_.context());
  }

  const ContextPtr& context() const noexcept { return scope_.context(); }
  const Context& ctx() const noexcept { return *scope_.context(); }
  const SoftTopology& topology() const noexcept { return *topology_; }
  const std::shared_ptr<const SoftTopology>& topology_ptr() const noexcept { return topology_; }
  const ScopeFunction& scope() const noexcept { return scope_; }

  friend bool operator==(const SoftAuraSpace& a, const SoftAuraSpace& b) {
    return a.scope_ == b.scope_ && (a.topology_ == b.topology_ || *a.topology_ == *b.topology_);
  }

 private:
  std::shared_ptr<const SoftTopology> topology_;
  ScopeFunction scope_;
};

using SpaceCheck = std::variant<SoftAuraSpace, std::vector<ScopeViolation>>;

template <class Assignment>
SpaceCheck make_space(std::shared_ptr<const SoftTopology> topology, const Assignment& assignment) {
  auto check = validate_scope(topology->context(), *topology, assignment);
  if (auto* v = std::get_if<std::vector<ScopeViolation>>(&check)) return std::move(*v);
  return SoftAuraSpace(std::move(topology), std::get<ScopeFunction>(std::move(check)));
}

/// Like make_space but throws on the first violation.
template <class Assignment>
SoftAuraSpace make_space_or_throw(std::shared_ptr<const SoftTopology> topology, const Assignment& assignment) {
  auto check = make_space(std::move(topology), assignment);
  if (auto* v = std::get_if<std::vector<ScopeViolation>>(&check)) {
    throw Error(ErrorKind::PreconditionUnmet, "invalid scope: " + describe(v->front()));
  }
  return std::get<SoftAuraSpace>(std::move(check));
}

/// Scope x ↦ X̃ for every x; valid in every topology.
inline ScopeFunction trivial_scope(const ContextPtr& ctx) {
  return ScopeAccess::make(ctx, std::vector<PointMask>(ctx->universe_size() * ctx->parameter_count(),
                                                       ctx->full_mask()));
}

/// Builds a space over the discrete topology from a parameter-major slice
/// table, checking the membership axiom.
inline SoftAuraSpace discrete_space(const ContextPtr& ctx, const std::vector<PointMask>& table) {
  const std::size_t n = ctx->universe_size();
  std::vector<std::optional<SoftSet>> assignment(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<PointMask> slices(ctx->parameter_count());
    for (std::size_t e = 0; e < slices.size(); ++e) slices[e] = table.at(e * n + x);
    assignment[x] = SoftSet(ctx, std::move(slices));
  }
  return make_space_or_throw(std::make_shared<const SoftTopology>(SoftTopology::discrete(ctx)), assignment);
}

}  // namespace softaura
