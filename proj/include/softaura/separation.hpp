#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "softaura/operators.hpp"

namespace softaura {

/// A violating tuple. For T0 and T2 (x, y) is an unordered pair with x
/// declared before y; for T1 it is ordered and means y ∈ scope(x)(e). For
/// regularity `closed_slice` is C(e) of the aura-closed set that cannot be
/// separated from x.
struct SeparationWitness {
  std::string x;
  std::optional<std::string> y;
  std::optional<std::string> parameter;
  std::optional<PointMask> closed_slice;

  friend bool operator==(const SeparationWitness&, const SeparationWitness&) = default;
};

struct SeparationReport {
  bool t0 = true;
  bool t1 = true;
  bool t2 = true;
  bool regular = true;
  bool t3 = true;
  std::optional<SeparationWitness> t0_witness;
  std::optional<SeparationWitness> t1_witness;
  std::optional<SeparationWitness> t2_witness;
  std::optional<SeparationWitness> regular_witness;
};

namespace detail {

inline std::optional<SeparationWitness> find_t0_violation(const SoftAuraSpace& space) {
  const auto& ctx = space.ctx();
  const auto& scope = space.scope();
  for (std::size_t x = 0; x < ctx.universe_size(); ++x) {
    for (std::size_t y = x + 1; y < ctx.universe_size(); ++y) {
      bool separated = false;
      for (std::size_t e = 0; e < ctx.parameter_count() && !separated; ++e) {
        separated = !(scope.slice(x, e) & bit(y)) || !(scope.slice(y, e) & bit(x));
      }
      if (!separated) return SeparationWitness{ctx.points()[x], ctx.points()[y], std::nullopt, std::nullopt};
    }
  }
  return std::nullopt;
}

inline std::optional<SeparationWitness> find_t1_violation(const SoftAuraSpace& space) {
  const auto& ctx = space.ctx();
  for (std::size_t x = 0; x < ctx.universe_size(); ++x) {
    for (std::size_t y = 0; y < ctx.universe_size(); ++y) {
      if (x == y) continue;
      for (std::size_t e = 0; e < ctx.parameter_count(); ++e) {
        if (space.scope().slice(x, e) & bit(y)) {
          return SeparationWitness{ctx.points()[x], ctx.points()[y], ctx.parameters()[e], std::nullopt};
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<SeparationWitness> find_t2_violation(const SoftAuraSpace& space) {
  const auto& ctx = space.ctx();
  for (std::size_t x = 0; x < ctx.universe_size(); ++x) {
    for (std::size_t y = x + 1; y < ctx.universe_size(); ++y) {
      for (std::size_t e = 0; e < ctx.parameter_count(); ++e) {
        if (space.scope().slice(x, e) & space.scope().slice(y, e)) {
          return SeparationWitness{ctx.points()[x], ctx.points()[y], ctx.parameters()[e], std::nullopt};
        }
      }
    }
  }
  return std::nullopt;
}

// The condition at (x, e, C) only constrains e-slices, and any e-slice of an
// aura-open set extends to a whole aura-open set. Aura-closed e-slices are
// complements of the up-closed family A_e. If any separating U, V exist, the
// least ones (the up-closures of {x} and of C(e)) do too.
inline std::optional<SeparationWitness> find_regularity_violation(const SoftAuraSpace& space, std::size_t cap) {
  const auto& ctx = space.ctx();
  const PointMask full = ctx.full_mask();
  std::vector<std::vector<PointMask>> families;
  for (std::size_t e = 0; e < ctx.parameter_count(); ++e) families.push_back(per_parameter_alexandrov(space, e, cap));
  for (std::size_t x = 0; x < ctx.universe_size(); ++x) {
    for (std::size_t e = 0; e < ctx.parameter_count(); ++e) {
      const auto scopes = space.scope().column(e);
      const PointMask u = reach_slice(scopes, bit(x));
      for (PointMask open_slice : families[e]) {
        if (!(open_slice & bit(x))) continue;
        const PointMask closed = full & ~open_slice;
        if (u & reach_slice(scopes, closed)) {
          return SeparationWitness{ctx.points()[x], std::nullopt, ctx.parameters()[e], closed};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline SeparationReport separation_report(const SoftAuraSpace& space, std::size_t cap = default_cap) {
  SeparationReport r;
  r.t0_witness = detail::find_t0_violation(space);
  r.t1_witness = detail::find_t1_violation(space);
  r.t2_witness = detail::find_t2_violation(space);
  r.regular_witness = detail::find_regularity_violation(space, cap);
  r.t0 = !r.t0_witness;
  r.t1 = !r.t1_witness;
  r.t2 = !r.t2_witness;
  r.regular = !r.regular_witness;
  r.t3 = r.regular && r.t1;
  return r;
}

/// T1 decided from the scope shape alone: every slice is the singleton of its point.
inline bool t1_via_singleton_scopes(const SoftAuraSpace& space) {
  for (std::size_t x = 0; x < space.ctx().universe_size(); ++x) {
    for (std::size_t e = 0; e < space.ctx().parameter_count(); ++e) {
      if (space.scope().slice(x, e) != bit(x)) return false;
    }
  }
  return true;
}

struct SingletonClosureCheck {
  bool holds = true;
  /// The space is not T1, so the statement holds vacuously.
  bool vacuous = false;
};

/// cl_a(x_E) = x_E for every point of a T1 space.
inline SingletonClosureCheck t1_singleton_closure(const SoftAuraSpace& space) {
  if (detail::find_t1_violation(space)) return {true, true};
  for (const auto& name : space.ctx().points()) {
    const auto p = soft_point(space.context(), name);
    if (!(aura_closure(space, p) == p)) return {false, false};
  }
  return {true, false};
}

}  // namespace softaura
