#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "softaura/error.hpp"
#include "softaura/soft_set.hpp"
#include "softaura/space.hpp"

namespace softaura {

enum class ClosureKind { Cech, Kuratowski };

constexpr std::string_view to_string(ClosureKind k) noexcept {
  return k == ClosureKind::Cech ? "cech" : "kuratowski";
}

// Slice-level kernels. A slice of cl_a/int_a at parameter e depends only on
// the e-column of the scope table and on G(e).

inline PointMask closure_slice(std::span<const PointMask> scopes, PointMask g) noexcept {
  PointMask out = 0;
  for (std::size_t x = 0; x < scopes.size(); ++x) {
    if (scopes[x] & g) out |= bit(x);
  }
  return out;
}

inline PointMask interior_slice(std::span<const PointMask> scopes, PointMask g) noexcept {
  PointMask out = 0;
  for (std::size_t x = 0; x < scopes.size(); ++x) {
    if ((scopes[x] & ~g) == 0) out |= bit(x);
  }
  return out;
}

/// cl_a(G)(e) = {x : scope(x)(e) ∩ G(e) ≠ ∅}.
inline SoftSet aura_closure(const SoftAuraSpace& space, const SoftSet& g) {
  require_same_context(space.context(), g.context());
  std::vector<PointMask> out(g.slices().size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = closure_slice(space.scope().column(e), g[e]);
  return SoftSet(space.context(), std::move(out));
}

/// int_a(G)(e) = {x : scope(x)(e) ⊆ G(e)}.
inline SoftSet aura_interior(const SoftAuraSpace& space, const SoftSet& g) {
  require_same_context(space.context(), g.context());
  std::vector<PointMask> out(g.slices().size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = interior_slice(space.scope().column(e), g[e]);
  return SoftSet(space.context(), std::move(out));
}

struct KuratowskiResult {
  SoftSet closure;
  /// Per parameter: number of cl_a applications after which the slice equals
  /// the fixpoint (at least 1; a slice that is already closed counts 1).
  std::vector<std::size_t> iterations;
};

/// Iterates cl_a per parameter until the slice stops changing. Slices grow
/// strictly until then, so each parameter needs at most |X| applications.
inline KuratowskiResult kuratowski_closure(const SoftAuraSpace& space, const SoftSet& g) {
  require_same_context(space.context(), g.context());
  std::vector<PointMask> out(g.slices().size());
  std::vector<std::size_t> iterations(out.size(), 0);
  for (std::size_t e = 0; e < out.size(); ++e) {
    const auto scopes = space.scope().column(e);
    PointMask current = g[e];
    std::size_t growth = 0;
    for (;;) {
      const PointMask next = closure_slice(scopes, current);
      if (current & ~next) {
        throw Error(ErrorKind::InternalNonMonotone, "closure shrank a slice at parameter " + space.ctx().parameters()[e]);
      }
      if (next == current) break;
      current = next;
      ++growth;
    }
    out[e] = current;
    iterations[e] = growth == 0 ? 1 : growth;
  }
  return {SoftSet(space.context(), std::move(out)), std::move(iterations)};
}

inline SoftSet closure_of_kind(const SoftAuraSpace& space, const SoftSet& g, ClosureKind kind) {
  return kind == ClosureKind::Cech ? aura_closure(space, g) : kuratowski_closure(space, g).closure;
}

inline bool is_aura_open(const SoftAuraSpace& space, const SoftSet& g) {
  return aura_interior(space, g) == g;
}

inline bool is_aura_closed(const SoftAuraSpace& space, const SoftSet& g) {
  return is_aura_open(space, complement(g));
}

/// Least up-closed superset of `start` at one parameter: the points reachable
/// from `start` by repeatedly following scopes.
inline PointMask reach_slice(std::span<const PointMask> scopes, PointMask start) noexcept {
  PointMask current = start;
  for (;;) {
    PointMask next = current;
    for (std::size_t x = 0; x < scopes.size(); ++x) {
      if (current & bit(x)) next |= scopes[x];
    }
    if (next == current) return current;
    current = next;
  }
}

/// All S ⊆ X with scope(x)(e) ⊆ S for every x ∈ S, ascending by bitmask.
/// These are exactly the e-slices of aura-open sets.
inline std::vector<PointMask> per_parameter_alexandrov(const SoftAuraSpace& space, std::size_t parameter,
                                                       std::size_t cap = default_cap) {
  if (parameter >= space.ctx().parameter_count()) {
    throw Error(ErrorKind::UnknownParameter, "parameter index " + std::to_string(parameter));
  }
  const auto scopes = space.scope().column(parameter);
  const std::size_t n = scopes.size();
  std::vector<PointMask> up(n), down(n, 0);
  for (std::size_t x = 0; x < n; ++x) up[x] = reach_slice(scopes, bit(x));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (up[y] & bit(x)) down[x] |= bit(y);
    }
  }

  // Decide points in order: taking x forces up[x] in, dropping x forces
  // down[x] out. Both choices stay consistent, so every leaf is a member.
  std::vector<PointMask> out;
  struct Frame {
    PointMask in, out;
  };
  std::vector<Frame> stack{{0, 0}};
  const PointMask full = space.ctx().full_mask();
  while (!stack.empty()) {
    auto [in, excluded] = stack.back();
    stack.pop_back();
    const PointMask undecided = full & ~(in | excluded);
    if (undecided == 0) {
      out.push_back(in);
      if (out.size() > cap) {
        throw Error(ErrorKind::CapExceeded, "aura-open slices at parameter " + space.ctx().parameters()[parameter] +
                                                " exceed " + std::to_string(cap));
      }
      continue;
    }
    const auto x = static_cast<std::size_t>(std::countr_zero(undecided));
    stack.push_back({in | up[x], excluded});
    stack.push_back({in, excluded | down[x]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of aura-open soft sets, or nullopt if it exceeds `cap`.
inline std::optional<std::size_t> aura_topology_size(const std::vector<std::vector<PointMask>>& families,
                                                     std::size_t cap) {
  std::size_t total = 1;
  for (const auto& f : families) {
    if (f.empty() || total > cap / f.size()) return std::nullopt;
    total *= f.size();
  }
  return total <= cap ? std::optional(total) : std::nullopt;
}

/// τ_a as the product of the per-parameter families; first parameter varies
/// slowest.
inline std::vector<SoftSet> enumerate_aura_topology(const SoftAuraSpace& space, std::size_t cap = default_cap) {
  const std::size_t m = space.ctx().parameter_count();
  std::vector<std::vector<PointMask>> families;
  for (std::size_t e = 0; e < m; ++e) families.push_back(per_parameter_alexandrov(space, e, cap));
  const auto total = aura_topology_size(families, cap);
  if (!total) throw Error(ErrorKind::CapExceeded, "aura topology exceeds " + std::to_string(cap) + " members");

  std::vector<SoftSet> out;
  out.reserve(*total);
  std::vector<std::size_t> digit(m, 0);
  std::vector<PointMask> slices(m);
  for (std::size_t k = 0; k < *total; ++k) {
    for (std::size_t e = 0; e < m; ++e) slices[e] = families[e][digit[e]];
    out.emplace_back(space.context(), slices);
    for (std::size_t e = m; e-- > 0;) {
      if (++digit[e] < families[e].size()) break;
      digit[e] = 0;
    }
  }
  return out;
}

/// For a single parameter every aura-open set is a union of scopes and hence
/// a member of the ambient topology. Checks that on the enumerated τ_a.
inline bool singleton_e_inclusion_check(const SoftAuraSpace& space, std::size_t cap = default_cap) {
  if (space.ctx().parameter_count() != 1) {
    throw Error(ErrorKind::NotSingletonE, std::to_string(space.ctx().parameter_count()) + " parameters");
  }
  for (const auto& g : enumerate_aura_topology(space, cap)) {
    if (!space.topology().contains(g)) return false;
  }
  return true;
}

}  // namespace softaura
