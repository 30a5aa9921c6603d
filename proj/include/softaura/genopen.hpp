#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softaura/error.hpp"
#include "softaura/operators.hpp"

namespace softaura {

/// Membership of one soft set in the generalized-open classes. The interior
/// is always int_a; `kind` selects cl_a or its Kuratowski fixpoint.
struct OpennessProfile {
  bool open = false;
  bool alpha = false;
  bool semi = false;
  bool pre = false;
  bool b = false;
  bool beta = false;
  ClosureKind kind = ClosureKind::Cech;

  /// open ⇒ α ⇒ semi ∧ pre, semi ∨ pre ⇒ b ⇒ β.
  bool satisfies_hierarchy() const noexcept {
    return (!open || alpha) && (!alpha || (semi && pre)) && (!(semi || pre) || b) && (!b || beta);
  }

  friend bool operator==(const OpennessProfile&, const OpennessProfile&) = default;
};

enum class OpenClass { Open, Alpha, Semi, Pre, B, Beta };

inline constexpr std::array<OpenClass, 6> all_open_classes{OpenClass::Open, OpenClass::Alpha, OpenClass::Semi,
                                                           OpenClass::Pre,  OpenClass::B,     OpenClass::Beta};

constexpr std::string_view to_string(OpenClass c) noexcept {
  switch (c) {
    case OpenClass::Open: return "open";
    case OpenClass::Alpha: return "alpha";
    case OpenClass::Semi: return "semi";
    case OpenClass::Pre: return "pre";
    case OpenClass::B: return "b";
    case OpenClass::Beta: return "beta";
  }
  return "unknown";
}

constexpr bool flag(const OpennessProfile& p, OpenClass c) noexcept {
  switch (c) {
    case OpenClass::Open: return p.open;
    case OpenClass::Alpha: return p.alpha;
    case OpenClass::Semi: return p.semi;
    case OpenClass::Pre: return p.pre;
    case OpenClass::B: return p.b;
    case OpenClass::Beta: return p.beta;
  }
  return false;
}

inline OpennessProfile classify(const SoftAuraSpace& space, const SoftSet& g, ClosureKind kind = ClosureKind::Cech) {
  require_same_context(space.context(), g.context());
  auto cl = [&](const SoftSet& s) { return closure_of_kind(space, s, kind); };
  auto in = [&](const SoftSet& s) { return aura_interior(space, s); };

  const SoftSet int_g = in(g);
  const SoftSet cl_int = cl(int_g);
  const SoftSet cl_g = cl(g);
  const SoftSet int_cl = in(cl_g);

  OpennessProfile p;
  p.kind = kind;
  p.open = int_g == g;
  p.semi = is_subset(g, cl_int);
  p.pre = is_subset(g, int_cl);
  p.alpha = is_subset(g, in(cl_int));
  p.beta = is_subset(g, cl(int_cl));
  p.b = is_subset(g, soft_union(cl_int, int_cl));
  return p;
}

/// Union-closed classes.
enum class UnionClass { Semi, Pre, Beta };

constexpr OpenClass as_open_class(UnionClass c) noexcept {
  return c == UnionClass::Semi ? OpenClass::Semi : c == UnionClass::Pre ? OpenClass::Pre : OpenClass::Beta;
}

/// Returns whether the union of `family` is in `cls`. Every member must be
/// in `cls`; a false return means the union-closure law was falsified.
inline bool check_union_closure(const SoftAuraSpace& space, std::span<const SoftSet> family, UnionClass cls,
                                ClosureKind kind = ClosureKind::Cech) {
  const OpenClass c = as_open_class(cls);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!flag(classify(space, family[i], kind), c)) {
      throw Error(ErrorKind::PreconditionUnmet, "family member " + std::to_string(i) + " is not " +
                                                    std::string(to_string(c)) + "-open");
    }
  }
  return flag(classify(space, big_union(space.context(), family), kind), c);
}

struct AlphaIntersectionWitness {
  std::size_t space_index;
  SoftSet first;
  SoftSet second;
  SoftSet intersection;
  /// The inclusion intersection ⊑ int(cl(int(intersection))) fails at this parameter.
  std::string parameter;
};

/// Every soft set of a context in canonical order (bitmask order, first
/// parameter most significant). Only for tiny contexts.
inline std::vector<SoftSet> all_soft_sets(const ContextPtr& ctx, std::size_t cap = default_cap) {
  const std::size_t n = ctx->universe_size();
  const std::size_t m = ctx->parameter_count();
  if (n * m >= 63 || (std::size_t{1} << (n * m)) > cap) {
    throw Error(ErrorKind::CapExceeded, "2^" + std::to_string(n * m) + " soft sets exceed " + std::to_string(cap));
  }
  const std::size_t total = std::size_t{1} << (n * m);
  std::vector<SoftSet> out;
  out.reserve(total);
  std::vector<PointMask> slices(m);
  for (std::size_t code = 0; code < total; ++code) {
    for (std::size_t e = 0; e < m; ++e) slices[e] = (code >> ((m - 1 - e) * n)) & low_mask(n);
    out.emplace_back(ctx, slices);
  }
  return out;
}

/// Looks for two α-open sets whose intersection is not α-open, scanning each
/// space's soft sets in canonical order and stopping after `budget` pair
/// checks. Absence of a witness proves nothing beyond the budget.
inline std::optional<AlphaIntersectionWitness> search_alpha_intersection_failure(
    std::span<const SoftAuraSpace> spaces, std::size_t budget, ClosureKind kind = ClosureKind::Cech) {
  std::size_t used = 0;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const auto& space = spaces[s];
    std::vector<SoftSet> alpha_open;
    for (auto& g : all_soft_sets(space.context())) {
      if (classify(space, g, kind).alpha) alpha_open.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < alpha_open.size(); ++i) {
      for (std::size_t j = i + 1; j < alpha_open.size(); ++j) {
        if (used++ >= budget) return std::nullopt;
        auto meet = soft_intersection(alpha_open[i], alpha_open[j]);
        if (classify(space, meet, kind).alpha) continue;
        const auto bound = aura_interior(space, closure_of_kind(space, aura_interior(space, meet), kind));
        std::string parameter;
        for (std::size_t e = 0; e < meet.slices().size(); ++e) {
          if (meet[e] & ~bound[e]) {
            parameter = space.ctx().parameters()[e];
            break;
          }
        }
        return AlphaIntersectionWitness{s, alpha_open[i], alpha_open[j], std::move(meet), std::move(parameter)};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<AlphaIntersectionWitness> search_alpha_intersection_failure(const SoftAuraSpace& space,
                                                                                 std::size_t budget,
                                                                                 ClosureKind kind = ClosureKind::Cech) {
  return search_alpha_intersection_failure(std::span<const SoftAuraSpace>(&space, 1), budget, kind);
}

}  // namespace softaura
