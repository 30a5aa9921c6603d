#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "softaura/error.hpp"
#include "softaura/genopen.hpp"
#include "softaura/operators.hpp"
#include "softaura/space.hpp"

namespace softaura {

/// f_up = (u, p) between two aura spaces: u on points, p on parameters.
class SoftMapping {
 public:
  SoftMapping(SoftAuraSpace source, SoftAuraSpace target, std::vector<std::size_t> point_map,
              std::vector<std::size_t> param_map)
      : source_(std::move(source)),
        target_(std::move(target)),
        point_map_(std::move(point_map)),
        param_map_(std::move(param_map)) {
    if (point_map_.size() != source_.ctx().universe_size()) {
      throw Error(ErrorKind::InvalidMapping, "point map is not total on the source universe");
    }
    if (param_map_.size() != source_.ctx().parameter_count()) {
      throw Error(ErrorKind::InvalidMapping, "parameter map is not total on the source parameters");
    }
    for (auto y : point_map_) {
      if (y >= target_.ctx().universe_size()) throw Error(ErrorKind::InvalidMapping, "point image out of range");
    }
    for (auto k : param_map_) {
      if (k >= target_.ctx().parameter_count()) throw Error(ErrorKind::InvalidMapping, "parameter image out of range");
    }
  }

  static SoftMapping from_names(SoftAuraSpace source, SoftAuraSpace target,
                                const std::map<std::string, std::string>& points,
                                const std::map<std::string, std::string>& params) {
    std::vector<std::size_t> u(source.ctx().universe_size()), p(source.ctx().parameter_count());
    for (std::size_t x = 0; x < u.size(); ++x) {
      auto it = points.find(source.ctx().points()[x]);
      if (it == points.end()) throw Error(ErrorKind::InvalidMapping, "no image for point " + source.ctx().points()[x]);
      u[x] = target.ctx().point_index(it->second);
    }
    for (const auto& [from, to] : points) source.ctx().point_index(from);
    for (std::size_t e = 0; e < p.size(); ++e) {
      auto it = params.find(source.ctx().parameters()[e]);
      if (it == params.end()) {
        throw Error(ErrorKind::InvalidMapping, "no image for parameter " + source.ctx().parameters()[e]);
      }
      p[e] = target.ctx().parameter_index(it->second);
    }
    for (const auto& [from, to] : params) source.ctx().parameter_index(from);
    return SoftMapping(std::move(source), std::move(target), std::move(u), std::move(p));
  }

  static SoftMapping identity(const SoftAuraSpace& space) {
    std::vector<std::size_t> u(space.ctx().universe_size()), p(space.ctx().parameter_count());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = i;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    return SoftMapping(space, space, std::move(u), std::move(p));
  }

  const SoftAuraSpace& source() const noexcept { return source_; }
  const SoftAuraSpace& target() const noexcept { return target_; }
  const std::vector<std::size_t>& point_map() const noexcept { return point_map_; }
  const std::vector<std::size_t>& param_map() const noexcept { return param_map_; }

  friend bool operator==(const SoftMapping& a, const SoftMapping& b) {
    return a.point_map_ == b.point_map_ && a.param_map_ == b.param_map_ && a.source_ == b.source_ &&
           a.target_ == b.target_;
  }

 private:
  SoftAuraSpace source_;
  SoftAuraSpace target_;
  std::vector<std::size_t> point_map_;
  std::vector<std::size_t> param_map_;
};

/// Preimage of a target slice through the point map.
inline PointMask preimage_slice(const std::vector<std::size_t>& point_map, PointMask target_slice) noexcept {
  PointMask out = 0;
  for (std::size_t x = 0; x < point_map.size(); ++x) {
    if (target_slice & bit(point_map[x])) out |= bit(x);
  }
  return out;
}

/// H(e) = u⁻¹(G(p(e))).
inline SoftSet inverse_image(const SoftMapping& m, const SoftSet& g) {
  require_same_context(m.target().context(), g.context());
  std::vector<PointMask> out(m.param_map().size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = preimage_slice(m.point_map(), g[m.param_map()[e]]);
  return SoftSet(m.source().context(), std::move(out));
}

/// Which target sets continuity quantifies over: the target's aura-open sets
/// (default) or the members of its ambient topology.
enum class OpenDomain { AuraOpen, Ambient };

struct ContinuityProfile {
  bool continuous = true;
  bool alpha = true;
  bool semi = true;
  bool pre = true;
  bool beta = true;
  ClosureKind kind = ClosureKind::Cech;

  bool satisfies_hierarchy() const noexcept {
    return (!continuous || alpha) && (!alpha || (semi && pre)) && (!(semi || pre) || beta);
  }

  friend bool operator==(const ContinuityProfile&, const ContinuityProfile&) = default;
};

inline std::vector<SoftSet> target_open_sets(const SoftMapping& m, OpenDomain domain, std::size_t cap) {
  if (domain == OpenDomain::AuraOpen) return enumerate_aura_topology(m.target(), cap);
  const auto& top = m.target().topology();
  if (top.is_discrete()) return all_soft_sets(m.target().context(), cap);
  std::vector<SoftSet> out;
  for (const auto& member : top.members()) out.push_back(member.set);
  return out;
}

inline ContinuityProfile continuity_profile(const SoftMapping& m, ClosureKind kind = ClosureKind::Cech,
                                            std::size_t cap = default_cap,
                                            OpenDomain domain = OpenDomain::AuraOpen) {
  ContinuityProfile out;
  out.kind = kind;
  for (const auto& v : target_open_sets(m, domain, cap)) {
    const auto p = classify(m.source(), inverse_image(m, v), kind);
    out.continuous = out.continuous && p.open;
    out.alpha = out.alpha && p.alpha;
    out.semi = out.semi && p.semi;
    out.pre = out.pre && p.pre;
    out.beta = out.beta && p.beta;
  }
  return out;
}

/// g ∘ f: first `first`, then `second`.
inline SoftMapping compose(const SoftMapping& first, const SoftMapping& second) {
  if (!(first.target() == second.source())) {
    throw Error(ErrorKind::SpaceMismatch, "target of the first mapping is not the source of the second");
  }
  std::vector<std::size_t> u(first.point_map().size()), p(first.param_map().size());
  for (std::size_t x = 0; x < u.size(); ++x) u[x] = second.point_map()[first.point_map()[x]];
  for (std::size_t e = 0; e < p.size(); ++e) p[e] = second.param_map()[first.param_map()[e]];
  return SoftMapping(first.source(), second.target(), std::move(u), std::move(p));
}

struct CharacterizationResult {
  /// continuous ⇔ inclusion_everywhere.
  bool holds = true;
  bool continuous = true;
  /// cl_a(f⁻¹(G)) ⊑ f⁻¹(cl_b(G)) for every checked G.
  bool inclusion_everywhere = true;
  /// First G violating the inclusion, if any.
  std::optional<SoftSet> witness;
  std::size_t checked = 0;
};

namespace detail {

inline bool closure_inclusion(const SoftMapping& m, const SoftSet& g) {
  return is_subset(aura_closure(m.source(), inverse_image(m, g)), inverse_image(m, aura_closure(m.target(), g)));
}

inline CharacterizationResult characterize(const SoftMapping& m, const std::vector<SoftSet>& sets, std::size_t cap) {
  CharacterizationResult out;
  out.continuous = continuity_profile(m, ClosureKind::Cech, cap).continuous;
  for (const auto& g : sets) {
    ++out.checked;
    if (!closure_inclusion(m, g)) {
      out.inclusion_everywhere = false;
      out.witness = g;
      break;
    }
  }
  out.holds = out.continuous == out.inclusion_everywhere;
  return out;
}

}  // namespace detail

/// Checks the closure characterization of continuity over every soft set of
/// the target.
inline CharacterizationResult verify_closure_characterization(const SoftMapping& m, std::size_t cap = default_cap) {
  return detail::characterize(m, all_soft_sets(m.target().context(), cap), cap);
}

/// Sampled variant: `samples` uniformly random target soft sets. A sampled
/// run can miss the violating set of a discontinuous mapping.
inline CharacterizationResult verify_closure_characterization(const SoftMapping& m, std::size_t samples,
                                                              std::uint64_t seed, std::size_t cap) {
  std::mt19937_64 rng(seed);
  const auto& ctx = m.target().context();
  std::vector<SoftSet> sets;
  sets.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<PointMask> slices(ctx->parameter_count());
    for (auto& s : slices) s = rng() & ctx->full_mask();
    sets.emplace_back(ctx, std::move(slices));
  }
  return detail::characterize(m, sets, cap);
}

struct DecompositionResult {
  /// alpha ⇔ (semi ∧ pre) at the mapping level.
  bool equivalent = true;
  ContinuityProfile profile;
  /// When the equivalence fails: the first target open set whose preimage is
  /// not α-open although every preimage is semi- and pre-open.
  std::optional<SoftSet> witness;
};

inline DecompositionResult verify_decomposition(const SoftMapping& m, ClosureKind kind = ClosureKind::Kuratowski,
                                                std::size_t cap = default_cap) {
  DecompositionResult out;
  out.profile = continuity_profile(m, kind, cap);
  out.equivalent = out.profile.alpha == (out.profile.semi && out.profile.pre);
  if (!out.equivalent) {
    for (const auto& v : enumerate_aura_topology(m.target(), cap)) {
      if (!classify(m.source(), inverse_image(m, v), kind).alpha) {
        out.witness = v;
        break;
      }
    }
  }
  return out;
}

}  // namespace softaura
