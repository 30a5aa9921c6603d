#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "softaura/error.hpp"
#include "softaura/soft_set.hpp"

namespace softaura {

inline constexpr std::size_t default_cap = 1'000'000;

struct NamedSoftSet {
  std::string name;
  SoftSet set;
};

/// A soft topology. Explicit topologies hold their members; the discrete
/// topology is intensional (every soft set is a member) and cannot be listed.
class SoftTopology {
 public:
  static SoftTopology discrete(ContextPtr ctx) { return SoftTopology(std::move(ctx)); }

  static SoftTopology indiscrete(const ContextPtr& ctx) {
    return SoftTopology(ctx, {{"null", SoftSet::null(ctx)}, {"absolute", SoftSet::absolute(ctx)}});
  }

  const ContextPtr& context() const noexcept { return ctx_; }
  bool is_discrete() const noexcept { return discrete_; }
  bool is_extensional() const noexcept { return !discrete_; }

  bool contains(const SoftSet& s) const {
    require_same_context(ctx_, s.context());
    if (discrete_) return true;
    return keys_.contains(std::vector<PointMask>(s.slices().begin(), s.slices().end()));
  }

  const std::vector<NamedSoftSet>& members() const {
    if (discrete_) throw Error(ErrorKind::NotEnumerable, "the discrete topology is not listed");
    return members_;
  }

  /// Number of members; for the discrete topology this is 2^(|X||E|) when it fits.
  std::optional<std::size_t> size() const {
    if (!discrete_) return members_.size();
    const auto bits = ctx_->universe_size() * ctx_->parameter_count();
    if (bits >= 63) return std::nullopt;
    return std::size_t{1} << bits;
  }

  std::optional<SoftSet> find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return members_[it->second].set;
  }

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
    if (!same_context(a.ctx_, b.ctx_) || a.discrete_ != b.discrete_) return false;
    return a.keys_ == b.keys_;
  }

 private:
  friend struct TopologyAccess;

  explicit SoftTopology(ContextPtr ctx) : ctx_(std::move(ctx)), discrete_(true) {}

  SoftTopology(ContextPtr ctx, std::vector<NamedSoftSet> members)
      : ctx_(std::move(ctx)), discrete_(false) {
    for (auto& m : members) {
      if (by_name_.contains(m.name)) throw Error(ErrorKind::DuplicateIdentifier, "topology member '" + m.name + "'");
      // Extensional duplicates become aliases of the first occurrence.
      auto key = std::vector<PointMask>(m.set.slices().begin(), m.set.slices().end());
      if (keys_.insert(key).second) {
        by_name_.emplace(m.name, members_.size());
        members_.push_back(std::move(m));
      } else {
        for (std::size_t i = 0; i < members_.size(); ++i) {
          if (members_[i].set == m.set) by_name_.emplace(m.name, i);
        }
      }
    }
  }

  ContextPtr ctx_;
  bool discrete_ = false;
  std::vector<NamedSoftSet> members_;
  std::set<std::vector<PointMask>> keys_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

struct TopologyAccess {
  static SoftTopology make(ContextPtr ctx, std::vector<NamedSoftSet> members) {
    return SoftTopology(std::move(ctx), std::move(members));
  }
};

enum class TopologyViolationKind { MissingNull, MissingAbsolute, MissingUnion, MissingIntersection };

constexpr std::string_view to_string(TopologyViolationKind k) noexcept {
  switch (k) {
    case TopologyViolationKind::MissingNull: return "missing-null";
    case TopologyViolationKind::MissingAbsolute: return "missing-absolute";
    case TopologyViolationKind::MissingUnion: return "missing-union";
    case TopologyViolationKind::MissingIntersection: return "missing-intersection";
  }
  return "unknown";
}

/// First closure gap found. For union/intersection gaps `left` and `right`
/// name the witnessing pair.
struct TopologyViolation {
  TopologyViolationKind kind;
  std::string left;
  std::string right;
};

using TopologyCheck = std::variant<SoftTopology, TopologyViolation>;

/// Checks the soft topology axioms on a finite family and stops at the first
/// gap. For finite families pairwise union closure gives arbitrary union
/// closure.
inline TopologyCheck validate_topology(const ContextPtr& ctx, std::vector<NamedSoftSet> sets) {
  std::set<std::vector<PointMask>> keys;
  auto key_of = [](const SoftSet& s) { return std::vector<PointMask>(s.slices().begin(), s.slices().end()); };
  for (const auto& m : sets) {
    require_same_context(ctx, m.set.context());
    keys.insert(key_of(m.set));
  }
  if (!keys.contains(key_of(SoftSet::null(ctx)))) return TopologyViolation{TopologyViolationKind::MissingNull, {}, {}};
  if (!keys.contains(key_of(SoftSet::absolute(ctx)))) {
    return TopologyViolation{TopologyViolationKind::MissingAbsolute, {}, {}};
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!keys.contains(key_of(soft_union(sets[i].set, sets[j].set)))) {
        return TopologyViolation{TopologyViolationKind::MissingUnion, sets[i].name, sets[j].name};
      }
      if (!keys.contains(key_of(soft_intersection(sets[i].set, sets[j].set)))) {
        return TopologyViolation{TopologyViolationKind::MissingIntersection, sets[i].name, sets[j].name};
      }
    }
  }
  return TopologyAccess::make(ctx, std::move(sets));
}

/// Smallest topology containing the subbasis, by saturating under pairwise
/// union and intersection. Members come out in canonical order; subbasis
/// members keep their names, the rest are named null, absolute or g<k>.
inline SoftTopology generate_topology(const ContextPtr& ctx, const std::vector<NamedSoftSet>& subbasis,
                                      std::size_t cap = default_cap) {
  using Key = std::vector<PointMask>;
  std::set<Key> family;
  std::vector<Key> pending;
  auto add = [&](Key k) {
    if (family.insert(k).second) {
      if (family.size() > cap) throw Error(ErrorKind::CapExceeded, "generated topology exceeds " + std::to_string(cap));
      pending.push_back(std::move(k));
    }
  };
  const auto null = SoftSet::null(ctx);
  const auto absolute = SoftSet::absolute(ctx);
  add(Key(null.slices().begin(), null.slices().end()));
  add(Key(absolute.slices().begin(), absolute.slices().end()));
  for (const auto& m : subbasis) {
    require_same_context(ctx, m.set.context());
    add(Key(m.set.slices().begin(), m.set.slices().end()));
  }
  std::vector<Key> done;
  while (!pending.empty()) {
    Key k = std::move(pending.back());
    pending.pop_back();
    done.push_back(k);
    // Combining with everything already processed covers every pair once.
    for (std::size_t i = 0; i + 1 < done.size(); ++i) {
      Key u(k.size()), n(k.size());
      for (std::size_t e = 0; e < k.size(); ++e) {
        u[e] = k[e] | done[i][e];
        n[e] = k[e] & done[i][e];
      }
      add(std::move(u));
      add(std::move(n));
    }
  }

  std::map<Key, std::string> names;
  for (const auto& m : subbasis) names.emplace(Key(m.set.slices().begin(), m.set.slices().end()), m.name);
  names.emplace(Key(null.slices().begin(), null.slices().end()), "null");
  names.emplace(Key(absolute.slices().begin(), absolute.slices().end()), "absolute");

  std::vector<NamedSoftSet> members;
  std::size_t k = 0;
  for (const auto& key : family) {
    auto it = names.find(key);
    std::string name = it != names.end() ? it->second : "g" + std::to_string(k);
    members.push_back({std::move(name), SoftSet(ctx, key)});
    ++k;
  }
  return TopologyAccess::make(ctx, std::move(members));
}

}  // namespace softaura
