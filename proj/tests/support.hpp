#pragma once

// Shared fixtures and naive reference models for the unit tests. The naive
// model works on std::set<std::string> per parameter and never touches
// bitmasks, so it is an independent check on the library kernels.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "softaura/softaura.hpp"

namespace fixtures {

using namespace softaura;

inline std::string data(const std::string& name) { return std::string(SOFTAURA_DATA_DIR) + "/" + name; }

inline ContextPtr example3_context() { return Context::make({"x1", "x2", "x3"}, {"e1", "e2"}); }

inline SoftSet f1(const ContextPtr& ctx) { return make_soft_set(ctx, {{"e1", {"x1"}}, {"e2", {"x1", "x2"}}}); }
inline SoftSet f2(const ContextPtr& ctx) {
  return make_soft_set(ctx, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2", "x3"}}});
}
inline SoftSet f3(const ContextPtr& ctx) { return make_soft_set(ctx, {{"e1", {"x1", "x2"}}, {"e2", {"x1", "x2"}}}); }

/// X = {1,2,3}, E = {e}, scopes 1 -> {1,2}, 2 -> {2,3}, 3 -> {3}.
inline SoftAuraSpace chain_space() {
  auto ctx = Context::make({"1", "2", "3"}, {"e"});
  return discrete_space(ctx, {0b011, 0b110, 0b100});
}

inline SoftSet chain_set(const SoftAuraSpace& s, std::vector<std::string> points) {
  return make_soft_set(s.context(), {{"e", std::move(points)}});
}

inline SoftAuraSpace stations_space() { return io::load_space_file(data("s8_stations.json")).require(); }

inline SoftSet stations_target(const SoftAuraSpace& s) {
  return make_soft_set(s.context(),
                       {{"e1", {"s3", "s5"}}, {"e2", {"s2"}}, {"e3", {"s1", "s4"}}, {"e4", {"s4", "s5"}}});
}

inline SoftAuraSpace example6_space() {
  auto ctx = Context::make({"x1", "x2"}, {"e1", "e2"});
  // Parameter-major: e1 column then e2 column.
  return discrete_space(ctx, {0b01, 0b11, 0b11, 0b10});
}

}  // namespace fixtures

namespace naive {

using Slice = std::set<std::string>;
using Soft = std::map<std::string, Slice>;
/// point -> its scope soft set
using Scope = std::map<std::string, Soft>;

inline Soft of(const softaura::SoftSet& s) {
  Soft out;
  for (const auto& [param, points] : softaura::to_named_slices(s)) out[param] = Slice(points.begin(), points.end());
  return out;
}

inline Scope scope_of(const softaura::SoftAuraSpace& space) {
  Scope out;
  for (std::size_t x = 0; x < space.ctx().universe_size(); ++x) out[space.ctx().points()[x]] = of(space.scope().of(x));
  return out;
}

inline bool meets(const Slice& a, const Slice& b) {
  for (const auto& p : a) {
    if (b.contains(p)) return true;
  }
  return false;
}

inline bool within(const Slice& a, const Slice& b) {
  for (const auto& p : a) {
    if (!b.contains(p)) return false;
  }
  return true;
}

inline Soft closure(const Scope& scope, const Soft& g) {
  Soft out;
  for (const auto& [param, slice] : g) {
    out[param];
    for (const auto& [x, sx] : scope) {
      if (meets(sx.at(param), slice)) out[param].insert(x);
    }
  }
  return out;
}

inline Soft interior(const Scope& scope, const Soft& g) {
  Soft out;
  for (const auto& [param, slice] : g) {
    out[param];
    for (const auto& [x, sx] : scope) {
      if (within(sx.at(param), slice)) out[param].insert(x);
    }
  }
  return out;
}

inline Soft unite(const Soft& a, const Soft& b) {
  Soft out = a;
  for (const auto& [param, slice] : b) out[param].insert(slice.begin(), slice.end());
  return out;
}

inline Soft meet(const Soft& a, const Soft& b) {
  Soft out;
  for (const auto& [param, slice] : a) {
    out[param];
    for (const auto& p : slice) {
      if (b.at(param).contains(p)) out[param].insert(p);
    }
  }
  return out;
}

inline Soft complement(const Soft& a, const std::vector<std::string>& universe) {
  Soft out;
  for (const auto& [param, slice] : a) {
    out[param];
    for (const auto& p : universe) {
      if (!slice.contains(p)) out[param].insert(p);
    }
  }
  return out;
}

inline bool subset(const Soft& a, const Soft& b) {
  for (const auto& [param, slice] : a) {
    if (!within(slice, b.at(param))) return false;
  }
  return true;
}

}  // namespace naive
