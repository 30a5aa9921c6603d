#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "softaura/error.hpp"
#include "softaura/genopen.hpp"
#include "softaura/mapping.hpp"
#include "softaura/operators.hpp"
#include "softaura/rough.hpp"
#include "softaura/separation.hpp"
#include "softaura/space.hpp"

namespace softaura::harness {

/// |X|·|E| limit for exhaustive families.
inline constexpr std::size_t exhaustive_guard = 12;

enum class FamilyTopology { Discrete, Generated };

struct SpaceFamilySpec {
  std::size_t max_universe = 3;
  std::size_t max_params = 2;
  FamilyTopology topology = FamilyTopology::Discrete;
  /// Exhaustive when unset; otherwise this many random spaces.
  std::optional<std::size_t> sampled_spaces;
  std::uint64_t seed = 1;
  /// Random soft sets per space in sampled mode; consecutive sets form the pairs.
  std::size_t sets_per_space = 8;
  /// Law groups to run; empty runs all of them.
  std::set<std::string> laws;
  bool strictness = true;
  std::size_t cap = default_cap;

  bool exhaustive() const noexcept { return !sampled_spaces.has_value(); }
};

inline void check_guards(const SpaceFamilySpec& spec) {
  if (spec.max_universe == 0 || spec.max_params == 0) throw Error(ErrorKind::SizeGuard, "empty family");
  if (spec.max_universe > max_universe) throw Error(ErrorKind::SizeGuard, "universe exceeds the slice width");
  if (spec.exhaustive() && spec.max_universe * spec.max_params > exhaustive_guard) {
    throw Error(ErrorKind::SizeGuard, "exhaustive mode needs |X|·|E| <= " + std::to_string(exhaustive_guard) +
                                          "; use sampled mode");
  }
}

/// Context with points x1..xn and parameters e1..em.
inline ContextPtr make_context(std::size_t n, std::size_t m) {
  std::vector<std::string> points, params;
  for (std::size_t i = 1; i <= n; ++i) points.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) params.push_back("e" + std::to_string(i));
  return Context::make(std::move(points), std::move(params));
}

/// Integer code of a soft set: slice e occupies bits [(m-1-e)·n, (m-e)·n).
/// Matches the order of all_soft_sets.
inline std::uint64_t code_of(const SoftSet& s) {
  const std::size_t n = s.ctx().universe_size();
  const std::size_t m = s.ctx().parameter_count();
  std::uint64_t code = 0;
  for (std::size_t e = 0; e < m; ++e) code |= static_cast<std::uint64_t>(s[e]) << ((m - 1 - e) * n);
  return code;
}

/// Walks every admissible scope function of a topology in canonical order.
/// Discrete: each (x, e) cell independently ranges over the subsets
/// containing x, x1/e1 most significant. Explicit: each point ranges over
/// the members containing it in every slice, x1 most significant.
class ScopeEnumerator {
 public:
  ScopeEnumerator(ContextPtr ctx, std::shared_ptr<const SoftTopology> topology, std::size_t cap = default_cap)
      : ctx_(std::move(ctx)), topology_(std::move(topology)) {
    const std::size_t n = ctx_->universe_size();
    const std::size_t m = ctx_->parameter_count();
    if (topology_->is_discrete()) {
      const std::size_t exponent = (n - 1) * n * m;
      if (exponent >= 63 || (std::uint64_t{1} << exponent) > cap) {
        throw Error(ErrorKind::CapExceeded, "2^" + std::to_string(exponent) + " scope functions");
      }
      total_ = std::uint64_t{1} << exponent;
      radix_.assign(n * m, std::size_t{1} << (n - 1));
    } else {
      candidates_.resize(n);
      for (std::size_t x = 0; x < n; ++x) {
        for (const auto& member : topology_->members()) {
          bool ok = true;
          for (std::size_t e = 0; e < m && ok; ++e) ok = (member.set[e] & bit(x)) != 0;
          if (ok) candidates_[x].push_back(member.set);
        }
      }
      total_ = 1;
      for (const auto& c : candidates_) {
        if (total_ > cap / c.size()) throw Error(ErrorKind::CapExceeded, "scope functions exceed " + std::to_string(cap));
        total_ *= c.size();
        radix_.push_back(c.size());
      }
      if (total_ > cap) throw Error(ErrorKind::CapExceeded, "scope functions exceed " + std::to_string(cap));
    }
    digits_.assign(radix_.size(), 0);
  }

  std::uint64_t total() const noexcept { return total_; }

  /// Fills `table` (parameter-major) with the next scope; false when done.
  bool next(std::vector<PointMask>& table) {
    if (emitted_ == total_) return false;
    if (emitted_ > 0) advance();
    ++emitted_;
    const std::size_t n = ctx_->universe_size();
    const std::size_t m = ctx_->parameter_count();
    table.assign(n * m, 0);
    if (topology_->is_discrete()) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t e = 0; e < m; ++e) {
          const PointMask d = digits_[x * m + e];
          table[e * n + x] = (d & low_mask(x)) | bit(x) | ((d >> x) << (x + 1));
        }
      }
    } else {
      for (std::size_t x = 0; x < n; ++x) {
        const auto& s = candidates_[x][digits_[x]];
        for (std::size_t e = 0; e < m; ++e) table[e * n + x] = s[e];
      }
    }
    return true;
  }

  std::optional<SoftAuraSpace> next_space() {
    std::vector<PointMask> table;
    if (!next(table)) return std::nullopt;
    return SoftAuraSpace(topology_, ScopeAccess::make(ctx_, std::move(table)));
  }

 private:
  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < radix_[i]) return;
      digits_[i] = 0;
    }
  }

  ContextPtr ctx_;
  std::shared_ptr<const SoftTopology> topology_;
  std::vector<std::vector<SoftSet>> candidates_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> digits_;
  std::uint64_t total_ = 0;
  std::uint64_t emitted_ = 0;
};

inline std::vector<SoftAuraSpace> enumerate_scope_functions(const ContextPtr& ctx,
                                                            std::shared_ptr<const SoftTopology> topology,
                                                            std::size_t cap = default_cap) {
  ScopeEnumerator it(ctx, std::move(topology), cap);
  std::vector<SoftAuraSpace> out;
  while (auto s = it.next_space()) out.push_back(std::move(*s));
  return out;
}

/// Every discrete-topology space with 1 <= |X| <= max_universe and
/// 1 <= |E| <= max_params, ordered by (|X|, |E|, scope index).
inline std::vector<SoftAuraSpace> discrete_family(std::size_t max_universe_size, std::size_t max_params) {
  std::vector<SoftAuraSpace> out;
  for (std::size_t n = 1; n <= max_universe_size; ++n) {
    for (std::size_t m = 1; m <= max_params; ++m) {
      auto ctx = make_context(n, m);
      auto spaces = enumerate_scope_functions(ctx, std::make_shared<const SoftTopology>(SoftTopology::discrete(ctx)));
      for (auto& s : spaces) out.push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random generation

/// Uniform in [0, bound). Plain modulo keeps streams identical across
/// standard libraries.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

inline SoftSet random_soft_set(std::mt19937_64& rng, const ContextPtr& ctx) {
  std::vector<PointMask> slices(ctx->parameter_count());
  for (auto& s : slices) s = rng() & ctx->full_mask();
  return SoftSet(ctx, std::move(slices));
}

/// Topology generated by 1-3 random soft sets.
inline std::shared_ptr<const SoftTopology> random_generated_topology(std::mt19937_64& rng, const ContextPtr& ctx) {
  std::vector<NamedSoftSet> subbasis;
  const std::size_t k = 1 + uniform_index(rng, 3);
  for (std::size_t i = 0; i < k; ++i) subbasis.push_back({"s" + std::to_string(i), random_soft_set(rng, ctx)});
  return std::make_shared<const SoftTopology>(generate_topology(ctx, subbasis));
}

/// Random scope over `topology`, uniform among the admissible choices.
inline SoftAuraSpace random_space(std::mt19937_64& rng, const ContextPtr& ctx,
                                  std::shared_ptr<const SoftTopology> topology) {
  const std::size_t n = ctx->universe_size();
  const std::size_t m = ctx->parameter_count();
  std::vector<PointMask> table(n * m);
  if (topology->is_discrete()) {
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t x = 0; x < n; ++x) table[e * n + x] = (rng() & ctx->full_mask()) | bit(x);
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<const SoftSet*> admissible;
      for (const auto& member : topology->members()) {
        bool ok = true;
        for (std::size_t e = 0; e < m && ok; ++e) ok = (member.set[e] & bit(x)) != 0;
        if (ok) admissible.push_back(&member.set);
      }
      const SoftSet& pick = *admissible[uniform_index(rng, admissible.size())];
      for (std::size_t e = 0; e < m; ++e) table[e * n + x] = pick[e];
    }
  }
  return SoftAuraSpace(std::move(topology), ScopeAccess::make(ctx, std::move(table)));
}

inline SoftAuraSpace random_space(std::mt19937_64& rng, std::size_t n, std::size_t m, FamilyTopology kind) {
  auto ctx = make_context(n, m);
  auto topology = kind == FamilyTopology::Discrete
                      ? std::make_shared<const SoftTopology>(SoftTopology::discrete(ctx))
                      : random_generated_topology(rng, ctx);
  return random_space(rng, ctx, std::move(topology));
}

// ---------------------------------------------------------------------------
// Oracles: literal per-element evaluation by identifier, sharing nothing with
// the column kernels in operators.hpp.

inline SoftSet oracle_closure(const SoftAuraSpace& space, const SoftSet& g) {
  const auto& ctx = space.ctx();
  NamedSlices out;
  for (const auto& param : ctx.parameters()) {
    const auto e = ctx.parameter_index(param);
    auto& slice = out[param];
    for (const auto& x : ctx.points()) {
      const SoftSet scope = space.scope().of(ctx.point_index(x));
      bool meets = false;
      for (const auto& y : ctx.points()) {
        const auto yi = ctx.point_index(y);
        if (scope.contains(yi, e) && g.contains(yi, e)) meets = true;
      }
      if (meets) slice.push_back(x);
    }
  }
  return make_soft_set(space.context(), out);
}

inline SoftSet oracle_interior(const SoftAuraSpace& space, const SoftSet& g) {
  const auto& ctx = space.ctx();
  NamedSlices out;
  for (const auto& param : ctx.parameters()) {
    const auto e = ctx.parameter_index(param);
    auto& slice = out[param];
    for (const auto& x : ctx.points()) {
      const SoftSet scope = space.scope().of(ctx.point_index(x));
      bool contained = true;
      for (const auto& y : ctx.points()) {
        const auto yi = ctx.point_index(y);
        if (scope.contains(yi, e) && !g.contains(yi, e)) contained = false;
      }
      if (contained) slice.push_back(x);
    }
  }
  return make_soft_set(space.context(), out);
}

// ---------------------------------------------------------------------------
// Witnesses and the law suite

struct Witness {
  std::string law;
  /// (|X|, |E|, space index, set codes...): lexicographically smaller is canonical.
  std::vector<std::uint64_t> rank;
  std::size_t universe = 0;
  std::size_t params = 0;
  /// Parameter-major scope table of the space.
  std::vector<PointMask> scope;
  /// Involved soft sets as slice vectors.
  std::vector<std::vector<PointMask>> sets;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Rebuilds the witness space over the discrete topology. The aura
/// operators depend only on the scope.
inline SoftAuraSpace replay_space(const Witness& w) { return discrete_space(make_context(w.universe, w.params), w.scope); }

inline SoftSet replay_set(const Witness& w, std::size_t i) {
  return SoftSet(make_context(w.universe, w.params), w.sets.at(i));
}

struct LawTally {
  std::string name;
  std::string group;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;  // first few, canonical order
};

struct RemarkTally {
  std::string name;
  std::uint64_t occurrences = 0;
  std::optional<Witness> first;
};

struct StrictnessEdge {
  std::string name;
  std::string description;
  std::optional<Witness> witness;
  bool replayed = false;
};

struct SuiteReport {
  SpaceFamilySpec spec;
  std::uint64_t spaces = 0;
  std::uint64_t sets = 0;
  std::vector<LawTally> laws;
  std::vector<StrictnessEdge> strictness;
  std::vector<RemarkTally> remarks;

  std::uint64_t total_failures() const {
    std::uint64_t f = 0;
    for (const auto& l : laws) f += l.failures;
    return f;
  }

  const LawTally* law(const std::string& name) const {
    for (const auto& l : laws) {
      if (l.name == name) return &l;
    }
    return nullptr;
  }

  const RemarkTally* remark(const std::string& name) const {
    for (const auto& r : remarks) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
};

/// The five hierarchy edges, each separated by a set with the right-hand
/// class and without the left-hand one (Čech closure).
struct EdgeSpec {
  const char* name;
  const char* description;
  bool (*separates)(const OpennessProfile&);
};

inline const std::array<EdgeSpec, 5>& hierarchy_edges() {
  static const std::array<EdgeSpec, 5> edges{{
      {"open=>alpha", "alpha-open but not aura-open", [](const OpennessProfile& p) { return p.alpha && !p.open; }},
      {"alpha=>semi", "semi-open but not alpha-open", [](const OpennessProfile& p) { return p.semi && !p.alpha; }},
      {"alpha=>pre", "pre-open but not alpha-open", [](const OpennessProfile& p) { return p.pre && !p.alpha; }},
      {"semi|pre=>b", "b-open but neither semi-open nor pre-open",
       [](const OpennessProfile& p) { return p.b && !p.semi && !p.pre; }},
      {"b=>beta", "beta-open but not b-open", [](const OpennessProfile& p) { return p.beta && !p.b; }},
  }};
  return edges;
}

/// Re-classifies the witness set and checks it still separates its edge.
inline bool replay_strictness(const Witness& w) {
  for (const auto& edge : hierarchy_edges()) {
    if (w.law == edge.name) return edge.separates(classify(replay_space(w), replay_set(w, 0), ClosureKind::Cech));
  }
  return false;
}

namespace detail {

inline constexpr std::size_t max_witnesses_per_law = 3;

struct Derived {
  SoftSet cl;
  SoftSet in;
  KuratowskiResult kur;
  OpennessProfile cech;
  OpennessProfile kuratowski;
};

inline Derived derive(const SoftAuraSpace& space, const SoftSet& g) {
  return {aura_closure(space, g), aura_interior(space, g), kuratowski_closure(space, g),
          classify(space, g, ClosureKind::Cech), classify(space, g, ClosureKind::Kuratowski)};
}

class SuiteRunner {
 public:
  explicit SuiteRunner(const SpaceFamilySpec& spec) : spec_(spec) {
    report_.spec = spec;
    for (const auto& edge : hierarchy_edges()) report_.strictness.push_back({edge.name, edge.description, {}, false});
  }

  bool enabled(const char* group) const { return spec_.laws.empty() || spec_.laws.contains(group); }

  void run() {
    check_guards(spec_);
    if (spec_.exhaustive()) {
      std::mt19937_64 rng(spec_.seed);
      for (std::size_t n = 1; n <= spec_.max_universe; ++n) {
        for (std::size_t m = 1; m <= spec_.max_params; ++m) {
          auto ctx = make_context(n, m);
          auto topology = spec_.topology == FamilyTopology::Discrete
                              ? std::make_shared<const SoftTopology>(SoftTopology::discrete(ctx))
                              : random_generated_topology(rng, ctx);
          const auto sets = all_soft_sets(ctx, spec_.cap);
          ScopeEnumerator it(ctx, topology, spec_.cap);
          std::uint64_t index = 0;
          while (auto space = it.next_space()) evaluate(*space, index++, sets, true);
        }
      }
    } else {
      std::mt19937_64 rng(spec_.seed);
      for (std::uint64_t k = 0; k < *spec_.sampled_spaces; ++k) {
        const std::size_t n = 1 + uniform_index(rng, spec_.max_universe);
        const std::size_t m = 1 + uniform_index(rng, spec_.max_params);
        auto space = random_space(rng, n, m, spec_.topology);
        std::vector<SoftSet> sets;
        for (std::size_t i = 0; i < spec_.sets_per_space; ++i) sets.push_back(random_soft_set(rng, space.context()));
        evaluate(space, k, sets, false);
      }
    }
    for (auto& edge : report_.strictness) {
      if (edge.witness) edge.replayed = replay_strictness(*edge.witness);
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  LawTally& tally(const std::string& name, const char* group) {
    auto it = law_index_.find(name);
    if (it == law_index_.end()) {
      it = law_index_.emplace(name, report_.laws.size()).first;
      report_.laws.push_back({name, group, 0, 0, {}});
    }
    return report_.laws[it->second];
  }

  Witness make_witness(const std::string& law, const SoftAuraSpace& space, std::uint64_t index,
                       std::initializer_list<const SoftSet*> sets, std::string detail) const {
    Witness w;
    w.law = law;
    w.universe = space.ctx().universe_size();
    w.params = space.ctx().parameter_count();
    w.rank = {w.universe, w.params, index};
    w.scope = ScopeAccess::table(space.scope());
    for (const auto* s : sets) {
      w.rank.push_back(code_of(*s));
      w.sets.emplace_back(s->slices().begin(), s->slices().end());
    }
    w.detail = std::move(detail);
    return w;
  }

  void check(const char* group, const std::string& law, bool ok, const SoftAuraSpace& space, std::uint64_t index,
             std::initializer_list<const SoftSet*> sets, const char* detail = "") {
    auto& t = tally(law, group);
    ++t.checks;
    if (ok) return;
    ++t.failures;
    if (t.witnesses.size() < max_witnesses_per_law) t.witnesses.push_back(make_witness(law, space, index, sets, detail));
  }

  void remark(const std::string& name, const SoftAuraSpace& space, std::uint64_t index,
              std::initializer_list<const SoftSet*> sets, std::string detail) {
    auto it = remark_index_.find(name);
    if (it == remark_index_.end()) {
      it = remark_index_.emplace(name, report_.remarks.size()).first;
      report_.remarks.push_back({name, 0, std::nullopt});
    }
    auto& r = report_.remarks[it->second];
    ++r.occurrences;
    if (!r.first) r.first = make_witness(name, space, index, sets, std::move(detail));
  }

  void touch_remark(const std::string& name) {
    if (!remark_index_.contains(name)) {
      remark_index_.emplace(name, report_.remarks.size());
      report_.remarks.push_back({name, 0, std::nullopt});
    }
  }

  void evaluate(const SoftAuraSpace& space, std::uint64_t index, const std::vector<SoftSet>& sets, bool tabulated) {
    ++report_.spaces;
    report_.sets += sets.size();
    const auto& ctx = space.context();
    const SoftSet null = SoftSet::null(ctx);
    const SoftSet absolute = SoftSet::absolute(ctx);
    const std::size_t n = ctx->universe_size();

    std::vector<Derived> table;
    table.reserve(sets.size());
    for (const auto& g : sets) table.push_back(derive(space, g));
    auto lookup = [&](const SoftSet& s) -> Derived {
      if (tabulated) return table[code_of(s)];
      return derive(space, s);
    };

    if (enabled("closure")) {
      check("closure", "closure.grounding", aura_closure(space, null) == null, space, index, {});
    }
    if (enabled("interior")) {
      check("interior", "interior.absolute", aura_interior(space, absolute) == absolute, space, index, {});
    }
    if (enabled("separation")) evaluate_separation(space, index);
    if (enabled("rough")) {
      check("rough", "rough.fixed-points",
            lower_approximation(space, null) == null && upper_approximation(space, null) == null &&
                lower_approximation(space, absolute) == absolute && upper_approximation(space, absolute) == absolute,
            space, index, {});
    }
    touch_remark("decomposition.cech-set-level");
    touch_remark("alpha-intersection.cech");
    touch_remark("alpha-intersection.kuratowski");

    for (std::size_t i = 0; i < sets.size(); ++i) {
      const SoftSet& g = sets[i];
      const Derived& d = table[i];
      if (enabled("closure")) check("closure", "closure.enlargement", is_subset(g, d.cl), space, index, {&g});
      if (enabled("interior")) check("interior", "interior.contraction", is_subset(d.in, g), space, index, {&g});
      if (enabled("duality")) {
        const SoftSet gc = complement(g);
        check("duality", "duality",
              aura_closure(space, gc) == complement(d.in) && aura_interior(space, gc) == complement(d.cl), space, index,
              {&g});
      }
      if (enabled("oracle")) {
        check("oracle", "oracle.closure", oracle_closure(space, g) == d.cl, space, index, {&g});
        check("oracle", "oracle.interior", oracle_interior(space, g) == d.in, space, index, {&g});
      }
      if (enabled("kuratowski")) {
        check("kuratowski", "kuratowski.idempotent", kuratowski_closure(space, d.kur.closure).closure == d.kur.closure &&
                                                         aura_closure(space, d.kur.closure) == d.kur.closure,
              space, index, {&g});
        bool bounded = true;
        for (auto k : d.kur.iterations) bounded = bounded && k >= 1 && k <= n;
        check("kuratowski", "kuratowski.iteration-bound", bounded, space, index, {&g});
        check("kuratowski", "kuratowski.contains-cech", is_subset(d.cl, d.kur.closure), space, index, {&g});
      }
      if (enabled("aura-topology")) {
        // cl∞-closed complement implies aura-open.
        const SoftSet gc = complement(g);
        if (kuratowski_closure(space, gc).closure == gc) {
          check("aura-topology", "aura-topology.kuratowski-open-inclusion", d.in == g, space, index, {&g});
        }
      }
      if (enabled("hierarchy")) {
        check("hierarchy", "hierarchy.cech", d.cech.satisfies_hierarchy(), space, index, {&g});
        check("hierarchy", "hierarchy.kuratowski", d.kuratowski.satisfies_hierarchy(), space, index, {&g});
      }
      if (enabled("decomposition")) {
        check("decomposition", "decomposition.kuratowski-set-level",
              d.kuratowski.alpha == (d.kuratowski.semi && d.kuratowski.pre), space, index, {&g});
        if (d.cech.alpha != (d.cech.semi && d.cech.pre)) {
          remark("decomposition.cech-set-level", space, index, {&g}, "semi and pre-open but not alpha-open");
        }
      }
      if (enabled("rough")) evaluate_rough_unary(space, index, g, d);
      if (spec_.strictness) {
        for (std::size_t k = 0; k < hierarchy_edges().size(); ++k) {
          auto& edge = report_.strictness[k];
          if (!edge.witness && hierarchy_edges()[k].separates(d.cech)) {
            edge.witness = make_witness(edge.name, space, index, {&g}, edge.description);
          }
        }
      }
    }

    // Pairs: every ordered pair when tabulated, consecutive pairs otherwise.
    auto pair = [&](std::size_t i, std::size_t j) {
      const SoftSet& g = sets[i];
      const SoftSet& h = sets[j];
      const Derived& dg = table[i];
      const Derived& dh = table[j];
      const SoftSet join = soft_union(g, h);
      const SoftSet meet = soft_intersection(g, h);
      const Derived dj = lookup(join);
      const Derived dm = lookup(meet);
      const bool nested = is_subset(g, h);
      if (enabled("closure")) {
        if (nested) check("closure", "closure.monotone", is_subset(dg.cl, dh.cl), space, index, {&g, &h});
        check("closure", "closure.additive", dj.cl == soft_union(dg.cl, dh.cl), space, index, {&g, &h});
      }
      if (enabled("interior")) {
        if (nested) check("interior", "interior.monotone", is_subset(dg.in, dh.in), space, index, {&g, &h});
        check("interior", "interior.multiplicative", dm.in == soft_intersection(dg.in, dh.in), space, index, {&g, &h});
      }
      if (enabled("kuratowski")) {
        check("kuratowski", "kuratowski.additive", dj.kur.closure == soft_union(dg.kur.closure, dh.kur.closure), space,
              index, {&g, &h});
      }
      if (enabled("aura-topology") && dg.cech.open && dh.cech.open) {
        check("aura-topology", "aura-topology.union", dj.cech.open, space, index, {&g, &h});
        check("aura-topology", "aura-topology.intersection", dm.cech.open, space, index, {&g, &h});
      }
      if (enabled("union-closure")) {
        if (dg.cech.semi && dh.cech.semi) check("union-closure", "union-closure.semi", dj.cech.semi, space, index, {&g, &h});
        if (dg.cech.pre && dh.cech.pre) check("union-closure", "union-closure.pre", dj.cech.pre, space, index, {&g, &h});
        if (dg.cech.beta && dh.cech.beta) check("union-closure", "union-closure.beta", dj.cech.beta, space, index, {&g, &h});
      }
      if (dg.cech.alpha && dh.cech.alpha && !dm.cech.alpha) {
        remark("alpha-intersection.cech", space, index, {&g, &h}, "intersection of alpha-open sets is not alpha-open");
      }
      if (dg.kuratowski.alpha && dh.kuratowski.alpha && !dm.kuratowski.alpha) {
        remark("alpha-intersection.kuratowski", space, index, {&g, &h},
               "intersection of alpha-open sets is not alpha-open");
      }
      if (enabled("rough")) {
        if (nested) {
          check("rough", "rough.monotone",
                is_subset(lower_approximation(space, g), lower_approximation(space, h)) &&
                    is_subset(upper_approximation(space, g), upper_approximation(space, h)),
                space, index, {&g, &h});
        }
        check("rough", "rough.upper-union",
              upper_approximation(space, join) == soft_union(upper_approximation(space, g), upper_approximation(space, h)),
              space, index, {&g, &h});
        check("rough", "rough.lower-intersection",
              lower_approximation(space, meet) ==
                  soft_intersection(lower_approximation(space, g), lower_approximation(space, h)),
              space, index, {&g, &h});
      }
    };
    if (tabulated) {
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) pair(i, j);
      }
    } else {
      for (std::size_t i = 0; i + 1 < sets.size(); ++i) pair(i, i + 1);
    }
  }

  void evaluate_rough_unary(const SoftAuraSpace& space, std::uint64_t index, const SoftSet& g, const Derived& d) {
    const auto report = approximate(space, g);
    check("rough", "rough.delegation", report.lower == d.in && report.upper == d.cl, space, index, {&g});
    check("rough", "rough.sandwich", is_subset(report.lower, g) && is_subset(g, report.upper), space, index, {&g});
    const SoftSet gc = complement(g);
    check("rough", "rough.duality",
          lower_approximation(space, gc) == complement(report.upper) &&
              upper_approximation(space, gc) == complement(report.lower),
          space, index, {&g});
    const auto& acc = report.accuracy;
    const bool in_range = acc.value.numerator() <= acc.value.denominator();
    const bool is_one = acc.value == Rational(1, 1);
    const bool convention_ok = !acc.convention_applied || report.upper.is_null();
    check("rough", "rough.accuracy", in_range && (is_one == report.boundary.is_null()) && convention_ok, space, index,
          {&g});
  }

  void evaluate_separation(const SoftAuraSpace& space, std::uint64_t index) {
    const auto r = separation_report(space, spec_.cap);
    check("separation", "separation.t1-iff-t2", r.t1 == r.t2, space, index, {});
    check("separation", "separation.t1-implies-t0", !r.t1 || r.t0, space, index, {});
    check("separation", "separation.t3-implies-t2", !r.t3 || r.t2, space, index, {});
    check("separation", "separation.t1-singleton-scopes", r.t1 == t1_via_singleton_scopes(space), space, index, {});
    check("separation", "separation.t1-singleton-closure", t1_singleton_closure(space).holds, space, index, {});
  }

  SpaceFamilySpec spec_;
  SuiteReport report_;
  std::map<std::string, std::size_t> law_index_;
  std::map<std::string, std::size_t> remark_index_;
};

}  // namespace detail

inline SuiteReport run_law_suite(const SpaceFamilySpec& spec) {
  detail::SuiteRunner runner(spec);
  runner.run();
  return runner.take();
}

/// Strictness witnesses only: minimal-rank (space, set) per hierarchy edge.
inline std::vector<StrictnessEdge> find_strictness_witnesses(SpaceFamilySpec spec) {
  spec.laws = {"none"};
  spec.strictness = true;
  return run_law_suite(spec).strictness;
}

// ---------------------------------------------------------------------------
// Mapping family: decomposition over every soft mapping between small spaces.

struct MappingWitness {
  std::size_t source_universe = 0, source_params = 0;
  std::vector<PointMask> source_scope;
  std::size_t target_universe = 0, target_params = 0;
  std::vector<PointMask> target_scope;
  std::vector<std::size_t> point_map;
  std::vector<std::size_t> param_map;

  SoftMapping mapping() const {
    return SoftMapping(discrete_space(make_context(source_universe, source_params), source_scope),
                       discrete_space(make_context(target_universe, target_params), target_scope), point_map,
                       param_map);
  }
};

struct DecompositionFamilyReport {
  std::size_t max_universe = 0;
  std::size_t max_params = 0;
  /// Number of (source space, target space, u, p) combinations covered.
  std::uint64_t mappings = 0;
  /// Distinct (source size, preimage family) classes actually evaluated.
  std::uint64_t preimage_families = 0;
  std::uint64_t kuratowski_failures = 0;
  std::uint64_t cech_failures = 0;
  std::optional<MappingWitness> first_kuratowski_failure;
  std::optional<MappingWitness> first_cech_failure;
};

namespace detail {

/// All maps from a set of `from` elements into `to` elements, first element most significant.
inline std::vector<std::vector<std::size_t>> all_functions(std::size_t from, std::size_t to) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(from, 0);
  for (;;) {
    out.push_back(f);
    std::size_t i = from;
    while (i-- > 0) {
      if (++f[i] < to) break;
      f[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return out;
  }
}

struct ClassMasks {
  // Bit `code` set when the soft set with that code is in the class.
  std::uint64_t open = 0, alpha = 0, semi = 0, pre = 0, beta = 0;

  ContinuityProfile profile(std::uint64_t family, ClosureKind kind) const {
    ContinuityProfile p;
    p.kind = kind;
    p.continuous = (family & ~open) == 0;
    p.alpha = (family & ~alpha) == 0;
    p.semi = (family & ~semi) == 0;
    p.pre = (family & ~pre) == 0;
    p.beta = (family & ~beta) == 0;
    return p;
  }
};

}  // namespace detail

/// Decomposition of α-continuity over every soft mapping between discrete
/// spaces with |X|,|Y| <= max_universe_size and |E|,|K| <= max_params.
///
/// Continuity of f only depends on the source space and on the family
/// {f⁻¹(V) : V aura-open in the target}, so mappings are grouped by that
/// family (a bitmask over source soft-set codes) and every class is decided
/// once per source space from per-class membership masks.
inline DecompositionFamilyReport run_decomposition_family(std::size_t max_universe_size, std::size_t max_params) {
  if (max_universe_size * max_params > 6) {
    throw Error(ErrorKind::SizeGuard, "mapping family needs |X|·|E| <= 6 (64 source soft sets)");
  }
  DecompositionFamilyReport report;
  report.max_universe = max_universe_size;
  report.max_params = max_params;

  struct TargetGroup {
    std::vector<std::vector<PointMask>> families;  // per-parameter aura-open slices
    std::uint64_t spaces = 0;
    MappingWitness representative;  // target part only
  };
  struct FamilyInfo {
    std::uint64_t multiplicity = 0;
    MappingWitness representative;  // target, u, p filled in
  };

  // Group target spaces by their aura topology.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<TargetGroup>> targets;
  for (std::size_t n = 1; n <= max_universe_size; ++n) {
    for (std::size_t m = 1; m <= max_params; ++m) {
      auto ctx = make_context(n, m);
      std::map<std::vector<std::vector<PointMask>>, std::size_t> seen;
      auto& groups = targets[{n, m}];
      ScopeEnumerator it(ctx, std::make_shared<const SoftTopology>(SoftTopology::discrete(ctx)));
      while (auto space = it.next_space()) {
        std::vector<std::vector<PointMask>> families;
        for (std::size_t e = 0; e < m; ++e) families.push_back(per_parameter_alexandrov(*space, e));
        auto [pos, inserted] = seen.emplace(families, groups.size());
        if (inserted) {
          MappingWitness w;
          w.target_universe = n;
          w.target_params = m;
          w.target_scope = ScopeAccess::table(space->scope());
          groups.push_back({families, 0, std::move(w)});
        }
        ++groups[pos->second].spaces;
      }
    }
  }

  for (std::size_t n = 1; n <= max_universe_size; ++n) {
    for (std::size_t m = 1; m <= max_params; ++m) {
      // Preimage families reachable from any target, map and parameter map.
      std::map<std::uint64_t, FamilyInfo> families;
      for (const auto& [size, groups] : targets) {
        const auto [tn, tm] = size;
        const auto point_maps = detail::all_functions(n, tn);
        const auto param_maps = detail::all_functions(m, tm);
        for (const auto& group : groups) {
          // Enumerate τ_b as a product of per-parameter slices.
          std::vector<std::size_t> digit(tm, 0);
          std::vector<std::vector<PointMask>> opens;
          for (;;) {
            std::vector<PointMask> v(tm);
            for (std::size_t k = 0; k < tm; ++k) v[k] = group.families[k][digit[k]];
            opens.push_back(std::move(v));
            std::size_t k = tm;
            while (k-- > 0) {
              if (++digit[k] < group.families[k].size()) break;
              digit[k] = 0;
            }
            if (k == static_cast<std::size_t>(-1)) break;
          }
          for (const auto& u : point_maps) {
            for (const auto& p : param_maps) {
              std::uint64_t family = 0;
              for (const auto& v : opens) {
                std::uint64_t code = 0;
                for (std::size_t e = 0; e < m; ++e) {
                  code |= static_cast<std::uint64_t>(preimage_slice(u, v[p[e]])) << ((m - 1 - e) * n);
                }
                family |= std::uint64_t{1} << code;
              }
              auto& info = families[family];
              if (info.multiplicity == 0) {
                info.representative = group.representative;
                info.representative.point_map = u;
                info.representative.param_map = p;
              }
              info.multiplicity += group.spaces;
            }
          }
        }
      }
      report.preimage_families += families.size();

      auto ctx = make_context(n, m);
      const auto sets = all_soft_sets(ctx);
      ScopeEnumerator it(ctx, std::make_shared<const SoftTopology>(SoftTopology::discrete(ctx)));
      while (auto space = it.next_space()) {
        detail::ClassMasks cech, kur;
        for (std::size_t code = 0; code < sets.size(); ++code) {
          const auto pc = classify(*space, sets[code], ClosureKind::Cech);
          const auto pk = classify(*space, sets[code], ClosureKind::Kuratowski);
          const std::uint64_t b = std::uint64_t{1} << code;
          if (pc.open) cech.open |= b;
          if (pc.alpha) cech.alpha |= b;
          if (pc.semi) cech.semi |= b;
          if (pc.pre) cech.pre |= b;
          if (pc.beta) cech.beta |= b;
          if (pk.open) kur.open |= b;
          if (pk.alpha) kur.alpha |= b;
          if (pk.semi) kur.semi |= b;
          if (pk.pre) kur.pre |= b;
          if (pk.beta) kur.beta |= b;
        }
        for (const auto& [family, info] : families) {
          report.mappings += info.multiplicity;
          auto witness = [&] {
            MappingWitness w = info.representative;
            w.source_universe = n;
            w.source_params = m;
            w.source_scope = ScopeAccess::table(space->scope());
            return w;
          };
          const auto pk = kur.profile(family, ClosureKind::Kuratowski);
          if (pk.alpha != (pk.semi && pk.pre)) {
            report.kuratowski_failures += info.multiplicity;
            if (!report.first_kuratowski_failure) report.first_kuratowski_failure = witness();
          }
          const auto pc = cech.profile(family, ClosureKind::Cech);
          if (pc.alpha != (pc.semi && pc.pre)) {
            report.cech_failures += info.multiplicity;
            if (!report.first_cech_failure) report.first_cech_failure = witness();
          }
        }
      }
    }
  }
  return report;
}

}  // namespace softaura::harness
