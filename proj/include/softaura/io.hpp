#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "softaura/error.hpp"
#include "softaura/genopen.hpp"
#include "softaura/harness.hpp"
#include "softaura/mapping.hpp"
#include "softaura/rough.hpp"
#include "softaura/separation.hpp"
#include "softaura/space.hpp"
#include "softaura/topology.hpp"

namespace softaura::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Documents

enum class TopologyKind { Discrete, Indiscrete, Explicit, Generated };

constexpr std::string_view to_string(TopologyKind k) noexcept {
  switch (k) {
    case TopologyKind::Discrete: return "discrete";
    case TopologyKind::Indiscrete: return "indiscrete";
    case TopologyKind::Explicit: return "explicit";
    case TopologyKind::Generated: return "generated";
  }
  return "unknown";
}

/// Scope entry: a reference to a named set, or inline slices.
using ScopeEntry = std::variant<std::string, NamedSlices>;

struct SpaceDocument {
  std::vector<std::string> universe;
  std::vector<std::string> parameters;
  TopologyKind topology = TopologyKind::Discrete;
  /// Explicit members or generating subbasis, by name.
  std::map<std::string, NamedSlices> topology_sets;
  std::map<std::string, ScopeEntry> scope;
  std::map<std::string, NamedSlices> named_sets;

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidDocument, where + ": " + what);
}

inline const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing key '") + key + "'");
  return *it;
}

inline std::vector<std::string> string_array(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) schema_error(where, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline NamedSlices slices_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected parameter -> point array");
  NamedSlices out;
  for (const auto& [param, points] : j.items()) out[param] = string_array(points, where + "/" + param);
  return out;
}

inline std::map<std::string, NamedSlices> named_sets_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected name -> soft set");
  std::map<std::string, NamedSlices> out;
  for (const auto& [name, slices] : j.items()) out[name] = slices_from_json(slices, where + "/" + name);
  return out;
}

}  // namespace detail

inline SpaceDocument parse_space_document(const json& j) {
  using namespace detail;
  SpaceDocument doc;
  if (!j.is_object()) schema_error("/", "a space document is a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "universe" && key != "parameters" && key != "topology" && key != "scope" && key != "namedSets") {
      schema_error("/", "unknown key '" + key + "'");
    }
  }
  doc.universe = string_array(member(j, "universe", "/"), "/universe");
  doc.parameters = string_array(member(j, "parameters", "/"), "/parameters");

  if (auto it = j.find("topology"); it != j.end()) {
    const auto& kind = member(*it, "kind", "/topology");
    if (!kind.is_string()) schema_error("/topology/kind", "expected a string");
    const auto k = kind.get<std::string>();
    if (k == "discrete") {
      doc.topology = TopologyKind::Discrete;
    } else if (k == "indiscrete") {
      doc.topology = TopologyKind::Indiscrete;
    } else if (k == "explicit") {
      doc.topology = TopologyKind::Explicit;
      doc.topology_sets = named_sets_from_json(member(*it, "sets", "/topology"), "/topology/sets");
    } else if (k == "generated") {
      doc.topology = TopologyKind::Generated;
      doc.topology_sets = named_sets_from_json(member(*it, "subbasis", "/topology"), "/topology/subbasis");
    } else {
      schema_error("/topology/kind", "unknown topology kind '" + k + "'");
    }
  }

  const auto& scope = member(j, "scope", "/");
  if (!scope.is_object()) schema_error("/scope", "expected point -> set name or slices");
  for (const auto& [point, entry] : scope.items()) {
    if (entry.is_string()) {
      doc.scope[point] = entry.get<std::string>();
    } else {
      doc.scope[point] = slices_from_json(entry, "/scope/" + point);
    }
  }
  if (auto it = j.find("namedSets"); it != j.end()) doc.named_sets = named_sets_from_json(*it, "/namedSets");
  return doc;
}

inline SpaceDocument parse_space_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidDocument, std::string("parse error: ") + e.what());
  }
  return parse_space_document(j);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidDocument, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline json slices_to_json(const NamedSlices& s) {
  json out = json::object();
  for (const auto& [param, points] : s) out[param] = points;
  return out;
}

inline json soft_set_to_json(const SoftSet& s) { return slices_to_json(to_named_slices(s)); }

inline json to_json(const SpaceDocument& doc) {
  json out;
  out["universe"] = doc.universe;
  out["parameters"] = doc.parameters;
  json topology;
  topology["kind"] = std::string(to_string(doc.topology));
  if (doc.topology == TopologyKind::Explicit || doc.topology == TopologyKind::Generated) {
    json sets = json::object();
    for (const auto& [name, slices] : doc.topology_sets) sets[name] = slices_to_json(slices);
    topology[doc.topology == TopologyKind::Explicit ? "sets" : "subbasis"] = sets;
  }
  out["topology"] = topology;
  json scope = json::object();
  for (const auto& [point, entry] : doc.scope) {
    if (const auto* ref = std::get_if<std::string>(&entry)) {
      scope[point] = *ref;
    } else {
      scope[point] = slices_to_json(std::get<NamedSlices>(entry));
    }
  }
  out["scope"] = scope;
  if (!doc.named_sets.empty()) {
    json named = json::object();
    for (const auto& [name, slices] : doc.named_sets) named[name] = slices_to_json(slices);
    out["namedSets"] = named;
  }
  return out;
}

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Result of turning a document into a space. `violations` is non-empty
/// exactly when `space` is absent.
struct LoadedSpace {
  ContextPtr context;
  std::optional<SoftAuraSpace> space;
  std::vector<std::string> violations;
  /// namedSets, topology member names, "null" and "absolute".
  std::map<std::string, SoftSet> sets;

  const SoftAuraSpace& require() const {
    if (!space) throw Error(ErrorKind::PreconditionUnmet, "invalid space: " + violations.front());
    return *space;
  }

  SoftSet set(const std::string& name) const {
    auto it = sets.find(name);
    if (it == sets.end()) throw Error(ErrorKind::NotFound, "no set named '" + name + "'");
    return it->second;
  }
};

namespace detail {

inline std::string error_line(const Error& e) { return e.what(); }

}  // namespace detail

/// Builds the context, the topology and the scope. Identifier and axiom
/// problems become violations; only resource limits propagate.
inline LoadedSpace load_space(const SpaceDocument& doc, std::size_t cap = default_cap) {
  LoadedSpace out;
  try {
    out.context = Context::make(doc.universe, doc.parameters);
  } catch (const Error& e) {
    out.violations.push_back(detail::error_line(e));
    return out;
  }
  const auto& ctx = out.context;

  auto build = [&](const std::map<std::string, NamedSlices>& sets, const char* where) {
    std::vector<NamedSoftSet> result;
    for (const auto& [name, slices] : sets) {
      try {
        result.push_back({name, make_soft_set(ctx, slices)});
      } catch (const Error& e) {
        out.violations.push_back(std::string(where) + " '" + name + "': " + detail::error_line(e));
      }
    }
    return result;
  };

  std::shared_ptr<const SoftTopology> topology;
  switch (doc.topology) {
    case TopologyKind::Discrete:
      topology = std::make_shared<const SoftTopology>(SoftTopology::discrete(ctx));
      break;
    case TopologyKind::Indiscrete:
      topology = std::make_shared<const SoftTopology>(SoftTopology::indiscrete(ctx));
      break;
    case TopologyKind::Explicit: {
      auto members = build(doc.topology_sets, "topology set");
      if (!out.violations.empty()) return out;
      // Φ̃ and X̃ are implicit members.
      members.insert(members.begin(), {{"null", SoftSet::null(ctx)}, {"absolute", SoftSet::absolute(ctx)}});
      try {
        auto check = validate_topology(ctx, std::move(members));
        if (const auto* v = std::get_if<TopologyViolation>(&check)) {
          std::string line = std::string(to_string(v->kind));
          if (!v->left.empty()) line += "(" + v->left + ", " + v->right + ")";
          out.violations.push_back("topology: " + line);
          return out;
        }
        topology = std::make_shared<const SoftTopology>(std::get<SoftTopology>(std::move(check)));
      } catch (const Error& e) {
        if (e.is_resource_limit()) throw;
        out.violations.push_back("topology: " + detail::error_line(e));
        return out;
      }
      break;
    }
    case TopologyKind::Generated: {
      auto subbasis = build(doc.topology_sets, "subbasis set");
      if (!out.violations.empty()) return out;
      topology = std::make_shared<const SoftTopology>(generate_topology(ctx, subbasis, cap));
      break;
    }
  }

  out.sets.emplace("null", SoftSet::null(ctx));
  out.sets.emplace("absolute", SoftSet::absolute(ctx));
  if (topology->is_extensional()) {
    for (const auto& m : topology->members()) out.sets.insert_or_assign(m.name, m.set);
    for (const auto& [name, slices] : doc.topology_sets) {
      if (auto s = topology->find(name)) out.sets.insert_or_assign(name, *s);
    }
  }
  for (auto& m : build(doc.named_sets, "named set")) out.sets.insert_or_assign(m.name, m.set);

  std::vector<std::optional<SoftSet>> assignment(ctx->universe_size());
  for (const auto& [point, entry] : doc.scope) {
    const auto x = ctx->find_point(point);
    if (!x) {
      out.violations.push_back("scope: UnknownPoint: '" + point + "'");
      continue;
    }
    if (const auto* ref = std::get_if<std::string>(&entry)) {
      auto it = out.sets.find(*ref);
      if (it == out.sets.end()) {
        out.violations.push_back("scope of " + point + ": NotFound: no set named '" + *ref + "'");
        continue;
      }
      assignment[*x] = it->second;
    } else {
      try {
        assignment[*x] = make_soft_set(ctx, std::get<NamedSlices>(entry));
      } catch (const Error& e) {
        out.violations.push_back("scope of " + point + ": " + detail::error_line(e));
      }
    }
  }
  if (!out.violations.empty()) return out;

  auto check = make_space(topology, assignment);
  if (auto* v = std::get_if<std::vector<ScopeViolation>>(&check)) {
    for (const auto& violation : *v) out.violations.push_back(describe(violation));
    return out;
  }
  out.space = std::get<SoftAuraSpace>(std::move(check));
  return out;
}

inline LoadedSpace load_space_file(const std::filesystem::path& path, std::size_t cap = default_cap) {
  return load_space(parse_space_document(read_file(path)), cap);
}

/// Document describing an existing space; scopes are written inline.
inline SpaceDocument document_of(const SoftAuraSpace& space) {
  SpaceDocument doc;
  doc.universe = space.ctx().points();
  doc.parameters = space.ctx().parameters();
  if (space.topology().is_discrete()) {
    doc.topology = TopologyKind::Discrete;
  } else {
    doc.topology = TopologyKind::Explicit;
    for (const auto& m : space.topology().members()) {
      if (m.set.is_null() || m.set.is_absolute()) continue;
      doc.topology_sets[m.name] = to_named_slices(m.set);
    }
  }
  for (std::size_t x = 0; x < space.ctx().universe_size(); ++x) {
    doc.scope[space.ctx().points()[x]] = to_named_slices(space.scope().of(x));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Mappings

struct MappingDocument {
  /// Path (relative to the mapping file) or embedded document.
  std::variant<std::string, SpaceDocument> source;
  std::variant<std::string, SpaceDocument> target;
  std::map<std::string, std::string> point_map;
  std::map<std::string, std::string> param_map;

  friend bool operator==(const MappingDocument&, const MappingDocument&) = default;
};

inline MappingDocument parse_mapping_document(const json& j) {
  using namespace detail;
  MappingDocument doc;
  auto side = [&](const char* key) -> std::variant<std::string, SpaceDocument> {
    const auto& v = member(j, key, "/");
    if (v.is_string()) return v.get<std::string>();
    return parse_space_document(v);
  };
  doc.source = side("source");
  doc.target = side("target");
  auto table = [&](const char* key) {
    const auto& v = member(j, key, "/");
    if (!v.is_object()) schema_error(std::string("/") + key, "expected name -> name");
    std::map<std::string, std::string> out;
    for (const auto& [from, to] : v.items()) {
      if (!to.is_string()) schema_error(std::string("/") + key + "/" + from, "expected a string");
      out[from] = to.get<std::string>();
    }
    return out;
  };
  doc.point_map = table("pointMap");
  doc.param_map = table("paramMap");
  return doc;
}

inline json to_json(const MappingDocument& doc) {
  json out;
  auto side = [](const std::variant<std::string, SpaceDocument>& s) -> json {
    if (const auto* path = std::get_if<std::string>(&s)) return *path;
    return to_json(std::get<SpaceDocument>(s));
  };
  out["source"] = side(doc.source);
  out["target"] = side(doc.target);
  out["pointMap"] = doc.point_map;
  out["paramMap"] = doc.param_map;
  return out;
}

/// Loads both spaces and builds the mapping. Invalid spaces or tables throw.
inline SoftMapping load_mapping_file(const std::filesystem::path& path, std::size_t cap = default_cap) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidDocument, std::string("parse error: ") + e.what());
  }
  const auto doc = parse_mapping_document(j);
  auto load = [&](const std::variant<std::string, SpaceDocument>& side, const char* which) {
    LoadedSpace loaded = std::holds_alternative<std::string>(side)
                             ? load_space_file(path.parent_path() / std::get<std::string>(side), cap)
                             : load_space(std::get<SpaceDocument>(side), cap);
    if (!loaded.space) {
      throw Error(ErrorKind::PreconditionUnmet, std::string(which) + " space is invalid: " + loaded.violations.front());
    }
    return *loaded.space;
  };
  auto source = load(doc.source, "source");
  auto target = load(doc.target, "target");
  try {
    return SoftMapping::from_names(std::move(source), std::move(target), doc.point_map, doc.param_map);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidMapping) throw;
    throw Error(ErrorKind::InvalidMapping, e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const Accuracy& a) {
  json out;
  out["lowerSum"] = a.lower_sum;
  out["upperSum"] = a.upper_sum;
  out["numerator"] = a.value.numerator();
  out["denominator"] = a.value.denominator();
  out["decimal"] = a.value.decimal();
  out["conventionApplied"] = a.convention_applied;
  return out;
}

inline Accuracy accuracy_from_json(const json& j) {
  using detail::member;
  Accuracy a = make_accuracy(member(j, "lowerSum", "/accuracy").get<std::size_t>(),
                             member(j, "upperSum", "/accuracy").get<std::size_t>());
  const Rational stored(member(j, "numerator", "/accuracy").get<std::uint64_t>(),
                        member(j, "denominator", "/accuracy").get<std::uint64_t>());
  if (!(stored == a.value) || member(j, "conventionApplied", "/accuracy").get<bool>() != a.convention_applied) {
    detail::schema_error("/accuracy", "value disagrees with the sums");
  }
  return a;
}

inline json to_json(const ApproximationReport& r) {
  json out;
  out["target"] = soft_set_to_json(r.target);
  out["lower"] = soft_set_to_json(r.lower);
  out["upper"] = soft_set_to_json(r.upper);
  out["boundary"] = soft_set_to_json(r.boundary);
  out["accuracy"] = to_json(r.accuracy);
  json per = json::object();
  const auto& params = r.target.ctx().parameters();
  for (std::size_t e = 0; e < r.per_parameter.size(); ++e) per[params[e]] = to_json(r.per_parameter[e]);
  out["perParameter"] = per;
  return out;
}

inline ApproximationReport approximation_report_from_json(const json& j, const ContextPtr& ctx) {
  using detail::member;
  auto set = [&](const char* key) {
    try {
      return make_soft_set(ctx, detail::slices_from_json(member(j, key, "/"), std::string("/") + key));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidDocument) throw;
      throw Error(ErrorKind::InvalidDocument, std::string("/") + key + ": " + e.what());
    }
  };
  ApproximationReport r{set("target"), set("lower"), set("upper"), set("boundary"),
                        accuracy_from_json(member(j, "accuracy", "/")), {}};
  const auto& per = member(j, "perParameter", "/");
  for (const auto& p : ctx->parameters()) r.per_parameter.push_back(accuracy_from_json(member(per, p.c_str(), "/perParameter")));
  return r;
}

namespace detail {

inline std::string table_cell(const Context& ctx, PointMask mask) {
  if (mask == 0) return "∅";
  std::string out = "{";
  bool first = true;
  for (const auto& p : point_names(ctx, mask)) {
    if (!first) out += ", ";
    out += p;
    first = false;
  }
  return out + "}";
}

/// Display width in code points; enough for the cells produced here.
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

}  // namespace detail

/// Rows target, lower, upper, boundary; one column per parameter.
inline std::string render_table(const ApproximationReport& r) {
  const auto& ctx = r.target.ctx();
  const std::vector<std::pair<std::string, const SoftSet*>> rows{
      {"target", &r.target}, {"lower", &r.lower}, {"upper", &r.upper}, {"boundary", &r.boundary}};
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& p : ctx.parameters()) header.push_back(p);
  cells.push_back(header);
  for (const auto& [label, set] : rows) {
    std::vector<std::string> line{label};
    for (std::size_t e = 0; e < ctx.parameter_count(); ++e) line.push_back(detail::table_cell(ctx, (*set)[e]));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], detail::display_width(line[c]));
  }
  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) text += " | ";
      text += line[c];
      if (c + 1 < line.size()) text.append(width[c] - detail::display_width(line[c]), ' ');
    }
    out += text + "\n";
  }
  out += "accuracy: " + r.accuracy.fraction() + " = " + r.accuracy.value.decimal();
  if (r.accuracy.convention_applied) out += " (undefined, convention value)";
  return out + "\n";
}

inline json to_json(const OpennessProfile& p) {
  return {{"open", p.open},   {"alpha", p.alpha}, {"semi", p.semi},
          {"pre", p.pre},     {"b", p.b},         {"beta", p.beta},
          {"closure", std::string(to_string(p.kind))}};
}

inline json to_json(const ContinuityProfile& p) {
  return {{"continuous", p.continuous}, {"alpha", p.alpha}, {"semi", p.semi},
          {"pre", p.pre},               {"beta", p.beta},   {"closure", std::string(to_string(p.kind))}};
}

inline json to_json(const SeparationWitness& w) {
  json out;
  out["x"] = w.x;
  if (w.y) out["y"] = *w.y;
  if (w.parameter) out["parameter"] = *w.parameter;
  return out;
}

inline json to_json(const SeparationReport& r, const Context& ctx) {
  json out;
  out["t0"] = r.t0;
  out["t1"] = r.t1;
  out["t2"] = r.t2;
  out["regular"] = r.regular;
  out["t3"] = r.t3;
  json witnesses = json::object();
  if (r.t0_witness) witnesses["t0"] = to_json(*r.t0_witness);
  if (r.t1_witness) witnesses["t1"] = to_json(*r.t1_witness);
  if (r.t2_witness) witnesses["t2"] = to_json(*r.t2_witness);
  if (r.regular_witness) {
    auto w = to_json(*r.regular_witness);
    w["closedSlice"] = point_names(ctx, *r.regular_witness->closed_slice);
    witnesses["regular"] = w;
  }
  out["witnesses"] = witnesses;
  return out;
}

// Suite reports

inline json to_json(const harness::SpaceFamilySpec& spec) {
  json out;
  out["maxUniverse"] = spec.max_universe;
  out["maxParams"] = spec.max_params;
  out["topologyKind"] = spec.topology == harness::FamilyTopology::Discrete ? "discrete" : "generated";
  if (spec.exhaustive()) {
    out["scopeEnumeration"] = "all";
  } else {
    out["scopeEnumeration"] = {{"sampled", {{"seed", spec.seed}, {"count", *spec.sampled_spaces}}}};
    out["setsPerSpace"] = spec.sets_per_space;
  }
  out["seed"] = spec.seed;
  out["laws"] = spec.laws;
  out["strictness"] = spec.strictness;
  out["cap"] = spec.cap;
  return out;
}

inline harness::SpaceFamilySpec family_spec_from_json(const json& j) {
  using detail::member;
  harness::SpaceFamilySpec spec;
  if (!j.is_object()) detail::schema_error("/", "a family document is a JSON object");
  try {
    spec.max_universe = member(j, "maxUniverse", "/").get<std::size_t>();
    spec.max_params = member(j, "maxParams", "/").get<std::size_t>();
    if (auto it = j.find("topologyKind"); it != j.end()) {
      const auto k = it->get<std::string>();
      if (k == "discrete") {
        spec.topology = harness::FamilyTopology::Discrete;
      } else if (k == "generated") {
        spec.topology = harness::FamilyTopology::Generated;
      } else {
        detail::schema_error("/topologyKind", "expected discrete or generated");
      }
    }
    if (auto it = j.find("seed"); it != j.end()) spec.seed = it->get<std::uint64_t>();
    if (auto it = j.find("scopeEnumeration"); it != j.end()) {
      if (it->is_string()) {
        if (it->get<std::string>() != "all") detail::schema_error("/scopeEnumeration", "expected \"all\" or sampled");
      } else {
        const auto& s = member(*it, "sampled", "/scopeEnumeration");
        spec.sampled_spaces = member(s, "count", "/scopeEnumeration/sampled").get<std::size_t>();
        if (auto seed = s.find("seed"); seed != s.end()) spec.seed = seed->get<std::uint64_t>();
      }
    }
    if (auto it = j.find("setsPerSpace"); it != j.end()) spec.sets_per_space = it->get<std::size_t>();
    if (auto it = j.find("laws"); it != j.end()) {
      for (const auto& law : *it) spec.laws.insert(law.get<std::string>());
    }
    if (auto it = j.find("strictness"); it != j.end()) spec.strictness = it->get<bool>();
    if (auto it = j.find("cap"); it != j.end()) spec.cap = it->get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidDocument, std::string("family document: ") + e.what());
  }
  return spec;
}

inline json to_json(const harness::Witness& w) {
  const auto ctx = harness::make_context(w.universe, w.params);
  json out;
  out["law"] = w.law;
  out["rank"] = w.rank;
  const auto space = harness::replay_space(w);
  json scope = json::object();
  for (std::size_t x = 0; x < w.universe; ++x) scope[ctx->points()[x]] = soft_set_to_json(space.scope().of(x));
  out["space"] = {{"universe", ctx->points()}, {"parameters", ctx->parameters()}, {"scope", scope}};
  json sets = json::array();
  for (std::size_t i = 0; i < w.sets.size(); ++i) sets.push_back(soft_set_to_json(SoftSet(ctx, w.sets[i])));
  out["sets"] = sets;
  if (!w.detail.empty()) out["detail"] = w.detail;
  return out;
}

inline json to_json(const harness::SuiteReport& r) {
  json out;
  out["family"] = to_json(r.spec);
  out["spaces"] = r.spaces;
  out["sets"] = r.sets;
  out["failures"] = r.total_failures();
  json laws = json::array();
  for (const auto& l : r.laws) {
    json witnesses = json::array();
    for (const auto& w : l.witnesses) witnesses.push_back(to_json(w));
    laws.push_back({{"name", l.name},
                    {"group", l.group},
                    {"checks", l.checks},
                    {"failures", l.failures},
                    {"witnesses", witnesses}});
  }
  out["laws"] = laws;
  json strictness = json::array();
  for (const auto& e : r.strictness) {
    json edge{{"edge", e.name}, {"description", e.description}, {"found", e.witness.has_value()}};
    if (e.witness) {
      edge["witness"] = to_json(*e.witness);
      edge["replayed"] = e.replayed;
    }
    strictness.push_back(edge);
  }
  out["strictness"] = strictness;
  json remarks = json::array();
  for (const auto& rm : r.remarks) {
    json entry{{"name", rm.name}, {"occurrences", rm.occurrences}};
    if (rm.first) entry["first"] = to_json(*rm.first);
    remarks.push_back(entry);
  }
  out["remarks"] = remarks;
  return out;
}

inline json to_json(const harness::MappingWitness& w) {
  const auto m = w.mapping();
  json out;
  out["source"] = to_json(document_of(m.source()));
  out["target"] = to_json(document_of(m.target()));
  json points = json::object(), params = json::object();
  for (std::size_t x = 0; x < w.point_map.size(); ++x) {
    points[m.source().ctx().points()[x]] = m.target().ctx().points()[w.point_map[x]];
  }
  for (std::size_t e = 0; e < w.param_map.size(); ++e) {
    params[m.source().ctx().parameters()[e]] = m.target().ctx().parameters()[w.param_map[e]];
  }
  out["pointMap"] = points;
  out["paramMap"] = params;
  return out;
}

inline json to_json(const harness::DecompositionFamilyReport& r) {
  json out;
  out["maxUniverse"] = r.max_universe;
  out["maxParams"] = r.max_params;
  out["mappings"] = r.mappings;
  out["preimageFamilies"] = r.preimage_families;
  out["kuratowskiFailures"] = r.kuratowski_failures;
  out["cechFailures"] = r.cech_failures;
  if (r.first_kuratowski_failure) out["firstKuratowskiFailure"] = to_json(*r.first_kuratowski_failure);
  if (r.first_cech_failure) out["firstCechFailure"] = to_json(*r.first_cech_failure);
  return out;
}

}  // namespace softaura::io
