// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "latkit/closure.hpp"
#include "latkit/convexity.hpp"
#include "latkit/error.hpp"
#include "latkit/heyting.hpp"
#include "latkit/hmj.hpp"
#include "latkit/io.hpp"
#include "latkit/rules.hpp"

namespace latkit::cli {

namespace {

using io::Json;

struct Output {
  Json json;
  std::optional<std::string> dot;
};

[[noreturn]] void usage(const std::string& detail) {
  throw Error(ErrorKind::kUsage, "run", detail);
}

FinitePoset load_poset(const RunConfig& c) {
  if (c.poset_path.empty()) usage("a poset file is required");
  return io::parse_poset(io::read_json(c.poset_path));
}

std::vector<EndoMap> load_maps(const RunConfig& c, const FinitePoset& p) {
  std::vector<EndoMap> out;
  for (const auto& path : c.map_paths) {
    for (auto& m : io::parse_maps(p, io::read_json(path))) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

EndoMap load_one_map(const RunConfig& c, const FinitePoset& p) {
  auto maps = load_maps(c, p);
  if (maps.size() != 1) usage("exactly one map is required");
  return std::move(maps.front());
}

std::optional<Subset> load_subset(const RunConfig& c, const FinitePoset& p) {
  if (!c.subset) return std::nullopt;
  return Subset::of(p, std::span<const std::string>(*c.subset));
}

Json optional_label(const FinitePoset& p, std::optional<Element> e) {
  return e ? Json(p.label(*e)) : Json(nullptr);
}

std::string hasse_dot(const std::string& name,
                      const std::vector<std::string>& labels,
                      const std::function<bool(std::size_t, std::size_t)>& le) {
  std::vector<FinitePoset::OrderPair> pairs;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i != j && le(i, j)) pairs.emplace_back(labels[i], labels[j]);
    }
  }
  if (labels.size() > kMaxElements) {
    throw CapExceeded("dot", labels.size(), kMaxElements);
  }
  return io::to_dot(FinitePoset::build(labels, pairs), name);
}

Output cmd_validate(const RunConfig& c) {
  const auto p = load_poset(c);
  const auto view = validate_structure(p, c.limits);
  Json out = io::to_json(p);
  out["size"] = p.size();
  out["bottom"] = optional_label(p, p.bottom());
  out["top"] = optional_label(p, p.top());
  out["structure"] = std::string(to_string(view.level));
  if (!view.witness.empty()) out["witness"] = view.witness;
  out["is_default_enabled"] = is_default_enabled(p, c.limits);
  if (auto x = load_subset(c, p)) {
    const auto q = order_queries(*x);
    const auto l = lattice_queries(*x);
    out["subset"] = {
        {"members", io::to_json(*x)},
        {"upper_bounds", io::to_json(q.upper_bounds)},
        {"lower_bounds", io::to_json(q.lower_bounds)},
        {"maximal_elements", io::to_json(q.maximal_elements)},
        {"least_element", optional_label(p, q.least_element)},
        {"greatest_element", optional_label(p, q.greatest_element)},
        {"join", optional_label(p, l.join)},
        {"meet", optional_label(p, l.meet)},
        {"is_directed", l.is_directed},
        {"is_lower_set", q.is_lower_set},
        {"is_upper_set", q.is_upper_set},
        {"has_ceiling", has_ceiling(p, x->bits())}};
  }
  return {out, io::to_dot(p)};
}

Output cmd_closure_systems(const RunConfig& c) {
  const auto p = load_poset(c);
  const auto lattice = enumerate_cl_lattice(p, c.limits);
  Json systems = Json::array();
  std::vector<std::string> labels;
  for (const auto& s : lattice.closure_systems) {
    systems.push_back(io::to_json(s.subset()));
    labels.push_back(p.format(s.bits()));
  }
  auto le = [&](std::size_t i, std::size_t j) {
    return (lattice.closure_systems[i].bits() &
            ~lattice.closure_systems[j].bits()) == 0;
  };
  return {{{"count", systems.size()}, {"closure_systems", systems}},
          hasse_dot("closure_systems", labels, le)};
}

Output cmd_generate(const RunConfig& c) {
  const auto p = load_poset(c);
  const auto maps = load_maps(c, p);
  const auto op = generate_closure(p, maps);
  if (!(kleene_generate(p, maps) == op)) {
    theorem_breach("generate", "Kleene iteration disagrees");
  }
  Json out = io::to_json(op.map());
  out["generators"] = maps.size();
  return {out, std::nullopt};
}

Output cmd_tarski(const RunConfig& c) {
  const auto p = load_poset(c);
  const auto f = load_one_map(c, p);
  std::optional<Element> from;
  if (c.from) from = p.index_of(*c.from);
  const Element lfp = tarski(f, from);
  return {{{"from", optional_label(p, from)}, {"least_fixpoint", p.label(lfp)}},
          std::nullopt};
}

Output cmd_nuclei(const RunConfig& c) {
  const auto p = load_poset(c);
  const auto nuclei = enumerate_nuclei(p, c.limits);
  Json list = Json::array();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    list.push_back(io::to_json(nuclei[i].map()));
    labels.push_back("n" + std::to_string(i) + " " +
                     p.format(nuclei[i].fixpoints().bits()));
  }
  auto le = [&](std::size_t i, std::size_t j) {
    return pointwise_leq(nuclei[i].map(), nuclei[j].map());
  };
  return {{{"count", nuclei.size()}, {"nuclei", list}},
          hasse_dot("nuclei", labels, le)};
}

Output cmd_heyting(const RunConfig& c) {
  const Frame frame(load_poset(c), c.limits);
  const auto& p = frame.poset();
  Json table = Json::object();
  for (Element a = 0; a < p.size(); ++a) {
    Json row = Json::object();
    for (Element b = 0; b < p.size(); ++b) {
      row[p.label(b)] = p.label(frame.implies(a, b));
    }
    table[p.label(a)] = std::move(row);
  }
  return {{{"implication", table}}, std::nullopt};
}

Output cmd_nuclear_core(const RunConfig& c) {
  const Frame frame(load_poset(c), c.limits);
  const ClosureOperator op(load_one_map(c, frame.poset()));
  const auto core = nuclear_core(frame, op);
  if (!(core == nuclear_core_bruteforce(frame, op, c.limits))) {
    theorem_breach("nuclear-core", "formula differs from search");
  }
  return {{{"nuclear_core", io::to_json(core.map())}}, std::nullopt};
}

Output cmd_least_nucleus(const RunConfig& c) {
  const Frame frame(load_poset(c), c.limits);
  const ClosureOperator op(load_one_map(c, frame.poset()));
  const auto least = least_nucleus_above(frame, op);
  if (!(least == least_nucleus_above_bruteforce(frame, op, c.limits))) {
    theorem_breach("least-nucleus", "formula differs from search");
  }
  return {{{"least_nucleus_above", io::to_json(least.map())}}, std::nullopt};
}

Output cmd_hmj(const RunConfig& c) {
  const Frame frame(load_poset(c), c.limits);
  const auto r = hmj_correspondence(frame, c.limits);
  Json pairs = Json::array();
  for (const auto& [filter, nucleus] : r.pairs) {
    pairs.push_back({{"filter", io::to_json(filter.subset())},
                     {"nucleus", io::to_json(nucleus.map())}});
  }
  return {{{"scott_open_filters", r.pairs.size()},
           {"compact_fitted_nuclei", r.compact_fitted_count},
           {"pairs", pairs},
           {"galois_identities", galois_check(frame, c.limits)},
           {"antiisomorphism_verified", r.antiisomorphism_verified}},
          std::nullopt};
}

Output cmd_rules(const RunConfig& c) {
  const auto p = load_poset(c);
  if (c.mode != "default" && c.mode != "nuclear") {
    usage("rules needs default|nuclear");
  }
  const RuleSet rules =
      c.mode == "nuclear" ? nuclear_rules(p) : default_rules(p, c.limits);
  Json out = {{"kind", c.mode}, {"count", rules.size()},
              {"rules", io::to_json(rules)}};
  if (c.mode == "nuclear") {
    out["is_nuclear_enabled"] = is_nuclear_enabled(p, c.limits);
  }
  return {out, std::nullopt};
}

Output cmd_convexity(const RunConfig& c) {
  const auto p = load_poset(c);
  const std::string mode = c.mode.empty() ? "clsys" : c.mode;
  auto op = [&] {
    if (mode == "clsys") return PowersetOperator::clsys(p, c.limits);
    if (mode == "dcclsys") return PowersetOperator::dcclsys(p, c.limits);
    if (mode == "rules") {
      if (c.rules_path.empty()) usage("convexity rules needs --rules");
      return PowersetOperator::rule_closure(
          io::parse_rules(p, io::read_json(c.rules_path)), c.limits);
    }
    usage("unknown convexity strategy '" + mode + "'");
  }();
  const auto r = convexity_checks(op);
  Json witness = nullptr;
  if (r.witness) {
    witness = {{"A", io::to_json(Subset(p, r.witness->a))},
               {"x", p.label(r.witness->x)},
               {"y", p.label(r.witness->y)}};
  }
  Json out = {{"strategy", mode},
              {"anti_exchange", r.anti_exchange},
              {"cas", r.cas},
              {"witness", witness},
              {"poset_order_funnel",
               acyclicity(op, AcyclicityMode::kPosetOrder)}};
  out["acyclic_search"] =
      p.size() <= 5 ? Json(acyclicity(op, AcyclicityMode::kSearch))
                    : Json(nullptr);
  return {out, std::nullopt};
}

Output cmd_sccore(const RunConfig& c) {
  const auto p = load_poset(c);
  const ClosureOperator op(load_one_map(c, p));
  const auto core = sccore(op, c.limits);
  return {{{"sccore", io::to_json(core.map())}, {"equals_input", core == op}},
          std::nullopt};
}

using Handler = Output (*)(const RunConfig&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> kHandlers = {
      {"validate", cmd_validate},
      {"closure-systems", cmd_closure_systems},
      {"generate", cmd_generate},
      {"tarski", cmd_tarski},
      {"nuclei", cmd_nuclei},
      {"heyting", cmd_heyting},
      {"nuclear-core", cmd_nuclear_core},
      {"least-nucleus", cmd_least_nucleus},
      {"hmj", cmd_hmj},
      {"rules", cmd_rules},
      {"convexity", cmd_convexity},
      {"sccore", cmd_sccore},
  };
  return kHandlers;
}

bool is_scalar_list(const Json& v) {
  return v.is_array() &&
         std::all_of(v.begin(), v.end(), [](const Json& e) {
           return e.is_primitive();
         });
}

bool is_table(const Json& v) {
  return v.is_object() && !v.empty() &&
         std::all_of(v.begin(), v.end(),
                     [](const Json& e) { return e.is_string(); });
}

std::string scalar(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_text(const Json& v, int indent, std::ostringstream& out);

void render_value(const Json& v, int indent, std::ostringstream& out) {
  if (is_scalar_list(v)) {
    out << " {";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << (i ? "," : "") << scalar(v[i]);
    }
    out << "}\n";
  } else if (is_table(v)) {
    out << ' ';
    bool first = true;
    for (const auto& [k, e] : v.items()) {
      out << (first ? "" : ", ") << k << "↦" << scalar(e);
      first = false;
    }
    out << '\n';
  } else if (v.is_primitive()) {
    out << ' ' << scalar(v) << '\n';
  } else {
    out << '\n';
    render_text(v, indent + 2, out);
  }
}

void render_text(const Json& v, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) {
      out << pad << k << ':';
      render_value(e, indent, out);
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      out << pad << '-';
      render_value(e, indent, out);
    }
  } else {
    out << pad << scalar(v) << '\n';
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& [name, handler] : handlers()) names.push_back(name);
    return names;
  }();
  return kNames;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("LATKIT_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return Limits{}.subset_cap;
}

RunResult run(const RunConfig& config) {
  try {
    auto it = handlers().find(config.command);
    if (it == handlers().end()) usage("unknown command '" + config.command + "'");
    Output out = it->second(config);
    switch (config.format) {
      case Format::kJson:
        return {kOk, out.json.dump(2) + "\n", {}};
      case Format::kText: {
        std::ostringstream text;
        render_text(out.json, 0, text);
        return {kOk, text.str(), {}};
      }
      case Format::kDot:
        if (!out.dot) usage(config.command + " has no DOT output");
        return {kOk, *out.dot, {}};
    }
    return {kOk, {}, {}};
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kCapExceeded:
        return {kCapExceeded, {}, e.what()};
      case ErrorKind::kTheoremBreach:
        return {kTheoremBreach, {}, std::string("THEOREM BREACH: ") + e.what()};
      default:
        return {kInputError, {}, e.what()};
    }
  } catch (const std::exception& e) {
    return {kInputError, {}, e.what()};
  }
}

}  // namespace latkit::cli
