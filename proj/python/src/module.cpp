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

// Python bindings. Elements cross the boundary as labels, subsets as lists of
// labels and maps as {label: label} dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/cli.hpp"
#include "latkit/closure.hpp"
#include "latkit/convexity.hpp"
#include "latkit/error.hpp"
#include "latkit/fixtures.hpp"
#include "latkit/heyting.hpp"
#include "latkit/hmj.hpp"
#include "latkit/rules.hpp"

namespace py = pybind11;

namespace latkit {
namespace {

using Labels = std::vector<std::string>;
using Table = std::map<std::string, std::string>;

Limits limits(std::optional<std::size_t> cap, bool force) {
  Limits l;
  if (cap) l.subset_cap = *cap;
  l.force = force;
  return l;
}

Mask mask_of(const FinitePoset& p, const Labels& labels) {
  return Subset::of(p, labels).bits();
}

Labels labels_of(const FinitePoset& p, Mask m) {
  return Subset(p, m).labels();
}

std::optional<std::string> label_of(const FinitePoset& p,
                                    std::optional<Element> e) {
  if (!e) return std::nullopt;
  return p.label(*e);
}

EndoMap make_map(const FinitePoset& p, const Table& table, std::string name) {
  std::vector<Element> images(p.size(), 0);
  std::vector<bool> seen(p.size(), false);
  for (const auto& [from, to] : table) {
    const Element e = p.index_of(from);
    images[e] = p.index_of(to);
    seen[e] = true;
  }
  for (Element e = 0; e < p.size(); ++e) {
    if (!seen[e]) {
      throw Error(ErrorKind::kParseError, "Map",
                  "table not total: no entry for '" + p.label(e) + "'");
    }
  }
  return {p, std::move(images), std::move(name)};
}

Table table_of(const EndoMap& f) {
  Table t;
  for (Element e = 0; e < f.poset().size(); ++e) {
    t[f.poset().label(e)] = f.poset().label(f(e));
  }
  return t;
}

py::dict classification(const EndoMap& f, std::optional<std::size_t> cap,
                        bool force) {
  const auto c = classify(f, limits(cap, force));
  py::dict d;
  d["increasing"] = c.increasing;
  d["ascending"] = c.ascending;
  d["descending"] = c.descending;
  d["idempotent"] = c.idempotent;
  d["preclosure"] = c.preclosure;
  d["closure_operator"] = c.closure_operator;
  d["interior_operator"] = c.interior_operator;
  d["scott_continuous"] = c.scott_continuous;
  d["preserves_binary_meets"] = c.preserves_binary_meets;
  return d;
}

PowersetOperator powerset_operator(const FinitePoset& p,
                                   const std::string& strategy,
                                   const Limits& l) {
  if (strategy == "clsys") return PowersetOperator::clsys(p, l);
  if (strategy == "dcclsys") return PowersetOperator::dcclsys(p, l);
  if (strategy == "default_rules") {
    return PowersetOperator::rule_closure(default_rules(p, l), l);
  }
  throw Error(ErrorKind::kUsage, "convexity", "unknown strategy '" + strategy + "'");
}

RuleSet rules_of(const FinitePoset& p,
                 const std::vector<std::pair<Labels, std::string>>& rules) {
  std::vector<ClosureRule> out;
  for (const auto& [body, head] : rules) {
    out.push_back({mask_of(p, body), p.index_of(head)});
  }
  return {p, std::move(out)};
}

std::vector<std::pair<Labels, std::string>> rules_to_py(const RuleSet& rules) {
  std::vector<std::pair<Labels, std::string>> out;
  for (const auto& r : rules.rules()) {
    out.emplace_back(labels_of(rules.poset(), r.body),
                     rules.poset().label(r.head));
  }
  return out;
}

}  // namespace
}  // namespace latkit

PYBIND11_MODULE(_latkit, m) {
  using namespace latkit;
  m.doc() = "Finite posets, closure operators, nuclei and frames.";

  static py::exception<Error> error(m, "LatkitError");
  static py::exception<CapExceeded> cap_error(m, "CapExceeded", error.ptr());
  static py::exception<Error> breach(m, "TheoremBreach", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      py::set_error(cap_error, e.what());
    } catch (const Error& e) {
      py::set_error(e.kind() == ErrorKind::kTheoremBreach ? breach : error,
                    e.what());
    }
  });

  py::class_<FinitePoset>(m, "Poset")
      .def(py::init([](Labels labels,
                       const std::vector<std::pair<std::string, std::string>>& le) {
             return FinitePoset::build(std::move(labels), le);
           }),
           py::arg("labels"), py::arg("le") = std::vector<std::pair<std::string, std::string>>{})
      .def_property_readonly("labels", &FinitePoset::labels)
      .def("__len__", &FinitePoset::size)
      .def("__eq__", [](const FinitePoset& a, const FinitePoset& b) { return a == b; })
      .def("leq",
           [](const FinitePoset& p, const std::string& a, const std::string& b) {
             return p.leq(p.index_of(a), p.index_of(b));
           })
      .def("join",
           [](const FinitePoset& p, const Labels& x) {
             return label_of(p, p.join(mask_of(p, x)));
           })
      .def("meet",
           [](const FinitePoset& p, const Labels& x) {
             return label_of(p, p.meet(mask_of(p, x)));
           })
      .def("upper_bounds",
           [](const FinitePoset& p, const Labels& x) {
             return labels_of(p, p.upper_bounds(mask_of(p, x)));
           })
      .def("lower_bounds",
           [](const FinitePoset& p, const Labels& x) {
             return labels_of(p, p.lower_bounds(mask_of(p, x)));
           })
      .def("lower_closure",
           [](const FinitePoset& p, const Labels& x) {
             return labels_of(p, p.lower_closure(mask_of(p, x)));
           })
      .def("upper_closure",
           [](const FinitePoset& p, const Labels& x) {
             return labels_of(p, p.upper_closure(mask_of(p, x)));
           })
      .def("is_directed",
           [](const FinitePoset& p, const Labels& x) {
             return p.is_directed(mask_of(p, x));
           })
      .def_property_readonly("top", [](const FinitePoset& p) { return label_of(p, p.top()); })
      .def_property_readonly("bottom",
                             [](const FinitePoset& p) { return label_of(p, p.bottom()); })
      .def("is_meet_semilattice", &FinitePoset::is_meet_semilattice)
      .def("__repr__", [](const FinitePoset& p) {
        return "Poset(" + p.format(p.all()) + ")";
      });

  py::class_<EndoMap>(m, "Map")
      .def(py::init(&make_map), py::arg("poset"), py::arg("table"),
           py::arg("name") = "")
      .def_property_readonly("poset", &EndoMap::poset)
      .def_property_readonly("name", &EndoMap::name)
      .def_property_readonly("table", &table_of)
      .def_property_readonly("fix",
                             [](const EndoMap& f) { return fix(f).labels(); })
      .def("__call__",
           [](const EndoMap& f, const std::string& x) {
             return f.poset().label(f(f.poset().index_of(x)));
           })
      .def("__eq__", [](const EndoMap& a, const EndoMap& b) { return a == b; })
      .def("__repr__", [](const EndoMap& f) { return "Map(" + f.format() + ")"; });

  m.def("identity", &EndoMap::identity);
  m.def("chain", &fixtures::chain, py::arg("n"));
  m.def("b2", &fixtures::b2);
  m.def("v4", &fixtures::v4);
  m.def("m3", &fixtures::m3);
  m.def("n5", &fixtures::n5);
  m.def("boolean", &fixtures::boolean, py::arg("k"));

  m.def("classify", &classification, py::arg("map"), py::kw_only(),
        py::arg("cap") = py::none(), py::arg("force") = false);

  m.def(
      "validate_structure",
      [](const FinitePoset& p, std::optional<std::size_t> cap, bool force) {
        const auto v = validate_structure(p, limits(cap, force));
        return std::make_pair(std::string(to_string(v.level)), v.witness);
      },
      py::arg("poset"), py::kw_only(), py::arg("cap") = py::none(),
      py::arg("force") = false);

  m.def(
      "closure_systems",
      [](const FinitePoset& p, std::optional<std::size_t> cap, bool force) {
        std::vector<Labels> out;
        for (const auto& c : enumerate_cl_lattice(p, limits(cap, force)).closure_systems) {
          out.push_back(c.subset().labels());
        }
        return out;
      },
      py::arg("poset"), py::kw_only(), py::arg("cap") = py::none(),
      py::arg("force") = false);

  m.def(
      "generate_closure",
      [](const FinitePoset& p, const std::vector<EndoMap>& gens) {
        return generate_closure(p, gens).map();
      },
      py::arg("poset"), py::arg("generators"));
  m.def(
      "kleene_generate",
      [](const FinitePoset& p, const std::vector<EndoMap>& gens) {
        return kleene_generate(p, gens).map();
      },
      py::arg("poset"), py::arg("generators"));
  m.def(
      "tarski",
      [](const EndoMap& f, std::optional<std::string> from) {
        std::optional<Element> start;
        if (from) start = f.poset().index_of(*from);
        return f.poset().label(tarski(f, start));
      },
      py::arg("map"), py::arg("start") = py::none());

  m.def(
      "clsys",
      [](const FinitePoset& p, const Labels& x) {
        return clsys(Subset::of(p, x)).labels();
      },
      py::arg("poset"), py::arg("subset"));
  m.def(
      "dcclsys",
      [](const FinitePoset& p, const Labels& x, std::optional<std::size_t> cap,
         bool force) { return dcclsys(Subset::of(p, x), limits(cap, force)).labels(); },
      py::arg("poset"), py::arg("subset"), py::kw_only(),
      py::arg("cap") = py::none(), py::arg("force") = false);

  m.def(
      "nuclei",
      [](const FinitePoset& p, std::optional<std::size_t> cap, bool force) {
        std::vector<EndoMap> out;
        for (const auto& n : enumerate_nuclei(p, limits(cap, force))) {
          out.push_back(n.map());
        }
        return out;
      },
      py::arg("poset"), py::kw_only(), py::arg("cap") = py::none(),
      py::arg("force") = false);
  m.def(
      "nucleus_join",
      [](const FinitePoset& p, const std::vector<EndoMap>& prenuclei) {
        return nucleus_join(p, prenuclei).map();
      },
      py::arg("poset"), py::arg("prenuclei"));
  m.def(
      "heyting_implication",
      [](const FinitePoset& p, const std::string& a, const std::string& b) {
        const Frame f(p);
        return p.label(f.implies(p.index_of(a), p.index_of(b)));
      },
      py::arg("frame"), py::arg("a"), py::arg("b"));
  m.def(
      "nuclear_core",
      [](const EndoMap& op) {
        return nuclear_core(Frame(op.poset()), ClosureOperator(op)).map();
      },
      py::arg("closure_operator"));
  m.def(
      "least_nucleus_above",
      [](const EndoMap& op) {
        return least_nucleus_above(Frame(op.poset()), ClosureOperator(op)).map();
      },
      py::arg("closure_operator"));

  m.def(
      "filters",
      [](const FinitePoset& p) {
        std::vector<Labels> out;
        for (const auto& f : enumerate_filters(Frame(p))) {
          out.push_back(f.subset().labels());
        }
        return out;
      },
      py::arg("frame"));
  m.def(
      "hmj",
      [](const FinitePoset& p) {
        const auto r = hmj_correspondence(Frame(p));
        py::list pairs;
        for (const auto& [filter, nucleus] : r.pairs) {
          pairs.append(py::make_tuple(filter.subset().labels(), nucleus.map()));
        }
        py::dict d;
        d["pairs"] = pairs;
        d["compact_fitted_count"] = r.compact_fitted_count;
        d["antiisomorphism_verified"] = r.antiisomorphism_verified;
        return d;
      },
      py::arg("frame"));

  m.def(
      "default_rules",
      [](const FinitePoset& p, std::optional<std::size_t> cap, bool force) {
        return rules_to_py(default_rules(p, limits(cap, force)));
      },
      py::arg("poset"), py::kw_only(), py::arg("cap") = py::none(),
      py::arg("force") = false);
  m.def("nuclear_rules",
        [](const FinitePoset& p) { return rules_to_py(nuclear_rules(p)); },
        py::arg("poset"));
  m.def(
      "rule_closure",
      [](const FinitePoset& p,
         const std::vector<std::pair<Labels, std::string>>& rules,
         const Labels& x) {
        return rule_closure(rules_of(p, rules), Subset::of(p, x)).labels();
      },
      py::arg("poset"), py::arg("rules"), py::arg("subset"));

  m.def(
      "convexity",
      [](const FinitePoset& p, const std::string& strategy,
         std::optional<std::size_t> cap, bool force) {
        const auto l = limits(cap, force);
        const auto op = powerset_operator(p, strategy, l);
        const auto r = convexity_checks(op);
        const auto funnel = funnel_check(op, order_relation(p));
        py::dict d;
        d["anti_exchange"] = r.anti_exchange;
        d["cas"] = r.cas;
        d["poset_order_funnel"] = funnel.is_funnel;
        if (r.witness) {
          d["witness"] = py::make_tuple(labels_of(p, r.witness->a),
                                        p.label(r.witness->x),
                                        p.label(r.witness->y));
        } else {
          d["witness"] = py::none();
        }
        return d;
      },
      py::arg("poset"), py::arg("strategy") = "clsys", py::kw_only(),
      py::arg("cap") = py::none(), py::arg("force") = false);

  m.def(
      "run",
      [](const std::string& command, const std::string& poset_path,
         const std::vector<std::string>& maps, const std::string& mode,
         std::optional<std::size_t> cap, bool force, const std::string& format) {
        cli::RunConfig c;
        c.command = command;
        c.poset_path = poset_path;
        c.map_paths = maps;
        c.mode = mode;
        c.limits.subset_cap = cap.value_or(cli::default_cap());
        c.limits.force = force;
        if (format == "text") {
          c.format = cli::Format::kText;
        } else if (format == "dot") {
          c.format = cli::Format::kDot;
        } else if (format != "json") {
          throw Error(ErrorKind::kUsage, "run", "unknown format '" + format + "'");
        }
        const auto r = cli::run(c);
        return py::make_tuple(r.exit_code, r.output, r.error);
      },
      py::arg("command"), py::arg("poset_path"),
      py::arg("maps") = std::vector<std::string>{}, py::arg("mode") = "",
      py::kw_only(), py::arg("cap") = py::none(), py::arg("force") = false,
      py::arg("format") = "json");
}
