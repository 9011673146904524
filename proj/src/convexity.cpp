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

#include "latkit/convexity.hpp"

#include <string>

#include "latkit/closure.hpp"
#include "latkit/error.hpp"

namespace latkit {

namespace {

std::string describe(const FinitePoset& p, Mask a, Element x, Element y) {
  return "A=" + p.format(a) + ", x=" + p.label(x) + ", y=" + p.label(y);
}

template <typename F>
std::vector<Mask> tabulate(const FinitePoset& p, const Limits& limits,
                           const char* op, F&& closure) {
  limits.require_subsets(op, p.size());
  std::vector<Mask> table(std::size_t{1} << p.size());
  for (Mask x = 0; x < table.size(); ++x) table[x] = closure(x);
  return table;
}

}  // namespace

std::string_view to_string(PowersetOperator::Strategy s) {
  switch (s) {
    case PowersetOperator::Strategy::kClsys:
      return "clsys";
    case PowersetOperator::Strategy::kDcclsys:
      return "dcclsys";
    case PowersetOperator::Strategy::kRuleClosure:
      return "rule_closure";
    case PowersetOperator::Strategy::kExplicit:
      return "explicit";
  }
  return "unknown";
}

PowersetOperator::PowersetOperator(FinitePoset p, Strategy s,
                                   std::vector<Mask> table)
    : universe_(std::move(p)), strategy_(s), table_(std::move(table)) {
  const std::size_t n = universe_.size();
  if (table_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::kNotPowersetClosure, "powerset_operator",
                "table needs " + std::to_string(std::size_t{1} << n) +
                    " entries");
  }
  const Mask all = universe_.all();
  for (Mask x = 0; x < table_.size(); ++x) {
    const Mask c = table_[x];
    std::string problem;
    if ((c & ~all) != 0) {
      problem = "leaves the universe";
    } else if ((x & ~c) != 0) {
      problem = "not ascending";
    } else if (table_[c] != c) {
      problem = "not idempotent";
    } else {
      for (Element e = 0; e < n && problem.empty(); ++e) {
        if (!has(x, e) && (c & ~table_[x | bit(e)]) != 0) {
          problem = "not increasing";
        }
      }
    }
    if (!problem.empty()) {
      throw Error(ErrorKind::kNotPowersetClosure, "powerset_operator",
                  problem + " at " + universe_.format(x));
    }
  }
}

PowersetOperator PowersetOperator::clsys(const FinitePoset& p,
                                         const Limits& limits) {
  return {p, Strategy::kClsys,
          tabulate(p, limits, "clsys_operator", [&](Mask x) {
            return latkit::clsys(Subset(p, x)).bits();
          })};
}

PowersetOperator PowersetOperator::dcclsys(const FinitePoset& p,
                                           const Limits& limits) {
  return {p, Strategy::kDcclsys,
          tabulate(p, limits, "dcclsys_operator", [&](Mask x) {
            return latkit::dcclsys(Subset(p, x), limits).bits();
          })};
}

PowersetOperator PowersetOperator::rule_closure(const RuleSet& rules,
                                                const Limits& limits) {
  const auto& p = rules.poset();
  return {p, Strategy::kRuleClosure,
          tabulate(p, limits, "rule_closure_operator", [&](Mask x) {
            return latkit::rule_closure(rules, Subset(p, x)).bits();
          })};
}

PowersetOperator PowersetOperator::from_table(const FinitePoset& p,
                                              std::vector<Mask> table,
                                              const Limits& limits) {
  limits.require_subsets("powerset_operator", p.size());
  return {p, Strategy::kExplicit, std::move(table)};
}

ConvexityReport convexity_checks(const PowersetOperator& op) {
  const auto& p = op.universe();
  const std::size_t n = p.size();
  ConvexityReport r{true, true, std::nullopt};
  std::optional<ConvexityWitness> ae_witness;
  for (Mask a = 0; a < op.table().size(); ++a) {
    const Mask c = op(a);
    for (Element x = 0; x < n; ++x) {
      if (has(c, x)) continue;
      for (Element y = 0; y < n; ++y) {
        if (y == x || has(c, y)) continue;
        const Mask cx = op(a | bit(x));
        const Mask cy = op(a | bit(y));
        if (has(cy, x) && has(cx, y)) {
          r.anti_exchange = false;
          if (!ae_witness) ae_witness = ConvexityWitness{a, x, y};
        }
        if (c == a && cx == cy) {
          r.cas = false;
          if (!r.witness) r.witness = ConvexityWitness{a, x, y};
        }
      }
    }
  }
  if (r.anti_exchange != r.cas) {
    const auto& w = r.witness ? *r.witness : *ae_witness;
    theorem_breach("convexity_checks",
                   "anti-exchange and CAS disagree at " +
                       describe(p, w.a, w.x, w.y));
  }
  if (!r.witness) r.witness = ae_witness;
  return r;
}

Relation order_relation(const FinitePoset& p) {
  Relation r(p.size());
  for (Element a = 0; a < p.size(); ++a) r[a] = p.up(a);
  return r;
}

bool is_preorder(const Relation& r) {
  for (Element a = 0; a < r.size(); ++a) {
    if (!has(r[a], a)) return false;
    bool transitive = true;
    for_each_bit(r[a], [&](Element b) {
      if (b >= r.size() || (r[b] & ~r[a]) != 0) transitive = false;
    });
    if (!transitive) return false;
  }
  return true;
}

bool is_antisymmetric(const Relation& r) {
  for (Element a = 0; a < r.size(); ++a) {
    for (Element b = a + 1; b < r.size(); ++b) {
      if (has(r[a], b) && has(r[b], a)) return false;
    }
  }
  return true;
}

FunnelReport funnel_check(const PowersetOperator& op,
                          const Relation& preorder) {
  const auto& p = op.universe();
  const std::size_t n = p.size();
  if (preorder.size() != n || !is_preorder(preorder)) {
    throw Error(ErrorKind::kNotAPreorder, "funnel_check",
                "relation is not reflexive and transitive on " +
                    p.format(p.all()));
  }
  std::vector<Mask> upper_sets;
  for (Mask u = 0; u < op.table().size(); ++u) {
    bool upper = true;
    for_each_bit(u, [&](Element a) { upper = upper && (preorder[a] & ~u) == 0; });
    if (upper) upper_sets.push_back(u);
  }

  FunnelReport r{false, true, true, true, std::nullopt, {}};
  auto note = [&](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };
  for (Mask x = 0; x < op.table().size(); ++x) {
    const Mask c = op(x);
    for (Element y = 0; y < n; ++y) {
      const Mask above = x & preorder[y];
      if (has(c, y) && !has(op(above), y)) {
        r.pointwise = false;
        note("X=" + p.format(x) + ", y=" + p.label(y));
      }
      if ((c & preorder[y] & ~op(above)) != 0) r.up_restriction = false;
    }
    for (Mask u : upper_sets) {
      if ((c & u & ~op(x & u)) != 0) r.upper_sets = false;
    }
  }
  if (r.pointwise != r.upper_sets || r.pointwise != r.up_restriction) {
    theorem_breach("funnel_check", "funnel conditions disagree");
  }
  r.is_funnel = r.pointwise;
  if (r.is_funnel) {
    bool holds = true;
    for (Mask a = 0; a < op.table().size(); ++a) {
      for (Element x = 0; x < n; ++x) {
        if (has(op(a), x)) continue;
        for (Element y = 0; y < n; ++y) {
          if (has(op(a | bit(y)), x) && !has(preorder[x], y)) holds = false;
        }
      }
    }
    r.exchange_order = holds;
  }
  return r;
}

bool acyclicity(const PowersetOperator& op, AcyclicityMode mode) {
  const auto& p = op.universe();
  if (mode == AcyclicityMode::kPosetOrder) {
    return funnel_check(op, order_relation(p)).is_funnel;
  }
  constexpr std::size_t kSearchCap = 5;
  const std::size_t n = p.size();
  if (n > kSearchCap) throw CapExceeded("acyclicity", n, kSearchCap);
  std::vector<std::pair<Element, Element>> slots;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::size_t combos = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    Relation r(n);
    for (Element a = 0; a < n; ++a) r[a] = bit(a);
    std::size_t c = code;
    for (auto [a, b] : slots) {
      if (c % 3 == 1) r[a] |= bit(b);
      if (c % 3 == 2) r[b] |= bit(a);
      c /= 3;
    }
    if (is_preorder(r) && funnel_check(op, r).is_funnel) return true;
  }
  return false;
}

}  // namespace latkit
