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

#include "latkit/rules.hpp"

#include <algorithm>
#include <unordered_map>

#include "latkit/error.hpp"

namespace latkit {

namespace {

// Heads per body.
std::unordered_map<Mask, Mask> heads_by_body(const RuleSet& r) {
  std::unordered_map<Mask, Mask> out;
  for (const auto& rule : r.rules()) out[rule.body] |= bit(rule.head);
  return out;
}

Mask heads_of(const std::unordered_map<Mask, Mask>& index, Mask body) {
  auto it = index.find(body);
  return it == index.end() ? 0 : it->second;
}

void require_meet_semilattice(const char* operation, const FinitePoset& p) {
  if (!p.is_meet_semilattice()) {
    throw Error(ErrorKind::kNotMeetSemilattice, operation,
                "some pair of elements has no meet");
  }
}

}  // namespace

RuleSet::RuleSet(FinitePoset poset, std::vector<ClosureRule> rules)
    : poset_(std::move(poset)), rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    if ((r.body & ~poset_.all()) != 0 || r.head >= poset_.size()) {
      throw Error(ErrorKind::kUnknownLabel, "rule_set",
                  "rule references an element outside the poset");
    }
  }
}

bool RuleSet::contains(const ClosureRule& r) const {
  return std::find(rules_.begin(), rules_.end(), r) != rules_.end();
}

bool RuleSet::is_reflexive(const Limits& limits) const {
  limits.require_subsets("is_reflexive", poset_.size());
  const auto index = heads_by_body(*this);
  bool ok = true;
  for_each_submask(poset_.all(), [&](Mask b) {
    if (ok && (b & ~heads_of(index, b)) != 0) ok = false;
  });
  return ok;
}

bool RuleSet::is_transitive(const Limits& limits) const {
  limits.require_subsets("is_transitive", poset_.size());
  const auto index = heads_by_body(*this);
  bool ok = true;
  for_each_submask(poset_.all(), [&](Mask b) {
    if (!ok) return;
    const Mask derived = heads_of(index, b);
    // Any C with B ⊢ c for every c ∈ C is a subset of the heads of B.
    for_each_submask(derived, [&](Mask c) {
      if (ok && (heads_of(index, c) & ~derived) != 0) ok = false;
    });
  });
  return ok;
}

RuleSet RuleSet::united(const RuleSet& other) const {
  require_same_poset("rule_union", poset_, other.poset_);
  std::vector<ClosureRule> all = rules_;
  for (const auto& r : other.rules_) {
    if (!contains(r)) all.push_back(r);
  }
  return {poset_, std::move(all)};
}

bool obeys(const Subset& x, const RuleSet& rules) {
  require_same_poset("obeys", x.poset(), rules.poset());
  return std::all_of(rules.rules().begin(), rules.rules().end(),
                     [&](const ClosureRule& r) {
                       return (r.body & ~x.bits()) != 0 || x.contains(r.head);
                     });
}

Subset rule_closure(const RuleSet& rules, const Subset& x) {
  require_same_poset("rule_closure", x.poset(), rules.poset());
  const auto& p = x.poset();
  const auto& rs = rules.rules();
  // missing[i] counts body elements of rule i not yet in the closure.
  std::vector<std::size_t> missing(rs.size());
  std::vector<std::vector<std::size_t>> watching(p.size());
  Mask closure = x.bits();
  std::vector<Element> worklist;
  auto add = [&](Element e) {
    if (!has(closure, e)) {
      closure |= bit(e);
      worklist.push_back(e);
    }
  };
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Mask absent = rs[i].body & ~closure;
    missing[i] = popcount(absent);
    for_each_bit(absent, [&](Element e) { watching[e].push_back(i); });
  }
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (missing[i] == 0) add(rs[i].head);
  }
  while (!worklist.empty()) {
    const Element e = worklist.back();
    worklist.pop_back();
    for (std::size_t i : watching[e]) {
      if (--missing[i] == 0) add(rs[i].head);
    }
  }
  return {p, closure};
}

RuleEngineResult rule_engine(const RuleSet& rules, const Subset& x) {
  return {obeys(x, rules), rule_closure(rules, x)};
}

std::vector<Subset> sigma(const RuleSet& rules, const Limits& limits) {
  const auto& p = rules.poset();
  limits.require_subsets("sigma", p.size());
  std::vector<Subset> out;
  for_each_submask(p.all(), [&](Mask s) {
    Subset candidate(p, s);
    if (obeys(candidate, rules)) out.push_back(std::move(candidate));
  });
  return out;
}

RuleSet rho(const FinitePoset& p, std::span<const Subset> family,
            const Limits& limits) {
  limits.require_subsets("rho", p.size());
  for (const auto& s : family) require_same_poset("rho", p, s.poset());
  std::vector<ClosureRule> out;
  for_each_submask(p.all(), [&](Mask body) {
    Mask heads = p.all();
    for (const auto& s : family) {
      if ((body & ~s.bits()) == 0) heads &= s.bits();
    }
    for_each_bit(heads, [&](Element c) { out.push_back({body, c}); });
  });
  return {p, std::move(out)};
}

bool is_default_rule(const FinitePoset& p, Mask body, Element head) {
  return has(p.maximal(p.lower_bounds(body)), head);
}

RuleSet default_rules(const FinitePoset& p, const Limits& limits) {
  limits.require_subsets("default_rules", p.size());
  std::vector<ClosureRule> out;
  for_each_submask(p.all(), [&](Mask body) {
    const Mask heads = p.maximal(p.lower_bounds(body));
    for_each_bit(heads, [&](Element c) {
      // A reflexive default rule has c the least element of its body.
      if (has(body, c) && p.least(body) != c) {
        theorem_breach("default_rules", "reflexive rule " + p.format(body) +
                                            " ⊢ " + p.label(c) +
                                            " whose head is not least");
      }
      out.push_back({body, c});
    });
  });
  return {p, std::move(out)};
}

Subset default_rule_closure(const Subset& x) {
  const auto& p = x.poset();
  Mask c = x.bits();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element e = 0; e < p.size(); ++e) {
      const Mask body = p.up(e) & c;
      const Mask heads = p.maximal(p.lower_bounds(body));
      if ((heads & ~c) != 0) {
        c |= heads;
        changed = true;
      }
    }
  }
  return {p, c};
}

Subset rel_impl_star(const FinitePoset& p, Element a, Element b) {
  require_meet_semilattice("rel_impl_star", p);
  Mask out = 0;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.leq(*p.meet(x, a), b)) out |= bit(x);
  }
  return {p, out};
}

Subset rel_impl_max(const FinitePoset& p, Element a, Element b) {
  return {p, p.maximal(rel_impl_star(p, a, b).bits())};
}

RuleSet nuclear_rules(const FinitePoset& p) {
  require_meet_semilattice("nuclear_rules", p);
  std::vector<ClosureRule> out;
  for (Element b = 0; b < p.size(); ++b) {
    Mask heads = 0;
    for (Element a = 0; a < p.size(); ++a) heads |= rel_impl_max(p, a, b).bits();
    for_each_bit(heads, [&](Element c) { out.push_back({bit(b), c}); });
  }
  return {p, std::move(out)};
}

bool is_nuclear_enabled(const FinitePoset& p, const Limits& limits) {
  require_meet_semilattice("is_nuclear_enabled", p);
  if (!is_default_enabled(p, limits)) return false;
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = 0; b < p.size(); ++b) {
      if (!has_ceiling(p, rel_impl_star(p, a, b).bits())) return false;
    }
  }
  return true;
}

NuclearMachinery nuclear_machinery(const FinitePoset& p, Element a, Element b,
                                   const Limits& limits) {
  return NuclearMachinery{
      .rel_impl_star = rel_impl_star(p, a, b),
      .rel_impl_max = rel_impl_max(p, a, b),
      .nuclear_rules = nuclear_rules(p),
      .is_nuclear_enabled = is_nuclear_enabled(p, limits),
  };
}

InductionReport default_induction_check(const Subset& a,
                                        std::span<const EndoMap> generators,
                                        const Limits& limits) {
  const auto& p = a.poset();
  const ClosureOperator h = generate_closure(p, generators);
  InductionReport r{
      .premises_hold = is_default_enabled(p, limits) &&
                       is_default_enabled_within(p, a.bits(), limits) &&
                       closed_under(a, generators),
      .conclusion_holds =
          closed_under(a, std::span<const EndoMap>(&h.map(), 1)),
  };
  if (r.premises_hold && !r.conclusion_holds) {
    theorem_breach("default_induction_check",
                   "A=" + p.format(a.bits()) + " is default-enabled within P "
                   "and closed under the generators but not under their "
                   "closure");
  }
  return r;
}

}  // namespace latkit
