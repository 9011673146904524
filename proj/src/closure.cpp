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

#include "latkit/closure.hpp"

#include <algorithm>

#include "latkit/error.hpp"
#include "latkit/rules.hpp"

namespace latkit {

ClosureOperator::ClosureOperator(EndoMap map) : map_(std::move(map)) {
  if (!is_closure_operator(map_)) {
    throw Error(ErrorKind::kNotAClosureOperator, "closure_operator",
                "map " + map_.format());
  }
}

ClosureSystem::ClosureSystem(Subset subset) : subset_(std::move(subset)) {
  if (!is_closure_system(subset_)) {
    throw Error(ErrorKind::kNotAClosureSystem, "closure_system",
                subset_.poset().format(subset_.bits()));
  }
}

bool is_closure_system(const FinitePoset& p, Mask x) {
  for (Element e = 0; e < p.size(); ++e) {
    if (!p.least(p.up(e) & x)) return false;
  }
  return true;
}

namespace {

// Assumes c is a closure system.
EndoMap operator_table(const FinitePoset& p, Mask c) {
  std::vector<Element> t(p.size());
  for (Element e = 0; e < p.size(); ++e) t[e] = *p.least(p.up(e) & c);
  return {p, std::move(t)};
}

Mask fix_mask(const FinitePoset& p, std::span<const EndoMap> family) {
  return fix(p, family).bits();
}

void require_preclosures(const char* operation, const FinitePoset& p,
                         std::span<const EndoMap> generators) {
  for (const auto& g : generators) {
    require_same_poset(operation, p, g.poset());
    if (!is_preclosure(g)) {
      throw Error(ErrorKind::kNotPreclosure, operation, "map " + g.format());
    }
  }
}

}  // namespace

ClosureOperator duality(const ClosureSystem& c) {
  return ClosureOperator(operator_table(c.poset(), c.bits()));
}

ClosureSystem duality_inv(const ClosureOperator& op) {
  return ClosureSystem(op.fixpoints());
}

ClosureOperator generate_closure(const FinitePoset& p,
                                 std::span<const EndoMap> generators) {
  require_preclosures("generate_closure", p, generators);
  const Mask common = fix_mask(p, generators);
  if (!is_closure_system(p, common)) {
    theorem_breach("generate_closure",
                   "intersection of fixpoint sets " + p.format(common) +
                       " is not a closure system");
  }
  return ClosureOperator(operator_table(p, common));
}

ClosureOperator kleene_generate(const FinitePoset& p,
                                std::span<const EndoMap> generators) {
  require_preclosures("kleene_generate", p, generators);
  std::vector<Element> t(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    Element y = x;
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& g : generators) {
        if (g(y) != y) {
          y = g(y);
          moved = true;
        }
      }
    }
    t[x] = y;
  }
  return ClosureOperator(EndoMap(p, std::move(t)));
}

InductionReport induction_check(const Subset& a,
                                std::span<const EndoMap> generators,
                                const Limits& limits) {
  const auto& p = a.poset();
  const ClosureOperator h = generate_closure(p, generators);
  InductionReport r{
      .premises_hold = directed_closed(a, limits) && closed_under(a, generators),
      .conclusion_holds =
          closed_under(a, std::span<const EndoMap>(&h.map(), 1)),
  };
  if (r.premises_hold && !r.conclusion_holds) {
    theorem_breach("induction_check",
                   "A=" + p.format(a.bits()) + " is closed under directed "
                   "joins and the generators but not under their closure");
  }
  return r;
}

InductionReport obverse_induction_check(const Subset& a,
                                        std::span<const EndoMap> generators,
                                        const Limits& limits) {
  const auto& p = a.poset();
  const ClosureOperator h = generate_closure(p, generators);
  InductionReport r{
      .premises_hold = inaccessible_by_directed_joins(a, limits) &&
                       inversely_closed_under(a, generators),
      .conclusion_holds =
          inversely_closed_under(a, std::span<const EndoMap>(&h.map(), 1)),
  };
  if (r.premises_hold && !r.conclusion_holds) {
    theorem_breach("obverse_induction_check",
                   "A=" + p.format(a.bits()) + " is inaccessible and inversely "
                   "closed under the generators but not under their closure");
  }
  return r;
}

std::vector<ClosureOperator> ClLattice::operators() const {
  std::vector<ClosureOperator> out;
  out.reserve(closure_systems.size());
  for (const auto& c : closure_systems) out.push_back(duality(c));
  return out;
}

ClosureOperator ClLattice::join(std::span<const ClosureOperator> ops) const {
  std::vector<EndoMap> maps;
  for (const auto& op : ops) maps.push_back(op.map());
  return generate_closure(poset, maps);
}

std::optional<ClosureOperator> ClLattice::meet(
    std::span<const ClosureOperator> ops) const {
  Mask united = 0;
  for (const auto& op : ops) {
    require_same_poset("cl_meet", poset, op.poset());
    united |= op.fixpoints().bits();
  }
  Mask c = poset.all();
  for (const auto& sys : closure_systems) {
    if ((united & ~sys.bits()) == 0) c &= sys.bits();
  }
  if (!is_closure_system(poset, c)) return std::nullopt;
  return ClosureOperator(operator_table(poset, c));
}

ClLattice enumerate_cl_lattice(const FinitePoset& p, const Limits& limits) {
  limits.require_subsets("enumerate_cl_lattice", p.size());
  ClLattice out{p, {}};
  for_each_submask(p.all(), [&](Mask c) {
    if (is_closure_system(p, c)) out.closure_systems.emplace_back(Subset(p, c));
  });
  return out;
}

Subset clsys(const Subset& x) { return default_rule_closure(x); }

Subset clsys_by_intersection(const Subset& x, const Limits& limits) {
  const auto& p = x.poset();
  limits.require_subsets("clsys", p.size());
  Mask c = p.all();
  for_each_submask(p.all(), [&](Mask s) {
    if ((x.bits() & ~s) == 0 && is_closure_system(p, s)) c &= s;
  });
  return {p, c};
}

Subset dj(const Subset& x, const Limits& limits) {
  const auto& p = x.poset();
  Mask out = 0;
  for (Mask d : directed_subsets(p, x.bits(), limits)) {
    if (auto j = p.join(d)) out |= bit(*j);
  }
  return {p, out};
}

Subset dcclsys(const Subset& x, const Limits& limits) {
  // Both steps are forced on any directed-closed closure system containing
  // the current set; the fixpoint is itself one.
  Subset current = x;
  while (true) {
    Subset next = clsys(dj(current, limits) | current);
    if (next == current) return current;
    current = std::move(next);
  }
}

GeneratedSystems generated_systems(const Subset& x, const Limits& limits) {
  const auto& p = x.poset();
  Subset by_rules = clsys(x);
  if (limits.force || p.size() <= limits.subset_cap) {
    Subset by_intersection = clsys_by_intersection(x, limits);
    if (!(by_rules == by_intersection)) {
      theorem_breach("generated_systems",
                     "default-rule closure " + p.format(by_rules.bits()) +
                         " differs from intersection " +
                         p.format(by_intersection.bits()));
    }
  }
  return GeneratedSystems{
      .clsys = ClosureSystem(std::move(by_rules)),
      .dcclsys = ClosureSystem(dcclsys(x, limits)),
      .dj = dj(x, limits),
  };
}

ClosureOperator sccore(const ClosureOperator& op, const Limits& limits) {
  const auto& p = op.poset();
  const WayBelow wb(p, limits);
  std::vector<Element> t(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    auto j = p.join(op.map().image(wb.below(x)));
    if (!j) {
      theorem_breach("sccore", "⋁γ(↡" + p.label(x) + ") does not exist");
    }
    t[x] = *j;
  }
  EndoMap m(p, std::move(t));
  if (!is_closure_operator(m)) {
    theorem_breach("sccore", "formula result " + m.format() +
                                 " is not a closure operator");
  }
  return ClosureOperator(std::move(m));
}

ClosureOperator sccore_bruteforce(const ClosureOperator& op,
                                  const Limits& limits) {
  std::vector<ClosureOperator> candidates;
  for (auto& k : enumerate_cl_lattice(op.poset(), limits).operators()) {
    if (pointwise_leq(k.map(), op.map()) && is_scott_continuous(k.map(), limits)) {
      candidates.push_back(std::move(k));
    }
  }
  for (const auto& k : candidates) {
    bool greatest = std::all_of(
        candidates.begin(), candidates.end(),
        [&](const ClosureOperator& o) { return pointwise_leq(o.map(), k.map()); });
    if (greatest) return k;
  }
  theorem_breach("sccore_bruteforce",
                 "no greatest Scott-continuous closure operator below " +
                     op.map().format());
}

Element tarski(const EndoMap& f, std::optional<Element> start) {
  const auto& p = f.poset();
  if (!is_increasing(f)) {
    throw Error(ErrorKind::kNotIncreasing, "tarski", "map " + f.format());
  }
  if (!start) {
    start = p.bottom();
    if (!start) {
      throw Error(ErrorKind::kNoLeastElement, "tarski",
                  "no start given and the poset has no bottom");
    }
  }
  const Element x = *start;
  if (!p.leq(x, f(x))) {
    throw Error(ErrorKind::kNotAscendingAt, "tarski",
                p.label(x) + " is not below its image " + p.label(f(x)));
  }
  // f restricts to a preclosure map on A = {y : y ≤ f(y)}; the generated
  // closure of that restriction, evaluated at x, is the answer.
  Mask ascending_part = 0;
  for (Element y = 0; y < p.size(); ++y) {
    if (p.leq(y, f(y))) ascending_part |= bit(y);
  }
  Element y = x;
  while (f(y) != y) {
    y = f(y);
    if (!has(ascending_part, y)) {
      theorem_breach("tarski", "iteration left the ascending part at " +
                                   p.label(y));
    }
  }
  // Scan of all fixed points above x.
  Mask fixed_above = fix(f).bits() & p.up(x);
  auto least = p.least(fixed_above);
  if (!least || *least != y) {
    theorem_breach("tarski", "construction gives " + p.label(y) +
                                 " but the fixpoint scan disagrees");
  }
  return y;
}

}  // namespace latkit
