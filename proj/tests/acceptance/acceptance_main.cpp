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

// Acceptance driver: one PASS/FAIL line per criterion. Every comparison is
// exact (tolerance 0); corpora are drawn from fixed seeds so runs repeat.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "latkit/closure.hpp"
#include "latkit/convexity.hpp"
#include "latkit/error.hpp"
#include "latkit/fixtures.hpp"
#include "latkit/heyting.hpp"
#include "latkit/hmj.hpp"
#include "latkit/rules.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

namespace latkit {
namespace {

struct Tally {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

oracle::Table as_table(const EndoMap& f) {
  return {f.table().begin(), f.table().end()};
}

// Least element of a family of tables under the pointwise order.
std::optional<oracle::Table> least_table(const oracle::Order& o,
                                         const std::vector<oracle::Table>& ts) {
  for (const auto& t : ts) {
    if (std::all_of(ts.begin(), ts.end(),
                    [&](const auto& u) { return oracle::table_le(o, t, u); })) {
      return t;
    }
  }
  return std::nullopt;
}

struct Instance {
  FinitePoset poset;
  std::vector<EndoMap> generators;
};

// Random posets with up to three random preclosure generators.
std::vector<Instance> generation_corpus() {
  testing::Rng rng(1001);
  std::vector<Instance> out;
  for (int i = 0; i < 210; ++i) {
    auto p = testing::random_poset(rng, 1 + i % 7);
    std::vector<EndoMap> gens;
    for (int k = 0; k < i % 4; ++k) {
      gens.push_back(testing::random_preclosure(rng, p));
    }
    out.push_back({p, std::move(gens)});
  }
  return out;
}

std::vector<FinitePoset> random_frames(std::uint64_t seed, int count) {
  testing::Rng rng(seed);
  std::vector<FinitePoset> out;
  for (int i = 0; i < count; ++i) out.push_back(testing::random_frame(rng, 6));
  return out;
}

Tally generation() {
  Tally t;
  for (const auto& [p, gens] : generation_corpus()) {
    ++t.instances;
    const oracle::Order o(p);
    const auto op = generate_closure(p, gens);
    t.check(kleene_generate(p, gens) == op, "kleene differs on " + p.format(p.all()));
    std::vector<oracle::Table> above;
    for (auto all = enumerate_cl_lattice(p); const auto& c : all.operators()) {
      const bool ok = std::all_of(gens.begin(), gens.end(), [&](const EndoMap& g) {
        return pointwise_leq(g, c.map());
      });
      if (ok) above.push_back(as_table(c.map()));
    }
    const auto least = least_table(o, above);
    t.check(least && *least == as_table(op.map()), "lattice search differs");
    std::vector<oracle::Table> tables;
    for (const auto& g : gens) tables.push_back(as_table(g));
    const auto naive = oracle::least_closure_above(o, tables);
    t.check(naive && *naive == as_table(op.map()), "naive oracle differs");
    t.check(op.fixpoints() == fix(p, gens), "Fix is not the intersection");
  }
  return t;
}

Tally induction() {
  Tally t;
  for (const auto& [p, gens] : generation_corpus()) {
    if (p.size() > 6) continue;
    ++t.instances;
    const EndoMap closure[] = {generate_closure(p, gens).map()};
    for_each_submask(p.all(), [&](Mask a) {
      const Subset s(p, a);
      if (induction_check(s, gens).premises_hold) {
        t.check(closed_under(s, closure), "induction fails at " + p.format(a));
      }
      if (obverse_induction_check(s, gens).premises_hold) {
        t.check(inversely_closed_under(s, closure),
                "obverse induction fails at " + p.format(a));
      }
    });
  }
  return t;
}

Tally counting() {
  Tally t;
  auto count = [&](const char* what, std::size_t got, std::size_t naive,
                   std::size_t golden) {
    ++t.instances;
    t.check(got == golden && naive == golden,
            std::string(what) + ": got " + std::to_string(got) + ", oracle " +
                std::to_string(naive) + ", expected " + std::to_string(golden));
  };
  for (auto [n, golden] : {std::pair{2, 2u}, std::pair{3, 4u}}) {
    const auto c = fixtures::chain(n);
    count("closure systems of a chain", enumerate_cl_lattice(c).closure_systems.size(),
          oracle::closure_systems(oracle::Order(c)).size(), golden);
  }
  const auto b2 = fixtures::b2();
  const oracle::Order o(b2);
  count("closure systems of B2", enumerate_cl_lattice(b2).closure_systems.size(),
        oracle::closure_systems(o).size(), 7);
  count("nuclei of B2", enumerate_nuclei(b2).size(), oracle::nuclei(o).size(), 4);
  count("filters of B2", enumerate_filters(Frame(b2)).size(),
        oracle::filters(o).size(), 4);
  return t;
}

Tally tarski_theorem() {
  Tally t;
  testing::Rng rng(1004);
  for (int i = 0; i < 220; ++i) {
    ++t.instances;
    const auto p = testing::random_pointed_poset(rng, 1 + i % 7);
    const auto f = testing::random_increasing(rng, p);
    const oracle::Order o(p);
    const auto table = as_table(f);
    const auto least = o.least(oracle::fixpoints(table));
    t.check(least && static_cast<int>(tarski(f)) == *least, "least fixpoint differs");
    for (Element x = 0; x < p.size(); ++x) {
      if (!p.leq(x, f(x))) continue;
      const auto above = oracle::least_fixpoint_above(o, table, x);
      t.check(above && static_cast<int>(tarski(f, x)) == *above,
              "least fixpoint above " + p.label(x) + " differs");
    }
  }
  return t;
}

Tally nucleus_theorems() {
  Tally t;
  testing::Rng rng(1005);
  for (int i = 0; i < 110; ++i) {
    ++t.instances;
    const auto p = testing::random_meet_semilattice(rng, 6);
    const oracle::Order o(p);
    const auto nuclei = enumerate_nuclei(p);
    std::vector<EndoMap> gens;
    for (int k = 0; k < 1 + i % 3; ++k) {
      gens.push_back(testing::random_prenucleus(rng, p, nuclei));
    }
    const auto join = nucleus_join(p, gens);
    t.check(is_nucleus(join.map()), "join is not a nucleus");
    std::vector<oracle::Table> above;
    for (const auto& n : oracle::nuclei(o)) {
      if (std::all_of(gens.begin(), gens.end(), [&](const EndoMap& g) {
            return oracle::table_le(o, as_table(g), n);
          })) {
        above.push_back(n);
      }
    }
    const auto least = least_table(o, above);
    t.check(least && *least == as_table(join.map()), "join is not least");
    for (const auto& a : nuclei) {
      for (const auto& b : nuclei) {
        Mask product = 0;
        for_each_bit(a.fixpoints().bits(), [&](Element x) {
          for_each_bit(b.fixpoints().bits(),
                       [&](Element y) { product |= bit(*p.meet(x, y)); });
        });
        t.check(nucleus_meet(a, b).fixpoints().bits() == product,
                "Fix of a meet is not the pairwise meets");
      }
    }
    const auto report = frame_of_nuclei_check(p);
    t.check(report.is_complete_lattice && report.is_distributive &&
                report.joins_are_generated,
            "nuclei do not form a frame");
    t.check(report.exhaustive == (report.nuclei.size() <= 8),
            "distributivity not exhaustive");
  }
  return t;
}

Tally frame_formulas() {
  Tally t;
  testing::Rng rng(1006);
  for (const auto& q : random_frames(2006, 55)) {
    ++t.instances;
    const Frame f(q);
    const auto& p = f.poset();
    const oracle::Order o(p);
    for (Element a = 0; a < p.size(); ++a) {
      for (Element b = 0; b < p.size(); ++b) {
        t.check(static_cast<int>(f.implies(a, b)) == oracle::implies(o, a, b),
                "implication differs from oracle");
        for (Element c = 0; c < p.size(); ++c) {
          t.check(p.leq(f.meet(c, a), b) == p.leq(c, f.implies(a, b)),
                  "adjunction fails");
        }
      }
    }
    const auto nuclei = enumerate_nuclei(p);
    for (int k = 0; k < 6; ++k) {
      const Mask x = testing::random_subset(rng, p);
      const auto ns = nucsys(f, x);
      t.check(ns == clsys(Subset(p, f.implications_into(x))), "nucsys formula");
      Mask least = p.all();
      for (const auto& n : nuclei) {
        if ((x & ~n.fixpoints().bits()) == 0) least &= n.fixpoints().bits();
      }
      t.check(nuc_of(f, x).fixpoints().bits() == least, "nuc_X formula");
    }
    for (auto all = enumerate_cl_lattice(p); const auto& op : all.operators()) {
      t.check(nuclear_core(f, op) == nuclear_core_bruteforce(f, op),
              "nuclear core formula");
      t.check(least_nucleus_above(f, op) == least_nucleus_above_bruteforce(f, op),
              "least nucleus above formula");
    }
    for (const auto& nu : nuclei) {
      for (Element x = 0; x < p.size(); ++x) {
        t.check(pointwise_leq(nu.map(), regular_nucleus(f, x).map()) ==
                    nu.fixpoints().contains(x),
                "regular nucleus order");
      }
    }
  }
  return t;
}

Tally hmj() {
  Tally t;
  std::vector<FinitePoset> frames;
  for (const auto& [name, p] : fixtures::all()) {
    if (validate_structure(p).level == StructureLevel::kFrame) frames.push_back(p);
  }
  for (const auto& q : random_frames(2007, 55)) frames.push_back(q);
  for (const auto& q : frames) {
    ++t.instances;
    const Frame f(q);
    const auto r = hmj_correspondence(f);
    const auto naive = oracle::filters(oracle::Order(q)).size();
    t.check(r.antiisomorphism_verified, "correspondence not verified");
    t.check(r.pairs.size() == naive && r.compact_fitted_count == naive,
            "correspondence is not a bijection");
    t.check(r.every_filter_scott_open && r.every_fitted_compact,
            "finite collapse fails");
    t.check(galois_check(f), "fitnuc/oneker Galois identities fail");
  }
  return t;
}

Tally rules() {
  Tally t;
  testing::Rng rng(1008);
  for (int i = 0; i < 70; ++i) {
    ++t.instances;
    const auto p = testing::random_poset(rng, 1 + i % 7);
    const auto defaults = default_rules(p);
    for_each_submask(p.all(), [&](Mask x) {
      const Subset s(p, x);
      t.check(rule_closure(defaults, s) == clsys(s), "rule closure differs");
    });
    for (int k = 0; k < 5; ++k) {
      t.check(obeys(fix(testing::random_preclosure(rng, p)), defaults),
              "preclosure Fix disobeys default rules");
    }
    for (auto all = enumerate_cl_lattice(p); const auto& op : all.operators()) {
      t.check(obeys(op.fixpoints(), defaults), "closure Fix disobeys default rules");
    }
  }
  for (int i = 0; i < 60; ++i) {
    ++t.instances;
    const auto p = testing::random_meet_semilattice(rng, 6);
    const auto nuclear = nuclear_rules(p);
    const auto nuclei = enumerate_nuclei(p);
    for (const auto& n : nuclei) {
      t.check(obeys(n.fixpoints(), nuclear), "nucleus Fix disobeys nuclear rules");
    }
    for (int k = 0; k < 5; ++k) {
      t.check(obeys(fix(testing::random_prenucleus(rng, p, nuclei)), nuclear),
              "prenucleus Fix disobeys nuclear rules");
    }
  }
  for (int i = 0; i < 60; ++i) {
    ++t.instances;
    const auto p = testing::random_poset(rng, 1 + i % 5);
    std::uniform_int_distribution<Element> head(0, p.size() - 1);
    std::vector<ClosureRule> raw;
    for (int k = 0; k < 4; ++k) {
      raw.push_back({testing::random_subset(rng, p) & testing::random_subset(rng, p),
                     head(rng)});
    }
    const RuleSet given(p, raw);
    const auto models = sigma(given);
    const auto back = rho(p, models);
    for (const auto& r : raw) t.check(back.contains(r), "R is not within rho(sigma(R))");
    t.check(sigma(back) == models, "sigma(rho(sigma(R))) differs from sigma(R)");
    std::vector<Subset> family;
    for (int k = 0; k < 3; ++k) family.emplace_back(p, testing::random_subset(rng, p));
    const auto closed = sigma(rho(p, family));
    for (const auto& s : family) {
      t.check(std::find(closed.begin(), closed.end(), s) != closed.end(),
              "F is not within sigma(rho(F))");
    }
    t.check(rho(p, sigma(rho(p, family))).rules() == rho(p, family).rules(),
            "rho(sigma(rho(F))) differs from rho(F)");
  }
  return t;
}

Tally convexity() {
  Tally t;
  std::vector<FinitePoset> posets;
  for (const auto& [name, p] : fixtures::all()) {
    if (p.size() <= 7) posets.push_back(p);
  }
  testing::Rng rng(1009);
  for (int i = 0; i < 210; ++i) posets.push_back(testing::random_poset(rng, 1 + i % 7));
  for (const auto& p : posets) {
    ++t.instances;
    for (const auto& op : {PowersetOperator::clsys(p), PowersetOperator::dcclsys(p)}) {
      const auto r = convexity_checks(op);
      t.check(r.anti_exchange && r.cas && !r.witness,
              std::string(to_string(op.strategy())) + " is not a convex geometry on " +
                  p.format(p.all()));
    }
    const auto f = funnel_check(PowersetOperator::clsys(p), order_relation(p));
    t.check(f.is_funnel && f.pointwise && f.upper_sets && f.up_restriction,
            "poset order is not a funnel: " + f.witness);
  }
  ++t.instances;
  const auto xy = FinitePoset::build({"x", "y"}, {});
  const auto planted = PowersetOperator::from_table(xy, {0b00, 0b11, 0b11, 0b11});
  const auto bad = convexity_checks(planted);
  t.check(!bad.anti_exchange && !bad.cas && bad.witness.has_value(),
          "planted operator accepted");
  return t;
}

Tally finite_collapse() {
  Tally t;
  testing::Rng rng(1010);
  for (int i = 0; i < 80; ++i) {
    ++t.instances;
    const auto p = testing::random_poset(rng, 1 + i % 6);
    const WayBelow wb(p, Limits{});
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y = 0; y < p.size(); ++y) {
        t.check(wb(x, y) == p.leq(x, y), "way-below differs from order");
      }
    }
    for (auto all = enumerate_cl_lattice(p); const auto& op : all.operators()) {
      t.check(is_scott_continuous(op.map()), "closure operator not continuous");
      t.check(sccore(op) == op, "sccore moves an operator");
    }
    for_each_submask(p.all(), [&](Mask x) {
      const Subset s(p, x);
      t.check(dcclsys(s) == clsys(s), "dcclsys differs from clsys");
    });
  }
  for (const auto& q : random_frames(2010, 40)) {
    ++t.instances;
    const Frame f(q);
    for (const auto& filter : enumerate_filters(f)) {
      t.check(filters(f, filter.bits()).is_scott_open, "filter not Scott-open");
    }
  }
  return t;
}

struct Criterion {
  const char* name;
  std::function<Tally()> run;
};

}  // namespace
}  // namespace latkit

int main() {
  using latkit::Criterion;
  const Criterion criteria[] = {
      {"generation theorem", latkit::generation},
      {"induction principles", latkit::induction},
      {"counting fixtures", latkit::counting},
      {"tarski least fixpoints", latkit::tarski_theorem},
      {"nucleus theorems", latkit::nucleus_theorems},
      {"frame formulas", latkit::frame_formulas},
      {"hmj correspondence", latkit::hmj},
      {"closure rules", latkit::rules},
      {"convexity", latkit::convexity},
      {"finite collapse", latkit::finite_collapse},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string verdict;
    std::string detail;
    try {
      const auto t = c.run();
      verdict = t.failures == 0 && t.checks > 0 ? "PASS" : "FAIL";
      detail = std::to_string(t.instances) + " instances, " +
               std::to_string(t.checks) + " checks, " +
               std::to_string(t.failures) + " mismatches (tolerance 0)";
      if (t.failures > 0) detail += "; first: " + t.first_failure;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (verdict == "FAIL") ++failed;
    std::printf("%s %2d %-24s %s [%lld ms]\n", verdict.c_str(), index, c.name,
                detail.c_str(), static_cast<long long>(ms));
  }
  return failed == 0 ? 0 : 1;
}
