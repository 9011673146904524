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

#ifndef LATKIT_RULES_HPP_
#define LATKIT_RULES_HPP_

#include <span>
#include <vector>

#include "latkit/closure.hpp"
#include "latkit/maps.hpp"
#include "latkit/poset.hpp"

namespace latkit {

// B ⊢ c over the elements of one poset.
struct ClosureRule {
  Mask body;
  Element head;

  friend bool operator==(const ClosureRule&, const ClosureRule&) = default;
};

// A finite collection of closure rules over one poset.
class RuleSet {
 public:
  // Throws UnknownLabel when a rule leaves the poset.
  RuleSet(FinitePoset poset, std::vector<ClosureRule> rules);

  const FinitePoset& poset() const { return poset_; }
  const std::vector<ClosureRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  Subset body(const ClosureRule& r) const { return {poset_, r.body}; }
  bool contains(const ClosureRule& r) const;

  // Every B ⊢ b with b ∈ B is in the set.
  bool is_reflexive(const Limits& limits = {}) const;
  // B ⊢ c for all c ∈ C and C ⊢ d imply B ⊢ d.
  bool is_transitive(const Limits& limits = {}) const;

  RuleSet united(const RuleSet& other) const;

 private:
  FinitePoset poset_;
  std::vector<ClosureRule> rules_;
};

// B ⊆ X implies c ∈ X, for every rule.
bool obeys(const Subset& x, const RuleSet& rules);
// Least superset of x obeying the rules.
Subset rule_closure(const RuleSet& rules, const Subset& x);

struct RuleEngineResult {
  bool obeys;
  Subset closure;
};
RuleEngineResult rule_engine(const RuleSet& rules, const Subset& x);

// σ(R): every subset of P obeying R, in increasing mask order.
std::vector<Subset> sigma(const RuleSet& rules, const Limits& limits = {});
// ρ(family): every rule obeyed by every member.
RuleSet rho(const FinitePoset& p, std::span<const Subset> family,
            const Limits& limits = {});

// c is a maximal lower bound of `body`.
bool is_default_rule(const FinitePoset& p, Mask body, Element head);
// All default rules, bodies ranging over every subset of P.
RuleSet default_rules(const FinitePoset& p, const Limits& limits = {});
// Closure under the default rules whose bodies have the form ↑x ∩ C; this
// subfamily already forces a closure system, so no body enumeration is needed.
Subset default_rule_closure(const Subset& x);

// (a ⊸* b) = {x : x ∧ a ≤ b}. Throws NotMeetSemilattice.
Subset rel_impl_star(const FinitePoset& p, Element a, Element b);
// Maximal elements of (a ⊸* b).
Subset rel_impl_max(const FinitePoset& p, Element a, Element b);
// All unary rules b ⊢ c with c ∈ (a ⊸ b) for some a.
RuleSet nuclear_rules(const FinitePoset& p);
// Default-enabled, and every (a ⊸* b) has a ceiling.
bool is_nuclear_enabled(const FinitePoset& p, const Limits& limits = {});

struct NuclearMachinery {
  Subset rel_impl_star;
  Subset rel_impl_max;
  RuleSet nuclear_rules;
  bool is_nuclear_enabled;
};
NuclearMachinery nuclear_machinery(const FinitePoset& p, Element a, Element b,
                                   const Limits& limits = {});

// Premises: P is default-enabled, A is default-enabled within P and closed
// under G. Conclusion: A is closed under the generated operator.
InductionReport default_induction_check(const Subset& a,
                                        std::span<const EndoMap> generators,
                                        const Limits& limits = {});

}  // namespace latkit

#endif  // LATKIT_RULES_HPP_
