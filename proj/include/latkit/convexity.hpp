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

#ifndef LATKIT_CONVEXITY_HPP_
#define LATKIT_CONVEXITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latkit/poset.hpp"
#include "latkit/rules.hpp"

namespace latkit {

// A closure operator on the powerset of a poset's elements, tabulated over
// all 2^n subsets.
class PowersetOperator {
 public:
  enum class Strategy { kClsys, kDcclsys, kRuleClosure, kExplicit };

  // Throws CapExceeded.
  static PowersetOperator clsys(const FinitePoset& p, const Limits& limits = {});
  static PowersetOperator dcclsys(const FinitePoset& p,
                                  const Limits& limits = {});
  static PowersetOperator rule_closure(const RuleSet& rules,
                                       const Limits& limits = {});
  // table[X] is the closure of X. Throws NotPowersetClosure, CapExceeded.
  static PowersetOperator from_table(const FinitePoset& p,
                                     std::vector<Mask> table,
                                     const Limits& limits = {});

  const FinitePoset& universe() const { return universe_; }
  Strategy strategy() const { return strategy_; }
  const std::vector<Mask>& table() const { return table_; }
  Mask operator()(Mask x) const { return table_[x]; }
  bool is_closed(Mask x) const { return table_[x] == x; }

  friend bool operator==(const PowersetOperator& a, const PowersetOperator& b) {
    return a.table_ == b.table_ && a.universe_ == b.universe_;
  }

 private:
  PowersetOperator(FinitePoset p, Strategy s, std::vector<Mask> table);

  FinitePoset universe_;
  Strategy strategy_;
  std::vector<Mask> table_;
};

std::string_view to_string(PowersetOperator::Strategy s);

struct ConvexityWitness {
  Mask a;
  Element x;
  Element y;
};

struct ConvexityReport {
  bool anti_exchange;
  bool cas;
  std::optional<ConvexityWitness> witness;
};

// Anti-exchange over every A and CAS over closed sets; the verdicts must
// agree (TheoremBreach otherwise).
ConvexityReport convexity_checks(const PowersetOperator& op);

// relation[a] holds every b with a ≤ b.
using Relation = std::vector<Mask>;

Relation order_relation(const FinitePoset& p);
bool is_preorder(const Relation& r);
bool is_antisymmetric(const Relation& r);

struct FunnelReport {
  bool is_funnel;
  bool pointwise;        // y ∈ γ(X) implies y ∈ γ({x ∈ X : y ≤ x})
  bool upper_sets;       // γ(X) ∩ U ⊆ γ(X ∩ U) for upper sets U
  bool up_restriction;   // {z ∈ γ(X) : y ≤ z} ⊆ γ({x ∈ X : y ≤ x})
  // For funnels: x ∉ γ(A) and x ∈ γ(A ∪ {y}) imply x ≤ y.
  std::optional<bool> exchange_order;
  std::string witness;
};

// Throws NotAPreorder; TheoremBreach when the three conditions disagree.
FunnelReport funnel_check(const PowersetOperator& op, const Relation& preorder);

enum class AcyclicityMode { kPosetOrder, kSearch };

// kPosetOrder tests the universe's own order; kSearch tries every partial
// order and needs at most 5 elements (CapExceeded otherwise).
bool acyclicity(const PowersetOperator& op, AcyclicityMode mode);

}  // namespace latkit

#endif  // LATKIT_CONVEXITY_HPP_
