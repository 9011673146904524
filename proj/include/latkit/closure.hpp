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

#ifndef LATKIT_CLOSURE_HPP_
#define LATKIT_CLOSURE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "latkit/maps.hpp"
#include "latkit/poset.hpp"

namespace latkit {

// An idempotent preclosure map.
class ClosureOperator {
 public:
  // Throws NotAClosureOperator.
  explicit ClosureOperator(EndoMap map);

  const EndoMap& map() const { return map_; }
  const FinitePoset& poset() const { return map_.poset(); }
  Element operator()(Element x) const { return map_(x); }
  Subset fixpoints() const { return fix(map_); }

  friend bool operator==(const ClosureOperator& a, const ClosureOperator& b) {
    return a.map_ == b.map_;
  }

 private:
  EndoMap map_;
};

// A subset C such that every ↑x ∩ C has a least element.
class ClosureSystem {
 public:
  // Throws NotAClosureSystem.
  explicit ClosureSystem(Subset subset);

  const Subset& subset() const { return subset_; }
  const FinitePoset& poset() const { return subset_.poset(); }
  Mask bits() const { return subset_.bits(); }

  friend bool operator==(const ClosureSystem& a, const ClosureSystem& b) {
    return a.subset_ == b.subset_;
  }

 private:
  Subset subset_;
};

bool is_closure_system(const FinitePoset& p, Mask x);
inline bool is_closure_system(const Subset& x) {
  return is_closure_system(x.poset(), x.bits());
}

// x ↦ least element of C ∩ ↑x.
ClosureOperator duality(const ClosureSystem& c);
// Fix(γ).
ClosureSystem duality_inv(const ClosureOperator& op);

// The least closure operator above every map in `generators`, obtained as the
// operator of ⋂ Fix(g). Throws NotPreclosure or MixedPosets.
ClosureOperator generate_closure(const FinitePoset& p,
                                 std::span<const EndoMap> generators);
// Same operator, obtained by applying the generators round-robin from each x
// until nothing moves.
ClosureOperator kleene_generate(const FinitePoset& p,
                                std::span<const EndoMap> generators);

struct InductionReport {
  bool premises_hold;
  bool conclusion_holds;
};

// Premises: A is closed under directed joins and closed under G.
// Conclusion: A is closed under the generated operator. Premises without the
// conclusion raise TheoremBreach.
InductionReport induction_check(const Subset& a,
                                std::span<const EndoMap> generators,
                                const Limits& limits = {});
// Premises: A is inaccessible by directed joins and inversely closed under G.
// Conclusion: A is inversely closed under the generated operator.
InductionReport obverse_induction_check(const Subset& a,
                                        std::span<const EndoMap> generators,
                                        const Limits& limits = {});

// The complete lattice Cl(P), held as its closure systems.
struct ClLattice {
  FinitePoset poset;
  std::vector<ClosureSystem> closure_systems;  // increasing mask order

  std::vector<ClosureOperator> operators() const;
  // Join in Cl(P): fixpoint set is the intersection.
  ClosureOperator join(std::span<const ClosureOperator> ops) const;
  // Meet in Cl(P): operator of the least closure system containing every
  // fixpoint set. Absent when that intersection is not a closure system.
  std::optional<ClosureOperator> meet(std::span<const ClosureOperator> ops) const;
};

ClLattice enumerate_cl_lattice(const FinitePoset& p, const Limits& limits = {});

// Least closure system containing x, by forced default-rule firing.
Subset clsys(const Subset& x);
// Same, as the intersection of every enumerated closure system containing x.
Subset clsys_by_intersection(const Subset& x, const Limits& limits = {});
// Joins of all directed subsets of x that have a join.
Subset dj(const Subset& x, const Limits& limits = {});
// Least directed-closed closure system containing x.
Subset dcclsys(const Subset& x, const Limits& limits = {});

struct GeneratedSystems {
  ClosureSystem clsys;
  ClosureSystem dcclsys;
  Subset dj;
};

// Cross-checks both clsys routes when the poset is within the subset cap.
GeneratedSystems generated_systems(const Subset& x, const Limits& limits = {});

// x ↦ ⋁ γ(↡x).
ClosureOperator sccore(const ClosureOperator& op, const Limits& limits = {});
// Greatest Scott-continuous closure operator below γ, by enumeration.
ClosureOperator sccore_bruteforce(const ClosureOperator& op,
                                  const Limits& limits = {});

// Least fixed point of an increasing map above `start` (above the bottom
// element when omitted). Throws NotIncreasing, NotAscendingAt, NoLeastElement.
Element tarski(const EndoMap& f, std::optional<Element> start = std::nullopt);

}  // namespace latkit

#endif  // LATKIT_CLOSURE_HPP_
