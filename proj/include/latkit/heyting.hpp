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

#ifndef LATKIT_HEYTING_HPP_
#define LATKIT_HEYTING_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latkit/closure.hpp"
#include "latkit/maps.hpp"
#include "latkit/poset.hpp"

namespace latkit {

enum class StructureLevel {
  kNone,
  kMeetSemilattice,
  kPreframe,  // + directed joins exist and binary meets distribute over them
  kFrame,     // complete lattice with x ∧ ⋁Y = ⋁(x ∧ y) for every Y
};

std::string_view to_string(StructureLevel level);

// The highest level reached, with a witness for the first failed level.
struct FrameView {
  FinitePoset poset;
  StructureLevel level;
  std::string witness;
};

FrameView validate_structure(const FinitePoset& p, const Limits& limits = {});

// A poset validated as a frame, with its meet and implication tables.
class Frame {
 public:
  // Throws NotAFrame.
  explicit Frame(FinitePoset p, const Limits& limits = {});

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element top() const { return top_; }
  Element bottom() const { return bottom_; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element meet_of(Mask x) const { return *poset_.meet(x); }
  Element join_of(Mask x) const { return *poset_.join(x); }
  // a ⇒ b = ⋁{x : x ∧ a ≤ b}
  Element implies(Element a, Element b) const {
    return implies_[a * size() + b];
  }
  // (L ⇒ X) = {a ⇒ x : a ∈ L, x ∈ X}
  Mask implications_into(Mask x) const;

 private:
  FinitePoset poset_;
  Element top_;
  Element bottom_;
  std::vector<Element> meet_;
  std::vector<Element> implies_;
};

Element heyting_implication(const Frame& frame, Element a, Element b);

// A closure operator preserving binary meets.
class Nucleus {
 public:
  // Throws NotANucleus.
  explicit Nucleus(ClosureOperator op);

  const ClosureOperator& op() const { return op_; }
  const EndoMap& map() const { return op_.map(); }
  const FinitePoset& poset() const { return op_.poset(); }
  Element operator()(Element x) const { return op_(x); }
  Subset fixpoints() const { return op_.fixpoints(); }

  friend bool operator==(const Nucleus& a, const Nucleus& b) {
    return a.op_ == b.op_;
  }

 private:
  ClosureOperator op_;
};

// Preclosure map preserving binary meets (false off meet-semilattices).
bool is_prenucleus(const EndoMap& f);
bool is_nucleus(const EndoMap& f);

// Pointwise meet. Throws NotMeetSemilattice.
Nucleus nucleus_meet(const Nucleus& a, const Nucleus& b);
// Fix(γ ∧ δ) = {x ∧ y : x ∈ Fix(γ), y ∈ Fix(δ)} for closure operators γ, δ.
bool fix_of_meet_check(const ClosureOperator& a, const ClosureOperator& b);

struct NucleusPredicates {
  std::array<bool, 2> is_prenucleus;  // per operand
  std::array<bool, 2> is_nucleus;
  std::optional<Nucleus> meet;  // present when both operands are nuclei
  bool fix_of_meet_check;
};

NucleusPredicates nucleus_predicates_and_meet(const ClosureOperator& a,
                                              const ClosureOperator& b);

// The closure generated by a set of prenuclei on a preframe, as a nucleus.
// Throws NotPreframe, NotPrenucleus; TheoremBreach if the result is not a
// nucleus.
Nucleus nucleus_join(const FinitePoset& p, std::span<const EndoMap> prenuclei,
                     const Limits& limits = {});

// Every nucleus, in a linear extension of the pointwise order (largest
// fixpoint set first). Throws NotMeetSemilattice, CapExceeded.
std::vector<Nucleus> enumerate_nuclei(const FinitePoset& p,
                                      const Limits& limits = {});

// Definitional (the operator of x is a nucleus) and via ⇒-closure; the two
// must agree.
bool is_nuclear_system(const Frame& frame, Mask x);
// Least nuclear system containing x: clsys(L ⇒ x).
Subset nucsys(const Frame& frame, Mask x);
// y ↦ ⋀_{x ∈ X} ((y ⇒ x) ⇒ x); its fixpoints equal nucsys(X).
Nucleus nuc_of(const Frame& frame, Mask x);
Nucleus regular_nucleus(const Frame& frame, Element x);
// ⋀{r_x : x ∈ Fix(γ), γ ≤ r_x}
Nucleus least_nucleus_above(const Frame& frame, const ClosureOperator& op);
// y ↦ ⋀_u ((y ⇒ γ(u)) ⇒ γ(u))
Nucleus nuclear_core(const Frame& frame, const ClosureOperator& op);
Nucleus least_nucleus_above_bruteforce(const Frame& frame,
                                       const ClosureOperator& op,
                                       const Limits& limits = {});
Nucleus nuclear_core_bruteforce(const Frame& frame, const ClosureOperator& op,
                                const Limits& limits = {});

struct NuclearGenerators {
  bool is_nuclear_system;
  Subset nucsys;
  Nucleus nuc_x;
  Nucleus regular_nucleus;
  Nucleus least_nucleus_above;
  Nucleus nuclear_core;
};

// Runs every formula and its brute-force counterpart; disagreement raises
// TheoremBreach.
NuclearGenerators nuclear_systems_and_generators(const Frame& frame, Mask x,
                                                 Element element,
                                                 const ClosureOperator& op,
                                                 const Limits& limits = {});

struct NucleusFrameReport {
  std::vector<Nucleus> nuclei;
  // leq[i] has bit j set iff nuclei[i] ≤ nuclei[j] pointwise.
  std::vector<Mask> leq;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  bool is_complete_lattice;
  bool joins_are_generated;
  bool is_distributive;
  // Whether distributivity and meets were checked over every Γ ⊆ Nuc(P), or
  // only over pairs.
  bool exhaustive;
  std::optional<bool> meets_pointwise;  // frames only
  bool pointwise_meets_scott_continuous;
};

// Builds Nuc(P) under the pointwise order and checks that it is a frame.
// Throws NotPreframe; TheoremBreach when a check fails on a preframe.
NucleusFrameReport frame_of_nuclei_check(const FinitePoset& p,
                                         const Limits& limits = {});

}  // namespace latkit

#endif  // LATKIT_HEYTING_HPP_
