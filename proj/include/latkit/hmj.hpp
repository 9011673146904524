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

#ifndef LATKIT_HMJ_HPP_
#define LATKIT_HMJ_HPP_

#include <utility>
#include <vector>

#include "latkit/heyting.hpp"
#include "latkit/poset.hpp"

namespace latkit {

// An upper set containing the top element and closed under binary meets.
class FilterSet {
 public:
  // Throws NotAFilter.
  explicit FilterSet(Subset subset);

  const Subset& subset() const { return subset_; }
  Mask bits() const { return subset_.bits(); }

  friend bool operator==(const FilterSet& a, const FilterSet& b) {
    return a.subset_ == b.subset_;
  }

 private:
  Subset subset_;
};

bool is_filter(const FinitePoset& p, Mask x);

// All filters in increasing mask order. Throws CapExceeded.
std::vector<FilterSet> enumerate_filters(const Frame& frame,
                                         const Limits& limits = {});

// a°(x) = a ⇒ x
Nucleus open_nucleus(const Frame& frame, Element a);

// ⋁{a° : γ(a) = ⊤}
Nucleus fitting(const Frame& frame, const Nucleus& op,
                const Limits& limits = {});
bool is_fitted(const Frame& frame, const Nucleus& op,
               const Limits& limits = {});
// γ⁻¹(⊤)
FilterSet oneker(const Frame& frame, const Nucleus& op);
// ⋁{s° : s ∈ S}
Nucleus fitnuc(const Frame& frame, Mask s, const Limits& limits = {});
// oneker(fitnuc(S)), the least nuclear filter containing S.
FilterSet nucfilt(const Frame& frame, Mask s, const Limits& limits = {});

struct FittingReport {
  Nucleus fitting;
  bool is_fitted;
  FilterSet oneker;
  Nucleus fitnuc;
  FilterSet nucfilt;
};

// Raises TheoremBreach when fitnuc(S) ≤ γ ⟺ S ⊆ oneker(γ) fails.
FittingReport fitting_and_galois(const Frame& frame, const Nucleus& op,
                                 Mask s, const Limits& limits = {});

// The adjunction and both triangle identities of ⟨fitnuc, oneker⟩, over
// every subset and every nucleus.
bool galois_check(const Frame& frame, const Limits& limits = {});

struct FilterQueries {
  bool is_filter;
  bool is_scott_open;
  bool is_nuclear_filter;
};

// Scott-openness and nuclearity are each decided two ways; disagreement
// raises TheoremBreach.
FilterQueries filters(const Frame& frame, Mask x, const Limits& limits = {});

// Top of Fix(γ) is inaccessible by directed joins taken inside Fix(γ).
bool is_compact(const Frame& frame, const Nucleus& op,
                const Limits& limits = {});

// Fix(γ) is a frame under γ(⋁S), and x ↦ γ(x) preserves finite meets and all
// joins.
bool quotient_frame_check(const Frame& frame, const Nucleus& op,
                          const Limits& limits = {});

struct HmjCorrespondence {
  std::vector<std::pair<FilterSet, Nucleus>> pairs;
  std::size_t compact_fitted_count;
  bool every_filter_scott_open;
  bool every_fitted_compact;
  bool antiisomorphism_verified;
};

// Pairs each Scott-open filter V with fitnuc(V) and checks that this is an
// order-reversing bijection onto the compact fitted nuclei.
HmjCorrespondence hmj_correspondence(const Frame& frame,
                                     const Limits& limits = {});

}  // namespace latkit

#endif  // LATKIT_HMJ_HPP_
