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

#ifndef LATKIT_POSET_HPP_
#define LATKIT_POSET_HPP_

#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latkit/bits.hpp"

namespace latkit {

// Caps on the exponential definitional checks. Exceeding a cap raises
// CapExceeded unless `force` is set; nothing is ever approximated.
struct Limits {
  std::size_t subset_cap = 14;    // enumeration of all subsets of a poset
  std::size_t directed_cap = 12;  // quantification over directed subsets
  bool force = false;

  void require_subsets(const char* operation, std::size_t n) const;
  void require_directed(const char* operation, std::size_t n) const;
};

// A validated finite partial order. Cheap to copy; the order data is shared
// and immutable.
class FinitePoset {
 public:
  using OrderPair = std::pair<std::string, std::string>;

  // Builds the reflexive-transitive closure of `pairs` over `labels`.
  // Throws DuplicateLabel, UnknownLabel, CycleDetected or PosetTooLarge.
  static FinitePoset build(std::vector<std::string> labels,
                           std::span<const OrderPair> pairs);
  static FinitePoset build(std::vector<std::string> labels,
                           std::initializer_list<OrderPair> pairs) {
    return build(std::move(labels),
                 std::span<const OrderPair>(pairs.begin(), pairs.size()));
  }

  std::size_t size() const { return impl_->labels.size(); }
  Mask all() const { return full_mask(size()); }
  const std::vector<std::string>& labels() const { return impl_->labels; }
  const std::string& label(Element e) const { return impl_->labels.at(e); }
  std::optional<Element> find(std::string_view label) const;
  // Throws UnknownLabel.
  Element index_of(std::string_view label) const;

  bool leq(Element a, Element b) const { return has(impl_->up[a], b); }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  // ↑x and ↓x.
  Mask up(Element e) const { return impl_->up[e]; }
  Mask down(Element e) const { return impl_->down[e]; }

  Mask upper_bounds(Mask x) const;
  Mask lower_bounds(Mask x) const;
  Mask maximal(Mask x) const;
  Mask minimal(Mask x) const;
  std::optional<Element> least(Mask x) const;
  std::optional<Element> greatest(Mask x) const;
  std::optional<Element> join(Mask x) const { return least(upper_bounds(x)); }
  std::optional<Element> meet(Mask x) const {
    return greatest(lower_bounds(x));
  }
  std::optional<Element> join(Element a, Element b) const {
    return join(bit(a) | bit(b));
  }
  std::optional<Element> meet(Element a, Element b) const {
    return meet(bit(a) | bit(b));
  }
  // Join of x computed inside the subposet `universe`.
  std::optional<Element> join_within(Mask universe, Mask x) const {
    return least(upper_bounds(x) & universe);
  }
  std::optional<Element> bottom() const { return least(all()); }
  std::optional<Element> top() const { return greatest(all()); }

  Mask lower_closure(Mask x) const;
  Mask upper_closure(Mask x) const;
  bool is_lower_set(Mask x) const { return lower_closure(x) == x; }
  bool is_upper_set(Mask x) const { return upper_closure(x) == x; }
  // Nonempty, and every pair has an upper bound inside x.
  bool is_directed(Mask x) const;
  bool is_meet_semilattice() const;

  // Same labels in the same order with the same relation.
  bool same_as(const FinitePoset& other) const;
  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.same_as(b);
  }

  std::string format(Mask x) const;  // "{a,b}" in element order

 private:
  struct Impl {
    std::vector<std::string> labels;
    std::vector<Mask> up;
    std::vector<Mask> down;
  };
  explicit FinitePoset(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Throws MixedPosets when the two posets differ.
void require_same_poset(const char* operation, const FinitePoset& a,
                        const FinitePoset& b);

// A set of elements of a specific poset.
class Subset {
 public:
  // Throws UnknownLabel when bits reference elements outside the poset.
  Subset(FinitePoset poset, Mask bits);
  static Subset of(const FinitePoset& poset,
                   std::span<const std::string> labels);
  static Subset of(const FinitePoset& poset,
                   std::initializer_list<std::string_view> labels);
  static Subset empty(const FinitePoset& poset) { return {poset, 0}; }
  static Subset full(const FinitePoset& poset) { return {poset, poset.all()}; }

  const FinitePoset& poset() const { return poset_; }
  Mask bits() const { return bits_; }
  bool contains(Element e) const { return has(bits_, e); }
  std::size_t size() const { return popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  std::vector<Element> members() const { return elements_of(bits_); }
  std::vector<std::string> labels() const;

  Subset complement() const { return {poset_, poset_.all() & ~bits_}; }
  bool is_subset_of(const Subset& other) const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.bits_ == b.bits_ && a.poset_ == b.poset_;
  }
  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);

 private:
  FinitePoset poset_;
  Mask bits_;
};

struct OrderQueries {
  Subset upper_bounds;
  Subset lower_bounds;
  Subset maximal_elements;
  std::optional<Element> least_element;
  std::optional<Element> greatest_element;
  Subset lower_closure;
  Subset upper_closure;
  bool is_lower_set;
  bool is_upper_set;
};

OrderQueries order_queries(const Subset& x);

struct LatticeQueries {
  std::optional<Element> join;
  std::optional<Element> meet;
  bool is_directed;
};

LatticeQueries lattice_queries(const Subset& x);

// All directed subsets of `within`, in increasing mask order.
std::vector<Mask> directed_subsets(const FinitePoset& p, Mask within,
                                   const Limits& limits);

// The way-below relation, computed by quantifying over every directed subset
// that has a join. column[y] is the set of x with x ≪ y.
class WayBelow {
 public:
  WayBelow(const FinitePoset& p, const Limits& limits);
  bool operator()(Element x, Element y) const { return has(column_[y], x); }
  // ↡y
  Mask below(Element y) const { return column_[y]; }

 private:
  std::vector<Mask> column_;
};

bool way_below(const FinitePoset& p, Element x, Element y,
               const Limits& limits = {});
// ↡x is directed with join x, for every x.
bool is_continuous(const FinitePoset& p, const Limits& limits = {});
// x ≪ z implies x ≪ y ≪ z for some y.
bool interpolation_check(const FinitePoset& p, const Limits& limits = {});

// Every element of x lies below a maximal element of the subposet x.
bool has_ceiling(const FinitePoset& p, Mask x);
// Every set of lower bounds has a ceiling.
bool is_default_enabled(const FinitePoset& p, const Limits& limits = {});
// The subposet `a` is default-enabled and every ↓x ∩ a (x in p) has a ceiling.
bool is_default_enabled_within(const FinitePoset& p, Mask a,
                               const Limits& limits = {});

struct Enabledness {
  bool has_ceiling;
  bool is_default_enabled;
};

Enabledness enabledness(const Subset& x, const Limits& limits = {});

}  // namespace latkit

#endif  // LATKIT_POSET_HPP_
