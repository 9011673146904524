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

#ifndef LATKIT_MAPS_HPP_
#define LATKIT_MAPS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latkit/poset.hpp"

namespace latkit {

// A total self-map on the elements of a poset.
class EndoMap {
 public:
  // Throws UnknownLabel if the table is not total or leaves the poset.
  EndoMap(FinitePoset poset, std::vector<Element> table, std::string name = {});

  static EndoMap identity(const FinitePoset& p);
  static EndoMap constant(const FinitePoset& p, Element value);

  const FinitePoset& poset() const { return poset_; }
  const std::vector<Element>& table() const { return table_; }
  const std::string& name() const { return name_; }
  Element operator()(Element x) const { return table_[x]; }

  Mask image(Mask x) const;
  Mask preimage(Mask x) const;

  // Equality of tables; names are ignored.
  friend bool operator==(const EndoMap& a, const EndoMap& b) {
    return a.table_ == b.table_ && a.poset_ == b.poset_;
  }

  std::string format() const;  // "0↦1, 1↦2"

 private:
  FinitePoset poset_;
  std::vector<Element> table_;
  std::string name_;
};

struct Classification {
  bool increasing;
  bool ascending;
  bool descending;
  bool idempotent;
  bool preclosure;
  bool closure_operator;
  bool interior_operator;
  // Quantified over every directed subset with a join.
  bool scott_continuous;
  // On a finite poset Scott-continuity is monotonicity; must agree with the
  // definitional flag.
  bool scott_continuous_shortcut;
  // Absent unless the poset is a meet-semilattice.
  std::optional<bool> preserves_binary_meets;
};

// Throws CapExceeded, or TheoremBreach if the two Scott-continuity routes
// disagree.
Classification classify(const EndoMap& f, const Limits& limits = {});

bool is_increasing(const EndoMap& f);
bool is_ascending(const EndoMap& f);
bool is_descending(const EndoMap& f);
bool is_idempotent(const EndoMap& f);
bool is_preclosure(const EndoMap& f);
bool is_closure_operator(const EndoMap& f);
bool is_interior_operator(const EndoMap& f);
bool is_scott_continuous(const EndoMap& f, const Limits& limits = {});
std::optional<bool> preserves_binary_meets(const EndoMap& f);

// (g∘f)(x) = g(f(x)). Throws MixedPosets.
EndoMap compose(const EndoMap& g, const EndoMap& f);
bool pointwise_leq(const EndoMap& f, const EndoMap& g);
// Absent if the family is empty or some ⋁F(x) / ⋀F(x) does not exist.
std::optional<EndoMap> pointwise_join(std::span<const EndoMap> family);
std::optional<EndoMap> pointwise_meet(std::span<const EndoMap> family);
// Join inside Precl(P): the identity for an empty family.
std::optional<EndoMap> preclosure_join(const FinitePoset& p,
                                       std::span<const EndoMap> family);

// ⋂ Fix(f); the whole poset for an empty family.
Subset fix(const FinitePoset& p, std::span<const EndoMap> family);
inline Subset fix(const EndoMap& f) {
  return fix(f.poset(), std::span<const EndoMap>(&f, 1));
}

// f(A) ⊆ A for every f.
bool closed_under(const Subset& a, std::span<const EndoMap> family);
// f⁻¹(A) ⊆ A for every f.
bool inversely_closed_under(const Subset& a, std::span<const EndoMap> family);
// Every directed subset of A with a join in P has its join in A.
bool directed_closed(const Subset& a, const Limits& limits = {});
// Every directed subset of P whose join lies in A meets A.
bool inaccessible_by_directed_joins(const Subset& a, const Limits& limits = {});

struct Closedness {
  Subset fix;
  bool closed_under;
  bool inversely_closed_under;
  bool directed_closed;
  bool inaccessible_by_directed_joins;
};

Closedness fix_and_closedness(std::span<const EndoMap> family, const Subset& a,
                              const Limits& limits = {});

}  // namespace latkit

#endif  // LATKIT_MAPS_HPP_
