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

#ifndef LATKIT_TESTS_SUPPORT_ORACLE_HPP_
#define LATKIT_TESTS_SUPPORT_ORACLE_HPP_

// Deliberately naive reference implementations. They read only the order
// relation of a poset and work on explicit index sets, so they share no code
// paths with the library beyond leq().

#include <optional>
#include <set>
#include <vector>

#include "latkit/poset.hpp"

namespace latkit::oracle {

using Set = std::set<int>;
using Table = std::vector<int>;

class Order {
 public:
  explicit Order(const FinitePoset& p);

  int size() const { return n_; }
  bool le(int a, int b) const { return le_[a][b]; }
  Set all() const;
  std::optional<int> least(const Set& s) const;
  std::optional<int> greatest(const Set& s) const;
  Set upper_bounds(const Set& s) const;
  Set lower_bounds(const Set& s) const;
  std::optional<int> join(const Set& s) const { return least(upper_bounds(s)); }
  std::optional<int> meet(const Set& s) const {
    return greatest(lower_bounds(s));
  }
  std::vector<Set> subsets() const;

 private:
  int n_;
  std::vector<std::vector<bool>> le_;
};

Set to_set(Mask m);
Mask to_mask(const Set& s);

bool is_closure_system(const Order& o, const Set& c);
std::vector<Set> closure_systems(const Order& o);
Table operator_of(const Order& o, const Set& c);
std::vector<Table> closure_operators(const Order& o);
bool preserves_meets(const Order& o, const Table& f);
std::vector<Table> nuclei(const Order& o);
bool table_le(const Order& o, const Table& f, const Table& g);
Set fixpoints(const Table& f);
// Least closure operator above every generator, by exhaustive search.
std::optional<Table> least_closure_above(const Order& o,
                                         const std::vector<Table>& gens);
int implies(const Order& o, int a, int b);
std::vector<Set> filters(const Order& o);
// Least fixed point of f that is ≥ x.
std::optional<int> least_fixpoint_above(const Order& o, const Table& f, int x);
std::vector<Set> directed_subsets(const Order& o);

}  // namespace latkit::oracle

#endif  // LATKIT_TESTS_SUPPORT_ORACLE_HPP_
