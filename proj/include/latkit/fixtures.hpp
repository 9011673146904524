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

#ifndef LATKIT_FIXTURES_HPP_
#define LATKIT_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "latkit/poset.hpp"

namespace latkit::fixtures {

// 0 < 1 < ... < n-1, labelled by index.
FinitePoset chain(std::size_t n);
// 0 < a, b < 1
FinitePoset b2();
// c, d < a, b (no meets, no joins)
FinitePoset v4();
// Single point "0".
FinitePoset one_point();
// 0 < 1, 2, 3 and 2, 3 < 4: a meet-semilattice without top.
FinitePoset top_free();
// Subsets of {0..k-1} under inclusion, labelled by their members.
FinitePoset boolean(std::size_t k);
// 0 < a, b, c < 1 (non-distributive)
FinitePoset m3();
// 0 < a < c < 1, 0 < b < 1 (non-distributive)
FinitePoset n5();

struct Named {
  std::string name;
  FinitePoset poset;
};

// Every fixture above with at most eight elements.
std::vector<Named> all();

}  // namespace latkit::fixtures

#endif  // LATKIT_FIXTURES_HPP_
