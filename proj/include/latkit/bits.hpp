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

#ifndef LATKIT_BITS_HPP_
#define LATKIT_BITS_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace latkit {

// Index of an element inside its poset (input order).
using Element = std::size_t;

// Set of elements of one poset, bit i standing for element i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(Element e) { return Mask{1} << e; }

constexpr bool has(Mask m, Element e) { return (m >> e) & 1U; }

constexpr Mask full_mask(std::size_t n) {
  return n >= kMaxElements ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline std::size_t popcount(Mask m) {
  return static_cast<std::size_t>(std::popcount(m));
}

template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::vector<Element> elements_of(Mask m) {
  std::vector<Element> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](Element e) { out.push_back(e); });
  return out;
}

// Calls fn(sub) for every subset of m, starting with the empty set and in
// increasing numeric order.
template <typename Fn>
void for_each_submask(Mask m, Fn&& fn) {
  Mask sub = 0;
  while (true) {
    fn(sub);
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

}  // namespace latkit

#endif  // LATKIT_BITS_HPP_
