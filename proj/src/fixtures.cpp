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

#include "latkit/fixtures.hpp"

#include <utility>

namespace latkit::fixtures {

FinitePoset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<FinitePoset::OrderPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) pairs.emplace_back(labels[i - 1], labels[i]);
  }
  return FinitePoset::build(std::move(labels), pairs);
}

FinitePoset b2() {
  return FinitePoset::build({"0", "a", "b", "1"},
                            {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

FinitePoset v4() {
  return FinitePoset::build({"a", "b", "c", "d"},
                            {{"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}});
}

FinitePoset one_point() { return FinitePoset::build({"0"}, {}); }

FinitePoset top_free() {
  return FinitePoset::build(
      {"0", "1", "2", "3", "4"},
      {{"0", "1"}, {"0", "2"}, {"0", "3"}, {"2", "4"}, {"3", "4"}});
}

FinitePoset boolean(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (Mask s = 0; s < n; ++s) {
    std::string l = "{";
    for_each_bit(s, [&](Element e) {
      if (l.size() > 1) l += ',';
      l += std::to_string(e);
    });
    labels.push_back(l + "}");
  }
  std::vector<FinitePoset::OrderPair> pairs;
  for (Mask s = 0; s < n; ++s) {
    for (Element e = 0; e < k; ++e) {
      if (!has(s, e)) pairs.emplace_back(labels[s], labels[s | bit(e)]);
    }
  }
  return FinitePoset::build(std::move(labels), pairs);
}

FinitePoset m3() {
  return FinitePoset::build({"0", "a", "b", "c", "1"},
                            {{"0", "a"},
                             {"0", "b"},
                             {"0", "c"},
                             {"a", "1"},
                             {"b", "1"},
                             {"c", "1"}});
}

FinitePoset n5() {
  return FinitePoset::build(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

std::vector<Named> all() {
  return {{"C1", one_point()}, {"C2", chain(2)}, {"C3", chain(3)},
          {"C4", chain(4)},    {"B2", b2()},     {"V4", v4()},
          {"TF5", top_free()}, {"M3", m3()},     {"N5", n5()},
          {"B3", boolean(3)}};
}

}  // namespace latkit::fixtures
