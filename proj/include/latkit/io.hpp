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

#ifndef LATKIT_IO_HPP_
#define LATKIT_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "latkit/closure.hpp"
#include "latkit/maps.hpp"
#include "latkit/poset.hpp"
#include "latkit/rules.hpp"

namespace latkit::io {

using Json = nlohmann::ordered_json;

// Reads and parses a JSON file. Throws ParseError.
Json read_json(const std::string& path);

// {"elements": [labels], "le": [[lower, upper], ...]}
FinitePoset parse_poset(const Json& doc);
// {"name": string, "table": {label: label, ...}}
EndoMap parse_map(const FinitePoset& p, const Json& doc);
// A single map object or a list of them.
std::vector<EndoMap> parse_maps(const FinitePoset& p, const Json& doc);
// [{"body": [labels], "head": label}, ...]
RuleSet parse_rules(const FinitePoset& p, const Json& doc);
// ["a", "b"]
Subset parse_subset(const FinitePoset& p, const Json& doc);

Json to_json(const FinitePoset& p);
Json to_json(const Subset& s);
Json to_json(const EndoMap& f);  // {"table": {...}, "fix": [...]}
Json to_json(const RuleSet& rules);

// Hasse diagram: one edge per covering pair.
std::string to_dot(const FinitePoset& p, const std::string& name = "poset");

}  // namespace latkit::io

#endif  // LATKIT_IO_HPP_
