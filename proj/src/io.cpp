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

#include "latkit/io.hpp"

#include <fstream>
#include <sstream>

#include "latkit/error.hpp"

namespace latkit::io {

namespace {

[[noreturn]] void parse_error(const std::string& detail) {
  throw Error(ErrorKind::kParseError, "parse", detail);
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) parse_error("expected an object");
  auto it = doc.find(name);
  if (it == doc.end()) parse_error(std::string("missing field '") + name + "'");
  return *it;
}

std::string label_at(const Json& v, const std::string& where) {
  if (!v.is_string()) parse_error(where + ": expected a string label");
  return v.get<std::string>();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

FinitePoset parse_poset(const Json& doc) {
  const Json& elements = field(doc, "elements");
  if (!elements.is_array()) parse_error("field 'elements': expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    labels.push_back(
        label_at(elements[i], "field 'elements'[" + std::to_string(i) + "]"));
  }
  std::vector<FinitePoset::OrderPair> pairs;
  if (auto it = doc.find("le"); it != doc.end()) {
    if (!it->is_array()) parse_error("field 'le': expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& pair = (*it)[i];
      const std::string where = "field 'le'[" + std::to_string(i) + "]";
      if (!pair.is_array() || pair.size() != 2) {
        parse_error(where + ": expected a [lower, upper] pair");
      }
      pairs.emplace_back(label_at(pair[0], where), label_at(pair[1], where));
    }
  }
  return FinitePoset::build(std::move(labels), pairs);
}

EndoMap parse_map(const FinitePoset& p, const Json& doc) {
  const Json& table = field(doc, "table");
  if (!table.is_object()) parse_error("field 'table': expected an object");
  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    name = label_at(*it, "field 'name'");
  }
  std::vector<Element> t(p.size(), p.size());
  for (const auto& [key, value] : table.items()) {
    const Element x = p.index_of(key);
    t[x] = p.index_of(label_at(value, "field 'table'." + key));
  }
  for (Element x = 0; x < p.size(); ++x) {
    if (t[x] == p.size()) {
      parse_error("table not total: no entry for '" + p.label(x) + "'");
    }
  }
  return {p, std::move(t), std::move(name)};
}

std::vector<EndoMap> parse_maps(const FinitePoset& p, const Json& doc) {
  std::vector<EndoMap> out;
  if (doc.is_array()) {
    for (const auto& m : doc) out.push_back(parse_map(p, m));
  } else {
    out.push_back(parse_map(p, doc));
  }
  return out;
}

Subset parse_subset(const FinitePoset& p, const Json& doc) {
  if (!doc.is_array()) parse_error("expected an array of labels");
  Mask m = 0;
  for (const auto& v : doc) m |= bit(p.index_of(label_at(v, "subset")));
  return {p, m};
}

RuleSet parse_rules(const FinitePoset& p, const Json& doc) {
  if (!doc.is_array()) parse_error("rules: expected an array");
  std::vector<ClosureRule> rules;
  for (const auto& r : doc) {
    const Mask body = parse_subset(p, field(r, "body")).bits();
    rules.push_back({body, p.index_of(label_at(field(r, "head"), "head"))});
  }
  return {p, std::move(rules)};
}

Json to_json(const FinitePoset& p) {
  Json le = Json::array();
  for (Element a = 0; a < p.size(); ++a) {
    for_each_bit(p.up(a) & ~bit(a), [&](Element b) {
      if ((p.up(a) & p.down(b) & ~bit(a) & ~bit(b)) == 0) {
        le.push_back({p.label(a), p.label(b)});
      }
    });
  }
  return {{"elements", p.labels()}, {"le", le}};
}

Json to_json(const Subset& s) { return s.labels(); }

Json to_json(const EndoMap& f) {
  const auto& p = f.poset();
  Json table = Json::object();
  for (Element x = 0; x < p.size(); ++x) table[p.label(x)] = p.label(f(x));
  Json out = Json::object();
  if (!f.name().empty()) out["name"] = f.name();
  out["table"] = std::move(table);
  out["fix"] = to_json(fix(f));
  return out;
}

Json to_json(const RuleSet& rules) {
  Json out = Json::array();
  for (const auto& r : rules.rules()) {
    out.push_back({{"body", rules.body(r).labels()},
                   {"head", rules.poset().label(r.head)}});
  }
  return out;
}

std::string to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (Element a = 0; a < p.size(); ++a) {
    out << "  " << quoted(p.label(a)) << ";\n";
  }
  for (Element a = 0; a < p.size(); ++a) {
    for_each_bit(p.up(a) & ~bit(a), [&](Element b) {
      if ((p.up(a) & p.down(b) & ~bit(a) & ~bit(b)) == 0) {
        out << "  " << quoted(p.label(a)) << " -> " << quoted(p.label(b))
            << ";\n";
      }
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace latkit::io
