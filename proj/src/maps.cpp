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

#include "latkit/maps.hpp"

#include "latkit/error.hpp"

namespace latkit {

EndoMap::EndoMap(FinitePoset poset, std::vector<Element> table,
                 std::string name)
    : poset_(std::move(poset)), table_(std::move(table)), name_(std::move(name)) {
  if (table_.size() != poset_.size()) {
    throw Error(ErrorKind::kUnknownLabel, "endomap",
                "table has " + std::to_string(table_.size()) +
                    " entries for a poset of size " +
                    std::to_string(poset_.size()));
  }
  for (Element v : table_) {
    if (v >= poset_.size()) {
      throw Error(ErrorKind::kUnknownLabel, "endomap",
                  "image index " + std::to_string(v) + " outside the poset");
    }
  }
}

EndoMap EndoMap::identity(const FinitePoset& p) {
  std::vector<Element> t(p.size());
  for (Element i = 0; i < p.size(); ++i) t[i] = i;
  return {p, std::move(t), "identity"};
}

EndoMap EndoMap::constant(const FinitePoset& p, Element value) {
  return {p, std::vector<Element>(p.size(), value), "const-" + p.label(value)};
}

Mask EndoMap::image(Mask x) const {
  Mask out = 0;
  for_each_bit(x, [&](Element e) { out |= bit(table_[e]); });
  return out;
}

Mask EndoMap::preimage(Mask x) const {
  Mask out = 0;
  for (Element e = 0; e < table_.size(); ++e) {
    if (has(x, table_[e])) out |= bit(e);
  }
  return out;
}

std::string EndoMap::format() const {
  std::string out;
  for (Element e = 0; e < table_.size(); ++e) {
    if (e != 0) out += ", ";
    out += poset_.label(e) + "↦" + poset_.label(table_[e]);
  }
  return out;
}

bool is_increasing(const EndoMap& f) {
  const auto& p = f.poset();
  for (Element x = 0; x < p.size(); ++x) {
    const Mask required = p.up(f(x));
    bool ok = true;
    for_each_bit(p.up(x), [&](Element y) {
      if (!has(required, f(y))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_ascending(const EndoMap& f) {
  for (Element x = 0; x < f.poset().size(); ++x) {
    if (!f.poset().leq(x, f(x))) return false;
  }
  return true;
}

bool is_descending(const EndoMap& f) {
  for (Element x = 0; x < f.poset().size(); ++x) {
    if (!f.poset().leq(f(x), x)) return false;
  }
  return true;
}

bool is_idempotent(const EndoMap& f) {
  for (Element x = 0; x < f.poset().size(); ++x) {
    if (f(f(x)) != f(x)) return false;
  }
  return true;
}

bool is_preclosure(const EndoMap& f) {
  return is_ascending(f) && is_increasing(f);
}

bool is_closure_operator(const EndoMap& f) {
  return is_preclosure(f) && is_idempotent(f);
}

bool is_interior_operator(const EndoMap& f) {
  return is_descending(f) && is_increasing(f) && is_idempotent(f);
}

bool is_scott_continuous(const EndoMap& f, const Limits& limits) {
  const auto& p = f.poset();
  for (Mask d : directed_subsets(p, p.all(), limits)) {
    auto j = p.join(d);
    if (!j) continue;
    if (p.join(f.image(d)) != f(*j)) return false;
  }
  return true;
}

std::optional<bool> preserves_binary_meets(const EndoMap& f) {
  const auto& p = f.poset();
  if (!p.is_meet_semilattice()) return std::nullopt;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (f(*p.meet(x, y)) != *p.meet(f(x), f(y))) return false;
    }
  }
  return true;
}

Classification classify(const EndoMap& f, const Limits& limits) {
  Classification c{};
  c.increasing = is_increasing(f);
  c.ascending = is_ascending(f);
  c.descending = is_descending(f);
  c.idempotent = is_idempotent(f);
  c.preclosure = c.ascending && c.increasing;
  c.closure_operator = c.preclosure && c.idempotent;
  c.interior_operator = c.descending && c.increasing && c.idempotent;
  c.scott_continuous = is_scott_continuous(f, limits);
  c.scott_continuous_shortcut = c.increasing;
  if (c.scott_continuous != c.scott_continuous_shortcut) {
    theorem_breach("classify", "Scott-continuity disagrees with monotonicity "
                               "for map " + f.format());
  }
  c.preserves_binary_meets = preserves_binary_meets(f);
  return c;
}

EndoMap compose(const EndoMap& g, const EndoMap& f) {
  require_same_poset("compose", g.poset(), f.poset());
  std::vector<Element> t(f.table().size());
  for (Element x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return {f.poset(), std::move(t)};
}

bool pointwise_leq(const EndoMap& f, const EndoMap& g) {
  require_same_poset("pointwise_leq", f.poset(), g.poset());
  for (Element x = 0; x < f.poset().size(); ++x) {
    if (!f.poset().leq(f(x), g(x))) return false;
  }
  return true;
}

namespace {

template <typename Combine>
std::optional<EndoMap> pointwise(const char* operation,
                                 std::span<const EndoMap> family,
                                 Combine combine) {
  if (family.empty()) return std::nullopt;
  const auto& p = family.front().poset();
  for (const auto& f : family) require_same_poset(operation, p, f.poset());
  std::vector<Element> t(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    Mask values = 0;
    for (const auto& f : family) values |= bit(f(x));
    auto v = combine(p, values);
    if (!v) return std::nullopt;
    t[x] = *v;
  }
  return EndoMap(p, std::move(t));
}

}  // namespace

std::optional<EndoMap> pointwise_join(std::span<const EndoMap> family) {
  return pointwise("pointwise_join", family,
                   [](const FinitePoset& p, Mask v) { return p.join(v); });
}

std::optional<EndoMap> pointwise_meet(std::span<const EndoMap> family) {
  return pointwise("pointwise_meet", family,
                   [](const FinitePoset& p, Mask v) { return p.meet(v); });
}

std::optional<EndoMap> preclosure_join(const FinitePoset& p,
                                       std::span<const EndoMap> family) {
  if (family.empty()) return EndoMap::identity(p);
  return pointwise_join(family);
}

Subset fix(const FinitePoset& p, std::span<const EndoMap> family) {
  Mask out = p.all();
  for (const auto& f : family) {
    require_same_poset("fix", p, f.poset());
    for (Element x = 0; x < p.size(); ++x) {
      if (f(x) != x) out &= ~bit(x);
    }
  }
  return {p, out};
}

bool closed_under(const Subset& a, std::span<const EndoMap> family) {
  for (const auto& f : family) {
    require_same_poset("closed_under", a.poset(), f.poset());
    if ((f.image(a.bits()) & ~a.bits()) != 0) return false;
  }
  return true;
}

bool inversely_closed_under(const Subset& a, std::span<const EndoMap> family) {
  for (const auto& f : family) {
    require_same_poset("inversely_closed_under", a.poset(), f.poset());
    if ((f.preimage(a.bits()) & ~a.bits()) != 0) return false;
  }
  return true;
}

bool directed_closed(const Subset& a, const Limits& limits) {
  const auto& p = a.poset();
  for (Mask d : directed_subsets(p, a.bits(), limits)) {
    auto j = p.join(d);
    if (j && !a.contains(*j)) return false;
  }
  return true;
}

bool inaccessible_by_directed_joins(const Subset& a, const Limits& limits) {
  const auto& p = a.poset();
  for (Mask d : directed_subsets(p, p.all(), limits)) {
    auto j = p.join(d);
    if (j && a.contains(*j) && (d & a.bits()) == 0) return false;
  }
  return true;
}

Closedness fix_and_closedness(std::span<const EndoMap> family, const Subset& a,
                              const Limits& limits) {
  return Closedness{
      .fix = fix(a.poset(), family),
      .closed_under = closed_under(a, family),
      .inversely_closed_under = inversely_closed_under(a, family),
      .directed_closed = directed_closed(a, limits),
      .inaccessible_by_directed_joins =
          inaccessible_by_directed_joins(a, limits),
  };
}

}  // namespace latkit
