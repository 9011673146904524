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

#include "latkit/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "latkit/error.hpp"

namespace latkit {

void Limits::require_subsets(const char* operation, std::size_t n) const {
  if (!force && n > subset_cap) throw CapExceeded(operation, n, subset_cap);
}

void Limits::require_directed(const char* operation, std::size_t n) const {
  if (!force && n > directed_cap) throw CapExceeded(operation, n, directed_cap);
}

FinitePoset FinitePoset::build(std::vector<std::string> labels,
                               std::span<const OrderPair> pairs) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) {
    throw Error(ErrorKind::kPosetTooLarge, "build_poset",
                std::to_string(n) + " elements, at most " +
                    std::to_string(kMaxElements) + " supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::kDuplicateLabel, "build_poset", "label '" + l + "'");
    }
  }
  auto index = [&](const std::string& l) -> Element {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) {
      throw Error(ErrorKind::kUnknownLabel, "build_poset", "label '" + l + "'");
    }
    return static_cast<Element>(it - labels.begin());
  };

  std::vector<Mask> up(n);
  for (Element i = 0; i < n; ++i) up[i] = bit(i);
  for (const auto& [lo, hi] : pairs) up[index(lo)] |= bit(index(hi));
  // Warshall on bit rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (has(up[i], k)) up[i] |= up[k];
    }
  }
  std::vector<Mask> down(n, 0);
  for (Element i = 0; i < n; ++i) {
    for_each_bit(up[i], [&](Element j) { down[j] |= bit(i); });
  }
  for (Element i = 0; i < n; ++i) {
    Mask both = up[i] & down[i] & ~bit(i);
    if (both != 0) {
      Element j = static_cast<Element>(std::countr_zero(both));
      throw Error(ErrorKind::kCycleDetected, "build_poset",
                  "'" + labels[i] + "' and '" + labels[j] +
                      "' are each below the other");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  impl->up = std::move(up);
  impl->down = std::move(down);
  return FinitePoset(std::move(impl));
}

std::optional<Element> FinitePoset::find(std::string_view label) const {
  const auto& ls = impl_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<Element>(it - ls.begin());
}

Element FinitePoset::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorKind::kUnknownLabel, "lookup",
              "label '" + std::string(label) + "'");
}

Mask FinitePoset::upper_bounds(Mask x) const {
  Mask out = all();
  for_each_bit(x, [&](Element e) { out &= up(e); });
  return out;
}

Mask FinitePoset::lower_bounds(Mask x) const {
  Mask out = all();
  for_each_bit(x, [&](Element e) { out &= down(e); });
  return out;
}

Mask FinitePoset::maximal(Mask x) const {
  Mask out = 0;
  for_each_bit(x, [&](Element e) {
    if ((up(e) & x) == bit(e)) out |= bit(e);
  });
  return out;
}

Mask FinitePoset::minimal(Mask x) const {
  Mask out = 0;
  for_each_bit(x, [&](Element e) {
    if ((down(e) & x) == bit(e)) out |= bit(e);
  });
  return out;
}

std::optional<Element> FinitePoset::least(Mask x) const {
  std::optional<Element> out;
  for_each_bit(x, [&](Element e) {
    if (!out && (up(e) & x) == x) out = e;
  });
  return out;
}

std::optional<Element> FinitePoset::greatest(Mask x) const {
  std::optional<Element> out;
  for_each_bit(x, [&](Element e) {
    if (!out && (down(e) & x) == x) out = e;
  });
  return out;
}

Mask FinitePoset::lower_closure(Mask x) const {
  Mask out = 0;
  for_each_bit(x, [&](Element e) { out |= down(e); });
  return out;
}

Mask FinitePoset::upper_closure(Mask x) const {
  Mask out = 0;
  for_each_bit(x, [&](Element e) { out |= up(e); });
  return out;
}

bool FinitePoset::is_directed(Mask x) const {
  if (x == 0) return false;
  bool ok = true;
  for_each_bit(x, [&](Element a) {
    for_each_bit(x, [&](Element b) {
      if (ok && b > a && (up(a) & up(b) & x) == 0) ok = false;
    });
  });
  return ok;
}

bool FinitePoset::is_meet_semilattice() const {
  for (Element a = 0; a < size(); ++a) {
    for (Element b = a + 1; b < size(); ++b) {
      if (!meet(a, b)) return false;
    }
  }
  return true;
}

bool FinitePoset::same_as(const FinitePoset& other) const {
  return impl_ == other.impl_ ||
         (impl_->labels == other.impl_->labels && impl_->up == other.impl_->up);
}

std::string FinitePoset::format(Mask x) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(x, [&](Element e) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  });
  return out + "}";
}

void require_same_poset(const char* operation, const FinitePoset& a,
                        const FinitePoset& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::kMixedPosets, operation,
                "operands live on different posets");
  }
}

Subset::Subset(FinitePoset poset, Mask bits)
    : poset_(std::move(poset)), bits_(bits) {
  if ((bits_ & ~poset_.all()) != 0) {
    throw Error(ErrorKind::kUnknownLabel, "subset",
                "index outside a poset of size " +
                    std::to_string(poset_.size()));
  }
}

Subset Subset::of(const FinitePoset& poset,
                  std::span<const std::string> labels) {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(poset.index_of(l));
  return {poset, m};
}

Subset Subset::of(const FinitePoset& poset,
                  std::initializer_list<std::string_view> labels) {
  Mask m = 0;
  for (auto l : labels) m |= bit(poset.index_of(l));
  return {poset, m};
}

std::vector<std::string> Subset::labels() const {
  std::vector<std::string> out;
  for_each_bit(bits_, [&](Element e) { out.push_back(poset_.label(e)); });
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_poset("subset", poset_, other.poset_);
  return (bits_ & ~other.bits_) == 0;
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same_poset("union", a.poset_, b.poset_);
  return {a.poset_, a.bits_ | b.bits_};
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same_poset("intersection", a.poset_, b.poset_);
  return {a.poset_, a.bits_ & b.bits_};
}

OrderQueries order_queries(const Subset& x) {
  const auto& p = x.poset();
  const Mask m = x.bits();
  const Mask lower = p.lower_closure(m);
  const Mask upper = p.upper_closure(m);
  return OrderQueries{
      .upper_bounds = {p, p.upper_bounds(m)},
      .lower_bounds = {p, p.lower_bounds(m)},
      .maximal_elements = {p, p.maximal(m)},
      .least_element = p.least(m),
      .greatest_element = p.greatest(m),
      .lower_closure = {p, lower},
      .upper_closure = {p, upper},
      .is_lower_set = lower == m,
      .is_upper_set = upper == m,
  };
}

LatticeQueries lattice_queries(const Subset& x) {
  const auto& p = x.poset();
  return {p.join(x.bits()), p.meet(x.bits()), p.is_directed(x.bits())};
}

std::vector<Mask> directed_subsets(const FinitePoset& p, Mask within,
                                   const Limits& limits) {
  limits.require_directed("directed_subsets", popcount(within));
  std::vector<Mask> out;
  for_each_submask(within, [&](Mask d) {
    if (p.is_directed(d)) out.push_back(d);
  });
  return out;
}

WayBelow::WayBelow(const FinitePoset& p, const Limits& limits)
    : column_(p.size(), p.all()) {
  // x ≪ y iff every directed D with y ≤ ⋁D meets ↑x, i.e. x ∈ ↓D.
  for (Mask d : directed_subsets(p, p.all(), limits)) {
    auto j = p.join(d);
    if (!j) continue;
    const Mask reach = p.lower_closure(d);
    for_each_bit(p.down(*j), [&](Element y) { column_[y] &= reach; });
  }
}

bool way_below(const FinitePoset& p, Element x, Element y,
               const Limits& limits) {
  return WayBelow(p, limits)(x, y);
}

bool is_continuous(const FinitePoset& p, const Limits& limits) {
  WayBelow wb(p, limits);
  for (Element x = 0; x < p.size(); ++x) {
    const Mask approx = wb.below(x);
    if (!p.is_directed(approx) || p.join(approx) != x) return false;
  }
  return true;
}

bool interpolation_check(const FinitePoset& p, const Limits& limits) {
  WayBelow wb(p, limits);
  for (Element z = 0; z < p.size(); ++z) {
    bool ok = true;
    for_each_bit(wb.below(z), [&](Element x) {
      bool found = false;
      for_each_bit(wb.below(z), [&](Element y) {
        if (wb(x, y)) found = true;
      });
      if (!found) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool has_ceiling(const FinitePoset& p, Mask x) {
  const Mask tops = p.maximal(x);
  bool ok = true;
  for_each_bit(x, [&](Element e) {
    if ((p.up(e) & tops) == 0) ok = false;
  });
  return ok;
}

bool is_default_enabled(const FinitePoset& p, const Limits& limits) {
  return is_default_enabled_within(p, p.all(), limits);
}

bool is_default_enabled_within(const FinitePoset& p, Mask a,
                               const Limits& limits) {
  limits.require_subsets("is_default_enabled", popcount(a));
  bool ok = true;
  // Lower bounds are taken inside the subposet a.
  for_each_submask(a, [&](Mask x) {
    if (ok && !has_ceiling(p, p.lower_bounds(x) & a)) ok = false;
  });
  if (!ok) return false;
  for (Element x = 0; x < p.size(); ++x) {
    if (!has_ceiling(p, p.down(x) & a)) return false;
  }
  return true;
}

Enabledness enabledness(const Subset& x, const Limits& limits) {
  return {has_ceiling(x.poset(), x.bits()),
          is_default_enabled(x.poset(), limits)};
}

}  // namespace latkit
