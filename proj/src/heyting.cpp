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

#include "latkit/heyting.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "latkit/error.hpp"

namespace latkit {

std::string_view to_string(StructureLevel level) {
  switch (level) {
    case StructureLevel::kNone:
      return "none";
    case StructureLevel::kMeetSemilattice:
      return "meet_semilattice";
    case StructureLevel::kPreframe:
      return "preframe";
    case StructureLevel::kFrame:
      return "frame";
  }
  return "unknown";
}

namespace {

Mask meets_with(const FinitePoset& p, Element x, Mask y) {
  Mask out = 0;
  for_each_bit(y, [&](Element e) { out |= bit(*p.meet(x, e)); });
  return out;
}

// Empty when every pair has a meet, otherwise the offending pair.
std::string meet_witness(const FinitePoset& p) {
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = a + 1; b < p.size(); ++b) {
      if (!p.meet(a, b)) {
        return p.label(a) + "," + p.label(b) + " have no meet";
      }
    }
  }
  return {};
}

std::string preframe_witness(const FinitePoset& p, const Limits& limits) {
  if (p.size() > limits.directed_cap && !limits.force) {
    // Finite directed sets contain their join, so the law holds trivially.
    return {};
  }
  for (Mask d : directed_subsets(p, p.all(), limits)) {
    auto j = p.join(d);
    if (!j) return p.format(d) + " is directed without a join";
    for (Element x = 0; x < p.size(); ++x) {
      if (*p.meet(x, *j) != p.join(meets_with(p, x, d))) {
        return p.label(x) + " does not distribute over " + p.format(d);
      }
    }
  }
  return {};
}

std::string frame_witness(const FinitePoset& p, const Limits& limits) {
  if (!p.top()) return "no top element";
  if (!p.bottom()) return "no bottom element";
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = a + 1; b < p.size(); ++b) {
      if (!p.join(a, b)) {
        return p.label(a) + "," + p.label(b) + " have no join";
      }
    }
  }
  auto check = [&](Element x, Mask y) -> std::string {
    if (*p.meet(x, *p.join(y)) != *p.join(meets_with(p, x, y))) {
      return p.label(x) + " does not distribute over " + p.format(y);
    }
    return {};
  };
  if (p.size() <= limits.subset_cap || limits.force) {
    std::string w;
    for_each_submask(p.all(), [&](Mask y) {
      for (Element x = 0; x < p.size() && w.empty(); ++x) w = check(x, y);
    });
    return w;
  }
  // Binary distributivity is equivalent for finite lattices.
  for (Element x = 0; x < p.size(); ++x) {
    for (Element a = 0; a < p.size(); ++a) {
      for (Element b = a + 1; b < p.size(); ++b) {
        auto w = check(x, bit(a) | bit(b));
        if (!w.empty()) return w;
      }
    }
  }
  return {};
}

void require_meet_semilattice(const char* op, const FinitePoset& p) {
  if (!p.is_meet_semilattice()) {
    throw Error(ErrorKind::kNotMeetSemilattice, op, meet_witness(p));
  }
}

Nucleus nucleus_or_breach(const char* op, EndoMap map) {
  if (!is_closure_operator(map) || preserves_binary_meets(map) != true) {
    theorem_breach(op, "not a nucleus: " + map.format());
  }
  return Nucleus(ClosureOperator(std::move(map)));
}

EndoMap meet_of_maps(const FinitePoset& p, std::span<const EndoMap> family) {
  if (family.empty()) return EndoMap::constant(p, *p.top());
  return *pointwise_meet(family);
}

std::vector<EndoMap> maps_of(const std::vector<Nucleus>& nuclei) {
  std::vector<EndoMap> out;
  out.reserve(nuclei.size());
  for (const auto& n : nuclei) out.push_back(n.map());
  return out;
}

}  // namespace

FrameView validate_structure(const FinitePoset& p, const Limits& limits) {
  if (auto w = meet_witness(p); !w.empty()) {
    return {p, StructureLevel::kNone, std::move(w)};
  }
  if (auto w = preframe_witness(p, limits); !w.empty()) {
    return {p, StructureLevel::kMeetSemilattice, std::move(w)};
  }
  if (auto w = frame_witness(p, limits); !w.empty()) {
    return {p, StructureLevel::kPreframe, std::move(w)};
  }
  return {p, StructureLevel::kFrame, {}};
}

Frame::Frame(FinitePoset p, const Limits& limits) : poset_(std::move(p)) {
  auto view = validate_structure(poset_, limits);
  if (view.level != StructureLevel::kFrame) {
    throw Error(ErrorKind::kNotAFrame, "frame", view.witness);
  }
  const std::size_t n = size();
  top_ = *poset_.top();
  bottom_ = *poset_.bottom();
  meet_.resize(n * n);
  implies_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) meet_[a * n + b] = *poset_.meet(a, b);
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Mask below = 0;
      for (Element x = 0; x < n; ++x) {
        if (poset_.leq(meet(x, a), b)) below |= bit(x);
      }
      const Element imp = *poset_.join(below);
      if (poset_.down(imp) != below) {
        theorem_breach("frame", "adjunction fails for " + poset_.label(a) +
                                    "⇒" + poset_.label(b));
      }
      implies_[a * n + b] = imp;
    }
  }
}

Mask Frame::implications_into(Mask x) const {
  Mask out = 0;
  for (Element a = 0; a < size(); ++a) {
    for_each_bit(x, [&](Element b) { out |= bit(implies(a, b)); });
  }
  return out;
}

Element heyting_implication(const Frame& frame, Element a, Element b) {
  return frame.implies(a, b);
}

Nucleus::Nucleus(ClosureOperator op) : op_(std::move(op)) {
  if (preserves_binary_meets(op_.map()) != true) {
    throw Error(ErrorKind::kNotANucleus, "nucleus",
                "does not preserve binary meets: " + op_.map().format());
  }
}

bool is_prenucleus(const EndoMap& f) {
  return is_preclosure(f) && preserves_binary_meets(f) == true;
}

bool is_nucleus(const EndoMap& f) {
  return is_closure_operator(f) && preserves_binary_meets(f) == true;
}

Nucleus nucleus_meet(const Nucleus& a, const Nucleus& b) {
  require_same_poset("nucleus_meet", a.poset(), b.poset());
  require_meet_semilattice("nucleus_meet", a.poset());
  const EndoMap pair[] = {a.map(), b.map()};
  return nucleus_or_breach("nucleus_meet", *pointwise_meet(pair));
}

bool fix_of_meet_check(const ClosureOperator& a, const ClosureOperator& b) {
  require_same_poset("fix_of_meet_check", a.poset(), b.poset());
  const auto& p = a.poset();
  require_meet_semilattice("fix_of_meet_check", p);
  const EndoMap pair[] = {a.map(), b.map()};
  const Mask lhs = fix(*pointwise_meet(pair)).bits();
  Mask rhs = 0;
  const Mask fb = b.fixpoints().bits();
  for_each_bit(a.fixpoints().bits(),
               [&](Element x) { rhs |= meets_with(p, x, fb); });
  return lhs == rhs;
}

NucleusPredicates nucleus_predicates_and_meet(const ClosureOperator& a,
                                              const ClosureOperator& b) {
  require_same_poset("nucleus_predicates_and_meet", a.poset(), b.poset());
  require_meet_semilattice("nucleus_predicates_and_meet", a.poset());
  NucleusPredicates out{{is_prenucleus(a.map()), is_prenucleus(b.map())},
                        {is_nucleus(a.map()), is_nucleus(b.map())},
                        std::nullopt,
                        fix_of_meet_check(a, b)};
  if (out.is_nucleus[0] && out.is_nucleus[1]) {
    out.meet = nucleus_meet(Nucleus(a), Nucleus(b));
  }
  return out;
}

Nucleus nucleus_join(const FinitePoset& p, std::span<const EndoMap> prenuclei,
                     const Limits& limits) {
  auto view = validate_structure(p, limits);
  if (view.level < StructureLevel::kPreframe) {
    throw Error(ErrorKind::kNotPreframe, "nucleus_join", view.witness);
  }
  for (const auto& g : prenuclei) {
    require_same_poset("nucleus_join", p, g.poset());
    if (!is_prenucleus(g)) {
      throw Error(ErrorKind::kNotPrenucleus, "nucleus_join", g.format());
    }
  }
  return nucleus_or_breach("nucleus_join",
                           generate_closure(p, prenuclei).map());
}

std::vector<Nucleus> enumerate_nuclei(const FinitePoset& p,
                                      const Limits& limits) {
  require_meet_semilattice("enumerate_nuclei", p);
  std::vector<Nucleus> out;
  for (auto& op : enumerate_cl_lattice(p, limits).operators()) {
    if (preserves_binary_meets(op.map()) == true) out.emplace_back(op);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Nucleus& a, const Nucleus& b) {
                     return a.fixpoints().size() > b.fixpoints().size();
                   });
  return out;
}

bool is_nuclear_system(const Frame& frame, Mask x) {
  const auto& p = frame.poset();
  bool definitional = false;
  bool characterized = false;
  if (is_closure_system(p, x)) {
    definitional =
        preserves_binary_meets(duality(ClosureSystem(Subset(p, x))).map()) ==
        true;
    characterized = (frame.implications_into(x) & ~x) == 0;
  }
  if (definitional != characterized) {
    theorem_breach("is_nuclear_system",
                   "characterizations disagree on " + p.format(x));
  }
  return definitional;
}

Subset nucsys(const Frame& frame, Mask x) {
  return clsys(Subset(frame.poset(), frame.implications_into(x)));
}

Nucleus nuc_of(const Frame& frame, Mask x) {
  const auto& p = frame.poset();
  std::vector<Element> t(p.size(), frame.top());
  for (Element y = 0; y < p.size(); ++y) {
    for_each_bit(x, [&](Element e) {
      t[y] = frame.meet(t[y], frame.implies(frame.implies(y, e), e));
    });
  }
  Nucleus n = nucleus_or_breach("nuc_of", EndoMap(p, std::move(t)));
  if (n.fixpoints().bits() != nucsys(frame, x).bits()) {
    theorem_breach("nuc_of", "fixpoints differ from nucsys of " + p.format(x));
  }
  return n;
}

Nucleus regular_nucleus(const Frame& frame, Element x) {
  Nucleus n = nuc_of(frame, bit(x));
  if (n.fixpoints().bits() != frame.implications_into(bit(x))) {
    theorem_breach("regular_nucleus",
                   "fixpoints differ from L⇒" + frame.poset().label(x));
  }
  return n;
}

Nucleus least_nucleus_above(const Frame& frame, const ClosureOperator& op) {
  const auto& p = frame.poset();
  require_same_poset("least_nucleus_above", p, op.poset());
  std::vector<EndoMap> regular;
  for_each_bit(op.fixpoints().bits(), [&](Element x) {
    EndoMap r = regular_nucleus(frame, x).map();
    if (pointwise_leq(op.map(), r)) regular.push_back(std::move(r));
  });
  return nucleus_or_breach("least_nucleus_above", meet_of_maps(p, regular));
}

Nucleus nuclear_core(const Frame& frame, const ClosureOperator& op) {
  require_same_poset("nuclear_core", frame.poset(), op.poset());
  return nuc_of(frame, op.fixpoints().bits());
}

Nucleus least_nucleus_above_bruteforce(const Frame& frame,
                                       const ClosureOperator& op,
                                       const Limits& limits) {
  std::vector<Nucleus> above;
  for (auto& n : enumerate_nuclei(frame.poset(), limits)) {
    if (pointwise_leq(op.map(), n.map())) above.push_back(std::move(n));
  }
  for (const auto& n : above) {
    if (std::all_of(above.begin(), above.end(), [&](const Nucleus& m) {
          return pointwise_leq(n.map(), m.map());
        })) {
      return n;
    }
  }
  theorem_breach("least_nucleus_above", "no least nucleus above the operator");
}

Nucleus nuclear_core_bruteforce(const Frame& frame, const ClosureOperator& op,
                                const Limits& limits) {
  std::vector<Nucleus> below;
  for (auto& n : enumerate_nuclei(frame.poset(), limits)) {
    if (pointwise_leq(n.map(), op.map())) below.push_back(std::move(n));
  }
  for (const auto& n : below) {
    if (std::all_of(below.begin(), below.end(), [&](const Nucleus& m) {
          return pointwise_leq(m.map(), n.map());
        })) {
      return n;
    }
  }
  theorem_breach("nuclear_core", "no greatest nucleus below the operator");
}

NuclearGenerators nuclear_systems_and_generators(const Frame& frame, Mask x,
                                                 Element element,
                                                 const ClosureOperator& op,
                                                 const Limits& limits) {
  const auto& p = frame.poset();
  const auto nuclei = enumerate_nuclei(p, limits);
  Mask definitional = p.all();
  for (const auto& n : nuclei) {
    const Mask f = n.fixpoints().bits();
    if ((x & ~f) == 0) definitional &= f;
  }
  NuclearGenerators out{is_nuclear_system(frame, x),
                        nucsys(frame, x),
                        nuc_of(frame, x),
                        regular_nucleus(frame, element),
                        least_nucleus_above(frame, op),
                        nuclear_core(frame, op)};
  if (out.nucsys.bits() != definitional) {
    theorem_breach("nucsys", "differs from the least nuclear system over " +
                                 p.format(x));
  }
  if (!(out.least_nucleus_above ==
        least_nucleus_above_bruteforce(frame, op, limits))) {
    theorem_breach("least_nucleus_above", "formula differs from search");
  }
  if (!(out.nuclear_core == nuclear_core_bruteforce(frame, op, limits))) {
    theorem_breach("nuclear_core", "formula differs from search");
  }
  return out;
}

NucleusFrameReport frame_of_nuclei_check(const FinitePoset& p,
                                         const Limits& limits) {
  static constexpr const char* kOp = "frame_of_nuclei_check";
  auto view = validate_structure(p, limits);
  if (view.level < StructureLevel::kPreframe) {
    throw Error(ErrorKind::kNotPreframe, kOp, view.witness);
  }
  NucleusFrameReport r{};
  r.nuclei = enumerate_nuclei(p, limits);
  const std::size_t k = r.nuclei.size();
  if (k > kMaxElements) throw CapExceeded(kOp, k, kMaxElements);
  const auto maps = maps_of(r.nuclei);

  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(maps[i].table(), i);
  auto index_of = [&](const EndoMap& m) {
    auto it = index.find(m.table());
    if (it == index.end()) theorem_breach(kOp, "not in Nuc: " + m.format());
    return it->second;
  };

  std::vector<std::string> labels;
  std::vector<FinitePoset::OrderPair> pairs;
  r.leq.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) labels.push_back("n" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (pointwise_leq(maps[i], maps[j])) {
        r.leq[i] |= bit(j);
        if (i != j) pairs.emplace_back(labels[i], labels[j]);
      }
    }
  }
  const auto order = FinitePoset::build(labels, pairs);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!order.less(i, j)) continue;
      const Mask between = order.up(i) & order.down(j) & ~bit(i) & ~bit(j);
      if (between == 0) r.covers.emplace_back(i, j);
    }
  }

  r.exhaustive = k <= 8;
  std::vector<Mask> families;
  if (r.exhaustive) {
    for_each_submask(order.all(), [&](Mask g) { families.push_back(g); });
  } else {
    families.push_back(0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) families.push_back(bit(i) | bit(j));
    }
  }

  std::unordered_map<Mask, std::size_t> generated;
  auto join = [&](Mask g) {
    auto it = generated.find(g);
    if (it != generated.end()) return it->second;
    std::vector<EndoMap> members;
    for_each_bit(g, [&](Element i) { members.push_back(maps[i]); });
    const std::size_t j = index_of(nucleus_join(p, members, limits).map());
    generated.emplace(g, j);
    return j;
  };
  std::vector<std::size_t> meet(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      meet[i * k + j] = index_of(nucleus_meet(r.nuclei[i], r.nuclei[j]).map());
    }
  }

  r.is_complete_lattice = true;
  r.joins_are_generated = true;
  for (Mask g : families) {
    auto j = order.join(g);
    if (!j) {
      r.is_complete_lattice = false;
    } else if (*j != join(g)) {
      r.joins_are_generated = false;
    }
  }

  r.is_distributive = true;
  for (std::size_t b = 0; b < k; ++b) {
    for (Mask g : families) {
      Mask meets = 0;
      for_each_bit(g, [&](Element i) { meets |= bit(meet[b * k + i]); });
      if (meet[b * k + join(g)] != join(meets)) r.is_distributive = false;
    }
  }

  if (view.level == StructureLevel::kFrame) {
    bool pointwise = true;
    for (Mask g : families) {
      std::vector<EndoMap> members;
      for_each_bit(g, [&](Element i) { members.push_back(maps[i]); });
      auto m = order.meet(g);
      if (!m || maps[*m] != meet_of_maps(p, members)) pointwise = false;
    }
    r.meets_pointwise = pointwise;
  }

  r.pointwise_meets_scott_continuous = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!is_scott_continuous(maps[meet[i * k + j]], limits)) {
        r.pointwise_meets_scott_continuous = false;
      }
    }
  }

  if (!r.is_complete_lattice || !r.joins_are_generated || !r.is_distributive ||
      r.meets_pointwise == false || !r.pointwise_meets_scott_continuous) {
    theorem_breach(kOp, "the nuclei of " + p.format(p.all()) +
                            " do not form a frame");
  }
  return r;
}

}  // namespace latkit
