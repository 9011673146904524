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

#include "latkit/hmj.hpp"

#include <algorithm>

#include "latkit/closure.hpp"
#include "latkit/error.hpp"
#include "latkit/maps.hpp"

namespace latkit {

namespace {

// Join of nuclei on an already validated frame.
Nucleus join_on_frame(const char* op, const Frame& frame,
                      std::span<const EndoMap> family) {
  EndoMap joined = generate_closure(frame.poset(), family).map();
  if (preserves_binary_meets(joined) != true) {
    theorem_breach(op, "join is not a nucleus: " + joined.format());
  }
  return Nucleus(ClosureOperator(std::move(joined)));
}

std::vector<EndoMap> open_nuclei(const Frame& frame, Mask s) {
  std::vector<EndoMap> out;
  for_each_bit(s, [&](Element a) {
    out.push_back(open_nucleus(frame, a).map());
  });
  return out;
}

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

}  // namespace

bool is_filter(const FinitePoset& p, Mask x) {
  auto top = p.top();
  if (!top || !has(x, *top) || !p.is_upper_set(x)) return false;
  bool closed = true;
  for_each_bit(x, [&](Element a) {
    for_each_bit(x, [&](Element b) {
      auto m = p.meet(a, b);
      if (!m || !has(x, *m)) closed = false;
    });
  });
  return closed;
}

FilterSet::FilterSet(Subset subset) : subset_(std::move(subset)) {
  if (!is_filter(subset_.poset(), subset_.bits())) {
    throw Error(ErrorKind::kNotAFilter, "filter",
                subset_.poset().format(subset_.bits()));
  }
}

std::vector<FilterSet> enumerate_filters(const Frame& frame,
                                         const Limits& limits) {
  const auto& p = frame.poset();
  limits.require_subsets("enumerate_filters", p.size());
  std::vector<FilterSet> out;
  for_each_submask(p.all(), [&](Mask x) {
    if (is_filter(p, x)) out.emplace_back(Subset(p, x));
  });
  return out;
}

Nucleus open_nucleus(const Frame& frame, Element a) {
  const auto& p = frame.poset();
  std::vector<Element> t(p.size());
  Mask image = 0;
  for (Element x = 0; x < p.size(); ++x) {
    t[x] = frame.implies(a, x);
    image |= bit(t[x]);
  }
  EndoMap map(p, std::move(t));
  if (!is_nucleus(map)) {
    theorem_breach("open_nucleus", "not a nucleus: " + map.format());
  }
  Nucleus n{ClosureOperator(std::move(map))};
  if (n.fixpoints().bits() != image) {
    theorem_breach("open_nucleus", "fixpoints differ from a⇒L");
  }
  return n;
}

Nucleus fitting(const Frame& frame, const Nucleus& op, const Limits&) {
  require_same_poset("fitting", frame.poset(), op.poset());
  const Mask kernel = op.map().preimage(bit(frame.top()));
  return join_on_frame("fitting", frame, open_nuclei(frame, kernel));
}

bool is_fitted(const Frame& frame, const Nucleus& op, const Limits& limits) {
  return fitting(frame, op, limits) == op;
}

FilterSet oneker(const Frame& frame, const Nucleus& op) {
  require_same_poset("oneker", frame.poset(), op.poset());
  const auto& p = frame.poset();
  const Mask kernel = op.map().preimage(bit(frame.top()));
  if (!is_filter(p, kernel)) {
    theorem_breach("oneker", "not a filter: " + p.format(kernel));
  }
  return FilterSet(Subset(p, kernel));
}

Nucleus fitnuc(const Frame& frame, Mask s, const Limits&) {
  return join_on_frame("fitnuc", frame, open_nuclei(frame, s));
}

FilterSet nucfilt(const Frame& frame, Mask s, const Limits& limits) {
  return oneker(frame, fitnuc(frame, s, limits));
}

FittingReport fitting_and_galois(const Frame& frame, const Nucleus& op,
                                 Mask s, const Limits& limits) {
  FittingReport r{fitting(frame, op, limits), false, oneker(frame, op),
                  fitnuc(frame, s, limits), nucfilt(frame, s, limits)};
  r.is_fitted = r.fitting == op;
  if (pointwise_leq(r.fitnuc.map(), op.map()) !=
      subset_of(s, r.oneker.bits())) {
    theorem_breach("fitting_and_galois", "adjunction fails at " +
                                             frame.poset().format(s));
  }
  return r;
}

bool galois_check(const Frame& frame, const Limits& limits) {
  const auto& p = frame.poset();
  limits.require_subsets("galois_check", p.size());
  const auto nuclei = enumerate_nuclei(p, limits);
  for (const auto& n : nuclei) {
    const Mask k = oneker(frame, n).bits();
    if (oneker(frame, fitnuc(frame, k, limits)).bits() != k) return false;
  }
  bool ok = true;
  for_each_submask(p.all(), [&](Mask s) {
    if (!ok) return;
    const Nucleus f = fitnuc(frame, s, limits);
    if (!(fitnuc(frame, oneker(frame, f).bits(), limits) == f)) ok = false;
    for (const auto& n : nuclei) {
      if (pointwise_leq(f.map(), n.map()) !=
          subset_of(s, oneker(frame, n).bits())) {
        ok = false;
      }
    }
  });
  return ok;
}

FilterQueries filters(const Frame& frame, Mask x, const Limits& limits) {
  const auto& p = frame.poset();
  FilterQueries q{is_filter(p, x), false, false};
  const bool open_def =
      q.is_filter && inaccessible_by_directed_joins(Subset(p, x), limits);
  if (open_def != q.is_filter) {
    theorem_breach("filters",
                   "finite filter not Scott-open: " + p.format(x));
  }
  q.is_scott_open = open_def;

  bool kernel = false;
  for (const auto& n : enumerate_nuclei(p, limits)) {
    if (n.map().preimage(bit(frame.top())) == x) kernel = true;
  }
  const bool fixed = nucfilt(frame, x, limits).bits() == x;
  if (kernel != fixed) {
    theorem_breach("filters", "nuclear filter tests disagree on " +
                                  p.format(x));
  }
  q.is_nuclear_filter = kernel;
  return q;
}

bool is_compact(const Frame& frame, const Nucleus& op, const Limits& limits) {
  require_same_poset("is_compact", frame.poset(), op.poset());
  const auto& p = frame.poset();
  const Mask fix = op.fixpoints().bits();
  for (Mask d : directed_subsets(p, fix, limits)) {
    auto j = p.join_within(fix, d);
    if (!j || *j != op(*p.join(d))) {
      theorem_breach("is_compact", "join in Fix differs at " + p.format(d));
    }
    if (*j == frame.top() && !has(d, frame.top())) return false;
  }
  return true;
}

bool quotient_frame_check(const Frame& frame, const Nucleus& op,
                          const Limits& limits) {
  require_same_poset("quotient_frame_check", frame.poset(), op.poset());
  const auto& p = frame.poset();
  limits.require_subsets("quotient_frame_check", p.size());
  const Mask fix = op.fixpoints().bits();
  auto join_fix = [&](Mask s) { return op(frame.join_of(s)); };
  if (op(frame.top()) != frame.top()) return false;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      if (op(frame.meet(x, y)) != frame.meet(op(x), op(y))) return false;
    }
  }
  bool ok = true;
  for_each_submask(p.all(), [&](Mask s) {
    if (!ok) return;
    if (op(frame.join_of(s)) != join_fix(op.map().image(s))) ok = false;
    if ((s & ~fix) != 0) return;
    for_each_bit(fix, [&](Element x) {
      Mask meets = 0;
      for_each_bit(s, [&](Element e) { meets |= bit(frame.meet(x, e)); });
      if (frame.meet(x, join_fix(s)) != join_fix(meets)) ok = false;
    });
  });
  return ok;
}

HmjCorrespondence hmj_correspondence(const Frame& frame,
                                     const Limits& limits) {
  const auto& p = frame.poset();
  HmjCorrespondence r{{}, 0, true, true, true};

  std::vector<FilterSet> open;
  for (auto& f : enumerate_filters(frame, limits)) {
    if (filters(frame, f.bits(), limits).is_scott_open) {
      open.push_back(std::move(f));
    } else {
      r.every_filter_scott_open = false;
    }
  }

  std::vector<Nucleus> compact_fitted;
  for (auto& n : enumerate_nuclei(p, limits)) {
    if (!is_fitted(frame, n, limits)) continue;
    const bool compact = is_compact(frame, n, limits);
    const bool open_kernel =
        filters(frame, oneker(frame, n).bits(), limits).is_scott_open;
    if (compact != open_kernel) {
      theorem_breach("hmj_correspondence",
                     "compactness and Scott-open kernel disagree");
    }
    if (compact) {
      compact_fitted.push_back(std::move(n));
    } else {
      r.every_fitted_compact = false;
    }
  }
  r.compact_fitted_count = compact_fitted.size();

  for (const auto& v : open) {
    Nucleus g = fitnuc(frame, v.bits(), limits);
    if (std::find(compact_fitted.begin(), compact_fitted.end(), g) ==
            compact_fitted.end() ||
        !(oneker(frame, g) == v)) {
      r.antiisomorphism_verified = false;
    }
    r.pairs.emplace_back(v, std::move(g));
  }
  if (r.pairs.size() != compact_fitted.size()) {
    r.antiisomorphism_verified = false;
  }
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    for (std::size_t j = 0; j < r.pairs.size(); ++j) {
      const bool filters_le =
          subset_of(r.pairs[i].first.bits(), r.pairs[j].first.bits());
      const bool systems_ge =
          subset_of(r.pairs[j].second.fixpoints().bits(),
                    r.pairs[i].second.fixpoints().bits());
      if (filters_le != systems_ge) r.antiisomorphism_verified = false;
      if (i != j && r.pairs[i].second == r.pairs[j].second) {
        r.antiisomorphism_verified = false;
      }
    }
  }
  return r;
}

}  // namespace latkit
