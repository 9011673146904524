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

#include "support/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latkit::testing {

namespace {

std::string mask_label(Mask m) {
  std::string s = "s";
  for_each_bit(m, [&](Element e) { s += std::to_string(e); });
  return s;
}

FinitePoset inclusion_order(const std::vector<Mask>& family) {
  std::vector<std::string> labels;
  std::vector<FinitePoset::OrderPair> pairs;
  for (Mask m : family) labels.push_back(mask_label(m));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && (family[i] & ~family[j]) == 0) {
        pairs.emplace_back(labels[i], labels[j]);
      }
    }
  }
  return FinitePoset::build(std::move(labels), pairs);
}

Element pick(Rng& rng, Mask m) {
  auto members = elements_of(m);
  std::uniform_int_distribution<std::size_t> d(0, members.size() - 1);
  return members[d(rng)];
}

}  // namespace

std::vector<Element> linear_extension(const FinitePoset& p) {
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return popcount(p.down(a)) < popcount(p.down(b));
  });
  return order;
}

FinitePoset random_poset(Rng& rng, std::size_t n, double density) {
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::shuffle(rank.begin(), rank.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<FinitePoset::OrderPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rank[i] < rank[j] && edge(rng)) pairs.emplace_back(labels[i], labels[j]);
    }
  }
  return FinitePoset::build(std::move(labels), pairs);
}

FinitePoset random_pointed_poset(Rng& rng, std::size_t n, double density) {
  const auto base = random_poset(rng, n - 1, density);
  std::vector<std::string> labels = base.labels();
  labels.push_back("bot");
  std::vector<FinitePoset::OrderPair> pairs;
  for (Element a = 0; a < base.size(); ++a) {
    pairs.emplace_back("bot", base.label(a));
    for_each_bit(base.up(a) & ~bit(a), [&](Element b) {
      pairs.emplace_back(base.label(a), base.label(b));
    });
  }
  return FinitePoset::build(std::move(labels), pairs);
}

FinitePoset random_meet_semilattice(Rng& rng, std::size_t max_size) {
  std::uniform_int_distribution<int> ground(2, 4);
  for (;;) {
    const std::size_t g = ground(rng);
    std::uniform_int_distribution<Mask> pick_set(0, (Mask{1} << g) - 1);
    std::uniform_int_distribution<int> count(1, 5);
    std::vector<Mask> family;
    for (int i = count(rng); i > 0; --i) family.push_back(pick_set(rng));
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
          const Mask m = family[i] & family[j];
          if (std::find(family.begin(), family.end(), m) == family.end()) {
            family.push_back(m);
            grew = true;
          }
        }
      }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.size() >= 2 && family.size() <= max_size) {
      return inclusion_order(family);
    }
  }
}

FinitePoset random_frame(Rng& rng, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (;;) {
    const auto q = random_poset(rng, size(rng), 0.4);
    std::vector<Mask> downsets;
    for_each_submask(q.all(), [&](Mask m) {
      if (q.is_lower_set(m)) downsets.push_back(m);
    });
    if (downsets.size() >= 2 && downsets.size() <= max_size) {
      return inclusion_order(downsets);
    }
  }
}

EndoMap random_preclosure(Rng& rng, const FinitePoset& p) {
  std::vector<Element> t(p.size());
  auto order = linear_extension(p);
  std::reverse(order.begin(), order.end());
  for (Element x : order) {
    Mask candidates = p.up(x);
    for_each_bit(p.up(x) & ~bit(x), [&](Element y) {
      candidates &= p.down(t[y]);
    });
    t[x] = pick(rng, candidates);
  }
  return {p, std::move(t)};
}

EndoMap random_increasing(Rng& rng, const FinitePoset& p) {
  std::vector<Element> t(p.size());
  auto order = linear_extension(p);
  std::reverse(order.begin(), order.end());
  for (Element x : order) {
    Mask candidates = p.all();
    for_each_bit(p.up(x) & ~bit(x), [&](Element y) {
      candidates &= p.down(t[y]);
    });
    t[x] = pick(rng, candidates);
  }
  return {p, std::move(t)};
}

EndoMap random_prenucleus(Rng& rng, const FinitePoset& p,
                          const std::vector<Nucleus>& nuclei) {
  std::uniform_int_distribution<std::size_t> which(0, nuclei.size() - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0:
      return nuclei[which(rng)].map();
    case 1:
      return compose(nuclei[which(rng)].map(), nuclei[which(rng)].map());
    case 2: {
      const EndoMap pair[] = {nuclei[which(rng)].map(),
                              nuclei[which(rng)].map()};
      return *pointwise_meet(pair);
    }
    default:
      for (int tries = 0; tries < 50; ++tries) {
        auto f = random_preclosure(rng, p);
        if (is_prenucleus(f)) return f;
      }
      return EndoMap::identity(p);
  }
}

Mask random_subset(Rng& rng, const FinitePoset& p) {
  std::uniform_int_distribution<Mask> d(0, p.all());
  return d(rng);
}

}  // namespace latkit::testing
