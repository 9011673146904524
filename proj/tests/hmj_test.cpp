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

#include <gtest/gtest.h>

#include <algorithm>

#include "latkit/error.hpp"
#include "latkit/fixtures.hpp"
#include "latkit/hmj.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

namespace latkit {
namespace {

using fixtures::b2;
using fixtures::chain;

EndoMap table(const FinitePoset& p, std::vector<std::string> images) {
  std::vector<Element> t;
  for (const auto& l : images) t.push_back(p.index_of(l));
  return {p, std::move(t)};
}

Mask m(const FinitePoset& p, std::initializer_list<std::string_view> labels) {
  return Subset::of(p, labels).bits();
}

std::vector<FinitePoset> frames() {
  std::vector<FinitePoset> out;
  for (const auto& [name, p] : fixtures::all()) {
    if (validate_structure(p).level == StructureLevel::kFrame) out.push_back(p);
  }
  testing::Rng rng(61);
  for (int i = 0; i < 50; ++i) out.push_back(testing::random_frame(rng, 6));
  return out;
}

TEST(OpenNucleus, Examples) {
  Frame f(b2());
  auto& p = f.poset();
  auto a = open_nucleus(f, p.index_of("a"));
  EXPECT_EQ(a.map(), table(p, {"b", "1", "b", "1"}));
  EXPECT_EQ(a.fixpoints().bits(), m(p, {"b", "1"}));
  EXPECT_EQ(open_nucleus(f, f.bottom()).map(), EndoMap::constant(p, f.top()));
  EXPECT_EQ(open_nucleus(f, f.top()).map(), EndoMap::identity(p));
}

TEST(Fitting, Examples) {
  Frame f(b2());
  auto& p = f.poset();
  Nucleus top{ClosureOperator(EndoMap::constant(p, 3))};
  Nucleus id{ClosureOperator(EndoMap::identity(p))};
  auto r = fitting_and_galois(f, top, m(p, {"a"}));
  EXPECT_EQ(r.fitting, top);
  EXPECT_TRUE(r.is_fitted);
  EXPECT_EQ(r.fitnuc, open_nucleus(f, p.index_of("a")));
  EXPECT_EQ(r.nucfilt.bits(), m(p, {"a", "1"}));
  auto ri = fitting_and_galois(f, id, 0);
  EXPECT_EQ(ri.fitting, id);
  EXPECT_EQ(ri.oneker.bits(), m(p, {"1"}));
}

TEST(Filters, B2) {
  Frame f(b2());
  auto& p = f.poset();
  std::vector<Mask> got;
  for (const auto& x : enumerate_filters(f)) got.push_back(x.bits());
  std::vector<Mask> expect{m(p, {"1"}), m(p, {"a", "1"}), m(p, {"b", "1"}),
                           p.all()};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);
  auto q = filters(f, m(p, {"a", "b", "1"}));
  EXPECT_FALSE(q.is_filter);
  EXPECT_FALSE(q.is_scott_open);
  EXPECT_FALSE(q.is_nuclear_filter);
  EXPECT_THROW(FilterSet(Subset::of(p, {"a", "b", "1"})), Error);
}

TEST(Filters, EveryFilterIsScottOpenAndNuclear) {
  for (const auto& p : frames()) {
    Frame f(p);
    auto found = enumerate_filters(f);
    ASSERT_EQ(found.size(), oracle::filters(oracle::Order(p)).size());
    for_each_submask(p.all(), [&](Mask x) {
      auto q = filters(f, x);
      ASSERT_EQ(q.is_filter, is_filter(p, x));
      ASSERT_EQ(q.is_scott_open, q.is_filter);
      ASSERT_EQ(q.is_nuclear_filter, q.is_filter);
    });
  }
}

TEST(Hmj, Examples) {
  Frame f(b2());
  auto r = hmj_correspondence(f);
  EXPECT_EQ(r.pairs.size(), 4u);
  EXPECT_EQ(r.compact_fitted_count, 4u);
  EXPECT_TRUE(r.antiisomorphism_verified);

  auto one = hmj_correspondence(Frame(fixtures::one_point()));
  EXPECT_EQ(one.pairs.size(), 1u);
  EXPECT_TRUE(one.antiisomorphism_verified);

  Frame c3(chain(3));
  auto rc = hmj_correspondence(c3);
  ASSERT_EQ(rc.pairs.size(), 3u);
  EXPECT_EQ(rc.compact_fitted_count, 3u);
  EXPECT_EQ(rc.pairs[0].first.bits(), 0b100u);
  EXPECT_EQ(rc.pairs[1].first.bits(), 0b110u);
  EXPECT_EQ(rc.pairs[2].first.bits(), 0b111u);
  EXPECT_TRUE(rc.antiisomorphism_verified);
}

TEST(Hmj, CorrespondenceOnAllFrames) {
  for (const auto& p : frames()) {
    Frame f(p);
    auto r = hmj_correspondence(f);
    ASSERT_TRUE(r.antiisomorphism_verified);
    ASSERT_TRUE(r.every_filter_scott_open);
    ASSERT_TRUE(r.every_fitted_compact);
    ASSERT_EQ(r.pairs.size(), enumerate_filters(f).size());
    ASSERT_TRUE(galois_check(f));
  }
}

TEST(Hmj, OpenBelowIffKernelContains) {
  for (const auto& p : frames()) {
    Frame f(p);
    for (const auto& n : enumerate_nuclei(p)) {
      for (Element a = 0; a < p.size(); ++a) {
        ASSERT_EQ(pointwise_leq(open_nucleus(f, a).map(), n.map()),
                  n(a) == f.top());
      }
    }
  }
}

TEST(Hmj, FittingIsAnInteriorOperator) {
  for (const auto& p : frames()) {
    Frame f(p);
    auto nuclei = enumerate_nuclei(p);
    for (const auto& a : nuclei) {
      auto fa = fitting(f, a);
      ASSERT_TRUE(pointwise_leq(fa.map(), a.map()));
      ASSERT_EQ(fitting(f, fa), fa);
      for (const auto& b : nuclei) {
        if (pointwise_leq(a.map(), b.map())) {
          ASSERT_TRUE(pointwise_leq(fa.map(), fitting(f, b).map()));
        }
      }
    }
  }
}

TEST(Hmj, QuotientFrameLaws) {
  for (const auto& p : frames()) {
    Frame f(p);
    for (const auto& n : enumerate_nuclei(p)) {
      ASSERT_TRUE(quotient_frame_check(f, n));
      ASSERT_TRUE(is_compact(f, n));
    }
  }
}

}  // namespace
}  // namespace latkit
