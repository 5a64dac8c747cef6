/* Copyright (C) 2026 The homring Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "homring/ringspec.hpp"

#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "homring/error.hpp"
#include "homring/numtheory.hpp"
#include "homring/poset.hpp"

namespace homring::ringspec {
namespace {

PirSpec z24() { return PirSpec::parse("2^3x3^1"); }

ExponentTuple t(const PirSpec& spec, std::vector<unsigned> e) { return ExponentTuple(spec, std::move(e)); }

const Lambda kOne{Rational(1)};

TEST(ChainRingParams, ValidatesPrimePower) {
  const auto gr = ChainRingParams::make(4, 2);
  EXPECT_EQ(gr.p, 2u);
  EXPECT_EQ(gr.r, 2u);
  EXPECT_EQ(gr.cardinality(), 16);
  EXPECT_THROW(ChainRingParams::make(6, 1), Error);
  EXPECT_THROW(ChainRingParams::make(2, 0), Error);
  EXPECT_THROW(ChainRingParams::make(1, 1), Error);
}

TEST(ChainRingParams, IdealSizesIncludeZeroIdeal) {
  const auto c = ChainRingParams::make(3, 4);
  for (unsigned j = 0; j <= 4; ++j) EXPECT_EQ(c.ideal_size(j), numtheory::power(3, 4 - j));
  EXPECT_EQ(c.ideal_size(4), 1);
  EXPECT_THROW(c.ideal_size(5), Error);
}

TEST(PirSpec, Parse) {
  const auto spec = z24();
  ASSERT_EQ(spec.arity(), 2u);
  EXPECT_EQ(spec.components()[0].q, 2u);
  EXPECT_EQ(spec.components()[0].e, 3u);
  EXPECT_EQ(spec.cardinality(), 24);
  EXPECT_EQ(spec.grid_size(), 8u);
  EXPECT_EQ(spec.to_string(), "2^3x3^1");
  EXPECT_EQ(PirSpec::parse(" 2^3 x 3 "), spec);
  EXPECT_EQ(PirSpec::parse("4^2").components()[0].r, 2u);
}

TEST(PirSpec, ParseErrors) {
  EXPECT_THROW(PirSpec::parse("6^1"), Error);
  EXPECT_THROW(PirSpec::parse(""), ParseError);
  EXPECT_THROW(PirSpec::parse("2^"), ParseError);
  EXPECT_THROW(PirSpec::parse("2^3y3"), ParseError);
  EXPECT_THROW(PirSpec::parse("2^0"), ParseError);
  EXPECT_THROW(PirSpec::parse("x2"), ParseError);
  EXPECT_THROW(PirSpec(std::vector<ChainRingParams>{}), Error);
}

TEST(ExponentTuple, BoundsChecked) {
  const auto spec = z24();
  EXPECT_THROW(t(spec, {4, 0}), Error);
  EXPECT_THROW(t(spec, {1}), Error);
  EXPECT_EQ(t(spec, {1, 1}).to_string(), "(1,1)");
}

TEST(Complement, Examples) {
  const auto spec = z24();
  EXPECT_EQ(complement(spec, t(spec, {0, 0})), t(spec, {3, 1}));
  EXPECT_EQ(complement(spec, t(spec, {1, 1})), t(spec, {2, 0}));
}

TEST(Complement, InvolutionAndOrderReversing) {
  const auto spec = PirSpec::parse("2^2x3^3x5^1");
  std::vector<ExponentTuple> grid;
  for_each_tuple(spec, [&](const ExponentTuple& i) { grid.push_back(i); });
  EXPECT_EQ(grid.size(), spec.grid_size());
  for (const auto& i : grid) {
    EXPECT_EQ(complement(spec, complement(spec, i)), i);
    for (const auto& j : grid)
      if (tuple_leq(j, i)) EXPECT_TRUE(tuple_leq(complement(spec, i), complement(spec, j)));
  }
}

TEST(RingPhi, Examples) {
  const auto spec = z24();
  EXPECT_EQ(ring_phi(spec, t(spec, {0, 0})), 1);
  EXPECT_EQ(ring_phi(spec, t(spec, {1, 1})), testing::brute_phi(6));
  const auto z8 = PirSpec::parse("2^3");
  EXPECT_EQ(ring_phi(z8, t(z8, {3})), testing::brute_phi(8));
}

TEST(RingPhi, GeneratorCountsSumToIdealSize) {
  for (const char* text : {"2^3x3^1", "4^3x9^2", "8^2x3^3x5^2", "27^4", "2^1x3^1x5^1x7^1", "16^3x49^2"}) {
    const auto spec = PirSpec::parse(text);
    ASSERT_LE(spec.grid_size(), 10000u);
    for_each_tuple(spec, [&](const ExponentTuple& i) {
      BigInt sum = 0;
      for_each_tuple(spec, [&](const ExponentTuple& j) {
        if (tuple_leq(j, i)) sum += ring_phi(spec, j);
      });
      EXPECT_EQ(sum, ideal_size(spec, i)) << text << " " << i.to_string();
    });
  }
}

TEST(RingMobius, Examples) {
  const auto spec = z24();
  EXPECT_EQ(ring_mobius(spec, t(spec, {2, 1}), t(spec, {2, 1})), 1);
  EXPECT_EQ(ring_mobius(spec, t(spec, {1, 1}), t(spec, {0, 0})), 1);
  EXPECT_EQ(ring_mobius(spec, t(spec, {2, 0}), t(spec, {0, 0})), 0);
  EXPECT_EQ(ring_mobius(spec, t(spec, {0, 0}), t(spec, {1, 0})), 0);
  EXPECT_EQ(ring_mobius(spec, t(spec, {1, 0}), t(spec, {0, 0})), -1);
}

TEST(RingMobius, AgreesWithGenericPosetOnMaterializedGrid) {
  const std::vector<std::uint64_t> qs{2, 3, 4};
  for (std::size_t s = 1; s <= 3; ++s) {
    std::vector<unsigned> es(s, 1);
    while (true) {
      std::vector<ChainRingParams> comps;
      for (std::size_t k = 0; k < s; ++k) comps.push_back(ChainRingParams::make(qs[k], es[k]));
      const PirSpec spec(comps);
      std::vector<ExponentTuple> grid;
      for_each_tuple(spec, [&](const ExponentTuple& i) { grid.push_back(i); });
      const auto p = poset::FinitePoset::build(
          grid.size(), [&](poset::Index a, poset::Index b) { return tuple_leq(grid[a], grid[b]); });
      for (poset::Index a = 0; a < grid.size(); ++a)
        for (poset::Index b = 0; b < grid.size(); ++b) {
          const int closed = ring_mobius(spec, grid[a], grid[b]);
          if (p.leq(b, a))
            ASSERT_EQ(closed, p.mobius(a, b)) << spec.to_string();
          else
            ASSERT_EQ(closed, 0);
        }
      std::size_t k = 0;
      while (k < s && ++es[k] > 3) es[k++] = 1;
      if (k == s) break;
    }
  }
}

TEST(Weight, Z24Classes) {
  const auto spec = z24();
  EXPECT_EQ(weight(spec, t(spec, {0, 0}), kOne).coefficient(), 0);
  EXPECT_EQ(weight(spec, t(spec, {1, 1}), kOne).coefficient(), Rational(1, 2));
  EXPECT_EQ(weight(spec, t(spec, {0, 1}), kOne).coefficient(), Rational(3, 2));
  EXPECT_EQ(weight(spec, t(spec, {1, 1}), Lambda::symbolic()).to_string(), "1/2λ");
}

TEST(Weight, LambdaScaling) {
  const auto spec = z24();
  const auto w = weight(spec, t(spec, {0, 1}), Lambda(Rational(7, 3)));
  EXPECT_TRUE(w.lambda_bound());
  EXPECT_EQ(w.coefficient(), Rational(7, 2));
  EXPECT_EQ(weight(spec, t(spec, {0, 1}), Lambda(Rational(0))).coefficient(), 0);
  EXPECT_THROW(Lambda(Rational(-1)), Error);
}

TEST(Weight, SymbolicAxiomH2) {
  for (const char* text : {"2^3x3^1", "4^2x9^1", "2^2x3^2x5^1", "8^3", "7^1x11^1", "9^3x4^2"}) {
    const auto spec = PirSpec::parse(text);
    for_each_tuple(spec, [&](const ExponentTuple& i) {
      if (i == ExponentTuple::zero(spec)) return;
      Rational sum = 0;
      for_each_tuple(spec, [&](const ExponentTuple& j) {
        if (tuple_leq(j, i)) sum += Rational(ring_phi(spec, j)) * weight(spec, j, Lambda()).coefficient();
      });
      EXPECT_EQ(sum, Rational(ideal_size(spec, i))) << text << " " << i.to_string();
    });
  }
}

TEST(ChainWeight, Examples) {
  const auto z4 = ChainRingParams::make(2, 2);
  EXPECT_EQ(chain_weight(z4, 2, kOne).coefficient(), 0);
  EXPECT_EQ(chain_weight(z4, 1, kOne).coefficient(), 2);
  EXPECT_EQ(chain_weight(z4, 0, kOne).coefficient(), 1);
  const auto f3 = ChainRingParams::make(3, 1);
  EXPECT_EQ(chain_weight(f3, 0, kOne).coefficient(), Rational(3, 2));
  // lambda = (q-1)/q turns the field case into the Hamming weight
  EXPECT_EQ(chain_weight(f3, 0, Lambda(Rational(2, 3))).coefficient(), 1);
  EXPECT_THROW(chain_weight(z4, 3, kOne), Error);
}

TEST(ChainWeight, MatchesGeneralFormula) {
  for (auto q : testing::prime_powers_up_to(32))
    for (unsigned e = 1; e <= 6; ++e) {
      const auto params = ChainRingParams::make(q, e);
      const PirSpec spec({params});
      for (unsigned ibar = 0; ibar <= e; ++ibar)
        ASSERT_EQ(chain_weight(params, ibar, Lambda()), weight(spec, ExponentTuple(spec, {e - ibar}), Lambda()))
            << q << "^" << e << " ibar=" << ibar;
    }
}

TEST(WeightTable, Examples) {
  const auto f2 = weight_table(PirSpec::parse("2^1"), kOne);
  ASSERT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2[0].weight.coefficient(), 0);
  EXPECT_EQ(f2[1].weight.coefficient(), 2);

  const auto rows = weight_table(z24(), kOne);
  ASSERT_EQ(rows.size(), 8u);
  std::set<Rational> distinct;
  for (const auto& r : rows) distinct.insert(r.weight.coefficient());
  EXPECT_EQ(distinct, (std::set<Rational>{0, Rational(1, 2), 1, Rational(3, 2), 2}));

  std::set<Rational> lee;
  for (const auto& r : weight_table(PirSpec::parse("2^2"), kOne)) lee.insert(r.weight.coefficient());
  EXPECT_EQ(lee, (std::set<Rational>{0, 1, 2}));
}

TEST(WeightTable, RowsCarryComplementPhiMobius) {
  const auto spec = z24();
  for (const auto& r : weight_table(spec, Lambda())) {
    EXPECT_EQ(r.ibar, complement(spec, r.tuple));
    EXPECT_EQ(r.phi, ring_phi(spec, r.tuple));
    EXPECT_EQ(r.mobius, ring_mobius(spec, r.tuple, ExponentTuple::zero(spec)));
  }
}

TEST(WeightTable, RejectsHugeGrid) {
  EXPECT_THROW(weight_table(PirSpec::parse("2^1000x3^1000"), kOne), Error);
}

}  // namespace
}  // namespace homring::ringspec
