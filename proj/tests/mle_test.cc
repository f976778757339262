// Copyright 2026 The Polysum Authors.
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


#include "polysum/mle.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <random>
#include <vector>

#include "oracles.h"
#include "polysum/error.h"
#include "polysum/mle_io.h"

namespace polysum {
namespace {

using oracle::BigInt;
using oracle::ToBig;

Mle RandomMle(std::size_t mu, std::mt19937_64& rng) {
  std::vector<Fr> v(std::size_t{1} << mu);
  for (auto& x : v) x = Fr::random(rng);
  return Mle(std::move(v));
}

std::vector<Fr> RandomPoint(std::size_t mu, std::mt19937_64& rng) {
  std::vector<Fr> v(mu);
  for (auto& x : v) x = Fr::random(rng);
  return v;
}

std::vector<BigInt> Big(const std::vector<Fr>& v) {
  std::vector<BigInt> out;
  for (const Fr& x : v) out.push_back(ToBig(x));
  return out;
}

TEST(MleTest, EvaluateMatchesNaiveSum) {
  std::mt19937_64 rng(21);
  for (std::size_t mu = 0; mu <= 7; ++mu) {
    const Mle m = RandomMle(mu, rng);
    const auto pt = RandomPoint(mu, rng);
    EXPECT_EQ(ToBig(evaluate(m, pt)), oracle::EvaluateNaive(ToBig(m), Big(pt)));
  }
}

TEST(MleTest, EvaluateOnHypercubeReturnsEntry) {
  std::mt19937_64 rng(22);
  const Mle m = RandomMle(4, rng);
  for (std::size_t b = 0; b < 16; ++b) {
    std::vector<Fr> pt;
    for (std::size_t i = 0; i < 4; ++i) pt.push_back(Fr((b >> i) & 1));
    EXPECT_EQ(evaluate(m, pt), m[b]);
  }
}

TEST(MleTest, UpdateFixesLowestVariable) {
  std::mt19937_64 rng(23);
  const Mle m = RandomMle(5, rng);
  const auto pt = RandomPoint(5, rng);
  Mle folded = update(m, pt[0]);
  EXPECT_EQ(folded.num_vars(), 4u);
  EXPECT_EQ(evaluate(folded, std::span<const Fr>(pt).subspan(1)), evaluate(m, pt));

  std::vector<Fr> table = m.evals();
  EXPECT_EQ(update_in_place(table, table.size(), pt[0]), 16u);
  EXPECT_TRUE(std::equal(folded.evals().begin(), folded.evals().end(), table.begin()));
}

TEST(MleTest, UpdateOfConstantThrows) {
  EXPECT_THROW(update(Mle::zeros(0), Fr(1)), Error);
}

TEST(MleTest, DimensionErrors) {
  EXPECT_THROW(Mle(std::vector<Fr>(3)), Error);
  const Mle m = Mle::zeros(3);
  std::vector<Fr> pt(2);
  EXPECT_THROW(evaluate(m, pt), Error);
}

TEST(MleTest, ExtendPairSamplesTheLine) {
  const auto e = extend_pair(Fr(5), Fr(8), 4);
  ASSERT_EQ(e.size(), 5u);
  for (std::uint64_t k = 0; k <= 4; ++k) EXPECT_EQ(e[k], Fr(5 + 3 * k));
  EXPECT_EQ(extend_pair(Fr(5), Fr(8), 0), std::vector<Fr>{Fr(5)});
}

TEST(EqTest, TableMatchesOracleAndClosedForm) {
  std::mt19937_64 rng(24);
  for (std::size_t mu = 1; mu <= 6; ++mu) {
    const auto tau = RandomPoint(mu, rng);
    const Mle eq = build_eq_mle(tau);
    EXPECT_EQ(ToBig(eq), oracle::EqTable(Big(tau)));
    const auto x = RandomPoint(mu, rng);
    EXPECT_EQ(eq_eval(x, tau), evaluate(eq, x));
  }
}

TEST(EqTest, SumAgainstTableIsEvaluation) {
  std::mt19937_64 rng(25);
  for (std::size_t mu = 1; mu <= 8; ++mu) {
    const Mle g = RandomMle(mu, rng);
    const auto tau = RandomPoint(mu, rng);
    const Mle eq = build_eq_mle(tau);
    Fr sum;
    for (std::size_t x = 0; x < g.size(); ++x) sum += eq[x] * g[x];
    EXPECT_EQ(sum, evaluate(g, tau));
  }
}

TEST(SparseTest, RoundTripAndThreshold) {
  Mle m = Mle::zeros(6);
  m[3] = Fr(9);
  m[40] = Fr(2);
  const auto s = sparsify(m, 0.1);
  ASSERT_TRUE(std::holds_alternative<SparseMle>(s));
  const auto& sp = std::get<SparseMle>(s);
  EXPECT_EQ(sp.offsets, (std::vector<std::uint32_t>{3, 40}));
  EXPECT_EQ(densify(sp), m);
  EXPECT_TRUE(std::holds_alternative<Mle>(sparsify(m, 0.01)));
}

TEST(SparseTest, DensifyRejectsBadOffsets) {
  SparseMle s{2, {3, 1}, {Fr(1), Fr(2)}};
  EXPECT_THROW(densify(s), Error);
  SparseMle t{2, {9}, {Fr(1)}};
  EXPECT_THROW(densify(t), Error);
}

TEST(MleIoTest, DenseAndSparseRoundTrip) {
  std::mt19937_64 rng(26);
  const Mle dense = RandomMle(5, rng);
  auto d = deserialize_mle(serialize_mle(dense));
  EXPECT_EQ(std::get<Mle>(d), dense);

  Mle sparse = Mle::zeros(5);
  sparse[7] = Fr(77);
  const SparseMle sp = std::get<SparseMle>(sparsify(sparse, 0.5));
  EXPECT_EQ(std::get<SparseMle>(deserialize_mle(serialize_mle(sp))), sp);

  const std::string path = ::testing::TempDir() + "/mle_io_test.zmle";
  write_mle_file(path, sparse);
  EXPECT_EQ(read_mle_file(path), sparse);
  std::remove(path.c_str());
}

TEST(MleIoTest, TruncatedAndCorruptInputRejected) {
  std::mt19937_64 rng(27);
  const auto bytes = serialize_mle(RandomMle(3, rng));
  for (std::size_t cut : {0ul, 3ul, 10ul, bytes.size() - 1}) {
    std::vector<std::uint8_t> t(bytes.begin(), bytes.begin() + cut);
    EXPECT_THROW(deserialize_mle(t), Error) << cut;
  }
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(deserialize_mle(bad_magic), Error);
  auto non_canonical = bytes;
  for (std::size_t i = non_canonical.size() - 32; i < non_canonical.size(); ++i) {
    non_canonical[i] = 0xff;
  }
  EXPECT_THROW(deserialize_mle(non_canonical), Error);
}

}  // namespace
}  // namespace polysum
