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


// End-to-end SumCheck prover and verifier per built-in gate, plus the
// permutation argument.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "polysum/gate_library.h"
#include "polysum/permcheck.h"
#include "polysum/sumcheck.h"
#include "polysum/witness.h"

namespace polysum {
namespace {

constexpr std::size_t kMu = 12;

void BM_Prove(benchmark::State& state, const std::string& id) {
  const CompositePoly p = proving_poly(id);
  const Binding b = generate_witness(id, kMu, 1);
  for (auto _ : state) {
    Transcript t;
    benchmark::DoNotOptimize(prove(p, b, {}, t));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << kMu));
}

void BM_VerifyDirect(benchmark::State& state, const std::string& id) {
  const CompositePoly p = proving_poly(id);
  const Binding b = generate_witness(id, kMu, 1);
  Transcript tp;
  const SumcheckProof proof = prove(p, b, {}, tp);
  VerifyOptions o;
  o.mode = VerifyMode::kDirect;
  o.tables = &b;
  for (auto _ : state) {
    Transcript t;
    benchmark::DoNotOptimize(verify(p, proof, t, o));
  }
}

void BM_Permcheck(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const PermInstance inst =
      random_perm_instance(static_cast<std::size_t>(state.range(0)), 3, rng);
  for (auto _ : state) {
    Transcript t;
    benchmark::DoNotOptimize(permcheck_prove(inst, t));
  }
}
BENCHMARK(BM_Permcheck)->Arg(10)->Arg(12);

int Register() {
  for (const auto& id : builtin_gate_ids()) {
    benchmark::RegisterBenchmark(("BM_Prove/gate_" + id).c_str(), BM_Prove, id);
  }
  for (const char* id : {"0", "20", "22"}) {
    benchmark::RegisterBenchmark((std::string("BM_VerifyDirect/gate_") + id).c_str(),
                                 BM_VerifyDirect, std::string(id));
  }
  return 0;
}
const int kRegistered = Register();

}  // namespace
}  // namespace polysum

BENCHMARK_MAIN();
