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


// SumCheck prover and verifier over a CompositePoly, plus the ZeroCheck
// wrapper.
//
// Transcript order (prover and verifier replay the same sequence):
//   absorb gate digest, num_vars
//   per named challenge: absorb the supplied value or squeeze one
//   per eq input without a supplied table: squeeze num_vars tau values
//   absorb claim
//   per round i: absorb s_i(0..d), squeeze r_i

#ifndef POLYSUM_SUMCHECK_H_
#define POLYSUM_SUMCHECK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysum/field.h"
#include "polysum/gate.h"
#include "polysum/mle.h"
#include "polysum/transcript.h"

namespace polysum {

struct RoundPolynomial {
  std::vector<Fr> evals;  // s_i(0), ..., s_i(d)

  friend bool operator==(const RoundPolynomial&, const RoundPolynomial&) = default;
};

struct FinalEval {
  std::string id;
  Fr value;

  friend bool operator==(const FinalEval&, const FinalEval&) = default;
};

struct SumcheckProof {
  Digest gate_digest{};
  std::size_t num_vars = 0;
  std::size_t degree = 0;
  Fr claim;
  std::vector<RoundPolynomial> rounds;
  std::vector<Fr> final_point;
  std::vector<FinalEval> final_evals;

  friend bool operator==(const SumcheckProof&, const SumcheckProof&) = default;
};

struct RoundOps {
  std::uint64_t product_muls = 0;
  std::uint64_t coeff_muls = 0;
  std::uint64_t update_muls = 0;
  std::uint64_t extension_adds = 0;
};

// Field-operation counters filled by the prover.
struct OpCounters {
  std::uint64_t product_muls = 0;    // extension products across factors
  std::uint64_t coeff_muls = 0;      // term scalar times accumulated sums
  std::uint64_t update_muls = 0;     // MLE updates after each challenge
  std::uint64_t eq_build_muls = 0;   // eq table construction
  std::uint64_t extension_adds = 0;  // extension add/sub chain
  std::vector<RoundOps> per_round;

  // Multiplications the SumCheck datapath performs (products, coefficients,
  // updates).
  std::uint64_t datapath_muls() const {
    return product_muls + coeff_muls + update_muls;
  }
  std::uint64_t total_muls() const { return datapath_muls() + eq_build_muls; }
};

Digest gate_digest(const CompositePoly& p);

// Proves sum_x p(x). `binding` must cover every used non-eq input; eq inputs
// without a table are built from transcript challenges. Missing named
// challenges are squeezed. Throws Error(kMissingBinding),
// Error(kDimensionMismatch) or Error(kInvalidArgument) for num_vars == 0.
SumcheckProof prove(const CompositePoly& p, const Binding& binding,
                    const Scalars& scalars, Transcript& transcript,
                    OpCounters* counters = nullptr);

// Lagrange interpolation through (k, evals[k]), k = 0..d, evaluated at r.
Fr evaluate_round_poly(std::span<const Fr> evals, const Fr& r);
inline Fr evaluate_round_poly(const RoundPolynomial& rp, const Fr& r) {
  return evaluate_round_poly(rp.evals, r);
}

enum class VerifyMode { kDirect, kTrusting };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kTrusting;
  // Original tables; required in direct mode. Eq inputs present here are
  // used as given, the rest are rebuilt from transcript challenges.
  const Binding* tables = nullptr;
  Scalars scalars;
  std::optional<Fr> expected_claim;
};

enum class RejectStage { kNone, kClaim, kRound, kFinalPoint, kFinalCheck };

struct VerifyResult {
  bool accepted = false;
  RejectStage stage = RejectStage::kNone;
  std::size_t failed_round = 0;  // 1-based; 0 when not a round failure
  Fr expected;
  Fr actual;
  std::string reason;
};

// Throws Error(kMalformedInput) for structurally invalid proofs.
VerifyResult verify(const CompositePoly& p, const SumcheckProof& proof,
                    Transcript& transcript, const VerifyOptions& options);

inline constexpr const char* kZeroCheckEqId = "f_r";

// Appends an eq factor f_r to every term of `gate` and proves the sum, which
// is zero exactly when the gate vanishes on the hypercube (w.h.p. over tau).
// Throws Error(kInvalidArgument) if the gate already has an eq input.
SumcheckProof zerocheck_prove(const CompositePoly& gate, const Binding& binding,
                              const Scalars& scalars, Transcript& transcript,
                              OpCounters* counters = nullptr);
// The gate as proven by zerocheck_prove.
CompositePoly zerocheck_poly(const CompositePoly& gate);
// Verifies with expected claim 0.
VerifyResult zerocheck_verify(const CompositePoly& gate,
                              const SumcheckProof& proof,
                              Transcript& transcript, VerifyOptions options);

}  // namespace polysum

#endif  // POLYSUM_SUMCHECK_H_
