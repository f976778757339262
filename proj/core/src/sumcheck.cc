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


#include "polysum/sumcheck.h"

#include <algorithm>
#include <map>
#include <utility>

#include "polysum/error.h"

namespace polysum {

Digest gate_digest(const CompositePoly& p) { return sha3_256(print_gate(p)); }

namespace {

struct Setup {
  Scalars scalars;
  // Squeezed tau per eq input index.
  std::map<std::size_t, std::vector<Fr>> eq_tau;
};

bool IsSupplied(const Binding* tables, const std::string& id) {
  return tables != nullptr && tables->find(id) != tables->end();
}

Setup ReplaySetup(const CompositePoly& p, std::size_t num_vars,
                  const Binding* supplied, const Scalars& given,
                  Transcript& transcript) {
  Setup s;
  const Digest digest = gate_digest(p);
  transcript.absorb_bytes("gate", digest);
  transcript.absorb_u64("num_vars", num_vars);
  for (const std::string& name : p.challenges) {
    auto it = given.find(name);
    if (it != given.end()) {
      transcript.absorb_field("scalar:" + name, it->second);
      s.scalars.emplace(name, it->second);
    } else {
      s.scalars.emplace(name, transcript.squeeze_challenge("challenge:" + name));
    }
  }
  for (std::size_t i : p.used_inputs()) {
    const MleRef& in = p.inputs[i];
    if (in.role == MleRole::kEq && !IsSupplied(supplied, in.id)) {
      s.eq_tau.emplace(i, transcript.squeeze_challenges("eq:" + in.id, num_vars));
    }
  }
  return s;
}

std::size_t BindingNumVars(const CompositePoly& p, const Binding& binding) {
  std::optional<std::size_t> mu;
  for (std::size_t i : p.used_inputs()) {
    auto it = binding.find(p.inputs[i].id);
    if (it == binding.end()) {
      if (p.inputs[i].role == MleRole::kEq) continue;
      throw Error(ErrorCode::kMissingBinding,
                  "no table bound for '" + p.inputs[i].id + "'");
    }
    if (mu && *mu != it->second.num_vars()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "table '" + p.inputs[i].id + "' has " +
                      std::to_string(it->second.num_vars()) +
                      " variables, expected " + std::to_string(*mu));
    }
    mu = it->second.num_vars();
  }
  if (!mu) {
    throw Error(ErrorCode::kMissingBinding,
                "cannot infer num_vars: no non-eq tables bound");
  }
  return *mu;
}

}  // namespace

SumcheckProof prove(const CompositePoly& p, const Binding& binding,
                    const Scalars& scalars, Transcript& transcript,
                    OpCounters* counters) {
  const std::size_t mu = BindingNumVars(p, binding);
  if (mu == 0) {
    throw Error(ErrorCode::kInvalidArgument, "SumCheck needs num_vars >= 1");
  }
  Setup setup = ReplaySetup(p, mu, &binding, scalars, transcript);

  const std::vector<std::size_t> used = p.used_inputs();
  std::vector<std::size_t> slot_of(p.inputs.size(), 0);
  std::vector<std::vector<Fr>> tables(used.size());
  OpCounters local;
  for (std::size_t j = 0; j < used.size(); ++j) {
    const std::size_t i = used[j];
    slot_of[i] = j;
    auto tau = setup.eq_tau.find(i);
    if (tau != setup.eq_tau.end()) {
      tables[j] = build_eq_mle(tau->second).evals();
      local.eq_build_muls += (std::uint64_t{1} << mu) - 1;
    } else {
      tables[j] = binding.find(p.inputs[i].id)->second.evals();
    }
  }

  const std::size_t d = p.degree();
  const std::size_t K = d + 1;
  const std::size_t T = p.terms.size();
  std::vector<std::vector<std::size_t>> term_slots(T);
  std::vector<Fr> term_scalars(T);
  std::uint64_t products_per_pair = 0;
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t f : p.terms[t].factors) term_slots[t].push_back(slot_of[f]);
    term_scalars[t] = term_scalar(p, p.terms[t], setup.scalars);
    if (!term_slots[t].empty()) products_per_pair += K * (term_slots[t].size() - 1);
  }

  SumcheckProof proof;
  proof.gate_digest = gate_digest(p);
  proof.num_vars = mu;
  proof.degree = d;
  proof.rounds.reserve(mu);

  std::vector<Fr> ext(used.size() * K);
  std::vector<Fr> acc(T * K);
  std::vector<Fr> prod(K);
  std::size_t len = std::size_t{1} << mu;
  for (std::size_t round = 0; round < mu; ++round) {
    const std::size_t pairs = len / 2;
    std::fill(acc.begin(), acc.end(), Fr::zero());
    for (std::size_t k = 0; k < pairs; ++k) {
      for (std::size_t j = 0; j < used.size(); ++j) {
        extend_pair_into(tables[j][2 * k], tables[j][2 * k + 1], d,
                         ext.data() + j * K);
      }
      for (std::size_t t = 0; t < T; ++t) {
        Fr* a = acc.data() + t * K;
        const auto& slots = term_slots[t];
        if (slots.empty()) {
          for (std::size_t m = 0; m < K; ++m) a[m] += Fr::one();
          continue;
        }
        const Fr* first = ext.data() + slots[0] * K;
        if (slots.size() == 1) {
          for (std::size_t m = 0; m < K; ++m) a[m] += first[m];
          continue;
        }
        std::copy(first, first + K, prod.begin());
        for (std::size_t s = 1; s < slots.size(); ++s) {
          const Fr* e = ext.data() + slots[s] * K;
          for (std::size_t m = 0; m < K; ++m) prod[m] *= e[m];
        }
        for (std::size_t m = 0; m < K; ++m) a[m] += prod[m];
      }
    }
    RoundPolynomial rp;
    rp.evals.assign(K, Fr::zero());
    for (std::size_t t = 0; t < T; ++t) {
      for (std::size_t m = 0; m < K; ++m) {
        rp.evals[m] += term_scalars[t] * acc[t * K + m];
      }
    }
    if (round == 0) {
      proof.claim = K > 1 ? rp.evals[0] + rp.evals[1] : rp.evals[0] + rp.evals[0];
      transcript.absorb_field("claim", proof.claim);
    }
    transcript.absorb_fields("round", rp.evals);
    const Fr r = transcript.squeeze_challenge("r");
    proof.final_point.push_back(r);
    proof.rounds.push_back(std::move(rp));
    for (auto& tab : tables) update_in_place(tab, len, r);

    RoundOps ops;
    ops.product_muls = pairs * products_per_pair;
    ops.coeff_muls = T * K;
    ops.update_muls = used.size() * pairs;
    ops.extension_adds = pairs * used.size() * d;
    local.product_muls += ops.product_muls;
    local.coeff_muls += ops.coeff_muls;
    local.update_muls += ops.update_muls;
    local.extension_adds += ops.extension_adds;
    local.per_round.push_back(ops);
    len = pairs;
  }

  for (std::size_t j = 0; j < used.size(); ++j) {
    proof.final_evals.push_back({p.inputs[used[j]].id, tables[j][0]});
  }
  if (counters != nullptr) *counters = std::move(local);
  return proof;
}

Fr evaluate_round_poly(std::span<const Fr> evals, const Fr& r) {
  const std::size_t n = evals.size();
  if (n == 0) return Fr::zero();
  for (std::size_t k = 0; k < n; ++k) {
    if (r == Fr(k)) return evals[k];
  }
  // Barycentric form: L(r) * sum_j evals_j / (w_j (r - j)), with
  // w_j = prod_{m != j} (j - m).
  std::vector<Fr> denom(n);
  Fr big_l = Fr::one();
  for (std::size_t j = 0; j < n; ++j) {
    Fr w = Fr::one();
    for (std::size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      w *= Fr(j) - Fr(m);
    }
    const Fr diff = r - Fr(j);
    big_l *= diff;
    denom[j] = w * diff;
  }
  const std::vector<Fr> inv = batch_inverse(denom);
  Fr sum;
  for (std::size_t j = 0; j < n; ++j) sum += evals[j] * inv[j];
  return big_l * sum;
}

VerifyResult verify(const CompositePoly& p, const SumcheckProof& proof,
                    Transcript& transcript, const VerifyOptions& options) {
  const std::size_t mu = proof.num_vars;
  const std::size_t d = p.degree();
  if (mu == 0) throw Error(ErrorCode::kMalformedInput, "proof has num_vars 0");
  if (proof.degree != d) {
    throw Error(ErrorCode::kMalformedInput,
                "proof degree " + std::to_string(proof.degree) +
                    " does not match gate degree " + std::to_string(d));
  }
  if (proof.rounds.size() != mu || proof.final_point.size() != mu) {
    throw Error(ErrorCode::kMalformedInput,
                "proof must carry num_vars rounds and point coordinates");
  }
  for (const RoundPolynomial& rp : proof.rounds) {
    if (rp.evals.size() != d + 1) {
      throw Error(ErrorCode::kMalformedInput,
                  "round polynomial must have degree + 1 evaluations");
    }
  }
  if (options.mode == VerifyMode::kDirect && options.tables == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "direct mode needs tables");
  }

  VerifyResult result;
  auto reject = [&](RejectStage stage, std::size_t round, const Fr& expected,
                    const Fr& actual, std::string reason) {
    result.accepted = false;
    result.stage = stage;
    result.failed_round = round;
    result.expected = expected;
    result.actual = actual;
    result.reason = std::move(reason);
    return result;
  };

  if (proof.gate_digest != gate_digest(p)) {
    return reject(RejectStage::kClaim, 0, Fr(), Fr(),
                  "proof was produced for a different gate");
  }
  const Binding* supplied =
      options.mode == VerifyMode::kDirect ? options.tables : nullptr;
  Setup setup = ReplaySetup(p, mu, supplied, options.scalars, transcript);

  if (options.expected_claim && !(*options.expected_claim == proof.claim)) {
    return reject(RejectStage::kClaim, 0, *options.expected_claim, proof.claim,
                  "claim does not match the expected value");
  }
  transcript.absorb_field("claim", proof.claim);

  Fr running = proof.claim;
  for (std::size_t i = 0; i < mu; ++i) {
    const auto& ev = proof.rounds[i].evals;
    const Fr sum = d > 0 ? ev[0] + ev[1] : ev[0] + ev[0];
    if (!(sum == running)) {
      return reject(RejectStage::kRound, i + 1, running, sum,
                    "s_" + std::to_string(i + 1) +
                        "(0) + s_" + std::to_string(i + 1) +
                        "(1) does not match the previous claim");
    }
    transcript.absorb_fields("round", ev);
    const Fr r = transcript.squeeze_challenge("r");
    if (!(r == proof.final_point[i])) {
      return reject(RejectStage::kFinalPoint, i + 1, r, proof.final_point[i],
                    "final point disagrees with transcript challenges");
    }
    running = evaluate_round_poly(ev, r);
  }

  std::map<std::string, Fr, std::less<>> trusted;
  for (const FinalEval& fe : proof.final_evals) trusted.emplace(fe.id, fe.value);
  std::vector<Fr> values(p.inputs.size());
  for (std::size_t i : p.used_inputs()) {
    const std::string& id = p.inputs[i].id;
    auto tau = setup.eq_tau.find(i);
    if (tau != setup.eq_tau.end()) {
      values[i] = eq_eval(proof.final_point, tau->second);
    } else if (options.mode == VerifyMode::kDirect) {
      auto it = options.tables->find(id);
      if (it == options.tables->end()) {
        throw Error(ErrorCode::kMissingBinding, "no table bound for '" + id + "'");
      }
      values[i] = evaluate(it->second, proof.final_point);
      auto claimed = trusted.find(id);
      if (claimed != trusted.end() && !(claimed->second == values[i])) {
        return reject(RejectStage::kFinalCheck, 0, values[i], claimed->second,
                      "final evaluation of '" + id + "' disagrees with its table");
      }
    } else {
      auto it = trusted.find(id);
      if (it == trusted.end()) {
        throw Error(ErrorCode::kMalformedInput,
                    "proof lacks a final evaluation for '" + id + "'");
      }
      values[i] = it->second;
    }
  }
  Fr final_value;
  for (const Term& t : p.terms) {
    Fr v = term_scalar(p, t, setup.scalars);
    for (std::size_t f : t.factors) v *= values[f];
    final_value += v;
  }
  if (!(final_value == running)) {
    return reject(RejectStage::kFinalCheck, 0, running, final_value,
                  "gate evaluated at the final point does not match s_mu(r_mu)");
  }
  result.accepted = true;
  return result;
}

CompositePoly zerocheck_poly(const CompositePoly& gate) {
  if (gate.has_role(MleRole::kEq)) {
    throw Error(ErrorCode::kInvalidArgument,
                "gate '" + gate.name + "' already has an eq factor");
  }
  return multiply_by_eq(gate, kZeroCheckEqId);
}

SumcheckProof zerocheck_prove(const CompositePoly& gate, const Binding& binding,
                              const Scalars& scalars, Transcript& transcript,
                              OpCounters* counters) {
  return prove(zerocheck_poly(gate), binding, scalars, transcript, counters);
}

VerifyResult zerocheck_verify(const CompositePoly& gate,
                              const SumcheckProof& proof,
                              Transcript& transcript, VerifyOptions options) {
  options.expected_claim = Fr::zero();
  return verify(zerocheck_poly(gate), proof, transcript, options);
}

}  // namespace polysum
