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


#include "polysum/witness.h"

#include <utility>
#include <vector>

#include "polysum/error.h"
#include "polysum/gate_library.h"
#include "polysum/permcheck.h"

namespace polysum {

namespace {

using Rng = std::mt19937_64;
using Column = std::vector<Fr>;

Column RandomColumn(std::size_t n, Rng& rng) {
  Column c(n);
  for (auto& v : c) v = Fr::random(rng);
  return c;
}

Column Constant(std::size_t n, const Fr& v) { return Column(n, v); }

// Random nonzero values with a != b, both nonzero.
Fr RandomNonzero(Rng& rng) {
  for (;;) {
    Fr v = Fr::random(rng);
    if (!v.is_zero()) return v;
  }
}

struct Points {
  Column x_p, y_p, x_q, y_q, x_r, y_r, lambda, alpha, beta, gamma, delta;
};

// Chord addition R = P + Q for random P, Q with distinct nonzero x
// coordinates; alpha, beta, gamma hold 1/(x_q - x_p), 1/x_p, 1/x_q and delta
// is zero.
Points ChordAdd(std::size_t n, Rng& rng) {
  Points pts;
  pts.x_p.resize(n);
  pts.x_q.resize(n);
  pts.y_p = RandomColumn(n, rng);
  pts.y_q = RandomColumn(n, rng);
  Column dx(n);
  for (std::size_t i = 0; i < n; ++i) {
    do {
      pts.x_p[i] = RandomNonzero(rng);
      pts.x_q[i] = RandomNonzero(rng);
    } while (pts.x_p[i] == pts.x_q[i]);
    dx[i] = pts.x_q[i] - pts.x_p[i];
  }
  pts.alpha = batch_inverse(dx);
  pts.beta = batch_inverse(pts.x_p);
  pts.gamma = batch_inverse(pts.x_q);
  pts.delta = Constant(n, Fr::zero());
  pts.lambda.resize(n);
  pts.x_r.resize(n);
  pts.y_r.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Fr l = (pts.y_q[i] - pts.y_p[i]) * pts.alpha[i];
    pts.lambda[i] = l;
    pts.x_r[i] = l.square() - pts.x_p[i] - pts.x_q[i];
    pts.y_r[i] = l * (pts.x_p[i] - pts.x_r[i]) - pts.y_p[i];
  }
  return pts;
}

// Points on y^2 = x^3 + 5.
void CurvePoints(std::size_t n, Rng& rng, Column& xs, Column& ys) {
  xs.resize(n);
  ys.resize(n);
  const Fr five(5);
  for (std::size_t i = 0; i < n; ++i) {
    for (;;) {
      const Fr x = Fr::random(rng);
      auto y = (x.square() * x + five).sqrt();
      if (y) {
        xs[i] = x;
        ys[i] = *y;
        break;
      }
    }
  }
}

void Put(Binding& b, const std::string& id, Column c) {
  b.insert_or_assign(id, Mle(std::move(c)));
}

}  // namespace

Binding generate_witness(std::string_view gate_id, std::size_t num_vars,
                         std::uint64_t seed) {
  const BuiltinGate& info = builtin_gate_info(gate_id);
  const std::size_t n = std::size_t{1} << num_vars;
  Rng rng(seed);
  Binding b;
  const std::string id(gate_id);
  if (id == "1") {
    Column a = RandomColumn(n, rng), bb = RandomColumn(n, rng), c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[i] * bb[i];
    Put(b, "A", std::move(a));
    Put(b, "B", std::move(bb));
    Put(b, "C", std::move(c));
  } else if (id == "3" || id == "4" || id == "5") {
    Column xs, ys;
    CurvePoints(n, rng, xs, ys);
    Put(b, id == "3" ? "q_point_non_id" : "q_point", Constant(n, Fr::one()));
    Put(b, "x", std::move(xs));
    Put(b, "y", std::move(ys));
  } else if (id == "6" || id == "7") {
    Points pts = ChordAdd(n, rng);
    Put(b, "q_add_incomplete", Constant(n, Fr::one()));
    Put(b, "x_p", pts.x_p);
    Put(b, "y_p", pts.y_p);
    Put(b, "x_q", pts.x_q);
    Put(b, "y_q", pts.y_q);
    Put(b, "x_r", pts.x_r);
    Put(b, "y_r", pts.y_r);
  } else if (info.family == "Halo2") {
    Points pts = ChordAdd(n, rng);
    Put(b, "q_add", Constant(n, Fr::one()));
    Put(b, "x_p", pts.x_p);
    Put(b, "y_p", pts.y_p);
    Put(b, "x_q", pts.x_q);
    Put(b, "y_q", pts.y_q);
    Put(b, "x_r", pts.x_r);
    Put(b, "y_r", pts.y_r);
    Put(b, "lambda", pts.lambda);
    Put(b, "alpha", pts.alpha);
    Put(b, "beta", pts.beta);
    Put(b, "gamma", pts.gamma);
    Put(b, "delta", pts.delta);
  } else if (id == "20") {
    Column ql = RandomColumn(n, rng), qr = RandomColumn(n, rng),
           qm = RandomColumn(n, rng), qc = RandomColumn(n, rng),
           w1 = RandomColumn(n, rng), w2 = RandomColumn(n, rng), w3(n);
    for (std::size_t i = 0; i < n; ++i) {
      w3[i] = ql[i] * w1[i] + qr[i] * w2[i] + qm[i] * w1[i] * w2[i] + qc[i];
    }
    Put(b, "q_L", std::move(ql));
    Put(b, "q_R", std::move(qr));
    Put(b, "q_M", std::move(qm));
    Put(b, "q_C", std::move(qc));
    Put(b, "q_O", Constant(n, Fr::one()));
    Put(b, "w_1", std::move(w1));
    Put(b, "w_2", std::move(w2));
    Put(b, "w_3", std::move(w3));
  } else if (id == "22") {
    const char* kSel[] = {"q_1",  "q_2",  "q_3",  "q_4",  "q_M1", "q_M2",
                          "q_H1", "q_H2", "q_H3", "q_H4", "q_ecc", "q_C"};
    std::vector<Column> q;
    for (int s = 0; s < 12; ++s) q.push_back(RandomColumn(n, rng));
    std::vector<Column> w;
    for (int s = 0; s < 4; ++s) w.push_back(RandomColumn(n, rng));
    Column w5(n);
    for (std::size_t i = 0; i < n; ++i) {
      Fr acc = q[11][i];
      for (int s = 0; s < 4; ++s) {
        const Fr x = w[s][i];
        const Fr x2 = x.square();
        acc += q[s][i] * x + q[6 + s][i] * x2.square() * x;
      }
      acc += q[4][i] * w[0][i] * w[1][i] + q[5][i] * w[2][i] * w[3][i];
      acc += q[10][i] * w[0][i] * w[1][i] * w[2][i] * w[3][i];
      w5[i] = acc;
    }
    for (int s = 0; s < 12; ++s) Put(b, kSel[s], std::move(q[s]));
    Put(b, "q_O", Constant(n, Fr::one()));
    for (int s = 0; s < 4; ++s) Put(b, "w_" + std::to_string(s + 1), std::move(w[s]));
    Put(b, "w_5", std::move(w5));
  } else if (id == "21" || id == "23") {
    PermInstance inst = random_perm_instance(num_vars, id == "21" ? 3 : 5, rng);
    b = permcheck_binding(inst);
  } else {
    // Sum gates: any tables are valid.
    const CompositePoly p = builtin_gate(gate_id);
    for (std::size_t i : p.used_inputs()) {
      if (p.inputs[i].role == MleRole::kEq) continue;
      Put(b, p.inputs[i].id, RandomColumn(n, rng));
    }
  }
  return b;
}

Fr gate_body_value(const CompositePoly& p, const Binding& binding,
                   const Scalars& scalars, std::size_t index) {
  Fr total;
  for (const Term& t : p.terms) {
    Fr v = term_scalar(p, t, scalars);
    for (std::size_t f : t.factors) {
      if (p.inputs[f].role == MleRole::kEq) continue;
      auto it = binding.find(p.inputs[f].id);
      if (it == binding.end()) {
        throw Error(ErrorCode::kMissingBinding,
                    "no table bound for '" + p.inputs[f].id + "'");
      }
      v *= it->second[index];
    }
    total += v;
  }
  return total;
}

Corruption corrupt_witness(const CompositePoly& p, Binding& binding,
                           std::mt19937_64& rng) {
  std::vector<std::size_t> targets;
  for (std::size_t i : p.used_inputs()) {
    const MleRole r = p.inputs[i].role;
    if (r == MleRole::kWitness || r == MleRole::kPermutationAux) {
      targets.push_back(i);
    }
  }
  if (targets.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "gate '" + p.name + "' has no witness tables to corrupt");
  }
  Scalars scalars;
  for (const std::string& c : p.challenges) scalars.emplace(c, Fr::random(rng));
  std::uniform_int_distribution<std::size_t> pick_table(0, targets.size() - 1);
  constexpr int kAttempts = 256;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::string& id = p.inputs[targets[pick_table(rng)]].id;
    Mle& table = binding.at(id);
    std::uniform_int_distribution<std::size_t> pick_row(0, table.size() - 1);
    const std::size_t row = pick_row(rng);
    const Fr delta = RandomNonzero(rng);
    const Fr before = gate_body_value(p, binding, scalars, row);
    table[row] += delta;
    if (!(gate_body_value(p, binding, scalars, row) == before)) {
      return {id, row, delta};
    }
    table[row] -= delta;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no relation-changing corruption found for '" + p.name + "'");
}

}  // namespace polysum
