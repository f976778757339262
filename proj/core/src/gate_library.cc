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


#include "polysum/gate_library.h"

#include <algorithm>

#include "polysum/error.h"
#include "polysum/sumcheck.h"

namespace polysum {

std::string permcheck_gate_text(std::size_t k) {
  const std::string name = k == 3 ? "vanilla_permcheck"
                         : k == 5 ? "jellyfish_permcheck"
                                  : "permcheck_" + std::to_string(k);
  std::string decl = "pi:permutation-aux, p_1:permutation-aux, "
                     "p_2:permutation-aux, phi:permutation-aux";
  std::string dens, nums;
  for (std::size_t i = 1; i <= k; ++i) {
    decl += ", N_" + std::to_string(i) + ":permutation-aux";
  }
  for (std::size_t i = 1; i <= k; ++i) {
    decl += ", D_" + std::to_string(i) + ":permutation-aux";
    dens += " * D_" + std::to_string(i);
    nums += (i == 1 ? "N_" : " * N_") + std::to_string(i);
  }
  decl += ", f_r:eq, alpha:challenge";
  return "gate " + name + " (inputs: " + decl + ") {\n  (pi - p_1 * p_2 + alpha * (phi" +
         dens + " - " + nums + ")) * f_r\n}\n";
}

namespace {

constexpr const char* kCompleteAddInputs =
    "q_add:selector, x_p:witness, y_p:witness, x_q:witness, y_q:witness, "
    "x_r:witness, y_r:witness, lambda:witness, alpha:witness, beta:witness, "
    "gamma:witness, delta:witness";

std::string CompleteAdd(int n, const std::string& body) {
  return "gate complete_add_" + std::to_string(n) + " (inputs: " +
         kCompleteAddInputs + ") {\n  " + body + "\n}\n";
}

std::vector<BuiltinGate> MakeLibrary() {
  std::vector<BuiltinGate> g;
  g.push_back({"0", "Verifiable ASICs",
               "gate verifiable_asics (inputs: q_add:selector, q_mul:selector, "
               "a:witness, b:witness) {\n  q_add * (a + b) + q_mul * a * b\n}\n",
               GateKind::kSum});
  g.push_back({"1", "Spartan",
               "gate spartan_1 (inputs: A:witness, B:witness, C:witness, "
               "f_tau:eq) {\n  (A * B - C) * f_tau\n}\n",
               GateKind::kEqEmbedded});
  g.push_back({"2", "Spartan",
               "gate spartan_2 (inputs: sum_abc:witness, Z:witness) {\n"
               "  sum_abc * Z\n}\n",
               GateKind::kSum});
  g.push_back({"3", "Halo2",
               "gate nonzero_point_check (inputs: q_point_non_id:selector, "
               "x:witness, y:witness) {\n"
               "  q_point_non_id * (y^2 - x^3 - 5)\n}\n",
               GateKind::kZeroCheck});
  g.push_back({"4", "Halo2",
               "gate x_gated_curve_check (inputs: q_point:selector, x:witness, "
               "y:witness) {\n  (q_point * x) * (y^2 - x^3 - 5)\n}\n",
               GateKind::kZeroCheck});
  g.push_back({"5", "Halo2",
               "gate y_gated_curve_check (inputs: q_point:selector, x:witness, "
               "y:witness) {\n  (q_point * y) * (y^2 - x^3 - 5)\n}\n",
               GateKind::kZeroCheck});
  constexpr const char* kIncompleteInputs =
      "q_add_incomplete:selector, x_p:witness, y_p:witness, x_q:witness, "
      "y_q:witness, x_r:witness, y_r:witness";
  g.push_back({"6", "Halo2",
               std::string("gate incomplete_add_1 (inputs: ") + kIncompleteInputs +
                   ") {\n  q_add_incomplete * ((x_r + x_q + x_p) * "
                   "(x_p - x_q)^2 - (y_p - y_q)^2)\n}\n",
               GateKind::kZeroCheck});
  g.push_back({"7", "Halo2",
               std::string("gate incomplete_add_2 (inputs: ") + kIncompleteInputs +
                   ") {\n  q_add_incomplete * ((y_r + y_q) * (x_p - x_q) - "
                   "(y_p - y_q) * (x_q - x_r))\n}\n",
               GateKind::kZeroCheck});
  const char* kComplete[] = {
      "q_add * (x_q - x_p) * ((x_q - x_p) * lambda - (y_q - y_p))",
      "q_add * (1 - (x_q - x_p) * alpha) * (2 * y_p * lambda - 3 * x_p^2)",
      "q_add * x_p * x_q * (x_q - x_p) * (lambda^2 - x_p - x_q - x_r)",
      "q_add * x_p * x_q * (x_q - x_p) * (lambda * (x_p - x_r) - y_p - y_r)",
      "q_add * x_p * x_q * (y_q + y_p) * (lambda^2 - x_p - x_q - x_r)",
      "q_add * x_p * x_q * (y_q + y_p) * (lambda * (x_p - x_r) - y_p - y_r)",
      "q_add * (1 - x_p * beta) * (x_r - x_q)",
      "q_add * (1 - x_p * beta) * (y_r - y_q)",
      "q_add * (1 - x_q * gamma) * (x_r - x_p)",
      "q_add * (1 - x_q * gamma) * (y_r - y_p)",
      "q_add * (1 - (x_q - x_p) * alpha - (y_q + y_p) * delta) * x_r",
      "q_add * (1 - (x_q - x_p) * alpha - (y_q + y_p) * delta) * y_r",
  };
  for (int i = 0; i < 12; ++i) {
    g.push_back({std::to_string(8 + i), "Halo2", CompleteAdd(i + 1, kComplete[i]),
                 GateKind::kZeroCheck});
  }
  g.push_back({"20", "HyperPlonk",
               "gate vanilla_zerocheck (inputs: q_L:selector, q_R:selector, "
               "q_O:selector, q_M:selector, q_C:selector, w_1:witness, "
               "w_2:witness, w_3:witness, f_r:eq) {\n"
               "  (q_L * w_1 + q_R * w_2 - q_O * w_3 + q_M * w_1 * w_2 + q_C) "
               "* f_r\n}\n",
               GateKind::kEqEmbedded});
  g.push_back({"21", "HyperPlonk", permcheck_gate_text(3), GateKind::kEqEmbedded});
  g.push_back(
      {"22", "HyperPlonk",
       "gate jellyfish_zerocheck (inputs: q_1:selector, q_2:selector, "
       "q_3:selector, q_4:selector, q_M1:selector, q_M2:selector, "
       "q_H1:selector, q_H2:selector, q_H3:selector, q_H4:selector, "
       "q_O:selector, q_ecc:selector, q_C:selector, w_1:witness, w_2:witness, "
       "w_3:witness, w_4:witness, w_5:witness, f_r:eq) {\n"
       "  (q_1 * w_1 + q_2 * w_2 + q_3 * w_3 + q_4 * w_4\n"
       "   + q_M1 * w_1 * w_2 + q_M2 * w_3 * w_4\n"
       "   + q_H1 * w_1^5 + q_H2 * w_2^5 + q_H3 * w_3^5 + q_H4 * w_4^5\n"
       "   - q_O * w_5 + q_ecc * w_1 * w_2 * w_3 * w_4 + q_C) * f_r\n}\n",
       GateKind::kEqEmbedded});
  g.push_back({"23", "HyperPlonk", permcheck_gate_text(5), GateKind::kEqEmbedded});
  g.push_back({"opencheck", "HyperPlonk",
               "gate opencheck (inputs: y_1:witness, y_2:witness, y_3:witness, "
               "y_4:witness, y_5:witness, y_6:witness, f_r1:eq, f_r2:eq, "
               "f_r3:eq, f_r4:eq, f_r5:eq, f_r6:eq) {\n"
               "  y_1 * f_r1 + y_2 * f_r2 + y_3 * f_r3 + y_4 * f_r4 + y_5 * f_r5"
               " + y_6 * f_r6\n}\n",
               GateKind::kSum});
  return g;
}

}  // namespace

const std::vector<BuiltinGate>& builtin_gates() {
  static const std::vector<BuiltinGate> kLibrary = MakeLibrary();
  return kLibrary;
}

std::vector<std::string> builtin_gate_ids() {
  std::vector<std::string> out;
  for (const BuiltinGate& g : builtin_gates()) out.push_back(g.id);
  return out;
}

const BuiltinGate& builtin_gate_info(std::string_view id) {
  const auto& lib = builtin_gates();
  auto it = std::find_if(lib.begin(), lib.end(),
                         [&](const BuiltinGate& g) { return g.id == id; });
  if (it == lib.end()) {
    throw Error(ErrorCode::kUnknownGate,
                "no built-in gate '" + std::string(id) + "'");
  }
  return *it;
}

CompositePoly builtin_gate(std::string_view id) {
  return parse_gate(builtin_gate_info(id).text);
}

CompositePoly degree_sweep_gate(std::size_t d) {
  if (d < 2 || d > 64) {
    throw Error(ErrorCode::kInvalidArgument, "sweep degree must be in [2, 64]");
  }
  return parse_gate("sweep_d" + std::to_string(d) +
                    " = q_1*w_1 + q_2*w_2 + q_3*w_1^" + std::to_string(d - 1) +
                    "*w_2 + q_c");
}

CompositePoly proving_poly(std::string_view id) {
  const BuiltinGate& info = builtin_gate_info(id);
  CompositePoly p = parse_gate(info.text);
  if (info.kind == GateKind::kZeroCheck) return zerocheck_poly(p);
  return p;
}

}  // namespace polysum
