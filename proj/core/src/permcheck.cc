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


#include "polysum/permcheck.h"

#include "byte_io.h"
#include "polysum/error.h"
#include "polysum/gate_library.h"
#include "polysum/mle_io.h"

namespace polysum {

std::uint64_t identity_label(std::size_t column, std::size_t row,
                             std::size_t num_vars) {
  return (static_cast<std::uint64_t>(column) << num_vars) + row;
}

namespace {

void CheckShapes(const PermInstance& inst) {
  const std::size_t n = std::size_t{1} << inst.num_vars;
  if (inst.witnesses.empty() || inst.sigma.size() != inst.witnesses.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "instance needs k >= 1 witness and sigma tables");
  }
  for (std::size_t i = 0; i < inst.k(); ++i) {
    if (inst.witnesses[i].size() != n || inst.sigma[i].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "column " + std::to_string(i) + " does not have 2^mu rows");
    }
  }
}

}  // namespace

NumDen build_num_den(const PermInstance& inst) {
  CheckShapes(inst);
  const std::size_t n = std::size_t{1} << inst.num_vars;
  NumDen out;
  for (std::size_t i = 0; i < inst.k(); ++i) {
    std::vector<Fr> num(n), den(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Fr w_plus_gamma = inst.witnesses[i][x] + inst.gamma;
      num[x] = w_plus_gamma + inst.beta * Fr(identity_label(i, x, inst.num_vars));
      den[x] = w_plus_gamma + inst.beta * Fr(inst.sigma[i][x]);
    }
    out.num.emplace_back(std::move(num));
    out.den.emplace_back(std::move(den));
  }
  return out;
}

Mle build_fraction(const std::vector<Mle>& num, const std::vector<Mle>& den,
                   std::size_t batch_size) {
  if (num.empty() || num.size() != den.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "numerator and denominator counts differ");
  }
  const std::size_t n = num[0].size();
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i].size() != n || den[i].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "table sizes differ");
    }
  }
  std::vector<Fr> num_prod(n), den_prod(n);
  for (std::size_t x = 0; x < n; ++x) {
    Fr a = num[0][x], b = den[0][x];
    for (std::size_t i = 1; i < num.size(); ++i) {
      a *= num[i][x];
      b *= den[i][x];
    }
    if (b.is_zero()) {
      throw Error(ErrorCode::kZeroDenominator, "denominator vanishes", x);
    }
    num_prod[x] = a;
    den_prod[x] = b;
  }
  std::vector<Fr> inv =
      batch_size == 0 ? batch_inverse(den_prod) : batch_inverse(den_prod, batch_size);
  for (std::size_t x = 0; x < n; ++x) inv[x] *= num_prod[x];
  return Mle(std::move(inv));
}

ProductTreeMles build_product_tree(const Mle& phi) {
  if (phi.num_vars() == 0) {
    throw Error(ErrorCode::kEmptyTable, "product tree needs num_vars >= 1");
  }
  const std::size_t n = phi.size();
  std::vector<Fr> tree(2 * n);
  std::copy(phi.evals().begin(), phi.evals().end(), tree.begin());
  for (std::size_t j = 0; j + 1 < n; ++j) tree[n + j] = tree[2 * j] * tree[2 * j + 1];
  tree[2 * n - 1] = Fr::zero();
  std::vector<Fr> pi(tree.begin() + n, tree.end());
  std::vector<Fr> p1(n), p2(n);
  for (std::size_t j = 0; j < n; ++j) {
    p1[j] = tree[2 * j];
    p2[j] = tree[2 * j + 1];
  }
  ProductTreeMles out;
  out.root = tree[2 * n - 2];
  out.phi = phi;
  out.pi = Mle(std::move(pi));
  out.p1 = Mle(std::move(p1));
  out.p2 = Mle(std::move(p2));
  return out;
}

Binding permcheck_binding(const PermInstance& inst, Fr* root) {
  NumDen nd = build_num_den(inst);
  Mle phi = build_fraction(nd.num, nd.den);
  ProductTreeMles tree = build_product_tree(phi);
  if (root != nullptr) *root = tree.root;
  Binding b;
  b.emplace("phi", std::move(tree.phi));
  b.emplace("pi", std::move(tree.pi));
  b.emplace("p_1", std::move(tree.p1));
  b.emplace("p_2", std::move(tree.p2));
  for (std::size_t i = 0; i < inst.k(); ++i) {
    b.emplace("N_" + std::to_string(i + 1), std::move(nd.num[i]));
    b.emplace("D_" + std::to_string(i + 1), std::move(nd.den[i]));
  }
  return b;
}

namespace {

void AbsorbInstance(const PermInstance& inst, Transcript& transcript) {
  transcript.absorb_u64("perm:num_vars", inst.num_vars);
  transcript.absorb_u64("perm:k", inst.k());
  for (const Mle& w : inst.witnesses) {
    transcript.absorb_bytes("perm:witness", serialize_mle(w));
  }
  for (const auto& s : inst.sigma) {
    internal::ByteWriter bw;
    for (std::uint64_t v : s) bw.u64(v);
    transcript.absorb_bytes("perm:sigma", bw.bytes());
  }
}

}  // namespace

PermcheckProof permcheck_prove(const PermInstance& inst, Transcript& transcript,
                               OpCounters* counters) {
  CheckShapes(inst);
  AbsorbInstance(inst, transcript);
  PermInstance local = inst;
  local.beta = transcript.squeeze_challenge("perm:beta");
  local.gamma = transcript.squeeze_challenge("perm:gamma");
  PermcheckProof proof;
  proof.beta = local.beta;
  proof.gamma = local.gamma;
  Binding binding = permcheck_binding(local, &proof.root);
  if (!(proof.root == Fr::one())) {
    throw Error(ErrorCode::kRootNotOne,
                "grand product is not 1: witnesses violate the wiring");
  }
  const CompositePoly gate = parse_gate(permcheck_gate_text(inst.k()));
  proof.sumcheck = prove(gate, binding, {}, transcript, counters);
  return proof;
}

VerifyResult permcheck_verify(const PermInstance& inst,
                              const PermcheckProof& proof,
                              Transcript& transcript) {
  CheckShapes(inst);
  AbsorbInstance(inst, transcript);
  PermInstance local = inst;
  local.beta = transcript.squeeze_challenge("perm:beta");
  local.gamma = transcript.squeeze_challenge("perm:gamma");
  VerifyResult result;
  if (!(local.beta == proof.beta) || !(local.gamma == proof.gamma)) {
    result.stage = RejectStage::kClaim;
    result.reason = "beta/gamma disagree with the transcript";
    return result;
  }
  Fr root;
  Binding binding = permcheck_binding(local, &root);
  if (!(root == Fr::one()) || !(proof.root == Fr::one())) {
    result.stage = RejectStage::kClaim;
    result.expected = Fr::one();
    result.actual = root;
    result.reason = "grand product is not 1";
    return result;
  }
  const CompositePoly gate = parse_gate(permcheck_gate_text(inst.k()));
  VerifyOptions options;
  options.mode = VerifyMode::kDirect;
  options.tables = &binding;
  options.expected_claim = Fr::zero();
  return verify(gate, proof.sumcheck, transcript, options);
}

namespace {
constexpr std::string_view kPermMagic = "ZPRM";
constexpr std::uint16_t kPermVersion = 1;
}  // namespace

std::vector<std::uint8_t> serialize_perm_instance(const PermInstance& inst) {
  CheckShapes(inst);
  internal::ByteWriter w;
  w.magic(kPermMagic);
  w.u16(kPermVersion);
  w.u32(static_cast<std::uint32_t>(inst.num_vars));
  w.u32(static_cast<std::uint32_t>(inst.k()));
  for (const Mle& m : inst.witnesses) {
    const auto bytes = serialize_mle(m);
    w.u64(bytes.size());
    w.raw(bytes);
  }
  for (const auto& s : inst.sigma) {
    for (std::uint64_t v : s) w.u64(v);
  }
  return w.take();
}

PermInstance deserialize_perm_instance(std::span<const std::uint8_t> bytes) {
  internal::ByteReader r(bytes);
  r.expect_magic(kPermMagic, "permutation instance");
  if (r.u16() != kPermVersion) {
    throw Error(ErrorCode::kMalformedInput, "unsupported instance version");
  }
  PermInstance inst;
  inst.num_vars = r.u32();
  const std::uint32_t k = r.u32();
  if (inst.num_vars > 32 || k == 0 || k > 64) {
    throw Error(ErrorCode::kMalformedInput, "instance header out of range");
  }
  const std::size_t n = std::size_t{1} << inst.num_vars;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint64_t len = r.u64();
    if (len > r.remaining()) {
      throw Error(ErrorCode::kMalformedInput, "unexpected end of input");
    }
    auto parsed = deserialize_mle(r.raw(static_cast<std::size_t>(len)));
    Mle m = std::holds_alternative<Mle>(parsed)
                ? std::get<Mle>(std::move(parsed))
                : densify(std::get<SparseMle>(parsed));
    if (m.num_vars() != inst.num_vars) {
      throw Error(ErrorCode::kMalformedInput, "witness num_vars mismatch");
    }
    inst.witnesses.push_back(std::move(m));
  }
  inst.sigma.assign(k, std::vector<std::uint64_t>(n));
  for (auto& s : inst.sigma) {
    for (auto& v : s) v = r.u64();
  }
  r.expect_end();
  return inst;
}

void write_perm_instance_file(const std::string& path,
                              const PermInstance& inst) {
  internal::write_file(path, serialize_perm_instance(inst));
}

PermInstance read_perm_instance_file(const std::string& path) {
  return deserialize_perm_instance(internal::read_file(path));
}

}  // namespace polysum
