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


#include "cli.h"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polysum/config.h"
#include "polysum/dse.h"
#include "polysum/error.h"
#include "polysum/gate.h"
#include "polysum/gate_library.h"
#include "polysum/lane_plan.h"
#include "polysum/mle_io.h"
#include "polysum/perf_model.h"
#include "polysum/permcheck.h"
#include "polysum/proof_io.h"
#include "polysum/schedule.h"
#include "polysum/sumcheck.h"
#include "polysum/witness.h"

namespace polysum::cli {

namespace {

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string KindName(GateKind k) {
  switch (k) {
    case GateKind::kSum: return "sum";
    case GateKind::kZeroCheck: return "zerocheck";
    case GateKind::kEqEmbedded: return "eq_embedded";
  }
  return "unknown";
}

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput:
    case ErrorCode::kParseError:
    case ErrorCode::kUnknownSymbol:
    case ErrorCode::kDuplicateInput:
    case ErrorCode::kDimensionMismatch:
      return kExitMalformed;
    case ErrorCode::kInfeasibleShape:
      return kExitInfeasible;
    case ErrorCode::kRootNotOne:
      return kExitRejected;
    default:
      return kExitError;
  }
}

std::vector<std::string> ParseGateList(const std::string& list) {
  if (list == "all") return builtin_gate_ids();
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    builtin_gate_info(item);  // validates
    out.push_back(item);
  }
  return out;
}

// Writes to `path`, or to `out` when the path is empty or "-".
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path);
}

struct HwOptions {
  std::string path;
  std::size_t pes = 0, ees = 0, pls = 0, bank = 0;
  double bandwidth = 0.0;

  void Add(CLI::App* cmd) {
    cmd->add_option("--hw", path, "Hardware config (JSON)");
    cmd->add_option("--pes", pes, "Override PE count");
    cmd->add_option("--ees", ees, "Override extension engines per PE");
    cmd->add_option("--pls", pls, "Override product lanes per PE");
    cmd->add_option("--bank", bank, "Override SRAM bank elements");
    cmd->add_option("--bandwidth", bandwidth, "Override bandwidth (GB/s)");
  }

  HwConfig Load() const {
    HwConfig cfg;
    if (path.empty()) {
      cfg.shape.num_pes = 8;
      cfg.shape.ees_per_pe = 3;
      cfg.shape.pls_per_pe = 6;
      cfg.sram_bank_elems = 8192;
    } else {
      cfg = load_hw_config(path);
    }
    if (pes) cfg.shape.num_pes = pes;
    if (ees) cfg.shape.ees_per_pe = ees;
    if (pls) cfg.shape.pls_per_pe = pls;
    if (bank) cfg.sram_bank_elems = bank;
    if (bandwidth > 0.0) cfg.bandwidth_gbps = bandwidth;
    validate_config(cfg);
    return cfg;
  }
};

struct WitnessOptions {
  std::string gate = "20";
  std::size_t mu = 12;
  std::uint64_t seed = 1;
  std::string witness_dir;

  void Add(CLI::App* cmd, bool need_mu) {
    cmd->add_option("--gate", gate, "Gate id (see `gates`)")->required();
    auto* m = cmd->add_option("--mu", mu, "Number of variables");
    if (need_mu) m->check(CLI::Range(1, 28));
    cmd->add_option("--seed", seed, "Synthetic witness seed");
    cmd->add_option("--witness", witness_dir,
                    "Directory of <input>.zmle tables instead of a seed");
  }

  Binding Tables(std::size_t num_vars) const {
    if (witness_dir.empty()) return generate_witness(gate, num_vars, seed);
    const CompositePoly p = proving_poly(gate);
    Binding b;
    for (std::size_t i : p.used_inputs()) {
      if (p.inputs[i].role == MleRole::kEq) continue;
      const std::string& id = p.inputs[i].id;
      b.emplace(id, read_mle_file(
                        (std::filesystem::path(witness_dir) / (id + ".zmle")).string()));
    }
    return b;
  }
};

VerifyOptions GateVerifyOptions(const BuiltinGate& info, const Binding* tables) {
  VerifyOptions o;
  o.mode = tables ? VerifyMode::kDirect : VerifyMode::kTrusting;
  o.tables = tables;
  if (info.kind != GateKind::kSum) o.expected_claim = Fr::zero();
  return o;
}

int CmdGates(const std::string& which, bool show_text, std::ostream& out) {
  out << "# schema: gates/1\n";
  out << "gate,family,kind,terms,degree,distinct_mles\n";
  for (const auto& id : ParseGateList(which)) {
    const BuiltinGate& info = builtin_gate_info(id);
    const CompositePoly p = proving_poly(id);
    out << id << ',' << info.family << ',' << KindName(info.kind) << ','
        << p.terms.size() << ',' << p.degree() << ',' << p.distinct_mles() << '\n';
    if (show_text) out << print_gate(p);
  }
  return kExitOk;
}

int CmdWitness(const WitnessOptions& w, const std::string& out_dir,
               std::ostream& out) {
  const Binding b = generate_witness(w.gate, w.mu, w.seed);
  std::filesystem::create_directories(out_dir);
  for (const auto& [id, mle] : b) {
    write_mle_file((std::filesystem::path(out_dir) / (id + ".zmle")).string(), mle);
  }
  out << "wrote " << b.size() << " tables to " << out_dir << '\n';
  return kExitOk;
}

int CmdProve(const WitnessOptions& w, const std::string& proof_path,
             std::ostream& out) {
  const CompositePoly p = proving_poly(w.gate);
  const Binding tables = w.Tables(w.mu);
  Transcript t;
  OpCounters ops;
  const SumcheckProof proof = prove(p, tables, {}, t, &ops);
  write_proof_file(proof_path, proof);
  out << "gate " << w.gate << " mu " << proof.num_vars << " degree " << proof.degree
      << " claim " << proof.claim.to_decimal() << " muls " << ops.total_muls()
      << " -> " << proof_path << '\n';
  return kExitOk;
}

int CmdVerify(const WitnessOptions& w, const std::string& proof_path,
              const std::string& mode, std::ostream& out, std::ostream& err) {
  const BuiltinGate& info = builtin_gate_info(w.gate);
  const CompositePoly p = proving_poly(w.gate);
  const SumcheckProof proof = read_proof_file(proof_path);
  Binding tables;
  const bool direct = mode == "direct";
  if (direct) tables = w.Tables(proof.num_vars);
  Transcript t;
  const VerifyResult r =
      verify(p, proof, t, GateVerifyOptions(info, direct ? &tables : nullptr));
  if (!r.accepted) {
    err << "rejected: " << r.reason << '\n';
    return kExitRejected;
  }
  out << "accepted\n";
  return kExitOk;
}

int CmdBench(const std::string& gates, std::size_t mu, std::uint64_t seed,
             const HwConfig& cfg, const Calibration& cal, const std::string& path,
             std::ostream& out) {
  std::ostringstream csv;
  csv << "# schema: bench/1\n";
  csv << "gate,degree,distinct_mles,terms,product_muls,coeff_muls,update_muls,"
         "eq_build_muls,total_muls,nodes,steps,modeled_cycles,runtime_s,"
         "utilization\n";
  for (const auto& id : ParseGateList(gates)) {
    const CompositePoly p = proving_poly(id);
    const Binding tables = generate_witness(id, mu, seed);
    Transcript t;
    OpCounters ops;
    prove(p, tables, {}, t, &ops);
    const PerfReport rep = model_sumcheck(p, mu, cfg, cal);
    csv << id << ',' << p.degree() << ',' << p.distinct_mles() << ','
        << p.terms.size() << ',' << ops.product_muls << ',' << ops.coeff_muls
        << ',' << ops.update_muls << ',' << ops.eq_build_muls << ','
        << ops.total_muls() << ',' << rep.nodes << ',' << rep.steps << ','
        << rep.total_cycles << ',' << Num(rep.runtime_s) << ','
        << Num(rep.utilization) << '\n';
  }
  Emit(path, csv.str(), out);
  return kExitOk;
}

int CmdSweep(std::size_t dmin, std::size_t dmax, std::size_t mu,
             const std::vector<double>& tiers, const HwConfig& cfg,
             const Calibration& cal, const std::string& path, std::ostream& out) {
  if (dmin < 2 || dmax < dmin) {
    throw Error(ErrorCode::kInvalidArgument, "need 2 <= dmin <= dmax");
  }
  std::vector<std::vector<PerfReport>> reps;
  std::vector<double> runtimes;
  for (std::size_t d = dmin; d <= dmax; ++d) {
    const CompositePoly p = zerocheck_poly(degree_sweep_gate(d));
    const Schedule s = build_schedule(p, cfg.shape);
    std::vector<PerfReport> row;
    row.push_back(model_sumcheck(p, s, mu, cfg, cal));
    for (double bw : tiers) {
      HwConfig c = cfg;
      c.bandwidth_gbps = bw;
      row.push_back(model_sumcheck(p, s, mu, c, cal));
    }
    runtimes.push_back(row[0].runtime_s);
    reps.push_back(std::move(row));
  }
  const std::vector<bool> jumps = runtime_jumps(runtimes);
  std::ostringstream csv;
  csv << "# schema: sweep/1\n";
  csv << "d,degree,nodes,node_increment,jump,runtime_s,utilization";
  for (double bw : tiers) csv << ",runtime_s_" << Num(bw) << "gbps";
  csv << '\n';
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const PerfReport& r = reps[i][0];
    const bool inc = i > 0 && r.nodes > reps[i - 1][0].nodes;
    csv << dmin + i << ',' << r.degree << ',' << r.nodes << ',' << (inc ? 1 : 0)
        << ',' << (jumps[i] ? 1 : 0) << ',' << Num(r.runtime_s) << ','
        << Num(r.utilization);
    for (std::size_t k = 0; k < tiers.size(); ++k) csv << ',' << Num(reps[i][k + 1].runtime_s);
    csv << '\n';
  }
  Emit(path, csv.str(), out);
  return kExitOk;
}

nlohmann::json ScheduleJson(const CompositePoly& p, const Schedule& s) {
  using nlohmann::json;
  auto ids = [&](const std::vector<std::size_t>& v) {
    json a = json::array();
    for (std::size_t i : v) a.push_back(p.inputs[i].id);
    return a;
  };
  json steps = json::array();
  for (const auto& st : s.steps) {
    steps.push_back({{"term", st.term},
                     {"factors", ids(st.factors)},
                     {"reads_tmp", st.reads_tmp},
                     {"writes_tmp", st.writes_tmp},
                     {"prefetch", ids(st.prefetch)}});
  }
  const LanePlan lp = build_lane_plan(s.degree + 1, s.shape.pls_per_pe);
  json cycles = json::array();
  for (const auto& c : lp.cycles) {
    json lanes = json::array();
    for (const auto& slot : c) lanes.push_back({slot.pair, slot.extension});
    cycles.push_back(lanes);
  }
  return {{"gate", p.name},
          {"ees_per_pe", s.shape.ees_per_pe},
          {"pls_per_pe", s.shape.pls_per_pe},
          {"scratch_buffers", s.shape.scratch_buffers},
          {"degree", s.degree},
          {"max_nodes", s.max_nodes()},
          {"term_nodes", s.term_nodes},
          {"tmp_buffers_used", s.tmp_buffers_used},
          {"uses_tmp", s.uses_tmp},
          {"register_spill", s.register_spill},
          {"policy", s.policy == PrefetchPolicy::kStrict ? "strict" : "balanced"},
          {"max_resident", s.max_resident},
          {"warmup", ids(s.warmup)},
          {"steps", steps},
          {"lane_plan",
           {{"k", lp.k},
            {"p", lp.p},
            {"cycles_per_pair", std::to_string(lp.ii_num) + "/" + std::to_string(lp.ii_den)},
            {"period_cycles", lp.period_cycles},
            {"period_pairs", lp.period_pairs},
            {"cycles", cycles}}}};
}

int CmdSchedule(const std::string& gate, const std::string& gate_file,
                const HwShape& shape, const std::string& policy,
                const std::string& path, std::ostream& out) {
  CompositePoly p;
  if (!gate_file.empty()) {
    std::ifstream f(gate_file);
    if (!f) throw Error(ErrorCode::kIo, "cannot read " + gate_file);
    std::stringstream ss;
    ss << f.rdbuf();
    p = parse_gate(ss.str());
  } else {
    p = proving_poly(gate);
  }
  Schedule s = build_schedule(p, shape);
  if (policy == "balanced") plan_prefetch(s, PrefetchPolicy::kBalanced);
  Emit(path, ScheduleJson(p, s).dump(2) + "\n", out);
  return kExitOk;
}

int CmdModel(const std::string& gate, std::size_t mu, const HwConfig& cfg,
             const Calibration& cal, const std::string& path, std::ostream& out) {
  const CompositePoly p = proving_poly(gate);
  const PerfReport rep = model_sumcheck(p, mu, cfg, cal);
  std::ostringstream csv;
  csv << "# schema: model/1\n";
  csv << "round,table_size,compute_cycles,dram_bytes,bw_cycles,fill_drain_cycles,"
         "total_cycles,bound,on_chip,product_muls,update_muls\n";
  for (std::size_t r = 0; r < rep.rounds.size(); ++r) {
    const RoundReport& rr = rep.rounds[r];
    csv << r + 1 << ',' << rr.table_size << ',' << rr.compute_cycles << ','
        << rr.dram_bytes << ',' << rr.bw_cycles << ',' << rr.fill_drain_cycles
        << ',' << rr.total_cycles << ',' << BoundName(rr.bound) << ','
        << (rr.on_chip ? 1 : 0) << ',' << rr.product_muls << ','
        << rr.update_muls << '\n';
  }
  csv << "total,," << "," << "," << "," << "," << rep.total_cycles << ",,,"
      << rep.product_muls() << ',' << rep.update_muls() << '\n';
  csv << "# runtime_s=" << Num(rep.runtime_s)
      << " utilization=" << Num(rep.utilization)
      << " modmul_units=" << rep.modmul_units << '\n';
  Emit(path, csv.str(), out);
  return kExitOk;
}

int CmdDse(const std::string& grid_path, const std::string& gates, double lambda,
           std::size_t mu, const Calibration& cal, bool pareto_only,
           const std::string& path, std::ostream& out) {
  const DseGrid grid = grid_path.empty() ? default_grid() : load_grid(grid_path);
  std::vector<DseGate> suite;
  for (const auto& id : ParseGateList(gates)) suite.push_back({id, proving_poly(id)});
  DseOptions opt;
  opt.lambda = lambda;
  opt.mu = mu;
  const DseResult res = run_dse(grid, suite, opt, cal);
  std::ostringstream csv;
  csv << "# schema: dse/1\n";
  csv << "bandwidth_gbps,rank,pes,ees,pls,bank_elems,area_mm2,mean_utilization,"
         "geomean_slowdown,geomean_runtime_s,objective,pareto_tier,pareto_global\n";
  for (const auto& tier : res.tiers) {
    for (std::size_t rank = 0; rank < tier.ranked.size(); ++rank) {
      const DesignResult& d = res.designs[tier.ranked[rank]];
      if (pareto_only && rank != 0 && !d.pareto_tier && !d.pareto_global) continue;
      csv << Num(tier.bandwidth_gbps) << ',' << rank + 1 << ','
          << d.cfg.shape.num_pes << ',' << d.cfg.shape.ees_per_pe << ','
          << d.cfg.shape.pls_per_pe << ',' << d.cfg.sram_bank_elems << ','
          << Num(d.area_mm2) << ',' << Num(d.mean_utilization) << ','
          << Num(d.geomean_slowdown) << ',' << Num(d.geomean_runtime_s) << ','
          << Num(d.objective) << ',' << (d.pareto_tier ? 1 : 0) << ','
          << (d.pareto_global ? 1 : 0) << '\n';
    }
  }
  Emit(path, csv.str(), out);
  if (!path.empty() && path != "-") {
    for (std::size_t t = 0; t < res.tiers.size(); ++t) {
      const DesignResult& b = res.best(t);
      out << Num(res.tiers[t].bandwidth_gbps) << " GB/s: PEs=" << b.cfg.shape.num_pes
          << " E=" << b.cfg.shape.ees_per_pe << " P=" << b.cfg.shape.pls_per_pe
          << " bank=" << b.cfg.sram_bank_elems << " area=" << Num(b.area_mm2)
          << " util=" << Num(b.mean_utilization)
          << " slowdown=" << Num(b.geomean_slowdown) << '\n';
    }
  }
  return kExitOk;
}

int CmdPermcheck(std::size_t k, std::size_t mu, std::uint64_t seed, bool tamper,
                 const std::string& instance_path, std::ostream& out,
                 std::ostream& err) {
  PermInstance inst;
  std::mt19937_64 rng(seed);
  if (!instance_path.empty()) {
    inst = read_perm_instance_file(instance_path);
  } else {
    inst = random_perm_instance(mu, k, rng);
  }
  if (tamper) {
    std::uniform_int_distribution<std::size_t> col(0, inst.k() - 1);
    std::uniform_int_distribution<std::size_t> row(0, (std::size_t{1} << inst.num_vars) - 1);
    inst.witnesses[col(rng)][row(rng)] += Fr(1);
  }
  Transcript tp;
  PermcheckProof proof;
  try {
    proof = permcheck_prove(inst, tp);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRootNotOne) throw;
    err << "rejected: " << e.what() << '\n';
    return kExitRejected;
  }
  Transcript tv;
  const VerifyResult r = permcheck_verify(inst, proof, tv);
  if (!r.accepted) {
    err << "rejected: " << r.reason << '\n';
    return kExitRejected;
  }
  out << "accepted k=" << inst.k() << " mu=" << inst.num_vars
      << " root=" << proof.root.to_decimal() << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"polysum: SumCheck prover, scheduler and accelerator model"};
  app.require_subcommand(1);
  std::string calibration_path;
  app.add_option("--calibration", calibration_path,
                 std::string("Calibration file (JSON); default $") + kCalibrationEnv);

  std::string gates_which = "all";
  bool gates_text = false;
  auto* gates = app.add_subcommand("gates", "List built-in gates");
  gates->add_option("--gates", gates_which, "Comma-separated ids or 'all'");
  gates->add_flag("--text", gates_text, "Print each gate definition");

  WitnessOptions wit_opt;
  std::string wit_out;
  auto* witness = app.add_subcommand("witness", "Write a synthetic witness");
  wit_opt.Add(witness, true);
  witness->add_option("--out", wit_out, "Output directory")->required();

  WitnessOptions prove_opt;
  std::string prove_out;
  auto* prove_cmd = app.add_subcommand("prove", "Prove a built-in gate");
  prove_opt.Add(prove_cmd, true);
  prove_cmd->add_option("--out", prove_out, "Proof file")->required();

  WitnessOptions verify_opt;
  std::string verify_proof, verify_mode = "direct";
  auto* verify_cmd = app.add_subcommand("verify", "Verify a proof");
  verify_opt.Add(verify_cmd, false);
  verify_cmd->add_option("--proof", verify_proof, "Proof file")->required();
  verify_cmd->add_option("--mode", verify_mode, "direct (re-evaluate tables) or trusting")
      ->check(CLI::IsMember({"direct", "trusting"}));

  std::string bench_gates = "all", bench_out;
  std::size_t bench_mu = 16;
  std::uint64_t bench_seed = 1;
  HwOptions bench_hw;
  auto* bench = app.add_subcommand("bench", "Functional op counts and modeled cost per gate");
  bench->add_option("--gates", bench_gates, "Comma-separated ids or 'all'");
  bench->add_option("--mu", bench_mu)->check(CLI::Range(1, 24));
  bench->add_option("--seed", bench_seed);
  bench->add_option("--out", bench_out, "CSV path (default stdout)");
  bench_hw.Add(bench);

  std::size_t sweep_min = 2, sweep_max = 30, sweep_mu = 20;
  std::vector<double> sweep_tiers = {64, 128, 256, 512, 1024, 2048, 4096};
  std::string sweep_out;
  HwOptions sweep_hw;
  auto* sweep = app.add_subcommand("sweep-degree", "Model the degree-sweep gate");
  sweep->add_option("--dmin", sweep_min);
  sweep->add_option("--dmax", sweep_max);
  sweep->add_option("--mu", sweep_mu)->check(CLI::Range(1, 40));
  sweep->add_option("--tiers", sweep_tiers, "Bandwidth tiers (GB/s)")->delimiter(',');
  sweep->add_option("--out", sweep_out, "CSV path (default stdout)");
  sweep_hw.Add(sweep);

  std::string sched_gate = "0", sched_file, sched_policy = "strict", sched_dump;
  HwShape sched_shape;
  sched_shape.ees_per_pe = 3;
  sched_shape.pls_per_pe = 3;
  auto* sched = app.add_subcommand("schedule", "Dump the step schedule and lane plan");
  sched->add_option("--gate", sched_gate, "Built-in gate id");
  sched->add_option("--gate-file", sched_file, "Gate definition file");
  sched->add_option("--ees", sched_shape.ees_per_pe);
  sched->add_option("--pls", sched_shape.pls_per_pe);
  sched->add_option("--scratch", sched_shape.scratch_buffers);
  sched->add_option("--policy", sched_policy)->check(CLI::IsMember({"strict", "balanced"}));
  sched->add_option("--dump", sched_dump, "JSON path (default stdout)");

  std::string model_gate = "20", model_out;
  std::size_t model_mu = 20;
  HwOptions model_hw;
  auto* model = app.add_subcommand("model", "Per-round performance model of one gate");
  model->add_option("--gate", model_gate);
  model->add_option("--mu", model_mu)->check(CLI::Range(1, 40));
  model->add_option("--out", model_out, "CSV path (default stdout)");
  model_hw.Add(model);

  std::string dse_grid, dse_gates = "all", dse_out;
  double dse_lambda = 0.8;
  std::size_t dse_mu = 20;
  bool dse_pareto = false;
  auto* dse = app.add_subcommand("dse", "Design-space exploration");
  dse->add_option("--grid", dse_grid, "Grid file (JSON); default full grid");
  dse->add_option("--gates", dse_gates, "Comma-separated ids or 'all'");
  dse->add_option("--lambda", dse_lambda)->check(CLI::Range(0.0, 1.0));
  dse->add_option("--mu", dse_mu)->check(CLI::Range(1, 40));
  dse->add_flag("--pareto-only", dse_pareto, "Only tier winners and Pareto designs");
  dse->add_option("--out", dse_out, "CSV path (default stdout)");

  std::size_t perm_k = 3, perm_mu = 10;
  std::uint64_t perm_seed = 1;
  bool perm_tamper = false;
  std::string perm_instance;
  auto* perm = app.add_subcommand("permcheck", "Prove and verify a permutation instance");
  perm->add_option("--k", perm_k)->check(CLI::Range(1, 8));
  perm->add_option("--mu", perm_mu)->check(CLI::Range(1, 24));
  perm->add_option("--seed", perm_seed);
  perm->add_option("--instance", perm_instance, "Instance file instead of a random one");
  perm->add_flag("--tamper", perm_tamper, "Alter one witness cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    const Calibration cal = calibration_path.empty() ? default_calibration()
                                                     : load_calibration(calibration_path);
    if (*gates) return CmdGates(gates_which, gates_text, out);
    if (*witness) return CmdWitness(wit_opt, wit_out, out);
    if (*prove_cmd) return CmdProve(prove_opt, prove_out, out);
    if (*verify_cmd) return CmdVerify(verify_opt, verify_proof, verify_mode, out, err);
    if (*bench) {
      return CmdBench(bench_gates, bench_mu, bench_seed, bench_hw.Load(), cal,
                      bench_out, out);
    }
    if (*sweep) {
      return CmdSweep(sweep_min, sweep_max, sweep_mu, sweep_tiers, sweep_hw.Load(),
                      cal, sweep_out, out);
    }
    if (*sched) {
      return CmdSchedule(sched_gate, sched_file, sched_shape, sched_policy,
                         sched_dump, out);
    }
    if (*model) return CmdModel(model_gate, model_mu, model_hw.Load(), cal, model_out, out);
    if (*dse) {
      return CmdDse(dse_grid, dse_gates, dse_lambda, dse_mu, cal, dse_pareto,
                    dse_out, out);
    }
    if (*perm) {
      return CmdPermcheck(perm_k, perm_mu, perm_seed, perm_tamper, perm_instance,
                          out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace polysum::cli
