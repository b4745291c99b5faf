// Copyright 2026 The qig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qig/qig.hpp"

namespace {

using namespace qig;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) {
    const int v = std::stoi(parts[0]);
    return {v, v};
  }
  if (parts.size() == 2) return {std::stoi(parts[0]), std::stoi(parts[1])};
  throw invariant_error("range must be N or LO:HI, got \"" + s + "\"");
}

ProbVector parse_probs(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stod(tok));
  return ProbVector(std::move(out));
}

// Kernel syntax: "bsc:FLIP" or explicit rows "0.9,0.1;0.2,0.8".
std::vector<std::vector<double>> parse_kernel(const std::string& s) {
  if (s.rfind("bsc:", 0) == 0) return bsc_kernel(std::stod(s.substr(4)));
  std::vector<std::vector<double>> rows;
  for (const auto& row : split(s, ';')) {
    rows.push_back({});
    for (const auto& tok : split(row, ',')) rows.back().push_back(std::stod(tok));
  }
  return rows;
}

void print_report(const std::string& source, const Instance& inst, const BoundReport& r) {
  std::printf("instance: %s\n", source.c_str());
  std::printf("  dim %d, %zu states, %zu groups (%zu operators), %s\n",
              inst.ensemble.dim(), inst.ensemble.size(),
              inst.measurement.group_count(), inst.measurement.operator_count(),
              inst.measurement.efficient() ? "efficient" : "inefficient");
  std::printf("  M                 = %.12f bits\n", r.mutual_info);
  std::printf("  chi               = %.12f bits\n", r.chi);
  for (std::size_t j = 0; j < r.chi_j.size(); ++j)
    std::printf("  chi_j[%zu]          = %.12f bits\n", j, r.chi_j[j]);
  std::printf("  sum_j P(j) chi_j  = %.12f bits\n", r.sum_pj_chi_j);
  std::printf("  <dS>              = %.12f bits\n", r.avg_entropy_reduction);
  std::printf("  gap holevo        = %+.3e\n", r.gap_holevo);
  std::printf("  gap sww_theorem1  = %+.3e\n", r.gap_sww_theorem1);
  std::printf("  gap gen_hall      = %+.3e\n", r.gap_gen_hall);
  std::printf("  gap sww_fine      = %+.3e\n", r.gap_sww_fine);
  if (r.ozawa_nonneg.has_value())
    std::printf("  ozawa <dS> >= 0   : %s\n", *r.ozawa_nonneg ? "yes" : "VIOLATED");
}

int cmd_compute(const std::string& file, const std::string& out,
                const std::string& format) {
  const Instance inst = load_instance(file);
  const BoundReport r = bound_report(inst.ensemble, inst.measurement);
  print_report(file, inst, r);
  if (!out.empty()) {
    if (format == "csv") {
      std::string csv = std::string(kBoundReportCsvHeader) + "\n" +
                        bound_report_csv_row(0, inst.ensemble.dim(),
                                             inst.ensemble.size(),
                                             inst.measurement.group_count(),
                                             inst.measurement.efficient(), r) +
                        "\n";
      write_text_file(out, csv);
    } else {
      write_text_file(out, to_json(r).dump(2) + "\n");
    }
    std::printf("report written to %s\n", out.c_str());
  }
  return kExitPass;
}

struct GenerateOptions {
  std::string kind;
  int dim = 2;
  int n_states = 2;
  int n_kraus = 2;
  int n_groups = 1;
  int n_samples = 512;
  std::uint64_t seed = 0;
  std::string prior;
  std::string kernel;
  std::string out;
};

int cmd_generate(const GenerateOptions& opt) {
  Rng rng(opt.seed);
  std::optional<Instance> inst;
  if (opt.kind == "random") {
    inst = generate_random_instance(
        {opt.dim, opt.n_states, opt.n_kraus, opt.n_groups, false}, rng);
  } else if (opt.kind == "classical") {
    if (opt.prior.empty() || opt.kernel.empty())
      throw invariant_error("generate classical requires --prior and --kernel");
    inst = generate_classical_instance(parse_probs(opt.prior), parse_kernel(opt.kernel));
  } else if (opt.kind == "symmetric-classical") {
    if (opt.kernel.empty())
      throw invariant_error("generate symmetric-classical requires --kernel");
    inst = generate_symmetric_classical_instance(parse_probs(opt.kernel), rng);
  } else if (opt.kind == "uc-approx") {
    inst = generate_uc_instance(opt.dim, opt.n_samples, rng);
  } else {
    throw invariant_error("unknown generate kind \"" + opt.kind +
                          "\" (expected random, classical, symmetric-classical, uc-approx)");
  }
  const json j = instance_to_json(*inst);
  if (opt.out.empty()) {
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    write_text_file(opt.out, j.dump(2) + "\n");
    std::printf("instance written to %s\n", opt.out.c_str());
  }
  return kExitPass;
}

struct RunOptions {
  std::string suite;
  std::string dims;
  int instances = 200;
  std::string states, kraus, groups;
  int samples = 512;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool tol_set = false;
  std::string out;
  std::string format = "csv";
};

int cmd_run(const RunOptions& opt) {
  const auto suite = parse_suite(opt.suite);
  if (!suite)
    throw invariant_error("unknown suite \"" + opt.suite +
                          "\" (expected bounds, concavity, classical-equality, "
                          "schur-classical, schur-uc, dilation, all)");
  SuiteConfig cfg;
  cfg.suite = *suite;
  if (!opt.dims.empty()) cfg.dims = parse_int_list(opt.dims);
  cfg.n_instances = opt.instances;
  if (!opt.states.empty()) cfg.n_states = parse_range(opt.states);
  if (!opt.kraus.empty()) cfg.n_kraus = parse_range(opt.kraus);
  if (!opt.groups.empty()) cfg.n_groups = parse_range(opt.groups);
  cfg.n_samples = opt.samples;
  cfg.seed = opt.seed;
  if (opt.tol_set) cfg.tolerance = opt.tol;

  const SuiteResult res = run_suite(cfg);
  std::printf("%s", res.summary().c_str());
  if (!opt.out.empty()) {
    if (opt.format == "json")
      write_text_file(opt.out, suite_result_json(cfg, res).dump(2) + "\n");
    else
      write_text_file(opt.out, res.csv);
    std::printf("rows written to %s\n", opt.out.c_str());
  }
  return res.pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qig: information bounds and entropy-reduction certificates for grouped "
      "quantum measurements"};
  app.require_subcommand(1);

  std::string compute_file, compute_out, compute_format = "json";
  auto* compute = app.add_subcommand("compute", "evaluate one instance file");
  compute->add_option("file", compute_file, "instance JSON file")->required();
  compute->add_option("--out", compute_out, "write the full report here");
  compute->add_option("--format", compute_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "write a new instance file");
  generate->add_option("kind", gen.kind,
                       "random | classical | symmetric-classical | uc-approx")
      ->required();
  generate->add_option("--dim", gen.dim, "system dimension");
  generate->add_option("--states", gen.n_states, "ensemble size");
  generate->add_option("--kraus", gen.n_kraus, "operator count");
  generate->add_option("--groups", gen.n_groups, "observed group count");
  generate->add_option("--samples", gen.n_samples, "Haar samples for uc-approx");
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--prior", gen.prior, "comma list, e.g. 0.5,0.5");
  generate->add_option("--kernel", gen.kernel,
                       "bsc:FLIP, rows 0.9,0.1;0.2,0.8, or a comma list for "
                       "symmetric-classical");
  generate->add_option("--out", gen.out, "output path (stdout when omitted)");

  RunOptions run;
  auto* runcmd = app.add_subcommand("run", "run a verification suite");
  runcmd->add_option("suite", run.suite, "bounds | concavity | classical-equality | "
                                         "schur-classical | schur-uc | dilation | all")
      ->required();
  runcmd->add_option("--dim", run.dims, "comma list of dimensions, e.g. 2,3,4");
  runcmd->add_option("--instances", run.instances, "instances (or pairs) per check");
  runcmd->add_option("--states", run.states, "ensemble-size range LO:HI");
  runcmd->add_option("--kraus", run.kraus, "operator-count range LO:HI");
  runcmd->add_option("--groups", run.groups, "group-count range LO:HI");
  runcmd->add_option("--samples", run.samples, "Haar samples for covariant probes");
  runcmd->add_option("--seed", run.seed, "master seed");
  runcmd->add_option("--tol", run.tol, "tolerance override, bits")
      ->each([&run](const std::string&) { run.tol_set = true; });
  runcmd->add_option("--out", run.out, "write rows here");
  runcmd->add_option("--format", run.format, "csv|json")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_file, compute_out, compute_format);
    if (generate->parsed()) return cmd_generate(gen);
    return cmd_run(run);
  } catch (const io_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIo;
  } catch (const qig::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
