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

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qig/generate.hpp"
#include "qig/io.hpp"

namespace qig {

enum class Suite {
  bounds,
  concavity,
  classical_equality,
  schur_classical,
  schur_uc,
  dilation,
  all,
};

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::bounds: return "bounds";
    case Suite::concavity: return "concavity";
    case Suite::classical_equality: return "classical-equality";
    case Suite::schur_classical: return "schur-classical";
    case Suite::schur_uc: return "schur-uc";
    case Suite::dilation: return "dilation";
    case Suite::all: return "all";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::bounds, Suite::concavity, Suite::classical_equality,
                  Suite::schur_classical, Suite::schur_uc, Suite::dilation, Suite::all})
    if (name == suite_name(s)) return s;
  return std::nullopt;
}

struct SuiteConfig {
  Suite suite = Suite::all;
  std::vector<int> dims{2, 3, 4};
  int n_instances = 200;
  std::pair<int, int> n_states{2, 4};
  std::pair<int, int> n_kraus{2, 6};
  std::pair<int, int> n_groups{1, 6};
  int n_samples = 512;  // covariant-measurement sample count
  std::uint64_t seed = 0;
  std::optional<double> tolerance;  // replaces every per-check default when set
};

inline void validate(const SuiteConfig& cfg) {
  if (cfg.dims.empty()) throw invariant_error("suite config: dims is empty");
  for (int d : cfg.dims)
    if (d < 2 || d > 8)
      throw invariant_error("suite config: dimension " + std::to_string(d) +
                            " outside [2, 8]");
  if (cfg.n_instances < 1)
    throw invariant_error("suite config: n_instances must be >= 1");
  for (auto [lo, hi] : {cfg.n_states, cfg.n_kraus, cfg.n_groups})
    if (lo < 1 || hi < lo)
      throw invariant_error("suite config: ranges must satisfy 1 <= lo <= hi");
  if (cfg.n_samples < 4)
    throw invariant_error("suite config: n_samples must be >= 4");
  if (cfg.tolerance && *cfg.tolerance <= 0.0)
    throw invariant_error("suite config: tolerance must be positive");
}

/// One named pass/fail line: every check is "value >= -tolerance", so a
/// worst value above -tolerance means the whole column passed.
struct CheckStat {
  std::string name;
  double tolerance = 0.0;
  long checked = 0;
  long failed = 0;
  double worst = std::numeric_limits<double>::infinity();

  void record(double value, double tol) {
    ++checked;
    tolerance = std::min(tolerance, tol);
    if (value < worst) worst = value;
    if (value < -tol) ++failed;
  }
};

struct SuiteResult {
  Suite suite = Suite::all;
  bool pass = true;
  std::vector<CheckStat> checks;
  json rows = json::array();
  std::string csv;
  double wall_seconds = 0.0;

  std::string summary() const {
    std::ostringstream out;
    out << "suite " << suite_name(suite) << ": " << (pass ? "PASS" : "FAIL") << "  ("
        << rows.size() << " rows, " << wall_seconds << " s)\n";
    for (const auto& c : checks) {
      char line[160];
      std::snprintf(line, sizeof(line), "  %-34s %6ld checked  %4ld failed  worst %+.3e (tol %.1e)\n",
                    c.name.c_str(), c.checked, c.failed, c.worst, c.tolerance);
      out << line;
    }
    return out.str();
  }
};

namespace detail {

class CheckSet {
 public:
  void record(const std::string& name, double value, double tolerance) {
    for (auto& c : checks_)
      if (c.name == name) {
        c.record(value, tolerance);
        return;
      }
    checks_.push_back(CheckStat{name, tolerance});
    checks_.back().record(value, tolerance);
  }

  bool all_passed() const {
    for (const auto& c : checks_)
      if (c.failed > 0) return false;
    return true;
  }

  std::vector<CheckStat> take() { return std::move(checks_); }

 private:
  std::vector<CheckStat> checks_;
};

inline int draw_in_range(std::pair<int, int> range, Rng& rng) {
  return range.first + rng.uniform_int(range.second - range.first + 1);
}

inline const char* quantity_name(SchurQuantity q) {
  return q == SchurQuantity::entropy_reduction ? "entropy-reduction"
                                               : "pure-ensemble-mutual-info";
}

inline constexpr const char* kProbeCsvHeader =
    "probe_id,dim,generator,quantity,embedding,pairs,violations,worst_violation,"
    "tolerance";

inline std::string probe_csv_row(long id, int dim, const std::string& generator,
                                 const SchurProbeReport& r, const char* embedding) {
  std::ostringstream row;
  row << id << ',' << dim << ',' << generator << ',' << quantity_name(r.quantity) << ','
      << embedding << ',' << r.pairs_tested << ',' << r.violations << ','
      << format_double(r.worst_violation) << ',' << format_double(r.tolerance_used);
  return row.str();
}

inline constexpr const char* kDilationCsvHeader =
    "instance_id,kind,dim_a,dim_b,chi_q,chi_qm,mutual_info,sum_pj_chi_j,"
    "identity_residual,slack,chi_before,chi_after";

// Per-instance parameters of the bounds corpus. The grouping kind cycles
// so fully merged records, efficient singletons, random groupings, and
// rank-1 complete measurements all appear.
inline RandomInstanceParams bounds_params(const SuiteConfig& cfg, long t, Rng& rng) {
  RandomInstanceParams p;
  p.dim = cfg.dims[static_cast<std::size_t>(t) % cfg.dims.size()];
  p.n_states = draw_in_range(cfg.n_states, rng);
  p.n_kraus = draw_in_range(cfg.n_kraus, rng);
  const int g_lo = std::clamp(cfg.n_groups.first, 1, p.n_kraus);
  const int g_hi = std::clamp(cfg.n_groups.second, g_lo, p.n_kraus);
  switch (t % 5) {
    case 0: p.n_groups = g_lo; break;                                   // merged
    case 1: p.n_groups = g_hi; break;                                   // singleton-ish
    case 4:
      p.rank_one = true;
      p.n_kraus = std::max(p.n_kraus, p.dim);
      p.n_groups = p.n_kraus;  // rank-1 efficient
      break;
    default: p.n_groups = g_lo + rng.uniform_int(g_hi - g_lo + 1); break;
  }
  return p;
}

inline json bound_row_json(long t, const RandomInstanceParams& p, const Instance& inst,
                           const BoundReport& r) {
  return {{"instance_id", t},
          {"dim", p.dim},
          {"n_states", inst.ensemble.size()},
          {"n_kraus", inst.measurement.operator_count()},
          {"n_groups", inst.measurement.group_count()},
          {"efficient", inst.measurement.efficient()},
          {"rank_one", p.rank_one},
          {"report", to_json(r)}};
}

inline SuiteResult run_bounds(const SuiteConfig& cfg, std::uint64_t master, double tol) {
  SuiteResult res;
  res.suite = Suite::bounds;
  CheckSet checks;
  std::ostringstream csv;
  csv << kBoundReportCsvHeader << '\n';
  for (long t = 0; t < cfg.n_instances; ++t) {
    Rng rng = Rng::stream(master, static_cast<std::uint64_t>(t));
    const RandomInstanceParams p = bounds_params(cfg, t, rng);
    const Instance inst = generate_random_instance(p, rng);
    const BoundReport r = bound_report(inst.ensemble, inst.measurement);

    checks.record("gap_holevo", r.gap_holevo, tol);
    checks.record("gap_sww_theorem1", r.gap_sww_theorem1, tol);
    checks.record("gap_gen_hall", r.gap_gen_hall, tol);
    checks.record("gap_sww_fine", r.gap_sww_fine, tol);
    checks.record("tightening_order", r.gap_holevo - r.gap_sww_theorem1, tol);
    if (inst.measurement.efficient()) {
      checks.record("hall_efficient", r.avg_entropy_reduction - r.mutual_info, tol);
      checks.record("ozawa_efficient", r.avg_entropy_reduction, tol);
    }
    if (p.rank_one) {
      double max_chi_j = 0.0;
      for (double c : r.chi_j) max_chi_j = std::max(max_chi_j, std::abs(c));
      checks.record("rank1_chi_j_zero", -max_chi_j, tol);
      checks.record("rank1_sww_equals_holevo",
                    -std::abs(r.gap_sww_theorem1 - r.gap_holevo), tol);
    }

    res.rows.push_back(bound_row_json(t, p, inst, r));
    csv << bound_report_csv_row(t, p.dim, inst.ensemble.size(),
                                inst.measurement.group_count(),
                                inst.measurement.efficient(), r)
        << '\n';
  }
  res.checks = checks.take();
  res.pass = true;
  for (const auto& c : res.checks) res.pass = res.pass && c.failed == 0;
  res.csv = csv.str();
  return res;
}

inline SuiteResult run_concavity(const SuiteConfig& cfg, std::uint64_t master, double tol) {
  SuiteResult res;
  res.suite = Suite::concavity;
  CheckSet checks;
  std::ostringstream csv;
  csv << kBoundReportCsvHeader << '\n';
  for (long t = 0; t < cfg.n_instances; ++t) {
    Rng rng = Rng::stream(master, static_cast<std::uint64_t>(t));
    RandomInstanceParams p = bounds_params(cfg, t, rng);
    p.rank_one = false;  // decompositions over full-rank states
    const Instance inst = generate_random_instance(p, rng);
    const BoundReport r = bound_report(inst.ensemble, inst.measurement);
    // <ΔS(Σ P_i ρ_i)> - Σ P_i <ΔS(ρ_i)> = gen-Hall gap + M.
    checks.record("entropy_reduction_concavity", r.gap_gen_hall + r.mutual_info, tol);
    res.rows.push_back(bound_row_json(t, p, inst, r));
    csv << bound_report_csv_row(t, p.dim, inst.ensemble.size(),
                                inst.measurement.group_count(),
                                inst.measurement.efficient(), r)
        << '\n';
  }
  res.checks = checks.take();
  res.pass = true;
  for (const auto& c : res.checks) res.pass = res.pass && c.failed == 0;
  res.csv = csv.str();
  return res;
}

inline SuiteResult run_classical_equality(const SuiteConfig& cfg, std::uint64_t master,
                                          double tol) {
  SuiteResult res;
  res.suite = Suite::classical_equality;
  CheckSet checks;
  std::ostringstream csv;
  csv << kBoundReportCsvHeader << '\n';
  for (long t = 0; t < cfg.n_instances; ++t) {
    Rng rng = Rng::stream(master, static_cast<std::uint64_t>(t));
    const int n_in = cfg.dims[static_cast<std::size_t>(t) % cfg.dims.size()];
    const int n_out = 2 + rng.uniform_int(5);
    const Instance inst = generate_classical_instance(random_prob_vector(n_in, rng),
                                                      random_kernel(n_in, n_out, rng));
    const BoundReport r = bound_report(inst.ensemble, inst.measurement);
    checks.record("classical_identity",
                  -std::abs(r.mutual_info - r.avg_entropy_reduction), tol);
    RandomInstanceParams p;
    p.dim = n_in;
    res.rows.push_back(bound_row_json(t, p, inst, r));
    csv << bound_report_csv_row(t, n_in, inst.ensemble.size(),
                                inst.measurement.group_count(),
                                inst.measurement.efficient(), r)
        << '\n';
  }
  res.checks = checks.take();
  res.pass = true;
  for (const auto& c : res.checks) res.pass = res.pass && c.failed == 0;
  res.csv = csv.str();
  return res;
}

inline SuiteResult run_schur_classical(const SuiteConfig& cfg, std::uint64_t master,
                                       double tol) {
  SuiteResult res;
  res.suite = Suite::schur_classical;
  CheckSet checks;
  std::ostringstream csv;
  csv << kProbeCsvHeader << '\n';
  long probe_id = 0;
  for (int d : cfg.dims) {
    if (d > 5) continue;  // factorially many operators beyond this
    for (int k = 0; k < 2; ++k) {
      Rng rng = Rng::stream(master, static_cast<std::uint64_t>(probe_id));
      const ProbVector kernel = random_prob_vector(d, rng);
      const GroupedMeasurement meas = symmetric_classical_measurement(kernel, d);
      const std::string generator = "kernel" + std::to_string(k);
      for (SchurQuantity q :
           {SchurQuantity::entropy_reduction, SchurQuantity::pure_ensemble_mutual_info}) {
        const SchurProbeReport r = schur_probe(meas, q, SpectrumEmbedding::diagonal,
                                               cfg.n_instances, tol, rng);
        checks.record("schur_classical", r.worst_violation, tol);
        json row = to_json(r);
        row["probe_id"] = probe_id;
        row["dim"] = d;
        row["generator"] = generator;
        row["embedding"] = "diagonal";
        res.rows.push_back(std::move(row));
        csv << probe_csv_row(probe_id, d, generator, r, "diagonal") << '\n';
        ++probe_id;
      }
    }
  }
  res.checks = checks.take();
  res.pass = true;
  for (const auto& c : res.checks) res.pass = res.pass && c.failed == 0;
  res.csv = csv.str();
  return res;
}

inline cmat mixed_uc_seed(int d) {
  cmat seed = cmat::Zero(d, d);
  for (int i = 0; i < d; ++i) seed(i, i) = 1.0 / static_cast<double>(1 << i);
  return seed;
}

inline SuiteResult run_schur_uc(const SuiteConfig& cfg, std::uint64_t master,
                                std::optional<double> tol_override) {
  SuiteResult res;
  res.suite = Suite::schur_uc;
  CheckSet checks;
  std::ostringstream csv;
  csv << kProbeCsvHeader << '\n';
  long probe_id = 0;
  for (int d : cfg.dims) {
    if (d != 2 && d != 3) continue;  // probe tolerances are calibrated at d = 2, 3
    for (int seed_kind = 0; seed_kind < 2; ++seed_kind) {
      Rng rng = Rng::stream(master, static_cast<std::uint64_t>(probe_id));
      const bool rank1 = seed_kind == 0;
      const cmat seed_op = rank1 ? basis_projector_seed(d) : mixed_uc_seed(d);
      const GroupedMeasurement meas = uc_measurement_approx(seed_op, cfg.n_samples, rng);
      const std::string generator = rank1 ? "seed-rank1" : "seed-mixed";

      double ds_tol = rank1 ? kUcTolEntropyRank1
                            : (d == 2 ? kUcTolEntropyMixedD2 : kUcTolEntropyMixedD3);
      double mi_tol = d == 2 ? kUcTolMutualInfoD2 : kUcTolMutualInfoD3;
      if (tol_override) ds_tol = mi_tol = *tol_override;

      const std::string label = "[d=" + std::to_string(d) + "," + generator + "]";
      for (SchurQuantity q :
           {SchurQuantity::entropy_reduction, SchurQuantity::pure_ensemble_mutual_info}) {
        const double tol = q == SchurQuantity::entropy_reduction ? ds_tol : mi_tol;
        const SchurProbeReport r = schur_probe(meas, q, SpectrumEmbedding::haar_basis,
                                               cfg.n_instances, tol, rng);
        checks.record((q == SchurQuantity::entropy_reduction ? "schur_uc_entropy"
                                                             : "schur_uc_mutual_info") +
                          label,
                      r.worst_violation, tol);
        json row = to_json(r);
        row["probe_id"] = probe_id;
        row["dim"] = d;
        row["generator"] = generator;
        row["embedding"] = "haar-basis";
        res.rows.push_back(std::move(row));
        csv << probe_csv_row(probe_id, d, generator, r, "haar-basis") << '\n';
        ++probe_id;
      }

      // Covariance regression: rotation drift stays inside the frozen
      // thresholds (Lemma-1 style invariance at finite sample count).
      const UcDrift drift = uc_rotation_drift(meas, 20, 5, rng);
      checks.record("uc_drift_entropy" + label, -drift.entropy_reduction, ds_tol);
      checks.record("uc_drift_mutual_info" + label, -drift.mutual_info, mi_tol);
      res.rows.push_back(json{{"probe_id", probe_id},
                              {"dim", d},
                              {"generator", generator},
                              {"drift_entropy_reduction", drift.entropy_reduction},
                              {"drift_mutual_info", drift.mutual_info},
                              {"tolerance_entropy", ds_tol},
                              {"tolerance_mutual_info", mi_tol}});
      ++probe_id;
    }
  }
  res.checks = checks.take();
  res.pass = true;
  for (const auto& c : res.checks) res.pass = res.pass && c.failed == 0;
  res.csv = csv.str();
  return res;
}

inline SuiteResult run_dilation(const SuiteConfig& cfg, std::uint64_t master, double tol) {
  SuiteResult res;
  res.suite = Suite::dilation;
  CheckSet checks;
  std::ostringstream csv;
  csv << kDilationCsvHeader << '\n';
  const double identity_tol = cfg.tolerance ? *cfg.tolerance : tol::identity_check;
  const double isometry_tol = cfg.tolerance ? *cfg.tolerance : tol::completeness;
  for (long t = 0; t < cfg.n_instances; ++t) {
    Rng rng = Rng::stream(master, static_cast<std::uint64_t>(t));
    if (t % 2 == 0) {
      // Certificate on a random inefficient instance, d <= 3.
      RandomInstanceParams p;
      p.dim = std::min(cfg.dims[static_cast<std::size_t>(t) % cfg.dims.size()], 3);
      p.n_states = draw_in_range(cfg.n_states, rng);
      p.n_kraus = std::max(3, draw_in_range(cfg.n_kraus, rng));
      p.n_groups = 2 + rng.uniform_int(p.n_kraus - 2);  // always < n_kraus
      const Instance inst = generate_random_instance(p, rng);
      const TheoremOneCertificate cert = theorem1_trace(inst.ensemble, inst.measurement);
      const cmat v = dilate(inst.measurement);
      const double iso_res =
          (v.adjoint() * v - cmat::Identity(p.dim, p.dim)).cwiseAbs().maxCoeff();

      checks.record("theorem1_identity", -std::abs(cert.identity_residual()),
                    identity_tol);
      checks.record("theorem1_slack", cert.slack(), tol);
      checks.record("dilate_isometry", -iso_res, isometry_tol);

      json row = to_json(cert);
      row["instance_id"] = t;
      row["kind"] = "certificate";
      row["dim"] = p.dim;
      row["isometry_residual"] = iso_res;
      res.rows.push_back(std::move(row));
      csv << t << ",certificate," << p.dim << ",," << format_double(cert.chi_q) << ','
          << format_double(cert.chi_qm) << ',' << format_double(cert.mutual_info) << ','
          << format_double(cert.sum_pj_chi_j) << ','
          << format_double(cert.identity_residual()) << ','
          << format_double(cert.slack()) << ",,\n";
    } else {
      const int db = (t / 2) % 2 == 0 ? 2 : 3;
      const int n_states = draw_in_range(cfg.n_states, rng);
      const JointEnsemble je = generate_joint_ensemble(2, db, n_states, rng);
      const int traced = (t / 4) % 2;
      const auto [before, after] = chi_partial_trace_check(je, traced);
      checks.record("chi_partial_trace_monotone", before - after, tol);
      res.rows.push_back(json{{"instance_id", t},
                              {"kind", "chi-monotonicity"},
                              {"dims", {2, db}},
                              {"traced_subsystem", traced},
                              {"chi_before", before},
                              {"chi_after", after}});
      csv << t << ",chi-monotonicity,2," << db << ",,,,,,," << format_double(before)
          << ',' << format_double(after) << '\n';
    }
  }
  res.checks = checks.take();
  res.pass = true;
  for (const auto& c : res.checks) res.pass = res.pass && c.failed == 0;
  res.csv = csv.str();
  return res;
}

}  // namespace detail

/// Run one verification suite (or all of them) from a config. The result
/// is a pure function of the config: identical configs give identical
/// rows, CSV bytes, and pass/fail outcomes.
inline SuiteResult run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult res;

  const auto dispatch = [&cfg](Suite s, std::uint64_t master) -> SuiteResult {
    const double gap_tol = cfg.tolerance ? *cfg.tolerance : tol::gap;
    switch (s) {
      case Suite::bounds: return detail::run_bounds(cfg, master, gap_tol);
      case Suite::concavity: return detail::run_concavity(cfg, master, gap_tol);
      case Suite::classical_equality:
        return detail::run_classical_equality(
            cfg, master, cfg.tolerance ? *cfg.tolerance : tol::classical_equality);
      case Suite::schur_classical: return detail::run_schur_classical(cfg, master, gap_tol);
      case Suite::schur_uc: return detail::run_schur_uc(cfg, master, cfg.tolerance);
      case Suite::dilation: return detail::run_dilation(cfg, master, gap_tol);
      case Suite::all: break;
    }
    throw invariant_error("run_suite: unreachable dispatch");
  };

  if (cfg.suite != Suite::all) {
    res = dispatch(cfg.suite, cfg.seed);
  } else {
    res.suite = Suite::all;
    std::ostringstream csv;
    std::uint64_t ordinal = 0;
    for (Suite s : {Suite::bounds, Suite::concavity, Suite::classical_equality,
                    Suite::schur_classical, Suite::schur_uc, Suite::dilation}) {
      SuiteResult sub = dispatch(s, derive_seed(cfg.seed, ordinal++));
      csv << "# suite: " << suite_name(s) << '\n' << sub.csv;
      for (auto& c : sub.checks) {
        c.name = std::string(suite_name(s)) + "/" + c.name;
        res.checks.push_back(std::move(c));
      }
      res.rows.push_back(json{{"suite", suite_name(s)}, {"rows", std::move(sub.rows)}});
      res.pass = res.pass && sub.pass;
    }
    res.csv = csv.str();
  }

  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

/// Full JSON report for an entire run. Wall time is intentionally not
/// serialized so that identical configs produce identical files.
inline json suite_result_json(const SuiteConfig& cfg, const SuiteResult& res) {
  json checks = json::array();
  for (const auto& c : res.checks)
    checks.push_back(json{{"name", c.name},
                          {"tolerance", c.tolerance},
                          {"checked", c.checked},
                          {"failed", c.failed},
                          {"worst", c.worst}});
  return {{"suite", suite_name(res.suite)},
          {"seed", cfg.seed},
          {"instances", cfg.n_instances},
          {"pass", res.pass},
          {"checks", std::move(checks)},
          {"rows", res.rows}};
}

}  // namespace qig
