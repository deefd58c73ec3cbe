// Copyright 2026 The optocsd Authors
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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "optocsd/circuit.hpp"
#include "optocsd/cost.hpp"
#include "optocsd/csd.hpp"
#include "optocsd/decompose.hpp"
#include "optocsd/error.hpp"
#include "optocsd/matrix.hpp"
#include "optocsd/matrix_io.hpp"
#include "optocsd/serialize.hpp"

namespace optocsd::cli {
namespace {

struct Config {
  std::string input_path;
  std::string output_path;
  std::string circuit_path;
  std::size_t n_s = 0;
  std::size_t n_p = 0;
  std::size_t dim = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  bool stage1_only = false;
  bool json = false;
};

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_error(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

int cmd_random(const Config& cfg, std::ostream& out) {
  const ComplexMatrix u = haar_random_unitary(cfg.dim, cfg.seed);
  save_matrix(cfg.output_path, u);
  out << "dim=" << cfg.dim << " seed=" << cfg.seed << '\n';
  return kOk;
}

int cmd_decompose(const Config& cfg, std::ostream& out, std::ostream& err) {
  const ComplexMatrix u = load_matrix(cfg.input_path);
  const ModeSpace space{cfg.n_s, cfg.n_p};
  Circuit c = cfg.stage1_only ? decompose_stage1(u, space, cfg.tolerance)
                              : decompose(u, space, cfg.tolerance);
  save_circuit(cfg.output_path, c);

  std::size_t bs = 0, internal = 0, phase = 0, cs = 0;
  for (const CircuitElement& e : c.elements) {
    bs += std::holds_alternative<Beamsplitter>(e);
    internal += std::holds_alternative<InternalOp>(e);
    phase += std::holds_alternative<PhaseBlock>(e);
    cs += std::holds_alternative<CSBlock>(e);
  }
  if (cfg.stage1_only) {
    out << "internal=" << internal << " cs_blocks=" << cs << '\n';
  } else {
    out << "beamsplitters=" << bs << " internal=" << internal << " phase_blocks=" << phase
        << '\n';
  }
  const double error = max_abs_diff(reconstruct(c), u);
  out << "reconstruction_error=" << fmt_error(error) << '\n';
  if (error > cfg.tolerance) {
    err << "reconstruction error " << fmt_error(error) << " exceeds tolerance "
        << fmt_error(cfg.tolerance) << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Circuit c = load_circuit(cfg.circuit_path);
  const ComplexMatrix u = load_matrix(cfg.input_path);
  if (!u.square() || u.rows() != c.space.dim()) {
    throw DimensionError("matrix " + u.shape() + " does not match circuit dimension " +
                         std::to_string(c.space.dim()));
  }
  const double error = max_abs_diff(reconstruct(c), u);
  out << "reconstruction_error=" << fmt_error(error) << '\n';
  if (error > cfg.tolerance) {
    err << "verification failed: error " << fmt_error(error) << " > " << fmt_error(cfg.tolerance)
        << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_cost(const Config& cfg, std::ostream& out) {
  const CostReport r = cost_report(ModeSpace{cfg.n_s, cfg.n_p});
  if (cfg.json) {
    nlohmann::json j{{"n_s", r.space.n_s},
                     {"n_p", r.space.n_p},
                     {"beamsplitters", r.beamsplitters},
                     {"internal_arbitrary", r.internal_arbitrary},
                     {"internal_phase_blocks", r.internal_phase_blocks},
                     {"internal_element_estimate", r.internal_element_estimate},
                     {"reck_beamsplitters", r.reck_beamsplitters},
                     {"reck_phase_shifters", r.reck_phase_shifters},
                     {"eta", r.eta ? nlohmann::json(*r.eta) : nlohmann::json(nullptr)},
                     {"xi", r.xi ? nlohmann::json(*r.xi) : nlohmann::json(nullptr)}};
    if (r.space.n_p == 2) {
      const PolarizationCounts p = polarization_counts(r);
      j["polarization"] = {{"balanced_beamsplitters", p.balanced_beamsplitters},
                           {"phase_shifters", p.phase_shifters},
                           {"wave_plates", p.wave_plates}};
    }
    out << j.dump(2) << '\n';
    return kOk;
  }

  auto line = [&](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 28 ? 28 - key.size() : 1, ' ') << "= " << value
        << '\n';
  };
  auto ratio = [](const std::optional<double>& x) {
    return x ? fmt_double(*x) : std::string("undefined");
  };
  line("n_s", std::to_string(r.space.n_s));
  line("n_p", std::to_string(r.space.n_p));
  line("beamsplitters", std::to_string(r.beamsplitters));
  line("internal_arbitrary", std::to_string(r.internal_arbitrary));
  line("internal_phase_blocks", std::to_string(r.internal_phase_blocks));
  line("internal_element_estimate", std::to_string(r.internal_element_estimate));
  line("reck_beamsplitters", std::to_string(r.reck_beamsplitters));
  line("reck_phase_shifters", std::to_string(r.reck_phase_shifters));
  line("eta", ratio(r.eta));
  line("xi", ratio(r.xi));
  if (r.space.n_p == 2) {
    const PolarizationCounts p = polarization_counts(r);
    line("polarization_beamsplitters", std::to_string(p.balanced_beamsplitters));
    line("polarization_phase_shifters", std::to_string(p.phase_shifters));
    line("polarization_wave_plates", std::to_string(p.wave_plates));
  }
  return kOk;
}

int cmd_csd(const Config& cfg, std::ostream& out) {
  const ComplexMatrix u = load_matrix(cfg.input_path);
  const CSDResult f = csd(u, cfg.m, cfg.tolerance);
  const std::string& prefix = cfg.output_path;
  save_matrix(prefix + ".left_top.txt", f.left_top);
  save_matrix(prefix + ".left_bottom.txt", f.left_bottom);
  save_matrix(prefix + ".right_top.txt", f.right_top);
  save_matrix(prefix + ".right_bottom.txt", f.right_bottom);
  {
    std::ofstream th(prefix + ".thetas.txt");
    if (!th) throw Error("cannot write '" + prefix + ".thetas.txt'");
    for (double t : f.thetas) th << fmt_double(t) << '\n';
  }
  out << "m=" << f.m << " n=" << f.n << '\n';
  out << "thetas=";
  for (std::size_t i = 0; i < f.thetas.size(); ++i) {
    out << (i ? "," : "") << fmt_double(f.thetas[i]);
  }
  out << '\n';
  out << "reassembly_error=" << fmt_error(max_abs_diff(csd_reassemble(f), u)) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Compile unitaries on spatial and internal modes of light into beamsplitters "
               "and internal operations"};
  app.require_subcommand(1);

  auto* random = app.add_subcommand("random", "write a Haar-random unitary");
  random->add_option("output", cfg.output_path, "matrix file to write")->required();
  random->add_option("--dim", cfg.dim, "matrix dimension")->required()->check(CLI::PositiveNumber);
  random->add_option("--seed", cfg.seed, "RNG seed");

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose a unitary into a circuit");
  decompose_cmd->add_option("input", cfg.input_path, "matrix file")->required();
  decompose_cmd->add_option("output", cfg.output_path, "circuit JSON to write")->required();
  decompose_cmd->add_option("--ns", cfg.n_s, "spatial modes")->required()->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--np", cfg.n_p, "internal modes")->required()->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--tol", cfg.tolerance, "unitarity and reconstruction tolerance")
      ->check(CLI::PositiveNumber);
  decompose_cmd->add_flag("--stage1-only", cfg.stage1_only, "stop before expanding CS blocks");

  auto* verify = app.add_subcommand("verify", "check a circuit against a matrix");
  verify->add_option("circuit", cfg.circuit_path, "circuit JSON")->required();
  verify->add_option("matrix", cfg.input_path, "matrix file")->required();
  verify->add_option("--tol", cfg.tolerance, "max-abs reconstruction tolerance")
      ->check(CLI::PositiveNumber);

  auto* cost = app.add_subcommand("cost", "element counts and ratios");
  cost->add_option("--ns", cfg.n_s, "spatial modes")->required()->check(CLI::PositiveNumber);
  cost->add_option("--np", cfg.n_p, "internal modes")->required()->check(CLI::PositiveNumber);
  cost->add_flag("--json", cfg.json, "print JSON");

  auto* csd_cmd = app.add_subcommand("csd", "single cosine-sine decomposition");
  csd_cmd->add_option("input", cfg.input_path, "matrix file")->required();
  csd_cmd->add_option("output", cfg.output_path, "prefix for the factor files")->required();
  csd_cmd->add_option("--m", cfg.m, "size of the top-left block")->required()->check(CLI::PositiveNumber);
  csd_cmd->add_option("--tol", cfg.tolerance, "unitarity tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArgument;
  }

  try {
    if (*random) return cmd_random(cfg, out);
    if (*decompose_cmd) return cmd_decompose(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*cost) return cmd_cost(cfg, out);
    if (*csd_cmd) return cmd_csd(cfg, out);
  } catch (const UnitarityError& e) {
    err << "error: " << e.what() << '\n';
    out << "deviation=" << fmt_error(e.deviation()) << '\n';
    return kNotUnitary;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgument;
  } catch (const Error& e) {
    // ParseError, VersionError, IndexError from documents, and I/O failures.
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kBadArgument;
}

}  // namespace optocsd::cli
