#include <cancx/cli.hpp>

#include <cancx/algebra_json.hpp>
#include <cancx/catalog.hpp>
#include <cancx/homology.hpp>
#include <cancx/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace cancx::cli {

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--algebra,-a", cfg.algebra, "catalog algebra: abelian1..abelian4, sl2, sl3, gl2, sl2xsl2, so3");
  cmd->add_option("--cutoff,-N", cfg.cutoff, "largest total degree p+q")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", cfg.seed, "random seed");
  cmd->add_option("--workers,-j", cfg.workers, "bidegree worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--output,-o", cfg.output, "output file (default stdout)");
  cmd->add_flag("--exact-only", cfg.exact_only, "rank every block by fraction-free elimination over Z");
}

cancx::LieAlgebra load_algebra(const RunConfig& cfg) {
  if (!cfg.algebra_file.empty()) {
    std::ifstream in(cfg.algebra_file);
    if (!in) throw UsageError("cannot open " + cfg.algebra_file);
    cancx::LieAlgebra L;
    try {
      L = cancx::algebra_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      throw UsageError(cfg.algebra_file + ": " + e.what());
    }
    const auto report = cancx::validate_algebra(L);
    if (!report.ok()) {
      std::string msg = cfg.algebra_file + " is not a valid algebra:";
      for (const auto& v : report.violations()) msg += " " + v + ";";
      throw UsageError(msg);
    }
    return L;
  }
  if (cfg.algebra.empty()) throw UsageError("--algebra is required");
  if (!cancx::is_catalog_name(cfg.algebra)) throw UsageError("unknown algebra: " + cfg.algebra);
  return cancx::build_catalog_algebra(cfg.algebra);
}

void require_catalog(const RunConfig& cfg) {
  if (cfg.algebra.empty()) throw UsageError("--algebra is required");
  if (!cancx::is_catalog_name(cfg.algebra)) throw UsageError("unknown algebra: " + cfg.algebra);
}

cancx::RankOptions rank_options(const RunConfig& cfg) {
  cancx::RankOptions r;
  r.exact_only = cfg.exact_only;
  return r;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text;
}

void dump_blocks(const RunConfig& cfg, const cancx::LieAlgebra& L) {
  namespace fs = std::filesystem;
  const fs::path dir(cfg.dump_blocks);
  fs::create_directories(dir);
  const auto table = cancx::lambda_table(L);
  for (const auto& [p, q] : cancx::bidegrees_up_to(cfg.cutoff))
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(L.dim); ++i) {
      const auto block = cancx::assemble_block(table, i, p, q);
      if (block.rows() == 0 || block.cols() == 0) continue;
      std::ofstream out(dir / ("d" + std::to_string(i) + "_" + std::to_string(p) + "_" + std::to_string(q) + ".mtx"));
      cancx::write_matrix_market(out, block);
    }
}

cancx::VerifyConfig verify_config(const RunConfig& cfg) {
  cancx::VerifyConfig v;
  v.algebra = cfg.algebra;
  v.cutoff = cfg.cutoff;
  v.seed = cfg.seed;
  v.workers = cfg.workers;
  v.rank = rank_options(cfg);
  v.corrupt_differential = cfg.corrupt;
  return v;
}

int print_report(const RunConfig& cfg, const cancx::VerifyReport& report) {
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  if (!cfg.output.empty()) emit(cfg, report.to_json().dump(2) + "\n");
  if (report.passed()) return kPass;
  for (const auto& c : report.checks)
    if (!c.passed) std::cerr << c.name << ": " << c.data.dump() << '\n';
  return kFail;
}

// One JSON object per line for every chain x commuting pair evaluation.
void write_transcript(const RunConfig& cfg) {
  const auto v = verify_config(cfg);
  const auto L = cancx::build_catalog_algebra(cfg.algebra);
  auto table = cancx::lambda_table(L);
  if (v.corrupt_differential) table = cancx::with_sign_corruption(table);
  std::ofstream out(cfg.transcript, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.transcript);
  for (const auto& r : cancx::boundary_vanishing_test(L, table, v.chains, v.pairs, v.seed).records)
    out << cancx::record_to_json(r).dump() << '\n';
}

}  // namespace

int cmd_homology(const RunConfig& cfg) {
  const auto L = load_algebra(cfg);
  cancx::HomologyOptions opts{rank_options(cfg), cfg.workers, !cfg.no_timing};
  const auto report = cancx::homology_report(L, cfg.cutoff, opts);
  if (cfg.format == "csv") {
    std::ostringstream os;
    cancx::write_csv(os, report);
    emit(cfg, os.str());
  } else {
    emit(cfg, cancx::report_to_json(report).dump(2) + "\n");
  }
  if (!cfg.dump_blocks.empty()) dump_blocks(cfg, L);
  for (const auto& b : report.blocks)
    if (!cancx::euler_check(b)) {
      std::cerr << "euler identity fails at (" << b.p << "," << b.q << ")\n";
      return kFail;
    }
  return kPass;
}

int cmd_verify(const RunConfig& cfg) {
  require_catalog(cfg);
  if (cfg.cutoff < 2) throw UsageError("verify needs --cutoff >= 2");
  const auto report = cancx::run_verification(verify_config(cfg));
  if (!cfg.transcript.empty()) write_transcript(cfg);
  return print_report(cfg, report);
}

int cmd_properties(const RunConfig& cfg) {
  require_catalog(cfg);
  return print_report(cfg, cancx::run_property_suite(verify_config(cfg)));
}

int cmd_cycles(const RunConfig& cfg) {
  require_catalog(cfg);
  const auto L = cancx::build_catalog_algebra(cfg.algebra);
  const auto witnesses = cancx::cycle_witnesses(L, cancx::lambda_table(L), cfg.seed, rank_options(cfg));
  nlohmann::json j;
  j["algebra"] = L.name;
  j["rank"] = L.rank;
  j["witnesses"] = nlohmann::json::array();
  bool ok = true;
  for (const auto& w : witnesses) {
    j["witnesses"].push_back(w.to_json());
    ok = ok && w.passed();
  }
  j["passed"] = ok;
  emit(cfg, j.dump(2) + "\n");
  return ok ? kPass : kFail;
}

int cmd_algebra(const RunConfig& cfg) {
  emit(cfg, cancx::algebra_to_json(load_algebra(cfg)).dump(2) + "\n");
  return kPass;
}

int run(int argc, char** argv) {
  CLI::App app{"Homology of the canonical complex of a Lie algebra"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* homology = app.add_subcommand("homology", "bigraded homology table up to a cutoff");
  add_common(homology, cfg);
  homology->add_option("--algebra-file", cfg.algebra_file, "algebra as JSON instead of a catalog name");
  homology->add_option("--format,-f", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  homology->add_option("--dump-blocks", cfg.dump_blocks, "write every block d_i(p,q) as .mtx into this directory");
  homology->add_flag("--no-timing", cfg.no_timing, "write millis = 0 so output is reproducible");

  auto* verify = app.add_subcommand("verify", "vanishing, witnesses, Euler, d^2, boundaries, automorphisms, tangent");
  add_common(verify, cfg);
  verify->add_option("--transcript", cfg.transcript, "boundary evaluations as JSON lines");
  verify->add_flag("--inject-sign-corruption", cfg.corrupt)->group("");  // mutation hook for tests

  auto* cycles = app.add_subcommand("cycles", "witness cycles in each degree up to the rank, with certificates");
  add_common(cycles, cfg);

  auto* properties = app.add_subcommand("properties", "basis permutation, form scaling, modular vs exact ranks");
  add_common(properties, cfg);

  auto* algebra = app.add_subcommand("algebra", "print an algebra as JSON");
  algebra->add_option("--algebra,-a", cfg.algebra, "catalog name");
  algebra->add_option("--algebra-file", cfg.algebra_file, "re-validate and normalise a JSON algebra");
  algebra->add_option("--output,-o", cfg.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*homology) return cmd_homology(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*cycles) return cmd_cycles(cfg);
    if (*properties) return cmd_properties(cfg);
    if (*algebra) return cmd_algebra(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

}  // namespace cancx::cli
