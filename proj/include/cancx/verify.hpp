#pragma once

#include <cancx/catalog.hpp>
#include <cancx/differential.hpp>
#include <cancx/equivariance.hpp>
#include <cancx/evaluation.hpp>
#include <cancx/homology.hpp>
#include <cancx/invariant_cycles.hpp>
#include <cancx/properties.hpp>

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace cancx {

struct VerifyConfig {
  std::string algebra;
  std::int64_t cutoff = 8;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  RankOptions rank;
  bool corrupt_differential = false;  // mutation hook: flips one sign of lambda
  std::size_t chains = 20;
  std::size_t pairs = 20;
  std::size_t automorphisms = 5;
  std::size_t conjugation_samples = 20;
  std::int64_t conjugation_cutoff = 5;
  std::size_t tangent_samples = 10;
};

struct CheckVerdict {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct VerifyReport {
  std::string algebra;
  std::int64_t cutoff = 0;
  std::uint64_t seed = 0;
  std::vector<CheckVerdict> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["algebra"] = algebra;
    j["cutoff"] = cutoff;
    j["seed"] = seed;
    j["passed"] = passed();
    auto arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"data", c.data}});
    j["checks"] = std::move(arr);
    return j;
  }
};

inline nlohmann::json vector_to_json(const QVector& v) {
  auto arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

struct CycleWitness {
  std::size_t degree = 0;
  std::vector<std::size_t> generators;
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool is_cycle = false;
  NonboundaryCertificate certificate;

  bool passed() const { return is_cycle && certificate.both(); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["degree"] = degree;
    j["generators"] = generators;
    j["bidegree"] = {p, q};
    j["cycle"] = is_cycle;
    j["certificates"] = nlohmann::json::array();
    if (!certificate.in_span) j["certificates"].push_back("span");
    if (certificate.evaluation_found) j["certificates"].push_back("evaluation");
    if (certificate.witness) {
      j["pair"] = {{"x", vector_to_json(certificate.witness->x)}, {"y", vector_to_json(certificate.witness->y)}};
      j["value"] = vector_to_json(certificate.value);
    }
    j["passed"] = passed();
    return j;
  }
};

/// For each i in 1..rank, the wedge of the first i invariant vector fields,
/// with both non-boundary certificates. Degree 0 is covered by h_0(0,0) = 1.
inline std::vector<CycleWitness> cycle_witnesses(const LieAlgebra& L, const LambdaTable& table, std::uint64_t seed,
                                                 const RankOptions& rank_opts = {}) {
  const auto gens = lg_generators(L);
  CertifyOptions opts{rank_opts, toral_directions(L), seed, 20};
  std::vector<CycleWitness> out;
  for (std::size_t i = 1; i <= gens.size(); ++i) {
    CycleWitness w;
    w.degree = i;
    for (std::size_t k = 0; k < i; ++k) w.generators.push_back(k);
    const auto c = canonical_cycle(L.dim, gens, w.generators);
    std::tie(w.p, w.q) = *c.bidegrees().begin();
    w.is_cycle = verify_cycle(table, c);
    if (w.is_cycle) w.certificate = certify_nonboundary(L, table, c, opts);
    out.push_back(std::move(w));
  }
  return out;
}

inline VerifyReport run_verification(const VerifyConfig& cfg) {
  const auto entry = catalog_entry(cfg.algebra);
  const auto& L = entry.algebra;
  auto table = lambda_table(L);
  if (cfg.corrupt_differential) table = with_sign_corruption(table);
  HomologyOptions hopts{cfg.rank, cfg.workers, false};

  VerifyReport report{L.name, cfg.cutoff, cfg.seed, {}};

  {
    const auto v = validate_algebra(L);
    CheckVerdict c{"validate_algebra", v.ok(), "", nlohmann::json::object()};
    for (const auto& s : v.violations()) c.detail += s + "; ";
    report.checks.push_back(std::move(c));
  }

  {
    const auto v = verify_vanishing(table, L.rank, cfg.cutoff, hopts);
    CheckVerdict c{"vanishing_above_rank", v.passed && v.certified, "", nlohmann::json::object()};
    c.detail = std::to_string(v.entries_checked) + " entries with i > " + std::to_string(L.rank) +
               (v.certified ? ", certified" : ", NOT certified");
    auto fails = nlohmann::json::array();
    for (const auto& f : v.failures) fails.push_back({{"i", f.i}, {"p", f.p}, {"q", f.q}, {"h", f.h}});
    c.data = {{"entries", v.entries_checked}, {"certified", v.certified}, {"failures", fails}};
    report.checks.push_back(std::move(c));
  }

  {
    CheckVerdict c{"homology_at_or_below_rank", true, "", nlohmann::json::object()};
    const auto h00 = homology_dims(table, 0, 0, cfg.rank);
    c.passed = h00.row(0) && h00.row(0)->h == 1;
    auto arr = nlohmann::json::array();
    arr.push_back({{"degree", 0}, {"bidegree", {0, 0}}, {"h", h00.row(0) ? h00.row(0)->h : 0}});
    try {
      for (const auto& w : cycle_witnesses(L, table, cfg.seed, cfg.rank)) {
        c.passed = c.passed && w.passed();
        arr.push_back(w.to_json());
      }
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    if (c.detail.empty()) c.detail = "witnesses in degrees 0.." + std::to_string(L.rank);
    c.data["witnesses"] = std::move(arr);
    report.checks.push_back(std::move(c));
  }

  {
    const auto full = homology_report(L.name, table, cfg.cutoff, hopts);
    std::size_t bad = 0, uncertified = 0;
    for (const auto& b : full.blocks) {
      if (!euler_check(b)) ++bad;
      for (const auto& r : b.table) uncertified += r.certified ? 0 : 1;
    }
    CheckVerdict c{"euler_identity", bad == 0, std::to_string(full.blocks.size()) + " bidegrees, " + std::to_string(bad) + " failing",
                   {{"bidegrees", full.blocks.size()}, {"failing", bad}, {"uncertified_entries", uncertified}}};
    report.checks.push_back(std::move(c));
  }

  {
    std::size_t pairs = 0, nonzero = 0;
    for (const auto& [p, q] : bidegrees_up_to(cfg.cutoff))
      for (std::int64_t i = 2; i <= static_cast<std::int64_t>(L.dim); ++i) {
        if (ComponentBasis(L.dim, i, p, q).empty() || ComponentBasis(L.dim, i - 2, p, q).empty()) continue;
        ++pairs;
        if (!(assemble_block(table, i - 1, p, q) * assemble_block(table, i, p, q)).is_zero()) ++nonzero;
      }
    report.checks.push_back({"d_squared_zero", nonzero == 0,
                             std::to_string(pairs) + " block pairs, " + std::to_string(nonzero) + " nonzero products",
                             {{"pairs", pairs}, {"nonzero", nonzero}}});
  }

  {
    const auto b = boundary_vanishing_test(L, table, cfg.chains, cfg.pairs, cfg.seed);
    report.checks.push_back({"boundaries_vanish_on_commuting_pairs", b.passed,
                             std::to_string(b.records.size()) + " evaluations, " + std::to_string(b.failures) + " nonzero",
                             {{"evaluations", b.records.size()}, {"failures", b.failures}}});
  }

  {
    CheckVerdict c{"automorphism_conjugation", true, "", nlohmann::json::object()};
    auto arr = nlohmann::json::array();
    const auto dirs = nilpotent_directions(L, cfg.automorphisms, cfg.seed);
    HomologyOptions copts{cfg.rank, cfg.workers, false};
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const auto A = exp_ad_nilpotent(L, dirs[k]);
      const bool conj = conjugation_check(L, A, cfg.conjugation_samples, cfg.seed + k);
      const bool hom = conjugated_homology_check(L, A, std::min(cfg.conjugation_cutoff, cfg.cutoff), copts);
      const bool ideal = ideal_transport_check(L, A);
      c.passed = c.passed && conj && hom && ideal;
      arr.push_back({{"direction", vector_to_json(dirs[k])}, {"differential", conj}, {"homology", hom}, {"ideal", ideal}});
    }
    c.detail = std::to_string(dirs.size()) + " exp(ad n) automorphisms";
    c.data["automorphisms"] = std::move(arr);
    report.checks.push_back(std::move(c));
  }

  {
    CheckVerdict c{"commuting_tangent_dim", true, "", nlohmann::json::object()};
    const auto expected = L.dim + L.rank;
    auto dims = nlohmann::json::array();
    for (std::size_t s = 0; s < cfg.tangent_samples; ++s) {
      const auto d = commuting_tangent_dim(L, sample_regular_semisimple_pair(L, entry.realization.toral, cfg.seed + s));
      c.passed = c.passed && d == expected;
      dims.push_back(d);
    }
    c.detail = "expected dim g + rk g = " + std::to_string(expected);
    c.data["dims"] = std::move(dims);
    report.checks.push_back(std::move(c));
  }
  return report;
}

/// Robustness properties: basis permutation, form scaling by 2, and modular
/// ranks against exact ones on blocks of at most 2000 columns.
inline VerifyReport run_property_suite(const VerifyConfig& cfg) {
  const auto L = build_catalog_algebra(cfg.algebra);
  HomologyOptions hopts{cfg.rank, cfg.workers, false};
  VerifyReport report{L.name, cfg.cutoff, cfg.seed, {}};

  const auto perm = random_permutation(L.dim, cfg.seed);
  report.checks.push_back({"basis_permutation", permutation_invariant(L, perm, cfg.cutoff, hopts), "",
                           {{"permutation", perm}}});
  report.checks.push_back({"form_scaling", scaling_invariant(L, Rational(2), cfg.cutoff, hopts), "B -> 2B", {}});

  const auto agree = modular_matches_exact(lambda_table(L), cfg.cutoff);
  auto bad = nlohmann::json::array();
  for (const auto& [i, p, q] : agree.mismatches) bad.push_back({i, p, q});
  report.checks.push_back({"modular_matches_exact", agree.passed(),
                           std::to_string(agree.blocks_compared) + " blocks compared, " +
                               std::to_string(agree.blocks_skipped) + " over 2000 columns",
                           {{"compared", agree.blocks_compared}, {"skipped", agree.blocks_skipped}, {"mismatches", bad}}});
  return report;
}

}  // namespace cancx
