#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prur/parser.hpp"
#include "prur/rur.hpp"

namespace prur {

struct RunOptions {
  int algorithm = 1;
  /// Separating candidates tried first, in X only.
  std::vector<MvPoly> sep;
  std::uint64_t seed = 1;
  /// 0 means unlimited.
  std::uint64_t step_limit = 0;
};

struct RurBranch {
  ConstructibleSet cs;
  RurTuple tuple;
  std::size_t k = 0;
  /// CGS branch, rank branch, candidate index, gcd branch.
  std::vector<std::size_t> trail;
};

struct RunStats {
  std::map<std::string, std::uint64_t> counters;
  std::map<std::string, double> seconds;
};

struct RunReport {
  RingPtr ring;
  int algorithm = 1;
  std::vector<RurBranch> zero_dim;
  std::vector<ConstructibleSet> no_solution;
  std::vector<ConstructibleSet> positive_dim;
  /// Sets whose processing hit the step limit.
  std::vector<ConstructibleSet> incomplete;
  RunStats stats;
};

RunReport algorithm1(const std::vector<MvPoly>& F, const RingPtr& ring, const RunOptions& opts = {});
RunReport algorithm2(const std::vector<MvPoly>& F, const RingPtr& ring, const RunOptions& opts = {});
RunReport run_algorithm(const std::vector<MvPoly>& F, const RingPtr& ring, const RunOptions& opts);

/// A rational point of V(E) \ V(N): random small values when E is empty,
/// otherwise back-substitution through a lex basis of E with random values
/// for free parameters. nullopt after the retries run out.
std::optional<std::vector<Rational>> sample_point(const ConstructibleSet& cs, const RingPtr& param_ring,
                                                  std::mt19937_64& rng, int retries = 60);

struct SampleCheck {
  std::vector<Rational> point;
  bool roots_ok = false;
  bool residual_ok = false;
  bool gcd_ok = false;
  std::string note;
  bool ok() const { return roots_ok && residual_ok && gcd_ok; }
};

struct VerifyReport {
  /// "ok", "failed", "unsampled" or "vacuous".
  std::string status;
  std::size_t requested = 0;
  std::vector<SampleCheck> samples;
};

/// Checks one point: distinct roots of chi_bar equal k, every f in F vanishes
/// at (g_1/g, ..., g_n/g) modulo chi_bar, and gcd(g, chi_bar) = 1.
SampleCheck check_point(const RurBranch& branch, const std::vector<MvPoly>& F, const std::vector<Rational>& point);
VerifyReport verify_branch(const RurBranch& branch, const std::vector<MvPoly>& F, const RingPtr& ring,
                           std::size_t samples, std::uint64_t seed);

/// Text and JSON renderings. Timings are left out unless asked for, so that
/// equal inputs give identical output.
std::string report_text(const RunReport& report, const std::vector<VerifyReport>& verification = {},
                        bool timings = false);
std::string report_json(const RunReport& report, const std::vector<VerifyReport>& verification = {},
                        bool timings = false);
/// Rational function of T over k(U) with one displayed denominator.
std::string render_over_common_denominator(const RPoly& p);

/// Command line entry point. Exit codes: 0 ok, 1 input error, 2 step limit,
/// 3 internal error.
int run(int argc, const char* const* argv);

}  // namespace prur
