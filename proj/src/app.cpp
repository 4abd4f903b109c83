#include "prur/app.hpp"

#include <chrono>
#include <deque>
#include <limits>

#include "prur/budget.hpp"
#include "prur/errors.hpp"

namespace prur {

namespace {

using Clock = std::chrono::steady_clock;

class PhaseTimer {
 public:
  PhaseTimer(RunStats& stats, const char* phase) : acc_(stats.seconds[phase]), start_(Clock::now()) {}
  ~PhaseTimer() { acc_ += std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  double& acc_;
  Clock::time_point start_;
};

struct CharData {
  RPoly chi;
  ZUPoly X;
  SubresChain chain;
};

CharData char_data(QuotientAlgebra& Q, const MvPoly& t) {
  RPoly chi = Q.char_poly(t);
  ZUPoly X = primitive_part(clear_denominators(chi).second);
  SubresChain chain = subres_chain(X, derivative_T(X));
  return {std::move(chi), std::move(X), std::move(chain)};
}

class Pipeline {
 public:
  Pipeline(const std::vector<MvPoly>& F, const RingPtr& ring, const RunOptions& opts)
      : F_(F), ring_(ring), params_(ring->param_ring()), opts_(opts) {
    report_.ring = ring;
    report_.algorithm = opts.algorithm;
    for (const auto& t : opts.sep)
      if (!same_ring(t.ring(), ring) || !t.has_vars() || !is_parameter_free(t))
        throw PreconditionError("separating candidates must be nonconstant polynomials in the variables only");
  }

  RunReport run() {
    StepBudget budget(opts_.step_limit == 0 ? std::numeric_limits<std::uint64_t>::max() : opts_.step_limit);
    BudgetScope scope(budget);
    const auto start = Clock::now();
    std::vector<CgsBranch> cgs;
    try {
      PhaseTimer timer(report_.stats, "cgs");
      cgs = minimal_cgs(F_, ConstructibleSet::whole(params_));
    } catch (const StepLimitExceeded&) {
      report_.incomplete.push_back(ConstructibleSet::whole(params_));
    }
    count("cgs_branches", cgs.size());
    for (std::size_t i = 0; i < cgs.size(); ++i) {
      const CgsBranch& b = cgs[i];
      switch (b.kind) {
        case BranchKind::no_solution:
          report_.no_solution.push_back(simplify(b.cs, params_));
          break;
        case BranchKind::positive_dimensional:
          report_.positive_dim.push_back(simplify(b.cs, params_));
          break;
        case BranchKind::zero_dimensional:
          count("zero_dim_cgs_branches", 1);
          process(i, b);
          break;
      }
    }
    count("rur_branches", report_.zero_dim.size());
    count("steps", budget.used());
    report_.stats.seconds["total"] = std::chrono::duration<double>(Clock::now() - start).count();
    return std::move(report_);
  }

 private:
  static bool is_parameter_free(const MvPoly& t) {
    const std::size_t n = t.ring()->num_vars();
    for (const auto& term : t.terms())
      for (std::size_t i = n; i < term.mono.size(); ++i)
        if (term.mono[i] != 0) return false;
    return true;
  }

  void count(const char* key, std::uint64_t n) { report_.stats.counters[key] += n; }

  void process(std::size_t i, const CgsBranch& b) {
    std::vector<std::pair<ConstructibleSet, std::size_t>> parts;
    std::optional<QuotientAlgebra> Q;
    try {
      PhaseTimer timer(report_.stats, "rank");
      Q.emplace(b);
      parts = rank_partition(Q->hermite_form(), b.cs);
    } catch (const StepLimitExceeded&) {
      report_.incomplete.push_back(b.cs);
      return;
    }
    count("rank_branches", parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      PhaseTimer timer(report_.stats, "rur");
      if (opts_.algorithm == 2)
        count_branch_alg2(*Q, i, j, parts[j].first, parts[j].second);
      else
        count_branch_alg1(*Q, i, j, parts[j].first, parts[j].second);
    }
  }

  // Steps 3 and 4: separate on the whole set, split off the PSC factors, retry
  // the pieces with the next candidate.
  void count_branch_alg1(QuotientAlgebra& Q, std::size_t i, std::size_t j, const ConstructibleSet& cs,
                         std::size_t k0) {
    std::deque<std::pair<ConstructibleSet, std::size_t>> queue{{cs, 0}};
    while (!queue.empty()) {
      auto [cur, idx] = std::move(queue.front());
      queue.pop_front();
      try {
        charge_steps(1);
        count("candidates", 1);
        const SepCandidate cand = separating_candidate(ring_, k0, opts_.sep, idx);
        if (k0 == 1) {
          emit(finish(Q, i, j, cur, cand, k0, char_data(Q, cand.t)));
          continue;
        }
        SepCheck chk = check_separating(Q, cand.t, cur, k0);
        std::vector<RurBranch> out;
        if (!is_empty(chk.sep_set, params_))
          out = finish(Q, i, j, chk.sep_set, cand, k0, CharData{chk.chi, chk.X, chk.chain});
        std::vector<ConstructibleSet> pieces = split_by_factors(cur, chk.psc);
        emit(std::move(out));
        for (auto& p : pieces) queue.emplace_back(std::move(p), idx + 1);
      } catch (const StepLimitExceeded&) {
        report_.incomplete.push_back(cur);
      }
    }
  }

  // Step 3 with the gcd computed at once: branches of the right gcd degree are
  // done, the others go to the next candidate.
  void count_branch_alg2(QuotientAlgebra& Q, std::size_t i, std::size_t j, const ConstructibleSet& cs,
                         std::size_t k0) {
    std::deque<std::pair<ConstructibleSet, std::size_t>> queue{{cs, 0}};
    while (!queue.empty()) {
      auto [cur, idx] = std::move(queue.front());
      queue.pop_front();
      try {
        charge_steps(1);
        count("candidates", 1);
        const SepCandidate cand = separating_candidate(ring_, k0, opts_.sep, idx);
        CharData data = char_data(Q, cand.t);
        const int target = data.X.degree() - static_cast<int>(k0);
        std::vector<RurBranch> out;
        std::vector<ConstructibleSet> retry;
        auto gcds = parametric_gcd(data.chain, cur);
        for (std::size_t l = 0; l < gcds.size(); ++l) {
          if (gcds[l].deg == target) {
            out.push_back(make_branch(Q, gcds[l], cand, data.chi, k0, {i, j, cand.index, l}));
          } else if (gcds[l].deg > target) {
            retry.push_back(std::move(gcds[l].cs));
          } else {
            throw InternalError("gcd degree below the zero count bound");
          }
        }
        emit(std::move(out));
        for (auto& p : retry) queue.emplace_back(std::move(p), idx + 1);
      } catch (const StepLimitExceeded&) {
        report_.incomplete.push_back(cur);
      }
    }
  }

  RurBranch make_branch(QuotientAlgebra& Q, const GcdBranch& gb, const SepCandidate& cand, const RPoly& chi,
                        std::size_t k0, std::vector<std::size_t> trail) {
    ConstructibleSet cs = simplify(gb.cs, params_);
    RurTuple tuple = build_tuple(Q, cand, chi, gb.d, cs);
    return RurBranch{std::move(cs), std::move(tuple), k0, std::move(trail)};
  }

  std::vector<RurBranch> finish(QuotientAlgebra& Q, std::size_t i, std::size_t j, const ConstructibleSet& set,
                                const SepCandidate& cand, std::size_t k0, const CharData& data) {
    const int target = data.X.degree() - static_cast<int>(k0);
    std::vector<RurBranch> out;
    auto gcds = parametric_gcd(data.chain, set);
    for (std::size_t l = 0; l < gcds.size(); ++l) {
      if (gcds[l].deg != target) throw InternalError("separated set with an unexpected gcd degree");
      out.push_back(make_branch(Q, gcds[l], cand, data.chi, k0, {i, j, cand.index, l}));
    }
    return out;
  }

  void emit(std::vector<RurBranch> branches) {
    for (auto& b : branches) report_.zero_dim.push_back(std::move(b));
  }

  const std::vector<MvPoly>& F_;
  RingPtr ring_;
  RingPtr params_;
  const RunOptions& opts_;
  RunReport report_;
};

}  // namespace

RunReport algorithm1(const std::vector<MvPoly>& F, const RingPtr& ring, const RunOptions& opts) {
  RunOptions o = opts;
  o.algorithm = 1;
  return Pipeline(F, ring, o).run();
}

RunReport algorithm2(const std::vector<MvPoly>& F, const RingPtr& ring, const RunOptions& opts) {
  RunOptions o = opts;
  o.algorithm = 2;
  return Pipeline(F, ring, o).run();
}

RunReport run_algorithm(const std::vector<MvPoly>& F, const RingPtr& ring, const RunOptions& opts) {
  if (opts.algorithm != 1 && opts.algorithm != 2) throw PreconditionError("algorithm must be 1 or 2");
  if (F.empty()) throw PreconditionError("empty system");
  return Pipeline(F, ring, opts).run();
}

}  // namespace prur
