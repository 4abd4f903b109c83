#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "prur/app.hpp"

namespace prur {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> strings(const std::vector<MvPoly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

bool bare_power(const MvPoly& p) {
  if (!p.is_monomial() || p.leading_coefficient() != 1) return false;
  int symbols = 0;
  for (auto e : p.leading_monomial()) symbols += e != 0;
  return symbols == 1;
}

ordered_json set_json(const ConstructibleSet& cs) {
  return ordered_json{{"E", cs.E.empty() ? std::vector<std::string>{"0"} : strings(cs.E)}, {"N", strings(cs.N)}};
}

std::string point_string(const std::vector<Rational>& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + rational_to_string(pt[i]);
  return s + ")";
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

}  // namespace

std::string render_over_common_denominator(const RPoly& p) {
  if (p.is_zero()) return "0";
  auto [D, q] = clear_denominators(p);
  const std::string num = q.to_string("T");
  if (D.is_one()) return num;
  const std::string den = bare_power(D) ? D.to_string() : "(" + D.to_string() + ")";
  return "(" + num + ")/" + den;
}

std::string report_text(const RunReport& report, const std::vector<VerifyReport>& verification, bool timings) {
  std::ostringstream os;
  const RingPtr& ring = report.ring;
  os << "Algorithm " << report.algorithm << ": " << report.zero_dim.size() << " zero-dimensional branch"
     << (report.zero_dim.size() == 1 ? "" : "es") << "\n";
  if (report.zero_dim.empty()) os << "There are no zero-dimensional branches.\n";
  for (std::size_t b = 0; b < report.zero_dim.size(); ++b) {
    const RurBranch& br = report.zero_dim[b];
    os << "\n[" << b + 1 << "] " << br.cs.to_string() << "\n";
    os << "  t = " << br.tuple.t.t.to_string() << ", k = " << br.k << "\n";
    os << "  chi = " << br.tuple.chi.to_string("T") << "\n";
    os << "  chi_bar = " << br.tuple.chi_bar.to_string("T") << "\n";
    os << "  g = " << render_over_common_denominator(br.tuple.g) << "\n";
    for (std::size_t k = 0; k < br.tuple.g_vars.size(); ++k)
      os << "  g_" << ring->vars()[k] << " = " << render_over_common_denominator(br.tuple.g_vars[k]) << "\n";
    if (b < verification.size()) {
      const VerifyReport& v = verification[b];
      std::size_t good = 0;
      for (const auto& s : v.samples) good += s.ok();
      os << "  verify: " << v.status << " (" << good << "/" << v.samples.size() << " samples, " << v.requested
         << " requested)\n";
      for (const auto& s : v.samples)
        if (!s.ok()) os << "    failed at " << point_string(s.point) << (s.note.empty() ? "" : ": " + s.note) << "\n";
    }
  }
  auto sets = [&](const char* title, const std::vector<ConstructibleSet>& v) {
    if (v.empty()) return;
    os << "\n" << title << ":\n";
    for (const auto& cs : v) os << "  " << cs.to_string() << "\n";
  };
  sets("No solution", report.no_solution);
  sets("Positive dimensional", report.positive_dim);
  sets("Incomplete (step limit)", report.incomplete);
  os << "\nStats:";
  for (const auto& [k, v] : report.stats.counters) os << " " << k << "=" << v;
  os << "\n";
  if (timings) {
    os << "Seconds:";
    for (const auto& [k, v] : report.stats.seconds) os << " " << k << "=" << fmt_seconds(v);
    os << "\n";
  }
  return os.str();
}

std::string report_json(const RunReport& report, const std::vector<VerifyReport>& verification, bool timings) {
  ordered_json out;
  out["algorithm"] = report.algorithm;
  ordered_json zd = ordered_json::array();
  for (std::size_t b = 0; b < report.zero_dim.size(); ++b) {
    const RurBranch& br = report.zero_dim[b];
    ordered_json j = set_json(br.cs);
    j["t"] = br.tuple.t.t.to_string();
    j["k"] = br.k;
    j["chi"] = br.tuple.chi.to_string("T");
    j["chi_bar"] = br.tuple.chi_bar.to_string("T");
    j["g"] = render_over_common_denominator(br.tuple.g);
    ordered_json gv = ordered_json::array();
    for (const auto& p : br.tuple.g_vars) gv.push_back(render_over_common_denominator(p));
    j["g_vars"] = gv;
    j["trail"] = br.trail;
    if (b < verification.size()) {
      const VerifyReport& v = verification[b];
      ordered_json vj{{"status", v.status}, {"requested", v.requested}};
      ordered_json samples = ordered_json::array();
      for (const auto& s : v.samples) {
        std::vector<std::string> pt;
        for (const auto& x : s.point) pt.push_back(rational_to_string(x));
        samples.push_back(ordered_json{{"point", pt},
                                       {"roots", s.roots_ok},
                                       {"residual", s.residual_ok},
                                       {"gcd", s.gcd_ok},
                                       {"note", s.note}});
      }
      vj["samples"] = samples;
      j["verify"] = vj;
    }
    zd.push_back(j);
  }
  out["zero_dim"] = zd;
  auto sets = [](const std::vector<ConstructibleSet>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& cs : v) a.push_back(set_json(cs));
    return a;
  };
  out["no_solution"] = sets(report.no_solution);
  out["positive_dim"] = sets(report.positive_dim);
  out["incomplete"] = sets(report.incomplete);
  ordered_json stats;
  for (const auto& [k, v] : report.stats.counters) stats[k] = v;
  if (timings)
    for (const auto& [k, v] : report.stats.seconds) stats["seconds_" + k] = v;
  out["stats"] = stats;
  return out.dump(2) + "\n";
}

}  // namespace prur
