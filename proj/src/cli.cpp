#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "prur/app.hpp"
#include "prur/errors.hpp"

namespace prur {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw ContextError("cannot read " + path);
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split_sep(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  std::vector<std::string> trimmed;
  for (auto& p : out) {
    const auto b = p.find_first_not_of(" \t\n");
    if (b == std::string::npos) continue;
    trimmed.push_back(p.substr(b, p.find_last_not_of(" \t\n") - b + 1));
  }
  return trimmed;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Rational univariate representations of parametric polynomial systems"};
  int algorithm = 1;
  std::string input;
  std::string sep;
  std::string order = "grevlex";
  std::string format = "text";
  std::size_t verify = 0;
  std::uint64_t seed = 1;
  std::uint64_t step_limit = 0;
  bool timings = false;
  app.add_option("--algorithm", algorithm, "1 or 2")->check(CLI::IsMember({1, 2}));
  app.add_option("--input", input, "system file, - for stdin")->required();
  app.add_option("--sep", sep, "separating candidates tried first, separated by ';'");
  app.add_option("--order", order, "order on the variables")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--verify", verify, "sample points checked per branch");
  app.add_option("--seed", seed, "seed for the sampler");
  app.add_option("--step-limit", step_limit, "abort work after this many steps (0: no limit)");
  app.add_flag("--timings", timings, "include wall-clock seconds in the stats");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const std::string text = read_input(input);
    ParsedSystem sys = parse_system(text, parse_monomial_order(order));
    RunOptions opts;
    opts.algorithm = algorithm;
    opts.seed = seed;
    opts.step_limit = step_limit;
    for (const auto& s : split_sep(sep)) opts.sep.push_back(parse_polynomial(s, sys.ring));
    RunReport report = run_algorithm(sys.polys, sys.ring, opts);
    std::vector<VerifyReport> checks;
    if (verify > 0)
      for (std::size_t b = 0; b < report.zero_dim.size(); ++b)
        checks.push_back(verify_branch(report.zero_dim[b], sys.polys, sys.ring, verify, seed + b));
    std::cout << (format == "json" ? report_json(report, checks, timings) : report_text(report, checks, timings));
    if (!report.incomplete.empty()) {
      std::cerr << "step limit reached: " << report.incomplete.size() << " set(s) left incomplete\n";
      return 2;
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << input << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return 1;
  } catch (const StepLimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ContextError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace prur
