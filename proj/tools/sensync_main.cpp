#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sensync/cli.hpp"
#include "sensync/special.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

// key=value per line; '#' starts a comment. Recognized keys: ncap, outdir.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> cfg;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return cfg;
}

bool parse_range(const std::string& s, int& lo, int& hi) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s);
    } else {
      lo = std::stoi(s.substr(0, dots));
      hi = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 3 && lo <= hi;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return bool(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sensync: exact sensitivity to synchronism of elementary cellular automata"};
  app.require_subcommand(1);

  std::string config_path, outdir = ".";
  int jobs = 0, ncap = 0;
  app.add_option("--config", config_path, "key=value config file (keys: ncap, outdir)");
  app.add_option("--jobs", jobs, "sweep parallelism degree (default: available cores)");
  app.add_option("--ncap", ncap, "ring size cap override");

  auto* scan_cmd = app.add_subcommand("scan", "sensitivity grid over rules and ring sizes");
  std::string rule_spec = "nonmax19", n_range = "3..8", out_path, format = "csv";
  scan_cmd->add_option("--rules", rule_spec,
                       "comma list, all, reps88, nonmax19, or table1:<I|II|III|IV>");
  scan_cmd->add_option("--n", n_range, "inclusive range, e.g. 3..9 or a single size");
  scan_cmd->add_option("--out", out_path, "output path (default: stdout)");
  scan_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "counts | table1 | lucas | special | oracle | all");

  auto* special_cmd = app.add_subcommand("special", "find special pairs for one rule");
  int sp_rule = 128, sp_n = 7;
  std::string sp_out;
  special_cmd->add_option("--rule", sp_rule, "Wolfram number")->check(CLI::Range(0, 255));
  special_cmd->add_option("--n", sp_n, "ring size")->required();
  special_cmd->add_option("--out", sp_out, "JSON output path (default: stdout)");

  auto* classes_cmd =
      app.add_subcommand("classes", "print the 88 rule classes and their orbits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) {
      const auto cfg = load_config(config_path);
      if (auto it = cfg.find("outdir"); it != cfg.end()) outdir = it->second;
      if (auto it = cfg.find("ncap"); it != cfg.end() && ncap == 0)
        ncap = std::stoi(it->second);
    }
    if (ncap > 0) setenv("SENSYNC_NCAP", std::to_string(ncap).c_str(), 1);
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    const auto resolve = [&](const std::string& p) {
      return (p.empty() || p.front() == '/' || outdir == ".") ? p : outdir + "/" + p;
    };

    if (scan_cmd->parsed()) {
      int lo, hi;
      if (!parse_range(n_range, lo, hi)) {
        std::cerr << "invalid --n range: " << n_range << "\n";
        return 2;
      }
      const auto rows = sensync::scan(sensync::parse_rule_spec(rule_spec), lo, hi);
      const std::string body =
          format == "csv" ? sensync::render_csv(rows) : sensync::render_json(rows);
      if (out_path.empty()) {
        std::cout << body;
      } else if (!write_file(resolve(out_path), body)) {
        std::cerr << "cannot write " << resolve(out_path) << "\n";
        return 2;
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto checks = sensync::run_verify_suite(suite);
      int failed = 0;
      for (const auto& c : checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) {
          std::cout << " (" << c.detail << ")";
          ++failed;
        }
        std::cout << "\n";
      }
      std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
      return failed == 0 ? 0 : 1;
    }

    if (special_cmd->parsed()) {
      const auto result =
          sensync::find_special_pairs(sensync::LocalRule{std::uint8_t(sp_rule)}, sp_n);
      const std::string body = sensync::pairs_to_json(result).dump(2) + "\n";
      if (sp_out.empty()) {
        std::cout << body;
      } else if (!write_file(resolve(sp_out), body)) {
        std::cerr << "cannot write " << resolve(sp_out) << "\n";
        return 2;
      }
      std::cout << "rule " << sp_rule << " n=" << sp_n << ": " << result.pairs.size()
                << " special pairs";
      if (!result.pairwise()) std::cout << " (some dynamics classes exceed two labelings)";
      std::cout << "\n";
      return 0;
    }

    if (classes_cmd->parsed()) {
      const auto& reps = sensync::all_class_representatives();
      for (int rep : reps) {
        std::cout << rep << ":";
        for (int w : sensync::orbit(sensync::LocalRule{std::uint8_t(rep)})) std::cout << " " << w;
        std::cout << "\n";
      }
      if (reps != sensync::published_class_representatives()) {
        std::cerr << "computed representatives differ from the published 88-class list\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
