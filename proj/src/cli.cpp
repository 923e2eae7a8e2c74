#include "sensync/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sensync/dynamics.hpp"
#include "sensync/oracle.hpp"
#include "sensync/special.hpp"

namespace sensync {

namespace {

const std::vector<int> kNonMax19 = {0,  3,  8,  12,  15,  28,  32,  34,  44, 51,
                                    60, 128, 136, 140, 160, 162, 170, 200, 204};

std::vector<int> table1_class(const std::string& cls) {
  if (cls == "I") return {0, 51, 200, 204};
  if (cls == "II") return {3, 12, 15, 28, 32, 34, 44, 60, 136, 140, 170};
  if (cls == "III") return {8};
  if (cls == "IV") return {128, 160, 162};
  throw std::invalid_argument("unknown table1 class: " + cls);
}

}  // namespace

std::vector<int> parse_rule_spec(const std::string& spec) {
  std::set<int> rules;
  if (spec == "all") {
    for (int w = 0; w < 256; ++w) rules.insert(w);
  } else if (spec == "reps88") {
    for (int w : all_class_representatives()) rules.insert(w);
  } else if (spec == "nonmax19") {
    rules.insert(kNonMax19.begin(), kNonMax19.end());
  } else if (spec.rfind("table1:", 0) == 0) {
    for (int w : table1_class(spec.substr(7))) rules.insert(w);
  } else {
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      int w = -1;
      try {
        w = std::stoi(tok, &pos);
      } catch (const std::exception&) {
      }
      if (pos != tok.size() || w < 0 || w > 255)
        throw std::invalid_argument("invalid rule spec token: '" + tok + "'");
      rules.insert(w);
    }
    if (rules.empty()) throw std::invalid_argument("empty rule spec");
  }
  return {rules.begin(), rules.end()};
}

std::vector<ScanRow> scan(const std::vector<int>& rules, int n_lo, int n_hi) {
  std::vector<int> sorted = rules;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ScanRow> rows;
  for (int w : sorted) {
    const LocalRule rule{std::uint8_t(w)};
    for (int n = n_lo; n <= n_hi; ++n) {
      const SensitivityReport rep = sensitivity(rule, n);
      ScanRow row;
      row.rule = w;
      row.n = n;
      row.num_dynamics = rep.num_dynamics;
      row.num_classes = rep.num_classes;
      std::tie(row.sensitivity_num, row.sensitivity_den) = rep.value();
      row.sensitivity_float = rep.value_float();
      row.rule_class = to_string(classify(rule, n));
      const auto cf = closed_form(rule, n);
      row.closed_form_match =
          !cf ? "not_covered" : (cf->num_dynamics == rep.num_dynamics ? "yes" : "no");
      rows.push_back(row);
    }
  }
  return rows;
}

std::string render_csv(const std::vector<ScanRow>& rows) {
  std::string out =
      "rule,n,num_dynamics,num_classes,sensitivity_num,sensitivity_den,"
      "sensitivity_float,class,closed_form_match\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%lld,%lld,%lld,%lld,%.6f,%s,%s\n", r.rule, r.n,
                  r.num_dynamics, r.num_classes, r.sensitivity_num, r.sensitivity_den,
                  r.sensitivity_float, r.rule_class.c_str(), r.closed_form_match.c_str());
    out += buf;
  }
  return out;
}

std::string render_json(const std::vector<ScanRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    j.push_back({{"rule", r.rule},
                 {"n", r.n},
                 {"num_dynamics", r.num_dynamics},
                 {"num_classes", r.num_classes},
                 {"sensitivity_num", r.sensitivity_num},
                 {"sensitivity_den", r.sensitivity_den},
                 {"sensitivity_float", r.sensitivity_float},
                 {"class", r.rule_class},
                 {"closed_form_match", r.closed_form_match}});
  }
  return j.dump(2) + "\n";
}

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, long long expected,
           long long actual) {
  CheckResult c{name, expected == actual, ""};
  if (!c.passed)
    c.detail = "expected " + std::to_string(expected) + ", got " + std::to_string(actual);
  out.push_back(std::move(c));
}

void check_bool(std::vector<CheckResult>& out, const std::string& name, bool ok,
                const std::string& detail = "") {
  out.push_back({name, ok, ok ? "" : detail});
}

std::vector<CheckResult> suite_counts() {
  std::vector<CheckResult> out;
  for (int n = 3; n <= 8; ++n)
    check(out, "valid labelings n=" + std::to_string(n), valid_labeling_count(n),
          (long long)enumerate_valid_labelings(n).size());
  return out;
}

std::vector<CheckResult> suite_table1() {
  std::vector<CheckResult> out;
  for (int w : kNonMax19) {
    const LocalRule rule{std::uint8_t(w)};
    const int lo = std::max(5, *closed_form_threshold(rule));
    for (int n = lo; n <= 9; ++n) {
      const auto cf = closed_form(rule, n);
      check(out, "rule " + std::to_string(w) + " n=" + std::to_string(n), cf->num_dynamics,
            count_distinct_dynamics(rule, n));
    }
  }
  return out;
}

std::vector<CheckResult> suite_lucas() {
  std::vector<CheckResult> out;
  for (int n = 1; n <= 12; ++n)
    check(out, "cyclic word sum n=" + std::to_string(n), lucas_bisection(n),
          oracle::cyclic_word_sum(n));
  return out;
}

std::vector<CheckResult> suite_special() {
  std::vector<CheckResult> out;
  const auto run = [&](int w, int n, long long expected_pairs) {
    const LocalRule rule{std::uint8_t(w)};
    const auto result = find_special_pairs(rule, n);
    const std::string tag = "rule " + std::to_string(w) + " n=" + std::to_string(n);
    check(out, tag + " pair count", expected_pairs, (long long)result.pairs.size());
    check_bool(out, tag + " pairwise classes", result.pairwise(), "a dynamics class has >2 labelings");
    check_bool(out, tag + " disjoint", pairs_disjoint(result), "a labeling occurs in two pairs");
    check_bool(out, tag + " closure", verify_closure(result, rule),
               "pair set not closed under rotation/reflection");
    bool one_arc = true;
    for (const auto& p : result.pairs) one_arc &= p.differing_arcs.size() == 1;
    check_bool(out, tag + " one-arc differences", one_arc, "a pair differs on more than one arc");
  };
  // at n=6 the 10n count deficit already holds (543 dynamics) but the
  // collapsed classes are not all pairs, so only the theorem range is
  // checked pairwise
  check(out, "rule 128 n=6 dynamics count", valid_labeling_count(6) - 60,
        count_distinct_dynamics(LocalRule{128}, 6));
  run(128, 7, 70);
  run(128, 8, 80);
  for (int n = 3; n <= 8; ++n) run(162, n, n);
  run(160, 9, 108);
  return out;
}

std::vector<CheckResult> suite_oracle() {
  std::vector<CheckResult> out;
  for (int n = 1; n <= 7; ++n) {
    long long streamed = 0;
    oracle::enumerate_ordered_partitions(n, [&](const OrderedPartition&) { ++streamed; });
    check(out, "ordered partition count n=" + std::to_string(n), oracle::ordered_bell(n),
          streamed);
  }
  for (int n : {4, 5})
    for (int w : all_class_representatives())
      check(out, "naive vs labeling count, rule " + std::to_string(w) + " n=" + std::to_string(n),
            oracle::naive_dynamics_count(LocalRule{std::uint8_t(w)}, n),
            count_distinct_dynamics(LocalRule{std::uint8_t(w)}, n));
  for (int n : {5, 6})
    check(out, "rule 8 count vs cyclic sum, n=" + std::to_string(n),
          oracle::cyclic_word_sum(n) - (1LL << n),
          count_distinct_dynamics(LocalRule{8}, n));
  return out;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
  if (suite == "counts") return suite_counts();
  if (suite == "table1") return suite_table1();
  if (suite == "lucas") return suite_lucas();
  if (suite == "special") return suite_special();
  if (suite == "oracle") return suite_oracle();
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"counts", "table1", "lucas", "special", "oracle"}) {
      auto part = run_verify_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace sensync
