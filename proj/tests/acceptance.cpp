// Acceptance run: one PASS/FAIL line per criterion, with wall time against its limit.
// Usage: acceptance <path to contact binary> <scratch directory>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "contact/suite.hpp"

using namespace contact;

namespace {

struct Plan {
  int criterion;
  std::vector<int> ns;
  int samples;
  bool negative_controls;
  double limit_seconds;
};

struct Outcome {
  bool pass = true;
  int rows = 0;
  long cases = 0;
  std::string first_failure;
};

Outcome run_plan(const Plan& plan) {
  Outcome out;
  const Criterion& crit = acceptance_criteria().at(static_cast<std::size_t>(plan.criterion - 1));
  for (int n : plan.ns) {
    SuiteConfig cfg;
    cfg.n = n;
    cfg.seed = 7;
    cfg.samples = plan.samples;
    cfg.degree_bound = 3;
    cfg.negative_controls = plan.negative_controls;
    for (Suite s : crit.suites) {
      for (const CheckResult& r : run_suite(s, cfg)) {
        ++out.rows;
        out.cases += r.cases;
        if (!r.pass() && out.pass) {
          out.pass = false;
          out.first_failure = r.suite + "/" + r.name + " n=" + std::to_string(n) + ": " + r.detail;
        }
      }
    }
  }
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// limit <= 0: no runtime limit
void report(int id, const std::string& title, bool pass, double seconds, double limit, const std::string& note) {
  const std::string bound = limit > 0 ? std::to_string(static_cast<int>(limit)) + " s" : "no limit";
  std::printf("criterion %d: %s  %-28s %7.2f s / %-8s  %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), seconds, bound.c_str(),
              note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <contact binary> <scratch dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path scratch = argv[2];
  std::filesystem::create_directories(scratch);

  // criterion 1 needs at least 200 random forms over n = 1..3
  const std::vector<Plan> plans = {
      {1, {1, 2, 3}, 70, false, 30},  {2, {1, 2, 3}, 50, false, 30}, {3, {1, 2}, 1, false, 30},
      {4, {1, 2}, 50, false, 60},     {5, {1, 2}, 50, true, 120},    {6, {1, 2}, 1, false, 300},
      {7, {1, 2}, 1, false, 600},
  };

  bool all = true;
  for (const Plan& plan : plans) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = run_plan(plan);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && o.rows > 0 && seconds < plan.limit_seconds;
    std::ostringstream note;
    note << o.rows << " checks, " << o.cases << " cases";
    if (!o.first_failure.empty()) note << "; first failure " << o.first_failure;
    if (seconds >= plan.limit_seconds) note << "; over time limit";
    report(plan.criterion, acceptance_criteria()[static_cast<std::size_t>(plan.criterion - 1)].title, pass, seconds,
           plan.limit_seconds, note.str());
    all = all && pass;
  }

  {
    const auto start = std::chrono::steady_clock::now();
    const std::filesystem::path first = scratch / "selftest_1.json";
    const std::filesystem::path second = scratch / "selftest_2.json";
    const int rc1 = std::system(("\"" + cli + "\" selftest -o \"" + first.string() + "\"").c_str());
    const int rc2 = std::system(("\"" + cli + "\" selftest -o \"" + second.string() + "\"").c_str());
    const std::string a = slurp(first);
    const std::string b = slurp(second);
    const bool identical = !a.empty() && a == b;
    const bool versioned = a.find("\"schema_version\"") != std::string::npos;
    const bool pass = rc1 == 0 && rc2 == 0 && identical && versioned;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream note;
    note << "exit " << rc1 << "," << rc2 << "; " << (identical ? "identical" : "different") << " reports, " << a.size()
         << " bytes" << (versioned ? "" : "; no schema_version");
    report(8, "selftest", pass, seconds, 0, note.str());
    all = all && pass;
  }

  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
