#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contact/lefschetz.hpp"

namespace contact {

/// Randomized and exhaustive identity checks, grouped the way `check --only` selects them.
enum class Suite {
  Ring,            // polynomial ring axioms and partial derivatives
  Exactness,       // d^2, wedge, interior product, restriction
  Calculus,        // Lie derivative, contact fields
  Sl2,             // Lefschetz operators and projections
  Worked,          // fixed worked values
  Composition,     // identities between P, d, Q and D
  Equivariance,    // infinitesimal naturality, with negative controls
  Fft,             // sp-only solver against the contraction spanning set
  Classification,  // full-algebra solver against the operator symbols
};

std::string suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

struct SuiteConfig {
  int n = 1;
  std::uint64_t seed = 7;
  int samples = 50;
  int degree_bound = 3;
  bool negative_controls = false;  // also report each control operator as an expected failure
};

struct CheckResult {
  std::string suite;
  std::string name;
  int n = 1;
  int cases = 0;
  int failures = 0;
  bool expected_failure = false;  // negative control: passes when it fails
  std::string detail;             // first failing input, or the observed values

  bool pass() const { return expected_failure ? failures > 0 : failures == 0 && cases > 0; }
};

/// Deterministic for a given config: the seed is mixed with the suite and n,
/// so running one suite alone reproduces its part of a full run.
std::vector<CheckResult> run_suite(Suite suite, const SuiteConfig& config);

/// Acceptance criterion id and the suites that make it up.
struct Criterion {
  int id;
  std::string title;
  std::vector<Suite> suites;
};
const std::vector<Criterion>& acceptance_criteria();

/// Command line that reruns the suite a result came from.
std::string reproduce_command(const CheckResult& result, const SuiteConfig& config);

/// Lefschetz decomposition by an exact linear solve against a basis of the
/// primitive subspaces (nullspace of Lambda), applied monomial by monomial.
/// Independent of the closed-form projections.
LefschetzDecomposition decompose_by_linear_solve(const HorizontalForm& phi);

}  // namespace contact
