#pragma once

#include <string>
#include <vector>

#include "contact/exterior.hpp"
#include "contact/form_io.hpp"

namespace contact::testing {

inline DifferentialForm F(const std::string& text, int n) { return parse_form(text, n); }
inline Polynomial P(const std::string& text, int n) { return parse_polynomial(text, n); }

/// Sign of the permutation sorting `seq` (0 if an entry repeats), by counting inversions.
inline int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace contact::testing
