#pragma once

#include <vector>

#include "blasius/rational.hpp"

namespace blasius {

// Inner quasi-solution coefficient tables, parsed once from the JSON data
// file that is embedded at build time (data/blasius_coeffs.json).
struct CoeffData {
  std::vector<Rational> inner_base;                // p_0..p_12
  std::vector<std::vector<Rational>> inner_family; // p_{i,j}, 14 x 6

  // transcription guards: signed numerator / denominator sums mod 1000003
  long numerator_checksum() const;
  long denominator_checksum() const;

  static const CoeffData& instance();
};

}  // namespace blasius
