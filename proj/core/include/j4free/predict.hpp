#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "j4free/planes.hpp"

namespace j4free {

enum class PredictionKind { exact_sequence, multiset, histogram, constraints, universal };

std::string_view to_string(PredictionKind k);

/// Sorted-order cases for t = 3 in PG(2,q).
enum class ThreeOrbitCase { interleaved, two_low, two_high };

/// Everything the known results say about the profile w_0..w_{t-1} of the
/// subgroup of order d. Only the fields of applicable results are set.
struct Prediction {
  StructureKind structure = StructureKind::projective;
  std::uint32_t q = 0;
  std::size_t d = 0;
  std::size_t t = 0;
  PredictionKind strongest = PredictionKind::universal;
  std::vector<std::string> predictors;

  std::optional<std::vector<std::size_t>> sequence;
  std::optional<std::vector<std::size_t>> multiset;
  std::optional<std::map<std::size_t, std::size_t>> histogram;
  std::optional<ThreeOrbitCase> three_orbit_case;
  std::vector<std::size_t> pair_sums;
  std::optional<std::size_t> max_weight;
  std::optional<std::size_t> max_distinct;
};

struct PredictorOutcome {
  std::string name;
  bool holds = false;
};

/// Throws Errc::not_a_divisor unless 1 < d <= v for the structure.
Prediction predict_profile(StructureKind structure, std::uint32_t q, std::size_t d);

/// Evaluates each applicable predictor of p against a computed profile.
std::vector<PredictorOutcome> evaluate(const Prediction& p, const std::vector<std::size_t>& w);

/// Candidate values of w_i + w_j for t = 3: (2(q+1) +- sqrt(4q - 3s^2)) / 3
/// over integers s with 3s^2 <= 4q and a square discriminant.
std::vector<std::size_t> three_orbit_pair_sums(std::uint32_t q);

}  // namespace j4free
