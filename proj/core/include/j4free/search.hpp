#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "j4free/planes.hpp"
#include "j4free/predict.hpp"

namespace j4free {

struct ProfileRow {
  std::uint32_t q = 0;
  std::size_t d = 0;
  std::size_t t = 0;
  std::vector<std::size_t> w;
  PredictionKind strongest = PredictionKind::universal;
  std::vector<std::string> predictors_matched;
  std::vector<std::string> predictors_failed;
  bool identities_ok = false;

  std::vector<std::size_t> multiset() const;
};

/// Profiles of every subgroup order d | v with 1 < d <= v (d = v is the
/// trivial one-orbit row), each cross-checked against predict_profile and
/// verify_identities. Divisors are evaluated on up to `threads` workers
/// (0 = hardware concurrency); rows come back ordered by decreasing d.
std::vector<ProfileRow> search_profiles(std::uint32_t q, StructureKind structure, unsigned threads = 0);

/// Compressed multiset notation: sorted values, runs written as value^count.
std::string format_multiset(const std::vector<std::size_t>& w);

std::string profiles_to_tsv(const std::vector<ProfileRow>& rows);
std::string profiles_to_json(const std::vector<ProfileRow>& rows);

}  // namespace j4free
