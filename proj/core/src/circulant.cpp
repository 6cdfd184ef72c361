#include "j4free/circulant.hpp"

#include <algorithm>
#include <string>

#include "j4free/error.hpp"
#include "j4free/incidence.hpp"

namespace j4free {
namespace {

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& shifts) {
  std::vector<std::size_t> out;
  out.reserve(shifts.size());
  for (auto s : shifts) out.push_back(s - 1);
  return out;
}

}  // namespace

void place_circulant(Matrix01& m, std::size_t r0, std::size_t c0, std::size_t d,
                     const std::vector<std::size_t>& first_row) {
  for (std::size_t i = 0; i < d; ++i) {
    for (auto s : first_row) m.set(r0 + i, c0 + (s + i) % d);
  }
}

Matrix01 CirculantMatrix::materialize() const {
  Matrix01 m(d, d);
  place_circulant(m, 0, 0, d, zero_based(shifts));
  return m;
}

CirculantMatrix circulant_from_shifts(std::size_t d, std::vector<std::size_t> shifts) {
  if (d == 0) throw Error(Errc::invalid_argument, "circulant order must be positive");
  if (shifts.empty()) throw Error(Errc::invalid_argument, "shift set is empty");
  for (auto s : shifts) {
    if (s < 1 || s > d) {
      throw Error(Errc::shift_out_of_range,
                  "shift " + std::to_string(s) + " outside 1.." + std::to_string(d), {s});
    }
  }
  std::sort(shifts.begin(), shifts.end());
  if (std::adjacent_find(shifts.begin(), shifts.end()) != shifts.end()) {
    throw Error(Errc::invalid_argument, "repeated shift");
  }
  return CirculantMatrix{d, std::move(shifts)};
}

CirculantMatrix shifted_identity(std::size_t d, std::size_t v) { return circulant_from_shifts(d, {v}); }

bool circulant_is_j4_free(const CirculantMatrix& c) {
  std::vector<bool> seen(c.d, false);
  for (std::size_t a = 0; a < c.shifts.size(); ++a) {
    for (std::size_t b = 0; b < c.shifts.size(); ++b) {
      if (a == b) continue;
      const std::size_t diff = (c.shifts[a] + c.d - c.shifts[b]) % c.d;
      if (seen[diff]) return false;
      seen[diff] = true;
    }
  }
  return true;
}

CirculantMatrix reduce(const CirculantMatrix& c, const std::vector<std::size_t>& keep) {
  for (auto s : keep) {
    if (!std::binary_search(c.shifts.begin(), c.shifts.end(), s)) {
      throw Error(Errc::not_a_subset, "shift " + std::to_string(s) + " is not in the parent", {s});
    }
  }
  return circulant_from_shifts(c.d, keep);
}

ComposedMatrix compose_blocks(const BlockLayout& layout, std::size_t d, const CirculantMatrix& parent) {
  if (layout.empty() || layout[0].empty()) throw Error(Errc::empty_grid, "block layout is empty");
  const std::size_t width = layout[0].size();
  Matrix01 m(layout.size() * d, width * d);
  for (std::size_t bi = 0; bi < layout.size(); ++bi) {
    if (layout[bi].size() != width) throw Error(Errc::invalid_argument, "ragged block layout", {bi});
    for (std::size_t bj = 0; bj < width; ++bj) {
      const auto& cell = layout[bi][bj];
      if (!cell) continue;
      for (auto s : *cell) {
        if (!std::binary_search(parent.shifts.begin(), parent.shifts.end(), s) || s > d) {
          throw Error(Errc::subset_out_of_parent,
                      "block (" + std::to_string(bi) + "," + std::to_string(bj) + ") uses shift " +
                          std::to_string(s),
                      {bi, bj});
        }
      }
      auto sorted = *cell;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      place_circulant(m, bi * d, bj * d, d, zero_based(sorted));
    }
  }
  ComposedMatrix out{std::move(m), false};
  out.j4_free = is_j4_free(out.matrix);
  return out;
}

}  // namespace j4free
