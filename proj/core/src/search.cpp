#include "j4free/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "j4free/number_theory.hpp"
#include "j4free/singer.hpp"
#include "json.hpp"

namespace j4free {

std::vector<std::size_t> ProfileRow::multiset() const {
  auto out = w;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProfileRow> search_profiles(std::uint32_t q, StructureKind structure, unsigned threads) {
  const auto config = singer_structure(structure, q);
  std::vector<std::size_t> ds;
  for (auto d : divisors(config.v)) {
    if (d > 1) ds.push_back(static_cast<std::size_t>(d));
  }
  std::reverse(ds.begin(), ds.end());

  std::vector<ProfileRow> rows(ds.size());
  std::function<void()> evaluate_rows;
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    try {
      evaluate_rows();
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = ds.size();
    }
  };
  evaluate_rows = [&] {
    for (std::size_t i = next++; i < ds.size(); i = next++) {
      const auto od = orbit_decompose(config, ds[i]);
      ProfileRow row;
      row.q = q;
      row.d = od.d;
      row.t = od.t;
      row.w = od.w;
      row.identities_ok = verify_identities(structure, q, od.w).all_ok();
      if (od.d < config.v) {
        const auto pred = predict_profile(structure, q, od.d);
        row.strongest = pred.strongest;
        for (const auto& o : evaluate(pred, od.w)) {
          (o.holds ? row.predictors_matched : row.predictors_failed).push_back(o.name);
        }
      }
      rows[i] = std::move(row);
    }
  };
  unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(ds.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_multiset(const std::vector<std::size_t>& w) {
  auto s = w;
  std::sort(s.begin(), s.end());
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(s[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string profiles_to_tsv(const std::vector<ProfileRow>& rows) {
  std::string out = "q\td\tt\tw_multiset\tpredictors_matched\tidentities_ok\n";
  for (const auto& r : rows) {
    out += std::to_string(r.q) + "\t" + std::to_string(r.d) + "\t" + std::to_string(r.t) + "\t" +
           format_multiset(r.w) + "\t" + join(r.predictors_matched) + "\t" + (r.identities_ok ? "true" : "false") +
           "\n";
  }
  return out;
}

std::string profiles_to_json(const std::vector<ProfileRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["d"] = r.d;
    j["t"] = r.t;
    j["w"] = r.w;
    j["w_multiset"] = format_multiset(r.w);
    j["strongest_prediction"] = std::string(to_string(r.strongest));
    j["predictors_matched"] = r.predictors_matched;
    j["predictors_failed"] = r.predictors_failed;
    j["identities_ok"] = r.identities_ok;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace j4free
