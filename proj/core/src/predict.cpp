#include "j4free/predict.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "j4free/error.hpp"
#include "j4free/number_theory.hpp"
#include "j4free/singer.hpp"

namespace j4free {
namespace {

using Profile = std::vector<std::size_t>;

struct Rule {
  std::string name;
  PredictionKind kind;
  std::function<void(Prediction&)> fill;
  std::function<bool(const Profile&)> holds;
};

Profile sorted(Profile w) {
  std::sort(w.begin(), w.end());
  return w;
}

std::map<std::size_t, std::size_t> histogram_of(const Profile& w) {
  std::map<std::size_t, std::size_t> h;
  for (auto x : w) ++h[x];
  return h;
}

// Sign of x - eps*sqrt(q) for integer x and eps in {-1, +1}, computed exactly.
int compare_with_root(std::int64_t x, int eps, std::uint64_t q) {
  const auto sq = static_cast<std::int64_t>(q);
  if (eps > 0) {
    if (x <= 0) return -1;
    return x * x > sq ? 1 : (x * x == sq ? 0 : -1);
  }
  if (x >= 0) return 1;
  return x * x > sq ? -1 : (x * x == sq ? 0 : 1);
}

// Sign of 3w - (q + 1 + eps*sqrt(q)).
int compare_third(std::size_t w, int eps, std::uint64_t q) {
  return compare_with_root(3 * static_cast<std::int64_t>(w) - static_cast<std::int64_t>(q) - 1, eps, q);
}

std::vector<Rule> projective_rules(std::uint32_t q, std::size_t d, std::size_t t) {
  std::vector<Rule> rules;
  const auto pp = require_prime_power(q);
  const std::uint64_t qq = q;
  const auto root = exact_sqrt(q);

  if (root) {
    const std::uint64_t r = *root;
    const std::uint64_t baer = qq + r + 1;
    if (d % baer == 0) {
      const std::size_t m = d / baer;
      Profile seq(t, m);
      seq[0] = r + m;
      rules.push_back({"baer", PredictionKind::exact_sequence,
                       [seq](Prediction& p) { p.sequence = seq; }, [seq](const Profile& w) { return w == seq; }});
    }
    if (t >= 2 && s_orbit_count(pp.p, t) == 1) {
      std::optional<Profile> seq;
      if ((qq + r + 1) % t == 0 && (qq + 1 + r) % t == 0 && (qq + 1 + r) / t >= r) {
        const std::size_t w1 = (qq + 1 + r) / t;
        seq = Profile(t, w1);
        (*seq)[0] = w1 - r;
      } else if ((qq - r + 1) % t == 0 && (qq + 1 - r) % t == 0) {
        const std::size_t w1 = (qq + 1 - r) / t;
        seq = Profile(t, w1);
        (*seq)[0] = w1 + r;
      }
      if (seq) {
        const Profile s = *seq;
        rules.push_back({"transitive_tau", PredictionKind::exact_sequence,
                         [s](Prediction& p) { p.sequence = s; }, [s](const Profile& w) { return w == s; }});
      }
    }
    if (d == qq - r + 1) {
      const std::map<std::size_t, std::size_t> h{{0, (qq + r) / 2}, {1, r + 1}, {2, (qq - r) / 2}};
      rules.push_back({"kestenband_ebert", PredictionKind::histogram, [h](Prediction& p) { p.histogram = h; },
                       [h](const Profile& w) { return histogram_of(w) == h; }});
    }
  }

  if (d == 3) {
    std::map<std::size_t, std::size_t> h;
    if ((qq * qq - 2 * qq + 1) / 3 > 0) h[0] = (qq * qq - 2 * qq + 1) / 3;
    if (q > 1) h[1] = q - 1;
    h[2] = 1;
    rules.push_back({"d_equals_3", PredictionKind::histogram, [h](Prediction& p) { p.histogram = h; },
                     [h](const Profile& w) { return histogram_of(w) == h; }});
  }

  if (t == 3) {
    const bool square = root.has_value();
    const bool p_two = pp.p % 3 == 2;
    if (!square || !p_two) {
      rules.push_back({"three_orbits_interleaved", PredictionKind::constraints,
                       [](Prediction& p) { p.three_orbit_case = ThreeOrbitCase::interleaved; },
                       [qq](const Profile& w) {
                         const auto s = sorted(w);
                         return compare_third(s[0], -1, qq) < 0 && compare_third(s[1], -1, qq) > 0 &&
                                compare_third(s[1], 1, qq) < 0 && compare_third(s[2], 1, qq) > 0;
                       }});
    } else {
      const std::uint64_t r = *root;
      Profile ms;
      ThreeOrbitCase c;
      if (pp.h % 4 == 2) {
        const std::size_t a = (qq - r + 1) / 3, dd = (qq + 2 * r + 1) / 3;
        ms = {a, a, dd};
        c = ThreeOrbitCase::two_low;
      } else {
        const std::size_t cc = (qq - 2 * r + 1) / 3, b = (qq + r + 1) / 3;
        ms = {cc, b, b};
        c = ThreeOrbitCase::two_high;
      }
      rules.push_back({"three_orbits_repeated", PredictionKind::multiset,
                       [ms, c](Prediction& p) {
                         p.multiset = ms;
                         p.three_orbit_case = c;
                       },
                       [ms](const Profile& w) { return sorted(w) == ms; }});
    }
    const auto sums = three_orbit_pair_sums(q);
    rules.push_back({"three_orbit_pair_sums", PredictionKind::constraints,
                     [sums](Prediction& p) { p.pair_sums = sums; },
                     [sums](const Profile& w) {
                       for (std::size_t i = 0; i < w.size(); ++i) {
                         for (std::size_t j = i + 1; j < w.size(); ++j) {
                           if (!std::binary_search(sums.begin(), sums.end(), w[i] + w[j])) return false;
                         }
                       }
                       return true;
                     }});
  }
  return rules;
}

std::vector<Rule> antiflag_rules(std::uint32_t q, std::size_t t) {
  std::vector<Rule> rules;
  const std::uint64_t qq = q;
  if ((qq + 1) % t == 0) {
    const std::size_t big = (qq + 1) / t;
    Profile ms(t, big);
    ms[0] = big - 1;
    rules.push_back({"affine_t_divides_q_plus_1", PredictionKind::multiset,
                     [ms](Prediction& p) { p.multiset = ms; }, [ms](const Profile& w) { return sorted(w) == ms; }});
  }
  if ((qq - 1) % t == 0) {
    const std::size_t bound = 2 * (qq - 1) / t;
    rules.push_back({"affine_t_divides_q_minus_1", PredictionKind::constraints,
                     [bound](Prediction& p) {
                       p.max_weight = bound;
                       p.max_distinct = bound + 1;
                     },
                     [bound](const Profile& w) {
                       // weights lie in 0..bound
                       const std::set<std::size_t> distinct(w.begin(), w.end());
                       return distinct.size() <= bound + 1 &&
                              std::all_of(w.begin(), w.end(), [bound](auto x) { return x <= bound; });
                     }});
  }
  return rules;
}

std::vector<Rule> rules_for(StructureKind structure, std::uint32_t q, std::size_t d, std::size_t& t) {
  require_prime_power(q);
  const std::uint64_t qq = q;
  const std::uint64_t v = structure == StructureKind::projective ? qq * qq + qq + 1 : qq * qq - 1;
  if (d < 2 || v % d != 0) {
    throw Error(Errc::not_a_divisor, std::to_string(d) + " is not a divisor > 1 of " + std::to_string(v), {d});
  }
  t = v / d;
  return structure == StructureKind::projective ? projective_rules(q, d, t) : antiflag_rules(q, t);
}

}  // namespace

std::string_view to_string(PredictionKind k) {
  switch (k) {
    case PredictionKind::exact_sequence: return "exact_sequence";
    case PredictionKind::multiset: return "multiset";
    case PredictionKind::histogram: return "histogram";
    case PredictionKind::constraints: return "constraints";
    case PredictionKind::universal: return "universal";
  }
  return "universal";
}

std::vector<std::size_t> three_orbit_pair_sums(std::uint32_t q) {
  std::set<std::size_t> out;
  const std::int64_t qq = q;
  for (std::int64_t s = 0; 3 * s * s <= 4 * qq; ++s) {
    const auto delta = exact_sqrt(static_cast<std::uint64_t>(4 * qq - 3 * s * s));
    if (!delta) continue;
    const auto r = static_cast<std::int64_t>(*delta);
    for (std::int64_t x : {2 * (qq + 1) + r, 2 * (qq + 1) - r}) {
      if (x >= 0 && x % 3 == 0) out.insert(static_cast<std::size_t>(x / 3));
    }
  }
  return {out.begin(), out.end()};
}

Prediction predict_profile(StructureKind structure, std::uint32_t q, std::size_t d) {
  Prediction p;
  p.structure = structure;
  p.q = q;
  p.d = d;
  const auto rules = rules_for(structure, q, d, p.t);
  for (const auto& r : rules) {
    r.fill(p);
    p.predictors.push_back(r.name);
    if (static_cast<int>(r.kind) < static_cast<int>(p.strongest)) p.strongest = r.kind;
  }
  return p;
}

std::vector<PredictorOutcome> evaluate(const Prediction& p, const std::vector<std::size_t>& w) {
  std::size_t t = 0;
  const auto rules = rules_for(p.structure, p.q, p.d, t);
  if (w.size() != t) throw Error(Errc::length_mismatch, "profile length differs from t");
  std::vector<PredictorOutcome> out;
  for (const auto& r : rules) out.push_back({r.name, r.holds(w)});
  return out;
}

}  // namespace j4free
