#include "rpf/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "rpf/pak_stanley.hpp"

namespace rpf {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Iterates all words of [m]^n in lexicographic order.
template <typename F>
void for_each_word(int m, int n, F&& fn) {
  std::vector<int> letters(n, 0);
  while (true) {
    fn(ParkingWord{m, letters});
    int i = n - 1;
    while (i >= 0 && letters[i] == m - 1) letters[i--] = 0;
    if (i < 0) break;
    ++letters[i];
  }
}

template <typename F>
void for_each_monotone_word(int m, int n, F&& fn) {
  std::vector<int> letters(n, 0);
  while (true) {
    fn(ParkingWord{m, letters});
    int i = n - 1;
    while (i >= 0 && letters[i] == m - 1) --i;
    if (i < 0) break;
    int v = letters[i] + 1;
    for (int j = i; j < n; ++j) letters[j] = v;
  }
}

// The threshold count written out again so suites do not lean on the words
// module for the quantity under test.
bool parks_by_threshold(const ParkingWord& w) {
  const long long m = w.m, n = w.n();
  for (long long i = 1; i <= m; ++i) {
    long long below = 0;
    for (int v : w.letters)
      if (v < i) ++below;
    if (m * below < i * n) return false;
  }
  return true;
}

std::string describe(const ParkingWord& w) {
  return "word " + render_word(w) + " (m=" + std::to_string(w.m) +
         ",n=" + std::to_string(w.n()) + ")";
}

std::string describe(const InvariantSet& s) {
  std::string out = "set min=" + std::to_string(s.min) + " gaps={";
  for (size_t i = 0; i < s.gaps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.gaps[i]);
  }
  return out + "}";
}

// Random exact point with denominator dividing m: m uniform draws recentred
// to sum zero.
WeylPoint sample_point(int m, std::mt19937_64& rng, int span) {
  std::uniform_int_distribution<long long> dist(0, span);
  std::vector<long long> raw(m);
  for (auto& v : raw) v = dist(rng);
  long long sum = std::accumulate(raw.begin(), raw.end(), 0LL);
  std::vector<long long> num(m);
  for (int i = 0; i < m; ++i) num[i] = m * raw[i] - sum;
  std::sort(num.begin(), num.end());
  return make_weyl_point(m, std::move(num), m);
}

bool interior(const WeylPoint& x) {
  for (int i = 0; i < x.m; ++i)
    for (int j = i + 1; j < x.m; ++j)
      if ((x.num[j] - x.num[i]) % (x.den * x.m) == 0) return false;
  return true;
}

WeylPoint sample_interior_point(int m, std::mt19937_64& rng, int span) {
  for (int tries = 0; tries < 1000; ++tries) {
    WeylPoint x = sample_point(m, rng, span);
    if (interior(x)) return x;
  }
  throw std::logic_error("sampling: no interior point found");
}

// Integer tuple with one entry per residue class mod m, balanced to sum zero.
WeylPoint sample_centroid(int m, std::mt19937_64& rng, int span) {
  std::vector<long long> a(m);
  std::iota(a.begin(), a.end(), 0);
  std::shuffle(a.begin(), a.end(), rng);
  std::uniform_int_distribution<long long> dist(0, span);
  for (auto& v : a) v += m * dist(rng);
  long long sum = std::accumulate(a.begin(), a.end(), 0LL);
  std::vector<long long> num(m);
  for (int i = 0; i < m; ++i) num[i] = m * a[i] - sum;
  std::sort(num.begin(), num.end());
  return make_weyl_point(m, std::move(num), m);
}

std::vector<ParkingWord> parking_words_of(int m, int n) {
  std::vector<ParkingWord> out;
  for_each_word(m, n, [&](const ParkingWord& w) {
    if (parks_by_threshold(w)) out.push_back(w);
  });
  return out;
}

// All gap sets in [1, bound] closed under subtracting m and n, as
// 0-normalized sets in gap-lexicographic order.
void closed_gap_sets_rec(int m, int n, long long bound, long long next,
                         std::vector<long long>& gaps, std::vector<InvariantSet>& out) {
  out.push_back(InvariantSet{0, gaps});
  for (long long g = next; g <= bound; ++g) {
    bool ok_m = g - m < 0 || std::binary_search(gaps.begin(), gaps.end(), g - m);
    bool ok_n = g - n < 0 || std::binary_search(gaps.begin(), gaps.end(), g - n);
    if (!ok_m || !ok_n) continue;
    gaps.push_back(g);
    closed_gap_sets_rec(m, n, bound, g + 1, gaps, out);
    gaps.pop_back();
  }
}

}  // namespace

SuiteReport cross_check_parking(int m, int n, long long budget) {
  auto t0 = Clock::now();
  SuiteReport rep;
  rep.suite = "parking-fixed-point";
  rep.params = "m=" + std::to_string(m) + " n=" + std::to_string(n);
  if (budget <= 0) budget = default_budget(m, n);
  for_each_word(m, n, [&](const ParkingWord& w) {
    ++rep.cases;
    bool parks = parks_by_threshold(w);
    OrbitReport orbit = find_fixed_point(w, budget);
    bool fixed = orbit.period && *orbit.period == 1;
    if (parks != fixed)
      rep.failures.push_back(describe(w) + ": parking=" + (parks ? "yes" : "no") +
                             " fixed=" + (fixed ? "yes" : "no"));
  });
  rep.wall_ms = ms_since(t0);
  return rep;
}

std::optional<InvariantSet> find_invariant_witness(const ParkingWord& p,
                                                   long long gap_bound) {
  const int m = p.m, n = p.n();
  std::vector<InvariantSet> candidates;
  if (std::gcd(m, n) == 1) {
    candidates = enumerate_invariant_sets(m, n);
  } else {
    std::vector<long long> gaps;
    closed_gap_sets_rec(m, n, gap_bound, 1, gaps, candidates);
    std::sort(candidates.begin(), candidates.end(),
              [](const InvariantSet& a, const InvariantSet& b) { return a.gaps < b.gaps; });
  }
  for (const InvariantSet& s : candidates) {
    if (act_word_set(s, p).first == shift_set(s, n)) return s;
  }
  return std::nullopt;
}

std::vector<std::string> suite_names() {
  return {"parking-fixed-point", "weak-contraction", "norm-sorting",
          "removal-generators", "skeleton-union",    "monotone-uniqueness",
          "path-bijection",     "fixed-cycle",       "unit-facet",
          "absorption",         "inversion-agreement", "sp-roundtrip"};
}

namespace {

void suite_weak_contraction(SuiteReport& rep, int m, int n, std::mt19937_64& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    WeylPoint u = sample_point(m, rng, 4 * (m + n));
    WeylPoint v = sample_point(m, rng, 4 * (m + n));
    std::uniform_int_distribution<int> letter(0, m - 1);
    std::vector<int> letters(n);
    for (auto& l : letters) l = letter(rng);
    ParkingWord w{m, letters};
    ++rep.cases;
    Rat before = dist2(u, v);
    Rat after = dist2(act_word(u, w).first, act_word(v, w).first);
    if (after > before)
      rep.failures.push_back(describe(w) + ": distance grew from " + before.str() +
                             " to " + after.str());
  }
}

void suite_norm_sorting(SuiteReport& rep, int m, int n, std::mt19937_64& rng) {
  for (int trial = 0; trial < 300; ++trial) {
    WeylPoint u = sample_interior_point(m, rng, 4 * (m + n));
    WeylPoint v = sample_interior_point(m, rng, 4 * (m + n));
    std::uniform_int_distribution<int> letter(0, m - 1);
    int i = letter(rng);
    ++rep.cases;
    auto [iu, sigma_u] = act_letter(u, i);
    auto [iv, sigma_v] = act_letter(v, i);
    bool same_norm = dist2(u, v) == dist2(iu, iv);
    bool same_sigma = sigma_u == sigma_v;
    if (same_norm != same_sigma)
      rep.failures.push_back("letter " + std::to_string(i) + ": norm equality " +
                             (same_norm ? "holds" : "fails") + " but sorting equality " +
                             (same_sigma ? "holds" : "fails"));
  }
}

void suite_removal_generators(SuiteReport& rep, int m, int n) {
  std::vector<InvariantSet> sets = enumerate_invariant_sets(m, n);
  for (const InvariantSet& s : sets) {
    std::vector<long long> ngen_orig = generators(s, n);
    for_each_word(m, n, [&](const ParkingWord& w) {
      InvariantSet cur = s;
      std::vector<long long> removed;
      for (int letter : w.letters) {
        removed.push_back(generators(cur, m)[letter]);
        cur = act_letter_set(cur, letter, m);
      }
      if (cur != shift_set(s, n)) return;
      ++rep.cases;
      InvariantSet step = s;
      for (size_t i = 0; i < removed.size(); ++i) {
        std::vector<long long> ngen_cur = generators(step, n);
        bool in_cur = std::binary_search(ngen_cur.begin(), ngen_cur.end(), removed[i]);
        bool in_orig = std::binary_search(ngen_orig.begin(), ngen_orig.end(), removed[i]);
        if (!is_k_invariant(step, m) || !is_k_invariant(step, n))
          rep.failures.push_back(describe(s) + " " + describe(w) +
                                 ": intermediate lost invariance at step " + std::to_string(i));
        if (!in_cur || !in_orig)
          rep.failures.push_back(describe(s) + " " + describe(w) + ": removed " +
                                 std::to_string(removed[i]) +
                                 " is not an n-generator (current=" + (in_cur ? "yes" : "no") +
                                 ", original=" + (in_orig ? "yes" : "no") + ")");
        step = act_letter_set(step, w.letters[i], m);
      }
    });
  }
}

void suite_skeleton_union(SuiteReport& rep, int m, int n) {
  for (const InvariantSet& s : enumerate_invariant_sets(m, n)) {
    ++rep.cases;
    ParkingWord p = associated_monotone(s, m, n);
    std::set<long long> unioned;
    InvariantSet cur = s;
    for (int i = 0; i <= n; ++i) {
      for (long long g : generators(cur, m)) unioned.insert(g);
      if (i < n) cur = act_letter_set(cur, p.letters[i], m);
    }
    std::set<long long> expected;
    for (const SkeletonEntry& e : skeleton(shift_set(s, n), m, n)) expected.insert(e.value);
    if (unioned != expected)
      rep.failures.push_back(describe(s) + ": generator union differs from shifted skeleton");
  }
}

void suite_monotone_uniqueness(SuiteReport& rep, int m, int n) {
  for (const InvariantSet& s : enumerate_invariant_sets(m, n)) {
    ++rep.cases;
    std::vector<ParkingWord> fixers;
    for_each_monotone_word(m, n, [&](const ParkingWord& w) {
      InvariantSet cur = s;
      for (int letter : w.letters) cur = act_letter_set(cur, letter, m);
      if (cur == shift_set(s, n)) fixers.push_back(w);
    });
    if (fixers.size() != 1)
      rep.failures.push_back(describe(s) + ": " + std::to_string(fixers.size()) +
                             " monotone words shift it");
    else if (fixers[0] != associated_monotone(s, m, n))
      rep.failures.push_back(describe(s) + ": constructed word is not the unique fixer");
  }
}

void suite_path_bijection(SuiteReport& rep, int m, int n) {
  std::vector<InvariantSet> sets = enumerate_invariant_sets(m, n);
  std::map<DyckPath, int> image;
  for (const InvariantSet& s : sets) {
    ++rep.cases;
    DyckPath path = gamma(s, m, n);
    ++image[path];
    ParkingWord mono = associated_monotone(s, m, n);
    if (path.heights != mono.letters)
      rep.failures.push_back(describe(s) + ": path word differs from the monotone word");
  }
  std::vector<DyckPath> all = enumerate_dyck_words(m, n);
  if (image.size() != all.size() || image.size() != sets.size())
    rep.failures.push_back("image has " + std::to_string(image.size()) + " paths for " +
                           std::to_string(sets.size()) + " sets, " +
                           std::to_string(all.size()) + " paths exist");
  for (const DyckPath& d : all)
    if (!image.count(d))
      rep.failures.push_back("path " + render_path(d) + " not hit");
}

void suite_fixed_cycle(SuiteReport& rep, int m, int n, long long budget) {
  for (const ParkingWord& w : parking_words_of(m, n)) {
    ++rep.cases;
    auto fixed = fixed_point_of(w, budget);
    if (!fixed) {
      rep.failures.push_back(describe(w) + ": no fixed point found");
      continue;
    }
    Perm sigma = act_word(*fixed, w).second.sigma;
    std::vector<int> sizes = cycle_sizes(sigma);
    if (sizes != std::vector<int>{m})
      rep.failures.push_back(describe(w) + ": permutation at the fixed point is not one m-cycle");
  }
}

void suite_unit_facet(SuiteReport& rep, int m, int n, long long budget) {
  for (const ParkingWord& w : parking_words_of(m, n)) {
    ++rep.cases;
    auto fixed = fixed_point_of(w, budget);
    if (!fixed) {
      rep.failures.push_back(describe(w) + ": no fixed point found");
      continue;
    }
    bool found = false;
    WeylPoint cur = *fixed;
    for (int k = 1; k < n && !found; ++k) {
      cur = act_letter(cur, w.letters[k - 1]).first;
      for (int i = 0; i + 1 < m; ++i)
        if (cur.num[i + 1] - cur.num[i] == cur.den) found = true;
    }
    if (!found)
      rep.failures.push_back(describe(w) + ": no intermediate with adjacent coordinates 1 apart");
  }
}

void suite_absorption(SuiteReport& rep, int m, int n, std::uint64_t seed, long long budget) {
  std::mt19937_64 rng(seed);
  for (const ParkingWord& w : parking_words_of(m, n)) {
    auto fixed = fixed_point_of(w, budget);
    if (!fixed) {
      rep.failures.push_back(describe(w) + ": no fixed point found");
      continue;
    }
    for (int trial = 0; trial < 20; ++trial) {
      WeylPoint start = sample_centroid(m, rng, m + n);
      if (in_closed_alcove(start, *fixed)) {
        --trial;  // want exterior starts; the walls exclude almost all draws
        continue;
      }
      ++rep.cases;
      OrbitReport orbit = orbit_analysis(w, start, budget);
      if (!orbit.period) {
        rep.failures.push_back(describe(w) + ": orbit did not settle within budget");
        continue;
      }
      if (!in_closed_alcove(orbit.terminal, *fixed))
        rep.failures.push_back(describe(w) + ": terminal point left the fixed alcove");
    }
  }
}

void suite_inversion_agreement(SuiteReport& rep, int m, int n, long long budget) {
  const long long positions = 50;
  for (const ParkingWord& w : parking_words_of(m, n)) {
    ++rep.cases;
    PlacementResult placed = sp_invert_placement(w, positions);
    SpInvertResult sorted = sp_invert_sorted(w, budget, positions);
    for (long long i = 0; i < positions; ++i) {
      if (placed.U[i] != sorted.V[i]) {
        rep.failures.push_back(describe(w) + ": tables disagree at position " +
                               std::to_string(i));
        break;
      }
    }
  }
}

void suite_sp_roundtrip(SuiteReport& rep, int m, int n, long long budget) {
  for (const ParkingWord& w : parking_words_of(m, n)) {
    ++rep.cases;
    SpInvertResult inv = sp_invert_sorted(w, budget);
    if (!is_m_restricted(inv.window, m))
      rep.failures.push_back(describe(w) + ": extracted window is not m-restricted");
    if (sp_forward(inv.window, m) != w)
      rep.failures.push_back(describe(w) + ": round trip failed");
  }
}

}  // namespace

SuiteReport run_suite(const std::string& name, int m, int n, std::uint64_t seed,
                      long long budget) {
  if (budget <= 0) budget = default_budget(m, n);
  if (name == "parking-fixed-point") {
    SuiteReport rep = cross_check_parking(m, n, budget);
    rep.seed = seed;
    return rep;
  }

  auto t0 = Clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.params = "m=" + std::to_string(m) + " n=" + std::to_string(n);
  rep.seed = seed;
  std::mt19937_64 rng(seed);

  if (name == "weak-contraction") {
    suite_weak_contraction(rep, m, n, rng);
  } else if (name == "norm-sorting") {
    suite_norm_sorting(rep, m, n, rng);
  } else if (name == "removal-generators") {
    suite_removal_generators(rep, m, n);
  } else if (name == "skeleton-union") {
    suite_skeleton_union(rep, m, n);
  } else if (name == "monotone-uniqueness") {
    suite_monotone_uniqueness(rep, m, n);
  } else if (name == "path-bijection") {
    suite_path_bijection(rep, m, n);
  } else if (name == "fixed-cycle") {
    suite_fixed_cycle(rep, m, n, budget);
  } else if (name == "unit-facet") {
    suite_unit_facet(rep, m, n, budget);
  } else if (name == "absorption") {
    suite_absorption(rep, m, n, seed, budget);
  } else if (name == "inversion-agreement") {
    suite_inversion_agreement(rep, m, n, budget);
  } else if (name == "sp-roundtrip") {
    suite_sp_roundtrip(rep, m, n, budget);
  } else {
    throw std::invalid_argument("verify: unknown suite '" + name + "'");
  }
  rep.wall_ms = ms_since(t0);
  return rep;
}

}  // namespace rpf
