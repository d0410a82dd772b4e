#include "rpf/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace rpf {

namespace {

long long vec_gcd(const std::vector<long long>& v, long long d) {
  long long g = d;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g == 0 ? 1 : g;
}

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<long long> orbit_key(const WeylPoint& x) {
  std::vector<long long> k = x.num;
  k.push_back(x.den);
  return k;
}

}  // namespace

WeylPoint make_weyl_point(int m, std::vector<long long> num, long long den) {
  if (m < 1) throw std::invalid_argument("point: rank must be positive");
  if (static_cast<int>(num.size()) != m)
    throw std::invalid_argument("point: expected " + std::to_string(m) + " coordinates");
  if (den <= 0) throw std::invalid_argument("point: denominator must be positive");
  if (!std::is_sorted(num.begin(), num.end()))
    throw std::invalid_argument("point: coordinates must be weakly increasing");
  if (std::accumulate(num.begin(), num.end(), 0LL) != 0)
    throw std::invalid_argument("point: coordinates must sum to zero");
  long long g = vec_gcd(num, den);
  if (g > 1) {
    for (auto& v : num) v /= g;
    den /= g;
  }
  return WeylPoint{m, std::move(num), den};
}

WeylPoint make_weyl_point(int m, const std::vector<Rat>& coords) {
  long long den = 1;
  for (const Rat& c : coords) den = std::lcm(den, c.den);
  std::vector<long long> num(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) num[i] = coords[i].num * (den / coords[i].den);
  return make_weyl_point(m, std::move(num), den);
}

Perm identity_perm(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& after, const Perm& before) {
  Perm r(before.size());
  for (size_t j = 0; j < before.size(); ++j) r[j] = after[before[j]];
  return r;
}

std::vector<int> cycle_sizes(const Perm& p) {
  std::vector<int> sizes;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    sizes.push_back(len);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<long long> star_shift(const WeylPoint& x, int letter) {
  if (letter < 0 || letter >= x.m)
    throw std::invalid_argument("act: letter " + std::to_string(letter) + " out of range");
  std::vector<long long> num = x.num;
  for (auto& v : num) v -= x.den;
  num[letter] += static_cast<long long>(x.m) * x.den;
  return num;
}

std::pair<WeylPoint, Perm> act_letter(const WeylPoint& x, int letter) {
  std::vector<long long> shifted = star_shift(x, letter);
  const int m = x.m;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return shifted[a] < shifted[b]; });
  Perm sigma(m);
  std::vector<long long> sorted(m);
  for (int rank = 0; rank < m; ++rank) {
    sigma[order[rank]] = rank;
    sorted[rank] = shifted[order[rank]];
  }
  return {make_weyl_point(m, std::move(sorted), x.den), std::move(sigma)};
}

std::pair<WeylPoint, ActionTrace> act_word(const WeylPoint& x, const ParkingWord& w) {
  if (w.m != x.m) throw std::invalid_argument("act: word alphabet does not match point rank");
  ActionTrace trace;
  trace.sigma = identity_perm(x.m);
  WeylPoint cur = x;
  for (int letter : w.letters) {
    std::vector<long long> shifted = star_shift(cur, letter);
    long long den = cur.den;
    auto [next, sigma] = act_letter(cur, letter);
    trace.steps.push_back(ActionStep{letter, std::move(shifted), den, sigma});
    trace.sigma = compose(sigma, trace.sigma);
    cur = std::move(next);
  }
  return {std::move(cur), std::move(trace)};
}

std::pair<std::vector<long long>, long long> act_letter_unbalanced(
    const std::vector<long long>& state, int letter, long long stride) {
  const int m = static_cast<int>(state.size());
  if (letter < 0 || letter >= m)
    throw std::invalid_argument("act: letter " + std::to_string(letter) + " out of range");
  long long removed = state[letter];
  std::vector<long long> next;
  next.reserve(state.size());
  for (int i = 0; i < m; ++i)
    if (i != letter) next.push_back(state[i]);
  long long inserted = removed + stride;
  auto it = std::lower_bound(next.begin(), next.end(), inserted);
  if (it != next.end() && *it == inserted)
    throw std::domain_error("act: element " + std::to_string(inserted) +
                            " already present after shift");
  next.insert(it, inserted);
  return {std::move(next), removed};
}

WeylPoint fundamental_centroid(int m) {
  if (m < 2) throw std::invalid_argument("centroid: rank must be at least 2");
  std::vector<long long> num(m);
  for (int i = 0; i < m; ++i) num[i] = 2LL * i - (m - 1);
  return make_weyl_point(m, std::move(num), 2);
}

namespace {

bool is_centroid_coords(const std::vector<long long>& num, long long den, int m) {
  if (std::accumulate(num.begin(), num.end(), 0LL) != 0) return false;
  // pairwise differences integral <=> all residues of num mod den agree
  for (size_t i = 1; i < num.size(); ++i) {
    if ((num[i] - num[0]) % den != 0) return false;
  }
  for (size_t i = 0; i < num.size(); ++i)
    for (size_t j = i + 1; j < num.size(); ++j) {
      long long diff = (num[j] - num[i]) / den;
      if (diff % m == 0) return false;
    }
  return true;
}

}  // namespace

bool is_centroid(const WeylPoint& x) { return is_centroid_coords(x.num, x.den, x.m); }
bool is_centroid(const AlcovePoint& x) { return is_centroid_coords(x.num, x.den, x.m); }

long long default_budget(int m, int n) {
  long long s = m + n;
  return 64 * s * s;
}

namespace {

OrbitReport run_orbit(const ParkingWord& w, const WeylPoint& start, long long budget) {
  if (budget < 1) throw std::invalid_argument("orbit: budget must be at least 1");
  std::map<std::vector<long long>, long long> seen;
  WeylPoint cur = start;
  long long step = 0;
  seen.emplace(orbit_key(cur), 0);
  while (step < budget) {
    cur = act_word(cur, w).first;
    ++step;
    auto [it, fresh] = seen.emplace(orbit_key(cur), step);
    if (!fresh) {
      OrbitReport r;
      r.preperiod = it->second;
      r.period = step - it->second;
      r.terminal = cur;
      r.steps_used = step;
      return r;
    }
  }
  OrbitReport r;
  r.preperiod = step;
  r.period = std::nullopt;
  r.terminal = cur;
  r.steps_used = step;
  return r;
}

}  // namespace

OrbitReport find_fixed_point(const ParkingWord& w, long long budget) {
  return run_orbit(w, fundamental_centroid(w.m), budget);
}

OrbitReport orbit_analysis(const ParkingWord& w, const WeylPoint& x, long long budget) {
  if (w.m != x.m) throw std::invalid_argument("orbit: word alphabet does not match point rank");
  return run_orbit(w, x, budget);
}

std::optional<WeylPoint> fixed_point_of(const ParkingWord& w, long long budget) {
  OrbitReport r = find_fixed_point(w, budget);
  if (r.period && *r.period == 1) return r.terminal;
  return std::nullopt;
}

std::vector<std::vector<int>> residue_partition(const WeylPoint& x, int d) {
  if (d < 1 || x.m % d != 0)
    throw std::invalid_argument("partition: d must divide the rank");
  for (size_t i = 1; i < x.num.size(); ++i)
    if ((x.num[i] - x.num[0]) % x.den != 0)
      throw std::domain_error("partition: coordinate differences are not integral");

  std::vector<std::vector<int>> blocks;
  std::map<long long, int> block_of_residue;
  for (int i = 0; i < x.m; ++i) {
    long long diff = (x.num[i] - x.num[0]) / x.den;
    long long r = ((diff % d) + d) % d;
    auto it = block_of_residue.find(r);
    if (it == block_of_residue.end()) {
      block_of_residue.emplace(r, static_cast<int>(blocks.size()));
      blocks.push_back({i});
    } else {
      blocks[it->second].push_back(i);
    }
  }
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != x.m / d)
      throw std::domain_error("partition: block sizes are not m/d");
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        long long diff = (x.num[b[j]] - x.num[b[i]]) / x.den;
        if (diff % x.m == 0)
          throw std::domain_error("partition: intra-block difference divisible by m");
      }
  }
  return blocks;
}

Rat dist2(const WeylPoint& a, const WeylPoint& b) {
  if (a.m != b.m) throw std::invalid_argument("dist2: rank mismatch");
  Rat sum(0);
  for (int i = 0; i < a.m; ++i) {
    Rat diff = a.coord(i) - b.coord(i);
    sum = sum + diff * diff;
  }
  return sum;
}

bool in_closed_alcove(const WeylPoint& y, const WeylPoint& ref) {
  if (y.m != ref.m) throw std::invalid_argument("alcove: rank mismatch");
  const long long m = ref.m;
  for (int i = 0; i < ref.m; ++i)
    for (int j = i + 1; j < ref.m; ++j) {
      long long k = floordiv(ref.num[j] - ref.num[i], ref.den * m);
      long long ydiff = y.num[j] - y.num[i];
      if (ydiff < k * m * y.den || ydiff > (k + 1) * m * y.den) return false;
    }
  return true;
}

bool same_open_alcove(const WeylPoint& a, const WeylPoint& b) {
  if (a.m != b.m) throw std::invalid_argument("alcove: rank mismatch");
  const long long m = a.m;
  for (int i = 0; i < a.m; ++i)
    for (int j = i + 1; j < a.m; ++j) {
      long long da = a.num[j] - a.num[i];
      long long db = b.num[j] - b.num[i];
      if (da % (a.den * m) == 0 || db % (b.den * m) == 0) return false;  // on a wall
      if (floordiv(da, a.den * m) != floordiv(db, b.den * m)) return false;
    }
  return true;
}

void validate_window(const AffineWindow& w) {
  const long long n = w.n;
  if (n < 1 || static_cast<long long>(w.window.size()) != n)
    throw std::invalid_argument("window: expected " + std::to_string(n) + " entries");
  std::set<long long> residues;
  for (long long v : w.window) residues.insert(((v % n) + n) % n);
  if (static_cast<long long>(residues.size()) != n)
    throw std::invalid_argument("window: residue collision");
  long long sum = std::accumulate(w.window.begin(), w.window.end(), 0LL);
  if (sum != n * (n - 1) / 2)
    throw std::invalid_argument("window: entries sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(n * (n - 1) / 2));
}

bool is_valid_window(const AffineWindow& w) {
  try {
    validate_window(w);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

long long window_eval(const AffineWindow& w, long long x) {
  const long long n = w.n;
  long long r = ((x % n) + n) % n;
  return w.window[r] + (x - r);
}

AffineWindow invert_window(const AffineWindow& w) {
  validate_window(w);
  const long long n = w.n;
  std::vector<long long> inv(n);
  for (long long j = 0; j < n; ++j) {
    long long r = ((w.window[j] % n) + n) % n;
    inv[r] = j + r - w.window[j];
  }
  return AffineWindow{w.n, std::move(inv)};
}

bool is_m_restricted(const AffineWindow& w, int m) {
  AffineWindow inv = invert_window(w);
  for (long long x = 0; x < w.n; ++x)
    if (window_eval(inv, x) >= window_eval(inv, x + m)) return false;
  return true;
}

bool is_m_stable(const AffineWindow& w, int m) {
  validate_window(w);
  for (long long x = 0; x < w.n; ++x)
    if (window_eval(w, x) >= window_eval(w, x + m)) return false;
  return true;
}

namespace {

// Right multiplication by the simple moves: i >= 1 swaps window entries
// i-1, i; move 0 wraps the ends across one period.
AffineWindow apply_simple(const AffineWindow& w, int i) {
  AffineWindow r = w;
  if (i == 0) {
    r.window[0] = w.window[w.n - 1] - w.n;
    r.window[w.n - 1] = w.window[0] + w.n;
  } else {
    std::swap(r.window[i - 1], r.window[i]);
  }
  return r;
}

bool has_descent(const AffineWindow& w, int i) {
  if (i == 0) return w.window[w.n - 1] - w.n > w.window[0];
  return w.window[i - 1] > w.window[i];
}

}  // namespace

std::vector<AffineWindow> enumerate_sommers_windows(int m, int n, long long cap) {
  if (m < 1 || n < 1) throw std::invalid_argument("sommers: m, n must be positive");
  AffineWindow id{n, {}};
  id.window.resize(n);
  std::iota(id.window.begin(), id.window.end(), 0);

  std::set<std::vector<long long>> visited;
  std::vector<AffineWindow> queue{id};
  visited.insert(id.window);
  for (size_t head = 0; head < queue.size(); ++head) {
    AffineWindow cur = queue[head];
    for (int i = 0; i < n; ++i) {
      AffineWindow next = apply_simple(cur, i);
      if (visited.count(next.window)) continue;
      if (!is_m_restricted(next, m)) continue;
      visited.insert(next.window);
      queue.push_back(std::move(next));
      if (static_cast<long long>(queue.size()) > cap)
        throw budget_error("sommers: window count exceeds cap");
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

AlcovePoint centroid_of_alcove(const AffineWindow& w, int m) {
  validate_window(w);
  if (w.n != m)
    throw std::invalid_argument("centroid: window length must equal the rank");

  // Peel descents until the identity; w = s_{i_k} ... s_{i_1} with i_1
  // recorded first, so the matching reflections apply in recorded order.
  std::vector<int> word;
  AffineWindow cur = w;
  AffineWindow id{m, {}};
  id.window.resize(m);
  std::iota(id.window.begin(), id.window.end(), 0);
  long long guard = 0;
  while (cur.window != id.window) {
    int descent = -1;
    for (int i = 0; i < m; ++i)
      if (has_descent(cur, i)) {
        descent = i;
        break;
      }
    if (descent < 0) throw std::logic_error("centroid: no descent off the identity");
    cur = apply_simple(cur, descent);
    word.push_back(descent);
    if (++guard > 1'000'000) throw budget_error("centroid: decomposition too long");
  }

  WeylPoint c0 = fundamental_centroid(m);
  AlcovePoint p{m, c0.num, c0.den};
  for (int gen : word) {
    if (gen == 0) {
      long long a = p.num[0], b = p.num[m - 1];
      p.num[0] = b - static_cast<long long>(m) * p.den;
      p.num[m - 1] = a + static_cast<long long>(m) * p.den;
    } else {
      std::swap(p.num[gen - 1], p.num[gen]);
    }
  }
  return p;
}

}  // namespace rpf
