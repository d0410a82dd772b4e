#include "rpf/invset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace rpf {

InvariantSet make_invariant_set(long long min, std::vector<long long> gaps) {
  std::sort(gaps.begin(), gaps.end());
  if (std::adjacent_find(gaps.begin(), gaps.end()) != gaps.end())
    throw std::invalid_argument("set: duplicate gap");
  if (!gaps.empty() && gaps.front() <= min)
    throw std::invalid_argument("set: gaps must lie strictly above the minimum");
  return InvariantSet{min, std::move(gaps)};
}

bool set_contains(const InvariantSet& s, long long x) {
  if (x < s.min) return false;
  return !std::binary_search(s.gaps.begin(), s.gaps.end(), x);
}

InvariantSet shift_set(const InvariantSet& s, long long k) {
  InvariantSet r = s;
  r.min += k;
  for (auto& g : r.gaps) g += k;
  return r;
}

bool is_k_invariant(const InvariantSet& s, long long k) {
  if (k < 1) throw std::invalid_argument("set: invariance order must be positive");
  for (long long g : s.gaps) {
    if (g - k >= s.min && set_contains(s, g - k)) return false;
  }
  return true;
}

std::vector<long long> generators(const InvariantSet& s, long long k) {
  if (!is_k_invariant(s, k))
    throw std::domain_error("set: not " + std::to_string(k) + "-invariant");
  // Above the last gap plus k every element has its predecessor in the set.
  long long upper = (s.gaps.empty() ? s.min - 1 : s.gaps.back()) + k;
  std::vector<long long> gen;
  for (long long a = s.min; a <= upper; ++a)
    if (set_contains(s, a) && !set_contains(s, a - k)) gen.push_back(a);
  return gen;
}

std::vector<long long> cogenerators(const InvariantSet& s, long long k) {
  std::vector<long long> cog = generators(s, k);
  for (auto& v : cog) v -= k;
  return cog;
}

Skeleton skeleton(const InvariantSet& s, int m, int n) {
  std::vector<long long> gen = generators(s, m);
  std::vector<long long> cog = cogenerators(s, n);
  Skeleton out;
  out.reserve(gen.size() + cog.size());
  for (long long v : gen) out.push_back({v, SkeletonKind::generator});
  for (long long v : cog) out.push_back({v, SkeletonKind::cogenerator});
  std::sort(out.begin(), out.end(),
            [](const SkeletonEntry& a, const SkeletonEntry& b) { return a.value < b.value; });
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].value == out[i - 1].value)
      throw std::domain_error("skeleton: generator and cogenerator collide at " +
                              std::to_string(out[i].value));
  return out;
}

InvariantSet act_letter_set(const InvariantSet& s, int j, int m) {
  if (j < 0 || j >= m)
    throw std::invalid_argument("set: letter " + std::to_string(j) + " out of range");
  std::vector<long long> gen = generators(s, m);
  long long removed = gen[j];
  if (removed == s.min) {
    long long next = s.min + 1;
    while (!set_contains(s, next)) ++next;
    std::vector<long long> gaps;
    for (long long g : s.gaps)
      if (g > next) gaps.push_back(g);
    return InvariantSet{next, std::move(gaps)};
  }
  InvariantSet r = s;
  r.gaps.insert(std::lower_bound(r.gaps.begin(), r.gaps.end(), removed), removed);
  return r;
}

std::pair<InvariantSet, std::vector<long long>> act_word_set(const InvariantSet& s,
                                                             const ParkingWord& w) {
  InvariantSet cur = s;
  std::vector<long long> removed;
  removed.reserve(w.n());
  for (int letter : w.letters) {
    long long val = generators(cur, w.m)[letter];
    cur = act_letter_set(cur, letter, w.m);
    removed.push_back(val);
  }
  return {std::move(cur), std::move(removed)};
}

WeylPoint phi(const InvariantSet& s, int m) {
  std::vector<long long> gen = generators(s, m);
  long long sum = std::accumulate(gen.begin(), gen.end(), 0LL);
  std::vector<long long> num(gen.size());
  for (size_t i = 0; i < gen.size(); ++i) num[i] = m * gen[i] - sum;
  return make_weyl_point(m, std::move(num), m);
}

ParkingWord associated_monotone(const InvariantSet& s, int m, int n) {
  std::vector<long long> ngen = generators(s, n);
  InvariantSet cur = s;
  std::vector<int> letters;
  letters.reserve(n);
  for (long long target : ngen) {
    std::vector<long long> mgen = generators(cur, m);
    auto it = std::find(mgen.begin(), mgen.end(), target);
    if (it == mgen.end())
      throw std::domain_error("monotone: n-generator " + std::to_string(target) +
                              " is not a current m-generator");
    int j = static_cast<int>(it - mgen.begin());
    letters.push_back(j);
    cur = act_letter_set(cur, j, m);
  }
  if (cur != shift_set(s, n))
    throw std::domain_error("monotone: construction did not shift the set by n");
  ParkingWord w = make_word(m, std::move(letters));
  if (!is_monotone(w) || !is_parking_word(w))
    throw std::domain_error("monotone: constructed word is not a monotone parking word");
  return w;
}

DyckPath gamma(const InvariantSet& s, int m, int n) {
  Skeleton sk = skeleton(s, m, n);
  // Walk ascending from the bottom-right corner of the m-by-n grid:
  // generators step up, cogenerators step left. Each left step records the
  // current height, giving the column word in application order.
  std::vector<int> heights;
  heights.reserve(n);
  int y = 0;
  for (const SkeletonEntry& e : sk) {
    if (e.kind == SkeletonKind::generator) {
      ++y;
    } else {
      heights.push_back(y);
    }
  }
  if (y != m || static_cast<int>(heights.size()) != n)
    throw std::domain_error("gamma: skeleton has wrong generator/cogenerator counts");
  return make_dyck_path(m, std::move(heights));
}

bool equivalent(const InvariantSet& a, const InvariantSet& b, int m, int n) {
  return gamma(a, m, n) == gamma(b, m, n);
}

namespace {

void enumerate_sets_rec(int m, int n, long long bound, long long next,
                        std::vector<long long>& gaps, std::vector<InvariantSet>& out) {
  out.push_back(InvariantSet{0, gaps});
  for (long long g = next; g < bound; ++g) {
    // closed downward: g-m and g-n must already be gaps or negative
    bool ok_m = g - m < 0 || std::binary_search(gaps.begin(), gaps.end(), g - m);
    bool ok_n = g - n < 0 || std::binary_search(gaps.begin(), gaps.end(), g - n);
    if (!ok_m || !ok_n) continue;
    gaps.push_back(g);
    enumerate_sets_rec(m, n, bound, g + 1, gaps, out);
    gaps.pop_back();
  }
}

}  // namespace

std::vector<InvariantSet> enumerate_invariant_sets(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("enumerate: m, n must be positive");
  if (std::gcd(m, n) != 1)
    throw std::invalid_argument("enumerate: only coprime grids have finitely many 0-normalized sets");
  long long bound = static_cast<long long>(m - 1) * (n - 1);
  std::vector<InvariantSet> out;
  std::vector<long long> gaps;
  enumerate_sets_rec(m, n, bound, 1, gaps, out);
  std::sort(out.begin(), out.end(),
            [](const InvariantSet& a, const InvariantSet& b) { return a.gaps < b.gaps; });
  return out;
}

InvariantSet normalize0(const InvariantSet& s) { return shift_set(s, -s.min); }

namespace {

// #missing at or above 0 minus #present below 0.
long long balance_defect(const InvariantSet& s) {
  long long missing = 0;
  if (s.min > 0) missing += s.min;
  for (long long g : s.gaps)
    if (g >= 0) ++missing;
  long long present = 0;
  if (s.min < 0) {
    for (long long x = s.min; x < 0; ++x)
      if (set_contains(s, x)) ++present;
  }
  return missing - present;
}

}  // namespace

InvariantSet balance0(const InvariantSet& s) {
  long long span = 2 + (s.gaps.empty() ? 0 : s.gaps.back() - s.min);
  InvariantSet found{};
  int hits = 0;
  for (long long t = -span; t <= span; ++t) {
    InvariantSet cand = shift_set(normalize0(s), t);
    if (balance_defect(cand) == 0) {
      found = cand;
      ++hits;
    }
  }
  if (hits != 1) throw std::logic_error("balance: representative not unique");
  return found;
}

Decomposition decompose(const InvariantSet& s, int m, int n) {
  int d = std::gcd(m, n);
  if (d <= 1) throw std::invalid_argument("decompose: gcd(m, n) must exceed 1");
  if (!is_k_invariant(s, m) || !is_k_invariant(s, n))
    throw std::domain_error("decompose: set is not (m, n)-invariant");

  Decomposition dec;
  dec.d = d;
  long long raw_sum = 0;
  std::vector<long long> raw(d);
  long long upper = (s.gaps.empty() ? s.min : s.gaps.back()) + d;
  for (int r = 0; r < d; ++r) {
    // elements congruent to r mod d, rescaled to an (m/d, n/d)-invariant set
    long long first = s.min;
    while (((first % d) + d) % d != r || !set_contains(s, first)) ++first;
    long long qmin = (first - r) / d;
    std::vector<long long> qgaps;
    for (long long x = first + d; x <= upper; x += d)
      if (!set_contains(s, x)) qgaps.push_back((x - r) / d);
    InvariantSet part{qmin, std::move(qgaps)};
    if (!is_k_invariant(part, m / d) || !is_k_invariant(part, n / d))
      throw std::domain_error("decompose: residue class is not invariant");
    InvariantSet balanced = balance0(part);
    long long t = part.min - balanced.min;  // part = balanced + t
    raw[r] = d * t + r;
    raw_sum += raw[r];
    dec.parts.push_back(std::move(balanced));
  }
  dec.shift_mean = Rat(raw_sum, d);
  for (int r = 0; r < d; ++r) dec.shifts.push_back(Rat(raw[r]) - dec.shift_mean);
  return dec;
}

InvariantSet reassemble(const std::vector<InvariantSet>& parts,
                        const std::vector<long long>& raw_shifts, int d) {
  if (static_cast<int>(parts.size()) != d || static_cast<int>(raw_shifts.size()) != d)
    throw std::invalid_argument("reassemble: need d parts and d shifts");
  std::set<long long> residues;
  for (long long x : raw_shifts) residues.insert(((x % d) + d) % d);
  if (static_cast<int>(residues.size()) != d)
    throw std::invalid_argument("reassemble: shifts must cover all residues mod d");

  long long min = d * parts[0].min + raw_shifts[0];
  long long upper = min;
  for (int r = 0; r < d; ++r) {
    min = std::min(min, d * parts[r].min + raw_shifts[r]);
    long long top = d * (parts[r].gaps.empty() ? parts[r].min : parts[r].gaps.back()) +
                    raw_shifts[r];
    upper = std::max(upper, top + d);
  }
  std::vector<long long> gaps;
  for (long long x = min + 1; x <= upper; ++x) {
    bool member = false;
    for (int r = 0; r < d; ++r) {
      long long off = x - raw_shifts[r];
      if (((off % d) + d) % d != 0) continue;
      member = set_contains(parts[r], off / d);
      break;
    }
    if (!member) gaps.push_back(x);
  }
  return InvariantSet{min, std::move(gaps)};
}

InvariantSet reassemble(const Decomposition& dec) {
  std::vector<long long> raw(dec.d);
  for (int r = 0; r < dec.d; ++r) {
    Rat v = dec.raw_shift(r);
    if (!v.is_integer())
      throw std::invalid_argument("reassemble: raw shifts must be integral");
    raw[r] = v.num;
  }
  return reassemble(dec.parts, raw, dec.d);
}

namespace {

// Shifted scaled skeleton entries tagged with their part index, sorted.
std::vector<std::pair<Rat, int>> merged_skeleton(const std::vector<InvariantSet>& theta,
                                                 int m, int n,
                                                 const std::vector<Rat>& shifts) {
  int d = static_cast<int>(theta.size());
  std::vector<std::pair<Rat, int>> entries;
  for (int i = 0; i < d; ++i) {
    for (const SkeletonEntry& e : skeleton(theta[i], m / d, n / d))
      entries.emplace_back(Rat(d * e.value) + shifts[i], i);
  }
  std::sort(entries.begin(), entries.end());
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw wall_error("region: skeleton entries collide at " + entries[i].first.str());
  return entries;
}

}  // namespace

bool same_region(const std::vector<InvariantSet>& theta, int m, int n,
                 const std::vector<Rat>& x, const std::vector<Rat>& y) {
  int d = std::gcd(m, n);
  if (static_cast<int>(theta.size()) != d)
    throw std::invalid_argument("region: expected gcd(m, n) parts");
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("region: expected d shifts");
  auto ex = merged_skeleton(theta, m, n, x);
  auto ey = merged_skeleton(theta, m, n, y);
  for (size_t i = 0; i < ex.size(); ++i)
    if (ex[i].second != ey[i].second) return false;
  return true;
}

WeylPoint phi_extended(const std::vector<InvariantSet>& theta, int m, int n,
                       const std::vector<Rat>& shifts) {
  int d = std::gcd(m, n);
  if (static_cast<int>(theta.size()) != d || static_cast<int>(shifts.size()) != d)
    throw std::invalid_argument("phi: expected gcd(m, n) parts and shifts");
  std::vector<Rat> coords;
  for (int i = 0; i < d; ++i) {
    for (long long a : generators(theta[i], m / d))
      coords.push_back(Rat(d * a) + shifts[i]);
  }
  std::sort(coords.begin(), coords.end());
  for (size_t i = 1; i < coords.size(); ++i)
    if (coords[i] == coords[i - 1])
      throw std::domain_error("phi: coordinate collision at " + coords[i].str());
  Rat mean(0);
  for (const Rat& c : coords) mean = mean + c;
  mean = mean / Rat(static_cast<long long>(coords.size()));
  for (Rat& c : coords) c = c - mean;
  return make_weyl_point(m, coords);
}

}  // namespace rpf
