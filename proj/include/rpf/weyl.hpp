#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rpf/rat.hpp"
#include "rpf/words.hpp"

namespace rpf {

// Exact point of the sorted sum-zero chamber: coordinates num[i]/den with
// num weakly increasing, sum zero, gcd(num..., den) = 1.
struct WeylPoint {
  int m = 1;
  std::vector<long long> num;
  long long den = 1;

  Rat coord(int i) const { return Rat(num[i], den); }
  friend bool operator==(const WeylPoint&, const WeylPoint&) = default;
  friend auto operator<=>(const WeylPoint&, const WeylPoint&) = default;
};

WeylPoint make_weyl_point(int m, std::vector<long long> num, long long den);
WeylPoint make_weyl_point(int m, const std::vector<Rat>& coords);

// Same data without the sortedness requirement; used for points attached to
// a specific alcove of the ambient arrangement, where coordinate order
// carries information.
struct AlcovePoint {
  int m = 1;
  std::vector<long long> num;
  long long den = 1;

  friend bool operator==(const AlcovePoint&, const AlcovePoint&) = default;
  friend auto operator<=>(const AlcovePoint&, const AlcovePoint&) = default;
};

// Permutation of {0..m-1} as a slot map: sigma[j] is where slot j goes.
using Perm = std::vector<int>;
Perm identity_perm(int m);
Perm compose(const Perm& after, const Perm& before);  // (after*before)(j) = after[before[j]]
std::vector<int> cycle_sizes(const Perm& p);

struct ActionStep {
  int letter = 0;
  std::vector<long long> pre_sort_num;  // shifted coordinates before resorting
  long long den = 1;
  Perm sigma;
};

struct ActionTrace {
  Perm sigma;  // composite of step permutations, application order
  std::vector<ActionStep> steps;
};

// The shift part of a letter action: add m to slot i, subtract 1 everywhere.
// Returned numerators share x.den.
std::vector<long long> star_shift(const WeylPoint& x, int letter);

// Shift then stable-sort (ties keep pre-shift slot order). The permutation
// maps pre-shift slots to sorted slots.
std::pair<WeylPoint, Perm> act_letter(const WeylPoint& x, int letter);

std::pair<WeylPoint, ActionTrace> act_word(const WeylPoint& x, const ParkingWord& w);

// Removes the letter-th smallest element and inserts it plus `stride`.
// Returns the new sorted state and the removed element. Throws on a
// collision (element + stride already present).
std::pair<std::vector<long long>, long long> act_letter_unbalanced(
    const std::vector<long long>& state, int letter, long long stride);

// The balanced staircase (0,1,...,m-1) minus its mean: the unique
// integer-difference point with distinct residues mod m interior to the
// fundamental alcove.
WeylPoint fundamental_centroid(int m);

// True iff x is sum-zero with all pairwise coordinate differences integral
// and no two coordinates congruent mod m.
bool is_centroid(const WeylPoint& x);
bool is_centroid(const AlcovePoint& x);

struct OrbitReport {
  long long preperiod = 0;
  std::optional<long long> period;  // empty: not detected within budget
  WeylPoint terminal;               // entry point of the cycle when detected
  long long steps_used = 0;         // full-word applications performed
};

long long default_budget(int m, int n);  // 64 * (m+n)^2

// Iterates w from fundamental_centroid(w.m) with exact cycle detection.
OrbitReport find_fixed_point(const ParkingWord& w, long long budget);
OrbitReport orbit_analysis(const ParkingWord& w, const WeylPoint& x, long long budget);

// Fixed point when find_fixed_point lands on a period-1 orbit.
std::optional<WeylPoint> fixed_point_of(const ParkingWord& w, long long budget);

// Partition of coordinate slots by difference class mod d. Valid only for
// points with integral pairwise differences; each block must have size m/d
// with intra-block differences avoiding multiples of m.
std::vector<std::vector<int>> residue_partition(const WeylPoint& x, int d);

// Squared euclidean distance, exact.
Rat dist2(const WeylPoint& a, const WeylPoint& b);

// Closed-alcove membership: y lies in the closure of the alcove containing
// the interior point ref.
bool in_closed_alcove(const WeylPoint& y, const WeylPoint& ref);
bool same_open_alcove(const WeylPoint& a, const WeylPoint& b);

// Window notation for a bijection of Z with w(x+n) = w(x)+n and entry sum
// n(n-1)/2. window[i] = w(i) for i in [0, n).
struct AffineWindow {
  int n = 1;
  std::vector<long long> window;

  friend bool operator==(const AffineWindow&, const AffineWindow&) = default;
  friend auto operator<=>(const AffineWindow&, const AffineWindow&) = default;
};

// Throws invalid_argument naming the violated condition.
void validate_window(const AffineWindow& w);
bool is_valid_window(const AffineWindow& w);

long long window_eval(const AffineWindow& w, long long x);
AffineWindow invert_window(const AffineWindow& w);

// w^{-1}(x) < w^{-1}(x+m) for all x; checking x in [0, n) suffices.
bool is_m_restricted(const AffineWindow& w, int m);
// w(x) < w(x+m) for all x.
bool is_m_stable(const AffineWindow& w, int m);

// Flood fill from the identity window over the n simple moves, keeping
// m-restricted windows. Deterministic sorted output; size is m^{n-1} for
// coprime m, n.
std::vector<AffineWindow> enumerate_sommers_windows(int m, int n,
                                                    long long cap = 1 << 20);

// Centroid of the alcove w(A_0) for a window of length m acting on the
// rank-m chamber: decomposes w into simple moves and applies the matching
// reflections to fundamental_centroid(m).
AlcovePoint centroid_of_alcove(const AffineWindow& w, int m);

}  // namespace rpf
