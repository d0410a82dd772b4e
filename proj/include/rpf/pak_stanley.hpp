#pragma once

#include <optional>
#include <vector>

#include "rpf/weyl.hpp"
#include "rpf/words.hpp"

namespace rpf {

// Two printed forms of the same labeling map differ in the sign of the
// comparison; sec7 counts later values below the current one and is the
// variant the inversion algorithms invert.
enum class SpVariant { sec7, sec24 };

// Word read off a window: letter i counts positions j > i with
// u(i) - u(j) in (0, m) for sec7, u(j) - u(i) in (0, m) for sec24.
ParkingWord sp_forward(const AffineWindow& w, int m, SpVariant variant = SpVariant::sec7);

// Placement table state, exposed so the counter definition can be checked
// against the incremental updates.
struct PlacementState {
  ParkingWord p;                 // extended periodically over positions
  std::vector<long long> U;      // position -> value, -1 while empty
  std::vector<long long> pos_of; // value -> position
  long long next_value = 0;

  int p_at(long long i) const { return p.letters[i % p.n()]; }
  bool filled(long long i) const { return U[i] >= 0; }
};

// Definitional counter: p(i) minus the number of already placed values in
// (alpha - m, alpha) sitting right of position i.
long long t_counter(const PlacementState& st, long long alpha, long long i);

struct PlacementResult {
  std::vector<long long> U;  // first `positions` entries, all filled
  PlacementState state;      // final state, table may extend past `positions`
};

// Places values 0,1,2,... left-to-right under the periodic word until the
// first `positions` table slots are filled. Each value alpha goes to the
// leftmost empty slot i with t_alpha(i) = 0 and i right of alpha - m.
// Throws budget_error when the prefix cannot be filled (non-parking input).
PlacementResult sp_invert_placement(const ParkingWord& p, long long positions);

struct SpInvertResult {
  std::vector<long long> V;        // recorded values, at least N + n of them
  long long N = 0;                 // least multiple of n with S_{N+n} = S_N + n
  AffineWindow window;             // V(N..N+n-1) - N, validated
  std::vector<std::vector<long long>> snapshots;  // S_0, S_n, S_2n, ...
};

// Runs the sorted-state algorithm: S_0 = {0..m-1}; step i removes the
// p(i)-th smallest element alpha, records V(i) = alpha, inserts alpha + m.
// Stops once the snapshot sequence turns affine periodic. min_steps forces
// extra recorded values past detection. Throws invalid_argument for
// non-parking input and budget_error when no period appears in budget
// word-applications.
SpInvertResult sp_invert_sorted(const ParkingWord& p, long long budget,
                                long long min_steps = 0);

// Least k with snapshots[k+1] == snapshots[k] + n, as a step count k*n.
std::optional<long long> detect_affine_period(
    const std::vector<std::vector<long long>>& snapshots, int n);

}  // namespace rpf
