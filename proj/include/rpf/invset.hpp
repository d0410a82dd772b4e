#pragma once

#include <utility>
#include <vector>

#include "rpf/rat.hpp"
#include "rpf/weyl.hpp"
#include "rpf/words.hpp"

namespace rpf {

// Bounded, co-bounded subset of Z: everything at or above `min` except the
// finitely many `gaps` (sorted, strictly above min).
struct InvariantSet {
  long long min = 0;
  std::vector<long long> gaps;

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
  friend auto operator<=>(const InvariantSet&, const InvariantSet&) = default;
};

// Sorts the gap list and validates it (gaps > min, no duplicates).
InvariantSet make_invariant_set(long long min, std::vector<long long> gaps);

bool set_contains(const InvariantSet& s, long long x);
InvariantSet shift_set(const InvariantSet& s, long long k);

// Delta + k is a subset of Delta: every gap g with g-k >= min is a gap.
bool is_k_invariant(const InvariantSet& s, long long k);

// {a in Delta : a-k not in Delta}; exactly k values, one per residue class
// mod k. Throws domain_error when s is not k-invariant.
std::vector<long long> generators(const InvariantSet& s, long long k);

// {a not in Delta : a+k in Delta} = generators - k.
std::vector<long long> cogenerators(const InvariantSet& s, long long k);

enum class SkeletonKind { generator, cogenerator };

struct SkeletonEntry {
  long long value = 0;
  SkeletonKind kind = SkeletonKind::generator;

  friend bool operator==(const SkeletonEntry&, const SkeletonEntry&) = default;
};

// Merged ascending list of m-generators and n-cogenerators. A value shared
// by both lists signals a malformed set and throws.
using Skeleton = std::vector<SkeletonEntry>;
Skeleton skeleton(const InvariantSet& s, int m, int n);

// Removes the j-th smallest m-generator.
InvariantSet act_letter_set(const InvariantSet& s, int j, int m);

// Folds act_letter_set over the word; second element lists the removed
// values in application order.
std::pair<InvariantSet, std::vector<long long>> act_word_set(const InvariantSet& s,
                                                             const ParkingWord& w);

// Sorted m-generators minus their mean; invariant under shifts of s.
WeylPoint phi(const InvariantSet& s, int m);

// The unique monotone word shifting s by n: removes n-generators smallest
// first, recording each one's index among the current m-generators.
ParkingWord associated_monotone(const InvariantSet& s, int m, int n);

// Skeleton-order encoding as a path: walk the skeleton ascending from the
// bottom-right corner, generators go up, cogenerators go left. The column
// heights give the same word associated_monotone builds.
DyckPath gamma(const InvariantSet& s, int m, int n);

bool equivalent(const InvariantSet& a, const InvariantSet& b, int m, int n);

// All 0-normalized (m,n)-invariant sets, coprime m,n only. Gap candidates
// live below (m-1)(n-1).
std::vector<InvariantSet> enumerate_invariant_sets(int m, int n);

// Representative with #missing-above-0 equal to #present-below-0.
InvariantSet balance0(const InvariantSet& s);
InvariantSet normalize0(const InvariantSet& s);

// Split by residue class mod d = gcd(m,n) into d parts, each a 0-balanced
// (m/d, n/d)-invariant set. shifts are the balanced offsets (sum zero);
// shift_mean restores the raw integral offsets part-by-part.
struct Decomposition {
  int d = 1;
  std::vector<InvariantSet> parts;
  std::vector<Rat> shifts;
  Rat shift_mean;

  Rat raw_shift(int i) const { return shifts[i] + shift_mean; }
};

Decomposition decompose(const InvariantSet& s, int m, int n);
InvariantSet reassemble(const Decomposition& dec);
InvariantSet reassemble(const std::vector<InvariantSet>& parts,
                        const std::vector<long long>& raw_shifts, int d);

// Region test for shift vectors against a tuple theta of (m/d, n/d)
// 0-balanced parts: true iff the interleaving order of the shifted, scaled
// part skeletons is identical. A collision throws wall_error.
bool same_region(const std::vector<InvariantSet>& theta, int m, int n,
                 const std::vector<Rat>& x, const std::vector<Rat>& y);

// Sorted union of the shifted, scaled part generators minus its mean.
// Throws domain_error on a coordinate collision.
WeylPoint phi_extended(const std::vector<InvariantSet>& theta, int m, int n,
                       const std::vector<Rat>& shifts);

}  // namespace rpf
