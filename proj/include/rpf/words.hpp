#pragma once

#include <string>
#include <vector>

#include "rpf/errors.hpp"

namespace rpf {

inline constexpr long long kDefaultEnumCap = 100'000'000;  // words

// A word in [m]^n = {0,...,m-1}^n. letters[i] is the letter applied i-th.
// The compact text form prints letters last-applied-first, so the word with
// letters {0,1,2} renders as "210".
struct ParkingWord {
  int m = 1;
  std::vector<int> letters;

  int n() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const ParkingWord&, const ParkingWord&) = default;
  friend auto operator<=>(const ParkingWord&, const ParkingWord&) = default;
};

// Validates alphabet bound and letter ranges.
ParkingWord make_word(int m, std::vector<int> letters);

// Exact integer form of the threshold test: for every i in 1..m,
// m * #{j : letters[j] < i} >= i * n.
bool is_parking_word(const ParkingWord& w);

bool is_monotone(const ParkingWord& w);

// A monotone parking word viewed as the column heights of a lattice path in
// an m-high, n-wide grid staying weakly below the diagonal.
// heights[0] <= ... <= heights[n-1], matching letter application order.
struct DyckPath {
  int m = 1;
  std::vector<int> heights;

  int n() const { return static_cast<int>(heights.size()); }
  ParkingWord word() const { return ParkingWord{m, heights}; }
  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

// Validates monotonicity and the parking condition.
DyckPath make_dyck_path(int m, std::vector<int> heights);

// All parking words of [m]^n, lexicographic by application-order letters.
// Throws budget_error when m^n exceeds cap.
std::vector<ParkingWord> enumerate_parking_words(int m, int n,
                                                 long long cap = kDefaultEnumCap);

// Monotone parking words wrapped as paths, same order and budget rule.
std::vector<DyckPath> enumerate_dyck_words(int m, int n,
                                           long long cap = kDefaultEnumCap);

// Text codecs. Compact digit strings need m <= 10 and are read right-to-left
// into application order; a bracketed list "[2,0,0,0,1]" is read as the
// letters array directly.
ParkingWord parse_word(const std::string& text, int m);
std::string render_word(const ParkingWord& w);
std::string render_path(const DyckPath& d);  // digits in height order

}  // namespace rpf
