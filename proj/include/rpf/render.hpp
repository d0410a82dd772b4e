#pragma once

#include <string>

#include "rpf/invset.hpp"
#include "rpf/weyl.hpp"
#include "rpf/words.hpp"

namespace rpf {

// Fixed 40 px cells, generators blue, cogenerators red. Output depends only
// on the input values.
inline constexpr int kSvgCell = 40;

// m-by-n grid with the diagonal and the column-height path.
std::string render_dyck_svg(const DyckPath& d);

// Doubly periodic box labeling l(x,y) = -n*x - m*y with the staircase
// boundary of the boxes labeled by set members; generator and cogenerator
// labels colored.
std::string render_lattice_svg(const InvariantSet& s, int m, int n);

// Rank-3 only: planar projection of the letter-by-letter orbit of `start`
// under repeated application of w. Throws invalid_argument for m != 3.
std::string render_orbit_svg(const ParkingWord& w, const WeylPoint& start,
                             long long budget);

}  // namespace rpf
