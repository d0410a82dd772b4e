#include "rpf/pak_stanley.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rpf {

ParkingWord sp_forward(const AffineWindow& w, int m, SpVariant variant) {
  validate_window(w);
  const long long n = w.n;
  long long spread = *std::max_element(w.window.begin(), w.window.end()) -
                     *std::min_element(w.window.begin(), w.window.end());
  // u(j) can only land in the counted interval while j - i <= spread + n.
  long long horizon = spread + 2 * n;
  std::vector<int> letters(n, 0);
  for (long long i = 0; i < n; ++i) {
    long long ui = window_eval(w, i);
    int count = 0;
    for (long long j = i + 1; j <= i + horizon; ++j) {
      long long diff = variant == SpVariant::sec7 ? ui - window_eval(w, j)
                                                  : window_eval(w, j) - ui;
      if (diff > 0 && diff < m) ++count;
    }
    if (count >= m)
      throw std::domain_error("sp: window outside the map's domain, letter " +
                              std::to_string(count));
    letters[i] = count;
  }
  return make_word(m, std::move(letters));
}

long long t_counter(const PlacementState& st, long long alpha, long long i) {
  if (i < 0 || i >= static_cast<long long>(st.U.size()))
    throw std::invalid_argument("t: position out of table");
  if (st.filled(i) && st.U[i] < alpha)
    throw std::invalid_argument("t: undefined at a position holding a smaller value");
  long long count = 0;
  for (long long beta = std::max(alpha - st.p.m + 1, 0LL); beta < alpha; ++beta) {
    if (beta < static_cast<long long>(st.pos_of.size()) && st.pos_of[beta] > i) ++count;
  }
  return st.p_at(i) - count;
}

PlacementResult sp_invert_placement(const ParkingWord& p, long long positions) {
  if (positions < 1) throw std::invalid_argument("placement: need at least one position");
  bool has_zero = std::find(p.letters.begin(), p.letters.end(), 0) != p.letters.end();
  if (!has_zero)
    throw std::invalid_argument("placement: word has no zero letter, nothing can start");

  const int m = p.m;
  const long long table = positions + static_cast<long long>(p.n() + m + 2) * (m + 2);
  PlacementState st;
  st.p = p;
  st.U.assign(table, -1);

  // t[i] holds the counter for the next value at every empty position.
  std::vector<long long> t(table);
  for (long long i = 0; i < table; ++i) t[i] = st.p_at(i);

  long long filled_below = 0;  // positions 0..filled_below-1 are all filled
  const long long value_cap = table * m + m;
  for (long long alpha = 0;; ++alpha) {
    if (alpha > value_cap)
      throw budget_error("placement: prefix still has holes after " +
                         std::to_string(alpha) + " values");
    long long floor_pos = alpha >= m ? st.pos_of[alpha - m] : -1;
    long long placed_at = -1;
    for (long long i = floor_pos + 1; i < table; ++i) {
      if (st.filled(i)) continue;
      if (t[i] == 0) {
        placed_at = i;
        break;
      }
    }
    if (placed_at < 0)
      throw budget_error("placement: no admissible position inside the table");
    st.U[placed_at] = alpha;
    st.pos_of.push_back(placed_at);
    st.next_value = alpha + 1;

    // counter update for the next value: alpha joins the window, alpha-m+1's
    // predecessor alpha-m leaves it
    for (long long i = 0; i < placed_at; ++i)
      if (!st.filled(i)) --t[i];
    if (alpha >= m) {
      for (long long i = 0; i < st.pos_of[alpha - m]; ++i)
        if (!st.filled(i)) ++t[i];
    }

    while (filled_below < table && st.filled(filled_below)) ++filled_below;
    if (filled_below >= positions) break;
  }

  PlacementResult res;
  res.U.assign(st.U.begin(), st.U.begin() + positions);
  res.state = std::move(st);
  return res;
}

std::optional<long long> detect_affine_period(
    const std::vector<std::vector<long long>>& snapshots, int n) {
  for (size_t k = 0; k + 1 < snapshots.size(); ++k) {
    const auto& a = snapshots[k];
    const auto& b = snapshots[k + 1];
    bool match = a.size() == b.size();
    for (size_t i = 0; match && i < a.size(); ++i) match = b[i] == a[i] + n;
    if (match) return static_cast<long long>(k) * n;
  }
  return std::nullopt;
}

SpInvertResult sp_invert_sorted(const ParkingWord& p, long long budget,
                                long long min_steps) {
  if (!is_parking_word(p))
    throw std::invalid_argument("invert: input is not a parking word");
  const int m = p.m;
  const int n = p.n();

  SpInvertResult res;
  std::vector<long long> state(m);
  std::iota(state.begin(), state.end(), 0);
  res.snapshots.push_back(state);

  std::optional<long long> found;
  long long words = 0;
  while (true) {
    for (int i = 0; i < n; ++i) {
      auto [next, removed] = act_letter_unbalanced(state, p.letters[i], m);
      state = std::move(next);
      res.V.push_back(removed);
    }
    ++words;
    res.snapshots.push_back(state);
    if (!found) found = detect_affine_period(res.snapshots, n);
    if (found && static_cast<long long>(res.V.size()) >= *found + n &&
        static_cast<long long>(res.V.size()) >= min_steps)
      break;
    if (words >= budget && !found)
      throw budget_error("invert: no affine period within " + std::to_string(budget) +
                         " word applications");
  }

  res.N = *found;
  std::vector<long long> win(n);
  for (int j = 0; j < n; ++j) win[j] = res.V[res.N + j] - res.N;
  res.window = AffineWindow{n, std::move(win)};
  validate_window(res.window);
  if (sp_forward(res.window, m) != p)
    throw std::logic_error("invert: extracted window does not map back to the word");
  return res;
}

}  // namespace rpf
