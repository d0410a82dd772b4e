#include "rpf/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rpf {

namespace {

// m^n clamped so the budget comparison never overflows.
long long pow_clamped(int m, int n, long long clamp) {
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > clamp / m) return clamp + 1;
    v *= m;
  }
  return v;
}

}  // namespace

ParkingWord make_word(int m, std::vector<int> letters) {
  if (m < 1) throw std::invalid_argument("word: alphabet bound must be positive");
  for (int v : letters) {
    if (v < 0 || v >= m)
      throw std::invalid_argument("word: letter " + std::to_string(v) +
                                  " outside [0," + std::to_string(m) + ")");
  }
  return ParkingWord{m, std::move(letters)};
}

bool is_parking_word(const ParkingWord& w) {
  const long long m = w.m;
  const long long n = w.n();
  for (long long i = 1; i <= m; ++i) {
    long long below = 0;
    for (int v : w.letters)
      if (v < i) ++below;
    if (m * below < i * n) return false;
  }
  return true;
}

bool is_monotone(const ParkingWord& w) {
  return std::is_sorted(w.letters.begin(), w.letters.end());
}

DyckPath make_dyck_path(int m, std::vector<int> heights) {
  ParkingWord w = make_word(m, heights);
  if (!is_monotone(w)) throw std::invalid_argument("path: heights must be weakly increasing");
  if (!is_parking_word(w)) throw std::invalid_argument("path: heights cross the diagonal");
  return DyckPath{m, std::move(heights)};
}

namespace {

// Backtracking with the best-case prune: all unassigned letters count as 0.
void enumerate_rec(int m, int n, std::vector<int>& prefix,
                   std::vector<int>& below,  // below[i] = #{j : letters[j] < i}
                   std::vector<ParkingWord>& out) {
  const int k = static_cast<int>(prefix.size());
  for (long long i = 1; i <= m; ++i) {
    if (static_cast<long long>(m) * (below[i] + n - k) < i * n) return;
  }
  if (k == n) {
    out.push_back(ParkingWord{m, prefix});
    return;
  }
  for (int v = 0; v < m; ++v) {
    prefix.push_back(v);
    for (int i = v + 1; i <= m; ++i) ++below[i];
    enumerate_rec(m, n, prefix, below, out);
    for (int i = v + 1; i <= m; ++i) --below[i];
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ParkingWord> enumerate_parking_words(int m, int n, long long cap) {
  if (m < 1 || n < 1) throw std::invalid_argument("enumerate: m, n must be positive");
  if (pow_clamped(m, n, cap) > cap)
    throw budget_error("enumerate: m^n exceeds cap " + std::to_string(cap));
  std::vector<ParkingWord> out;
  std::vector<int> prefix;
  std::vector<int> below(m + 1, 0);
  enumerate_rec(m, n, prefix, below, out);
  return out;
}

std::vector<DyckPath> enumerate_dyck_words(int m, int n, long long cap) {
  if (m < 1 || n < 1) throw std::invalid_argument("enumerate: m, n must be positive");
  if (pow_clamped(m, n, cap) > cap)
    throw budget_error("enumerate: m^n exceeds cap " + std::to_string(cap));
  std::vector<DyckPath> out;
  std::vector<int> h(n, 0);
  while (true) {
    ParkingWord w{m, h};
    if (is_parking_word(w)) out.push_back(DyckPath{m, h});
    // next weakly increasing sequence
    int i = n - 1;
    while (i >= 0 && h[i] == m - 1) --i;
    if (i < 0) break;
    int v = h[i] + 1;
    for (int j = i; j < n; ++j) h[j] = v;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParkingWord parse_word(const std::string& text, int m) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("word: empty text");

  std::vector<int> letters;
  if (t.front() == '[') {
    if (t.back() != ']') throw std::invalid_argument("word: unterminated list");
    std::string body = t.substr(1, t.size() - 2);
    if (!body.empty()) {
      size_t pos = 0;
      while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - pos);
        if (item.empty()) throw std::invalid_argument("word: empty list item");
        letters.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
  } else {
    if (m > 10)
      throw std::invalid_argument("word: compact digits need m <= 10, use [..] form");
    letters.reserve(t.size());
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      if (!std::isdigit(static_cast<unsigned char>(*it)))
        throw std::invalid_argument(std::string("word: bad digit '") + *it + "'");
      letters.push_back(*it - '0');
    }
  }
  if (letters.empty()) throw std::invalid_argument("word: no letters");
  return make_word(m, std::move(letters));
}

std::string render_word(const ParkingWord& w) {
  if (w.m <= 10) {
    std::string s;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      s += static_cast<char>('0' + *it);
    return s;
  }
  std::string s = "[";
  for (int i = 0; i < w.n(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.letters[i]);
  }
  return s + "]";
}

std::string render_path(const DyckPath& d) {
  if (d.m <= 10) {
    std::string s;
    for (int h : d.heights) s += static_cast<char>('0' + h);
    return s;
  }
  std::string s = "[";
  for (int i = 0; i < d.n(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.heights[i]);
  }
  return s + "]";
}

}  // namespace rpf
