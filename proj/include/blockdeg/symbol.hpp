#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blockdeg {

/// Unordered pair of strictly increasing rows of non-negative integers.
/// Construction does not reduce; `normalize` gives the canonical
/// representative (no shared leading zero, longer row first, ties broken
/// lexicographically).
struct Symbol {
  std::vector<int> top;
  std::vector<int> bottom;

  friend bool operator==(const Symbol&, const Symbol&) = default;

  /// "0,1,3|2"; an empty row may be written as nothing, "-" or "∅".
  static Symbol parse(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) throw std::invalid_argument("symbol needs a '|' between rows");
    return Symbol{parse_row(text.substr(0, bar)), parse_row(text.substr(bar + 1))};
  }

  [[nodiscard]] std::string str() const { return row_str(top) + "|" + row_str(bottom); }

  /// Rows sorted, every entry non-negative and distinct.
  [[nodiscard]] bool well_formed() const { return row_ok(top) && row_ok(bottom); }

  /// Builds a symbol from rows given in any order; entries are sorted and
  /// must be distinct and non-negative.
  static Symbol from_sets(std::vector<int> top, std::vector<int> bottom) {
    std::sort(top.begin(), top.end());
    std::sort(bottom.begin(), bottom.end());
    Symbol s{std::move(top), std::move(bottom)};
    if (!s.well_formed()) throw std::invalid_argument("symbol rows need distinct non-negative entries: " + s.str());
    return s;
  }

 private:
  static bool row_ok(const std::vector<int>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 0) return false;
      if (i && row[i] <= row[i - 1]) return false;
    }
    return true;
  }

  static std::string row_str(const std::vector<int>& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(row[i]);
    }
    return out;
  }

  static std::vector<int> parse_row(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ') s += c;
    if (s.empty() || s == "-" || s == "\xE2\x88\x85") return {};
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad symbol entry '" + tok + "'");
      }
      if (used != tok.size()) throw std::invalid_argument("bad symbol entry '" + tok + "'");
      out.push_back(v);
    }
    if (!row_ok(out)) throw std::invalid_argument("symbol rows must be strictly increasing and non-negative");
    return out;
  }
};

namespace detail {

/// Drops a common leading zero repeatedly, shifting both rows down by one.
inline void reduce_shift(Symbol& s) {
  while (!s.top.empty() && !s.bottom.empty() && s.top.front() == 0 && s.bottom.front() == 0) {
    s.top.erase(s.top.begin());
    s.bottom.erase(s.bottom.begin());
    for (int& v : s.top) --v;
    for (int& v : s.bottom) --v;
  }
}

}  // namespace detail

inline Symbol normalize(Symbol s) {
  if (!s.well_formed()) throw std::invalid_argument("malformed symbol " + s.str());
  detail::reduce_shift(s);
  const bool swap = s.bottom.size() > s.top.size() || (s.bottom.size() == s.top.size() && s.bottom < s.top);
  if (swap) std::swap(s.top, s.bottom);
  return s;
}

struct RankDefect {
  int rank = 0;
  int defect = 0;
  friend bool operator==(const RankDefect&, const RankDefect&) = default;
};

/// rank = sum of entries - floor(((a+b-1)/2)^2), defect = |a - b|.
inline RankDefect rank_defect(const Symbol& s) {
  const int a = static_cast<int>(s.top.size());
  const int b = static_cast<int>(s.bottom.size());
  int sum = 0;
  for (int v : s.top) sum += v;
  for (int v : s.bottom) sum += v;
  const int t = a + b - 1;
  return {sum - (t * t) / 4, a > b ? a - b : b - a};
}

/// One e-hook removal: y -> y - e inside a row. Entries are (row, y) with
/// row 0 = top. Returns the moves available in a fixed order.
struct SymbolMove {
  int row = 0;
  int y = 0;
};

inline bool contains(const std::vector<int>& row, int v) { return std::binary_search(row.begin(), row.end(), v); }

inline std::vector<SymbolMove> hook_moves(const Symbol& s, int e) {
  std::vector<SymbolMove> out;
  const std::vector<int>* rows[2] = {&s.top, &s.bottom};
  for (int r = 0; r < 2; ++r)
    for (int y : *rows[r])
      if (y - e >= 0 && !contains(*rows[r], y - e)) out.push_back({r, y});
  return out;
}

/// Cohook moves: y leaves one row and y - e enters the other.
inline std::vector<SymbolMove> cohook_moves(const Symbol& s, int e) {
  std::vector<SymbolMove> out;
  const std::vector<int>* rows[2] = {&s.top, &s.bottom};
  for (int r = 0; r < 2; ++r)
    for (int y : *rows[r])
      if (y - e >= 0 && !contains(*rows[1 - r], y - e)) out.push_back({r, y});
  return out;
}

namespace detail {

inline void erase_value(std::vector<int>& row, int v) { row.erase(std::lower_bound(row.begin(), row.end(), v)); }

inline void insert_value(std::vector<int>& row, int v) { row.insert(std::lower_bound(row.begin(), row.end(), v), v); }

}  // namespace detail

/// Applies a move without canonical reordering (only the zero shift), so
/// callers can observe how the row lengths changed.
inline Symbol apply_hook(Symbol s, SymbolMove mv, int e) {
  auto& row = mv.row == 0 ? s.top : s.bottom;
  detail::erase_value(row, mv.y);
  detail::insert_value(row, mv.y - e);
  detail::reduce_shift(s);
  return s;
}

inline Symbol apply_cohook(Symbol s, SymbolMove mv, int e) {
  auto& from = mv.row == 0 ? s.top : s.bottom;
  auto& to = mv.row == 0 ? s.bottom : s.top;
  detail::erase_value(from, mv.y);
  detail::insert_value(to, mv.y - e);
  detail::reduce_shift(s);
  return s;
}

/// Fixpoint of e-hook removal, smallest move first (top row before bottom).
inline Symbol e_core(Symbol s, int e) {
  if (e < 1) throw std::invalid_argument("e_core: e must be positive");
  s = normalize(std::move(s));
  for (auto moves = hook_moves(s, e); !moves.empty(); moves = hook_moves(s, e))
    s = normalize(apply_hook(std::move(s), moves.front(), e));
  return s;
}

inline Symbol e_cocore(Symbol s, int e) {
  if (e < 1) throw std::invalid_argument("e_cocore: e must be positive");
  s = normalize(std::move(s));
  for (auto moves = cohook_moves(s, e); !moves.empty(); moves = cohook_moves(s, e))
    s = normalize(apply_cohook(std::move(s), moves.front(), e));
  return s;
}

}  // namespace blockdeg
