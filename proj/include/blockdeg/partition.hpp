#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blockdeg {

/// An integer partition, stored as weakly decreasing positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Parts must already be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts into decreasing order and drops zero parts. Negative parts are an
  /// error. Used for labels written in increasing order.
  static Partition normalized(std::vector<int> parts) {
    for (int v : parts)
      if (v < 0) throw std::invalid_argument("negative partition part");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
  }

  /// "6,3,1"; the empty string (or "-") denotes the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty() || s == "-" || s == "()") return {};
    if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::istringstream in(s);
    while (std::getline(in, token, ',')) {
      if (token.empty()) throw std::invalid_argument("empty part in partition '" + std::string(text) + "'");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad part '" + token + "' in partition");
      }
      if (used != token.size()) throw std::invalid_argument("bad part '" + token + "' in partition");
      parts.push_back(v);
    }
    return Partition(std::move(parts));
  }

  [[nodiscard]] std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] int size() const noexcept {
    int n = 0;
    for (int v : parts_) n += v;
    return n;
  }
  /// Zero beyond the last part.
  [[nodiscard]] int operator[](int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  struct unchecked_t {};
  Partition(unchecked_t, std::vector<int> parts) : parts_(std::move(parts)) {}
  friend class PartitionGenerator;
  friend Partition conjugate(const Partition&);
  friend Partition from_beta_set(std::vector<int>);

  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts())
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(Partition::unchecked_t{}, std::move(out));
}

/// Multiset of hook lengths, one per cell, sorted in decreasing order.
using HookMultiset = std::vector<int>;

inline HookMultiset hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  HookMultiset hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks.push_back(lambda[i] - j + conj[j] - i - 1);
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

/// Number of cells whose hook length is divisible by q. This equals the
/// q-weight, i.e. the number of q-hooks removed on the way to the q-core.
inline int count_hooks_divisible(const Partition& lambda, int q) {
  if (q < 1) throw std::invalid_argument("hook modulus must be positive");
  const Partition conj = conjugate(lambda);
  int count = 0;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      if ((lambda[i] - j + conj[j] - i - 1) % q == 0) ++count;
  return count;
}

/// First-column hook lengths lambda_i + (l - i), i = 1..l; strictly decreasing.
inline std::vector<int> beta_set(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (l - 1 - i);
  return beta;
}

/// Inverse of beta_set for any set of distinct non-negative beads.
inline Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  if (std::adjacent_find(beta.begin(), beta.end()) != beta.end())
    throw std::invalid_argument("beta set has repeated beads");
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  parts.reserve(beta.size());
  for (int i = 0; i < l; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
    if (part < 0) throw std::invalid_argument("negative bead in beta set");
    if (part > 0) parts.push_back(part);
  }
  return Partition(Partition::unchecked_t{}, std::move(parts));
}

/// q-core via bead sliding on the beta set: a bead at b moves to b - q when
/// that position is free. The result does not depend on the order of moves.
inline Partition p_core(const Partition& lambda, int q) {
  if (q < 1) throw std::invalid_argument("core modulus must be positive");
  if (lambda.empty()) return lambda;
  std::vector<int> beta = beta_set(lambda);
  const int top = beta.front();
  std::vector<char> occupied(static_cast<std::size_t>(top) + 1, 0);
  for (int b : beta) occupied[static_cast<std::size_t>(b)] = 1;
  // Per residue class, push every bead as far down its runner as it goes.
  for (int residue = 0; residue < q && residue <= top; ++residue) {
    int beads = 0;
    for (int pos = residue; pos <= top; pos += q)
      if (occupied[static_cast<std::size_t>(pos)]) {
        ++beads;
        occupied[static_cast<std::size_t>(pos)] = 0;
      }
    for (int pos = residue; beads > 0; pos += q, --beads) occupied[static_cast<std::size_t>(pos)] = 1;
  }
  std::vector<int> out;
  out.reserve(beta.size());
  for (int pos = top; pos >= 0; --pos)
    if (occupied[static_cast<std::size_t>(pos)]) out.push_back(pos);
  return from_beta_set(std::move(out));
}

inline bool is_core(const Partition& lambda, int q) { return count_hooks_divisible(lambda, q) == 0; }

/// (gamma_1 + x, gamma_2, ..., gamma_l, 1^y). For the empty gamma the result
/// is (x, 1^y), which is (1^y) when x = 0.
inline Partition star(const Partition& gamma, int x, int y) {
  if (x < 0 || y < 0) throw std::invalid_argument("star arguments must be non-negative");
  std::vector<int> parts = gamma.parts();
  if (parts.empty()) {
    if (x > 0) parts.push_back(x);
  } else {
    parts.front() += x;
  }
  parts.insert(parts.end(), static_cast<std::size_t>(y), 1);
  return Partition(std::move(parts));
}

/// Base-p digits a_0, a_1, ..., a_k of n with a_k != 0 (empty for n = 0).
struct PAdicDigits {
  int base = 2;
  std::vector<int> digits;

  [[nodiscard]] int top_index() const { return static_cast<int>(digits.size()) - 1; }
  [[nodiscard]] int digit(int i) const {
    return i >= 0 && i < static_cast<int>(digits.size()) ? digits[static_cast<std::size_t>(i)] : 0;
  }
  [[nodiscard]] std::int64_t value() const {
    std::int64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
    return v;
  }
};

inline PAdicDigits p_adic_digits(std::int64_t n, int p) {
  if (p < 2) throw std::invalid_argument("p-adic base must be at least 2");
  if (n < 0) throw std::invalid_argument("p-adic expansion of a negative number");
  PAdicDigits out{p, {}};
  while (n > 0) {
    out.digits.push_back(static_cast<int>(n % p));
    n /= p;
  }
  return out;
}

/// Streams the partitions of n in decreasing lexicographic order, starting
/// with (n) and ending with (1^n). n = 0 yields the empty partition once.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative number");
    if (n > 0) current_.parts_.push_back(n);
  }

  [[nodiscard]] const Partition& current() const noexcept { return current_; }
  [[nodiscard]] bool done() const noexcept { return done_; }

  void advance() {
    auto& parts = current_.parts_;
    int freed = 0;
    while (!parts.empty() && parts.back() == 1) {
      ++freed;
      parts.pop_back();
    }
    if (parts.empty()) {
      done_ = true;
      return;
    }
    const int cap = --parts.back();
    ++freed;
    while (freed > 0) {
      const int take = std::min(cap, freed);
      parts.push_back(take);
      freed -= take;
    }
  }

 private:
  int n_;
  bool done_ = false;
  Partition current_;
};

template <class Fn>
void for_each_partition(int n, Fn&& fn) {
  for (PartitionGenerator gen(n); !gen.done(); gen.advance()) fn(gen.current());
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace blockdeg
