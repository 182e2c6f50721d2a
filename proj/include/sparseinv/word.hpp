#pragma once

// Words over X ∪ X⁻¹, cyclic subwords with their zones, and the decision
// procedures for freely/cyclically reduced, primitive and sparse relators.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sparseinv {

/// A signed generator. The code is 2·g for the generator g and 2·g+1 for its
/// inverse, so inversion is a single bit flip.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, bool inverse)
      : code_(2 * generator + (inverse ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter x;
    x.code_ = code;
    return x;
  }

  constexpr std::uint32_t code() const { return code_; }
  constexpr std::uint32_t generator() const { return code_ >> 1; }
  constexpr bool is_inverse() const { return (code_ & 1u) != 0; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }
  constexpr Letter positive() const { return from_code(code_ & ~1u); }

  /// Lowercase for generators, uppercase for inverses; only the first 26
  /// generators have a text form.
  char to_char() const {
    if (generator() >= 26) {
      throw Error(ErrorKind::invalid_argument,
                  "generator " + std::to_string(generator()) +
                      " has no single-character form");
    }
    return static_cast<char>((is_inverse() ? 'A' : 'a') + generator());
  }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint32_t code_ = 0;
};

/// X ∪ X⁻¹ for a fixed number of generators.
struct Alphabet {
  std::uint32_t generator_count = 0;

  constexpr std::uint32_t letter_count() const { return 2 * generator_count; }
  constexpr bool contains(Letter x) const {
    return x.generator() < generator_count;
  }
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(letter_count());
    for (std::uint32_t c = 0; c < letter_count(); ++c) {
      out.push_back(Letter::from_code(c));
    }
    return out;
  }
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses the ASCII form: a–z are generators, A–Z their inverses.
  static Word parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c >= 'a' && c <= 'z') {
        letters.emplace_back(static_cast<std::uint32_t>(c - 'a'), false);
      } else if (c >= 'A' && c <= 'Z') {
        letters.emplace_back(static_cast<std::uint32_t>(c - 'A'), true);
      } else {
        throw ParseError(c, pos);
      }
    }
    return Word(std::move(letters));
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_) {
      s.push_back(x.to_char());
    }
    return s;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter x) { letters_.push_back(x); }

  /// One more than the largest generator index that occurs (0 when empty).
  std::uint32_t generator_count() const {
    std::uint32_t m = 0;
    for (Letter x : letters_) {
      m = std::max(m, x.generator() + 1);
    }
    return m;
  }

  Alphabet alphabet() const { return Alphabet{generator_count()}; }

  Word inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  /// The cyclic conjugate that starts at position k.
  Word rotated(std::size_t k) const {
    if (letters_.empty()) {
      return *this;
    }
    std::vector<Letter> out(letters_);
    std::rotate(out.begin(), out.begin() + (k % out.size()), out.end());
    return Word(std::move(out));
  }

  friend Word operator+(const Word& a, const Word& b) {
    std::vector<Letter> out(a.letters_);
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline bool is_freely_reduced(const Word& u) {
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] == u[i - 1].inverse()) {
      return false;
    }
  }
  return true;
}

inline Word free_reduce(const Word& u) {
  std::vector<Letter> stack;
  stack.reserve(u.size());
  for (Letter x : u) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

inline bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) {
    return false;
  }
  return w.size() < 2 || w[0] != w[w.size() - 1].inverse();
}

/// True iff w is not a proper power u^m with m > 1.
inline bool is_primitive(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) {
    return false;
  }
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) {
      periodic = w[i] == w[i - period];
    }
    if (periodic) {
      return false;
    }
  }
  return true;
}

/// A subset of ℤ/nℤ.
class Zone {
 public:
  Zone() = default;
  explicit Zone(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  void insert(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const {
    return ((bits_[i / 64] >> (i % 64)) & 1u) != 0;
  }
  bool intersects(const Zone& other) const {
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      if ((bits_[k] & other.bits_[k]) != 0) {
        return true;
      }
    }
    return false;
  }
  std::size_t size() const {
    std::size_t c = 0;
    for (auto b : bits_) {
      c += static_cast<std::size_t>(__builtin_popcountll(b));
    }
    return c;
  }
  std::size_t modulus() const { return n_; }
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (contains(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  friend bool operator==(const Zone&, const Zone&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// w(i, j, ε): read clockwise a_i … a_{j−1} when ε = +1, counterclockwise
/// a_{i−1}⁻¹ … a_j⁻¹ when ε = −1.
struct CyclicSubword {
  std::size_t i = 0;
  std::size_t j = 0;
  int eps = 1;
  std::vector<Letter> letters;
  Zone zone;

  std::size_t length() const { return letters.size(); }
  std::string str() const { return Word(letters).str(); }
  std::string notation() const {
    return "w(" + std::to_string(i) + "," + std::to_string(j) + "," +
           (eps > 0 ? "1" : "-1") + ")";
  }
};

namespace detail {
inline std::size_t mod(std::ptrdiff_t a, std::size_t n) {
  auto r = a % static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(r < 0 ? r + static_cast<std::ptrdiff_t>(n)
                                        : r);
}
}  // namespace detail

inline CyclicSubword cyclic_subword(const Word& w, std::ptrdiff_t i,
                                    std::ptrdiff_t j, int eps) {
  const std::size_t n = w.size();
  if (n == 0) {
    throw Error(ErrorKind::invalid_argument, "cyclic subword of empty word");
  }
  if (eps != 1 && eps != -1) {
    throw Error(ErrorKind::invalid_argument, "eps must be +1 or -1");
  }
  CyclicSubword q;
  q.i = detail::mod(i, n);
  q.j = detail::mod(j, n);
  q.eps = eps;
  const std::size_t len =
      eps > 0 ? detail::mod(static_cast<std::ptrdiff_t>(q.j) -
                                static_cast<std::ptrdiff_t>(q.i),
                            n)
              : detail::mod(static_cast<std::ptrdiff_t>(q.i) -
                                static_cast<std::ptrdiff_t>(q.j),
                            n);
  if (len == 0 || len > n - 1) {
    throw Error(ErrorKind::invalid_argument,
                "cyclic subword must have length between 1 and n-1");
  }
  q.zone = Zone(n);
  q.letters.reserve(len);
  auto at = static_cast<std::ptrdiff_t>(q.i);
  q.zone.insert(q.i);
  for (std::size_t step = 0; step < len; ++step) {
    if (eps > 0) {
      q.letters.push_back(w[detail::mod(at, n)]);
      ++at;
    } else {
      q.letters.push_back(w[detail::mod(at - 1, n)].inverse());
      --at;
    }
    q.zone.insert(detail::mod(at, n));
  }
  return q;
}

enum class SparseReason {
  sparse,
  not_freely_reduced,
  too_short,
  clause_one,
  clause_two,
};

inline const char* to_string(SparseReason r) {
  switch (r) {
    case SparseReason::sparse: return "sparse";
    case SparseReason::not_freely_reduced: return "not freely reduced";
    case SparseReason::too_short: return "length must exceed 1";
    case SparseReason::clause_one: return "(sparse 1) fails";
    case SparseReason::clause_two: return "(sparse 2) fails";
  }
  return "?";
}

/// Two pairs (q1, q1'), (q2, q2') with q_k = q_k', zone(q_k) ≠ zone(q_k')
/// and 0 ∈ zone(q_k').
struct SparseWitness {
  CyclicSubword q1, q1p, q2, q2p;
};

struct SparseReport {
  bool sparse = false;
  SparseReason reason = SparseReason::sparse;
  std::optional<SparseWitness> witness;

  explicit operator bool() const { return sparse; }
};

namespace detail {

inline bool clause_one_holds(const CyclicSubword& q1, const CyclicSubword& q1p,
                             const CyclicSubword& q2,
                             const CyclicSubword& q2p) {
  return !q1.zone.intersects(q2p.zone) && !q1p.zone.intersects(q2.zone);
}

// i1 − ε1ε1'·i1' ≡ i2 − ε2ε2'·i2' (mod n) is compared on canonical residues.
inline bool clause_two_holds(const CyclicSubword& q1, const CyclicSubword& q1p,
                             const CyclicSubword& q2, const CyclicSubword& q2p,
                             std::size_t n) {
  if (!q1.zone.intersects(q2.zone)) {
    return true;
  }
  const int s1 = q1.eps * q1p.eps;
  const int s2 = q2.eps * q2p.eps;
  if (s1 != s2) {
    return false;
  }
  auto lhs = static_cast<std::ptrdiff_t>(q1.i) -
             s1 * static_cast<std::ptrdiff_t>(q1p.i);
  auto rhs = static_cast<std::ptrdiff_t>(q2.i) -
             s2 * static_cast<std::ptrdiff_t>(q2p.i);
  return mod(lhs, n) == mod(rhs, n);
}

}  // namespace detail

/// Exhaustive sparseness test. Every pair (q, q') meeting the per-pair
/// conditions is collected first; then all ordered pairs of such pairs,
/// including a pair with itself, are checked against both clauses. The first
/// violation found is returned as the witness.
inline SparseReport is_sparse(const Word& w) {
  SparseReport report;
  if (!is_freely_reduced(w)) {
    report.reason = SparseReason::not_freely_reduced;
    return report;
  }
  const std::size_t n = w.size();
  if (n <= 1) {
    report.reason = SparseReason::too_short;
    return report;
  }

  // by_length[len] lists every cyclic subword of that length
  std::vector<std::vector<CyclicSubword>> by_length(n);
  for (int eps : {1, -1}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t len = 1; len < n; ++len) {
        auto j = static_cast<std::ptrdiff_t>(i) +
                 eps * static_cast<std::ptrdiff_t>(len);
        by_length[len].push_back(
            cyclic_subword(w, static_cast<std::ptrdiff_t>(i), j, eps));
      }
    }
  }

  std::vector<std::pair<const CyclicSubword*, const CyclicSubword*>> pairs;
  for (std::size_t len = 1; len < n; ++len) {
    for (const auto& qp : by_length[len]) {
      if (!qp.zone.contains(0)) {
        continue;
      }
      for (const auto& q : by_length[len]) {
        if (q.letters == qp.letters && !(q.zone == qp.zone)) {
          pairs.emplace_back(&q, &qp);
        }
      }
    }
  }

  for (const auto& [q1, q1p] : pairs) {
    for (const auto& [q2, q2p] : pairs) {
      if (!detail::clause_one_holds(*q1, *q1p, *q2, *q2p)) {
        report.reason = SparseReason::clause_one;
        report.witness = SparseWitness{*q1, *q1p, *q2, *q2p};
        return report;
      }
      if (!detail::clause_two_holds(*q1, *q1p, *q2, *q2p, n)) {
        report.reason = SparseReason::clause_two;
        report.witness = SparseWitness{*q1, *q1p, *q2, *q2p};
        return report;
      }
    }
  }
  report.sparse = true;
  return report;
}

}  // namespace sparseinv
