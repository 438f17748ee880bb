#pragma once

// Reduced words in a free group of finite rank.

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freetwist {

/// Malformed user input: bad word text, letter outside the alphabet, bad flags.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two operands live in free groups of different rank.
class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of free generators. Always at least 1.
class Rank {
 public:
  explicit Rank(int n) : n_(n) {
    if (n < 1) throw InputError("rank must be at least 1, got " + std::to_string(n));
  }
  int get() const { return n_; }
  friend bool operator==(Rank, Rank) = default;

 private:
  int n_;
};

/// A generator a_g or its inverse. Stored as the signed index +g / -g.
class Letter {
 public:
  constexpr Letter(int generator, int sign) : value_(sign < 0 ? -generator : generator) {}

  /// Inverse of order_index(): 0 -> a, 1 -> A, 2 -> b, ...
  static constexpr Letter from_order_index(int idx) { return Letter(idx / 2 + 1, idx % 2 ? -1 : 1); }

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr Letter inverse() const { return Letter(generator(), -sign()); }

  // Position in the fixed alphabet order a < A < b < B < ...
  constexpr int order_index() const { return 2 * (generator() - 1) + (value_ < 0 ? 1 : 0); }

  constexpr bool cancels(Letter other) const { return value_ == -other.value_; }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  int value_;
};

/// A freely reduced word. The identity is the empty word.
///
/// Words are immutable values; every constructor reduces, so no code path
/// downstream needs to check reducedness again.
class Word {
 public:
  explicit Word(Rank rank) : rank_(rank) {}

  /// Single generator a_g^sign.
  static Word letter(Rank rank, int generator, int sign = 1);

  Rank rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word& x, const Word& y) {
    return x.rank_ == y.rank_ && x.letters_ == y.letters_;
  }

 private:
  friend Word reduce(std::span<const Letter> raw, Rank rank);
  friend Word concat(const Word& x, const Word& y);
  friend Word invert(const Word& x);

  Word(Rank rank, std::vector<Letter> reduced) : rank_(rank), letters_(std::move(reduced)) {}

  Rank rank_;
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence. Throws InputError when a
/// letter's generator lies outside 1..rank.
Word reduce(std::span<const Letter> raw, Rank rank);

/// Reduced product x*y. Throws RankMismatch.
Word concat(const Word& x, const Word& y);

Word invert(const Word& x);

/// Number of letter pairs removed when x*y is freely reduced.
std::size_t cancellation_len(const Word& x, const Word& y);

/// Length-lex order with letters ranked a < A < b < B < ...
std::strong_ordering length_lex_compare(const Word& x, const Word& y);

/// Parses `word := "1" | (letter ("^" "-"? digits)?)+`, lowercase for a
/// generator and uppercase for its inverse. Whitespace is ignored.
Word parse_word(std::string_view text, Rank rank);

/// Lowercase/uppercase letters without exponent compression; "1" for the
/// identity. Ranks above 26 fall back to "g1 g2' ..." (not parseable).
std::string format_word(const Word& w);

/// Exponent sum of generator `generator` in w.
long exponent_sum(const Word& w, int generator);

}  // namespace freetwist
