#include "freetwist/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace freetwist {

namespace {

void require_same_rank(const Word& x, const Word& y, const char* what) {
  if (x.rank() != y.rank()) {
    throw RankMismatch(std::string(what) + ": rank " + std::to_string(x.rank().get()) +
                       " vs rank " + std::to_string(y.rank().get()));
  }
}

// Exponents beyond this are rejected by the parser rather than expanded.
constexpr long kMaxExponent = 1'000'000;

}  // namespace

Word Word::letter(Rank rank, int generator, int sign) {
  const Letter l(generator, sign);
  return reduce(std::span<const Letter>(&l, 1), rank);
}

Word reduce(std::span<const Letter> raw, Rank rank) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l.generator() < 1 || l.generator() > rank.get()) {
      throw InputError("letter with generator index " + std::to_string(l.generator()) +
                       " outside rank " + std::to_string(rank.get()));
    }
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(rank, std::move(out));
}

std::size_t cancellation_len(const Word& x, const Word& y) {
  require_same_rank(x, y, "cancellation_len");
  const auto xs = x.letters();
  const auto ys = y.letters();
  const std::size_t limit = std::min(xs.size(), ys.size());
  std::size_t c = 0;
  while (c < limit && xs[xs.size() - 1 - c].cancels(ys[c])) ++c;
  return c;
}

Word concat(const Word& x, const Word& y) {
  require_same_rank(x, y, "concat");
  const std::size_t c = cancellation_len(x, y);
  std::vector<Letter> out;
  out.reserve(x.length() + y.length() - 2 * c);
  out.insert(out.end(), x.letters_.begin(), x.letters_.end() - static_cast<std::ptrdiff_t>(c));
  out.insert(out.end(), y.letters_.begin() + static_cast<std::ptrdiff_t>(c), y.letters_.end());
  return Word(x.rank_, std::move(out));
}

Word invert(const Word& x) {
  std::vector<Letter> out;
  out.reserve(x.length());
  for (auto it = x.letters_.rbegin(); it != x.letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(x.rank_, std::move(out));
}

std::strong_ordering length_lex_compare(const Word& x, const Word& y) {
  if (auto c = x.length() <=> y.length(); c != 0) return c;
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (auto c = x[i].order_index() <=> y[i].order_index(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Word parse_word(std::string_view text, Rank rank) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) throw InputError("empty word (write \"1\" for the identity)");
  if (compact == "1") return Word(rank);

  std::vector<Letter> raw;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    const char ch = compact[pos];
    if (!std::isalpha(static_cast<unsigned char>(ch))) {
      throw InputError("unexpected character '" + std::string(1, ch) + "' at position " +
                       std::to_string(pos) + " in word \"" + std::string(text) + "\"");
    }
    const bool upper = std::isupper(static_cast<unsigned char>(ch));
    const int generator = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
    if (generator > rank.get()) {
      throw InputError("letter '" + std::string(1, ch) + "' is beyond rank " +
                       std::to_string(rank.get()) + " in word \"" + std::string(text) + "\"");
    }
    ++pos;

    long exponent = 1;
    if (pos < compact.size() && compact[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < compact.size() && compact[pos] == '-') {
        negative = true;
        ++pos;
      }
      const std::size_t digits_start = pos;
      long magnitude = 0;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        magnitude = magnitude * 10 + (compact[pos] - '0');
        if (magnitude > kMaxExponent) {
          throw InputError("exponent too large in word \"" + std::string(text) + "\"");
        }
        ++pos;
      }
      if (pos == digits_start) {
        throw InputError("malformed exponent in word \"" + std::string(text) + "\"");
      }
      exponent = negative ? -magnitude : magnitude;
    }

    const int sign = (upper ? -1 : 1) * (exponent < 0 ? -1 : 1);
    for (long k = 0; k < std::abs(exponent); ++k) raw.emplace_back(generator, sign);
  }
  return reduce(raw, rank);
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  if (w.rank().get() <= 26) {
    out.reserve(w.length());
    for (Letter l : w.letters()) {
      const char base = l.sign() > 0 ? 'a' : 'A';
      out.push_back(static_cast<char>(base + l.generator() - 1));
    }
    return out;
  }
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out.push_back(' ');
    out += "g" + std::to_string(w[i].generator());
    if (w[i].sign() < 0) out.push_back('\'');
  }
  return out;
}

long exponent_sum(const Word& w, int generator) {
  long sum = 0;
  for (Letter l : w.letters()) {
    if (l.generator() == generator) sum += l.sign();
  }
  return sum;
}

}  // namespace freetwist
