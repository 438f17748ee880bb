#include "freetwist/ball.hpp"

#include <algorithm>
#include <cmath>

namespace freetwist {

mpz_class sphere_size(Rank rank, unsigned i) {
  if (i == 0) return 1;
  const unsigned long n = static_cast<unsigned long>(rank.get());
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2 * n - 1, i - 1);
  return 2 * n * power;
}

mpz_class ball_size(Rank rank, unsigned p) {
  const unsigned long n = static_cast<unsigned long>(rank.get());
  if (n == 1) return mpz_class(2 * static_cast<unsigned long>(p) + 1);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2 * n - 1, p);
  mpz_class numerator = n * power - 1;
  return numerator / (n - 1);
}

BallSampler::BallSampler(Rank rank, unsigned radius) : rank_(rank), radius_(radius) {
  // Weights relative to the outermost sphere keep everything in range for
  // large radii: |S_L| / (2n-1)^p.
  const double base = 2.0 * rank.get() - 1.0;
  std::vector<double> weights(radius + 1);
  weights[0] = std::pow(base, -static_cast<double>(radius));
  for (unsigned len = 1; len <= radius; ++len) {
    weights[len] = 2.0 * rank.get() * std::pow(base, static_cast<double>(len) - 1.0 - radius);
  }
  cumulative_.resize(radius + 1);
  double total = 0.0;
  for (unsigned len = 0; len <= radius; ++len) {
    total += weights[len];
    cumulative_[len] = total;
  }
  for (double& c : cumulative_) c /= total;
  cumulative_.back() = 1.0;
}

Word BallSampler::operator()(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double x = unit(rng);
  const auto length = static_cast<unsigned>(
      std::upper_bound(cumulative_.begin(), cumulative_.end(), x) - cumulative_.begin());
  const int alphabet = 2 * rank_.get();

  std::vector<Letter> letters;
  letters.reserve(length);
  if (length > 0) {
    std::uniform_int_distribution<int> first(0, alphabet - 1);
    letters.push_back(Letter::from_order_index(first(rng)));
    std::uniform_int_distribution<int> rest(0, alphabet - 2);
    for (unsigned i = 1; i < length; ++i) {
      const int forbidden = letters.back().inverse().order_index();
      int idx = rest(rng);
      if (idx >= forbidden) ++idx;
      letters.push_back(Letter::from_order_index(idx));
    }
  }
  return reduce(letters, rank_);
}

Word sample_word(Rank rank, unsigned p, Rng& rng) { return BallSampler(rank, p)(rng); }

BallEnumerator::BallEnumerator(Rank rank, unsigned max_length)
    : rank_(rank), max_length_(max_length) {
  start_length(0);
}

BallEnumerator::BallEnumerator(Rank rank, unsigned max_length, Letter first)
    : rank_(rank), max_length_(max_length), first_(first) {
  if (first.generator() > rank.get()) throw InputError("partition letter outside rank");
  if (max_length == 0) {
    done_ = true;
    return;
  }
  start_length(1);
}

int BallEnumerator::smallest_after(int previous) const {
  // a (index 0) is valid unless the previous letter is A (index 1).
  return previous == 1 ? 1 : 0;
}

void BallEnumerator::start_length(unsigned length) {
  length_ = length;
  digits_.assign(length, 0);
  if (length > 0) {
    digits_[0] = first_ ? first_->order_index() : 0;
    for (unsigned i = 1; i < length; ++i) digits_[i] = smallest_after(digits_[i - 1]);
  }
  pending_ = true;
}

bool BallEnumerator::advance() {
  const int alphabet = 2 * rank_.get();
  const unsigned lowest = first_ ? 1 : 0;  // position 0 is pinned in a partition
  for (unsigned pos = length_; pos-- > lowest;) {
    int candidate = digits_[pos] + 1;
    if (pos > 0 && candidate == (digits_[pos - 1] ^ 1)) ++candidate;
    if (candidate < alphabet) {
      digits_[pos] = candidate;
      for (unsigned i = pos + 1; i < length_; ++i) digits_[i] = smallest_after(digits_[i - 1]);
      return true;
    }
  }
  return false;
}

std::optional<Word> BallEnumerator::next() {
  if (done_) return std::nullopt;
  if (!pending_) {
    if (!advance()) {
      if (length_ >= max_length_) {
        done_ = true;
        return std::nullopt;
      }
      start_length(length_ + 1);
    }
  }
  pending_ = false;
  std::vector<Letter> letters;
  letters.reserve(length_);
  for (int d : digits_) letters.push_back(Letter::from_order_index(d));
  return reduce(letters, rank_);
}

std::vector<Word> enumerate_ball(Rank rank, unsigned max_length) {
  std::vector<Word> out;
  BallEnumerator it(rank, max_length);
  while (auto w = it.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace freetwist
