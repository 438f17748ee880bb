#pragma once

// Counting, enumerating and sampling the ball H_p of reduced words of length
// at most p.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "freetwist/word.hpp"

namespace freetwist {

using Rng = std::mt19937_64;

/// Number of reduced words of length exactly i: 1 for i = 0, else 2n(2n-1)^(i-1).
mpz_class sphere_size(Rank rank, unsigned i);

/// Number of reduced words of length at most p.
mpz_class ball_size(Rank rank, unsigned p);

/// Uniform sampler over the ball of radius p. Holds the length
/// distribution so repeated draws do not rebuild it.
class BallSampler {
 public:
  BallSampler(Rank rank, unsigned radius);

  Word operator()(Rng& rng) const;

  Rank rank() const { return rank_; }
  unsigned radius() const { return radius_; }

 private:
  Rank rank_;
  unsigned radius_;
  std::vector<double> cumulative_;  // cumulative_[L] = P(length <= L)
};

/// One uniform draw from the ball of radius p.
Word sample_word(Rank rank, unsigned p, Rng& rng);

/// Streams every reduced word of length <= max_length exactly once in
/// length-lex order (a < A < b < B < ...).
///
/// The partitioned form yields only the nonempty words starting with
/// `first`, in the same relative order; the 2n partitions together with the
/// identity cover the ball.
class BallEnumerator {
 public:
  BallEnumerator(Rank rank, unsigned max_length);
  BallEnumerator(Rank rank, unsigned max_length, Letter first);

  std::optional<Word> next();

 private:
  void start_length(unsigned length);
  bool advance();
  int smallest_after(int previous) const;

  Rank rank_;
  unsigned max_length_;
  std::optional<Letter> first_;
  unsigned length_ = 0;
  std::vector<int> digits_;  // order indices of the current word
  bool pending_ = true;      // digits_ holds a word not yet returned
  bool done_ = false;
};

/// Materialized BallEnumerator output.
std::vector<Word> enumerate_ball(Rank rank, unsigned max_length);

}  // namespace freetwist
