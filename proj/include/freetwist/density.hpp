#pragma once

// Monte Carlo and exact estimates of asymptotic densities: coprime integer
// tuples, mean reciprocal gcd, remnant genericity and image densities.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "freetwist/homomorphism.hpp"

namespace freetwist {

struct ZetaValue {
  int s = 0;
  double value = 0.0;
  double error_bound = 0.0;  // |value - zeta(s)| <= error_bound
};

/// Riemann zeta at an integer s >= 2 from a partial sum with the tail
/// bracketed between two integrals; value takes the bracket midpoint.
ZetaValue zeta(int s);

/// Samples are split into shards of this size; shard k draws from a stream
/// seeded by (seed, k), so estimates do not depend on the worker count.
inline constexpr std::uint64_t kShardSize = 4096;

struct SamplingOptions {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct ExperimentResult {
  std::string experiment;
  std::vector<std::pair<std::string, long long>> parameters;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::optional<double> reference;
  std::optional<double> elapsed_ms;  // only set on request; keeps output byte-stable
};

nlohmann::ordered_json to_json(const ExperimentResult& r);

/// gcd of an integer tuple; 0 for the all-zero tuple.
long tuple_gcd(std::span<const long> tuple);

/// Fraction of n-tuples uniform in [-p, p]^n with gcd 1. The all-zero tuple
/// counts as not coprime. Reference 1/zeta(n).
ExperimentResult coprime_density_experiment(int n, long p, const SamplingOptions& opts);

/// Mean of 1/gcd over n-tuples uniform in [-p, p]^n; the all-zero tuple
/// contributes 0. Reference zeta(n+1)/zeta(n).
ExperimentResult expected_gcd_reciprocal_experiment(int n, long p, const SamplingOptions& opts);

/// Fraction of uniformly drawn homomorphisms F_n -> F_m (images from the
/// ball of radius p) whose remnant length is at least l. Rejects m = 1.
ExperimentResult remnant_density_experiment(Rank n, Rank m, unsigned l, unsigned p,
                                            const SamplingOptions& opts);

/// Upper bound 16n(2n-1)^-ceil(l/2) on the density of the image of a
/// homomorphism into F_n with remnant length l (vacuous 16n when l = 0).
double image_density_bound(int n, unsigned l);

/// Fraction of words uniform in the ball of radius p of the codomain that lie
/// in phi(G). phi must have remnant so that membership is decidable.
ExperimentResult image_density_experiment(const FreeHomomorphism& phi, unsigned p,
                                          const SamplingOptions& opts);

/// Average image density over the maps Z -> Z of degree in [-p, p]:
/// 2 H_p / (2p + 1), exactly.
mpq_class rank1_rank1_expected_density(unsigned long p);

}  // namespace freetwist
