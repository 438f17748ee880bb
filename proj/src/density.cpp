#include "freetwist/density.hpp"

#include <cfloat>
#include <cmath>
#include <numeric>
#include <thread>

#include "freetwist/ball.hpp"
#include "freetwist/conjugacy.hpp"
#include "freetwist/remnant.hpp"

namespace freetwist {

namespace {

struct Tally {
  double sum = 0.0;
  double sum_sq = 0.0;
};

Rng shard_stream(std::uint64_t seed, std::uint64_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard), static_cast<std::uint32_t>(shard >> 32)};
  return Rng(seq);
}

// Runs `draw(rng) -> double` once per sample. Shards are assigned round-robin
// to workers and reduced in shard order.
template <class Draw>
Tally run_sharded(const SamplingOptions& opts, const Draw& draw) {
  if (opts.samples == 0) throw InputError("samples must be at least 1");
  const std::uint64_t shards = (opts.samples + kShardSize - 1) / kShardSize;
  std::vector<Tally> partial(shards);

  auto work = [&](std::uint64_t first) {
    const std::uint64_t stride = std::max(1u, opts.threads);
    for (std::uint64_t k = first; k < shards; k += stride) {
      Rng rng = shard_stream(opts.seed, k);
      const std::uint64_t begin = k * kShardSize;
      const std::uint64_t end = std::min(opts.samples, begin + kShardSize);
      Tally t;
      for (std::uint64_t i = begin; i < end; ++i) {
        const double x = draw(rng);
        t.sum += x;
        t.sum_sq += x * x;
      }
      partial[k] = t;
    }
  };

  const unsigned workers = std::max(1u, opts.threads);
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  Tally total;
  for (const Tally& t : partial) {
    total.sum += t.sum;
    total.sum_sq += t.sum_sq;
  }
  return total;
}

void fill_proportion(ExperimentResult& r, const Tally& t) {
  const auto n = static_cast<double>(r.samples);
  r.estimate = t.sum / n;
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / n);
}

void fill_mean(ExperimentResult& r, const Tally& t) {
  const auto n = static_cast<double>(r.samples);
  r.estimate = t.sum / n;
  const double var = n > 1 ? std::max(0.0, (t.sum_sq - n * r.estimate * r.estimate) / (n - 1)) : 0.0;
  r.std_error = std::sqrt(var / n);
}

long random_tuple_gcd(Rng& rng, int n, long p) {
  std::uniform_int_distribution<long> coord(-p, p);
  std::vector<long> tuple(static_cast<std::size_t>(n));
  for (long& x : tuple) x = coord(rng);
  return tuple_gcd(tuple);
}

void require_integer_experiment(int n, long p) {
  if (n < 2) throw InputError("integer tuple experiments need n >= 2");
  if (p < 1) throw InputError("p must be at least 1");
}

}  // namespace

ZetaValue zeta(int s) {
  if (s < 2) throw InputError("zeta is evaluated only at integers s >= 2");
  const long double e = static_cast<long double>(s) - 1.0L;
  // Tail sum_{d > N} d^-s lies in [(N+1)^(1-s), N^(1-s)] / (s-1).
  auto tail_upper = [&](long double n) { return std::pow(n, -e) / e; };
  std::uint64_t n = 16;
  while ((tail_upper(n) - tail_upper(n + 1)) / 2 > 1e-11L) n *= 2;

  long double partial = 0.0L;
  for (std::uint64_t d = n; d >= 1; --d) partial += std::pow(static_cast<long double>(d), -static_cast<long double>(s));
  const long double hi = tail_upper(n);
  const long double lo = tail_upper(n + 1);
  const long double value = partial + (hi + lo) / 2;
  const long double rounding = static_cast<long double>(n) * 4 * LDBL_EPSILON * value + DBL_EPSILON * value;
  return {s, static_cast<double>(value), static_cast<double>((hi - lo) / 2 + rounding)};
}

long tuple_gcd(std::span<const long> tuple) {
  long g = 0;
  for (long x : tuple) g = std::gcd(g, x);
  return g;
}

nlohmann::ordered_json to_json(const ExperimentResult& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.parameters) params[key] = value;
  nlohmann::ordered_json j;
  j["experiment"] = r.experiment;
  j["parameters"] = params;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["estimate"] = r.estimate;
  j["std_error"] = r.std_error;
  j["reference"] = r.reference ? nlohmann::ordered_json(*r.reference) : nlohmann::ordered_json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms ? nlohmann::ordered_json(*r.elapsed_ms) : nlohmann::ordered_json(nullptr);
  return j;
}

ExperimentResult coprime_density_experiment(int n, long p, const SamplingOptions& opts) {
  require_integer_experiment(n, p);
  ExperimentResult r{"coprime", {{"n", n}, {"p", p}}, opts.seed, opts.samples, 0, 0, 1.0 / zeta(n).value, {}};
  const Tally t = run_sharded(opts, [&](Rng& rng) { return random_tuple_gcd(rng, n, p) == 1 ? 1.0 : 0.0; });
  fill_proportion(r, t);
  return r;
}

ExperimentResult expected_gcd_reciprocal_experiment(int n, long p, const SamplingOptions& opts) {
  require_integer_experiment(n, p);
  ExperimentResult r{"gcd-mean", {{"n", n}, {"p", p}}, opts.seed, opts.samples, 0, 0,
                     zeta(n + 1).value / zeta(n).value, {}};
  const Tally t = run_sharded(opts, [&](Rng& rng) {
    const long g = random_tuple_gcd(rng, n, p);
    return g == 0 ? 0.0 : 1.0 / static_cast<double>(g);
  });
  fill_mean(r, t);
  return r;
}

ExperimentResult remnant_density_experiment(Rank n, Rank m, unsigned l, unsigned p,
                                            const SamplingOptions& opts) {
  if (m.get() < 2) throw InputError("remnant genericity needs codomain rank m >= 2");
  ExperimentResult r{"remnant-density",
                     {{"n", n.get()}, {"m", m.get()}, {"l", l}, {"p", p}},
                     opts.seed, opts.samples, 0, 0, 1.0, {}};
  const BallSampler sampler(m, p);
  const Tally t = run_sharded(opts, [&](Rng& rng) {
    std::vector<Word> images;
    for (int i = 0; i < n.get(); ++i) images.push_back(sampler(rng));
    const auto len = remnant_report(images).remnant_length;
    return len && *len >= l ? 1.0 : 0.0;
  });
  fill_proportion(r, t);
  return r;
}

double image_density_bound(int n, unsigned l) {
  if (n < 2) throw InputError("image density bound needs codomain rank n >= 2");
  const unsigned k = (l + 1) / 2;
  return 16.0 * n * std::pow(2.0 * n - 1.0, -static_cast<double>(k));
}

ExperimentResult image_density_experiment(const FreeHomomorphism& phi, unsigned p,
                                          const SamplingOptions& opts) {
  const auto l = remnant_length(phi);
  if (!l) throw InputError("image density experiment needs a homomorphism with remnant");
  const Rank m = phi.codomain_rank();
  ExperimentResult r{"image-density",
                     {{"n", phi.domain_rank().get()}, {"m", m.get()}, {"l", static_cast<long long>(*l)}, {"p", p}},
                     opts.seed, opts.samples, 0, 0, std::nullopt, {}};
  if (m.get() >= 2) r.reference = image_density_bound(m.get(), static_cast<unsigned>(*l));
  const BallSampler sampler(m, p);
  const Tally t = run_sharded(opts, [&](Rng& rng) {
    return membership(phi, sampler(rng)).is_conjugate() ? 1.0 : 0.0;
  });
  fill_proportion(r, t);
  return r;
}

namespace {

// sum_{k=a}^{b-1} 1/k as an unreduced fraction, by binary splitting.
void harmonic_range(unsigned long a, unsigned long b, mpz_class& num, mpz_class& den) {
  if (b - a == 1) {
    num = 1;
    den = a;
    return;
  }
  const unsigned long mid = a + (b - a) / 2;
  mpz_class ln, ld, rn, rd;
  harmonic_range(a, mid, ln, ld);
  harmonic_range(mid, b, rn, rd);
  num = ln * rd + rn * ld;
  den = ld * rd;
}

}  // namespace

mpq_class rank1_rank1_expected_density(unsigned long p) {
  if (p < 1) throw InputError("p must be at least 1");
  mpz_class num;
  mpz_class den;
  harmonic_range(1, p + 1, num, den);
  mpq_class result(2 * num, den * (2 * p + 1));
  result.canonicalize();
  return result;
}

}  // namespace freetwist
