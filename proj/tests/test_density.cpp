#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "freetwist/ball.hpp"
#include "freetwist/conjugacy.hpp"
#include "freetwist/density.hpp"

using namespace freetwist;

namespace {

const Rank kTwo{2};

constexpr double kApery = 1.2020569031595942853997;

SamplingOptions opts(std::uint64_t samples, std::uint64_t seed = 1, unsigned threads = 1) {
  SamplingOptions o;
  o.samples = samples;
  o.seed = seed;
  o.threads = threads;
  return o;
}

// Exact D_p(phi(G)): images of the domain ball that land in the codomain ball.
double exact_image_density(const FreeHomomorphism& phi, unsigned p) {
  std::set<std::string> images;
  for (const Word& z : enumerate_ball(phi.domain_rank(), p)) {
    const Word w = apply(phi, z);
    if (w.length() <= p) images.insert(format_word(w));
  }
  return static_cast<double>(images.size()) / ball_size(phi.codomain_rank(), p).get_d();
}

FreeHomomorphism power_family(int k) {
  return parse_homomorphism("a^" + std::to_string(k) + ",b^" + std::to_string(k), kTwo);
}

}  // namespace

TEST(Zeta, KnownValues) {
  const double pi = std::numbers::pi;
  const auto z2 = zeta(2);
  EXPECT_LE(z2.error_bound, 1e-9);
  EXPECT_NEAR(z2.value, pi * pi / 6, 1e-9);
  EXPECT_LE(std::abs(z2.value - pi * pi / 6), z2.error_bound + 1e-15);

  const auto z3 = zeta(3);
  EXPECT_LE(z3.error_bound, 1e-9);
  EXPECT_NEAR(z3.value, kApery, 1e-9);

  EXPECT_NEAR(zeta(4).value, std::pow(pi, 4) / 90, 1e-9);
  EXPECT_EQ(zeta(5).s, 5);
}

TEST(Zeta, ApproachesOne) {
  double prev = zeta(2).value;
  for (int s = 3; s <= 40; ++s) {
    const double cur = zeta(s).value;
    EXPECT_LT(cur, prev);
    EXPECT_GT(cur, 1.0);
    prev = cur;
  }
  EXPECT_NEAR(prev, 1.0, 1e-11);
}

TEST(Zeta, RejectsSmallArguments) {
  EXPECT_THROW(zeta(1), InputError);
  EXPECT_THROW(zeta(-2), InputError);
}

TEST(TupleGcd, Examples) {
  EXPECT_EQ(tuple_gcd(std::vector<long>{2, 2}), 2);
  EXPECT_EQ(tuple_gcd(std::vector<long>{1, 0}), 1);
  EXPECT_EQ(tuple_gcd(std::vector<long>{-6, 9, 15}), 3);
  EXPECT_EQ(tuple_gcd(std::vector<long>{0, 0, 0}), 0);
}

TEST(IntegerExperiments, References) {
  EXPECT_NEAR(*coprime_density_experiment(2, 10, opts(10)).reference, 0.607927, 1e-6);
  EXPECT_NEAR(*coprime_density_experiment(3, 10, opts(10)).reference, 0.831907, 1e-6);
  EXPECT_NEAR(*expected_gcd_reciprocal_experiment(2, 10, opts(10)).reference, 0.730763, 1e-6);
  EXPECT_NEAR(*expected_gcd_reciprocal_experiment(3, 10, opts(10)).reference, 0.900392, 1e-6);
}

TEST(IntegerExperiments, Validation) {
  EXPECT_THROW(coprime_density_experiment(1, 10, opts(10)), InputError);
  EXPECT_THROW(coprime_density_experiment(2, 0, opts(10)), InputError);
  EXPECT_THROW(coprime_density_experiment(2, 10, opts(0)), InputError);
  EXPECT_THROW(expected_gcd_reciprocal_experiment(2, 0, opts(10)), InputError);
}

TEST(IntegerExperiments, WithinFourStandardErrors) {
  for (int n : {2, 3}) {
    const auto c = coprime_density_experiment(n, 10'000, opts(100'000, 7));
    EXPECT_LE(std::abs(c.estimate - *c.reference), 4 * c.std_error) << "coprime n=" << n;
    const auto g = expected_gcd_reciprocal_experiment(n, 10'000, opts(100'000, 7));
    EXPECT_LE(std::abs(g.estimate - *g.reference), 4 * g.std_error) << "gcd-mean n=" << n;
  }
}

TEST(IntegerExperiments, StandardErrorIsBinomial) {
  const auto c = coprime_density_experiment(2, 1000, opts(5000, 3));
  EXPECT_DOUBLE_EQ(c.std_error, std::sqrt(c.estimate * (1 - c.estimate) / 5000));
}

TEST(Experiments, IndependentOfThreadCount) {
  const auto one = coprime_density_experiment(3, 500, opts(20'000, 11, 1));
  const auto four = coprime_density_experiment(3, 500, opts(20'000, 11, 4));
  EXPECT_EQ(to_json(one).dump(), to_json(four).dump());

  const auto r1 = remnant_density_experiment(kTwo, kTwo, 1, 6, opts(9000, 5, 1));
  const auto r3 = remnant_density_experiment(kTwo, kTwo, 1, 6, opts(9000, 5, 3));
  EXPECT_EQ(r1.estimate, r3.estimate);

  EXPECT_NE(coprime_density_experiment(3, 500, opts(20'000, 12)).estimate, one.estimate);
}

TEST(Experiments, JsonFields) {
  const auto j = to_json(coprime_density_experiment(2, 100, opts(100)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"experiment", "parameters", "seed", "samples", "estimate",
                                            "std_error", "reference", "elapsed_ms"}));
  EXPECT_TRUE(j["elapsed_ms"].is_null());
  EXPECT_EQ(j["parameters"]["p"], 100);
}

TEST(RemnantDensity, TrivialRadiusAndValidation) {
  EXPECT_EQ(remnant_density_experiment(kTwo, kTwo, 1, 0, opts(500)).estimate, 0.0);
  EXPECT_THROW(remnant_density_experiment(kTwo, Rank(1), 1, 10, opts(10)), InputError);
  EXPECT_EQ(remnant_density_experiment(kTwo, kTwo, 1, 10, opts(10)).reference, 1.0);
}

TEST(RemnantDensity, TrendOnPinnedGrid) {
  const double e5 = remnant_density_experiment(kTwo, kTwo, 1, 5, opts(10'000)).estimate;
  const double e20 = remnant_density_experiment(kTwo, kTwo, 1, 20, opts(10'000)).estimate;
  const double e100 = remnant_density_experiment(kTwo, kTwo, 1, 100, opts(10'000)).estimate;
  EXPECT_LE(e5, e20);
  EXPECT_LE(e20, e100);
  EXPECT_GE(e100, 0.99);
}

TEST(ImageDensityBound, Arithmetic) {
  EXPECT_DOUBLE_EQ(image_density_bound(2, 9), 32.0 / 243.0);
  EXPECT_DOUBLE_EQ(image_density_bound(2, 0), 32.0);
  EXPECT_DOUBLE_EQ(image_density_bound(2, 5), 32.0 / 27.0);
  EXPECT_DOUBLE_EQ(image_density_bound(2, 6), 32.0 / 27.0);
  EXPECT_DOUBLE_EQ(image_density_bound(3, 2), 48.0 / 5.0);
  EXPECT_THROW(image_density_bound(1, 3), InputError);
}

TEST(ImageDensity, IdentityIsEverything) {
  const auto r = image_density_experiment(FreeHomomorphism::identity(kTwo), 6, opts(2000));
  EXPECT_EQ(r.estimate, 1.0);
  EXPECT_DOUBLE_EQ(*r.reference, 32.0 / 3.0);
}

TEST(ImageDensity, WorkedMapAndValidation) {
  const auto r = image_density_experiment(parse_homomorphism("babaa,aaBabbb", kTwo), 8, opts(2000));
  EXPECT_LE(r.estimate, 1.0);
  EXPECT_DOUBLE_EQ(*r.reference, 32.0 / 27.0);
  EXPECT_THROW(image_density_experiment(parse_homomorphism("ab,b", kTwo), 8, opts(10)), InputError);
}

TEST(ImageDensity, MatchesExactCount) {
  for (int k = 1; k <= 3; ++k) {
    const auto phi = power_family(k);
    const double exact = exact_image_density(phi, 4);
    const auto r = image_density_experiment(phi, 4, opts(20'000, 21));
    EXPECT_NEAR(r.estimate, exact, 4 * std::sqrt(exact * (1 - exact) / 20'000) + 1e-12) << "k=" << k;
  }
  EXPECT_DOUBLE_EQ(exact_image_density(power_family(2), 4), 17.0 / 161.0);
  EXPECT_DOUBLE_EQ(exact_image_density(power_family(3), 4), 5.0 / 161.0);
}

TEST(ImageDensity, PowerFamilyDecreases) {
  double prev = 2.0;
  for (int k = 1; k <= 4; ++k) {
    const double e = image_density_experiment(power_family(k), 4, opts(20'000, 22)).estimate;
    EXPECT_LT(e, prev) << "k=" << k;
    prev = e;
  }
}

TEST(ImageDensity, BelowBoundWhenBoundIsInformative) {
  Rng rng(60);
  int checked = 0;
  while (checked < 10) {
    const auto phi = sample_hom(kTwo, kTwo, 12, rng);
    const auto l = remnant_length(phi);
    if (!l || image_density_bound(2, static_cast<unsigned>(*l)) >= 1) continue;
    ++checked;
    const auto r = image_density_experiment(phi, 10, opts(5000, 61));
    EXPECT_LE(r.estimate, *r.reference + 4 * r.std_error);
  }
}

TEST(Rank1Expected, ExactValues) {
  EXPECT_EQ(rank1_rank1_expected_density(1), mpq_class(2, 3));
  EXPECT_EQ(rank1_rank1_expected_density(2), mpq_class(3, 5));
  EXPECT_EQ(rank1_rank1_expected_density(3), mpq_class(11, 21));
  EXPECT_THROW(rank1_rank1_expected_density(0), InputError);
}

TEST(Rank1Expected, DecreasingTowardZero) {
  mpq_class prev = rank1_rank1_expected_density(1);
  for (unsigned long p = 2; p <= 2000; ++p) {
    const mpq_class cur = rank1_rank1_expected_density(p);
    EXPECT_LT(cur, prev) << "p=" << p;
    prev = cur;
  }
  EXPECT_LT(rank1_rank1_expected_density(100'000), mpq_class(1, 100));
}
