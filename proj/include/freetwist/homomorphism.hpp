#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freetwist/ball.hpp"
#include "freetwist/word.hpp"

namespace freetwist {

/// Homomorphism F_n -> F_m given by the images of the n domain generators.
class FreeHomomorphism {
 public:
  FreeHomomorphism(Rank domain, Rank codomain, std::vector<Word> images);

  static FreeHomomorphism identity(Rank n);
  static FreeHomomorphism trivial(Rank n, Rank m);

  /// Rank-1 target: generator i maps to a^exponents[i].
  static FreeHomomorphism from_exponents(const std::vector<long>& exponents);

  Rank domain_rank() const { return domain_; }
  Rank codomain_rank() const { return codomain_; }
  const std::vector<Word>& images() const { return images_; }

  /// Image of generator g (1-based).
  const Word& image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }

  friend bool operator==(const FreeHomomorphism&, const FreeHomomorphism&) = default;

 private:
  Rank domain_;
  Rank codomain_;
  std::vector<Word> images_;
};

/// The doubly-twisted pair (phi, psi); both maps share domain and codomain.
class TwistedPair {
 public:
  TwistedPair(FreeHomomorphism phi, FreeHomomorphism psi);

  const FreeHomomorphism& phi() const { return phi_; }
  const FreeHomomorphism& psi() const { return psi_; }
  Rank domain_rank() const { return phi_.domain_rank(); }
  Rank codomain_rank() const { return phi_.codomain_rank(); }

 private:
  FreeHomomorphism phi_;
  FreeHomomorphism psi_;
};

Word apply(const FreeHomomorphism& phi, const Word& w);

/// phi * u * v on G * Z * Z: images [phi(a_1), ..., phi(a_n), u, v].
FreeHomomorphism star_extension(const FreeHomomorphism& phi, const Word& u, const Word& v);

/// phi(z) v psi(z)^-1.
Word twisted_image(const TwistedPair& pair, const Word& v, const Word& z);

/// Each image drawn independently and uniformly from the ball of radius p in F_m.
FreeHomomorphism sample_hom(Rank n, Rank m, unsigned p, Rng& rng);

/// Exponent sums of the images; for a rank-1 codomain this is the integer
/// tuple describing the map to Z.
std::vector<long> exponent_sums(const FreeHomomorphism& phi);

/// Comma-separated image words, e.g. "babaa,aaBabbb". The keywords
/// "identity" and "trivial" need `domain`; an explicit image list must match
/// it when given.
FreeHomomorphism parse_homomorphism(std::string_view text, Rank codomain,
                                    std::optional<Rank> domain = std::nullopt);

std::string format_homomorphism(const FreeHomomorphism& phi);

}  // namespace freetwist
