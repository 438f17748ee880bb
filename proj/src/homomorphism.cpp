#include "freetwist/homomorphism.hpp"

#include <cctype>

namespace freetwist {

FreeHomomorphism::FreeHomomorphism(Rank domain, Rank codomain, std::vector<Word> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(domain.get())) {
    throw InputError("homomorphism on rank " + std::to_string(domain.get()) + " needs " +
                     std::to_string(domain.get()) + " images, got " + std::to_string(images_.size()));
  }
  for (const Word& w : images_) {
    if (w.rank() != codomain) throw RankMismatch("homomorphism image has the wrong rank");
  }
}

FreeHomomorphism FreeHomomorphism::identity(Rank n) {
  std::vector<Word> images;
  for (int g = 1; g <= n.get(); ++g) images.push_back(Word::letter(n, g));
  return {n, n, std::move(images)};
}

FreeHomomorphism FreeHomomorphism::trivial(Rank n, Rank m) {
  return {n, m, std::vector<Word>(static_cast<std::size_t>(n.get()), Word(m))};
}

FreeHomomorphism FreeHomomorphism::from_exponents(const std::vector<long>& exponents) {
  const Rank one(1);
  std::vector<Word> images;
  for (long e : exponents) {
    std::vector<Letter> raw(static_cast<std::size_t>(e < 0 ? -e : e), Letter(1, e < 0 ? -1 : 1));
    images.push_back(reduce(raw, one));
  }
  return {Rank(static_cast<int>(exponents.size())), one, std::move(images)};
}

TwistedPair::TwistedPair(FreeHomomorphism phi, FreeHomomorphism psi)
    : phi_(std::move(phi)), psi_(std::move(psi)) {
  if (phi_.domain_rank() != psi_.domain_rank() || phi_.codomain_rank() != psi_.codomain_rank()) {
    throw RankMismatch("phi and psi must share domain and codomain ranks");
  }
}

Word apply(const FreeHomomorphism& phi, const Word& w) {
  if (w.rank() != phi.domain_rank()) throw RankMismatch("apply: word rank differs from domain rank");
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    const auto image = phi.image(l.generator()).letters();
    if (l.sign() > 0) {
      raw.insert(raw.end(), image.begin(), image.end());
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) raw.push_back(it->inverse());
    }
  }
  return reduce(raw, phi.codomain_rank());
}

FreeHomomorphism star_extension(const FreeHomomorphism& phi, const Word& u, const Word& v) {
  if (u.rank() != phi.codomain_rank() || v.rank() != phi.codomain_rank()) {
    throw RankMismatch("star_extension: u and v must lie in the codomain");
  }
  std::vector<Word> images = phi.images();
  images.push_back(u);
  images.push_back(v);
  return {Rank(phi.domain_rank().get() + 2), phi.codomain_rank(), std::move(images)};
}

Word twisted_image(const TwistedPair& pair, const Word& v, const Word& z) {
  if (v.rank() != pair.codomain_rank()) throw RankMismatch("twisted_image: v not in codomain");
  return concat(concat(apply(pair.phi(), z), v), invert(apply(pair.psi(), z)));
}

FreeHomomorphism sample_hom(Rank n, Rank m, unsigned p, Rng& rng) {
  const BallSampler sampler(m, p);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n.get()));
  for (int i = 0; i < n.get(); ++i) images.push_back(sampler(rng));
  return {n, m, std::move(images)};
}

std::vector<long> exponent_sums(const FreeHomomorphism& phi) {
  std::vector<long> sums;
  for (const Word& w : phi.images()) {
    long total = 0;
    for (Letter l : w.letters()) total += l.sign();
    sums.push_back(total);
  }
  return sums;
}

FreeHomomorphism parse_homomorphism(std::string_view text, Rank codomain, std::optional<Rank> domain) {
  std::string trimmed;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
  }
  if (trimmed == "identity" || trimmed == "trivial") {
    if (!domain) throw InputError("keyword '" + trimmed + "' needs an explicit domain rank");
    if (trimmed == "trivial") return FreeHomomorphism::trivial(*domain, codomain);
    if (*domain != codomain) {
      throw InputError("identity needs equal domain and codomain ranks");
    }
    return FreeHomomorphism::identity(codomain);
  }

  std::vector<Word> images;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = trimmed.find(',', start);
    images.push_back(parse_word(std::string_view(trimmed).substr(start, comma - start), codomain));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const Rank inferred(static_cast<int>(images.size()));
  if (domain && *domain != inferred) {
    throw InputError("expected " + std::to_string(domain->get()) + " images, got " +
                     std::to_string(images.size()));
  }
  return {inferred, codomain, std::move(images)};
}

std::string format_homomorphism(const FreeHomomorphism& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.images().size(); ++i) {
    if (i) out.push_back(',');
    out += format_word(phi.images()[i]);
  }
  return out;
}

}  // namespace freetwist
