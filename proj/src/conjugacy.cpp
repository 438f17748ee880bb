#include "freetwist/conjugacy.hpp"

#include "freetwist/ball.hpp"

namespace freetwist {

namespace {

void require_codomain(const TwistedPair& pair, const Word& u, const Word& v) {
  if (u.rank() != pair.codomain_rank() || v.rank() != pair.codomain_rank()) {
    throw RankMismatch("u and v must lie in the codomain of phi and psi");
  }
}

// Depth-first walk over the words of one fixed length, in lexicographic
// order, carrying phi(prefix) and psi(prefix)^-1 along the path.
class FixedLengthSearch {
 public:
  FixedLengthSearch(const TwistedPair& pair, const Word& u, const Word& v)
      : u_(u), v_(v), domain_(pair.domain_rank()) {
    const int alphabet = 2 * domain_.get();
    for (int idx = 0; idx < alphabet; ++idx) {
      const Letter l = Letter::from_order_index(idx);
      const Word z = Word::letter(domain_, l.generator(), l.sign());
      phi_of_.push_back(apply(pair.phi(), z));
      psi_inv_of_.push_back(invert(apply(pair.psi(), z)));
    }
  }

  bool run(unsigned length, std::uint64_t& checked) {
    length_ = length;
    digits_.assign(length, 0);
    phi_prefix_.assign(length + 1, Word(u_.rank()));
    psi_inv_prefix_.assign(length + 1, Word(u_.rank()));
    return visit(0, checked);
  }

  Word witness() const {
    std::vector<Letter> letters;
    for (int d : digits_) letters.push_back(Letter::from_order_index(d));
    return reduce(letters, domain_);
  }

 private:
  bool visit(unsigned depth, std::uint64_t& checked) {
    if (depth == length_) {
      ++checked;
      return concat(concat(phi_prefix_[depth], v_), psi_inv_prefix_[depth]) == u_;
    }
    const int alphabet = static_cast<int>(phi_of_.size());
    for (int idx = 0; idx < alphabet; ++idx) {
      if (depth > 0 && idx == (digits_[depth - 1] ^ 1)) continue;
      digits_[depth] = idx;
      phi_prefix_[depth + 1] = concat(phi_prefix_[depth], phi_of_[static_cast<std::size_t>(idx)]);
      psi_inv_prefix_[depth + 1] = concat(psi_inv_of_[static_cast<std::size_t>(idx)], psi_inv_prefix_[depth]);
      if (visit(depth + 1, checked)) return true;
    }
    return false;
  }

  const Word& u_;
  const Word& v_;
  Rank domain_;
  std::vector<Word> phi_of_;
  std::vector<Word> psi_inv_of_;
  unsigned length_ = 0;
  std::vector<int> digits_;
  std::vector<Word> phi_prefix_;
  std::vector<Word> psi_inv_prefix_;
};

}  // namespace

std::string_view verdict_name(const Verdict& v) {
  switch (v.index()) {
    case 0: return "Distinct";
    case 1: return "Conjugate";
    case 2: return "NotConjugate";
    default: return "Undecided";
  }
}

std::string_view reason_name(UndecidedReason r) {
  switch (r) {
    case UndecidedReason::StrictInequalityFails: return "StrictInequalityFails";
    case UndecidedReason::NoRemnant: return "NoRemnant";
    case UndecidedReason::NoApplicableMethod: return "NoApplicableMethod";
  }
  return "unknown";
}

std::optional<Certificate> certify_distinct(const TwistedPair& pair, const Word& u, const Word& v) {
  require_codomain(pair, u, v);
  if (u == v) return std::nullopt;
  const FreeHomomorphism extended = star_extension(pair.phi(), u, v);
  RemnantReport report = remnant_report(extended.images());
  if (!report.has_remnant) return std::nullopt;
  for (int g = 1; g <= pair.domain_rank().get(); ++g) {
    const auto i = static_cast<std::size_t>(g - 1);
    if (report.generators[i].remnant.length() < pair.psi().image(g).length()) return std::nullopt;
  }
  return Certificate{CertificateKind::WeakRemnantInequality, std::move(report)};
}

std::optional<std::size_t> solution_bound(const TwistedPair& pair, const Word& u, const Word& v) {
  require_codomain(pair, u, v);
  const auto gap = min_gap(pair);
  if (!gap || *gap < 1) return std::nullopt;
  return (u.length() + v.length()) / static_cast<std::size_t>(*gap);
}

WitnessSearch find_witness(const TwistedPair& pair, const Word& u, const Word& v, unsigned max_length) {
  require_codomain(pair, u, v);
  FixedLengthSearch search(pair, u, v);
  WitnessSearch result;
  for (unsigned length = 0; length <= max_length; ++length) {
    if (search.run(length, result.candidates_checked)) {
      result.witness = search.witness();
      break;
    }
  }
  return result;
}

std::optional<Word> oracle_decide(const TwistedPair& pair, const Word& u, const Word& v, unsigned max_length) {
  require_codomain(pair, u, v);
  BallEnumerator candidates(pair.domain_rank(), max_length);
  while (auto z = candidates.next()) {
    if (twisted_image(pair, v, *z) == u) return z;
  }
  return std::nullopt;
}

Decision bsl_decide(const TwistedPair& pair, const Word& u, const Word& v) {
  require_codomain(pair, u, v);
  Decision d{Undecided{UndecidedReason::NoRemnant}, min_gap(pair), std::nullopt, 0};
  if (!d.min_gap) return d;
  if (*d.min_gap < 1) {
    d.verdict = Undecided{UndecidedReason::StrictInequalityFails};
    return d;
  }
  const std::size_t bound = (u.length() + v.length()) / static_cast<std::size_t>(*d.min_gap);
  d.bound = bound;
  auto search = find_witness(pair, u, v, static_cast<unsigned>(bound));
  d.candidates_checked = search.candidates_checked;
  if (search.witness) {
    d.verdict = Conjugate{std::move(*search.witness)};
  } else {
    d.verdict = NotConjugate{bound};
  }
  return d;
}

Decision decide(const TwistedPair& pair, const Word& u, const Word& v) {
  require_codomain(pair, u, v);
  const auto gap = min_gap(pair);
  if (u == v) return {Conjugate{Word(pair.domain_rank())}, gap, std::nullopt, 0};
  if (auto cert = certify_distinct(pair, u, v)) return {Distinct{std::move(*cert)}, gap, std::nullopt, 0};
  if (gap && *gap >= 1) return bsl_decide(pair, u, v);
  return {Undecided{UndecidedReason::NoApplicableMethod}, gap, std::nullopt, 0};
}

Decision singly_twisted_decide(const FreeHomomorphism& phi, const Word& u, const Word& v) {
  if (phi.domain_rank() != phi.codomain_rank()) {
    throw RankMismatch("singly-twisted conjugacy needs an endomorphism");
  }
  return decide(TwistedPair(phi, FreeHomomorphism::identity(phi.domain_rank())), u, v);
}

Decision membership(const FreeHomomorphism& phi, const Word& w) {
  const TwistedPair pair(phi, FreeHomomorphism::trivial(phi.domain_rank(), phi.codomain_rank()));
  return bsl_decide(pair, w, Word(phi.codomain_rank()));
}

bool certify_injective(const FreeHomomorphism& phi) { return remnant_report(phi.images()).has_remnant; }

}  // namespace freetwist
