#pragma once

// Deciding u = phi(z) v psi(z)^-1 for a twisted pair (phi, psi).

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "freetwist/homomorphism.hpp"
#include "freetwist/remnant.hpp"
#include "freetwist/word.hpp"

namespace freetwist {

enum class CertificateKind { WeakRemnantInequality };

/// Proof that [u] != [v]: phi * u * v has remnant, and each domain
/// generator's remnant is at least as long as its psi-image.
struct Certificate {
  CertificateKind kind = CertificateKind::WeakRemnantInequality;
  RemnantReport report;  // of phi * u * v
};

enum class UndecidedReason { StrictInequalityFails, NoRemnant, NoApplicableMethod };

struct Distinct {
  Certificate certificate;
};
struct Conjugate {
  Word witness;
};
struct NotConjugate {
  std::size_t exhausted_bound;
};
struct Undecided {
  UndecidedReason reason;
};

using Verdict = std::variant<Distinct, Conjugate, NotConjugate, Undecided>;

/// A verdict plus the numbers that produced it.
struct Decision {
  Verdict verdict;
  std::optional<long> min_gap;        // when phi has remnant
  std::optional<std::size_t> bound;   // when the enumeration ran
  std::uint64_t candidates_checked = 0;

  bool is_distinct() const { return std::holds_alternative<Distinct>(verdict); }
  bool is_conjugate() const { return std::holds_alternative<Conjugate>(verdict); }
  bool is_not_conjugate() const { return std::holds_alternative<NotConjugate>(verdict); }
  bool is_undecided() const { return std::holds_alternative<Undecided>(verdict); }
  /// Witness of a Conjugate verdict; throws std::bad_variant_access otherwise.
  const Word& witness() const { return std::get<Conjugate>(verdict).witness; }
};

std::string_view verdict_name(const Verdict& v);
std::string_view reason_name(UndecidedReason r);

std::optional<Certificate> certify_distinct(const TwistedPair& pair, const Word& u, const Word& v);

/// floor((|u| + |v|) / l) when min_gap l >= 1.
std::optional<std::size_t> solution_bound(const TwistedPair& pair, const Word& u, const Word& v);

/// Exhaustive search over |z| <= solution_bound in length-lex order.
Decision bsl_decide(const TwistedPair& pair, const Word& u, const Word& v);

/// u == v, then the certificate, then bounded enumeration.
Decision decide(const TwistedPair& pair, const Word& u, const Word& v);

/// decide with psi = identity.
Decision singly_twisted_decide(const FreeHomomorphism& phi, const Word& u, const Word& v);

/// Is w in phi(G)? Conjugate(z) means w = phi(z).
Decision membership(const FreeHomomorphism& phi, const Word& w);

/// True guarantees injectivity (phi has remnant); false means unknown.
bool certify_injective(const FreeHomomorphism& phi);

struct WitnessSearch {
  std::optional<Word> witness;
  std::uint64_t candidates_checked = 0;
};

/// Length-lex first z with |z| <= max_length and u = phi(z) v psi(z)^-1.
/// Images are built incrementally along each prefix.
WitnessSearch find_witness(const TwistedPair& pair, const Word& u, const Word& v, unsigned max_length);

/// Plain reference search: enumerates the ball and evaluates twisted_image
/// on every candidate. No remnant preconditions.
std::optional<Word> oracle_decide(const TwistedPair& pair, const Word& u, const Word& v, unsigned max_length);

}  // namespace freetwist
