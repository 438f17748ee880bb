#pragma once

// Remnant subwords of a tuple of words (h_1, ..., h_n).
//
// The remnant of h_i is the part of h_i that survives free reduction in
// every product h_j^alpha h_i h_k^beta, with alpha, beta in {-1, 0, 1} for
// neighbours j, k != i and in {0, 1} when the neighbour is h_i itself.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "freetwist/homomorphism.hpp"
#include "freetwist/word.hpp"

namespace freetwist {

struct GeneratorRemnant {
  std::size_t left_cancel = 0;   // letters of h_i's prefix lost to the worst left neighbour
  std::size_t right_cancel = 0;  // letters of h_i's suffix lost to the worst right neighbour
  Word remnant;                  // identity when !survives
  bool survives = false;

  friend bool operator==(const GeneratorRemnant&, const GeneratorRemnant&) = default;
};

struct RemnantReport {
  std::vector<GeneratorRemnant> generators;
  bool has_remnant = false;
  std::optional<std::size_t> remnant_length;  // min |remnant_i| when has_remnant

  friend bool operator==(const RemnantReport&, const RemnantReport&) = default;
};

/// (L_i, R_i) for each word of the tuple. Throws InputError on an empty tuple
/// and RankMismatch on mixed ranks.
std::vector<std::pair<std::size_t, std::size_t>> max_cancellations(std::span<const Word> tuple);

/// Remnant report from pairwise junction cancellations.
RemnantReport remnant_report(std::span<const Word> tuple);

/// Reference implementation: reduces every allowed triple product with
/// position-tagged letters and intersects the surviving positions of h_i.
RemnantReport remnant_report_bruteforce(std::span<const Word> tuple);

std::optional<std::size_t> remnant_length(const FreeHomomorphism& phi);

/// min_i(|Rem_phi a_i| - |psi(a_i)|); absent when phi has no remnant.
std::optional<long> min_gap(const TwistedPair& pair);

}  // namespace freetwist
