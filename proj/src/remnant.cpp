#include "freetwist/remnant.hpp"

#include <algorithm>

namespace freetwist {

namespace {

void validate(std::span<const Word> tuple) {
  if (tuple.empty()) throw InputError("remnant of an empty tuple is undefined");
  for (const Word& w : tuple) {
    if (w.rank() != tuple.front().rank()) throw RankMismatch("remnant: tuple words differ in rank");
  }
}

Word subword(const Word& w, std::size_t begin, std::size_t end) {
  return reduce(w.letters().subspan(begin, end - begin), w.rank());
}

RemnantReport finish(std::span<const Word> tuple, std::vector<GeneratorRemnant> generators) {
  RemnantReport report;
  report.has_remnant = std::all_of(generators.begin(), generators.end(),
                                   [](const GeneratorRemnant& g) { return g.survives; });
  if (report.has_remnant) {
    std::size_t shortest = tuple.front().length();
    for (const auto& g : generators) shortest = std::min(shortest, g.remnant.length());
    report.remnant_length = shortest;
  }
  report.generators = std::move(generators);
  return report;
}

// Neighbours allowed next to h_i; the identity (exponent 0) cancels nothing
// and is left out. h_i^-1 is excluded next to h_i itself.
std::vector<Word> neighbours(std::span<const Word> tuple, std::size_t i) {
  std::vector<Word> out;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    out.push_back(tuple[j]);
    if (j != i) out.push_back(invert(tuple[j]));
  }
  return out;
}

struct Tagged {
  Letter letter;
  int position;  // index in h_i, or -1 for a neighbour letter
};

// Freely reduces x h_i y and returns which positions of h_i are left.
std::vector<bool> surviving_positions(const Word& x, const Word& h, const Word& y) {
  std::vector<Tagged> stack;
  auto push = [&stack](Letter l, int position) {
    if (!stack.empty() && stack.back().letter.cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back({l, position});
    }
  };
  for (Letter l : x.letters()) push(l, -1);
  for (std::size_t p = 0; p < h.length(); ++p) push(h[p], static_cast<int>(p));
  for (Letter l : y.letters()) push(l, -1);

  std::vector<bool> alive(h.length(), false);
  for (const Tagged& t : stack) {
    if (t.position >= 0) alive[static_cast<std::size_t>(t.position)] = true;
  }
  return alive;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> max_cancellations(std::span<const Word> tuple) {
  validate(tuple);
  std::vector<std::pair<std::size_t, std::size_t>> result;
  result.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Word& h = tuple[i];
    std::size_t left = 0;
    std::size_t right = 0;
    for (const Word& x : neighbours(tuple, i)) {
      left = std::max(left, cancellation_len(x, h));
      right = std::max(right, cancellation_len(h, x));
    }
    result.emplace_back(left, right);
  }
  return result;
}

RemnantReport remnant_report(std::span<const Word> tuple) {
  const auto cancels = max_cancellations(tuple);
  std::vector<GeneratorRemnant> generators;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Word& h = tuple[i];
    const auto [left, right] = cancels[i];
    GeneratorRemnant g{left, right, Word(h.rank()), false};
    if (left + right < h.length()) {
      g.survives = true;
      g.remnant = subword(h, left, h.length() - right);
    }
    generators.push_back(std::move(g));
  }
  return finish(tuple, std::move(generators));
}

RemnantReport remnant_report_bruteforce(std::span<const Word> tuple) {
  validate(tuple);
  std::vector<GeneratorRemnant> generators;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Word& h = tuple[i];
    // h_j^e for e in {-1, 0, 1}, restricted to {0, 1} when j == i.
    std::vector<Word> factors;
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      for (int e = -1; e <= 1; ++e) {
        if (j == i && e == -1) continue;
        factors.push_back(e == 0 ? Word(h.rank()) : e == 1 ? tuple[j] : invert(tuple[j]));
      }
    }

    std::vector<bool> always(h.length(), true);
    std::size_t left = 0;
    std::size_t right = 0;
    for (const Word& x : factors) {
      for (const Word& y : factors) {
        const auto alive = surviving_positions(x, h, y);
        for (std::size_t p = 0; p < h.length(); ++p) always[p] = always[p] && alive[p];
        const auto lost = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), false));
        if (y.is_identity()) left = std::max(left, lost);
        if (x.is_identity()) right = std::max(right, lost);
      }
    }

    // Longest run of positions alive in every product; leftmost on ties.
    std::size_t best_begin = 0;
    std::size_t best_len = 0;
    for (std::size_t p = 0; p < h.length();) {
      if (!always[p]) {
        ++p;
        continue;
      }
      std::size_t q = p;
      while (q < h.length() && always[q]) ++q;
      if (q - p > best_len) {
        best_begin = p;
        best_len = q - p;
      }
      p = q;
    }

    GeneratorRemnant g{left, right, Word(h.rank()), best_len > 0};
    if (g.survives) g.remnant = subword(h, best_begin, best_begin + best_len);
    generators.push_back(std::move(g));
  }
  return finish(tuple, std::move(generators));
}

std::optional<std::size_t> remnant_length(const FreeHomomorphism& phi) {
  return remnant_report(phi.images()).remnant_length;
}

std::optional<long> min_gap(const TwistedPair& pair) {
  const auto report = remnant_report(pair.phi().images());
  if (!report.has_remnant) return std::nullopt;
  long gap = 0;
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    const long d = static_cast<long>(report.generators[i].remnant.length()) -
                   static_cast<long>(pair.psi().images()[i].length());
    gap = i == 0 ? d : std::min(gap, d);
  }
  return gap;
}

}  // namespace freetwist
