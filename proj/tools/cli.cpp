#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "freetwist/conjugacy.hpp"
#include "freetwist/density.hpp"
#include "freetwist/homomorphism.hpp"
#include "freetwist/remnant.hpp"

namespace freetwist::cli {

namespace {

using Json = nlohmann::ordered_json;

// Wraps a library input error with the name of the argument that caused it.
class ArgumentError : public std::runtime_error {
 public:
  ArgumentError(const std::string& arg, const std::string& what)
      : std::runtime_error(arg + ": " + what) {}
};

bool is_keyword(const std::string& text) { return text == "identity" || text == "trivial"; }

// Highest generator index mentioned in any of the texts (at least 1).
int inferred_rank(std::initializer_list<const std::string*> texts) {
  int rank = 1;
  for (const std::string* t : texts) {
    if (is_keyword(*t)) continue;
    for (char ch : *t) {
      if (std::isalpha(static_cast<unsigned char>(ch))) {
        rank = std::max(rank, std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1);
      }
    }
  }
  return rank;
}

Rank checked_rank(int value, const std::string& flag) {
  if (value < 1 || value > 26) throw ArgumentError(flag, "rank must be between 1 and 26");
  return Rank(value);
}

template <class F>
auto guarded(const std::string& arg, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(arg, e.what());
  }
}

Word parse_arg_word(const std::string& text, Rank rank, const std::string& flag) {
  return guarded(flag, [&] { return parse_word(text, rank); });
}

FreeHomomorphism parse_arg_hom(const std::string& text, Rank codomain, std::optional<Rank> domain,
                               const std::string& flag) {
  return guarded(flag, [&] { return parse_homomorphism(text, codomain, domain); });
}

Json word_or_null(const std::optional<Word>& w) { return w ? Json(format_word(*w)) : Json(nullptr); }

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

Json remnant_json(const FreeHomomorphism& phi, const RemnantReport& report) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    const auto& g = report.generators[i];
    gens.push_back({{"index", i + 1},
                    {"image", format_word(phi.images()[i])},
                    {"left_cancel", g.left_cancel},
                    {"right_cancel", g.right_cancel},
                    {"remnant", format_word(g.remnant)},
                    {"remnant_length", g.remnant.length()},
                    {"survives", g.survives}});
  }
  return Json{{"generators", gens},
              {"has_remnant", report.has_remnant},
              {"remnant_length", optional_json(report.remnant_length)}};
}

std::string generator_name(std::size_t index, std::size_t domain_rank) {
  if (index < domain_rank && domain_rank <= 26) return std::string(1, static_cast<char>('a' + index));
  return "g" + std::to_string(index + 1);
}

void print_remnant_table(std::ostream& out, const FreeHomomorphism& phi, const RemnantReport& report,
                         std::size_t named) {
  std::size_t width = 9;
  for (const Word& w : phi.images()) width = std::max(width, format_word(w).size() + 2);
  out << std::left << std::setw(6) << "gen" << std::setw(static_cast<int>(width)) << "image"
      << std::setw(4) << "L" << std::setw(4) << "R" << std::setw(static_cast<int>(width)) << "remnant"
      << "length\n";
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    const auto& g = report.generators[i];
    out << std::setw(6) << generator_name(i, named) << std::setw(static_cast<int>(width))
        << format_word(phi.images()[i]) << std::setw(4) << g.left_cancel << std::setw(4) << g.right_cancel
        << std::setw(static_cast<int>(width)) << (g.survives ? format_word(g.remnant) : "-")
        << g.remnant.length() << "\n";
  }
  out << std::right;
  out << "has_remnant: " << (report.has_remnant ? "yes" : "no") << "\n";
  out << "remnant_length: ";
  if (report.remnant_length) {
    out << *report.remnant_length << "\n";
  } else {
    out << "none\n";
  }
}

int run_remnant(const CliInvocation& inv, std::ostream& out) {
  const Rank rank = checked_rank(inv.rank.value_or(inferred_rank({&inv.phi})), "--rank");
  const FreeHomomorphism phi = parse_arg_hom(inv.phi, rank, std::nullopt, "--phi");
  const RemnantReport report = remnant_report(phi.images());
  if (inv.format == OutputFormat::Json) {
    Json j{{"command", "remnant"}, {"rank", rank.get()}, {"phi", format_homomorphism(phi)}};
    j.update(remnant_json(phi, report));
    out << j.dump(2) << "\n";
  } else {
    print_remnant_table(out, phi, report, phi.images().size());
  }
  return kExitOk;
}

Json decision_json(const Decision& d, const FreeHomomorphism& phi, const Word& u, const Word& v) {
  Json j{{"verdict", verdict_name(d.verdict)}};
  std::optional<Word> witness;
  if (d.is_conjugate()) witness = d.witness();
  j["witness"] = word_or_null(witness);
  j["bound"] = optional_json(d.bound);
  j["candidates_checked"] = d.candidates_checked;
  j["min_gap"] = optional_json(d.min_gap);
  if (const auto* dist = std::get_if<Distinct>(&d.verdict)) {
    const FreeHomomorphism extended = star_extension(phi, u, v);
    Json cert{{"kind", "WeakRemnantInequality"}};
    cert.update(remnant_json(extended, dist->certificate.report));
    j["certificate"] = cert;
  } else {
    j["certificate"] = nullptr;
  }
  if (const auto* und = std::get_if<Undecided>(&d.verdict)) {
    j["reason"] = reason_name(und->reason);
  } else {
    j["reason"] = nullptr;
  }
  return j;
}

void print_decision(std::ostream& out, const Decision& d, const FreeHomomorphism& phi, const Word& u,
                    const Word& v) {
  out << "verdict: " << verdict_name(d.verdict) << "\n";
  if (d.is_conjugate()) out << "witness: " << format_word(d.witness()) << "\n";
  if (const auto* und = std::get_if<Undecided>(&d.verdict)) out << "reason: " << reason_name(und->reason) << "\n";
  out << "min_gap: ";
  if (d.min_gap) {
    out << *d.min_gap << "\n";
  } else {
    out << "none (phi has no remnant)\n";
  }
  if (d.bound) out << "bound: " << *d.bound << "\n";
  out << "candidates_checked: " << d.candidates_checked << "\n";
  if (const auto* dist = std::get_if<Distinct>(&d.verdict)) {
    out << "certificate: WeakRemnantInequality on phi*u*v\n";
    print_remnant_table(out, star_extension(phi, u, v), dist->certificate.report,
                        static_cast<std::size_t>(phi.domain_rank().get()));
  }
}

int exit_code(const Decision& d) { return d.is_undecided() ? kExitUndecided : kExitOk; }

int run_decide(const CliInvocation& inv, std::ostream& out) {
  if (inv.psi.empty()) throw ArgumentError("--psi", "required");
  const Rank codomain = checked_rank(
      inv.rank_codomain.value_or(inferred_rank({&inv.phi, &inv.psi, &inv.u, &inv.v})), "--rank-codomain");
  std::optional<Rank> domain;
  if (inv.rank_domain) domain = checked_rank(*inv.rank_domain, "--rank-domain");
  const FreeHomomorphism phi = parse_arg_hom(inv.phi, codomain, domain, "--phi");
  const FreeHomomorphism psi = parse_arg_hom(inv.psi, codomain, phi.domain_rank(), "--psi");
  const Word u = parse_arg_word(inv.u, codomain, "-u");
  const Word v = parse_arg_word(inv.v, codomain, "-v");
  const TwistedPair pair(phi, psi);
  const Decision d = decide(pair, u, v);

  if (inv.format == OutputFormat::Json) {
    Json j{{"command", "decide"},
           {"rank_domain", phi.domain_rank().get()},
           {"rank_codomain", codomain.get()},
           {"phi", format_homomorphism(phi)},
           {"psi", format_homomorphism(psi)},
           {"u", format_word(u)},
           {"v", format_word(v)}};
    j.update(decision_json(d, phi, u, v));
    out << j.dump(2) << "\n";
  } else {
    print_decision(out, d, phi, u, v);
  }
  return exit_code(d);
}

int run_member(const CliInvocation& inv, std::ostream& out) {
  const Rank codomain = checked_rank(inv.rank.value_or(inferred_rank({&inv.phi, &inv.w})), "--rank");
  const FreeHomomorphism phi = parse_arg_hom(inv.phi, codomain, std::nullopt, "--phi");
  const Word w = parse_arg_word(inv.w, codomain, "-w");
  const Decision d = membership(phi, w);

  std::optional<bool> member;
  if (d.is_conjugate()) member = true;
  if (d.is_not_conjugate()) member = false;

  if (inv.format == OutputFormat::Json) {
    Json j{{"command", "member"}, {"rank", codomain.get()}, {"phi", format_homomorphism(phi)}, {"w", format_word(w)}};
    j["member"] = optional_json(member);
    j.update(decision_json(d, phi, w, Word(codomain)));
    out << j.dump(2) << "\n";
  } else {
    out << "member: " << (member ? (*member ? "yes" : "no") : "unknown") << "\n";
    print_decision(out, d, phi, w, Word(codomain));
  }
  return exit_code(d);
}

int run_experiment(const CliInvocation& inv, std::ostream& out) {
  const SamplingOptions opts{inv.samples, inv.seed, inv.threads};
  if (inv.samples == 0) throw ArgumentError("--samples", "must be at least 1");
  auto p_or = [&](long fallback) {
    const long p = inv.p.value_or(fallback);
    if (p < 0) throw ArgumentError("--p", "must be non-negative");
    return p;
  };

  const auto start = std::chrono::steady_clock::now();
  ExperimentResult r;
  std::string exact;
  const std::string& e = inv.experiment;
  if (e == "coprime") {
    r = guarded("--n", [&] { return coprime_density_experiment(inv.n, p_or(10'000), opts); });
  } else if (e == "gcd-mean") {
    r = guarded("--n", [&] { return expected_gcd_reciprocal_experiment(inv.n, p_or(10'000), opts); });
  } else if (e == "remnant-density") {
    const Rank n = checked_rank(inv.n, "--n");
    const Rank m = checked_rank(inv.m, "--m");
    r = guarded("--m", [&] {
      return remnant_density_experiment(n, m, inv.l, static_cast<unsigned>(p_or(100)), opts);
    });
  } else if (e == "image-density") {
    const Rank m = checked_rank(inv.m, "--m");
    const FreeHomomorphism phi = parse_arg_hom(inv.phi, m, std::nullopt, "--phi");
    r = guarded("--phi", [&] { return image_density_experiment(phi, static_cast<unsigned>(p_or(8)), opts); });
  } else if (e == "rank1-expected") {
    const long p = p_or(1000);
    const mpq_class value = guarded("--p", [&] { return rank1_rank1_expected_density(static_cast<unsigned long>(p)); });
    r = {"rank1-expected", {{"p", p}}, inv.seed, 0, value.get_d(), 0.0, 0.0, {}};
    exact = value.get_str();
  } else {
    throw ArgumentError("experiment", "unknown experiment '" + e + "'");
  }
  if (inv.timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  if (inv.format == OutputFormat::Json) {
    out << to_json(r).dump(2) << "\n";
    return kExitOk;
  }
  out << "experiment: " << r.experiment << "\nparameters:";
  for (const auto& [key, value] : r.parameters) out << " " << key << "=" << value;
  out << "\nseed: " << r.seed << "\nsamples: " << r.samples << "\n";
  out << std::setprecision(8) << "estimate: " << r.estimate << "\nstd_error: " << r.std_error << "\n";
  if (!exact.empty() && exact.size() <= 64) out << "exact: " << exact << "\n";
  if (r.reference) out << "reference: " << *r.reference << "\n";
  if (r.elapsed_ms) out << "elapsed_ms: " << *r.elapsed_ms << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliInvocation inv;
  CLI::App app{"Twisted conjugacy, remnants and density experiments in free groups", "freetwist"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", inv.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* remnant = app.add_subcommand("remnant", "Remnant report for the images of phi");
  remnant->add_option("--rank", inv.rank, "Rank of the codomain");
  remnant->add_option("--phi", inv.phi, "Images, comma separated")->required();
  add_format(remnant);

  auto* dec = app.add_subcommand("decide", "Decide u = phi(z) v psi(z)^-1");
  dec->add_option("--rank-domain", inv.rank_domain, "Rank of the domain");
  dec->add_option("--rank-codomain", inv.rank_codomain, "Rank of the codomain");
  dec->add_option("--phi", inv.phi, "Images of phi")->required();
  dec->add_option("--psi", inv.psi, "Images of psi, or identity / trivial")->required();
  dec->add_option("-u", inv.u, "Word u")->required();
  dec->add_option("-v", inv.v, "Word v")->required();
  add_format(dec);

  auto* member = app.add_subcommand("member", "Decide whether w lies in phi(G)");
  member->add_option("--rank", inv.rank, "Rank of the codomain");
  member->add_option("--phi", inv.phi, "Images of phi")->required();
  member->add_option("-w", inv.w, "Word w")->required();
  add_format(member);

  auto* exp = app.add_subcommand("experiment", "Seeded density experiments");
  exp->add_option("experiment", inv.experiment,
                  "coprime | gcd-mean | remnant-density | image-density | rank1-expected")
      ->required();
  exp->add_option("--n", inv.n, "Domain rank / tuple size");
  exp->add_option("--m", inv.m, "Codomain rank");
  exp->add_option("--l", inv.l, "Remnant length threshold");
  exp->add_option("--p", inv.p, "Ball radius / integer range");
  exp->add_option("--samples", inv.samples, "Number of samples");
  exp->add_option("--seed", inv.seed, "Random seed");
  exp->add_option("--threads", inv.threads, "Worker threads (does not change results)");
  exp->add_option("--phi", inv.phi, "Images of phi (image-density)");
  exp->add_flag("--timing", inv.timing, "Report elapsed_ms");
  add_format(exp);

  std::vector<const char*> argv{"freetwist"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (remnant->parsed()) return run_remnant(inv, out);
    if (dec->parsed()) return run_decide(inv, out);
    if (member->parsed()) return run_member(inv, out);
    return run_experiment(inv, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace freetwist::cli
