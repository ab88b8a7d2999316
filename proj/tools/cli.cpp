#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "corpus.hpp"
#include "cpg/certificate_json.hpp"
#include "cpg/certify.hpp"
#include "cpg/error.hpp"
#include "cpg/oracle.hpp"
#include "cpg/word_text.hpp"
#include "random_words.hpp"

namespace cpg::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int max_exponent = 0;
  int cancellation_budget = 0;
  std::size_t max_cosets = 100000;
  std::uint64_t seed = 20241019;
  std::string format = "text";

  SearchParams params() const { return {max_exponent, cancellation_budget}; }
  bool json() const { return format == "json"; }
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

NormalizedSpan load_word(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::kInvalidRelator, "the empty word is not a relator");
  return normalize_span(cyclically_reduce(w).core);
}

NormalizedSpan load_word(const std::string& text) { return load_word(parse_word(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<IndexSet, IndexSet> parse_pair_flag(const std::string& s) {
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw UsageError("pair '" + s + "' must look like \"0,1|1,2\"");
  auto indices = [&](std::string part) {
    IndexSet out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("pair '" + s + "' has a bad index '" + item + "'");
      }
      out.insert(static_cast<GenIndex>(std::stoul(item)));
    }
    return out;
  };
  return {indices(s.substr(0, bar)), indices(s.substr(bar + 1))};
}

std::vector<Assumption> build_assumptions(const OneRelatorSpec& spec, const std::vector<std::string>& pairs,
                                          bool triple, const std::string& source) {
  std::vector<Assumption> out;
  for (const std::string& p : pairs) {
    auto [a, b] = parse_pair_flag(p);
    try {
      MagnusPair::from_indices(spec, a, b);
    } catch (const Error& e) {
      throw UsageError("unknown pair '" + p + "': " + e.what());
    }
    out.push_back(Assumption::non_exceptional(a, b, source));
  }
  if (triple) {
    const std::string k = std::to_string(spec.k());
    out.push_back(Assumption::triple_trivial(
        "<x0..x" + std::to_string(spec.k() - 1) + "> n <x1..x" + k + "> n ... n <x(k-1)..x(2k-1)> is trivial, k = " + k,
        source));
  }
  return out;
}

Json embed(const std::string& json_text) { return Json::parse(json_text); }

Json number(const mpz_class& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); }

std::string verdict_line(const PairVerdict& v) {
  std::string s(to_string(v.outcome));
  if (v.witness) s += "  " + describe_witness(*v.witness);
  if (v.outcome == Outcome::kInconclusive) s += "  (" + v.reason + ")";
  return s;
}

// ---- analyze ----

int cmd_analyze(const Globals& g, const std::string& text, bool explain, std::ostream& out) {
  const NormalizedSpan span = load_word(text);
  const OneRelatorSpec& spec = span.spec;
  const GapProfile gap = gap_profile(spec);
  const PurityReport report = analyze_purity(spec, {}, g.params());

  if (g.json()) {
    Json j;
    j["relator"] = format_word(spec.relator());
    j["offset"] = span.offset;
    j["k"] = spec.k();
    j["involved"] = Json(std::vector<GenIndex>(spec.involved().begin(), spec.involved().end()));
    j["gap"] = gap.max_interior_gap;
    j["t_min_syntactic"] = report.t_min_syntactic;
    Json cands = Json::array();
    for (const PurityCandidate& c : report.candidates) {
      Json x;
      x["t"] = c.t;
      x["pure"] = c.pure();
      Json checks = Json::array();
      for (const CheckRecord& r : c.checks) {
        Json y;
        y["pair"] = format_pair(r.first, r.second);
        const Json body = embed(verdict_to_json(r.verdict));
        for (auto it = body.begin(); it != body.end(); ++it) y[it.key()] = it.value();
        checks.push_back(std::move(y));
      }
      x["checks"] = std::move(checks);
      cands.push_back(std::move(x));
    }
    j["candidates"] = std::move(cands);
    j["certified_t"] = report.certified_t ? Json(*report.certified_t) : Json(nullptr);
    out << j.dump(2) << "\n";
    return kOk;
  }

  out << "relator: " << format_word(spec.relator()) << "\n";
  if (span.offset) out << "subscripts shifted down by " << span.offset << "\n";
  out << "k: " << spec.k() << "\n";
  out << "involved: " << format_index_set(spec.involved()) << "\n";
  out << "gap g: " << gap.max_interior_gap << "\n";
  out << "t_min: " << report.t_min_syntactic << "\n";
  for (const PurityCandidate& c : report.candidates) {
    out << "t = " << c.t << (c.pure() ? " (pure)" : "") << "\n";
    for (const CheckRecord& r : c.checks) {
      out << "  " << std::left << std::setw(12) << format_pair(r.first, r.second) << verdict_line(r.verdict) << "\n";
      if (explain && r.verdict.witness) {
        std::istringstream lines(explain_witness(*r.verdict.witness, spec.relator()));
        std::string line;
        std::getline(lines, line);  // repeats the summary above
        while (std::getline(lines, line)) out << "      " << line << "\n";
      }
    }
  }
  out << "certified t: " << (report.certified_t ? std::to_string(*report.certified_t) : "none") << "\n";
  const SearchParams p = g.params().resolved(spec.relator().size());
  out << "search: max_exponent " << p.max_exponent << ", cancellation_budget " << p.cancellation_budget << "\n";
  return kOk;
}

// ---- certify ----

void print_certificate(const Certificate& c, std::ostream& out) {
  out << "relator: " << format_word(c.word) << "\n";
  out << "theorem: " << to_string(c.theorem);
  if (c.t) out << " (t = " << *c.t << ")";
  out << "\n";
  out << "n_min: " << (c.n_min ? std::to_string(*c.n_min) : "-") << "\n";
  out << "checks:\n";
  for (const CheckRecord& r : c.checks) {
    out << "  " << std::left << std::setw(12) << format_pair(r.first, r.second) << verdict_line(r.verdict);
    if (r.assumed_by) out << "  [assumption " << *r.assumed_by << "]";
    out << "\n";
  }
  if (!c.assumptions.empty()) out << "assumptions:\n";
  for (std::size_t i = 0; i < c.assumptions.size(); ++i) {
    const Assumption& a = c.assumptions[i];
    out << "  " << i << ": "
        << (a.kind == Assumption::Kind::kNonExceptionalPair ? "non-exceptional " + format_pair(a.first, a.second)
                                                             : a.description)
        << " (" << a.source << ")\n";
  }
  for (const std::string& n : c.notes) out << "note: " << n << "\n";
  out << "conclusion: " << c.conclusion() << "\n";
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(path);
  const Certificate stored = certificate_from_json(text);
  SearchParams params;
  if (!stored.checks.empty()) params = stored.checks.front().verdict.search_params;
  const Certificate rerun = certify(OneRelatorSpec(stored.word), stored.assumptions, params);
  const std::string fresh = to_json(rerun);
  if (fresh == text) {
    out << "certificate reproduced: " << path << "\n";
    return kOk;
  }
  std::istringstream a(text);
  std::istringstream b(fresh);
  std::string la;
  std::string lb;
  for (std::size_t line = 1;; ++line) {
    const bool more_a = static_cast<bool>(std::getline(a, la));
    const bool more_b = static_cast<bool>(std::getline(b, lb));
    if (!more_a && !more_b) break;
    if (!more_a || !more_b || la != lb) {
      err << "certificate mismatch at line " << line << ":\n  file:  " << (more_a ? la : "<end>")
          << "\n  rerun: " << (more_b ? lb : "<end>") << "\n";
      break;
    }
  }
  return kUsage;
}

int cmd_certify(const Globals& g, const std::string& text, const std::vector<std::string>& pairs, bool triple,
                const std::string& source, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const NormalizedSpan span = load_word(text);
  const auto assumptions = build_assumptions(span.spec, pairs, triple, source);
  const Certificate cert = certify(span.spec, assumptions, g.params());
  for (const Assumption& a : assumptions) {
    if (std::find(cert.assumptions.begin(), cert.assumptions.end(), a) == cert.assumptions.end()) {
      err << "warning: assumption "
          << (a.kind == Assumption::Kind::kNonExceptionalPair ? format_pair(a.first, a.second) : "triple-trivial")
          << " was not used\n";
    }
  }
  const std::string json = to_json(cert);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << json;
  }
  if (g.json()) {
    out << json;
  } else {
    print_certificate(cert, out);
  }
  return cert.certified() ? kOk : kNoCertificate;
}

// ---- oracle ----

struct OracleRun {
  SNFResult snf;
  AbelianOrder abelian;
  EnumerationOutcome enumeration;
  std::vector<std::string> contradictions;
};

OracleRun run_oracle(const CyclicPresentationSpec& p, std::size_t max_cosets, const Certificate* cert) {
  OracleRun r;
  r.snf = smith_normal_form(exponent_matrix(p));
  r.abelian = abelian_order(p);
  r.enumeration = todd_coxeter(p, max_cosets);
  if (r.enumeration.completed()) {
    const mpz_class n = static_cast<unsigned long>(r.enumeration.order);
    if (r.abelian.infinite || !mpz_divisible_p(n.get_mpz_t(), r.abelian.order.get_mpz_t())) {
      r.contradictions.push_back("group order " + n.get_str() + " is not a multiple of the abelianization order " +
                                 r.abelian.to_string());
    }
    if (cert && cert->certified() && p.n() >= *cert->n_min) {
      r.contradictions.push_back("certificate claims G_n infinite for n >= " + std::to_string(*cert->n_min) +
                                 " but the enumeration closed at n = " + std::to_string(p.n()));
    }
  }
  return r;
}

int cmd_oracle(const Globals& g, const std::string& text, std::uint32_t n, const std::string& cert_path,
               std::ostream& out, std::ostream& err) {
  const NormalizedSpan span = load_word(text);
  if (n < span.spec.k() + 1) {
    throw UsageError("n = " + std::to_string(n) + " is below k + 1 = " + std::to_string(span.spec.k() + 1));
  }
  std::optional<Certificate> cert;
  if (!cert_path.empty()) {
    cert = certificate_from_json(read_file(cert_path));
    if (!cert->word.is_conjugate_or_inverse_of(span.spec.relator())) {
      throw UsageError("certificate is for " + format_word(cert->word) + ", not this relator");
    }
  }
  const CyclicPresentationSpec p(n, span.spec.relator());
  const OracleRun r = run_oracle(p, g.max_cosets, cert ? &*cert : nullptr);

  if (g.json()) {
    Json j;
    j["word"] = format_word(p.word());
    j["n"] = n;
    Json inv = Json::array();
    for (const mpz_class& d : r.snf.invariants) inv.push_back(number(d));
    j["abelian_invariants"] = inv;
    j["abelian_order"] = r.abelian.infinite ? Json("Infinite") : number(r.abelian.order);
    Json e;
    e["outcome"] = r.enumeration.completed() ? "Completed" : "Overflow";
    if (r.enumeration.completed()) e["order"] = r.enumeration.order;
    e["max_cosets"] = r.enumeration.max_cosets;
    e["cosets_defined"] = r.enumeration.cosets_defined;
    e["cosets_collapsed"] = r.enumeration.cosets_collapsed;
    e["strategy"] = r.enumeration.strategy;
    j["enumeration"] = e;
    j["contradictions"] = r.contradictions;
    out << j.dump(2) << "\n";
  } else {
    out << "G_" << n << "(" << format_word(p.word()) << ")\n";
    out << "abelian invariants: " << format_invariants(r.snf) << "\n";
    out << "abelian order: " << r.abelian.to_string() << "\n";
    out << "coset enumeration: " << r.enumeration.to_string() << " [" << r.enumeration.strategy << ", defined "
        << r.enumeration.cosets_defined << ", collapsed " << r.enumeration.cosets_collapsed << "]\n";
  }
  for (const std::string& c : r.contradictions) err << "CONTRADICTION: " << c << "\n";
  return r.contradictions.empty() ? kOk : kContradiction;
}

// ---- corpus ----

struct CorpusRow {
  std::size_t line = 0;
  std::string word;
  std::optional<Certificate> cert;
  std::string oracle;
  std::vector<std::string> contradictions;
  std::string error;
};

CorpusRow process_entry(const Globals& g, const CorpusEntry& e) {
  CorpusRow row;
  row.line = e.line;
  row.word = e.word_text;
  try {
    const NormalizedSpan span = load_word(e.word);
    const auto assumptions = build_assumptions(span.spec, e.assume_pairs, e.assume_triple, "corpus annotation");
    row.cert = certify(span.spec, assumptions, g.params());
    std::optional<std::uint32_t> n = e.n;
    if (!n && row.cert->certified()) n = *row.cert->n_min;
    if (n) {
      const OracleRun r = run_oracle(CyclicPresentationSpec(*n, span.spec.relator()), g.max_cosets, &*row.cert);
      row.oracle = "n=" + std::to_string(*n) + ": " + r.enumeration.to_string() + ", ab " + r.abelian.to_string();
      row.contradictions = r.contradictions;
    }
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
  return row;
}

int cmd_corpus(const Globals& g, const std::string& path, std::size_t random_count, std::ostream& out,
               std::ostream& err) {
  Corpus corpus;
  if (random_count > 0) {
    std::mt19937_64 rng(g.seed);
    for (std::size_t i = 0; i < random_count; ++i) {
      const CyclicWord w = random_relator(rng, 3, 2, 10);
      CorpusEntry e;
      e.line = i + 1;
      e.word = w.base();
      e.word_text = format_word(w);
      corpus.entries.push_back(std::move(e));
    }
  } else {
    if (path.empty()) throw UsageError("corpus needs a file or --random N");
    corpus = parse_corpus(read_file(path));
    if (!corpus.errors.empty()) {
      for (const CorpusError& e : corpus.errors) err << path << ":" << e.line << ": " << e.message << "\n";
      return kUsage;
    }
  }

  std::vector<CorpusRow> rows(corpus.entries.size());
  const std::size_t batch = std::max(1U, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < rows.size(); start += batch) {
    std::vector<std::future<CorpusRow>> jobs;
    const std::size_t end = std::min(rows.size(), start + batch);
    for (std::size_t i = start; i < end; ++i) {
      jobs.push_back(std::async(std::launch::async, process_entry, std::cref(g), std::cref(corpus.entries[i])));
    }
    for (std::size_t i = start; i < end; ++i) rows[i] = jobs[i - start].get();
  }

  std::size_t certified = 0;
  std::size_t none = 0;
  std::size_t errors = 0;
  std::size_t contradictions = 0;
  for (const CorpusRow& r : rows) {
    if (!r.error.empty()) {
      ++errors;
    } else if (r.cert->certified()) {
      ++certified;
    } else {
      ++none;
    }
    if (!r.contradictions.empty()) ++contradictions;
  }

  if (g.json()) {
    Json j;
    Json list = Json::array();
    for (const CorpusRow& r : rows) {
      Json x;
      x["line"] = r.line;
      x["word"] = r.word;
      if (!r.error.empty()) {
        x["error"] = r.error;
      } else {
        x["theorem"] = std::string(to_string(r.cert->theorem));
        x["n_min"] = r.cert->n_min ? Json(*r.cert->n_min) : Json(nullptr);
        if (!r.oracle.empty()) x["oracle"] = r.oracle;
        if (!r.contradictions.empty()) x["contradictions"] = r.contradictions;
      }
      list.push_back(std::move(x));
    }
    j["entries"] = std::move(list);
    j["summary"] = {{"entries", rows.size()},
                    {"certified", certified},
                    {"no_certificate", none},
                    {"errors", errors},
                    {"contradictions", contradictions}};
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(6) << "line" << std::setw(34) << "word" << std::setw(15) << "theorem" << std::setw(7)
        << "n_min"
        << "oracle\n";
    for (const CorpusRow& r : rows) {
      out << std::setw(6) << r.line << std::setw(34) << r.word;
      if (!r.error.empty()) {
        out << "error: " << r.error << "\n";
        continue;
      }
      out << std::setw(15) << to_string(r.cert->theorem) << std::setw(7)
          << (r.cert->n_min ? std::to_string(*r.cert->n_min) : "-") << (r.oracle.empty() ? "-" : r.oracle) << "\n";
    }
    out << "entries: " << rows.size() << "  certified: " << certified << "  no certificate: " << none
        << "  errors: " << errors << "  contradictions: " << contradictions << "\n";
  }
  for (const CorpusRow& r : rows) {
    for (const std::string& c : r.contradictions) err << "line " << r.line << ": CONTRADICTION: " << c << "\n";
    if (!r.error.empty()) err << "line " << r.line << ": " << r.error << "\n";
  }
  if (contradictions) return kContradiction;
  return errors ? kUsage : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Infiniteness certificates and oracles for cyclically presented groups G_n(w)", "cpg"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--max-exponent", g.max_exponent, "Largest exponent in a witness (0: relator length + budget)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cancellation-budget", g.cancellation_budget, "Letters of cancelling padding allowed at cuts")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-cosets", g.max_cosets, "Coset limit for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> word;
  bool explain = false;
  auto* analyze = app.add_subcommand("analyze", "Gap profile and pair verdicts for a word");
  analyze->add_option("word", word, "Relator, e.g. \"x0^-1 x2 x0 x2^-2\"")->required();
  analyze->add_flag("--explain", explain, "Expand each witness step by step");

  std::vector<std::string> pairs;
  bool triple = false;
  std::string source = "supplied on the command line";
  std::string out_path;
  std::string check_path;
  auto* cert = app.add_subcommand("certify", "Emit an infiniteness certificate");
  cert->add_option("word", word, "Relator");
  cert->add_option("--assume-nonexceptional", pairs, "Treat a pair such as \"0,1|1,2\" as non-exceptional");
  cert->add_flag("--assume-triple-trivial", triple, "Assume the k-fold Magnus intersection is trivial");
  cert->add_option("--source", source, "Justification recorded with the assumptions");
  cert->add_option("-o,--output", out_path, "Write the certificate JSON here");
  cert->add_option("--check", check_path, "Re-run a certificate file and compare byte for byte");

  std::uint32_t n = 0;
  std::string cert_path;
  auto* oracle = app.add_subcommand("oracle", "Abelianization and coset enumeration of G_n(w)");
  oracle->add_option("word", word, "Relator")->required();
  oracle->add_option("--n", n, "Number of generators")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--certificate", cert_path, "Flag any contradiction with this certificate");

  std::string corpus_path;
  std::size_t random_count = 0;
  auto* corpus = app.add_subcommand("corpus", "Certify every entry of a corpus file");
  corpus->add_option("path", corpus_path, "Corpus file");
  corpus->add_option("--random", random_count, "Use N seeded random words instead of a file");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(g, join(word), explain, out);
    if (cert->parsed()) {
      if (!check_path.empty()) return cmd_check(check_path, out, err);
      if (word.empty()) throw UsageError("certify needs a word or --check FILE");
      return cmd_certify(g, join(word), pairs, triple, source, out_path, out, err);
    }
    if (oracle->parsed()) return cmd_oracle(g, join(word), n, cert_path, out, err);
    if (corpus->parsed()) return cmd_corpus(g, corpus_path, random_count, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    // The two abelianization computations disagreed.
    err << "CONTRADICTION: " << e.what() << "\n";
    return kContradiction;
  }
  return kUsage;
}

}  // namespace cpg::cli
