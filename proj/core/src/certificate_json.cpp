#include "cpg/certificate_json.hpp"

#include <json.hpp>

#include "cpg/error.hpp"
#include "cpg/word_text.hpp"

namespace cpg {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, "certificate: " + what); }

std::string pair_text(const IndexSet& a, const IndexSet& b) { return format_pair(a, b); }

IndexSet parse_indices(std::string_view s) {
  IndexSet out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    const std::string item(s.substr(pos, comma - pos));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) bad("bad index list '" + std::string(s) + "'");
    out.insert(static_cast<GenIndex>(std::stoul(item)));
    pos = comma + 1;
  }
  return out;
}

std::pair<IndexSet, IndexSet> parse_pair(std::string_view s) {
  const auto bar = s.find('|');
  if (bar == std::string_view::npos) bad("pair '" + std::string(s) + "' lacks '|'");
  return {parse_indices(s.substr(0, bar)), parse_indices(s.substr(bar + 1))};
}

Json witness_json(const FormWitness& w) {
  Json j;
  j["form"] = w.form() == Form::kI ? "I" : "II";
  j["rotation_offset"] = w.rotation_offset;
  j["inverted"] = w.inverted;
  if (const auto* p = std::get_if<FormIParts>(&w.parts)) {
    j["w1"] = format_word(p->w1);
    j["w2"] = format_word(p->w2);
  } else {
    const auto& q = std::get<FormIIParts>(w.parts);
    j["w3"] = format_word(q.w3);
    j["v1"] = format_word(q.v1);
    j["v2"] = format_word(q.v2);
  }
  Json ex = Json::array();
  for (auto [a, b] : w.exponents) ex.push_back(Json::array({a, b}));
  j["exponents"] = ex;
  return j;
}

Json verdict_body(const PairVerdict& v) {
  Json j;
  j["outcome"] = std::string(to_string(v.outcome));
  if (v.witness) j["witness"] = witness_json(*v.witness);
  if (v.outcome == Outcome::kInconclusive) j["reason"] = v.reason;
  return j;
}

Json params_json(const SearchParams& p) {
  Json j;
  j["max_exponent"] = p.max_exponent;
  j["cancellation_budget"] = p.cancellation_budget;
  return j;
}

Outcome outcome_from(const std::string& s) {
  for (Outcome o : {Outcome::kCertifiedNonExceptional, Outcome::kFormMatch, Outcome::kInconclusive}) {
    if (to_string(o) == s) return o;
  }
  bad("unknown outcome '" + s + "'");
}

FormWitness witness_from(const Json& j) {
  FormWitness w;
  w.rotation_offset = j.at("rotation_offset").get<std::size_t>();
  w.inverted = j.at("inverted").get<bool>();
  const std::string form = j.at("form").get<std::string>();
  if (form == "I") {
    w.parts = FormIParts{parse_word(j.at("w1").get<std::string>()), parse_word(j.at("w2").get<std::string>())};
  } else if (form == "II") {
    w.parts = FormIIParts{parse_word(j.at("w3").get<std::string>()), parse_word(j.at("v1").get<std::string>()),
                          parse_word(j.at("v2").get<std::string>())};
  } else {
    bad("unknown form '" + form + "'");
  }
  for (const Json& e : j.at("exponents")) w.exponents.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
  return w;
}

}  // namespace

std::string verdict_to_json(const PairVerdict& verdict) {
  Json j = verdict_body(verdict);
  j["search_params"] = params_json(verdict.search_params);
  return j.dump(2);
}

std::string to_json(const Certificate& c) {
  Json j;
  j["word"] = format_word(c.word);
  j["k"] = c.k;
  j["theorem"] = std::string(to_string(c.theorem));
  if (c.t) j["t"] = *c.t;
  j["n_min"] = c.n_min ? Json(*c.n_min) : Json(nullptr);
  Json checks = Json::array();
  for (const CheckRecord& r : c.checks) {
    Json x;
    x["pair"] = pair_text(r.first, r.second);
    const Json body = verdict_body(r.verdict);
    for (auto it = body.begin(); it != body.end(); ++it) x[it.key()] = it.value();
    if (r.assumed_by) x["assumed_by"] = *r.assumed_by;
    x["search_params"] = params_json(r.verdict.search_params);
    checks.push_back(std::move(x));
  }
  j["checks"] = checks;
  Json assumptions = Json::array();
  for (const Assumption& a : c.assumptions) {
    Json x;
    if (a.kind == Assumption::Kind::kNonExceptionalPair) {
      x["kind"] = "NonExceptionalPair";
      x["pair"] = pair_text(a.first, a.second);
    } else {
      x["kind"] = "TripleIntersectionTrivial";
      x["description"] = a.description;
    }
    x["source"] = a.source;
    if (a.relator) x["relator"] = format_word(*a.relator);
    assumptions.push_back(std::move(x));
  }
  j["assumptions"] = assumptions;
  j["notes"] = c.notes;
  j["conclusion"] = c.conclusion();
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("certificate: ") + e.what());
  }
  try {
    Certificate c;
    c.word = CyclicWord(parse_word(j.at("word").get<std::string>()));
    c.k = j.at("k").get<std::uint32_t>();
    c.theorem = theorem_from_string(j.at("theorem").get<std::string>());
    if (j.contains("t")) c.t = j.at("t").get<std::uint32_t>();
    if (!j.at("n_min").is_null()) c.n_min = j.at("n_min").get<std::uint32_t>();
    for (const Json& x : j.at("checks")) {
      CheckRecord r;
      std::tie(r.first, r.second) = parse_pair(x.at("pair").get<std::string>());
      r.verdict.outcome = outcome_from(x.at("outcome").get<std::string>());
      if (x.contains("witness")) r.verdict.witness = witness_from(x.at("witness"));
      if (x.contains("reason")) r.verdict.reason = x.at("reason").get<std::string>();
      if (x.contains("assumed_by")) r.assumed_by = x.at("assumed_by").get<std::size_t>();
      const Json& p = x.at("search_params");
      r.verdict.search_params.max_exponent = p.at("max_exponent").get<int>();
      r.verdict.search_params.cancellation_budget = p.at("cancellation_budget").get<int>();
      c.checks.push_back(std::move(r));
    }
    for (const Json& x : j.at("assumptions")) {
      Assumption a;
      const std::string kind = x.at("kind").get<std::string>();
      if (kind == "NonExceptionalPair") {
        std::tie(a.first, a.second) = parse_pair(x.at("pair").get<std::string>());
      } else if (kind == "TripleIntersectionTrivial") {
        a.kind = Assumption::Kind::kTripleIntersectionTrivial;
        a.description = x.at("description").get<std::string>();
      } else {
        bad("unknown assumption kind '" + kind + "'");
      }
      a.source = x.at("source").get<std::string>();
      if (x.contains("relator")) a.relator = CyclicWord(parse_word(x.at("relator").get<std::string>()));
      c.assumptions.push_back(std::move(a));
    }
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    bad(e.what());
  }
}

}  // namespace cpg
