#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oom/oom.hpp"
#include "oomcalc/problem.hpp"

namespace oomcalc {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kUndefined = 2,
  kExhausted = 3,
  kUnsound = 4,
};

inline constexpr const char* kSchema = "oomcalc-report/1";

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t budget = 10000;
  bool machine = false;

  oom::StarSamplerConfig sampler() const {
    oom::StarSamplerConfig c;
    c.seed = seed;
    return c;
  }
};

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

inline ordered_json header(const char* command) {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

/// Display names for symbols; the k-th repeat of a name gets a `#k` suffix.
inline std::map<oom::SymbolIndex, std::string> display_names(const oom::NameTable& names) {
  std::map<std::string, int> count;
  std::map<oom::SymbolIndex, std::string> out;
  for (const auto& [i, n] : names) {
    const int k = ++count[n];
    out[i] = k == 1 ? n : n + "#" + std::to_string(k);
  }
  return out;
}

inline ordered_json interpretation_json(const oom::Instantiation<oom::ExtendedReal>& r,
                                        const std::map<oom::SymbolIndex, std::string>& names,
                                        const oom::Formula& f) {
  ordered_json j = ordered_json::object();
  for (const auto& [i, v] : r)
    if (f.symbols().count(i)) j[names.at(i)] = oom::to_string(v);
  return j;
}

inline std::string interpretation_text(const oom::Instantiation<oom::ExtendedReal>& r,
                                       const std::map<oom::SymbolIndex, std::string>& names,
                                       const oom::Formula& f) {
  std::string s;
  for (const auto& [i, v] : r) {
    if (!f.symbols().count(i)) continue;
    if (!s.empty()) s += ", ";
    s += names.at(i) + " = " + oom::to_string(v);
  }
  return s;
}

inline ordered_json outcome_values(const oom::OutcomeSpace& space,
                                   const std::vector<oom::ExtendedReal>& v) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < v.size(); ++i) j[space.label(i)] = oom::to_string(v[i]);
  return j;
}

inline std::string outcome_text(const oom::OutcomeSpace& space,
                                const std::vector<oom::ExtendedReal>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += space.label(i) + " = " + oom::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

/// `eval EXPR`: the order-of-magnitude value of EXPR under env.
inline int cmd_eval(const std::string& expr, const Environment& env, const RunConfig& cfg,
                    std::ostream& out) {
  const auto parsed = oom::parse_formula(expr);
  const auto a = bind(parsed.names, env);
  const auto v = oom::evaluate(parsed.formula, a);
  const std::string result = v ? v->to_string() : "undefined";
  if (cfg.machine) {
    auto j = detail::header("eval");
    j["expression"] = expr;
    j["result"] = result;
    detail::emit(out, j);
  } else {
    out << result << "\n";
  }
  return v ? kOk : kUndefined;
}

/// `compare EXPR1 EXPR2`: the relation between the two values.
inline int cmd_compare(const std::string& lhs, const std::string& rhs, const Environment& env,
                       const RunConfig& cfg, std::ostream& out) {
  const auto l = oom::parse_formula(lhs);
  const auto r = oom::parse_formula(rhs);
  const auto lv = oom::evaluate(l.formula, bind(l.names, env));
  const auto rv = oom::evaluate(r.formula, bind(r.names, env));
  const std::string ls = lv ? lv->to_string() : "undefined";
  const std::string rs = rv ? rv->to_string() : "undefined";
  const std::string rel = lv && rv ? oom::to_symbol(oom::compare(*lv, *rv)) : "undefined";
  if (cfg.machine) {
    auto j = detail::header("compare");
    j["lhs_expression"] = lhs;
    j["rhs_expression"] = rhs;
    j["oom_lhs"] = ls;
    j["oom_rhs"] = rs;
    j["relation"] = rel;
    detail::emit(out, j);
  } else {
    out << "lhs = " << ls << "\n"
        << "rhs = " << rs << "\n"
        << "relation: " << rel << "\n";
  }
  return lv && rv ? kOk : kUndefined;
}

/// `expect FILE`: each option's expectation and the pairwise verdicts.
inline int cmd_expect(const ProblemDocument& doc, const RunConfig& cfg, std::ostream& out) {
  std::vector<oom::OomValue> e;
  for (const auto& o : doc.options) e.push_back(oom::expect(o.probability, o.utility));
  ordered_json options = ordered_json::array(), comparisons = ordered_json::array();
  std::string text;
  for (std::size_t i = 0; i < e.size(); ++i) {
    options.push_back({{"name", doc.options[i].name}, {"expectation", e[i].to_string()}});
    text += doc.options[i].name + ": " + e[i].to_string() + "\n";
  }
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const char* verdict = oom::to_string(oom::compare_options(e[i], e[j]));
      comparisons.push_back(
          {{"first", doc.options[i].name}, {"second", doc.options[j].name}, {"verdict", verdict}});
      text += doc.options[i].name + " vs " + doc.options[j].name + ": " + verdict + "\n";
    }
  if (cfg.machine) {
    auto j = detail::header("expect");
    j["options"] = options;
    j["comparisons"] = comparisons;
    detail::emit(out, j);
  } else {
    out << text;
  }
  return kOk;
}

/// `pearl FILE`: Pearl's original and amended values next to the
/// order-of-magnitude expectation.
inline int cmd_pearl(const ProblemDocument& doc, const RunConfig& cfg, std::ostream& out) {
  std::vector<std::vector<std::string>> rows = {
      {"option", "n+", "n-", "original", "amended", "oom", "agrees"}};
  ordered_json options = ordered_json::array();
  bool all_agree = true;
  for (std::size_t i = 0; i < doc.options.size(); ++i) {
    const auto& o = doc.options[i];
    if (!o.mu) throw SchemaError("options[" + std::to_string(i) + "]: pearl needs a 'mu' block");
    const oom::KappaFunction k = o.kappa ? *o.kappa : oom::oom_to_kappa(o.probability);
    const auto c = oom::pearl_cross_check(k, *o.mu);
    all_agree = all_agree && c.agrees;
    rows.push_back({o.name, std::to_string(c.levels.n_plus), std::to_string(c.levels.n_minus),
                    c.original.to_string(), c.amended.to_string(), c.expectation.to_string(),
                    c.agrees ? "yes" : "no"});
    options.push_back({{"name", o.name},
                       {"n_plus", c.levels.n_plus},
                       {"n_minus", c.levels.n_minus},
                       {"original", c.original.to_string()},
                       {"amended", c.amended.to_string()},
                       {"oom", c.expectation.to_string()},
                       {"predicted", c.predicted.to_string()},
                       {"agrees", c.agrees}});
  }
  if (cfg.machine) {
    auto j = detail::header("pearl");
    j["options"] = options;
    detail::emit(out, j);
  } else {
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << line << "\n";
    }
  }
  return all_agree ? kOk : kUnsound;
}

namespace detail {

inline int claim_exit(const oom::SoundnessReport& r) {
  if (r.failures) return kUnsound;
  if (r.exhausted) return kExhausted;
  return kOk;
}

inline const char* result_word(int code) {
  switch (code) {
    case kOk: return "pass";
    case kExhausted: return "exhausted";
    case kUnsound: return "FAIL";
    default: return "error";
  }
}

}  // namespace detail

/// `verify CLAIM`: soundness sampling when LHS > RHS holds, otherwise a
/// search for interpretations violating it.
inline int cmd_verify_claim(const std::string& claim, const Environment& env, const RunConfig& cfg,
                            std::ostream& out) {
  const auto parsed = oom::parse_claim(claim);
  const auto a = bind(parsed.names, env);
  const auto names = detail::display_names(parsed.names);
  const auto sc = cfg.sampler();

  // Undefined sides: exhibit an interpretation that is undefined too.
  for (const auto* side : {&parsed.lhs, &parsed.rhs}) {
    if (oom::evaluate(*side, a)) continue;
    const auto w = oom::undefined_witness(*side, a, sc, cfg.budget);
    const char* label = side == &parsed.lhs ? "lhs" : "rhs";
    if (cfg.machine) {
      auto j = detail::header("verify");
      j["claim"] = claim;
      j["undefined_side"] = label;
      j["witness"] = w ? ordered_json(detail::interpretation_json(w->interpretation, names, *side))
                       : ordered_json(nullptr);
      j["result"] = "undefined";
      detail::emit(out, j);
    } else {
      out << "claim: " << claim << "\n"
          << "oom_" << label << ": undefined\n";
      if (w)
        out << "undefined under: " << detail::interpretation_text(w->interpretation, names, *side)
            << "\n";
      else
        out << "no undefined interpretation within budget " << cfg.budget << "\n";
      out << "result: undefined\n";
    }
    return kUndefined;
  }

  const auto rep = oom::check_claim(parsed.lhs, a, parsed.rhs, a, sc, cfg.samples, cfg.budget);
  const int code = detail::claim_exit(rep);
  if (cfg.machine) {
    auto j = detail::header("verify");
    ordered_json c;
    c["claim"] = claim;
    c["oom_lhs"] = rep.lhs.to_string();
    c["oom_rhs"] = rep.rhs.to_string();
    c["relation"] = oom::to_symbol(rep.relation);
    c["holds"] = rep.holds;
    c["samples"] = rep.samples;
    c["failures"] = rep.failures;
    c["attempts"] = rep.attempts;
    c["exhausted"] = rep.exhausted;
    if (rep.witness) {
      c["witness"] = {{"lhs", detail::interpretation_json(rep.witness->lhs, names, parsed.lhs)},
                      {"rhs", detail::interpretation_json(rep.witness->rhs, names, parsed.rhs)},
                      {"lhs_value", oom::to_string(rep.witness->lhs_value)},
                      {"rhs_value", oom::to_string(rep.witness->rhs_value)}};
    } else {
      c["witness"] = nullptr;
    }
    j["checks"] = ordered_json::array({c});
    j["result"] = detail::result_word(code);
    detail::emit(out, j);
    return code;
  }
  out << "claim: " << claim << "\n"
      << "oom_lhs: " << rep.lhs << "\n"
      << "oom_rhs: " << rep.rhs << "\n"
      << "relation: " << oom::to_symbol(rep.relation) << "\n";
  if (rep.holds) {
    out << "soundness: " << rep.samples - rep.failures << "/" << rep.samples
        << " samples passed\n";
    if (rep.witness) out << "counterexample:\n";
  } else if (rep.witness) {
    out << "completeness: witness found after " << rep.attempts << " attempts\n";
  } else {
    out << "completeness: no witness within budget " << cfg.budget << "\n";
  }
  if (rep.witness) {
    out << "  lhs: " << detail::interpretation_text(rep.witness->lhs, names, parsed.lhs) << "\n"
        << "  rhs: " << detail::interpretation_text(rep.witness->rhs, names, parsed.rhs) << "\n"
        << "  lhs value: " << rep.witness->lhs_value << "\n"
        << "  rhs value: " << rep.witness->rhs_value << "\n";
  }
  out << "result: " << detail::result_word(code) << "\n";
  return code;
}

/// `verify --problem FILE`: both directions of strict preference between two
/// options, each checked against exact probabilistic interpretations.
inline int cmd_verify_problem(const ProblemDocument& doc, const RunConfig& cfg, std::ostream& out) {
  if (doc.options.size() != 2) throw SchemaError("options: verify needs exactly two options");
  const auto& space = doc.outcomes;
  int code = kOk;
  ordered_json checks = ordered_json::array();
  std::string text;
  const auto e1 = oom::expect(doc.options[0].probability, doc.options[0].utility);
  const auto e2 = oom::expect(doc.options[1].probability, doc.options[1].utility);
  text += doc.options[0].name + ": " + e1.to_string() + "\n";
  text += doc.options[1].name + ": " + e2.to_string() + "\n";
  text += std::string("preference: ") + oom::to_string(oom::compare_options(e1, e2)) + "\n";
  for (int dir = 0; dir < 2; ++dir) {
    const auto& first = doc.options[dir];
    const auto& second = doc.options[1 - dir];
    auto sc = cfg.sampler();
    sc.seed = cfg.seed + static_cast<std::uint64_t>(dir);
    const auto rep = oom::verify_theorem3(first.decision(), second.decision(), sc, cfg.samples,
                                          cfg.budget);
    const bool holds = rep.preference == oom::Preference::FirstPreferred;
    int c = kOk;
    if (rep.failures) c = kUnsound;
    else if (rep.exhausted) c = kExhausted;
    code = std::max(code, c);
    const std::string claim = first.name + " > " + second.name;
    ordered_json j;
    j["claim"] = claim;
    j["oom_lhs"] = rep.first_expectation.to_string();
    j["oom_rhs"] = rep.second_expectation.to_string();
    j["relation"] = oom::to_symbol(oom::compare(rep.first_expectation, rep.second_expectation));
    j["holds"] = holds;
    j["samples"] = rep.samples;
    j["failures"] = rep.failures;
    j["attempts"] = rep.attempts;
    j["exhausted"] = rep.exhausted;
    if (rep.witness) {
      const auto& w = *rep.witness;
      j["witness"] = {
          {"lhs", {{"probability", detail::outcome_values(space, w.R1)},
                   {"utility", detail::outcome_values(space, w.V1)}}},
          {"rhs", {{"probability", detail::outcome_values(space, w.R2)},
                   {"utility", detail::outcome_values(space, w.V2)}}},
          {"lhs_value", oom::to_string(w.first_value)},
          {"rhs_value", oom::to_string(w.second_value)}};
    } else {
      j["witness"] = nullptr;
    }
    checks.push_back(j);

    text += "check " + claim + ": ";
    if (holds)
      text += "holds; soundness " + std::to_string(rep.samples - rep.failures) + "/" +
              std::to_string(rep.samples) + " samples passed\n";
    else if (rep.witness)
      text += "does not hold; witness found after " + std::to_string(rep.attempts) + " attempts\n";
    else
      text += "does not hold; no witness within budget " + std::to_string(cfg.budget) + "\n";
    if (rep.witness) {
      const auto& w = *rep.witness;
      text += "  " + first.name + " probability: " + detail::outcome_text(space, w.R1) + "\n";
      text += "  " + first.name + " utility: " + detail::outcome_text(space, w.V1) + "\n";
      text += "  " + second.name + " probability: " + detail::outcome_text(space, w.R2) + "\n";
      text += "  " + second.name + " utility: " + detail::outcome_text(space, w.V2) + "\n";
      text += "  " + first.name + " value: " + oom::to_string(w.first_value) + "\n";
      text += "  " + second.name + " value: " + oom::to_string(w.second_value) + "\n";
    }
  }
  if (cfg.machine) {
    auto j = detail::header("verify");
    j["checks"] = checks;
    j["result"] = detail::result_word(code);
    detail::emit(out, j);
  } else {
    out << text << "result: " << detail::result_word(code) << "\n";
  }
  return code;
}

}  // namespace oomcalc
