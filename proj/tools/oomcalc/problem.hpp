#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oom/oom.hpp"

namespace oomcalc {

/// Malformed input document; the message starts with the offending field
/// path, e.g. `options[1].kappa.w3: ...`.
class SchemaError : public oom::Error {
 public:
  using oom::Error::Error;
};

struct ProblemOption {
  std::string name;
  std::optional<oom::KappaFunction> kappa;  ///< present for kappa blocks
  oom::OomProbability probability;
  std::optional<oom::PearlMu> mu;  ///< present for mu blocks
  oom::OomUtility utility;

  oom::DecisionOption decision() const { return {name, probability, utility}; }
};

struct ProblemDocument {
  oom::OutcomeSpace outcomes;
  std::vector<ProblemOption> options;
};

namespace detail {

using nlohmann::json;

inline std::string quote_path(const std::string& path) { return path.empty() ? "<root>" : path; }

[[noreturn]] inline void fail(const std::string& path, const std::string& msg) {
  throw SchemaError(quote_path(path) + ": " + msg);
}

/// Checks that `block` is an object whose keys are exactly the outcomes and
/// returns its values in outcome order.
inline std::vector<json> outcome_block(const json& block, const oom::OutcomeSpace& space,
                                       const std::string& path) {
  if (!block.is_object()) fail(path, "expected an object keyed by outcome");
  for (auto it = block.begin(); it != block.end(); ++it)
    if (!space.contains(it.key())) fail(path + "." + it.key(), "unknown outcome");
  std::vector<json> out;
  for (const auto& label : space.labels()) {
    auto it = block.find(label);
    if (it == block.end()) fail(path + "." + label, "missing outcome");
    out.push_back(*it);
  }
  return out;
}

inline oom::OomValue oom_literal(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return oom::parse_oom(v.get<std::string>());
    } catch (const oom::Error& e) {
      fail(path, e.what());
    }
  }
  if (v.is_number_integer()) {
    const auto n = v.get<std::int64_t>();
    if (n == 0) return oom::OomValue::zero();
    if (n == 1) return oom::OomValue::one();
    if (n == -1) return oom::OomValue::minus_one();
  }
  fail(path, "expected an order-of-magnitude literal such as \"(+,-4)\"");
}

inline oom::Rank rank_literal(const json& v, const std::string& path) {
  if (v.is_string() && v.get<std::string>() == "inf") return oom::Rank::infinity();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return oom::Rank(v.get<std::int64_t>());
  fail(path, "expected a non-negative integer or \"inf\"");
}

}  // namespace detail

inline ProblemDocument parse_problem(const nlohmann::json& doc) {
  using detail::fail;
  if (!doc.is_object()) fail("", "expected an object");
  auto outcomes_it = doc.find("outcomes");
  if (outcomes_it == doc.end()) fail("outcomes", "missing");
  if (!outcomes_it->is_array() || outcomes_it->empty()) fail("outcomes", "expected a non-empty array");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < outcomes_it->size(); ++i) {
    const auto& v = (*outcomes_it)[i];
    const std::string p = "outcomes[" + std::to_string(i) + "]";
    if (!v.is_string()) fail(p, "expected a string");
    if (!seen.insert(v.get<std::string>()).second) fail(p, "duplicate outcome");
    labels.push_back(v.get<std::string>());
  }
  oom::OutcomeSpace space(labels);

  auto options_it = doc.find("options");
  if (options_it == doc.end()) fail("options", "missing");
  if (!options_it->is_array() || options_it->empty()) fail("options", "expected a non-empty array");

  ProblemDocument out{space, {}};
  for (std::size_t i = 0; i < options_it->size(); ++i) {
    const auto& o = (*options_it)[i];
    const std::string p = "options[" + std::to_string(i) + "]";
    if (!o.is_object()) fail(p, "expected an object");
    for (auto it = o.begin(); it != o.end(); ++it) {
      static const std::set<std::string> known = {"name", "kappa", "oom_prob", "utility", "mu"};
      if (!known.count(it.key())) fail(p + "." + it.key(), "unknown field");
    }
    std::string name = "option" + std::to_string(i + 1);
    if (o.contains("name")) {
      if (!o["name"].is_string()) fail(p + ".name", "expected a string");
      name = o["name"].get<std::string>();
    }

    const bool has_kappa = o.contains("kappa"), has_prob = o.contains("oom_prob");
    if (has_kappa == has_prob) fail(p, "needs exactly one of 'kappa' or 'oom_prob'");
    std::optional<oom::KappaFunction> kappa;
    std::optional<oom::OomProbability> prob;
    if (has_kappa) {
      std::vector<oom::Rank> ranks;
      const auto vals = detail::outcome_block(o["kappa"], space, p + ".kappa");
      for (std::size_t w = 0; w < vals.size(); ++w)
        ranks.push_back(detail::rank_literal(vals[w], p + ".kappa." + space.label(w)));
      try {
        kappa.emplace(space, ranks);
      } catch (const std::exception& e) {
        fail(p + ".kappa", e.what());
      }
      prob.emplace(oom::kappa_to_oom(*kappa));
    } else {
      std::vector<oom::OomValue> atoms;
      const auto vals = detail::outcome_block(o["oom_prob"], space, p + ".oom_prob");
      for (std::size_t w = 0; w < vals.size(); ++w)
        atoms.push_back(detail::oom_literal(vals[w], p + ".oom_prob." + space.label(w)));
      try {
        prob.emplace(space, atoms);
      } catch (const std::exception& e) {
        fail(p + ".oom_prob", e.what());
      }
    }

    const bool has_util = o.contains("utility"), has_mu = o.contains("mu");
    if (has_util == has_mu) fail(p, "needs exactly one of 'utility' or 'mu'");
    std::optional<oom::PearlMu> mu;
    std::vector<oom::OomValue> util;
    if (has_util) {
      const auto vals = detail::outcome_block(o["utility"], space, p + ".utility");
      for (std::size_t w = 0; w < vals.size(); ++w)
        util.push_back(detail::oom_literal(vals[w], p + ".utility." + space.label(w)));
    } else {
      std::vector<std::int64_t> mus;
      const auto vals = detail::outcome_block(o["mu"], space, p + ".mu");
      for (std::size_t w = 0; w < vals.size(); ++w) {
        if (!vals[w].is_number_integer()) fail(p + ".mu." + space.label(w), "expected an integer");
        mus.push_back(vals[w].get<std::int64_t>());
      }
      mu.emplace(space, mus);
      util = oom::mu_to_utility(*mu).values();
    }
    out.options.push_back(
        ProblemOption{name, kappa, *prob, mu, oom::OomUtility(space, util)});
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw oom::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ProblemDocument load_problem(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return parse_problem(doc);
}

/// Name → value bindings. Accepts a JSON object or lines of `name = literal`
/// with `#` comments.
using Environment = std::map<std::string, oom::OomValue>;

inline Environment parse_environment(const std::string& text) {
  Environment env;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError(std::string("environment: ") + e.what());
    }
    for (auto it = doc.begin(); it != doc.end(); ++it)
      env[it.key()] = detail::oom_literal(*it, it.key());
    return env;
  }
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(lineno);
    if (eq == std::string::npos) throw SchemaError(where + ": expected 'name = value'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string name = trim(line.substr(0, eq));
    if (name.empty()) throw SchemaError(where + ": missing name");
    try {
      env[name] = oom::parse_oom(trim(line.substr(eq + 1)));
    } catch (const oom::SyntaxError& e) {
      throw SchemaError(where + ": " + e.message());
    }
  }
  return env;
}

/// Instantiation for every symbol in `names`; repeated names share a value.
inline oom::Instantiation<oom::OomValue> bind(const oom::NameTable& names, const Environment& env) {
  oom::Instantiation<oom::OomValue> a;
  for (const auto& [i, name] : names) {
    auto it = env.find(name);
    if (it == env.end()) throw SchemaError("environment: no value for '" + name + "'");
    a.emplace(i, it->second);
  }
  return a;
}

}  // namespace oomcalc
