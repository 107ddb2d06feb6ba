#include "monorr/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monorr/box.hpp"
#include "monorr/errors.hpp"
#include "monorr/freiman.hpp"
#include "monorr/goodness.hpp"
#include "monorr/io.hpp"
#include "monorr/ratliff_rush.hpp"

namespace monorr::cli {

namespace {

using nlohmann::json;
using Vars = std::vector<std::string>;

struct Options {
  std::string input = "-";
  std::string inline_ideal;
  std::string format = "text";
  unsigned threads = 1;
  bool skip_classify = false;
  std::string axis;
  std::vector<exponent_t> box;
  exponent_t exponent = 2;
  std::string by;
  exponent_t k_max = default_oracle_depth;
  std::size_t window = default_oracle_window;
};

json to_json(const Monomial& m) { return json(std::vector<exponent_t>(m.exponents().begin(), m.exponents().end())); }

json to_json(const MonomialIdeal& I, const Vars& vars) {
  json gens = json::array();
  for (const auto& g : I)
    gens.push_back(to_json(g));
  return json{{"vars", vars}, {"generators", gens}};
}

json to_json(const std::vector<Monomial>& ms) {
  json a = json::array();
  for (const auto& m : ms)
    a.push_back(to_json(m));
  return a;
}

std::string list_monomials(const std::vector<Monomial>& ms, const Vars& vars) {
  std::string s = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i)
      s += ", ";
    s += format_monomial(ms[i], vars);
  }
  return s + "}";
}

/// Generators of `bigger` that are not in `smaller`.
std::vector<Monomial> added_generators(const MonomialIdeal& bigger, const MonomialIdeal& smaller) {
  std::vector<Monomial> out;
  for (const auto& g : bigger)
    if (!contains(smaller, g))
      out.push_back(g);
  return out;
}

std::string describe_extension(const MonomialIdeal& bigger, const MonomialIdeal& base, const Vars& vars) {
  auto extra = added_generators(bigger, base);
  if (extra.empty())
    return "I";
  return "I + " + format_ideal(MonomialIdeal::generated_by(base.num_vars(), std::move(extra)), vars);
}

const char* verdict_name(Verdict v) { return v == Verdict::good ? "good" : "bad"; }

const char* rule_name(Rule r) {
  switch (r) {
  case Rule::necessary_failed:
    return "necessary-failed";
  case Rule::sufficient_passed:
    return "sufficient-passed";
  case Rule::exhaustive:
    return "exhaustive";
  }
  return "?";
}

const char* freiman_name(FreimanVerdict v) {
  switch (v) {
  case FreimanVerdict::freiman:
    return "freiman";
  case FreimanVerdict::not_freiman:
    return "not-freiman";
  case FreimanVerdict::not_applicable:
    return "not-applicable";
  }
  return "?";
}

std::string witness_text(const Witness& w, const Vars& vars) {
  return format_monomial(w.monomial, vars) + " in I^" + std::to_string(w.power) + " (largest box sum " +
         std::to_string(w.box_sum) + " < " + std::to_string(w.power - 1) + ")";
}

json classification_json(const ClassificationReport& r) {
  json j{{"verdict", verdict_name(r.verdict)},
         {"rule", rule_name(r.rule)},
         {"non_corners", to_json(r.non_corners)},
         {"k_bounds", r.k_bounds},
         {"witness", nullptr}};
  if (r.witness)
    j["witness"] = json{{"monomial", to_json(r.witness->monomial)}, {"power", r.witness->power}, {"box_sum", r.witness->box_sum}};
  return j;
}

std::string read_input(const Options& o, std::istream& in) {
  if (!o.inline_ideal.empty())
    return o.inline_ideal;
  if (o.input == "-")
    return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(o.input);
  if (!file)
    throw std::runtime_error("cannot open input file '" + o.input + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

std::size_t resolve_axis(const std::string& axis, const Vars& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == axis)
      return i;
  std::size_t idx = 0;
  auto [ptr, ec] = std::from_chars(axis.data(), axis.data() + axis.size(), idx);
  if (ec != std::errc{} || ptr != axis.data() + axis.size() || idx < 1 || idx > vars.size())
    throw std::invalid_argument("unknown axis '" + axis + "' (use a variable name or 1-based index)");
  return idx - 1;
}

struct Outcome {
  json result;
  std::string text;
};

Outcome execute(const std::string& command, const Options& o, const MonomialIdeal& I, const Vars& vars,
                std::ostream& err) {
  Outcome res;
  std::ostringstream text;

  if (command == "classify") {
    const auto r = classify(I);
    res.result = classification_json(r);
    text << "verdict: " << verdict_name(r.verdict) << "\n";
    text << "rule: " << rule_name(r.rule) << "\n";
    for (std::size_t i = 0; i < r.k_bounds.size(); ++i)
      text << "K[" << format_monomial(r.non_corners[i], vars) << "] = " << r.k_bounds[i] << "\n";
    if (r.witness)
      text << "witness: " << witness_text(*r.witness, vars) << "\n";
  } else if (command == "closure") {
    const auto closure = rr_closure(I, {.skip_classify = o.skip_classify, .threads = o.threads});
    res.result = json{{"closure", to_json(closure, vars)},
                      {"added", to_json(added_generators(closure, I))},
                      {"ratliff_rush", closure == I}};
    text << "closure: " << format_ideal(closure, vars) << "\n";
    text << "closure = " << describe_extension(closure, I, vars) << "\n";
  } else if (command == "stabilize") {
    std::vector<std::size_t> axes;
    if (o.axis.empty()) {
      for (std::size_t i = 0; i < vars.size(); ++i)
        axes.push_back(i);
    } else {
      axes.push_back(resolve_axis(o.axis, vars));
    }
    if (!o.skip_classify)
      require_good(I);
    json list = json::array();
    for (auto axis : axes) {
      const auto s = axis_stabilize(I, axis, {.skip_classify = true});
      json rounds = json::array();
      for (const auto& f : s.new_monomials)
        rounds.push_back(to_json(f));
      list.push_back(json{{"axis", axis + 1},
                          {"variable", vars[axis]},
                          {"q", s.q},
                          {"ideal", to_json(s.ideal, vars)},
                          {"new_monomials", rounds}});
      text << "axis " << vars[axis] << ": q = " << s.q << ", " << s.ideal.size() << " generators\n";
      for (std::size_t t = 1; t < s.new_monomials.size(); ++t)
        text << "  F" << t << " = " << list_monomials(s.new_monomials[t], vars) << "\n";
      text << "  ideal = " << describe_extension(s.ideal, I, vars) << "\n";
    }
    res.result = json{{"axes", list}};
  } else if (command == "box-ideal") {
    if (o.box.size() != vars.size())
      throw std::invalid_argument("--box needs " + std::to_string(vars.size()) + " coordinates");
    if (!classify(I).good())
      err << "warning: ideal is bad; the result is the colon I^(|a|+1) : mu^a only\n";
    const auto J = box_ideal(I, BoxCoord{o.box});
    res.result = json{{"box", o.box}, {"ideal", to_json(J, vars)}};
    text << format_ideal(J, vars) << "\n";
  } else if (command == "power") {
    const auto P = ideal_power(I, o.exponent);
    res.result = json{{"exponent", o.exponent}, {"ideal", to_json(P, vars)}};
    text << format_ideal(P, vars) << "\n";
    text << "generators: " << P.size() << "\n";
  } else if (command == "colon") {
    if (o.by.empty())
      throw std::invalid_argument("colon needs --by");
    IdealSpec by_spec = parse_ideal("vars: " + [&] {
      std::string s;
      for (std::size_t i = 0; i < vars.size(); ++i)
        s += (i ? "," : "") + vars[i];
      return s;
    }() + "\n" + o.by);
    const auto J = to_ideal(by_spec);
    const auto Q = colon_ideal(I, J);
    res.result = json{{"by", to_json(J, vars)}, {"ideal", to_json(Q, vars)}};
    text << format_ideal(Q, vars) << "\n";
  } else if (command == "oracle") {
    const auto r = oracle_closure(I, o.k_max, o.window);
    json quotients = json::array();
    for (const auto& q : r.quotients)
      quotients.push_back(to_json(q, vars));
    res.result = json{{"k_max", r.k_max},
                      {"window", r.window},
                      {"counts", r.generator_counts()},
                      {"quotients", quotients},
                      {"union", to_json(r.union_ideal, vars)},
                      {"stabilized", r.stabilized}};
    for (exponent_t k = 1; k < r.quotients.size(); ++k)
      text << "|G(I^" << k + 1 << " : I^" << k << ")| = " << r.quotients[k].size() << "\n";
    text << "union: " << format_ideal(r.union_ideal, vars) << "\n";
    text << "union = " << describe_extension(r.union_ideal, I, vars) << "\n";
    text << "stabilized: " << (r.stabilized ? "yes" : "no") << " (k_max = " << r.k_max << ", window = " << r.window
         << ")\n";
  } else if (command == "freiman") {
    const auto r = freiman_check(I);
    res.result = json{{"equigenerated", r.equigenerated},
                      {"degree", r.degree ? json(*r.degree) : json(nullptr)},
                      {"m_primary", r.m_primary},
                      {"n", r.n},
                      {"g1", r.g1},
                      {"g2", r.g2},
                      {"bound", r.bound},
                      {"very_good", r.very_good ? json(*r.very_good) : json(nullptr)},
                      {"verdict", freiman_name(r.verdict)}};
    text << "verdict: " << freiman_name(r.verdict) << "\n";
    text << "|G(I)| = " << r.g1 << ", |G(I^2)| = " << r.g2 << ", bound = " << r.bound << "\n";
  } else if (command == "very-good") {
    const bool vg = is_very_good(I);
    res.result = json{{"very_good", vg}};
    text << "very good: " << (vg ? "yes" : "no") << "\n";
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  res.text = text.str();
  return res;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "Ideal file, or - for stdin")->capture_default_str();
  sub->add_option("--ideal", o.inline_ideal, "Ideal given inline instead of a file");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sub->add_option("--threads", o.threads, "Worker threads for independent computations")->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Monomial ideal powers, good/bad classification and Ratliff-Rush closures", "monorr"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"classify", "Good/bad verdict under the box decomposition principle"},
      {"closure", "Ratliff-Rush closure of a good ideal"},
      {"stabilize", "Axis-line stabilization I_{q e_i}"},
      {"box-ideal", "Box ideal I_a = I^(|a|+1) : mu^a"},
      {"power", "Minimal generators of I^l"},
      {"colon", "Colon ideal I : J"},
      {"oracle", "Successive quotients I^(k+1) : I^k and their union"},
      {"freiman", "Freiman test for equigenerated m-primary ideals"},
      {"very-good", "Test I^2 = I * <mu_1..mu_n>"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    const std::string cmd = name;
    if (cmd == "closure" || cmd == "stabilize")
      sub->add_flag("--skip-classify", o.skip_classify, "UNSOUND: apply the formula without checking goodness");
    if (cmd == "stabilize")
      sub->add_option("--axis", o.axis, "Variable name or 1-based index (default: all)");
    if (cmd == "box-ideal")
      sub->add_option("--box", o.box, "Box coordinates a_1,...,a_n")->delimiter(',')->required();
    if (cmd == "power")
      sub->add_option("--exp", o.exponent, "Exponent l")->capture_default_str();
    if (cmd == "colon")
      sub->add_option("--by", o.by, "Monomial or ideal J in the same variables")->required();
    if (cmd == "oracle") {
      sub->add_option("--kmax", o.k_max, "Largest k")->check(CLI::PositiveNumber)->capture_default_str();
      sub->add_option("--window", o.window, "Equal trailing quotients required")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_failure;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string source;
  IdealSpec spec;
  try {
    source = read_input(o, in);
    spec = parse_ideal(source);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }

  const auto I = to_ideal(spec);
  const auto& vars = spec.variables;
  try {
    auto outcome = execute(command, o, I, vars, err);
    if (o.format == "json") {
      json report{{"command", command}, {"input", to_json(I, vars)}, {"version", version}, {"result", outcome.result}};
      out << report.dump(2) << "\n";
    } else {
      out << "input: " << format_ideal(I, vars) << "\n" << outcome.text;
    }
    return ok;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const not_m_primary& e) {
    err << "error: ideal is not m-primary: no pure power of " << vars[e.variable()] << " among the generators\n";
    return not_m_primary_failure;
  } catch (const bad_ideal& e) {
    err << "error: ideal is bad; the closure formula needs a good ideal\n";
    if (e.report().witness)
      err << "witness: " << witness_text(*e.report().witness, vars) << "\n";
    err << "hint: run `monorr oracle` for the successive-quotient closure\n";
    return bad_ideal_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
}

} // namespace monorr::cli
