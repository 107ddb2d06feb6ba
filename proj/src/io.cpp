#include "monorr/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "monorr/errors.hpp"

namespace monorr {

namespace {

using Term = std::map<std::string, exponent_t>;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  IdealSpec parse_ideal() {
    IdealSpec spec;
    if (parse_vars_header(spec.variables))
      fixed_vars_ = true;
    skip_ws();
    if (at_end())
      fail("expected at least one generator");
    for (;;) {
      spec.generators.push_back(parse_term(spec.variables));
      skip_ws();
      if (at_end())
        break;
      expect(',');
    }
    return spec;
  }

  Term parse_single(std::vector<std::string>& variables) {
    fixed_vars_ = true;
    skip_ws();
    Term t = parse_term(variables);
    skip_ws();
    if (!at_end())
      fail("unexpected trailing input");
    return t;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(what, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws(bool stop_at_newline = false) {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      if (stop_at_newline && peek() == '\n')
        return;
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string parse_identifier() {
    skip_ws();
    if (!ident_start(peek()))
      fail("expected a variable name");
    const std::size_t start = pos_;
    while (!at_end() && ident_char(peek()))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  exponent_t parse_integer() {
    skip_ws();
    if (peek() == '-')
      fail("negative exponent");
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    exponent_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{})
      fail_at("exponent out of range", start);
    return v;
  }

  /// "vars: a, b, c" on its own line; returns false (consuming nothing) if absent.
  bool parse_vars_header(std::vector<std::string>& vars) {
    const std::size_t saved = pos_;
    skip_ws();
    if (text_.substr(pos_, 4) != "vars") {
      pos_ = saved;
      return false;
    }
    std::size_t after = pos_ + 4;
    while (after < text_.size() && (text_[after] == ' ' || text_[after] == '\t'))
      ++after;
    if (after >= text_.size() || text_[after] != ':') {
      pos_ = saved;
      return false;
    }
    pos_ = after + 1;
    for (;;) {
      skip_ws(true);
      const std::size_t at = pos_;
      std::string name = parse_identifier();
      if (std::find(vars.begin(), vars.end(), name) != vars.end())
        fail_at("duplicate variable '" + name + "'", at);
      vars.push_back(std::move(name));
      skip_ws(true);
      if (peek() != ',')
        break;
      ++pos_;
    }
    skip_ws(true);
    if (!at_end() && peek() != '\n')
      fail("expected end of vars line");
    return true;
  }

  Term parse_term(std::vector<std::string>& vars) {
    Term term;
    for (;;) {
      skip_ws();
      if (peek() == '1' && (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
      } else {
        const std::size_t at = pos_;
        std::string name = parse_identifier();
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
          if (fixed_vars_)
            fail_at("unknown variable '" + name + "'", at);
          vars.push_back(name);
        }
        exponent_t e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          e = parse_integer();
        }
        if (e > 0) {
          exponent_t& slot = term[name];
          if (__builtin_add_overflow(slot, e, &slot))
            fail_at("exponent out of range", at);
        }
      }
      skip_ws();
      if (peek() != '*')
        break;
      ++pos_;
    }
    return term;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool fixed_vars_ = false;
};

std::string format_term(const Term& t, const std::vector<std::string>& vars) {
  std::string out;
  for (const auto& v : vars) {
    auto it = t.find(v);
    if (it == t.end())
      continue;
    if (!out.empty())
      out += '*';
    out += v;
    if (it->second != 1)
      out += '^' + std::to_string(it->second);
  }
  return out.empty() ? "1" : out;
}

} // namespace

IdealSpec parse_ideal(std::string_view text) { return Parser(text).parse_ideal(); }

Monomial parse_monomial(std::string_view text, const std::vector<std::string>& variables) {
  std::vector<std::string> vars = variables;
  Term t = Parser(text).parse_single(vars);
  std::vector<exponent_t> e(vars.size(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (auto it = t.find(vars[i]); it != t.end())
      e[i] = it->second;
  return Monomial(std::move(e));
}

std::string serialize(const IdealSpec& spec) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < spec.variables.size(); ++i) {
    if (i)
      out += ", ";
    out += spec.variables[i];
  }
  out += '\n';
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    if (i)
      out += ", ";
    out += format_term(spec.generators[i], spec.variables);
  }
  out += '\n';
  return out;
}

MonomialIdeal to_ideal(const IdealSpec& spec) {
  const std::size_t n = spec.variables.size();
  std::vector<Monomial> gens;
  gens.reserve(spec.generators.size());
  for (const auto& t : spec.generators) {
    std::vector<exponent_t> e(n, 0);
    for (const auto& [name, exp] : t) {
      auto it = std::find(spec.variables.begin(), spec.variables.end(), name);
      if (it == spec.variables.end())
        throw std::invalid_argument("term uses undeclared variable '" + name + "'");
      e[static_cast<std::size_t>(it - spec.variables.begin())] = exp;
    }
    gens.emplace_back(std::move(e));
  }
  return reduce_generators(n, std::move(gens));
}

IdealSpec to_spec(const std::vector<std::string>& variables, const MonomialIdeal& I) {
  require_same_size(variables.size(), I.num_vars());
  IdealSpec spec{variables, {}};
  for (const auto& g : I) {
    Term t;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0)
        t[variables[i]] = g[i];
    spec.generators.push_back(std::move(t));
  }
  return spec;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
  require_same_size(variables.size(), m.size());
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += variables[i];
    if (m[i] != 1)
      out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& variables) {
  if (I.is_zero())
    return "<0>";
  std::string out = "<";
  bool first = true;
  for (const auto& g : I) {
    if (!first)
      out += ", ";
    first = false;
    out += format_monomial(g, variables);
  }
  out += '>';
  return out;
}

} // namespace monorr
