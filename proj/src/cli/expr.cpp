#include "faclab/cli/expr.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace faclab::cli {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse_poly(std::size_t min_vars) {
    struct Term {
      GaussianRational coeff;
      std::map<std::size_t, unsigned> powers;
    };
    std::vector<Term> terms;
    std::size_t max_index = 0;

    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = get() == '-';
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t{parse_term_coefficient(), {}};
      skip_ws();
      while (!at_end() && (peek() == '*' || is_var_start(peek()))) {
        if (peek() == '*') {
          get();
          skip_ws();
        }
        const auto [index, power] = parse_factor();
        t.powers[index] += power;
        max_index = std::max(max_index, index);
        skip_ws();
      }
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }

    MultiPoly f(std::max(min_vars, max_index));
    for (const auto& t : terms) {
      ExponentVector e(f.num_vars(), 0);
      for (const auto& [index, power] : t.powers) e[index - 1] = power;
      f.add_term(e, t.coeff);
    }
    return f;
  }

  GaussianRational parse_scalar_only() {
    skip_ws();
    GaussianRational v;
    if (!at_end() && peek() == '(') {
      v = parse_paren_complex();
    } else {
      v = parse_complex_body();
    }
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return v;
  }

 private:
  static bool is_var_start(char c) { return c == 'X' || c == 'x'; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::optional<mpz_class> maybe_natural() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) return std::nullopt;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  // integer ['/' positive-integer]
  std::optional<mpq_class> maybe_rational() {
    auto num = maybe_natural();
    if (!num) return std::nullopt;
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      auto den = maybe_natural();
      if (!den) fail("expected denominator");
      if (*den == 0) fail("zero denominator");
      mpq_class q(*num, *den);
      q.canonicalize();
      return q;
    }
    return mpq_class(*num);
  }

  // [sign] rat | [sign] [rat] 'i' | [sign] rat (+|-) [rat] 'i'
  GaussianRational parse_complex_body() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negative = get() == '-';
      skip_ws();
    }
    auto first = maybe_rational();
    skip_ws();
    if (!at_end() && peek() == 'i') {
      get();
      mpq_class im = first.value_or(mpq_class(1));
      return {mpq_class(0), negative ? mpq_class(-im) : im};
    }
    if (!first) fail("expected a number");
    mpq_class re = negative ? mpq_class(-*first) : *first;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const bool im_negative = get() == '-';
      skip_ws();
      auto second = maybe_rational();
      skip_ws();
      if (at_end() || peek() != 'i') fail("expected 'i' after imaginary part");
      get();
      mpq_class im = second.value_or(mpq_class(1));
      return {re, im_negative ? mpq_class(-im) : im};
    }
    return {re, mpq_class(0)};
  }

  GaussianRational parse_paren_complex() {
    get();  // '('
    GaussianRational v = parse_complex_body();
    skip_ws();
    if (at_end() || peek() != ')') fail("expected ')'");
    get();
    return v;
  }

  GaussianRational parse_term_coefficient() {
    if (at_end()) fail("expected a term");
    if (peek() == '(') return parse_paren_complex();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      auto q = maybe_rational();
      return GaussianRational(*q);
    }
    if (is_var_start(peek())) return GaussianRational(1);
    fail("expected a coefficient or variable");
  }

  std::pair<std::size_t, unsigned> parse_factor() {
    if (at_end() || !is_var_start(peek())) fail("expected a variable");
    get();
    std::size_t index = 1;
    if (auto digits = maybe_natural()) {
      if (*digits == 0) fail("variable index must be positive");
      if (!digits->fits_ulong_p()) fail("variable index too large");
      index = digits->get_ui();
    }
    skip_ws();
    unsigned power = 1;
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      auto p = maybe_natural();
      if (!p) fail("expected exponent");
      if (!p->fits_uint_p()) fail("exponent too large");
      power = static_cast<unsigned>(p->get_ui());
    }
    return {index, power};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const ExponentVector& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.empty() ? "X" + std::to_string(i + 1) : names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return parts;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t min_vars) { return Parser(text).parse_poly(min_vars); }

GaussianRational parse_scalar(std::string_view text) { return Parser(text).parse_scalar_only(); }

std::vector<GaussianRational> parse_scalar_list(std::string_view text) {
  std::vector<GaussianRational> out;
  for (auto part : split_commas(text)) out.push_back(parse_scalar(part));
  return out;
}

std::vector<GaussianRational> parse_grid(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return parse_scalar_list(text);
  const GaussianRational lo = parse_scalar(text.substr(0, dots));
  const GaussianRational hi = parse_scalar(text.substr(dots + 2));
  if (!lo.is_real() || !hi.is_real() || lo.re().get_den() != 1 || hi.re().get_den() != 1) {
    throw ParseError("grid range bounds must be integers", dots);
  }
  if (lo.re() > hi.re()) throw ParseError("grid range is empty (lower bound exceeds upper bound)", dots);
  std::vector<GaussianRational> out;
  for (mpz_class v = lo.re().get_num(); v <= hi.re().get_num(); ++v) out.emplace_back(v);
  return out;
}

std::string format_poly(const MultiPoly& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const std::string mono = monomial_text(it->first, names);
    const GaussianRational& c = it->second;
    std::string coeff;
    if (c.is_real()) {
      const bool negative = sgn(c.re()) < 0;
      const mpq_class magnitude = abs(c.re());
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      if (mono.empty()) {
        coeff = magnitude.get_str();
      } else if (magnitude != 1) {
        coeff = magnitude.get_str() + "*";
      }
    } else {
      out += first ? "" : " + ";
      coeff = "(" + c.to_string() + ")" + (mono.empty() ? "" : "*");
    }
    out += coeff + mono;
    first = false;
  }
  return out;
}

std::string format_unipoly(const UniPoly& p, const std::string& name) {
  MultiPoly f(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) f.add_term({static_cast<unsigned>(i)}, p.coeffs()[i]);
  const std::vector<std::string> names{name};
  return format_poly(f, names);
}

std::string format_list(std::span<const GaussianRational> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
  return os.str();
}

}  // namespace faclab::cli
