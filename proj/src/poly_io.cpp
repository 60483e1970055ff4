#include "permfrob/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "term_accumulator.hpp"

namespace permfrob {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring), acc_(ring) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    term(negative);
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
      ++pos_;
      term(op == '-');
    }
    return acc_.finish();
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", start);
    if (ec != std::errc() || end == text_.data() + pos_) throw ParseError("expected an integer", start);
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  void term(bool negative) {
    const PrimeModulus& mod = ring_->modulus();
    Coeff coeff = 1;
    std::vector<Exponent> exps(ring_->nvars(), 0);
    unsigned degree = 0;
    while (true) {
      const char c = peek();
      const std::size_t at = pos_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = mod.mul(coeff, mod.reduce(integer()));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
        const std::string_view name = text_.substr(pos_, end - pos_);
        const auto idx = ring_->vars().index_of(name);
        if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", at);
        pos_ = end;
        std::uint64_t e = 1;
        if (peek() == '^') {
          ++pos_;
          e = integer();
        }
        degree += static_cast<unsigned>(std::min<std::uint64_t>(e, ring_->degree_cap() + 1ull));
        if (degree > ring_->degree_cap() || exps[*idx] + e > ring_->degree_cap())
          throw OverflowError("term degree exceeds the degree cap (position " + std::to_string(at) + ")");
        exps[*idx] = static_cast<Exponent>(exps[*idx] + e);
      } else {
        throw ParseError(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'",
                         pos_);
      }
      if (peek() != '*') break;
      ++pos_;
    }
    acc_.add(exps, negative ? mod.neg(coeff) : coeff);
  }

  std::string_view text_;
  const RingPtr& ring_;
  TermAccumulator acc_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, std::span<const Exponent> e, const VariableSpace& vars) {
  bool first = true;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += vars.name(v);
    if (e[v] > 1) {
      out += '^';
      out += std::to_string(e[v]);
    }
  }
}

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

std::string render_monomial(const Monomial& m, const VariableSpace& vars) {
  if (m.degree() == 0) return "1";
  std::string out;
  append_monomial(out, m.exponents, vars);
  return out;
}

std::string render_poly(const Polynomial& poly) {
  if (poly.is_zero()) return "0";
  const VariableSpace& vars = poly.ring()->vars();
  std::string out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out += " + ";
    const auto e = poly.exponents(i);
    const bool constant = std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
    const Coeff c = poly.coeff(i);
    if (constant) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) {
      out += std::to_string(c);
      out += '*';
    }
    append_monomial(out, e, vars);
  }
  return out;
}

}  // namespace permfrob
