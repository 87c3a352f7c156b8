#include "primform/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "primform/error.hpp"

namespace primform {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Poly polynomial() {
    Poly p(vars_.size());
    skip();
    if (at_end()) throw error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Rational(-1);
        ++pos_;
        skip();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      auto [m, c] = term();
      p.add_term(m, sign * c);
      first = false;
    }
    return p;
  }

  Monomial monomial_only() {
    skip();
    auto [m, c] = term();
    if (!c.is_one()) throw error("basis entries must be monic monomials");
    if (!at_end()) throw error("trailing characters");
    return m;
  }

 private:
  std::pair<Monomial, Rational> term() {
    std::vector<int> exps(vars_.size(), 0);
    Rational coeff(1);
    bool any = false;
    for (;;) {
      skip();
      if (at_end()) break;
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Rational num(integer());
        skip();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip();
          const long den = integer();
          if (den == 0) throw error("zero denominator");
          num = num / Rational(den);
        }
        coeff = coeff * num;
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        const std::string name = identifier();
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw error("unknown variable '" + name + "'");
        long power = 1;
        skip();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip();
          power = integer();
        }
        exps[it - vars_.begin()] += static_cast<int>(power);
      } else {
        throw error(std::string("unexpected '") + ch + "'");
      }
      any = true;
      skip();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (peek() == '*') ++pos_;
    }
    if (!any) throw error("empty term");
    return {Monomial(exps), coeff};
  }

  long integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw error("expected an integer");
    if (pos_ - start > 9) throw error("integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    const std::size_t start = pos_++;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  ParseError error(const std::string& what) const {
    return ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n[]");
  const auto e = s.find_last_not_of(" \t\n[]");
  return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).polynomial();
}

std::vector<std::string> detect_variables(std::string_view text) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      names.emplace(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

std::vector<Monomial> parse_monomial_list(std::string_view text, const std::vector<std::string>& variables) {
  std::vector<Monomial> out;
  for (auto part : split_commas(text)) {
    const std::string item = trim(part);
    if (item.empty()) throw ParseError("empty entry in monomial list");
    out.push_back(Parser(item, variables).monomial_only());
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split_commas(text)) {
    const std::string item = trim(part);
    if (item.empty()) throw ParseError("empty entry in rational list");
    out.push_back(Rational::parse(item));
  }
  return out;
}

}  // namespace primform
