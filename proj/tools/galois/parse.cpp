#include "galois/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "galois/error.hpp"

namespace galois::cli {

namespace {

constexpr int kMaxDegree = 5;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatPoly parse() {
    skip_ws();
    if (peek() == '[') return parse_coeff_list();
    return parse_expression();
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  std::optional<char> variable_;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Error::Kind::parse_error,
                "parse error at position " + std::to_string(pos_ + 1) + ": " + what);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  bool done() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer parse_unsigned_integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    Integer value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      value = value * 10 + (take() - '0');
    return value;
  }

  Rational parse_number() {
    Integer num = parse_unsigned_integer();
    skip_ws();
    if (peek() == '/') {
      // lookahead: a denominator must follow for this to be a rational literal
      size_t save = pos_;
      ++pos_;
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Integer den = parse_unsigned_integer();
        if (den == 0) fail("zero denominator");
        return Rational(num, den);
      }
      pos_ = save;
    }
    return Rational(num);
  }

  void note_variable(char v) {
    if (variable_ && *variable_ != v)
      fail(std::string("polynomial must be univariate; saw both '") + *variable_ + "' and '" + v +
           "'");
    variable_ = v;
  }

  int parse_exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    Integer e = parse_unsigned_integer();
    if (e > kMaxDegree)
      throw Error(Error::Kind::degree_out_of_range,
                  "degree " + e.str() + " exceeds the supported maximum of 5");
    return e.convert_to<int>();
  }

  RatPoly parse_expression() {
    std::map<int, Rational> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (done()) {
        if (first) fail("empty polynomial");
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_ws();
        if (done()) fail("dangling sign");
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }

      Rational coeff = 1;
      bool saw_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_number();
        saw_number = true;
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable after '*'");
        }
      }

      int exp = 0;
      if (std::isalpha(static_cast<unsigned char>(peek()))) {
        note_variable(take());
        exp = parse_exponent();
      } else if (!saw_number) {
        fail("expected a coefficient or a variable");
      }

      terms[exp] += sign * coeff;
      first = false;
    }

    int max_exp = 0;
    for (const auto& [e, c] : terms) max_exp = std::max(max_exp, e);
    std::vector<Rational> coeffs(static_cast<size_t>(max_exp) + 1, Rational(0));
    for (const auto& [e, c] : terms) coeffs[static_cast<size_t>(e)] = c;
    RatPoly out(std::move(coeffs));  // trims canceled leading terms
    if (out.is_zero())
      throw Error(Error::Kind::degree_out_of_range, "polynomial is identically zero");
    return out;
  }

  RatPoly parse_coeff_list() {
    ++pos_;  // '['
    std::vector<Rational> desc;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coefficient");
      desc.push_back(sign * parse_number());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    skip_ws();
    if (!done()) fail("trailing characters after ']'");
    if (desc.size() > kMaxDegree + 1)
      throw Error(Error::Kind::degree_out_of_range,
                  "coefficient list of length " + std::to_string(desc.size()) +
                      " exceeds the supported maximum degree of 5");
    if (desc.front() == 0)
      throw Error(Error::Kind::parse_error,
                  "parse error: leading coefficient of a coefficient list must be nonzero");
    return RatPoly::from_desc(std::move(desc));
  }
};

}  // namespace

RatPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string render(const RatPoly& p) { return to_string(p); }

}  // namespace galois::cli
