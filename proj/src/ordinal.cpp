#include "bigramsey/ordinal.hpp"

#include <cctype>
#include <utility>

namespace bigramsey {

Ordinal::Ordinal(std::vector<OrdinalTerm> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::finite(const Natural& c) {
  return monomial(Ordinal{}, c);
}

Ordinal Ordinal::omega() { return monomial(finite(1), 1); }

Ordinal Ordinal::monomial(const Ordinal& exponent, const Natural& coefficient) {
  if (coefficient == 0) {
    return Ordinal{};
  }
  return Ordinal{std::vector<OrdinalTerm>{OrdinalTerm{exponent, coefficient}}};
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Natural Ordinal::finite_value() const {
  if (!is_finite()) {
    throw std::domain_error("ordinal is not finite");
  }
  return terms_.empty() ? Natural{0} : terms_[0].coefficient;
}

bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

Natural Ordinal::finite_tail() const {
  if (!terms_.empty() && terms_.back().exponent.is_zero()) {
    return terms_.back().coefficient;
  }
  return 0;
}

Ordinal Ordinal::without_finite_tail() const {
  if (finite_tail() == 0) {
    return *this;
  }
  return Ordinal{std::vector<OrdinalTerm>(terms_.begin(), terms_.end() - 1)};
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) {
      return c;
    }
    if (x[i].coefficient != y[i].coefficient) {
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
  }
  return x.size() <=> y.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

void Ordinal::check_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient < 1) {
      throw std::logic_error("CNF coefficient must be positive");
    }
    terms_[i].exponent.check_canonical();
    if (i > 0 && !(terms_[i].exponent < terms_[i - 1].exponent)) {
      throw std::logic_error("CNF exponents must strictly decrease");
    }
  }
}

Comparison compare(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Comparison::less;
  if (c > 0) return Comparison::greater;
  return Comparison::equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) {
    return a;
  }
  const Ordinal& lead = b.terms_.front().exponent;
  std::vector<OrdinalTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  Natural carry = 0;
  for (const auto& t : a.terms_) {
    if (lead < t.exponent) {
      out.push_back(t);
    } else if (t.exponent == lead) {
      carry = t.coefficient;
    }
  }
  for (std::size_t i = 0; i < b.terms_.size(); ++i) {
    out.push_back(b.terms_[i]);
    if (i == 0) {
      out.back().coefficient += carry;
    }
  }
  return Ordinal{std::move(out)};
}

// a * b distributes over the terms of b from the left:
//   a * (w^e * c) = w^(lead(a) + e) * c   for e > 0,
//   a * c         = a with its leading coefficient scaled by c.
Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) {
    return Ordinal{};
  }
  const OrdinalTerm& head = a.terms_.front();
  Ordinal result;
  for (const auto& t : b.terms_) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      std::vector<OrdinalTerm> scaled = a.terms_;
      scaled.front().coefficient *= t.coefficient;
      piece = Ordinal{std::move(scaled)};
    } else {
      piece = Ordinal::monomial(add(head.exponent, t.exponent), t.coefficient);
    }
    result = add(result, piece);
  }
  return result;
}

Ordinal pow_nat(const Ordinal& a, std::size_t m) {
  Ordinal result = Ordinal::finite(1);
  for (std::size_t i = 0; i < m; ++i) {
    result = mul(result, a);
  }
  return result;
}

bool below_omega_omega(const Ordinal& a) {
  for (const auto& t : a.terms()) {
    if (!t.exponent.is_finite()) {
      return false;
    }
  }
  return true;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal result = expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return result;
  }

private:
  Ordinal expr() {
    Ordinal sum = term();
    while (accept('+')) {
      sum = add(sum, term());
    }
    return sum;
  }

  Ordinal term() {
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return Ordinal::finite(nat());
    }
    if (!accept('w')) {
      throw ParseError("expected 'w' or a natural number", pos_);
    }
    Ordinal exponent = Ordinal::finite(1);
    if (accept('^')) {
      exponent = expo();
    }
    Natural coefficient = 1;
    if (accept('*')) {
      skip_space();
      const std::size_t at = pos_;
      coefficient = nat();
      if (coefficient == 0) {
        throw ParseError("coefficient must be positive", at);
      }
    }
    return Ordinal::monomial(exponent, coefficient);
  }

  Ordinal expo() {
    skip_space();
    if (accept('(')) {
      Ordinal inner = expr();
      if (!accept(')')) {
        throw ParseError("expected ')'", pos_);
      }
      return inner;
    }
    if (accept('w')) {
      return Ordinal::omega();
    }
    return Ordinal::finite(nat());
  }

  Natural nat() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      throw ParseError("expected a natural number", pos_);
    }
    return Natural{std::string(text_.substr(start, pos_ - start))};
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_exponent(const Ordinal& e) {
  if (e.is_finite()) {
    return e.finite_value().str();
  }
  if (e == Ordinal::omega()) {
    return "w";
  }
  return "(" + format_ordinal(e) + ")";
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser{text}.parse(); }

std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) {
      out += " + ";
    }
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += "w";
    if (t.exponent != Ordinal::finite(1)) {
      out += "^" + format_exponent(t.exponent);
    }
    if (t.coefficient != 1) {
      out += "*" + t.coefficient.str();
    }
  }
  return out;
}

}  // namespace bigramsey
