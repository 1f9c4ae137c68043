#ifndef BIGRAMSEY_ORDINAL_HPP
#define BIGRAMSEY_ORDINAL_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bigramsey/natural.hpp"

namespace bigramsey {

struct OrdinalTerm;

/*
    Ordinal below epsilon_0 in Cantor normal form:

        w^e0 * c0 + w^e1 * c1 + ... + w^ek * ck,   e0 > e1 > ... > ek,  ci >= 1.

    Exponents are themselves ordinals, so w^w and friends are representable.
    The empty term list is 0. Every value is canonical after construction.
 */
class Ordinal {
public:
  Ordinal() = default;  // zero

  static Ordinal finite(const Natural& c);
  static Ordinal omega();
  /// w^exponent * coefficient (coefficient 0 yields zero).
  static Ordinal monomial(const Ordinal& exponent, const Natural& coefficient);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// Value of a finite ordinal; throws std::domain_error otherwise.
  Natural finite_value() const;
  /// True when the CNF has no finite tail (and is nonzero).
  bool is_limit() const;
  /// Coefficient of the w^0 term (0 when absent).
  Natural finite_tail() const;
  /// This ordinal with its finite tail removed.
  Ordinal without_finite_tail() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

  /// Asserts the CNF invariants; throws std::logic_error on violation.
  void check_canonical() const;

private:
  explicit Ordinal(std::vector<OrdinalTerm> terms);
  std::vector<OrdinalTerm> terms_;

  friend Ordinal add(const Ordinal& a, const Ordinal& b);
  friend Ordinal mul(const Ordinal& a, const Ordinal& b);
};

struct OrdinalTerm {
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

enum class Comparison { less, equal, greater };

Comparison compare(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal pow_nat(const Ordinal& a, std::size_t m);

/// True iff every CNF exponent is finite, i.e. a < w^w.
bool below_omega_omega(const Ordinal& a);

/// Syntax error in an ordinal expression; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/*
    Grammar (whitespace insignificant):

        expr := term ('+' term)*
        term := 'w' ('^' expo)? ('*' nat)? | nat
        expo := nat | '(' expr ')' | 'w'
        nat  := [0-9]+

    Terms are combined with ordinal addition, so "1 + w" denotes w.
 */
Ordinal parse_ordinal(std::string_view text);

/// Canonical rendering accepted by parse_ordinal; parse(format(a)) == a.
std::string format_ordinal(const Ordinal& a);

}  // namespace bigramsey

#endif  // BIGRAMSEY_ORDINAL_HPP
