#ifndef BIGRAMSEY_VERIFY_HPP
#define BIGRAMSEY_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace bigramsey {

enum class CheckStatus { pass, fail, flagged };

struct CheckEntry {
  std::string name;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::pass;
};

/// Outcome of an oracle run. Flagged entries are known discrepancies with a
/// published count; they are reported but do not make the report fail.
struct Report {
  std::vector<CheckEntry> entries;

  void add(std::string name, const std::string& expected, const std::string& actual);
  void flag(std::string name, const std::string& expected, const std::string& actual);
  void append(const Report& other);

  bool ok() const;
  std::size_t count(CheckStatus status) const;
};

void print(std::ostream& os, const Report& report);
nlohmann::json to_json(const Report& report);

/*
    Count oracles, every count taken from an enumeration:
      - strict (n, m)-types, filtered out of enum_mult, against m^n;
      - additive types realized by Emb(n, U + m) with |U| = n, against sum binom(m, j);
      - distinct multiplicative types realized by Emb(n, U_0 + ... + U_{m-1}),
        |U_i| = n, against enum_mult(n, m);
      - |enum_product_types(1, ..., 1)| (s ones) against fubini(s);
      - enum_product_types(parts) against the closed-form rank profile;
      - parts with some n_i > 1 against fubini(N): flagged when they differ.
    Caps above 6 raise ResourceError.
 */
Report check_type_counts(std::size_t n_max, std::size_t m_max);

struct RoundtripCaps {
  std::size_t n = 3;
  std::size_t m = 3;
  std::size_t chain = 3;
  std::size_t word_n = 6;
  std::size_t word_m = 4;
};

/// Extraction/reconstruction identities for all three calculi, the word
/// bijection, the reversal involution, and the worked examples.
Report check_roundtrips(const RoundtripCaps& caps = {});

/// Largest number of colorings finite_degree_oracle will scan.
inline constexpr std::uint64_t kColoringCap = std::uint64_t{1} << 24;

/*
    Least t such that every k-coloring of Emb(n, c) has a copy of the chain c
    inside c whose n-subchains see at most t colors. Exhaustive over all
    k^binom(c, n) colorings and all copies; throws ResourceError above
    kColoringCap colorings.
 */
std::size_t finite_degree_oracle(std::size_t c, std::size_t n, std::size_t k);
/// Serial reference for finite_degree_oracle.
std::size_t finite_degree_oracle_serial(std::size_t c, std::size_t n, std::size_t k);

/// Convention check: oracle value against min(k, binom(c, n)) for c <= c_max.
Report check_finite_convention(std::size_t c_max, std::size_t n_max, std::size_t k_max);

}  // namespace bigramsey

#endif  // BIGRAMSEY_VERIFY_HPP
