#ifndef BIGRAMSEY_DEGREES_HPP
#define BIGRAMSEY_DEGREES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "bigramsey/chains.hpp"
#include "bigramsey/natural.hpp"
#include "bigramsey/ordinal.hpp"

namespace bigramsey {

// ---------------------------------------------------------------------------
// Closed forms

Natural exact_omega(std::size_t n);
/// sum_{j=0}^{n} binom(m, j); equals 2^m once n >= m.
Natural exact_omega_plus_m(std::size_t n, std::size_t m);
Natural exact_omega_times_m(std::size_t n, std::size_t m);
/// Sum of |signs| copies of w and its reverse; same degree as w * |signs|.
Natural exact_signed(std::size_t n, std::span<const Sign> signs);
Natural exact_Z(std::size_t n);

/// [m^0, m^1, ..., m^size-1]: the exact table of w * m.
DegreeTable omega_times_m_table(std::size_t m, std::size_t size);

// ---------------------------------------------------------------------------
// Upper-bound rules. Each takes the table of the base ordinal alpha (entry j
// bounds T(j, alpha), entry 0 is 1) and throws std::out_of_range when the
// table is too short for the ranks the rule consults.

/// T(n, alpha + m) <= sum_j binom(m, j) T(n - j, alpha).
Natural bound_add(std::size_t n, std::size_t m, const DegreeTable& base);
/// T(n, alpha * m) <= sum over (n, m)-multiplicative types tau of T(rank(tau), alpha).
Natural bound_mul(std::size_t n, std::size_t m, const DegreeTable& base);
/// sum over types with p-vector `parts` of T(rank, alpha); rank profile in closed form.
Natural product_bound(std::span<const std::size_t> parts, const DegreeTable& base);
/// T(n, alpha^m) <= sum over (n, m)-power types of product_bound(out-degrees).
Natural bound_pow(std::size_t n, std::size_t m, const DegreeTable& base);

/// Table versions: entry j is the rule applied at j, for j < size.
DegreeTable bound_add_table(std::size_t m, const DegreeTable& base, std::size_t size);
DegreeTable bound_pow_table(std::size_t m, const DegreeTable& base, std::size_t size);

/// Nondecreasing check for a table of exact values of a limit ordinal.
bool monotonicity_check(std::span<const Natural> table);

// ---------------------------------------------------------------------------
// Classifier

enum class DegreeKind { exact, upper_bound, infinite, finite_unbounded };

std::string to_string(DegreeKind kind);

/*
    One applied rule. `inputs` carries the rule parameters and, for table
    rules, the incoming table; `output` is the produced table (decimal strings)
    or a single value. replay() re-executes these records.
 */
struct TraceStep {
  std::string rule;
  std::string anchor;
  nlohmann::json inputs;
  nlohmann::json output;
};

struct DegreeResult {
  DegreeKind kind = DegreeKind::exact;
  std::optional<Natural> value;
  std::vector<TraceStep> trace;
};

inline constexpr std::size_t kDefaultDegreeCap = 5;

/*
    Degree of the finite chain n inside the ordinal a:

      n = 0                  Exact(1)
      a >= w^w               Infinite for n >= 2, FiniteUnbounded for n = 1
      a finite (= c)         Exact(binom(c, n)) if c >= n, Exact(1) otherwise
      a = w * m              Exact(m^n)          (m = 1 gives w)
      a = w + p              Exact(sum_{j<=n} binom(p, j))
      a = w * m + p          UpperBound via bound_add over the w * m table
      otherwise              UpperBound via pipeline_bound

    Throws ResourceError when a bound route would run with n > cap.
 */
DegreeResult classify(const Ordinal& a, std::size_t n, std::size_t cap = kDefaultDegreeCap);

/*
    The general route for w <= a < w^w, with no special cases: for
    a = sum w^{d_i} c_i + f, take m = max c_i and d = d_0; tabulate T(j, w*m)
    exactly, lift to w*m + 1 with bound_add, raise to the d-th power with
    bound_pow, pass to the core sum w^{d_0} c_0 + ... via the subsum rule, and
    add the finite tail f with bound_add.
 */
DegreeResult pipeline_bound(const Ordinal& a, std::size_t n, std::size_t cap = kDefaultDegreeCap);

/// Re-executes every step of the trace and checks it reproduces the result.
bool replay(const DegreeResult& result);

/// Rule names that may appear in a trace.
std::span<const std::string_view> known_rules();

nlohmann::json to_json(const DegreeResult& r);
nlohmann::json to_json(const DegreeTable& t);
DegreeTable table_from_json(const nlohmann::json& j);

}  // namespace bigramsey

#endif  // BIGRAMSEY_DEGREES_HPP
