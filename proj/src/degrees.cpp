#include "bigramsey/degrees.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string_view>

#include "bigramsey/typecalc.hpp"

namespace bigramsey {

Natural exact_omega(std::size_t) { return 1; }

Natural exact_omega_plus_m(std::size_t n, std::size_t m) {
  Natural total = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    total += binom(m, j);
  }
  return total;
}

Natural exact_omega_times_m(std::size_t n, std::size_t m) { return nat_pow(m, n); }

Natural exact_signed(std::size_t n, std::span<const Sign> signs) {
  if (signs.empty()) {
    throw std::invalid_argument("a signed sum needs at least one part");
  }
  return exact_omega_times_m(n, signs.size());
}

Natural exact_Z(std::size_t n) {
  constexpr std::array<Sign, 2> z{Sign::minus, Sign::plus};
  return exact_signed(n, z);
}

DegreeTable omega_times_m_table(std::size_t m, std::size_t size) {
  DegreeTable t(size);
  for (std::size_t j = 0; j < size; ++j) t[j] = exact_omega_times_m(j, m);
  return t;
}

namespace {

const Natural& at(const DegreeTable& base, std::size_t j) {
  if (j >= base.size()) {
    throw std::out_of_range("degree table has " + std::to_string(base.size()) +
                            " entries, rank " + std::to_string(j) + " requested");
  }
  return base[j];
}

}  // namespace

Natural bound_add(std::size_t n, std::size_t m, const DegreeTable& base) {
  Natural total = 0;
  for (std::size_t j = 0; j <= std::min(n, m); ++j) {
    total += binom(m, j) * at(base, n - j);
  }
  return total;
}

Natural bound_mul(std::size_t n, std::size_t m, const DegreeTable& base) {
  if (n == 0) return 1;
  Natural total = 0;
  for (const auto& t : enum_mult(n, m)) {
    total += at(base, t.rank());
  }
  return total;
}

Natural product_bound(std::span<const std::size_t> parts, const DegreeTable& base) {
  const auto counts = product_type_rank_counts(parts);
  Natural total = 0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] != 0) {
      total += counts[r] * at(base, r);
    }
  }
  return total;
}

Natural bound_pow(std::size_t n, std::size_t m, const DegreeTable& base) {
  if (n == 0) return 1;
  Natural total = 0;
  for (const auto& tree : enum_power(n, m)) {
    total += product_bound(tree.out_degrees(), base);
  }
  return total;
}

DegreeTable bound_add_table(std::size_t m, const DegreeTable& base, std::size_t size) {
  DegreeTable out(size);
  for (std::size_t j = 0; j < size; ++j) out[j] = bound_add(j, m, base);
  return out;
}

DegreeTable bound_pow_table(std::size_t m, const DegreeTable& base, std::size_t size) {
  DegreeTable out(size);
  for (std::size_t j = 0; j < size; ++j) out[j] = bound_pow(j, m, base);
  return out;
}

bool monotonicity_check(std::span<const Natural> table) {
  return std::is_sorted(table.begin(), table.end());
}

std::string to_string(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::exact: return "Exact";
    case DegreeKind::upper_bound: return "UpperBound";
    case DegreeKind::infinite: return "Infinite";
    case DegreeKind::finite_unbounded: return "FiniteUnbounded";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

namespace rule {
constexpr std::string_view empty_domain = "empty-domain";
constexpr std::string_view finite_convention = "finite-convention";
constexpr std::string_view exact_omega = "exact-omega";
constexpr std::string_view exact_omega_plus_m = "exact-omega+m";
constexpr std::string_view exact_omega_times_m = "exact-omega*m";
constexpr std::string_view bound_add = "bound_add";
constexpr std::string_view bound_pow = "bound_pow";
constexpr std::string_view subsum = "subsum";
constexpr std::string_view infinite = "infinite";
constexpr std::string_view finite_unbounded = "finite-unbounded";
}  // namespace rule

constexpr std::array<std::string_view, 10> kRules{
    rule::empty_domain, rule::finite_convention, rule::exact_omega, rule::exact_omega_plus_m,
    rule::exact_omega_times_m, rule::bound_add, rule::bound_pow, rule::subsum,
    rule::infinite, rule::finite_unbounded};

std::string anchor_of(std::string_view r) {
  if (r == rule::empty_domain) return "T(0, C) = 1";
  if (r == rule::finite_convention)
    return "finite c: T(n, c) = binom(c, n) if c >= n, else 1 (convention)";
  if (r == rule::exact_omega) return "T(n, w) = 1";
  if (r == rule::exact_omega_plus_m) return "T(n, w + m) = sum_{j<=n} binom(m, j)";
  if (r == rule::exact_omega_times_m) return "T(n, w * m) = m^n";
  if (r == rule::bound_add) return "T(n, a + m) <= sum_{j<=n} binom(m, j) T(n - j, a)";
  if (r == rule::bound_pow) return "T(n, a^m) <= sum_{power types tau} t(tau)";
  if (r == rule::subsum) return "T(n, subsum) <= T(n, sum) for remainder-invariant summands";
  if (r == rule::infinite) return "T(n, a) = infinity for a >= w^w and n >= 2";
  if (r == rule::finite_unbounded) return "T(1, a) < infinity for every countable ordinal a";
  return "";
}

TraceStep step(std::string_view r, nlohmann::json inputs, nlohmann::json output) {
  return TraceStep{std::string(r), anchor_of(r), std::move(inputs), std::move(output)};
}

DegreeResult exact(Natural value, TraceStep s) {
  DegreeResult out{DegreeKind::exact, std::move(value), {}};
  out.trace.push_back(std::move(s));
  return out;
}

std::size_t to_size(const Natural& x, const char* what) {
  if (x > Natural(std::numeric_limits<std::size_t>::max())) {
    throw ResourceError(std::string(what) + " too large");
  }
  return x.convert_to<std::size_t>();
}

// Core sum (no finite tail) is a subsum of (w*m + 1)^d = w^d*m + ... + w*m + 1.
bool is_subsum_of_power(const Ordinal& core, std::size_t m, std::size_t d) {
  for (const auto& t : core.terms()) {
    if (!t.exponent.is_finite() || t.exponent.is_zero()) return false;
    if (t.exponent.finite_value() > d || t.coefficient > m) return false;
  }
  return true;
}

Ordinal omega_m_plus_one(std::size_t m) {
  return add(Ordinal::monomial(Ordinal::finite(1), m), Ordinal::finite(1));
}

}  // namespace

std::span<const std::string_view> known_rules() { return kRules; }

DegreeResult pipeline_bound(const Ordinal& a, std::size_t n, std::size_t cap) {
  if (!below_omega_omega(a) || a < Ordinal::omega()) {
    throw std::invalid_argument("the bound pipeline needs w <= a < w^w, got " + format_ordinal(a));
  }
  if (n > cap) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(cap));
  }
  const Ordinal core = a.without_finite_tail();
  const std::size_t tail = to_size(a.finite_tail(), "finite tail");
  Natural max_coef = 0;
  for (const auto& t : core.terms()) max_coef = std::max(max_coef, t.coefficient);
  const std::size_t m = to_size(max_coef, "coefficient");
  const std::size_t d = to_size(core.terms().front().exponent.finite_value(), "exponent");

  // bound_pow at n consults ranks up to n * d.
  const std::size_t base_size = n * d + 1;
  DegreeResult out{DegreeKind::upper_bound, std::nullopt, {}};

  DegreeTable omega_m = omega_times_m_table(m, base_size);
  out.trace.push_back(step(rule::exact_omega_times_m, {{"m", m}, {"size", base_size}},
                           to_json(omega_m)));

  DegreeTable lifted = bound_add_table(1, omega_m, base_size);
  out.trace.push_back(step(rule::bound_add,
                           {{"m", 1}, {"size", base_size}, {"table", to_json(omega_m)}},
                           to_json(lifted)));

  DegreeTable powered = bound_pow_table(d, lifted, n + 1);
  out.trace.push_back(step(rule::bound_pow,
                           {{"m", d}, {"size", n + 1}, {"table", to_json(lifted)},
                            {"base", format_ordinal(omega_m_plus_one(m))}},
                           to_json(powered)));

  out.trace.push_back(step(rule::subsum,
                           {{"host", format_ordinal(pow_nat(omega_m_plus_one(m), d))},
                            {"core", format_ordinal(core)},
                            {"m", m},
                            {"d", d},
                            {"table", to_json(powered)}},
                           to_json(powered)));

  DegreeTable final_table = powered;
  if (tail > 0) {
    final_table = bound_add_table(tail, powered, n + 1);
    out.trace.push_back(step(rule::bound_add,
                             {{"m", tail}, {"size", n + 1}, {"table", to_json(powered)}},
                             to_json(final_table)));
  }
  out.value = final_table[n];
  return out;
}

DegreeResult classify(const Ordinal& a, std::size_t n, std::size_t cap) {
  const std::string alpha = format_ordinal(a);
  if (n == 0) {
    return exact(1, step(rule::empty_domain, {{"alpha", alpha}, {"n", 0}}, "1"));
  }
  if (!below_omega_omega(a)) {
    DegreeResult out{n >= 2 ? DegreeKind::infinite : DegreeKind::finite_unbounded, std::nullopt, {}};
    out.trace.push_back(step(n >= 2 ? rule::infinite : rule::finite_unbounded,
                             {{"alpha", alpha}, {"n", n}}, nullptr));
    return out;
  }
  if (a.is_finite()) {
    const Natural c = a.finite_value();
    const Natural value = c >= n ? binom(to_size(c, "finite ordinal"), n) : Natural{1};
    return exact(value, step(rule::finite_convention, {{"c", c.str()}, {"n", n}}, value.str()));
  }

  const Ordinal core = a.without_finite_tail();
  const bool single_omega_term =
      core.terms().size() == 1 && core.terms().front().exponent == Ordinal::finite(1);
  if (single_omega_term) {
    const std::size_t m = to_size(core.terms().front().coefficient, "coefficient");
    const std::size_t tail = to_size(a.finite_tail(), "finite tail");
    if (tail == 0 && m == 1) {
      return exact(1, step(rule::exact_omega, {{"n", n}}, "1"));
    }
    if (tail == 0) {
      const Natural v = exact_omega_times_m(n, m);
      return exact(v, step(rule::exact_omega_times_m, {{"n", n}, {"m", m}}, v.str()));
    }
    if (m == 1) {
      const Natural v = exact_omega_plus_m(n, tail);
      return exact(v, step(rule::exact_omega_plus_m, {{"n", n}, {"m", tail}}, v.str()));
    }
    DegreeResult out{DegreeKind::upper_bound, std::nullopt, {}};
    const DegreeTable base = omega_times_m_table(m, n + 1);
    out.trace.push_back(step(rule::exact_omega_times_m, {{"m", m}, {"size", n + 1}}, to_json(base)));
    const DegreeTable bounded = bound_add_table(tail, base, n + 1);
    out.trace.push_back(step(rule::bound_add, {{"m", tail}, {"size", n + 1}, {"table", to_json(base)}},
                             to_json(bounded)));
    out.value = bounded[n];
    return out;
  }
  return pipeline_bound(a, n, cap);
}

// ---------------------------------------------------------------------------

namespace {

bool replay_step(const TraceStep& s, nlohmann::json& carried) {
  const auto& in = s.inputs;
  const std::string_view r = s.rule;
  if (r == rule::empty_domain) return s.output == "1";
  if (r == rule::infinite || r == rule::finite_unbounded) {
    const Ordinal a = parse_ordinal(in.at("alpha").get<std::string>());
    const std::size_t n = in.at("n");
    return !below_omega_omega(a) && (r == rule::infinite ? n >= 2 : n == 1);
  }
  if (r == rule::finite_convention) {
    const Natural c{in.at("c").get<std::string>()};
    const std::size_t n = in.at("n");
    const Natural v = c >= n ? binom(c.convert_to<std::size_t>(), n) : Natural{1};
    return s.output == v.str();
  }
  if (r == rule::exact_omega) return s.output == exact_omega(in.at("n")).str();
  if (r == rule::exact_omega_plus_m) {
    return s.output == exact_omega_plus_m(in.at("n"), in.at("m")).str();
  }
  if (r == rule::exact_omega_times_m) {
    if (in.contains("size")) {
      carried = to_json(omega_times_m_table(in.at("m"), in.at("size")));
      return s.output == carried;
    }
    return s.output == exact_omega_times_m(in.at("n"), in.at("m")).str();
  }
  if (r == rule::bound_add || r == rule::bound_pow || r == rule::subsum) {
    if (in.at("table") != carried) return false;
    const DegreeTable table = table_from_json(in.at("table"));
    if (r == rule::bound_add) {
      carried = to_json(bound_add_table(in.at("m"), table, in.at("size")));
    } else if (r == rule::bound_pow) {
      carried = to_json(bound_pow_table(in.at("m"), table, in.at("size")));
    } else {
      const std::size_t m = in.at("m");
      const std::size_t d = in.at("d");
      const Ordinal host = parse_ordinal(in.at("host").get<std::string>());
      const Ordinal core = parse_ordinal(in.at("core").get<std::string>());
      if (host != pow_nat(omega_m_plus_one(m), d) || !is_subsum_of_power(core, m, d)) {
        return false;
      }
    }
    return s.output == carried;
  }
  return false;
}

}  // namespace

bool replay(const DegreeResult& result) {
  if (result.trace.empty()) return false;
  nlohmann::json carried;
  for (const auto& s : result.trace) {
    if (std::find(kRules.begin(), kRules.end(), s.rule) == kRules.end()) return false;
    if (s.anchor != anchor_of(s.rule)) return false;
    if (!replay_step(s, carried)) return false;
  }
  const nlohmann::json& last = result.trace.back().output;
  switch (result.kind) {
    case DegreeKind::infinite:
    case DegreeKind::finite_unbounded:
      return !result.value.has_value();
    case DegreeKind::exact:
    case DegreeKind::upper_bound: {
      if (!result.value) return false;
      if (last.is_string()) return last == result.value->str();
      if (!last.is_array() || last.empty()) return false;
      return last.back() == result.value->str();
    }
  }
  return false;
}

nlohmann::json to_json(const DegreeTable& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : t) out.push_back(x.str());
  return out;
}

DegreeTable table_from_json(const nlohmann::json& j) {
  DegreeTable out;
  for (const auto& x : j) out.emplace_back(x.get<std::string>());
  return out;
}

nlohmann::json to_json(const DegreeResult& r) {
  nlohmann::json out{{"kind", to_string(r.kind)}};
  if (r.value) out["value"] = r.value->str();
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& s : r.trace) {
    trace.push_back({{"rule", s.rule}, {"anchor", s.anchor}, {"inputs", s.inputs}, {"output", s.output}});
  }
  out["trace"] = std::move(trace);
  return out;
}

}  // namespace bigramsey
