// Acceptance suite: one PASS/FAIL line per criterion, with pinned time limits.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bigramsey/chains.hpp"
#include "bigramsey/degrees.hpp"
#include "bigramsey/natural.hpp"
#include "bigramsey/ordinal.hpp"
#include "bigramsey/typecalc.hpp"
#include "bigramsey/verify.hpp"
#include "bigramsey/witness.hpp"
#include "bigramsey/worked_examples.hpp"

using namespace bigramsey;

namespace {

// Time limits in seconds.
constexpr double kLimitExact = 1.0;
constexpr double kLimitClassifier = 10.0;
constexpr double kLimitExamples = 10.0;
constexpr double kLimitCounts = 30.0;
constexpr double kLimitRoundtrips = 60.0;
constexpr double kLimitWitness = 60.0;
constexpr double kLimitRules = 10.0;

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.emplace_back();
  }
};

std::string n_m(std::size_t n, std::size_t m) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m);
}

// Pascal's triangle: binomials by addition only, independent of the library counters.
std::vector<std::vector<Natural>> pascal(std::size_t rows) {
  std::vector<std::vector<Natural>> t(rows + 1);
  for (std::size_t r = 0; r <= rows; ++r) {
    t[r].assign(r + 1, 1);
    for (std::size_t k = 1; k < r; ++k) t[r][k] = t[r - 1][k - 1] + t[r - 1][k];
  }
  return t;
}

Natural power_by_addition(std::size_t base, std::size_t e) {
  Natural x = 1;
  for (std::size_t i = 0; i < e; ++i) {
    Natural y = 0;
    for (std::size_t j = 0; j < base; ++j) y += x;
    x = y;
  }
  return x;
}

// 1. Closed forms.
Outcome exact_formulas() {
  Outcome o;
  const auto C = pascal(6);
  for (std::size_t n = 0; n <= 6; ++n) {
    o.expect(exact_omega(n) == 1, "T(n,w) " + std::to_string(n));
    o.expect(exact_Z(n) == power_by_addition(2, n), "T(n,Z) " + std::to_string(n));
    for (std::size_t m = 1; m <= 6; ++m) {
      Natural sum = 0;
      for (std::size_t j = 0; j <= std::min(n, m); ++j) sum += C[m][j];
      o.expect(exact_omega_plus_m(n, m) == sum, "T(n,w+m) " + n_m(n, m));
      if (n >= m) o.expect(exact_omega_plus_m(n, m) == power_by_addition(2, m), "2^m " + n_m(n, m));
      o.expect(exact_omega_times_m(n, m) == power_by_addition(m, n), "T(n,w*m) " + n_m(n, m));
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Sign> signs(m);
        for (std::size_t i = 0; i < m; ++i) signs[i] = (mask >> i) & 1 ? Sign::minus : Sign::plus;
        o.expect(exact_signed(n, signs) == power_by_addition(m, n), "signed " + n_m(n, m));
      }
    }
  }
  return o;
}

// 2. Classifier kinds.
Outcome classifier() {
  Outcome o;
  for (const char* a : {"w^w", "w^w + 1", "w^(w+1)", "w^(w^2)"}) {
    for (std::size_t n : {2, 3}) {
      o.expect(classify(parse_ordinal(a), n).kind == DegreeKind::infinite,
               std::string(a) + " n=" + std::to_string(n));
    }
    o.expect(classify(parse_ordinal(a), 1).kind == DegreeKind::finite_unbounded, std::string(a) + " n=1");
  }
  // Leading exponent >= 2 keeps every sample off the exact w*m / w+m routes.
  std::mt19937 rng(1729);
  std::uniform_int_distribution<int> lead(2, 4), expo(0, 4), coef(1, 4), extra(0, 2), nn(1, 3);
  for (int i = 0; i < 20; ++i) {
    const int d = lead(rng);
    Ordinal a = Ordinal::monomial(Ordinal::finite(d), coef(rng));
    // Strictly decreasing exponents, so coefficients never merge past 4.
    int last = d;
    for (int k = extra(rng); k > 0 && last > 0; --k) {
      last = std::min(last - 1, expo(rng));
      a = add(a, Ordinal::monomial(Ordinal::finite(last), coef(rng)));
    }
    const std::size_t n = nn(rng);
    const auto r = classify(a, n);
    const std::string what = format_ordinal(a) + " n=" + std::to_string(n);
    o.expect(r.kind == DegreeKind::upper_bound, what);
    o.expect(r.value.has_value() && *r.value >= 1, what + " finite value");
    o.expect(replay(r), what + " replay");
  }
  return o;
}

// 3. Worked examples.
std::string blocks_str(const MultiplicativeType& t) {
  std::ostringstream os;
  for (std::size_t k = 0; k < t.blocks.size(); ++k) {
    os << (k ? "|" : "");
    for (std::size_t i = 0; i < t.blocks[k].size(); ++i) os << (i ? "," : "") << t.blocks[k][i];
  }
  return os.str();
}

Outcome worked_examples() {
  Outcome o;
  const auto f1 = examples::leveled_9_into_4();
  const auto t1 = mult_type(f1);
  o.expect(t1.p == std::vector<std::size_t>{3, 4, 0, 2}, "example 1 p");
  o.expect(blocks_str(t1) == "3|0|1,4,7|5|2,6|8", "example 1 sigma");
  o.expect(mult_val(f1) == FiniteChain({1, 2, 3, 5, 8, 9}), "example 1 val");
  o.expect(t1.rank() == 6, "example 1 rank");

  const auto pts = reconstruct_mult_points(examples::type_7_into_5(), examples::values_7_into_5());
  o.expect(pts == std::vector<Point>{{25, 1}, {19, 1}, {25, 2}, {13, 4}, {43, 4}, {43, 4}, {25, 4}},
           "example 2 reconstruction");

  o.expect(word_to_string(strict_to_word(examples::strict_7_into_4()), 4) == "2302202", "word");
  o.expect(word_to_strict(word_from_string("2302202"), 4) == examples::strict_7_into_4(), "word inverse");

  const auto f3 = examples::power_12_into_4();
  const auto t3 = power_type(f3);
  o.expect(t3.height == 4 && t3.leaves() == 12, "power tree size");
  o.expect(t3.out_degrees() ==
               std::vector<std::size_t>{3, 2, 3, 2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1, 2, 1, 1},
           "power tree shape");
  const auto v3 = power_val(f3);
  const auto expected = examples::power_12_into_4_val();
  o.expect(v3.size() == expected.size() && std::equal(expected.begin(), expected.begin() + 4, v3.begin()),
           "power val prefix");
  o.expect(v3 == expected, "power val");
  o.expect(reconstruct_power(t3, v3, f3.codomain_ptr()) == f3, "power reconstruction");
  return o;
}

// 4 and 5: oracle reports.
Outcome from_report(const Report& r) {
  Outcome o;
  for (const auto& e : r.entries) o.expect(e.status != CheckStatus::fail, e.name);
  return o;
}

Outcome counting_oracles() {
  const Report r = check_type_counts(5, 5);
  Outcome o = from_report(r);
  bool flagged_two = false;
  for (const auto& e : r.entries) {
    if (e.name == "|Q| vs ordered Bell number(2)") {
      flagged_two = e.status == CheckStatus::flagged && e.expected == "3" && e.actual == "1";
    }
  }
  o.expect(flagged_two, "parts=(2) flagged as 1 vs 3");
  return o;
}

// 6. Witness realization over every spread configuration in a window.
Outcome witness_realization() {
  Outcome o;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const Coloring add = chi_star_additive(n, m);
      for (const auto& pick : combinations(n + 2, n)) {
        std::vector<Label> u(pick.begin(), pick.end());
        o.expect(realized_colors(add, SumTail{FiniteChain(u), m}).size() == add.palette,
                 "additive " + n_m(n, m));
      }

      const Coloring strict = chi_star_strict(n, m);
      const std::size_t palette = power_by_addition(m, n).convert_to<std::size_t>();
      for (const auto& pick : combinations(n * m + 2, n * m)) {
        const Leveled levels{spread(FiniteChain(std::vector<Label>(pick.begin(), pick.end())), m)};
        const auto colors = realized_colors(strict, levels);
        o.expect(colors.size() == palette && *colors.rbegin() == palette - 1, "strict " + n_m(n, m));
      }
      // Non-strict exclusion on one representative.
      bool all_strict = true;
      for (const auto& f : enumerate_embeddings(n, Leveled{spread(FiniteChain::iota(n * m), m)})) {
        all_strict = all_strict && mult_type(f).is_strict();
      }
      o.expect(all_strict, "no non-strict embedding " + n_m(n, m));
    }
  }
  return o;
}

// 7. Rule consistency.
Outcome rule_consistency() {
  Outcome o;
  const DegreeTable omega(8, 1);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      o.expect(bound_add(n, m, omega) == exact_omega_plus_m(n, m), "bound_add over w " + n_m(n, m));
    }
  }
  std::vector<DegreeTable> tables{omega, omega_times_m_table(3, 8), {1, 4, 7, 19, 30, 31, 90, 91}};
  for (const auto& t : tables) {
    for (std::size_t n = 0; n < t.size(); ++n) {
      o.expect(bound_pow(n, 1, t) == t[n], "bound_pow(n,1) identity n=" + std::to_string(n));
      o.expect(bound_mul(n, 1, t) == t[n], "bound_mul(n,1) identity n=" + std::to_string(n));
    }
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      o.expect(bound_mul(n, m, omega) >= exact_omega_times_m(n, m), "bound_mul >= m^n " + n_m(n, m));
    }
  }
  for (std::size_t m = 1; m <= 6; ++m) {
    DegreeTable plus, z, sg;
    for (std::size_t n = 0; n < 8; ++n) {
      plus.push_back(exact_omega_plus_m(n, m));
      z.push_back(exact_Z(n));
      sg.push_back(exact_signed(n, std::vector<Sign>(m, Sign::minus)));
    }
    o.expect(monotonicity_check(omega_times_m_table(m, 8)), "monotone w*m");
    o.expect(monotonicity_check(plus), "monotone w+m");
    o.expect(monotonicity_check(z), "monotone Z");
    o.expect(monotonicity_check(sg), "monotone signed");
  }
  o.expect(monotonicity_check(omega), "monotone w");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact formulas, n,m <= 6", kLimitExact, exact_formulas},
      {2, "classifier kinds", kLimitClassifier, classifier},
      {3, "worked examples bit-exact", kLimitExamples, worked_examples},
      {4, "counting oracles, n,m <= 5", kLimitCounts, counting_oracles},
      {5, "round trips", kLimitRoundtrips, [] { return from_report(check_roundtrips()); }},
      {6, "witness realization, n,m <= 4", kLimitWitness, witness_realization},
      {7, "rule consistency", kLimitRules, rule_consistency},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && o.failures.empty() && secs <= c.limit;
    all = all && pass;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << o.checks << " checks, " << std::fixed << std::setprecision(3) << secs << " s, limit "
              << std::setprecision(0) << c.limit << " s)";
    if (!error.empty()) std::cout << "  error: " << error;
    if (!o.failures.empty()) {
      std::cout << "  " << o.failures.size() << " failed, first: " << o.failures.front();
    }
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
