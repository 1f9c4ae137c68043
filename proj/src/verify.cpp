#include "bigramsey/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "bigramsey/chains.hpp"
#include "bigramsey/natural.hpp"
#include "bigramsey/typecalc.hpp"
#include "bigramsey/worked_examples.hpp"

namespace bigramsey {

void Report::add(std::string name, const std::string& expected, const std::string& actual) {
  entries.push_back({std::move(name), expected, actual,
                     expected == actual ? CheckStatus::pass : CheckStatus::fail});
}

void Report::flag(std::string name, const std::string& expected, const std::string& actual) {
  entries.push_back({std::move(name), expected, actual,
                     expected == actual ? CheckStatus::pass : CheckStatus::flagged});
}

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool Report::ok() const { return count(CheckStatus::fail) == 0; }

std::size_t Report::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.status == status; }));
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::flagged: return "flagged";
  }
  return "?";
}

}  // namespace

void print(std::ostream& os, const Report& report) {
  for (const auto& e : report.entries) {
    os << "[" << status_name(e.status) << "] " << e.name;
    if (e.status == CheckStatus::pass) {
      os << " = " << e.actual << "\n";
    } else {
      os << ": expected " << e.expected << ", got " << e.actual << "\n";
    }
  }
  os << report.count(CheckStatus::pass) << " passed, " << report.count(CheckStatus::fail)
     << " failed, " << report.count(CheckStatus::flagged) << " flagged\n";
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"name", e.name},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"status", status_name(e.status)}});
  }
  return {{"ok", report.ok()},
          {"passed", report.count(CheckStatus::pass)},
          {"failed", report.count(CheckStatus::fail)},
          {"flagged", report.count(CheckStatus::flagged)},
          {"entries", std::move(entries)}};
}

// ---------------------------------------------------------------------------

namespace {

std::string label(const std::string& what, std::size_t n, std::size_t m) {
  return what + "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

std::string parts_label(const std::string& what, const std::vector<std::size_t>& parts) {
  std::string s = what + "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::string sum_str(const std::vector<Natural>& xs) {
  Natural total = 0;
  for (const auto& x : xs) total += x;
  return total.str();
}

}  // namespace

Report check_type_counts(std::size_t n_max, std::size_t m_max) {
  if (n_max > 6 || m_max > 6) {
    throw ResourceError("type-count caps are limited to 6");
  }
  Report r;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t m = 1; m <= m_max; ++m) {
      const auto all = enum_mult(n, m);
      const auto strict = std::count_if(all.begin(), all.end(),
                                        [](const MultiplicativeType& t) { return t.is_strict(); });
      r.add(label("|Stp|", n, m), nat_pow(m, n).str(), std::to_string(strict));

      const SumTail tail{FiniteChain::iota(n), m};
      std::set<std::vector<std::size_t>> taus;
      for (const auto& f : enumerate_embeddings(n, tail)) taus.insert(additive_type(f).tau);
      Natural formula = 0;
      for (std::size_t j = 0; j <= n; ++j) formula += binom(m, j);
      r.add(label("|additive types realized on U+m|", n, m), formula.str(), std::to_string(taus.size()));
      r.add(label("|enum_additive|", n, m), formula.str(), std::to_string(enum_additive(n, m).size()));

      // Level chains of size n realize every type; the realized set must be enum_mult.
      if (n * m <= 24) {
        const Leveled levels{std::vector<FiniteChain>(m, FiniteChain::iota(n))};
        std::set<std::vector<std::vector<std::size_t>>> seen_blocks;
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>>> realized;
        for (const auto& f : enumerate_embeddings(n, levels)) {
          auto t = mult_type(f);
          realized.emplace(std::move(t.p), std::move(t.blocks));
        }
        std::set<std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>>> listed;
        for (const auto& t : all) listed.emplace(t.p, t.blocks);
        r.add(label("realized multiplicative types == enum_mult", n, m), "true",
              realized == listed ? "true" : "false");
      }
    }
  }

  for (std::size_t s = 1; s <= std::max<std::size_t>(n_max, 4); ++s) {
    const std::vector<std::size_t> ones(s, 1);
    r.add(parts_label("|Q|", ones), fubini(s).str(), std::to_string(enum_product_types(ones).size()));
  }

  const std::vector<std::vector<std::size_t>> mixed{{2}, {3}, {2, 1}, {1, 2}, {2, 2}, {1, 1, 2}};
  for (const auto& parts : mixed) {
    const auto listed = enum_product_types(parts);
    r.add(parts_label("|Q| closed-form rank profile", parts), sum_str(product_type_rank_counts(parts)),
          std::to_string(listed.size()));
    std::size_t total = 0;
    for (std::size_t x : parts) total += x;
    r.flag(parts_label("|Q| vs ordered Bell number", parts), fubini(total).str(),
           std::to_string(listed.size()));
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FiniteChain> small_chains(std::size_t max_size) {
  // Every subset of {0, ..., max_size - 1}.
  std::vector<FiniteChain> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << max_size); ++mask) {
    std::vector<Label> xs;
    for (std::size_t i = 0; i < max_size; ++i) {
      if (mask & (std::size_t{1} << i)) xs.push_back(i);
    }
    out.emplace_back(std::move(xs));
  }
  return out;
}

void check_leveled(Report& r, const RoundtripCaps& caps) {
  const auto chains = small_chains(caps.chain);
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (std::size_t m = 1; m <= caps.m; ++m) {
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      Leveled levels;
      for (std::size_t i = 0; i < m; ++i) levels.levels.push_back(chains[pick[i]]);
      const auto shared = std::make_shared<const Codomain>(levels);
      for (std::size_t n = 0; n <= caps.n; ++n) {
        for (const auto& f : enumerate_embeddings(n, *shared)) {
          ++checked;
          const auto t = mult_type(f);
          const auto v = mult_val(f);
          const auto g = reconstruct_mult(t, v, shared);
          if (!(g == f) || t.rank() != v.size() || mult_type(g) != t || mult_val(g) != v) ++failures;
        }
      }
      std::size_t i = m;
      while (i > 0 && ++pick[i - 1] == chains.size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  r.add("multiplicative round trips (" + std::to_string(checked) + " embeddings) failures", "0",
        std::to_string(failures));
}

void check_power(Report& r, const RoundtripCaps& caps) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (std::size_t m = 1; m <= caps.m; ++m) {
    for (std::size_t size = 1; size <= caps.chain; ++size) {
      const auto shared = std::make_shared<const Codomain>(Power{FiniteChain::iota(size), m});
      for (std::size_t n = 1; n <= caps.n; ++n) {
        for (const auto& f : enumerate_embeddings(n, *shared)) {
          ++checked;
          const auto t = power_type(f);
          const auto v = power_val(f);
          const auto g = reconstruct_power(t, v, shared);
          if (!(g == f) || power_type(g) != t || power_val(g) != v || t.leaves() != n) ++failures;
        }
      }
    }
  }
  r.add("power round trips (" + std::to_string(checked) + " embeddings) failures", "0",
        std::to_string(failures));
}

void check_additive(Report& r, const RoundtripCaps& caps) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const auto& base : small_chains(caps.chain)) {
    for (std::size_t m = 1; m <= caps.m; ++m) {
      const auto shared = std::make_shared<const Codomain>(SumTail{base, m});
      for (std::size_t n = 0; n <= caps.n; ++n) {
        for (const auto& f : enumerate_embeddings(n, *shared)) {
          ++checked;
          const auto g = reconstruct_additive(additive_type(f), additive_val(f), shared);
          if (!(g == f)) ++failures;
        }
      }
    }
  }
  r.add("additive round trips (" + std::to_string(checked) + " embeddings) failures", "0",
        std::to_string(failures));
}

void check_words(Report& r, const RoundtripCaps& caps) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (std::size_t m = 1; m <= caps.word_m; ++m) {
    for (std::size_t n = 1; n <= caps.word_n; ++n) {
      Word w(n, 0);
      while (true) {
        ++checked;
        const auto t = word_to_strict(w, m);
        if (!is_realizable(t) || !t.is_strict() || strict_to_word(t) != w) ++failures;
        std::size_t i = n;
        while (i > 0 && ++w[i - 1] == m) w[--i] = 0;
        if (i == 0) break;
      }
      for (const auto& t : enum_strict(n, m)) {
        ++checked;
        if (word_to_strict(strict_to_word(t), m) != t) ++failures;
      }
    }
  }
  r.add("word <-> strict type round trips (" + std::to_string(checked) + ") failures", "0",
        std::to_string(failures));
}

void check_reversal(Report& r, const RoundtripCaps& caps) {
  const auto chains = small_chains(caps.chain);
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t sign_mask = 0; sign_mask < (std::size_t{1} << m); ++sign_mask) {
      std::vector<Sign> signs(m);
      for (std::size_t i = 0; i < m; ++i) signs[i] = (sign_mask >> i) & 1 ? Sign::minus : Sign::plus;
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        Signed c;
        for (std::size_t i = 0; i < m; ++i) c.parts.push_back({chains[pick[i]], signs[i]});
        const std::size_t size = codomain_size(c);
        for (std::size_t n = 0; n <= size; ++n) {
          const auto fs = enumerate_embeddings(n, c);
          std::set<std::vector<Point>> images;
          for (const auto& f : fs) {
            ++checked;
            const auto g = reverse_transport(f);
            images.insert(g.images());
            if (!(reverse_transport(g, signs) == f)) ++failures;
          }
          if (images.size() != fs.size()) ++failures;
        }
        std::size_t i = m;
        while (i > 0 && ++pick[i - 1] == chains.size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  r.add("reverse_transport involution (" + std::to_string(checked) + ") failures", "0",
        std::to_string(failures));
}

std::string blocks_str(const MultiplicativeType& t) {
  std::string s;
  for (std::size_t k = 0; k < t.blocks.size(); ++k) {
    if (k) s += " | ";
    for (std::size_t i = 0; i < t.blocks[k].size(); ++i) s += (i ? "," : "") + std::to_string(t.blocks[k][i]);
  }
  return s;
}

std::string points_str(const std::vector<Point>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += " ";
    s += "(";
    for (std::size_t j = 0; j < ps[i].size(); ++j) s += (j ? "," : "") + std::to_string(ps[i][j]);
    s += ")";
  }
  return s;
}

std::string chain_str(const FiniteChain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "<" : "") + std::to_string(c[i]);
  return s;
}

void check_worked_examples(Report& r) {
  {
    const auto f = examples::leveled_9_into_4();
    const auto t = mult_type(f);
    std::string p;
    for (std::size_t x : t.p) p += (p.empty() ? "" : ",") + std::to_string(x);
    r.add("9 -> w*4: p", "3,4,0,2", p);
    r.add("9 -> w*4: sigma", "3 | 0 | 1,4,7 | 5 | 2,6 | 8", blocks_str(t));
    r.add("9 -> w*4: val", "1<2<3<5<8<9", chain_str(mult_val(f)));
    r.add("9 -> w*4: rank", "6", std::to_string(t.rank()));
  }
  {
    const auto t = examples::type_7_into_5();
    r.add("7 -> w*5: (tp, V) read-off", "(25,1) (19,1) (25,2) (13,4) (43,4) (43,4) (25,4)",
          points_str(reconstruct_mult_points(t, examples::values_7_into_5())));
    r.flag("7 -> w*5: printed type is realizable", "true", is_realizable(t) ? "true" : "false");
  }
  r.add("strict (7,4) type word", "2302202",
        word_to_string(strict_to_word(examples::strict_7_into_4()), 4));
  r.add("word 2302202 -> sigma", "2 | 6 | 0 | 3 | 4 | 1 | 5",
        blocks_str(word_to_strict(word_from_string("2302202"), 4)));
  {
    const auto f = examples::power_12_into_4();
    const auto t = power_type(f);
    const auto v = power_val(f);
    std::string degrees;
    for (std::size_t d : t.out_degrees()) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
    r.add("12 -> w^4: tree out-degrees", "3,2,3,2,1,1,1,1,1,2,2,2,2,1,1,1,1,2,1,1", degrees);
    std::string val;
    for (const auto& c : v) val += (val.empty() ? "" : ", ") + chain_str(c);
    std::string expected;
    for (const auto& c : examples::power_12_into_4_val()) expected += (expected.empty() ? "" : ", ") + chain_str(c);
    r.add("12 -> w^4: val", expected, val);
    r.add("12 -> w^4: reconstruct", "true", reconstruct_power(t, v, f.codomain_ptr()) == f ? "true" : "false");
  }
}

}  // namespace

Report check_roundtrips(const RoundtripCaps& caps) {
  if (caps.n > 4 || caps.m > 4 || caps.chain > 4 || caps.word_n > 8 || caps.word_m > 6) {
    throw ResourceError("round-trip caps exceed (n=4, m=4, chain=4, word 8x6)");
  }
  Report r;
  check_worked_examples(r);
  check_additive(r, caps);
  check_leveled(r, caps);
  check_power(r, caps);
  check_words(r, caps);
  check_reversal(r, caps);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct OracleSetup {
  std::size_t edges = 0;                            // |Emb(n, c)|
  std::vector<std::vector<std::size_t>> copies;     // per copy: indices of its n-subchains
  std::uint64_t colorings = 1;
};

OracleSetup oracle_setup(std::size_t c, std::size_t n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("need at least one color");
  OracleSetup s;
  const auto subsets = combinations(c, n);
  s.edges = subsets.size();
  for (std::size_t i = 0; i < s.edges; ++i) {
    if (s.colorings > kColoringCap / k) {
      throw ResourceError(std::to_string(k) + "^" + std::to_string(s.edges) +
                          " colorings exceed the oracle cap");
    }
    s.colorings *= k;
  }
  // Copies of the chain c inside c: its c-element subsets.
  for (const auto& copy : combinations(c, c)) {
    std::vector<std::size_t> idx;
    for (const auto& sub : combinations(copy.size(), n)) {
      std::vector<std::size_t> mapped;
      for (std::size_t i : sub) mapped.push_back(copy[i]);
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(subsets.begin(), subsets.end(), mapped) - subsets.begin()));
    }
    s.copies.push_back(std::move(idx));
  }
  return s;
}

std::size_t best_copy(const OracleSetup& s, std::uint64_t code, std::size_t k,
                      std::vector<std::size_t>& colors, std::vector<char>& used) {
  for (std::size_t e = 0; e < s.edges; ++e) {
    colors[e] = code % k;
    code /= k;
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& copy : s.copies) {
    std::fill(used.begin(), used.end(), 0);
    std::size_t distinct = 0;
    for (std::size_t e : copy) distinct += used[colors[e]]++ == 0;
    best = std::min(best, distinct);
  }
  return std::max<std::size_t>(best, 1);
}

}  // namespace

std::size_t finite_degree_oracle_serial(std::size_t c, std::size_t n, std::size_t k) {
  const OracleSetup s = oracle_setup(c, n, k);
  std::vector<std::size_t> colors(s.edges);
  std::vector<char> used(k);
  std::size_t worst = 1;
  for (std::uint64_t code = 0; code < s.colorings; ++code) {
    worst = std::max(worst, best_copy(s, code, k, colors, used));
  }
  return worst;
}

std::size_t finite_degree_oracle(std::size_t c, std::size_t n, std::size_t k) {
  const OracleSetup s = oracle_setup(c, n, k);
  const auto total = static_cast<std::int64_t>(s.colorings);
  std::size_t worst = 1;
#pragma omp parallel reduction(max : worst)
  {
    std::vector<std::size_t> colors(s.edges);
    std::vector<char> used(k);
#pragma omp for schedule(static)
    for (std::int64_t code = 0; code < total; ++code) {
      worst = std::max(worst, best_copy(s, static_cast<std::uint64_t>(code), k, colors, used));
    }
  }
  return worst;
}

Report check_finite_convention(std::size_t c_max, std::size_t n_max, std::size_t k_max) {
  Report r;
  for (std::size_t c = 0; c <= c_max; ++c) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t k = 1; k <= k_max; ++k) {
        const Natural edges = binom(c, n);
        if (pow(boost::multiprecision::cpp_int(k), edges.convert_to<unsigned>()) > kColoringCap) continue;
        const Natural expected = c >= n ? std::min<Natural>(k, edges) : Natural{1};
        r.add("finite oracle(c=" + std::to_string(c) + ", n=" + std::to_string(n) +
                  ", k=" + std::to_string(k) + ")",
              expected.str(), std::to_string(finite_degree_oracle(c, n, k)));
      }
    }
  }
  return r;
}

}  // namespace bigramsey
