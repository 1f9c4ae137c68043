// bigramsey: command-line front end. JSON is the contract; text is a rendering of it.
//
// Exit codes: 0 ok, 1 other error, 2 parse error, 3 resource cap.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bigramsey/chains.hpp"
#include "bigramsey/degrees.hpp"
#include "bigramsey/natural.hpp"
#include "bigramsey/ordinal.hpp"
#include "bigramsey/typecalc.hpp"
#include "bigramsey/verify.hpp"
#include "bigramsey/witness.hpp"

using namespace bigramsey;
using nlohmann::json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_result(const DegreeResult& r, bool as_json) {
  if (as_json) {
    std::cout << to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << "kind=" << to_string(r.kind) << "\n";
  if (r.value) std::cout << "value=" << r.value->str() << "\n";
  for (const auto& step : r.trace) {
    std::cout << "  " << step.rule << "  [" << step.anchor << "]  -> " << step.output.dump() << "\n";
  }
}

std::vector<Sign> parse_signs(const std::string& s) {
  std::vector<Sign> out;
  for (char ch : s) {
    if (ch == '+') out.push_back(Sign::plus);
    else if (ch == '-') out.push_back(Sign::minus);
    else throw UsageError("signs must be a string over '+' and '-'");
  }
  if (out.empty()) throw UsageError("signs must be nonempty");
  return out;
}

int run_classify(const std::string& expr, std::size_t n, std::size_t cap, bool as_json) {
  print_result(classify(parse_ordinal(expr), n, cap), as_json);
  return 0;
}

int run_bound(const std::string& expr, std::size_t n, std::size_t cap, bool as_json) {
  print_result(pipeline_bound(parse_ordinal(expr), n, cap), as_json);
  return 0;
}

int run_exact(const std::string& family, std::size_t n, std::size_t m, const std::string& signs,
              bool as_json) {
  Natural value;
  json params = {{"family", family}, {"n", n}};
  if (family == "omega") {
    value = exact_omega(n);
  } else if (family == "omega+m") {
    value = exact_omega_plus_m(n, m);
    params["m"] = m;
  } else if (family == "omega*m") {
    value = exact_omega_times_m(n, m);
    params["m"] = m;
  } else if (family == "Z") {
    value = exact_Z(n);
  } else if (family == "signed") {
    value = exact_signed(n, parse_signs(signs));
    params["signs"] = signs;
  } else {
    throw UsageError("unknown family '" + family + "' (omega, omega+m, omega*m, Z, signed)");
  }
  if (as_json) {
    params["value"] = value.str();
    std::cout << params.dump(2) << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return 0;
}

int run_types(const std::string& family, std::size_t n, std::size_t m,
              const std::vector<std::size_t>& parts, bool count_only, bool as_json) {
  json listed = json::array();
  if (family == "additive") {
    for (const auto& t : enum_additive(n, m)) listed.push_back(to_json(t));
  } else if (family == "mult") {
    for (const auto& t : enum_mult(n, m)) listed.push_back(to_json(t));
  } else if (family == "strict") {
    for (const auto& t : enum_strict(n, m)) {
      json j = to_json(t);
      j["word"] = word_to_string(strict_to_word(t), m);
      listed.push_back(std::move(j));
    }
  } else if (family == "power") {
    for (const auto& t : enum_power(n, m)) listed.push_back(to_json(t));
  } else if (family == "product") {
    if (parts.empty()) throw UsageError("product types need --parts");
    for (const auto& t : enum_product_types(parts)) listed.push_back(to_json(t));
  } else {
    throw UsageError("unknown family '" + family + "' (additive, mult, strict, power, product)");
  }
  if (count_only) {
    std::cout << listed.size() << "\n";
  } else if (as_json) {
    std::cout << json{{"family", family}, {"count", listed.size()}, {"types", listed}}.dump(2) << "\n";
  } else {
    for (const auto& t : listed) std::cout << t.dump() << "\n";
  }
  return 0;
}

int run_witness(const std::string& family, std::size_t n, std::size_t m,
                std::vector<std::size_t> sizes, const std::vector<std::size_t>& parts, bool as_json) {
  json rows = json::array();
  std::size_t need = n;
  if (family == "product") {
    need = 0;
    for (std::size_t x : parts) need += x;
  }
  if (sizes.empty()) sizes.push_back(need);
  for (std::size_t size : sizes) {
    std::set<std::size_t> colors;
    std::size_t palette = 0;
    if (family == "additive") {
      const Coloring chi = chi_star_additive(n, m);
      palette = chi.palette;
      colors = realized_colors(chi, SumTail{FiniteChain::iota(size), m});
    } else if (family == "strict") {
      const Coloring chi = chi_star_strict(n, m);
      palette = chi.palette;
      colors = realized_colors(chi, Leveled{spread(FiniteChain::iota(size * m), m)});
    } else if (family == "product") {
      if (parts.empty()) throw UsageError("product witness needs --parts");
      palette = chi_star_product(parts).palette;
      colors = realized_product_colors(parts, FiniteChain::iota(size));
    } else {
      throw UsageError("unknown family '" + family + "' (additive, strict, product)");
    }
    rows.push_back({{"sizes", size}, {"palette", palette}, {"realized", colors.size()},
                    {"colors", std::vector<std::size_t>(colors.begin(), colors.end())}});
  }
  if (as_json) {
    std::cout << json{{"family", family}, {"n", n}, {"m", m}, {"rows", rows}}.dump(2) << "\n";
  } else {
    std::cout << "sizes,palette,realized\n";
    for (const auto& row : rows) {
      std::cout << row["sizes"].get<std::size_t>() << "," << row["palette"].get<std::size_t>() << ","
                << row["realized"].get<std::size_t>() << "\n";
    }
  }
  return 0;
}

int run_verify(const std::vector<std::string>& caps_in, bool as_json) {
  std::map<std::string, std::size_t> caps{{"counts", 5}, {"roundtrip", 3}, {"oracle", 5}};
  for (const auto& kv : caps_in) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || !caps.count(kv.substr(0, eq))) {
      throw UsageError("caps take key=value with key in {counts, roundtrip, oracle}");
    }
    caps[kv.substr(0, eq)] = std::stoul(kv.substr(eq + 1));
  }
  Report r = check_type_counts(caps["counts"], caps["counts"]);
  RoundtripCaps rc;
  rc.n = rc.m = rc.chain = caps["roundtrip"];
  r.append(check_roundtrips(rc));
  r.append(check_finite_convention(caps["oracle"], 3, 3));
  if (as_json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    print(std::cout, r);
  }
  return r.ok() ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Big Ramsey degrees of finite chains in countable ordinals"};
  app.require_subcommand(1);

  bool as_json = false;
  std::size_t n = 1, m = 1, cap = kDefaultDegreeCap;
  std::string expr, family, signs = "+";
  std::vector<std::size_t> parts, sizes;
  std::vector<std::string> caps;
  bool count_only = false;

  auto* classify_cmd = app.add_subcommand("classify", "Degree kind and value with its derivation trace");
  classify_cmd->add_option("ordinal", expr, "Ordinal in CNF, e.g. \"w^2*3 + w + 1\"")->required();
  classify_cmd->add_option("--n", n, "Size of the finite chain")->required();
  classify_cmd->add_option("--cap", cap, "Largest n accepted on bound routes");
  classify_cmd->add_flag("--json", as_json);

  auto* exact_cmd = app.add_subcommand("exact", "Closed-form degree families");
  exact_cmd->add_option("family", family, "omega | omega+m | omega*m | Z | signed")->required();
  exact_cmd->add_option("--n", n)->required();
  exact_cmd->add_option("--m", m);
  exact_cmd->add_option("--signs", signs, "Signed sum pattern, e.g. \"+-+\"");
  exact_cmd->add_flag("--json", as_json);

  auto* bound_cmd = app.add_subcommand("bound", "General upper-bound pipeline with trace");
  bound_cmd->add_option("ordinal", expr)->required();
  bound_cmd->add_option("--n", n)->required();
  bound_cmd->add_option("--cap", cap);
  bound_cmd->add_flag("--json", as_json);

  auto* types_cmd = app.add_subcommand("types", "Enumerate types in their fixed order");
  types_cmd->add_option("family", family, "additive | mult | strict | power | product")->required();
  types_cmd->add_option("--n", n);
  types_cmd->add_option("--m", m);
  types_cmd->add_option("--parts", parts, "Level sizes for product types")->delimiter(',');
  types_cmd->add_flag("--count-only", count_only);
  types_cmd->add_flag("--json", as_json);

  auto* witness_cmd = app.add_subcommand("witness", "Colors realized by the canonical witness colorings");
  witness_cmd->add_option("family", family, "additive | strict | product")->required();
  witness_cmd->add_option("--n", n);
  witness_cmd->add_option("--m", m);
  witness_cmd->add_option("--sizes", sizes, "Base/level chain sizes, one row each")->delimiter(',');
  witness_cmd->add_option("--parts", parts)->delimiter(',');
  witness_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle suite");
  verify_cmd->add_option("--caps", caps, "key=value: counts (<=6), roundtrip (<=4), oracle")->delimiter(',');
  verify_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*classify_cmd) return run_classify(expr, n, cap, as_json);
    if (*exact_cmd) return run_exact(family, n, m, signs, as_json);
    if (*bound_cmd) return run_bound(expr, n, cap, as_json);
    if (*types_cmd) return run_types(family, n, m, parts, count_only, as_json);
    if (*witness_cmd) return run_witness(family, n, m, sizes, parts, as_json);
    if (*verify_cmd) return run_verify(caps, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.position() << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
