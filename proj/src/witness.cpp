#include "bigramsey/witness.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "bigramsey/typecalc.hpp"

namespace bigramsey {

Coloring chi_star_additive(std::size_t n, std::size_t m) {
  auto index = std::make_shared<std::map<std::vector<std::size_t>, std::size_t>>();
  const auto types = enum_additive(n, m);
  for (std::size_t i = 0; i < types.size(); ++i) (*index)[types[i].tau] = i;
  return Coloring{n, "additive", types.size(), [index](const Embedding& f) {
                    return index->at(additive_type(f).tau);
                  }};
}

Coloring chi_star_strict(std::size_t n, std::size_t m) {
  // enum_strict lists words lexicographically, so a strict type's position is
  // its word read as a base-m numeral.
  std::size_t palette = 1;
  for (std::size_t i = 0; i < n; ++i) palette *= m;
  return Coloring{n, "strict", palette, [m](const Embedding& f) -> std::size_t {
                    const MultiplicativeType t = mult_type(f);
                    if (!t.is_strict()) return 0;
                    std::size_t code = 0;
                    for (std::size_t letter : strict_to_word(t)) code = code * m + letter;
                    return code;
                  }};
}

Coloring chi_star_product(std::span<const std::size_t> parts) {
  auto index = std::make_shared<std::map<std::vector<std::vector<std::size_t>>, std::size_t>>();
  const auto types = enum_product_types(parts);
  for (std::size_t i = 0; i < types.size(); ++i) (*index)[types[i].blocks] = i;
  const std::vector<std::size_t> p(parts.begin(), parts.end());
  return Coloring{std::accumulate(p.begin(), p.end(), std::size_t{0}), "product", types.size(),
                  [index, p](const Embedding& f) {
                    const MultiplicativeType t = mult_type(f);
                    if (t.p != p) {
                      throw std::invalid_argument("embedding is not a summed tuple for these parts");
                    }
                    return index->at(t.blocks);
                  }};
}

Embedding sum_embedding(std::span<const FiniteChain> pieces, const FiniteChain& u) {
  Leveled levels{std::vector<FiniteChain>(pieces.size(), u)};
  std::vector<Point> images;
  for (std::size_t level = 0; level < pieces.size(); ++level) {
    for (Label x : pieces[level].elements()) images.push_back({x, level});
  }
  return Embedding{std::make_shared<const Codomain>(std::move(levels)), std::move(images)};
}

std::vector<FiniteChain> spread(const FiniteChain& s, std::size_t m) {
  if (m == 0 || s.size() < m) {
    throw std::invalid_argument("spread needs 1 <= m <= |S|");
  }
  std::vector<std::vector<Label>> levels(m);
  for (std::size_t i = 0; i < s.size(); ++i) levels[i % m].push_back(s[i]);
  std::vector<FiniteChain> out;
  for (auto& xs : levels) out.emplace_back(std::move(xs));
  return out;
}

std::set<std::size_t> realized_colors_serial(const Coloring& c, const Codomain& codomain) {
  std::set<std::size_t> out;
  for (const auto& f : enumerate_embeddings(c.n, codomain)) out.insert(c.color_of(f));
  return out;
}

std::set<std::size_t> realized_colors(const Coloring& c, const Codomain& codomain) {
  const auto shared = std::make_shared<const Codomain>(codomain);
  const std::vector<Point> points = order_points(codomain);
  const auto subsets = combinations(points.size(), c.n);
  const auto count = static_cast<std::ptrdiff_t>(subsets.size());
  std::vector<char> seen(c.palette, 0);
  std::exception_ptr failure;

#pragma omp parallel
  {
    std::vector<char> local(c.palette, 0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      try {
        std::vector<Point> images;
        images.reserve(c.n);
        for (std::size_t i : subsets[static_cast<std::size_t>(k)]) images.push_back(points[i]);
        local.at(c.color_of(Embedding{shared, std::move(images)})) = 1;
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical
    for (std::size_t i = 0; i < local.size(); ++i) seen[i] |= local[i];
  }
  if (failure) std::rethrow_exception(failure);

  std::set<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.insert(i);
  }
  return out;
}

std::set<std::size_t> realized_product_colors(std::span<const std::size_t> parts,
                                              const FiniteChain& u) {
  const Coloring chi = chi_star_product(parts);
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (std::size_t ni : parts) choices.push_back(combinations(u.size(), ni));
  std::set<std::size_t> out;
  std::vector<FiniteChain> pieces(parts.size());
  std::vector<std::size_t> pick(parts.size(), 0);
  if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) {
    return out;
  }
  while (true) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<Label> xs;
      for (std::size_t idx : choices[i][pick[i]]) xs.push_back(u[idx]);
      pieces[i] = FiniteChain{std::move(xs)};
    }
    out.insert(chi.color_of(sum_embedding(pieces, u)));
    std::size_t i = parts.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace bigramsey
