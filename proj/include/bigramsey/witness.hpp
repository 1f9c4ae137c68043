#ifndef BIGRAMSEY_WITNESS_HPP
#define BIGRAMSEY_WITNESS_HPP

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bigramsey/chains.hpp"

namespace bigramsey {

/// Total map from the n-embeddings of a codomain family to colors 0..palette-1.
struct Coloring {
  std::size_t n = 0;
  std::string family;
  std::size_t palette = 0;
  std::function<std::size_t(const Embedding&)> color_of;
};

/// Color = position of the additive type in enum_additive(n, m). Family "additive".
Coloring chi_star_additive(std::size_t n, std::size_t m);

/// Strict types get their position in enum_strict(n, m); every non-strict type
/// gets 0, so color 0 is shared with the first strict type. Family "strict".
Coloring chi_star_strict(std::size_t n, std::size_t m);

/*
    Colors tuples (f_0, ..., f_{s-1}), f_i an n_i-embedding into U, through the
    summed embedding Phi(f) into U + ... + U (s levels): color = position of
    its multiplicative type in enum_product_types(parts). Family "product"; the
    coloring's domain is Leveled codomains with p-vector equal to `parts`.
 */
Coloring chi_star_product(std::span<const std::size_t> parts);

/// Phi(f_0, ..., f_{s-1}): every f_i must map into the same chain U.
Embedding sum_embedding(std::span<const FiniteChain> pieces, const FiniteChain& u);

/// U_i = {s_i, s_{i+m}, s_{i+2m}, ...}. Throws std::invalid_argument if |S| < m.
std::vector<FiniteChain> spread(const FiniteChain& s, std::size_t m);

/// Serial reference: colors attained over enumerate_embeddings(c.n, codomain).
std::set<std::size_t> realized_colors_serial(const Coloring& c, const Codomain& codomain);
/// Same result, OpenMP-parallel over the embedding enumeration.
std::set<std::size_t> realized_colors(const Coloring& c, const Codomain& codomain);

/// Colors attained by chi_star_product(parts) over Emb(n_0, U) x ... x Emb(n_{s-1}, U).
std::set<std::size_t> realized_product_colors(std::span<const std::size_t> parts,
                                              const FiniteChain& u);

}  // namespace bigramsey

#endif  // BIGRAMSEY_WITNESS_HPP
