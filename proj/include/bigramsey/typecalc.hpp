#ifndef BIGRAMSEY_TYPECALC_HPP
#define BIGRAMSEY_TYPECALC_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "bigramsey/chains.hpp"
#include "bigramsey/natural.hpp"

namespace bigramsey {

// ---------------------------------------------------------------------------
// Counters

Natural binom(std::size_t m, std::size_t j);
Natural stirling2(std::size_t n, std::size_t j);
/// Ordered Bell number without the empty term: sum_{j=1}^{n} j! S(n, j).
Natural fubini(std::size_t n);

// ---------------------------------------------------------------------------
// Additive types: which tail points of A + m an embedding hits.

struct AdditiveType {
  std::size_t m = 0;
  std::vector<std::size_t> tau;  // sorted subset of {0..m-1}

  friend bool operator==(const AdditiveType&, const AdditiveType&) = default;
};

AdditiveType additive_type(const Embedding& f);
/// The base-chain values hit by f, i.e. its restriction to A.
FiniteChain additive_val(const Embedding& f);
/// Inverse of (additive_type, additive_val) inside the given A + m codomain.
Embedding reconstruct_additive(const AdditiveType& t, const FiniteChain& v,
                               std::shared_ptr<const Codomain> codomain);

/// Subsets of {0..m-1} of size <= n, ordered by size and then lexicographically.
/// The empty set comes first.
std::vector<AdditiveType> enum_additive(std::size_t n, std::size_t m);

// ---------------------------------------------------------------------------
// Multiplicative types: (p_0, ..., p_{m-1}, sigma) for embeddings into A * m.

/*
    sigma is stored as its ordered block partition: blocks[k] lists (ascending)
    the indices whose value is the k-th smallest. Indices 0..p_0-1 sit on level
    0, the next p_1 on level 1, and so on, which forces indices sharing a level
    into strictly increasing blocks.
 */
struct MultiplicativeType {
  std::vector<std::size_t> p;
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t n() const;
  std::size_t m() const { return p.size(); }
  std::size_t rank() const { return blocks.size(); }
  bool is_strict() const;
  /// Level of index i as dictated by p.
  std::size_t level_of(std::size_t i) const;
  /// block_index()[i] = the block containing index i.
  std::vector<std::size_t> block_index() const;

  friend bool operator==(const MultiplicativeType&, const MultiplicativeType&) = default;
};

/// Partition, coverage and same-level ordering checks.
bool is_realizable(const MultiplicativeType& t);

MultiplicativeType mult_type(const Embedding& f);
FiniteChain mult_val(const Embedding& f);

/// Point assignment read off (t, v): index i goes to (v[block of i], level of i).
/// Total whenever rank(t) == |v|; it is an embedding exactly when t is realizable.
std::vector<Point> reconstruct_mult_points(const MultiplicativeType& t, const FiniteChain& v);

/// The unique embedding with the given type and value chain. Every level of the
/// produced codomain is `v`. Throws std::invalid_argument on rank mismatch.
Embedding reconstruct_mult(const MultiplicativeType& t, const FiniteChain& v);
/// As above but into a caller-supplied Leveled codomain (membership is validated).
Embedding reconstruct_mult(const MultiplicativeType& t, const FiniteChain& v,
                           std::shared_ptr<const Codomain> codomain);

/// All realizable (n, m)-multiplicative types. Order: p-vectors in decreasing
/// lexicographic order (all of n on level 0 first), then by rank, then by the
/// block-label sequence (block_index) lexicographically.
std::vector<MultiplicativeType> enum_mult(std::size_t n, std::size_t m);

/// Strict types, in lexicographic order of their words (see strict_to_word).
std::vector<MultiplicativeType> enum_strict(std::size_t n, std::size_t m);

/// All realizable types with p-vector fixed to `parts`; same ordering as enum_mult.
std::vector<MultiplicativeType> enum_product_types(std::span<const std::size_t> parts);

/*
    Closed-form rank profile of enum_product_types(parts): entry r counts the
    types with exactly r blocks. A type of rank r amounts to picking, for each
    level i, an n_i-subset of the r blocks such that no block stays empty:

        count(r) = sum_k (-1)^k binom(r, k) prod_i binom(r - k, n_i).
 */
std::vector<Natural> product_type_rank_counts(std::span<const std::size_t> parts);

// ---------------------------------------------------------------------------
// Strict types <-> words over the alphabet {0..m-1}.

using Word = std::vector<std::size_t>;

/// Reads sigma's chain i_0 < ... < i_{n-1} and writes the level of each i_k.
/// Throws std::invalid_argument for non-strict types.
Word strict_to_word(const MultiplicativeType& t);
MultiplicativeType word_to_strict(const Word& w, std::size_t m);

/// Digits when m <= 10, otherwise comma-separated letters.
std::string word_to_string(const Word& w, std::size_t m);
Word word_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Power types: ordered trees of height m with n leaves, all at depth m.

struct TreeNode {
  std::vector<TreeNode> children;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct PowerType {
  std::size_t height = 0;
  TreeNode root;

  std::size_t leaves() const;
  /// Out-degrees of internal vertices, top to bottom then left to right.
  std::vector<std::size_t> out_degrees() const;

  friend bool operator==(const PowerType&, const PowerType&) = default;
};

/// One chain per internal vertex, same order as PowerType::out_degrees.
using ValTuple = std::vector<FiniteChain>;

PowerType power_type(const Embedding& f);
ValTuple power_val(const Embedding& f);
/// Inverse of (power_type, power_val). The codomain base is the union of the labels.
Embedding reconstruct_power(const PowerType& t, const ValTuple& v);
Embedding reconstruct_power(const PowerType& t, const ValTuple& v,
                            std::shared_ptr<const Codomain> codomain);

/// Ordered trees by root out-degree, then composition of the leaves among the
/// root's children (lexicographic), then subtrees left to right.
std::vector<PowerType> enum_power(std::size_t n, std::size_t m);

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const AdditiveType& t);
nlohmann::json to_json(const MultiplicativeType& t);
nlohmann::json to_json(const PowerType& t);
nlohmann::json to_json(const TreeNode& node);
nlohmann::json to_json(const ValTuple& v);

}  // namespace bigramsey

#endif  // BIGRAMSEY_TYPECALC_HPP
