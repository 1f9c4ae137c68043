#ifndef BIGRAMSEY_CHAINS_HPP
#define BIGRAMSEY_CHAINS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "json.hpp"

namespace bigramsey {

using Label = std::uint64_t;

/// Finite subchain of the naturals, stored as strictly increasing labels.
class FiniteChain {
public:
  FiniteChain() = default;
  /// Throws std::invalid_argument unless `elements` is strictly increasing.
  explicit FiniteChain(std::vector<Label> elements);
  /// The chain {first, first+1, ..., first+size-1}.
  static FiniteChain iota(std::size_t size, Label first = 0);

  const std::vector<Label>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Label operator[](std::size_t i) const { return elements_[i]; }
  bool contains(Label x) const;
  /// Position of `x`; throws std::out_of_range when absent.
  std::size_t index_of(Label x) const;

  friend bool operator==(const FiniteChain&, const FiniteChain&) = default;

private:
  std::vector<Label> elements_;
};

/*
    Codomain points carry their structure explicitly:

      SumTail, Leveled, Signed : {value, level}
          SumTail uses level 0 for the base chain A and level 1 for the tail m,
          where the tail point j has value j.
      Power                     : {a_0, ..., a_{m-1}}, ordered antilexicographically
                                  (the last coordinate dominates).
 */
using Point = std::vector<Label>;

/// A + m.
struct SumTail {
  FiniteChain base;
  std::size_t m = 0;
  friend bool operator==(const SumTail&, const SumTail&) = default;
};

/// U_0 + U_1 + ... + U_{m-1} sitting inside A * m.
struct Leveled {
  std::vector<FiniteChain> levels;
  friend bool operator==(const Leveled&, const Leveled&) = default;
};

/// A^m under the antilexicographic order.
struct Power {
  FiniteChain base;
  std::size_t m = 1;
  friend bool operator==(const Power&, const Power&) = default;
};

enum class Sign { plus, minus };

struct SignedPart {
  FiniteChain chain;
  Sign sign = Sign::plus;
  friend bool operator==(const SignedPart&, const SignedPart&) = default;
};

/// Truncation of a sum of copies of w (sign +) and reversed w (sign -).
struct Signed {
  std::vector<SignedPart> parts;
  friend bool operator==(const Signed&, const Signed&) = default;
};

using Codomain = std::variant<SumTail, Leveled, Power, Signed>;

/// Strict order of the codomain on two of its points.
bool point_less(const Codomain& c, const Point& a, const Point& b);
bool contains_point(const Codomain& c, const Point& p);
std::size_t codomain_size(const Codomain& c);

/// All points of `c` in increasing codomain order.
std::vector<Point> order_points(const Codomain& c);

/// Order-preserving injection n -> codomain.
class Embedding {
public:
  /// Validates membership and strict monotonicity; throws std::invalid_argument.
  Embedding(std::shared_ptr<const Codomain> codomain, std::vector<Point> images);

  std::size_t n() const { return images_.size(); }
  const Codomain& codomain() const { return *codomain_; }
  const std::shared_ptr<const Codomain>& codomain_ptr() const { return codomain_; }
  const std::vector<Point>& images() const { return images_; }
  const Point& operator[](std::size_t i) const { return images_[i]; }

  friend bool operator==(const Embedding& a, const Embedding& b);

private:
  std::shared_ptr<const Codomain> codomain_;
  std::vector<Point> images_;
};

/// All strictly increasing n-point selections from order_points(c), in lexicographic
/// order of the selected positions. There are binom(|c|, n) of them.
std::vector<Embedding> enumerate_embeddings(std::size_t n, const Codomain& c);

/// All n-subsets of {0, ..., size-1} as increasing index vectors, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t size, std::size_t n);

/// Visits every n-subset of {0..size-1} in lexicographic order without materializing them.
void for_each_combination(std::size_t size, std::size_t n,
                          const std::function<void(std::span<const std::size_t>)>& visit);

/*
    Signed -> Leveled: points in a part with sign '-' are reflected inside that
    part's chain (position i goes to position len-1-i); positive parts are unchanged.
    The result lives in Leveled{part chains}.
 */
Embedding reverse_transport(const Embedding& f);
/// Leveled -> Signed with the given signs; inverse of the one-argument overload.
Embedding reverse_transport(const Embedding& f, std::span<const Sign> signs);

nlohmann::json to_json(const Embedding& f);

}  // namespace bigramsey

#endif  // BIGRAMSEY_CHAINS_HPP
