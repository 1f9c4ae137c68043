#include "bigramsey/typecalc.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace bigramsey {

Natural binom(std::size_t m, std::size_t j) {
  if (j > m) {
    return 0;
  }
  j = std::min(j, m - j);
  Natural result = 1;
  for (std::size_t i = 1; i <= j; ++i) {
    result = result * (m - j + i) / i;
  }
  return result;
}

Natural stirling2(std::size_t n, std::size_t j) {
  if (j > n) {
    return 0;
  }
  // Row-by-row: S(i, k) = k S(i-1, k) + S(i-1, k-1).
  std::vector<Natural> row(j + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = std::min(i, j); k >= 1; --k) {
      row[k] = row[k] * k + row[k - 1];
    }
    row[0] = 0;
  }
  return row[j];
}

Natural fubini(std::size_t n) {
  Natural total = 0;
  Natural factorial = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    factorial *= j;
    total += factorial * stirling2(n, j);
  }
  return total;
}

// ---------------------------------------------------------------------------

AdditiveType additive_type(const Embedding& f) {
  const auto* c = std::get_if<SumTail>(&f.codomain());
  if (c == nullptr) {
    throw std::invalid_argument("additive_type expects an embedding into A + m");
  }
  AdditiveType t{c->m, {}};
  for (const Point& p : f.images()) {
    if (p[1] == 1) {
      t.tau.push_back(p[0]);
    }
  }
  return t;
}

FiniteChain additive_val(const Embedding& f) {
  if (!std::holds_alternative<SumTail>(f.codomain())) {
    throw std::invalid_argument("additive_val expects an embedding into A + m");
  }
  std::vector<Label> xs;
  for (const Point& p : f.images()) {
    if (p[1] == 0) xs.push_back(p[0]);
  }
  return FiniteChain{std::move(xs)};
}

Embedding reconstruct_additive(const AdditiveType& t, const FiniteChain& v,
                               std::shared_ptr<const Codomain> codomain) {
  std::vector<Point> images;
  images.reserve(v.size() + t.tau.size());
  for (Label a : v.elements()) images.push_back({a, 0});
  for (std::size_t j : t.tau) images.push_back({j, 1});
  return Embedding{std::move(codomain), std::move(images)};
}

std::vector<AdditiveType> enum_additive(std::size_t n, std::size_t m) {
  std::vector<AdditiveType> out;
  for (std::size_t k = 0; k <= std::min(n, m); ++k) {
    for (auto& subset : combinations(m, k)) {
      out.push_back(AdditiveType{m, std::move(subset)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t MultiplicativeType::n() const { return std::accumulate(p.begin(), p.end(), std::size_t{0}); }

bool MultiplicativeType::is_strict() const { return rank() == n(); }

std::size_t MultiplicativeType::level_of(std::size_t i) const {
  std::size_t start = 0;
  for (std::size_t level = 0; level < p.size(); ++level) {
    start += p[level];
    if (i < start) {
      return level;
    }
  }
  throw std::out_of_range("index beyond the type's domain");
}

std::vector<std::size_t> MultiplicativeType::block_index() const {
  std::vector<std::size_t> out(n(), 0);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t i : blocks[k]) {
      out.at(i) = k;
    }
  }
  return out;
}

bool is_realizable(const MultiplicativeType& t) {
  const std::size_t n = t.n();
  std::vector<int> seen(n, 0);
  for (const auto& block : t.blocks) {
    if (block.empty() || !std::is_sorted(block.begin(), block.end())) {
      return false;
    }
    for (std::size_t i : block) {
      if (i >= n || seen[i]++ != 0) {
        return false;
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(n)) {
    return false;
  }
  const auto b = t.block_index();
  for (std::size_t i = 1; i < n; ++i) {
    if (t.level_of(i) == t.level_of(i - 1) && !(b[i - 1] < b[i])) {
      return false;
    }
  }
  return true;
}

MultiplicativeType mult_type(const Embedding& f) {
  const auto* c = std::get_if<Leveled>(&f.codomain());
  if (c == nullptr) {
    throw std::invalid_argument("mult_type expects an embedding into levels");
  }
  MultiplicativeType t;
  t.p.assign(c->levels.size(), 0);
  for (const Point& q : f.images()) {
    ++t.p[q[1]];
  }
  const FiniteChain values = mult_val(f);
  t.blocks.resize(values.size());
  for (std::size_t i = 0; i < f.n(); ++i) {
    t.blocks[values.index_of(f[i][0])].push_back(i);
  }
  return t;
}

FiniteChain mult_val(const Embedding& f) {
  std::vector<Label> xs;
  xs.reserve(f.n());
  for (const Point& q : f.images()) {
    xs.push_back(q[0]);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return FiniteChain{std::move(xs)};
}

std::vector<Point> reconstruct_mult_points(const MultiplicativeType& t, const FiniteChain& v) {
  if (t.rank() != v.size()) {
    throw std::invalid_argument("value chain length " + std::to_string(v.size()) +
                                " does not match rank " + std::to_string(t.rank()));
  }
  const auto b = t.block_index();
  std::vector<Point> images(t.n());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = {v[b[i]], t.level_of(i)};
  }
  return images;
}

Embedding reconstruct_mult(const MultiplicativeType& t, const FiniteChain& v,
                           std::shared_ptr<const Codomain> codomain) {
  auto images = reconstruct_mult_points(t, v);
  if (!is_realizable(t)) {
    throw std::invalid_argument("multiplicative type is not realizable");
  }
  return Embedding{std::move(codomain), std::move(images)};
}

Embedding reconstruct_mult(const MultiplicativeType& t, const FiniteChain& v) {
  Leveled levels{std::vector<FiniteChain>(t.m(), v)};
  return reconstruct_mult(t, v, std::make_shared<const Codomain>(std::move(levels)));
}

namespace {

// Weak compositions of n into m parts, decreasing lexicographic order.
void for_each_composition(std::size_t n, std::size_t m,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (m == 0) {
    if (n == 0) visit({});
    return;
  }
  std::vector<std::size_t> p(m, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t level, std::size_t left) {
    if (level + 1 == m) {
      p[level] = left;
      visit(p);
      return;
    }
    for (std::size_t x = left + 1; x-- > 0;) {
      p[level] = x;
      rec(level + 1, left - x);
    }
  };
  rec(0, n);
}

// All surjective block labelings b : N -> r that increase strictly along each
// level, for r = max(parts)..N, each rank in lexicographic order of b.
void for_each_sigma(std::span<const std::size_t> parts,
                    const std::function<void(const std::vector<std::size_t>&, std::size_t)>& visit) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  std::vector<std::size_t> level(total), left_on_level(total);
  {
    std::size_t i = 0;
    for (std::size_t l = 0; l < parts.size(); ++l) {
      for (std::size_t k = 0; k < parts[l]; ++k, ++i) {
        level[i] = l;
        left_on_level[i] = parts[l] - k - 1;
      }
    }
  }
  const std::size_t min_rank = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  std::vector<std::size_t> b(total);
  for (std::size_t r = std::max<std::size_t>(min_rank, total == 0 ? 0 : 1); r <= total; ++r) {
    std::vector<std::size_t> used(r, 0);
    std::size_t distinct = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == total) {
        if (distinct == r) visit(b, r);
        return;
      }
      const bool continues = i > 0 && level[i] == level[i - 1];
      const std::size_t lo = continues ? b[i - 1] + 1 : 0;
      if (r < left_on_level[i] + 1) return;
      const std::size_t hi = r - 1 - left_on_level[i];
      for (std::size_t x = lo; x <= hi && x < r; ++x) {
        const bool fresh = used[x] == 0;
        if (total - i - 1 < r - distinct - (fresh ? 1 : 0)) continue;
        b[i] = x;
        ++used[x];
        distinct += fresh;
        rec(i + 1);
        distinct -= fresh;
        --used[x];
      }
    };
    rec(0);
  }
}

MultiplicativeType make_type(const std::vector<std::size_t>& p, const std::vector<std::size_t>& b,
                             std::size_t r) {
  MultiplicativeType t{p, std::vector<std::vector<std::size_t>>(r)};
  for (std::size_t i = 0; i < b.size(); ++i) {
    t.blocks[b[i]].push_back(i);
  }
  return t;
}

}  // namespace

std::vector<MultiplicativeType> enum_product_types(std::span<const std::size_t> parts) {
  std::vector<MultiplicativeType> out;
  const std::vector<std::size_t> p(parts.begin(), parts.end());
  for_each_sigma(parts, [&](const std::vector<std::size_t>& b, std::size_t r) {
    out.push_back(make_type(p, b, r));
  });
  return out;
}

std::vector<MultiplicativeType> enum_mult(std::size_t n, std::size_t m) {
  std::vector<MultiplicativeType> out;
  for_each_composition(n, m, [&](const std::vector<std::size_t>& p) {
    auto block = enum_product_types(p);
    std::move(block.begin(), block.end(), std::back_inserter(out));
  });
  return out;
}

std::vector<MultiplicativeType> enum_strict(std::size_t n, std::size_t m) {
  std::vector<MultiplicativeType> out;
  if (m == 0) {
    return out;
  }
  Word w(n, 0);
  while (true) {
    out.push_back(word_to_strict(w, m));
    std::size_t i = n;
    while (i > 0 && ++w[i - 1] == m) w[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<Natural> product_type_rank_counts(std::span<const std::size_t> parts) {
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  std::vector<Natural> out(total + 1, 0);
  for (std::size_t r = 0; r <= total; ++r) {
    Natural positive = 0;
    Natural negative = 0;
    for (std::size_t k = 0; k <= r; ++k) {
      Natural term = binom(r, k);
      for (std::size_t ni : parts) term *= binom(r - k, ni);
      (k % 2 == 0 ? positive : negative) += term;
    }
    out[r] = positive - negative;
  }
  if (total == 0) {
    out[0] = 1;  // the empty type
  }
  return out;
}

// ---------------------------------------------------------------------------

Word strict_to_word(const MultiplicativeType& t) {
  if (!t.is_strict() || !is_realizable(t)) {
    throw std::invalid_argument("strict_to_word expects a strict multiplicative type");
  }
  Word w;
  w.reserve(t.n());
  for (const auto& block : t.blocks) {
    w.push_back(t.level_of(block.front()));
  }
  return w;
}

MultiplicativeType word_to_strict(const Word& w, std::size_t m) {
  MultiplicativeType t;
  t.p.assign(m, 0);
  for (std::size_t letter : w) {
    if (letter >= m) {
      throw std::invalid_argument("word letter outside the alphabet");
    }
    ++t.p[letter];
  }
  std::vector<std::size_t> next(m, 0);
  for (std::size_t l = 1; l < m; ++l) next[l] = next[l - 1] + t.p[l - 1];
  for (std::size_t letter : w) {
    t.blocks.push_back({next[letter]++});
  }
  return t;
}

std::string word_to_string(const Word& w, std::size_t m) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (m <= 10) {
      out += static_cast<char>('0' + w[k]);
    } else {
      if (k > 0) out += ',';
      out += std::to_string(w[k]);
    }
  }
  return out;
}

Word word_from_string(const std::string& s) {
  Word w;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("word letters must be digits");
      w.push_back(static_cast<std::size_t>(c - '0'));
    }
    return w;
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(',', start), s.size());
    w.push_back(std::stoul(s.substr(start, end - start)));
    start = end + 1;
  }
  return w;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t count_leaves(const TreeNode& node) {
  if (node.children.empty()) return 1;
  std::size_t total = 0;
  for (const auto& c : node.children) total += count_leaves(c);
  return total;
}

const Power& power_codomain(const Embedding& f) {
  const auto* c = std::get_if<Power>(&f.codomain());
  if (c == nullptr) {
    throw std::invalid_argument("expected an embedding into A^m");
  }
  return *c;
}

// Builds the subtree over images[lo, hi) that already agree on every coordinate
// above `depth`; the children split on coordinate m-1-depth.
TreeNode build_tree(const Embedding& f, std::size_t m, std::size_t lo, std::size_t hi,
                    std::size_t depth) {
  TreeNode node;
  if (depth == m) return node;
  const std::size_t coord = m - 1 - depth;
  std::size_t start = lo;
  for (std::size_t i = lo + 1; i <= hi; ++i) {
    if (i == hi || f[i][coord] != f[start][coord]) {
      node.children.push_back(build_tree(f, m, start, i, depth + 1));
      start = i;
    }
  }
  return node;
}

}  // namespace

std::size_t PowerType::leaves() const {
  return height == 0 ? 1 : (root.children.empty() ? 0 : count_leaves(root));
}

std::vector<std::size_t> PowerType::out_degrees() const {
  std::vector<std::size_t> out;
  std::deque<std::pair<const TreeNode*, std::size_t>> queue{{&root, 0}};
  while (!queue.empty()) {
    auto [node, depth] = queue.front();
    queue.pop_front();
    if (depth == height) continue;
    out.push_back(node->children.size());
    for (const auto& c : node->children) queue.emplace_back(&c, depth + 1);
  }
  return out;
}

PowerType power_type(const Embedding& f) {
  const Power& c = power_codomain(f);
  PowerType t{c.m, {}};
  if (f.n() > 0) {
    t.root = build_tree(f, c.m, 0, f.n(), 0);
  }
  return t;
}

ValTuple power_val(const Embedding& f) {
  const std::size_t m = power_codomain(f).m;
  ValTuple out;
  if (f.n() == 0) return out;
  struct Span {
    std::size_t lo, hi, depth;
  };
  std::deque<Span> queue{{0, f.n(), 0}};
  while (!queue.empty()) {
    const Span s = queue.front();
    queue.pop_front();
    if (s.depth == m) continue;
    const std::size_t coord = m - 1 - s.depth;
    std::vector<Label> labels;
    std::size_t start = s.lo;
    for (std::size_t i = s.lo + 1; i <= s.hi; ++i) {
      if (i == s.hi || f[i][coord] != f[start][coord]) {
        labels.push_back(f[start][coord]);
        queue.push_back({start, i, s.depth + 1});
        start = i;
      }
    }
    out.emplace_back(std::move(labels));
  }
  return out;
}

namespace {

struct LabeledNode {
  Label label = 0;
  std::vector<LabeledNode> children;
};

// A child at depth d (root = 0) labels coordinate m - d.
void collect_tuples(const LabeledNode& node, std::size_t depth, Point& path, std::vector<Point>& out) {
  if (node.children.empty()) {
    out.push_back(path);
    return;
  }
  const std::size_t coord = path.size() - depth - 1;
  for (const auto& c : node.children) {
    path[coord] = c.label;
    collect_tuples(c, depth + 1, path, out);
  }
}

}  // namespace

Embedding reconstruct_power(const PowerType& t, const ValTuple& v,
                            std::shared_ptr<const Codomain> codomain) {
  const auto degrees = t.out_degrees();
  if (degrees.size() != v.size()) {
    throw std::invalid_argument("val tuple has " + std::to_string(v.size()) + " chains, tree has " +
                                std::to_string(degrees.size()) + " internal vertices");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].size() != degrees[k]) {
      throw std::invalid_argument("chain " + std::to_string(k) + " does not match its out-degree");
    }
  }
  LabeledNode root;
  std::deque<std::tuple<const TreeNode*, LabeledNode*, std::size_t>> queue{{&t.root, &root, 0}};
  std::size_t next = 0;
  while (!queue.empty()) {
    auto [node, labeled, depth] = queue.front();
    queue.pop_front();
    if (depth == t.height) continue;
    const FiniteChain& chain = v[next++];
    labeled->children.resize(node->children.size());
    for (std::size_t i = 0; i < node->children.size(); ++i) {
      labeled->children[i].label = chain[i];
      queue.emplace_back(&node->children[i], &labeled->children[i], depth + 1);
    }
  }
  std::vector<Point> images;
  if (!degrees.empty()) {
    Point path(t.height, 0);
    collect_tuples(root, 0, path, images);
  }
  return Embedding{std::move(codomain), std::move(images)};
}

Embedding reconstruct_power(const PowerType& t, const ValTuple& v) {
  std::vector<Label> all;
  for (const auto& chain : v) all.insert(all.end(), chain.elements().begin(), chain.elements().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Power c{FiniteChain{std::move(all)}, t.height};
  return reconstruct_power(t, v, std::make_shared<const Codomain>(std::move(c)));
}

namespace {

std::vector<TreeNode> trees_of(std::size_t n, std::size_t height) {
  if (height == 0) {
    return n == 1 ? std::vector<TreeNode>{TreeNode{}} : std::vector<TreeNode>{};
  }
  std::vector<TreeNode> out;
  for (std::size_t k = 1; k <= n; ++k) {
    // Compositions of n into k positive parts, lexicographic.
    std::vector<std::size_t> parts(k, 1);
    std::function<void(std::size_t, std::size_t)> compose = [&](std::size_t i, std::size_t left) {
      if (i + 1 == k) {
        parts[i] = left;
        std::vector<std::vector<TreeNode>> options;
        for (std::size_t part : parts) options.push_back(trees_of(part, height - 1));
        std::vector<TreeNode> chosen(k);
        std::function<void(std::size_t)> pick = [&](std::size_t j) {
          if (j == k) {
            out.push_back(TreeNode{chosen});
            return;
          }
          for (const auto& sub : options[j]) {
            chosen[j] = sub;
            pick(j + 1);
          }
        };
        pick(0);
        return;
      }
      for (std::size_t x = 1; x + (k - i - 1) <= left; ++x) {
        parts[i] = x;
        compose(i + 1, left - x);
      }
    };
    compose(0, n);
  }
  return out;
}

}  // namespace

std::vector<PowerType> enum_power(std::size_t n, std::size_t m) {
  std::vector<PowerType> out;
  if (n == 0 || m == 0) return out;
  for (auto& tree : trees_of(n, m)) {
    out.push_back(PowerType{m, std::move(tree)});
  }
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const AdditiveType& t) { return {{"m", t.m}, {"tau", t.tau}}; }

nlohmann::json to_json(const MultiplicativeType& t) {
  return {{"p", t.p}, {"blocks", t.blocks}, {"rank", t.rank()}};
}

nlohmann::json to_json(const TreeNode& node) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : node.children) out.push_back(to_json(c));
  return out;
}

nlohmann::json to_json(const PowerType& t) {
  return {{"height", t.height}, {"tree", to_json(t.root)}, {"out_degrees", t.out_degrees()}};
}

nlohmann::json to_json(const ValTuple& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& chain : v) out.push_back(chain.elements());
  return out;
}

}  // namespace bigramsey
