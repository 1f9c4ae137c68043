#include "bigramsey/chains.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace bigramsey {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool pair_shape(const Point& p) { return p.size() == 2; }

}  // namespace

FiniteChain::FiniteChain(std::vector<Label> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (!(elements_[i - 1] < elements_[i])) {
      throw std::invalid_argument("finite chain must be strictly increasing");
    }
  }
}

FiniteChain FiniteChain::iota(std::size_t size, Label first) {
  std::vector<Label> xs(size);
  for (std::size_t i = 0; i < size; ++i) {
    xs[i] = first + i;
  }
  return FiniteChain{std::move(xs)};
}

bool FiniteChain::contains(Label x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t FiniteChain::index_of(Label x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) {
    throw std::out_of_range("label " + std::to_string(x) + " not in chain");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

bool point_less(const Codomain& c, const Point& a, const Point& b) {
  return std::visit(
      overloaded{
          [&](const SumTail&) { return std::tie(a[1], a[0]) < std::tie(b[1], b[0]); },
          [&](const Leveled&) { return std::tie(a[1], a[0]) < std::tie(b[1], b[0]); },
          [&](const Power&) {
            return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
          },
          [&](const Signed& s) {
            if (a[1] != b[1]) {
              return a[1] < b[1];
            }
            return s.parts[a[1]].sign == Sign::plus ? a[0] < b[0] : a[0] > b[0];
          },
      },
      c);
}

bool contains_point(const Codomain& c, const Point& p) {
  return std::visit(
      overloaded{
          [&](const SumTail& s) {
            if (!pair_shape(p)) return false;
            if (p[1] == 0) return s.base.contains(p[0]);
            return p[1] == 1 && p[0] < s.m;
          },
          [&](const Leveled& l) {
            return pair_shape(p) && p[1] < l.levels.size() && l.levels[p[1]].contains(p[0]);
          },
          [&](const Power& pw) {
            return p.size() == pw.m &&
                   std::all_of(p.begin(), p.end(), [&](Label x) { return pw.base.contains(x); });
          },
          [&](const Signed& s) {
            return pair_shape(p) && p[1] < s.parts.size() && s.parts[p[1]].chain.contains(p[0]);
          },
      },
      c);
}

std::size_t codomain_size(const Codomain& c) {
  return std::visit(overloaded{
                        [](const SumTail& s) { return s.base.size() + s.m; },
                        [](const Leveled& l) {
                          std::size_t total = 0;
                          for (const auto& u : l.levels) total += u.size();
                          return total;
                        },
                        [](const Power& pw) {
                          std::size_t total = 1;
                          for (std::size_t i = 0; i < pw.m; ++i) total *= pw.base.size();
                          return total;
                        },
                        [](const Signed& s) {
                          std::size_t total = 0;
                          for (const auto& part : s.parts) total += part.chain.size();
                          return total;
                        },
                    },
                    c);
}

std::vector<Point> order_points(const Codomain& c) {
  std::vector<Point> out;
  out.reserve(codomain_size(c));
  std::visit(overloaded{
                 [&](const SumTail& s) {
                   for (Label a : s.base.elements()) out.push_back({a, 0});
                   for (Label j = 0; j < s.m; ++j) out.push_back({j, 1});
                 },
                 [&](const Leveled& l) {
                   for (Label level = 0; level < l.levels.size(); ++level) {
                     for (Label a : l.levels[level].elements()) out.push_back({a, level});
                   }
                 },
                 [&](const Power& pw) {
                   const std::size_t k = pw.base.size();
                   if (k == 0 || pw.m == 0) return;
                   // Odometer with coordinate 0 spinning fastest gives antilex order.
                   std::vector<std::size_t> digits(pw.m, 0);
                   while (true) {
                     Point p(pw.m);
                     for (std::size_t i = 0; i < pw.m; ++i) p[i] = pw.base[digits[i]];
                     out.push_back(std::move(p));
                     std::size_t i = 0;
                     while (i < pw.m && ++digits[i] == k) digits[i++] = 0;
                     if (i == pw.m) break;
                   }
                 },
                 [&](const Signed& s) {
                   for (Label part = 0; part < s.parts.size(); ++part) {
                     const auto& xs = s.parts[part].chain.elements();
                     if (s.parts[part].sign == Sign::plus) {
                       for (Label a : xs) out.push_back({a, part});
                     } else {
                       for (auto it = xs.rbegin(); it != xs.rend(); ++it) out.push_back({*it, part});
                     }
                   }
                 },
             },
             c);
  return out;
}

Embedding::Embedding(std::shared_ptr<const Codomain> codomain, std::vector<Point> images)
    : codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!codomain_) {
    throw std::invalid_argument("embedding needs a codomain");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!contains_point(*codomain_, images_[i])) {
      throw std::invalid_argument("image " + std::to_string(i) + " is not a codomain point");
    }
    if (i > 0 && !point_less(*codomain_, images_[i - 1], images_[i])) {
      throw std::invalid_argument("images must be strictly increasing");
    }
  }
}

bool operator==(const Embedding& a, const Embedding& b) {
  return a.images_ == b.images_ &&
         (a.codomain_ == b.codomain_ || *a.codomain_ == *b.codomain_);
}

void for_each_combination(std::size_t size, std::size_t n,
                          const std::function<void(std::span<const std::size_t>)>& visit) {
  if (n > size) {
    return;
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == size - n + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<std::size_t>> combinations(std::size_t size, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for_each_combination(size, n, [&](std::span<const std::size_t> idx) {
    out.emplace_back(idx.begin(), idx.end());
  });
  return out;
}

std::vector<Embedding> enumerate_embeddings(std::size_t n, const Codomain& c) {
  auto shared = std::make_shared<const Codomain>(c);
  const std::vector<Point> points = order_points(c);
  std::vector<Embedding> out;
  for_each_combination(points.size(), n, [&](std::span<const std::size_t> idx) {
    std::vector<Point> images;
    images.reserve(n);
    for (std::size_t i : idx) images.push_back(points[i]);
    out.emplace_back(shared, std::move(images));
  });
  return out;
}

namespace {

Label reflect(const FiniteChain& chain, Label x) {
  return chain[chain.size() - 1 - chain.index_of(x)];
}

}  // namespace

Embedding reverse_transport(const Embedding& f) {
  const auto* s = std::get_if<Signed>(&f.codomain());
  if (s == nullptr) {
    throw std::invalid_argument("reverse_transport expects an embedding into a signed sum");
  }
  Leveled target;
  for (const auto& part : s->parts) target.levels.push_back(part.chain);
  std::vector<Point> images;
  images.reserve(f.n());
  for (const Point& p : f.images()) {
    const auto& part = s->parts[p[1]];
    images.push_back({part.sign == Sign::minus ? reflect(part.chain, p[0]) : p[0], p[1]});
  }
  return Embedding{std::make_shared<const Codomain>(std::move(target)), std::move(images)};
}

Embedding reverse_transport(const Embedding& f, std::span<const Sign> signs) {
  const auto* l = std::get_if<Leveled>(&f.codomain());
  if (l == nullptr) {
    throw std::invalid_argument("inverse reverse_transport expects an embedding into levels");
  }
  if (signs.size() != l->levels.size()) {
    throw std::invalid_argument("one sign per level required");
  }
  Signed target;
  for (std::size_t i = 0; i < signs.size(); ++i) target.parts.push_back({l->levels[i], signs[i]});
  std::vector<Point> images;
  images.reserve(f.n());
  for (const Point& p : f.images()) {
    const auto& chain = l->levels[p[1]];
    images.push_back({signs[p[1]] == Sign::minus ? reflect(chain, p[0]) : p[0], p[1]});
  }
  return Embedding{std::make_shared<const Codomain>(std::move(target)), std::move(images)};
}

nlohmann::json to_json(const Embedding& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const Point& p : f.images()) out.push_back(p);
  return out;
}

}  // namespace bigramsey
