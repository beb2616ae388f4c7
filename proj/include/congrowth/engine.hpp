#pragma once

// Generic finitely generated groups: exact ball enumeration by breadth-first
// search over normal forms, and conjugacy-class counting either through a
// conjugacy invariant or through the bounded-conjugator oracle.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "congrowth/errors.hpp"
#include "congrowth/parallel.hpp"

namespace congrowth {

template <class E>
struct Generator {
  std::string name;
  E element;
};

template <class T>
concept Hashable = requires(const T& t) {
  { std::hash<T>{}(t) } -> std::convertible_to<std::size_t>;
};

/// A group given by exact normal forms. Elements compare equal iff they are
/// equal in the group, so the element itself is its canonical key.
/// generators() lists every generator together with its inverse.
template <class G>
concept Group = requires(const G& g, const typename G::element_type& x) {
  typename G::element_type;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(x, x) } -> std::convertible_to<typename G::element_type>;
  { g.invert(x) } -> std::convertible_to<typename G::element_type>;
  { g.generators() } -> std::convertible_to<std::span<const Generator<typename G::element_type>>>;
} && std::totally_ordered<typename G::element_type> && Hashable<typename G::element_type>;

/// Groups that expose a conjugacy invariant: conjugate elements always get
/// equal keys. When conjugacy_key_complete is true, equal keys also imply
/// conjugacy.
template <class G>
concept HasConjugacyInvariant = Group<G> && requires(const G& g, const typename G::element_type& x) {
  typename G::conjugacy_key_type;
  { g.conjugacy_key(x) } -> std::convertible_to<typename G::conjugacy_key_type>;
  { G::conjugacy_key_complete } -> std::convertible_to<bool>;
} && Hashable<typename G::conjugacy_key_type>;

template <Group G>
using element_t = typename G::element_type;

/// Canonical key of an element: its normal form.
template <Group G>
const element_t<G>& canonical_key(const G&, const element_t<G>& x) {
  return x;
}

/// Thread count from CONGROWTH_THREADS, else the hardware concurrency.
unsigned default_thread_count();

struct EngineConfig {
  std::size_t element_cap = 20'000'000;
  unsigned threads = default_thread_count();
};

template <class E>
class Ball {
 public:
  /// Last fully enumerated radius.
  int radius() const { return static_cast<int>(sphere_end_.size()) - 1; }
  bool truncated() const { return truncated_; }

  std::size_t size() const { return elements_.size(); }
  std::size_t size(int r) const { return sphere_end_.at(static_cast<std::size_t>(r)); }
  std::size_t sphere_size(int r) const { return r == 0 ? size(0) : size(r) - size(r - 1); }
  std::vector<std::size_t> sphere_sizes() const {
    std::vector<std::size_t> out;
    for (int r = 0; r <= radius(); ++r) out.push_back(sphere_size(r));
    return out;
  }

  /// Elements in BFS order: sphere 0, sphere 1, ...
  std::span<const E> elements() const { return elements_; }
  std::span<const E> prefix(int r) const { return std::span<const E>(elements_).first(size(r)); }
  std::span<const E> sphere(int r) const {
    const std::size_t lo = r == 0 ? 0 : size(r - 1);
    return std::span<const E>(elements_).subspan(lo, size(r) - lo);
  }

  /// Word length of the element at `index`.
  int length(std::size_t index) const {
    auto it = std::upper_bound(sphere_end_.begin(), sphere_end_.end(), index);
    return static_cast<int>(it - sphere_end_.begin());
  }
  std::optional<std::size_t> index_of(const E& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> length_of(const E& x) const {
    auto i = index_of(x);
    if (!i) return std::nullopt;
    return length(*i);
  }
  bool contains(const E& x) const { return index_.contains(x); }

  /// Elements of B(r) sorted by canonical key.
  std::vector<E> sorted(int r) const {
    auto p = prefix(r);
    std::vector<E> out(p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  template <Group G>
  static Ball grow(const G& g, int n, const EngineConfig& cfg);

 private:
  std::vector<E> elements_;
  std::vector<std::size_t> sphere_end_;
  std::unordered_map<E, std::size_t> index_;
  bool truncated_ = false;
};

template <class E>
template <Group G>
Ball<E> Ball<E>::grow(const G& g, int n, const EngineConfig& cfg) {
  if (n < 0) throw InputError("ball radius must be nonnegative");
  if (cfg.element_cap < 1) throw InputError("element cap must be at least 1");
  Ball ball;
  ball.elements_.push_back(g.identity());
  ball.index_.emplace(ball.elements_.front(), 0);
  ball.sphere_end_.push_back(1);

  const auto gens = std::span<const Generator<E>>(g.generators());
  constexpr std::size_t kBlock = 1 << 14;
  std::vector<E> products;
  for (int r = 1; r <= n; ++r) {
    const std::size_t lo = r == 1 ? 0 : ball.sphere_end_[static_cast<std::size_t>(r - 2)];
    const std::size_t hi = ball.sphere_end_.back();
    for (std::size_t start = lo; start < hi; start += kBlock) {
      const std::size_t count = std::min(kBlock, hi - start);
      products.assign(count * gens.size(), g.identity());
      parallel_for(count, cfg.threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < gens.size(); ++j)
          products[i * gens.size() + j] = g.multiply(ball.elements_[start + i], gens[j].element);
      });
      for (auto& p : products) {
        if (ball.index_.contains(p)) continue;
        if (ball.elements_.size() >= cfg.element_cap) {
          for (std::size_t k = ball.sphere_end_.back(); k < ball.elements_.size(); ++k)
            ball.index_.erase(ball.elements_[k]);
          ball.elements_.resize(ball.sphere_end_.back());
          ball.truncated_ = true;
          return ball;
        }
        ball.index_.emplace(p, ball.elements_.size());
        ball.elements_.push_back(std::move(p));
      }
    }
    ball.sphere_end_.push_back(ball.elements_.size());
  }
  return ball;
}

/// Exactly {g : |g| <= n} with word lengths. Throws ResourceError naming the
/// last completed radius when the element cap is hit.
template <Group G>
Ball<element_t<G>> enumerate_ball(const G& g, int n, const EngineConfig& cfg = {}) {
  auto ball = Ball<element_t<G>>::grow(g, n, cfg);
  if (ball.truncated())
    throw ResourceError("element cap " + std::to_string(cfg.element_cap) + " exceeded", ball.radius());
  return ball;
}

/// Number of distinct conjugacy keys in B(r), for r = 0..ball.radius().
template <HasConjugacyInvariant G>
std::vector<std::size_t> distinct_key_counts(const G& g, const Ball<element_t<G>>& ball, unsigned threads) {
  using Key = typename G::conjugacy_key_type;
  const auto elems = ball.elements();
  std::vector<Key> keys(elems.size());
  parallel_for(elems.size(), threads, [&](std::size_t i) { keys[i] = g.conjugacy_key(elems[i]); });
  std::unordered_set<Key> seen;
  std::vector<std::size_t> counts;
  for (int r = 0; r <= ball.radius(); ++r) {
    const std::size_t lo = r == 0 ? 0 : ball.size(r - 1);
    for (std::size_t i = lo; i < ball.size(r); ++i) seen.insert(keys[i]);
    counts.push_back(seen.size());
  }
  return counts;
}

/// g_c(n) from a complete invariant.
template <Group G>
std::size_t conjugacy_count_exact(const G& g, int n, const EngineConfig& cfg = {}) {
  if constexpr (HasConjugacyInvariant<G>) {
    if constexpr (G::conjugacy_key_complete) {
      auto ball = enumerate_ball(g, n, cfg);
      return distinct_key_counts(g, ball, cfg.threads).back();
    } else {
      throw UnsupportedError("conjugacy invariant of this group is not complete");
    }
  } else {
    throw UnsupportedError("group has no conjugacy invariant");
  }
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

/// For each element x of the ball, the indices of ball elements w^-1 x w with
/// |w| <= conj_radius (excluding x itself). Conjugators are explored by
/// repeated conjugation by generators, deduplicated by normal form.
template <Group G>
std::vector<std::vector<std::size_t>> conjugation_links(const G& g, const Ball<element_t<G>>& ball, int conj_radius,
                                                        unsigned threads) {
  using E = element_t<G>;
  if (conj_radius < 0) throw InputError("conjugator radius must be nonnegative");
  const auto gens = std::span<const Generator<E>>(g.generators());
  std::vector<E> inv;
  for (const auto& s : gens) inv.push_back(g.invert(s.element));
  const auto elems = ball.elements();
  std::vector<std::vector<std::size_t>> links(elems.size());
  parallel_for(elems.size(), threads, [&](std::size_t i) {
    std::unordered_set<E> seen{elems[i]};
    std::vector<E> frontier{elems[i]}, next;
    for (int d = 1; d <= conj_radius && !frontier.empty(); ++d) {
      next.clear();
      for (const auto& y : frontier) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          E z = g.multiply(g.multiply(inv[j], y), gens[j].element);
          if (!seen.insert(z).second) continue;
          if (auto idx = ball.index_of(z)) links[i].push_back(*idx);
          next.push_back(std::move(z));
        }
      }
      std::swap(frontier, next);
    }
    std::sort(links[i].begin(), links[i].end());
  });
  return links;
}

/// Block counts of the bounded-conjugator partition of B(r), r = 0..radius.
/// Each count is an upper bound on g_c(r), nonincreasing in conj_radius.
template <Group G>
std::vector<std::size_t> oracle_counts(const G& g, const Ball<element_t<G>>& ball, int conj_radius,
                                       unsigned threads) {
  const auto links = conjugation_links(g, ball, conj_radius, threads);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_level(static_cast<std::size_t>(ball.radius()) + 1);
  for (std::size_t i = 0; i < links.size(); ++i)
    for (std::size_t j : links[i])
      if (i < j) by_level[static_cast<std::size_t>(std::max(ball.length(i), ball.length(j)))].emplace_back(i, j);
  detail::DisjointSets sets(ball.size());
  std::size_t merges = 0;
  std::vector<std::size_t> counts;
  for (int r = 0; r <= ball.radius(); ++r) {
    for (auto [i, j] : by_level[static_cast<std::size_t>(r)]) merges += sets.unite(i, j) ? 1 : 0;
    counts.push_back(ball.size(r) - merges);
  }
  return counts;
}

/// Block index per element of B(n) under the bounded-conjugator partition.
/// Blocks are numbered by their smallest element index.
template <Group G>
std::vector<std::size_t> oracle_partition(const G& g, const Ball<element_t<G>>& ball, int n, int conj_radius,
                                          unsigned threads) {
  const std::size_t count = ball.size(n);
  const auto links = conjugation_links(g, ball, conj_radius, threads);
  detail::DisjointSets sets(ball.size());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j : links[i])
      if (j < count) sets.unite(i, j);
  std::vector<std::size_t> block(count);
  for (std::size_t i = 0; i < count; ++i) block[i] = sets.find(i);
  return block;
}

template <Group G>
std::size_t conjugacy_count_oracle(const G& g, int n, int conj_radius, const EngineConfig& cfg = {}) {
  if (n < 0) throw InputError("ball radius must be nonnegative");
  auto ball = enumerate_ball(g, n, cfg);
  return oracle_counts(g, ball, conj_radius, cfg.threads).back();
}

enum class SeriesKind { ball_size, conj_exact, conj_lower_bound, conj_upper_bound };

/// CSV spelling of a series kind: ball, exact, lower, upper.
std::string_view kind_label(SeriesKind kind);
SeriesKind parse_kind_label(std::string_view label);

/// g(first_radius..last_radius()). first_radius is 1 except for the
/// degenerate radius-0 request, which yields the single value g(0).
struct GrowthSeries {
  int first_radius = 1;
  std::vector<std::uint64_t> values;
  SeriesKind kind = SeriesKind::ball_size;
  bool truncated = false;

  int last_radius() const { return first_radius + static_cast<int>(values.size()) - 1; }
  std::uint64_t at(int n) const { return values.at(static_cast<std::size_t>(n - first_radius)); }
  bool is_nondecreasing() const { return std::is_sorted(values.begin(), values.end()); }
};

struct Method {
  enum class Kind { ball, invariant, oracle };
  Kind kind = Kind::ball;
  int conj_radius = 0;

  static Method ball() { return {Kind::ball, 0}; }
  static Method invariant() { return {Kind::invariant, 0}; }
  static Method oracle(int conj_radius) { return {Kind::oracle, conj_radius}; }
};

namespace detail {

inline GrowthSeries make_series(const std::vector<std::size_t>& per_radius, int requested, SeriesKind kind,
                                bool truncated) {
  GrowthSeries s;
  s.kind = kind;
  s.truncated = truncated;
  s.first_radius = requested == 0 ? 0 : 1;
  for (std::size_t r = static_cast<std::size_t>(s.first_radius); r < per_radius.size(); ++r)
    s.values.push_back(per_radius[r]);
  return s;
}

}  // namespace detail

/// Series over radii 1..N (or the single radius 0). On hitting the element
/// cap the completed prefix is returned with truncated = true.
template <Group G>
GrowthSeries growth_series(const G& g, int max_radius, Method method, const EngineConfig& cfg = {}) {
  if (max_radius < 0) throw InputError("series radius must be nonnegative");
  auto ball = Ball<element_t<G>>::grow(g, max_radius, cfg);
  switch (method.kind) {
    case Method::Kind::ball: {
      std::vector<std::size_t> sizes;
      for (int r = 0; r <= ball.radius(); ++r) sizes.push_back(ball.size(r));
      return detail::make_series(sizes, max_radius, SeriesKind::ball_size, ball.truncated());
    }
    case Method::Kind::invariant:
      if constexpr (HasConjugacyInvariant<G>) {
        const auto kind = G::conjugacy_key_complete ? SeriesKind::conj_exact : SeriesKind::conj_lower_bound;
        return detail::make_series(distinct_key_counts(g, ball, cfg.threads), max_radius, kind, ball.truncated());
      } else {
        throw UnsupportedError("group has no conjugacy invariant; use the oracle method");
      }
    case Method::Kind::oracle:
      return detail::make_series(oracle_counts(g, ball, method.conj_radius, cfg.threads), max_radius,
                                 SeriesKind::conj_upper_bound, ball.truncated());
  }
  throw InputError("unknown method");
}

}  // namespace congrowth
