#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "doctest.h"
#include "tangentia/graphs.hpp"

using tangentia::CombType;

namespace {

// Oracle: enumerate every layered forest directly as parent arrays, with
// layer sizes s_2..s_n free, and count isomorphism classes by canonicalising
// the leaf descendant sets of each layer.
std::size_t brute_force_count(int n, int r) {
  if (n == 0) return r == 1 ? 1 : 0;
  std::set<std::vector<std::set<std::set<int>>>> classes;
  // sizes[j] = vertex count on layer j+1; layer 1 has 1 vertex, layer n+1 has r.
  std::vector<int> sizes(static_cast<std::size_t>(n + 1), 1);
  sizes.back() = r;
  std::function<void(int)> choose_sizes = [&](int j) {
    if (j == n) {
      // parents[j][k] = index in layer j of the parent of vertex k on layer j+1.
      std::vector<std::vector<int>> parents(static_cast<std::size_t>(n));
      std::function<void(int)> assign = [&](int layer) {
        if (layer == n) {
          std::vector<std::vector<std::set<int>>> desc(static_cast<std::size_t>(n + 1));
          desc[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(r));
          for (int k = 0; k < r; ++k) desc[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = {k};
          for (int l = n - 1; l >= 0; --l) {
            desc[static_cast<std::size_t>(l)].assign(static_cast<std::size_t>(sizes[static_cast<std::size_t>(l)]), {});
            const auto& par = parents[static_cast<std::size_t>(l)];
            for (std::size_t k = 0; k < par.size(); ++k)
              for (int leaf : desc[static_cast<std::size_t>(l + 1)][k])
                desc[static_cast<std::size_t>(l)][static_cast<std::size_t>(par[k])].insert(leaf);
          }
          for (int l = 0; l < n; ++l) {
            const auto& par = parents[static_cast<std::size_t>(l)];
            std::vector<int> kids(static_cast<std::size_t>(sizes[static_cast<std::size_t>(l)]), 0);
            for (int x : par) ++kids[static_cast<std::size_t>(x)];
            if (std::find(kids.begin(), kids.end(), 0) != kids.end()) return;  // childless non-leaf
            if (*std::max_element(kids.begin(), kids.end()) < 2) return;      // no branching
          }
          std::vector<std::set<std::set<int>>> key;
          for (const auto& layer_sets : desc) key.emplace_back(layer_sets.begin(), layer_sets.end());
          classes.insert(key);
          return;
        }
        auto& par = parents[static_cast<std::size_t>(layer)];
        const int above = sizes[static_cast<std::size_t>(layer)];
        const int count = sizes[static_cast<std::size_t>(layer + 1)];
        par.assign(static_cast<std::size_t>(count), 0);
        while (true) {
          assign(layer + 1);
          int i = 0;
          while (i < count && par[static_cast<std::size_t>(i)] == above - 1) par[static_cast<std::size_t>(i++)] = 0;
          if (i == count) break;
          ++par[static_cast<std::size_t>(i)];
        }
      };
      assign(0);
      return;
    }
    for (int s = 1; s <= r; ++s) {
      sizes[static_cast<std::size_t>(j)] = s;
      choose_sizes(j + 1);
    }
  };
  choose_sizes(1);
  return classes.size();
}

}  // namespace

TEST_CASE("small type counts") {
  CHECK(tangentia::enumerate_types(0, 1).size() == 1);
  for (int n = 1; n <= 4; ++n) CHECK(tangentia::enumerate_types(n, 1).empty());
  CHECK(tangentia::enumerate_types(1, 2).size() == 1);
  for (int n : {0, 2, 3, 4}) CHECK(tangentia::enumerate_types(n, 2).empty());
  CHECK(tangentia::enumerate_types(2, 3).size() == 3);
  CHECK(tangentia::enumerate_types(1, 3).size() == 1);
  CHECK(tangentia::enumerate_types(3, 3).empty());
  CHECK_THROWS_AS(tangentia::enumerate_types(7, 2), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::enumerate_types(1, 0), std::invalid_argument);
}

TEST_CASE("enumeration agrees with a brute-force parent-array search") {
  for (int n = 0; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(tangentia::enumerate_types(n, r).size() == brute_force_count(n, r));
    }
  CHECK(brute_force_count(2, 3) == 3);
}

TEST_CASE("enumerated types are valid, distinct and round-trip through their key") {
  for (int n = 0; n <= 4; ++n)
    for (int r = 1; r <= 5; ++r) {
      const auto types = tangentia::enumerate_types(n, r);
      std::set<tangentia::PartitionChain> keys;
      for (const auto& t : types) {
        CHECK(tangentia::validate(t).ok());
        const auto key = tangentia::canonical_key(t);
        keys.insert(key);
        CHECK(tangentia::canonical_key(tangentia::from_chain(n, r, key)) == key);
      }
      CHECK(keys.size() == types.size());
    }
}

TEST_CASE("validation reports the broken axiom") {
  // Two layers, one leaf: no branching on layer 1.
  CombType chain;
  chain.n = 1;
  chain.r = 1;
  chain.layers = {{0}, {1}};
  chain.parent = {-1, 0};
  chain.leaf_order = {1};
  CHECK(tangentia::validate(chain).violates(3));

  // n = 2, r = 2 with a childless vertex on layer 2.
  CombType dangling;
  dangling.n = 2;
  dangling.r = 2;
  dangling.layers = {{0}, {1, 2}, {3, 4}};
  dangling.parent = {-1, 0, 0, 1, 1};
  dangling.leaf_order = {3, 4};
  const auto v = tangentia::validate(dangling);
  CHECK_FALSE(v.ok());
  CHECK(v.violates(2));

  // Top layer with two vertices.
  CombType two_tops;
  two_tops.n = 1;
  two_tops.r = 2;
  two_tops.layers = {{0, 1}, {2, 3}};
  two_tops.parent = {-1, -1, 0, 1};
  two_tops.leaf_order = {2, 3};
  CHECK(tangentia::validate(two_tops).violates(1));
}

TEST_CASE("type sets are closed under leaf permutations") {
  for (int n = 0; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r) {
      const auto types = tangentia::enumerate_types(n, r);
      std::set<tangentia::PartitionChain> keys;
      for (const auto& t : types) keys.insert(tangentia::canonical_key(t));
      std::vector<int> perm(static_cast<std::size_t>(r));
      std::iota(perm.begin(), perm.end(), 0);
      do
        for (const auto& t : types) {
          const auto moved = tangentia::relabel_leaves(t, perm);
          CHECK(tangentia::validate(moved).ok());
          CHECK(keys.count(tangentia::canonical_key(moved)) == 1);
        }
      while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("weight propagation conserves the total") {
  for (int n = 0; n <= 3; ++n)
    for (int r = 1; r <= 4; ++r)
      for (const auto& shape : tangentia::enumerate_types(n, r)) {
        std::vector<long> w(static_cast<std::size_t>(r), 1);
        while (true) {
          const auto weighted = tangentia::propagate_weights(shape, w);
          CHECK(weighted.top_weight() == std::accumulate(w.begin(), w.end(), 0L));
          for (int v = 0; v < shape.vertex_count(); ++v) {
            const auto kids = shape.children(v);
            if (kids.empty()) continue;
            long sum = 0;
            for (int c : kids) sum += weighted.mu[static_cast<std::size_t>(c)];
            CHECK(weighted.mu[static_cast<std::size_t>(v)] == sum);
          }
          std::size_t i = 0;
          while (i < w.size() && w[i] == 5) w[i++] = 1;
          if (i == w.size()) break;
          ++w[i];
        }
      }
}

TEST_CASE("weight propagation edge cases") {
  const auto single = tangentia::enumerate_types(0, 1).at(0);
  CHECK(tangentia::propagate_weights(single, {7}).top_weight() == 7);
  const auto cherry = tangentia::enumerate_types(1, 2).at(0);
  CHECK(tangentia::propagate_weights(cherry, {3, 9}).top_weight() == 12);
  CHECK_THROWS_AS(tangentia::propagate_weights(cherry, {3}), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::propagate_weights(cherry, {3, 0}), std::invalid_argument);
  CHECK_FALSE(tangentia::render_tree(cherry, tangentia::propagate_weights(cherry, {3, 9}).mu).empty());
}
