#include "tangentia/graphs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tangentia {

std::vector<int> CombType::children(int v) const {
  std::vector<int> out;
  for (int u = 0; u < vertex_count(); ++u)
    if (parent[static_cast<std::size_t>(u)] == v) out.push_back(u);
  return out;
}

bool Validation::violates(int axiom) const {
  return std::any_of(violations.begin(), violations.end(), [axiom](const AxiomViolation& v) { return v.axiom == axiom; });
}

Validation validate(const CombType& g) {
  Validation result;
  const auto fail = [&](int axiom, std::string message) { result.violations.push_back({axiom, std::move(message)}); };
  const int nv = g.vertex_count();

  if (g.n < 0 || g.r < 1) fail(1, "need n >= 0 and r >= 1");
  if (static_cast<int>(g.layers.size()) != g.n + 1) {
    fail(1, "expected " + std::to_string(g.n + 1) + " layers");
    return result;
  }

  std::vector<int> level(static_cast<std::size_t>(nv), -1);
  for (std::size_t j = 0; j < g.layers.size(); ++j)
    for (int v : g.layers[j]) {
      if (v < 0 || v >= nv) {
        fail(1, "layer " + std::to_string(j + 1) + " names unknown vertex " + std::to_string(v));
        return result;
      }
      if (level[static_cast<std::size_t>(v)] != -1) fail(1, "vertex " + std::to_string(v) + " lies on two layers");
      level[static_cast<std::size_t>(v)] = static_cast<int>(j);
    }
  for (int v = 0; v < nv; ++v)
    if (level[static_cast<std::size_t>(v)] == -1) fail(1, "vertex " + std::to_string(v) + " is on no layer");

  if (g.layers.front().size() != 1) fail(1, "layer 1 must have exactly one vertex");
  {
    std::vector<int> leaves = g.leaf_order;
    std::sort(leaves.begin(), leaves.end());
    std::vector<int> last = g.layers.back();
    std::sort(last.begin(), last.end());
    if (static_cast<int>(g.leaf_order.size()) != g.r || leaves != last ||
        std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end())
      fail(1, "leaf order must be a bijection onto layer " + std::to_string(g.n + 1));
  }
  if (!result.ok()) return result;

  for (int v = 0; v < nv; ++v) {
    const int j = level[static_cast<std::size_t>(v)];
    const int p = g.parent[static_cast<std::size_t>(v)];
    if (j == 0) {
      if (p != -1) fail(2, "top vertex " + std::to_string(v) + " has a parent");
    } else if (p < 0 || p >= nv || level[static_cast<std::size_t>(p)] != j - 1) {
      fail(2, "vertex " + std::to_string(v) + " needs a unique parent on layer " + std::to_string(j));
    }
  }
  for (int j = 0; j < g.n; ++j) {
    bool branching = false;
    for (int v : g.layers[static_cast<std::size_t>(j)]) {
      const auto kids = g.children(v).size();
      if (kids == 0) fail(2, "vertex " + std::to_string(v) + " on layer " + std::to_string(j + 1) + " has no child");
      branching = branching || kids >= 2;
    }
    if (!branching) fail(3, "layer " + std::to_string(j + 1) + " has no vertex with two children");
  }
  return result;
}

PartitionChain canonical_key(const CombType& g) {
  // Descendant leaves, filled bottom-up.
  std::vector<std::vector<int>> below(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.r; ++i) below[static_cast<std::size_t>(g.leaf_order[static_cast<std::size_t>(i)])] = {i};
  for (int j = g.n; j >= 1; --j)
    for (int v : g.layers[static_cast<std::size_t>(j)]) {
      auto& up = below[static_cast<std::size_t>(g.parent[static_cast<std::size_t>(v)])];
      const auto& mine = below[static_cast<std::size_t>(v)];
      up.insert(up.end(), mine.begin(), mine.end());
    }
  PartitionChain chain;
  for (const auto& layer : g.layers) {
    std::vector<std::vector<int>> blocks;
    for (int v : layer) {
      auto b = below[static_cast<std::size_t>(v)];
      std::sort(b.begin(), b.end());
      blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end());
    chain.push_back(std::move(blocks));
  }
  return chain;
}

CombType from_chain(int n, int r, const PartitionChain& chain) {
  if (static_cast<int>(chain.size()) != n + 1) throw std::invalid_argument("chain length must be n + 1");
  CombType g;
  g.n = n;
  g.r = r;
  g.leaf_order.assign(static_cast<std::size_t>(r), -1);
  // Block owning each leaf on the previous layer, as a vertex id.
  std::vector<int> owner(static_cast<std::size_t>(r), -1);
  int next_id = 0;
  for (const auto& blocks : chain) {
    std::vector<int> layer;
    std::vector<int> new_owner(static_cast<std::size_t>(r), -1);
    for (const auto& block : blocks) {
      const int id = next_id++;
      layer.push_back(id);
      g.parent.push_back(owner[static_cast<std::size_t>(block.front())]);
      for (int leaf : block) new_owner[static_cast<std::size_t>(leaf)] = id;
    }
    g.layers.push_back(std::move(layer));
    owner = std::move(new_owner);
  }
  for (const auto& block : chain.back()) {
    if (block.size() != 1) throw std::invalid_argument("last layer of a chain must be singletons");
    g.leaf_order[static_cast<std::size_t>(block.front())] = owner[static_cast<std::size_t>(block.front())];
  }
  return g;
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Every way of merging the blocks of p into exactly k groups.
std::vector<Partition> coarsenings(const Partition& p, std::size_t k) {
  std::vector<Partition> out;
  const std::size_t m = p.size();
  std::vector<std::size_t> label(m, 0);
  // Restricted growth strings over the blocks.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (used + (m - i) < k) return;
    if (i == m) {
      if (used != k) return;
      Partition q(k);
      for (std::size_t b = 0; b < m; ++b) q[label[b]].insert(q[label[b]].end(), p[b].begin(), p[b].end());
      for (auto& block : q) std::sort(block.begin(), block.end());
      std::sort(q.begin(), q.end());
      out.push_back(std::move(q));
      return;
    }
    for (std::size_t l = 0; l <= used && l < k; ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

std::vector<CombType> enumerate_types(int n, int r) {
  if (n < 0 || n > kMaxLevels || r < 1 || r > kMaxRoots)
    throw std::invalid_argument("enumeration budget is 0 <= n <= " + std::to_string(kMaxLevels) + ", 1 <= r <= " +
                                std::to_string(kMaxRoots));
  Partition leaves;
  for (int i = 0; i < r; ++i) leaves.push_back({i});

  std::vector<PartitionChain> chains;
  PartitionChain bottom_up{leaves};
  // Each step strictly merges; the top must be a single block after n steps.
  std::function<void(int)> rec = [&](int steps_left) {
    const Partition cur = bottom_up.back();
    if (steps_left == 0) {
      if (cur.size() == 1) chains.emplace_back(bottom_up.rbegin(), bottom_up.rend());
      return;
    }
    for (std::size_t k = 1; k < cur.size(); ++k) {
      if (static_cast<int>(k) - 1 < steps_left - 1) continue;
      if (steps_left == 1 && k != 1) continue;
      for (auto& q : coarsenings(cur, k)) {
        bottom_up.push_back(std::move(q));
        rec(steps_left - 1);
        bottom_up.pop_back();
      }
    }
  };
  rec(n);

  std::sort(chains.begin(), chains.end());
  std::vector<CombType> out;
  out.reserve(chains.size());
  for (const auto& chain : chains) out.push_back(from_chain(n, r, chain));
  return out;
}

CombType relabel_leaves(const CombType& type, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != type.r) throw std::invalid_argument("permutation has wrong length");
  CombType out = type;
  for (int i = 0; i < type.r; ++i)
    out.leaf_order[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        type.leaf_order[static_cast<std::size_t>(i)];
  return from_chain(out.n, out.r, canonical_key(out));
}

WeightedCombType propagate_weights(const CombType& shape, const std::vector<long>& root_weights) {
  if (static_cast<int>(root_weights.size()) != shape.r)
    throw std::invalid_argument("expected " + std::to_string(shape.r) + " root weights");
  WeightedCombType w{shape, std::vector<long>(static_cast<std::size_t>(shape.vertex_count()), 0)};
  for (int i = 0; i < shape.r; ++i) {
    if (root_weights[static_cast<std::size_t>(i)] < 1) throw std::invalid_argument("root weights must be positive");
    w.mu[static_cast<std::size_t>(shape.leaf_order[static_cast<std::size_t>(i)])] =
        root_weights[static_cast<std::size_t>(i)];
  }
  for (int j = shape.n; j >= 1; --j)
    for (int v : shape.layers[static_cast<std::size_t>(j)])
      w.mu[static_cast<std::size_t>(shape.parent[static_cast<std::size_t>(v)])] += w.mu[static_cast<std::size_t>(v)];
  return w;
}

std::string render_tree(const CombType& type, const std::vector<long>& mu) {
  std::vector<int> leaf_of(static_cast<std::size_t>(type.vertex_count()), -1);
  for (int i = 0; i < type.r; ++i) leaf_of[static_cast<std::size_t>(type.leaf_order[static_cast<std::size_t>(i)])] = i;
  std::string out;
  std::function<void(int, int)> visit = [&](int v, int depth) {
    out += std::string(static_cast<std::size_t>(2 * depth), ' ') + "v" + std::to_string(v) + " [layer " +
           std::to_string(depth + 1) + "]";
    if (leaf_of[static_cast<std::size_t>(v)] >= 0) out += " leaf " + std::to_string(leaf_of[static_cast<std::size_t>(v)] + 1);
    if (!mu.empty()) out += " mu=" + std::to_string(mu[static_cast<std::size_t>(v)]);
    out += "\n";
    for (int u : type.children(v)) visit(u, depth + 1);
  };
  visit(type.layers.front().front(), 0);
  return out;
}

}  // namespace tangentia
