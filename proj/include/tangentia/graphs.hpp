#pragma once

// Layered trees classifying degenerate genus-0 relative maps into an expanded
// target with n bubbles and r fully tangent components.
//
// Layer 1 holds a single vertex, layer n+1 holds the r ordered leaves, each
// vertex below layer 1 has exactly one parent in the previous layer, every
// vertex above the leaves has a child, and every non-leaf layer has a vertex
// with at least two children. Isomorphisms permute vertices inside a layer
// and fix the leaf labels, so a type is the same thing as a strictly refining
// chain of set partitions of {1..r} from one block down to singletons.

#include <string>
#include <vector>

namespace tangentia {

struct CombType {
  int n = 0;
  int r = 1;
  std::vector<std::vector<int>> layers;  // layers[j] lists the vertex ids of layer j+1
  std::vector<int> parent;               // by vertex id; -1 on layer 1
  std::vector<int> leaf_order;           // leaf i (0-based) -> vertex id

  int vertex_count() const { return static_cast<int>(parent.size()); }
  std::vector<int> children(int v) const;
};

struct AxiomViolation {
  int axiom = 0;  // 1: ends, 2: adjacency, 3: stability
  std::string message;
};

struct Validation {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(int axiom) const;
};

Validation validate(const CombType& candidate);

/// Descendant leaf sets of each layer, blocks sorted; identifies the
/// isomorphism class. Requires a valid type.
using PartitionChain = std::vector<std::vector<std::vector<int>>>;
PartitionChain canonical_key(const CombType& type);

/// Builds the canonical representative of a partition chain.
CombType from_chain(int n, int r, const PartitionChain& chain);

inline constexpr int kMaxLevels = 6;
inline constexpr int kMaxRoots = 6;

/// All isomorphism classes of G_{n,r}, in canonical order. Throws
/// std::invalid_argument outside n <= 6, 1 <= r <= 6.
std::vector<CombType> enumerate_types(int n, int r);

/// The same type with leaf i relabelled perm[i].
CombType relabel_leaves(const CombType& type, const std::vector<int>& perm);

struct WeightedCombType {
  CombType shape;
  std::vector<long> mu;  // by vertex id

  long top_weight() const { return mu.at(static_cast<std::size_t>(shape.layers.front().front())); }
};

/// mu(leaf i) = root_weights[i], mu(v) = sum over children.
WeightedCombType propagate_weights(const CombType& shape, const std::vector<long>& root_weights);

/// Indented text rendering, one vertex per line, with weights when given.
std::string render_tree(const CombType& type, const std::vector<long>& mu = {});

}  // namespace tangentia
