#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>

#include "quadgraph/bitset.hpp"
#include "quadgraph/quadform.hpp"
#include "quadgraph/subspace.hpp"

namespace quadgraph {

class BudgetError : public Error {
public:
    using Error::Error;
};

enum class GraphKind { GammaSquare, GammaBar };
enum class LoopPolicy { Include, Exclude };

struct BuildOptions {
    LoopPolicy loop_policy = LoopPolicy::Include;  // only meaningful for Γ̄
    unsigned threads = 0;                          // 0 = hardware default
    std::optional<std::filesystem::path> cache_dir;
};

/// Orthogonality graph on k-subspaces of (F_q^n, λdot_n): x ~ y iff
/// x ⊆ y⊥, i.e. the basis-to-basis bilinear products all vanish. Vertices of
/// GammaSquare are the dot_k-subspaces; GammaBar takes every k-subspace and
/// its loop policy decides whether totally isotropic vertices carry a
/// diagonal entry.
class OrthGraph {
public:
    GraphKind kind = GraphKind::GammaSquare;
    int n = 0, k = 0;
    LoopPolicy loop_policy = LoopPolicy::Include;
    QuadraticSpace ambient;  // λdot_n
    SubspaceSet vertices;
    std::vector<Bitset> adj;

    size_t vertex_count() const { return vertices.size(); }
    bool adjacent(size_t u, size_t v) const { return adj[u].test(v); }
    /// Row sum of the adjacency matrix (includes the loop bit when present).
    size_t degree(size_t u) const { return adj[u].count(); }
    size_t loop_count() const;
    size_t edge_count() const;  // unordered non-loop pairs
    const FieldRef& field() const { return ambient.field(); }

    /// Same graph with the diagonal included/erased (vertices shared).
    OrthGraph with_loop_policy(LoopPolicy p) const;
};

OrthGraph build_gamma_square(int n, int k, const FieldRef& spec, const BuildOptions& opt = {});
OrthGraph build_gamma_bar(int n, int k, const FieldRef& spec, const BuildOptions& opt = {});

/// Count of dot_k-subspaces of standard λdot_n without materializing the
/// graph (streaming enumeration). This is the vertex count of Γ□(n,k,q).
std::uint64_t count_dotk_subspaces(int n, int k, const FieldRef& spec, unsigned threads = 0);

/// Exact clique number by branch and bound with greedy-coloring bounds.
/// Throws BudgetError once more than node_budget search nodes are expanded.
int max_clique(const OrthGraph& g, std::uint64_t node_budget = 50'000'000,
               std::vector<int>* witness = nullptr);

/// Enumerate every clique of exactly `size` vertices (loops ignored),
/// restricted to cliques whose smallest vertex lies in [first_lo, first_hi).
/// Cliques are emitted as strictly increasing index vectors.
void for_each_clique_of_size(const OrthGraph& g, int size,
                             const std::function<void(const std::vector<int>&)>& fn,
                             std::uint64_t node_budget = 50'000'000, size_t first_lo = 0,
                             size_t first_hi = SIZE_MAX);

struct InducedSubgraph {
    std::vector<int> vertices;  // indices into the parent graph
    std::vector<Bitset> adj;    // local indices
};

/// Induced subgraph on the neighborhood of x (GammaSquare, k < n/2).
InducedSubgraph neighborhood_subgraph(const OrthGraph& g, int x);

struct NeighborhoodIsomorphism {
    int x = 0;
    std::vector<int> neighbors;  // vertex indices in g
    std::vector<int> image;      // image[i] = vertex index in the target graph
    bool bijective = false;
    bool adjacency_preserved = false;  // both directions, edge by edge
};

/// Explicit Lemma-6 style bijection: map N(x) into Γ□(n-k, k, q) through the
/// isometry x⊥ → λdot_{n-k}. `target` must be build_gamma_square(n-k, k, q).
NeighborhoodIsomorphism neighborhood_isomorphism(const OrthGraph& g, int x,
                                                 const OrthGraph& target);

/// All reflections r_v for anisotropic v, one per projective point.
std::vector<Matrix> reflection_generators(const QuadraticSpace& q);

struct OrbitCheckResult {
    bool vertex_transitive = false;
    size_t vertex_orbit = 0;
    size_t arc_count = 0;
    bool arc_checked = false;  // false when over arc_cap (or no arcs)
    bool arc_transitive = false;
    size_t arc_orbit = 0;
};

/// BFS closure of one vertex / one arc under the generator action. Every
/// generator must preserve the Gram matrix (checked).
OrbitCheckResult orbit_check(const OrthGraph& g, const std::vector<Matrix>& generators,
                             size_t arc_cap = 20000);

struct GraphStats {
    size_t vertex_count = 0;
    size_t edge_count = 0;
    size_t loop_count = 0;
    std::map<size_t, size_t> degree_histogram;  // adjacency row sums
    bool regular = false;
    size_t degree = 0;  // valid when regular
    std::optional<int> clique_number;
    double vertex_ratio = 0.0;  // vertexCount / (q^{k(n-k)} / s), s = 2 for Γ□
    double degree_ratio = 0.0;  // degree / (q^{k(n-2k)} / s), valid when regular
};

/// Exact counts plus the ratios against the asymptotic predictions. Passing
/// clique_budget = 0 skips the (potentially expensive) clique number.
GraphStats stats(const OrthGraph& g, std::uint64_t clique_budget = 0);

void write_edge_list(const OrthGraph& g, std::ostream& edges, std::ostream* vertex_table);
void write_dot(const OrthGraph& g, std::ostream& out);

}  // namespace quadgraph
