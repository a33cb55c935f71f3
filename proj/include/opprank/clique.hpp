#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "opprank/bitmat.hpp"

namespace opprank {

/// Simple undirected graph on {0..n-1} with bitset adjacency.
struct Graph {
    std::size_t n = 0;
    BitMatrix adj;

    /// Validates symmetry and zero diagonal.
    static Graph from_bitmatrix(BitMatrix m);

    bool adjacent(std::size_t u, std::size_t v) const { return adj.get(u, v); }
    std::size_t degree(std::size_t v) const { return adj.row_sum(v); }
};

struct CliqueResult {
    std::size_t size = 0;
    std::vector<int> witness;     // re-verified clique of `size` vertices
    bool optimal = false;         // search space exhausted under bound_used
    std::size_t bound_used = 0;   // effective initial upper bound
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

/// True iff all witness vertices are distinct, in range and pairwise adjacent.
bool verify_clique(const Graph& g, const std::vector<int>& witness);

/// Randomized greedy construction plus (1,2)-swap local improvement.
/// Deterministic under a fixed seed.  Stops early once `target` is reached
/// (0 = no target).  The result is a valid clique, never claimed optimal.
CliqueResult greedy_lower_bound(const Graph& g, std::size_t restarts,
                                std::uint64_t seed = 1, std::size_t target = 0);

struct ExactOptions {
    std::size_t upper_bound = 0;        // caller-asserted hint; 0 = none
    bool fix_first_vertex = false;      // requires (weakly checked) transitivity
    std::uint64_t node_budget = UINT64_MAX;
    double time_budget_s = 0;           // 0 = unlimited
    int threads = 1;
    std::vector<int> initial_clique;    // incumbent seed, e.g. from greedy
};

/// Branch-and-bound maximum clique with greedy-coloring bounds.
/// - initial global upper bound = min(upper_bound hint, n);
/// - with fix_first_vertex, only cliques through vertex 0 are searched,
///   valid under vertex-transitivity (checked weakly: constant degree and
///   constant BFS profile; throws if the check fails);
/// - on budget exhaustion returns the best clique found with optimal=false.
CliqueResult max_clique_exact(const Graph& g, const ExactOptions& opt = {});

}  // namespace opprank
