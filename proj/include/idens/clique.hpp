#pragma once

// Exact maximum clique by bitset branch and bound (greedy colouring bound),
// plus a subset-enumeration oracle for small graphs.

#include "idens/atlas.hpp"
#include "idens/graph.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace idens::clique {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;
inline constexpr std::size_t kBruteForceLimit = 25;

struct CliqueOptions {
    /// The result is the largest clique containing these vertices.
    std::vector<std::uint32_t> seed;
    /// A known clique used only as the starting incumbent.
    std::vector<std::uint32_t> incumbent;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::uint32_t> witness;  // sorted vertex indices
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    /// The node budget ran out; size is then only a lower bound.
    bool budget_exceeded = false;
};

/// Throws SeedNotClique (seed or incumbent not a clique). Witnesses do not
/// depend on the worker count: after the parallel search fixes the optimum,
/// a sequential pass returns the first optimal clique in search order.
CliqueResult max_clique(const BitGraph& graph, const CliqueOptions& options = {});

/// Largest clique by checking every vertex subset. Throws TooLarge above 25
/// vertices.
std::size_t brute_force_clique(const BitGraph& graph);

struct IntersectingResult {
    /// alpha of the derangement graph; 1 + clique.size.
    std::size_t alpha = 0;
    /// Group element indices of a maximum intersecting set, identity first.
    std::vector<std::uint32_t> elements;
    CliqueResult clique;
    /// Fixers other than the identity, i.e. the searched vertex set.
    std::vector<std::uint32_t> fixers;
};

/// Maximum intersecting set of the full group or its PSL part under the
/// action. The search runs on the fixers other than 1, joined when y x^{-1}
/// is a fixer. Throws BudgetExceeded when the search is cut short.
IntersectingResult max_intersecting(const atlas::CosetAction& action, atlas::Which which,
                                    std::uint64_t budget = kDefaultBudget, unsigned workers = 1);

}  // namespace idens::clique
