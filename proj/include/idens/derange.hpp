#pragma once

// Derangement graphs of the coset action and the subgraph Gamma induced on
// the order-3 class, with its neighbourhood analysis around h.

#include "idens/atlas.hpp"
#include "idens/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace idens::derange {

/// Dense Cayley graphs are built up to this many vertices.
inline constexpr std::size_t kDenseVertexLimit = 25000;

/// fixer[g] for every table index: g (restricted to PSL when which = PSL)
/// fixes at least one coset, by scanning the vertices.
std::vector<bool> fixer_mask(const atlas::CosetAction& action, atlas::Which which,
                             unsigned workers = 1);

/// Sorted element indices of the fixers, identity included.
std::vector<std::uint32_t> fixer_set(const atlas::CosetAction& action, atlas::Which which,
                                     unsigned workers = 1);

/// Graph on `vertices` (element indices) with x ~ y iff y x^{-1} is a fixer.
/// Labels are the element indices.
BitGraph fixer_graph(const atlas::CosetAction& action, const std::vector<bool>& fixer,
                     std::span<const std::uint32_t> vertices, unsigned workers = 1);

/// Cayley graph on the group (or its PSL part) with connection set the
/// derangements. Throws TooLarge above kDenseVertexLimit vertices.
BitGraph derangement_graph(const atlas::CosetAction& action, atlas::Which which,
                           unsigned workers = 1);

/// Complement of the PSL derangement graph induced on the order-3 elements.
/// Throws WrongCharacteristic for p = 3 and WrongCongruence unless q = 2 mod 3.
BitGraph gamma_on_c3(const atlas::CosetAction& action, unsigned workers = 1);

/// Vertex of `graph` whose label is `element`.
std::optional<std::uint32_t> vertex_with_label(const BitGraph& graph, std::uint32_t element);

struct Neighbourhood {
    std::uint32_t h = 0;       // vertex of h in gamma
    std::uint32_t h_inv = 0;   // vertex of h^{-1}
    std::vector<std::uint32_t> delta;
    std::vector<std::uint32_t> n;  // delta without h^{-1}
};

/// Throws InvariantViolation unless |N| is 0 or q + 1.
Neighbourhood delta_and_N(const atlas::GroupTable& table, const BitGraph& gamma, std::uint32_t h);

enum class SubconstituentKind { Empty, PerfectMatchingOnly, CayleyOnN };
enum class TildeShape { EmptyGraph, Matching, CycleUnion };

std::string to_string(SubconstituentKind kind);
std::string to_string(TildeShape shape);

struct SubconstituentReport {
    SubconstituentKind kind = SubconstituentKind::Empty;
    std::size_t n_size = 0;
    TildeShape shape = TildeShape::EmptyGraph;
    std::vector<std::size_t> cycle_lengths;  // sorted, for CycleUnion
    std::size_t tilde_degree = 0;
    std::size_t tilde_edges = 0;
    std::size_t omega_gamma = 0;
};

/// Classifies the subgraph induced on N by its common degree. Throws
/// UnexpectedDegree for a non-uniform degree or a degree above 2, and
/// InvariantViolation for a cycle shorter than 4 or |N| outside {0, q + 1}.
SubconstituentReport classify_gamma_tilde(const BitGraph& gamma, const Neighbourhood& nb,
                                          std::uint32_t q, unsigned workers = 1);

/// U is adjacent neither to h U h^{-1} nor to h^2 U h^{-2}. Arguments are
/// element indices; U must be a vertex of gamma.
bool check_h_conjugate_nonadjacency(const atlas::GroupTable& table, const BitGraph& gamma,
                                    std::uint32_t h, std::uint32_t u);

/// tau(h U h^{-1} U^{-1}) == 0.
bool commutator_trace_zero(const atlas::GroupTable& table, std::uint32_t h, std::uint32_t u);

struct AlphaSolutions {
    std::vector<gfq::Code> plus;   // 2(a + 1) = a^2 + a + 1
    std::vector<gfq::Code> minus;  // 2(a + 1) = -(a^2 + a + 1)
};

/// Exhaustive over the field. Throws WrongCharacteristic for p = 3,
/// WrongCongruence unless q = 2 mod 3, and InvariantViolation if the minus
/// equation has a solution or the plus equation more than two.
AlphaSolutions alpha_adjacency_solutions(const gfq::Field& field);

/// The centralizer of h acts on N by conjugation, transitively and with
/// trivial point stabilizers.
bool centralizer_regular_on_N(const atlas::GroupTable& table, const BitGraph& gamma,
                              const Neighbourhood& nb);

}  // namespace idens::derange
