#pragma once

// Enumerated PGL(2,q) / PSL(2,q), the coset action on an S3 subgroup
// H' = <h, nu> with nu outside PSL, and the structural subgroups used by the
// subconstituent analysis.

#include "idens/graph.hpp"
#include "idens/pgl2.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace idens::atlas {

using pgl2::ProjectiveElement;

enum class Which { PSL, PGL };

std::string to_string(Which which);

inline constexpr std::uint64_t kMaxGroupOrder = 130000;

/// Permutation tables are kept in memory when |G| * |V| is at most this many
/// entries; larger actions compute images on demand.
inline constexpr std::uint64_t kPermTableBudget = std::uint64_t{1} << 24;

class GroupTable {
public:
    GroupTable(std::shared_ptr<const gfq::Field> field, Which which);

    const pgl2::Pgl2& pgl() const noexcept { return pgl_; }
    const gfq::Field& field() const noexcept { return pgl_.field(); }
    std::uint32_t q() const noexcept { return pgl_.q(); }
    Which which() const noexcept { return which_; }
    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(elements_.size()); }

    const ProjectiveElement& element(std::uint32_t i) const { return elements_[i]; }
    const std::vector<ProjectiveElement>& elements() const noexcept { return elements_; }
    std::optional<std::uint32_t> find(const ProjectiveElement& g) const;
    /// Throws InvalidArgument when g is not in this group.
    std::uint32_t index_of(const ProjectiveElement& g) const;

    std::uint32_t identity() const noexcept { return identity_; }
    bool in_psl(std::uint32_t i) const { return psl_mask_[i]; }
    const std::vector<bool>& psl_mask() const noexcept { return psl_mask_; }
    std::uint32_t order(std::uint32_t i) const { return order_[i]; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return lookup(pgl_.mul(elements_[x], elements_[y]));
    }
    std::uint32_t inv(std::uint32_t x) const { return inverse_[x]; }
    /// g x g^{-1}
    std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return mul(mul(g, x), inv(g)); }

    /// Conjugacy class of the canonical h inside this group.
    const std::vector<std::uint32_t>& class_of_h() const noexcept { return class_of_h_; }

private:
    std::uint32_t lookup(const ProjectiveElement& g) const {
        return static_cast<std::uint32_t>(index_[pgl_.encode(g)]);
    }

    pgl2::Pgl2 pgl_;
    Which which_;
    std::vector<ProjectiveElement> elements_;
    std::vector<std::int32_t> index_;
    std::vector<bool> psl_mask_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> class_of_h_;
    std::uint32_t identity_ = 0;
};

/// Elements are listed in increasing encoding order, so index order and
/// encoding order agree. Throws TooLarge above max_order.
std::shared_ptr<const GroupTable> enumerate_group(std::shared_ptr<const gfq::Field> field,
                                                  Which which,
                                                  std::uint64_t max_order = kMaxGroupOrder);

std::uint32_t canonical_h(const GroupTable& table);

/// Minimum-index involution outside PSL with nu h nu^{-1} = h^{-1}; throws
/// NoSuchInvolution when none exists (q = 3^k with k even, or a PSL table).
std::uint32_t find_inverting_involution(const GroupTable& table, std::uint32_t h);

/// Mask over the table of all g s g^{-1} with s in `subset` and g ranging over
/// the table's elements (or only its PSL elements).
std::vector<bool> conjugacy_closure(const GroupTable& table, std::span<const std::uint32_t> subset,
                                    Which conjugators);

/// Left-multiplication action of PGL(2,q) on the cosets of H' = <h, nu>.
/// Vertex 0 is H' itself; the other cosets are numbered by their minimum-index
/// element, which is also their representative.
class CosetAction {
public:
    CosetAction(std::shared_ptr<const GroupTable> table, std::uint32_t h, std::uint32_t nu);

    const GroupTable& group() const noexcept { return *table_; }
    const std::shared_ptr<const GroupTable>& group_ptr() const noexcept { return table_; }
    std::uint32_t h() const noexcept { return h_; }
    std::uint32_t nu() const noexcept { return nu_; }
    /// Sorted element indices of H'.
    const std::array<std::uint32_t, 6>& stabilizer() const noexcept { return stabilizer_; }

    std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(reps_.size()); }
    std::uint32_t representative(std::uint32_t v) const { return reps_[v]; }
    /// The vertex g H'.
    std::uint32_t vertex_of(std::uint32_t g) const { return vertex_of_[g]; }
    std::uint32_t image(std::uint32_t g, std::uint32_t v) const {
        if (!perms_.empty()) return perms_[static_cast<std::size_t>(g) * reps_.size() + v];
        return vertex_of_[table_->mul(g, reps_[v])];
    }
    bool stores_permutations() const noexcept { return !perms_.empty(); }
    std::vector<std::uint32_t> permutation(std::uint32_t g) const;
    /// Whether g fixes at least one vertex, by scanning the vertices.
    bool fixes_some_vertex(std::uint32_t g) const;

    bool psl_transitive() const noexcept { return psl_transitive_; }

private:
    std::shared_ptr<const GroupTable> table_;
    std::uint32_t h_;
    std::uint32_t nu_;
    std::array<std::uint32_t, 6> stabilizer_{};
    std::vector<std::uint32_t> reps_;
    std::vector<std::uint32_t> vertex_of_;
    std::vector<std::uint32_t> perms_;
    bool psl_transitive_ = false;
};

/// Throws NotS3 unless <h, nu> is S3 with h of order 3, nu an involution
/// inverting h; NotCoreFree if it contains a nontrivial normal subgroup of G;
/// InvariantViolation if PSL is not transitive on the cosets.
CosetAction build_action(std::shared_ptr<const GroupTable> table, std::uint32_t h, std::uint32_t nu);

struct CentralizerReport {
    std::vector<std::uint32_t> elements;
    bool cyclic = false;
    std::optional<std::uint32_t> generator;
    /// Equal to {[[1,a],[-a,1+a]] : det != 0} together with [[0,1],[-1,1]].
    bool matches_closed_form = false;
    std::uint32_t expected_order = 0;  // q + 1

    bool ok() const { return cyclic && matches_closed_form && elements.size() == expected_order; }
};

/// Centralizer of h in the table's group. Throws WrongCharacteristic for p = 3.
CentralizerReport centralizer_of_h(const GroupTable& table, std::uint32_t h);

struct TransversalReport {
    std::vector<std::uint32_t> elements;  // {[[1,a],[0,b]] : b != 0}
    bool trivial_intersection = false;
    bool unique_factorization = false;

    bool ok() const { return trivial_intersection && unique_factorization; }
};

/// K against a given subgroup S (normally the centralizer of h): K meets S
/// trivially and every element of G is k s for exactly one pair.
TransversalReport transversal_K(const GroupTable& table, std::span<const std::uint32_t> subgroup);

enum class NormalizerShape { Dihedral, AffineType, Other };

std::string to_string(NormalizerShape shape);

struct NormalizerPrediction {
    std::string column;
    std::uint64_t order = 0;
    NormalizerShape shape = NormalizerShape::Other;
};

/// Row/column lookup in the normalizer tables for PSL(2,q) and PGL(2,q);
/// nullopt when the element's order selects no column.
std::optional<NormalizerPrediction> normalizer_table_entry(std::uint32_t q, std::uint32_t p,
                                                           Which which, std::uint32_t order,
                                                           bool in_psl);

struct NormalizerReport {
    std::uint32_t element = 0;
    std::uint32_t element_order = 0;
    std::vector<std::uint32_t> elements;
    NormalizerShape shape = NormalizerShape::Other;
    bool dihedral = false;
    /// The p-elements (order dividing p, identity included) number exactly the
    /// p-part of |N|, so they form a normal Sylow subgroup.
    bool normal_sylow_p = false;
    std::optional<NormalizerPrediction> predicted;

    bool matches() const;
};

/// Brute-force normalizer of <g> in the table's group. Throws InvalidArgument
/// for the identity.
NormalizerReport normalizer_of_cyclic(const GroupTable& table, std::uint32_t g);

struct S3ClassReport {
    std::size_t subgroup_count = 0;
    std::vector<std::size_t> class_sizes;
    std::size_t classes_inside_psl = 0;

    std::size_t class_count() const { return class_sizes.size(); }
};

/// All S3 subgroups <x, y> (o(x) = 3, o(y) = 2, y x y = x^{-1}) up to
/// conjugation in the table's group.
S3ClassReport s3_class_count(const GroupTable& table);

struct Suborbit {
    std::vector<std::uint32_t> vertices;
    bool symmetric = false;
};

/// Orbits of the stabilizer of v in the full group (or its PSL part), sorted by
/// smallest vertex.
std::vector<Suborbit> suborbits(const CosetAction& action, std::uint32_t v, Which which);

struct CubicGraph {
    BitGraph graph;
    Suborbit neighbourhood;
    bool arc_transitive = false;
    /// PSL acts regularly on the arcs.
    bool psl_arc_regular = false;
};

/// Orbital graph of the first symmetric size-3 suborbit of vertex 0, or
/// nullopt when none exists.
std::optional<CubicGraph> build_cubic_graph(const CosetAction& action);

}  // namespace idens::atlas
