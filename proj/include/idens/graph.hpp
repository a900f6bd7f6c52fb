#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace idens {

/// Simple undirected graph stored as one bitset row per vertex. Vertex labels
/// map back to whatever the vertices stand for (usually group element indices).
class BitGraph {
public:
    BitGraph() = default;
    explicit BitGraph(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }

    void add_edge(std::uint32_t u, std::uint32_t v);
    /// Sets only u's row. Rows can be filled by separate workers this way;
    /// call is_symmetric() afterwards.
    void set_arc(std::uint32_t u, std::uint32_t v) {
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
    bool adjacent(std::uint32_t u, std::uint32_t v) const noexcept {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    std::span<const std::uint64_t> row(std::uint32_t u) const noexcept {
        return {bits_.data() + u * words_, words_};
    }

    std::size_t degree(std::uint32_t u) const;
    std::vector<std::uint32_t> neighbors(std::uint32_t u) const;
    std::vector<std::size_t> degrees() const;
    std::size_t edge_count() const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    bool is_symmetric() const;
    bool is_loop_free() const;
    bool is_clique(std::span<const std::uint32_t> vertices) const;

    /// Subgraph on the given vertices, in the given order; labels carried over.
    BitGraph induced(std::span<const std::uint32_t> vertices) const;
    BitGraph complement() const;

    const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::uint32_t> labels);

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> labels_;
};

/// Runs body(i) for i in [0, n) on up to `workers` threads, contiguous chunks.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

unsigned default_workers();

}  // namespace idens
