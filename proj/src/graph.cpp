#include "idens/graph.hpp"

#include "idens/error.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

namespace idens {

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
    labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels_[i] = static_cast<std::uint32_t>(i);
}

void BitGraph::add_edge(std::uint32_t u, std::uint32_t v) {
    require(u < n_ && v < n_ && u != v, Errc::InvalidArgument, "bad edge");
    set_arc(u, v);
    set_arc(v, u);
}

std::size_t BitGraph::degree(std::uint32_t u) const {
    std::size_t d = 0;
    for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<std::uint32_t> BitGraph::neighbors(std::uint32_t u) const {
    std::vector<std::uint32_t> out;
    const auto r = row(u);
    for (std::size_t w = 0; w < words_; ++w)
        for (std::uint64_t bits = r[w]; bits; bits &= bits - 1)
            out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
    return out;
}

std::vector<std::size_t> BitGraph::degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::uint32_t u = 0; u < n_; ++u) d[u] = degree(u);
    return d;
}

std::size_t BitGraph::edge_count() const {
    std::size_t total = 0;
    for (std::uint32_t u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> BitGraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t u = 0; u < n_; ++u)
        for (auto v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool BitGraph::is_symmetric() const {
    for (std::uint32_t u = 0; u < n_; ++u)
        for (auto v : neighbors(u))
            if (!adjacent(v, u)) return false;
    return true;
}

bool BitGraph::is_loop_free() const {
    for (std::uint32_t u = 0; u < n_; ++u)
        if (adjacent(u, u)) return false;
    return true;
}

bool BitGraph::is_clique(std::span<const std::uint32_t> vertices) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!adjacent(vertices[i], vertices[j])) return false;
    return true;
}

BitGraph BitGraph::induced(std::span<const std::uint32_t> vertices) const {
    BitGraph g(vertices.size());
    for (std::uint32_t i = 0; i < vertices.size(); ++i) {
        g.labels_[i] = labels_[vertices[i]];
        for (std::uint32_t j = 0; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) g.set_arc(i, j);
    }
    return g;
}

BitGraph BitGraph::complement() const {
    BitGraph g(n_);
    g.labels_ = labels_;
    for (std::uint32_t u = 0; u < n_; ++u)
        for (std::uint32_t v = 0; v < n_; ++v)
            if (u != v && !adjacent(u, v)) g.set_arc(u, v);
    return g;
}

void BitGraph::set_labels(std::vector<std::uint32_t> labels) {
    require(labels.size() == n_, Errc::InvalidArgument, "label count mismatch");
    labels_ = std::move(labels);
}

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& body) {
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        threads.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace idens
