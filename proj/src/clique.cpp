#include "idens/clique.hpp"

#include "idens/derange.hpp"
#include "idens/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>

namespace idens::clique {
namespace {

using Words = std::vector<std::uint64_t>;

bool any(const Words& w) {
    return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

void clear_bit(Words& w, std::uint32_t v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
void set_bit(Words& w, std::uint32_t v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }

std::uint32_t first_bit(const Words& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(w[i]));
    return ~std::uint32_t{0};
}

struct Shared {
    Shared(const BitGraph& g, std::uint64_t b) : graph(g), budget(b) {}

    const BitGraph& graph;
    std::uint64_t budget;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<std::size_t> best{0};
    std::mutex mutex;
    std::vector<std::uint32_t> witness;
};

// Sequential colouring of P in vertex order: order[i] gets colour[i], colours
// nondecreasing, and colour[i] bounds the clique inside order[0..i].
void colour(const BitGraph& g, const Words& p, std::vector<std::uint32_t>& order,
            std::vector<std::uint32_t>& colours) {
    order.clear();
    colours.clear();
    Words q = p, qc(p.size());
    for (std::uint32_t k = 1; any(q); ++k) {
        qc = q;
        while (any(qc)) {
            const std::uint32_t v = first_bit(qc);
            clear_bit(q, v);
            clear_bit(qc, v);
            const auto row = g.row(v);
            for (std::size_t i = 0; i < qc.size(); ++i) qc[i] &= ~row[i];
            order.push_back(v);
            colours.push_back(k);
        }
    }
}

class Worker {
public:
    // target == 0: maximise against shared.best. Otherwise stop at the first
    // clique of exactly `target` vertices.
    Worker(Shared& shared, std::size_t target) : s_(shared), target_(target) {}

    void run_root(std::uint32_t v, const Words& candidates, std::vector<std::uint32_t> clique) {
        clique.push_back(v);
        Words p = candidates;
        const auto row = s_.graph.row(v);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] &= row[i];
        clique_ = std::move(clique);
        expand(p);
        flush();
    }

    bool found() const { return found_; }
    const std::vector<std::uint32_t>& result() const { return result_; }
    void flush() {
        if (pending_ && s_.nodes.fetch_add(pending_) + pending_ > s_.budget) {
            s_.exhausted = true;
            s_.stop = true;
        }
        pending_ = 0;
    }

private:
    std::size_t threshold() const {
        return target_ ? target_ - 1 : s_.best.load(std::memory_order_relaxed);
    }

    void record() {
        if (target_) {
            if (clique_.size() == target_ && !found_) {
                found_ = true;
                result_ = clique_;
                stop_local_ = true;
            }
            return;
        }
        std::lock_guard lock(s_.mutex);
        if (clique_.size() > s_.best) {
            s_.best = clique_.size();
            s_.witness = clique_;
        }
    }

    void expand(const Words& p) {
        if (++pending_ >= 4096) flush();
        if (s_.stop || stop_local_) return;
        if (!any(p)) {
            if (clique_.size() > threshold()) record();
            return;
        }
        std::vector<std::uint32_t> order, colours;
        colour(s_.graph, p, order, colours);
        Words remaining = p, next(p.size());
        for (std::size_t i = order.size(); i-- > 0;) {
            if (s_.stop || stop_local_) return;
            if (clique_.size() + colours[i] <= threshold()) return;
            const std::uint32_t v = order[i];
            const auto row = s_.graph.row(v);
            for (std::size_t w = 0; w < next.size(); ++w) next[w] = remaining[w] & row[w];
            clique_.push_back(v);
            expand(next);
            clique_.pop_back();
            clear_bit(remaining, v);
        }
    }

    Shared& s_;
    std::size_t target_;
    std::vector<std::uint32_t> clique_;
    std::vector<std::uint32_t> result_;
    std::uint64_t pending_ = 0;
    bool found_ = false;
    bool stop_local_ = false;
};

}  // namespace

CliqueResult max_clique(const BitGraph& graph, const CliqueOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = graph.size();
    for (auto v : options.seed)
        require(v < n, Errc::InvalidArgument, "seed vertex out of range");
    require(graph.is_clique(options.seed), Errc::SeedNotClique, "seed is not a clique");
    for (auto v : options.incumbent)
        require(v < n, Errc::InvalidArgument, "incumbent vertex out of range");
    require(graph.is_clique(options.incumbent), Errc::SeedNotClique, "incumbent is not a clique");
    for (auto v : options.seed)
        require(std::find(options.incumbent.begin(), options.incumbent.end(), v) !=
                        options.incumbent.end() ||
                    options.incumbent.empty(),
                Errc::InvalidArgument, "incumbent must contain the seed");

    Words candidates(graph.words(), 0);
    for (std::uint32_t v = 0; v < n; ++v) set_bit(candidates, v);
    for (auto v : options.seed) {
        const auto row = graph.row(v);
        for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] &= row[i];
        if (v < n) clear_bit(candidates, v);
    }

    Shared shared(graph, options.budget);
    shared.best = options.seed.size();
    shared.witness = options.seed;
    if (options.incumbent.size() > options.seed.size()) {
        shared.best = options.incumbent.size();
        shared.witness = options.incumbent;
    }

    std::vector<std::uint32_t> order, colours;
    colour(graph, candidates, order, colours);

    auto root_candidates = [&](std::size_t i) {
        Words p(graph.words(), 0);
        for (std::size_t j = 0; j < i; ++j) set_bit(p, order[j]);
        return p;
    };

    // Parallel pass: root branches handed out highest colour first.
    std::atomic<std::size_t> next{0};
    const std::size_t tasks = order.size();
    auto phase_one = [&](std::size_t) {
        Worker worker(shared, 0);
        for (std::size_t t = next++; t < tasks && !shared.stop; t = next++) {
            const std::size_t i = tasks - 1 - t;
            if (options.seed.size() + colours[i] <= shared.best) continue;
            worker.run_root(order[i], root_candidates(i), options.seed);
        }
    };
    parallel_for(std::max(1U, options.workers), options.workers, phase_one);

    CliqueResult result;
    result.size = shared.best;
    result.witness = shared.witness;
    result.budget_exceeded = shared.exhausted;

    // Sequential pass for a witness that does not depend on thread timing.
    if (!result.budget_exceeded && result.size > options.seed.size()) {
        Worker worker(shared, result.size);
        for (std::size_t i = tasks; i-- > 0 && !worker.found() && !shared.stop;) {
            if (options.seed.size() + colours[i] < result.size) break;
            worker.run_root(order[i], root_candidates(i), options.seed);
        }
        if (worker.found()) result.witness = worker.result();
        result.budget_exceeded = shared.exhausted;
    }

    std::sort(result.witness.begin(), result.witness.end());
    result.nodes_explored = shared.nodes;
    result.elapsed = std::chrono::steady_clock::now() - start;
    require(result.witness.size() == result.size && graph.is_clique(result.witness),
            Errc::InvariantViolation, "clique witness failed verification");
    return result;
}

std::size_t brute_force_clique(const BitGraph& graph) {
    const std::size_t n = graph.size();
    require(n <= kBruteForceLimit, Errc::TooLarge, "brute force limited to 25 vertices");
    if (n == 0) return 0;
    std::vector<std::uint32_t> mask(n, 0);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
            if (graph.adjacent(u, v)) mask[u] |= 1U << v;
    const std::uint32_t subsets = 1U << n;
    std::vector<std::uint8_t> is_clique(subsets, 0);
    is_clique[0] = 1;
    std::size_t best = 0;
    for (std::uint32_t s = 1; s < subsets; ++s) {
        const auto low = static_cast<std::uint32_t>(std::countr_zero(s));
        const std::uint32_t rest = s & (s - 1);
        is_clique[s] = is_clique[rest] && (mask[low] & rest) == rest;
        if (is_clique[s]) best = std::max<std::size_t>(best, std::popcount(s));
    }
    return best;
}

IntersectingResult max_intersecting(const atlas::CosetAction& action, atlas::Which which,
                                    std::uint64_t budget, unsigned workers) {
    const atlas::GroupTable& t = action.group();
    IntersectingResult r;
    const std::vector<bool> fixer = derange::fixer_mask(action, which, workers);
    for (std::uint32_t g = 0; g < t.size(); ++g)
        if (fixer[g] && g != t.identity()) r.fixers.push_back(g);

    const BitGraph graph = derange::fixer_graph(action, fixer, r.fixers, workers);

    // Starting incumbent: the stabilizer of vertex 0 minus the identity,
    // extended greedily by index.
    CliqueOptions options;
    options.budget = budget;
    options.workers = workers;
    for (auto s : action.stabilizer()) {
        if (s == t.identity() || (which == atlas::Which::PSL && !t.in_psl(s))) continue;
        const auto it = std::lower_bound(r.fixers.begin(), r.fixers.end(), s);
        options.incumbent.push_back(static_cast<std::uint32_t>(it - r.fixers.begin()));
    }
    for (std::uint32_t v = 0; v < graph.size(); ++v) {
        if (std::find(options.incumbent.begin(), options.incumbent.end(), v) !=
            options.incumbent.end())
            continue;
        bool joins = true;
        for (auto u : options.incumbent) joins = joins && graph.adjacent(u, v);
        if (joins) options.incumbent.push_back(v);
    }

    r.clique = max_clique(graph, options);
    require(!r.clique.budget_exceeded, Errc::BudgetExceeded,
            "clique search stopped after " + std::to_string(r.clique.nodes_explored) +
                " nodes with alpha >= " + std::to_string(r.clique.size + 1));
    r.alpha = r.clique.size + 1;
    r.elements.push_back(t.identity());
    for (auto v : r.clique.witness) r.elements.push_back(r.fixers[v]);

    // Post-hoc check on the group itself: every pair agrees somewhere.
    for (std::size_t i = 0; i < r.elements.size(); ++i)
        for (std::size_t j = i + 1; j < r.elements.size(); ++j)
            require(fixer[t.mul(r.elements[j], t.inv(r.elements[i]))], Errc::InvariantViolation,
                    "intersecting witness contains a deranging pair");
    return r;
}

}  // namespace idens::clique
