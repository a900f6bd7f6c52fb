#include "idens/clique.hpp"
#include "idens/error.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace idens;
using clique::CliqueOptions;
using clique::max_clique;

namespace {

BitGraph from_edges(std::size_t n, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
    BitGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

BitGraph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    BitGraph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Plain recursive enumeration over adjacency checks.
std::size_t oracle_clique(const BitGraph& g) {
    const auto n = static_cast<std::uint32_t>(g.size());
    std::vector<std::uint32_t> chosen;
    std::size_t best = 0;
    std::function<void(std::uint32_t)> go = [&](std::uint32_t from) {
        best = std::max(best, chosen.size());
        for (std::uint32_t v = from; v < n; ++v) {
            bool ok = true;
            for (auto u : chosen) ok = ok && g.adjacent(u, v);
            if (!ok) continue;
            chosen.push_back(v);
            go(v + 1);
            chosen.pop_back();
        }
    };
    go(0);
    return best;
}

BitGraph petersen() {
    BitGraph g(10);
    for (std::uint32_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

}  // namespace

TEST_CASE("small named graphs") {
    const auto k4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto c5 = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const auto k5e = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(max_clique(k4).size == 4);
    CHECK(max_clique(c5).size == 2);
    CHECK(max_clique(BitGraph(7)).size == 1);
    CHECK(max_clique(BitGraph(0)).size == 0);
    CHECK(max_clique(k5e).size == 4);
    CHECK(max_clique(petersen()).size == 2);
    CHECK(max_clique(petersen().complement()).size == 4);
    CHECK(max_clique(k4).witness == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("random graphs agree with brute force") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<std::size_t> size(1, 22);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_graph(size(rng), density(rng), rng);
        const auto r = max_clique(g);
        const auto expected = oracle_clique(g);
        CHECK(r.size == expected);
        CHECK(clique::brute_force_clique(g) == expected);
        CHECK(r.witness.size() == r.size);
        CHECK(g.is_clique(r.witness));
        CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
        CHECK_FALSE(r.budget_exceeded);
    }
}

TEST_CASE("larger random graphs against the oracle, several workers") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 10; ++i) {
        const auto g = random_graph(60, 0.5, rng);
        const auto expected = oracle_clique(g);
        for (unsigned w : {1U, 2U, 4U}) {
            CliqueOptions o;
            o.workers = w;
            CHECK(max_clique(g, o).size == expected);
        }
    }
}

TEST_CASE("witness does not depend on the worker count") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const auto g = random_graph(80, 0.6, rng);
        CliqueOptions one, many;
        many.workers = 4;
        CHECK(max_clique(g, one).witness == max_clique(g, many).witness);
    }
}

TEST_CASE("seed and incumbent") {
    const auto c5 = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CliqueOptions o;
    o.seed = {2};
    const auto r = max_clique(c5, o);
    CHECK(r.size == 2);
    CHECK(std::find(r.witness.begin(), r.witness.end(), 2U) != r.witness.end());

    o.seed = {0, 2};
    try {
        max_clique(c5, o);
        FAIL("expected SeedNotClique");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SeedNotClique);
    }

    // Seeded maximum is the largest clique through the seed, not the global one.
    const auto g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    CliqueOptions s;
    s.seed = {3};
    CHECK(max_clique(g, s).size == 2);

    CliqueOptions inc;
    inc.incumbent = {0, 1};
    CHECK(max_clique(g, inc).size == 3);
    inc.incumbent = {0, 3};
    CHECK_THROWS_AS(max_clique(g, inc), Error);
}

TEST_CASE("node budget") {
    std::mt19937_64 rng(9);
    const auto g = random_graph(120, 0.7, rng);
    CliqueOptions o;
    o.budget = 10;
    const auto r = max_clique(g, o);
    CHECK(r.budget_exceeded);
    CHECK(g.is_clique(r.witness));
    CHECK(r.size == r.witness.size());
}

TEST_CASE("brute force refuses large graphs") {
    try {
        clique::brute_force_clique(BitGraph(26));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}
