#include "idens/derange.hpp"

#include "idens/clique.hpp"
#include "idens/error.hpp"

#include <algorithm>
#include <set>

namespace idens::derange {

using atlas::Which;

std::string to_string(SubconstituentKind kind) {
    switch (kind) {
        case SubconstituentKind::Empty: return "Empty";
        case SubconstituentKind::PerfectMatchingOnly: return "PerfectMatchingOnly";
        case SubconstituentKind::CayleyOnN: return "CayleyOnN";
    }
    return "Empty";
}

std::string to_string(TildeShape shape) {
    switch (shape) {
        case TildeShape::EmptyGraph: return "EmptyGraph";
        case TildeShape::Matching: return "Matching";
        case TildeShape::CycleUnion: return "CycleUnion";
    }
    return "EmptyGraph";
}

std::vector<bool> fixer_mask(const atlas::CosetAction& action, Which which, unsigned workers) {
    const atlas::GroupTable& t = action.group();
    std::vector<char> flag(t.size(), 0);
    parallel_for(t.size(), workers, [&](std::size_t g) {
        const auto i = static_cast<std::uint32_t>(g);
        if (which == Which::PSL && !t.in_psl(i)) return;
        flag[g] = action.fixes_some_vertex(i);
    });
    return {flag.begin(), flag.end()};
}

std::vector<std::uint32_t> fixer_set(const atlas::CosetAction& action, Which which,
                                     unsigned workers) {
    const auto mask = fixer_mask(action, which, workers);
    std::vector<std::uint32_t> out;
    for (std::uint32_t g = 0; g < mask.size(); ++g)
        if (mask[g]) out.push_back(g);
    return out;
}

BitGraph fixer_graph(const atlas::CosetAction& action, const std::vector<bool>& fixer,
                     std::span<const std::uint32_t> vertices, unsigned workers) {
    const atlas::GroupTable& t = action.group();
    BitGraph g(vertices.size());
    parallel_for(vertices.size(), workers, [&](std::size_t i) {
        const std::uint32_t x_inv = t.inv(vertices[i]);
        for (std::uint32_t j = 0; j < vertices.size(); ++j)
            if (j != i && fixer[t.mul(vertices[j], x_inv)]) g.set_arc(static_cast<std::uint32_t>(i), j);
    });
    g.set_labels({vertices.begin(), vertices.end()});
    require(g.is_symmetric(), Errc::InvariantViolation, "fixer graph is not symmetric");
    return g;
}

BitGraph derangement_graph(const atlas::CosetAction& action, Which which, unsigned workers) {
    const atlas::GroupTable& t = action.group();
    const auto fixer = fixer_mask(action, which, workers);
    std::vector<std::uint32_t> elements, derangements;
    for (std::uint32_t g = 0; g < t.size(); ++g) {
        if (which == Which::PSL && !t.in_psl(g)) continue;
        elements.push_back(g);
        if (!fixer[g]) derangements.push_back(g);
    }
    require(elements.size() <= kDenseVertexLimit, Errc::TooLarge,
            "derangement graph on " + std::to_string(elements.size()) +
                " vertices exceeds the dense limit");

    std::vector<std::int64_t> position(t.size(), -1);
    for (std::uint32_t i = 0; i < elements.size(); ++i) position[elements[i]] = i;
    BitGraph g(elements.size());
    // x ~ y iff y x^{-1} is a derangement, i.e. y = d x.
    parallel_for(elements.size(), workers, [&](std::size_t i) {
        for (auto d : derangements)
            g.set_arc(static_cast<std::uint32_t>(i),
                      static_cast<std::uint32_t>(position[t.mul(d, elements[i])]));
    });
    g.set_labels(std::move(elements));
    require(g.is_symmetric() && g.is_loop_free(), Errc::InvariantViolation,
            "derangement graph is not a simple graph");
    return g;
}

BitGraph gamma_on_c3(const atlas::CosetAction& action, unsigned workers) {
    const atlas::GroupTable& t = action.group();
    require(t.field().p() != 3, Errc::WrongCharacteristic, "Gamma needs p != 3");
    require(t.q() % 3 == 2, Errc::WrongCongruence, "Gamma needs q = 2 mod 3");
    std::vector<std::uint32_t> c3;
    for (std::uint32_t g = 0; g < t.size(); ++g)
        if (t.order(g) == 3) c3.push_back(g);
    const auto fixer = fixer_mask(action, Which::PSL, workers);
    BitGraph gamma = fixer_graph(action, fixer, c3, workers);
    // Cross-check against the order-3 description of the edges.
    for (std::uint32_t i = 0; i < c3.size(); ++i)
        for (std::uint32_t j = 0; j < c3.size(); ++j)
            if (i != j)
                require(gamma.adjacent(i, j) == (t.order(t.mul(c3[j], t.inv(c3[i]))) == 3),
                        Errc::InvariantViolation, "Gamma edge disagrees with the order-3 rule");
    return gamma;
}

std::optional<std::uint32_t> vertex_with_label(const BitGraph& graph, std::uint32_t element) {
    const auto& labels = graph.labels();
    const auto it = std::lower_bound(labels.begin(), labels.end(), element);
    if (it == labels.end() || *it != element) return std::nullopt;
    return static_cast<std::uint32_t>(it - labels.begin());
}

Neighbourhood delta_and_N(const atlas::GroupTable& table, const BitGraph& gamma, std::uint32_t h) {
    Neighbourhood nb;
    const auto hv = vertex_with_label(gamma, h);
    const auto hi = vertex_with_label(gamma, table.inv(h));
    require(hv && hi, Errc::InvalidArgument, "h is not a vertex of Gamma");
    nb.h = *hv;
    nb.h_inv = *hi;
    nb.delta = gamma.neighbors(nb.h);
    for (auto v : nb.delta)
        if (v != nb.h_inv) nb.n.push_back(v);
    require(nb.n.empty() || nb.n.size() == table.q() + 1, Errc::InvariantViolation,
            "|N| = " + std::to_string(nb.n.size()) + " is neither 0 nor q+1");
    return nb;
}

SubconstituentReport classify_gamma_tilde(const BitGraph& gamma, const Neighbourhood& nb,
                                          std::uint32_t q, unsigned workers) {
    SubconstituentReport r;
    r.n_size = nb.n.size();
    r.kind = nb.delta.empty() ? SubconstituentKind::Empty
             : nb.n.empty()   ? SubconstituentKind::PerfectMatchingOnly
                              : SubconstituentKind::CayleyOnN;
    require(r.kind != SubconstituentKind::CayleyOnN || r.n_size == q + 1,
            Errc::InvariantViolation, "N is nonempty but |N| != q+1");

    const BitGraph tilde = gamma.induced(nb.n);
    const auto degrees = tilde.degrees();
    if (!degrees.empty()) {
        r.tilde_degree = degrees.front();
        for (auto d : degrees)
            require(d == r.tilde_degree, Errc::UnexpectedDegree,
                    "Gamma-tilde is not regular");
    }
    r.tilde_edges = tilde.edge_count();
    switch (r.tilde_degree) {
        case 0: r.shape = TildeShape::EmptyGraph; break;
        case 1: r.shape = TildeShape::Matching; break;
        case 2: {
            r.shape = TildeShape::CycleUnion;
            std::vector<bool> seen(tilde.size(), false);
            for (std::uint32_t s = 0; s < tilde.size(); ++s) {
                if (seen[s]) continue;
                std::size_t length = 0;
                for (std::uint32_t prev = s, cur = s;;) {
                    seen[cur] = true;
                    ++length;
                    const auto nbrs = tilde.neighbors(cur);
                    const std::uint32_t nxt = nbrs[0] != prev || cur == s ? nbrs[0] : nbrs[1];
                    prev = cur;
                    cur = nxt;
                    if (cur == s) break;
                }
                require(length >= 4, Errc::InvariantViolation,
                        "Gamma-tilde has a cycle of length " + std::to_string(length));
                r.cycle_lengths.push_back(length);
            }
            std::sort(r.cycle_lengths.begin(), r.cycle_lengths.end());
            break;
        }
        default:
            fail(Errc::UnexpectedDegree,
                 "Gamma-tilde has degree " + std::to_string(r.tilde_degree));
    }

    clique::CliqueOptions options;
    options.workers = workers;
    r.omega_gamma = clique::max_clique(gamma, options).size;
    return r;
}

bool check_h_conjugate_nonadjacency(const atlas::GroupTable& table, const BitGraph& gamma,
                                    std::uint32_t h, std::uint32_t u) {
    const auto uv = vertex_with_label(gamma, u);
    require(uv.has_value(), Errc::InvalidArgument, "U is not a vertex of Gamma");
    const std::uint32_t h2 = table.mul(h, h);
    for (auto x : {table.conj(h, u), table.conj(h2, u)}) {
        const auto xv = vertex_with_label(gamma, x);
        require(xv.has_value(), Errc::InvariantViolation, "conjugate of U left Gamma");
        if (gamma.adjacent(*uv, *xv)) return false;
    }
    return true;
}

bool commutator_trace_zero(const atlas::GroupTable& table, std::uint32_t h, std::uint32_t u) {
    const std::uint32_t c = table.mul(table.conj(h, u), table.inv(u));
    return table.pgl().tau(table.element(c)) == 0;
}

AlphaSolutions alpha_adjacency_solutions(const gfq::Field& f) {
    require(f.p() != 3, Errc::WrongCharacteristic, "needs p != 3");
    require(f.q() % 3 == 2, Errc::WrongCongruence, "needs q = 2 mod 3");
    AlphaSolutions s;
    for (gfq::Code a = 0; a < f.q(); ++a) {
        const gfq::Code lhs = f.mul(f.from_int(2), f.add(a, 1));
        const gfq::Code rhs = f.add(f.add(f.mul(a, a), a), 1);
        if (lhs == rhs) s.plus.push_back(a);
        if (lhs == f.neg(rhs)) s.minus.push_back(a);
    }
    require(s.minus.empty(), Errc::InvariantViolation, "the minus equation has a solution");
    require(s.plus.size() <= 2, Errc::InvariantViolation, "the plus equation has >2 solutions");
    return s;
}

bool centralizer_regular_on_N(const atlas::GroupTable& table, const BitGraph& gamma,
                              const Neighbourhood& nb) {
    const std::uint32_t h = gamma.labels()[nb.h];
    std::vector<std::uint32_t> centralizer;
    for (std::uint32_t g = 0; g < table.size(); ++g)
        if (table.mul(g, h) == table.mul(h, g)) centralizer.push_back(g);
    if (nb.n.empty() || centralizer.size() != nb.n.size()) return false;

    std::set<std::uint32_t> n_labels;
    for (auto v : nb.n) n_labels.insert(gamma.labels()[v]);
    const std::uint32_t base = gamma.labels()[nb.n.front()];
    std::set<std::uint32_t> orbit;
    for (auto c : centralizer) {
        const std::uint32_t image = table.conj(c, base);
        if (!n_labels.count(image)) return false;
        orbit.insert(image);
    }
    return orbit.size() == n_labels.size();
}

}  // namespace idens::derange
