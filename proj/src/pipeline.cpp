#include "idens/pipeline.hpp"

#include "idens/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace idens::pipeline {

using atlas::Which;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

ErrorInfo error_info(const Error& e) { return {std::string(to_string(e.code())), e.what()}; }

std::string group_name(Which which) { return which == Which::PSL ? "psl" : "pgl"; }

std::size_t stabilizer_order(Which which) { return which == Which::PSL ? 3 : 6; }

void add_check(std::vector<Check>& checks, std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

// Runs a check body and records a thrown Error as a failed row.
template <typename F>
void guarded(std::vector<Check>& checks, const std::string& name, F&& body) {
    try {
        body();
    } catch (const Error& e) {
        add_check(checks, name, false, e.what());
    }
}

bool gamma_applies(const Context& ctx) { return ctx.field->p() != 3 && ctx.q % 3 == 2; }

struct GammaData {
    BitGraph gamma;
    derange::Neighbourhood nb;
};

GammaData gamma_data(const Context& ctx, unsigned workers) {
    GammaData d{derange::gamma_on_c3(*ctx.action, workers), {}};
    d.nb = derange::delta_and_N(*ctx.table, d.gamma, ctx.h);
    return d;
}

}  // namespace

std::vector<Which> selected(GroupSelection groups) {
    switch (groups) {
        case GroupSelection::PSL: return {Which::PSL};
        case GroupSelection::PGL: return {Which::PGL};
        case GroupSelection::Both: return {Which::PSL, Which::PGL};
    }
    return {};
}

std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = std::max(lo, 3U); q <= hi; ++q)
        if (q % 2 == 1 && gfq::prime_power(q)) out.push_back(q);
    return out;
}

void validate(const RunConfig& config) {
    require(!config.q_list.empty(), Errc::InvalidArgument, "no q given");
    for (auto q : config.q_list) {
        require(q % 2 == 1 && gfq::prime_power(q).has_value(), Errc::InvalidArgument,
                "q = " + std::to_string(q) + " is not an odd prime power");
        const std::uint64_t order = std::uint64_t{q - 1} * q * (q + 1);
        require(order <= atlas::kMaxGroupOrder, Errc::InvalidArgument,
                "q = " + std::to_string(q) + " exceeds the group enumeration bound");
    }
    require(config.workers >= 1, Errc::InvalidArgument, "workers must be at least 1");
}

Context make_context(std::uint32_t q) {
    const auto pk = gfq::prime_power(q);
    require(pk.has_value(), Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
    Context ctx;
    ctx.q = q;
    ctx.field = gfq::Field::create(pk->first, pk->second);
    ctx.table = atlas::enumerate_group(ctx.field, Which::PGL);
    ctx.h = atlas::canonical_h(*ctx.table);
    ctx.nu = atlas::find_inverting_involution(*ctx.table, ctx.h);
    ctx.action.emplace(atlas::build_action(ctx.table, ctx.h, ctx.nu));
    return ctx;
}

bool DensityReport::ok() const {
    if (error) return false;
    for (const auto& g : groups)
        if (g.error || !g.matches) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

DensityReport run_density(std::uint32_t q, const RunConfig& config) {
    const auto start = Clock::now();
    DensityReport report;
    report.q = q;
    try {
        report.weak_predicted = conics::weak_density_array(q).weak_array;
        const Context ctx = make_context(q);
        report.order_pgl = ctx.table->size();
        report.order_psl = report.order_pgl / 2;
        report.degree = ctx.action->degree();

        for (Which which : selected(config.groups)) {
            const auto t0 = Clock::now();
            GroupResult g;
            g.group = which;
            g.stabilizer_order = stabilizer_order(which);
            try {
                g.predicted = conics::predicted_density(q, which);
                const auto r = clique::max_intersecting(*ctx.action, which, config.budget,
                                                        config.workers);
                g.alpha = r.alpha;
                g.rho = Rational(static_cast<std::int64_t>(r.alpha),
                                 static_cast<std::int64_t>(g.stabilizer_order));
                g.matches = g.rho == g.predicted->rho;
                g.witness = r.elements;
                for (auto e : r.elements)
                    g.witness_matrices.push_back(ctx.table->pgl().serialize(ctx.table->element(e)));
                g.nodes = r.clique.nodes_explored;
                add_check(report.checks, "alpha>=stabilizer:" + group_name(which),
                          g.alpha >= g.stabilizer_order);
            } catch (const Error& e) {
                g.error = error_info(e);
            }
            g.seconds = seconds_since(t0);
            report.groups.push_back(std::move(g));
        }

        std::vector<Rational> computed;
        for (const auto& g : report.groups)
            if (!g.error) computed.push_back(g.rho);
        std::sort(computed.begin(), computed.end());
        computed.erase(std::unique(computed.begin(), computed.end()), computed.end());
        report.weak_computed = computed;
        if (report.groups.size() == 2 && !report.groups[0].error && !report.groups[1].error)
            add_check(report.checks, "rho(PGL)<=rho(PSL)", report.groups[1].rho <= report.groups[0].rho,
                      report.groups[1].rho.str() + " vs " + report.groups[0].rho.str());

        if (gamma_applies(ctx)) {
            guarded(report.checks, "subconstituent", [&] {
                const GammaData d = gamma_data(ctx, config.workers);
                report.subconstituent =
                    derange::classify_gamma_tilde(d.gamma, d.nb, q, config.workers);
                for (const auto& g : report.groups)
                    if (g.group == Which::PSL && !g.error)
                        add_check(report.checks, "alpha(PSL)=1+omega(Gamma)",
                                  g.alpha == 1 + report.subconstituent->omega_gamma);
            });
        }
    } catch (const Error& e) {
        report.error = error_info(e);
    }
    report.seconds = seconds_since(start);
    return report;
}

namespace {

void structure_checks(const Context& ctx, const RunConfig& config, std::vector<Check>& checks) {
    const atlas::GroupTable& t = *ctx.table;
    const std::uint32_t q = ctx.q;
    const std::uint32_t p = ctx.field->p();

    add_check(checks, "action", ctx.action->psl_transitive(),
              "core-free S3, PSL transitive on " + std::to_string(ctx.action->degree()) + " cosets");

    guarded(checks, "s3-classes", [&] {
        const auto s3 = atlas::s3_class_count(t);
        const std::size_t expected = p == 3 ? 1 : 2;
        const std::size_t inside = p == 3 ? (ctx.field->k() % 2 == 0 ? 1 : 0) : 1;
        add_check(checks, "s3-classes=" + std::to_string(expected), s3.class_count() == expected,
                  std::to_string(s3.class_count()) + " classes of " +
                      std::to_string(s3.subgroup_count) + " subgroups");
        add_check(checks, "s3-classes-in-psl=" + std::to_string(inside),
                  s3.classes_inside_psl == inside, std::to_string(s3.classes_inside_psl));
    });

    if (p != 3) {
        guarded(checks, "centralizer", [&] {
            const auto c = atlas::centralizer_of_h(t, ctx.h);
            add_check(checks, "centralizer", c.ok(),
                      "order " + std::to_string(c.elements.size()) + " (expected " +
                          std::to_string(c.expected_order) + "), cyclic " +
                          (c.cyclic ? "yes" : "no") + ", closed form " +
                          (c.matches_closed_form ? "yes" : "no"));
            if (config.level == Level::Full) {
                const auto k = atlas::transversal_K(t, c.elements);
                add_check(checks, "transversal", k.ok(),
                          std::string("trivial intersection ") +
                              (k.trivial_intersection ? "yes" : "no") + ", unique factorization " +
                              (k.unique_factorization ? "yes" : "no"));
            }
        });
    }

    guarded(checks, "normalizers", [&] {
        const auto psl = atlas::enumerate_group(ctx.field, Which::PSL);
        for (const atlas::GroupTable* table : {psl.get(), &t}) {
            std::set<std::string> sampled;
            for (std::uint32_t g = 0; g < table->size(); ++g) {
                if (g == table->identity()) continue;
                const auto entry = atlas::normalizer_table_entry(q, p, table->which(),
                                                                 table->order(g), table->in_psl(g));
                if (!entry || !sampled.insert(entry->column).second) continue;
                const auto n = atlas::normalizer_of_cyclic(*table, g);
                add_check(checks, "normalizer:" + atlas::to_string(table->which()) + ":" + entry->column,
                          n.matches(),
                          "element order " + std::to_string(n.element_order) + ", |N| " +
                              std::to_string(n.elements.size()) + " (expected " +
                              std::to_string(entry->order) + " " + atlas::to_string(entry->shape) +
                              "), measured " + atlas::to_string(n.shape));
            }
        }
    });

    guarded(checks, "cubic-graph", [&] {
        const auto x = atlas::build_cubic_graph(*ctx.action);
        add_check(checks, "cubic-graph", x && x->arc_transitive && x->psl_arc_regular,
                  x ? std::string("arc-transitive ") + (x->arc_transitive ? "yes" : "no") +
                          ", PSL arc-regular " + (x->psl_arc_regular ? "yes" : "no")
                    : "no symmetric suborbit of size 3");
    });
}

void gamma_checks(const Context& ctx, const RunConfig& config, std::vector<Check>& checks,
                  std::optional<derange::SubconstituentReport>& report) {
    const atlas::GroupTable& t = *ctx.table;
    const std::uint32_t q = ctx.q;
    const std::uint32_t p = ctx.field->p();
    const GammaData d = gamma_data(ctx, config.workers);
    const auto& nb = d.nb;
    const auto& labels = d.gamma.labels();

    const auto degrees = d.gamma.degrees();
    add_check(checks, "delta=1+|N|",
              std::all_of(degrees.begin(), degrees.end(),
                          [&](std::size_t x) { return x == nb.delta.size(); }) &&
                  nb.delta.size() == nb.n.size() + 1,
              "|Delta| " + std::to_string(nb.delta.size()) + ", |N| " + std::to_string(nb.n.size()));
    add_check(checks, "N-size", nb.n.empty() || nb.n.size() == q + 1, std::to_string(nb.n.size()));

    std::mt19937_64 rng(q);
    std::uniform_int_distribution<std::uint32_t> pick_g(0, t.size() - 1);
    std::uniform_int_distribution<std::uint32_t> pick_v(0, static_cast<std::uint32_t>(d.gamma.size() - 1));
    bool invariant = true;
    for (int i = 0; i < 500 && invariant; ++i) {
        const std::uint32_t g = pick_g(rng), x = pick_v(rng), y = pick_v(rng);
        const auto gx = derange::vertex_with_label(d.gamma, t.conj(g, labels[x]));
        const auto gy = derange::vertex_with_label(d.gamma, t.conj(g, labels[y]));
        invariant = gx && gy && d.gamma.adjacent(x, y) == d.gamma.adjacent(*gx, *gy);
    }
    add_check(checks, "gamma-conjugation-invariant", invariant, "500 random samples");

    guarded(checks, "gamma-tilde-cycles>=4", [&] {
        report = derange::classify_gamma_tilde(d.gamma, nb, q, config.workers);
        add_check(checks, "gamma-tilde-cycles>=4", true, derange::to_string(report->shape));
    });

    guarded(checks, "alpha-solutions", [&] {
        const auto sols = derange::alpha_adjacency_solutions(*ctx.field);
        const int l = gfq::legendre(5, p);
        const std::size_t expected = p == 5 ? 1 : (l == 1 ? 2 : 0);
        add_check(checks, "alpha-trichotomy", sols.plus.size() == expected,
                  std::to_string(sols.plus.size()) + " solutions, expected " + std::to_string(expected));
        if (report)
            add_check(checks, "gamma-tilde-degree=alpha-solutions",
                      report->tilde_degree == sols.plus.size(),
                      "degree " + std::to_string(report->tilde_degree));
    });

    bool nonadjacent = true, trace_zero = true;
    for (auto v : nb.n) {
        nonadjacent = nonadjacent && derange::check_h_conjugate_nonadjacency(t, d.gamma, ctx.h, labels[v]);
        trace_zero = trace_zero && derange::commutator_trace_zero(t, ctx.h, labels[v]);
    }
    add_check(checks, "h-conjugate-nonadjacency", nonadjacent,
              "all " + std::to_string(nb.n.size()) + " U in N");
    add_check(checks, "commutator-trace-zero", trace_zero);
    add_check(checks, "centralizer-regular-on-N",
              nb.n.empty() || derange::centralizer_regular_on_N(t, d.gamma, nb));

    guarded(checks, "trace-equations", [&] {
        const auto& f = *ctx.field;
        const auto minus = conics::trace_equation_solutions(f, -1);
        const auto m = minus.front();
        add_check(checks, "trace-minus=h^-1",
                  t.index_of(conics::conjugate_of_h(t.pgl(), m.first, m.second)) == t.inv(ctx.h));
        const auto plus = conics::trace_equation_solutions(f, 1);
        add_check(checks, "trace-plus=|N|", plus.size() == nb.n.size(),
                  std::to_string(plus.size()) + " pairs");
        std::set<std::uint32_t> n_labels;
        for (auto v : nb.n) n_labels.insert(labels[v]);
        bool in_n = true;
        for (auto [a, b] : plus)
            in_n = in_n && n_labels.count(t.index_of(conics::conjugate_of_h(t.pgl(), a, b)));
        add_check(checks, "plus-pairs-in-N", in_n);
        const auto three = f.from_int(3);
        const auto zero_conic = conics::count_conic(f, three, 0);
        const auto gamma_conic = conics::count_conic(f, three, f.mul(three, conics::gamma_constant(f)));
        add_check(checks, "conic-counts", zero_conic == 1 && gamma_conic == q + 1,
                  std::to_string(zero_conic) + " and " + std::to_string(gamma_conic));
    });
}

void fixer_checks(const Context& ctx, const RunConfig& config, std::vector<Check>& checks) {
    const atlas::GroupTable& t = *ctx.table;
    const auto& stab = ctx.action->stabilizer();
    const std::uint32_t h2 = t.mul(ctx.h, ctx.h);
    const std::vector<std::uint32_t> cyclic = {t.identity(), ctx.h, h2};

    const auto psl_fixers = derange::fixer_mask(*ctx.action, Which::PSL, config.workers);
    const auto psl_closure = atlas::conjugacy_closure(t, cyclic, Which::PSL);
    add_check(checks, "fixers-psl=conjugates-of-<h>", psl_fixers == psl_closure);

    const auto pgl_fixers = derange::fixer_mask(*ctx.action, Which::PGL, config.workers);
    const auto pgl_closure = atlas::conjugacy_closure(t, stab, Which::PGL);
    add_check(checks, "fixers-pgl=conjugates-of-S3", pgl_fixers == pgl_closure);
}

}  // namespace

DensityReport run_verify(std::uint32_t q, const RunConfig& config) {
    const auto start = Clock::now();
    DensityReport report;
    report.q = q;
    try {
        const Context ctx = make_context(q);
        report.order_pgl = ctx.table->size();
        report.order_psl = report.order_pgl / 2;
        report.degree = ctx.action->degree();
        structure_checks(ctx, config, report.checks);
        if (gamma_applies(ctx)) gamma_checks(ctx, config, report.checks, report.subconstituent);
        if (config.level == Level::Full) fixer_checks(ctx, config, report.checks);
    } catch (const Error& e) {
        report.error = error_info(e);
    }
    report.seconds = seconds_since(start);
    return report;
}

DensityReport run_pgl_claims(std::uint32_t q, const RunConfig& config) {
    const auto start = Clock::now();
    DensityReport report;
    report.q = q;
    try {
        const auto pk = gfq::prime_power(q);
        require(pk.has_value(), Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
        const std::uint32_t p = pk->first;
        require(p != 3, Errc::UnsupportedCase, "the PGL claims assume p != 3");
        require(q % 3 == 2 || gfq::legendre(5, p) >= 0, Errc::UnsupportedCase,
                "the PGL claims need q = 2 mod 3 or p = 0, +-1 mod 5");

        const Context ctx = make_context(q);
        const atlas::GroupTable& t = *ctx.table;
        report.order_pgl = t.size();
        report.order_psl = t.size() / 2;
        report.degree = ctx.action->degree();

        GroupResult g;
        g.group = Which::PGL;
        g.stabilizer_order = 6;
        g.predicted = conics::predicted_density(q, Which::PGL);
        const auto r = clique::max_intersecting(*ctx.action, Which::PGL, config.budget, config.workers);
        g.alpha = r.alpha;
        g.rho = Rational(static_cast<std::int64_t>(r.alpha), 6);
        g.matches = g.rho == g.predicted->rho;
        g.witness = r.elements;
        for (auto e : r.elements) g.witness_matrices.push_back(t.pgl().serialize(t.element(e)));
        g.nodes = r.clique.nodes_explored;
        report.groups.push_back(g);
        add_check(report.checks, "alpha(PGL)=6", r.alpha == 6, std::to_string(r.alpha));
        add_check(report.checks, "alpha(PGL)<=8", r.alpha <= 8, std::to_string(r.alpha));

        // The PSL part of an intersecting set is bounded by alpha(PSL); the
        // bound of 4 is only meaningful when alpha(PSL) <= 4.
        const auto psl = clique::max_intersecting(*ctx.action, Which::PSL, config.budget, config.workers);
        if (psl.alpha <= 4) {
            const auto inside = static_cast<std::size_t>(
                std::count_if(r.elements.begin(), r.elements.end(),
                              [&](std::uint32_t e) { return t.in_psl(e); }));
            add_check(report.checks, "psl-part<=4", inside <= 4, std::to_string(inside));
        }

        // Translate so that 1 and some x in PSL lie in F; then F minus PSL is
        // a clique of non-PSL fixers all joined to x.
        const auto fixer = derange::fixer_mask(*ctx.action, Which::PGL, config.workers);
        std::vector<std::uint32_t> outside;
        for (std::uint32_t e = 0; e < t.size(); ++e)
            if (fixer[e] && !t.in_psl(e)) outside.push_back(e);
        std::size_t worst = 0;
        std::uint32_t worst_x = t.identity();
        for (std::uint32_t x = 0; x < t.size(); ++x) {
            if (x == t.identity() || !t.in_psl(x) || !fixer[x]) continue;
            const std::uint32_t x_inv = t.inv(x);
            std::vector<std::uint32_t> joined;
            for (auto y : outside)
                if (fixer[t.mul(y, x_inv)]) joined.push_back(y);
            const BitGraph sub = derange::fixer_graph(*ctx.action, fixer, joined, 1);
            clique::CliqueOptions options;
            options.budget = config.budget;
            const auto c = clique::max_clique(sub, options);
            require(!c.budget_exceeded, Errc::BudgetExceeded, "claim search ran out of budget");
            if (c.size > worst) {
                worst = c.size;
                worst_x = x;
            }
        }
        add_check(report.checks, "no-4-outside-with-2-inside", worst <= 3,
                  "largest outside part " + std::to_string(worst) + " (with x = " +
                      t.pgl().serialize(t.element(worst_x)) + ")");
    } catch (const Error& e) {
        report.error = error_info(e);
    }
    report.seconds = seconds_since(start);
    return report;
}

std::string to_dot(const BitGraph& graph, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::uint32_t v = 0; v < graph.size(); ++v)
        out << "  " << v << " [label=\"" << graph.labels()[v] << "\"];\n";
    for (auto [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_edge_list(const BitGraph& graph) {
    std::ostringstream out;
    for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<std::filesystem::path> run_export(std::uint32_t q, const RunConfig& config) {
    const Context ctx = make_context(q);
    const atlas::GroupTable& t = *ctx.table;
    std::filesystem::create_directories(config.out_dir);
    std::vector<std::filesystem::path> written;
    const std::string suffix = "_q" + std::to_string(q);

    auto write = [&](const std::string& file, const std::string& text) {
        const auto path = config.out_dir / file;
        std::ofstream out(path, std::ios::binary);
        require(static_cast<bool>(out), Errc::InvalidArgument, "cannot write " + path.string());
        out << text;
        written.push_back(path);
    };
    auto write_graph = [&](const std::string& name, const BitGraph& g) {
        require(g.size() <= derange::kDenseVertexLimit, Errc::TooLarge, name + " is too large to export");
        if (config.export_dot) write(name + suffix + ".dot", to_dot(g, name));
        if (config.export_edges) write(name + suffix + ".edges", to_edge_list(g));
    };

    if (gamma_applies(ctx)) {
        const GammaData d = gamma_data(ctx, config.workers);
        write_graph("gamma", d.gamma);
        write_graph("gamma_tilde", d.gamma.induced(d.nb.n));
    }
    if (const auto x = atlas::build_cubic_graph(*ctx.action)) write_graph("cubic", x->graph);

    if (config.export_witness) {
        for (Which which : selected(config.groups)) {
            const auto r = clique::max_intersecting(*ctx.action, which, config.budget, config.workers);
            std::ostringstream out;
            for (auto e : r.elements) out << e << ' ' << t.pgl().serialize(t.element(e)) << '\n';
            write("intersecting_" + group_name(which) + suffix + ".witness", out.str());
        }
    }
    return written;
}

namespace {

nlohmann::ordered_json error_json(const std::optional<ErrorInfo>& e) {
    if (!e) return nullptr;
    return {{"code", e->code}, {"message", e->message}};
}

nlohmann::ordered_json rationals_json(const std::vector<Rational>& values) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : values) out.push_back(r.str());
    return out;
}

}  // namespace

std::string report_json(const std::string& command, const RunConfig& config,
                        const std::vector<DensityReport>& reports) {
    using nlohmann::ordered_json;
    ordered_json root;
    root["command"] = command;
    ordered_json cfg;
    cfg["q"] = config.q_list;
    cfg["group"] = config.groups == GroupSelection::PSL   ? "psl"
                   : config.groups == GroupSelection::PGL ? "pgl"
                                                          : "both";
    cfg["budget"] = config.budget;
    cfg["workers"] = config.workers;
    cfg["level"] = config.level == Level::Full ? "full" : "fast";
    root["config"] = cfg;

    bool all_ok = true;
    auto results = ordered_json::array();
    for (const auto& r : reports) {
        all_ok = all_ok && r.ok();
        ordered_json j;
        j["q"] = r.q;
        j["ok"] = r.ok();
        j["order_psl"] = r.order_psl;
        j["order_pgl"] = r.order_pgl;
        j["degree"] = r.degree;
        auto groups = ordered_json::array();
        for (const auto& g : r.groups) {
            ordered_json gj;
            gj["group"] = group_name(g.group);
            gj["alpha"] = g.alpha;
            gj["stabilizer_order"] = g.stabilizer_order;
            gj["rho"] = g.error ? ordered_json(nullptr) : ordered_json(g.rho.str());
            gj["predicted_rho"] = g.predicted ? ordered_json(g.predicted->rho.str()) : ordered_json(nullptr);
            gj["source"] = g.predicted ? ordered_json(g.predicted->source) : ordered_json(nullptr);
            gj["matches"] = g.matches;
            gj["witness"] = g.witness_matrices;
            gj["nodes"] = g.nodes;
            gj["seconds"] = g.seconds;
            gj["error"] = error_json(g.error);
            groups.push_back(gj);
        }
        j["groups"] = groups;
        j["weak_array_predicted"] = rationals_json(r.weak_predicted);
        j["weak_array_computed"] = rationals_json(r.weak_computed);
        if (r.subconstituent) {
            const auto& s = *r.subconstituent;
            j["subconstituent"] = {{"kind", derange::to_string(s.kind)},
                                   {"N_size", s.n_size},
                                   {"shape", derange::to_string(s.shape)},
                                   {"cycle_lengths", s.cycle_lengths},
                                   {"degree", s.tilde_degree},
                                   {"edges", s.tilde_edges},
                                   {"omega_gamma", s.omega_gamma}};
        } else {
            j["subconstituent"] = nullptr;
        }
        auto checks = ordered_json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        j["checks"] = checks;
        j["seconds"] = r.seconds;
        j["error"] = error_json(r.error);
        results.push_back(j);
    }
    root["results"] = results;
    root["ok"] = all_ok;
    return root.dump(2) + "\n";
}

std::string summary_csv(const RunConfig& config, const std::vector<DensityReport>& reports) {
    std::ostringstream out;
    out << "q,group,alpha,stabilizer_order,rho,predicted_rho,matches,status\n";
    for (const auto& r : reports) {
        for (Which which : selected(config.groups)) {
            const auto it = std::find_if(r.groups.begin(), r.groups.end(),
                                         [&](const GroupResult& g) { return g.group == which; });
            out << r.q << ',' << group_name(which) << ',';
            if (it == r.groups.end() || it->error) {
                const auto& e = it == r.groups.end() ? r.error : it->error;
                out << ",,,,false," << (e ? e->code : std::string("error")) << '\n';
                continue;
            }
            out << it->alpha << ',' << it->stabilizer_order << ',' << it->rho.str() << ','
                << (it->predicted ? it->predicted->rho.str() : "") << ','
                << (it->matches ? "true" : "false") << ',' << (it->matches ? "ok" : "mismatch")
                << '\n';
        }
    }
    return out.str();
}

}  // namespace idens::pipeline
