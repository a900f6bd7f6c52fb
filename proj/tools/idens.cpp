// Command line front end: density, verify, pgl-claims, export, table.

#include "idens/error.hpp"
#include "idens/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

namespace {

using namespace idens;
using pipeline::DensityReport;
using pipeline::RunConfig;

struct Options {
    std::vector<std::uint32_t> q;
    std::string q_range;
    std::string group = "both";
    std::uint64_t budget = clique::kDefaultBudget;
    unsigned workers = default_workers();
    bool deterministic = false;
    std::string out;
    std::string level = "fast";
    bool no_dot = false;
    bool no_edges = false;
    bool no_witness = false;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--q", o.q, "Field orders (odd prime powers)");
    cmd->add_option("--q-range", o.q_range, "Inclusive range LO:HI of odd prime powers");
    cmd->add_option("--group", o.group, "psl, pgl or both")
        ->check(CLI::IsMember({"psl", "pgl", "both"}));
    cmd->add_option("--budget", o.budget, "Clique search node budget");
    cmd->add_option("--workers", o.workers, "Solver threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--deterministic", o.deterministic, "Single worker");
    cmd->add_option("--out", o.out, "Output directory (default: $IDENS_OUT_DIR or .)");
    cmd->add_option("--level", o.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
}

RunConfig make_config(const Options& o) {
    RunConfig c;
    c.q_list = o.q;
    if (!o.q_range.empty()) {
        const auto colon = o.q_range.find(':');
        require(colon != std::string::npos, Errc::InvalidArgument, "--q-range expects LO:HI");
        const auto lo = static_cast<std::uint32_t>(std::stoul(o.q_range.substr(0, colon)));
        const auto hi = static_cast<std::uint32_t>(std::stoul(o.q_range.substr(colon + 1)));
        for (auto q : pipeline::odd_prime_powers(lo, hi)) c.q_list.push_back(q);
    }
    c.groups = o.group == "psl"   ? pipeline::GroupSelection::PSL
               : o.group == "pgl" ? pipeline::GroupSelection::PGL
                                  : pipeline::GroupSelection::Both;
    c.budget = o.budget;
    c.workers = o.deterministic ? 1 : o.workers;
    if (!o.out.empty()) c.out_dir = o.out;
    else if (const char* env = std::getenv("IDENS_OUT_DIR")) c.out_dir = env;
    c.level = o.level == "full" ? pipeline::Level::Full : pipeline::Level::Fast;
    c.export_dot = !o.no_dot;
    c.export_edges = !o.no_edges;
    c.export_witness = !o.no_witness;
    pipeline::validate(c);
    return c;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), Errc::InvalidArgument, "cannot write " + path.string());
    out << text;
}

void print_report(const DensityReport& r) {
    std::cout << "q=" << r.q;
    if (r.error) {
        std::cout << "  ERROR " << r.error->message << '\n';
        return;
    }
    std::cout << "  |PSL|=" << r.order_psl << " |PGL|=" << r.order_pgl << " |V|=" << r.degree << '\n';
    for (const auto& g : r.groups) {
        std::cout << "  " << atlas::to_string(g.group) << ": ";
        if (g.error) {
            std::cout << "ERROR " << g.error->message << '\n';
            continue;
        }
        std::cout << "alpha=" << g.alpha << " rho=" << g.rho.str();
        if (g.predicted) std::cout << " predicted=" << g.predicted->rho.str() << " [" << g.predicted->source << "]";
        std::cout << (g.matches ? "  ok" : "  MISMATCH") << '\n';
    }
    if (r.subconstituent)
        std::cout << "  Gamma-tilde: " << derange::to_string(r.subconstituent->shape) << " on "
                  << r.subconstituent->n_size << " vertices\n";
    for (const auto& c : r.checks)
        std::cout << "  " << (c.passed ? "pass " : "FAIL ") << c.name
                  << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
}

std::string array_text(const std::vector<Rational>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].str();
    return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection densities of PSL(2,q) and PGL(2,q) on cubic arc-transitive graphs"};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, CLI::App*> cmds;
    for (const auto& [name, help] :
         std::vector<std::pair<std::string, std::string>>{
             {"density", "Compute alpha and rho, compare with the predictions"},
             {"verify", "Run the named structural checks"},
             {"pgl-claims", "Check the PGL intersecting-set claims"},
             {"export", "Write DOT, edge-list and witness files"},
             {"table", "Predicted vs computed weak density array per q"}}) {
        cmds[name] = app.add_subcommand(name, help);
        add_common(cmds[name], o);
    }
    cmds["export"]->add_flag("--no-dot", o.no_dot);
    cmds["export"]->add_flag("--no-edges", o.no_edges);
    cmds["export"]->add_flag("--no-witness", o.no_witness);
    CLI11_PARSE(app, argc, argv);

    RunConfig config;
    try {
        config = make_config(o);
    } catch (const Error& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    }

    std::string command;
    for (const auto& [name, cmd] : cmds)
        if (cmd->parsed()) command = name;

    if (command == "export") {
        bool ok = true;
        for (auto q : config.q_list) {
            try {
                for (const auto& path : pipeline::run_export(q, config)) std::cout << path.string() << '\n';
            } catch (const Error& e) {
                std::cerr << "q=" << q << ": " << e.what() << '\n';
                ok = false;
            }
        }
        return ok ? 0 : 1;
    }

    std::vector<DensityReport> reports;
    for (auto q : config.q_list) {
        if (command == "verify") reports.push_back(pipeline::run_verify(q, config));
        else if (command == "pgl-claims") reports.push_back(pipeline::run_pgl_claims(q, config));
        else reports.push_back(pipeline::run_density(q, config));
        if (command != "table") print_report(reports.back());
    }

    if (command == "table") {
        std::cout << std::left << std::setw(6) << "q" << std::setw(16) << "predicted" << std::setw(16)
                  << "computed" << "status\n";
        for (const auto& r : reports) {
            std::string predicted = r.weak_predicted.empty() ? "-" : array_text(r.weak_predicted);
            std::string computed = r.error ? r.error->code : array_text(r.weak_computed);
            std::cout << std::setw(6) << r.q << std::setw(16) << predicted << std::setw(16) << computed
                      << (r.ok() ? "ok" : r.error ? "ERROR" : "MISMATCH") << '\n';
        }
    }

    write_file(config.out_dir / "report.json", pipeline::report_json(command, config, reports));
    if (command == "density" || command == "table")
        write_file(config.out_dir / "summary.csv", pipeline::summary_csv(config, reports));

    const bool ok = std::all_of(reports.begin(), reports.end(), [](const DensityReport& r) { return r.ok(); });
    return ok ? 0 : 1;
}
