#pragma once

// Per-q pipelines behind the command line: build the action, solve, compare
// with the predictions, run the named structural checks, export graphs.

#include "idens/atlas.hpp"
#include "idens/clique.hpp"
#include "idens/conics.hpp"
#include "idens/derange.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace idens::pipeline {

enum class GroupSelection { PSL, PGL, Both };
enum class Level { Fast, Full };

struct RunConfig {
    std::vector<std::uint32_t> q_list;
    GroupSelection groups = GroupSelection::Both;
    std::uint64_t budget = clique::kDefaultBudget;
    unsigned workers = 1;
    std::filesystem::path out_dir = ".";
    bool export_dot = true;
    bool export_edges = true;
    bool export_witness = true;
    Level level = Level::Fast;
};

/// Throws InvalidArgument for an empty list, a q that is not an odd prime
/// power, or a q whose PGL(2,q) exceeds the enumeration bound.
void validate(const RunConfig& config);

/// Odd prime powers in [lo, hi].
std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi);

std::vector<atlas::Which> selected(GroupSelection groups);

/// Field, PGL table, canonical h, the inverting involution and the action.
struct Context {
    std::uint32_t q = 0;
    std::shared_ptr<const gfq::Field> field;
    std::shared_ptr<const atlas::GroupTable> table;
    std::uint32_t h = 0;
    std::uint32_t nu = 0;
    std::optional<atlas::CosetAction> action;
};

/// Throws NoSuchInvolution (q = 3^k, k even) and the build_action errors.
Context make_context(std::uint32_t q);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ErrorInfo {
    std::string code;
    std::string message;
};

struct GroupResult {
    atlas::Which group = atlas::Which::PSL;
    std::size_t alpha = 0;
    std::size_t stabilizer_order = 0;
    Rational rho;
    std::optional<conics::DensityPrediction> predicted;
    bool matches = false;
    std::vector<std::uint32_t> witness;  // element indices
    std::vector<std::string> witness_matrices;
    std::uint64_t nodes = 0;
    double seconds = 0;
    std::optional<ErrorInfo> error;
};

struct DensityReport {
    std::uint32_t q = 0;
    std::uint64_t order_psl = 0;
    std::uint64_t order_pgl = 0;
    std::uint64_t degree = 0;
    std::vector<GroupResult> groups;
    std::optional<derange::SubconstituentReport> subconstituent;
    std::vector<Rational> weak_predicted;
    std::vector<Rational> weak_computed;
    std::vector<Check> checks;
    double seconds = 0;
    std::optional<ErrorInfo> error;

    /// No error, every group matches its prediction, every check passed.
    bool ok() const;
};

DensityReport run_density(std::uint32_t q, const RunConfig& config);

/// Named structural checks; the full level adds the fixer characterizations
/// and the K S factorization.
DensityReport run_verify(std::uint32_t q, const RunConfig& config);

/// No intersecting set of PGL(2,q) has four elements outside PSL and two or
/// more inside, and the PGL maximum is 6. Throws UnsupportedCase for p = 3
/// and for p = +-2 mod 5 with q = 1 mod 3.
DensityReport run_pgl_claims(std::uint32_t q, const RunConfig& config);

/// Writes Gamma, Gamma-tilde, the cubic graph and the witnesses for q into
/// config.out_dir; returns the paths written. Throws TooLarge for graphs
/// above the dense limit.
std::vector<std::filesystem::path> run_export(std::uint32_t q, const RunConfig& config);

/// Deterministic DOT text, vertices named by index.
std::string to_dot(const BitGraph& graph, const std::string& name);
/// "u v" per line, u < v, lexicographic.
std::string to_edge_list(const BitGraph& graph);

std::string report_json(const std::string& command, const RunConfig& config,
                        const std::vector<DensityReport>& reports);
/// Header plus one row per (q, group).
std::string summary_csv(const RunConfig& config, const std::vector<DensityReport>& reports);

}  // namespace idens::pipeline
