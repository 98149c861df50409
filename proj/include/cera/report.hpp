#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cera/connectivity.hpp"
#include "cera/monomial.hpp"

namespace cera {

struct ReportConfig {
    std::optional<double> delta;
    std::optional<double> epsilon;
    std::optional<std::string> metric;
    std::string vertex_mode = "full";
    std::string order_policy = "lex";
    /// "auto", "explicit" or "levels" (level-tagged input without a grid).
    std::string grid = "levels";
    std::optional<unsigned> d_max;
    bool oracle = false;

    friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct LevelRecord {
    std::size_t n = 0;
    std::optional<double> t;
    std::size_t edge_count = 0;  // |E_n|
    long long beta0 = 0;
    long long dim_B = 0;
    long long dim_C = 0;
    long long dim_R = 0;
    bool theorem_holds = false;
    long long discrepancy = 0;
    std::vector<ClassifiedEdge> classified;

    friend bool operator==(const LevelRecord& a, const LevelRecord& b);
};

struct AnalysisReport {
    ReportConfig config;
    std::vector<VertexId> vertices;
    long long beta0_initial = 0;  // beta0 of level 0
    std::vector<LevelRecord> levels;
    std::vector<long long> bridge_polynomial;
    std::optional<GradedDimTable> hilbert_edge;
    std::optional<GradedDimTable> hilbert_sr;

    friend bool operator==(const AnalysisReport& a, const AnalysisReport& b);
};

struct AnalyzeOptions {
    OrderPolicy order = OrderPolicy::lex;
    std::optional<unsigned> d_max;
    /// Recompute Hilbert tables by brute force and fail on any mismatch.
    bool oracle = false;
    Execution exec = Execution::parallel;
};

/// Connectivity and (optionally) Hilbert analysis of a filtration. Throws
/// InvariantViolation if a checked identity fails (full-mode bridge theorem,
/// incident-mode ledger, or an oracle mismatch). `config` is echoed; its mode,
/// order and table fields are overwritten from the filtration and options.
AnalysisReport analyze(const Filtration& filtration, const AnalyzeOptions& options,
                       ReportConfig config = {});

enum class InputKind { events, levels };

struct RunConfig {
    std::filesystem::path input;
    InputKind kind = InputKind::levels;
    AdmissibilityParams params;
    /// Empty means auto grid (events input only).
    std::vector<double> grid;
    VertexMode mode = VertexMode::full;
    AnalyzeOptions options;
};

/// Filtration described by a run configuration (events are built into a graph
/// first).
Filtration load_filtration(const RunConfig& config);

AnalysisReport run_analyze(const RunConfig& config);

// Serialization. Integers beyond 2^53 are written as decimal strings.
std::string to_json(const AnalysisReport& report);
AnalysisReport report_from_json(std::string_view text);

/// One CSV table per section: "levels", "bridge_polynomial", and the Hilbert
/// tables when present ("hilbert_edge", "hilbert_sr").
std::map<std::string, std::string> to_csv(const AnalysisReport& report);
std::string hilbert_csv(const GradedDimTable& table);

/// Undirected graph of level n with the bridges introduced at n highlighted.
std::string to_dot(const AnalysisReport& report, std::size_t n);

enum class ReportFormat { json, csv, dot };
ReportFormat parse_report_format(std::string_view name);

/// Writes the report. json: `out` itself; csv: `<out>.<section>.csv`;
/// dot: `<out>.level<n>.dot`. Returns the written paths.
std::vector<std::filesystem::path> emit(const AnalysisReport& report, ReportFormat format,
                                        const std::filesystem::path& out);

}  // namespace cera
