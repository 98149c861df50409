// cera: temporal filtrations of causal graphs and their edge-ideal invariants.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cera/functorial.hpp"
#include "cera/io.hpp"
#include "cera/report.hpp"
#include "cera/simplicial.hpp"
#include "json.hpp"

namespace {

using namespace cera;
using Json = nlohmann::json;

struct InputOptions {
    std::string events;
    std::string levels;
    double delta = 1.0;
    double epsilon = 1.0;
    std::string metric = "euclidean";
    std::string grid = "auto";
    std::string vertex_mode = "full";

    void attach(CLI::App& cmd, bool allow_levels)
    {
        auto* ev = cmd.add_option("--events", events, "Event file (CSV or JSON)");
        if (allow_levels) {
            auto* lv = cmd.add_option("--levels", levels, "Level-tagged edge file");
            ev->excludes(lv);
        }
        cmd.add_option("--delta", delta, "Maximum time gap of an admissible edge");
        cmd.add_option("--epsilon", epsilon, "Maximum spatial distance of an admissible edge");
        cmd.add_option("--metric", metric, "euclidean | manhattan | chebyshev");
        cmd.add_option("--grid", grid, "'auto' or comma-separated time instants");
        cmd.add_option("--vertex-mode", vertex_mode, "full | incident");
    }

    std::vector<double> grid_values() const
    {
        std::vector<double> out;
        if (grid == "auto")
            return out;
        std::string_view rest = grid;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            double value = 0.0;
            auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || p != item.data() + item.size())
                throw InputError("bad grid value '" + std::string(item) + "'");
            out.push_back(value);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        if (out.empty())
            throw InputError("empty grid");
        return out;
    }

    RunConfig run_config() const
    {
        RunConfig cfg;
        if (!events.empty()) {
            cfg.kind = InputKind::events;
            cfg.input = events;
        } else if (!levels.empty()) {
            cfg.kind = InputKind::levels;
            cfg.input = levels;
        } else {
            throw InputError("one of --events or --levels is required");
        }
        cfg.params = {delta, epsilon, parse_metric(metric)};
        cfg.grid = grid_values();
        cfg.mode = parse_vertex_mode(vertex_mode);
        return cfg;
    }
};

void write_output(const std::string& out, const std::string& text)
{
    if (out.empty() || out == "-")
        std::cout << text;
    else
        io::write_file(out, text);
}

int run_build(const InputOptions& in, const std::string& out)
{
    if (in.events.empty())
        throw InputError("build requires --events");
    RunConfig cfg = in.run_config();
    const Filtration f = load_filtration(cfg);
    write_output(out, io::format_edge_levels(f));
    return 0;
}

int run_analyze_cmd(const InputOptions& in, const std::string& order, const std::string& format,
                    const std::string& out, std::optional<unsigned> d_max, bool oracle)
{
    RunConfig cfg = in.run_config();
    cfg.options.order = parse_order_policy(order);
    cfg.options.d_max = d_max;
    cfg.options.oracle = oracle;
    const AnalysisReport report = run_analyze(cfg);
    const ReportFormat fmt = parse_report_format(format);

    if (fmt == ReportFormat::json && (out.empty() || out == "-")) {
        std::cout << to_json(report);
        return 0;
    }
    if (out.empty() || out == "-") {
        if (fmt == ReportFormat::csv) {
            for (const auto& [section, body] : to_csv(report))
                std::cout << "# " << section << '\n' << body;
        } else {
            for (std::size_t n = 1; n <= report.levels.size(); ++n)
                std::cout << to_dot(report, n);
        }
        return 0;
    }
    for (const auto& p : emit(report, fmt, out))
        std::cerr << "wrote " << p.string() << '\n';
    return 0;
}

int run_hilbert(const InputOptions& in, const std::string& complex_path, std::string kind,
                unsigned d_max, bool oracle, const std::string& format, const std::string& out)
{
    GradedDimTable table;
    if (!complex_path.empty()) {
        if (kind == "edge")
            throw InputError("--complex only supports --kind sr");
        kind = "sr";
        const auto levels = io::parse_complex_levels(complex_path);
        table = sr_hilbert_table(levels, d_max);
        if (oracle && table.cells != sr_hilbert_table_bruteforce(levels, d_max).cells)
            throw InvariantViolation("Stanley-Reisner table disagrees with brute force");
    } else {
        const Filtration f = load_filtration(in.run_config());
        if (kind.empty())
            kind = "edge";
        if (kind == "edge") {
            table = hilbert_table(f, d_max);
            if (oracle && table.cells != hilbert_table_bruteforce(f, d_max).cells)
                throw InvariantViolation("edge-ideal table disagrees with brute force");
        } else if (kind == "sr") {
            const auto levels = clique_filtration(f);
            table = sr_hilbert_table(levels, d_max);
            if (oracle && table.cells != sr_hilbert_table_bruteforce(levels, d_max).cells)
                throw InvariantViolation("Stanley-Reisner table disagrees with brute force");
        } else {
            throw InputError("--kind must be edge or sr");
        }
    }

    if (format == "csv") {
        write_output(out, hilbert_csv(table));
    } else if (format == "json") {
        Json rows = Json::array();
        for (const auto& row : table.cells) {
            Json cells = Json::array();
            for (const auto& c : row)
                cells.push_back(c <= (BigInt(1) << 53) ? Json(c.convert_to<std::uint64_t>())
                                                       : Json(c.str()));
            rows.push_back(std::move(cells));
        }
        Json doc = {{"kind", kind}, {"d_max", d_max}, {"oracle", oracle}, {"table", rows}};
        write_output(out, doc.dump(2) + "\n");
    } else {
        throw InputError("--format must be csv or json");
    }
    return 0;
}

int run_collapse(const InputOptions& in, const std::string& format, const std::string& out)
{
    const Filtration f = load_filtration(in.run_config());
    const MonomialIdeal collapsed = temporal_collapse(f);
    if (minimal_generators(collapsed) != minimal_generators(edge_ideal(f, f.num_levels())))
        throw InvariantViolation("temporal collapse differs from the last edge ideal");
    std::vector<std::string> gens;
    for (const auto& g : collapsed.generators())
        gens.push_back(g.to_string());
    if (format == "json") {
        Json doc = {{"generators", gens}, {"vertices", collapsed.ambient_vars()}};
        write_output(out, doc.dump(2) + "\n");
    } else {
        std::string text;
        for (const auto& g : gens)
            text += g + "\n";
        write_output(out, text);
    }
    return 0;
}

int run_morphism(const std::string& source_path, const std::string& target_path,
                 const std::string& map_path, const std::string& vertex_mode,
                 const std::string& out)
{
    const VertexMode mode = parse_vertex_mode(vertex_mode);
    const Filtration source = io::parse_edge_levels(source_path, mode);
    const Filtration target = io::parse_edge_levels(target_path, mode);
    const VertexMap map = io::parse_vertex_map(map_path);

    const auto violations = check_morphism(source, target, map);
    Json bad = Json::array();
    for (const auto& v : violations)
        bad.push_back({{"u", v.edge.source}, {"v", v.edge.target}, {"level", v.level}});

    const auto morphism = FilteredMorphism::unchecked(source, target, map);
    const ImageCheck image = induced_image_check(morphism);
    const ImageCheck natural = verify_naturality(morphism);
    std::vector<std::string> warnings = image.warnings;
    warnings.insert(warnings.end(), natural.warnings.begin(), natural.warnings.end());
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << '\n';

    Json doc = {{"valid", violations.empty()},
                {"violations", bad},
                {"induced_image", image.holds},
                {"naturality", natural.holds},
                {"warnings", warnings}};
    write_output(out, doc.dump(2) + "\n");

    if (!violations.empty())
        return 1;
    if (!image.holds || !natural.holds)
        throw InvariantViolation("a valid morphism failed the functoriality checks");
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Temporal filtrations of causal graphs: bridges, edge ideals, Hilbert tables"};
    app.require_subcommand(1);

    InputOptions build_in, analyze_in, hilbert_in, collapse_in;
    std::string out, order = "lex", format = "json", complex_path, kind;
    std::string source_path, target_path, map_path, morph_mode = "full";
    std::optional<unsigned> d_max;
    unsigned hilbert_d_max = 4;
    bool oracle = false;

    auto* build = app.add_subcommand("build", "Build a level-tagged filtration from events");
    build_in.attach(*build, false);
    build->add_option("--out", out, "Output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "Bridge classification and theorem report");
    analyze_in.attach(*analyze, true);
    analyze->add_option("--order", order, "lex | input");
    analyze->add_option("--format", format, "json | csv | dot");
    analyze->add_option("--out", out, "Output file (json) or prefix (csv, dot)");
    analyze->add_option("--d-max", d_max, "Include Hilbert tables up to this degree");
    analyze->add_flag("--oracle", oracle, "Cross-check Hilbert tables by brute force");

    auto* hilbert = app.add_subcommand("hilbert", "Edge-ideal or Stanley-Reisner Hilbert table");
    hilbert_in.attach(*hilbert, true);
    hilbert->add_option("--complex", complex_path, "Simplicial filtration file");
    hilbert->add_option("--kind", kind, "edge (default) | sr; files given with --complex are always sr");
    hilbert->add_option("--d-max", hilbert_d_max, "Largest degree");
    hilbert->add_flag("--oracle", oracle, "Cross-check by brute force");
    hilbert->add_option("--format", format, "csv | json");
    hilbert->add_option("--out", out, "Output file (default stdout)");

    auto* collapse = app.add_subcommand("collapse", "Edge ideal of the aggregated graph");
    collapse_in.attach(*collapse, true);
    collapse->add_option("--format", format, "text | json");
    collapse->add_option("--out", out, "Output file (default stdout)");

    auto* morphism = app.add_subcommand("morphism", "Check a filtered vertex map");
    morphism->add_option("--source", source_path, "Source level-tagged edge file")->required();
    morphism->add_option("--target", target_path, "Target level-tagged edge file")->required();
    morphism->add_option("--map", map_path, "Vertex map file")->required();
    morphism->add_option("--vertex-mode", morph_mode, "full | incident");
    morphism->add_option("--out", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*build)
            return run_build(build_in, out);
        if (*analyze)
            return run_analyze_cmd(analyze_in, order, format, out, d_max, oracle);
        if (*hilbert)
            return run_hilbert(hilbert_in, complex_path, kind, hilbert_d_max, oracle,
                               format == "json" ? "json" : "csv", out);
        if (*collapse)
            return run_collapse(collapse_in, format, out);
        if (*morphism)
            return run_morphism(source_path, target_path, map_path, morph_mode, out);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
