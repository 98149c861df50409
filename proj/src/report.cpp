#include "cera/report.hpp"

#include <sstream>

#include "cera/io.hpp"
#include "cera/simplicial.hpp"
#include "json.hpp"

namespace cera {

using Json = nlohmann::json;

bool operator==(const LevelRecord& a, const LevelRecord& b)
{
    auto same_classes = [](const std::vector<ClassifiedEdge>& x,
                           const std::vector<ClassifiedEdge>& y) {
        if (x.size() != y.size())
            return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].edge != y[i].edge || x[i].cls != y[i].cls)
                return false;
        return true;
    };
    return a.n == b.n && a.t == b.t && a.edge_count == b.edge_count && a.beta0 == b.beta0 &&
           a.dim_B == b.dim_B && a.dim_C == b.dim_C && a.dim_R == b.dim_R &&
           a.theorem_holds == b.theorem_holds && a.discrepancy == b.discrepancy &&
           same_classes(a.classified, b.classified);
}

bool operator==(const AnalysisReport& a, const AnalysisReport& b)
{
    auto same_table = [](const std::optional<GradedDimTable>& x,
                         const std::optional<GradedDimTable>& y) {
        if (x.has_value() != y.has_value())
            return false;
        return !x || x->cells == y->cells;
    };
    return a.config == b.config && a.vertices == b.vertices &&
           a.beta0_initial == b.beta0_initial && a.levels == b.levels &&
           a.bridge_polynomial == b.bridge_polynomial && same_table(a.hilbert_edge, b.hilbert_edge) &&
           same_table(a.hilbert_sr, b.hilbert_sr);
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InvariantViolation(what);
}

void compare_tables(const GradedDimTable& formula, const GradedDimTable& brute,
                    const std::string& name)
{
    for (std::size_t n = 0; n < formula.rows(); ++n)
        for (std::size_t d = 0; d < formula.cols(); ++d)
            require(formula.cells[n][d] == brute.cells[n][d],
                    name + " table disagrees with brute force at (" + std::to_string(n) + "," +
                        std::to_string(d) + ")");
}

}  // namespace

AnalysisReport analyze(const Filtration& filtration, const AnalyzeOptions& options,
                       ReportConfig config)
{
    config.vertex_mode = std::string(to_string(filtration.mode()));
    config.order_policy = std::string(to_string(options.order));
    config.d_max = options.d_max;
    config.oracle = options.oracle;

    AnalysisReport report;
    report.config = std::move(config);
    report.vertices = filtration.vertices();
    report.beta0_initial = beta0(filtration, 0);

    const auto classes = classify_all_levels(filtration, options.order);
    const auto checks = verify_bridge_theorem(filtration, options.order);
    long long previous = report.beta0_initial;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        const auto& check = checks[i];
        LevelRecord rec;
        rec.n = c.level;
        if (const auto& t = filtration.instants())
            rec.t = (*t)[i];
        rec.edge_count = filtration.edges(c.level).size();
        rec.beta0 = beta0(filtration, c.level);
        rec.dim_B = c.dim_B;
        rec.dim_C = c.dim_C;
        rec.dim_R = c.dim_R;
        rec.theorem_holds = check.holds;
        rec.discrepancy = check.discrepancy;
        rec.classified = c.classified;

        const auto level_size = static_cast<long long>(filtration.new_edges(c.level).size());
        require(static_cast<long long>(quotient_new_generators(filtration, c.level).size()) ==
                    level_size,
                "quotient generators do not biject with the level diff");
        if (filtration.mode() == VertexMode::full)
            require(check.holds, "bridge count differs from the component drop at level " +
                                     std::to_string(c.level));
        else
            require(rec.beta0 == previous + c.creations - c.dim_B,
                    "incident-mode component ledger fails at level " + std::to_string(c.level));
        previous = rec.beta0;
        report.bridge_polynomial.push_back(c.dim_B);
        report.levels.push_back(std::move(rec));
    }

    if (options.d_max) {
        const unsigned d_max = *options.d_max;
        report.hilbert_edge = hilbert_table(filtration, d_max, options.exec);
        const auto complexes = clique_filtration(filtration);
        report.hilbert_sr = sr_hilbert_table(complexes, d_max, options.exec);
        if (d_max >= 2) {
            for (std::size_t n = 1; n <= filtration.num_levels(); ++n)
                require(report.hilbert_edge->cells[n][2] - report.hilbert_edge->cells[n - 1][2] ==
                            BigInt(filtration.new_edges(n).size()),
                        "degree-2 Hilbert increment differs from the number of new edges");
        }
        if (options.oracle) {
            compare_tables(*report.hilbert_edge, hilbert_table_bruteforce(filtration, d_max),
                           "edge-ideal Hilbert");
            compare_tables(*report.hilbert_sr, sr_hilbert_table_bruteforce(complexes, d_max),
                           "Stanley-Reisner Hilbert");
        }
    }
    return report;
}

Filtration load_filtration(const RunConfig& config)
{
    if (config.kind == InputKind::levels)
        return io::parse_edge_levels(config.input, config.mode);
    const CausalGraph graph = build_causal_graph(io::parse_events(config.input), config.params);
    const TimeGrid grid = config.grid.empty() ? auto_grid(graph) : TimeGrid(config.grid);
    return build_filtration(graph, grid, config.mode);
}

AnalysisReport run_analyze(const RunConfig& config)
{
    ReportConfig echo;
    if (config.kind == InputKind::events) {
        config.params.validate();
        echo.delta = config.params.delta;
        echo.epsilon = config.params.epsilon;
        echo.metric = std::string(to_string(config.params.metric));
        echo.grid = config.grid.empty() ? "auto" : "explicit";
    } else {
        echo.grid = "levels";
    }
    return analyze(load_filtration(config), config.options, std::move(echo));
}

// --- JSON -------------------------------------------------------------------

namespace {

const BigInt kJsonSafe = BigInt(1) << 53;

Json big_to_json(const BigInt& v)
{
    if (v >= 0 && v <= kJsonSafe)
        return v.convert_to<std::uint64_t>();
    return v.str();
}

BigInt big_from_json(const Json& j)
{
    if (j.is_string())
        return BigInt(j.get<std::string>());
    if (j.is_number_unsigned())
        return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    throw InputError("Hilbert cell must be an integer or a decimal string");
}

Json table_to_json(const GradedDimTable& table)
{
    Json rows = Json::array();
    for (const auto& row : table.cells) {
        Json cells = Json::array();
        for (const auto& cell : row)
            cells.push_back(big_to_json(cell));
        rows.push_back(std::move(cells));
    }
    return rows;
}

GradedDimTable table_from_json(const Json& j)
{
    GradedDimTable table;
    for (const auto& row : j) {
        auto& cells = table.cells.emplace_back();
        for (const auto& cell : row)
            cells.push_back(big_from_json(cell));
    }
    return table;
}

template <typename T>
Json optional_to_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<T>();
}

}  // namespace

std::string to_json(const AnalysisReport& report)
{
    const auto& c = report.config;
    Json doc;
    doc["config"] = {
        {"delta", optional_to_json(c.delta)},
        {"epsilon", optional_to_json(c.epsilon)},
        {"metric", optional_to_json(c.metric)},
        {"vertex_mode", c.vertex_mode},
        {"order_policy", c.order_policy},
        {"grid", c.grid},
        {"d_max", optional_to_json(c.d_max)},
        {"oracle", c.oracle},
    };
    doc["vertices"] = report.vertices;
    doc["beta0_initial"] = report.beta0_initial;

    Json levels = Json::array();
    for (const auto& rec : report.levels) {
        Json edges = Json::array();
        for (const auto& ce : rec.classified)
            edges.push_back({{"u", ce.edge.source},
                             {"v", ce.edge.target},
                             {"class", std::string(to_string(ce.cls))}});
        levels.push_back({
            {"n", rec.n},
            {"t", optional_to_json(rec.t)},
            {"edges", rec.edge_count},
            {"beta0", rec.beta0},
            {"dim_B", rec.dim_B},
            {"dim_C", rec.dim_C},
            {"dim_R", rec.dim_R},
            {"theorem_holds", rec.theorem_holds},
            {"discrepancy", rec.discrepancy},
            {"new_edges", std::move(edges)},
        });
    }
    doc["levels"] = std::move(levels);
    doc["bridge_polynomial"] = report.bridge_polynomial;
    if (report.hilbert_edge || report.hilbert_sr) {
        Json h = Json::object();
        if (report.hilbert_edge)
            h["edge_ideal"] = table_to_json(*report.hilbert_edge);
        if (report.hilbert_sr)
            h["stanley_reisner"] = table_to_json(*report.hilbert_sr);
        doc["hilbert"] = std::move(h);
    }
    return doc.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text)
{
    AnalysisReport report;
    try {
        const Json doc = Json::parse(text);
        const Json& c = doc.at("config");
        report.config.delta = optional_from_json<double>(c.at("delta"));
        report.config.epsilon = optional_from_json<double>(c.at("epsilon"));
        report.config.metric = optional_from_json<std::string>(c.at("metric"));
        report.config.vertex_mode = c.at("vertex_mode").get<std::string>();
        report.config.order_policy = c.at("order_policy").get<std::string>();
        report.config.grid = c.at("grid").get<std::string>();
        report.config.d_max = optional_from_json<unsigned>(c.at("d_max"));
        report.config.oracle = c.at("oracle").get<bool>();

        report.vertices = doc.at("vertices").get<std::vector<VertexId>>();
        report.beta0_initial = doc.at("beta0_initial").get<long long>();
        for (const Json& l : doc.at("levels")) {
            LevelRecord rec;
            rec.n = l.at("n").get<std::size_t>();
            rec.t = optional_from_json<double>(l.at("t"));
            rec.edge_count = l.at("edges").get<std::size_t>();
            rec.beta0 = l.at("beta0").get<long long>();
            rec.dim_B = l.at("dim_B").get<long long>();
            rec.dim_C = l.at("dim_C").get<long long>();
            rec.dim_R = l.at("dim_R").get<long long>();
            rec.theorem_holds = l.at("theorem_holds").get<bool>();
            rec.discrepancy = l.at("discrepancy").get<long long>();
            for (const Json& e : l.at("new_edges"))
                rec.classified.push_back({{e.at("u").get<VertexId>(), e.at("v").get<VertexId>()},
                                          parse_edge_class(e.at("class").get<std::string>())});
            report.levels.push_back(std::move(rec));
        }
        report.bridge_polynomial = doc.at("bridge_polynomial").get<std::vector<long long>>();
        if (doc.contains("hilbert")) {
            const Json& h = doc.at("hilbert");
            if (h.contains("edge_ideal"))
                report.hilbert_edge = table_from_json(h.at("edge_ideal"));
            if (h.contains("stanley_reisner"))
                report.hilbert_sr = table_from_json(h.at("stanley_reisner"));
        }
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed report JSON: ") + e.what());
    }
    return report;
}

// --- CSV / DOT --------------------------------------------------------------

std::string hilbert_csv(const GradedDimTable& table)
{
    std::ostringstream out;
    out << "n";
    for (std::size_t d = 0; d < table.cols(); ++d)
        out << ",d" << d;
    out << '\n';
    for (std::size_t n = 0; n < table.rows(); ++n) {
        out << n;
        for (const auto& cell : table.cells[n])
            out << ',' << cell;
        out << '\n';
    }
    return out.str();
}

std::map<std::string, std::string> to_csv(const AnalysisReport& report)
{
    std::map<std::string, std::string> sections;

    std::ostringstream levels;
    levels.precision(17);
    levels << "n,t,edges,beta0,dim_B,dim_C,dim_R,theorem_holds,discrepancy\n";
    for (const auto& r : report.levels) {
        levels << r.n << ',';
        if (r.t)
            levels << *r.t;
        levels << ',' << r.edge_count << ',' << r.beta0 << ',' << r.dim_B << ',' << r.dim_C << ','
               << r.dim_R << ',' << (r.theorem_holds ? "true" : "false") << ','
               << r.discrepancy << '\n';
    }
    sections["levels"] = levels.str();

    std::ostringstream poly;
    poly << "n,coefficient\n";
    for (std::size_t i = 0; i < report.bridge_polynomial.size(); ++i)
        poly << i + 1 << ',' << report.bridge_polynomial[i] << '\n';
    sections["bridge_polynomial"] = poly.str();

    if (report.hilbert_edge)
        sections["hilbert_edge"] = hilbert_csv(*report.hilbert_edge);
    if (report.hilbert_sr)
        sections["hilbert_sr"] = hilbert_csv(*report.hilbert_sr);
    return sections;
}

std::string to_dot(const AnalysisReport& report, std::size_t n)
{
    if (n < 1 || n > report.levels.size())
        throw std::out_of_range("no level " + std::to_string(n) + " in report");

    std::vector<std::pair<Edge, bool>> edges;  // (edge, highlighted)
    std::set<VertexId> touched;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& ce : report.levels[i].classified) {
            edges.emplace_back(ce.edge, i + 1 == n && ce.cls == EdgeClass::bridge);
            touched.insert(ce.edge.source);
            touched.insert(ce.edge.target);
        }
    }
    std::ostringstream out;
    out << "graph level_" << n << " {\n";
    if (report.config.vertex_mode == "full")
        touched.insert(report.vertices.begin(), report.vertices.end());
    for (VertexId v : touched)
        out << "  " << v << ";\n";
    for (const auto& [e, bridge] : edges) {
        const UndirectedEdge u(e);
        out << "  " << u.lo << " -- " << u.hi;
        if (bridge)
            out << " [color=red, penwidth=2, label=\"bridge\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

ReportFormat parse_report_format(std::string_view name)
{
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "dot") return ReportFormat::dot;
    throw InputError("unknown output format '" + std::string(name) + "'");
}

std::vector<std::filesystem::path> emit(const AnalysisReport& report, ReportFormat format,
                                        const std::filesystem::path& out)
{
    std::vector<std::filesystem::path> written;
    switch (format) {
    case ReportFormat::json:
        io::write_file(out, to_json(report));
        written.push_back(out);
        break;
    case ReportFormat::csv:
        for (const auto& [section, body] : to_csv(report)) {
            std::filesystem::path p = out;
            p += "." + section + ".csv";
            io::write_file(p, body);
            written.push_back(p);
        }
        break;
    case ReportFormat::dot:
        for (std::size_t n = 1; n <= report.levels.size(); ++n) {
            std::filesystem::path p = out;
            p += ".level" + std::to_string(n) + ".dot";
            io::write_file(p, to_dot(report, n));
            written.push_back(p);
        }
        break;
    }
    return written;
}

}  // namespace cera
