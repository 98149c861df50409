#include "cera/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cera::io {

namespace {

using Json = nlohmann::json;

struct Line {
    std::size_t number = 0;
    std::vector<std::string> fields;
};

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

/// Non-blank, non-comment lines split on commas.
std::vector<Line> csv_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++number;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        Line parsed{number, {}};
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            parsed.fields.push_back(trim(rest.substr(0, comma)));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        out.push_back(std::move(parsed));
    }
    return out;
}

InputError line_error(std::size_t line, const std::string& what)
{
    return InputError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_integer(const std::string& field, std::size_t line)
{
    T value{};
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || p != field.data() + field.size())
        throw line_error(line, "expected a nonnegative integer, got '" + field + "'");
    return value;
}

double parse_real(const std::string& field, std::size_t line)
{
    double value = 0.0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || p != field.data() + field.size() || !std::isfinite(value))
        throw line_error(line, "expected a finite number, got '" + field + "'");
    return value;
}

bool looks_like_json(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string_view::npos && (text[first] == '{' || text[first] == '[');
}

std::vector<Event> events_from_json(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed event JSON: ") + e.what());
    }
    const Json& rows = doc.is_object() ? doc.at("events") : doc;
    if (!rows.is_array())
        throw InputError("event JSON must hold an array of events");
    std::vector<Event> out;
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& row = rows[i];
        Event ev;
        try {
            ev.id = row.at("id").get<VertexId>();
            ev.tau = row.at("tau").get<double>();
            if (row.contains("coords"))
                ev.coords = row.at("coords").get<std::vector<double>>();
        } catch (const Json::exception& e) {
            throw InputError("event " + std::to_string(i) + ": " + e.what());
        }
        if (!seen.insert(ev.id).second)
            throw InputError("event " + std::to_string(i) + ": duplicate id " +
                             std::to_string(ev.id));
        out.push_back(std::move(ev));
    }
    return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path.string() + "'");
    out << contents;
    if (!out)
        throw InputError("failed writing '" + path.string() + "'");
}

std::vector<Event> parse_events_text(std::string_view text)
{
    if (looks_like_json(text))
        return events_from_json(text);

    const auto lines = csv_lines(text);
    if (lines.empty())
        throw InputError("event file is empty");
    const auto& header = lines.front().fields;
    if (header.size() < 2 || header.front() != "id" || header.back() != "tau")
        throw line_error(lines.front().number, "header must be id,x1,...,xd,tau");
    const std::size_t dim = header.size() - 2;
    for (std::size_t i = 0; i < dim; ++i)
        if (header[i + 1] != "x" + std::to_string(i + 1))
            throw line_error(lines.front().number, "header must be id,x1,...,xd,tau");

    std::vector<Event> out;
    std::set<VertexId> seen;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const Line& line = lines[r];
        if (line.fields.size() != header.size())
            throw line_error(line.number, "expected " + std::to_string(header.size()) +
                                              " fields, got " +
                                              std::to_string(line.fields.size()));
        Event ev;
        ev.id = parse_integer<VertexId>(line.fields[0], line.number);
        for (std::size_t i = 0; i < dim; ++i)
            ev.coords.push_back(parse_real(line.fields[i + 1], line.number));
        ev.tau = parse_real(line.fields.back(), line.number);
        if (!seen.insert(ev.id).second)
            throw line_error(line.number, "duplicate id " + std::to_string(ev.id));
        out.push_back(std::move(ev));
    }
    return out;
}

std::vector<Event> parse_events(const std::filesystem::path& path)
{
    return parse_events_text(read_file(path));
}

Filtration parse_edge_levels_text(std::string_view text, VertexMode mode)
{
    std::vector<VertexId> universe;
    std::optional<std::vector<double>> instants;
    std::optional<std::size_t> declared;
    std::vector<std::vector<Edge>> diffs;

    for (const Line& line : csv_lines(text)) {
        const auto& f = line.fields;
        if (f.front() == "u") {
            if (f != std::vector<std::string>{"u", "v", "level"})
                throw line_error(line.number, "header must be u,v,level");
            continue;
        }
        if (f.front() == "vertices") {
            for (std::size_t i = 1; i < f.size(); ++i)
                universe.push_back(parse_integer<VertexId>(f[i], line.number));
            continue;
        }
        if (f.front() == "levels") {
            if (f.size() != 2)
                throw line_error(line.number, "expected levels,k");
            declared = parse_integer<std::size_t>(f[1], line.number);
            if (*declared == 0)
                throw line_error(line.number, "a filtration needs at least one level");
            continue;
        }
        if (f.front() == "instants") {
            instants.emplace();
            for (std::size_t i = 1; i < f.size(); ++i)
                instants->push_back(parse_real(f[i], line.number));
            continue;
        }
        if (f.size() != 3)
            throw line_error(line.number, "expected u,v,level");
        const Edge e{parse_integer<VertexId>(f[0], line.number),
                     parse_integer<VertexId>(f[1], line.number)};
        const auto level = parse_integer<std::size_t>(f[2], line.number);
        if (level == 0)
            throw line_error(line.number, "levels start at 1");
        if (diffs.size() < level)
            diffs.resize(level);
        diffs[level - 1].push_back(e);
    }
    if (declared) {
        if (diffs.size() > *declared)
            throw InputError("edge at level " + std::to_string(diffs.size()) + " beyond levels," +
                             std::to_string(*declared));
        diffs.resize(*declared);
    }
    if (diffs.empty())
        throw InputError("edge level file defines no levels");
    if (instants && instants->size() < diffs.size())
        throw InputError("fewer instants than levels");
    if (instants && instants->size() > diffs.size())
        diffs.resize(instants->size());  // trailing levels without new edges
    return Filtration::from_levels(std::move(universe), std::move(diffs), mode,
                                   std::move(instants));
}

Filtration parse_edge_levels(const std::filesystem::path& path, VertexMode mode)
{
    return parse_edge_levels_text(read_file(path), mode);
}

std::string format_edge_levels(const Filtration& filtration)
{
    std::ostringstream out;
    out.precision(17);
    out << "u,v,level\n";
    out << "levels," << filtration.num_levels() << '\n';
    out << "vertices";
    for (VertexId v : filtration.vertices())
        out << ',' << v;
    out << '\n';
    if (const auto& t = filtration.instants()) {
        out << "instants";
        for (double x : *t)
            out << ',' << x;
        out << '\n';
    }
    for (std::size_t n = 1; n <= filtration.num_levels(); ++n)
        for (const Edge& e : filtration.new_edges(n))
            out << e.source << ',' << e.target << ',' << n << '\n';
    return out.str();
}

std::vector<SimplicialComplex> parse_complex_levels_text(std::string_view text)
{
    std::set<VertexId> vertices;
    bool explicit_vertices = false;
    std::vector<std::vector<SimplicialComplex::Face>> added;  // added[n-1]
    for (const Line& line : csv_lines(text)) {
        const auto& f = line.fields;
        if (f.front() == "vertices") {
            explicit_vertices = true;
            for (std::size_t i = 1; i < f.size(); ++i)
                vertices.insert(parse_integer<VertexId>(f[i], line.number));
            continue;
        }
        if (f.front() == "level")
            continue;  // header
        if (f.size() < 2)
            throw line_error(line.number, "expected level,v1,v2,...");
        const auto level = parse_integer<std::size_t>(f[0], line.number);
        if (level == 0)
            throw line_error(line.number, "levels start at 1");
        SimplicialComplex::Face face;
        for (std::size_t i = 1; i < f.size(); ++i)
            face.push_back(parse_integer<VertexId>(f[i], line.number));
        if (added.size() < level)
            added.resize(level);
        added[level - 1].push_back(std::move(face));
    }
    if (added.empty())
        throw InputError("complex file defines no levels");
    for (const auto& faces : added)
        for (const auto& face : faces)
            for (VertexId v : face)
                if (!vertices.contains(v)) {
                    if (explicit_vertices)
                        throw InputError("face uses vertex " + std::to_string(v) +
                                         " outside the declared vertex set");
                    vertices.insert(v);
                }

    const std::vector<VertexId> vertex_list(vertices.begin(), vertices.end());
    std::vector<SimplicialComplex> out;
    std::vector<SimplicialComplex::Face> cumulative;
    out.push_back(SimplicialComplex::from_faces(vertex_list, {}));
    for (const auto& faces : added) {
        cumulative.insert(cumulative.end(), faces.begin(), faces.end());
        out.push_back(SimplicialComplex::from_faces(vertex_list, cumulative));
    }
    return out;
}

std::vector<SimplicialComplex> parse_complex_levels(const std::filesystem::path& path)
{
    return parse_complex_levels_text(read_file(path));
}

VertexMap parse_vertex_map_text(std::string_view text)
{
    VertexMap out;
    for (const Line& line : csv_lines(text)) {
        const auto& f = line.fields;
        if (f.size() != 2)
            throw line_error(line.number, "expected source,target");
        if (f[0] == "source")
            continue;
        const auto from = parse_integer<VertexId>(f[0], line.number);
        const auto to = parse_integer<VertexId>(f[1], line.number);
        if (!out.emplace(from, to).second)
            throw line_error(line.number, "vertex " + f[0] + " mapped twice");
    }
    return out;
}

VertexMap parse_vertex_map(const std::filesystem::path& path)
{
    return parse_vertex_map_text(read_file(path));
}

}  // namespace cera::io
