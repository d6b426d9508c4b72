#include "spanmu/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spanmu/error.hpp"

namespace spanmu {

namespace {

using nlohmann::json;

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

int to_int(std::string_view s, int line_no)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                         std::string(s) + "'");
    }
    return v;
}

json rational_json(const Rational& r) { return {{"num", r.num_str()}, {"den", r.den_str()}}; }

Rational rational_from(const json& j, const char* field)
{
    if (!j.contains(field) || !j[field].is_object()) {
        throw ParseError(std::string("missing rational field '") + field + "'");
    }
    const auto& r = j[field];
    if (!r.contains("num") || !r.contains("den") || !r["num"].is_string() || !r["den"].is_string()) {
        throw ParseError(std::string("rational field '") + field + "' needs string num and den");
    }
    auto den = r["den"].get<std::string>();
    if (!den.empty() && den.front() == '-') {
        throw ParseError(std::string("negative denominator in '") + field + "'");
    }
    return Rational::parse(r["num"].get<std::string>() + "/" + den);
}

int int_from(const json& j, const char* field)
{
    if (!j.contains(field) || !j[field].is_number_integer()) {
        throw ParseError(std::string("missing integer field '") + field + "'");
    }
    return j[field].get<int>();
}

Edge edge_from(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw ParseError("edge must be a pair of integers");
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

} // namespace

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    int n = -1;
    int m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        auto tok = tokens(line);
        if (tok.empty()) {
            continue;
        }
        if (!have_header) {
            if (tok.size() != 2 || tok[0] != "spanmu-graph" || tok[1] != "v1") {
                throw ParseError("line " + std::to_string(line_no) + ": expected header 'spanmu-graph v1'");
            }
            have_header = true;
            continue;
        }
        if (tok.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
        }
        int a = to_int(tok[0], line_no);
        int b = to_int(tok[1], line_no);
        if (n < 0) {
            if (a < 1) {
                throw ParseError("line " + std::to_string(line_no) + ": graph needs at least one vertex");
            }
            n = a;
            m = b;
            continue;
        }
        if (a >= b || b >= n) {
            throw ParseError("line " + std::to_string(line_no) + ": edge must satisfy u < v < n");
        }
        edges.emplace_back(a, b);
    }
    if (!have_header) {
        throw ParseError("missing header 'spanmu-graph v1'");
    }
    if (n < 0) {
        throw ParseError("missing 'n m' line");
    }
    if (static_cast<int>(edges.size()) != m) {
        throw ParseError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    auto g = Graph::from_edge_list(n, edges);
    if (g.m() != m) {
        throw ParseError("duplicate edge lines");
    }
    return g;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string format_graph(const Graph& g)
{
    std::ostringstream out;
    out << "spanmu-graph v1\n" << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

std::string certificate_to_json(const CertificateDoc& doc)
{
    const auto& c = doc.cert;
    json j;
    j["case"] = std::string(to_string(c.kind));
    j["k"] = c.k;
    j["t"] = c.t;
    j["n"] = c.n;
    j["m"] = c.m;
    j["mu"] = rational_json(c.mu);
    j["bound"] = rational_json(c.bound);
    j["alpha"] = doc.alpha ? json(*doc.alpha) : json(nullptr);
    if (const auto* s = std::get_if<IndependentSetWitness>(&c.witness)) {
        j["witness"] = {{"independent_set", s->vertices}};
    } else if (const auto* e = std::get_if<SwappedEdge>(&c.witness)) {
        j["witness"] = {{"swapped_edge",
                         {{"removed", {e->removed.first, e->removed.second}},
                          {"added", {e->added.first, e->added.second}}}}};
    } else {
        j["witness"] = nullptr;
    }
    j["trace_digest"] = c.trace_digest;
    j["start"] = c.start;
    json edges = json::array();
    for (auto [u, v] : doc.tree_edges) {
        edges.push_back({u, v});
    }
    j["tree_edges"] = edges;
    return j.dump(2) + "\n";
}

CertificateDoc certificate_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("certificate must be a JSON object");
    }
    CertificateDoc doc;
    auto& c = doc.cert;
    if (!j.contains("case") || !j["case"].is_string()) {
        throw ParseError("missing field 'case'");
    }
    auto kind = parse_certificate_case(j["case"].get<std::string>());
    if (!kind) {
        throw ParseError("unknown case '" + j["case"].get<std::string>() + "'");
    }
    c.kind = *kind;
    c.k = int_from(j, "k");
    c.t = int_from(j, "t");
    c.n = int_from(j, "n");
    c.m = int_from(j, "m");
    c.start = int_from(j, "start");
    c.mu = rational_from(j, "mu");
    c.bound = rational_from(j, "bound");

    if (!j.contains("alpha")) {
        throw ParseError("missing field 'alpha'");
    }
    if (!j["alpha"].is_null()) {
        if (!j["alpha"].is_number_integer()) {
            throw ParseError("alpha must be an integer or null");
        }
        doc.alpha = j["alpha"].get<int>();
    }

    if (!j.contains("witness")) {
        throw ParseError("missing field 'witness'");
    }
    const auto& w = j["witness"];
    if (w.is_object() && w.contains("independent_set")) {
        IndependentSetWitness s;
        for (const auto& v : w["independent_set"]) {
            if (!v.is_number_integer()) {
                throw ParseError("independent_set entries must be integers");
            }
            s.vertices.push_back(v.get<int>());
        }
        c.witness = std::move(s);
    } else if (w.is_object() && w.contains("swapped_edge")) {
        const auto& e = w["swapped_edge"];
        if (!e.is_object() || !e.contains("removed") || !e.contains("added")) {
            throw ParseError("swapped_edge needs removed and added");
        }
        c.witness = SwappedEdge{edge_from(e["removed"]), edge_from(e["added"])};
    } else if (!w.is_null()) {
        throw ParseError("unrecognized witness");
    }

    if (!j.contains("trace_digest") || !j["trace_digest"].is_string()) {
        throw ParseError("missing field 'trace_digest'");
    }
    c.trace_digest = j["trace_digest"].get<std::string>();
    if (!j.contains("tree_edges") || !j["tree_edges"].is_array()) {
        throw ParseError("missing field 'tree_edges'");
    }
    for (const auto& e : j["tree_edges"]) {
        doc.tree_edges.push_back(edge_from(e));
    }
    return doc;
}

} // namespace spanmu
