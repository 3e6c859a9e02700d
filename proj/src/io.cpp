#include "linwit/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linwit {

namespace {

[[noreturn]] void parse_fail(int lineNo, const std::string& msg) {
    throw std::runtime_error("parse error at line " + std::to_string(lineNo) + ": " + msg);
}

// Yields non-empty lines with their 1-based numbers.
struct LineReader {
    std::istream& is;
    int lineNo = 0;
    bool next(std::string& out) {
        std::string line;
        while (std::getline(is, line)) {
            ++lineNo;
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            out = line;
            return true;
        }
        return false;
    }
};

} // namespace

void write_spec(std::ostream& os, const PseudogridSpec& spec) {
    os << "pseudogrid " << spec.a << " " << spec.b << "\n";
    GridGraph g(spec.a, spec.b);
    for (int k = g.vertexCount(); k < g.objectCount(); ++k) {
        GridObject e = g.objectAt(k);
        int s = spec.subdivAt(e);
        if (s == 0) continue;
        int i2 = e.kind == ObjKind::HEdge ? e.i + 1 : e.i;
        int j2 = e.kind == ObjKind::VEdge ? e.j + 1 : e.j;
        os << "edge " << e.i << " " << e.j << " " << i2 << " " << j2 << " " << s << "\n";
    }
    for (int j = 1; j <= spec.b; ++j)
        for (int i = 1; i <= spec.a; ++i) {
            int idx = g.objectIndex(GridObject::vertex(i, j));
            if (spec.kind[idx] == VertexKind::Single) continue;
            os << "vertex " << i << " " << j << " " << kind_name(spec.kind[idx]) << " "
               << spec.pathLen[idx] << "\n";
        }
}

PseudogridSpec read_spec(std::istream& is) {
    LineReader reader{is};
    std::string line;
    if (!reader.next(line)) parse_fail(reader.lineNo, "missing pseudogrid header");
    std::istringstream head(line);
    std::string tag;
    int a = 0, b = 0;
    if (!(head >> tag >> a >> b) || tag != "pseudogrid")
        parse_fail(reader.lineNo, "expected 'pseudogrid <a> <b>'");
    if (a < 1 || b < 1) parse_fail(reader.lineNo, "dimensions must be positive");

    PseudogridSpec spec(a, b);
    GridGraph g(a, b);
    while (reader.next(line)) {
        std::istringstream ls(line);
        ls >> tag;
        if (tag == "edge") {
            int i1, j1, i2, j2, s;
            if (!(ls >> i1 >> j1 >> i2 >> j2 >> s)) parse_fail(reader.lineNo, "bad edge line");
            if (i1 > i2 || (i1 == i2 && j1 > j2)) {
                std::swap(i1, i2);
                std::swap(j1, j2);
            }
            GridObject e = j1 == j2 ? GridObject::hedge(i1, j1) : GridObject::vedge(i1, j1);
            if (std::abs(i1 - i2) + std::abs(j1 - j2) != 1 || !g.hasObject(e))
                parse_fail(reader.lineNo, "endpoints are not a grid edge");
            if (s < 0) parse_fail(reader.lineNo, "negative subdivision count");
            spec.subdivAt(e) = s;
        } else if (tag == "vertex") {
            int i, j, len;
            std::string kindStr;
            if (!(ls >> i >> j >> kindStr >> len)) parse_fail(reader.lineNo, "bad vertex line");
            if (!g.hasVertex(i, j)) parse_fail(reader.lineNo, "vertex outside grid");
            VertexKind k;
            if (kindStr == "single")
                k = VertexKind::Single;
            else if (kindStr == "q1")
                k = VertexKind::Q1;
            else if (kindStr == "q2")
                k = VertexKind::Q2;
            else if (kindStr == "q3")
                k = VertexKind::Q3;
            else
                parse_fail(reader.lineNo, "unknown vertex kind '" + kindStr + "'");
            spec.setVertex(i, j, k, len);
        } else {
            parse_fail(reader.lineNo, "unknown directive '" + tag + "'");
        }
    }
    spec.validate();
    return spec;
}

void write_graph(std::ostream& os, const std::vector<std::vector<int>>& adj) {
    long long m = 0;
    for (const auto& row : adj) m += (long long)row.size();
    os << "graph " << adj.size() << " " << m / 2 << "\n";
    for (int u = 0; u < (int)adj.size(); ++u)
        for (int v : adj[u])
            if (u < v) os << "e " << u << " " << v << "\n";
}

std::vector<std::vector<int>> read_graph(std::istream& is) {
    LineReader reader{is};
    std::string line;
    if (!reader.next(line)) parse_fail(reader.lineNo, "missing graph header");
    std::istringstream head(line);
    std::string tag;
    long long n = 0, m = 0;
    if (!(head >> tag >> n >> m) || tag != "graph")
        parse_fail(reader.lineNo, "expected 'graph <n> <m>'");
    if (n < 0 || m < 0) parse_fail(reader.lineNo, "negative counts");

    std::vector<std::vector<int>> adj((size_t)n);
    long long seen = 0;
    while (reader.next(line)) {
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> tag >> u >> v) || tag != "e") parse_fail(reader.lineNo, "bad edge line");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            parse_fail(reader.lineNo, "bad edge endpoints");
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++seen;
    }
    if (seen != m) throw std::runtime_error("graph edge count mismatch");
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

void write_colouring(std::ostream& os, const Colouring& col) {
    os << "colouring " << col.colourOf.size() << " " << col.numColours << "\n";
    for (size_t v = 0; v < col.colourOf.size(); ++v)
        os << v << " " << col.colourOf[v] << "\n";
}

Colouring read_colouring(std::istream& is) {
    LineReader reader{is};
    std::string line;
    if (!reader.next(line)) parse_fail(reader.lineNo, "missing colouring header");
    std::istringstream head(line);
    std::string tag;
    long long n = 0;
    int c = 0;
    if (!(head >> tag >> n >> c) || tag != "colouring")
        parse_fail(reader.lineNo, "expected 'colouring <n> <c>'");
    if (n < 0 || c < 1) parse_fail(reader.lineNo, "bad counts");

    Colouring col;
    col.numColours = c;
    col.colourOf.assign((size_t)n, -1);
    while (reader.next(line)) {
        std::istringstream ls(line);
        long long v;
        int colour;
        if (!(ls >> v >> colour)) parse_fail(reader.lineNo, "bad colouring line");
        if (v < 0 || v >= n || colour < 0 || colour >= c)
            parse_fail(reader.lineNo, "vertex or colour out of range");
        col.colourOf[(size_t)v] = colour;
    }
    for (size_t v = 0; v < col.colourOf.size(); ++v)
        if (col.colourOf[v] < 0)
            throw std::runtime_error("colouring misses vertex " + std::to_string(v));
    return col;
}

void write_witness(std::ostream& os, const WitnessReport& report) {
    os << "witness " << report.k << " " << report.colours << " " << report.params.r << " "
       << report.params.d << " " << report.params.seed << " " << (report.verified ? 1 : 0)
       << "\n";
    for (size_t k = 0; k < report.path.size(); ++k)
        os << report.path[k] << (k + 1 == report.path.size() ? "" : " ");
    os << "\n";
    const Telemetry& t = report.telemetry;
    os << "telemetry " << t.kPrime << " " << t.q1 << " " << t.x << " " << t.q2 << " " << t.s
       << " " << t.retries << "\n";
}

WitnessReport read_witness(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("missing witness header");
    std::istringstream head(line);
    std::string tag;
    WitnessReport report;
    int verified = 0;
    if (!(head >> tag >> report.k >> report.colours >> report.params.r >> report.params.d >>
          report.params.seed >> verified) ||
        tag != "witness")
        throw std::runtime_error("expected witness header");
    report.verified = verified != 0;

    if (!std::getline(is, line)) throw std::runtime_error("missing witness path line");
    std::istringstream ps(line);
    int v;
    while (ps >> v) report.path.push_back(v);

    if (!std::getline(is, line)) throw std::runtime_error("missing telemetry line");
    std::istringstream ts(line);
    Telemetry& t = report.telemetry;
    if (!(ts >> tag >> t.kPrime >> t.q1 >> t.x >> t.q2 >> t.s >> t.retries) ||
        tag != "telemetry")
        throw std::runtime_error("expected telemetry line");
    report.retriesUsed = t.retries;
    return report;
}

void save_text(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << contents;
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string load_text(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace linwit
