#pragma once

// Text formats. Graphs: a header line "n m" followed by m lines "u v"
// with u < v, 0-based, written in lexicographic order. Poles: the same,
// followed by one line "STUBS s1 s2 [s3]" listing the stub attachment
// vertices in stub order. DOT export draws stubs as dashed half-edges to
// phantom nodes stub0..stub2. All output is ASCII and newline-terminated.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubictsp/error.hpp"
#include "cubictsp/graph.hpp"
#include "cubictsp/pole.hpp"

namespace cubictsp {
namespace detail {

struct LineReader {
    std::istream& in;
    std::string source;
    int lineno = 0;

    // Next non-empty line; empty return means end of input.
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r\n");
            if (i == std::string::npos) continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(source + ":" + std::to_string(lineno) + ": " + msg);
    }
};

inline std::vector<long long> parse_ints(LineReader& r, const std::string& line, int expected,
                                         const std::string& what) {
    std::istringstream iss(line);
    std::vector<long long> out;
    long long x;
    while (iss >> x) out.push_back(x);
    std::string trailing;
    if (!iss.eof() && (iss.clear(), iss >> trailing))
        r.fail("unexpected token '" + trailing + "' in " + what);
    if (static_cast<int>(out.size()) != expected)
        r.fail("expected " + what + " (" + std::to_string(expected) + " integers), got " +
               std::to_string(out.size()));
    return out;
}

inline Graph read_graph_body(LineReader& r, std::string& pending, bool& has_pending) {
    std::string line;
    if (!r.next(line)) r.fail("missing header line 'n m'");
    auto header = parse_ints(r, line, 2, "header 'n m'");
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0 || n > 10'000'000 || m > 30'000'000) r.fail("implausible header values");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(m) + " edge lines, got " +
                                  std::to_string(i));
        auto uv = parse_ints(r, line, 2, "edge 'u v'");
        if (uv[0] >= uv[1]) r.fail("edges must satisfy u < v");
        edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    has_pending = r.next(pending);
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const StructuralError& e) {
        throw ParseError(r.source + ": " + e.what());
    }
}

}  // namespace detail

inline Graph read_graph(std::istream& in, const std::string& source = "<input>") {
    detail::LineReader r{in, source};
    std::string pending;
    bool has_pending = false;
    Graph g = detail::read_graph_body(r, pending, has_pending);
    if (has_pending) {
        if (pending.find("STUBS") != std::string::npos)
            r.fail("found a STUBS line; this is a pole file, not a graph file");
        r.fail("trailing content after edge list");
    }
    return g;
}

inline Pole read_pole(std::istream& in, const std::string& source = "<input>") {
    detail::LineReader r{in, source};
    std::string pending;
    bool has_pending = false;
    Graph g = detail::read_graph_body(r, pending, has_pending);
    if (!has_pending) r.fail("missing STUBS line");
    std::istringstream iss(pending);
    std::string tag;
    iss >> tag;
    if (tag != "STUBS") r.fail("expected STUBS line, got '" + pending + "'");
    std::vector<int> stubs;
    long long s;
    while (iss >> s) stubs.push_back(static_cast<int>(s));
    if (stubs.size() != 2 && stubs.size() != 3) r.fail("STUBS line must list 2 or 3 vertices");
    std::string rest;
    bool trailing = r.next(rest);
    if (trailing) r.fail("trailing content after STUBS line");
    try {
        return Pole(std::move(g), std::move(stubs));
    } catch (const Error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_pole(std::ostream& out, const Pole& p) {
    write_graph(out, p.inner());
    out << "STUBS";
    for (int s : p.stubs()) out << ' ' << s;
    out << '\n';
}

inline void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G") {
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

inline void write_dot(std::ostream& out, const Pole& p, const std::string& name = "P") {
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < p.vertex_count(); ++v) out << "  " << v << ";\n";
    for (int i = 0; i < p.arity(); ++i)
        out << "  stub" << i << " [shape=plaintext, label=\"stub" << i << "\"];\n";
    for (const auto& [u, v] : p.inner().edges()) out << "  " << u << " -- " << v << ";\n";
    for (int i = 0; i < p.arity(); ++i)
        out << "  " << p.stubs()[i] << " -- stub" << i << " [style=dashed];\n";
    out << "}\n";
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return read_graph(in, path);
}

inline Pole read_pole_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return read_pole(in, path);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    write_graph(out, g);
}

inline void write_pole_file(const std::string& path, const Pole& p) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    write_pole(out, p);
}

}  // namespace cubictsp
