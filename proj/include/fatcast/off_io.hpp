#pragma once

#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fatcast/polyhedron.hpp"

namespace fatcast {
namespace detail {

/// Splits a stream into whitespace-separated tokens, dropping '#' comments.
inline std::vector<std::string> off_tokens(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

inline long off_int(const std::string& tok, const char* what) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) {
        throw ParseError(std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
    return v;
}

inline double off_double(const std::string& tok, const char* what) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected number for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) {
        throw ParseError(std::string("expected number for ") + what + ", got '" + tok + "'");
    }
    return v;
}

}  // namespace detail

/// Reads an ASCII OFF model. Vertices are listed counterclockwise from
/// outside; the edge count in the header is ignored (0 is accepted).
/// Throws ParseError on malformed input and InvalidPolyhedron when the data
/// does not describe a closed convex polyhedron.
inline ConvexPolyhedron read_off(std::istream& in, double tol = 1e-9) {
    const auto tokens = detail::off_tokens(in);
    size_t i = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (i >= tokens.size()) throw ParseError(std::string("unexpected end of input, wanted ") + what);
        return tokens[i++];
    };

    if (next("OFF header") != "OFF") throw ParseError("missing OFF header");
    const long nv = detail::off_int(next("vertex count"), "vertex count");
    const long nf = detail::off_int(next("facet count"), "facet count");
    detail::off_int(next("edge count"), "edge count");
    if (nv < 0 || nf < 0) throw ParseError("negative count in header");

    std::vector<Point3> vertices;
    vertices.reserve(static_cast<size_t>(nv));
    for (long v = 0; v < nv; ++v) {
        const double x = detail::off_double(next("vertex coordinate"), "vertex coordinate");
        const double y = detail::off_double(next("vertex coordinate"), "vertex coordinate");
        const double z = detail::off_double(next("vertex coordinate"), "vertex coordinate");
        vertices.push_back({x, y, z});
    }

    std::vector<std::vector<int>> facets;
    facets.reserve(static_cast<size_t>(nf));
    for (long f = 0; f < nf; ++f) {
        const long k = detail::off_int(next("facet size"), "facet size");
        if (k < 3) throw ParseError("facet with fewer than 3 vertices");
        std::vector<int> loop;
        loop.reserve(static_cast<size_t>(k));
        for (long j = 0; j < k; ++j) {
            const long idx = detail::off_int(next("facet index"), "facet index");
            if (idx < 0 || idx >= nv) throw ParseError("facet index out of range");
            loop.push_back(static_cast<int>(idx));
        }
        facets.push_back(std::move(loop));
    }
    if (i != tokens.size()) throw ParseError("trailing data after facets");

    return ConvexPolyhedron::from_data(std::move(vertices), std::move(facets), tol);
}

inline ConvexPolyhedron read_off_file(const std::string& path, double tol = 1e-9) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_off(in, tol);
}

/// Writes ASCII OFF with full double precision.
inline void write_off(std::ostream& out, const ConvexPolyhedron& p) {
    out << "OFF\n"
        << p.vertex_count() << ' ' << p.facet_count() << ' ' << p.edge_count() << '\n';
    out << std::setprecision(17);
    for (const auto& v : p.vertices()) {
        out << v.x << ' ' << v.y << ' ' << v.z << '\n';
    }
    for (const auto& loop : p.facets()) {
        out << loop.size();
        for (int idx : loop) out << ' ' << idx;
        out << '\n';
    }
}

inline void write_off_file(const std::string& path, const ConvexPolyhedron& p) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_off(out, p);
    if (!out) throw ParseError("write to '" + path + "' failed");
}

}  // namespace fatcast
