#include "brimsim/gset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "brimsim/errors.hpp"

namespace brimsim {

namespace {

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

struct Tokenizer {
    std::string_view rest;
    bool next(std::string_view& tok) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) return false;
        auto end = rest.find_first_of(" \t\r", start);
        if (end == std::string_view::npos) end = rest.size();
        tok = rest.substr(start, end - start);
        rest = rest.substr(end);
        return true;
    }
};

std::int64_t parse_index(std::string_view tok, std::size_t line, const char* what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.begin(), tok.end(), v);
    if (ec != std::errc{} || p != tok.end())
        throw ParseError(std::string("bad ") + what + " '" + std::string(tok) + "'", line);
    return v;
}

double parse_weight(std::string_view tok, std::size_t line) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.begin(), tok.end(), v);
    if (ec != std::errc{} || p != tok.end() || !std::isfinite(v))
        throw ParseError("bad edge weight '" + std::string(tok) + "'", line);
    return v;
}

} // namespace

Graph parse_gset(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    // header: first non-blank line holds "n m"
    std::int64_t n = 0, m = 0;
    for (;;) {
        if (!std::getline(in, line)) throw ParseError("missing header line", lineno);
        ++lineno;
        if (!blank(line)) break;
    }
    {
        Tokenizer tk{line};
        std::string_view a, b, extra;
        if (!tk.next(a) || !tk.next(b) || tk.next(extra))
            throw ParseError("header must hold exactly two integers 'n m'", lineno);
        n = parse_index(a, lineno, "vertex count");
        m = parse_index(b, lineno, "edge count");
        if (n < 1) throw ParseError("vertex count must be >= 1", lineno);
        if (m < 0) throw ParseError("edge count must be >= 0", lineno);
    }

    std::vector<Edge> edges;
    edges.reserve(std::size_t(m));
    std::int64_t seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        Tokenizer tk{line};
        std::string_view a, b, c, extra;
        if (!tk.next(a) || !tk.next(b) || !tk.next(c) || tk.next(extra))
            throw ParseError("edge line must hold 'i j w'", lineno);
        const std::int64_t i = parse_index(a, lineno, "vertex index");
        const std::int64_t j = parse_index(b, lineno, "vertex index");
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError("vertex index out of range [1, " + std::to_string(n) + "]",
                             lineno);
        if (i == j) throw ParseError("self-loop on vertex " + std::to_string(i), lineno);
        edges.push_back({std::uint32_t(i - 1), std::uint32_t(j - 1), parse_weight(c, lineno)});
        ++seen;
    }
    if (seen != m)
        throw ParseError("header promised " + std::to_string(m) + " edges, file holds " +
                             std::to_string(seen),
                         lineno);
    return Graph(std::uint32_t(n), std::move(edges));
}

Graph parse_gset(const std::string& text) {
    std::istringstream in(text);
    return parse_gset(in);
}

Graph load_gset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    return parse_gset(in);
}

namespace {

void print_weight(std::ostream& out, double w) {
    if (w == std::floor(w) && std::abs(w) < 1e15) {
        out << std::int64_t(w);
    } else {
        char buf[32];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, w);
        out.write(buf, p - buf);
    }
}

} // namespace

void serialize_gset(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) {
        out << (e.i + 1) << ' ' << (e.j + 1) << ' ';
        print_weight(out, e.w);
        out << '\n';
    }
}

std::string serialize_gset(const Graph& g) {
    std::ostringstream out;
    serialize_gset(g, out);
    return out.str();
}

} // namespace brimsim
