#pragma once

// Text formats.
//
// Graph:   `p bsplit <n1> <n2> <m>` then m lines `e <u> <v>` with
//          1 <= u <= n1 (left), 1 <= v <= n2 (right); `c ...` lines are
//          comments; duplicate edges and out-of-range indices are errors.
// Witness: one op per line -- `del L<u> R<v>`, `add L<u> R<v>`,
//          `split L<u>[.path] | <copy-1 neighbors> | <copy-2 neighbors>`.

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsplit/edit.hpp"
#include "bsplit/graph.hpp"

namespace bsplit {

struct ParseError : std::runtime_error {
    long line;
    ParseError(long ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

inline std::optional<VertexId> try_parse_vertex_token(const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R')) return std::nullopt;
    VertexId v;
    v.side = tok[0] == 'L' ? Side::left : Side::right;
    std::size_t i = 1;
    auto read_int = [&]() -> std::optional<int> {
        std::size_t start = i;
        long long x = 0;
        while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') {
            x = x * 10 + (tok[i] - '0');
            if (x > 1'000'000'000) return std::nullopt;
            ++i;
        }
        if (i == start) return std::nullopt;
        return (int)x;
    };
    auto origin = read_int();
    if (!origin || *origin < 1) return std::nullopt;
    v.origin = *origin;
    while (i < tok.size()) {
        if (tok[i] != '.') return std::nullopt;
        ++i;
        auto b = read_int();
        if (!b || (*b != 1 && *b != 2)) return std::nullopt;
        v.path.push_back((std::uint8_t)*b);
    }
    return v;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

}  // namespace detail

inline BipartiteGraph parse_graph(std::istream& in) {
    std::string line;
    long ln = 0;
    long long n1 = -1, n2 = -1, m = -1, seen_edges = 0;
    BipartiteGraph g;
    while (std::getline(in, line)) {
        ++ln;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n1 >= 0) throw ParseError(ln, "duplicate problem line");
            if (toks.size() != 5 || toks[1] != "bsplit") throw ParseError(ln, "expected `p bsplit <n1> <n2> <m>`");
            try {
                n1 = std::stoll(toks[2]);
                n2 = std::stoll(toks[3]);
                m = std::stoll(toks[4]);
            } catch (...) {
                throw ParseError(ln, "malformed problem line");
            }
            if (n1 < 0 || n2 < 0 || m < 0) throw ParseError(ln, "negative counts in problem line");
            g = BipartiteGraph((int)n1, (int)n2);
        } else if (toks[0] == "e") {
            if (n1 < 0) throw ParseError(ln, "edge before problem line");
            if (toks.size() != 3) throw ParseError(ln, "expected `e <u> <v>`");
            long long u, v;
            try {
                u = std::stoll(toks[1]);
                v = std::stoll(toks[2]);
            } catch (...) {
                throw ParseError(ln, "malformed edge line");
            }
            if (u < 1 || u > n1) throw ParseError(ln, "left index out of range: " + toks[1]);
            if (v < 1 || v > n2) throw ParseError(ln, "right index out of range: " + toks[2]);
            if (++seen_edges > m) throw ParseError(ln, "more edges than declared");
            try {
                g.add_edge((int)u, (int)v);
            } catch (const std::invalid_argument&) {
                throw ParseError(ln, "duplicate edge " + toks[1] + " " + toks[2]);
            }
        } else {
            throw ParseError(ln, "unknown line type `" + toks[0] + "`");
        }
    }
    if (n1 < 0) throw ParseError(ln, "missing problem line");
    if (seen_edges != m)
        throw ParseError(ln, "declared " + std::to_string(m) + " edges, found " + std::to_string(seen_edges));
    return g;
}

inline BipartiteGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

// Canonical serialization: problem line, then edges sorted by (u, v).
// Split copies cannot be expressed; non-contiguous originals are renumbered
// (order-preserving) with `c`-comments recording the previous ids.
inline std::string serialize_graph(const BipartiteGraph& g, const std::vector<std::string>& comments = {}) {
    CompactResult c = compact_originals(g);
    std::ostringstream out;
    for (const std::string& s : comments) out << "c " << s << "\n";
    auto contiguous = [](const std::vector<int>& ids) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (ids[i] != (int)i + 1) return false;
        return true;
    };
    for (Side side : {Side::left, Side::right}) {
        const std::vector<int>& ids = side == Side::left ? c.left_ids : c.right_ids;
        if (!contiguous(ids)) {
            out << "c " << (side == Side::left ? "left" : "right") << "-ids";
            for (int x : ids) out << ' ' << x;
            out << "\n";
        }
    }
    out << "p bsplit " << c.graph.count(Side::left) << ' ' << c.graph.count(Side::right) << ' '
        << c.graph.edge_count() << "\n";
    for (const auto& [u, v] : c.graph.edges()) out << "e " << u.origin << ' ' << v.origin << "\n";
    return out.str();
}

inline EditSequence parse_witness(std::istream& in) {
    EditSequence seq;
    std::string line;
    long ln = 0;
    auto vertex = [&](const std::string& tok) {
        auto v = try_parse_vertex_token(tok);
        if (!v) throw ParseError(ln, "bad vertex token `" + tok + "`");
        return *v;
    };
    while (std::getline(in, line)) {
        ++ln;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "del" || toks[0] == "add") {
            if (toks.size() != 3) throw ParseError(ln, "expected `" + toks[0] + " <u> <v>`");
            VertexId u = vertex(toks[1]), v = vertex(toks[2]);
            if (u.side == v.side) throw ParseError(ln, "endpoints on the same side");
            seq.push_back(toks[0] == "del" ? EditOp::deletion(u, v) : EditOp::insertion(u, v));
        } else if (toks[0] == "split") {
            if (toks.size() < 3) throw ParseError(ln, "expected `split <v> | <part1> | <part2>`");
            VertexId target = vertex(toks[1]);
            if (toks[2] != "|") throw ParseError(ln, "expected `|` after split target");
            std::vector<VertexId> p1, p2;
            std::size_t i = 3;
            for (; i < toks.size() && toks[i] != "|"; ++i) p1.push_back(vertex(toks[i]));
            if (i == toks.size()) throw ParseError(ln, "missing second `|` in split");
            for (++i; i < toks.size(); ++i) {
                if (toks[i] == "|") throw ParseError(ln, "too many `|` in split");
                p2.push_back(vertex(toks[i]));
            }
            seq.push_back(EditOp::split_vertex(target, std::move(p1), std::move(p2)));
        } else {
            throw ParseError(ln, "unknown op `" + toks[0] + "`");
        }
    }
    return seq;
}

inline EditSequence parse_witness_string(const std::string& text) {
    std::istringstream in(text);
    return parse_witness(in);
}

inline std::string serialize_witness(const EditSequence& seq) {
    std::ostringstream out;
    for (const EditOp& op : seq) {
        const VertexId& l = op.u.side == Side::left ? op.u : op.v;
        const VertexId& r = op.u.side == Side::left ? op.v : op.u;
        switch (op.kind) {
            case EditOp::Kind::delete_edge: out << "del " << l.str() << ' ' << r.str(); break;
            case EditOp::Kind::insert_edge: out << "add " << l.str() << ' ' << r.str(); break;
            case EditOp::Kind::split: {
                out << "split " << op.u.str() << " |";
                for (const VertexId& w : op.part1) out << ' ' << w.str();
                out << " |";
                for (const VertexId& w : op.part2) out << ' ' << w.str();
                break;
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace bsplit
