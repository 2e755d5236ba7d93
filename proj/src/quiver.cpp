#include "radsq/quiver.hpp"

#include <charconv>
#include <sstream>

#include "radsq/errors.hpp"

namespace radsq {

Quiver::Quiver(std::vector<std::vector<unsigned>> adj) : adj_(std::move(adj)) {
    const std::size_t n = adj_.size();
    if (n == 0)
        throw UsageError("a quiver needs at least one vertex");
    for (const auto& row : adj_)
        if (row.size() != n)
            throw UsageError("adjacency matrix must be square");
    offsets_.resize(n * n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) {
            offsets_[i * n + j] = arrow_list_.size();
            for (std::size_t k = 0; k < adj_[i][j]; ++k)
                arrow_list_.push_back({i, j, k});
        }
}

unsigned Quiver::out_degree(Vertex v) const {
    unsigned s = 0;
    for (unsigned x : adj_.at(v))
        s += x;
    return s;
}

unsigned Quiver::in_degree(Vertex v) const {
    unsigned s = 0;
    for (const auto& row : adj_)
        s += row.at(v);
    return s;
}

std::size_t Quiver::arrow_position(Vertex from, Vertex to, std::size_t index) const {
    if (index >= arrows(from, to))
        throw UsageError("no such arrow");
    return offsets_[from * size() + to] + index;
}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long to_integer(const Token& tok, int line, ParseError::Kind kind) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        throw ParseError(kind, "expected an integer, found '" + std::string(tok.text) + "'", line,
                         tok.column);
    return v;
}

} // namespace

Quiver parse_quiver(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#')
            lines.emplace_back(lineno, line);
        pos = end + 1;
    }
    if (lines.empty())
        throw ParseError(ParseError::Kind::MalformedHeader, "missing vertex count", lineno, 1);

    auto header = split(lines[0].second);
    if (header.size() != 1)
        throw ParseError(ParseError::Kind::MalformedHeader, "header must be a single integer n",
                         lines[0].first, header.empty() ? 1 : header.back().column);
    long long n = to_integer(header[0], lines[0].first, ParseError::Kind::MalformedHeader);
    if (n < 1)
        throw ParseError(ParseError::Kind::MalformedHeader, "vertex count must be at least 1",
                         lines[0].first, header[0].column);
    if (lines.size() - 1 != static_cast<std::size_t>(n)) {
        int at = lines.size() - 1 > static_cast<std::size_t>(n) ? lines[n + 1].first : lineno;
        throw ParseError(ParseError::Kind::RowCount,
                         "expected " + std::to_string(n) + " rows, found " +
                             std::to_string(lines.size() - 1),
                         at, 1);
    }

    std::vector<std::vector<unsigned>> adj(n, std::vector<unsigned>(n));
    for (long long r = 0; r < n; ++r) {
        auto [line, content] = lines[r + 1];
        auto toks = split(content);
        if (toks.size() != static_cast<std::size_t>(n))
            throw ParseError(ParseError::Kind::RowLength,
                             "row " + std::to_string(r) + " has " + std::to_string(toks.size()) +
                                 " entries, expected " + std::to_string(n),
                             line, toks.empty() ? 1 : toks.back().column);
        for (long long c = 0; c < n; ++c) {
            long long v = to_integer(toks[c], line, ParseError::Kind::NonNumeric);
            if (v < 0)
                throw ParseError(ParseError::Kind::NegativeEntry,
                                 "negative entry at row " + std::to_string(r), line,
                                 toks[c].column);
            adj[r][c] = static_cast<unsigned>(v);
        }
    }
    return Quiver(std::move(adj));
}

std::string format_quiver(const Quiver& q) {
    std::ostringstream os;
    os << q.size() << '\n';
    for (const auto& row : q.adjacency()) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

bool is_connected(const Quiver& q) {
    const std::size_t n = q.size();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w < n; ++w) {
            if (seen[w] || (q.arrows(v, w) == 0 && q.arrows(w, v) == 0))
                continue;
            seen[w] = true;
            ++count;
            stack.push_back(w);
        }
    }
    return count == n;
}

bool is_sink(const Quiver& q, Vertex v) { return q.out_degree(v) == 0; }
bool is_source(const Quiver& q, Vertex v) { return q.in_degree(v) == 0; }

std::vector<Vertex> sinks(const Quiver& q) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < q.size(); ++v)
        if (is_sink(q, v))
            out.push_back(v);
    return out;
}

std::vector<Vertex> sources(const Quiver& q) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < q.size(); ++v)
        if (is_source(q, v))
            out.push_back(v);
    return out;
}

Quiver opposite(const Quiver& q) {
    const std::size_t n = q.size();
    std::vector<std::vector<unsigned>> adj(n, std::vector<unsigned>(n));
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            adj[j][i] = q.arrows(i, j);
    return Quiver(std::move(adj));
}

Quiver delta_quiver(std::size_t n, unsigned m) {
    if (n < 1 || m < 1)
        throw UsageError("delta_quiver needs n >= 1 and m >= 1");
    std::vector<std::vector<unsigned>> adj(n, std::vector<unsigned>(n, 0));
    for (std::size_t i = 0; i + 1 < n; ++i)
        adj[i][i + 1] = 1;
    adj[n - 1][0] += m;
    return Quiver(std::move(adj));
}

std::optional<std::pair<Vertex, unsigned>> unique_successor(const Quiver& q, Vertex v) {
    std::optional<std::pair<Vertex, unsigned>> found;
    for (Vertex w = 0; w < q.size(); ++w) {
        unsigned k = q.arrows(v, w);
        if (k == 0)
            continue;
        if (found)
            return std::nullopt;
        found = std::pair{w, k};
    }
    return found;
}

std::optional<DeltaShape> detect_delta_shape(const Quiver& q) {
    const std::size_t n = q.size();
    std::vector<Vertex> succ(n);
    std::optional<Vertex> heavy;
    unsigned m = 1;
    for (Vertex v = 0; v < n; ++v) {
        auto s = unique_successor(q, v);
        if (!s)
            return std::nullopt;
        succ[v] = s->first;
        if (s->second > 1) {
            if (heavy)
                return std::nullopt;
            heavy = v;
            m = s->second;
        }
    }
    Vertex start = heavy ? succ[*heavy] : 0;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> cycle;
    Vertex v = start;
    for (std::size_t k = 0; k < n; ++k) {
        if (seen[v])
            return std::nullopt;
        seen[v] = true;
        cycle.push_back(v);
        v = succ[v];
    }
    if (v != start)
        return std::nullopt;
    return DeltaShape{n, m, m * m, std::move(cycle)};
}

bool is_self_injective(const Quiver& q) {
    auto shape = detect_delta_shape(q);
    return shape && shape->t == 1;
}

bool is_simple_ring(const Quiver& q) { return q.size() == 1 && q.arrows(0, 0) == 0; }

bool proj_is_injective(const Quiver& q, Vertex t) {
    if (is_sink(q, t))
        return is_source(q, t);
    auto s = unique_successor(q, t);
    if (!s || s->second != 1)
        return false;
    return q.in_degree(s->first) == 1;
}

std::pair<unsigned, unsigned> arrow_value(const Quiver& q, Vertex from, Vertex to) {
    if (q.arrows(from, to) == 0)
        throw UsageError("no arrow " + std::to_string(from) + " -> " + std::to_string(to));
    return {q.out_degree(from), q.in_degree(to)};
}

} // namespace radsq
