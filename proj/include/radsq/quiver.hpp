#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radsq {

using Vertex = std::size_t;

/// One arrow of a multigraph: the index-th of the adj[from][to] parallel arrows.
struct Arrow {
    Vertex from;
    Vertex to;
    std::size_t index;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Gabriel quiver of kQ/J^2, stored as arrow multiplicities. adj[i][j] is the
/// number of arrows i -> j, which equals dim Ext^1(S(i), S(j)).
///
/// Arrows are enumerated in a fixed order: source vertex major, then target,
/// then parallel index. Representations use the same order for their arrow
/// matrices.
class Quiver {
public:
    explicit Quiver(std::vector<std::vector<unsigned>> adj);

    std::size_t size() const noexcept { return adj_.size(); }
    unsigned arrows(Vertex from, Vertex to) const { return adj_.at(from).at(to); }
    const std::vector<std::vector<unsigned>>& adjacency() const noexcept { return adj_; }

    unsigned out_degree(Vertex v) const;
    unsigned in_degree(Vertex v) const;

    const std::vector<Arrow>& arrow_list() const noexcept { return arrow_list_; }
    std::size_t arrow_count() const noexcept { return arrow_list_.size(); }
    /// Position of an arrow in arrow_list().
    std::size_t arrow_position(Vertex from, Vertex to, std::size_t index) const;

    friend bool operator==(const Quiver& a, const Quiver& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<unsigned>> adj_;
    std::vector<Arrow> arrow_list_;
    std::vector<std::size_t> offsets_; // n*n first positions
};

/// Cycle shape Delta(n, t) realized by m parallel back arrows, t = m^2.
struct DeltaShape {
    std::size_t n;
    unsigned m;
    unsigned t;
    /// cycle[k] is the original vertex carrying canonical label k. The bundle
    /// of m arrows runs cycle[n-1] -> cycle[0].
    std::vector<Vertex> cycle;

    friend bool operator==(const DeltaShape&, const DeltaShape&) = default;
};

/// Parses the quiver text format: first non-comment line holds n, then n rows
/// of n non-negative integers. Lines starting with '#' and blank lines are
/// skipped.
Quiver parse_quiver(std::string_view text);
std::string format_quiver(const Quiver& q);

/// Weak connectivity of the underlying undirected multigraph.
bool is_connected(const Quiver& q);

/// Vertices with zero row; S(j) is projective exactly for these.
std::vector<Vertex> sinks(const Quiver& q);
/// Vertices with zero column; S(j) is injective exactly for these.
std::vector<Vertex> sources(const Quiver& q);
bool is_sink(const Quiver& q, Vertex v);
bool is_source(const Quiver& q, Vertex v);

Quiver opposite(const Quiver& q);

/// Oriented n-cycle 0 -> 1 -> ... -> n-1 with m parallel arrows n-1 -> 0.
Quiver delta_quiver(std::size_t n, unsigned m);

std::optional<DeltaShape> detect_delta_shape(const Quiver& q);

bool is_self_injective(const Quiver& q);

/// The connected semisimple case: one vertex, no loops.
bool is_simple_ring(const Quiver& q);

/// Whether P(t) is injective: its radical is a single arrow t -> s that is
/// also the only arrow into s. An isolated vertex (P = S = I) also counts.
bool proj_is_injective(const Quiver& q, Vertex t);

/// The pair (a, b) valuing arrows from -> to: a = length of soc P(from) and
/// b = length of I(to)/soc. The arrow value is a*b.
std::pair<unsigned, unsigned> arrow_value(const Quiver& q, Vertex from, Vertex to);

/// The single successor of v when its row is a positive multiple of a unit
/// vector, as (successor, multiplicity).
std::optional<std::pair<Vertex, unsigned>> unique_successor(const Quiver& q, Vertex v);

} // namespace radsq
