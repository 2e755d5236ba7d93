#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "radsq/ext_combinatorics.hpp"
#include "radsq/field.hpp"
#include "radsq/matrix.hpp"
#include "radsq/quiver.hpp"

namespace radsq {

using QuiverRef = std::shared_ptr<const Quiver>;

inline QuiverRef share(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

/// Finite-dimensional module over kQ/J^2: a vector space per vertex and one
/// matrix per arrow, ordered as Quiver::arrow_list(). The matrix of an arrow
/// i -> j has shape dims[j] x dims[i] (column vectors).
struct Representation {
    QuiverRef quiver;
    Field field;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;

    std::size_t total_dim() const;
    const Matrix& map(Vertex from, Vertex to, std::size_t index) const {
        return maps[quiver->arrow_position(from, to, index)];
    }
    bool is_zero() const { return total_dim() == 0; }

    /// Shapes agree with dims and every length-2 path acts as zero.
    bool satisfies_relations() const;
    bool is_semisimple() const;

    friend bool operator==(const Representation& a, const Representation& b);
};

/// Homomorphism given by one matrix per vertex, shape target.dims[v] x source.dims[v].
struct ModuleMap {
    Representation source;
    Representation target;
    std::vector<Matrix> components;

    bool commutes() const;
    bool is_injective() const;
    bool is_surjective() const;
};

ModuleMap compose(const ModuleMap& second, const ModuleMap& first);

/// Submodule presented by a basis at each vertex (columns of bases[v]).
struct Submodule {
    Representation module; ///< the submodule in its own basis
    Representation ambient;
    std::vector<Matrix> bases;

    ModuleMap inclusion() const { return {module, ambient, bases}; }
};

struct Quotient {
    Representation module;
    ModuleMap projection;
};

/// Direct sum of indecomposable projectives P(labels[0]) + P(labels[1]) + ...
///
/// Basis of the sum at vertex w, summand-major: for each summand s, first the
/// trivial path e_s (when labels[s] == w), then the arrows labels[s] -> w in
/// index order.
struct ProjectiveSum {
    std::vector<Vertex> labels;
    Representation module;
    std::vector<std::vector<std::size_t>> offsets; ///< offsets[s][w]

    std::size_t top_coordinate(std::size_t s) const { return offsets[s][labels[s]]; }
    std::size_t arrow_coordinate(std::size_t s, Vertex to, std::size_t index) const {
        return offsets[s][to] + (labels[s] == to ? 1 : 0) + index;
    }
};

ProjectiveSum projective_sum(const QuiverRef& q, const Field& f, std::vector<Vertex> labels);

Representation build_projective(const QuiverRef& q, const Field& f, Vertex i);
Representation build_injective(const QuiverRef& q, const Field& f, Vertex i);
Representation build_simple(const QuiverRef& q, const Field& f, Vertex i);
/// Semisimple module with multiplicities v.
Representation build_semisimple(const QuiverRef& q, const Field& f, const SimpleVector& v);
/// Lambda as a left module over itself.
Representation build_regular(const QuiverRef& q, const Field& f);

Representation zero_module(const QuiverRef& q, const Field& f);
Representation direct_sum(const Representation& a, const Representation& b);

Submodule submodule(const Representation& m, std::vector<Matrix> bases);
Quotient quotient(const Representation& m, const std::vector<Matrix>& sub_bases);

Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);
Quotient cokernel(const ModuleMap& f);

Submodule radical(const Representation& m);
SimpleVector dim_vector(const Representation& m);
SimpleVector top_vector(const Representation& m);
SimpleVector socle_vector(const Representation& m);

struct RadicalTopSocle {
    Submodule rad;
    SimpleVector top;
    SimpleVector soc;
};
RadicalTopSocle radical_top_socle(const Representation& m);

struct ProjectiveCover {
    ProjectiveSum projective;
    ModuleMap map;                 ///< onto the module
    std::vector<std::vector<Scalar>> generators; ///< image of each top element
};

/// Minimal projective cover: one summand per basis vector of a complement of
/// rad M, chosen from unit vectors in index order.
ProjectiveCover projective_cover(const Representation& m);

/// Omega M as the kernel of the projective cover.
Submodule syzygy_rep(const Representation& m);

struct HomSpace {
    std::vector<ModuleMap> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Basis of Hom(M, N) from the linear commutation system.
HomSpace hom_space(const Representation& m, const Representation& n);

/// The map as a single vector, vertex-major, row-major per component.
std::vector<Scalar> flatten(const ModuleMap& f);

/// Isomorphism search: exhaustive over small hom-spaces, random combinations
/// otherwise. Only intended for tiny modules.
bool is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed = 1);

/// Dump format: "field p", "dims ...", then for every arrow a header
/// "arrow from to index rows cols" followed by rows lines of entries.
std::string dump_representation(const Representation& m);
Representation parse_representation_dump(std::string_view text, const QuiverRef& q);

} // namespace radsq
