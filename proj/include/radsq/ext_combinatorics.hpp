#pragma once

// Integer-only Ext calculus for simples over kQ/J^2. Syzygies of simples are
// semisimple, so everything reduces to multiplicity vectors and the adjacency
// matrix. Dimensions here do not depend on the base field.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "radsq/quiver.hpp"

namespace radsq {

using Dim = std::uint64_t;

/// Semisimple module as multiplicities of the simples S(0..n-1).
using SimpleVector = std::vector<Dim>;

SimpleVector unit_vector(std::size_t n, Vertex j);

struct ExtProfile {
    Vertex vertex;
    /// dims[i] = dim Ext^i(S(vertex), Lambda), i = 0..depth.
    std::vector<Dim> dims;

    friend bool operator==(const ExtProfile&, const ExtProfile&) = default;
};

struct ChainReport {
    Vertex start;
    std::size_t depth;
    std::vector<Vertex> chain;          ///< j_0 .. j_d
    std::vector<bool> syzygy_simple;    ///< i < d: Omega S(j_i) simple
    std::vector<bool> non_projective;   ///< i <= d
    std::vector<bool> cover_injective;  ///< i < d: P(j_i) injective
    bool pairwise_distinct = false;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

struct Theorem2Record {
    bool self_injective_not_simple = false;
    bool exists_simple_vanishing_to_n = false;
    std::optional<Vertex> witness;

    friend bool operator==(const Theorem2Record&, const Theorem2Record&) = default;
};

struct Theorem3bRecord {
    bool is_delta = false;
    std::optional<Vertex> unique_vertex;
    Dim ext_n = 0; ///< dim Ext^n(S(unique_vertex), Lambda)
};

/// Omega of a semisimple module: (Omega v)[l] = sum_j v[j] * adj[j][l].
SimpleVector syzygy_vector(const Quiver& q, const SimpleVector& v);

/// Closed form for dim Ext^1(S(j), P(i)): adj[j][i] if i is a sink, else
/// <row j, row i> - [i == j].
Dim ext1_simple_vs_proj_dim(const Quiver& q, Vertex j, Vertex i);

/// Signature of the closed form, so harness tests can inject a corrupted one.
using Ext1Formula = std::function<Dim(const Quiver&, Vertex, Vertex)>;

Dim ext1_simple_vs_lambda_dim(const Quiver& q, Vertex j);
Dim hom_simple_lambda_dim(const Quiver& q, Vertex j);

ExtProfile ext_profile(const Quiver& q, Vertex j, std::size_t depth);

/// Least i in 0..n with Ext^i(S(j), Lambda) != 0. Throws TheoremViolation when
/// all of them vanish.
std::size_t nakayama_bound(const Quiver& q, Vertex j);

/// Follows the syzygy chain of S(j) for d steps and checks the chain
/// conclusions. Throws UsageError when the preconditions fail; assertion
/// failures are collected in the report.
ChainReport theorem1_chain(const Quiver& q, Vertex j, std::size_t d);

/// Whether (j, d) satisfies the chain preconditions.
bool theorem1_applicable(const Quiver& q, Vertex j, std::size_t d);

/// Flags (i) and (iii). Throws TheoremViolation when they differ.
Theorem2Record theorem2_classify(const Quiver& q);

/// Uniqueness of the vanishing vertex on a Delta-shaped quiver with t > 1.
/// Throws UsageError on non-Delta input and TheoremViolation on failure.
Theorem3bRecord theorem3b_check(const Quiver& q);

/// Lemma-level statements checked over every vertex of q. Each returns the
/// list of violations found (empty when the statement holds).
std::vector<std::string> lemma2_violations(const Quiver& q);
std::vector<std::string> lemma4_violations(const Quiver& q);

} // namespace radsq
