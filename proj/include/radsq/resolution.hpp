#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radsq/path_matrix.hpp"

namespace radsq {

/// Lazily extended minimal projective resolution
///     ... -> P_2 -> P_1 -> P_0 -> M -> 0.
/// differential(k) is the PathMatrix of P_k -> P_{k-1} (k >= 1).
class ResolutionPrefix {
public:
    explicit ResolutionPrefix(Representation m);

    const Representation& module() const noexcept { return module_; }

    /// Computes terms up to P_k. Returns false (and stops) when a term would
    /// have more than max_summands summands.
    bool extend_to(std::size_t k, std::size_t max_summands = SIZE_MAX);
    std::size_t length() const noexcept { return terms_.size(); }

    const std::vector<Vertex>& term(std::size_t k) const { return terms_.at(k); }
    SimpleVector term_tops(std::size_t k) const;
    const PathMatrix& differential(std::size_t k) const { return differentials_.at(k - 1); }
    const ModuleMap& augmentation() const { return augmentation_; }
    /// Omega^k M as a submodule of P_{k-1} (k >= 1), or of nothing for k = 0.
    const Submodule& syzygy(std::size_t k) const { return syzygies_.at(k - 1); }

    /// Each syzygy is the exact kernel of the previous cover and lies in the
    /// radical of its term.
    bool verify_exact_and_minimal() const;

private:
    Representation module_;
    std::vector<std::vector<Vertex>> terms_;
    std::vector<ProjectiveSum> sums_;
    std::vector<PathMatrix> differentials_;
    std::vector<Submodule> syzygies_;
    std::vector<ModuleMap> covers_; // P_k -> Omega^k M
    ModuleMap augmentation_;
};

/// dim Hom(P_k, N) matrices of the complex Hom(P_*, N), computed on demand.
class ExtComputer {
public:
    ExtComputer(ResolutionPrefix& resolution, Representation target);

    /// dim Ext^i(M, N), or nullopt when the resolution would exceed the cap.
    std::optional<Dim> try_ext(std::size_t i, std::size_t max_summands = SIZE_MAX);
    Dim ext(std::size_t i);

    /// Matrix of Hom(P_{k-1}, N) -> Hom(P_k, N), precomposition with d_k.
    Matrix dual_differential(std::size_t k) const;
    std::size_t hom_dim(std::size_t k) const;

private:
    std::size_t rank_of(std::size_t k);

    ResolutionPrefix& resolution_;
    Representation target_;
    std::vector<std::optional<std::size_t>> ranks_;
};

Dim ext_dim(const Representation& m, const Representation& n, std::size_t i);
Dim ext_dim(ResolutionPrefix& cache, const Representation& n, std::size_t i);

} // namespace radsq
