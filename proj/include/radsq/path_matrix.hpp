#pragma once

#include <vector>

#include "radsq/representation.hpp"

namespace radsq {

/// F_p-combination of the paths of length <= 1 from one vertex to another:
/// the trivial path (only when the endpoints agree) and the parallel arrows.
struct PathEntry {
    Scalar trivial = 0;
    std::vector<Scalar> arrows; ///< one coefficient per parallel arrow

    bool is_zero() const;
    friend bool operator==(const PathEntry&, const PathEntry&) = default;
};

/// A homomorphism between sums of indecomposable projectives,
///     sum_c P(col_labels[c]) -> sum_r P(row_labels[r]),
/// sending the top of summand c to sum_r entry(r, c) taken inside P(row_labels[r]).
/// Entry (r, c) therefore combines paths from row_labels[r] to col_labels[c].
class PathMatrix {
public:
    PathMatrix(QuiverRef q, Field f, std::vector<Vertex> row_labels,
               std::vector<Vertex> col_labels);

    const QuiverRef& quiver() const noexcept { return quiver_; }
    const Field& field() const noexcept { return field_; }
    const std::vector<Vertex>& row_labels() const noexcept { return rows_; }
    const std::vector<Vertex>& col_labels() const noexcept { return cols_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_.size(); }

    PathEntry& entry(std::size_t r, std::size_t c) { return entries_[r * cols_.size() + c]; }
    const PathEntry& entry(std::size_t r, std::size_t c) const {
        return entries_[r * cols_.size() + c];
    }

    /// No trivial-path coefficients: the image lies in the radical.
    bool is_radical() const;

    friend bool operator==(const PathMatrix&, const PathMatrix&);

private:
    QuiverRef quiver_;
    Field field_;
    std::vector<Vertex> rows_;
    std::vector<Vertex> cols_;
    std::vector<PathEntry> entries_;
};

/// The module map between the explicit projective sums.
ModuleMap to_module_map(const PathMatrix& pm);

/// Reads a map between projective sums back into path form. Throws
/// EngineError when `map` is not a homomorphism of the given projective sums.
PathMatrix to_path_matrix(const ProjectiveSum& source, const ProjectiveSum& target,
                          const ModuleMap& map);

/// Hom(-, Lambda) applied to the map: transpose the matrix and reverse every
/// path. The result lives over the opposite quiver.
PathMatrix transpose(const PathMatrix& pm, const QuiverRef& opposite_quiver);
PathMatrix transpose(const PathMatrix& pm);

/// Cokernel of the map as a representation.
Representation cokernel(const PathMatrix& pm);

/// dim of the cokernel computed directly from the entries: the image is the
/// span of the column images and their arrow translates inside the target.
std::size_t cokernel_dimension(const PathMatrix& pm);

} // namespace radsq
