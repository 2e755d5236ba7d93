#include "radsq/path_matrix.hpp"

#include "radsq/errors.hpp"

namespace radsq {

bool PathEntry::is_zero() const {
    if (trivial != 0)
        return false;
    for (Scalar a : arrows)
        if (a != 0)
            return false;
    return true;
}

PathMatrix::PathMatrix(QuiverRef q, Field f, std::vector<Vertex> row_labels,
                       std::vector<Vertex> col_labels)
    : quiver_(std::move(q)), field_(f), rows_(std::move(row_labels)),
      cols_(std::move(col_labels)) {
    entries_.reserve(rows_.size() * cols_.size());
    for (Vertex r : rows_)
        for (Vertex c : cols_)
            entries_.push_back(PathEntry{0, std::vector<Scalar>(quiver_->arrows(r, c), 0)});
}

bool PathMatrix::is_radical() const {
    for (const PathEntry& e : entries_)
        if (e.trivial != 0)
            return false;
    return true;
}

bool operator==(const PathMatrix& a, const PathMatrix& b) {
    return *a.quiver_ == *b.quiver_ && a.field_ == b.field_ && a.rows_ == b.rows_ &&
           a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

// Image of the top of source summand c inside the target, at vertex cols[c].
std::vector<Scalar> column_image(const PathMatrix& pm, const ProjectiveSum& target,
                                 std::size_t c) {
    const Vertex u = pm.col_labels()[c];
    std::vector<Scalar> v(target.module.dims[u], 0);
    for (std::size_t r = 0; r < pm.rows(); ++r) {
        const PathEntry& e = pm.entry(r, c);
        if (pm.row_labels()[r] == u)
            v[target.top_coordinate(r)] = e.trivial;
        for (std::size_t k = 0; k < e.arrows.size(); ++k)
            v[target.arrow_coordinate(r, u, k)] = e.arrows[k];
    }
    return v;
}

} // namespace

ModuleMap to_module_map(const PathMatrix& pm) {
    const QuiverRef& q = pm.quiver();
    const std::size_t n = q->size();
    ProjectiveSum src = projective_sum(q, pm.field(), pm.col_labels());
    ProjectiveSum tgt = projective_sum(q, pm.field(), pm.row_labels());
    std::vector<Matrix> comps(n);
    for (Vertex w = 0; w < n; ++w)
        comps[w] = Matrix(tgt.module.dims[w], src.module.dims[w]);
    for (std::size_t c = 0; c < pm.cols(); ++c) {
        const Vertex u = pm.col_labels()[c];
        comps[u].set_column(src.top_coordinate(c), column_image(pm, tgt, c));
        // beta * (sum_r entry(r,c)) keeps only the trivial parts.
        for (Vertex w = 0; w < n; ++w)
            for (std::size_t k = 0; k < q->arrows(u, w); ++k)
                for (std::size_t r = 0; r < pm.rows(); ++r)
                    if (pm.row_labels()[r] == u)
                        comps[w](tgt.arrow_coordinate(r, w, k), src.arrow_coordinate(c, w, k)) =
                            pm.entry(r, c).trivial;
    }
    return ModuleMap{src.module, tgt.module, std::move(comps)};
}

PathMatrix to_path_matrix(const ProjectiveSum& source, const ProjectiveSum& target,
                          const ModuleMap& map) {
    const QuiverRef& q = source.module.quiver;
    PathMatrix pm(q, source.module.field, target.labels, source.labels);
    for (std::size_t c = 0; c < source.labels.size(); ++c) {
        const Vertex u = source.labels[c];
        std::vector<Scalar> v = map.components[u].column(source.top_coordinate(c));
        for (std::size_t r = 0; r < target.labels.size(); ++r) {
            PathEntry& e = pm.entry(r, c);
            if (target.labels[r] == u)
                e.trivial = v[target.top_coordinate(r)];
            for (std::size_t k = 0; k < e.arrows.size(); ++k)
                e.arrows[k] = v[target.arrow_coordinate(r, u, k)];
        }
    }
    if (!(to_module_map(pm).components == map.components))
        throw EngineError("to_path_matrix: map is not determined by its generator images");
    return pm;
}

PathMatrix transpose(const PathMatrix& pm, const QuiverRef& opposite_quiver) {
    PathMatrix out(opposite_quiver, pm.field(), pm.col_labels(), pm.row_labels());
    for (std::size_t r = 0; r < pm.rows(); ++r)
        for (std::size_t c = 0; c < pm.cols(); ++c)
            out.entry(c, r) = pm.entry(r, c);
    return out;
}

PathMatrix transpose(const PathMatrix& pm) {
    return transpose(pm, share(opposite(*pm.quiver())));
}

Representation cokernel(const PathMatrix& pm) { return cokernel(to_module_map(pm)).module; }

std::size_t cokernel_dimension(const PathMatrix& pm) {
    const QuiverRef& q = pm.quiver();
    const Field& f = pm.field();
    const std::size_t n = q->size();
    ProjectiveSum tgt = projective_sum(q, f, pm.row_labels());
    std::vector<std::size_t> base(n + 1, 0);
    for (Vertex w = 0; w < n; ++w)
        base[w + 1] = base[w] + tgt.module.dims[w];
    const std::size_t total = base[n];

    // Generators of the image: each column image x and every beta * x.
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t c = 0; c < pm.cols(); ++c) {
        const Vertex u = pm.col_labels()[c];
        std::vector<Scalar> x(total, 0);
        for (std::size_t r = 0; r < pm.rows(); ++r) {
            const PathEntry& e = pm.entry(r, c);
            if (pm.row_labels()[r] == u)
                x[base[u] + tgt.top_coordinate(r)] = e.trivial;
            for (std::size_t k = 0; k < e.arrows.size(); ++k)
                x[base[u] + tgt.arrow_coordinate(r, u, k)] = e.arrows[k];
        }
        gens.push_back(std::move(x));
        for (Vertex w = 0; w < n; ++w)
            for (std::size_t k = 0; k < q->arrows(u, w); ++k) {
                std::vector<Scalar> y(total, 0);
                for (std::size_t r = 0; r < pm.rows(); ++r)
                    if (pm.row_labels()[r] == u)
                        y[base[w] + tgt.arrow_coordinate(r, w, k)] = pm.entry(r, c).trivial;
                gens.push_back(std::move(y));
            }
    }
    Matrix m(gens.size(), total);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < total; ++j)
            m(i, j) = gens[i][j];
    return total - linalg::rank(f, m);
}

} // namespace radsq
