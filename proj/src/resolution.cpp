#include "radsq/resolution.hpp"

#include "radsq/errors.hpp"

namespace radsq {

ResolutionPrefix::ResolutionPrefix(Representation m) : module_(std::move(m)) {}

bool ResolutionPrefix::extend_to(std::size_t k, std::size_t max_summands) {
    while (terms_.size() <= k) {
        const std::size_t step = terms_.size();
        const Representation& current = step == 0 ? module_ : syzygies_.back().module;
        // The number of summands is the length of the top, known before building.
        SimpleVector top = top_vector(current);
        std::size_t count = 0;
        for (Dim d : top)
            count += d;
        if (count > max_summands)
            return false;

        ProjectiveCover cover = projective_cover(current);
        if (step == 0) {
            augmentation_ = cover.map;
        } else {
            ModuleMap into_prev = compose(syzygies_.back().inclusion(), cover.map);
            differentials_.push_back(to_path_matrix(cover.projective, sums_.back(), into_prev));
        }
        syzygies_.push_back(kernel(cover.map));
        terms_.push_back(cover.projective.labels);
        sums_.push_back(std::move(cover.projective));
        covers_.push_back(std::move(cover.map));
    }
    return true;
}

SimpleVector ResolutionPrefix::term_tops(std::size_t k) const {
    SimpleVector v(module_.quiver->size(), 0);
    for (Vertex x : terms_.at(k))
        ++v[x];
    return v;
}

bool ResolutionPrefix::verify_exact_and_minimal() const {
    const Field& f = module_.field;
    for (std::size_t k = 0; k < covers_.size(); ++k) {
        const ModuleMap& cover = covers_[k];
        if (!cover.is_surjective())
            return false;
        const Submodule& ker = syzygies_[k];
        Submodule rad = radical(sums_[k].module);
        for (std::size_t v = 0; v < ker.bases.size(); ++v) {
            // Kernel dimension matches rank-nullity and sits inside the radical.
            if (ker.bases[v].cols() + linalg::rank(f, cover.components[v]) !=
                cover.source.dims[v])
                return false;
            if (!linalg::multiply(f, cover.components[v], ker.bases[v]).is_zero())
                return false;
            if (!linalg::solve(f, rad.bases[v], ker.bases[v]))
                return false;
        }
        // im d_{k+1} = ker of the previous cover, and d_k d_{k+1} = 0.
        if (k >= 1) {
            ModuleMap d = to_module_map(differentials_[k - 1]);
            Submodule im = image(d);
            const Submodule& prev_ker = syzygies_[k - 1];
            for (std::size_t v = 0; v < im.bases.size(); ++v) {
                if (im.bases[v].cols() != prev_ker.bases[v].cols())
                    return false;
                if (!linalg::solve(f, prev_ker.bases[v], im.bases[v]))
                    return false;
            }
            if (k >= 2) {
                ModuleMap prev = to_module_map(differentials_[k - 2]);
                for (const Matrix& c : compose(prev, d).components)
                    if (!c.is_zero())
                        return false;
            }
        }
    }
    return true;
}

ExtComputer::ExtComputer(ResolutionPrefix& resolution, Representation target)
    : resolution_(resolution), target_(std::move(target)) {}

std::size_t ExtComputer::hom_dim(std::size_t k) const {
    std::size_t d = 0;
    for (Vertex v : resolution_.term(k))
        d += target_.dims[v];
    return d;
}

Matrix ExtComputer::dual_differential(std::size_t k) const {
    const Field& f = target_.field;
    const PathMatrix& d = resolution_.differential(k);
    const auto& prev = d.row_labels(); // P_{k-1}
    const auto& cur = d.col_labels();  // P_k
    std::vector<std::size_t> prev_off(prev.size() + 1, 0), cur_off(cur.size() + 1, 0);
    for (std::size_t s = 0; s < prev.size(); ++s)
        prev_off[s + 1] = prev_off[s] + target_.dims[prev[s]];
    for (std::size_t r = 0; r < cur.size(); ++r)
        cur_off[r + 1] = cur_off[r] + target_.dims[cur[r]];

    Matrix out(cur_off.back(), prev_off.back());
    for (std::size_t r = 0; r < cur.size(); ++r)
        for (std::size_t s = 0; s < prev.size(); ++s) {
            const PathEntry& e = d.entry(s, r);
            if (e.is_zero())
                continue;
            const Vertex from = prev[s], to = cur[r];
            // phi(e_s) = x in N_from  maps to  entry . x in N_to
            if (from == to && e.trivial != 0)
                for (std::size_t i = 0; i < target_.dims[to]; ++i)
                    out(cur_off[r] + i, prev_off[s] + i) =
                        f.add(out(cur_off[r] + i, prev_off[s] + i), e.trivial);
            for (std::size_t k2 = 0; k2 < e.arrows.size(); ++k2) {
                if (e.arrows[k2] == 0)
                    continue;
                const Matrix& a = target_.map(from, to, k2);
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j)
                        if (a(i, j) != 0)
                            out(cur_off[r] + i, prev_off[s] + j) =
                                f.add(out(cur_off[r] + i, prev_off[s] + j),
                                      f.mul(e.arrows[k2], a(i, j)));
            }
        }
    return out;
}

std::size_t ExtComputer::rank_of(std::size_t k) {
    if (k == 0)
        return 0;
    if (ranks_.size() <= k)
        ranks_.resize(k + 1);
    if (!ranks_[k])
        ranks_[k] = linalg::rank(target_.field, dual_differential(k));
    return *ranks_[k];
}

std::optional<Dim> ExtComputer::try_ext(std::size_t i, std::size_t max_summands) {
    if (!resolution_.extend_to(i + 1, max_summands))
        return std::nullopt;
    return hom_dim(i) - rank_of(i + 1) - rank_of(i);
}

Dim ExtComputer::ext(std::size_t i) {
    auto v = try_ext(i);
    if (!v)
        throw EngineError("resolution extension failed");
    return *v;
}

Dim ext_dim(ResolutionPrefix& cache, const Representation& n, std::size_t i) {
    ExtComputer ec(cache, n);
    return ec.ext(i);
}

Dim ext_dim(const Representation& m, const Representation& n, std::size_t i) {
    ResolutionPrefix res(m);
    return ext_dim(res, n, i);
}

} // namespace radsq
