#include "radsq/representation.hpp"

#include <random>
#include <sstream>

#include "radsq/errors.hpp"

namespace radsq {

using namespace linalg;

std::size_t Representation::total_dim() const {
    std::size_t s = 0;
    for (std::size_t d : dims)
        s += d;
    return s;
}

bool Representation::satisfies_relations() const {
    const auto& arrows = quiver->arrow_list();
    if (dims.size() != quiver->size() || maps.size() != arrows.size())
        return false;
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (maps[a].rows() != dims[arrows[a].to] || maps[a].cols() != dims[arrows[a].from])
            return false;
    for (std::size_t a = 0; a < arrows.size(); ++a)
        for (std::size_t b = 0; b < arrows.size(); ++b)
            if (arrows[a].to == arrows[b].from && !multiply(field, maps[b], maps[a]).is_zero())
                return false;
    return true;
}

bool Representation::is_semisimple() const {
    for (const Matrix& m : maps)
        if (!m.is_zero())
            return false;
    return true;
}

bool operator==(const Representation& a, const Representation& b) {
    return *a.quiver == *b.quiver && a.field == b.field && a.dims == b.dims && a.maps == b.maps;
}

bool ModuleMap::commutes() const {
    const Field& f = source.field;
    const auto& arrows = source.quiver->arrow_list();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const Arrow& arr = arrows[a];
        Matrix lhs = multiply(f, target.maps[a], components[arr.from]);
        Matrix rhs = multiply(f, components[arr.to], source.maps[a]);
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

bool ModuleMap::is_injective() const {
    for (std::size_t v = 0; v < components.size(); ++v)
        if (rank(source.field, components[v]) != source.dims[v])
            return false;
    return true;
}

bool ModuleMap::is_surjective() const {
    for (std::size_t v = 0; v < components.size(); ++v)
        if (rank(source.field, components[v]) != target.dims[v])
            return false;
    return true;
}

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
    ModuleMap out{first.source, second.target, {}};
    for (std::size_t v = 0; v < first.components.size(); ++v)
        out.components.push_back(
            multiply(first.source.field, second.components[v], first.components[v]));
    return out;
}

namespace {

std::vector<Matrix> zero_maps(const Quiver& q, const std::vector<std::size_t>& dims) {
    std::vector<Matrix> maps;
    for (const Arrow& a : q.arrow_list())
        maps.emplace_back(dims[a.to], dims[a.from]);
    return maps;
}

} // namespace

ProjectiveSum projective_sum(const QuiverRef& q, const Field& f, std::vector<Vertex> labels) {
    const std::size_t n = q->size();
    ProjectiveSum ps;
    ps.labels = std::move(labels);
    std::vector<std::size_t> dims(n, 0);
    for (Vertex s : ps.labels) {
        std::vector<std::size_t> off(n);
        for (Vertex w = 0; w < n; ++w) {
            off[w] = dims[w];
            dims[w] += (s == w ? 1 : 0) + q->arrows(s, w);
        }
        ps.offsets.push_back(std::move(off));
    }
    std::vector<Matrix> maps = zero_maps(*q, dims);
    const auto& arrows = q->arrow_list();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        for (std::size_t s = 0; s < ps.labels.size(); ++s)
            if (ps.labels[s] == arrows[a].from)
                maps[a](ps.arrow_coordinate(s, arrows[a].to, arrows[a].index),
                        ps.top_coordinate(s)) = 1;
    ps.module = Representation{q, f, std::move(dims), std::move(maps)};
    return ps;
}

Representation build_projective(const QuiverRef& q, const Field& f, Vertex i) {
    return projective_sum(q, f, {i}).module;
}

Representation build_regular(const QuiverRef& q, const Field& f) {
    std::vector<Vertex> all(q->size());
    for (Vertex v = 0; v < q->size(); ++v)
        all[v] = v;
    return projective_sum(q, f, all).module;
}

Representation build_injective(const QuiverRef& q, const Field& f, Vertex i) {
    // Dual of the projective P(i) over the opposite quiver, read back on q.
    Representation p = build_projective(share(opposite(*q)), f, i);
    const auto& arrows = q->arrow_list();
    Representation out{q, f, p.dims, {}};
    for (const Arrow& a : arrows)
        out.maps.push_back(transpose(p.map(a.to, a.from, a.index)));
    return out;
}

Representation build_semisimple(const QuiverRef& q, const Field& f, const SimpleVector& v) {
    std::vector<std::size_t> dims(v.begin(), v.end());
    if (dims.size() != q->size())
        throw UsageError("semisimple multiplicity vector has the wrong length");
    std::vector<Matrix> maps = zero_maps(*q, dims);
    return Representation{q, f, std::move(dims), std::move(maps)};
}

Representation build_simple(const QuiverRef& q, const Field& f, Vertex i) {
    return build_semisimple(q, f, unit_vector(q->size(), i));
}

Representation zero_module(const QuiverRef& q, const Field& f) {
    return build_semisimple(q, f, SimpleVector(q->size(), 0));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    std::vector<std::size_t> dims(a.dims.size());
    for (std::size_t v = 0; v < dims.size(); ++v)
        dims[v] = a.dims[v] + b.dims[v];
    Representation out{a.quiver, a.field, dims, zero_maps(*a.quiver, dims)};
    const auto& arrows = a.quiver->arrow_list();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        Matrix& m = out.maps[k];
        const Arrow& arr = arrows[k];
        for (std::size_t r = 0; r < a.dims[arr.to]; ++r)
            for (std::size_t c = 0; c < a.dims[arr.from]; ++c)
                m(r, c) = a.maps[k](r, c);
        for (std::size_t r = 0; r < b.dims[arr.to]; ++r)
            for (std::size_t c = 0; c < b.dims[arr.from]; ++c)
                m(a.dims[arr.to] + r, a.dims[arr.from] + c) = b.maps[k](r, c);
    }
    return out;
}

Submodule submodule(const Representation& m, std::vector<Matrix> bases) {
    const Field& f = m.field;
    Submodule sub{{m.quiver, f, {}, {}}, m, std::move(bases)};
    for (const Matrix& b : sub.bases)
        sub.module.dims.push_back(b.cols());
    for (std::size_t a = 0; a < m.quiver->arrow_count(); ++a) {
        const Arrow& arr = m.quiver->arrow_list()[a];
        Matrix image = multiply(f, m.maps[a], sub.bases[arr.from]);
        auto x = solve(f, sub.bases[arr.to], image);
        if (!x)
            throw EngineError("subspace is not closed under the arrow action");
        sub.module.maps.push_back(std::move(*x));
    }
    return sub;
}

Quotient quotient(const Representation& m, const std::vector<Matrix>& sub_bases) {
    const Field& f = m.field;
    const std::size_t n = m.quiver->size();
    std::vector<Matrix> complements(n), projections(n);
    std::vector<std::size_t> dims(n);
    for (Vertex v = 0; v < n; ++v) {
        complements[v] = complement_basis(f, sub_bases[v]);
        Matrix full = inverse(f, hconcat(sub_bases[v], complements[v]));
        std::size_t k = sub_bases[v].cols();
        dims[v] = complements[v].cols();
        Matrix proj(dims[v], m.dims[v]);
        for (std::size_t r = 0; r < dims[v]; ++r)
            for (std::size_t c = 0; c < m.dims[v]; ++c)
                proj(r, c) = full(k + r, c);
        projections[v] = std::move(proj);
    }
    Representation out{m.quiver, f, dims, {}};
    for (std::size_t a = 0; a < m.quiver->arrow_count(); ++a) {
        const Arrow& arr = m.quiver->arrow_list()[a];
        out.maps.push_back(
            multiply(f, projections[arr.to], multiply(f, m.maps[a], complements[arr.from])));
    }
    return Quotient{out, ModuleMap{m, out, std::move(projections)}};
}

Submodule kernel(const ModuleMap& fm) {
    std::vector<Matrix> bases;
    for (const Matrix& c : fm.components)
        bases.push_back(kernel_basis(fm.source.field, c));
    return submodule(fm.source, std::move(bases));
}

Submodule image(const ModuleMap& fm) {
    std::vector<Matrix> bases;
    for (const Matrix& c : fm.components)
        bases.push_back(column_space_basis(fm.source.field, c));
    return submodule(fm.target, std::move(bases));
}

Quotient cokernel(const ModuleMap& fm) { return quotient(fm.target, image(fm).bases); }

Submodule radical(const Representation& m) {
    const std::size_t n = m.quiver->size();
    std::vector<Matrix> spans(n);
    for (Vertex v = 0; v < n; ++v)
        spans[v] = Matrix(m.dims[v], 0);
    const auto& arrows = m.quiver->arrow_list();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        spans[arrows[a].to] = hconcat(spans[arrows[a].to], m.maps[a]);
    for (Vertex v = 0; v < n; ++v)
        spans[v] = column_space_basis(m.field, spans[v]);
    return submodule(m, std::move(spans));
}

SimpleVector dim_vector(const Representation& m) { return {m.dims.begin(), m.dims.end()}; }

SimpleVector top_vector(const Representation& m) {
    Submodule rad = radical(m);
    SimpleVector top(m.dims.size());
    for (std::size_t v = 0; v < top.size(); ++v)
        top[v] = m.dims[v] - rad.module.dims[v];
    return top;
}

SimpleVector socle_vector(const Representation& m) {
    const std::size_t n = m.quiver->size();
    std::vector<Matrix> stacks(n);
    for (Vertex v = 0; v < n; ++v)
        stacks[v] = Matrix(0, m.dims[v]);
    const auto& arrows = m.quiver->arrow_list();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        stacks[arrows[a].from] = vconcat(stacks[arrows[a].from], m.maps[a]);
    SimpleVector soc(n);
    for (Vertex v = 0; v < n; ++v)
        soc[v] = m.dims[v] - rank(m.field, stacks[v]);
    return soc;
}

RadicalTopSocle radical_top_socle(const Representation& m) {
    RadicalTopSocle r{radical(m), {}, socle_vector(m)};
    r.top.resize(m.dims.size());
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        r.top[v] = m.dims[v] - r.rad.module.dims[v];
    return r;
}

ProjectiveCover projective_cover(const Representation& m) {
    const Field& f = m.field;
    const std::size_t n = m.quiver->size();
    Submodule rad = radical(m);
    std::vector<Vertex> labels;
    std::vector<std::vector<Scalar>> generators;
    for (Vertex v = 0; v < n; ++v) {
        Matrix comp = complement_basis(f, rad.bases[v]);
        for (std::size_t c = 0; c < comp.cols(); ++c) {
            labels.push_back(v);
            generators.push_back(comp.column(c));
        }
    }
    ProjectiveSum ps = projective_sum(m.quiver, f, labels);
    std::vector<Matrix> comps(n);
    for (Vertex v = 0; v < n; ++v)
        comps[v] = Matrix(m.dims[v], ps.module.dims[v]);
    for (std::size_t s = 0; s < labels.size(); ++s) {
        Vertex u = labels[s];
        comps[u].set_column(ps.top_coordinate(s), generators[s]);
        Matrix g(m.dims[u], 1, generators[s]);
        for (Vertex w = 0; w < n; ++w)
            for (std::size_t k = 0; k < m.quiver->arrows(u, w); ++k)
                comps[w].set_column(ps.arrow_coordinate(s, w, k),
                                    multiply(f, m.map(u, w, k), g).column(0));
    }
    ModuleMap map{ps.module, m, std::move(comps)};
    return ProjectiveCover{std::move(ps), std::move(map), std::move(generators)};
}

Submodule syzygy_rep(const Representation& m) { return kernel(projective_cover(m).map); }

HomSpace hom_space(const Representation& m, const Representation& nn) {
    const Field& f = m.field;
    const std::size_t n = m.quiver->size();
    std::vector<std::size_t> offset(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        offset[v + 1] = offset[v] + nn.dims[v] * m.dims[v];
    const std::size_t unknowns = offset[n];
    auto var = [&](Vertex v, std::size_t r, std::size_t c) {
        return offset[v] + r * m.dims[v] + c;
    };

    std::size_t equations = 0;
    for (const Arrow& a : m.quiver->arrow_list())
        equations += nn.dims[a.to] * m.dims[a.from];
    Matrix sys(equations, unknowns);
    std::size_t row = 0;
    const auto& arrows = m.quiver->arrow_list();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const Vertex u = arrows[k].from, w = arrows[k].to;
        const Matrix& na = nn.maps[k];
        const Matrix& ma = m.maps[k];
        // (N(a) F_u - F_w M(a))[x][y] = 0
        for (std::size_t x = 0; x < nn.dims[w]; ++x)
            for (std::size_t y = 0; y < m.dims[u]; ++y, ++row) {
                for (std::size_t z = 0; z < nn.dims[u]; ++z)
                    if (Scalar c = na(x, z))
                        sys(row, var(u, z, y)) = f.add(sys(row, var(u, z, y)), c);
                for (std::size_t z = 0; z < m.dims[w]; ++z)
                    if (Scalar c = ma(z, y))
                        sys(row, var(w, x, z)) = f.sub(sys(row, var(w, x, z)), c);
            }
    }
    Matrix basis = kernel_basis(f, sys);
    HomSpace hs;
    for (std::size_t b = 0; b < basis.cols(); ++b) {
        ModuleMap fm{m, nn, {}};
        for (Vertex v = 0; v < n; ++v) {
            Matrix comp(nn.dims[v], m.dims[v]);
            for (std::size_t r = 0; r < nn.dims[v]; ++r)
                for (std::size_t c = 0; c < m.dims[v]; ++c)
                    comp(r, c) = basis(var(v, r, c), b);
            fm.components.push_back(std::move(comp));
        }
        hs.basis.push_back(std::move(fm));
    }
    return hs;
}

std::vector<Scalar> flatten(const ModuleMap& fm) {
    std::vector<Scalar> out;
    for (const Matrix& c : fm.components)
        out.insert(out.end(), c.data().begin(), c.data().end());
    return out;
}

bool is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed) {
    if (!(*a.quiver == *b.quiver) || a.dims != b.dims)
        return false;
    const Field& f = a.field;
    HomSpace hs = hom_space(a, b);
    const std::size_t k = hs.dim();
    if (a.total_dim() == 0)
        return true;
    if (k == 0)
        return false;

    auto try_combination = [&](const std::vector<Scalar>& coeff) {
        for (std::size_t v = 0; v < a.dims.size(); ++v) {
            if (a.dims[v] == 0)
                continue;
            Matrix comp(a.dims[v], a.dims[v]);
            for (std::size_t i = 0; i < k; ++i)
                if (coeff[i] != 0)
                    comp = add(f, comp, scaled(f, hs.basis[i].components[v], coeff[i]));
            if (!is_invertible(f, comp))
                return false;
        }
        return true;
    };

    std::uint64_t space = 1;
    bool exhaustive = k <= 4;
    for (std::size_t i = 0; i < k && exhaustive; ++i) {
        space *= f.prime();
        if (space > 100000)
            exhaustive = false;
    }
    std::vector<Scalar> coeff(k, 0);
    if (exhaustive) {
        for (std::uint64_t idx = 1; idx < space; ++idx) {
            std::uint64_t x = idx;
            for (std::size_t i = 0; i < k; ++i) {
                coeff[i] = static_cast<Scalar>(x % f.prime());
                x /= f.prime();
            }
            if (try_combination(coeff))
                return true;
        }
        return false;
    }
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        for (auto& c : coeff)
            c = static_cast<Scalar>(rng() % f.prime());
        if (try_combination(coeff))
            return true;
    }
    return false;
}

std::string dump_representation(const Representation& m) {
    std::ostringstream os;
    os << "field " << m.field.prime() << '\n' << "dims";
    for (std::size_t d : m.dims)
        os << ' ' << d;
    os << '\n';
    const auto& arrows = m.quiver->arrow_list();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const Matrix& mat = m.maps[a];
        os << "arrow " << arrows[a].from << ' ' << arrows[a].to << ' ' << arrows[a].index << ' '
           << mat.rows() << ' ' << mat.cols() << '\n';
        os << to_string(mat);
    }
    return os.str();
}

Representation parse_representation_dump(std::string_view text, const QuiverRef& q) {
    std::istringstream is{std::string(text)};
    std::string word;
    Scalar p = 0;
    if (!(is >> word >> p) || word != "field")
        throw UsageError("representation dump: expected 'field <p>'");
    Representation m{q, Field(p), {}, {}};
    if (!(is >> word) || word != "dims")
        throw UsageError("representation dump: expected 'dims'");
    for (Vertex v = 0; v < q->size(); ++v) {
        std::size_t d = 0;
        if (!(is >> d))
            throw UsageError("representation dump: truncated dims");
        m.dims.push_back(d);
    }
    for (const Arrow& a : q->arrow_list()) {
        Vertex from = 0, to = 0;
        std::size_t index = 0, rows = 0, cols = 0;
        if (!(is >> word >> from >> to >> index >> rows >> cols) || word != "arrow" ||
            from != a.from || to != a.to || index != a.index || rows != m.dims[a.to] ||
            cols != m.dims[a.from])
            throw UsageError("representation dump: bad arrow header");
        Matrix mat(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                long long x = 0;
                if (!(is >> x))
                    throw UsageError("representation dump: truncated matrix");
                mat(r, c) = m.field.from_int(x);
            }
        m.maps.push_back(std::move(mat));
    }
    if (!m.satisfies_relations())
        throw UsageError("representation dump: relations J^2 = 0 violated");
    return m;
}

} // namespace radsq
