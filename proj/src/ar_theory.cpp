#include "radsq/ar_theory.hpp"

#include "radsq/errors.hpp"

namespace radsq {

using namespace linalg;

Representation dualize(const Representation& m, const QuiverRef& opposite_quiver) {
    Representation out{opposite_quiver, m.field, m.dims, {}};
    for (const Arrow& a : opposite_quiver->arrow_list())
        out.maps.push_back(transpose(m.map(a.to, a.from, a.index)));
    return out;
}

Representation dualize(const Representation& m) { return dualize(m, share(opposite(*m.quiver))); }

ModuleMap dualize(const ModuleMap& f, const QuiverRef& opposite_quiver) {
    ModuleMap out{dualize(f.target, opposite_quiver), dualize(f.source, opposite_quiver), {}};
    for (const Matrix& c : f.components)
        out.components.push_back(transpose(c));
    return out;
}

PathMatrix minimal_presentation_pathmatrix(const Representation& m) {
    ResolutionPrefix res(m);
    res.extend_to(1);
    return res.differential(1);
}

Representation transpose_module(const Representation& m, const QuiverRef& opposite_quiver) {
    return cokernel(transpose(minimal_presentation_pathmatrix(m), opposite_quiver));
}

Representation transpose_module(const Representation& m) {
    return transpose_module(m, share(opposite(*m.quiver)));
}

Representation tau_inverse(const Representation& m) {
    QuiverRef opp = share(opposite(*m.quiver));
    return transpose_module(dualize(m, opp), m.quiver);
}

Representation tau(const Representation& m) {
    QuiverRef opp = share(opposite(*m.quiver));
    return dualize(transpose_module(m, opp), m.quiver);
}

InjectiveEnvelope injective_envelope(const Representation& n) {
    QuiverRef opp = share(opposite(*n.quiver));
    ProjectiveCover cover = projective_cover(dualize(n, opp));
    ModuleMap iota = dualize(cover.map, n.quiver);
    return InjectiveEnvelope{cover.projective.labels, std::move(iota)};
}

bool is_projective(const Representation& m) { return syzygy_rep(m).module.is_zero(); }

namespace {

Dim sum(const SimpleVector& v) {
    Dim s = 0;
    for (Dim x : v)
        s += x;
    return s;
}

DeltaShape require_delta(const Quiver& q) {
    auto shape = detect_delta_shape(q);
    if (!is_connected(q) || !shape || shape->t <= 1)
        throw UsageError("quiver is not of shape Delta(n,t) with t > 1");
    return *shape;
}

} // namespace

Theorem3cRecord theorem3c_module(const QuiverRef& q, const Field& f) {
    const DeltaShape shape = require_delta(*q);
    const std::size_t n = shape.n;
    const Vertex v0 = shape.cycle[0], vlast = shape.cycle[n - 1];

    Theorem3cRecord rec{shape, tau_inverse(build_simple(q, f, v0)), {}};
    const Representation& m = rec.module;
    rec.length = m.total_dim();
    rec.closed_form_length = shape.t * shape.t + shape.t - 1;
    {
        QuiverRef opp = share(opposite(*q));
        PathMatrix pres = minimal_presentation_pathmatrix(dualize(build_simple(q, f, v0), opp));
        rec.presentation_cokernel_dim = cokernel_dimension(transpose(pres, q));
    }

    ResolutionPrefix res(m);
    ExtComputer ext(res, build_regular(q, f));
    for (std::size_t i = 0; i <= n + 1; ++i)
        rec.ext_dims.push_back(ext.ext(i));
    rec.ext_vanishes_1_to_n = true;
    for (std::size_t i = 1; i <= n; ++i)
        rec.ext_vanishes_1_to_n = rec.ext_vanishes_1_to_n && rec.ext_dims[i] == 0;
    rec.ext_n_plus_1_nonzero = rec.ext_dims[n + 1] != 0;

    const Representation omega = res.syzygy(1).module;
    SimpleVector od = dim_vector(omega);
    rec.c = od[v0];
    rec.syzygy_is_power_of_s0 =
        omega.is_semisimple() && rec.c >= 1 && sum(od) == rec.c;

    SimpleVector top = top_vector(m);
    rec.d = top[vlast];
    rec.top_is_multiple_of_last = rec.d >= 1 && sum(top) == rec.d;

    rec.tau_is_s0 = is_isomorphic(tau(m), build_simple(q, f, v0));
    return rec;
}

StarSequenceVerdict star_sequence_check(const QuiverRef& q, const Field& f) {
    auto shape = detect_delta_shape(*q);
    if (!is_connected(*q) || !shape)
        throw UsageError("star_sequence_check: quiver is not of shape Delta(n,t)");
    const Vertex vlast = shape->cycle[shape->n - 1];
    InjectiveEnvelope env = injective_envelope(build_projective(q, f, vlast));
    Quotient cok = cokernel(env.map);

    StarSequenceVerdict v;
    v.envelope_labels = env.labels;
    v.map_injective = env.map.is_injective();
    v.cokernel_semisimple = cok.module.is_semisimple();
    v.cokernel_dims = dim_vector(cok.module);
    v.expected_cokernel = SimpleVector(q->size(), 0);
    v.expected_cokernel[vlast] = shape->t - 1;
    return v;
}

std::optional<Vertex> descend_to_simple(const Representation& m, std::size_t d) {
    const QuiverRef& q = m.quiver;
    const Representation lambda = build_regular(q, m.field);
    ResolutionPrefix res(m);
    res.extend_to(1);
    const Representation omega = res.syzygy(1).module;
    if (omega.is_zero())
        throw UsageError("descend_to_simple: module is projective");
    ExtComputer ext(res, lambda);
    for (std::size_t i = 1; i <= d + 1; ++i)
        if (ext.ext(i) != 0)
            throw UsageError("descend_to_simple: Ext^" + std::to_string(i) +
                             "(M, Lambda) does not vanish");
    SimpleVector v = dim_vector(omega);
    for (Vertex j = 0; j < q->size(); ++j) {
        if (v[j] == 0 || is_sink(*q, j))
            continue;
        ResolutionPrefix rs(build_simple(q, m.field, j));
        ExtComputer es(rs, lambda);
        bool ok = true;
        for (std::size_t i = 1; i <= d && ok; ++i)
            ok = es.ext(i) == 0;
        if (ok)
            return j;
    }
    return std::nullopt;
}

CmVerdict cm_check(const Representation& m, std::size_t depth) {
    if (depth < 1)
        throw UsageError("cm_check: depth must be at least 1");
    CmVerdict v;
    {
        ResolutionPrefix res(m);
        ExtComputer ext(res, build_regular(m.quiver, m.field));
        for (std::size_t i = 1; i <= depth; ++i)
            if (ext.ext(i) != 0) {
                v.failing_degree = i;
                return v;
            }
    }
    QuiverRef opp = share(opposite(*m.quiver));
    ResolutionPrefix res(transpose_module(m, opp));
    ExtComputer ext(res, build_regular(opp, m.field));
    for (std::size_t i = 1; i <= depth; ++i)
        if (ext.ext(i) != 0) {
            v.failing_degree = i;
            v.failed_on_transpose = true;
            return v;
        }
    v.passes = true;
    return v;
}

ArFormulaVerdict stable_hom_ar_check(const Representation& m, const Representation& n) {
    if (is_projective(m))
        throw UsageError("stable_hom_ar_check: module is projective");
    const Field& f = m.field;
    ArFormulaVerdict v;
    v.ext1 = ext_dim(m, n, 1);
    Representation tm = tau(m);
    v.hom_to_tau = hom_space(n, tm).dim();
    InjectiveEnvelope env = injective_envelope(n);
    HomSpace from_inj = hom_space(env.map.target, tm);
    if (from_inj.dim() > 0 && n.total_dim() > 0) {
        std::vector<std::vector<Scalar>> rows;
        for (const ModuleMap& h : from_inj.basis)
            rows.push_back(flatten(compose(h, env.map)));
        Matrix mat(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                mat(i, j) = rows[i][j];
        v.through_injectives = rank(f, mat);
    }
    return v;
}

Representation random_module(const QuiverRef& q, const Field& f, std::mt19937_64& rng,
                             RandomModuleOptions opts) {
    const std::size_t n = q->size();
    std::vector<Vertex> gens(1 + rng() % opts.max_generators);
    for (Vertex& g : gens)
        g = rng() % n;
    std::vector<Vertex> rels(rng() % (opts.max_relations + 1));
    for (Vertex& r : rels)
        r = rng() % n;
    PathMatrix pm(q, f, gens, rels);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < rels.size(); ++c) {
            PathEntry& e = pm.entry(r, c);
            if (gens[r] == rels[c] && rng() % 4 == 0)
                e.trivial = static_cast<Scalar>(rng() % f.prime());
            for (Scalar& a : e.arrows)
                a = static_cast<Scalar>(rng() % f.prime());
        }
    return cokernel(pm);
}

std::optional<Representation> random_non_projective_module(const QuiverRef& q, const Field& f,
                                                           std::mt19937_64& rng,
                                                           RandomModuleOptions opts) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Representation m = random_module(q, f, rng, opts);
        if (!m.is_zero() && !is_projective(m))
            return m;
    }
    return std::nullopt;
}

} // namespace radsq
