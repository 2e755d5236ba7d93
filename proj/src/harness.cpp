#include "radsq/harness.hpp"

#include <chrono>
#include <future>
#include <ostream>

#include "radsq/errors.hpp"
#include "radsq/ar_theory.hpp"
#include "radsq/resolution.hpp"

namespace radsq {

namespace {

// (max+1)^(n^2) summed over the n range, saturating past the limit.
std::uint64_t matrix_space_size(const CorpusSpec& spec) {
    std::uint64_t total = 0;
    for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
        std::uint64_t size = 1;
        for (std::size_t k = 0; k < n * n; ++k) {
            size *= spec.max_mult + 1ULL;
            if (size > kExhaustiveLimit)
                return kExhaustiveLimit + 1;
        }
        total += size;
        if (total > kExhaustiveLimit)
            return kExhaustiveLimit + 1;
    }
    return total;
}

} // namespace

void validate(const CorpusSpec& spec) {
    if (spec.n_min < 1 || spec.n_min > spec.n_max)
        throw UsageError("corpus: need 1 <= n_min <= n_max");
    if (spec.mode == CorpusMode::Exhaustive) {
        if (matrix_space_size(spec) > kExhaustiveLimit)
            throw UsageError("corpus: exhaustive matrix space exceeds " +
                             std::to_string(kExhaustiveLimit) + " matrices");
    } else {
        if (!spec.seed)
            throw UsageError("corpus: random mode needs a seed");
        if (spec.count == 0)
            throw UsageError("corpus: random mode needs a positive count");
        if (spec.max_mult == 0 && spec.n_max > 1)
            throw UsageError("corpus: max multiplicity 0 admits no connected quiver with n > 1");
    }
    for (Scalar p : spec.oracle_primes)
        (void)Field(p);
}

CorpusEnumerator::CorpusEnumerator(CorpusSpec spec)
    : spec_(std::move(spec)), n_(spec_.n_min), rng_(spec_.seed.value_or(0)) {
    validate(spec_);
    digits_.assign(n_ * n_, 0);
}

std::optional<Quiver> CorpusEnumerator::next() {
    return spec_.mode == CorpusMode::Exhaustive ? next_exhaustive() : next_random();
}

std::optional<Quiver> CorpusEnumerator::next_exhaustive() {
    while (!exhausted_) {
        std::vector<std::vector<unsigned>> adj(n_, std::vector<unsigned>(n_));
        for (std::size_t k = 0; k < digits_.size(); ++k)
            adj[k / n_][k % n_] = digits_[k];
        // Advance: last entry is least significant.
        std::size_t pos = digits_.size();
        while (pos > 0) {
            --pos;
            if (digits_[pos] < spec_.max_mult) {
                ++digits_[pos];
                break;
            }
            digits_[pos] = 0;
            if (pos == 0) {
                if (++n_ > spec_.n_max)
                    exhausted_ = true;
                else
                    digits_.assign(n_ * n_, 0);
            }
        }
        Quiver q(std::move(adj));
        if (is_connected(q))
            return q;
    }
    return std::nullopt;
}

std::optional<Quiver> CorpusEnumerator::next_random() {
    if (emitted_ >= spec_.count)
        return std::nullopt;
    const std::size_t span = spec_.n_max - spec_.n_min + 1;
    while (true) {
        std::size_t n = spec_.n_min + static_cast<std::size_t>(rng_() % span);
        std::vector<std::vector<unsigned>> adj(n, std::vector<unsigned>(n));
        for (auto& row : adj)
            for (auto& x : row)
                x = static_cast<unsigned>(rng_() % (spec_.max_mult + 1ULL));
        Quiver q(std::move(adj));
        if (is_connected(q)) {
            ++emitted_;
            return q;
        }
    }
}

std::vector<Quiver> enumerate_connected(const CorpusSpec& spec) {
    CorpusEnumerator e(spec);
    std::vector<Quiver> out;
    while (auto q = e.next())
        out.push_back(std::move(*q));
    return out;
}

std::size_t projective_dimension_total(const Quiver& q) {
    std::size_t total = 0;
    for (Vertex i = 0; i < q.size(); ++i)
        total += 1 + q.out_degree(i);
    return total;
}

OracleResult oracle_diff(const Quiver& quiver, const std::vector<Scalar>& primes,
                         const Ext1Formula& formula, std::size_t resolution_cap) {
    const QuiverRef q = share(quiver);
    const std::size_t n = q->size();
    OracleResult out;
    out.profile_depth = n + 1;
    std::vector<ExtProfile> profiles;
    for (Vertex j = 0; j < n; ++j)
        profiles.push_back(ext_profile(*q, j, n + 1));

    for (Scalar p : primes) {
        const Field f(p);
        const Representation lambda = build_regular(q, f);
        std::vector<Representation> projectives;
        for (Vertex i = 0; i < n; ++i)
            projectives.push_back(build_projective(q, f, i));
        for (Vertex j = 0; j < n; ++j) {
            ResolutionPrefix res(build_simple(q, f, j));
            for (Vertex i = 0; i < n; ++i) {
                ExtComputer ec(res, projectives[i]);
                Dim oracle = ec.ext(1);
                Dim comb = formula(*q, j, i);
                if (oracle != comb)
                    out.diffs.push_back({p, "ext1", j, i, comb, oracle});
            }
            ExtComputer el(res, lambda);
            if (Dim h = el.ext(0); h != hom_simple_lambda_dim(*q, j))
                out.diffs.push_back({p, "hom", j, 0, hom_simple_lambda_dim(*q, j), h});
            std::size_t reached = 0;
            for (std::size_t deg = 1; deg <= n + 1; ++deg) {
                auto v = el.try_ext(deg, resolution_cap);
                if (!v)
                    break;
                reached = deg;
                if (*v != profiles[j].dims[deg])
                    out.diffs.push_back({p, "profile", j, deg, profiles[j].dims[deg], *v});
            }
            out.profile_depth = std::min(out.profile_depth, reached);
        }
    }
    return out;
}

AnalysisReport run_all_checks(const Quiver& quiver, const CorpusSpec& spec,
                              std::optional<std::size_t> depth) {
    const auto started = std::chrono::steady_clock::now();
    if (!is_connected(quiver))
        throw UsageError("run_all_checks: quiver is not connected");
    const std::size_t n = quiver.size();
    const std::size_t profile_depth = depth.value_or(n + 1);
    const QuiverRef q = share(quiver);

    AnalysisReport r;
    r.adj = quiver.adjacency();
    r.connected = true;
    r.delta = detect_delta_shape(quiver);
    r.self_injective = is_self_injective(quiver);
    r.simple_ring = is_simple_ring(quiver);
    r.sinks = sinks(quiver);
    r.sources = sources(quiver);
    for (Vertex j = 0; j < n; ++j) {
        r.profiles.push_back(ext_profile(quiver, j, profile_depth));
        r.nakayama.push_back(nakayama_bound(quiver, j));
    }

    if (!r.self_injective) {
        for (Vertex j = 0; j < n; ++j)
            for (std::size_t d = 0; d <= n; ++d) {
                if (!theorem1_applicable(quiver, j, d))
                    continue;
                ChainReport chain = theorem1_chain(quiver, j, d);
                ++r.theorem1.chains_checked;
                r.theorem1.longest_chain = std::max(r.theorem1.longest_chain, d);
                for (const auto& v : chain.violations)
                    r.theorem1.violations.push_back(v);
            }
        if (!r.theorem1.violations.empty())
            throw TheoremViolation("syzygy chains of vanishing simples are pairwise distinct, "
                                   "simple, non-projective with injective covers",
                                   {{"adj", r.adj}, {"violations", r.theorem1.violations}});
    }
    r.theorem2 = theorem2_classify(quiver);
    if (r.delta && r.delta->t > 1) {
        Theorem3bRecord rec = theorem3b_check(quiver);
        r.theorem3b = Theorem3bSummary{*rec.unique_vertex, rec.ext_n};
    }
    r.lemma2 = lemma2_violations(quiver);
    r.lemma4 = lemma4_violations(quiver);
    if (!r.lemma2.empty() || !r.lemma4.empty())
        throw TheoremViolation("lemma-level statements",
                               {{"adj", r.adj}, {"lemma2", r.lemma2}, {"lemma4", r.lemma4}});
    // Generalized Nakayama on self-injective quivers: Ext^i vanishes in 1..n+1.
    if (r.self_injective)
        for (const auto& p : r.profiles)
            for (std::size_t i = 1; i < p.dims.size(); ++i)
                if (p.dims[i] != 0)
                    throw TheoremViolation("self-injective implies Ext^i(S,Lambda)=0 for i>=1",
                                           {{"adj", r.adj}, {"vertex", p.vertex}});

    if (!spec.oracle_primes.empty() && projective_dimension_total(quiver) <= spec.oracle_budget) {
        OracleResult o = oracle_diff(quiver, spec.oracle_primes, spec.ext1_formula,
                                     spec.oracle_resolution_cap);
        r.oracle = OracleSummary{true, spec.oracle_primes, o.diffs, o.profile_depth};
        if (!o.diffs.empty())
            throw TheoremViolation("closed-form Ext dimensions agree with the exact oracle",
                                   {{"adj", r.adj}, {"diffs", to_json(r)["oracle"]["diffs"]}});

        const Field f(spec.oracle_primes.front());
        if (r.delta) {
            StarSequenceVerdict sv = star_sequence_check(q, f);
            r.star_sequence = StarSummary{f.prime(), sv.envelope_labels, sv.cokernel_dims, sv.ok()};
            if (!sv.ok())
                throw TheoremViolation("0 -> P(n-1) -> I(P(n-1)) -> S(n-1)^{t-1} -> 0",
                                       {{"adj", r.adj}, {"cokernel", sv.cokernel_dims}});
        }
        if (r.delta && r.delta->t > 1) {
            Theorem3cRecord rec = theorem3c_module(q, f);
            r.theorem3c = Theorem3cSummary{f.prime(), rec.length, rec.presentation_cokernel_dim,
                                           rec.closed_form_length, rec.c, rec.d, rec.ext_dims,
                                           rec.checks_pass()};
            if (!rec.checks_pass())
                throw TheoremViolation("Tr D S(0) has Ext^{1..n}(M,Lambda)=0, "
                                       "Ext^{n+1}(M,Lambda)!=0 and tau M = S(0)",
                                       {{"adj", r.adj}, {"ext_dims", rec.ext_dims}});
        }
    }
    if (spec.timing)
        r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                started)
                          .count();
    return r;
}

CorpusStats run_corpus(const CorpusSpec& spec, std::ostream& out, std::size_t jobs) {
    CorpusEnumerator e(spec);
    CorpusStats stats;
    auto emit = [&](const AnalysisReport& r) {
        out << to_json(r).dump() << '\n';
        ++stats.quivers;
        stats.oracle_runs += r.oracle.ran ? 1 : 0;
        stats.delta_shapes += r.delta ? 1 : 0;
    };
    auto guarded = [&](const Quiver& q) {
        try {
            return run_all_checks(q, spec);
        } catch (const TheoremViolation& v) {
            out << nlohmann::json{{"violation", v.statement()}, {"payload", v.payload()}}.dump()
                << '\n';
            out.flush();
            throw;
        }
    };

    if (jobs <= 1) {
        while (auto q = e.next())
            emit(guarded(*q));
        return stats;
    }
    // Batches are evaluated concurrently and written back in enumeration order.
    const std::size_t batch = 64 * jobs;
    while (true) {
        std::vector<Quiver> qs;
        while (qs.size() < batch)
            if (auto q = e.next())
                qs.push_back(std::move(*q));
            else
                break;
        if (qs.empty())
            break;
        const std::size_t chunk = (qs.size() + jobs - 1) / jobs;
        std::vector<std::future<std::vector<AnalysisReport>>> parts;
        for (std::size_t start = 0; start < qs.size(); start += chunk)
            parts.push_back(std::async(std::launch::async, [&, start] {
                std::vector<AnalysisReport> rs;
                for (std::size_t k = start; k < std::min(qs.size(), start + chunk); ++k)
                    rs.push_back(run_all_checks(qs[k], spec));
                return rs;
            }));
        std::size_t k = 0;
        for (auto& part : parts) {
            std::vector<AnalysisReport> rs;
            try {
                rs = part.get();
            } catch (const TheoremViolation&) {
                // Re-run sequentially from this chunk to report the first counterexample.
                for (; k < qs.size(); ++k)
                    emit(guarded(qs[k]));
                throw;
            }
            for (auto& r : rs) {
                emit(r);
                ++k;
            }
        }
    }
    return stats;
}

} // namespace radsq
