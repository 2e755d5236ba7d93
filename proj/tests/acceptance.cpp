// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "radsq/ar_theory.hpp"
#include "radsq/errors.hpp"
#include "radsq/harness.hpp"

using namespace radsq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& what) {
        if (pass)
            first_failure = what;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string quiver_text(const Quiver& q) {
    std::string s = "[";
    for (std::size_t i = 0; i < q.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < q.size(); ++j)
            s += (j ? "," : "") + std::to_string(q.arrows(i, j));
        s += "]";
    }
    return s + "]";
}

std::vector<Quiver> acceptance_corpus() {
    CorpusSpec exhaustive;
    exhaustive.n_min = 1;
    exhaustive.n_max = 3;
    exhaustive.max_mult = 2;
    std::vector<Quiver> out = enumerate_connected(exhaustive);
    CorpusSpec random;
    random.mode = CorpusMode::Random;
    random.n_min = random.n_max = 4;
    random.max_mult = 3;
    random.count = 200;
    random.seed = 7;
    for (Quiver& q : enumerate_connected(random))
        out.push_back(std::move(q));
    return out;
}

std::size_t least_positive_degree(const ExtProfile& p) {
    for (std::size_t i = 1; i < p.dims.size(); ++i)
        if (p.dims[i] != 0)
            return i;
    return p.dims.size();
}

Outcome criterion1(const std::vector<Quiver>& corpus) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::size_t ext1_diffs = 0, other_diffs = 0, pairs = 0;
    for (const Quiver& q : corpus) {
        OracleResult r = oracle_diff(q, {2, 5});
        pairs += 2 * q.size() * q.size();
        for (const auto& d : r.diffs) {
            (d.quantity == "ext1" ? ext1_diffs : other_diffs) += 1;
            o.fail(quiver_text(q) + " " + d.quantity + " j=" + std::to_string(d.j));
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 300.0)
        o.fail("wall-clock " + std::to_string(secs) + " s");
    std::ostringstream os;
    os << corpus.size() << " quivers, " << pairs << " (j,i,p) triples, " << ext1_diffs
       << " Ext^1 discrepancies, " << other_diffs << " Hom/profile discrepancies, " << secs
       << " s";
    o.detail = os.str();
    return o;
}

Outcome criterion2(const std::vector<Quiver>& corpus) {
    Outcome o;
    std::size_t classified = 0, self_inj = 0, modules = 0;
    std::mt19937_64 rng(2);
    const Field f(5);
    std::vector<Quiver> members = corpus;
    for (std::size_t n = 4; n <= 5; ++n)
        members.push_back(delta_quiver(n, 1));
    for (const Quiver& q : members) {
        try {
            Theorem2Record r = theorem2_classify(q);
            ++classified;
            if (!r.self_injective_not_simple)
                continue;
        } catch (const TheoremViolation& v) {
            o.fail(quiver_text(q) + ": " + v.statement());
            continue;
        }
        ++self_inj;
        QuiverRef ref = share(q);
        Representation lambda = build_regular(ref, f);
        for (int k = 0; k < 20; ++k) {
            Representation m = random_module(ref, f, rng);
            ++modules;
            ResolutionPrefix res(m);
            for (std::size_t i = 1; i <= q.size() + 1; ++i)
                if (ext_dim(res, lambda, i) != 0)
                    o.fail(quiver_text(q) + " Ext^" + std::to_string(i) + "(M,Lambda) != 0");
        }
    }
    o.detail = std::to_string(classified) + " quivers classified (corpus plus Delta(4,1), " +
               "Delta(5,1)), " + std::to_string(self_inj) +
               " self-injective non-simple, " + std::to_string(modules) +
               " random modules with Ext^{1..n+1}(M,Lambda) checked";
    return o;
}

Outcome criterion3(const std::vector<Quiver>& corpus) {
    Outcome o;
    std::size_t chains = 0;
    for (const Quiver& q : corpus) {
        if (is_self_injective(q))
            continue;
        for (Vertex j = 0; j < q.size(); ++j)
            for (std::size_t d = 0; d <= q.size(); ++d) {
                if (!theorem1_applicable(q, j, d))
                    continue;
                ++chains;
                ChainReport r = theorem1_chain(q, j, d);
                if (!r.ok() || !r.pairwise_distinct)
                    o.fail(quiver_text(q) + " j=" + std::to_string(j) + " d=" + std::to_string(d));
            }
    }
    o.detail = std::to_string(chains) + " valid (j,d) chains checked";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::size_t shapes = 0;
    const Field f(5);
    for (std::size_t n = 1; n <= 5; ++n)
        for (unsigned m = 2; m <= 3; ++m) {
            ++shapes;
            Quiver q = delta_quiver(n, m);
            std::string tag = "Delta(" + std::to_string(n) + "," + std::to_string(m * m) + ")";
            Theorem3bRecord r = theorem3b_check(q);
            if (!r.is_delta || r.unique_vertex != Vertex{0} || r.ext_n == 0)
                o.fail(tag + " unique vertex");
            for (Vertex j = 0; j < n; ++j) {
                ExtProfile p = ext_profile(q, j, n);
                bool vanishing = least_positive_degree(p) >= n && p.dims[n] != 0;
                if (vanishing != (j == 0))
                    o.fail(tag + " profile of S(" + std::to_string(j) + ")");
            }
            Dim closed = ext1_simple_vs_proj_dim(q, n - 1, n - 1);
            QuiverRef ref = share(q);
            Dim oracle = ext_dim(build_simple(ref, f, n - 1), build_projective(ref, f, n - 1), 1);
            if (closed != m * m - 1 || oracle != m * m - 1)
                o.fail(tag + " dim Ext^1(S(n-1),P(n-1))");
        }
    o.detail = std::to_string(shapes) + " shapes (n<=5, m in {2,3}); Ext^1(S(n-1),P(n-1)) = m^2-1 "
               "by closed form and by resolution over F_5";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::ostringstream os;
    const std::pair<std::size_t, unsigned> shapes[] = {{1, 2}, {2, 2}, {3, 2}, {2, 3}};
    for (auto [n, m] : shapes)
        for (Scalar p : {2u, 5u}) {
            Theorem3cRecord r = theorem3c_module(share(delta_quiver(n, m)), Field(p));
            std::string tag = "Delta(" + std::to_string(n) + "," + std::to_string(m * m) +
                              ") F_" + std::to_string(p);
            if (!r.checks_pass() || r.c < 1)
                o.fail(tag);
            if (p == 5)
                os << "Delta(" << n << "," << m * m << "): length " << r.length
                   << " = cokernel dim " << r.presentation_cokernel_dim << ", t^2+t-1 = "
                   << r.closed_form_length << (r.length == r.closed_form_length ? " (agrees); " : " (differs); ");
        }
    o.detail = os.str() + "checks exact over F_2 and F_5";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t shapes = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 3; ++m)
            for (Scalar p : {2u, 5u}) {
                ++shapes;
                StarSequenceVerdict v = star_sequence_check(share(delta_quiver(n, m)), Field(p));
                if (!v.ok())
                    o.fail("Delta(" + std::to_string(n) + "," + std::to_string(m * m) + ") F_" +
                           std::to_string(p));
            }
    o.detail = std::to_string(shapes) + " (shape, prime) cases, n<=4, m<=3, p in {2,5}";
    return o;
}

Outcome criterion7(const std::vector<Quiver>& corpus) {
    Outcome o;
    std::size_t simples = 0;
    for (const Quiver& q : corpus)
        for (Vertex j = 0; j < q.size(); ++j) {
            ++simples;
            try {
                if (nakayama_bound(q, j) > q.size())
                    o.fail(quiver_text(q) + " j=" + std::to_string(j));
            } catch (const TheoremViolation& v) {
                o.fail(quiver_text(q) + " j=" + std::to_string(j) + ": " + v.statement());
            }
        }
    std::size_t shapes = 0, hom_nonzero = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (unsigned m = 2; m <= 3; ++m) {
            ++shapes;
            Quiver q = delta_quiver(n, m);
            if (least_positive_degree(ext_profile(q, 0, n)) != n)
                o.fail("Delta(" + std::to_string(n) + "," + std::to_string(m * m) + ") attainment");
            hom_nonzero += hom_simple_lambda_dim(q, 0) != 0 ? 1 : 0;
        }
    o.detail = std::to_string(simples) + " simples bounded by n; least i>=1 with Ext^i(S(0),Lambda) "
               "!= 0 equals n on " + std::to_string(shapes) + " Delta shapes (Hom(S(0),Lambda) != 0 on " +
               std::to_string(hom_nonzero) + " of them, so the least i>=0 is 0 there)";
    return o;
}

Outcome criterion8(const std::vector<Quiver>& corpus) {
    Outcome o;
    const Field f(5);
    std::mt19937_64 pick(8), rng(88);
    std::vector<Quiver> chosen{delta_quiver(2, 2), delta_quiver(3, 2)};
    std::vector<const Quiver*> pool;
    for (const Quiver& q : corpus)
        if (!is_self_injective(q) && q.size() <= 3)
            pool.push_back(&q);
    while (chosen.size() < 10)
        chosen.push_back(*pool[pick() % pool.size()]);

    std::size_t failing = 0, tested = 0;
    for (const Quiver& q : chosen) {
        QuiverRef ref = share(q);
        for (int k = 0; k < 20; ++k) {
            auto m = random_non_projective_module(ref, f, rng);
            if (!m) {
                o.fail(quiver_text(q) + " no non-projective module sampled");
                break;
            }
            ++tested;
            if (cm_check(*m, q.size() + 1).passes)
                o.fail(quiver_text(q) + " module passes cm_check");
            else
                ++failing;
        }
    }
    std::size_t passing = 0, si_tested = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        QuiverRef ref = share(delta_quiver(n, 1));
        for (int k = 0; k < 20; ++k) {
            auto m = random_non_projective_module(ref, f, rng);
            if (!m) {
                o.fail("Delta(" + std::to_string(n) + ",1) no non-projective module sampled");
                break;
            }
            ++si_tested;
            if (cm_check(*m, n + 1).passes)
                ++passing;
            else
                o.fail("Delta(" + std::to_string(n) + ",1) module fails cm_check");
        }
    }
    o.detail = std::to_string(failing) + "/" + std::to_string(tested) +
               " modules over 10 non-self-injective quivers fail; " + std::to_string(passing) + "/" +
               std::to_string(si_tested) + " modules over Delta(n,1), n<=4, pass";
    return o;
}

// Connected quivers with n <= 2 and entries <= 2, plus seeded samples of n = 3 and n = 4.
std::vector<QuiverRef> property_corpus(const std::vector<Quiver>& corpus) {
    std::vector<QuiverRef> out;
    std::vector<const Quiver*> three, four;
    for (const Quiver& q : corpus) {
        if (q.size() <= 2)
            out.push_back(share(q));
        else
            (q.size() == 3 ? three : four).push_back(&q);
    }
    std::mt19937_64 pick(9);
    for (int k = 0; k < 200; ++k)
        out.push_back(share(*three[pick() % three.size()]));
    for (int k = 0; k < 20; ++k)
        out.push_back(share(*four[pick() % four.size()]));
    return out;
}

Outcome criterion9(const std::vector<Quiver>& corpus) {
    Outcome o;
    const Field f5(5), f2(2);
    std::mt19937_64 rng(99);
    std::vector<QuiverRef> quivers = property_corpus(corpus);
    std::size_t modules = 0, ar_pairs = 0;
    auto check = [&](bool ok, const std::string& what, const Quiver& q) {
        if (!ok)
            o.fail(what + " on " + quiver_text(q));
    };
    for (const QuiverRef& q : quivers) {
        QuiverRef opp = share(opposite(*q));
        Representation lambda = build_regular(q, f5);
        const std::size_t n = q->size();

        std::vector<Representation> sample;
        for (Vertex i = 0; i < n; ++i) {
            sample.push_back(build_simple(q, f5, i));
            sample.push_back(build_projective(q, f5, i));
            sample.push_back(build_injective(q, f5, i));
        }
        for (int k = 0; k < 10; ++k)
            sample.push_back(random_module(q, f5, rng));

        for (const Representation& m : sample) {
            ++modules;
            check(m.satisfies_relations(), "J^2=0 (module)", *q);
            Submodule omega = syzygy_rep(m);
            check(omega.module.satisfies_relations(), "J^2=0 (syzygy)", *q);
            check(omega.module.is_semisimple(), "syzygy semisimplicity", *q);
            Representation dm = dualize(m, opp);
            check(dm.satisfies_relations(), "J^2=0 (dual)", *q);
            check(dualize(dm, q) == m, "duality involution", *q);
            check(tau_inverse(m).satisfies_relations() && tau(m).satisfies_relations(),
                  "J^2=0 (tau)", *q);
            check(cokernel(projective_cover(m).map).module.is_zero(), "cover surjective", *q);

            ResolutionPrefix res(m);
            if (res.extend_to(n + 1, 48)) {
                try {
                    res.verify_exact_and_minimal();
                } catch (const EngineError&) {
                    check(false, "resolution exactness", *q);
                }
            }

            PathMatrix pm = minimal_presentation_pathmatrix(m);
            ModuleMap fm = to_module_map(pm);
            ProjectiveSum src = projective_sum(q, f5, pm.col_labels());
            ProjectiveSum dst = projective_sum(q, f5, pm.row_labels());
            check(to_path_matrix(src, dst, fm) == pm, "PathMatrix round trip", *q);
            check(cokernel(pm).total_dim() == m.total_dim(), "presentation cokernel", *q);

            for (std::size_t i = 2; i <= n + 1; ++i) {
                auto a = ExtComputer(res, lambda).try_ext(i, 48);
                if (!a)
                    break;
                check(*a == ext_dim(omega.module, lambda, i - 1), "dimension shift", *q);
            }
        }

        for (Vertex j = 0; j < n; ++j) {
            using Builder = Representation (*)(const QuiverRef&, const Field&, Vertex);
            for (Builder b : {Builder(build_simple), Builder(build_projective), Builder(build_injective)}) {
                Representation x2 = b(q, f2, j), x5 = b(q, f5, j);
                Representation l2 = build_regular(q, f2);
                ResolutionPrefix r2(x2), r5(x5);
                for (std::size_t i = 0; i <= n + 1; ++i) {
                    auto e2 = ExtComputer(r2, l2).try_ext(i, 48);
                    auto e5 = ExtComputer(r5, lambda).try_ext(i, 48);
                    if (!e2 || !e5)
                        break;
                    check(*e2 == *e5, "char independence", *q);
                }
            }
        }

        for (int k = 0; k < 100; ++k) {
            auto m = random_non_projective_module(q, f5, rng);
            if (!m) {
                check(std::all_of(sample.begin(), sample.end(), is_projective),
                      "non-projective sampling", *q);
                break;
            }
            Representation nn = random_module(q, f5, rng);
            ++ar_pairs;
            check(stable_hom_ar_check(*m, nn).ok(), "AR formula", *q);
        }
    }
    o.detail = std::to_string(quivers.size()) + " quivers (all n<=2 entries<=2, 200 sampled n=3, 20 sampled n=4), " +
               std::to_string(modules) + " modules, " + std::to_string(ar_pairs) + " AR pairs";
    return o;
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Quiver> corpus = acceptance_corpus();
    std::printf("corpus: %zu connected quivers (n<=3 entries<=2 exhaustive, 200 random n=4 entries<=3)\n",
                corpus.size());
    std::fflush(stdout);

    struct Criterion {
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"oracle equivalence of closed-form Ext^1", [&] { return criterion1(corpus); }},
        {"self-injective non-simple <=> non-projective simple with Ext^{1..n}=0",
         [&] { return criterion2(corpus); }},
        {"syzygy chains of simples", [&] { return criterion3(corpus); }},
        {"Delta(n,t): unique vanishing simple S(0), Ext^1(S(n-1),P(n-1)) = t-1", [] { return criterion4(); }},
        {"Delta(n,t): M = tau^-1 S(0) properties and length", [] { return criterion5(); }},
        {"0 -> P(n-1) -> I(P(n-1)) -> S(n-1)^{t-1} -> 0", [] { return criterion6(); }},
        {"generalized Nakayama bound", [&] { return criterion7(corpus); }},
        {"CM-freeness", [&] { return criterion8(corpus); }},
        {"engine property suites", [&] { return criterion9(corpus); }},
    };

    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::printf("criterion %zu: %s  %s  [%s] (%.1f s)\n", k + 1, o.pass ? "PASS" : "FAIL",
                    criteria[k].title, o.detail.c_str(), seconds_since(start));
        if (!o.pass)
            std::printf("  first failure: %s\n", o.first_failure.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %s (%.1f s)\n", all ? "PASS" : "FAIL", seconds_since(t0));
    return all ? 0 : 1;
}
