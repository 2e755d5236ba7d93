// radsq: analysis front end for radical-square-zero algebras kQ/J^2.
//
//   radsq analyze FILE [--depth D] [--json]
//   radsq resolve FILE --vertex J --steps D
//   radsq taurinv FILE [--field P] [--dump]
//   radsq enumerate --n N --maxmult M [--mode exhaustive|random] [--count C] [--seed S] [--out PATH]
//
// Exit codes: 0 success, 1 usage or input error, 2 theorem violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "radsq/ar_theory.hpp"
#include "radsq/errors.hpp"
#include "radsq/harness.hpp"

using namespace radsq;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

Quiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_quiver(ss.str());
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void apply_environment(CorpusSpec& spec) {
    if (const char* env = std::getenv("RADSQ_ORACLE_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0')
            throw UsageError("RADSQ_ORACLE_BUDGET must be a non-negative integer");
        spec.oracle_budget = v;
    }
    if (const char* env = std::getenv("RADSQ_FAULT_INJECT"); env && std::string(env) == "ext1")
        spec.ext1_formula = [](const Quiver& q, Vertex j, Vertex i) {
            return ext1_simple_vs_proj_dim(q, j, i) + 1;
        };
}

std::string vector_text(const SimpleVector& v) {
    std::string s;
    for (Vertex j = 0; j < v.size(); ++j) {
        if (v[j] == 0)
            continue;
        s += (s.empty() ? "" : " + ") + (v[j] == 1 ? "" : std::to_string(v[j])) + "e" +
             std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

std::string list_text(const std::vector<Vertex>& v) {
    std::string s;
    for (Vertex x : v)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
}

// Longest syzygy chain of a vanishing simple, with the arrows entering its
// first vertex and leaving its last one.
void print_local_structure(const Quiver& q, std::ostream& os) {
    std::optional<ChainReport> best;
    for (Vertex j = 0; j < q.size(); ++j)
        for (std::size_t d = 0; d <= q.size(); ++d)
            if (theorem1_applicable(q, j, d) && (!best || d > best->depth))
                best = theorem1_chain(q, j, d);
    if (!best || best->depth == 0)
        return;
    const auto& chain = best->chain;
    std::string row = "S(" + std::to_string(chain[0]) + ")";
    for (std::size_t i = 1; i < chain.size(); ++i)
        row += " -1-> S(" + std::to_string(chain[i]) + ")";
    const std::string pad(8, ' ');
    os << "local structure of the longest vanishing chain:\n";
    os << "  in:  " << q.in_degree(chain.front()) << " arrow(s) into S(" << chain.front()
       << ")\n";
    os << "  " << pad.substr(0, 4) << row << '\n';
    os << "  out: " << q.out_degree(chain.back()) << " arrow(s) out of S(" << chain.back() << "):";
    for (Vertex w = 0; w < q.size(); ++w)
        if (q.arrows(chain.back(), w) > 0)
            os << " ->" << w << "x" << q.arrows(chain.back(), w);
    os << '\n';
}

void print_report(const Quiver& q, const AnalysisReport& r, std::ostream& os) {
    os << "quiver: n=" << q.size() << ", arrows=" << q.arrow_count() << '\n';
    if (r.delta)
        os << "shape: Delta(" << r.delta->n << "," << r.delta->t << "), m=" << r.delta->m
           << ", t=" << r.delta->t << ", cycle " << list_text(r.delta->cycle) << '\n';
    else
        os << "shape: not of Delta type\n";
    os << "self-injective: " << (r.self_injective ? "yes" : "no")
       << (r.simple_ring ? " (simple ring)" : "") << '\n';
    os << "sinks (projective simples): " << list_text(r.sinks) << '\n';
    os << "sources (injective simples): " << list_text(r.sources) << '\n';
    os << "Ext^i(S(j), Lambda), i = 0.." << (r.profiles.empty() ? 0 : r.profiles[0].dims.size() - 1)
       << ":\n";
    for (const auto& p : r.profiles) {
        os << "  S(" << p.vertex << "):";
        for (Dim d : p.dims)
            os << ' ' << d;
        os << "   first nonzero at i=" << r.nakayama[p.vertex] << '\n';
    }
    print_local_structure(q, os);
    os << "chains checked: " << r.theorem1.chains_checked << " (longest d=" << r.theorem1.longest_chain
       << ")\n";
    os << "self-injective non-simple: " << (r.theorem2.self_injective_not_simple ? "yes" : "no")
       << "; non-projective simple with Ext^{1..n} = 0: "
       << (r.theorem2.witness ? "S(" + std::to_string(*r.theorem2.witness) + ")" : "none") << '\n';
    if (r.theorem3b)
        os << "unique simple with Ext^{1..n-1} = 0: S(" << r.theorem3b->unique_vertex
           << "), dim Ext^n = " << r.theorem3b->ext_n << '\n';
    if (r.star_sequence)
        os << "envelope sequence of P(n-1): cokernel " << vector_text(r.star_sequence->cokernel_dims)
           << (r.star_sequence->ok ? " (ok)" : " (FAILED)") << '\n';
    if (r.theorem3c)
        os << "tau^-1 S(0): length " << r.theorem3c->length << ", checks "
           << (r.theorem3c->checks_pass ? "pass" : "FAIL") << '\n';
    if (r.oracle.ran)
        os << "oracle: " << r.oracle.diffs.size() << " discrepancies over F_" << r.oracle.primes.front()
           << (r.oracle.primes.size() > 1 ? " and F_" + std::to_string(r.oracle.primes.back()) : "")
           << " (profiles compared to degree " << r.oracle.profile_depth << ")\n";
    else
        os << "oracle: skipped (outside budget)\n";
}

int cmd_analyze(const std::string& file, std::optional<std::size_t> depth, bool as_json) {
    Quiver q = load_quiver(file);
    if (!is_connected(q))
        throw UsageError(file + ": quiver is not connected");
    CorpusSpec spec;
    apply_environment(spec);
    AnalysisReport r = run_all_checks(q, spec, depth);
    if (as_json)
        std::cout << to_json(r).dump() << '\n';
    else
        print_report(q, r, std::cout);
    return 0;
}

int cmd_resolve(const std::string& file, std::size_t vertex, std::size_t steps) {
    Quiver q = load_quiver(file);
    if (vertex >= q.size())
        throw UsageError("vertex " + std::to_string(vertex) + " out of range (n=" +
                         std::to_string(q.size()) + ")");
    ExtProfile p = ext_profile(q, vertex, steps);
    SimpleVector w = unit_vector(q.size(), vertex);
    std::cout << "resolution of S(" << vertex << "): step, Omega^i S, dim Ext^i(S, Lambda)\n";
    for (std::size_t i = 0; i <= steps; ++i) {
        std::cout << "  " << i << "  " << vector_text(w) << "  " << p.dims[i] << '\n';
        w = syzygy_vector(q, w);
    }
    return 0;
}

int cmd_taurinv(const std::string& file, Scalar prime, bool dump) {
    QuiverRef q = share(load_quiver(file));
    Theorem3cRecord rec = theorem3c_module(q, Field(prime));
    const std::size_t n = rec.shape.n;
    auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
    std::cout << "Delta(" << n << "," << rec.shape.t << "), m=" << rec.shape.m << ", field F_"
              << prime << '\n';
    std::cout << "M = tau^-1 S(0), dims:";
    for (std::size_t d : rec.module.dims)
        std::cout << ' ' << d;
    std::cout << "\nlength " << rec.length << " (presentation cokernel " << rec.presentation_cokernel_dim
              << "), c=" << rec.c << ", d=" << rec.d << '\n';
    std::cout << "dim Ext^i(M, Lambda), i = 0.." << n + 1 << ":";
    for (Dim x : rec.ext_dims)
        std::cout << ' ' << x;
    std::cout << '\n';
    std::cout << "[" << verdict(rec.ext_vanishes_1_to_n) << "] Ext^i(M,Lambda) = 0 for 1 <= i <= n\n";
    std::cout << "[" << verdict(rec.ext_n_plus_1_nonzero) << "] Ext^{n+1}(M,Lambda) != 0\n";
    std::cout << "[" << verdict(rec.syzygy_is_power_of_s0) << "] Omega M = S(0)^" << rec.c << '\n';
    std::cout << "[" << verdict(rec.top_is_multiple_of_last) << "] top M = " << rec.d << " e_(n-1)\n";
    std::cout << "[" << verdict(rec.tau_is_s0) << "] tau M = S(0)\n";
    std::cout << "length formula t^2+t-1 = " << rec.closed_form_length << ": "
              << (rec.closed_form_length == rec.length ? "agrees" : "differs") << " (computed "
              << rec.length << " = m^2+m-1 = " << rec.shape.m * rec.shape.m + rec.shape.m - 1
              << ")\n";
    if (dump)
        std::cout << dump_representation(rec.module);
    return rec.checks_pass() ? 0 : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structure checks for radical-square-zero algebras kQ/J^2"};
    app.require_subcommand(1);

    std::string file;
    std::optional<std::size_t> depth;
    bool as_json = false;
    auto* analyze = app.add_subcommand("analyze", "Ext profiles, shape and verdicts for a quiver");
    analyze->add_option("file", file, "quiver file")->required();
    analyze->add_option("--depth", depth, "Ext depth (default n+1)");
    analyze->add_flag("--json", as_json, "print the JSON report");

    std::size_t vertex = 0, steps = 0;
    auto* resolve = app.add_subcommand("resolve", "syzygy vectors and Ext dims of a simple");
    resolve->add_option("file", file, "quiver file")->required();
    resolve->add_option("--vertex", vertex, "simple S(j)")->required();
    resolve->add_option("--steps", steps, "number of syzygy steps")->required();

    Scalar prime = 5;
    bool dump = false;
    auto* taurinv = app.add_subcommand("taurinv", "build tau^-1 S(0) on a Delta(n,t) quiver");
    taurinv->add_option("file", file, "quiver file")->required();
    taurinv->add_option("--field", prime, "prime field F_p");
    taurinv->add_flag("--dump", dump, "print the module in dump format");

    std::size_t n_max = 1, n_min = 0, count = 0, jobs = 1;
    unsigned max_mult = 1;
    std::string mode = "exhaustive", out_path;
    std::optional<std::uint64_t> seed;
    std::vector<Scalar> primes{2, 5};
    bool timing = false;
    auto* enumerate = app.add_subcommand("enumerate", "run every check over a corpus of quivers");
    enumerate->add_option("--n", n_max, "largest vertex count")->required();
    enumerate->add_option("--n-min", n_min, "smallest vertex count (default 1, random: n)");
    enumerate->add_option("--maxmult", max_mult, "largest arrow multiplicity")->required();
    enumerate->add_option("--mode", mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    enumerate->add_option("--count", count, "number of quivers in random mode");
    enumerate->add_option("--seed", seed, "seed for random mode");
    enumerate->add_option("--out", out_path, "write JSON lines here instead of stdout");
    enumerate->add_option("--primes", primes, "oracle primes")->delimiter(',');
    enumerate->add_option("--jobs", jobs, "worker threads");
    enumerate->add_flag("--timing", timing, "include per-quiver timing (not byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*analyze)
            return cmd_analyze(file, depth, as_json);
        if (*resolve)
            return cmd_resolve(file, vertex, steps);
        if (*taurinv)
            return cmd_taurinv(file, prime, dump);
        if (*enumerate) {
            CorpusSpec spec;
            spec.mode = mode == "random" ? CorpusMode::Random : CorpusMode::Exhaustive;
            spec.n_max = n_max;
            spec.n_min = n_min != 0 ? n_min : (spec.mode == CorpusMode::Random ? n_max : 1);
            spec.max_mult = max_mult;
            spec.count = count;
            spec.seed = seed;
            spec.oracle_primes = primes;
            spec.timing = timing;
            apply_environment(spec);
            validate(spec);
            std::ofstream file_out;
            if (!out_path.empty()) {
                file_out.open(out_path);
                if (!file_out)
                    throw UsageError(out_path + ": cannot open for writing");
            }
            std::ostream& out = out_path.empty() ? std::cout : file_out;
            CorpusStats stats = run_corpus(spec, out, jobs);
            std::cerr << "checked " << stats.quivers << " quivers (" << stats.oracle_runs
                      << " with oracle, " << stats.delta_shapes << " of Delta type)\n";
            return 0;
        }
    } catch (const TheoremViolation& v) {
        std::cerr << "error: " << v.what() << '\n' << v.payload().dump() << '\n';
        return kExitViolation;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
