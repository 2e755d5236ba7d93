#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "radsq/ext_combinatorics.hpp"
#include "radsq/field.hpp"
#include "radsq/quiver.hpp"

namespace radsq {

enum class CorpusMode { Exhaustive, Random };

struct CorpusSpec {
    std::size_t n_min = 1;
    std::size_t n_max = 1;
    unsigned max_mult = 1;
    CorpusMode mode = CorpusMode::Exhaustive;
    std::size_t count = 0;             ///< random mode only
    std::optional<std::uint64_t> seed; ///< mandatory in random mode
    std::vector<Scalar> oracle_primes{2, 5};
    /// Run the rep-engine when the dims of all P(i) sum to at most this.
    std::size_t oracle_budget = 64;
    /// Largest resolution term (in summands) the oracle builds for profiles.
    std::size_t oracle_resolution_cap = 48;
    bool timing = false;
    /// Closed form compared against the oracle; replaced only by fault-injection tests.
    Ext1Formula ext1_formula = ext1_simple_vs_proj_dim;
};

/// Largest matrix space an exhaustive run may walk.
inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

/// Throws UsageError when the spec is inconsistent or exceeds the guard.
void validate(const CorpusSpec& spec);

/// Deterministic stream of connected quivers: lexicographic adjacency
/// matrices (first entry most significant) per n in exhaustive mode, a seeded
/// rejection sampler in random mode.
class CorpusEnumerator {
public:
    explicit CorpusEnumerator(CorpusSpec spec);
    std::optional<Quiver> next();

private:
    std::optional<Quiver> next_exhaustive();
    std::optional<Quiver> next_random();

    CorpusSpec spec_;
    std::size_t n_;
    std::vector<unsigned> digits_;
    bool exhausted_ = false;
    std::size_t emitted_ = 0;
    std::mt19937_64 rng_;
};

std::vector<Quiver> enumerate_connected(const CorpusSpec& spec);

struct OracleDiff {
    Scalar prime;
    std::string quantity; ///< "ext1", "hom", or "profile"
    Vertex j;
    std::size_t index;    ///< target vertex i for ext1, degree for profile, 0 for hom
    Dim combinatorial;
    Dim oracle;

    friend bool operator==(const OracleDiff&, const OracleDiff&) = default;
};

struct OracleResult {
    std::vector<OracleDiff> diffs;
    /// Deepest profile degree compared for every simple and prime.
    std::size_t profile_depth = 0;
};

/// Compares the closed forms against the rep-engine over each prime: dim
/// Ext^1(S(j),P(i)), dim Hom(S(j),Lambda), and profile dims up to n+1 while
/// the resolution stays under the cap.
OracleResult oracle_diff(const Quiver& q, const std::vector<Scalar>& primes,
                         const Ext1Formula& formula = ext1_simple_vs_proj_dim,
                         std::size_t resolution_cap = 48);

std::size_t projective_dimension_total(const Quiver& q);

struct Theorem1Summary {
    std::size_t chains_checked = 0;
    std::size_t longest_chain = 0;
    std::vector<std::string> violations;
    friend bool operator==(const Theorem1Summary&, const Theorem1Summary&) = default;
};

struct Theorem3bSummary {
    Vertex unique_vertex = 0;
    Dim ext_n = 0;
    friend bool operator==(const Theorem3bSummary&, const Theorem3bSummary&) = default;
};

struct Theorem3cSummary {
    Scalar prime = 0;
    std::size_t length = 0;
    std::size_t presentation_cokernel_dim = 0;
    std::size_t closed_form_length = 0;
    Dim c = 0;
    Dim d = 0;
    std::vector<Dim> ext_dims;
    bool checks_pass = false;
    friend bool operator==(const Theorem3cSummary&, const Theorem3cSummary&) = default;
};

struct StarSummary {
    Scalar prime = 0;
    std::vector<Vertex> envelope_labels;
    SimpleVector cokernel_dims;
    bool ok = false;
    friend bool operator==(const StarSummary&, const StarSummary&) = default;
};

struct OracleSummary {
    bool ran = false;
    std::vector<Scalar> primes;
    std::vector<OracleDiff> diffs;
    std::size_t profile_depth = 0;
    friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct AnalysisReport {
    std::vector<std::vector<unsigned>> adj;
    bool connected = false;
    std::optional<DeltaShape> delta;
    bool self_injective = false;
    bool simple_ring = false;
    std::vector<Vertex> sinks;
    std::vector<Vertex> sources;
    std::vector<ExtProfile> profiles; ///< depth n+1
    std::vector<std::size_t> nakayama;
    Theorem1Summary theorem1;
    Theorem2Record theorem2;
    std::optional<Theorem3bSummary> theorem3b;
    std::optional<Theorem3cSummary> theorem3c;
    std::optional<StarSummary> star_sequence;
    std::vector<std::string> lemma2;
    std::vector<std::string> lemma4;
    OracleSummary oracle;
    std::optional<double> timing_ms;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs every checker on q. Throws TheoremViolation with the counterexample
/// when any statement fails or the oracle disagrees with the closed forms.
AnalysisReport run_all_checks(const Quiver& q, const CorpusSpec& spec,
                              std::optional<std::size_t> depth = std::nullopt);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

struct CorpusStats {
    std::size_t quivers = 0;
    std::size_t oracle_runs = 0;
    std::size_t delta_shapes = 0;
};

/// Streams one JSON line per report, in enumeration order. A violation is
/// written as a {"violation": ...} line and then rethrown.
CorpusStats run_corpus(const CorpusSpec& spec, std::ostream& out, std::size_t jobs = 1);

} // namespace radsq
