// JSON-lines schema of AnalysisReport. Keys are emitted in sorted order by
// nlohmann::json, which makes the stream byte-stable across runs.

#include "radsq/harness.hpp"

namespace radsq {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

} // namespace

json to_json(const AnalysisReport& r) {
    json j;
    j["n"] = r.adj.size();
    j["adj"] = r.adj;
    j["connected"] = r.connected;
    if (r.delta)
        j["delta"] = {{"n", r.delta->n}, {"m", r.delta->m}, {"t", r.delta->t},
                      {"cycle", r.delta->cycle}};
    else
        j["delta"] = nullptr;
    j["self_injective"] = r.self_injective;
    j["simple_ring"] = r.simple_ring;
    j["sinks"] = r.sinks;
    j["sources"] = r.sources;
    j["profiles"] = json::array();
    for (const auto& p : r.profiles)
        j["profiles"].push_back({{"vertex", p.vertex}, {"dims", p.dims}});
    j["nakayama"] = r.nakayama;
    j["theorem1"] = {{"chains_checked", r.theorem1.chains_checked},
                     {"longest_chain", r.theorem1.longest_chain},
                     {"violations", r.theorem1.violations}};
    j["theorem2"] = {{"self_injective_not_simple", r.theorem2.self_injective_not_simple},
                     {"exists_simple_vanishing_to_n", r.theorem2.exists_simple_vanishing_to_n},
                     {"witness", optional_json(r.theorem2.witness)}};
    if (r.theorem3b)
        j["theorem3b"] = {{"unique_vertex", r.theorem3b->unique_vertex},
                          {"ext_n", r.theorem3b->ext_n}};
    else
        j["theorem3b"] = nullptr;
    if (r.theorem3c) {
        const auto& c = *r.theorem3c;
        j["theorem3c"] = {{"prime", c.prime},
                          {"length", c.length},
                          {"presentation_cokernel_dim", c.presentation_cokernel_dim},
                          {"closed_form_length", c.closed_form_length},
                          {"c", c.c},
                          {"d", c.d},
                          {"ext_dims", c.ext_dims},
                          {"checks_pass", c.checks_pass}};
    } else {
        j["theorem3c"] = nullptr;
    }
    if (r.star_sequence)
        j["star_sequence"] = {{"prime", r.star_sequence->prime},
                              {"envelope_labels", r.star_sequence->envelope_labels},
                              {"cokernel_dims", r.star_sequence->cokernel_dims},
                              {"ok", r.star_sequence->ok}};
    else
        j["star_sequence"] = nullptr;
    j["lemma2"] = r.lemma2;
    j["lemma4"] = r.lemma4;
    json diffs = json::array();
    for (const auto& d : r.oracle.diffs)
        diffs.push_back({{"prime", d.prime},
                         {"quantity", d.quantity},
                         {"j", d.j},
                         {"index", d.index},
                         {"combinatorial", d.combinatorial},
                         {"oracle", d.oracle}});
    j["oracle"] = {{"ran", r.oracle.ran},
                   {"primes", r.oracle.primes},
                   {"diffs", diffs},
                   {"profile_depth", r.oracle.profile_depth}};
    if (r.timing_ms)
        j["timing_ms"] = *r.timing_ms;
    return j;
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    j.at("adj").get_to(r.adj);
    r.connected = j.at("connected").get<bool>();
    if (!j.at("delta").is_null()) {
        const json& d = j["delta"];
        r.delta = DeltaShape{d.at("n").get<std::size_t>(), d.at("m").get<unsigned>(),
                             d.at("t").get<unsigned>(), d.at("cycle").get<std::vector<Vertex>>()};
    }
    r.self_injective = j.at("self_injective").get<bool>();
    r.simple_ring = j.at("simple_ring").get<bool>();
    j.at("sinks").get_to(r.sinks);
    j.at("sources").get_to(r.sources);
    for (const json& p : j.at("profiles"))
        r.profiles.push_back({p.at("vertex").get<Vertex>(), p.at("dims").get<std::vector<Dim>>()});
    j.at("nakayama").get_to(r.nakayama);
    const json& t1 = j.at("theorem1");
    r.theorem1 = {t1.at("chains_checked").get<std::size_t>(),
                  t1.at("longest_chain").get<std::size_t>(),
                  t1.at("violations").get<std::vector<std::string>>()};
    const json& t2 = j.at("theorem2");
    r.theorem2.self_injective_not_simple = t2.at("self_injective_not_simple").get<bool>();
    r.theorem2.exists_simple_vanishing_to_n = t2.at("exists_simple_vanishing_to_n").get<bool>();
    if (!t2.at("witness").is_null())
        r.theorem2.witness = t2["witness"].get<Vertex>();
    if (!j.at("theorem3b").is_null())
        r.theorem3b = Theorem3bSummary{j["theorem3b"].at("unique_vertex").get<Vertex>(),
                                       j["theorem3b"].at("ext_n").get<Dim>()};
    if (!j.at("theorem3c").is_null()) {
        const json& c = j["theorem3c"];
        r.theorem3c = Theorem3cSummary{c.at("prime").get<Scalar>(),
                                       c.at("length").get<std::size_t>(),
                                       c.at("presentation_cokernel_dim").get<std::size_t>(),
                                       c.at("closed_form_length").get<std::size_t>(),
                                       c.at("c").get<Dim>(),
                                       c.at("d").get<Dim>(),
                                       c.at("ext_dims").get<std::vector<Dim>>(),
                                       c.at("checks_pass").get<bool>()};
    }
    if (!j.at("star_sequence").is_null()) {
        const json& s = j["star_sequence"];
        r.star_sequence = StarSummary{s.at("prime").get<Scalar>(),
                                      s.at("envelope_labels").get<std::vector<Vertex>>(),
                                      s.at("cokernel_dims").get<SimpleVector>(),
                                      s.at("ok").get<bool>()};
    }
    j.at("lemma2").get_to(r.lemma2);
    j.at("lemma4").get_to(r.lemma4);
    const json& o = j.at("oracle");
    r.oracle.ran = o.at("ran").get<bool>();
    o.at("primes").get_to(r.oracle.primes);
    o.at("profile_depth").get_to(r.oracle.profile_depth);
    for (const json& d : o.at("diffs"))
        r.oracle.diffs.push_back({d.at("prime").get<Scalar>(), d.at("quantity").get<std::string>(),
                                  d.at("j").get<Vertex>(), d.at("index").get<std::size_t>(),
                                  d.at("combinatorial").get<Dim>(), d.at("oracle").get<Dim>()});
    if (j.contains("timing_ms"))
        r.timing_ms = j["timing_ms"].get<double>();
    return r;
}

} // namespace radsq
