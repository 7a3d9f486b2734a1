#include "dominion.h"

#include "core/classify.hpp"
#include "core/closed_forms.hpp"
#include "core/engine.hpp"
#include "core/error.hpp"
#include "core/family_spec.hpp"
#include "core/graph.hpp"
#include "core/graph_io.hpp"
#include "core/oracle.hpp"
#include "core/u128.hpp"
#include "core/verify.hpp"

#include <chrono>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

struct dom_graph {
    dominion::Graph g;
};

struct dom_report {
    dominion::GammaReport r;
};

struct dom_records {
    std::vector<dominion::VerificationRecord> v;
    // decimal renderings owned here so const char* accessors stay valid
    std::vector<std::string> formula_zeta;
    std::vector<std::string> engine_zeta;
};

namespace {

thread_local std::string t_last_error;

dom_status to_status(dominion::Errc code) {
    return static_cast<dom_status>(static_cast<int>(code) + 1);
}

template <typename Fn>
dom_status guarded(Fn&& fn) {
    try {
        fn();
        return DOM_OK;
    } catch (const dominion::Error& e) {
        t_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return DOM_ERR_INVALID_ARGUMENT;
    }
}

dom_status bad_argument(const char* what) {
    t_last_error = what;
    return DOM_ERR_INVALID_ARGUMENT;
}

dom_status copy_out(const std::string& s, char** out) {
    char* mem = new char[s.size() + 1];
    std::memcpy(mem, s.c_str(), s.size() + 1);
    *out = mem;
    return DOM_OK;
}

dom_status copy_to(const std::string& s, char* buf, size_t buflen) {
    if (buf == nullptr || buflen < s.size() + 1)
        return bad_argument("output buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return DOM_OK;
}

dominion::SearchOptions to_search_options(const dom_compute_opts* opts, bool materialize) {
    const dom_compute_opts defaults = dom_compute_opts_default();
    if (opts == nullptr) opts = &defaults;
    dominion::SearchOptions sopts;
    sopts.materialize = materialize || opts->materialize != 0;
    sopts.max_n = opts->max_n;
    if (opts->budget_ms != 0)
        sopts.deadline =
            std::chrono::steady_clock::now() + std::chrono::milliseconds(opts->budget_ms);
    return sopts;
}

dominion::VerifyOptions to_verify_options(const dom_verify_opts* opts) {
    const dom_verify_opts defaults = dom_verify_opts_default();
    if (opts == nullptr) opts = &defaults;
    dominion::VerifyOptions vopts;
    vopts.engine = opts->use_oracle != 0 ? dominion::EngineChoice::oracle
                                         : dominion::EngineChoice::search;
    vopts.budget_ms = opts->budget_ms;
    vopts.threads = opts->threads;
    vopts.search_max_n = opts->search_max_n;
    return vopts;
}

void make_graph(dom_graph** out, dominion::Graph g) {
    if (out == nullptr)
        dominion::fail(dominion::Errc::invalid_argument, "null output pointer");
    *out = new dom_graph{std::move(g)};
}

void make_records(dom_records** out, std::vector<dominion::VerificationRecord> v) {
    if (out == nullptr)
        dominion::fail(dominion::Errc::invalid_argument, "null output pointer");
    auto* recs = new dom_records{std::move(v), {}, {}};
    recs->formula_zeta.reserve(recs->v.size());
    recs->engine_zeta.reserve(recs->v.size());
    for (const dominion::VerificationRecord& rec : recs->v) {
        recs->formula_zeta.push_back(dominion::u128_to_string(rec.formula_zeta));
        recs->engine_zeta.push_back(dominion::u128_to_string(rec.engine_zeta));
    }
    *out = recs;
}

dom_status fill_family_value(const dominion::FamilyValue& value, dom_family_value* out) {
    if (out == nullptr) return bad_argument("null output pointer");
    out->gamma = value.gamma.value_or(0);
    const std::string zeta = dominion::u128_to_string(value.zeta);
    if (zeta.size() + 1 > sizeof out->zeta) return bad_argument("zeta buffer overflow");
    std::memcpy(out->zeta, zeta.c_str(), zeta.size() + 1);
    out->status = value.status == dominion::ProofStatus::proven ? DOM_PROVEN : DOM_CONJECTURED;
    if (value.source.size() + 1 > sizeof out->source)
        return bad_argument("source buffer overflow");
    std::memcpy(out->source, value.source.c_str(), value.source.size() + 1);
    return DOM_OK;
}

bool record_index_ok(const dom_records* recs, size_t i) {
    return recs != nullptr && i < recs->v.size();
}

} // namespace

const char* dom_last_error(void) { return t_last_error.c_str(); }

void dom_string_free(char* s) { delete[] s; }

/* ---- graph construction -------------------------------------------- */

dom_status dom_graph_new(int n, dom_graph** out) {
    return guarded([&] { make_graph(out, dominion::Graph(n)); });
}

dom_status dom_graph_add_edge(dom_graph* g, int u, int v) {
    if (g == nullptr) return bad_argument("null graph");
    return guarded([&] { g->g.add_edge(u, v); });
}

void dom_graph_free(dom_graph* g) { delete g; }

dom_status dom_graph_path(int n, dom_graph** out) {
    return guarded([&] { make_graph(out, dominion::make_path(n)); });
}

dom_status dom_graph_cycle(int n, dom_graph** out) {
    return guarded([&] { make_graph(out, dominion::make_cycle(n)); });
}

dom_status dom_graph_complete(int n, dom_graph** out) {
    return guarded([&] { make_graph(out, dominion::make_complete(n)); });
}

dom_status dom_graph_star(int leaves, dom_graph** out) {
    return guarded([&] { make_graph(out, dominion::make_star(leaves)); });
}

dom_status dom_graph_sun(int n, dom_graph** out) {
    return guarded([&] { make_graph(out, dominion::make_sun(n)); });
}

dom_status dom_graph_kpartite(const int* parts, size_t k, dom_graph** out) {
    if (parts == nullptr && k > 0) return bad_argument("null parts array");
    return guarded([&] {
        make_graph(out, dominion::make_complete_multipartite(std::vector<int>(parts, parts + k)));
    });
}

dom_status dom_graph_join(const dom_graph* a, const dom_graph* b, dom_graph** out) {
    if (a == nullptr || b == nullptr) return bad_argument("null graph");
    return guarded([&] { make_graph(out, dominion::join(a->g, b->g)); });
}

dom_status dom_graph_family(const char* spec, dom_graph** out) {
    if (spec == nullptr) return bad_argument("null family spec");
    return guarded([&] {
        make_graph(out, dominion::build_family_graph(dominion::parse_family_spec(spec)));
    });
}

dom_status dom_graph_parse_edge_list(const char* text, dom_graph** out) {
    if (text == nullptr) return bad_argument("null text");
    return guarded([&] { make_graph(out, dominion::parse_edge_list(text)); });
}

dom_status dom_graph_emit_edge_list(const dom_graph* g, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] { copy_out(dominion::emit_edge_list(g->g), out); });
}

dom_status dom_graph_parse_graph6(const char* text, dom_graph** out) {
    if (text == nullptr) return bad_argument("null text");
    return guarded([&] { make_graph(out, dominion::parse_graph6(text)); });
}

dom_status dom_graph_emit_graph6(const dom_graph* g, char** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] { copy_out(dominion::emit_graph6(g->g), out); });
}

int dom_graph_vertex_count(const dom_graph* g) { return g == nullptr ? 0 : g->g.vertex_count(); }

unsigned long long dom_graph_edge_count(const dom_graph* g) {
    return g == nullptr ? 0 : g->g.edge_count();
}

int dom_graph_adjacent(const dom_graph* g, int u, int v) {
    if (g == nullptr) return 0;
    if (u < 0 || v < 0 || u >= g->g.vertex_count() || v >= g->g.vertex_count()) return 0;
    return g->g.adjacent(u, v) ? 1 : 0;
}

int dom_graph_connected(const dom_graph* g) {
    return g != nullptr && dominion::is_connected(g->g) ? 1 : 0;
}

/* ---- exact computation ---------------------------------------------- */

dom_compute_opts dom_compute_opts_default(void) { return dom_compute_opts{0, 40, 0}; }

dom_status dom_graph_dominion(const dom_graph* g, const dom_compute_opts* opts,
                              dom_report** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        *out = new dom_report{dominion::dominion(g->g, to_search_options(opts, false))};
    });
}

dom_status dom_graph_dominion_oracle(const dom_graph* g, int materialize, dom_report** out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded(
        [&] { *out = new dom_report{dominion::brute_force_dominion(g->g, materialize != 0)}; });
}

void dom_report_free(dom_report* r) { delete r; }

int dom_report_gamma(const dom_report* r) { return r == nullptr ? 0 : r->r.gamma; }

dom_status dom_report_zeta(const dom_report* r, char* buf, size_t buflen) {
    if (r == nullptr) return bad_argument("null report");
    return copy_to(dominion::u128_to_string(r->r.zeta), buf, buflen);
}

size_t dom_report_set_count(const dom_report* r) {
    return r != nullptr && r->r.sets ? r->r.sets->size() : 0;
}

dom_status dom_report_set(const dom_report* r, size_t i, int* out, size_t cap, size_t* out_len) {
    if (r == nullptr || out == nullptr || out_len == nullptr)
        return bad_argument("null argument");
    if (!r->r.sets || i >= r->r.sets->size()) return bad_argument("set index out of range");
    const std::vector<int> members = (*r->r.sets)[i].members();
    if (members.size() > cap) return bad_argument("output buffer too small");
    for (size_t k = 0; k < members.size(); ++k) out[k] = members[k];
    *out_len = members.size();
    return DOM_OK;
}

/* ---- gamma-set classification --------------------------------------- */

dom_status dom_classify(const dom_graph* g, const int* vertices, size_t len,
                        dom_class_flags* out) {
    if (g == nullptr || out == nullptr || (vertices == nullptr && len > 0))
        return bad_argument("null argument");
    return guarded([&] {
        dominion::VertexSet s{};
        for (size_t i = 0; i < len; ++i) {
            if (vertices[i] < 0 || vertices[i] >= g->g.vertex_count())
                dominion::fail(dominion::Errc::invalid_argument,
                               "vertex " + std::to_string(vertices[i]) + " out of range");
            s.set(vertices[i]);
        }
        const dominion::ClassFlags flags = dominion::classify(g->g, s);
        out->perfect = flags.perfect ? 1 : 0;
        out->connected = flags.connected ? 1 : 0;
        out->total = flags.total ? 1 : 0;
        out->independent = flags.independent ? 1 : 0;
        out->clique = flags.clique ? 1 : 0;
    });
}

dom_status dom_graph_census(const dom_graph* g, const dom_compute_opts* opts, dom_census* out) {
    if (g == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        const dominion::Census c = dominion::census(g->g, to_search_options(opts, false));
        const auto narrow = [](dominion::u128 v) {
            if (v > std::numeric_limits<unsigned long long>::max())
                dominion::fail(dominion::Errc::overflow, "census count exceeds 64 bits");
            return static_cast<unsigned long long>(v);
        };
        out->total_gamma_sets = narrow(c.total_gamma_sets);
        out->perfect_count = narrow(c.perfect_count);
        out->connected_count = narrow(c.connected_count);
        out->total_count = narrow(c.total_count);
        out->independent_count = narrow(c.independent_count);
        out->clique_count = narrow(c.clique_count);
        out->none_count = narrow(c.none_count);
    });
}

/* ---- closed formulas ------------------------------------------------- */

dom_status dom_path_dominion(int n, dom_family_value* out) {
    dominion::FamilyValue value;
    const dom_status st = guarded([&] { value = dominion::path_dominion(n); });
    return st != DOM_OK ? st : fill_family_value(value, out);
}

dom_status dom_cycle_dominion(int n, dom_family_value* out) {
    dominion::FamilyValue value;
    const dom_status st = guarded([&] { value = dominion::cycle_dominion(n); });
    return st != DOM_OK ? st : fill_family_value(value, out);
}

dom_status dom_sun_dominion(int n, dom_family_value* out) {
    dominion::FamilyValue value;
    const dom_status st = guarded([&] { value = dominion::sun_dominion(n); });
    return st != DOM_OK ? st : fill_family_value(value, out);
}

dom_status dom_multipartite_dominion(const int* parts, size_t k, dom_family_value* out) {
    if (parts == nullptr && k > 0) return bad_argument("null parts array");
    dominion::FamilyValue value;
    const dom_status st = guarded(
        [&] { value = dominion::multipartite_dominion(std::vector<int>(parts, parts + k)); });
    return st != DOM_OK ? st : fill_family_value(value, out);
}

dom_status dom_join_gamma(int gamma1, int gamma2, int* out) {
    if (out == nullptr) return bad_argument("null output pointer");
    return guarded([&] { *out = dominion::join_gamma(gamma1, gamma2); });
}

dom_status dom_join_dominion(const dom_graph* g1, const dom_report* r1, const dom_graph* g2,
                             const dom_report* r2, dom_family_value* out) {
    if (g1 == nullptr || r1 == nullptr || g2 == nullptr || r2 == nullptr)
        return bad_argument("null argument");
    dominion::FamilyValue value;
    const dom_status st =
        guarded([&] { value = dominion::join_dominion(g1->g, r1->r, g2->g, r2->r); });
    return st != DOM_OK ? st : fill_family_value(value, out);
}

dom_status dom_iterated_join_dominion(int gamma, unsigned long long zeta, int r,
                                      unsigned long long* out) {
    if (out == nullptr) return bad_argument("null output pointer");
    return guarded([&] {
        const dominion::u128 v = dominion::iterated_join_dominion(gamma, zeta, r);
        if (v > std::numeric_limits<unsigned long long>::max())
            dominion::fail(dominion::Errc::overflow, "iterated join dominion exceeds 64 bits");
        *out = static_cast<unsigned long long>(v);
    });
}

dom_status dom_dominion_bounds(int n, int gamma, char* low, size_t low_len, char* high,
                               size_t high_len) {
    std::pair<dominion::u128, dominion::u128> bounds;
    const dom_status st = guarded([&] { bounds = dominion::dominion_bounds(n, gamma); });
    if (st != DOM_OK) return st;
    const dom_status lo = copy_to(dominion::u128_to_string(bounds.first), low, low_len);
    if (lo != DOM_OK) return lo;
    return copy_to(dominion::u128_to_string(bounds.second), high, high_len);
}

dom_status dom_join_lower_bound(int n1, int n2, unsigned long long* out) {
    if (out == nullptr) return bad_argument("null output pointer");
    if (n1 < 0 || n2 < 0) return bad_argument("negative vertex count");
    *out = static_cast<unsigned long long>(n1) * static_cast<unsigned long long>(n2);
    return DOM_OK;
}

/* ---- verification harness -------------------------------------------- */

dom_verify_opts dom_verify_opts_default(void) { return dom_verify_opts{0, 0, 0, 40}; }

dom_status dom_verify_paths(int lo, int hi, const dom_verify_opts* opts, dom_records** out) {
    return guarded([&] { make_records(out, dominion::verify_paths(lo, hi, to_verify_options(opts))); });
}

dom_status dom_verify_cycles(int lo, int hi, const dom_verify_opts* opts, dom_records** out) {
    return guarded(
        [&] { make_records(out, dominion::verify_cycles(lo, hi, to_verify_options(opts))); });
}

dom_status dom_verify_suns(int lo, int hi, const dom_verify_opts* opts, dom_records** out) {
    return guarded(
        [&] { make_records(out, dominion::verify_suns(lo, hi, to_verify_options(opts))); });
}

dom_status dom_verify_multipartite(int max_total, const dom_verify_opts* opts,
                                   dom_records** out) {
    return guarded([&] {
        make_records(out, dominion::verify_multipartite(max_total, to_verify_options(opts)));
    });
}

dom_status dom_verify_joins(const dom_verify_opts* opts, dom_records** out) {
    return guarded([&] { make_records(out, dominion::verify_joins(to_verify_options(opts))); });
}

dom_status dom_verify_families(int max_n, const dom_verify_opts* opts, dom_records** out) {
    return guarded([&] {
        make_records(out, dominion::verify_families_suite(max_n, to_verify_options(opts)));
    });
}

dom_status dom_verify_cycle_conjecture(int max_n, const dom_verify_opts* opts,
                                       dom_records** out) {
    return guarded([&] {
        make_records(out, dominion::verify_cycle_conjecture(max_n, to_verify_options(opts)));
    });
}

void dom_records_free(dom_records* recs) { delete recs; }

size_t dom_records_count(const dom_records* recs) { return recs == nullptr ? 0 : recs->v.size(); }

const char* dom_record_family(const dom_records* recs, size_t i) {
    return record_index_ok(recs, i) ? recs->v[i].family.c_str() : nullptr;
}

int dom_record_n(const dom_records* recs, size_t i) {
    return record_index_ok(recs, i) ? recs->v[i].n : 0;
}

int dom_record_formula_gamma(const dom_records* recs, size_t i) {
    return record_index_ok(recs, i) ? recs->v[i].formula_gamma : 0;
}

int dom_record_engine_gamma(const dom_records* recs, size_t i) {
    return record_index_ok(recs, i) ? recs->v[i].engine_gamma : 0;
}

dom_status dom_record_formula_zeta(const dom_records* recs, size_t i, char* buf, size_t buflen) {
    if (!record_index_ok(recs, i)) return bad_argument("record index out of range");
    return copy_to(recs->formula_zeta[i], buf, buflen);
}

dom_status dom_record_engine_zeta(const dom_records* recs, size_t i, char* buf, size_t buflen) {
    if (!record_index_ok(recs, i)) return bad_argument("record index out of range");
    return copy_to(recs->engine_zeta[i], buf, buflen);
}

int dom_record_status(const dom_records* recs, size_t i) {
    if (!record_index_ok(recs, i)) return DOM_PROVEN;
    return recs->v[i].status == dominion::ProofStatus::proven ? DOM_PROVEN : DOM_CONJECTURED;
}

int dom_record_outcome(const dom_records* recs, size_t i) {
    if (!record_index_ok(recs, i)) return DOM_OUTCOME_SKIPPED;
    switch (recs->v[i].outcome) {
    case dominion::VerifyOutcome::ok: return DOM_OUTCOME_OK;
    case dominion::VerifyOutcome::mismatch: return DOM_OUTCOME_MISMATCH;
    case dominion::VerifyOutcome::skipped: return DOM_OUTCOME_SKIPPED;
    case dominion::VerifyOutcome::timeout: return DOM_OUTCOME_TIMEOUT;
    case dominion::VerifyOutcome::engine_disagreement: return DOM_OUTCOME_ENGINE_DISAGREEMENT;
    }
    return DOM_OUTCOME_SKIPPED;
}

int dom_record_match(const dom_records* recs, size_t i) {
    return record_index_ok(recs, i) && recs->v[i].match ? 1 : 0;
}

long long dom_record_elapsed_ms(const dom_records* recs, size_t i) {
    return record_index_ok(recs, i) ? recs->v[i].elapsed_ms : 0;
}

const char* dom_record_note(const dom_records* recs, size_t i) {
    return record_index_ok(recs, i) ? recs->v[i].note.c_str() : nullptr;
}

int dom_records_exit_class(const dom_records* recs) {
    return recs == nullptr ? 0 : dominion::exit_class(recs->v);
}

dom_status dom_records_summary(const dom_records* recs, char** out) {
    if (recs == nullptr || out == nullptr) return bad_argument("null argument");
    return copy_out(dominion::conjecture_summary(recs->v), out);
}
