// Command-line front end for the dominion library. Links the public C API
// only, so it doubles as a realistic consumer of include/dominion.h.

#include "dominion.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

// pinned exit codes
constexpr int kExitOk = 0;
constexpr int kExitProvenMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitMaterializeCap = 4;
constexpr int kExitConjectureFinding = 5;

constexpr unsigned long long kMaterializeCap = 1000000;

int exit_code_for(dom_status status) {
    switch (status) {
    case DOM_OK: return kExitOk;
    case DOM_ERR_CAPACITY:
    case DOM_ERR_OVERFLOW:
    case DOM_ERR_TIMEOUT: return kExitCapacity;
    default: return kExitParse; // malformed input of some kind
    }
}

[[noreturn]] void die(dom_status status) {
    std::cerr << "error: " << dom_last_error() << "\n";
    std::exit(exit_code_for(status));
}

void check(dom_status status) {
    if (status != DOM_OK) die(status);
}

struct GraphSource {
    std::string graph6;
    std::string edges_path;
    std::string family;

    std::string echo() const {
        if (!graph6.empty()) return "graph6:" + graph6;
        if (!edges_path.empty()) return "edges:" + edges_path;
        return "family:" + family;
    }

    dom_graph* open() const {
        dom_graph* g = nullptr;
        if (!graph6.empty()) {
            check(dom_graph_parse_graph6(graph6.c_str(), &g));
        } else if (!edges_path.empty()) {
            std::ifstream in(edges_path);
            if (!in) {
                std::cerr << "error: cannot open edge list file: " << edges_path << "\n";
                std::exit(kExitParse);
            }
            std::ostringstream text;
            text << in.rdbuf();
            check(dom_graph_parse_edge_list(text.str().c_str(), &g));
        } else {
            check(dom_graph_family(family.c_str(), &g));
        }
        return g;
    }
};

std::string zeta_string(const dom_report* report) {
    char buf[48];
    check(dom_report_zeta(report, buf, sizeof buf));
    return buf;
}

bool exceeds(const std::string& decimal, unsigned long long cap) {
    if (decimal.size() > 19) return true; // beyond 64-bit range, so beyond any cap here
    return std::stoull(decimal) > cap;
}

int default_search_cap() {
    const char* env = std::getenv("DOMINION_MAX_N");
    if (env == nullptr || *env == '\0') return 40;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 0 || v > 128) {
        std::cerr << "error: DOMINION_MAX_N must be an integer in 0..128, got \"" << env
                  << "\"\n";
        std::exit(kExitParse);
    }
    return static_cast<int>(v);
}

std::int64_t elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void print_document(const ordered_json& doc, bool as_json) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // human-readable rendering of the same numbers
    for (const auto& [key, value] : doc.items()) {
        if (key == "sets") {
            std::cout << "sets (" << value.size() << "):\n";
            for (const auto& set : value) {
                std::cout << "  {";
                for (std::size_t i = 0; i < set.size(); ++i)
                    std::cout << (i ? "," : "") << set[i].get<int>();
                std::cout << "}\n";
            }
        } else if (key == "set_flags") {
            std::cout << "set_flags:\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                std::cout << "  set " << i << ":";
                bool any = false;
                for (const auto& [flag, on] : value[i].items())
                    if (on.get<bool>()) {
                        std::cout << (any ? "," : " ") << flag;
                        any = true;
                    }
                if (!any) std::cout << " none";
                std::cout << "\n";
            }
        } else if (key == "census") {
            std::cout << "census:\n";
            for (const auto& [field, count] : value.items())
                std::cout << "  " << field << ": " << count << "\n";
        } else if (key == "records") {
            std::cout << "records (" << value.size() << "):\n";
            for (const auto& rec : value) {
                std::cout << "  " << rec["family"].get<std::string>() << " n="
                          << rec["n"].get<int>() << " formula(gamma="
                          << rec["formula_gamma"].get<int>() << ",zeta="
                          << rec["formula_zeta"].get<std::string>() << ") engine(gamma="
                          << rec["engine_gamma"].get<int>() << ",zeta="
                          << rec["engine_zeta"].get<std::string>() << ") "
                          << rec["status"].get<std::string>() << " "
                          << rec["outcome"].get<std::string>() << " "
                          << rec["elapsed_ms"].get<std::int64_t>() << "ms";
                const std::string note = rec["note"].get<std::string>();
                if (!note.empty()) std::cout << " (" << note << ")";
                std::cout << "\n";
            }
        } else {
            std::cout << key << ": "
                      << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

ordered_json census_json(const dom_census& c) {
    ordered_json out;
    out["total_gamma_sets"] = c.total_gamma_sets;
    out["perfect_count"] = c.perfect_count;
    out["connected_count"] = c.connected_count;
    out["total_count"] = c.total_count;
    out["independent_count"] = c.independent_count;
    out["clique_count"] = c.clique_count;
    out["none_count"] = c.none_count;
    return out;
}

int run_compute(const GraphSource& source, int max_n, std::int64_t budget_ms, bool as_json) {
    const auto start = std::chrono::steady_clock::now();
    dom_graph* g = source.open();
    dom_compute_opts opts = dom_compute_opts_default();
    opts.max_n = max_n;
    opts.budget_ms = budget_ms;
    dom_report* report = nullptr;
    check(dom_graph_dominion(g, &opts, &report));

    ordered_json doc;
    doc["schema_version"] = "1";
    doc["indexing"] = "0-based";
    doc["command"] = "compute";
    doc["input"] = source.echo();
    doc["n"] = dom_graph_vertex_count(g);
    doc["gamma"] = dom_report_gamma(report);
    doc["zeta"] = zeta_string(report);
    doc["status"] = "COMPUTED";
    doc["elapsed_ms"] = elapsed_since(start);
    print_document(doc, as_json);

    dom_report_free(report);
    dom_graph_free(g);
    return kExitOk;
}

int run_enumerate(const GraphSource& source, int max_n, std::int64_t budget_ms, bool classify,
                  bool force, bool as_json) {
    const auto start = std::chrono::steady_clock::now();
    dom_graph* g = source.open();
    dom_compute_opts opts = dom_compute_opts_default();
    opts.max_n = max_n;
    opts.budget_ms = budget_ms;

    // counting pass first: refuse huge materializations unless forced
    dom_report* counted = nullptr;
    check(dom_graph_dominion(g, &opts, &counted));
    const std::string zeta = zeta_string(counted);
    dom_report_free(counted);
    if (!force && exceeds(zeta, kMaterializeCap)) {
        std::cerr << "error: " << zeta << " sets exceed the materialization cap of "
                  << kMaterializeCap << "; pass --force to list them anyway\n";
        dom_graph_free(g);
        return kExitMaterializeCap;
    }

    opts.materialize = 1;
    dom_report* report = nullptr;
    check(dom_graph_dominion(g, &opts, &report));

    ordered_json doc;
    doc["schema_version"] = "1";
    doc["indexing"] = "0-based";
    doc["command"] = "enumerate";
    doc["input"] = source.echo();
    doc["n"] = dom_graph_vertex_count(g);
    doc["gamma"] = dom_report_gamma(report);
    doc["zeta"] = zeta;
    doc["status"] = "COMPUTED";

    ordered_json sets = ordered_json::array();
    ordered_json set_flags = ordered_json::array();
    const std::size_t count = dom_report_set_count(report);
    std::vector<int> members(128);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t len = 0;
        check(dom_report_set(report, i, members.data(), members.size(), &len));
        ordered_json set = ordered_json::array();
        for (std::size_t k = 0; k < len; ++k) set.push_back(members[k]);
        sets.push_back(std::move(set));
        if (classify) {
            dom_class_flags flags{};
            check(dom_classify(g, members.data(), len, &flags));
            ordered_json f;
            f["perfect"] = flags.perfect != 0;
            f["connected"] = flags.connected != 0;
            f["total"] = flags.total != 0;
            f["independent"] = flags.independent != 0;
            f["clique"] = flags.clique != 0;
            set_flags.push_back(std::move(f));
        }
    }
    doc["sets"] = std::move(sets);
    if (classify) {
        doc["set_flags"] = std::move(set_flags);
        dom_census c{};
        check(dom_graph_census(g, &opts, &c));
        doc["census"] = census_json(c);
    }
    doc["elapsed_ms"] = elapsed_since(start);
    print_document(doc, as_json);

    dom_report_free(report);
    dom_graph_free(g);
    return kExitOk;
}

const char* outcome_name(int outcome) {
    switch (outcome) {
    case DOM_OUTCOME_OK: return "ok";
    case DOM_OUTCOME_MISMATCH: return "mismatch";
    case DOM_OUTCOME_SKIPPED: return "skipped";
    case DOM_OUTCOME_TIMEOUT: return "timeout";
    default: return "engine_disagreement";
    }
}

int run_verify(const std::string& suite, std::optional<int> max_n, std::int64_t budget_ms,
               int threads, int search_cap, bool as_json) {
    const auto start = std::chrono::steady_clock::now();
    dom_verify_opts opts = dom_verify_opts_default();
    opts.budget_ms = budget_ms;
    opts.threads = threads;
    opts.search_max_n = search_cap;

    dom_records* records = nullptr;
    int bound = 0;
    if (suite == "families") {
        bound = max_n.value_or(18);
        check(dom_verify_families(bound, &opts, &records));
    } else if (suite == "conjecture") {
        bound = max_n.value_or(22);
        check(dom_verify_cycle_conjecture(bound, &opts, &records));
    } else {
        std::cerr << "error: unknown suite \"" << suite << "\" (families or conjecture)\n";
        return kExitParse;
    }

    const std::size_t count = dom_records_count(records);
    ordered_json recs = ordered_json::array();
    std::size_t ok = 0;
    std::size_t mismatch = 0;
    std::size_t skipped = 0;
    std::size_t timeout = 0;
    std::size_t disagree = 0;
    for (std::size_t i = 0; i < count; ++i) {
        ordered_json rec;
        rec["family"] = dom_record_family(records, i);
        rec["n"] = dom_record_n(records, i);
        rec["formula_gamma"] = dom_record_formula_gamma(records, i);
        char buf[48];
        check(dom_record_formula_zeta(records, i, buf, sizeof buf));
        rec["formula_zeta"] = std::string(buf);
        rec["engine_gamma"] = dom_record_engine_gamma(records, i);
        check(dom_record_engine_zeta(records, i, buf, sizeof buf));
        rec["engine_zeta"] = std::string(buf);
        rec["status"] =
            dom_record_status(records, i) == DOM_PROVEN ? "PROVEN" : "CONJECTURED";
        const int outcome = dom_record_outcome(records, i);
        rec["outcome"] = outcome_name(outcome);
        rec["match"] = dom_record_match(records, i) != 0;
        rec["elapsed_ms"] = dom_record_elapsed_ms(records, i);
        rec["note"] = dom_record_note(records, i);
        recs.push_back(std::move(rec));
        switch (outcome) {
        case DOM_OUTCOME_OK: ++ok; break;
        case DOM_OUTCOME_MISMATCH: ++mismatch; break;
        case DOM_OUTCOME_SKIPPED: ++skipped; break;
        case DOM_OUTCOME_TIMEOUT: ++timeout; break;
        default: ++disagree; break;
        }
    }

    std::string summary;
    if (suite == "conjecture") {
        char* line = nullptr;
        check(dom_records_summary(records, &line));
        summary = line;
        dom_string_free(line);
    } else {
        summary = std::to_string(count) + " records: " + std::to_string(ok) + " ok, " +
                  std::to_string(mismatch) + " mismatch, " + std::to_string(skipped) +
                  " skipped, " + std::to_string(timeout) + " timeout, " +
                  std::to_string(disagree) + " engine disagreement";
    }
    const int exit_class = dom_records_exit_class(records);

    ordered_json doc;
    doc["schema_version"] = "1";
    doc["indexing"] = "0-based";
    doc["command"] = "verify";
    doc["input"] = "suite:" + suite;
    doc["max_n"] = bound;
    doc["records"] = std::move(recs);
    doc["summary"] = summary;
    doc["exit_class"] = exit_class;
    doc["elapsed_ms"] = elapsed_since(start);
    print_document(doc, as_json);

    dom_records_free(records);
    return exit_class;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination number and minimum-dominating-set counting"};
    app.require_subcommand(1);
    const int env_cap = default_search_cap();

    GraphSource source;
    bool as_json = false;
    bool classify = false;
    bool force = false;
    int max_n = env_cap;
    std::int64_t budget_ms = 0;
    int threads = 0;
    std::string suite = "families";
    std::optional<int> sweep_max_n;

    const auto add_source = [&](CLI::App* cmd) {
        auto* grp = cmd->add_option_group("graph source", "exactly one input form");
        grp->add_option("--graph6", source.graph6, "graph6 string");
        grp->add_option("--edges", source.edges_path, "edge list file (\"n <vertex-count>\" then \"u v\" lines)");
        grp->add_option("--family", source.family,
                        "family spec: path:N cycle:N complete:N star:N sun:N "
                        "kpartite:M1,M2,... join:<spec>+<spec>");
        grp->require_option(1);
    };
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "machine-readable JSON output");
        cmd->add_option("--max-n", max_n,
                        "search size guard (default 40, or DOMINION_MAX_N; 0 disables)");
        cmd->add_option("--budget-ms", budget_ms, "time budget in milliseconds (0 = unlimited)");
    };

    CLI::App* compute = app.add_subcommand("compute", "gamma and zeta for one graph");
    add_source(compute);
    add_common(compute);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list the minimum dominating sets");
    add_source(enumerate);
    add_common(enumerate);
    enumerate->add_flag("--classify", classify, "per-set property flags plus the census");
    enumerate->add_flag("--force", force,
                        "materialize even past " + std::to_string(kMaterializeCap) + " sets");

    CLI::App* verify = app.add_subcommand("verify", "check the closed formulas against the engine");
    verify->add_option("--suite", suite, "families or conjecture")->required();
    verify->add_flag("--json", as_json, "machine-readable JSON output");
    verify->add_option("--max-n", sweep_max_n,
                       "sweep bound (default: families 18, conjecture 22)");
    verify->add_option("--budget-ms", budget_ms, "per-instance budget (0 = unlimited)");
    verify->add_option("--threads", threads, "worker threads (0 = machine parallelism)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    if (compute->parsed()) return run_compute(source, max_n, budget_ms, as_json);
    if (enumerate->parsed()) return run_enumerate(source, max_n, budget_ms, classify, force, as_json);
    return run_verify(suite, sweep_max_n, budget_ms, threads, env_cap, as_json);
}
