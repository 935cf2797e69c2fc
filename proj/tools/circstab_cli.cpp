// circstab: stability of circulant graphs from the command line.
//
// Subcommands:
//   classify          one instance, JSON verdict on stdout
//   survey            many instances, JSON-lines on stdout + table on stderr
//   verify            named property suites, pass/fail report
//   conjecture-probe  instability vs shift-isomorphism probe (report only)
//
// Exit codes: 0 ok, 2 invalid input, 3 theorem falsification, 4 budget.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "circstab/aut_search.hpp"
#include "circstab/cohomology.hpp"
#include "circstab/projective.hpp"
#include "circstab/suites.hpp"
#include "circstab/twofold.hpp"

using namespace circstab;

namespace {

std::uint64_t node_budget_from_env() {
    if (const char* env = std::getenv("CIRCSTAB_NODE_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultNodeBudget;
}

ClassifyMode parse_mode(const std::string& mode) {
    if (mode == "criteria") return ClassifyMode::Criteria;
    if (mode == "oracle") return ClassifyMode::Oracle;
    if (mode == "cross-check") return ClassifyMode::CrossCheck;
    throw ValidationError("unknown mode '" + mode + "'");
}

int cmd_classify(int n, const std::string& set_csv, const std::string& mode_name,
                 std::uint64_t budget) {
    auto s = ConnectionSet::parse_members(n, set_csv);
    auto mode = parse_mode(mode_name);
    auto v = classify(s, mode, budget);
    std::string json = verdict_to_json(s, v);
    if (mode == ClassifyMode::CrossCheck) {
        json.back() = ',';
        json += "\"agreement\":true}";
    }
    std::cout << json << "\n";
    return 0;
}

struct SurveyOptions {
    int n = 0;
    int even_squarefree_upto = 0;
    bool all_sets = false;
    int sample = 0;
    std::uint64_t seed = 1;
    int parallel = 1;
    std::string mode_name = "cross-check";
    bool timing = false;
};

int cmd_survey(const SurveyOptions& opt, std::uint64_t budget) {
    std::vector<int> moduli;
    if (opt.even_squarefree_upto > 0) {
        for (int n = 6; n <= opt.even_squarefree_upto; n += 2)
            if (is_squarefree(n)) moduli.push_back(n);
    } else if (opt.n > 0) {
        moduli.push_back(opt.n);
    } else {
        throw ValidationError("survey: pass --n or --even-squarefree-upto");
    }

    auto mode = parse_mode(opt.mode_name);
    std::vector<ConnectionSet> tasks;
    for (int n : moduli) {
        if (opt.all_sets) {
            if (n > 26) throw ValidationError("survey: --all-sets is limited to n <= 26");
            auto sets = suites::all_connection_sets(n);
            tasks.insert(tasks.end(), sets.begin(), sets.end());
        } else if (opt.sample > 0) {
            auto sets = suites::sampled_connection_sets(n, opt.sample, opt.seed);
            tasks.insert(tasks.end(), sets.begin(), sets.end());
        } else {
            throw ValidationError("survey: pass --all-sets or --sample k");
        }
    }

    struct Row {
        bool emitted = false;
        std::string json;
        std::string status, reason;
        double ms = 0;
    };
    std::vector<Row> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<int> abort_code{0};
    std::mutex err_lock;
    std::string abort_detail;

    auto abort_with = [&](int code, const std::string& what) {
        std::lock_guard<std::mutex> lock(err_lock);
        abort_code = code;
        abort_detail = what;
    };
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || abort_code.load()) return;
            const auto& s = tasks[i];
            auto g = build_circulant(s);
            if (!is_connected(g) || is_bipartite(g)) continue;  // records cover the survey scope
            auto t0 = std::chrono::steady_clock::now();
            try {
                auto v = classify(s, mode, budget);
                rows[i].json = verdict_to_json(s, v);
                rows[i].status = to_string(v.status);
                rows[i].reason = to_string(v.reason);
                rows[i].ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
                rows[i].emitted = true;
            } catch (const FalsificationError& e) {
                abort_with(3, e.what());
                return;
            } catch (const BudgetExceeded& e) {
                abort_with(4, std::string(e.what()) + " at " + s.to_string());
                return;
            }
        }
    };
    if (opt.parallel <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < opt.parallel; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (abort_code) {
        std::cerr << (abort_code == 3 ? "FALSIFICATION: " : "budget: ") << abort_detail << "\n";
        return abort_code;
    }

    std::map<std::string, long> by_verdict;
    long emitted = 0;
    for (auto& row : rows) {
        if (!row.emitted) continue;
        if (opt.timing) {
            std::string json = row.json;
            json.back() = ',';
            json += "\"ms\":" + std::to_string(row.ms) + "}";
            std::cout << json << "\n";
        } else {
            std::cout << row.json << "\n";
        }
        ++by_verdict[row.status + "/" + row.reason];
        ++emitted;
    }
    std::cerr << "surveyed " << emitted << " connected non-bipartite instances\n";
    for (const auto& [key, count] : by_verdict) {
        std::cerr.width(8);
        std::cerr << count << "  " << key << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite) {
    auto report = suites::run_named_suite(suite);
    for (const auto& c : report.checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.label
                  << (c.detail.empty() ? "" : "  -- " + c.detail) << "\n";
    std::cout << "suite " << report.name << ": " << (report.all_passed() ? "OK" : "FAILED")
              << " (" << report.checks.size() << " checks)\n";
    return report.all_passed() ? 0 : 3;
}

// group spec input: JSON {degree, generators: [[images]...]}
ActionGroup load_action_group(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ValidationError("h1: cannot open '" + path + "'");
    nlohmann::json spec = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (spec.is_discarded() || !spec.contains("degree") || !spec.contains("generators"))
        throw ValidationError("h1: expected {degree, generators: [[images]...]}");
    int degree = spec["degree"].get<int>();
    std::vector<Perm> gens;
    for (const auto& images : spec["generators"]) {
        std::vector<std::uint8_t> img;
        for (const auto& v : images) img.push_back(static_cast<std::uint8_t>(v.get<int>()));
        if (static_cast<int>(img.size()) != degree)
            throw ValidationError("h1: generator length differs from degree");
        Perm p(std::move(img));
        if (!p.is_valid()) throw ValidationError("h1: generator is not a permutation");
        gens.push_back(std::move(p));
    }
    return ActionGroup::generate(degree, std::move(gens));
}

int cmd_h1(const std::string& path, bool scan) {
    auto g = load_action_group(path);
    auto space = cocycle_space(g);
    nlohmann::json out{{"degree", g.degree()},
                       {"order", g.size()},
                       {"dim_z1", space.z_dim()},
                       {"dim_b1", space.b_dim()},
                       {"dim_h1", space.h1_dim()}};
    bool scan_ok = true;
    if (scan) {
        auto report = indicator_cocycle_scan(g);
        out["scan"] = {{"hypotheses_ok", report.hypotheses_ok},
                       {"hypothesis_issue", report.hypothesis_issue},
                       {"assertion_ok", report.assertion_ok},
                       {"vanishing_dim", report.vanishing_dim},
                       {"has_indicator", report.has_indicator},
                       {"g0_order", report.g0_order}};
        scan_ok = report.hypotheses_ok && report.assertion_ok;
    }
    std::cout << out.dump() << "\n";
    return scan_ok ? 0 : 3;
}

int cmd_probe(const std::vector<int>& ns, int sample, std::uint64_t seed) {
    long anomalies = 0;
    for (int n : ns) {
        std::vector<ConnectionSet> sets;
        if (sample > 0)
            sets = suites::sampled_connection_sets(n, sample, seed);
        else
            sets = suites::all_connection_sets(n);
        auto found = suites::conjecture_probe(sets);
        for (const auto& a : found) {
            ++anomalies;
            std::cout << "{\"set\":\"" << a.set << "\",\"multiplier_witness\":"
                      << (a.multiplier_witness ? "true" : "false")
                      << ",\"isomorphic\":" << (a.isomorphic ? "true" : "false") << "}\n";
        }
        std::cerr << "n=" << n << ": " << sets.size() << " sets probed, " << found.size()
                  << " anomalies\n";
    }
    std::cerr << "conjecture probe: " << anomalies << " anomalies (report only)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant graph stability laboratory"};
    app.require_subcommand(1);
    std::uint64_t budget = node_budget_from_env();

    // classify
    int cl_n = 0;
    std::string cl_set, cl_mode = "criteria";
    auto* classify_cmd = app.add_subcommand("classify", "classify one circulant");
    classify_cmd->add_option("n", cl_n, "modulus")->required();
    classify_cmd->add_option("set", cl_set, "connection set, comma separated")->required();
    classify_cmd->add_option("--mode", cl_mode, "criteria|oracle|cross-check");

    // survey
    SurveyOptions sv;
    auto* survey_cmd = app.add_subcommand("survey", "classify families of circulants");
    survey_cmd->add_option("--n", sv.n, "single modulus");
    survey_cmd->add_option("--even-squarefree-upto", sv.even_squarefree_upto,
                           "all even square-free n up to the bound");
    survey_cmd->add_flag("--all-sets", sv.all_sets, "every nonempty symmetric set (n <= 26)");
    survey_cmd->add_option("--sample", sv.sample, "number of sampled sets per modulus");
    survey_cmd->add_option("--seed", sv.seed, "sampling seed");
    survey_cmd->add_option("--parallel", sv.parallel, "worker threads");
    survey_cmd->add_option("--mode", sv.mode_name, "criteria|oracle|cross-check");
    survey_cmd->add_flag("--timing", sv.timing,
                         "append per-record timing (breaks byte-for-byte determinism)");

    // verify
    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("--suite", suite, "alpha|chains|replacement|schur|cohomology|all");

    // h1
    std::string h1_group;
    bool h1_scan = false;
    auto* h1_cmd = app.add_subcommand("h1", "first cohomology of a user-supplied action");
    h1_cmd->add_option("--group", h1_group, "JSON file {degree, generators: [[images]...]}")
        ->required();
    h1_cmd->add_flag("--scan", h1_scan, "also run the index-2 indicator scan");

    // conjecture-probe
    std::vector<int> probe_ns;
    int probe_sample = 0;
    std::uint64_t probe_seed = 1;
    auto* probe_cmd = app.add_subcommand(
        "conjecture-probe", "probe instability vs shift-isomorphism at n = 2m, m odd");
    probe_cmd->add_option("--n", probe_ns, "moduli to probe")->required();
    probe_cmd->add_option("--sample", probe_sample, "sampled sets per modulus (default: all)");
    probe_cmd->add_option("--seed", probe_seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(cl_n, cl_set, cl_mode, budget);
        if (survey_cmd->parsed()) return cmd_survey(sv, budget);
        if (verify_cmd->parsed()) return cmd_verify(suite);
        if (h1_cmd->parsed()) return cmd_h1(h1_group, h1_scan);
        if (probe_cmd->parsed()) return cmd_probe(probe_ns, probe_sample, probe_seed);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FalsificationError& e) {
        std::cerr << "FALSIFICATION: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
