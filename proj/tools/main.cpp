#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ytdist/generate.hpp"
#include "ytdist/oracle.hpp"
#include "ytdist/perm_solver.hpp"

using nlohmann::json;
using namespace ytdist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

json transform_json(const Transform& tf) {
    json arr = json::array();
    for (const auto& tau : tf.taus) arr.push_back({tau.a, tau.b});
    return arr;
}

json report_json(const TreeMetric& t, const DistanceReport& r) {
    json per = json::array();
    for (const auto& e : r.per_cycle) {
        per.push_back({{"cycle", e.cycle.elems},
                       {"class", cycle_kind_name(e.cls.kind)},
                       {"weight", e.weight}});
    }
    bool exact = r.per_cycle.size() <= 1 || r.distance_upper == r.lower_bound || !t.is_ytree();
    return {{"distance_upper", r.distance_upper},
            {"lower_bound", r.lower_bound},
            {"displacement", r.displacement},
            {"method", r.method == SolveMethod::Merged ? "Merged" : "PerCycle"},
            {"exact", exact},
            {"per_cycle", per},
            {"transform", transform_json(r.transform)}};
}

void print_report_text(std::ostream& os, const json& j) {
    os << "distance_upper: " << j["distance_upper"] << '\n'
       << "lower_bound: " << j["lower_bound"] << '\n'
       << "displacement: " << j["displacement"] << '\n'
       << "method: " << j["method"].get<std::string>() << '\n'
       << "guarantee: " << (j["exact"].get<bool>() ? "exact" : "<= 4/3 * optimal") << '\n';
    for (const auto& e : j["per_cycle"]) {
        os << "cycle (";
        const auto& elems = e["cycle"];
        for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? " " : "") << elems[i].get<int>();
        os << ") " << e["class"].get<std::string>() << " weight=" << e["weight"] << '\n';
    }
}

std::vector<Transposition> load_transform_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::OutOfRange, "cannot open transform file " + path);
    std::vector<Transposition> taus;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int a = 0, b = 0;
        if (ls >> a >> b) taus.emplace_back(a, b);
        else if (line.find_first_not_of(" \t\r") != std::string::npos)
            fail(Errc::MalformedCycle, "line " + std::to_string(lineno) + ": expected 'a b'");
    }
    return taus;
}

int run_validate(const std::string& tree_path, bool as_json) {
    TreeMetric t = load_tree_file(tree_path);
    if (as_json) {
        json j{{"n", t.size()},
               {"shape", t.is_ytree() ? "YTree" : "Path"},
               {"total_weight", t.total_weight()}};
        if (t.is_ytree()) j["center"] = t.center();
        std::cout << j.dump(2) << '\n';
    } else if (t.is_ytree()) {
        std::cout << "YTree center=" << t.center() << " n=" << t.size()
                  << " total_weight=" << t.total_weight() << '\n';
    } else {
        std::cout << "Path n=" << t.size() << " total_weight=" << t.total_weight() << '\n';
    }
    return kExitOk;
}

int run_dist(const std::string& tree_path, const std::string& perm, const std::string& perm2,
             const std::string& perm_file, bool as_json) {
    TreeMetric t = load_tree_file(tree_path);
    std::vector<std::string> inputs;
    if (!perm_file.empty()) {
        std::ifstream in(perm_file);
        if (!in) fail(Errc::OutOfRange, "cannot open permutation file " + perm_file);
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) inputs.push_back(line);
    } else {
        inputs.push_back(perm);
    }
    json results = json::array();
    for (const std::string& text : inputs) {
        Permutation p = parse_permutation(text, t.size());
        if (!perm2.empty()) {
            Permutation q = parse_permutation(perm2, t.size());
            p = compose(q.inverse(), p); // the r with q r = p; d(p,q) by left-invariance
        }
        results.push_back(report_json(t, decompose_merged(t, p)));
    }
    if (as_json) {
        std::cout << (results.size() == 1 ? results[0] : results).dump(2) << '\n';
    } else {
        for (const auto& j : results) print_report_text(std::cout, j);
    }
    return kExitOk;
}

int run_decompose(const std::string& tree_path, const std::string& perm, bool as_json) {
    TreeMetric t = load_tree_file(tree_path);
    Permutation p = parse_permutation(perm, t.size());
    DistanceReport r = decompose_merged(t, p);
    if (as_json) {
        std::cout << report_json(t, r).dump(2) << '\n';
        return kExitOk;
    }
    Permutation prefix(t.size());
    for (const auto& tau : r.transform.taus) {
        prefix.apply_transposition(tau.a, tau.b);
        std::cout << "(" << tau.a << " " << tau.b << ") cost=" << t.phi(tau.a, tau.b)
                  << " product=" << format_cycles(prefix) << '\n';
    }
    std::cout << "total_weight: " << r.transform.total_weight << '\n';
    return kExitOk;
}

int run_verify(const std::string& tree_path, const std::string& perm,
               const std::string& transform_path, bool as_json) {
    TreeMetric t = load_tree_file(tree_path);
    Permutation p = parse_permutation(perm, t.size());
    VerificationReport rep = verify_transform(t, p, load_transform_file(transform_path));
    if (as_json) {
        std::cout << json{{"product_matches", rep.product_matches},
                          {"total_weight", rep.total_weight},
                          {"displacement", rep.displacement},
                          {"gap", rep.gap},
                          {"inefficiency_sum", rep.inefficiency_sum},
                          {"identity_holds", rep.identity_holds}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "product_matches: " << (rep.product_matches ? "yes" : "no") << '\n'
                  << "total_weight: " << rep.total_weight << '\n'
                  << "displacement: " << rep.displacement << '\n'
                  << "gap: " << rep.gap << '\n'
                  << "inefficiency_sum: " << rep.inefficiency_sum << '\n'
                  << "gap == inefficiency_sum/2: " << (rep.identity_holds ? "yes" : "no") << '\n';
    }
    return rep.product_matches ? kExitOk : kExitVerifyFail;
}

int run_oracle(const std::string& tree_path, const std::string& perm, int max_n, bool as_json) {
    TreeMetric t = load_tree_file(tree_path);
    Permutation p = parse_permutation(perm, t.size());
    SearchBudget budget;
    budget.max_n = max_n;
    auto [dist, tf] = exact_distance(t, p, budget);
    if (as_json) {
        std::cout << json{{"distance", dist}, {"transform", transform_json(tf)}}.dump(2) << '\n';
    } else {
        std::cout << "distance: " << dist << '\n' << "transform:";
        for (const auto& tau : tf.taus) std::cout << " (" << tau.a << " " << tau.b << ")";
        std::cout << '\n';
    }
    return kExitOk;
}

int run_bench(int tree_size, std::vector<int> lengths, std::uint64_t seed, bool as_json) {
    if (lengths.empty()) lengths = {10'000, 100'000, 1'000'000};
    std::mt19937_64 rng(seed);
    TreeMetric t = random_ytree(tree_size, rng, 1, 5);
    json rows = json::array();
    double prev_ms = 0;
    if (!as_json) std::cout << "length,time_ms,ops,time_ratio\n";
    for (int len : lengths) {
        Cycle c = random_cycle(tree_size, len, rng);
        SolveStats stats;
        auto start = std::chrono::steady_clock::now();
        Transform tf = decompose_cycle(t, c, &stats);
        auto end = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(end - start).count();
        double ratio = prev_ms > 0 ? ms / prev_ms : 0;
        prev_ms = ms;
        if (as_json) {
            rows.push_back({{"length", len},
                            {"time_ms", ms},
                            {"ops", stats.ops},
                            {"weight", tf.total_weight},
                            {"time_ratio", ratio}});
        } else {
            std::cout << len << ',' << ms << ',' << stats.ops << ',' << ratio << '\n';
        }
    }
    if (as_json) std::cout << rows.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted transposition distances between rankings under path and Y-tree metrics"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text")->configurable(false);

    std::string tree_path, perm, perm2, perm_file, transform_path;
    int max_n = 8;
    int tree_size = 1'000'000;
    std::vector<int> lengths;
    std::uint64_t seed = 12345;

    auto* validate = app.add_subcommand("validate-tree", "parse a tree file and report its shape");
    validate->add_option("tree", tree_path)->required();

    auto* dist = app.add_subcommand("dist", "distance between a ranking and the identity (or a second ranking)");
    dist->add_option("tree", tree_path)->required();
    dist->add_option("perm", perm);
    dist->add_option("perm2", perm2);
    dist->add_option("--perm-file", perm_file, "batch mode, one permutation per line");

    auto* decomp = app.add_subcommand("decompose", "print a minimum-cost (or 4/3-approximate) transform");
    decomp->add_option("tree", tree_path)->required();
    decomp->add_option("perm", perm)->required();

    auto* verify = app.add_subcommand("verify", "check a transposition sequence against a permutation");
    verify->add_option("tree", tree_path)->required();
    verify->add_option("perm", perm)->required();
    verify->add_option("transform", transform_path)->required();

    auto* oracle = app.add_subcommand("oracle", "exact distance by exhaustive shortest-path search");
    oracle->add_option("tree", tree_path)->required();
    oracle->add_option("perm", perm)->required();
    oracle->add_option("--max-n", max_n, "refuse instances larger than this");

    auto* bench = app.add_subcommand("bench", "time decompose_cycle on random cycles");
    bench->add_option("--tree-size", tree_size);
    bench->add_option("--lengths", lengths)->delimiter(',');
    bench->add_option("--seed", seed);

    // let `ytdist dist --json ...` reach the global flag
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(tree_path, as_json);
        if (dist->parsed()) {
            if (perm.empty() && perm_file.empty())
                fail(Errc::LengthMismatch, "dist needs a permutation or --perm-file");
            return run_dist(tree_path, perm, perm2, perm_file, as_json);
        }
        if (decomp->parsed()) return run_decompose(tree_path, perm, as_json);
        if (verify->parsed()) return run_verify(tree_path, perm, transform_path, as_json);
        if (oracle->parsed()) return run_oracle(tree_path, perm, max_n, as_json);
        if (bench->parsed()) return run_bench(tree_size, lengths, seed, as_json);
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
        return e.code() == Errc::BudgetExceeded ? kExitBudget : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
