#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxkcut/bench.hpp"
#include "maxkcut/certify.hpp"
#include "maxkcut/errors.hpp"
#include "maxkcut/exact.hpp"
#include "maxkcut/export.hpp"
#include "maxkcut/formulations.hpp"
#include "maxkcut/relaxations.hpp"

namespace {

using namespace maxkcut;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadParams, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::BadParams, "cannot write " + out_path);
    out << text;
}

int cmd_solve(const std::string& file, int k, const std::string& method, double time_cap) {
    const Graph g = load_graph(file);
    ExactResult res = method == "brute" ? brute_force_opt(g, k)
                                        : branch_and_bound_opt(g, k, time_cap);
    nlohmann::json j{{"instance", file},
                     {"k", k},
                     {"method", method},
                     {"value", res.value},
                     {"proved", res.proved},
                     {"upper_bound", res.upper_bound},
                     {"nodes", res.nodes},
                     {"assignment", res.partitioning.assignment}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_relax(const std::string& file, int k, const std::string& method, bool lazy) {
    const Graph g = load_graph(file);
    nlohmann::json j{{"instance", file}, {"k", k}, {"method", method}};
    if (method == "vmilo") {
        j["bound"] = vmilo_relax_bound(g);
        j["status"] = "closed-form";
    } else {
        const RelaxBound b = method == "emilo" ? emilo_relax_bound(g, k, lazy)
                                               : remilo_relax_bound(g, k);
        j["bound"] = b.value;
        j["status"] = b.converged ? "optimal" : "non-converged";
        if (lazy && method == "emilo") j["rounds"] = b.rounds;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_export(const std::string& file, int k, const std::string& formulation,
               const std::string& format, const std::string& out_path) {
    const Graph g = load_graph(file);
    Model model;
    if (formulation == "bqo") model = build_bqo(g, k);
    else if (formulation == "vmilo") model = build_vmilo(g, k);
    else if (formulation == "emilo") model = build_emilo(g, k, false);
    else if (formulation == "remilo") model = build_remilo(g, k).model;
    else if (formulation == "misdo1") model = build_misdo(g, k, MisdoVariant::I);
    else model = build_misdo(g, k, MisdoVariant::II);
    write_or_print(format == "lp" ? export_lp_format(model) : export_sdpa_format(model),
                   out_path);
    return 0;
}

int cmd_lift_check(const std::string& file, int k, const std::string& variant,
                   long long samples, std::uint64_t seed) {
    const Graph g = load_graph(file);
    const int n = g.num_vertices();
    const auto xs = sample_fractional_x(n, k, seed, static_cast<int>(samples));
    long long failures = 0;
    double worst = 0.0;
    std::string witness;
    for (const auto& x : xs) {
        Membership mem{true, 0.0, ""};
        if (variant == "y") {
            const auto lifted = lift(x, g, LiftVariant::Y);
            mem = member_vmilo(g, k, x, lifted.y);
        } else if (variant == "z") {
            const auto lifted = lift(x, g, LiftVariant::Z);
            mem = member_emilo(lifted.z, n, k);
        } else if (variant == "Z") {
            const auto lifted = lift(x, g, LiftVariant::BigZ);
            mem = member_misdo(*lifted.matrix, k, MisdoVariant::I, 1e-8);
        } else {
            const auto lifted = lift(x, g, LiftVariant::BigZbar);
            mem = member_misdo(*lifted.matrix, k, MisdoVariant::II, 1e-8);
        }
        if (!mem.inside) {
            ++failures;
            if (mem.worst_violation > worst) {
                worst = mem.worst_violation;
                witness = mem.witness;
            }
        }
    }
    nlohmann::json j{{"instance", file},  {"k", k},          {"variant", variant},
                     {"samples", samples}, {"failures", failures}, {"worst_violation", worst}};
    if (!witness.empty()) j["witness"] = witness;
    std::cout << j.dump(2) << '\n';
    return failures == 0 ? 0 : 2;
}

int cmd_certify(const std::string& theorem, long long samples, std::uint64_t seed,
                double grid_step, double grid_tol, double perturb,
                const std::string& out_path) {
    std::vector<TheoremReport> reports;
    if (theorem == "lemma1" || theorem == "all")
        reports.push_back(certify_lemma1(samples, seed));
    if (theorem == "2" || theorem == "all")
        reports.push_back(certify_theorem2(samples, seed, perturb));
    if (theorem == "3" || theorem == "all")
        reports.push_back(certify_theorem3(samples, seed, grid_step, grid_tol, perturb));
    if (theorem == "4" || theorem == "all")
        reports.push_back(certify_theorem4(samples, seed, perturb));
    write_or_print(theorem_reports_to_json(reports) + "\n", out_path);
    for (const auto& r : reports)
        if (!r.pass) return 2;
    return 0;
}

int cmd_bench(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw Error(ErrorKind::BadParams, "cannot open " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const BenchConfig cfg = parse_bench_config(buf.str());
    const BenchResult res = bench_run(cfg);
    if (cfg.csv_out.empty()) std::cout << bound_reports_to_csv(res.reports);
    std::cout << bench_summary_to_json(res.summary) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"max k-cut formulation workbench"};
    app.require_subcommand(1);

    std::string file, method, formulation, format, out_path, variant, theorem, config_path;
    int k = 2;
    double time_cap = 60.0, grid_step = 0.02, grid_tol = 0.01, perturb = 0.0;
    long long samples = 1000;
    std::uint64_t seed = 1;
    bool lazy = false;

    auto* solve = app.add_subcommand("solve", "exact optimum of an instance");
    solve->add_option("file", file)->required();
    solve->add_option("--k", k)->required();
    solve->add_option("--method", method, "bnb|brute")->default_val("bnb");
    solve->add_option("--time-cap", time_cap);

    auto* relax = app.add_subcommand("relax", "continuous relaxation bound");
    relax->add_option("file", file)->required();
    relax->add_option("--k", k)->required();
    relax->add_option("--method", method, "vmilo|emilo|remilo")->required();
    relax->add_flag("--lazy", lazy, "row generation for the clique constraints");

    auto* lift_check = app.add_subcommand("lift-check", "sampled lifting membership");
    lift_check->add_option("file", file)->required();
    lift_check->add_option("--k", k)->required();
    lift_check->add_option("--variant", variant, "y|z|Z|Zbar")->required();
    lift_check->add_option("--samples", samples);
    lift_check->add_option("--seed", seed);

    auto* certify = app.add_subcommand("certify", "sampled theorem certification");
    certify->add_option("--theorem", theorem, "2|3|4|lemma1|all")->required();
    certify->add_option("--samples", samples);
    certify->add_option("--seed", seed);
    certify->add_option("--grid-step", grid_step);
    certify->add_option("--grid-tol", grid_tol);
    certify->add_option("--perturb", perturb,
                        "negative control: shift lifted points to force failures");
    certify->add_option("-o,--out", out_path);

    auto* bench = app.add_subcommand("bench", "batch bound comparison");
    bench->add_option("--config", config_path)->required();

    auto* exp = app.add_subcommand("export", "write a formulation to LP or SDPA text");
    exp->add_option("file", file)->required();
    exp->add_option("--k", k)->required();
    exp->add_option("--formulation", formulation, "bqo|vmilo|emilo|remilo|misdo1|misdo2")
        ->required();
    exp->add_option("--format", format, "lp|sdpa")->required();
    exp->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(file, k, method, time_cap);
        if (relax->parsed()) return cmd_relax(file, k, method, lazy);
        if (lift_check->parsed()) return cmd_lift_check(file, k, variant, samples, seed);
        if (certify->parsed())
            return cmd_certify(theorem, samples, seed, grid_step, grid_tol, perturb, out_path);
        if (bench->parsed()) return cmd_bench(config_path);
        if (exp->parsed()) return cmd_export(file, k, formulation, format, out_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
