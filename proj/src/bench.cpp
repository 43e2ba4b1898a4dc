#include "maxkcut/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "maxkcut/errors.hpp"
#include "maxkcut/exact.hpp"
#include "maxkcut/export.hpp"
#include "maxkcut/formulations.hpp"

namespace maxkcut {

std::string bench_method_name(BenchMethod m) {
    switch (m) {
        case BenchMethod::Exact: return "exact";
        case BenchMethod::Bqo: return "bqo";
        case BenchMethod::VmiloRelax: return "vmilo-relax";
        case BenchMethod::EmiloRelax: return "emilo-relax";
        case BenchMethod::RemiloRelax: return "remilo-relax";
        case BenchMethod::MisdoExport: return "misdo-export";
    }
    return "?";
}

std::optional<BenchMethod> bench_method_from_name(const std::string& name) {
    for (BenchMethod m : {BenchMethod::Exact, BenchMethod::Bqo, BenchMethod::VmiloRelax,
                          BenchMethod::EmiloRelax, BenchMethod::RemiloRelax,
                          BenchMethod::MisdoExport})
        if (bench_method_name(m) == name) return m;
    return std::nullopt;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

InstanceKind kind_from_name(const std::string& s) {
    if (s == "random") return InstanceKind::Random;
    if (s == "band") return InstanceKind::Band;
    if (s == "spinglass") return InstanceKind::Spinglass;
    throw Error(ErrorKind::BadParams, "unknown generator kind: " + s);
}

std::string default_gen_name(const GeneratorSpec& g) {
    std::ostringstream out;
    switch (g.kind) {
        case InstanceKind::Random:
            out << "random_n" << g.params.n << "_p" << static_cast<int>(g.params.p * 100);
            break;
        case InstanceKind::Band:
            out << "band_n" << g.params.n << "_b" << g.params.bandwidth;
            break;
        case InstanceKind::Spinglass:
            out << "spinglass_L" << g.params.grid_side;
            break;
    }
    return out.str();
}

std::string density_bucket(double d) {
    if (d <= 25.0) return "(0,25]";
    if (d <= 50.0) return "(25,50]";
    if (d <= 75.0) return "(50,75]";
    return "(75,100]";
}

} // namespace

BenchConfig parse_bench_config(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    BenchConfig cfg;
    if (j.contains("k")) cfg.ks = j.at("k").get<std::vector<int>>();
    for (int k : cfg.ks)
        if (k < 2) throw Error(ErrorKind::BadK, "bench config: k must be >= 2");
    if (j.contains("time_cap_seconds")) cfg.time_cap_seconds = j.at("time_cap_seconds");
    if (cfg.time_cap_seconds <= 0.0)
        throw Error(ErrorKind::BadParams, "bench config: time cap must be positive");
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("csv_out")) cfg.csv_out = j.at("csv_out");
    if (j.contains("json_out")) cfg.json_out = j.at("json_out");
    if (j.contains("export_dir")) cfg.export_dir = j.at("export_dir");
    if (j.contains("workers")) cfg.workers = j.at("workers");
    if (j.contains("lazy_emilo")) cfg.lazy_emilo = j.at("lazy_emilo");
    if (j.contains("methods")) {
        cfg.methods.clear();
        for (const auto& name : j.at("methods")) {
            const auto m = bench_method_from_name(name.get<std::string>());
            if (!m)
                throw Error(ErrorKind::BadParams,
                            "bench config: unknown method " + name.get<std::string>());
            cfg.methods.push_back(*m);
        }
    }
    if (j.contains("instances")) {
        for (const auto& ji : j.at("instances")) {
            InstanceSpec spec;
            if (ji.contains("path")) {
                spec.path = ji.at("path");
                spec.name = ji.contains("name") ? std::string(ji.at("name")) : spec.path;
            } else if (ji.contains("generator")) {
                const auto& jg = ji.at("generator");
                GeneratorSpec gen;
                gen.kind = kind_from_name(jg.at("kind"));
                if (jg.contains("n")) gen.params.n = jg.at("n");
                if (jg.contains("p")) gen.params.p = jg.at("p");
                if (jg.contains("wmin")) gen.params.wmin = jg.at("wmin");
                if (jg.contains("wmax")) gen.params.wmax = jg.at("wmax");
                if (jg.contains("b")) gen.params.bandwidth = jg.at("b");
                if (jg.contains("L")) gen.params.grid_side = jg.at("L");
                if (jg.contains("seed")) gen.seed = jg.at("seed").get<std::uint64_t>();
                spec.gen = gen;
                spec.name = ji.contains("name") ? std::string(ji.at("name"))
                                                : default_gen_name(gen);
            } else {
                throw Error(ErrorKind::BadParams,
                            "bench config: instance needs a path or a generator");
            }
            cfg.instances.push_back(std::move(spec));
        }
    }
    return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

MethodResult run_method(const Graph& g, int k, BenchMethod method, const BenchConfig& cfg,
                        const std::string& instance_name) {
    MethodResult r;
    r.method = bench_method_name(method);
    const auto start = Clock::now();
    try {
        switch (method) {
            case BenchMethod::Exact: {
                double points = 1.0;
                bool brute = true;
                for (int i = 0; i < g.num_vertices() - 1 && brute; ++i) {
                    points *= k;
                    if (points > 1e6) brute = false;
                }
                const ExactResult res = brute ? brute_force_opt(g, k)
                                              : branch_and_bound_opt(g, k, cfg.time_cap_seconds);
                if (res.proved) {
                    r.has_bound = true;
                    r.bound = res.value;
                    r.status = "proved";
                } else {
                    r.status = "timeout";
                }
                break;
            }
            case BenchMethod::Bqo: {
                BqoBudget budget;
                budget.bnb_time_cap_seconds = cfg.time_cap_seconds;
                budget.seed = cfg.seed;
                const BqoBound b = bqo_relax_bound(g, k, budget);
                r.has_bound = true;
                if (b.exact) {
                    r.bound = b.value;
                    r.status = "exact";
                } else {
                    // the upper end of the bracket is the valid bound; the
                    // rounded lower end rides along in the status
                    r.bound = b.upper;
                    std::ostringstream st;
                    st << "bracket(lower=" << b.lower << ")";
                    r.status = st.str();
                }
                break;
            }
            case BenchMethod::VmiloRelax:
                r.has_bound = true;
                r.bound = vmilo_relax_bound(g);
                r.status = "optimal";
                break;
            case BenchMethod::EmiloRelax: {
                const RelaxBound b = emilo_relax_bound(g, k, cfg.lazy_emilo);
                r.has_bound = b.status == LpStatus::Optimal;
                r.bound = b.value;
                r.status = b.converged ? "optimal" : "non-converged";
                break;
            }
            case BenchMethod::RemiloRelax: {
                const RelaxBound b = remilo_relax_bound(g, k);
                r.has_bound = b.status == LpStatus::Optimal;
                r.bound = b.value;
                r.status = b.converged ? "optimal" : "non-converged";
                break;
            }
            case BenchMethod::MisdoExport: {
                const Model m = build_misdo(g, k, MisdoVariant::II);
                const std::string path = cfg.export_dir + "/" + instance_name + "_k" +
                                         std::to_string(k) + "_misdo2.dat-s";
                std::ofstream out(path);
                if (!out)
                    throw Error(ErrorKind::BadParams, "cannot write " + path);
                out << export_sdpa_format(m);
                r.status = "external";
                break;
            }
        }
    } catch (const std::exception& ex) {
        r.has_bound = false;
        r.status = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

} // namespace

BenchResult bench_run(const BenchConfig& cfg) {
    BenchResult result;

    struct Loaded {
        InstanceSpec spec;
        std::optional<Graph> graph;
        std::string error;
    };
    std::vector<Loaded> loaded;
    for (std::size_t i = 0; i < cfg.instances.size(); ++i) {
        const auto& spec = cfg.instances[i];
        Loaded l{spec, std::nullopt, ""};
        try {
            if (!spec.path.empty()) {
                std::ifstream in(spec.path);
                if (!in) throw Error(ErrorKind::BadParams, "cannot open " + spec.path);
                std::stringstream buf;
                buf << in.rdbuf();
                l.graph = parse_edge_list(buf.str());
            } else if (spec.gen) {
                const std::uint64_t seed =
                    spec.gen->seed != 0 ? spec.gen->seed : mix_seed(cfg.seed, i);
                l.graph = gen_instance(spec.gen->kind, spec.gen->params, seed);
            } else {
                throw Error(ErrorKind::BadParams, "instance without path or generator");
            }
        } catch (const std::exception& ex) {
            l.error = ex.what();
        }
        loaded.push_back(std::move(l));
    }

    struct Job {
        std::size_t instance;
        int k;
        BenchMethod method;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        if (!loaded[i].graph) continue;
        for (int k : cfg.ks)
            for (BenchMethod m : cfg.methods) jobs.push_back({i, k, m});
    }

    std::vector<MethodResult> job_results(jobs.size());
    std::atomic<std::size_t> next{0};
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<std::size_t>(
        cfg.workers > 0 ? static_cast<unsigned>(cfg.workers) : hw, std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) break;
                const Job& job = jobs[i];
                job_results[i] = run_method(*loaded[job.instance].graph, job.k, job.method,
                                            cfg, loaded[job.instance].spec.name);
            }
        });
    for (auto& t : pool) t.join();

    // assemble per-(instance, k) reports in config order
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        if (!loaded[i].graph) {
            BoundReport r;
            r.instance = loaded[i].spec.name;
            r.k = 0;
            MethodResult err;
            err.method = "load";
            err.status = "error: " + loaded[i].error;
            r.methods.push_back(std::move(err));
            result.reports.push_back(std::move(r));
            continue;
        }
        const Graph& g = *loaded[i].graph;
        const GraphStats st = graph_stats(g);
        for (int k : cfg.ks) {
            BoundReport r;
            r.instance = loaded[i].spec.name;
            r.n = st.n;
            r.m = st.m;
            r.density = st.density_percent;
            r.k = k;
            for (std::size_t j = 0; j < jobs.size(); ++j)
                if (jobs[j].instance == i && jobs[j].k == k)
                    r.methods.push_back(job_results[j]);
            double best = 0.0;
            bool any = false;
            for (const auto& m : r.methods)
                if (m.has_bound && (!any || m.bound < best)) {
                    best = m.bound;
                    any = true;
                }
            for (auto& m : r.methods) {
                if (!m.has_bound) continue;
                if (best > 1e-12) {
                    m.scaled = m.bound / best;
                    m.has_scaled = true;
                } else if (m.bound <= 1e-9) { // everything collapsed to zero
                    m.scaled = 1.0;
                    m.has_scaled = true;
                }
                if (m.method == "exact" || m.method == "bqo") {
                    if (m.status == "proved" || m.status == "exact") {
                        r.has_exact = true;
                        r.exact_value = m.bound;
                    }
                }
            }
            result.reports.push_back(std::move(r));
        }
    }

    // geometric means per (n, density bucket, k) batch plus a pooled row
    struct Acc {
        double log_sum = 0.0;
        int count = 0;
    };
    std::vector<std::tuple<std::string, int, std::string>> keys;
    std::map<std::tuple<std::string, int, std::string>, Acc> acc;
    auto feed = [&](const std::string& batch, int k, const std::string& method, double scaled) {
        const auto key = std::tuple(batch, k, method);
        if (!acc.count(key)) keys.push_back(key);
        acc[key].log_sum += std::log(scaled);
        acc[key].count += 1;
    };
    for (const auto& r : result.reports) {
        if (r.k == 0) continue;
        std::ostringstream batch;
        batch << "n=" << r.n << ",d=" << density_bucket(r.density);
        for (const auto& m : r.methods)
            if (m.has_scaled) {
                feed(batch.str(), r.k, m.method, m.scaled);
                feed("all", r.k, m.method, m.scaled);
            }
    }
    for (const auto& key : keys) {
        const auto& a = acc[key];
        result.summary.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                  std::exp(a.log_sum / a.count), a.count});
    }
    std::sort(result.summary.begin(), result.summary.end(),
              [](const BenchSummaryRow& a, const BenchSummaryRow& b) {
                  return std::tuple(a.batch, a.k, a.method) <
                         std::tuple(b.batch, b.k, b.method);
              });

    if (!cfg.csv_out.empty()) {
        std::ofstream out(cfg.csv_out);
        out << bound_reports_to_csv(result.reports);
    }
    if (!cfg.json_out.empty()) {
        std::ofstream out(cfg.json_out);
        out << bound_reports_to_json(result.reports);
    }
    return result;
}

std::string bench_summary_to_json(const std::vector<BenchSummaryRow>& summary) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : summary)
        arr.push_back({{"batch", row.batch},
                       {"k", row.k},
                       {"method", row.method},
                       {"geomean_scaled_bound", row.geomean},
                       {"instances", row.count}});
    return arr.dump(2);
}

} // namespace maxkcut
