#include "pdom/bound_lab.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "pdom/exact.hpp"
#include "pdom/families.hpp"
#include "pdom/io.hpp"

namespace pdom {

namespace {

struct Instance {
    std::string name;
    Graph graph;
};

std::string lg_name(int cubic_n, int trial) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "lg_cubic%02d_t%03d", cubic_n, trial);
    return buf;
}

std::vector<Instance> build_instances(const LabConfig& cfg) {
    std::vector<Instance> out;
    for (int k = 0; k <= cfg.ek_max; ++k)
        out.push_back({"E_" + std::to_string(k), gen_E(4, k)});
    out.push_back({"octahedron", line_graph(gen_complete(4))});
    const int size_options = (cfg.max_cubic - 4) / 2 + 1;
    for (int t = 0; t < cfg.trials; ++t) {
        int cubic_n = 4 + 2 * (t % size_options);
        out.push_back({lg_name(cubic_n, t), line_graph(gen_random_cubic(cubic_n, cfg.seed + static_cast<std::uint64_t>(t)))});
    }
    return out;
}

}  // namespace

LabResult run_lab(const LabConfig& cfg) {
    if (cfg.trials < 0) throw InputError("run_lab: trials must be >= 0");
    if (cfg.max_cubic < 4 || cfg.max_cubic > 12 || cfg.max_cubic % 2 != 0)
        throw InputError("run_lab: max_cubic must be even and within [4, 12]");
    if (cfg.ek_max < 0 || 9 + 5 * cfg.ek_max > 24)
        throw InputError("run_lab: ek_max must keep |V(E_k)| = 9+5k within 24");

    std::vector<Instance> instances = build_instances(cfg);
    const int count = static_cast<int>(instances.size());
    std::vector<BoundRecord> records(instances.size());
    std::vector<char> skipped(instances.size(), 0);

    SolverLimits limits;
    limits.cardinality_cap = cfg.solver_cap;

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
        const Instance& inst = instances[static_cast<std::size_t>(i)];
        BoundRecord rec;
        rec.instance = inst.name;
        rec.n = inst.graph.vertex_count();
        rec.bound = (rec.n + 1) / 5;
        rec.connected = is_connected(inst.graph);
        rec.regular4 = is_regular(inst.graph, 4);
        rec.clawfree = is_claw_free(inst.graph);
        try {
            auto t0 = std::chrono::steady_clock::now();
            PdsResult res = min_pds(inst.graph, limits);
            auto t1 = std::chrono::steady_clock::now();
            rec.gamma_p = res.cardinality;
            rec.tight = rec.gamma_p == rec.bound;
            rec.runtime_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        } catch (const ResourceError&) {
            skipped[static_cast<std::size_t>(i)] = 1;
        }
        records[static_cast<std::size_t>(i)] = std::move(rec);
    }

    LabResult out;
    for (int i = 0; i < count; ++i) {
        if (skipped[static_cast<std::size_t>(i)]) {
            out.skipped.push_back(instances[static_cast<std::size_t>(i)].name);
            continue;
        }
        out.records.push_back(std::move(records[static_cast<std::size_t>(i)]));
    }
    std::sort(out.records.begin(), out.records.end(),
              [](const BoundRecord& a, const BoundRecord& b) { return a.instance < b.instance; });
    std::sort(out.skipped.begin(), out.skipped.end());

    for (const BoundRecord& rec : out.records) {
        if (!rec.violates_bound()) continue;
        out.violations.push_back(rec.instance);
        auto it = std::find_if(instances.begin(), instances.end(),
                               [&](const Instance& inst) { return inst.name == rec.instance; });
        if (it != instances.end()) {
            std::ofstream dump(cfg.violation_dir + "/" + rec.instance + ".violation.graph",
                               std::ios::binary);
            dump << render_graph(it->graph);
        }
    }
    return out;
}

std::string render_report(std::span<const BoundRecord> records) {
    std::vector<const BoundRecord*> rows;
    rows.reserve(records.size());
    for (const BoundRecord& r : records) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(),
              [](const BoundRecord* a, const BoundRecord* b) { return a->instance < b->instance; });

    std::string out = "instance,n,gamma_p,bound,tight,connected,regular4,clawfree,runtime_ms\n";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const BoundRecord* r : rows) {
        out += r->instance;
        out += ',' + std::to_string(r->n);
        out += ',' + std::to_string(r->gamma_p);
        out += ',' + std::to_string(r->bound);
        out += ',';
        out += flag(r->tight);
        out += ',';
        out += flag(r->connected);
        out += ',';
        out += flag(r->regular4);
        out += ',';
        out += flag(r->clawfree);
        out += ',' + std::to_string(r->runtime_ms);
        out += '\n';
    }
    return out;
}

void write_report(std::span<const BoundRecord> records, const std::string& path) {
    std::ofstream f(path, std::ios::binary);  // binary keeps LF on every platform
    if (!f) throw std::runtime_error("write_report: cannot open " + path);
    f << render_report(records);
    if (!f) throw std::runtime_error("write_report: write failed for " + path);
}

}  // namespace pdom
