#include "vmplace/compare.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "vmplace/errors.hpp"

namespace vmplace {

namespace {

MetricStats stats_of(std::vector<double> per_seed) {
    MetricStats stats;
    const std::size_t n = per_seed.size();
    double sum = 0.0;
    for (double v : per_seed) sum += v;
    stats.mean = n == 0 ? 0.0 : sum / static_cast<double>(n);
    if (n > 1) {
        double sq = 0.0;
        for (double v : per_seed) sq += (v - stats.mean) * (v - stats.mean);
        stats.stddev = std::sqrt(sq / static_cast<double>(n - 1));
    }
    stats.per_seed = std::move(per_seed);
    return stats;
}

}  // namespace

ComparisonTable compare_placers(const Scenario& scenario, const std::vector<PlacerKind>& placers,
                                const std::vector<std::uint64_t>& seeds, unsigned jobs) {
    if (placers.size() < 2) {
        throw ValidationError("compare requires at least 2 placers, got " +
                              std::to_string(placers.size()));
    }
    if (seeds.empty()) throw ValidationError("compare requires at least 1 seed");
    if (jobs == 0) jobs = 1;

    // One task per (placer, seed), results stored by index so the merge
    // order never depends on scheduling.
    struct Task {
        PlacerKind placer;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (PlacerKind placer : placers) {
        for (std::uint64_t seed : seeds) tasks.push_back({placer, seed});
    }
    std::vector<SimMetrics> results(tasks.size());

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                Scenario run = scenario;
                run.placer = tasks[i].placer;
                run.seed = tasks[i].seed;
                results[i] = run_scenario(run).metrics;
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const unsigned worker_count =
        static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < worker_count; ++t) threads.emplace_back(worker);
    worker();
    for (std::thread& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    ComparisonTable table;
    table.seeds = seeds;
    for (std::size_t p = 0; p < placers.size(); ++p) {
        std::vector<double> hot, mig, unres, pwv;
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            const SimMetrics& m = results[p * seeds.size() + s];
            hot.push_back(static_cast<double>(m.hot_spot_events));
            mig.push_back(static_cast<double>(m.migrations));
            unres.push_back(static_cast<double>(m.unresolved_ticks));
            pwv.push_back(static_cast<double>(m.priority_weighted_violation));
        }
        ComparisonRow row;
        row.placer = placers[p];
        row.hot_spot_events = stats_of(std::move(hot));
        row.migrations = stats_of(std::move(mig));
        row.unresolved_ticks = stats_of(std::move(unres));
        row.priority_weighted_violation = stats_of(std::move(pwv));
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace vmplace
