#include "pmrank/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "pmrank/errors.hpp"

namespace pmrank {

namespace {

constexpr std::uint64_t kSamplerStream = 1;
constexpr std::uint64_t kNoiseStream = 2;
constexpr Metric kMetrics[] = {Metric::srcc, Metric::plcc};

// Correlations are undefined for constant leaderboards (e.g. a win-rate board
// where every match so far was a draw); such prefixes are recorded as 0.
double safe_correlation(Metric metric, std::span<const double> scores, std::span<const double> truth) {
    try {
        return correlation(metric, scores, truth);
    } catch (const UndefinedCorrelation&) {
        return 0.0;
    }
}

SeedRun run_seed(const MosTable& mos, const NoiseModel& noise, const ExperimentOptions& options,
                 std::uint64_t seed, std::size_t budget) {
    const std::size_t n = mos.size();
    SamplerState sampler(n, derive_seed(seed, kSamplerStream), options.sampler);
    RandomStream noise_stream(derive_seed(seed, kNoiseStream));

    SeedRun run;
    run.seed = seed;
    for (Method method : options.methods) {
        for (Metric metric : kMetrics) {
            MetricCurve c;
            c.method = method;
            c.metric = metric;
            run.curves.push_back(std::move(c));
        }
    }

    std::vector<ComparisonEdgeObservation> observed;
    observed.reserve(budget);
    while (observed.size() < budget) {
        const std::size_t want = std::min(options.batch_size, budget - observed.size());
        for (const auto& p : sampler.sample_batch(want)) {
            const double m = predict_margin(true_margin(mos.mos[p.left], mos.mos[p.right]), noise, noise_stream);
            observed.push_back({p.left, p.right, m});
        }

        std::size_t slot = 0;
        bool refreshed = false;
        for (Method method : options.methods) {
            const Leaderboard board = aggregate(method, n, observed, options.aggregators);
            for (Metric metric : kMetrics) {
                auto& curve = run.curves[slot++];
                curve.budgets.push_back(observed.size());
                curve.values.push_back(safe_correlation(metric, board.scores, mos.mos));
            }
            const bool is_source = (method == Method::lsq && options.rating_source == RatingSource::lsq) ||
                                   (method == Method::elo && options.rating_source == RatingSource::elo);
            if (is_source) {
                sampler.update_provisional_ratings(board.scores);
                refreshed = true;
            }
        }
        if (!refreshed) {
            const Method source = options.rating_source == RatingSource::lsq ? Method::lsq : Method::elo;
            sampler.update_provisional_ratings(aggregate(source, n, observed, options.aggregators).scores);
        }
    }

    for (const auto& curve : run.curves) {
        run.stability.push_back({curve.method, curve.metric, stability_point(curve, options.tolerance),
                                 curve.values.back()});
    }
    run.edges.assign(sampler.graph().edges().begin(), sampler.graph().edges().end());
    run.margins.reserve(observed.size());
    for (const auto& e : observed) run.margins.push_back(e.margin);
    run.degrees.assign(sampler.graph().match_counts().begin(), sampler.graph().match_counts().end());
    return run;
}

}  // namespace

void MosTable::validate(bool check_scale) const {
    if (ids.size() != mos.size()) throw InvalidInput("MOS table has mismatched id and score counts");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!seen.insert(ids[i]).second) throw InvalidInput("duplicate video id '" + ids[i] + "'");
        if (!std::isfinite(mos[i])) throw InvalidInput("non-finite MOS for '" + ids[i] + "'");
        if (check_scale && (mos[i] < 1.0 || mos[i] > 5.0)) {
            throw InvalidInput("MOS for '" + ids[i] + "' outside [1, 5]");
        }
    }
}

MosTable synthetic_mos(std::size_t n, std::uint64_t seed) {
    RandomStream rng(seed);
    MosTable table;
    table.ids.reserve(n);
    table.mos.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        table.ids.push_back("v" + std::to_string(i));
        table.mos.push_back(1.0 + 4.0 * rng.uniform01());
    }
    return table;
}

void NoiseModel::validate() const {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw InvalidInput("noise sigma must be finite and >= 0");
    if (!(flip_prob >= 0.0 && flip_prob <= 1.0)) throw InvalidInput("noise flip_prob must lie in [0, 1]");
    if (!(clamp_min < clamp_max)) throw InvalidInput("noise clamp_min must be < clamp_max");
}

double predict_margin(double margin, const NoiseModel& noise, RandomStream& stream) {
    const double gaussian = stream.normal();
    const bool flip = stream.bernoulli(noise.flip_prob);
    double m = margin + noise.sigma * gaussian;
    if (flip) m = -m;
    return std::clamp(m, noise.clamp_min, noise.clamp_max);
}

void ExperimentOptions::validate() const {
    if (!(budget_multiplier > 0.0) || !std::isfinite(budget_multiplier)) {
        throw InvalidInput("budget_multiplier must be a finite positive number");
    }
    if (batch_size < 1) throw InvalidInput("batch_size must be >= 1");
    if (methods.empty()) throw InvalidInput("at least one method is required");
    if (seeds.empty()) throw InvalidInput("at least one seed is required");
    if (!(tolerance > 0.0)) throw InvalidInput("stability tolerance must be > 0");
    if (sampler.quantile_count < 1) throw InvalidInput("quantile_count must be >= 1");
    if (!(sampler.window_width > 0.0)) throw InvalidInput("window_width must be > 0");
    aggregators.elo.validate();
    if (!(aggregators.draw_threshold >= 0.0)) throw InvalidInput("draw_threshold must be >= 0");
}

std::size_t total_budget(double budget_multiplier, std::size_t n) {
    const double x = budget_multiplier * static_cast<double>(n);
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) return static_cast<std::size_t>(nearest);
    return static_cast<std::size_t>(std::ceil(x));
}

double median(std::vector<double> values) {
    if (values.empty()) throw InvalidInput("median of an empty list");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<MetricCurve> ConvergenceReport::median_curves() const {
    std::vector<MetricCurve> out;
    if (runs.empty()) return out;
    for (std::size_t c = 0; c < runs.front().curves.size(); ++c) {
        MetricCurve curve = runs.front().curves[c];
        for (std::size_t b = 0; b < curve.values.size(); ++b) {
            std::vector<double> at;
            at.reserve(runs.size());
            for (const auto& run : runs) at.push_back(run.curves[c].values[b]);
            curve.values[b] = median(std::move(at));
        }
        out.push_back(std::move(curve));
    }
    return out;
}

const SummaryEntry& ConvergenceReport::entry(Method method, Metric metric) const {
    for (const auto& e : summary) {
        if (e.method == method && e.metric == metric) return e;
    }
    throw InvalidInput("report has no entry for " + std::string(to_string(method)) + "/" +
                       std::string(to_string(metric)));
}

ConvergenceReport run_convergence_experiment(const MosTable& mos, const NoiseModel& noise,
                                             const ExperimentOptions& options) {
    if (mos.size() < 3) throw InvalidInput("convergence experiment needs at least 3 videos");
    mos.validate(false);
    noise.validate();
    options.validate();

    ConvergenceReport report;
    report.n_vertices = mos.size();
    report.total_budget = total_budget(options.budget_multiplier, mos.size());
    report.runs.resize(options.seeds.size());

    std::size_t workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    workers = std::clamp<std::size_t>(workers, 1, options.seeds.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < options.seeds.size(); i = next++) {
            try {
                report.runs[i] = run_seed(mos, noise, options, options.seeds[i], report.total_budget);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    const auto& first = report.runs.front();
    for (std::size_t c = 0; c < first.stability.size(); ++c) {
        std::vector<double> budgets, finals;
        for (const auto& run : report.runs) {
            budgets.push_back(static_cast<double>(run.stability[c].stability_budget));
            finals.push_back(run.stability[c].final_value);
        }
        report.summary.push_back({first.stability[c].method, first.stability[c].metric, median(std::move(budgets)),
                                  median(std::move(finals))});
    }
    return report;
}

}  // namespace pmrank
