#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "plot.hpp"
#include "pmrank/aggregation.hpp"
#include "pmrank/csv_io.hpp"
#include "pmrank/errors.hpp"
#include "pmrank/graph_sampler.hpp"
#include "pmrank/metrics.hpp"
#include "pmrank/reward_kernel.hpp"
#include "pmrank/simulator.hpp"

namespace pmrank::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct EloFlags {
    double initial = 1500.0;
    double k = 32.0;
    double scale = 400.0;
};

void add_elo_flags(CLI::App* cmd, EloFlags& elo, double& draw_threshold) {
    cmd->add_option("--elo-initial", elo.initial, "Initial Elo rating")->capture_default_str();
    cmd->add_option("--elo-k", elo.k, "Elo K-factor")->capture_default_str();
    cmd->add_option("--elo-scale", elo.scale, "Elo logistic divisor")->capture_default_str();
    cmd->add_option("--draw-threshold", draw_threshold, "Margins with |m| below this count as draws")
        ->capture_default_str();
}

AggregatorConfig make_aggregators(const EloFlags& elo, double draw_threshold) {
    if (!(elo.k > 0.0)) throw InvalidInput("--elo-k must be > 0");
    if (!(elo.scale > 0.0)) throw InvalidInput("--elo-scale must be > 0");
    if (!(draw_threshold >= 0.0)) throw InvalidInput("--draw-threshold must be >= 0");
    AggregatorConfig cfg;
    cfg.elo = {elo.initial, elo.k, elo.scale, draw_threshold};
    cfg.draw_threshold = draw_threshold;
    return cfg;
}

// First column of a CSV (header `video_id,...` optional).
std::vector<std::string> read_id_column(const fs::path& path) {
    const std::string text = read_text_file(path);
    std::vector<std::string> ids;
    std::size_t start = 0, line_no = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        const auto line = std::string_view(text).substr(start, nl == std::string::npos ? std::string::npos : nl - start);
        ++line_no;
        const auto fields = split_csv_line(line);
        if (!(fields.size() == 1 && fields[0].empty()) && !(line_no == 1 && fields[0] == "video_id")) {
            if (fields[0].empty()) throw CsvError(line_no, "empty video_id in '" + path.string() + "'");
            ids.push_back(fields[0]);
        }
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return ids;
}

// (id, value) rows with an optional header line.
std::vector<std::pair<std::string, double>> read_scored_ids(const fs::path& path) {
    const std::string text = read_text_file(path);
    std::vector<std::pair<std::string, double>> rows;
    std::size_t start = 0, line_no = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        const auto line = std::string_view(text).substr(start, nl == std::string::npos ? std::string::npos : nl - start);
        ++line_no;
        const auto f = split_csv_line(line);
        const bool blank = f.size() == 1 && f[0].empty();
        if (!blank) {
            if (f.size() < 2) throw CsvError(line_no, "expected id,value in '" + path.string() + "'");
            char* end = nullptr;
            const double v = std::strtod(f[1].c_str(), &end);
            const bool numeric = !f[1].empty() && end == f[1].c_str() + f[1].size() && std::isfinite(v);
            if (numeric) {
                rows.emplace_back(f[0], v);
            } else if (!(line_no == 1 && f[0] == "video_id")) {
                throw CsvError(line_no, "invalid value '" + f[1] + "' in '" + path.string() + "'");
            }
        }
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return rows;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_text_file(path, content);
    }
}

json summary_json(std::span<const StabilityEntry> entries) {
    json j = json::object();
    for (const auto& e : entries) {
        j[std::string(to_string(e.method))][std::string(to_string(e.metric))] = {
            {"stability_budget", e.stability_budget}, {"final_value", e.final_value}};
    }
    return j;
}

// ---------------------------------------------------------------- rank

struct RankArgs {
    std::string edges_path;
    std::string ids_path;
    std::string out_path;
    std::string method = "lsq";
    std::optional<std::size_t> n;
    EloFlags elo;
    double draw_threshold = kDefaultDrawThreshold;
};

int cmd_rank(const RankArgs& a, std::ostream& out, std::ostream& err) {
    const Method method = parse_method(a.method);
    const AggregatorConfig cfg = make_aggregators(a.elo, a.draw_threshold);
    const auto rows = read_edges_csv(a.edges_path, true);

    std::vector<std::string> ids;
    std::unordered_map<std::string, VertexId> index;
    const bool fixed_ids = a.n.has_value() || !a.ids_path.empty();
    if (a.n) {
        for (std::size_t v = 0; v < *a.n; ++v) ids.push_back(std::to_string(v));
    } else if (!a.ids_path.empty()) {
        ids = read_id_column(a.ids_path);
    }
    for (std::size_t v = 0; v < ids.size(); ++v) {
        if (!index.emplace(ids[v], static_cast<VertexId>(v)).second) {
            throw InvalidInput("duplicate video id '" + ids[v] + "' in id list");
        }
    }

    auto resolve = [&](const std::string& id, std::size_t line) -> VertexId {
        if (auto it = index.find(id); it != index.end()) return it->second;
        if (fixed_ids) throw CsvError(line, "unknown video id '" + id + "'");
        ids.push_back(id);
        index.emplace(id, static_cast<VertexId>(ids.size() - 1));
        return static_cast<VertexId>(ids.size() - 1);
    };
    std::vector<ComparisonEdgeObservation> obs;
    obs.reserve(rows.size());
    for (const auto& r : rows) {
        const VertexId l = resolve(r.left_id, r.line);
        const VertexId rr = resolve(r.right_id, r.line);
        obs.push_back({l, rr, *r.margin});
    }

    if (obs.empty()) err << "warning: no comparisons in '" << a.edges_path << "'; scores carry no information\n";
    if (ids.empty()) {
        emit(a.out_path, "video_id,score,rank\n", out);
        return kExitOk;
    }

    const Leaderboard board = aggregate(method, ids.size(), obs, cfg);
    for (const auto& w : board.warnings) {
        if (w.starts_with("margin_out_of_range:")) {
            err << "warning: " << w.substr(w.find(':') + 1) << " margins exceed the [-4, 4] range of a 1-5 scale\n";
        }
    }
    if (board.n_components > 1) {
        err << "warning: comparison graph is disconnected (" << board.n_components
            << " components); scores are only comparable within a component\n";
    }
    emit(a.out_path, leaderboard_csv(ids, board), out);
    return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string mos_path;
    std::optional<std::size_t> synthetic_n;
    std::uint64_t mos_seed = 0;
    bool no_scale_check = false;
    std::vector<std::uint64_t> seeds{0};
    double budget_multiplier = 5.0;
    std::size_t batch_size = 64;
    double sigma = 0.3;
    double flip_prob = 0.0;
    double clamp_min = -4.0;
    double clamp_max = 4.0;
    std::vector<std::string> methods{"lsq", "elo", "winrate"};
    double tolerance = kDefaultStabilityTolerance;
    EloFlags elo;
    double draw_threshold = kDefaultDrawThreshold;
    std::size_t quantiles = 10;
    double window = 0.5;
    std::string rating_source = "lsq";
    std::size_t threads = 1;
    std::string out_dir;
    bool per_seed = false;
    bool plot = false;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream&) {
    MosTable mos;
    if (a.synthetic_n) {
        mos = synthetic_mos(*a.synthetic_n, a.mos_seed);
    } else {
        mos = read_mos_csv(a.mos_path);
        mos.validate(!a.no_scale_check);
    }
    if (mos.size() < 3) throw InvalidInput("MOS table needs at least 3 videos, got " + std::to_string(mos.size()));

    NoiseModel noise{a.sigma, a.flip_prob, a.clamp_min, a.clamp_max};
    if (!(a.sigma >= 0.0)) throw InvalidInput("--sigma must be >= 0");
    if (!(a.flip_prob >= 0.0 && a.flip_prob <= 1.0)) throw InvalidInput("--flip-prob must lie in [0, 1]");
    if (!(a.clamp_min < a.clamp_max)) throw InvalidInput("--clamp-min must be < --clamp-max");

    ExperimentOptions opt;
    if (!(a.budget_multiplier > 0.0)) throw InvalidInput("--budget-multiplier must be > 0");
    if (a.batch_size < 1) throw InvalidInput("--batch-size must be >= 1");
    if (!(a.tolerance > 0.0)) throw InvalidInput("--tolerance must be > 0");
    if (a.quantiles < 1) throw InvalidInput("--quantiles must be >= 1");
    if (!(a.window > 0.0)) throw InvalidInput("--window must be > 0");
    if (a.seeds.empty()) throw InvalidInput("--seeds must list at least one seed");
    opt.budget_multiplier = a.budget_multiplier;
    opt.batch_size = a.batch_size;
    opt.methods.clear();
    for (const auto& m : a.methods) {
        const Method parsed = parse_method(m);
        if (std::find(opt.methods.begin(), opt.methods.end(), parsed) == opt.methods.end()) opt.methods.push_back(parsed);
    }
    if (opt.methods.empty()) throw InvalidInput("--methods must name at least one method");
    opt.seeds = a.seeds;
    opt.tolerance = a.tolerance;
    opt.sampler = {a.quantiles, a.window};
    opt.aggregators = make_aggregators(a.elo, a.draw_threshold);
    if (a.rating_source == "lsq") {
        opt.rating_source = RatingSource::lsq;
    } else if (a.rating_source == "elo") {
        opt.rating_source = RatingSource::elo;
    } else {
        throw InvalidInput("--rating-source must be lsq or elo");
    }
    opt.threads = a.threads;

    const fs::path dir(a.out_dir);
    std::error_code ec;
    if (fs::exists(dir, ec) && !fs::is_directory(dir, ec)) {
        throw InvalidInput("--out-dir '" + a.out_dir + "' exists and is not a directory");
    }

    const ConvergenceReport report = run_convergence_experiment(mos, noise, opt);

    json summary;
    summary["n_videos"] = report.n_vertices;
    summary["total_budget"] = report.total_budget;
    summary["seeds"] = a.seeds;
    json aggregate = json::object();
    for (const auto& e : report.summary) {
        aggregate[std::string(to_string(e.method))][std::string(to_string(e.metric))] = {
            {"stability_budget", e.median_stability_budget}, {"final_value", e.median_final_value}};
    }
    summary["aggregate"] = aggregate;
    json per_seed = json::object();
    for (const auto& run : report.runs) per_seed[std::to_string(run.seed)] = summary_json(run.stability);
    summary["per_seed"] = per_seed;

    const auto median_curves = report.median_curves();
    // everything is computed; only now touch the filesystem
    fs::create_directories(dir, ec);
    if (ec) throw InvalidInput("cannot create --out-dir '" + a.out_dir + "': " + ec.message());
    write_text_file(dir / "convergence.csv", convergence_csv(median_curves));
    write_text_file(dir / "summary.json", summary.dump(2) + "\n");
    if (a.per_seed) {
        for (const auto& run : report.runs) {
            write_text_file(dir / ("convergence_seed" + std::to_string(run.seed) + ".csv"), convergence_csv(run.curves));
        }
    }
    if (a.plot) write_text_file(dir / "convergence.svg", convergence_svg(median_curves));

    out << "videos " << report.n_vertices << ", budget " << report.total_budget << " comparisons, "
        << report.runs.size() << " seed(s)\n";
    for (const auto& e : report.summary) {
        out << to_string(e.method) << " " << to_string(e.metric) << ": median stability budget "
            << format_fixed(e.median_stability_budget, 1) << ", median final value "
            << format_fixed(e.median_final_value, 4) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- sample-pairs

struct SamplePairsArgs {
    std::optional<std::size_t> n;
    std::string mos_path;
    std::optional<std::size_t> batches;
    std::optional<std::size_t> total;
    std::size_t batch_size = 64;
    std::uint64_t seed = 0;
    std::size_t quantiles = 10;
    double window = 0.5;
    std::string out_path;
};

int cmd_sample_pairs(const SamplePairsArgs& a, std::ostream& out, std::ostream&) {
    if (a.batch_size < 1) throw InvalidInput("--batch-size must be >= 1");
    if (!a.batches && !a.total) throw InvalidInput("one of --batches or --total is required");
    std::optional<MosTable> mos;
    std::size_t n = 0;
    if (a.n) {
        n = *a.n;
    } else if (!a.mos_path.empty()) {
        mos = read_mos_csv(a.mos_path);
        mos->validate(false);
        n = mos->size();
    } else {
        throw InvalidInput("one of --n or --mos is required");
    }
    if (n < 2) throw InvalidInput("--n must be >= 2");
    const std::size_t total = a.total ? *a.total : *a.batches * a.batch_size;

    SamplerState sampler(n, a.seed, {a.quantiles, a.window});
    std::vector<ComparisonEdgeObservation> obs;
    while (sampler.graph().n_edges() < total) {
        const auto batch = sampler.sample_batch(std::min(a.batch_size, total - sampler.graph().n_edges()));
        if (mos) {
            // with known scores, partner windows follow the noise-free LSQ leaderboard
            for (const auto& p : batch) obs.push_back({p.left, p.right, mos->mos[p.left] - mos->mos[p.right]});
            sampler.update_provisional_ratings(lsq_recover(n, obs).scores);
        }
    }
    emit(a.out_path, edges_csv(sampler.graph().edges()), out);
    return kExitOk;
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
    std::string pred_path;
    std::string truth_path;
    std::string rollouts_path;
    double alpha = 1.0;
    double format_bonus = 0.2;
    double eps_std = 1e-4;
};

int cmd_metrics(const MetricsArgs& a, std::ostream& out, std::ostream&) {
    if (a.rollouts_path.empty() && (a.pred_path.empty() || a.truth_path.empty())) {
        throw InvalidInput("--pred and --truth are required unless --rollouts is given");
    }
    if (!a.pred_path.empty() || !a.truth_path.empty()) {
        if (a.pred_path.empty() || a.truth_path.empty()) throw InvalidInput("--pred and --truth go together");
        const auto pred = read_scored_ids(a.pred_path);
        const auto truth = read_scored_ids(a.truth_path);
        std::map<std::string, double> pred_by_id;
        for (const auto& [id, v] : pred) {
            if (!pred_by_id.emplace(id, v).second) throw InvalidInput("duplicate id '" + id + "' in --pred");
        }
        std::map<std::string, double> truth_by_id;
        std::vector<double> p, t;
        for (const auto& [id, v] : truth) {
            if (!truth_by_id.emplace(id, v).second) throw InvalidInput("duplicate id '" + id + "' in --truth");
            const auto it = pred_by_id.find(id);
            if (it == pred_by_id.end()) throw InvalidInput("id '" + id + "' from --truth is missing in --pred");
            p.push_back(it->second);
            t.push_back(v);
        }
        for (const auto& [id, v] : pred) {
            if (!truth_by_id.contains(id)) throw InvalidInput("id '" + id + "' from --pred is missing in --truth");
        }
        out << "srcc " << format_fixed(srcc(p, t), 4) << "\n";
        out << "plcc " << format_fixed(plcc(p, t), 4) << "\n";
    }

    if (!a.rollouts_path.empty()) {
        RewardConfig cfg{a.alpha, a.format_bonus, a.eps_std};
        try {
            cfg.validate();
        } catch (const InvalidInput& e) {
            throw InvalidInput(std::string("--alpha/--format-bonus/--eps-std: ") + e.what());
        }
        const std::string text = read_text_file(a.rollouts_path);
        std::vector<RolloutOutcome> rollouts;
        std::size_t start = 0, line_no = 0;
        while (start <= text.size()) {
            const auto nl = text.find('\n', start);
            const auto line = std::string_view(text).substr(start, nl == std::string::npos ? std::string::npos : nl - start);
            ++line_no;
            const auto f = split_csv_line(line);
            const bool blank = f.size() == 1 && f[0].empty();
            const bool header = line_no == 1 && f[0] == "predicted_margin";
            if (!blank && !header) {
                if (f.size() != 3) throw CsvError(line_no, "expected predicted_margin,target_margin,format_valid");
                char* e1 = nullptr;
                char* e2 = nullptr;
                const double pm = std::strtod(f[0].c_str(), &e1);
                const double tm = std::strtod(f[1].c_str(), &e2);
                if (f[0].empty() || f[1].empty() || *e1 != '\0' || *e2 != '\0' || !std::isfinite(pm) ||
                    !std::isfinite(tm)) {
                    throw CsvError(line_no, "invalid margin");
                }
                if (f[2] != "0" && f[2] != "1" && f[2] != "true" && f[2] != "false") {
                    throw CsvError(line_no, "format_valid must be 0, 1, true or false");
                }
                rollouts.push_back({pm, tm, f[2] == "1" || f[2] == "true"});
            }
            if (nl == std::string::npos) break;
            start = nl + 1;
        }
        if (rollouts.empty()) throw InvalidInput("no rollouts in '" + a.rollouts_path + "'");

        std::vector<double> rewards, predicted, targets;
        for (const auto& r : rollouts) {
            rewards.push_back(rollout_reward(r, cfg));
            predicted.push_back(r.predicted_margin);
            targets.push_back(r.target_margin);
        }
        const auto adv = group_advantages(rewards, cfg.eps_std);
        out << "margin_mse " << format_fixed(margin_mse(predicted, targets), 6) << "\n";
        out << "rollout,reward,advantage\n";
        for (std::size_t g = 0; g < rollouts.size(); ++g) {
            out << g << "," << format_fixed(rewards[g], 6) << "," << format_fixed(adv[g], 6) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leaderboard recovery from signed pairwise quality margins", "pmrank"};
    app.require_subcommand(1);

    RankArgs rank;
    auto* rank_cmd = app.add_subcommand("rank", "Recover a leaderboard from an edges CSV with margins");
    rank_cmd->add_option("--edges", rank.edges_path, "left_id,right_id,margin CSV")->required();
    rank_cmd->add_option("--method", rank.method, "lsq, elo or winrate")->capture_default_str();
    auto* n_opt = rank_cmd->add_option("--n", rank.n, "Vertex count; ids must then be 0..n-1");
    rank_cmd->add_option("--ids", rank.ids_path, "CSV whose first column lists every video id")->excludes(n_opt);
    rank_cmd->add_option("--out", rank.out_path, "Output leaderboard CSV (default: stdout)");
    add_elo_flags(rank_cmd, rank.elo, rank.draw_threshold);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Run a budgeted convergence experiment with a margin oracle");
    auto* mos_opt = sim_cmd->add_option("--mos", sim.mos_path, "video_id,mos CSV");
    auto* syn_opt = sim_cmd->add_option("--synthetic", sim.synthetic_n, "Use N synthetic videos with MOS ~ U[1,5]");
    mos_opt->excludes(syn_opt);
    sim_cmd->add_option("--mos-seed", sim.mos_seed, "Seed for synthetic MOS")->capture_default_str();
    sim_cmd->add_flag("--no-scale-check", sim.no_scale_check, "Accept MOS outside [1, 5]");
    sim_cmd->add_option("--seeds", sim.seeds, "Comma-separated experiment seeds")->delimiter(',')->capture_default_str();
    sim_cmd->add_option("--budget-multiplier", sim.budget_multiplier, "Total comparisons = ceil(multiplier * N)")
        ->capture_default_str();
    sim_cmd->add_option("--batch-size", sim.batch_size, "Pairs per sampling batch")->capture_default_str();
    sim_cmd->add_option("--sigma", sim.sigma, "Gaussian margin noise (MOS units)")->capture_default_str();
    sim_cmd->add_option("--flip-prob", sim.flip_prob, "Probability of negating a margin")->capture_default_str();
    sim_cmd->add_option("--clamp-min", sim.clamp_min, "Lower margin clamp")->capture_default_str();
    sim_cmd->add_option("--clamp-max", sim.clamp_max, "Upper margin clamp")->capture_default_str();
    sim_cmd->add_option("--methods", sim.methods, "Comma-separated subset of lsq,elo,winrate")
        ->delimiter(',')
        ->capture_default_str();
    sim_cmd->add_option("--tolerance", sim.tolerance, "Stability band")->capture_default_str();
    add_elo_flags(sim_cmd, sim.elo, sim.draw_threshold);
    sim_cmd->add_option("--quantiles", sim.quantiles, "Provisional-rating quantile count")->capture_default_str();
    sim_cmd->add_option("--window", sim.window, "Partner window half-width (rating units)")->capture_default_str();
    sim_cmd->add_option("--rating-source", sim.rating_source, "Provisional ratings from lsq or elo")
        ->capture_default_str();
    sim_cmd->add_option("--threads", sim.threads, "Worker threads across seeds (0 = all cores)")->capture_default_str();
    sim_cmd->add_option("--out-dir", sim.out_dir, "Directory for convergence.csv and summary.json")->required();
    sim_cmd->add_flag("--per-seed", sim.per_seed, "Also write convergence_seed<k>.csv per seed");
    sim_cmd->add_flag("--plot", sim.plot, "Also write convergence.svg");

    SamplePairsArgs sp;
    auto* sp_cmd = app.add_subcommand("sample-pairs", "Sample comparison pairs in batches");
    auto* spn = sp_cmd->add_option("--n", sp.n, "Number of videos");
    sp_cmd->add_option("--mos", sp.mos_path, "video_id,mos CSV; ratings then follow noise-free LSQ")->excludes(spn);
    auto* batches_opt = sp_cmd->add_option("--batches", sp.batches, "Number of batches");
    sp_cmd->add_option("--total", sp.total, "Total pairs (last batch truncated)")->excludes(batches_opt);
    sp_cmd->add_option("--batch-size", sp.batch_size, "Pairs per batch")->capture_default_str();
    sp_cmd->add_option("--seed", sp.seed, "Sampler seed")->capture_default_str();
    sp_cmd->add_option("--quantiles", sp.quantiles, "Provisional-rating quantile count")->capture_default_str();
    sp_cmd->add_option("--window", sp.window, "Partner window half-width")->capture_default_str();
    sp_cmd->add_option("--out", sp.out_path, "Output edges CSV (default: stdout)");

    MetricsArgs met;
    auto* met_cmd = app.add_subcommand("metrics", "SRCC/PLCC between score files, or rollout reward kernels");
    met_cmd->add_option("--pred", met.pred_path, "id,score CSV (e.g. a leaderboard)");
    met_cmd->add_option("--truth", met.truth_path, "id,mos CSV");
    met_cmd->add_option("--rollouts", met.rollouts_path, "predicted_margin,target_margin,format_valid CSV");
    met_cmd->add_option("--alpha", met.alpha, "Reward error sensitivity")->capture_default_str();
    met_cmd->add_option("--format-bonus", met.format_bonus, "Reward bonus for valid format")->capture_default_str();
    met_cmd->add_option("--eps-std", met.eps_std, "Advantage std epsilon")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rank_cmd->parsed()) return cmd_rank(rank, out, err);
        if (sim_cmd->parsed()) {
            if (sim.mos_path.empty() && !sim.synthetic_n) throw InvalidInput("one of --mos or --synthetic is required");
            return cmd_simulate(sim, out, err);
        }
        if (sp_cmd->parsed()) return cmd_sample_pairs(sp, out, err);
        if (met_cmd->parsed()) return cmd_metrics(met, out, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UndefinedCorrelation& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace pmrank::cli
