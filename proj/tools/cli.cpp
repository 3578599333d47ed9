#include "cli.hpp"

#include "umato/umato.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#ifndef UMATO_VERSION
#define UMATO_VERSION "unknown"
#endif

namespace umato::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sigma_key(double sigma) { return format_double(sigma, 6); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot write " + path.string());
    }
    f << text;
    if (!f) {
        throw IoError("failed writing " + path.string());
    }
}

json config_json(const OptimizationConfig& c) {
    return {{"k", c.k},
            {"a", c.a},
            {"b", c.b},
            {"global_epochs", c.global_epochs},
            {"local_epochs", c.local_epochs},
            {"global_learning_rate", c.global_learning_rate},
            {"local_learning_rate", c.local_learning_rate},
            {"negative_samples", c.negative_samples},
            {"gamma", c.gamma},
            {"hub_penalty", c.hub_penalty},
            {"repulsion_penalty", c.repulsion_penalty},
            {"enn_init_neighbors", c.enn_init_neighbors},
            {"enn_init_noise", c.enn_init_noise ? json(*c.enn_init_noise) : json(nullptr)},
            {"seed", c.seed},
            {"epsilon", c.epsilon},
            {"grad_clip", c.grad_clip}};
}

json metric_params_json(const MetricParams& p) {
    return {{"k", p.k}, {"sigmas", p.sigmas}, {"normalize_distances", p.normalize_distances}};
}

// Restores the previous warning handler on scope exit.
class WarningRedirect {
public:
    explicit WarningRedirect(std::ostream& err)
        : previous_(set_warning_handler([&err](const std::string& m) { err << "warning: " << m << '\n'; })) {}
    ~WarningRedirect() { set_warning_handler(previous_); }
    WarningRedirect(const WarningRedirect&) = delete;
    WarningRedirect& operator=(const WarningRedirect&) = delete;

private:
    WarningHandler previous_;
};

void add_data_options(CLI::App* sub, DataSpec& d) {
    sub->add_option("--dataset", d.dataset, "\"spheres\" or a numeric CSV file")->capture_default_str();
    sub->add_flag("--labels", d.csv_labels, "CSV input has a trailing integer label column");
    auto* images = sub->add_option("--idx-images", d.idx_images, "IDX3 image file (overrides --dataset)");
    auto* labels = sub->add_option("--idx-labels", d.idx_labels, "IDX1 label file");
    images->needs(labels);
    labels->needs(images);
    sub->add_option("--data-seed", d.data_seed, "seed for the generated Spheres dataset")->capture_default_str();
    sub->add_option("--subsample", d.subsample, "class-stratified sample size (0 keeps all points)")
        ->capture_default_str();
    sub->add_option("--subsample-seed", d.subsample_seed)->capture_default_str();
}

void add_config_options(CLI::App* sub, OptimizationConfig& c) {
    sub->add_option("--k", c.k, "neighbors per point")->capture_default_str();
    sub->add_option("--seed", c.seed, "optimizer seed")->capture_default_str();
    sub->add_option("--global-epochs", c.global_epochs)->capture_default_str();
    sub->add_option("--local-epochs", c.local_epochs)->capture_default_str();
    sub->add_option("--global-lr", c.global_learning_rate)->capture_default_str();
    sub->add_option("--local-lr", c.local_learning_rate)->capture_default_str();
    sub->add_option("--hub-penalty", c.hub_penalty)->capture_default_str();
    sub->add_option("--repulsion-penalty", c.repulsion_penalty)->capture_default_str();
    sub->add_option("--negative-samples", c.negative_samples)->capture_default_str();
}

void add_metric_options(CLI::App* sub, MetricParams& p, bool& raw) {
    sub->add_option("--metric-k", p.k, "neighborhood size for T, C and MRRE")->capture_default_str();
    sub->add_option("--sigmas", p.sigmas, "density bandwidths")->delimiter(',')->capture_default_str();
    sub->add_flag("--raw-distances", raw, "use unscaled distances in density estimates");
}

Matrix run_algorithm(const std::string& algo, const Dataset& data, const OptimizationConfig& cfg, json* info) {
    if (algo == "pca") {
        return pca_project(data, kEmbeddingDim);
    }
    cfg.validate();
    EmbedResult r = umato_embed_detailed(data, cfg);
    if (info != nullptr) {
        (*info)["hubs"] = r.classification.hubs.size();
        (*info)["expanded_neighbors"] = r.classification.enn.size();
        (*info)["outliers"] = r.classification.outliers.size();
        (*info)["local_k"] = r.local_k;
        (*info)["placement_noise"] = r.placement_noise;
    }
    return std::move(r.embedding);
}

std::filesystem::path manifest_path_for(const std::filesystem::path& out) {
    std::filesystem::path p = out;
    return p.replace_extension(".manifest.json");
}

int cmd_embed(const DataSpec& spec, const std::string& algo, OptimizationConfig cfg, std::size_t threads_flag,
              const std::string& out_path, std::string manifest_path, std::ostream& out) {
    const auto start = Clock::now();
    cfg.threads = effective_threads(threads_flag);
    if (algo == "umato") {
        cfg.validate();
    }
    const LabeledDataset ds = load_data(spec);
    json info = json::object();
    const Matrix emb = run_algorithm(algo, ds.data, cfg, &info);
    save_embedding(emb, ds.data.labels(), out_path);

    if (manifest_path.empty()) {
        manifest_path = manifest_path_for(out_path).string();
    }
    const double secs = seconds_since(start);
    json m = {{"command", "embed"},
              {"version", UMATO_VERSION},
              {"dataset", describe(spec, ds)},
              {"algorithm", algo},
              {"config", algo == "umato" ? config_json(cfg) : json::object()},
              {"run", info},
              {"threads", cfg.threads},
              {"outputs", {{"embedding", out_path}, {"manifest", manifest_path}}},
              {"wall_clock_seconds", secs}};
    write_text(manifest_path, m.dump(2) + "\n");
    out << "wrote " << out_path << " (" << emb.rows() << " points, " << algo << ") in " << format_double(secs, 4)
        << " s\n";
    return 0;
}

int cmd_evaluate(const DataSpec& spec, const std::string& embedding_path, MetricParams params, bool raw,
                 std::size_t threads_flag, const std::string& out_path, std::ostream& out) {
    const auto start = Clock::now();
    params.threads = effective_threads(threads_flag);
    params.normalize_distances = !raw;
    const LabeledDataset ds = load_data(spec);
    const LabeledDataset emb = load_embedding(embedding_path);
    if (ds.data.size() != emb.data.size()) {
        throw InvalidData("data has " + std::to_string(ds.data.size()) + " rows but embedding " + embedding_path +
                          " has " + std::to_string(emb.data.size()));
    }
    const MetricReport rep = evaluate(ds.data.points(), emb.data.points(), params);
    json j = report_json(rep, ds.data.size());
    j["dataset"] = describe(spec, ds);
    j["embedding"] = embedding_path;
    j["wall_clock_seconds"] = seconds_since(start);
    if (!out_path.empty()) {
        write_text(out_path, j.dump(2) + "\n");
    }
    out << report_table(rep);
    return 0;
}

struct BenchRow {
    std::string algorithm;
    json parameters;
    MetricReport report;
};

int cmd_benchmark(const DataSpec& spec, OptimizationConfig base, bool grid, MetricParams params, bool raw,
                  std::size_t threads_flag, const std::string& md_path, const std::string& json_path,
                  std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    const std::size_t threads = effective_threads(threads_flag);
    params.threads = threads;
    params.normalize_distances = !raw;
    base.threads = threads;
    constexpr double kSelectSigma = 0.1;
    if (std::find(params.sigmas.begin(), params.sigmas.end(), kSelectSigma) == params.sigmas.end()) {
        throw InvalidParameter("--sigmas must include 0.1, the selection bandwidth");
    }

    const LabeledDataset ds = load_data(spec);
    const Matrix& x = ds.data.points();
    std::vector<BenchRow> rows;
    rows.push_back({"PCA", json::object(), evaluate(x, pca_project(ds.data, kEmbeddingDim), params)});

    std::vector<OptimizationConfig> candidates;
    if (grid) {
        for (std::size_t k : {15, 50}) {
            for (double hp : {0.1, 0.3}) {
                OptimizationConfig c = base;
                c.k = k;
                c.hub_penalty = hp;
                candidates.push_back(c);
            }
        }
    } else {
        candidates.push_back(base);
    }
    json grid_log = json::array();
    std::optional<BenchRow> best;
    for (const auto& c : candidates) {
        const auto t0 = Clock::now();
        c.validate();
        const MetricReport rep = evaluate(x, umato_embed(ds.data, c), params);
        const double kl = rep.kl.at(kSelectSigma);
        err << "umato k=" << c.k << " hub_penalty=" << format_double(c.hub_penalty, 6) << ": KL_0.1 = "
            << format_double(kl, 6) << '\n';
        grid_log.push_back(
            {{"k", c.k}, {"hub_penalty", c.hub_penalty}, {"kl_0.1", kl}, {"seconds", seconds_since(t0)}});
        if (!best || kl < best->report.kl.at(kSelectSigma)) {
            best = BenchRow{"UMATO", {{"k", c.k}, {"hub_penalty", c.hub_penalty}, {"seed", c.seed}}, rep};
        }
    }
    rows.push_back(*best);

    const auto columns = metric_columns(rows.front().report);
    std::vector<std::vector<double>> values;
    for (const auto& r : rows) {
        values.push_back(metric_values(r.report));
    }
    // Best is decided on the printed precision so both outputs agree.
    auto rounded = [](double v) { return std::stod(format_double(v, -4)); };
    std::vector<std::vector<bool>> is_best(rows.size(), std::vector<bool>(columns.size(), false));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        double target = rounded(values[0][c]);
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const double v = rounded(values[r][c]);
            target = lower_is_better(columns[c]) ? std::min(target, v) : std::max(target, v);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            is_best[r][c] = rounded(values[r][c]) == target;
        }
    }

    std::ostringstream md;
    md << "| Algorithm | Parameters |";
    for (const auto& c : columns) md << ' ' << c << " |";
    md << "\n|---|---|";
    for (std::size_t c = 0; c < columns.size(); ++c) md << "---:|";
    md << '\n';
    json jrows = json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string params_text = "-";
        if (!rows[r].parameters.empty()) {
            params_text = "k=" + std::to_string(rows[r].parameters["k"].get<std::size_t>()) +
                          ", hub_penalty=" + format_double(rows[r].parameters["hub_penalty"].get<double>(), 6);
        }
        md << "| " << rows[r].algorithm << " | " << params_text << " |";
        json metrics = json::object();
        json best_cols = json::array();
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const std::string cell = format_double(values[r][c], -4);
            md << ' ' << (is_best[r][c] ? "**" + cell + "**" : cell) << " |";
            metrics[columns[c]] = values[r][c];
            if (is_best[r][c]) best_cols.push_back(columns[c]);
        }
        md << '\n';
        jrows.push_back({{"algorithm", rows[r].algorithm},
                         {"parameters", rows[r].parameters},
                         {"metrics", metrics},
                         {"best", best_cols}});
    }

    json j = {{"schema_version", 1},
              {"version", UMATO_VERSION},
              {"dataset", describe(spec, ds)},
              {"metric_params", metric_params_json(params)},
              {"selection", {{"metric", "KL_0.1"}, {"grid", grid}}},
              {"base_config", config_json(base)},
              {"candidates", grid_log},
              {"rows", jrows},
              {"wall_clock_seconds", seconds_since(start)}};
    if (!json_path.empty()) {
        write_text(json_path, j.dump(2) + "\n");
    }
    if (!md_path.empty()) {
        write_text(md_path, md.str());
    }
    out << md.str();
    return 0;
}

int cmd_plot(const std::string& embedding_path, const std::string& out_path, const SvgOptions& opts,
             std::ostream& out) {
    const LabeledDataset emb = load_embedding(embedding_path);
    if (emb.data.dim() != 2) {
        throw InvalidData(embedding_path + ": expected 2 coordinate columns, found " + std::to_string(emb.data.dim()));
    }
    write_text(out_path, render_svg(emb.data.points(), emb.data.labels(), opts));
    out << "wrote " << out_path << " (" << emb.data.size() << " points)\n";
    return 0;
}

int cmd_spheres(const DataSpec& spec, const std::string& out_path, std::ostream& out) {
    const auto start = Clock::now();
    const LabeledDataset ds = load_data(spec);
    save_dataset(ds.data, out_path);
    const std::string manifest_path = manifest_path_for(out_path).string();
    json m = {{"command", "spheres"},
              {"version", UMATO_VERSION},
              {"dataset", describe(spec, ds)},
              {"outputs", {{"data", out_path}, {"manifest", manifest_path}}},
              {"wall_clock_seconds", seconds_since(start)}};
    write_text(manifest_path, m.dump(2) + "\n");
    out << "wrote " << out_path << " (" << ds.data.size() << " x " << ds.data.dim() << ")\n";
    return 0;
}

} // namespace

std::string format_double(double v, int digits) {
    // digits > 0: significant digits; digits < 0: fixed decimals.
    char buf[64];
    if (digits < 0) {
        std::snprintf(buf, sizeof buf, "%.*f", -digits, v);
    } else {
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    }
    return buf;
}

std::size_t effective_threads(std::size_t flag_value) {
    if (const char* env = std::getenv("UMATO_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1) {
            throw InvalidParameter(std::string("UMATO_THREADS must be a positive integer, got \"") + env + "\"");
        }
        return static_cast<std::size_t>(v);
    }
    return std::max<std::size_t>(flag_value, 1);
}

LabeledDataset load_data(const DataSpec& spec) {
    LabeledDataset ds;
    if (!spec.idx_images.empty()) {
        ds = load_idx(spec.idx_images, spec.idx_labels);
    } else if (spec.dataset == "spheres") {
        ds = generate_spheres(spec.data_seed);
    } else {
        ds = load_csv(spec.dataset, spec.csv_labels);
    }
    if (spec.subsample != 0) {
        ds = subsample(ds, spec.subsample, spec.subsample_seed);
    }
    return ds;
}

json describe(const DataSpec& spec, const LabeledDataset& data) {
    json j = {{"name", data.name},
              {"n", data.data.size()},
              {"dim", data.data.dim()},
              {"labeled", data.data.has_labels()},
              {"subsample", spec.subsample},
              {"subsample_seed", spec.subsample_seed}};
    if (!spec.idx_images.empty()) {
        j["source"] = "idx";
        j["images"] = spec.idx_images;
        j["labels"] = spec.idx_labels;
    } else if (spec.dataset == "spheres") {
        j["source"] = "spheres";
        j["data_seed"] = spec.data_seed;
    } else {
        j["source"] = "csv";
        j["path"] = spec.dataset;
        j["csv_labels"] = spec.csv_labels;
    }
    return j;
}

LabeledDataset load_embedding(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    const auto comma = line.rfind(',');
    std::string last = comma == std::string::npos ? line : line.substr(comma + 1);
    last.erase(std::remove_if(last.begin(), last.end(), [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }),
               last.end());
    return load_csv(path, last == "label");
}

std::vector<std::string> metric_columns(const MetricReport& report) {
    std::vector<std::string> cols;
    for (const auto& [s, v] : report.dtm) cols.push_back("DTM_" + sigma_key(s));
    for (const auto& [s, v] : report.kl) cols.push_back("KL_" + sigma_key(s));
    for (const char* c : {"T", "C", "MRRE_X", "MRRE_Z"}) cols.emplace_back(c);
    return cols;
}

std::vector<double> metric_values(const MetricReport& report) {
    std::vector<double> vals;
    for (const auto& [s, v] : report.dtm) vals.push_back(v);
    for (const auto& [s, v] : report.kl) vals.push_back(v);
    for (double v : {report.trustworthiness, report.continuity, report.mrre_x, report.mrre_z}) vals.push_back(v);
    return vals;
}

bool lower_is_better(const std::string& column) { return column.rfind("DTM_", 0) == 0 || column.rfind("KL_", 0) == 0; }

json report_json(const MetricReport& report, std::size_t n) {
    json dtm_j = json::object();
    json kl_j = json::object();
    for (const auto& [s, v] : report.dtm) dtm_j[sigma_key(s)] = v;
    for (const auto& [s, v] : report.kl) kl_j[sigma_key(s)] = v;
    return {{"schema_version", 1},
            {"n", n},
            {"params", metric_params_json(report.params)},
            {"metrics",
             {{"dtm", dtm_j},
              {"kl", kl_j},
              {"trustworthiness", report.trustworthiness},
              {"continuity", report.continuity},
              {"mrre_x", report.mrre_x},
              {"mrre_z", report.mrre_z}}}};
}

std::string report_table(const MetricReport& report) {
    const auto cols = metric_columns(report);
    const auto vals = metric_values(report);
    std::size_t width = std::string("metric").size();
    for (const auto& c : cols) width = std::max(width, c.size());
    std::ostringstream os;
    os << std::string("metric") << std::string(width - 6 + 2, ' ') << "value\n";
    for (std::size_t i = 0; i < cols.size(); ++i) {
        os << cols[i] << std::string(width - cols[i].size() + 2, ' ') << format_double(vals[i], 12) << '\n';
    }
    return os.str();
}

std::string render_svg(const Matrix& points, const std::optional<Labels>& labels, const SvgOptions& o) {
    static constexpr const char* kPalette[11] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                                 "#bcbd22", "#17becf", "#393b79"};
    if (points.cols() != 2) {
        throw InvalidData("scatter plots need two coordinates per point");
    }
    const double inf = std::numeric_limits<double>::infinity();
    double xmin = inf, xmax = -inf, ymin = inf, ymax = -inf;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        xmin = std::min(xmin, points(i, 0));
        xmax = std::max(xmax, points(i, 0));
        ymin = std::min(ymin, points(i, 1));
        ymax = std::max(ymax, points(i, 1));
    }
    const double inner_w = o.width - 2 * o.margin;
    const double inner_h = o.height - 2 * o.margin;
    double span_x = xmax - xmin;
    double span_y = ymax - ymin;
    // One scale for both axes; degenerate spans fall back to a unit box.
    double scale = std::min(span_x > 0 ? inner_w / span_x : inf, span_y > 0 ? inner_h / span_y : inf);
    if (!std::isfinite(scale)) scale = 1.0;
    const double off_x = o.margin + (inner_w - span_x * scale) / 2;
    const double off_y = o.margin + (inner_h - span_y * scale) / 2;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(o.width, 10) << "\" height=\""
       << format_double(o.height, 10) << "\" viewBox=\"0 0 " << format_double(o.width, 10) << ' '
       << format_double(o.height, 10) << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"none\" fill-opacity=\"0.8\">\n";
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        const double cx = off_x + (points(i, 0) - xmin) * scale;
        const double cy = o.height - (off_y + (points(i, 1) - ymin) * scale);
        std::size_t color = 0;
        if (labels) {
            const auto l = (*labels)[static_cast<std::size_t>(i)];
            color = static_cast<std::size_t>(l < 0 ? -static_cast<std::int64_t>(l) : l) % 11;
        }
        os << "<circle cx=\"" << format_double(cx, -4) << "\" cy=\"" << format_double(cy, -4) << "\" r=\""
           << format_double(o.radius, 6) << "\" fill=\"" << kPalette[color] << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"UMATO two-phase dimensionality reduction and embedding-quality metrics", "umato"};
    app.require_subcommand(1);
    app.set_version_flag("--version", UMATO_VERSION);

    DataSpec spec;
    OptimizationConfig cfg;
    MetricParams metric_params;
    bool raw = false;
    std::string algo = "umato";
    std::size_t threads = 1;
    std::string out_path, manifest_path, embedding_path, md_path, json_path;
    bool grid = false;
    SvgOptions svg;

    auto* embed = app.add_subcommand("embed", "embed a dataset into 2-D and write a CSV plus run manifest");
    add_data_options(embed, spec);
    add_config_options(embed, cfg);
    embed->add_option("--algo", algo)->check(CLI::IsMember({"umato", "pca"}))->capture_default_str();
    embed->add_option("--threads", threads, "worker threads (UMATO_THREADS wins)")->capture_default_str();
    embed->add_option("--out", out_path, "embedding CSV")->required();
    embed->add_option("--manifest", manifest_path, "manifest JSON (default: <out>.manifest.json)");

    auto* eval = app.add_subcommand("evaluate", "score an embedding against its source data");
    add_data_options(eval, spec);
    add_metric_options(eval, metric_params, raw);
    eval->add_option("--embedding", embedding_path, "embedding CSV")->required();
    eval->add_option("--threads", threads)->capture_default_str();
    eval->add_option("--out", out_path, "JSON report");

    auto* bench = app.add_subcommand("benchmark", "compare UMATO against PCA on one dataset");
    add_data_options(bench, spec);
    add_config_options(bench, cfg);
    add_metric_options(bench, metric_params, raw);
    bench->add_flag("--grid", grid, "select UMATO over k in {15,50} and hub penalty in {0.1,0.3} by KL_0.1");
    bench->add_option("--threads", threads)->capture_default_str();
    bench->add_option("--out-md", md_path, "Markdown table");
    bench->add_option("--out-json", json_path, "JSON report");

    auto* plot = app.add_subcommand("plot", "render an embedding CSV as an SVG scatter plot");
    plot->add_option("--embedding", embedding_path, "embedding CSV")->required();
    plot->add_option("--out", out_path, "SVG file")->required();
    plot->add_option("--width", svg.width)->capture_default_str();
    plot->add_option("--height", svg.height)->capture_default_str();
    plot->add_option("--radius", svg.radius)->capture_default_str();

    auto* spheres = app.add_subcommand("spheres", "write the generated Spheres dataset as CSV");
    spheres->add_option("--seed", spec.data_seed)->capture_default_str();
    spheres->add_option("--subsample", spec.subsample)->capture_default_str();
    spheres->add_option("--subsample-seed", spec.subsample_seed)->capture_default_str();
    spheres->add_option("--out", out_path, "dataset CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    WarningRedirect redirect(err);
    try {
        if (*embed) return cmd_embed(spec, algo, cfg, threads, out_path, manifest_path, out);
        if (*eval) return cmd_evaluate(spec, embedding_path, metric_params, raw, threads, out_path, out);
        if (*bench) return cmd_benchmark(spec, cfg, grid, metric_params, raw, threads, md_path, json_path, out, err);
        if (*plot) return cmd_plot(embedding_path, out_path, svg, out);
        if (*spheres) return cmd_spheres(spec, out_path, out);
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace umato::cli
