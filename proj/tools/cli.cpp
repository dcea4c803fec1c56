#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "condkit/cloud.hpp"
#include "condkit/format.hpp"
#include "condkit/homology.hpp"
#include "condkit/io.hpp"
#include "condkit/linalg.hpp"
#include "condkit/metrics.hpp"
#include "condkit/surgery.hpp"

namespace condkit::cli {

namespace {

namespace fs = std::filesystem;

// Options every command understands in addition to its own.
constexpr const char* kConfigOption = "config";
constexpr const char* kSaveConfigOption = "save-config";

struct OptionSpec {
    const char* name;
    const char* help;
    const char* fallback = nullptr;  // recorded in the resolved config when absent
    bool flag = false;
    bool positional = false;
};

class Args {
public:
    explicit Args(const io::RunConfig& config) : config_(config) {}

    [[nodiscard]] std::optional<std::string> get(const std::string& key) const { return config_.get(key); }

    [[nodiscard]] std::string require(const std::string& key) const {
        auto v = get(key);
        if (!v || v->empty()) throw Error(ErrorCode::InvalidInput, "missing required option --" + key);
        return *v;
    }

    [[nodiscard]] bool flag(const std::string& key) const { return get(key).value_or("false") == "true"; }

    [[nodiscard]] std::uint64_t u64(const std::string& key) const { return parse_u64(key, require(key)); }

    [[nodiscard]] double real(const std::string& key) const {
        const double v = format::parse_double(require(key));
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidInput, "--" + key + " must be finite");
        return v;
    }

    [[nodiscard]] const io::RunConfig& config() const noexcept { return config_; }

    static std::uint64_t parse_u64(const std::string& key, const std::string& text) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
            throw Error(ErrorCode::InvalidInput, "--" + key + " expects a non-negative integer, got '" + text + "'");
        }
        return v;
    }

private:
    const io::RunConfig& config_;
};

io::Provenance provenance(const Args& args) {
    return {std::string("version=condkit ") + CONDKIT_VERSION, "run=" + io::config_line(args.config())};
}

void require_readable(const std::string& path) {
    if (!fs::is_regular_file(path)) throw Error(ErrorCode::InvalidInput, "input file not found: " + path);
}

void require_writable(const std::string& path) {
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
        throw Error(ErrorCode::InvalidInput, "output directory does not exist: " + parent.string());
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    f << contents;
}

cloud::MatrixSet load_matrices(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    return io::read_matrix_csv(f);
}

homology::PersistenceDiagram load_diagram(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    return io::read_diagram_csv(f);
}

std::pair<std::size_t, std::size_t> parse_shape(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw Error(ErrorCode::InvalidInput, "--shape must look like 3x3");
    const auto rows = Args::parse_u64("shape", text.substr(0, x));
    const auto cols = Args::parse_u64("shape", text.substr(x + 1));
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidInput, "--shape must be positive");
    return {rows, cols};
}

std::optional<surgery::SurgeryPlan> plan_for(const Args& args, const cloud::MatrixSet& set) {
    const auto spec = args.get("plan");
    if (!spec) return std::nullopt;
    return surgery::parse_plan(*spec, set.matrices.front().rows());
}

std::string range_text(const std::vector<io::Summary>& summaries, const std::string& quantity) {
    for (const auto& s : summaries)
        if (s.quantity == quantity) return "[" + format::significant(s.min, 6) + ", " + format::significant(s.max, 6) + "]";
    return "n/a";
}

// ---------------------------------------------------------------- gen

int cmd_gen(const Args& args, std::ostream& out, std::ostream&) {
    const auto out_path = args.require("out");
    require_writable(out_path);
    const auto [rows, cols] = parse_shape(args.require("shape"));
    const auto dist = cloud::parse_distribution(args.require("dist"));
    const auto set = cloud::generate_matrices(args.u64("count"), rows, cols, dist, args.u64("seed"));
    std::ostringstream buf;
    io::write_matrix_csv(buf, set, provenance(args));
    write_file(out_path, buf.str());
    out << "wrote " << set.matrices.size() << " matrices to " << out_path << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- surgery

int cmd_surgery(const Args& args, std::ostream& out, std::ostream&) {
    const auto in_path = args.require("in");
    const auto out_path = args.require("out");
    require_readable(in_path);
    require_writable(out_path);
    const auto stats_path = args.get("stats");
    if (stats_path) require_writable(*stats_path);

    const auto set = load_matrices(in_path);
    const auto plan = surgery::parse_plan(args.require("plan"), set.matrices.front().rows());
    const auto batch = io::apply_batch(set, plan);

    std::ostringstream matrices;
    io::write_matrix_csv(matrices, batch.surgered, provenance(args));
    write_file(out_path, matrices.str());
    if (stats_path) {
        std::ostringstream records;
        io::write_records_csv(records, batch.records, provenance(args));
        write_file(*stats_path, records.str());
    }
    const auto stats = io::batch_stats(batch.records);
    out << "surgered " << batch.records.size() << " matrices\n"
        << "kappa_before " << range_text(stats.summaries, "kappa_before") << '\n'
        << "kappa_after  " << range_text(stats.summaries, "kappa_after") << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- stats

int cmd_stats(const Args& args, std::ostream& out, std::ostream&) {
    const auto in_path = args.require("in");
    require_readable(in_path);
    const auto out_path = args.get("out");
    if (out_path) require_writable(*out_path);
    const auto records_path = args.get("records");
    if (records_path) require_writable(*records_path);
    const auto bins = args.u64("bins");

    const auto set = load_matrices(in_path);
    const auto plan = plan_for(args, set);
    auto records = plan ? io::apply_batch(set, *plan).records : io::spectral_records(set);
    const auto stats = io::batch_stats(std::move(records), bins, args.flag("log-kappa"));

    std::ostringstream summary;
    io::write_summary_csv(summary, stats.summaries, provenance(args));
    if (out_path) write_file(*out_path, summary.str());
    else out << summary.str();
    if (records_path) {
        std::ostringstream rec;
        io::write_records_csv(rec, stats.records, provenance(args));
        write_file(*records_path, rec.str());
    }
    if (out_path) {
        for (const auto& s : stats.summaries)
            out << s.quantity << " n=" << s.count << " min=" << format::significant(s.min, 6)
                << " max=" << format::significant(s.max, 6) << " mean=" << format::significant(s.mean, 6) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- cloud

cloud::MatrixSet prepared_set(const Args& args) {
    auto set = load_matrices(args.require("in"));
    if (const auto select = args.get("select")) {
        const auto colon = select->find(':');
        const std::string tail = select->substr(0, colon);
        if (colon == std::string::npos || (tail != "lowest" && tail != "highest")) {
            throw Error(ErrorCode::InvalidInput, "--select must be lowest:<fraction> or highest:<fraction>");
        }
        const double fraction = format::parse_double(select->substr(colon + 1));
        set = cloud::select_by_condition(set, fraction, tail == "lowest" ? cloud::Tail::Lowest : cloud::Tail::Highest);
    }
    if (const auto plan = plan_for(args, set)) set = io::apply_batch(set, *plan).surgered;
    return set;
}

cloud::PointCloud torus_cloud(const Args& args, std::uint64_t count) {
    const double b = args.real("b");
    const double a = args.get("a") ? args.real("a") : args.real("ratio") * b;
    return cloud::sample_torus(count, a, b, args.u64("seed"));
}

cloud::PointCloud torus_cloud(const Args& args) { return torus_cloud(args, args.u64("count")); }

int cmd_cloud(const Args& args, std::ostream& out, std::ostream&) {
    const auto out_path = args.require("out");
    require_writable(out_path);
    cloud::PointCloud pc;
    if (args.flag("torus")) {
        pc = torus_cloud(args);
    } else {
        require_readable(args.require("in"));
        const auto set = prepared_set(args);
        pc = args.flag("inverse") ? cloud::inverse_cloud(set) : cloud::flatten_normalize(set);
    }
    std::ostringstream buf;
    io::write_cloud_csv(buf, pc, provenance(args));
    write_file(out_path, buf.str());
    out << "wrote " << pc.size() << " points of dimension " << pc.dim() << " to " << out_path;
    if (!pc.skipped.empty()) out << " (" << pc.skipped.size() << " skipped)";
    out << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- ph

int cmd_ph(const Args& args, std::ostream& out, std::ostream&) {
    const auto out_path = args.get("out");
    if (out_path) require_writable(*out_path);
    const auto svg_path = args.get("svg");
    if (svg_path) require_writable(*svg_path);

    cloud::PointCloud pc;
    if (const auto demo = args.get("demo")) {
        if (*demo != "torus") throw Error(ErrorCode::InvalidInput, "unknown --demo '" + *demo + "' (expected torus)");
        pc = torus_cloud(args);
    } else {
        const auto in_path = args.require("in");
        require_readable(in_path);
        switch (io::sniff_kind(in_path)) {
            case io::FileKind::Cloud: {
                std::ifstream f(in_path, std::ios::binary);
                pc = io::read_cloud_csv(f);
                break;
            }
            case io::FileKind::Matrices: {
                const auto set = prepared_set(args);
                pc = args.flag("inverse") ? cloud::inverse_cloud(set) : cloud::flatten_normalize(set);
                break;
            }
            default: throw Error(ErrorCode::InvalidInput, in_path + " is neither a cloud nor a matrix file");
        }
    }

    homology::RipsOptions options;
    options.max_dim = static_cast<int>(args.u64("maxdim"));
    if (const auto cap = args.get("cap")) options.cap = format::parse_double(*cap);
    options.simplex_budget = args.u64("budget");
    const auto diagram = homology::rips_persistence(homology::pairwise_distances(pc), options);

    std::ostringstream csv;
    io::write_diagram_csv(csv, diagram, provenance(args));
    if (out_path) write_file(*out_path, csv.str());
    else out << csv.str();
    if (svg_path) {
        std::ostringstream svg;
        io::write_barcode_svg(svg, diagram);
        write_file(*svg_path, svg.str());
    }
    if (out_path) {
        const auto bars = homology::barcodes(diagram);
        for (std::size_t d = 0; d < bars.size(); ++d) out << "H" << d << ": " << bars[d].size() << " pairs\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- bottleneck

int cmd_bottleneck(const Args& args, std::ostream& out, std::ostream&) {
    const auto left = args.require("left");
    const auto right = args.require("right");
    require_readable(left);
    require_readable(right);
    const auto a = load_diagram(left);
    const auto b = load_diagram(right);
    if (const auto dim = args.get("dim")) {
        const auto d = Args::parse_u64("dim", *dim);
        if (d > 2) throw Error(ErrorCode::InvalidInput, "--dim must be 0, 1 or 2");
        out << format::significant(metrics::bottleneck_distance(a, b, static_cast<int>(d)), 12) << '\n';
        return kExitOk;
    }
    const int top = std::max(a.max_dimension, b.max_dimension);
    for (int d = 0; d <= top; ++d) out << "H" << d << " " << format::significant(metrics::bottleneck_distance(a, b, d), 12) << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- demo

// 4-decimal matrix printed for the worked surgery example.
linalg::Matrix worked_example() {
    return linalg::Matrix(3, 3, {-0.0196, 0.0291, -0.0106, -0.0020, 0.0083, -0.0047, -0.0121, 0.0138, -0.0027});
}

void demo_table(std::ostream& out) {
    const auto b = worked_example();
    const auto row = [&out](const std::string& name, const linalg::Matrix& m) {
        const auto s = linalg::spectral_summary(m);
        out << name << ',' << format::significant(s.norm, 10) << ','
            << (s.inverse_norm ? format::significant(*s.inverse_norm, 10) : "singular") << ','
            << (s.kappa ? format::significant(*s.kappa, 10) : "inf") << '\n';
    };
    out << "matrix,norm,inverse_norm,kappa\n";
    row("B", b);
    row("B1 (sigma3 := sigma2)", surgery::apply_surgery(b, surgery::preset_plan(surgery::Preset::TailToSigma2, 3)).matrix);
    row("B2 (sigma2 = sigma3 := 2 sigma1/3 + sigma2/3)",
        surgery::apply_surgery(b, surgery::build_plan(2, {2.0 / 3.0, 1.0 / 3.0, 0.0})).matrix);
    row("B3 (all := sigma1)", surgery::apply_surgery(b, surgery::preset_plan(surgery::Preset::FullOrtho, 3)).matrix);
}

int cmd_demo(const Args& args, std::ostream& out, std::ostream&) {
    const auto name = args.require("name");
    const std::uint64_t count = args.get("count") ? args.u64("count") : (name == "inverse" ? 64 : 1500);
    const auto dir = args.get("out-dir");
    if (dir && !fs::is_directory(*dir)) throw Error(ErrorCode::InvalidInput, "--out-dir does not exist: " + *dir);
    const auto save = [&](const std::string& file, const std::string& contents) {
        if (dir) write_file((fs::path(*dir) / file).string(), contents);
    };

    if (name == "example") {
        std::ostringstream buf;
        demo_table(buf);
        out << buf.str();
        save("example.csv", buf.str());
        return kExitOk;
    }
    if (name == "torus") {
        const auto pc = torus_cloud(args, count);
        homology::RipsOptions options;
        options.max_dim = 1;
        const auto diagram = homology::rips_persistence(homology::pairwise_distances(pc), options);
        auto h1 = diagram.in_dimension(1);
        std::sort(h1.begin(), h1.end(), [](const auto& x, const auto& y) { return x.persistence() > y.persistence(); });
        out << "torus points=" << pc.size() << " H1 pairs=" << h1.size() << '\n';
        for (std::size_t i = 0; i < std::min<std::size_t>(h1.size(), 5); ++i) {
            out << "  H1 #" << i + 1 << " birth=" << format::significant(h1[i].birth, 6)
                << " death=" << format::significant(h1[i].death, 6)
                << " persistence=" << format::significant(h1[i].persistence(), 6) << '\n';
        }
        std::ostringstream csv, svg;
        io::write_diagram_csv(csv, diagram, provenance(args));
        io::write_barcode_svg(svg, diagram);
        save("torus_diagram.csv", csv.str());
        save("torus_barcodes.svg", svg.str());
        return kExitOk;
    }
    if (name == "inverse") {
        const auto set = cloud::generate_matrices(count, 3, 3, cloud::Gaussian{0.0, 0.01}, args.u64("seed"));
        const auto ortho = io::apply_batch(set, surgery::preset_plan(surgery::Preset::FullOrtho, 3)).surgered;
        homology::RipsOptions options;
        options.max_dim = 1;
        const auto pd = [&](const cloud::PointCloud& pc) {
            return homology::rips_persistence(homology::pairwise_distances(pc), options);
        };
        const auto before = pd(cloud::flatten_normalize(set));
        const auto before_inv = pd(cloud::inverse_cloud(set));
        const auto after = pd(cloud::flatten_normalize(ortho));
        const auto after_inv = pd(cloud::inverse_cloud(ortho));
        for (int d = 0; d <= 1; ++d) {
            out << "H" << d << " bottleneck(A, A^-1) before=" << format::significant(metrics::bottleneck_distance(before, before_inv, d), 12)
                << " after=" << format::significant(metrics::bottleneck_distance(after, after_inv, d), 12) << '\n';
        }
        const std::pair<const char*, const homology::PersistenceDiagram*> files[] = {
            {"original.csv", &before}, {"inverse.csv", &before_inv},
            {"ortho_original.csv", &after}, {"ortho_inverse.csv", &after_inv}};
        for (const auto& [file, diagram] : files) {
            std::ostringstream csv;
            io::write_diagram_csv(csv, *diagram, provenance(args));
            save(file, csv.str());
        }
        return kExitOk;
    }
    throw Error(ErrorCode::InvalidInput, "unknown demo '" + name + "' (expected example, torus or inverse)");
}

// ---------------------------------------------------------------- dispatch

using Handler = int (*)(const Args&, std::ostream&, std::ostream&);

struct CommandSpec {
    const char* name;
    const char* help;
    std::vector<OptionSpec> options;
    Handler handler;
};

const std::vector<CommandSpec>& commands() {
    static const std::vector<CommandSpec> specs = {
        {"gen", "Generate a seeded set of random matrices",
         {{"count", "number of matrices", "1"},
          {"shape", "matrix shape, e.g. 3x3", "3x3"},
          {"dist", "gaussian:<mean>:<std> or uniform:<low>:<high>", "gaussian:0:0.01"},
          {"seed", "random seed", "0"},
          {"out", "output matrix CSV"}},
         cmd_gen},
        {"surgery", "Apply SVD surgery to every matrix of a file",
         {{"in", "input matrix CSV"},
          {"plan", "preset name (TAIL_TO_SIGMA2, THIRD_ONE, HALF_HALF, FULL_ORTHO) or j=<cut>:w=<w1>,<w2>,..."},
          {"out", "output matrix CSV"},
          {"stats", "per-matrix before/after records CSV"}},
         cmd_surgery},
        {"stats", "Norm, inverse norm and condition number statistics of a matrix file",
         {{"in", "input matrix CSV"},
          {"plan", "optional surgery plan; adds after-surgery quantities"},
          {"out", "summary CSV (stdout when omitted)"},
          {"records", "per-matrix records CSV"},
          {"bins", "histogram bins", "50"},
          {"log-kappa", "log-scale condition number histograms", nullptr, true}},
         cmd_stats},
        {"cloud", "Build a unit-sphere point cloud from matrices (or sample a torus)",
         {{"in", "input matrix CSV"},
          {"inverse", "use the inverse matrices", nullptr, true},
          {"select", "lowest:<fraction> or highest:<fraction> by condition number"},
          {"plan", "optional surgery plan applied before building the cloud"},
          {"torus", "sample a torus instead", nullptr, true},
          {"count", "torus points", "1500"},
          {"a", "torus centre radius (defaults to ratio * b)"},
          {"b", "torus tube radius", "1"},
          {"ratio", "a / b", "2"},
          {"seed", "torus seed", "0"},
          {"out", "output cloud CSV"}},
         cmd_cloud},
        {"ph", "Vietoris-Rips persistence diagram of a cloud",
         {{"in", "cloud CSV or matrix CSV"},
          {"inverse", "with a matrix file: use the inverse cloud", nullptr, true},
          {"select", "with a matrix file: lowest:<fraction> or highest:<fraction>"},
          {"plan", "with a matrix file: surgery plan applied first"},
          {"demo", "built-in cloud instead of --in (torus)"},
          {"count", "demo torus points", "1500"},
          {"a", "demo torus centre radius (defaults to ratio * b)"},
          {"b", "demo torus tube radius", "1"},
          {"ratio", "demo torus a / b", "2"},
          {"seed", "demo torus seed", "0"},
          {"maxdim", "highest homology dimension (1 or 2)", "1"},
          {"cap", "filtration cap (default: enclosing radius)"},
          {"budget", "simplex budget", "50000000"},
          {"out", "diagram CSV (stdout when omitted)"},
          {"svg", "barcode SVG"}},
         cmd_ph},
        {"bottleneck", "Bottleneck distance between two diagram CSVs",
         {{"left", "first diagram CSV", nullptr, false, true},
          {"right", "second diagram CSV", nullptr, false, true},
          {"dim", "homology dimension (all dimensions when omitted)"}},
         cmd_bottleneck},
        {"demo", "Built-in demos: example, torus, inverse",
         {{"name", "example | torus | inverse", nullptr, false, true},
          {"count", "torus points (default 1500) or inverse-demo matrices (default 64)"},
          {"b", "torus tube radius", "1"},
          {"ratio", "torus a / b", "2"},
          {"a", "torus centre radius (defaults to ratio * b)"},
          {"seed", "random seed", "0"},
          {"out-dir", "directory for CSV/SVG outputs"}},
         cmd_demo},
    };
    return specs;
}

int dispatch(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
    CLI::App app{"condkit: SVD surgery, matrix point clouds and Vietoris-Rips persistence", "condkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("condkit ") + CONDKIT_VERSION);

    struct Bound {
        CLI::App* app;
        const CommandSpec* spec;
        std::map<std::string, std::string> values;
        std::map<std::string, bool> flags;
        std::string config_path;
        std::string save_path;
    };
    std::vector<std::unique_ptr<Bound>> bound;
    for (const auto& spec : commands()) {
        auto b = std::make_unique<Bound>();
        b->spec = &spec;
        b->app = app.add_subcommand(spec.name, spec.help);
        for (const auto& opt : spec.options) {
            const std::string name = opt.positional ? std::string(opt.name) : "--" + std::string(opt.name);
            std::string help = opt.help;
            if (opt.fallback) help += " (default " + std::string(opt.fallback) + ")";
            if (opt.flag) b->app->add_flag(name, b->flags[opt.name], help);
            else b->app->add_option(name, b->values[opt.name], help);
        }
        b->app->add_option("--" + std::string(kConfigOption), b->config_path, "key=value config file");
        b->app->add_option("--" + std::string(kSaveConfigOption), b->save_path, "write the resolved config here");
        bound.push_back(std::move(b));
    }

    std::vector<std::string> reversed(raw.rbegin(), raw.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    for (const auto& b : bound) {
        if (!b->app->parsed()) continue;
        io::RunConfig config;
        config.command = b->spec->name;
        for (const auto& opt : b->spec->options) {
            const std::string name = opt.positional ? std::string(opt.name) : "--" + std::string(opt.name);
            if (b->app->get_option(name)->count() == 0) continue;
            config.values[opt.name] = opt.flag ? (b->flags[opt.name] ? "true" : "false") : b->values[opt.name];
        }
        if (!b->config_path.empty()) {
            const auto file = io::load_config(b->config_path);
            if (!file.command.empty() && file.command != config.command) {
                throw Error(ErrorCode::InvalidInput,
                            "config is for '" + file.command + "', not '" + config.command + "'");
            }
            for (const auto& [key, value] : file.values) {
                const bool known = std::any_of(b->spec->options.begin(), b->spec->options.end(),
                                               [&](const OptionSpec& o) { return key == o.name; });
                if (!known) throw Error(ErrorCode::InvalidInput, "unknown config key '" + key + "'");
                config.values.emplace(key, value);
            }
        }
        for (const auto& opt : b->spec->options)
            if (opt.fallback) config.values.emplace(opt.name, opt.fallback);
        if (!b->save_path.empty()) io::save_config(b->save_path, config);
        return b->spec->handler(Args(config), out, err);
    }
    return kExitInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

}  // namespace condkit::cli
