#include "condkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "condkit/format.hpp"

namespace condkit::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto p = s.find(sep);
        out.push_back(s.substr(0, p));
        if (p == std::string_view::npos) break;
        s = s.substr(p + 1);
    }
    return out;
}

// `# a=1 b=2` -> {a: 1, b: 2}
std::map<std::string, std::string> header_fields(std::string_view line) {
    std::map<std::string, std::string> out;
    if (!line.starts_with('#')) return out;
    for (auto token : split(trim(line.substr(1)), ' ')) {
        const auto eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0) continue;
        out.emplace(std::string(token.substr(0, eq)), std::string(token.substr(eq + 1)));
    }
    return out;
}

const std::string& require_field(const std::map<std::string, std::string>& fields, const std::string& key,
                                 const char* format) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw Error(ErrorCode::InvalidInput, std::string(format) + " header lacks '" + key + "'");
    return it->second;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw Error(ErrorCode::InvalidInput, "bad integer '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> parse_row(std::string_view line) {
    std::vector<double> row;
    for (auto field : split(line, ',')) row.push_back(format::parse_double(field));
    return row;
}

void write_provenance(std::ostream& out, const Provenance& provenance) {
    for (const auto& line : provenance) out << "# " << line << '\n';
}

void write_row(std::ostream& out, std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << format::shortest(values[i]);
    }
    out << '\n';
}

std::string optional_field(const std::optional<double>& v) { return v ? format::shortest(*v) : std::string(); }

// Reads the first line and checks it is a header line.
std::string read_header(std::istream& in, const char* format) {
    std::string line;
    if (!std::getline(in, line) || !line.starts_with('#')) {
        throw Error(ErrorCode::InvalidInput, std::string(format) + " file must start with a '#' header line");
    }
    return line;
}

}  // namespace

std::optional<std::string> RunConfig::get(const std::string& key) const {
    if (key == "command") return command.empty() ? std::nullopt : std::optional<std::string>(command);
    const auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return it->second;
}

RunConfig parse_config(std::string_view text) {
    RunConfig config;
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.starts_with('#')) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
            throw Error(ErrorCode::InvalidInput, "config line " + std::to_string(line_no) + " is not key=value");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key == "command") {
            config.command = value;
        } else if (!config.values.emplace(key, value).second) {
            throw Error(ErrorCode::InvalidInput, "duplicate config key '" + key + "'");
        }
    }
    return config;
}

std::string serialize_config(const RunConfig& config) {
    std::string out;
    if (!config.command.empty()) out += "command=" + config.command + "\n";
    for (const auto& [k, v] : config.values) out += k + "=" + v + "\n";
    return out;
}

std::string config_line(const RunConfig& config) {
    std::string out = "command=" + config.command;
    for (const auto& [k, v] : config.values) out += ";" + k + "=" + v;
    return out;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void save_config(const std::filesystem::path& path, const RunConfig& config) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write config " + path.string());
    out << serialize_config(config);
}

void write_matrix_csv(std::ostream& out, const cloud::MatrixSet& set, const Provenance& provenance) {
    if (set.matrices.empty()) throw Error(ErrorCode::InvalidInput, "cannot write an empty matrix set");
    const auto& first = set.matrices.front();
    out << "# shape=" << first.rows() << 'x' << first.cols() << " count=" << set.matrices.size()
        << " dist=" << cloud::format_distribution(set.distribution) << " seed=" << set.seed << '\n';
    write_provenance(out, provenance);
    for (const auto& m : set.matrices) write_row(out, m.entries());
}

cloud::MatrixSet read_matrix_csv(std::istream& in) {
    const auto fields = header_fields(read_header(in, "matrix"));
    const auto& shape = require_field(fields, "shape", "matrix");
    const auto x = shape.find('x');
    if (x == std::string::npos) throw Error(ErrorCode::InvalidInput, "shape must be <rows>x<cols>");
    const auto rows = static_cast<std::size_t>(parse_u64(std::string_view(shape).substr(0, x)));
    const auto cols = static_cast<std::size_t>(parse_u64(std::string_view(shape).substr(x + 1)));
    const auto count = parse_u64(require_field(fields, "count", "matrix"));

    cloud::MatrixSet set;
    set.seed = parse_u64(require_field(fields, "seed", "matrix"));
    set.distribution = cloud::parse_distribution(require_field(fields, "dist", "matrix"));
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.starts_with('#')) continue;
        auto row = parse_row(t);
        if (row.size() != rows * cols) {
            throw Error(ErrorCode::InvalidInput, "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                                                     std::to_string(rows * cols));
        }
        set.matrices.emplace_back(rows, cols, std::move(row));
    }
    if (set.matrices.size() != count) {
        throw Error(ErrorCode::InvalidInput, "header announces " + std::to_string(count) + " matrices, file has " +
                                                 std::to_string(set.matrices.size()));
    }
    if (set.matrices.empty()) throw Error(ErrorCode::InvalidInput, "matrix file holds no matrices");
    return set;
}

void write_cloud_csv(std::ostream& out, const cloud::PointCloud& cloud, const Provenance& provenance) {
    out << "# dim=" << cloud.dim() << " count=" << cloud.size() << " source=" << cloud::source_name(cloud.source())
        << " seed=" << cloud.seed << '\n';
    if (!cloud.skipped.empty()) {
        out << "# skipped=" << cloud.skipped.size() << " indices=";
        for (std::size_t i = 0; i < cloud.skipped.size(); ++i) out << (i ? "," : "") << cloud.skipped[i];
        out << '\n';
    }
    write_provenance(out, provenance);
    for (std::size_t i = 0; i < cloud.size(); ++i) write_row(out, cloud.point(i));
}

cloud::PointCloud read_cloud_csv(std::istream& in) {
    const auto fields = header_fields(read_header(in, "cloud"));
    const auto dim = static_cast<std::size_t>(parse_u64(require_field(fields, "dim", "cloud")));
    const auto count = parse_u64(require_field(fields, "count", "cloud"));
    cloud::PointCloud cloud(dim, cloud::parse_source(require_field(fields, "source", "cloud")));
    cloud.seed = parse_u64(require_field(fields, "seed", "cloud"));
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.starts_with('#')) continue;
        cloud.push_back(parse_row(t));
    }
    if (cloud.size() != count) {
        throw Error(ErrorCode::InvalidInput, "header announces " + std::to_string(count) + " points, file has " +
                                                 std::to_string(cloud.size()));
    }
    return cloud;
}

FileKind sniff_kind(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
    std::string line;
    std::getline(in, line);
    const auto fields = header_fields(line);
    if (fields.contains("shape")) return FileKind::Matrices;
    if (fields.contains("dim") && fields.contains("source")) return FileKind::Cloud;
    if (fields.contains("max_dim") || trim(line) == "dimension,birth,death") return FileKind::Diagram;
    return FileKind::Unknown;
}

void write_diagram_csv(std::ostream& out, const homology::PersistenceDiagram& diagram, const Provenance& provenance) {
    out << "# max_dim=" << diagram.max_dimension << " cap=" << format::shortest(diagram.filtration_cap)
        << " count=" << diagram.pairs.size() << '\n';
    write_provenance(out, provenance);
    out << "dimension,birth,death\n";
    for (const auto& p : diagram.pairs) {
        out << p.dimension << ',' << format::shortest(p.birth) << ',' << format::shortest(p.death) << '\n';
    }
}

homology::PersistenceDiagram read_diagram_csv(std::istream& in) {
    homology::PersistenceDiagram diagram;
    diagram.max_dimension = 0;
    bool have_max_dim = false;
    bool seen_columns = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = trim(line);
        if (t.empty()) continue;
        if (t.starts_with('#')) {
            if (line_no == 1) {
                const auto fields = header_fields(t);
                if (auto it = fields.find("max_dim"); it != fields.end()) {
                    diagram.max_dimension = static_cast<int>(parse_u64(it->second));
                    have_max_dim = true;
                }
                if (auto it = fields.find("cap"); it != fields.end()) diagram.filtration_cap = format::parse_double(it->second);
            }
            continue;
        }
        if (!seen_columns) {
            if (t != "dimension,birth,death") {
                throw Error(ErrorCode::InvalidInput, "diagram line " + std::to_string(line_no) +
                                                         ": expected 'dimension,birth,death' column header");
            }
            seen_columns = true;
            continue;
        }
        const auto fields = split(t, ',');
        if (fields.size() != 3) {
            throw Error(ErrorCode::InvalidInput, "diagram line " + std::to_string(line_no) + ": expected 3 fields");
        }
        homology::PersistencePair p;
        const auto dim = parse_u64(trim(fields[0]));
        if (dim > 2) throw Error(ErrorCode::InvalidInput, "diagram line " + std::to_string(line_no) + ": dimension > 2");
        p.dimension = static_cast<int>(dim);
        p.birth = format::parse_double(fields[1]);
        p.death = format::parse_double(fields[2]);
        if (!std::isfinite(p.birth) || !(p.death > p.birth)) {
            throw Error(ErrorCode::InvalidInput, "diagram line " + std::to_string(line_no) + ": need finite birth < death");
        }
        diagram.pairs.push_back(p);
        if (!have_max_dim) diagram.max_dimension = std::max(diagram.max_dimension, p.dimension);
    }
    if (!seen_columns) throw Error(ErrorCode::InvalidInput, "diagram file lacks the 'dimension,birth,death' header");
    std::sort(diagram.pairs.begin(), diagram.pairs.end());
    return diagram;
}

void write_barcode_svg(std::ostream& out, const homology::PersistenceDiagram& diagram) {
    const auto bars = homology::barcodes(diagram);
    double right = std::isfinite(diagram.filtration_cap) ? diagram.filtration_cap : 0.0;
    for (const auto& p : diagram.pairs) {
        right = std::max(right, p.birth);
        if (!p.infinite()) right = std::max(right, p.death);
    }
    if (right <= 0.0) right = 1.0;

    constexpr double kWidth = 640.0;
    constexpr double kLeft = 60.0;
    constexpr double kPlot = 560.0;
    constexpr double kRow = 4.0;
    constexpr double kGap = 24.0;
    std::size_t total_rows = 0;
    for (const auto& b : bars) total_rows += b.size();
    const double height = kGap * static_cast<double>(bars.size() + 1) + kRow * static_cast<double>(total_rows);
    const auto x = [&](double v) { return format::shortest(kLeft + kPlot * std::min(v, right) / right); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format::shortest(kWidth) << "\" height=\""
        << format::shortest(height) << "\">\n";
    double y = kGap;
    for (std::size_t dim = 0; dim < bars.size(); ++dim) {
        out << "  <text x=\"4\" y=\"" << format::shortest(y - 6) << "\" font-size=\"12\">H" << dim << "</text>\n";
        for (const auto& p : bars[dim]) {
            out << "  <rect" << (p.infinite() ? " class=\"infinite\"" : "") << " x=\"" << x(p.birth) << "\" y=\""
                << format::shortest(y) << "\" width=\""
                << format::shortest(kPlot * (std::min(p.death, right) - p.birth) / right) << "\" height=\"3\" fill=\""
                << (p.infinite() ? "#c0392b" : "#2c3e50") << "\"/>\n";
            y += kRow;
        }
        y += kGap;
    }
    out << "</svg>\n";
}

Summary summarize(std::string quantity, std::span<const double> values, std::size_t bins, bool log_scale) {
    if (values.empty()) throw Error(ErrorCode::InvalidInput, "no values to summarize for " + quantity);
    if (bins == 0) throw Error(ErrorCode::InvalidInput, "histogram needs at least one bin");
    Summary s;
    s.quantity = std::move(quantity);
    s.count = values.size();
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = std::clamp(sum / static_cast<double>(values.size()), s.min, s.max);

    if (log_scale && !(s.min > 0.0)) throw Error(ErrorCode::InvalidInput, "log-scale histogram needs positive values");
    const auto map = [log_scale](double v) { return log_scale ? std::log10(v) : v; };
    s.histogram.low = s.min;
    s.histogram.high = s.max;
    s.histogram.log_scale = log_scale;
    s.histogram.counts.assign(bins, 0);
    const double lo = map(s.min);
    const double span = map(s.max) - lo;
    for (double v : values) {
        std::size_t bin = 0;
        if (span > 0.0) {
            const double pos = (map(v) - lo) / span * static_cast<double>(bins);
            bin = std::min(static_cast<std::size_t>(std::max(pos, 0.0)), bins - 1);
        }
        ++s.histogram.counts[bin];
    }
    return s;
}

BatchSurgery apply_batch(const cloud::MatrixSet& set, const surgery::SurgeryPlan& plan) {
    BatchSurgery out;
    out.surgered.seed = set.seed;
    out.surgered.distribution = set.distribution;
    out.surgered.matrices.reserve(set.matrices.size());
    out.records.reserve(set.matrices.size());
    for (std::size_t i = 0; i < set.matrices.size(); ++i) {
        auto [m, report] = surgery::apply_surgery(set.matrices[i], plan);
        StatsRecord r;
        r.index = i;
        r.norm_before = report.norm_before;
        r.inverse_norm_before = report.inverse_norm_before;
        r.kappa_before = report.kappa_before;
        r.norm_after = report.norm_after;
        r.inverse_norm_after = report.inverse_norm_after;
        r.kappa_after = report.kappa_after;
        out.records.push_back(r);
        out.surgered.matrices.push_back(std::move(m));
    }
    return out;
}

std::vector<StatsRecord> spectral_records(const cloud::MatrixSet& set) {
    std::vector<StatsRecord> records;
    records.reserve(set.matrices.size());
    for (std::size_t i = 0; i < set.matrices.size(); ++i) {
        const auto s = linalg::spectral_summary(set.matrices[i]);
        StatsRecord r;
        r.index = i;
        r.norm_before = s.norm;
        r.inverse_norm_before = s.inverse_norm;
        r.kappa_before = s.kappa;
        records.push_back(r);
    }
    return records;
}

BatchStats batch_stats(std::vector<StatsRecord> records, std::size_t bins, bool log_kappa) {
    BatchStats stats;
    const auto add = [&](const char* name, auto field, bool log_scale) {
        std::vector<double> values;
        for (const auto& r : records)
            if (auto v = field(r)) values.push_back(*v);
        if (!values.empty()) stats.summaries.push_back(summarize(name, values, bins, log_scale));
    };
    add("norm_before", [](const StatsRecord& r) { return std::optional<double>(r.norm_before); }, false);
    add("inv_norm_before", [](const StatsRecord& r) { return r.inverse_norm_before; }, false);
    add("kappa_before", [](const StatsRecord& r) { return r.kappa_before; }, log_kappa);
    add("norm_after", [](const StatsRecord& r) { return r.norm_after; }, false);
    add("inv_norm_after", [](const StatsRecord& r) { return r.inverse_norm_after; }, false);
    add("kappa_after", [](const StatsRecord& r) { return r.kappa_after; }, log_kappa);
    stats.records = std::move(records);
    return stats;
}

void write_records_csv(std::ostream& out, std::span<const StatsRecord> records, const Provenance& provenance) {
    out << "# count=" << records.size() << '\n';
    write_provenance(out, provenance);
    out << "index,norm_before,inv_norm_before,kappa_before,norm_after,inv_norm_after,kappa_after\n";
    for (const auto& r : records) {
        out << r.index << ',' << format::shortest(r.norm_before) << ',' << optional_field(r.inverse_norm_before) << ','
            << optional_field(r.kappa_before) << ',' << optional_field(r.norm_after) << ','
            << optional_field(r.inverse_norm_after) << ',' << optional_field(r.kappa_after) << '\n';
    }
}

void write_summary_csv(std::ostream& out, std::span<const Summary> summaries, const Provenance& provenance) {
    write_provenance(out, provenance);
    out << "quantity,count,min,max,mean,scale,low,high,counts\n";
    for (const auto& s : summaries) {
        out << s.quantity << ',' << s.count << ',' << format::shortest(s.min) << ',' << format::shortest(s.max) << ','
            << format::shortest(s.mean) << ',' << (s.histogram.log_scale ? "log" : "linear") << ','
            << format::shortest(s.histogram.low) << ',' << format::shortest(s.histogram.high) << ',';
        for (std::size_t i = 0; i < s.histogram.counts.size(); ++i) out << (i ? " " : "") << s.histogram.counts[i];
        out << '\n';
    }
}

}  // namespace condkit::io
