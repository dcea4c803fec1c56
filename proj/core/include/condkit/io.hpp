#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "condkit/cloud.hpp"
#include "condkit/homology.hpp"
#include "condkit/surgery.hpp"

namespace condkit::io {

/// Flat `key=value` run description. Blank lines and lines starting with `#`
/// are ignored on parse; serialization writes `command` first and then the
/// remaining keys in sorted order, one per line.
struct RunConfig {
    std::string command;
    std::map<std::string, std::string> values;

    [[nodiscard]] std::optional<std::string> get(const std::string& key) const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig parse_config(std::string_view text);
std::string serialize_config(const RunConfig& config);
/// Single-line form used in file headers: `command=gen;count=10;...`.
std::string config_line(const RunConfig& config);

RunConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const RunConfig& config);

/// Extra `# ...` lines written after the format header (version, run config).
using Provenance = std::vector<std::string>;

// Matrix CSV:
//   # shape=<r>x<c> count=<N> dist=<descriptor> seed=<s>
//   # <provenance lines>
//   one row-major flattened matrix per line, comma separated
void write_matrix_csv(std::ostream& out, const cloud::MatrixSet& set, const Provenance& provenance = {});
cloud::MatrixSet read_matrix_csv(std::istream& in);

// Cloud CSV:
//   # dim=<d> count=<N> source=<tag> seed=<s>
//   # <provenance lines>
//   one point per line, comma separated
void write_cloud_csv(std::ostream& out, const cloud::PointCloud& cloud, const Provenance& provenance = {});
cloud::PointCloud read_cloud_csv(std::istream& in);

/// Which format the first header line of a file announces.
enum class FileKind { Matrices, Cloud, Diagram, Unknown };
FileKind sniff_kind(const std::filesystem::path& path);

// Diagram CSV:
//   # max_dim=<k> cap=<c> count=<N>
//   # <provenance lines>
//   dimension,birth,death
//   0,0,0.25
//   0,0,inf
void write_diagram_csv(std::ostream& out, const homology::PersistenceDiagram& diagram,
                       const Provenance& provenance = {});
/// The `#` header is optional; without it max_dim is inferred and the cap is inf.
homology::PersistenceDiagram read_diagram_csv(std::istream& in);

/// Horizontal bars stacked per dimension; infinite bars run to the cap and are
/// marked with class="infinite".
void write_barcode_svg(std::ostream& out, const homology::PersistenceDiagram& diagram);

/// Spectral quantities of one matrix before and (optionally) after surgery.
struct StatsRecord {
    std::size_t index = 0;
    double norm_before = 0.0;
    std::optional<double> inverse_norm_before;
    std::optional<double> kappa_before;
    std::optional<double> norm_after;
    std::optional<double> inverse_norm_after;
    std::optional<double> kappa_after;
};

struct Histogram {
    double low = 0.0;
    double high = 0.0;
    bool log_scale = false;
    std::vector<std::size_t> counts;
};

struct Summary {
    std::string quantity;
    std::size_t count = 0;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    Histogram histogram;
};

/// Uniform bins between the observed min and max (log10-uniform when
/// log_scale). The maximum falls into the last bin. InvalidInput for no values,
/// zero bins, or non-positive values on a log scale.
Summary summarize(std::string quantity, std::span<const double> values, std::size_t bins = 50, bool log_scale = false);

struct BatchStats {
    std::vector<StatsRecord> records;
    std::vector<Summary> summaries;
};

struct BatchSurgery {
    cloud::MatrixSet surgered;
    std::vector<StatsRecord> records;
};

/// Applies `plan` to every matrix of the set.
BatchSurgery apply_batch(const cloud::MatrixSet& set, const surgery::SurgeryPlan& plan);

/// Before-only records for a set of square matrices.
std::vector<StatsRecord> spectral_records(const cloud::MatrixSet& set);

/// Summaries of every quantity present in the records. Kappa histograms use a
/// log scale when `log_kappa`.
BatchStats batch_stats(std::vector<StatsRecord> records, std::size_t bins = 50, bool log_kappa = false);

// index,norm_before,inv_norm_before,kappa_before,norm_after,inv_norm_after,kappa_after
// with an empty field where a quantity is undefined.
void write_records_csv(std::ostream& out, std::span<const StatsRecord> records, const Provenance& provenance = {});
// quantity,count,min,max,mean,scale,low,high,counts (counts space separated)
void write_summary_csv(std::ostream& out, std::span<const Summary> summaries, const Provenance& provenance = {});

}  // namespace condkit::io
