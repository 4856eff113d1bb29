#pragma once

#include "eoms/sweep.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace eoms {

enum class OutputFormat { Csv, Json };

[[nodiscard]] OutputFormat parse_format(std::string_view text);

/// Shortest decimal that round-trips to the same double, '.' separator.
[[nodiscard]] std::string format_number(double v);

/// Quote a CSV field per RFC 4180 when it contains a comma, quote or newline.
[[nodiscard]] std::string csv_field(std::string_view text);

/// Metadata as '# key: value' comment lines (the timestamp on its own line),
/// then the header row and one row per grid point. Unavailable observables
/// are empty cells; `stable` is 1/0; `error` carries per-point failures.
[[nodiscard]] std::string to_csv(const ResultTable& table);

/// {"metadata": {...}, "columns": [...], "rows": [{...}, ...]}; unavailable
/// observables are null.
[[nodiscard]] std::string to_json_text(const ResultTable& table);

/// Writes the table; throws InvalidInput naming the path on I/O failure.
void write_table(const ResultTable& table, const std::filesystem::path& path, OutputFormat format);

/// gnuplot script plotting every observable column of a CSV written by
/// to_csv, one PNG per observable (and per series value).
[[nodiscard]] std::string gnuplot_script(const ResultTable& table,
                                         const std::filesystem::path& csv_path);

/// 6x6 (or any) matrix as row-major CSV, one matrix row per line.
[[nodiscard]] std::string matrix_csv(const linalg::Matrix& m);

/// JSON report of a single-point evaluation: resolved parameters, then per
/// direction the mean fields, stability, entanglement measures and failure.
[[nodiscard]] nlohmann::ordered_json point_report(const PointResult& point);

}  // namespace eoms
