#include "eoms/emit.hpp"

#include "eoms/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace eoms {

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw InvalidInput("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string to_csv(const ResultTable& table) {
    std::ostringstream out;
    for (const auto& [key, value] : table.metadata.items()) {
        out << "# " << key << ": ";
        if (value.is_string()) {
            out << value.get<std::string>();
        } else {
            out << value.dump();
        }
        out << "\r\n";
    }
    bool first = true;
    auto cell = [&](const std::string& s) {
        if (!first) {
            out << ',';
        }
        out << csv_field(s);
        first = false;
    };
    for (const auto& a : table.axis_names) {
        cell(a);
    }
    for (const auto& c : table.columns) {
        cell(c);
    }
    cell("stable");
    cell("error");
    out << "\r\n";
    for (const auto& row : table.rows) {
        first = true;
        for (double v : row.axis_values) {
            cell(format_number(v));
        }
        for (const auto& c : row.cells) {
            cell(c ? format_number(*c) : std::string());
        }
        cell(row.stable ? "1" : "0");
        cell(row.error);
        out << "\r\n";
    }
    return out.str();
}

std::string to_json_text(const ResultTable& table) {
    nlohmann::ordered_json j;
    j["metadata"] = table.metadata;
    nlohmann::ordered_json columns = nlohmann::ordered_json::array();
    for (const auto& a : table.axis_names) {
        columns.push_back(a);
    }
    for (const auto& c : table.columns) {
        columns.push_back(c);
    }
    columns.push_back("stable");
    columns.push_back("error");
    j["columns"] = columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        for (std::size_t k = 0; k < table.axis_names.size(); ++k) {
            r[table.axis_names[k]] = row.axis_values[k];
        }
        for (std::size_t k = 0; k < table.columns.size(); ++k) {
            if (row.cells[k]) {
                r[table.columns[k]] = *row.cells[k];
            } else {
                r[table.columns[k]] = nullptr;
            }
        }
        r["stable"] = row.stable;
        r["error"] = row.error;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_table(const ResultTable& table, const std::filesystem::path& path, OutputFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidInput("cannot open output file " + path.string());
    }
    out << (format == OutputFormat::Csv ? to_csv(table) : to_json_text(table));
    if (!out) {
        throw InvalidInput("write failed for " + path.string());
    }
}

std::string gnuplot_script(const ResultTable& table, const std::filesystem::path& csv_path) {
    std::ostringstream g;
    const std::string data = csv_path.string();
    const std::string stem = csv_path.stem().string();
    const bool has_series =
        table.axis_names.size() == 3 || (table.axis_names.size() == 2 && table.metadata.contains("sweep") &&
                                         table.metadata["sweep"].contains("series"));
    const std::size_t grid_axes = table.axis_names.size() - (has_series ? 1 : 0);
    const std::size_t first_grid_col = has_series ? 2 : 1;

    std::set<double> series_values;
    if (has_series) {
        for (const auto& row : table.rows) {
            series_values.insert(row.axis_values.front());
        }
    } else {
        series_values.insert(0.0);
    }

    g << "# gnuplot script for " << data << "\n";
    g << "set datafile separator ','\n";
    g << "set datafile commentschars '#'\n";
    g << "set key autotitle columnhead\n";
    g << "set terminal pngcairo size 900,700\n";
    g << "set xlabel '" << table.axis_names[first_grid_col - 1] << "'\n";
    if (grid_axes == 2) {
        g << "set ylabel '" << table.axis_names[first_grid_col] << "'\n";
        g << "set view map\nset pm3d map\n";
    }
    if (table.metadata.contains("sweep") && table.metadata["sweep"]["axis1"].value("scale", "") == "log") {
        g << "set logscale x\n";
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const std::size_t col = table.axis_names.size() + c + 1;
        std::size_t panel = 0;
        for (double s : series_values) {
            const std::string filter =
                has_series ? "(column(1) == " + format_number(s) + " ? column(" + std::to_string(col) +
                                 ") : 1/0)"
                           : "(column(" + std::to_string(col) + "))";
            g << "set output '" << stem << "_" << table.columns[c];
            if (has_series) {
                g << "_" << panel;
            }
            g << ".png'\n";
            g << "set title '" << table.columns[c];
            if (has_series) {
                g << " (" << table.axis_names.front() << " = " << format_number(s) << ")";
            }
            g << "'\n";
            if (grid_axes == 2) {
                g << "splot '" << data << "' using " << first_grid_col << ":" << first_grid_col + 1 << ":"
                  << filter << " with pm3d notitle\n";
            } else {
                g << "plot '" << data << "' using " << first_grid_col << ":" << filter
                  << " with lines notitle\n";
            }
            ++panel;
        }
    }
    return g.str();
}

std::string matrix_csv(const linalg::Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += format_number(m(i, j));
        }
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::ordered_json complex_json(std::complex<double> z) {
    return nlohmann::ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::ordered_json negativity_json(const Negativity& n) {
    return nlohmann::ordered_json{{"e_n", n.value}, {"nu_minus", n.nu_minus}};
}

nlohmann::ordered_json evaluation_json(const DirectedEvaluation& run) {
    const PointEvaluation& e = run.evaluation;
    const double wb = e.params.omega_b;
    nlohmann::ordered_json j;
    j["direction"] = std::string(direction_name(run.direction));
    j["delta_f_over_omega_b"] = e.params.delta_f / wb;
    j["failure"] = std::string(failure_name(e.failure));
    j["message"] = e.message;
    if (e.steady) {
        j["mean_field"] = {{"c", complex_json(e.steady->c_mean)},
                           {"a", complex_json(e.steady->a_mean)},
                           {"b", complex_json(e.steady->b_mean)},
                           {"g_cb_over_omega_b", complex_json(e.steady->g_cb / wb)}};
    }
    if (e.stability) {
        nlohmann::ordered_json eig = nlohmann::ordered_json::array();
        for (const auto& z : e.stability->eigenvalues) {
            eig.push_back(complex_json(z / wb));
        }
        j["stability"] = {{"stable", e.stability->stable},
                          {"spectral_abscissa_over_omega_b", e.stability->spectral_abscissa / wb},
                          {"eigenvalues_over_omega_b", eig}};
    }
    if (e.report) {
        const EntanglementReport& r = *e.report;
        j["entanglement"] = {{"e_ca", negativity_json(r.e_ca)},     {"e_cb", negativity_json(r.e_cb)},
                             {"e_ab", negativity_json(r.e_ab)},     {"e_c_ab", negativity_json(r.e_c_ab)},
                             {"e_a_cb", negativity_json(r.e_a_cb)}, {"e_b_ca", negativity_json(r.e_b_ca)}};
        j["residual_contangles"] = {{"cavity", r.residuals[0]},
                                    {"exciton", r.residuals[1]},
                                    {"phonon", r.residuals[2]}};
        if (r.r_tau_min) {
            j["r_tau_min"] = *r.r_tau_min;
        } else {
            j["r_tau_min"] = nullptr;
        }
    }
    if (e.covariance) {
        j["physical"] = physicality(*e.covariance);
    }
    return j;
}

}  // namespace

nlohmann::ordered_json point_report(const PointResult& point) {
    nlohmann::ordered_json j;
    j["tool"] = "eoms";
    j["version"] = tool_version();
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const auto& run : point.runs) {
        runs.push_back(evaluation_json(run));
    }
    j["runs"] = std::move(runs);
    if (point.contrasts) {
        const Contrasts& c = *point.contrasts;
        j["contrasts"] = {{"c_ca", c.c_ca}, {"c_cb", c.c_cb}, {"c_ab", c.c_ab}};
        if (c.c_r) {
            j["contrasts"]["c_r"] = *c.c_r;
        } else {
            j["contrasts"]["c_r"] = nullptr;
        }
    }
    return j;
}

}  // namespace eoms
