#include "eoms/emit.hpp"
#include "eoms/errors.hpp"
#include "eoms/parameter_file.hpp"
#include "eoms/pipeline.hpp"
#include "eoms/presets.hpp"
#include "eoms/sweep.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitStrict = 3;

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw eoms::InvalidInput("cannot open output file " + path.string());
    }
    out << text;
    if (!out) {
        throw eoms::InvalidInput("write failed for " + path.string());
    }
}

double parse_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        throw eoms::InvalidInput(what + ": '" + text + "' is not a number");
    }
    return v;
}

// key=value; keys are parameter keys, axisN.{start,stop,count,scale},
// series (comma separated values) or direction.
void apply_override(eoms::FigurePreset& preset, const std::string& item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw eoms::InvalidInput("override '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    auto& spec = preset.spec;

    if (key == "direction") {
        spec.direction = eoms::parse_direction(value);
        return;
    }
    if (key == "series") {
        if (!spec.series) {
            throw eoms::InvalidInput("preset " + preset.name + " has no series axis");
        }
        spec.series->values.clear();
        std::size_t pos = 0;
        while (pos <= value.size()) {
            const auto comma = value.find(',', pos);
            const auto piece = value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            spec.series->values.push_back(parse_double(piece, "series"));
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
        return;
    }
    for (const char* prefix : {"axis1.", "axis2."}) {
        if (key.rfind(prefix, 0) != 0) {
            continue;
        }
        eoms::Axis* axis = nullptr;
        if (prefix[4] == '1') {
            axis = &spec.axis1;
        } else if (spec.axis2) {
            axis = &*spec.axis2;
        } else {
            throw eoms::InvalidInput("preset " + preset.name + " has no axis2");
        }
        const std::string field = key.substr(6);
        if (field == "start") {
            axis->start = parse_double(value, key);
        } else if (field == "stop") {
            axis->stop = parse_double(value, key);
        } else if (field == "count") {
            const double c = parse_double(value, key);
            if (c < 2 || c != static_cast<double>(static_cast<std::size_t>(c))) {
                throw eoms::InvalidInput(key + " must be an integer >= 2");
            }
            axis->count = static_cast<std::size_t>(c);
        } else if (field == "scale") {
            if (value == "linear") {
                axis->scale = eoms::AxisScale::Linear;
            } else if (value == "log") {
                axis->scale = eoms::AxisScale::Log;
            } else {
                throw eoms::InvalidInput(key + " must be linear or log");
            }
        } else {
            throw eoms::InvalidInput("unknown axis field in override '" + key + "'");
        }
        return;
    }
    preset.params.set(key, parse_double(value, key));
}

struct TableOutput {
    std::string out;
    std::string format = "csv";
    bool gnuplot = false;
};

void emit_table(const eoms::ResultTable& table, const TableOutput& o) {
    const auto format = eoms::parse_format(o.format);
    eoms::write_table(table, o.out, format);
    if (o.gnuplot) {
        if (format != eoms::OutputFormat::Csv) {
            throw eoms::InvalidInput("--gnuplot needs --format csv");
        }
        std::filesystem::path script = o.out;
        script.replace_extension(".gp");
        write_text(script, eoms::gnuplot_script(table, o.out));
    }
}

void add_table_options(CLI::App* cmd, TableOutput& o) {
    cmd->add_option("--out", o.out, "output file")->required();
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--gnuplot", o.gnuplot, "also write a gnuplot script next to the CSV");
}

int run_point_command(const std::string& config, const std::string& direction, bool strict,
                      const std::string& matrices_out, const std::string& out) {
    const auto params = eoms::ParameterFile::load(config).resolve();
    const auto result = eoms::run_point(params, eoms::parse_direction(direction));
    const std::string text = eoms::point_report(result).dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text(out, text);
    }
    if (!matrices_out.empty()) {
        for (const auto& run : result.runs) {
            std::string stem = matrices_out;
            if (result.runs.size() > 1) {
                stem += "_" + std::string(eoms::direction_name(run.direction));
            }
            const auto& e = run.evaluation;
            if (e.drift) {
                write_text(stem + "_drift.csv", eoms::matrix_csv(e.drift->a));
            }
            if (e.diffusion) {
                write_text(stem + "_diffusion.csv", eoms::matrix_csv(e.diffusion->d));
            }
            if (e.covariance) {
                write_text(stem + "_covariance.csv", eoms::matrix_csv(e.covariance->v));
            }
        }
    }
    if (strict && !result.ok()) {
        for (const auto& run : result.runs) {
            if (!run.evaluation.ok()) {
                std::cerr << "eoms: " << eoms::direction_name(run.direction) << ": "
                          << eoms::failure_name(run.evaluation.failure) << ": " << run.evaluation.message
                          << "\n";
            }
        }
        return kExitStrict;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state Gaussian entanglement of a spinning exciton-optomechanical system"};
    app.require_subcommand(1);
    app.set_version_flag("--version", eoms::tool_version());

    std::string config;
    std::string spec_path;
    std::string direction = "as_given";
    std::string matrices_out;
    std::string point_out;
    std::string figure_name;
    std::vector<std::string> overrides;
    bool strict = false;
    std::size_t threads = 0;
    TableOutput table_out;

    auto* point = app.add_subcommand("point", "evaluate a single parameter point");
    point->add_option("--config", config, "parameter file (JSON)")->required();
    point->add_option("--direction", direction, "as_given, left, right or both")
        ->check(CLI::IsMember({"as_given", "left", "right", "both"}));
    point->add_option("--matrices-out", matrices_out, "write drift/diffusion/covariance CSVs with this prefix");
    point->add_option("--out", point_out, "write the report here instead of stdout");
    point->add_flag("--strict", strict, "exit 3 when the point fails");

    auto* sweep = app.add_subcommand("sweep", "run a 1-D or 2-D parameter sweep");
    sweep->add_option("--config", config, "parameter file (JSON)")->required();
    sweep->add_option("--spec", spec_path, "sweep specification (JSON)")->required();
    add_table_options(sweep, table_out);
    sweep->add_flag("--strict", strict, "exit 3 when any grid point fails");
    sweep->add_option("--threads", threads, "worker threads (0: all cores)");

    auto* figure = app.add_subcommand("figure", "regenerate a figure preset");
    figure->add_option("--name", figure_name, "fig2 .. fig11")->required();
    figure->add_option("--override", overrides, "key=value, repeatable");
    add_table_options(figure, table_out);
    figure->add_flag("--strict", strict, "exit 3 when any grid point fails");
    figure->add_option("--threads", threads, "worker threads (0: all cores)");

    auto* stab = app.add_subcommand("stability", "spectral abscissa map over a sweep grid");
    stab->add_option("--config", config, "parameter file (JSON)")->required();
    stab->add_option("--spec", spec_path, "sweep specification (JSON)")->required();
    add_table_options(stab, table_out);
    stab->add_option("--threads", threads, "worker threads (0: all cores)");
    stab->add_flag("--strict", strict, "exit 3 when any grid point is unstable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        eoms::SweepOptions options;
        options.threads = threads;
        options.strict = strict;
        if (point->parsed()) {
            return run_point_command(config, direction, strict, matrices_out, point_out);
        }
        if (sweep->parsed()) {
            const auto base = eoms::ParameterFile::load(config);
            emit_table(eoms::run_sweep(base, eoms::SweepSpec::load(spec_path), options), table_out);
        } else if (figure->parsed()) {
            auto preset = eoms::figure_preset(figure_name);
            for (const auto& o : overrides) {
                apply_override(preset, o);
            }
            options.preset = preset.name;
            emit_table(eoms::run_sweep(preset.params, preset.spec, options), table_out);
        } else if (stab->parsed()) {
            const auto base = eoms::ParameterFile::load(config);
            emit_table(eoms::run_stability_map(base, eoms::SweepSpec::load(spec_path), options), table_out);
        }
    } catch (const eoms::StrictModeFailure& e) {
        std::cerr << "eoms: " << e.what() << "\n";
        return kExitStrict;
    } catch (const eoms::Error& e) {
        std::cerr << "eoms: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "eoms: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
