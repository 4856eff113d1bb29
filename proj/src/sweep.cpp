#include "eoms/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <thread>

namespace eoms {

namespace {

constexpr const char* kVersion = "0.1.0";

const std::vector<std::string>& directional_observables() {
    static const std::vector<std::string> names{
        "e_ca",         "e_cb",          "e_ab",          "e_c_ab",        "e_a_cb",
        "e_b_ca",       "r_tau_min",     "nu_minus_ca",   "nu_minus_cb",   "nu_minus_ab",
        "nu_minus_c_ab", "nu_minus_a_cb", "nu_minus_b_ca", "spectral_abscissa",
    };
    return names;
}

const std::vector<std::string>& contrast_observables() {
    static const std::vector<std::string> names{"c_ca", "c_cb", "c_ab", "c_r"};
    return names;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Axis axis_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) {
        throw InvalidInput(where + ": expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "name" && key != "start" && key != "stop" && key != "count" && key != "scale") {
            throw InvalidInput(where + ": unknown key '" + key + "'");
        }
    }
    Axis a;
    try {
        a.name = j.at("name").get<std::string>();
        a.start = j.at("start").get<double>();
        a.stop = j.at("stop").get<double>();
        const auto count = j.at("count").get<long long>();
        if (count < 2) {
            throw InvalidInput(where + ": count must be at least 2");
        }
        a.count = static_cast<std::size_t>(count);
        const std::string scale = j.value("scale", std::string("linear"));
        if (scale == "linear") {
            a.scale = AxisScale::Linear;
        } else if (scale == "log") {
            a.scale = AxisScale::Log;
        } else {
            throw InvalidInput(where + ": scale must be linear or log");
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(where + ": " + e.what());
    }
    return a;
}

nlohmann::ordered_json axis_to_json(const Axis& a) {
    nlohmann::ordered_json j;
    j["name"] = a.name;
    j["start"] = a.start;
    j["stop"] = a.stop;
    j["count"] = a.count;
    j["scale"] = a.scale == AxisScale::Log ? "log" : "linear";
    return j;
}

void validate_axis(const Axis& a, const std::string& where) {
    if (!contains(sweepable_keys(), a.name)) {
        throw InvalidInput(where + ": '" + a.name + "' is not a sweepable parameter");
    }
    if (a.count < 2) {
        throw InvalidInput(where + ": count must be at least 2");
    }
    if (!std::isfinite(a.start) || !std::isfinite(a.stop)) {
        throw InvalidInput(where + ": bounds must be finite");
    }
    if (a.scale == AxisScale::Log && !(a.start > 0.0 && a.stop > 0.0)) {
        throw InvalidInput(where + ": log axis needs positive bounds");
    }
}

std::string strip_direction(const std::string& column, std::string& suffix) {
    for (const char* s : {"_left", "_right"}) {
        const std::string sfx = s;
        if (column.size() > sfx.size() &&
            column.compare(column.size() - sfx.size(), sfx.size(), sfx) == 0) {
            suffix = sfx.substr(1);
            return column.substr(0, column.size() - sfx.size());
        }
    }
    suffix.clear();
    return column;
}

std::optional<double> directional_value(const PointEvaluation& e, const std::string& name) {
    if (name == "spectral_abscissa") {
        if (e.stability) {
            return e.stability->spectral_abscissa / e.params.omega_b;
        }
        return std::nullopt;
    }
    if (!e.report) {
        return std::nullopt;
    }
    const auto& r = *e.report;
    if (name == "e_ca") return r.e_ca.value;
    if (name == "e_cb") return r.e_cb.value;
    if (name == "e_ab") return r.e_ab.value;
    if (name == "e_c_ab") return r.e_c_ab.value;
    if (name == "e_a_cb") return r.e_a_cb.value;
    if (name == "e_b_ca") return r.e_b_ca.value;
    if (name == "r_tau_min") return r.r_tau_min;
    if (name == "nu_minus_ca") return r.e_ca.nu_minus;
    if (name == "nu_minus_cb") return r.e_cb.nu_minus;
    if (name == "nu_minus_ab") return r.e_ab.nu_minus;
    if (name == "nu_minus_c_ab") return r.e_c_ab.nu_minus;
    if (name == "nu_minus_a_cb") return r.e_a_cb.nu_minus;
    if (name == "nu_minus_b_ca") return r.e_b_ca.nu_minus;
    return std::nullopt;
}

struct GridPoint {
    std::vector<double> axis_values;
    std::optional<SystemParams> params;
    std::string error;
};

std::vector<GridPoint> expand_grid(const ParameterFile& base, const SweepSpec& spec) {
    std::vector<std::pair<std::string, std::vector<double>>> axes;
    if (spec.series) {
        axes.emplace_back(spec.series->name, spec.series->values);
    }
    axes.emplace_back(spec.axis1.name, spec.axis1.values());
    if (spec.axis2) {
        axes.emplace_back(spec.axis2->name, spec.axis2->values());
    }
    std::size_t total = 1;
    for (const auto& a : axes) {
        total *= a.second.size();
    }
    std::vector<GridPoint> grid(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        // row-major: last axis varies fastest
        std::vector<std::size_t> idx(axes.size());
        std::size_t rem = flat;
        for (std::size_t k = axes.size(); k-- > 0;) {
            idx[k] = rem % axes[k].second.size();
            rem /= axes[k].second.size();
        }
        ParameterFile file = base;
        GridPoint& gp = grid[flat];
        for (std::size_t k = 0; k < axes.size(); ++k) {
            const double v = axes[k].second[idx[k]];
            gp.axis_values.push_back(v);
            file.set(axes[k].first, v);
        }
        try {
            gp.params = file.resolve();
        } catch (const InvalidInput& e) {
            gp.error = std::string("invalid_parameters: ") + e.what();
        }
    }
    return grid;
}

template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, std::max<std::size_t>(n, 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                fn(i);
            }
        });
    }
}

std::string describe_failures(const PointResult& point, bool needs_tripartite) {
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) {
            out += "; ";
        }
        out += s;
    };
    for (const auto& run : point.runs) {
        const std::string prefix =
            point.runs.size() > 1 ? std::string(direction_name(run.direction)) + ": " : "";
        if (!run.evaluation.ok()) {
            append(prefix + std::string(failure_name(run.evaluation.failure)));
        } else if (needs_tripartite && run.evaluation.report && !run.evaluation.report->r_tau_min) {
            append(prefix + "monogamy_violation");
        }
    }
    return out;
}

nlohmann::ordered_json make_metadata(const ParameterFile& resolved, const SweepSpec& spec,
                                     const SweepOptions& options, const char* kind) {
    nlohmann::ordered_json meta;
    meta["tool"] = "eoms";
    meta["version"] = kVersion;
    meta["kind"] = kind;
    if (!options.preset.empty()) {
        meta["preset"] = options.preset;
    }
    meta["timestamp"] = options.timestamp.empty() ? utc_timestamp() : options.timestamp;
    meta["parameters"] = resolved.to_json();
    meta["sweep"] = spec.to_json();
    return meta;
}

ResultTable run_grid(const ParameterFile& base, const SweepSpec& spec, const SweepOptions& options,
                     Depth depth, const std::vector<std::string>& columns, const char* kind) {
    spec.validate();
    ParameterFile resolved = base;
    for (const auto& [key, value] : spec.overrides) {
        resolved.set(key, value);
    }

    ResultTable table;
    if (spec.series) {
        table.axis_names.push_back(spec.series->name);
    }
    table.axis_names.push_back(spec.axis1.name);
    if (spec.axis2) {
        table.axis_names.push_back(spec.axis2->name);
    }
    table.columns = columns;
    table.metadata = make_metadata(resolved, spec, options, kind);

    const auto grid = expand_grid(resolved, spec);
    const bool needs_tripartite = std::any_of(columns.begin(), columns.end(), [](const auto& c) {
        return c.rfind("r_tau_min", 0) == 0 || c == "c_r";
    });

    table.rows.resize(grid.size());
    parallel_for(grid.size(), options.threads, [&](std::size_t i) {
        const GridPoint& gp = grid[i];
        ResultRow& row = table.rows[i];
        row.axis_values = gp.axis_values;
        row.cells.assign(columns.size(), std::nullopt);
        if (!gp.params) {
            row.error = gp.error;
            return;
        }
        const PointResult point = run_point(*gp.params, spec.direction, depth);
        row.stable = point.stable();
        row.error = describe_failures(point, needs_tripartite);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            row.cells[c] = observable_value(point, columns[c]);
        }
    });

    if (options.strict) {
        const auto bad = std::count_if(table.rows.begin(), table.rows.end(),
                                       [](const ResultRow& r) { return !r.error.empty(); });
        if (bad > 0) {
            throw StrictModeFailure(std::to_string(bad) + " of " + std::to_string(table.rows.size()) +
                                    " grid points failed");
        }
    }
    return table;
}

}  // namespace

std::vector<double> Axis::values() const {
    std::vector<double> v(count);
    const double denom = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / denom;
        if (scale == AxisScale::Linear) {
            v[i] = start + (stop - start) * t;
        } else {
            const double ls = std::log(start);
            v[i] = std::exp(ls + (std::log(stop) - ls) * t);
        }
    }
    // endpoints exactly as specified
    v.front() = start;
    v.back() = stop;
    return v;
}

const std::vector<std::string>& known_observables() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> all = directional_observables();
        for (const auto& c : contrast_observables()) {
            all.push_back(c);
        }
        all.emplace_back("stable");
        return all;
    }();
    return names;
}

SweepSpec SweepSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InvalidInput("sweep spec: top level must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key != "series" && key != "axis1" && key != "axis2" && key != "overrides" &&
            key != "observables" && key != "direction") {
            throw InvalidInput("sweep spec: unknown key '" + key + "'");
        }
    }
    SweepSpec spec;
    try {
        if (!j.contains("axis1")) {
            throw InvalidInput("sweep spec: missing axis1");
        }
        spec.axis1 = axis_from_json(j.at("axis1"), "axis1");
        if (j.contains("axis2")) {
            spec.axis2 = axis_from_json(j.at("axis2"), "axis2");
        }
        if (j.contains("series")) {
            const auto& s = j.at("series");
            SeriesAxis series;
            series.name = s.at("name").get<std::string>();
            series.values = s.at("values").get<std::vector<double>>();
            spec.series = series;
        }
        if (j.contains("overrides")) {
            for (const auto& [key, value] : j.at("overrides").items()) {
                spec.overrides.emplace_back(key, value.get<double>());
            }
        }
        if (j.contains("observables")) {
            spec.observables = j.at("observables").get<std::vector<std::string>>();
        }
        if (j.contains("direction")) {
            spec.direction = parse_direction(j.at("direction").get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("sweep spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

SweepSpec SweepSpec::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open sweep spec " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("sweep spec " + path.string() + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::ordered_json SweepSpec::to_json() const {
    nlohmann::ordered_json j;
    if (series) {
        j["series"] = {{"name", series->name}, {"values", series->values}};
    }
    j["axis1"] = axis_to_json(axis1);
    if (axis2) {
        j["axis2"] = axis_to_json(*axis2);
    }
    nlohmann::ordered_json ov = nlohmann::ordered_json::object();
    for (const auto& [key, value] : overrides) {
        ov[key] = value;
    }
    j["overrides"] = ov;
    j["observables"] = observables;
    j["direction"] = std::string(direction_name(direction));
    return j;
}

void SweepSpec::validate() const {
    validate_axis(axis1, "axis1");
    if (axis2) {
        validate_axis(*axis2, "axis2");
        if (axis2->name == axis1.name) {
            throw InvalidInput("axis2 repeats axis1");
        }
    }
    if (series) {
        if (!contains(sweepable_keys(), series->name)) {
            throw InvalidInput("series: '" + series->name + "' is not a sweepable parameter");
        }
        if (series->values.empty()) {
            throw InvalidInput("series: needs at least one value");
        }
        if (series->name == axis1.name || (axis2 && series->name == axis2->name)) {
            throw InvalidInput("series repeats a grid axis");
        }
    }
    for (const auto& [key, value] : overrides) {
        if (!contains(settable_keys(), key)) {
            throw InvalidInput("override: unknown parameter '" + key + "'");
        }
    }
    for (const auto& obs : observables) {
        if (!contains(known_observables(), obs)) {
            throw InvalidInput("unknown observable '" + obs + "'");
        }
        if (contains(contrast_observables(), obs) && direction != Direction::Both) {
            throw InvalidInput("observable '" + obs + "' needs direction both");
        }
    }
}

std::vector<std::string> observable_columns(const SweepSpec& spec) {
    std::vector<std::string> cols;
    for (const auto& obs : spec.observables) {
        if (obs == "stable") {
            continue;
        }
        if (contains(contrast_observables(), obs)) {
            cols.push_back(obs);
        } else if (spec.direction == Direction::Both) {
            cols.push_back(obs + "_left");
            cols.push_back(obs + "_right");
        } else {
            cols.push_back(obs);
        }
    }
    return cols;
}

std::optional<double> observable_value(const PointResult& point, const std::string& column) {
    if (point.runs.empty()) {
        return std::nullopt;
    }
    if (contains(contrast_observables(), column)) {
        if (!point.contrasts) {
            return std::nullopt;
        }
        const auto& c = *point.contrasts;
        if (column == "c_ca") return c.c_ca;
        if (column == "c_cb") return c.c_cb;
        if (column == "c_ab") return c.c_ab;
        return c.c_r;
    }
    std::string suffix;
    const std::string base = strip_direction(column, suffix);
    const PointEvaluation* e = &point.runs.front().evaluation;
    if (!suffix.empty()) {
        e = nullptr;
        for (const auto& run : point.runs) {
            if (direction_name(run.direction) == suffix) {
                e = &run.evaluation;
            }
        }
        if (e == nullptr) {
            return std::nullopt;
        }
    }
    return directional_value(*e, base);
}

ResultTable run_sweep(const ParameterFile& base, const SweepSpec& spec, const SweepOptions& options) {
    return run_grid(base, spec, options, Depth::Full, observable_columns(spec), "sweep");
}

ResultTable run_stability_map(const ParameterFile& base, const SweepSpec& spec,
                              const SweepOptions& options) {
    SweepSpec stability_spec = spec;
    stability_spec.observables = {"spectral_abscissa"};
    return run_grid(base, stability_spec, options, Depth::StabilityOnly,
                    observable_columns(stability_spec), "stability");
}

std::string tool_version() { return kVersion; }

}  // namespace eoms
