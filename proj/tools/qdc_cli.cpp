#include "qdc/dense_coding.hpp"
#include "qdc/errors.hpp"
#include "qdc/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

qdc::ModelKind parse_model(const std::string& name) {
    if (name == "xxz") return qdc::ModelKind::Xxz;
    if (name == "dm") return qdc::ModelKind::Dm;
    throw UsageError("unknown model '" + name + "' (expected xxz or dm)");
}

std::string anisotropy_name(qdc::ModelKind kind) {
    return kind == qdc::ModelKind::Xxz ? "Delta" : "D";
}

// Picks --delta or --d according to the model; the mismatched flag is a
// usage error.
double pick_anisotropy(qdc::ModelKind kind, const std::optional<double>& delta,
                       const std::optional<double>& d) {
    if (kind == qdc::ModelKind::Xxz) {
        if (d) throw UsageError("--d is a DM flag; use --delta for the xxz model");
        if (!delta) throw UsageError("xxz model requires --delta");
        return *delta;
    }
    if (delta) throw UsageError("--delta is an xxz flag; use --d for the dm model");
    if (!d) throw UsageError("dm model requires --d");
    return *d;
}

qdc::SweepAxis parse_axis(const std::string& text) {
    qdc::SweepAxis axis;
    const auto parts = [&text] {
        std::vector<std::string> out;
        std::string cur;
        for (char c : text) {
            if (c == ':') {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(cur);
        return out;
    }();
    if (parts.size() != 4) throw UsageError("--axis expects NAME:START:STOP:COUNT");
    axis.name = parts[0];
    try {
        axis.start = std::stod(parts[1]);
        axis.stop = std::stod(parts[2]);
        axis.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw UsageError("--axis expects numeric START:STOP:COUNT");
    }
    return axis;
}

void write_records(const std::string& path, const std::vector<qdc::CapacityResult>& records,
                   const std::string& format) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    if (format == "json")
        qdc::write_json(os, records);
    else
        qdc::write_csv(os, records);
    os.flush();
    if (!os) throw IoError("write to '" + path + "' failed");
}

int run(int argc, char** argv) {
    CLI::App app{"Optimal dense coding capacity of thermal two-qubit XXZ / DM states"};
    app.require_subcommand(1);

    std::string model_name;
    std::optional<double> flag_j, flag_delta, flag_d, flag_t;
    std::string format = "csv";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, bool need_j, bool need_t) {
        cmd->add_option("--model", model_name, "Model: xxz or dm")->required();
        auto* j = cmd->add_option("--j", flag_j, "Coupling J");
        if (need_j) j->required();
        cmd->add_option("--delta", flag_delta, "Anisotropy Delta (xxz)");
        cmd->add_option("--d", flag_d, "DM interaction D (dm)");
        auto* t = cmd->add_option("--t", flag_t, "Temperature T");
        if (need_t) t->required();
    };

    auto* cmd_point = app.add_subcommand("point", "Evaluate one parameter point");
    add_common(cmd_point, true, true);
    cmd_point->add_option("--format", format, "csv or json");

    auto* cmd_sweep = app.add_subcommand("sweep", "Grid sweep to a file");
    add_common(cmd_sweep, false, false);
    std::vector<std::string> axis_texts;
    cmd_sweep->add_option("--axis", axis_texts, "Axis as NAME:START:STOP:COUNT (1 or 2)");
    cmd_sweep->add_option("--out", out_path, "Output file")->required();
    cmd_sweep->add_option("--format", format, "csv or json");

    auto* cmd_crit = app.add_subcommand("critical-temp", "Solve chi(T) = 1");
    add_common(cmd_crit, true, false);
    double t_lo = 1e-3, t_hi = 20.0;
    bool scan_all = false;
    cmd_crit->add_option("--t-lo", t_lo, "Bracket lower end");
    cmd_crit->add_option("--t-hi", t_hi, "Bracket upper end");
    cmd_crit->add_flag("--all", scan_all, "List every sign-change interval");

    auto* cmd_figure = app.add_subcommand("figure", "Emit data grid + gnuplot script");
    int figure_n = 0;
    std::string out_dir = ".";
    cmd_figure->add_option("n", figure_n, "Figure number 1..6")->required();
    cmd_figure->add_option("--out", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (cmd_point->parsed()) {
        qdc::ModelParams p;
        p.kind = parse_model(model_name);
        p.coupling = *flag_j;
        p.anisotropy = pick_anisotropy(p.kind, flag_delta, flag_d);
        p.temperature = *flag_t;
        if (p.coupling == 0.0)
            throw qdc::InvalidCouplingError("point: closed form requires J != 0");
        const std::vector<qdc::CapacityResult> records{qdc::evaluate(p)};
        if (format == "json")
            qdc::write_json(std::cout, records);
        else
            qdc::write_csv(std::cout, records);
        return 0;
    }

    if (cmd_sweep->parsed()) {
        qdc::SweepSpec spec;
        spec.model = parse_model(model_name);
        if (flag_j) spec.fixed["J"] = *flag_j;
        if (flag_t) spec.fixed["T"] = *flag_t;
        if (flag_delta) spec.fixed["Delta"] = *flag_delta;
        if (flag_d) spec.fixed["D"] = *flag_d;
        for (const std::string& text : axis_texts) spec.axes.push_back(parse_axis(text));
        write_records(out_path, qdc::run_sweep(spec), format);
        return 0;
    }

    if (cmd_crit->parsed()) {
        qdc::ModelParams p;
        p.kind = parse_model(model_name);
        p.coupling = *flag_j;
        p.anisotropy = pick_anisotropy(p.kind, flag_delta, flag_d);
        if (scan_all) {
            const auto intervals = qdc::critical_temperature_scan(p, t_lo, t_hi);
            if (intervals.empty()) {
                std::cout << "none\n";
            } else {
                for (const auto& [lo, hi] : intervals)
                    std::cout << qdc::format_record_value(lo) << ','
                              << qdc::format_record_value(hi) << '\n';
            }
        } else {
            const auto root = qdc::critical_temperature(p, t_lo, t_hi);
            std::cout << (root ? qdc::format_record_value(*root) : std::string("none"))
                      << '\n';
        }
        return 0;
    }

    // figure
    const qdc::FigureOutput fig = qdc::figure_output(figure_n);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const auto csv_path = std::filesystem::path(out_dir) / fig.csv_name;
    const auto gp_path = std::filesystem::path(out_dir) / fig.script_name;
    write_records(csv_path.string(), fig.records, "csv");
    std::ofstream gp(gp_path, std::ios::binary);
    if (!gp) throw IoError("cannot open '" + gp_path.string() + "' for writing");
    gp << fig.script;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qdc::SweepSpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qdc::InvalidTemperatureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const qdc::InvalidCouplingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const qdc::WrongModelKindError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const qdc::InvalidBracketError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
