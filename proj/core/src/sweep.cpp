#include "qdc/sweep.hpp"

#include "qdc/errors.hpp"

#include <array>
#include <cstdio>
#include <set>
#include <sstream>

namespace qdc {

namespace {

std::set<std::string> parameter_names(ModelKind kind) {
    return kind == ModelKind::Xxz ? std::set<std::string>{"J", "Delta", "T"}
                                  : std::set<std::string>{"J", "D", "T"};
}

void assign(ModelParams& p, const std::string& name, double value) {
    if (name == "J")
        p.coupling = value;
    else if (name == "T")
        p.temperature = value;
    else
        p.anisotropy = value; // Delta or D, validated upstream
}

double axis_value(const SweepAxis& axis, int i) {
    return axis.start +
           static_cast<double>(i) * (axis.stop - axis.start) / (axis.count - 1);
}

const char* model_name(ModelKind kind) { return kind == ModelKind::Xxz ? "xxz" : "dm"; }

} // namespace

void validate(const SweepSpec& spec) {
    if (spec.axes.empty() || spec.axes.size() > 2)
        throw SweepSpecError("sweep: need 1 or 2 axes");
    const std::set<std::string> allowed = parameter_names(spec.model);
    std::set<std::string> seen;
    for (const auto& [name, value] : spec.fixed) {
        if (!allowed.count(name))
            throw SweepSpecError("sweep: parameter '" + name + "' not valid for this model");
        seen.insert(name);
    }
    for (const SweepAxis& axis : spec.axes) {
        if (!allowed.count(axis.name))
            throw SweepSpecError("sweep: axis '" + axis.name + "' not valid for this model");
        if (spec.fixed.count(axis.name))
            throw SweepSpecError("sweep: axis '" + axis.name + "' also fixed");
        if (!seen.insert(axis.name).second)
            throw SweepSpecError("sweep: axis '" + axis.name + "' repeated");
        if (axis.count < 2) throw SweepSpecError("sweep: axis step count must be >= 2");
    }
    if (seen != allowed) throw SweepSpecError("sweep: parameters not fully specified");
}

std::vector<CapacityResult> run_sweep(const SweepSpec& spec) {
    validate(spec);
    ModelParams base;
    base.kind = spec.model;
    for (const auto& [name, value] : spec.fixed) assign(base, name, value);

    std::vector<CapacityResult> records;
    if (spec.axes.size() == 1) {
        const SweepAxis& ax = spec.axes[0];
        records.reserve(ax.count);
        for (int i = 0; i < ax.count; ++i) {
            ModelParams p = base;
            assign(p, ax.name, axis_value(ax, i));
            records.push_back(evaluate(p));
        }
    } else {
        const SweepAxis& outer = spec.axes[0];
        const SweepAxis& inner = spec.axes[1];
        records.reserve(static_cast<std::size_t>(outer.count) * inner.count);
        for (int i = 0; i < outer.count; ++i)
            for (int j = 0; j < inner.count; ++j) {
                ModelParams p = base;
                assign(p, outer.name, axis_value(outer, i));
                assign(p, inner.name, axis_value(inner, j));
                records.push_back(evaluate(p));
            }
    }
    return records;
}

std::string format_record_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<CapacityResult>& records) {
    os << "model,J,Delta,D,T,chi,entropy_rho,concurrence,valid\n";
    for (const CapacityResult& r : records) {
        const bool xxz = r.params.kind == ModelKind::Xxz;
        os << model_name(r.params.kind) << ',' << format_record_value(r.params.coupling)
           << ',' << (xxz ? format_record_value(r.params.anisotropy) : std::string{}) << ','
           << (xxz ? std::string{} : format_record_value(r.params.anisotropy)) << ','
           << format_record_value(r.params.temperature) << ',' << format_record_value(r.chi)
           << ',' << format_record_value(r.entropy_rho) << ','
           << format_record_value(r.concurrence) << ','
           << (r.valid_for_dense_coding ? "true" : "false") << '\n';
    }
}

void write_json(std::ostream& os, const std::vector<CapacityResult>& records) {
    os << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const CapacityResult& r = records[i];
        const bool xxz = r.params.kind == ModelKind::Xxz;
        const std::string aniso = format_record_value(r.params.anisotropy);
        os << "  {\"model\":\"" << model_name(r.params.kind) << "\""
           << ",\"J\":" << format_record_value(r.params.coupling)
           << ",\"Delta\":" << (xxz ? aniso : "null")
           << ",\"D\":" << (xxz ? "null" : aniso)
           << ",\"T\":" << format_record_value(r.params.temperature)
           << ",\"chi\":" << format_record_value(r.chi)
           << ",\"entropy_rho\":" << format_record_value(r.entropy_rho)
           << ",\"concurrence\":" << format_record_value(r.concurrence)
           << ",\"valid\":" << (r.valid_for_dense_coding ? "true" : "false") << "}"
           << (i + 1 < records.size() ? "," : "") << "\n";
    }
    os << "]\n";
}

namespace {

// CSV columns for gnuplot: 2=J, 3=Delta, 4=D, 5=T, 6=chi.

void append_surface(std::vector<CapacityResult>& records, ModelKind model, double t,
                    const std::string& aniso_name, double aniso_lo, double aniso_hi) {
    SweepSpec spec;
    spec.model = model;
    spec.fixed = {{"T", t}};
    spec.axes = {{"J", -2.0, 2.0, 101}, {aniso_name, aniso_lo, aniso_hi, 101}};
    auto rows = run_sweep(spec);
    records.insert(records.end(), rows.begin(), rows.end());
}

std::string surface_script(const std::string& csv, const std::string& ylabel) {
    std::ostringstream s;
    s << "set datafile separator ','\n"
      << "set xlabel 'J'\n"
      << "set ylabel '" << ylabel << "'\n"
      << "set zlabel 'chi'\n"
      << "set dgrid3d 101,101\n"
      << "set hidden3d\n"
      << "splot '" << csv << "' every ::1 using 2:" << (ylabel == "Delta" ? 3 : 4)
      << ":6 with lines title 'chi'\n";
    return s.str();
}

struct CurveFamily {
    double j;
    std::vector<double> levels; // values of the per-curve parameter
};

// One curve per (J, level); the x axis is a single swept parameter.
std::string curve_script(const std::string& csv, int x_col, const std::string& x_label,
                         int level_col, const std::string& level_label,
                         const std::vector<CurveFamily>& families) {
    std::ostringstream s;
    s << "set datafile separator ','\n"
      << "set multiplot layout 1," << families.size() << "\n"
      << "set xlabel '" << x_label << "'\n"
      << "set ylabel 'chi'\n";
    for (const CurveFamily& fam : families) {
        s << "set title 'J=" << format_record_value(fam.j) << "'\n" << "plot ";
        for (std::size_t k = 0; k < fam.levels.size(); ++k) {
            const std::string lv = format_record_value(fam.levels[k]);
            s << "'" << csv << "' every ::1 using " << x_col << ":(($2=="
              << format_record_value(fam.j) << " && $" << level_col << "==" << lv
              << ") ? $6 : 1/0) with lines title '" << level_label << "=" << lv << "'";
            s << (k + 1 < fam.levels.size() ? ", \\\n     " : "\n");
        }
    }
    s << "unset multiplot\n";
    return s.str();
}

void append_curves(std::vector<CapacityResult>& records, ModelKind model,
                   const std::string& x_name, double x_lo, double x_hi, int x_count,
                   const std::string& level_name, const std::vector<CurveFamily>& families) {
    for (const CurveFamily& fam : families)
        for (double level : fam.levels) {
            SweepSpec spec;
            spec.model = model;
            spec.fixed = {{"J", fam.j}, {level_name, level}};
            spec.axes = {{x_name, x_lo, x_hi, x_count}};
            auto rows = run_sweep(spec);
            records.insert(records.end(), rows.begin(), rows.end());
        }
}

} // namespace

FigureOutput figure_output(int n) {
    if (n < 1 || n > 6) throw SweepSpecError("figure: n must be in 1..6");
    FigureOutput out;
    out.csv_name = "fig" + std::to_string(n) + ".csv";
    out.script_name = "fig" + std::to_string(n) + ".gp";

    switch (n) {
    case 1: // chi over (J, Delta) at T = 0.05
        append_surface(out.records, ModelKind::Xxz, 0.05, "Delta", -3.0, 3.0);
        out.script = surface_script(out.csv_name, "Delta");
        break;
    case 2: // chi vs Delta at T in {0.005, 0.5, 1}, AFM and FM panels
        append_curves(out.records, ModelKind::Xxz, "Delta", -3.0, 3.0, 401, "T",
                      {{1.0, {0.005, 0.5, 1.0}}, {-1.0, {0.005, 0.5, 1.0}}});
        out.script = curve_script(out.csv_name, 3, "Delta", 5, "T",
                                  {{1.0, {0.005, 0.5, 1.0}}, {-1.0, {0.005, 0.5, 1.0}}});
        break;
    case 3: // chi vs T for four anisotropies per panel
        append_curves(out.records, ModelKind::Xxz, "T", 0.005, 2.5, 401, "Delta",
                      {{1.0, {-2.0, -0.9, 0.0, 1.0}}, {-1.0, {-1.0, 0.0, 0.9, 2.0}}});
        out.script = curve_script(out.csv_name, 5, "T", 3, "Delta",
                                  {{1.0, {-2.0, -0.9, 0.0, 1.0}}, {-1.0, {-1.0, 0.0, 0.9, 2.0}}});
        break;
    case 4: // chi over (J, D) at T = 0.5
        append_surface(out.records, ModelKind::Dm, 0.5, "D", 0.0, 3.0);
        out.script = surface_script(out.csv_name, "D");
        break;
    case 5: // chi vs D at T in {0.3, 0.5, 0.8}
        append_curves(out.records, ModelKind::Dm, "D", 0.0, 5.0, 401, "T",
                      {{1.0, {0.3, 0.5, 0.8}}, {-1.0, {0.3, 0.5, 0.8}}});
        out.script = curve_script(out.csv_name, 4, "D", 5, "T",
                                  {{1.0, {0.3, 0.5, 0.8}}, {-1.0, {0.3, 0.5, 0.8}}});
        break;
    case 6: // chi vs T for D in {5, 1, 0}
        append_curves(out.records, ModelKind::Dm, "T", 0.005, 2.0, 401, "D",
                      {{1.0, {5.0, 1.0, 0.0}}, {-1.0, {5.0, 1.0, 0.0}}});
        out.script = curve_script(out.csv_name, 5, "T", 4, "D",
                                  {{1.0, {5.0, 1.0, 0.0}}, {-1.0, {5.0, 1.0, 0.0}}});
        break;
    }
    return out;
}

} // namespace qdc
