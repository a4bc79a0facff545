#pragma once

#include "qdc/dense_coding.hpp"
#include "qdc/spin_models.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qdc {

/// One linear grid over a parameter; count >= 2 points including both ends.
struct SweepAxis {
    std::string name; // "J", "Delta", "D" or "T"
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

/// A 1- or 2-axis grid with the remaining parameters pinned. Axis names and
/// fixed names must be disjoint and together cover exactly the model's
/// parameter set ({J, Delta, T} or {J, D, T}).
struct SweepSpec {
    ModelKind model = ModelKind::Xxz;
    std::map<std::string, double> fixed;
    std::vector<SweepAxis> axes;
};

/// Throws SweepSpecError on inconsistent specs.
void validate(const SweepSpec& spec);

/// Rows in row-major axis order (first axis outermost).
std::vector<CapacityResult> run_sweep(const SweepSpec& spec);

/// Header: model,J,Delta,D,T,chi,entropy_rho,concurrence,valid. Floats with
/// 12 significant digits, LF line endings, the off-model anisotropy column
/// left empty.
void write_csv(std::ostream& os, const std::vector<CapacityResult>& records);

/// Same records as a JSON array; the off-model anisotropy is null.
void write_json(std::ostream& os, const std::vector<CapacityResult>& records);

std::string format_record_value(double v);

/// Data grid plus gnuplot script for one of the six reference figures.
struct FigureOutput {
    std::string csv_name;
    std::string script_name;
    std::vector<CapacityResult> records;
    std::string script;
};

/// n in 1..6; throws SweepSpecError otherwise.
FigureOutput figure_output(int n);

} // namespace qdc
