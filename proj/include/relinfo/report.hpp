#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relinfo/measures.hpp"

/// CSV and JSON serialization of measure results. Column layouts are
/// documented in docs/csv-schema.md.
namespace relinfo::report {

using measures::MeasureSet;
using measures::RatioSet;

/// 12 significant digits, scientific notation.
std::string format_number(double v);
/// Like format_number, with empty optionals written as `missing`.
std::string format_optional(const std::optional<double>& v, const std::string& missing = "divergent");

/// One evaluated (Z, state, framework) row of a measures dataset.
struct MeasureRow {
    double Z = 0.0;
    hydrogenic::QuantumState state{1, -1, kHalf};
    hydrogenic::Framework framework = hydrogenic::Framework::dirac;
    std::optional<MeasureSet> measures;
    std::optional<RatioSet> ratios; // set only when both frameworks were evaluated
    std::optional<double> energy_dirac;       // E - M, hartree
    std::optional<double> energy_schrodinger; // -Z^2/(2n^2)
    std::string status = "ok";
};

std::string measures_header();
std::string measures_line(const MeasureRow& row);

struct PlaneRow {
    double Z = 0.0;
    hydrogenic::QuantumState state{1, -1, kHalf};
    hydrogenic::Framework framework = hydrogenic::Framework::dirac;
    std::optional<MeasureSet> measures;
    std::string status = "ok";
};

std::string plane_header();
std::string plane_line(const PlaneRow& row);

struct ProfileRow {
    double r = 0.0;
    double D_schrodinger = 0.0;
    double D_dirac = 0.0;
    double I_kernel_schrodinger = 0.0;
    double I_kernel_dirac = 0.0;
    double g_density = 0.0;
    double f_density = 0.0;
};

std::string profile_header();
std::string profile_line(const ProfileRow& row);

/// JSON single-state report (schema: docs/state-report.schema.json).
/// `dirac`/`schrodinger` may be absent when not requested.
std::string state_report_json(double Z, const hydrogenic::QuantumState& state, const measures::Tolerances& tol,
                              const std::optional<MeasureSet>& dirac, const std::optional<MeasureSet>& schrodinger);

} // namespace relinfo::report
