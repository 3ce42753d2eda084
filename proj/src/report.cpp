#include "relinfo/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace relinfo::report {

namespace {

using hydrogenic::Framework;
using hydrogenic::QuantumState;

const std::string kNotApplicable = "na";

std::string half(HalfInteger h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", h.value());
    return buf;
}

// Status strings end up inside a CSV cell.
std::string csv_safe(std::string s) {
    for (auto& c : s) {
        if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
    }
    return s;
}

std::string state_columns(double Z, const QuantumState& s, Framework fw) {
    return format_number(Z) + ',' + std::to_string(s.n()) + ',' + std::to_string(s.l()) + ',' + half(s.j()) + ',' +
           half(s.m_j()) + ',' + std::to_string(s.k()) + ',' + hydrogenic::to_string(fw);
}

std::string na_or(const std::optional<double>& v) { return v ? format_number(*v) : kNotApplicable; }

nlohmann::json json_optional(const std::optional<double>& v) {
    if (v && std::isfinite(*v)) return *v;
    return nullptr;
}

nlohmann::json measures_json(const MeasureSet& m) {
    nlohmann::json j;
    j["framework"] = hydrogenic::to_string(m.framework);
    j["energy"] = m.energy;
    j["binding"] = m.binding;
    j["S"] = m.S;
    j["D"] = json_optional(m.D);
    j["I"] = json_optional(m.I);
    j["J"] = m.J;
    j["C_LMC"] = json_optional(m.C_LMC);
    j["C_FS"] = json_optional(m.C_FS);
    j["S_radial"] = m.S_radial;
    j["S_angular"] = m.S_angular;
    j["D_radial"] = json_optional(m.D_radial);
    j["D_angular"] = m.D_angular;
    j["I_radial"] = json_optional(m.I_radial);
    j["I_angular"] = m.I_angular;
    j["r_minus2"] = json_optional(m.r_minus2);
    j["errors"] = {{"S", json_optional(m.err_S)}, {"D", json_optional(m.err_D)}, {"I", json_optional(m.err_I)}};
    j["fisher_divergent"] = m.fisher_divergent();
    j["disequilibrium_divergent"] = !m.D.has_value();
    return j;
}

} // namespace

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string format_optional(const std::optional<double>& v, const std::string& missing) {
    if (!v || !std::isfinite(*v)) return missing;
    return format_number(*v);
}

std::string measures_header() {
    return "Z,n,l,j,m_j,k,framework,E_D,E_S,S,D,I,J,C_LMC,C_FS,S_radial,S_angular,D_radial,D_angular,I_radial,"
           "I_angular,r_minus2,err_S,err_D,err_I,zeta_LMC,zeta_FS,divergent,status";
}

std::string measures_line(const MeasureRow& row) {
    std::string out = state_columns(row.Z, row.state, row.framework);
    out += ',' + na_or(row.energy_dirac);
    out += ',' + na_or(row.energy_schrodinger);
    if (row.measures) {
        const auto& m = *row.measures;
        out += ',' + format_number(m.S);
        out += ',' + format_optional(m.D);
        out += ',' + format_optional(m.I);
        out += ',' + format_number(m.J);
        out += ',' + format_optional(m.C_LMC);
        out += ',' + format_optional(m.C_FS);
        out += ',' + format_number(m.S_radial);
        out += ',' + format_number(m.S_angular);
        out += ',' + format_optional(m.D_radial);
        out += ',' + format_number(m.D_angular);
        out += ',' + format_optional(m.I_radial);
        out += ',' + format_number(m.I_angular);
        out += ',' + format_optional(m.r_minus2);
        out += ',' + format_optional(m.err_S);
        out += ',' + format_optional(m.err_D);
        out += ',' + format_optional(m.err_I);
    } else {
        for (int i = 0; i < 16; ++i) out += ',' + kNotApplicable;
    }
    if (row.ratios) {
        out += ',' + format_optional(row.ratios->zeta_LMC);
        out += ',' + format_optional(row.ratios->zeta_FS);
    } else {
        out += ',' + kNotApplicable + ',' + kNotApplicable;
    }
    out += ',';
    out += row.measures ? (row.measures->fisher_divergent() || !row.measures->D ? "1" : "0") : kNotApplicable;
    out += ',' + csv_safe(row.status);
    return out;
}

std::string plane_header() {
    return "Z,n,l,j,m_j,k,framework,D,exp_S,I,J,C_LMC,C_FS,C_LMC_bound,C_FS_bound,divergent,status";
}

std::string plane_line(const PlaneRow& row) {
    std::string out = state_columns(row.Z, row.state, row.framework);
    if (row.measures) {
        const auto& m = *row.measures;
        out += ',' + format_optional(m.D);
        out += ',' + format_number(std::exp(m.S));
        out += ',' + format_optional(m.I);
        out += ',' + format_number(m.J);
        out += ',' + format_optional(m.C_LMC);
        out += ',' + format_optional(m.C_FS);
    } else {
        for (int i = 0; i < 6; ++i) out += ',' + kNotApplicable;
    }
    out += ',' + format_number(1.0) + ',' + format_number(3.0);
    out += ',';
    out += row.measures ? (row.measures->fisher_divergent() || !row.measures->D ? "1" : "0") : kNotApplicable;
    out += ',' + csv_safe(row.status);
    return out;
}

std::string profile_header() { return "r,D_S,D_D,I_S_kernel,I_D_kernel,g_density,f_density"; }

std::string profile_line(const ProfileRow& row) {
    return format_number(row.r) + ',' + format_number(row.D_schrodinger) + ',' + format_number(row.D_dirac) + ',' +
           format_number(row.I_kernel_schrodinger) + ',' + format_number(row.I_kernel_dirac) + ',' +
           format_number(row.g_density) + ',' + format_number(row.f_density);
}

std::string state_report_json(double Z, const QuantumState& state, const measures::Tolerances& tol,
                              const std::optional<MeasureSet>& dirac, const std::optional<MeasureSet>& schrodinger) {
    nlohmann::json j;
    j["Z"] = Z;
    j["state"] = {{"n", state.n()},
                  {"l", state.l()},
                  {"j", state.j().value()},
                  {"m_j", state.m_j().value()},
                  {"k", state.k()},
                  {"label", state.label()}};
    j["tolerances"] = {{"rel_tol", tol.rel_tol}, {"abs_tol", tol.abs_tol}, {"max_subdivisions", tol.max_subdivisions}};
    j["dirac"] = dirac ? measures_json(*dirac) : nlohmann::json(nullptr);
    j["schrodinger"] = schrodinger ? measures_json(*schrodinger) : nlohmann::json(nullptr);
    if (dirac && schrodinger) {
        const auto r = measures::ratio_set(*dirac, *schrodinger);
        j["ratios"] = {{"zeta_LMC", json_optional(r.zeta_LMC)}, {"zeta_FS", json_optional(r.zeta_FS)}};
    } else {
        j["ratios"] = nullptr;
    }
    return j.dump(2);
}

} // namespace relinfo::report
