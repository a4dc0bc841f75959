#include "cdspectra/physics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cdspectra/errors.hpp"

namespace cdspectra {

const MesonEntry& MesonTable::get(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw InputError("meson table: missing entry '" + name + "'");
    return it->second;
}

namespace {

void require(const MesonTable& table, std::initializer_list<const char*> names,
             const char* formula) {
    std::string missing;
    for (const char* n : names) {
        if (!table.has(n)) {
            if (!missing.empty()) missing += ", ";
            missing += n;
        }
    }
    if (!missing.empty()) {
        throw InputError(std::string(formula) + ": missing meson(s): " + missing);
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, const std::string& origin, int line) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &used);
    } catch (const std::exception&) {
        throw InputError(origin + ":" + std::to_string(line) + ": bad number '" + field + "'");
    }
    if (used != field.size()) {
        throw InputError(origin + ":" + std::to_string(line) + ": trailing junk in '" +
                         field + "'");
    }
    return value;
}

Verdict judge(double ratio, double sigma, double z) {
    return std::fabs(ratio - 1.0) <= z * sigma ? Verdict::Consistent : Verdict::Tension;
}

FormulaResult finish(std::string name, double lhs, double sigma_lhs, double rhs,
                     double sigma_rhs, double z) {
    FormulaResult r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.sigma_lhs = sigma_lhs;
    r.rhs = rhs;
    r.sigma_rhs = sigma_rhs;
    const RatioResult rr = propagate_ratio_uncertainty(lhs, sigma_lhs, rhs, sigma_rhs);
    r.ratio = rr.ratio;
    r.sigma_ratio = rr.sigma;
    r.z_threshold = z;
    r.verdict = judge(rr.ratio, rr.sigma, z);
    return r;
}

}  // namespace

MesonTable parse_meson_data(const std::string& text, const std::string& origin) {
    MesonTable table;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(trim(body.substr(start)));
                break;
            }
            fields.push_back(trim(body.substr(start, comma - start)));
            start = comma + 1;
        }
        if (fields.size() != 4) {
            throw InputError(origin + ":" + std::to_string(line) +
                             ": expected 'name,mass_mev,sigma_mev,source', got '" + body + "'");
        }
        const std::string& name = fields[0];
        if (name.empty())
            throw InputError(origin + ":" + std::to_string(line) + ": empty meson name");
        if (table.has(name))
            throw InputError(origin + ":" + std::to_string(line) + ": duplicate meson '" +
                             name + "'");
        MesonEntry entry;
        entry.mass_mev = parse_number(fields[1], origin, line);
        entry.sigma_mev = parse_number(fields[2], origin, line);
        entry.source = fields[3];
        if (entry.mass_mev <= 0.0)
            throw InputError(origin + ":" + std::to_string(line) + ": non-positive mass for '" +
                             name + "'");
        if (entry.sigma_mev < 0.0)
            throw InputError(origin + ":" + std::to_string(line) + ": negative sigma for '" +
                             name + "'");
        table.entries.emplace(name, std::move(entry));
    }
    if (table.entries.empty()) {
        throw InputError(origin + ": no meson records found");
    }
    return table;
}

MesonTable load_meson_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open meson data file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_meson_data(buf.str(), path);
}

double eta_doublet(double m_eta_c, double m_eta_prime) {
    if (m_eta_c <= 0.0 || m_eta_prime <= 0.0)
        throw InputError("eta_doublet: masses must be positive");
    return 0.5 * (m_eta_c + m_eta_prime);
}

RatioResult propagate_ratio_uncertainty(double a, double sigma_a, double b,
                                        double sigma_b) {
    if (b == 0.0) throw InputError("propagate_ratio_uncertainty: denominator is zero");
    RatioResult r;
    r.ratio = a / b;
    const double ra = a == 0.0 ? 0.0 : sigma_a / a;
    const double rb = sigma_b / b;
    r.sigma = std::fabs(r.ratio) * std::sqrt(ra * ra + rb * rb);
    return r;
}

const char* verdict_name(Verdict v) {
    return v == Verdict::Consistent ? "consistent" : "tension";
}

FormulaResult mass_formula_16(const MesonTable& table, double z) {
    require(table, {"eta_c", "eta_prime", "D_s"}, "formula16");
    const auto& ec = table.get("eta_c");
    const auto& ep = table.get("eta_prime");
    const auto& ds = table.get("D_s");
    const double lhs = ec.mass_mev + ep.mass_mev;
    const double sigma_lhs = std::hypot(ec.sigma_mev, ep.sigma_mev);
    return finish("formula16", lhs, sigma_lhs, 2.0 * ds.mass_mev, 2.0 * ds.sigma_mev, z);
}

FormulaResult gmo_check(const MesonTable& table, double z) {
    require(table, {"eta", "pi0", "pi_plus", "K0", "K_plus"}, "gmo");
    const auto& eta = table.get("eta");
    // isospin averages of the charged and neutral states
    const double m_pi = 0.5 * (table.get("pi0").mass_mev + table.get("pi_plus").mass_mev);
    const double s_pi =
        0.5 * std::hypot(table.get("pi0").sigma_mev, table.get("pi_plus").sigma_mev);
    const double m_k = 0.5 * (table.get("K0").mass_mev + table.get("K_plus").mass_mev);
    const double s_k =
        0.5 * std::hypot(table.get("K0").sigma_mev, table.get("K_plus").sigma_mev);
    const double rhs = 4.0 * m_k - m_pi;
    const double sigma_rhs = std::hypot(4.0 * s_k, s_pi);
    return finish("gmo", 3.0 * eta.mass_mev, 3.0 * eta.sigma_mev, rhs, sigma_rhs, z);
}

FormulaResult burakovsky_check(const MesonTable& table, double z) {
    require(table, {"D0", "D_plus", "D_s", "eta_c", "pi0", "pi_plus", "K_plus", "K0", "eta"},
            "burakovsky");
    const double m_dbar = (table.get("D0").mass_mev + table.get("D_plus").mass_mev +
                           table.get("D_s").mass_mev) /
                          3.0;
    const double s_dbar = std::sqrt(std::pow(table.get("D0").sigma_mev, 2) +
                                    std::pow(table.get("D_plus").sigma_mev, 2) +
                                    std::pow(table.get("D_s").sigma_mev, 2)) /
                          3.0;
    // octet average: pi0, pi+-, K+-, K0/K0bar, eta with charge partners sharing
    // one table entry (correlated reuse keeps the factor inside)
    const double m0 = (table.get("pi0").mass_mev + 2.0 * table.get("pi_plus").mass_mev +
                       2.0 * table.get("K_plus").mass_mev + 2.0 * table.get("K0").mass_mev +
                       table.get("eta").mass_mev) /
                      8.0;
    const double s0 = std::sqrt(std::pow(table.get("pi0").sigma_mev, 2) +
                                std::pow(2.0 * table.get("pi_plus").sigma_mev, 2) +
                                std::pow(2.0 * table.get("K_plus").sigma_mev, 2) +
                                std::pow(2.0 * table.get("K0").sigma_mev, 2) +
                                std::pow(table.get("eta").sigma_mev, 2)) /
                      8.0;
    const auto& ec = table.get("eta_c");
    const double lhs = 12.0 * m_dbar * m_dbar;
    const double sigma_lhs = 24.0 * m_dbar * s_dbar;  // first order: sigma(m^2) = 2 m sigma
    const double rhs = 5.0 * ec.mass_mev * ec.mass_mev + 7.0 * m0 * m0;
    const double sigma_rhs = std::hypot(10.0 * ec.mass_mev * ec.sigma_mev, 14.0 * m0 * s0);
    return finish("burakovsky", lhs, sigma_lhs, rhs, sigma_rhs, z);
}

FormulaResult vector_analogue(const MesonTable& table, double z) {
    require(table, {"J_psi", "omega", "D_s_star"}, "vector");
    const auto& jp = table.get("J_psi");
    const auto& om = table.get("omega");
    const auto& ds = table.get("D_s_star");
    const double lhs = jp.mass_mev + om.mass_mev;
    const double sigma_lhs = std::hypot(jp.sigma_mev, om.sigma_mev);
    return finish("vector", lhs, sigma_lhs, 2.0 * ds.mass_mev, 2.0 * ds.sigma_mev, z);
}

std::optional<RhoNote> rho_mass_note(const MesonTable& table) {
    if (!table.has("rho0") || !table.has("rho_plus")) return std::nullopt;
    RhoNote note;
    note.m_rho0 = table.get("rho0").mass_mev;
    note.sigma_rho0 = table.get("rho0").sigma_mev;
    note.m_rho_plus = table.get("rho_plus").mass_mev;
    note.sigma_rho_plus = table.get("rho_plus").sigma_mev;
    note.delta_m_rho = note.m_rho0 - note.m_rho_plus;
    note.sigma_delta = std::hypot(note.sigma_rho0, note.sigma_rho_plus);
    return note;
}

ThetaAssignment assign_thetas(Multiplet multiplet) {
    ThetaAssignment a;
    a.multiplet = multiplet;
    a.rows = {
        {"pi0", "pi0", 0, 0, 0, false},
        {"pi+", "pi_plus", +1, 0, 0, false},
        {"pi-", "pi_plus", -1, 0, 0, false},
        {"K+", "K_plus", -1, +1, 0, false},
        {"K-", "K_plus", +1, -1, 0, false},
        {"K0", "K0", +1, +1, 0, false},
        {"K0_bar", "K0", -1, -1, 0, false},
        // eta sits at the zero eigenvalue: cos(theta) = 0
        {"eta", "eta", 0, 0, 0, true},
    };
    if (multiplet == Multiplet::Sixteen) {
        const std::vector<ThetaRow> charm = {
            {"D0", "D0", -1, -1, +1, false},
            {"D0_bar", "D0", +1, +1, -1, false},
            {"D+", "D_plus", +1, -1, +1, false},
            {"D-", "D_plus", -1, +1, -1, false},
            {"D_s+", "D_s", -1, +1, +1, false},
            {"D_s-", "D_s", +1, -1, -1, false},
            {"eta+", "eta_doublet", +1, +1, +1, false},
            {"eta-", "eta_doublet", -1, -1, -1, false},
        };
        a.rows.insert(a.rows.end(), charm.begin(), charm.end());
    }
    return a;
}

MonotonicityReport check_monotonicity(const ThetaAssignment& assignment,
                                      const MesonTable& table, double theta1,
                                      double theta2, double theta3) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    for (double th : {theta1, theta2, theta3}) {
        if (th < 0.0 || th > kHalfPi)
            throw InputError("check_monotonicity: angles must lie in [0, pi/2]");
    }

    MonotonicityReport report;
    report.theta1 = theta1;
    report.theta2 = theta2;
    report.theta3 = theta3;

    for (const auto& row : assignment.rows) {
        MonotonicityRow out;
        out.label = row.label;
        out.mass_key = row.mass_key;
        if (row.at_zero) {
            out.signed_sum = kHalfPi;
            out.cos_sq = 0.0;
        } else {
            out.signed_sum = row.c1 * theta1 + row.c2 * theta2 + row.c3 * theta3;
            if (out.signed_sum < -kHalfPi - 1e-12 || out.signed_sum > kHalfPi + 1e-12)
                throw InputError("check_monotonicity: signed sum for '" + row.label +
                                 "' leaves [-pi/2, pi/2]");
            const double c = std::cos(out.signed_sum);
            out.cos_sq = c * c;
        }
        if (row.mass_key == "eta_doublet") {
            const auto& ec = table.get("eta_c");
            const auto& ep = table.get("eta_prime");
            out.mass = eta_doublet(ec.mass_mev, ep.mass_mev);
            out.sigma = 0.5 * std::hypot(ec.sigma_mev, ep.sigma_mev);
        } else {
            const auto& e = table.get(row.mass_key);
            out.mass = e.mass_mev;
            out.sigma = e.sigma_mev;
        }
        report.rows.push_back(std::move(out));
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const MonotonicityRow& a, const MonotonicityRow& b) {
                  return a.mass < b.mass;
              });

    report.monotone = true;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
            const auto& lo = report.rows[i];
            const auto& hi = report.rows[j];
            const bool strictly_heavier = hi.mass - lo.mass > lo.sigma + hi.sigma;
            if (strictly_heavier && hi.cos_sq > lo.cos_sq + 1e-12) {
                report.monotone = false;
                report.violations.push_back(lo.label + " vs " + hi.label);
            }
        }
    }
    return report;
}

}  // namespace cdspectra
