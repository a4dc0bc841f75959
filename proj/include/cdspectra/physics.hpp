#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cdspectra {

struct MesonEntry {
    double mass_mev = 0.0;
    double sigma_mev = 0.0;
    std::string source;
};

/// Named meson masses with 1-sigma uncertainties, keyed by the canonical
/// names frozen in docs/data_format.md.
struct MesonTable {
    std::map<std::string, MesonEntry> entries;

    bool has(const std::string& name) const { return entries.count(name) > 0; }
    const MesonEntry& get(const std::string& name) const;
};

/// Parses the plain-text meson data format: one `name,mass_mev,sigma_mev,source`
/// record per line, `#` comments. Parse failures, duplicate names and
/// non-positive masses are input errors reported with their line number.
MesonTable load_meson_data(const std::string& path);
MesonTable parse_meson_data(const std::string& text, const std::string& origin);

/// Superposition coefficient of the mixed pair: 1/sqrt(2).
inline constexpr double kDoubletCoefficient = 0.70710678118654752440;

/// Common mass attributed to the degenerate superposed pair built from two
/// mesons with identical quantum numbers: the arithmetic mean.
double eta_doublet(double m_eta_c, double m_eta_prime);

/// First-order independent-Gaussian propagation for A/B.
struct RatioResult {
    double ratio = 0.0;
    double sigma = 0.0;
};
RatioResult propagate_ratio_uncertainty(double a, double sigma_a, double b,
                                        double sigma_b);

enum class Verdict { Consistent, Tension };
const char* verdict_name(Verdict v);

/// Default z-threshold: a relation is consistent when |ratio - 1| <= z * sigma.
inline constexpr double kDefaultZ = 2.0;

struct FormulaResult {
    std::string name;
    double lhs = 0.0;
    double sigma_lhs = 0.0;
    double rhs = 0.0;
    double sigma_rhs = 0.0;
    double ratio = 0.0;
    double sigma_ratio = 0.0;
    double z_threshold = kDefaultZ;
    Verdict verdict = Verdict::Tension;
};

/// lhs = m(eta_c) + m(eta_prime), rhs = 2 m(D_s).
FormulaResult mass_formula_16(const MesonTable& table, double z = kDefaultZ);

/// lhs = 3 m(eta), rhs = 4 m(K) - m(pi) with isospin-averaged K and pi.
FormulaResult gmo_check(const MesonTable& table, double z = kDefaultZ);

/// lhs = 12 mDbar^2, rhs = 5 m(eta_c)^2 + 7 m0^2; mDbar averages D0, D_plus,
/// D_s and m0 averages the eight octet masses.
FormulaResult burakovsky_check(const MesonTable& table, double z = kDefaultZ);

/// lhs = m(J_psi) + m(omega), rhs = 2 m(D_s_star). The interesting outcome is
/// the tension verdict.
FormulaResult vector_analogue(const MesonTable& table, double z = kDefaultZ);

/// Shipped rho masses surfaced next to the vector result; the sign of
/// m(rho0) - m(rho_plus) decides whether the vector relation could hold at all.
struct RhoNote {
    double m_rho0 = 0.0, sigma_rho0 = 0.0;
    double m_rho_plus = 0.0, sigma_rho_plus = 0.0;
    double delta_m_rho = 0.0;  // m_rho0 - m_rho_plus
    double sigma_delta = 0.0;
};
std::optional<RhoNote> rho_mass_note(const MesonTable& table);

enum class Multiplet { Octet, Sixteen };

/// One row of the angle assignment: signed integer coefficients on
/// (theta1, theta2, theta3). Rows flagged at_zero sit at the zero eigenvalue
/// (cos = 0) rather than at a finite signed sum.
struct ThetaRow {
    std::string label;        // meson or superposition label
    std::string mass_key;     // table entry carrying this row's mass
    int c1 = 0, c2 = 0, c3 = 0;
    bool at_zero = false;
};

struct ThetaAssignment {
    Multiplet multiplet = Multiplet::Octet;
    std::vector<ThetaRow> rows;
};

/// The 16-plet correspondence table: eight octet rows (theta3 coefficient 0)
/// and eight rows carrying +-1 on theta3.
ThetaAssignment assign_thetas(Multiplet multiplet);

struct MonotonicityRow {
    std::string label;
    std::string mass_key;
    double signed_sum = 0.0;
    double cos_sq = 0.0;
    double mass = 0.0;
    double sigma = 0.0;
};

struct MonotonicityReport {
    double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;
    std::vector<MonotonicityRow> rows;  // sorted by mass, ascending
    bool monotone = false;              // cos^2 ordering opposite to mass ordering
    std::vector<std::string> violations;
};

/// Evaluates cos^2 of every row's signed sum at the given angles and verifies
/// the ordering is opposite to the mass ordering (ties allowed within the
/// combined sigma). Signed sums must land in [-pi/2, pi/2].
MonotonicityReport check_monotonicity(const ThetaAssignment& assignment,
                                      const MesonTable& table, double theta1,
                                      double theta2, double theta3);

}  // namespace cdspectra
