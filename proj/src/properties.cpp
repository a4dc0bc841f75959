#include "cdspectra/properties.hpp"

#include <algorithm>
#include <cmath>

#include "cdspectra/errors.hpp"
#include "cdspectra/rng.hpp"

namespace cdspectra {

const char* identity_name(Identity id) {
    switch (id) {
        case Identity::SelfConjugate: return "self_conjugate";
        case Identity::Commutative: return "commutative";
        case Identity::Associative: return "associative";
        case Identity::Alternative: return "alternative";
        case Identity::Flexible: return "flexible";
    }
    return "?";
}

std::optional<int> identity_max_level(Identity id) {
    switch (id) {
        case Identity::SelfConjugate: return 0;
        case Identity::Commutative: return 1;
        case Identity::Associative: return 2;
        case Identity::Alternative: return 3;
        case Identity::Flexible: return std::nullopt;  // all levels
    }
    return std::nullopt;
}

double identity_residual(Identity id, const CdElement& x, const CdElement& y,
                         const CdElement& z) {
    switch (id) {
        case Identity::SelfConjugate:
            return norm(subtract(x, conjugate(x))) / (1.0 + norm(x));
        case Identity::Commutative:
            return norm(commutator(x, y)) / (1.0 + norm(x) * norm(y));
        case Identity::Associative:
            return norm(associator(x, y, z)) / (1.0 + norm(x) * norm(y) * norm(z));
        case Identity::Alternative:
            return norm(associator(x, x, y)) / (1.0 + norm_sq(x) * norm(y));
        case Identity::Flexible:
            return norm(associator(x, y, x)) / (1.0 + norm_sq(x) * norm(y));
    }
    return 0.0;
}

const IdentityResult& PropertyReport::result(Identity id) const {
    for (const auto& r : results)
        if (r.identity == id) return r;
    throw InternalError("PropertyReport: identity missing from report");
}

PropertyReport property_report(int level, int trials, std::uint64_t seed, double tol) {
    if (level < 0 || level > kMaxLevel) throw InputError("property_report: bad level");
    if (trials < 1) throw InputError("property_report: trials must be >= 1");
    if (tol <= 0.0) throw InputError("property_report: tolerance must be positive");

    PropertyReport report;
    report.level = level;
    report.trials = trials;
    report.seed = seed;

    constexpr Identity kAll[] = {Identity::SelfConjugate, Identity::Commutative,
                                 Identity::Associative, Identity::Alternative,
                                 Identity::Flexible};
    for (Identity id : kAll) {
        IdentityResult r;
        r.identity = id;
        report.results.push_back(std::move(r));
    }

    for (int t = 0; t < trials; ++t) {
        const CdElement x = random_element(level, mix_seed(seed, 3 * t));
        const CdElement y = random_element(level, mix_seed(seed, 3 * t + 1));
        const CdElement z = random_element(level, mix_seed(seed, 3 * t + 2));
        for (auto& r : report.results) {
            const double res = identity_residual(r.identity, x, y, z);
            r.max_residual = std::max(r.max_residual, res);
            if (!r.witness && res > kWitnessThreshold) {
                r.witness = std::vector<CdElement>{x, y, z};
                r.witness_residual = res;
            }
        }
    }
    for (auto& r : report.results) r.holds = r.max_residual <= tol;
    return report;
}

}  // namespace cdspectra
