#include "oharm/conjectures.hpp"

#include <algorithm>

#include "oharm/characters.hpp"
#include "oharm/formulas.hpp"
#include "oharm/oracle.hpp"

namespace oharm {

namespace {

bool dominates(const SchurExpansion& big, const SchurExpansion& small) {
    return (big - small).schur_positive();
}

std::vector<Rational> pointwise(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * b[i];
    return out;
}

}  // namespace

CheckReport check_log_concavity(int n, int m, int r) {
    CheckReport report;
    SchurExpansion F = grfrob_signed(n, m, r);
    std::vector<std::vector<Rational>> chi(r + 2);
    for (int d = 0; d <= r + 1; ++d)
        chi[d] = character_of_slice(F, d);
    std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " r=" + std::to_string(r);
    bool any = false;
    for (int d = 1; d < r; ++d) {
        SchurExpansion mid = frobenius_from_character(pointwise(chi[d], chi[d]), n, m);
        SchurExpansion sides = frobenius_from_character(pointwise(chi[d - 1], chi[d + 1]), n, m);
        bool pass = mid.schur_positive() && sides.schur_positive() && dominates(mid, sides);
        report.check("logconcavity " + where + " d=" + std::to_string(d), pass);
        any = true;
    }
    if (!any)
        report.check("logconcavity " + where, true, "no interior degrees");
    return report;
}

CheckReport check_surjection_chain(int n, int m) {
    CheckReport report;
    int mn = std::min(n, m);
    std::vector<SchurExpansion> F;
    for (int r = 0; r <= mn; ++r)
        F.push_back(grfrob_signed(n, m, r));
    for (int r = 0; r + 1 <= mn; ++r) {
        bool pass = true;
        for (int d = 0; d <= r; ++d)
            if (!dominates(F[r].slice(d), F[r + 1].slice(d)))
                pass = false;
        report.check("chain n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " r=" + std::to_string(r) + "->" + std::to_string(r + 1),
                     pass);
    }
    return report;
}

CheckReport check_surj_to_isom(int n, int m) {
    CheckReport report;
    int mn = std::min(n, m);
    std::vector<SchurExpansion> F;
    for (int r = 0; r <= mn; ++r)
        F.push_back(grfrob_signed(n, m, r));
    for (int r = 0; r + 1 <= mn; ++r) {
        bool iso_ok = true, strict_ok = true;
        for (int d = 0; d <= r; ++d) {
            bool equal = F[r].slice(d) == F[r + 1].slice(d);
            if (d <= mn - r - 1) {
                if (!equal)
                    iso_ok = false;
            } else {
                if (equal)
                    strict_ok = false;
            }
        }
        report.check("isom n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " r=" + std::to_string(r) + "->" + std::to_string(r + 1),
                     iso_ok, "d<=" + std::to_string(mn - r - 1));
        report.check("isom-strict-above n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " r=" + std::to_string(r) + "->" + std::to_string(r + 1),
                     strict_ok);
    }
    return report;
}

CheckReport check_uz_identity(int n, int m, bool with_oracle) {
    CheckReport report;
    int mn = std::min(n, m);
    std::vector<SchurExpansion> uz;
    for (int r = 0; r <= mn; ++r)
        uz.push_back(grfrob_uz(n, m, r));
    for (int r = 1; r < mn; ++r) {
        bool pass = true;
        SchurExpansion signed_r = grfrob_signed(n, m, r);
        for (int d = 0; d < r; ++d) {
            SchurExpansion diff = uz[r].slice(d + 1) - uz[r + 1].slice(d);
            if (!diff.schur_positive() || diff != signed_r.slice(d + 1))
                pass = false;
        }
        report.check("uz-identity n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " r=" + std::to_string(r),
                     pass);
    }
    if (with_oracle) {
        for (int r = 0; r <= mn; ++r) {
            SchurExpansion fromlocus = oracle_graded_frobenius(uz_locus(n, m, r), mn);
            report.check("uz-oracle n=" + std::to_string(n) + " m=" + std::to_string(m) +
                             " r=" + std::to_string(r),
                         fromlocus == uz[r]);
        }
    }
    return report;
}

}  // namespace oharm
