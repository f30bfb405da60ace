#pragma once

#include <string>
#include <vector>

namespace oharm {

/* Accumulates "CHECK <name> <PASS|FAIL> <detail>" lines; ok stays true until
 * a failing check is recorded. */
struct CheckReport {
    bool ok = true;
    std::vector<std::string> lines;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        lines.push_back("CHECK " + name + (pass ? " PASS" : " FAIL") +
                        (detail.empty() ? "" : " " + detail));
        ok = ok && pass;
    }

    void merge(const CheckReport& o) {
        ok = ok && o.ok;
        lines.insert(lines.end(), o.lines.begin(), o.lines.end());
    }
};

}  // namespace oharm
