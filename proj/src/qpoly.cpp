#include "oharm/qpoly.hpp"

#include <stdexcept>

namespace oharm {

namespace {
const mpz_class kZero = 0;
}

QPoly QPoly::q_power(int e) {
    QPoly p;
    p.add_term(e, 1);
    return p;
}

const mpz_class& QPoly::at(int e) const {
    auto it = coeff_.find(e);
    return it == coeff_.end() ? kZero : it->second;
}

void QPoly::add_term(int e, const mpz_class& c) {
    if (e < 0)
        throw std::domain_error("QPoly: negative exponent");
    if (c == 0)
        return;
    auto [it, inserted] = coeff_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeff_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.coeff_)
        add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.coeff_)
        add_term(e, -c);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [ea, ca] : a.coeff_)
        for (const auto& [eb, cb] : b.coeff_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

mpz_class QPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : coeff_)
        s += c;
    return s;
}

bool QPoly::nonneg() const {
    for (const auto& [e, c] : coeff_)
        if (c < 0)
            return false;
    return true;
}

std::string QPoly::str() const {
    if (coeff_.empty())
        return "0";
    std::string s;
    for (const auto& [e, c] : coeff_) {
        mpz_class a = c;
        if (s.empty()) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (e == 0) {
            s += a.get_str();
        } else {
            if (a != 1)
                s += a.get_str();
            s += "q";
            if (e > 1)
                s += "^" + std::to_string(e);
        }
    }
    return s;
}

}  // namespace oharm
