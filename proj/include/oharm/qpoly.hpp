#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace oharm {

/* Univariate polynomial in the grading variable q with arbitrary-precision
 * integer coefficients. Zero coefficients are never stored; the zero
 * polynomial is the empty map. */
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(long c) { add_term(0, mpz_class(c)); }
    explicit QPoly(const mpz_class& c) { add_term(0, c); }

    static QPoly q_power(int e);

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return coeff_.empty() ? -1 : coeff_.rbegin()->first; }
    const mpz_class& at(int e) const;
    void add_term(int e, const mpz_class& c);

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    mpz_class eval_one() const;
    bool nonneg() const;

    // "0", "1 + 3q + 9q^2"; coefficient 1 prints as bare "q"/"q^e".
    std::string str() const;

    const std::map<int, mpz_class>& terms() const { return coeff_; }
    bool operator==(const QPoly&) const = default;

private:
    std::map<int, mpz_class> coeff_;
};

}  // namespace oharm
