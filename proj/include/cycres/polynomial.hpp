#pragma once

#include <optional>
#include <vector>

#include "cycres/rational.hpp"

namespace cycres {

// Dense univariate polynomial with exact rational coefficients, stored
// lowest degree first.  The zero polynomial is the empty coefficient list
// and has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending);

    // Builds from the highest-degree-first convention used by the
    // interfaces ("1,-5,6" is x^2 - 5x + 6).
    static Poly from_desc(const std::vector<Rational>& descending);
    static Poly constant(const Rational& c);
    static Poly x_power_minus_one(long m);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(long k) const; // 0 outside the stored range
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::vector<Rational> coeffs_desc() const;

    Rational operator()(const Rational& x) const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    bool operator==(const Poly& rhs) const = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// Monic polynomial of degree >= 1, optionally carrying the rational roots
// it was built from.  When roots are attached, expanding prod(x - lambda_i)
// must reproduce the coefficients exactly.
class MonicPoly {
public:
    // Validates leading coefficient 1 and degree >= 1.
    static MonicPoly from_coeffs_desc(std::vector<Rational> descending);
    static MonicPoly from_roots(std::vector<Rational> roots);

    long degree() const { return poly_.degree(); }
    const Poly& poly() const { return poly_; }
    std::vector<Rational> coeffs_desc() const { return poly_.coeffs_desc(); }
    // Non-leading coefficients, highest first (the "a, b, c" of x^3+ax^2+bx+c).
    std::vector<Rational> lower_coeffs_desc() const;

    bool has_roots() const { return roots_.has_value(); }
    const std::vector<Rational>& roots() const;

    // Attaches a root list, validating it expands to these coefficients.
    MonicPoly with_roots(std::vector<Rational> roots) const;

    bool operator==(const MonicPoly& rhs) const { return poly_ == rhs.poly_; }

private:
    MonicPoly(Poly p, std::optional<std::vector<Rational>> roots)
        : poly_(std::move(p)), roots_(std::move(roots)) {}

    Poly poly_;
    std::optional<std::vector<Rational>> roots_;
};

// prod(x - lambda_i), roots retained on the result.
MonicPoly poly_from_roots(const std::vector<Rational>& roots);

} // namespace cycres
