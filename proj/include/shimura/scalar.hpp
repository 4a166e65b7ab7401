#pragma once

#include "shimura/rational.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace shimura {

// Dense univariate polynomial over Q in the formal parameter θ.
// coeffs()[i] multiplies θ^i; trailing zeros are trimmed, so the zero
// polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(const Rational& constant);
    UPoly(int constant) : UPoly(Rational(constant)) {}

    static UPoly monomial(const Rational& coeff, std::size_t degree);

    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Rational leading() const;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational evaluate(const Rational& at) const;

    UPoly& operator+=(const UPoly& other);
    UPoly& operator-=(const UPoly& other);
    UPoly& operator*=(const UPoly& other);
    UPoly& operator*=(const Rational& factor);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator-(UPoly a)
    {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Euclidean division; throws DivisionByZero on a zero divisor.
    [[nodiscard]] std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
    [[nodiscard]] UPoly monic() const;

    [[nodiscard]] std::string to_string(std::string_view var = "θ") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

// ExactScalar: a rational number or a rational function num(θ)/den(θ).
// Canonical form: den monic, gcd(num, den) = 1, zero is 0/1. Rationals are
// the special case of constant num and den = 1, so equality is structural.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(const Rational& value) : num_(value), den_(1) {}
    Scalar(int value) : Scalar(Rational(value)) {}
    Scalar(UPoly num, UPoly den);

    /// The generic parameter θ itself.
    static Scalar theta();

    [[nodiscard]] const UPoly& num() const noexcept { return num_; }
    [[nodiscard]] const UPoly& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant scalar; throws std::logic_error otherwise.
    [[nodiscard]] Rational constant_value() const;

    /// Substitutes θ = at. Throws PoleError when the denominator vanishes.
    [[nodiscard]] Rational evaluate(const Rational& at) const;

    /// Throws DivisionByZero on zero.
    [[nodiscard]] Scalar inverse() const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(Scalar a)
    {
        a.num_ = -a.num_;
        return a;
    }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    /// Canonical text; constants print as rationals, otherwise "(num)/(den)" in θ.
    [[nodiscard]] std::string to_string() const;

private:
    void normalize();
    UPoly num_;
    UPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar power(const Scalar& base, int exponent);

} // namespace shimura
