#include "shimura/scalar.hpp"

#include "shimura/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shimura {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational out(Integer(std::string(num), 10), d);
    out.canonicalize();
    if (negative) out = -out;
    return out;
}

std::string to_string(const Rational& value)
{
    Rational c = value;
    c.canonicalize();
    return c.get_str(10);
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UPoly::UPoly(const Rational& constant)
{
    if (constant != 0) coeffs_.push_back(constant);
}

UPoly UPoly::monomial(const Rational& coeff, std::size_t degree)
{
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return UPoly(std::move(c));
}

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::leading() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UPoly::constant_term() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.front();
}

Rational UPoly::evaluate(const Rational& at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& factor)
{
    if (factor == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= factor;
    return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const
{
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {UPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational lead = divisor.leading();
    for (int k = degree(); k >= dd; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] / lead;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::monic() const
{
    if (is_zero()) return *this;
    UPoly out = *this;
    out *= Rational(1) / leading();
    return out;
}

std::string UPoly::to_string(std::string_view var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << shimura::to_string(mag);
            continue;
        }
        if (mag != 1) os << shimura::to_string(mag) << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

Scalar Scalar::theta()
{
    return Scalar(UPoly::monomial(1, 1), UPoly(1));
}

void Scalar::normalize()
{
    if (num_.is_zero()) {
        den_ = UPoly(1);
        return;
    }
    if (den_.is_constant()) {
        if (den_.leading() != 1) {
            num_ *= Rational(1) / den_.leading();
            den_ = UPoly(1);
        }
        return;
    }
    UPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational Scalar::constant_value() const
{
    if (!is_constant()) throw std::logic_error("scalar depends on θ: " + to_string());
    return num_.constant_term();
}

Rational Scalar::evaluate(const Rational& at) const
{
    Rational d = den_.evaluate(at);
    if (d == 0) throw PoleError("pole at θ = " + shimura::to_string(at) + " in " + to_string());
    return num_.evaluate(at) / d;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_constant()) return Scalar(Rational(1) / constant_value());
    return Scalar(den_, num_);
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    if (is_constant() && other.is_constant()) {
        *this = Scalar(constant_value() + other.constant_value());
        return *this;
    }
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    return *this += -other;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    if (is_constant() && other.is_constant()) {
        *this = Scalar(constant_value() * other.constant_value());
        return *this;
    }
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    return *this *= other.inverse();
}

std::string Scalar::to_string() const
{
    if (is_constant()) return shimura::to_string(constant_value());
    std::string n = num_.to_string();
    if (den_ == UPoly(1)) return n;
    return "(" + n + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

Scalar power(const Scalar& base, int exponent)
{
    if (exponent < 0) return power(base.inverse(), -exponent);
    Scalar out(1);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace shimura
