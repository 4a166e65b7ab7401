#pragma once

#include "shimura/errors.hpp"
#include "shimura/rational.hpp"
#include "shimura/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace shimura {

using Exponents = std::vector<int>;

// Graded lexicographic order, greatest first, so map iteration is the
// canonical printing order.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept
    {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Scalar& c) { return c.is_zero(); }

inline std::string coeff_text(const Rational& c) { return to_string(c); }
inline std::string coeff_text(const Scalar& c) { return c.to_string(); }

inline bool coeff_negative(const Rational& c) { return c < 0; }
inline bool coeff_negative(const Scalar& c) { return c.is_constant() && c.constant_value() < 0; }

} // namespace detail

// Multivariate polynomial over an ordered list of named variables with
// exact coefficients (Rational or Scalar). No zero coefficient is stored.
template <class C>
class SparsePoly {
public:
    using Coeff = C;
    using TermMap = std::map<Exponents, C, GrlexDescending>;

    SparsePoly() = default;
    explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static SparsePoly constant(std::vector<std::string> vars, const C& c)
    {
        SparsePoly out(std::move(vars));
        out.add_term(Exponents(out.vars_.size(), 0), c);
        return out;
    }

    static SparsePoly variable(std::vector<std::string> vars, std::size_t index)
    {
        SparsePoly out(std::move(vars));
        Exponents e(out.vars_.size(), 0);
        e.at(index) = 1;
        out.add_term(e, C(1));
        return out;
    }

    static SparsePoly variable(const std::vector<std::string>& vars, const std::string& name)
    {
        return variable(vars, index_of(vars, name));
    }

    [[nodiscard]] const std::vector<std::string>& vars() const noexcept { return vars_; }
    [[nodiscard]] std::size_t arity() const noexcept { return vars_.size(); }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept
    {
        if (terms_.empty()) return -1;
        const auto& e = terms_.begin()->first;
        return std::accumulate(e.begin(), e.end(), 0);
    }

    [[nodiscard]] C coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    /// Adds c·x^e in place; throws VariableMismatch on a wrong arity.
    void add_term(const Exponents& e, const C& c)
    {
        if (e.size() != vars_.size()) throw VariableMismatch("exponent vector arity does not match variable list");
        if (detail::coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    [[nodiscard]] SparsePoly homogeneous_part(int d) const
    {
        SparsePoly out(vars_);
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) == d) out.terms_.emplace(e, c);
        return out;
    }

    SparsePoly& operator+=(const SparsePoly& other)
    {
        check_same_vars(other);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& other)
    {
        check_same_vars(other);
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    SparsePoly& operator*=(const C& factor)
    {
        if (detail::coeff_is_zero(factor)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= factor;
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator-(SparsePoly a)
    {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend SparsePoly operator*(SparsePoly a, const C& factor) { return a *= factor; }
    friend SparsePoly operator*(const C& factor, SparsePoly a) { return a *= factor; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
    {
        a.check_same_vars(b);
        SparsePoly out(a.vars_);
        Exponents e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    SparsePoly& operator*=(const SparsePoly& other) { return *this = *this * other; }

    [[nodiscard]] SparsePoly pow(unsigned n) const
    {
        SparsePoly out = constant(vars_, C(1));
        SparsePoly base = *this;
        while (n) {
            if (n & 1u) out *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return out;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Evaluates at a point given in variable-list order.
    [[nodiscard]] C evaluate(std::span<const C> point) const
    {
        if (point.size() != vars_.size()) throw VariableMismatch("evaluation point arity does not match variable list");
        std::vector<std::vector<C>> powers(vars_.size());
        C acc(0);
        for (const auto& [e, c] : terms_) {
            C term = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(C(1));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * point[i]);
                term *= pw[static_cast<std::size_t>(e[i])];
            }
            acc += term;
        }
        return acc;
    }

    /// Applies f to every coefficient, dropping zeros.
    template <class D, class F>
    [[nodiscard]] SparsePoly<D> map_coefficients(F&& f) const
    {
        SparsePoly<D> out(vars_);
        for (const auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    /// Same coefficients over a renamed variable list of equal length.
    [[nodiscard]] SparsePoly with_vars(std::vector<std::string> vars) const
    {
        if (vars.size() != vars_.size()) throw VariableMismatch("renaming changes arity");
        SparsePoly out(std::move(vars));
        out.terms_ = terms_;
        return out;
    }

    /// Canonical text in descending graded-lex order, e.g. "-1/4*x1^2 + 1/4".
    [[nodiscard]] std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = detail::coeff_negative(c);
            const C mag = neg ? C(-c) : c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            const bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
            std::string ct = detail::coeff_text(mag);
            const bool unit = ct == "1";
            if (!unit || is_const) {
                if constexpr (std::is_same_v<C, Scalar>) {
                    if (!mag.is_constant()) ct = "(" + ct + ")";
                }
                os << ct;
                if (!is_const) os << '*';
            }
            bool first_var = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!first_var) os << '*';
                first_var = false;
                os << vars_[i];
                if (e[i] > 1) os << '^' << e[i];
            }
        }
        return os.str();
    }

    static std::size_t index_of(const std::vector<std::string>& vars, const std::string& name)
    {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw VariableMismatch("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - vars.begin());
    }

private:
    void check_same_vars(const SparsePoly& other) const
    {
        if (vars_ != other.vars_) throw VariableMismatch("polynomials are over different variable lists");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

using QPoly = SparsePoly<Rational>;
using ThetaPoly = SparsePoly<Scalar>;

/// Composes f with an assignment of variables to polynomials over target_vars.
/// Unassigned variables of f pass through to the same-named target variable.
/// Throws VariableMismatch if an image is over another variable list or an
/// unassigned variable is missing from target_vars.
template <class C>
SparsePoly<C> substitute(const SparsePoly<C>& f,
                         const std::map<std::string, SparsePoly<C>>& assignment,
                         const std::vector<std::string>& target_vars)
{
    std::vector<SparsePoly<C>> images;
    images.reserve(f.arity());
    for (const auto& name : f.vars()) {
        auto it = assignment.find(name);
        if (it != assignment.end()) {
            if (it->second.vars() != target_vars)
                throw VariableMismatch("image of '" + name + "' is not over the target variable list");
            images.push_back(it->second);
        } else {
            images.push_back(SparsePoly<C>::variable(target_vars, SparsePoly<C>::index_of(target_vars, name)));
        }
    }
    for (const auto& [name, img] : assignment) SparsePoly<C>::index_of(f.vars(), name);

    std::vector<std::vector<SparsePoly<C>>> powers(images.size());
    SparsePoly<C> out(target_vars);
    for (const auto& [e, c] : f.terms()) {
        SparsePoly<C> term = SparsePoly<C>::constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(SparsePoly<C>::constant(target_vars, C(1)));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
            term *= pw[static_cast<std::size_t>(e[i])];
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

/// Constant images given as scalars.
template <class C>
SparsePoly<C> substitute_values(const SparsePoly<C>& f, const std::map<std::string, C>& values)
{
    std::vector<std::string> target;
    for (const auto& v : f.vars())
        if (!values.count(v)) target.push_back(v);
    for (const auto& [name, v] : values) SparsePoly<C>::index_of(f.vars(), name);
    std::map<std::string, SparsePoly<C>> assignment;
    for (const auto& [name, v] : values) assignment.emplace(name, SparsePoly<C>::constant(target, v));
    return substitute(f, assignment, target);
}

/// Exact conversion of a θ-free Scalar polynomial; throws std::logic_error otherwise.
inline QPoly to_rational_poly(const ThetaPoly& f)
{
    return f.map_coefficients<Rational>([](const Scalar& c) { return c.constant_value(); });
}

inline ThetaPoly to_theta_poly(const QPoly& f)
{
    return f.map_coefficients<Scalar>([](const Rational& c) { return Scalar(c); });
}

/// Parses the canonical text form produced by to_string() for rational
/// coefficients, e.g. "-1/4*x1^2 + 1/4*y1^2 + 1/4".
QPoly parse_qpoly(std::string_view text, const std::vector<std::string>& vars);

} // namespace shimura
