#include "shimura/superpoly.hpp"

#include "shimura/errors.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace shimura {

std::vector<std::string> a_vars(const HookParams& hp)
{
    std::vector<std::string> v;
    for (int i = 1; i <= hp.p; ++i) v.push_back("x" + std::to_string(i));
    for (int j = 1; j <= hp.q; ++j) v.push_back("y" + std::to_string(j));
    return v;
}

std::vector<std::string> h_vars(const HookParams& hp)
{
    std::vector<std::string> v;
    for (int i = 1; i <= hp.p; ++i) v.push_back("x+" + std::to_string(i));
    for (int i = 1; i <= hp.p; ++i) v.push_back("x-" + std::to_string(i));
    for (int j = 1; j <= hp.q; ++j) v.push_back("y+" + std::to_string(j));
    for (int j = 1; j <= hp.q; ++j) v.push_back("y-" + std::to_string(j));
    return v;
}

QPoly signed_power_sum(const std::vector<std::string>& vars, int m, int n, int r)
{
    if (static_cast<int>(vars.size()) != m + n) throw VariableMismatch("power sum: variable count must be m + n");
    QPoly out(vars);
    const Rational ysign = r % 2 == 0 ? Rational(-1) : Rational(1);
    for (int k = 0; k < m + n; ++k) {
        Exponents e(vars.size(), 0);
        e[static_cast<std::size_t>(k)] = r;
        out.add_term(e, k < m ? Rational(1) : ysign);
    }
    return out;
}

QPoly power_sum_a(const HookParams& hp, int r)
{
    return signed_power_sum(a_vars(hp), hp.p, hp.q, r);
}

QPoly power_sum_h(const HookParams& hp, int r)
{
    return signed_power_sum(h_vars(hp), 2 * hp.p, 2 * hp.q, r);
}

namespace {

// Applies p_r ↦ gen(r) to every power-sum product of f.
template <class C, class Coeff, class Gen>
SparsePoly<C> apply_power_map(const SymFun& f, const std::vector<std::string>& vars, Coeff&& coeff, Gen&& gen)
{
    std::map<int, std::vector<SparsePoly<C>>> powers;  // powers[r][k] = gen(r)^k
    auto power_of = [&](int r, int k) -> const SparsePoly<C>& {
        auto& list = powers[r];
        if (list.empty()) list.push_back(SparsePoly<C>::constant(vars, C(1)));
        while (static_cast<int>(list.size()) <= k) list.push_back(list.back() * gen(r));
        return list[static_cast<std::size_t>(k)];
    };
    SparsePoly<C> out(vars);
    for (const auto& [lambda, c] : f.coeffs()) {
        SparsePoly<C> term = SparsePoly<C>::constant(vars, coeff(c));
        const auto& parts = lambda.parts();
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            term *= power_of(parts[i], static_cast<int>(j - i));
            i = j;
        }
        out += term;
    }
    return out;
}

} // namespace

ThetaPoly phi_theta(const SymFun& f, const HookParams& hp, const Scalar& theta)
{
    if (theta.is_zero()) throw ZeroTheta("φ_θ requires θ ≠ 0");
    const auto vars = a_vars(hp);
    const Scalar yc = -theta.inverse();
    auto gen = [&](int r) {
        ThetaPoly g(vars);
        for (int k = 0; k < hp.p + hp.q; ++k) {
            Exponents e(vars.size(), 0);
            e[static_cast<std::size_t>(k)] = r;
            g.add_term(e, k < hp.p ? Scalar(1) : yc);
        }
        return g;
    };
    return apply_power_map<Scalar>(f, vars, [](const Scalar& c) { return c; }, gen);
}

ThetaPoly super_jack(const Partition& lambda, const HookParams& hp, const Scalar& theta)
{
    if (theta.is_zero()) throw ZeroTheta("super Jack polynomials require θ ≠ 0");
    return phi_theta(jack_P(lambda, theta), hp, theta);
}

const QPoly& super_jack_at_one(const Partition& lambda, const HookParams& hp)
{
    using Key = std::tuple<int, int, std::vector<int>>;
    static std::shared_mutex mutex;
    static std::map<Key, QPoly> memo;
    const Key key{hp.p, hp.q, lambda.parts()};
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const auto vars = a_vars(hp);
    auto gen = [&](int r) {
        QPoly g(vars);
        for (int k = 0; k < hp.p + hp.q; ++k) {
            Exponents e(vars.size(), 0);
            e[static_cast<std::size_t>(k)] = r;
            g.add_term(e, k < hp.p ? Rational(1) : Rational(-1));
        }
        return g;
    };
    QPoly value = apply_power_map<Rational>(jack_P(lambda, Scalar(1)), vars, [](const Scalar& c) { return c.constant_value(); }, gen);
    std::unique_lock lock(mutex);
    return memo.try_emplace(key, std::move(value)).first->second;
}

bool is_invariant_under_swap(const QPoly& f, std::size_t a, std::size_t b)
{
    for (const auto& [e, c] : f.terms()) {
        Exponents s = e;
        std::swap(s[a], s[b]);
        if (f.coefficient(s) != c) return false;
    }
    return true;
}

namespace {

bool separately_symmetric(const QPoly& f, const HookParams& hp)
{
    const auto p = static_cast<std::size_t>(hp.p);
    const auto n = p + static_cast<std::size_t>(hp.q);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b)
            if (!is_invariant_under_swap(f, a, b)) return false;
    for (std::size_t a = p; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!is_invariant_under_swap(f, a, b)) return false;
    return true;
}

bool cancels_along_line(const QPoly& f, const HookParams& hp, const Rational& ysign)
{
    auto target = a_vars(hp);
    target.push_back("t");
    const QPoly t = QPoly::variable(target, target.size() - 1);
    std::map<std::string, QPoly> assignment{
        {"x1", t},
        {"y1", t * ysign},
    };
    const QPoly g = substitute(f, assignment, target);
    for (const auto& [e, c] : g.terms())
        if (e.back() != 0) return false;
    return true;
}

void check_vars(const QPoly& f, const HookParams& hp)
{
    if (f.vars() != a_vars(hp)) throw VariableMismatch("expected a polynomial over " + std::to_string(hp.p) + " x- and " + std::to_string(hp.q) + " y-variables");
}

} // namespace

bool is_supersymmetric(const QPoly& f, const HookParams& hp, SuperVariant variant)
{
    check_vars(f, hp);
    if (!separately_symmetric(f, hp)) return false;
    return cancels_along_line(f, hp, variant == SuperVariant::Signed ? Rational(-1) : Rational(1));
}

bool is_even_supersymmetric(const QPoly& f, const HookParams& hp)
{
    check_vars(f, hp);
    for (const auto& [e, c] : f.terms())
        for (int k : e)
            if (k % 2 != 0) return false;
    return is_supersymmetric(f, hp, SuperVariant::Signed);
}

std::vector<std::pair<Partition, QPoly>> lambda0_basis(const HookParams& hp, int d)
{
    std::vector<std::pair<Partition, QPoly>> out;
    for (auto& nu : enumerate_hooks(hp, d, SizeMode::UpTo)) {
        QPoly sq = squared_substitution(super_jack_at_one(nu, hp));
        out.emplace_back(std::move(nu), std::move(sq));
    }
    return out;
}

QPoly res_map(const QPoly& f, const HookParams& hp)
{
    if (f.vars() != h_vars(hp)) throw VariableMismatch("res_map expects a polynomial over the 𝔥* coordinates");
    const auto target = a_vars(hp);
    const Rational half(1, 2);
    std::map<std::string, QPoly> assignment;
    for (int i = 1; i <= hp.p; ++i) {
        const QPoly x = QPoly::variable(target, static_cast<std::size_t>(i - 1));
        assignment.emplace("x+" + std::to_string(i), x * half);
        assignment.emplace("x-" + std::to_string(i), x * Rational(-half));
    }
    for (int j = 1; j <= hp.q; ++j) {
        const QPoly y = QPoly::variable(target, static_cast<std::size_t>(hp.p + j - 1));
        assignment.emplace("y+" + std::to_string(j), y * half);
        assignment.emplace("y-" + std::to_string(j), y * Rational(-half));
    }
    return substitute(f, assignment, target);
}

} // namespace shimura
