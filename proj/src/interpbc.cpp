#include "shimura/interpbc.hpp"

#include "shimura/errors.hpp"
#include "shimura/linear_solve.hpp"
#include "shimura/superpoly.hpp"

#include <algorithm>
#include <map>

namespace shimura {

std::string GridPoint::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ", ";
        out += shimura::to_string(coords[i]);
    }
    return out + ")";
}

Scalar c_factor(const Partition& lambda, const Scalar& x, const Scalar& k, CSign sign)
{
    const Partition t = lambda.transpose();
    Scalar out(1);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            Scalar box = sign == CSign::Plus
                ? Scalar(lambda.part(i) + j) + k * Scalar(t.part(j) + i) + x
                : Scalar(lambda.part(i) - j) - k * Scalar(t.part(j) - i) + x;
            out *= box;
        }
    }
    return out;
}

Scalar d_mu(const Partition& mu, const Scalar& k)
{
    const Scalar denom = c_factor(mu, -k, k, CSign::Minus);
    if (denom.is_zero()) throw DivisionByZero("d_μ: C^-_μ(−k; k) vanishes for μ = " + mu.to_string());
    const Scalar sign = mu.size() % 2 == 0 ? Scalar(1) : Scalar(-1);
    return sign * power(k, 2 * mu.size()) * c_factor(mu, Scalar(1), k, CSign::Minus) / denom;
}

Rational hook_product(const Partition& mu)
{
    return c_factor(mu, Scalar(1), Scalar(-1), CSign::Minus).constant_value();
}

Rational normalization_target(const Partition& mu, const HookParams& hp)
{
    const Scalar plus = c_factor(mu, Scalar(2 * hp.q - 2 * hp.p), Scalar(-1), CSign::Plus);
    return hook_product(mu) * plus.constant_value();
}

Rational normalization_target_transposed(const Partition& mu, const HookParams& hp)
{
    return normalization_target(mu.transpose(), hp);
}

WeylVectors weyl_vectors(const HookParams& hp)
{
    WeylVectors w;
    w.rho.space = Space::A;
    w.rho_h.space = Space::H;
    std::vector<Rational> bos, fer;
    for (int i = 1; i <= hp.p; ++i) bos.emplace_back(2 * (hp.p - i) + 1 - 2 * hp.q);
    for (int j = 1; j <= hp.q; ++j) fer.emplace_back(2 * (hp.q - j) + 1);
    w.rho.coords = bos;
    w.rho.coords.insert(w.rho.coords.end(), fer.begin(), fer.end());

    // Coefficients of (χ_{+i} − χ_{−i}) and (η_{+j} − η_{−j}).
    std::vector<Rational> hb, hf;
    for (int i = 1; i <= hp.p; ++i) hb.push_back(Rational(hp.p - i) + Rational(1, 2) - hp.q);
    for (int j = 1; j <= hp.q; ++j) hf.push_back(Rational(hp.q - j) + Rational(1, 2));
    auto& h = w.rho_h.coords;
    for (const auto& c : hb) h.push_back(c);
    for (const auto& c : hb) h.push_back(-c);
    for (const auto& c : hf) h.push_back(c);
    for (const auto& c : hf) h.push_back(-c);
    return w;
}

GridPoint restrict_to_a(const GridPoint& h_point, const HookParams& hp)
{
    const auto p = static_cast<std::size_t>(hp.p);
    const auto q = static_cast<std::size_t>(hp.q);
    if (h_point.space != Space::H || h_point.coords.size() != 2 * p + 2 * q)
        throw VariableMismatch("restrict_to_a expects a point of 𝔥*");
    GridPoint out;
    out.space = Space::A;
    const auto& c = h_point.coords;
    for (std::size_t i = 0; i < p; ++i) out.coords.push_back(c[i] - c[p + i]);
    for (std::size_t j = 0; j < q; ++j) out.coords.push_back(c[2 * p + j] - c[2 * p + q + j]);
    return out;
}

GridPoint grid_point(const Partition& lambda, const HookParams& hp)
{
    if (!is_hook(lambda, hp))
        throw NotAHook(lambda.to_string() + " is not a (" + std::to_string(hp.p) + "," + std::to_string(hp.q) + ")-hook partition");
    const auto nat = lambda_natural(lambda, hp.p, hp.q);
    GridPoint g = weyl_vectors(hp).rho;
    for (std::size_t k = 0; k < nat.size(); ++k) g.coords[k] += 2 * nat[k];
    return g;
}

Rational evaluate_at(const QPoly& f, const GridPoint& point)
{
    return f.evaluate(point.coords);
}

std::string mode_name(InterpMode mode)
{
    return mode == InterpMode::Paper ? "paper" : "top";
}

Rational top_mode_coefficient(const Partition& mu)
{
    return rational_power(Rational(-1, 4), static_cast<unsigned>(mu.size()));
}

namespace {

std::vector<Partition> hooks_not_containing(const HookParams& hp, int size, const Partition& mu, SizeMode mode)
{
    std::vector<Partition> out;
    for (auto& lambda : enumerate_hooks(hp, size, mode))
        if (!contains(lambda, mu)) out.push_back(std::move(lambda));
    return out;
}

constexpr int kMaxGridExtension = 4;

} // namespace

InterpolationResult interpolation_J(const Partition& mu, const HookParams& hp, InterpMode mode)
{
    if (!is_hook(mu, hp)) throw NotAHook(mu.to_string() + " is not a hook partition for these (p, q)");
    const int d = mu.size();

    InterpolationResult res;
    res.mu = mu;
    res.hp = hp;
    res.mode = mode;

    Rational target;
    if (mode == InterpMode::Paper) {
        target = normalization_target(mu, hp);
        if (target == 0)
            throw DegenerateNormalization("normalization target C^-C^+ vanishes for μ = " + mu.to_string() + " at (p,q) = (" +
                                          std::to_string(hp.p) + "," + std::to_string(hp.q) + ")");
    }

    std::vector<Partition> lower = d > 0 ? enumerate_hooks(hp, d - 1, SizeMode::UpTo) : std::vector<Partition>{};
    std::vector<QPoly> basis;
    basis.reserve(lower.size() + 1);
    for (const auto& nu : lower) basis.push_back(squared_substitution(super_jack_at_one(nu, hp)));
    basis.push_back(squared_substitution(super_jack_at_one(mu, hp)));
    const std::size_t top_index = lower.size();

    std::vector<Partition> vanishing = hooks_not_containing(hp, d, mu, SizeMode::UpTo);
    const std::size_t unknowns = mode == InterpMode::Paper ? basis.size() : lower.size();
    const Rational c_top = top_mode_coefficient(mu);

    auto row_at = [&](const GridPoint& g) {
        std::vector<Rational> values;
        values.reserve(basis.size());
        for (const auto& b : basis) values.push_back(evaluate_at(b, g));
        return values;
    };

    std::vector<Rational> coeffs;
    for (int ext = 0;; ++ext) {
        Matrix<Rational> A;
        std::vector<Rational> rhs;
        for (const auto& lambda : vanishing) {
            auto vals = row_at(grid_point(lambda, hp));
            if (mode == InterpMode::Top) {
                rhs.push_back(-c_top * vals[top_index]);
                vals.pop_back();
            } else {
                rhs.push_back(0);
            }
            A.push_back(std::move(vals));
        }
        if (mode == InterpMode::Paper) {
            A.push_back(row_at(grid_point(mu, hp)));
            rhs.push_back(target);
        }

        if (unknowns == 0) {
            bool consistent = std::all_of(rhs.begin(), rhs.end(), [](const Rational& r) { return r == 0; });
            if (!consistent) throw InconsistentSystem("J_" + mu.to_string() + ": vanishing conditions contradict the fixed top coefficient");
            break;
        }
        auto sol = solve_exact(A, rhs);
        if (sol.tag == SolveTag::Inconsistent)
            throw InconsistentSystem("J_" + mu.to_string() + " at (p,q) = (" + std::to_string(hp.p) + "," + std::to_string(hp.q) +
                                     "): " + mode_name(mode) + "-mode system has no solution");
        if (sol.tag == SolveTag::Unique) {
            coeffs = std::move(sol.solution);
            break;
        }
        if (ext >= kMaxGridExtension)
            throw UnderdeterminedSystem("J_" + mu.to_string() + ": vanishing grid does not determine the polynomial");
        res.extended_grid_used = true;
        auto more = hooks_not_containing(hp, d + ext + 1, mu, SizeMode::Exact);
        vanishing.insert(vanishing.end(), more.begin(), more.end());
    }
    if (mode == InterpMode::Top) coeffs.push_back(c_top);

    res.poly = QPoly(a_vars(hp));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeffs[k] == 0) continue;
        res.poly += basis[k] * coeffs[k];
        res.expansion.emplace_back(k < top_index ? lower[k] : mu, coeffs[k]);
    }
    res.measured_top_coefficient = coeffs[top_index];
    res.normalization_value = evaluate_at(res.poly, grid_point(mu, hp));
    return res;
}

InterpolationResult interpolation_J_preferred(const Partition& mu, const HookParams& hp)
{
    try {
        return interpolation_J(mu, hp, InterpMode::Paper);
    } catch (const DegenerateNormalization&) {
        auto res = interpolation_J(mu, hp, InterpMode::Top);
        res.degenerate_normalization = true;
        return res;
    }
}

namespace {

// Paper mode when it has a solution, top mode otherwise.
InterpolationResult interpolation_J_any(const Partition& mu, const HookParams& hp)
{
    try {
        return interpolation_J_preferred(mu, hp);
    } catch (const InconsistentSystem&) {
        return interpolation_J(mu, hp, InterpMode::Top);
    }
}

} // namespace

Rational k_mu(const Partition& mu)
{
    const Rational sign = mu.size() % 2 == 0 ? 1 : -1;
    return sign * hook_product(mu);
}

ShimuraImage shimura_image(const Partition& mu, const HookParams& hp)
{
    ShimuraImage img;
    img.j = interpolation_J_preferred(mu, hp);
    img.k = k_mu(mu);
    img.poly = img.j.poly * img.k;
    return img;
}

std::string orientation_name(Orientation o)
{
    switch (o) {
    case Orientation::Reciprocal: return "reciprocal";
    case Orientation::Direct: return "direct";
    case Orientation::Both: return "both";
    case Orientation::Neither: return "neither";
    }
    return "neither";
}

ExpansionReport expansion_identity(int m, const HookParams& hp)
{
    if (m < 0) throw std::invalid_argument("expansion_identity: negative degree");
    ExpansionReport rep;
    rep.m = m;
    rep.hp = hp;

    const auto vars = a_vars(hp);
    Rational inv_fact = 1;
    for (int k = 2; k <= m; ++k) inv_fact /= k;
    const QPoly lhs = power_sum_a(hp, 2).pow(static_cast<unsigned>(m)) * inv_fact;

    const auto nus = enumerate_hooks(hp, m, SizeMode::Exact);
    std::vector<QPoly> basis;
    for (const auto& nu : nus) basis.push_back(squared_substitution(super_jack_at_one(nu, hp)));

    std::map<Exponents, std::size_t, GrlexDescending> rows;
    for (const auto& [e, c] : lhs.terms()) rows.try_emplace(e, rows.size());
    for (const auto& b : basis)
        for (const auto& [e, c] : b.terms()) rows.try_emplace(e, rows.size());
    Matrix<Rational> A(rows.size(), std::vector<Rational>(basis.size()));
    std::vector<Rational> rhs(rows.size());
    for (const auto& [e, r] : rows) {
        rhs[r] = lhs.coefficient(e);
        for (std::size_t k = 0; k < basis.size(); ++k) A[r][k] = basis[k].coefficient(e);
    }
    auto sol = solve_exact(A, rhs);
    if (sol.tag != SolveTag::Unique)
        throw InconsistentSystem("(1/m!) p_2^m is not uniquely expanded in the SP_ν(x², y²; 1) basis");

    QPoly check(vars);
    bool all_recip = true, all_direct = true;
    for (std::size_t k = 0; k < nus.size(); ++k) {
        ExpansionEntry en;
        en.nu = nus[k];
        en.coefficient = sol.solution[k];
        en.hook = hook_product(nus[k]);
        en.reciprocal = en.coefficient * en.hook == 1;
        en.direct = en.coefficient == en.hook;
        all_recip = all_recip && en.reciprocal;
        all_direct = all_direct && en.direct;
        check += basis[k] * en.coefficient;
        rep.entries.push_back(std::move(en));
    }
    rep.exact = check == lhs;
    rep.orientation = all_recip && all_direct ? Orientation::Both
        : all_recip                            ? Orientation::Reciprocal
        : all_direct                           ? Orientation::Direct
                                               : Orientation::Neither;
    return rep;
}

DerivedConstant derive_k(const Partition& mu, const HookParams& hp)
{
    if (!is_hook(mu, hp)) throw NotAHook(mu.to_string() + " is not a hook partition for these (p, q)");
    DerivedConstant dc;
    dc.mu = mu;
    const auto rep = expansion_identity(mu.size(), hp);
    for (const auto& en : rep.entries)
        if (en.nu == mu) dc.e = en.coefficient;
    const auto j = interpolation_J_any(mu, hp);
    dc.mode = j.mode;
    dc.t = j.measured_top_coefficient;
    dc.k_tilde = dc.e / (rational_power(Rational(2), static_cast<unsigned>(mu.size())) * dc.t);
    dc.k_paper = k_mu(mu);
    return dc;
}

EvaluationMatrix evaluation_matrix(const HookParams& hp, int d)
{
    EvaluationMatrix m;
    m.index = enumerate_hooks(hp, d, SizeMode::UpTo);
    std::vector<GridPoint> grid;
    for (const auto& lambda : m.index) grid.push_back(grid_point(lambda, hp));
    for (const auto& mu : m.index) {
        const auto j = interpolation_J_any(mu, hp);
        std::vector<Rational> row;
        for (const auto& g : grid) row.push_back(evaluate_at(j.poly, g));
        m.values.push_back(std::move(row));
    }
    return m;
}

} // namespace shimura
