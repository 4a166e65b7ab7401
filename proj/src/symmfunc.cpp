#include "shimura/symmfunc.hpp"

#include "shimura/errors.hpp"
#include "shimura/jack_cache.hpp"
#include "shimura/linear_solve.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace shimura {

std::string basis_tag(Basis b)
{
    return b == Basis::Monomial ? "m" : "p";
}

// ---------------------------------------------------------------- SymFun

SymFun::SymFun(CoeffMap coeffs)
{
    for (auto& [lambda, c] : coeffs)
        if (!c.is_zero()) coeffs_.emplace(lambda, std::move(c));
}

SymFun SymFun::power_sum(const Partition& lambda)
{
    SymFun out;
    out.add(lambda, Scalar(1));
    return out;
}

Scalar SymFun::coefficient(const Partition& lambda) const
{
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Scalar() : it->second;
}

int SymFun::degree() const noexcept
{
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first.size();
}

SymFun SymFun::homogeneous_part(int d) const
{
    SymFun out;
    for (const auto& [lambda, c] : coeffs_)
        if (lambda.size() == d) out.coeffs_.emplace(lambda, c);
    return out;
}

void SymFun::add(const Partition& lambda, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFun& SymFun::operator+=(const SymFun& other)
{
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
    return *this;
}

SymFun& SymFun::operator-=(const SymFun& other)
{
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, -c);
    return *this;
}

SymFun& SymFun::operator*=(const Scalar& factor)
{
    if (factor.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lambda, c] : coeffs_) c *= factor;
    return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b)
{
    SymFun out;
    for (const auto& [la, ca] : a.coeffs_) {
        for (const auto& [lb, cb] : b.coeffs_) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<>());
            out.add(Partition(std::move(parts)), ca * cb);
        }
    }
    return out;
}

// ---------------------------------------------------------------- combinatorics

Integer z_factor(const Partition& lambda)
{
    Integer z = 1;
    for (int i = 1; i <= (lambda.empty() ? 0 : lambda.part(1)); ++i) {
        const int m = lambda.multiplicity(i);
        for (int k = 1; k <= m; ++k) z *= i * k;
    }
    return z;
}

namespace {

Integer distribute(const std::vector<int>& parts, std::size_t idx, std::vector<int>& rows,
                   std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo)
{
    if (idx == parts.size()) {
        return std::all_of(rows.begin(), rows.end(), [](int r) { return r == 0; }) ? Integer(1) : Integer(0);
    }
    auto key = std::make_pair(idx, rows);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (auto& r : rows) {
        if (r < parts[idx]) continue;
        r -= parts[idx];
        total += distribute(parts, idx + 1, rows, memo);
        r += parts[idx];
    }
    memo.emplace(std::move(key), total);
    return total;
}

struct Transition {
    std::vector<Partition> parts;             // partitions of n, reverse lex
    Matrix<Rational> p_to_m;                  // p_λ = Σ_μ p_to_m[λ][μ] m_μ
    Matrix<Rational> m_to_p;                  // m_μ = Σ_λ m_to_p[μ][λ] p_λ
    std::size_t index(const Partition& lambda) const
    {
        auto it = std::find(parts.begin(), parts.end(), lambda);
        return static_cast<std::size_t>(it - parts.begin());
    }
};

Transition build_transition(int n)
{
    Transition t;
    t.parts = partitions_of(n);
    const std::size_t k = t.parts.size();
    t.p_to_m.assign(k, std::vector<Rational>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            t.p_to_m[a][b] = Rational(power_to_monomial_coefficient(t.parts[a], t.parts[b]));

    // m_μ = Σ_λ X[μ][λ] p_λ  ⇔  Σ_λ X[μ][λ] p_to_m[λ][ν] = δ_μν.
    Matrix<Rational> lt(k, std::vector<Rational>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) lt[a][b] = t.p_to_m[b][a];
    t.m_to_p.assign(k, std::vector<Rational>(k));
    for (std::size_t mu = 0; mu < k; ++mu) {
        std::vector<Rational> e(k);
        e[mu] = 1;
        auto sol = solve_exact(lt, e);
        if (sol.tag != SolveTag::Unique) throw std::logic_error("power-sum transition matrix is singular");
        t.m_to_p[mu] = std::move(sol.solution);
    }
    return t;
}

const Transition& transition(int n)
{
    static std::mutex mutex;
    static std::map<int, Transition> tables;
    std::lock_guard lock(mutex);
    auto it = tables.find(n);
    if (it == tables.end()) it = tables.emplace(n, build_transition(n)).first;
    return it->second;
}

} // namespace

Integer power_to_monomial_coefficient(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size()) return 0;
    std::vector<int> rows = mu.parts();
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
    return distribute(lambda.parts(), 0, rows, memo);
}

QPoly monomial_expand(const Partition& lambda, int n)
{
    if (n < lambda.length())
        throw std::invalid_argument("monomial_expand: " + std::to_string(n) + " variables cannot carry " + lambda.to_string());
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    QPoly out(vars);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda.parts()[static_cast<std::size_t>(i)];
    std::sort(e.begin(), e.end());
    do {
        out.add_term(e, Rational(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

CoeffMap basis_convert(const CoeffMap& f, Basis from, Basis to, int degree_bound)
{
    for (const auto& [lambda, c] : f)
        if (lambda.size() > degree_bound)
            throw std::invalid_argument("basis_convert: component of degree " + std::to_string(lambda.size()) + " exceeds bound");
    if (from == to) return f;
    CoeffMap out;
    for (const auto& [lambda, c] : f) {
        const Transition& t = transition(lambda.size());
        const std::size_t row = t.index(lambda);
        const auto& mat = from == Basis::PowerSum ? t.p_to_m : t.m_to_p;
        for (std::size_t j = 0; j < t.parts.size(); ++j) {
            if (mat[row][j] == 0) continue;
            Scalar add = c * Scalar(mat[row][j]);
            auto [it, inserted] = out.try_emplace(t.parts[j], add);
            if (!inserted) it->second += add;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

CoeffMap to_monomial_basis(const SymFun& f)
{
    const int bound = std::max(f.degree(), 0);
    return basis_convert(f.coeffs(), Basis::PowerSum, Basis::Monomial, bound);
}

SymFun from_monomial_basis(const CoeffMap& m_coeffs)
{
    int bound = 0;
    for (const auto& [lambda, c] : m_coeffs) bound = std::max(bound, lambda.size());
    return SymFun(basis_convert(m_coeffs, Basis::Monomial, Basis::PowerSum, bound));
}

Scalar jack_inner(const SymFun& f, const SymFun& g, const Scalar& theta)
{
    if (theta.is_zero()) throw DegenerateParameter("θ-inner product undefined at θ = 0");
    const Scalar inv = theta.inverse();
    Scalar total;
    for (const auto& [lambda, c] : f.coeffs()) {
        auto it = g.coeffs().find(lambda);
        if (it == g.coeffs().end()) continue;
        total += c * it->second * Scalar(Rational(z_factor(lambda))) * power(inv, lambda.length());
    }
    return total;
}

std::map<Partition, SymFun, SizeRevLex> compute_jack_degree(int n, const Scalar& theta)
{
    if (theta.is_zero()) throw DegenerateParameter("Jack polynomials undefined at θ = 0");
    const Transition& t = transition(n);
    std::map<Partition, SymFun, SizeRevLex> out;
    std::vector<std::pair<SymFun, Scalar>> done;  // (P_μ, ⟨P_μ,P_μ⟩) in lex order
    for (std::size_t r = t.parts.size(); r-- > 0;) {
        SymFun m;
        for (std::size_t j = 0; j < t.parts.size(); ++j) m.add(t.parts[j], Scalar(t.m_to_p[r][j]));
        SymFun P = m;
        for (const auto& [Q, norm] : done) {
            Scalar c = jack_inner(m, Q, theta);
            if (!c.is_zero()) P -= Q * (c / norm);
        }
        Scalar norm = jack_inner(P, P, theta);
        if (norm.is_zero())
            throw DegenerateParameter("Gram–Schmidt norm of " + t.parts[r].to_string() + " vanishes at θ = " + theta.to_string());
        done.emplace_back(P, norm);
        out.emplace(t.parts[r], std::move(P));
    }
    return out;
}

SymFun jack_P(const Partition& lambda, const Scalar& theta)
{
    auto table = jack_cache().get_or_compute(lambda.size(), theta, [&] { return compute_jack_degree(lambda.size(), theta); });
    return table->at(lambda);
}

} // namespace shimura
