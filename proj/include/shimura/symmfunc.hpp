#pragma once

#include "shimura/partitions.hpp"
#include "shimura/scalar.hpp"
#include "shimura/sparse_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace shimura {

using CoeffMap = std::map<Partition, Scalar, SizeRevLex>;

enum class Basis { Monomial, PowerSum };

std::string basis_tag(Basis b);

// Symmetric function in the power-sum basis: f = Σ coeff(λ) p_λ.
class SymFun {
public:
    SymFun() = default;
    explicit SymFun(CoeffMap coeffs);

    static SymFun power_sum(const Partition& lambda);

    [[nodiscard]] const CoeffMap& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Scalar coefficient(const Partition& lambda) const;
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Largest |λ| with nonzero coefficient, -1 for zero.
    [[nodiscard]] int degree() const noexcept;
    [[nodiscard]] SymFun homogeneous_part(int d) const;

    void add(const Partition& lambda, const Scalar& c);

    SymFun& operator+=(const SymFun& other);
    SymFun& operator-=(const SymFun& other);
    SymFun& operator*=(const Scalar& factor);
    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
    friend SymFun operator*(SymFun a, const Scalar& c) { return a *= c; }
    friend SymFun operator*(const Scalar& c, SymFun a) { return a *= c; }
    /// p_λ p_μ = p_{λ∪μ}.
    friend SymFun operator*(const SymFun& a, const SymFun& b);

    friend bool operator==(const SymFun&, const SymFun&) = default;

private:
    CoeffMap coeffs_;
};

/// z_λ = Π_i i^{m_i} m_i!.
Integer z_factor(const Partition& lambda);

/// Coefficient of m_μ in p_λ (|λ| = |μ|): the number of ways to distribute
/// the parts of λ into the rows of μ.
Integer power_to_monomial_coefficient(const Partition& lambda, const Partition& mu);

/// m_λ in n variables x1..xn. Throws std::invalid_argument if n < ℓ(λ).
QPoly monomial_expand(const Partition& lambda, int n);

/// Converts a partition-indexed coefficient map between the m and p bases.
/// Throws std::invalid_argument if a component exceeds degree_bound.
CoeffMap basis_convert(const CoeffMap& f, Basis from, Basis to, int degree_bound);

CoeffMap to_monomial_basis(const SymFun& f);
SymFun from_monomial_basis(const CoeffMap& m_coeffs);

/// ⟨p_λ, p_μ⟩_θ = δ_λμ z_λ θ^{-ℓ(λ)}. Throws DegenerateParameter at θ = 0.
Scalar jack_inner(const SymFun& f, const SymFun& g, const Scalar& theta);

/// Monic Jack function P_λ(x; θ) by Gram–Schmidt of the monomial basis in
/// lexicographic order (a linear extension of dominance). theta is either
/// Scalar::theta() or a rational value; throws DegenerateParameter if a norm
/// vanishes at that value. Results are memoized in the process-wide cache.
SymFun jack_P(const Partition& lambda, const Scalar& theta);

/// All P_μ, |μ| = n, keyed by μ; bypasses the cache.
std::map<Partition, SymFun, SizeRevLex> compute_jack_degree(int n, const Scalar& theta);

} // namespace shimura
