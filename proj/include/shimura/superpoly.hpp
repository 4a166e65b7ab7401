#pragma once

#include "shimura/partitions.hpp"
#include "shimura/sparse_poly.hpp"
#include "shimura/symmfunc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shimura {

/// x1..xp, y1..yq: coordinates on 𝔞*.
std::vector<std::string> a_vars(const HookParams& hp);
/// x+1..x+p, x-1..x-p, y+1..y+q, y-1..y-q: coordinates on 𝔥*.
std::vector<std::string> h_vars(const HookParams& hp);

/// Σ x_i^r − (−1)^r Σ y_j^r over x1..xm, y1..yn (the supersymmetric power sum).
QPoly signed_power_sum(const std::vector<std::string>& vars, int m, int n, int r);
/// Signed power sum p_r^{(p,q)} on 𝔞*.
QPoly power_sum_a(const HookParams& hp, int r);
/// Signed power sum p_r^{(2p,2q)} on 𝔥*.
QPoly power_sum_h(const HookParams& hp, int r);

/// Algebra map p_r ↦ Σ x_i^r − θ^{-1} Σ y_j^r into x1..xp, y1..yq.
/// Throws ZeroTheta when θ = 0.
ThetaPoly phi_theta(const SymFun& f, const HookParams& hp, const Scalar& theta);

/// SP_λ(x, y; θ) = φ_θ(P_λ(x; θ)).
ThetaPoly super_jack(const Partition& lambda, const HookParams& hp, const Scalar& theta);

/// SP_λ(x, y; 1) with rational coefficients; memoized per (λ, p, q).
const QPoly& super_jack_at_one(const Partition& lambda, const HookParams& hp);

/// x_i ↦ x_i², y_j ↦ y_j².
template <class C>
SparsePoly<C> squared_substitution(const SparsePoly<C>& f)
{
    SparsePoly<C> out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        Exponents d = e;
        for (auto& k : d) k *= 2;
        out.add_term(d, c);
    }
    return out;
}

enum class SuperVariant {
    Signed,  // f(x1 = t, y1 = −t) independent of t
    Plain,   // f(x1 = t, y1 = t) independent of t
};

/// Separate symmetry in {x_i} and {y_j} plus the cancellation condition;
/// f must be over a_vars(hp).
bool is_supersymmetric(const QPoly& f, const HookParams& hp, SuperVariant variant);

/// Supersymmetric (signed), and invariant under every sign change.
bool is_even_supersymmetric(const QPoly& f, const HookParams& hp);

/// True iff f is invariant under the transposition of variables a and b.
bool is_invariant_under_swap(const QPoly& f, std::size_t a, std::size_t b);

/// (ν, SP_ν(x², y²; 1)) for ν in ℋ_d(p, q), SizeRevLex order.
std::vector<std::pair<Partition, QPoly>> lambda0_basis(const HookParams& hp, int d);

/// Res: x±i ↦ ±x_i/2, y±j ↦ ±y_j/2, from h_vars(hp) to a_vars(hp).
QPoly res_map(const QPoly& f, const HookParams& hp);

} // namespace shimura
