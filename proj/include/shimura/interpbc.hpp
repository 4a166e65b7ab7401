#pragma once

#include "shimura/partitions.hpp"
#include "shimura/scalar.hpp"
#include "shimura/sparse_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shimura {

enum class Space { A, H };

// A point of 𝔞* (coordinates along α^B_1..α^B_p, α^F_1..α^F_q) or of 𝔥*
// (coordinates along χ_{+i}, χ_{−i}, η_{+j}, η_{−j}, matching h_vars()).
struct GridPoint {
    Space space = Space::A;
    std::vector<Rational> coords;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    [[nodiscard]] std::string to_string() const;
};

enum class CSign { Plus, Minus };

/// C^+_λ(x; k) = Π (λ_i + j + k(λ'_j + i) + x),
/// C^-_λ(x; k) = Π (λ_i − j − k(λ'_j − i) + x), over the boxes (i, j) of λ.
Scalar c_factor(const Partition& lambda, const Scalar& x, const Scalar& k, CSign sign);

/// d_μ(k) = (−1)^{|μ|} k^{2|μ|} C^-_μ(1; k) / C^-_μ(−k; k).
/// Throws DivisionByZero when C^-_μ(−k; k) = 0.
Scalar d_mu(const Partition& mu, const Scalar& k);

/// Hook-length product C^-_μ(1; −1).
Rational hook_product(const Partition& mu);
/// C^-_μ(1; −1) · C^+_μ(2q − 2p; −1): the normalization target of J_μ.
Rational normalization_target(const Partition& mu, const HookParams& hp);
/// The same product for the transposed partition, C^-_{μ'}(1; −1) · C^+_{μ'}(2q − 2p; −1).
/// Measured to equal J_μ(grid(μ)) when J_μ has top coefficient (−1/4)^{|μ|}.
Rational normalization_target_transposed(const Partition& mu, const HookParams& hp);

struct WeylVectors {
    GridPoint rho;    // on 𝔞*
    GridPoint rho_h;  // on 𝔥*
};

WeylVectors weyl_vectors(const HookParams& hp);

/// Pulls an 𝔥* weight back to 𝔞*: the α-coordinate is the difference of the
/// (+) and (−) coordinates, so Σ a_i(χ_{+i} − χ_{−i}) ↦ Σ 2a_i α^B_i.
GridPoint restrict_to_a(const GridPoint& h_point, const HookParams& hp);

/// 2·(Σ λ_i α^B_i + Σ <λ'_j − p> α^F_j) + ρ. Throws NotAHook.
GridPoint grid_point(const Partition& lambda, const HookParams& hp);

Rational evaluate_at(const QPoly& f, const GridPoint& point);

enum class InterpMode { Paper, Top };

std::string mode_name(InterpMode mode);

struct InterpolationResult {
    Partition mu;
    HookParams hp{1, 1};
    QPoly poly;
    InterpMode mode = InterpMode::Top;
    /// Coefficient c_μ of SP_μ(x², y²; 1) in the expansion of J_μ.
    Rational measured_top_coefficient;
    /// J_μ(grid(μ)).
    Rational normalization_value;
    /// Paper mode was requested but its target vanished; the top mode result is returned.
    bool degenerate_normalization = false;
    /// The vanishing set was enlarged beyond ℋ_{|μ|}.
    bool extended_grid_used = false;
    /// Expansion of J_μ in the SP_ν(x², y²; 1) basis, ν in SizeRevLex order.
    std::vector<std::pair<Partition, Rational>> expansion;
};

/// Default leading coefficient of top mode, (−1/4)^{|μ|}.
Rational top_mode_coefficient(const Partition& mu);

/// Builds J_μ in Λ⁰ by an exact solve against the vanishing grid.
/// Throws NotAHook, DegenerateNormalization (paper mode, zero target),
/// InconsistentSystem (paper mode, the target is unreachable), UnderdeterminedSystem.
InterpolationResult interpolation_J(const Partition& mu, const HookParams& hp, InterpMode mode);

/// Paper mode, falling back to top mode (flagged) on a degenerate normalization.
InterpolationResult interpolation_J_preferred(const Partition& mu, const HookParams& hp);

/// k_μ = (−1)^{|μ|} C^-_μ(1; −1).
Rational k_mu(const Partition& mu);

struct ShimuraImage {
    QPoly poly;
    Rational k;
    InterpolationResult j;
};

/// k_μ · J_μ.
ShimuraImage shimura_image(const Partition& mu, const HookParams& hp);

enum class Orientation { Reciprocal, Direct, Both, Neither };

std::string orientation_name(Orientation o);

struct ExpansionEntry {
    Partition nu;
    Rational coefficient;  // e_ν
    Rational hook;         // C^-_ν(1; −1)
    bool reciprocal = false;  // e_ν · C = 1
    bool direct = false;      // e_ν = C
};

struct ExpansionReport {
    int m = 0;
    HookParams hp{1, 1};
    std::vector<ExpansionEntry> entries;
    /// Orientation holding uniformly over all ν.
    Orientation orientation = Orientation::Both;
    /// Σ e_ν SP_ν(x², y²; 1) equals (1/m!)(Σx_i² − Σy_j²)^m exactly.
    bool exact = false;
};

/// Expands (1/m!)(Σ x_i² − Σ y_j²)^m in {SP_ν(x², y²; 1) : ν ∈ ℋ^m(p, q)}.
ExpansionReport expansion_identity(int m, const HookParams& hp);

struct DerivedConstant {
    Partition mu;
    Rational e;        // measured expansion coefficient e_μ
    Rational t;        // measured top coefficient of J_μ
    Rational k_tilde;  // 2^{−|μ|} e_μ / t_μ
    Rational k_paper;  // k_mu(μ)
    InterpMode mode = InterpMode::Paper;
};

/// Uses the paper-mode J_μ, or top mode when paper mode is degenerate or has no solution.
DerivedConstant derive_k(const Partition& mu, const HookParams& hp);

/// [J_μ(grid(λ))] for μ, λ in ℋ_d, rows μ, columns λ, both in SizeRevLex order.
/// Rows fall back to top mode as in derive_k.
struct EvaluationMatrix {
    std::vector<Partition> index;
    std::vector<std::vector<Rational>> values;
};

EvaluationMatrix evaluation_matrix(const HookParams& hp, int d);

} // namespace shimura
