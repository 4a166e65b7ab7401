#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace shimura {

// Weakly decreasing sequence of positive parts. Trailing zeros are dropped
// on construction, so structural equality is mathematical equality.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument on negative or increasing parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// 1-based row length λ_i; zero past the last part.
    [[nodiscard]] int part(int i) const noexcept
    {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    [[nodiscard]] Partition transpose() const;

    /// Multiplicity of the part value v.
    [[nodiscard]] int multiplicity(int v) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;

    /// "3,1"; the empty partition prints as "∅".
    [[nodiscard]] std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Accepts "3,1", "3, 1", "" and "∅".
Partition parse_partition(std::string_view text);

struct HookParams {
    int p = 1;
    int q = 1;

    /// Throws std::invalid_argument unless p, q >= 1.
    HookParams(int p_, int q_);

    friend bool operator==(const HookParams&, const HookParams&) = default;
};

// Canonical order: by size, then reverse lexicographic ((2) before (1,1)).
struct SizeRevLex {
    bool operator()(const Partition& a, const Partition& b) const noexcept;
};

Partition transpose(const Partition& lambda);

/// λ ⊇ μ, i.e. λ_i >= μ_i for all i.
bool contains(const Partition& lambda, const Partition& mu);

/// Dominance order λ >= μ; only meaningful for |λ| = |μ|.
bool dominates(const Partition& lambda, const Partition& mu);

/// λ_{p+1} <= q.
bool is_hook(const Partition& lambda, const HookParams& hp);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

enum class SizeMode { Exact, UpTo };

/// Hook partitions of size d (Exact) or size <= d (UpTo), in SizeRevLex order.
std::vector<Partition> enumerate_hooks(const HookParams& hp, int d, SizeMode mode);

/// (λ_1..λ_m, <λ'_1 - m>..<λ'_n - m>) with <x> = max(x, 0).
/// Throws NotAHook when λ is not an (m, n)-hook partition.
std::vector<int> lambda_natural(const Partition& lambda, int m, int n);

} // namespace shimura
