#include "oracles.hpp"

#include "shimura/errors.hpp"
#include "shimura/jack_cache.hpp"
#include "shimura/symmfunc.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace shimura;

TEST_CASE("z factors")
{
    CHECK(z_factor(Partition()) == 1);
    CHECK(z_factor(Partition({1, 1, 1})) == 6);
    CHECK(z_factor(Partition({2, 2, 1})) == 8);
    // Σ_λ n!/z_λ = n! (class sizes sum to the group order)
    for (int n = 1; n <= 8; ++n) {
        Rational total = 0;
        for (const auto& l : partitions_of(n)) total += Rational(1) / Rational(z_factor(l));
        CHECK(total == 1);
    }
}

TEST_CASE("power sum to monomial coefficients match explicit expansion")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lam : partitions_of(n)) {
            QPoly p = QPoly::constant(oracle::xvars(n), Rational(1));
            for (int part : lam.parts()) {
                QPoly pr(oracle::xvars(n));
                for (int i = 0; i < n; ++i) {
                    Exponents e(static_cast<std::size_t>(n), 0);
                    e[static_cast<std::size_t>(i)] = part;
                    pr.add_term(e, Rational(1));
                }
                p *= pr;
            }
            for (const auto& mu : partitions_of(n))
                CHECK(Rational(power_to_monomial_coefficient(lam, mu)) == oracle::monomial_coefficient(p, mu));
        }
    }
}

TEST_CASE("monomial_expand")
{
    const QPoly m21 = monomial_expand(Partition({2, 1}), 3);
    CHECK(m21.term_count() == 6);
    CHECK(monomial_expand(Partition({1, 1}), 2).to_string() == "x1*x2");
    CHECK_THROWS_AS(monomial_expand(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("basis conversion round trips through degree 8")
{
    for (int n = 0; n <= 8; ++n) {
        for (const auto& lam : partitions_of(n)) {
            CoeffMap f{{lam, Scalar(1)}};
            const CoeffMap m = basis_convert(f, Basis::PowerSum, Basis::Monomial, n);
            CHECK(basis_convert(m, Basis::Monomial, Basis::PowerSum, n) == f);
            const CoeffMap p = basis_convert(f, Basis::Monomial, Basis::PowerSum, n);
            CHECK(basis_convert(p, Basis::PowerSum, Basis::Monomial, n) == f);
        }
    }
    CHECK_THROWS_AS(basis_convert(CoeffMap{{Partition({3}), Scalar(1)}}, Basis::Monomial, Basis::PowerSum, 2), std::invalid_argument);
}

TEST_CASE("jack at theta = 1 agrees with Jacobi-Trudi Schur functions")
{
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            const CoeffMap m = to_monomial_basis(jack_P(lam, Scalar(1)));
            const QPoly s = oracle::schur_jacobi_trudi(lam, n);
            for (const auto& mu : partitions_of(n)) {
                auto it = m.find(mu);
                const Rational got = it == m.end() ? Rational(0) : it->second.constant_value();
                CHECK(got == oracle::monomial_coefficient(s, mu));
            }
        }
}

TEST_CASE("jack coefficient laws in generic theta")
{
    const Scalar t = Scalar::theta();
    const CoeffMap p2 = to_monomial_basis(jack_P(Partition({2}), t));
    CHECK(p2.at(Partition({2})) == Scalar(1));
    CHECK(p2.at(Partition({1, 1})) == Scalar(2) * t / (t + Scalar(1)));
    for (int n = 1; n <= 5; ++n) {
        // P_{1^n} = m_{1^n} for every θ
        const Partition col(std::vector<int>(static_cast<std::size_t>(n), 1));
        const CoeffMap e = to_monomial_basis(jack_P(col, t));
        CHECK(e.size() == 1);
        CHECK(e.at(col) == Scalar(1));
        // monic and triangular in dominance
        for (const auto& lam : partitions_of(n)) {
            const CoeffMap m = to_monomial_basis(jack_P(lam, t));
            CHECK(m.at(lam) == Scalar(1));
            for (const auto& [mu, c] : m) CHECK(dominates(lam, mu));
        }
    }
    // θ = 1/2 and θ = 2 specialize the generic answer
    for (const auto& half : {Rational(1, 2), Rational(2)}) {
        const CoeffMap g = to_monomial_basis(jack_P(Partition({2, 1}), t));
        const CoeffMap s = to_monomial_basis(jack_P(Partition({2, 1}), Scalar(half)));
        for (const auto& [mu, c] : g) CHECK(s.at(mu) == Scalar(c.evaluate(half)));
    }
}

TEST_CASE("jack orthogonality for generic theta")
{
    const Scalar t = Scalar::theta();
    for (int n = 1; n <= 4; ++n) {
        const auto ps = partitions_of(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                CHECK(jack_inner(jack_P(ps[i], t), jack_P(ps[j], t), t).is_zero());
    }
    CHECK_THROWS_AS(jack_inner(SymFun::power_sum(Partition({1})), SymFun::power_sum(Partition({1})), Scalar(0)), DegenerateParameter);
}

TEST_CASE("symmetric function arithmetic")
{
    const SymFun p1 = SymFun::power_sum(Partition({1}));
    const SymFun p2 = SymFun::power_sum(Partition({2}));
    CHECK((p1 * p1).coeffs().begin()->first == Partition({1, 1}));
    CHECK((p1 * p1 + p2).degree() == 2);
    CHECK((p1 - p1).is_zero());
    CHECK((p2 + p1).homogeneous_part(1) == p1);
}

TEST_CASE("jack cache save and load preserve tables")
{
    jack_P(Partition({3}), Scalar::theta());
    jack_P(Partition({2, 1}), Scalar(Rational(1, 3)));
    const auto path = (std::filesystem::temp_directory_path() / "shimura_cache_test.json").string();
    std::remove(path.c_str());
    jack_cache().save(path);
    JackCache fresh;
    fresh.load(path);
    CHECK(fresh.size() == jack_cache().size());
    const auto a = fresh.find(3, Scalar::theta());
    const auto b = jack_cache().find(3, Scalar::theta());
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*a == *b);
    JackCache missing;
    CHECK_NOTHROW(missing.load(path + ".absent"));
    CHECK(missing.size() == 0);
    std::remove(path.c_str());
}
