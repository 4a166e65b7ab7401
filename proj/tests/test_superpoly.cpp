#include "shimura/errors.hpp"
#include "shimura/superpoly.hpp"

#include <doctest.h>

using namespace shimura;

TEST_CASE("variable lists")
{
    const HookParams hp(2, 1);
    CHECK(a_vars(hp) == std::vector<std::string>{"x1", "x2", "y1"});
    CHECK(h_vars(hp) == std::vector<std::string>{"x+1", "x+2", "x-1", "x-2", "y+1", "y-1"});
}

TEST_CASE("power sums")
{
    const HookParams hp(1, 1);
    CHECK(power_sum_a(hp, 2).to_string() == "x1^2 - y1^2");
    CHECK(power_sum_a(hp, 3).to_string() == "x1^3 + y1^3");
    CHECK_THROWS_AS(signed_power_sum({"a"}, 1, 1, 2), VariableMismatch);
}

TEST_CASE("phi_theta sends p_r to the deformed power sum")
{
    const HookParams hp(1, 2);
    const Scalar t = Scalar::theta();
    const ThetaPoly img = phi_theta(SymFun::power_sum(Partition({3})), hp, t);
    CHECK(img.coefficient({3, 0, 0}) == Scalar(1));
    CHECK(img.coefficient({0, 3, 0}) == -t.inverse());
    CHECK(img.coefficient({0, 0, 3}) == -t.inverse());
    CHECK_THROWS_AS(phi_theta(SymFun::power_sum(Partition({1})), hp, Scalar(0)), ZeroTheta);
    CHECK_THROWS_AS(super_jack(Partition({1}), hp, Scalar(0)), ZeroTheta);
}

TEST_CASE("super jack at theta = 1 versus generic theta specialized")
{
    const HookParams hp(2, 1);
    for (const auto& lam : enumerate_hooks(hp, 3, SizeMode::UpTo)) {
        const ThetaPoly g = super_jack(lam, hp, Scalar::theta());
        const QPoly& one = super_jack_at_one(lam, hp);
        QPoly spec(a_vars(hp));
        for (const auto& [e, c] : g.terms()) spec.add_term(e, c.evaluate(1));
        CHECK(spec == one);
    }
}

TEST_CASE("super jack at theta = 1 is supersymmetric and vanishes off hooks")
{
    for (const auto& hp : {HookParams(1, 1), HookParams(2, 1)}) {
        for (int n = 0; n <= 4; ++n)
            for (const auto& lam : partitions_of(n)) {
                const QPoly& f = super_jack_at_one(lam, hp);
                CHECK(f.is_zero() == !is_hook(lam, hp));
                if (!f.is_zero()) {
                    CHECK(is_supersymmetric(f, hp, SuperVariant::Plain));
                    CHECK(f.degree() == n);
                }
            }
    }
    // SP_(1) = x1 + x2 - y1 at θ = 1
    CHECK(super_jack_at_one(Partition({1}), HookParams(2, 1)).to_string() == "x1 + x2 - y1");
}

TEST_CASE("even supersymmetry detector")
{
    const HookParams hp(1, 1);
    const auto v = a_vars(hp);
    QPoly good(v);
    good.add_term({2, 0}, Rational(1));
    good.add_term({0, 2}, Rational(-1));
    CHECK(is_even_supersymmetric(good, hp));
    QPoly odd(v);
    odd.add_term({1, 0}, Rational(1));
    odd.add_term({0, 1}, Rational(1));
    CHECK_FALSE(is_even_supersymmetric(odd, hp));
    QPoly plain(v);
    plain.add_term({2, 0}, Rational(1));
    plain.add_term({0, 2}, Rational(1));
    CHECK_FALSE(is_even_supersymmetric(plain, hp));
    const HookParams hp2(2, 1);
    QPoly asym(a_vars(hp2));
    asym.add_term({2, 0, 0}, Rational(1));
    CHECK_FALSE(is_even_supersymmetric(asym, hp2));
    CHECK_THROWS_AS(is_even_supersymmetric(good, hp2), VariableMismatch);
}

TEST_CASE("squared basis of the even ring")
{
    for (const auto& hp : {HookParams(1, 1), HookParams(1, 2), HookParams(2, 2)}) {
        const auto basis = lambda0_basis(hp, 3);
        CHECK(basis.size() == enumerate_hooks(hp, 3, SizeMode::UpTo).size());
        for (const auto& [nu, f] : basis) {
            CHECK(is_even_supersymmetric(f, hp));
            CHECK(f.degree() == 2 * nu.size());
            CHECK(f == squared_substitution(super_jack_at_one(nu, hp)));
        }
    }
}

TEST_CASE("restriction map")
{
    const HookParams hp(1, 1);
    CHECK(res_map(power_sum_h(hp, 2), hp).to_string() == "1/2*x1^2 - 1/2*y1^2");
    CHECK(res_map(power_sum_h(hp, 3), hp).is_zero());
    const HookParams hp2(2, 2);
    for (int r = 1; r <= 6; ++r) {
        const QPoly img = res_map(power_sum_h(hp2, r), hp2);
        if (r % 2) CHECK(img.is_zero());
        else CHECK(img == power_sum_a(hp2, r) * rational_power(Rational(1, 2), static_cast<unsigned>(r - 1)));
    }
    CHECK_THROWS_AS(res_map(power_sum_a(hp, 2), hp), VariableMismatch);
    // multiplicative
    const QPoly f = power_sum_h(hp, 2), g = power_sum_h(hp, 4);
    CHECK(res_map(f * g, hp) == res_map(f, hp) * res_map(g, hp));
}
