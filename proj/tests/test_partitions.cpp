#include "shimura/errors.hpp"
#include "shimura/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace shimura;

namespace {

// Count of partitions of n, by the usual recurrence on the largest part.
long count_partitions(int n, int max_part)
{
    if (n == 0) return 1;
    long total = 0;
    for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions(n - k, k);
    return total;
}

} // namespace

TEST_CASE("partition construction normalizes and validates")
{
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({}).empty());
    CHECK(Partition({0}).empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({4, 2, 2, 1}).size() == 9);
    CHECK(Partition({4, 2, 2, 1}).multiplicity(2) == 2);
    CHECK(Partition({3, 1}).part(5) == 0);
}

TEST_CASE("parse and print")
{
    CHECK(parse_partition("3,1") == Partition({3, 1}));
    CHECK(parse_partition("3, 1") == Partition({3, 1}));
    CHECK(parse_partition("(2,2,1)") == Partition({2, 2, 1}));
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("∅").empty());
    CHECK(Partition({3, 1}).to_string() == "3,1");
    CHECK(Partition().to_string() == "∅");
    CHECK_THROWS(parse_partition("1,2"));
    CHECK_THROWS(parse_partition("a"));
}

TEST_CASE("transpose is an involution preserving size")
{
    for (int n = 0; n <= 9; ++n)
        for (const auto& l : partitions_of(n)) {
            CHECK(transpose(transpose(l)) == l);
            CHECK(transpose(l).size() == n);
            CHECK(transpose(l).length() == l.part(1));
        }
    CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
}

TEST_CASE("partitions_of counts, ordering and uniqueness")
{
    for (int n = 0; n <= 12; ++n) {
        const auto ps = partitions_of(n);
        CHECK(static_cast<long>(ps.size()) == count_partitions(n, n));
        std::set<std::vector<int>> seen;
        for (const auto& p : ps) seen.insert(p.parts());
        CHECK(seen.size() == ps.size());
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(SizeRevLex{}(ps[i - 1], ps[i]));
    }
    const auto four = partitions_of(4);
    REQUIRE(four.size() == 5);
    CHECK(four.front() == Partition({4}));
    CHECK(four.back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("containment and dominance")
{
    CHECK(contains(Partition({3, 2}), Partition({2, 2})));
    CHECK_FALSE(contains(Partition({3}), Partition({1, 1})));
    CHECK(contains(Partition({1}), Partition()));
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    CHECK(dominates(Partition({2, 2}), Partition({2, 1, 1})));
    for (int n = 0; n <= 7; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                // dominance reverses under transpose
                CHECK(dominates(a, b) == dominates(transpose(b), transpose(a)));
                // reverse lex order extends dominance
                if (dominates(a, b) && !(a == b)) CHECK(SizeRevLex{}(a, b));
            }
}

TEST_CASE("hook membership and enumeration")
{
    const HookParams hp(1, 1);
    CHECK(is_hook(Partition({5, 1, 1}), hp));
    CHECK_FALSE(is_hook(Partition({2, 2}), hp));
    const auto h2 = enumerate_hooks(hp, 2, SizeMode::Exact);
    REQUIRE(h2.size() == 2);
    CHECK(h2[0] == Partition({2}));
    CHECK(h2[1] == Partition({1, 1}));
    for (auto p : {1, 2, 3})
        for (auto q : {1, 2, 3}) {
            const HookParams h(p, q);
            for (int d = 0; d <= 7; ++d) {
                const auto upto = enumerate_hooks(h, d, SizeMode::UpTo);
                std::size_t expected = 0;
                for (int n = 0; n <= d; ++n)
                    for (const auto& l : partitions_of(n))
                        if (is_hook(l, h)) ++expected;
                CHECK(upto.size() == expected);
                for (std::size_t i = 1; i < upto.size(); ++i) CHECK(SizeRevLex{}(upto[i - 1], upto[i]));
                // (p,q)-hooks transpose to (q,p)-hooks
                for (const auto& l : upto) CHECK(is_hook(transpose(l), HookParams(q, p)));
            }
        }
    CHECK_THROWS_AS(HookParams(0, 1), std::invalid_argument);
}

TEST_CASE("lambda_natural")
{
    CHECK(lambda_natural(Partition({3, 1, 1}), 1, 1) == std::vector<int>{3, 2});
    CHECK(lambda_natural(Partition({1, 1}), 2, 1) == std::vector<int>{1, 1, 0});
    CHECK(lambda_natural(Partition({2, 2, 1}), 2, 2) == std::vector<int>{2, 2, 1, 0});
    CHECK(lambda_natural(Partition(), 2, 1) == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(lambda_natural(Partition({2, 2}), 1, 1), NotAHook);
    // the entries always sum to |λ|
    const HookParams hp(2, 2);
    for (const auto& l : enumerate_hooks(hp, 8, SizeMode::UpTo)) {
        const auto nat = lambda_natural(l, 2, 2);
        int s = 0;
        for (int v : nat) s += v;
        CHECK(s == l.size());
    }
}
