#include "fa/partitions.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace fa;

namespace {

/* p(n) via Euler's pentagonal recursion */
std::int64_t partition_count(int n)
{
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            int sign = (k % 2) ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m)
                p[m] += sign * p[m - g2];
        }
    return p[n];
}

bool strip_brute(const Partition& lambda, const Partition& mu)
{
    for (int c = 0; c < lambda.part(0); ++c) {
        int boxes = 0;
        for (int r = 0; r < lambda.length(); ++r)
            if (c < lambda.part(r) && c >= mu.part(r))
                ++boxes;
        if (boxes > 1)
            return false;
    }
    return true;
}

std::vector<Partition> up_to(int n)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& p : partitions_of(k))
            out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("partitions_of small cases")
{
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(partitions_of(4).size() == 5);
}

TEST_CASE("partition counts match the pentagonal recursion")
{
    for (int n = 0; n <= 12; ++n)
        CHECK(static_cast<std::int64_t>(partitions_of(n).size()) == partition_count(n));
}

TEST_CASE("partitions_of is sorted, unique and indexed")
{
    for (int n = 0; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].size() == n);
            CHECK(partition_index(ps[i]) == static_cast<int>(i));
            if (i > 0)
                CHECK(ps[i - 1] < ps[i]);
        }
    }
}

TEST_CASE("construction validates parts")
{
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition{2, 1}.str() == "2,1");
    CHECK(Partition{2, 1}.pretty() == "(2,1)");
    CHECK(Partition().str().empty());
}

TEST_CASE("contains examples")
{
    CHECK(contains({2, 1}, {2}));
    CHECK_FALSE(contains({2, 1}, {1, 1, 1}));
    CHECK(contains({3, 3, 1}, {2, 2}));
}

TEST_CASE("contains is a partial order up to size 8")
{
    auto ps = up_to(8);
    for (const auto& a : ps) {
        CHECK(contains(a, a));
        for (const auto& b : ps) {
            if (contains(a, b) && contains(b, a))
                CHECK(a == b);
        }
    }
    auto small = up_to(6);
    for (const auto& a : small)
        for (const auto& b : small)
            if (contains(a, b))
                for (const auto& c : small)
                    if (contains(b, c))
                        CHECK(contains(a, c));
}

TEST_CASE("horizontal strip examples")
{
    CHECK(is_horizontal_strip({2, 1}, {2}));
    CHECK_FALSE(is_horizontal_strip({2, 2}, {1, 1}));
    CHECK(is_horizontal_strip({3, 1}, {2}));
    CHECK_THROWS_AS(is_horizontal_strip({2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("horizontal strips agree with a column count up to size 8")
{
    auto ps = up_to(8);
    for (const auto& l : ps)
        for (const auto& m : ps)
            if (contains(l, m))
                CHECK(is_horizontal_strip(l, m) == strip_brute(l, m));
}

TEST_CASE("hooks")
{
    CHECK(hook(3, 1) == Partition{3});
    CHECK(hook(3, 3) == Partition{1, 1, 1});
    CHECK(hook(5, 2) == Partition{4, 1});
    CHECK_THROWS_AS(hook(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(hook(3, 4), std::invalid_argument);
    CHECK(hook(4, 2).is_hook());
    CHECK_FALSE(Partition({2, 2}).is_hook());
}

TEST_CASE("conjugation, dimensions and class sizes")
{
    CHECK(Partition({3, 1}).conjugate() == Partition{2, 1, 1});
    for (int n = 0; n <= 8; ++n) {
        std::int64_t sum_sq = 0, classes = 0;
        for (const auto& p : partitions_of(n)) {
            CHECK(p.conjugate().conjugate() == p);
            CHECK(specht_dim(p) == specht_dim(p.conjugate()));
            sum_sq += specht_dim(p) * specht_dim(p);
            classes += class_size(p);
            CHECK(class_size(p) * centralizer_order(p) == factorial(n));
        }
        CHECK(sum_sq == factorial(n));
        CHECK(classes == factorial(n));
    }
    CHECK(schur_dim({2, 1}, 3) == 8);
    CHECK(schur_dim({1, 1}, 3) == 3);
    CHECK(schur_dim({2}, 3) == 6);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
}
