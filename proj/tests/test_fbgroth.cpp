#include "fa/fbgroth.hpp"

#include <doctest.h>

#include <random>

using namespace fa;

namespace {

VirtualFB random_fb(std::mt19937_64& rng, int trunc)
{
    std::uniform_int_distribution<int> d(-2, 2);
    VirtualFB r(trunc);
    for (int n = 0; n <= trunc; ++n)
        for (const auto& p : partitions_of(n))
            if (rng() % 3 == 0)
                r.add(p, d(rng));
    return r;
}

VirtualFB fb(int trunc, std::initializer_list<std::pair<Partition, std::int64_t>> terms)
{
    VirtualFB r(trunc);
    for (const auto& [p, c] : terms)
        r.add(p, c);
    return r;
}

} // namespace

TEST_CASE("day convolution examples")
{
    VirtualFB unit = VirtualFB::unit(5);
    std::mt19937_64 rng(1);
    VirtualFB a = random_fb(rng, 5);
    CHECK(day(unit, a) == a);
    CHECK(day(a, unit) == a);
    CHECK(day(VirtualFB::trivial(6), series_S(0, 6)) == VirtualFB::unit(6));
    CHECK(day(VirtualFB::sign(1, 3), VirtualFB::sign(1, 3)) == fb(3, {{{2}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("day convolution is commutative and associative")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        VirtualFB a = random_fb(rng, 6), b = random_fb(rng, 6), c = random_fb(rng, 6);
        CHECK(day(a, b) == day(b, a));
        CHECK(day(day(a, b), c) == day(a, day(b, c)));
    }
}

TEST_CASE("pointwise products")
{
    CHECK(pointwise(VirtualFB::sign(3, 3), VirtualFB::sign(3, 3)) == fb(3, {{{3}, 1}}));
    CHECK(pointwise(fb(3, {{{2, 1}, 1}}), VirtualFB::sign(3, 3)) == fb(3, {{{2, 1}, 1}}));
    std::mt19937_64 rng(9);
    VirtualFB a = random_fb(rng, 5);
    CHECK(pointwise(VirtualFB::trivial(5), a) == a);
}

TEST_CASE("the series S and H")
{
    CHECK(series_S(0, 2) == fb(2, {{Partition(), 1}, {{1}, -1}, {{1, 1}, 1}}));
    CHECK(series_S(2, 3) == fb(3, {{{1, 1}, 1}, {{1, 1, 1}, -1}}));
    for (int k = 0; k <= 5; ++k) {
        VirtualFB s = series_S(k, 6);
        for (int m = 0; m < k; ++m)
            CHECK(s.dimension(m) == 0);
        CHECK(s.degree(k) == IrrDecomposition::single(column(k)));
    }
    CHECK(series_H(0, 4) == VirtualFB::unit(4));
    CHECK(series_H(1, 3) == fb(3, {{{1}, 1}, {{2}, 1}, {{3}, 1}}));
    CHECK(series_H(2, 4) == fb(4, {{{1, 1}, 1}, {{2, 1}, 1}, {{3, 1}, 1}}));
}

TEST_CASE("consecutive S series sum to a sign class")
{
    for (int N = 1; N <= 10; ++N)
        for (int k = 0; k < N; ++k)
            CHECK(series_S(k, N) + series_S(k + 1, N) == VirtualFB::sign(k, N));
}

TEST_CASE("consecutive H series sum to a sign convolved with triv")
{
    for (int N = 1; N <= 10; ++N)
        for (int k = 0; k <= std::min(6, N - 1); ++k)
            CHECK(series_H(k, N) + series_H(k + 1, N) == day(VirtualFB::sign(k, N), VirtualFB::trivial(N)));
}

TEST_CASE("inverting triv")
{
    CHECK(invert_triv(VirtualFB::trivial(7)) == VirtualFB::unit(7));
    CHECK(invert_triv(VirtualFB::unit(7)) == series_S(0, 7));
    for (int N = 0; N <= 10; ++N)
        for (int k = 0; k <= std::min(8, N); ++k)
            CHECK(invert_triv(series_H(k, N)) == series_S(k, N));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        VirtualFB a = random_fb(rng, 8);
        CHECK(invert_triv(day(a, VirtualFB::trivial(8))) == a);
    }
}

TEST_CASE("bimodule operations")
{
    VirtualFB left = VirtualFB::sign(1, 3);
    VirtualFBBimod ext = VirtualFBBimod::external(left, VirtualFB::single({2}, 3));
    VirtualFBBimod conv = convolve_right(ext, VirtualFB::sign(1, 3));
    VirtualFBBimod expect(3, 3);
    expect.add({1}, {2, 1}, 1);
    expect.add({1}, {3}, 1);
    CHECK(conv == expect);
    CHECK(conv.block_dimension(1, 3) == 3);
    CHECK(conv.right_slice({1}) == fb(3, {{{2, 1}, 1}, {{3}, 1}}));
    CHECK(conv.left_slice({3}) == fb(3, {{{1}, 1}}));

    VirtualFB a = fb(3, {{{2}, 2}, {{1}, -1}});
    VirtualFB b = fb(3, {{{1, 1}, 3}});
    VirtualFBBimod e = VirtualFBBimod::external(a, b);
    CHECK(e({2}, {1, 1}) == 6);
    CHECK(e({1}, {1, 1}) == -3);
    CHECK((e - e).is_zero());
    CHECK(convolve_left(e, VirtualFB::unit(3)) == e);
}
