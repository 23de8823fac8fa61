#include "fa/oracle/maps.hpp"
#include "fa/symrep.hpp"

#include <doctest.h>

#include <random>

using namespace fa;
using fa::oracle::all_maps;
using fa::oracle::all_permutations;
using fa::oracle::cycle_type;

namespace {

IrrDecomposition random_virtual(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> d(-2, 2);
    IrrDecomposition r;
    r.n = n;
    for (const auto& p : partitions_of(n))
        r.add(p, d(rng));
    return r;
}

ClassFunction triv_char(int n)
{
    return IrrDecomposition::single(row(n)).character();
}

} // namespace

TEST_CASE("small character tables")
{
    auto t1 = character_table(1);
    CHECK(t1->chi == std::vector<std::vector<std::int64_t>>{{1}});
    auto t2 = character_table(2);
    CHECK(t2->chi[partition_index({2})] == std::vector<std::int64_t>{1, 1});
    CHECK(t2->chi[partition_index({1, 1})][partition_index({2})] == -1);
}

TEST_CASE("standard character of S_3 by brute force traces")
{
    auto t = character_table(3);
    for (const auto& p : all_permutations(3)) {
        std::int64_t fixed = 0;
        for (int i = 0; i < 3; ++i)
            fixed += p[i] == i;
        Partition mu = cycle_type(p);
        CHECK(t->chi[partition_index({2, 1})][partition_index(mu)] == fixed - 1);
    }
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    CHECK(mn_character({2, 1}, {3}) == -1);
}

TEST_CASE("orthogonality relations up to n = 8")
{
    for (int n = 0; n <= 8; ++n) {
        auto t = character_table(n);
        const size_t k = t->partitions.size();
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b) {
                std::int64_t rows = 0, cols = 0;
                for (size_t c = 0; c < k; ++c) {
                    rows += t->class_sizes[c] * t->chi[a][c] * t->chi[b][c];
                    cols += t->chi[c][a] * t->chi[c][b];
                }
                CHECK(rows == (a == b ? factorial(n) : 0));
                CHECK(cols == (a == b ? centralizer_order(t->partitions[a]) : 0));
            }
    }
}

TEST_CASE("decomposition examples")
{
    CHECK(decompose_integral(ClassFunction::regular(3)) ==
          IrrDecomposition{3, {{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}});
    CHECK(decompose_integral(ClassFunction::trivial(4)) == IrrDecomposition::single({4}));
    ClassFunction twisted = ClassFunction::irreducible({2, 1}) * ClassFunction::sign(3);
    CHECK(decompose_integral(twisted) == IrrDecomposition::single({2, 1}));
    ClassFunction half = ClassFunction::trivial(2).scaled(Rational(1, 2));
    CHECK_FALSE(decompose(half).integral);
    CHECK_THROWS_AS(decompose_integral(half), std::domain_error);
}

TEST_CASE("decompose inverts reconstruction up to n = 8")
{
    std::mt19937_64 rng(11);
    for (int n = 0; n <= 8; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            IrrDecomposition d = random_virtual(rng, n);
            CHECK(decompose_integral(d.character()) == d);
        }
}

TEST_CASE("induction products")
{
    IrrDecomposition t1 = IrrDecomposition::single({1});
    CHECK(induction_product(t1, t1) == IrrDecomposition{2, {{{2}, 1}, {{1, 1}, 1}}});
    IrrDecomposition unit = IrrDecomposition::single(Partition());
    IrrDecomposition a = IrrDecomposition{3, {{{2, 1}, 2}, {{3}, -1}}};
    CHECK(induction_product(a, unit) == a);
    CHECK(induction_product(unit, a) == a);
}

TEST_CASE("Pieri rule for a row times a column, n <= 7")
{
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            IrrDecomposition lhs = induction_product(IrrDecomposition::single(row(n - k)),
                                                     IrrDecomposition::single(column(k)));
            IrrDecomposition rhs = IrrDecomposition::single(hook(n, k));
            if (k < n)
                rhs.add(hook(n, k + 1), 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("induction is commutative and associative")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        int a = trial % 3, b = 1 + trial % 2, c = 2 - trial % 3;
        auto x = random_virtual(rng, a), y = random_virtual(rng, b), z = random_virtual(rng, c);
        CHECK(induction_product(x, y) == induction_product(y, x));
        CHECK(induction_product(induction_product(x, y), z) == induction_product(x, induction_product(y, z)));
    }
}

TEST_CASE("Kronecker products, sign twists and sign coinvariants")
{
    IrrDecomposition s3 = IrrDecomposition::single({1, 1, 1});
    CHECK(kronecker(s3, s3) == IrrDecomposition::single({3}));
    CHECK(kronecker(IrrDecomposition::single({2, 1}), s3) == IrrDecomposition::single({2, 1}));
    CHECK(kronecker(IrrDecomposition::single({3}), IrrDecomposition::single({2, 1})) ==
          IrrDecomposition::single({2, 1}));
    CHECK(sign_twist(IrrDecomposition::single({3, 1})) == IrrDecomposition::single({2, 1, 1}));
    for (int n = 1; n <= 5; ++n)
        CHECK(sgn_coinvariants(decompose_integral(ClassFunction::regular(n))) == 1);
    CHECK(sgn_coinvariants(IrrDecomposition::single({2})) == 0);
    CHECK(sgn_coinvariants(IrrDecomposition::single({2, 1})) == 0);
    CHECK(sgn_coinvariants(IrrDecomposition::single(Partition())) == 1);
}

TEST_CASE("map characters")
{
    BiClassFunction f = perm_character_maps(1, 2, false);
    CHECK(f.at({1}, {1, 1}) == 2);
    CHECK(f.at({1}, {2}) == 0);
    BimodDecomposition d = decompose_bimodule(f);
    CHECK(d == BimodDecomposition{{{{1}, {2}}, 1}, {{{1}, {1, 1}}, 1}});
    CHECK(perm_character_maps(3, 2, true).total() == 6);
    for (int n = 1; n <= 4; ++n) {
        BimodDecomposition bij = decompose_bimodule(perm_character_maps(n, n, true));
        BimodDecomposition regular;
        for (const auto& p : partitions_of(n))
            regular[{p, p}] = 1;
        CHECK(bij == regular);
    }
}

TEST_CASE("fixed point counts agree with enumeration")
{
    for (int s = 0; s <= 4; ++s)
        for (int t = 0; t <= 4; ++t)
            for (const auto& a : partitions_of(s))
                for (const auto& b : partitions_of(t)) {
                    CHECK(surjection_fixed_points_ie(a, b) == surjection_fixed_points_enum(a, b));
                    auto sigma = oracle::perm_of_type(a);
                    auto tau = oracle::perm_of_type(b);
                    std::int64_t fixed = 0;
                    for (const auto& f : all_maps(s, t)) {
                        bool ok = true;
                        for (int i = 0; i < s && ok; ++i)
                            ok = f.img[sigma[i]] == tau[f.img[i]];
                        fixed += ok;
                    }
                    CHECK(map_fixed_points(a, b) == fixed);
                }
}

TEST_CASE("injections realize induction from the trivial module")
{
    for (int s = 0; s <= 3; ++s)
        for (int n = s; n <= 6; ++n) {
            for (const auto& m : partitions_of(s)) {
                /* kFI(s,n) (x)_{S_s} S_m, from fixed points of injections */
                ClassFunction induced(n);
                for (const auto& beta : partitions_of(n)) {
                    auto tau = oracle::perm_of_type(beta);
                    Rational acc = 0;
                    for (const auto& sigma : all_permutations(s)) {
                        std::int64_t fixed = 0;
                        for (const auto& f : all_maps(s, n)) {
                            if (!f.is_injective())
                                continue;
                            bool ok = true;
                            for (int i = 0; i < s && ok; ++i)
                                ok = f.img[sigma[i]] == tau[f.img[i]];
                            fixed += ok;
                        }
                        acc += fixed * mn_character(m, cycle_type(sigma));
                    }
                    induced[beta] = acc / factorial(s);
                }
                CHECK(decompose_integral(induced) ==
                      induction_product(IrrDecomposition::single(row(n - s)), IrrDecomposition::single(m)));
            }
        }
}

TEST_CASE("character table limit")
{
    CHECK(character_table_limit() >= 12);
    CHECK_THROWS_AS(character_table(character_table_limit() + 1), std::out_of_range);
    CHECK(decompose_integral(triv_char(5)) == IrrDecomposition::single({5}));
}
