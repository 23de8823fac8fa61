#include "fa/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace fa;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int rank)
{
    std::uniform_int_distribution<int> d(-3, 3);
    RationalMatrix a(rows, rank), b(rank, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rank; ++j)
            a(i, j) = d(rng);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < cols; ++j) {
            b(i, j) = Rational(d(rng), 1 + (i + j) % 3);
            b(i, j).canonicalize();
        }
    return a * b;
}

struct ModularGuard {
    ~ModularGuard() { set_modular_elimination(true); }
};

} // namespace

TEST_CASE("rank, kernel and solve on a small matrix")
{
    RationalMatrix m(2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
    CHECK(m.rank() == 1);
    RationalMatrix k = m.kernel();
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    auto x = m.solve({6, 12});
    REQUIRE(x);
    CHECK(m.apply(*x) == std::vector<Rational>{6, 12});
    CHECK_FALSE(m.solve({1, 0}));
}

TEST_CASE("modular and exact elimination agree")
{
    ModularGuard guard;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 3 + trial % 6, cols = 4 + trial % 5;
        int r = 1 + trial % std::min(rows, cols);
        RationalMatrix m = random_matrix(rng, rows, cols, r);
        SparseRows s = SparseRows::from_dense(m);
        set_modular_elimination(true);
        KernelResult fast = kernel(s);
        RowSpaceResult fast_rows = row_space(s);
        KernelResult exact = kernel_exact(s);
        RowSpaceResult exact_rows = row_space_exact(s);
        CHECK(fast.basis == exact.basis);
        CHECK(fast.free_cols == exact.free_cols);
        CHECK(fast_rows.rref == exact_rows.rref);
        CHECK(fast_rows.pivots == exact_rows.pivots);
        CHECK(static_cast<int>(exact.free_cols.size()) == cols - m.rank());
        CHECK((m * exact.basis).is_zero());
        for (size_t j = 0; j < exact.free_cols.size(); ++j)
            for (size_t k = 0; k < exact.free_cols.size(); ++k)
                CHECK(exact.basis(exact.free_cols[j], k) == (j == k ? 1 : 0));
    }
}

TEST_CASE("large rationals survive elimination")
{
    RationalMatrix m(2, 2);
    m(0, 0) = Rational("123456789123456789/7");
    m(0, 1) = 1;
    m(1, 0) = Rational("987654321987654321/11");
    m(1, 1) = Rational("1/3");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m(i, j).canonicalize();
    CHECK(m.rank() == 2);
    auto x = m.solve({1, 1});
    REQUIRE(x);
    CHECK(m.apply(*x) == std::vector<Rational>{1, 1});
}

TEST_CASE("sparse helpers")
{
    SparseVec a = sparse_normalize({{3, 1}, {1, 2}, {3, -1}});
    CHECK(a == SparseVec{{1, 2}});
    sparse_add(a, {{0, 1}, {1, -1}}, 2);
    CHECK(a == SparseVec{{0, 2}});
}
