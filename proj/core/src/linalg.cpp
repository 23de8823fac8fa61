#include "fa/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace fa {

void sparse_add(SparseVec& acc, const SparseVec& v, const Rational& scale)
{
    if (v.empty() || scale == 0)
        return;
    SparseVec out;
    out.reserve(acc.size() + v.size());
    size_t i = 0, j = 0;
    while (i < acc.size() || j < v.size()) {
        if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
            out.push_back(std::move(acc[i++]));
        } else if (i == acc.size() || v[j].first < acc[i].first) {
            out.emplace_back(v[j].first, v[j].second * scale);
            ++j;
        } else {
            Rational s = acc[i].second + v[j].second * scale;
            if (s != 0)
                out.emplace_back(acc[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    acc = std::move(out);
}

SparseVec sparse_normalize(std::vector<std::pair<int, Rational>> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [idx, c] : terms) {
        if (!out.empty() && out.back().first == idx)
            out.back().second += c;
        else
            out.emplace_back(idx, std::move(c));
        if (out.back().second == 0)
            out.pop_back();
    }
    return out;
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    RationalMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < other.cols_; ++j)
                if (other(k, j) != 0)
                    r(i, j) += a * other(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    RationalMatrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i)
        r.data_[i] += other.data_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const
{
    return *this + other.scaled(-1);
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const
{
    RationalMatrix r = *this;
    for (auto& x : r.data_)
        x *= c;
    return r;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool RationalMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Rational RationalMatrix::trace() const
{
    Rational t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<Rational> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0 && (*this)(i, j) != 0)
                r[i] += (*this)(i, j) * v[j];
    return r;
}

std::vector<Rational> RationalMatrix::column(int j) const
{
    std::vector<Rational> c(rows_);
    for (int i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

void RationalMatrix::set_column(int j, const std::vector<Rational>& v)
{
    for (int i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

void RationalMatrix::set_column(int j, const SparseVec& v)
{
    for (int i = 0; i < rows_; ++i)
        (*this)(i, j) = 0;
    for (const auto& [i, c] : v)
        (*this)(i, j) = c;
}

int RationalMatrix::rank() const
{
    return static_cast<int>(row_space(SparseRows::from_dense(*this)).pivots.size());
}

RationalMatrix RationalMatrix::kernel() const
{
    return fa::kernel(SparseRows::from_dense(*this)).basis;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& b) const
{
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("solve: dimension mismatch");
    /* kernel of [A | -b] with last coordinate 1 */
    RationalMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, cols_) = -b[i];
    }
    KernelResult k = fa::kernel(SparseRows::from_dense(aug));
    for (size_t j = 0; j < k.free_cols.size(); ++j)
        if (k.free_cols[j] == cols_) {
            std::vector<Rational> x(cols_);
            for (int i = 0; i < cols_; ++i)
                x[i] = k.basis(i, static_cast<int>(j));
            return x;
        }
    return std::nullopt;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& top, const RationalMatrix& bottom)
{
    if (top.cols_ != bottom.cols_)
        throw std::invalid_argument("vstack: column mismatch");
    RationalMatrix r(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), r.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), r.data_.begin() + top.data_.size());
    return r;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& left, const RationalMatrix& right)
{
    if (left.rows_ != right.rows_)
        throw std::invalid_argument("hstack: row mismatch");
    RationalMatrix r(left.rows_, left.cols_ + right.cols_);
    for (int i = 0; i < left.rows_; ++i) {
        for (int j = 0; j < left.cols_; ++j)
            r(i, j) = left(i, j);
        for (int j = 0; j < right.cols_; ++j)
            r(i, left.cols_ + j) = right(i, j);
    }
    return r;
}

SparseRows SparseRows::from_dense(const RationalMatrix& m)
{
    SparseRows s;
    s.cols = m.cols();
    s.rows.resize(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                s.rows[i].emplace_back(j, m(i, j));
    return s;
}

void SparseRows::append(const RationalMatrix& block, int col_offset)
{
    for (int i = 0; i < block.rows(); ++i) {
        SparseVec r;
        for (int j = 0; j < block.cols(); ++j)
            if (block(i, j) != 0)
                r.emplace_back(col_offset + j, block(i, j));
        rows.push_back(std::move(r));
    }
}

namespace {

std::atomic<bool> g_modular{true};

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b)
{
    __uint128_t z = static_cast<__uint128_t>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(z & kPrime) + static_cast<std::uint64_t>(z >> 61);
    return r >= kPrime ? r - kPrime : r;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b)
{
    return a >= b ? a - b : a + kPrime - b;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_inv(std::uint64_t a)
{
    return mod_pow(a, kPrime - 2);
}

bool to_mod(const Rational& q, std::uint64_t& out)
{
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0)
        return false;
    out = mod_mul(num, mod_inv(den));
    return true;
}

/* n/d with |n|, d <= sqrt(p/2) and n/d = a mod p */
bool reconstruct(std::uint64_t a, Rational& out)
{
    if (a == 0) {
        out = 0;
        return true;
    }
    const __int128 bound = (__int128(1) << 30) - 1; /* n*d < p/2 */
    __int128 r0 = kPrime, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || (t1 < 0 ? -t1 : t1) > bound)
        return false;
    long long n = static_cast<long long>(r1), d = static_cast<long long>(t1);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    out = Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    out.canonicalize();
    return true;
}

struct ModEchelon {
    std::vector<std::vector<std::uint64_t>> rows; /* reduced, pivot entry 1 */
    std::vector<int> pivots;
};

/* Incremental Gauss-Jordan.  Returns false when a denominator vanishes mod p. */
bool mod_rref(const SparseRows& a, ModEchelon& e)
{
    const int n = a.cols;
    std::vector<std::uint64_t> row(n);
    for (const auto& src : a.rows) {
        std::fill(row.begin(), row.end(), 0);
        bool nonzero = false;
        for (const auto& [j, c] : src) {
            if (!to_mod(c, row[j]))
                return false;
            nonzero |= row[j] != 0;
        }
        if (!nonzero)
            continue;
        for (size_t k = 0; k < e.pivots.size(); ++k) {
            std::uint64_t c = row[e.pivots[k]];
            if (c == 0)
                continue;
            const auto& pr = e.rows[k];
            for (int j = 0; j < n; ++j)
                if (pr[j])
                    row[j] = mod_sub(row[j], mod_mul(c, pr[j]));
        }
        int p = -1;
        for (int j = 0; j < n; ++j)
            if (row[j]) {
                p = j;
                break;
            }
        if (p < 0)
            continue;
        std::uint64_t inv = mod_inv(row[p]);
        for (int j = p; j < n; ++j)
            if (row[j])
                row[j] = mod_mul(row[j], inv);
        for (auto& pr : e.rows) {
            std::uint64_t c = pr[p];
            if (c == 0)
                continue;
            for (int j = 0; j < n; ++j)
                if (row[j])
                    pr[j] = mod_sub(pr[j], mod_mul(c, row[j]));
        }
        e.rows.push_back(row);
        e.pivots.push_back(p);
        if (static_cast<int>(e.pivots.size()) == n)
            break;
    }
    std::vector<size_t> order(e.pivots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return e.pivots[x] < e.pivots[y]; });
    ModEchelon sorted;
    for (size_t k : order) {
        sorted.rows.push_back(std::move(e.rows[k]));
        sorted.pivots.push_back(e.pivots[k]);
    }
    e = std::move(sorted);
    return true;
}

/* integer rows: each row scaled by the lcm of its denominators */
std::vector<std::vector<std::pair<int, mpz_class>>> integral_rows(const SparseRows& a)
{
    std::vector<std::vector<std::pair<int, mpz_class>>> out(a.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        mpz_class l = 1;
        for (const auto& [j, c] : a.rows[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        for (const auto& [j, c] : a.rows[i])
            out[i].emplace_back(j, mpz_class(c.get_num() * (l / c.get_den())));
    }
    return out;
}

std::vector<mpz_class> integral_vector(const std::vector<Rational>& v)
{
    mpz_class l = 1;
    for (const auto& c : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = v[i].get_num() * (l / v[i].get_den());
    return out;
}

struct ExactEchelon {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivots;
};

ExactEchelon exact_rref(const SparseRows& a)
{
    const int n = a.cols;
    ExactEchelon e;
    std::vector<Rational> row(n);
    for (const auto& src : a.rows) {
        std::fill(row.begin(), row.end(), 0);
        if (src.empty())
            continue;
        for (const auto& [j, c] : src)
            row[j] = c;
        for (size_t k = 0; k < e.pivots.size(); ++k) {
            Rational c = row[e.pivots[k]];
            if (c == 0)
                continue;
            const auto& pr = e.rows[k];
            for (int j = 0; j < n; ++j)
                if (pr[j] != 0)
                    row[j] -= c * pr[j];
        }
        int p = -1;
        for (int j = 0; j < n; ++j)
            if (row[j] != 0) {
                p = j;
                break;
            }
        if (p < 0)
            continue;
        Rational inv = 1 / row[p];
        for (int j = p; j < n; ++j)
            if (row[j] != 0)
                row[j] *= inv;
        for (auto& pr : e.rows) {
            Rational c = pr[p];
            if (c == 0)
                continue;
            for (int j = 0; j < n; ++j)
                if (row[j] != 0)
                    pr[j] -= c * row[j];
        }
        e.rows.push_back(row);
        e.pivots.push_back(p);
        if (static_cast<int>(e.pivots.size()) == n)
            break;
    }
    std::vector<size_t> order(e.pivots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return e.pivots[x] < e.pivots[y]; });
    ExactEchelon sorted;
    for (size_t k : order) {
        sorted.rows.push_back(std::move(e.rows[k]));
        sorted.pivots.push_back(e.pivots[k]);
    }
    return sorted;
}

std::vector<int> free_columns(int n, const std::vector<int>& pivots)
{
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots)
        is_pivot[p] = 1;
    std::vector<int> f;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j])
            f.push_back(j);
    return f;
}

bool try_modular_kernel(const SparseRows& a, KernelResult& out)
{
    ModEchelon e;
    if (!mod_rref(a, e))
        return false;
    const int n = a.cols;
    auto free = free_columns(n, e.pivots);
    RationalMatrix basis(n, static_cast<int>(free.size()));
    auto irows = integral_rows(a);
    for (size_t k = 0; k < free.size(); ++k) {
        std::vector<Rational> v(n);
        v[free[k]] = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i) {
            std::uint64_t x = e.rows[i][free[k]];
            if (x == 0)
                continue;
            Rational q;
            if (!reconstruct(mod_sub(0, x), q))
                return false;
            v[e.pivots[i]] = q;
        }
        auto iv = integral_vector(v);
        mpz_class acc;
        for (const auto& r : irows) {
            acc = 0;
            for (const auto& [j, c] : r)
                if (iv[j] != 0)
                    acc += c * iv[j];
            if (acc != 0)
                return false;
        }
        basis.set_column(static_cast<int>(k), v);
    }
    out.basis = std::move(basis);
    out.free_cols = std::move(free);
    out.pivot_cols = e.pivots;
    out.certified_modular = true;
    return true;
}

bool try_modular_row_space(const SparseRows& a, RowSpaceResult& out)
{
    ModEchelon e;
    if (!mod_rref(a, e))
        return false;
    const int n = a.cols;
    const int r = static_cast<int>(e.pivots.size());
    RationalMatrix rref(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j)
            if (e.rows[i][j] && !reconstruct(e.rows[i][j], rref(i, j)))
                return false;
    /* every input row must be the combination of rref rows read off the pivots */
    std::vector<Rational> acc(n);
    for (const auto& src : a.rows) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [j, c] : src)
            acc[j] = c;
        for (int i = 0; i < r; ++i) {
            Rational c = acc[e.pivots[i]];
            if (c == 0)
                continue;
            for (int j = 0; j < n; ++j)
                if (rref(i, j) != 0)
                    acc[j] -= c * rref(i, j);
        }
        for (const auto& x : acc)
            if (x != 0)
                return false;
    }
    out.rref = std::move(rref);
    out.pivots = e.pivots;
    out.certified_modular = true;
    return true;
}

} // namespace

void set_modular_elimination(bool enabled)
{
    g_modular = enabled;
}

KernelResult kernel_exact(const SparseRows& a)
{
    ExactEchelon e = exact_rref(a);
    const int n = a.cols;
    KernelResult out;
    out.free_cols = free_columns(n, e.pivots);
    out.pivot_cols = e.pivots;
    out.basis = RationalMatrix(n, static_cast<int>(out.free_cols.size()));
    for (size_t k = 0; k < out.free_cols.size(); ++k) {
        int f = out.free_cols[k];
        out.basis(f, static_cast<int>(k)) = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i)
            out.basis(e.pivots[i], static_cast<int>(k)) = -e.rows[i][f];
    }
    return out;
}

RowSpaceResult row_space_exact(const SparseRows& a)
{
    ExactEchelon e = exact_rref(a);
    RowSpaceResult out;
    out.pivots = e.pivots;
    out.rref = RationalMatrix(static_cast<int>(e.rows.size()), a.cols);
    for (size_t i = 0; i < e.rows.size(); ++i)
        for (int j = 0; j < a.cols; ++j)
            out.rref(static_cast<int>(i), j) = e.rows[i][j];
    return out;
}

KernelResult kernel(const SparseRows& a)
{
    KernelResult out;
    if (g_modular && try_modular_kernel(a, out))
        return out;
    return kernel_exact(a);
}

RowSpaceResult row_space(const SparseRows& a)
{
    RowSpaceResult out;
    if (g_modular && try_modular_row_space(a, out))
        return out;
    return row_space_exact(a);
}

} // namespace fa
