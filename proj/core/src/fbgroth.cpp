#include "fa/fbgroth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fa {

VirtualFB::VirtualFB(int trunc) : trunc_(trunc)
{
    if (trunc < 0)
        throw std::invalid_argument("VirtualFB: negative truncation");
}

std::int64_t VirtualFB::operator[](const Partition& p) const
{
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
}

void VirtualFB::add(const Partition& p, std::int64_t c)
{
    if (p.size() > trunc_ || c == 0)
        return;
    auto& v = coeffs_[p];
    v += c;
    if (v == 0)
        coeffs_.erase(p);
}

void VirtualFB::add(const IrrDecomposition& d, std::int64_t scale)
{
    for (const auto& [p, c] : d.mults)
        add(p, c * scale);
}

IrrDecomposition VirtualFB::degree(int n) const
{
    IrrDecomposition d;
    d.n = n;
    for (const auto& [p, c] : coeffs_)
        if (p.size() == n)
            d.add(p, c);
    return d;
}

std::int64_t VirtualFB::dimension(int n) const
{
    return degree(n).dimension();
}

VirtualFB VirtualFB::truncated(int n) const
{
    VirtualFB r(std::min(n, trunc_));
    for (const auto& [p, c] : coeffs_)
        r.add(p, c);
    return r;
}

VirtualFB VirtualFB::operator+(const VirtualFB& other) const
{
    VirtualFB r = truncated(other.trunc_);
    for (const auto& [p, c] : other.coeffs_)
        r.add(p, c);
    return r;
}

VirtualFB VirtualFB::operator-(const VirtualFB& other) const
{
    return *this + other.scaled(-1);
}

VirtualFB VirtualFB::scaled(std::int64_t c) const
{
    VirtualFB r(trunc_);
    for (const auto& [p, v] : coeffs_)
        r.add(p, v * c);
    return r;
}

bool VirtualFB::is_effective() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& e) { return e.second >= 0; });
}

VirtualFB VirtualFB::single(const Partition& p, int trunc, std::int64_t c)
{
    VirtualFB r(trunc);
    r.add(p, c);
    return r;
}

VirtualFB VirtualFB::unit(int trunc)
{
    return single(Partition(), trunc);
}

VirtualFB VirtualFB::trivial(int trunc)
{
    VirtualFB r(trunc);
    for (int n = 0; n <= trunc; ++n)
        r.add(row(n), 1);
    return r;
}

VirtualFB VirtualFB::sign(int k, int trunc)
{
    return single(column(k), trunc);
}

VirtualFB day(const VirtualFB& a, const VirtualFB& b)
{
    const int N = std::min(a.trunc(), b.trunc());
    VirtualFB r(N);
    std::vector<IrrDecomposition> da(N + 1), db(N + 1);
    std::vector<ClassFunction> ca, cb;
    for (int i = 0; i <= N; ++i) {
        da[i] = a.degree(i);
        db[i] = b.degree(i);
        ca.push_back(da[i].character());
        cb.push_back(db[i].character());
    }
    for (int d = 0; d <= N; ++d) {
        ClassFunction total(d);
        bool any = false;
        for (int i = 0; i <= d; ++i) {
            if (da[i].is_zero() || db[d - i].is_zero())
                continue;
            total += induced_character(ca[i], cb[d - i]);
            any = true;
        }
        if (any)
            r.add(decompose_integral(total));
    }
    return r;
}

VirtualFB pointwise(const VirtualFB& a, const VirtualFB& b)
{
    const int N = std::min(a.trunc(), b.trunc());
    VirtualFB r(N);
    for (int d = 0; d <= N; ++d) {
        auto x = a.degree(d), y = b.degree(d);
        if (x.is_zero() || y.is_zero())
            continue;
        r.add(kronecker(x, y));
    }
    return r;
}

VirtualFB series_S(int k, int trunc)
{
    if (k < 0 || k > trunc)
        throw std::invalid_argument("series_S: need 0 <= k <= trunc");
    VirtualFB r(trunc);
    for (int t = 0; k + t <= trunc; ++t)
        r.add(column(k + t), (t % 2) ? -1 : 1);
    return r;
}

VirtualFB series_H(int k, int trunc)
{
    if (k < 0 || k > trunc)
        throw std::invalid_argument("series_H: need 0 <= k <= trunc");
    VirtualFB r(trunc);
    if (k == 0) {
        r.add(Partition(), 1);
        return r;
    }
    for (int n = k; n <= trunc; ++n)
        r.add(hook(n, k), 1);
    return r;
}

VirtualFB invert_triv(const VirtualFB& a)
{
    return day(a, series_S(0, a.trunc()));
}

VirtualFBBimod::VirtualFBBimod(int trunc_left, int trunc_right)
    : trunc_left_(trunc_left), trunc_right_(trunc_right)
{
    if (trunc_left < 0 || trunc_right < 0)
        throw std::invalid_argument("VirtualFBBimod: negative truncation");
}

std::int64_t VirtualFBBimod::operator()(const Partition& left, const Partition& right) const
{
    auto it = coeffs_.find({left, right});
    return it == coeffs_.end() ? 0 : it->second;
}

void VirtualFBBimod::add(const Partition& left, const Partition& right, std::int64_t c)
{
    if (left.size() > trunc_left_ || right.size() > trunc_right_ || c == 0)
        return;
    Key k{left, right};
    auto& v = coeffs_[k];
    v += c;
    if (v == 0)
        coeffs_.erase(k);
}

BimodDecomposition VirtualFBBimod::block(int a, int b) const
{
    BimodDecomposition out;
    for (const auto& [k, c] : coeffs_)
        if (k.first.size() == a && k.second.size() == b)
            out[k] = c;
    return out;
}

std::int64_t VirtualFBBimod::block_dimension(int a, int b) const
{
    std::int64_t d = 0;
    for (const auto& [k, c] : block(a, b))
        d += c * specht_dim(k.first) * specht_dim(k.second);
    return d;
}

VirtualFB VirtualFBBimod::right_slice(const Partition& alpha) const
{
    VirtualFB r(trunc_right_);
    for (const auto& [k, c] : coeffs_)
        if (k.first == alpha)
            r.add(k.second, c);
    return r;
}

VirtualFB VirtualFBBimod::left_slice(const Partition& beta) const
{
    VirtualFB r(trunc_left_);
    for (const auto& [k, c] : coeffs_)
        if (k.second == beta)
            r.add(k.first, c);
    return r;
}

VirtualFBBimod VirtualFBBimod::truncated(int left, int right) const
{
    VirtualFBBimod r(std::min(left, trunc_left_), std::min(right, trunc_right_));
    for (const auto& [k, c] : coeffs_)
        r.add(k.first, k.second, c);
    return r;
}

VirtualFBBimod VirtualFBBimod::operator+(const VirtualFBBimod& other) const
{
    VirtualFBBimod r = truncated(other.trunc_left_, other.trunc_right_);
    for (const auto& [k, c] : other.coeffs_)
        r.add(k.first, k.second, c);
    return r;
}

VirtualFBBimod VirtualFBBimod::operator-(const VirtualFBBimod& other) const
{
    return *this + other.scaled(-1);
}

VirtualFBBimod VirtualFBBimod::scaled(std::int64_t c) const
{
    VirtualFBBimod r(trunc_left_, trunc_right_);
    for (const auto& [k, v] : coeffs_)
        r.add(k.first, k.second, v * c);
    return r;
}

VirtualFBBimod VirtualFBBimod::external(const VirtualFB& left, const VirtualFB& right)
{
    VirtualFBBimod r(left.trunc(), right.trunc());
    for (const auto& [p, c] : left.coeffs())
        for (const auto& [q, d] : right.coeffs())
            r.add(p, q, c * d);
    return r;
}

VirtualFBBimod convolve_right(const VirtualFBBimod& a, const VirtualFB& b)
{
    VirtualFBBimod r(a.trunc_left(), std::min(a.trunc_right(), b.trunc()));
    std::set<Partition> lefts;
    for (const auto& [k, c] : a.coeffs())
        lefts.insert(k.first);
    for (const auto& alpha : lefts) {
        VirtualFB conv = day(a.right_slice(alpha), b);
        for (const auto& [q, c] : conv.coeffs())
            r.add(alpha, q, c);
    }
    return r;
}

VirtualFBBimod convolve_left(const VirtualFBBimod& a, const VirtualFB& b)
{
    VirtualFBBimod r(std::min(a.trunc_left(), b.trunc()), a.trunc_right());
    std::set<Partition> rights;
    for (const auto& [k, c] : a.coeffs())
        rights.insert(k.second);
    for (const auto& beta : rights) {
        VirtualFB conv = day(a.left_slice(beta), b);
        for (const auto& [p, c] : conv.coeffs())
            r.add(p, beta, c);
    }
    return r;
}

} // namespace fa
