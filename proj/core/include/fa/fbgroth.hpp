#ifndef FA_FBGROTH_HPP
#define FA_FBGROTH_HPP

#include "fa/partitions.hpp"
#include "fa/symrep.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace fa {

/* A virtual FB-module known in degrees <= trunc. */
class VirtualFB {
public:
    VirtualFB() = default;
    explicit VirtualFB(int trunc);

    int trunc() const { return trunc_; }
    const std::map<Partition, std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t operator[](const Partition& p) const;
    /* silently ignores partitions above trunc */
    void add(const Partition& p, std::int64_t c);
    void add(const IrrDecomposition& d, std::int64_t scale = 1);

    IrrDecomposition degree(int n) const;
    std::int64_t dimension(int n) const;
    VirtualFB truncated(int n) const;

    VirtualFB operator+(const VirtualFB& other) const;
    VirtualFB operator-(const VirtualFB& other) const;
    VirtualFB scaled(std::int64_t c) const;
    VirtualFB operator-() const { return scaled(-1); }
    bool operator==(const VirtualFB& other) const = default;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_effective() const;

    static VirtualFB single(const Partition& p, int trunc, std::int64_t c = 1);
    static VirtualFB unit(int trunc);    /* k_0 = [triv_0] */
    static VirtualFB trivial(int trunc); /* triv in every degree, including 0 */
    static VirtualFB sign(int k, int trunc);

private:
    int trunc_ = 0;
    std::map<Partition, std::int64_t> coeffs_;
};

VirtualFB day(const VirtualFB& a, const VirtualFB& b);
VirtualFB pointwise(const VirtualFB& a, const VirtualFB& b);

/* sum_{t >= 0} (-1)^t [sgn_{k+t}] */
VirtualFB series_S(int k, int trunc);
/* H(0) = k_0; H(k) = sum_{n >= k} [S_(n-k+1,1^{k-1})] */
VirtualFB series_H(int k, int trunc);
VirtualFB invert_triv(const VirtualFB& a);

/* Left variable: FB^op (domain exponent).  Right variable: FB. */
class VirtualFBBimod {
public:
    using Key = std::pair<Partition, Partition>;

    VirtualFBBimod() = default;
    VirtualFBBimod(int trunc_left, int trunc_right);

    int trunc_left() const { return trunc_left_; }
    int trunc_right() const { return trunc_right_; }
    const std::map<Key, std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t operator()(const Partition& left, const Partition& right) const;
    void add(const Partition& left, const Partition& right, std::int64_t c);

    /* coefficients with |left| = a and |right| = b */
    BimodDecomposition block(int a, int b) const;
    std::int64_t block_dimension(int a, int b) const;
    /* the right-variable class obtained from left partition alpha */
    VirtualFB right_slice(const Partition& alpha) const;
    VirtualFB left_slice(const Partition& beta) const;

    VirtualFBBimod truncated(int left, int right) const;
    VirtualFBBimod operator+(const VirtualFBBimod& other) const;
    VirtualFBBimod operator-(const VirtualFBBimod& other) const;
    VirtualFBBimod scaled(std::int64_t c) const;
    bool operator==(const VirtualFBBimod& other) const = default;
    bool is_zero() const { return coeffs_.empty(); }

    static VirtualFBBimod external(const VirtualFB& left, const VirtualFB& right);

private:
    int trunc_left_ = 0;
    int trunc_right_ = 0;
    std::map<Key, std::int64_t> coeffs_;
};

VirtualFBBimod convolve_right(const VirtualFBBimod& a, const VirtualFB& b);
VirtualFBBimod convolve_left(const VirtualFBBimod& a, const VirtualFB& b);

} // namespace fa

#endif
