#ifndef FA_PARTITIONS_HPP
#define FA_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fa {

/* A weakly decreasing sequence of positive integers.  The empty sequence is
 * the partition of 0.  Construction validates the parts. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /* i-th part, 0 when i is past the end */
    int part(int i) const;

    Partition conjugate() const;
    bool is_hook() const;
    bool is_column() const; /* (1^n), including n = 0 */
    bool is_row() const;    /* (n), including n = 0 */

    /* "2,1" and "" for the empty partition */
    std::string str() const;
    /* "(2,1)" and "()" */
    std::string pretty() const;
    static Partition parse(const std::string& text);

    /* Order used everywhere: by size, then reverse lexicographic. */
    std::strong_ordering operator<=>(const Partition& other) const;
    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/* All partitions of n in reverse lexicographic order. */
std::vector<Partition> partitions_of(int n);

/* mu_i <= lambda_i wherever mu_i is defined */
bool contains(const Partition& lambda, const Partition& mu);

/* lambda/mu has at most one box per column.  Throws std::invalid_argument
 * unless contains(lambda, mu). */
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

/* (n-k+1, 1^{k-1}); throws std::invalid_argument unless 1 <= k <= n */
Partition hook(int n, int k);

Partition column(int n);
Partition row(int n);

/* number of standard tableaux of shape lambda (hook length formula) */
std::int64_t specht_dim(const Partition& lambda);

/* dimension of the Schur functor S_lambda applied to a space of dimension m */
std::int64_t schur_dim(const Partition& lambda, int m);

/* size of the conjugacy class of cycle type mu in S_n, and n!/that */
std::int64_t class_size(const Partition& mu);
std::int64_t centralizer_order(const Partition& mu);

std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);

/* index of a partition of n within partitions_of(n) */
int partition_index(const Partition& p);

} // namespace fa

#endif
