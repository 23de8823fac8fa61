#include "fa/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fa {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::part(int i) const
{
    return (i >= 0 && i < length()) ? parts_[i] : 0;
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    if (!parts_.empty()) {
        c.assign(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++c[j];
    }
    return Partition(c);
}

bool Partition::is_hook() const
{
    return size_ > 0 && (length() <= 1 || parts_[1] == 1);
}

bool Partition::is_column() const
{
    return parts_.empty() || parts_[0] == 1;
}

bool Partition::is_row() const
{
    return parts_.size() <= 1;
}

std::string Partition::str() const
{
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string Partition::pretty() const
{
    return "(" + str() + ")";
}

Partition Partition::parse(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']')
            t += c;
    std::vector<int> parts;
    if (t.empty())
        return Partition();
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed partition '" + text + "'");
        if (item.size() > 6)
            throw std::invalid_argument("partition part too large in '" + text + "'");
        parts.push_back(std::stoi(item));
    }
    return Partition(parts);
}

std::strong_ordering Partition::operator<=>(const Partition& other) const
{
    if (size_ != other.size_)
        return size_ <=> other.size_;
    /* larger parts first */
    size_t n = std::min(parts_.size(), other.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (parts_[i] != other.parts_[i])
            return other.parts_[i] <=> parts_[i];
    return other.parts_.size() <=> parts_.size();
}

static void gen_partitions(int remaining, int maxpart, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

bool contains(const Partition& lambda, const Partition& mu)
{
    if (mu.length() > lambda.length())
        return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i))
            return false;
    return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu)
{
    if (!contains(lambda, mu))
        throw std::invalid_argument("is_horizontal_strip: " + mu.pretty() + " is not contained in " + lambda.pretty());
    for (int i = 0; i + 1 < lambda.length(); ++i)
        if (lambda.part(i + 1) > mu.part(i))
            return false;
    return true;
}

Partition hook(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("hook: need 1 <= k <= n");
    std::vector<int> p{n - k + 1};
    for (int i = 1; i < k; ++i)
        p.push_back(1);
    return Partition(p);
}

Partition column(int n)
{
    return Partition(std::vector<int>(n, 1));
}

Partition row(int n)
{
    return n == 0 ? Partition() : Partition({n});
}

std::int64_t factorial(int n)
{
    if (n < 0 || n > 20)
        throw std::out_of_range("factorial out of range");
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

std::int64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::int64_t specht_dim(const Partition& lambda)
{
    Partition c = lambda.conjugate();
    __int128 num = 1, den = 1;
    for (int i = 2; i <= lambda.size(); ++i)
        num *= i;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            den *= (lambda.part(i) - j - 1) + (c.part(j) - i - 1) + 1;
    return static_cast<std::int64_t>(num / den);
}

std::int64_t schur_dim(const Partition& lambda, int m)
{
    if (m < 0)
        return 0;
    Partition c = lambda.conjugate();
    __int128 num = 1, den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            int content = j - i;
            if (m + content <= 0)
                return 0;
            num *= m + content;
            den *= (lambda.part(i) - j - 1) + (c.part(j) - i - 1) + 1;
        }
    return static_cast<std::int64_t>(num / den);
}

std::int64_t centralizer_order(const Partition& mu)
{
    std::map<int, int> mult;
    for (int p : mu.parts())
        ++mult[p];
    std::int64_t z = 1;
    for (auto [p, m] : mult) {
        for (int i = 0; i < m; ++i)
            z *= p;
        z *= factorial(m);
    }
    return z;
}

std::int64_t class_size(const Partition& mu)
{
    return factorial(mu.size()) / centralizer_order(mu);
}

int partition_index(const Partition& p)
{
    static std::mutex mtx;
    static std::map<int, std::map<Partition, int>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p.size());
    if (it == cache.end()) {
        std::map<Partition, int> idx;
        auto all = partitions_of(p.size());
        for (size_t i = 0; i < all.size(); ++i)
            idx[all[i]] = static_cast<int>(i);
        it = cache.emplace(p.size(), std::move(idx)).first;
    }
    return it->second.at(p);
}

} // namespace fa
