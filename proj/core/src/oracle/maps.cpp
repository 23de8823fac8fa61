#include "fa/oracle/maps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fa::oracle {

FAMap::FAMap(int tgt_, std::vector<int> images) : src(static_cast<int>(images.size())), tgt(tgt_), img(std::move(images))
{
    for (int x : img)
        if (x < 0 || x >= tgt)
            throw std::invalid_argument("FAMap: image out of range");
}

FAMap FAMap::identity(int n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return FAMap(n, v);
}

bool FAMap::is_injective() const
{
    std::vector<char> seen(tgt, 0);
    for (int x : img) {
        if (seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

bool FAMap::is_surjective() const
{
    std::vector<char> seen(tgt, 0);
    for (int x : img)
        seen[x] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool FAMap::is_identity() const
{
    if (src != tgt)
        return false;
    for (int i = 0; i < src; ++i)
        if (img[i] != i)
            return false;
    return true;
}

std::string FAMap::str() const
{
    std::string s = std::to_string(src) + "->" + std::to_string(tgt) + ":[";
    for (int i = 0; i < src; ++i)
        s += (i ? "," : "") + std::to_string(img[i]);
    return s + "]";
}

FAMap compose(const FAMap& g, const FAMap& f)
{
    if (f.tgt != g.src)
        throw std::invalid_argument("compose: maps are not composable");
    std::vector<int> v(f.src);
    for (int i = 0; i < f.src; ++i)
        v[i] = g.img[f.img[i]];
    return FAMap(g.tgt, v);
}

FAMap Generator::map() const
{
    switch (kind) {
    case Kind::Swap: {
        auto v = transposition(size, j);
        return FAMap(size, v);
    }
    case Kind::Incl: {
        std::vector<int> v(size);
        std::iota(v.begin(), v.end(), 0);
        return FAMap(size + 1, v);
    }
    case Kind::Fold: {
        std::vector<int> v(size + 1);
        std::iota(v.begin(), v.end(), 0);
        v[size] = size - 1;
        return FAMap(size, v);
    }
    }
    return {};
}

int Generator::source() const
{
    return kind == Kind::Fold ? size + 1 : size;
}

int Generator::target() const
{
    return kind == Kind::Incl ? size + 1 : size;
}

std::string Generator::str() const
{
    switch (kind) {
    case Kind::Swap:
        return "swap(" + std::to_string(size) + "," + std::to_string(j) + ")";
    case Kind::Incl:
        return "incl(" + std::to_string(size) + ")";
    case Kind::Fold:
        return "fold(" + std::to_string(size) + ")";
    }
    return "";
}

std::vector<Generator> generators_up_to(int n)
{
    std::vector<Generator> g;
    for (int t = 0; t <= n; ++t) {
        for (int j = 0; j + 1 < t; ++j)
            g.push_back({Generator::Kind::Swap, t, j});
        if (t + 1 <= n)
            g.push_back({Generator::Kind::Incl, t, 0});
        if (t >= 1 && t + 1 <= n)
            g.push_back({Generator::Kind::Fold, t, 0});
    }
    return g;
}

namespace {

/* adjacent swaps in application order realizing the permutation p */
void permutation_word(const std::vector<int>& p, int variant, std::vector<Generator>& out)
{
    const int n = static_cast<int>(p.size());
    std::vector<int> arr = p;
    auto swap_at = [&](int j) {
        std::swap(arr[j], arr[j + 1]);
        out.push_back({Generator::Kind::Swap, n, j});
    };
    if (variant == 0) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int j = 0; j + 1 < n; ++j)
                if (arr[j] > arr[j + 1]) {
                    swap_at(j);
                    changed = true;
                }
        }
    } else {
        for (int v = 0; v < n; ++v) {
            int pos = static_cast<int>(std::find(arr.begin(), arr.end(), v) - arr.begin());
            while (pos > v) {
                swap_at(pos - 1);
                --pos;
            }
        }
    }
}

void factorize_into(const FAMap& f, int variant, std::vector<Generator>& out)
{
    const int s = f.src;
    int x = -1, y = -1;
    /* variant 0 takes the first colliding pair, variant 1 the last */
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            if (f.img[a] == f.img[b] && (x < 0 || variant == 1)) {
                x = a;
                y = b;
            }
    if (x >= 0) {
        /* f = f' o fold o sigma with sigma(x) = s-2, sigma(y) = s-1 */
        std::vector<int> sigma(s);
        int next = 0;
        for (int z = 0; z < s; ++z) {
            if (z == x)
                sigma[z] = s - 2;
            else if (z == y)
                sigma[z] = s - 1;
            else
                sigma[z] = next++;
        }
        auto inv = perm_inverse(sigma);
        std::vector<int> rest(s - 1);
        for (int i = 0; i < s - 1; ++i)
            rest[i] = f.img[inv[i]];
        permutation_word(sigma, variant, out);
        out.push_back({Generator::Kind::Fold, s - 1, 0});
        factorize_into(FAMap(f.tgt, rest), variant, out);
        return;
    }
    const int t = f.tgt;
    for (int k = s; k < t; ++k)
        out.push_back({Generator::Kind::Incl, k, 0});
    std::vector<int> tau(t);
    std::vector<char> used(t, 0);
    for (int i = 0; i < s; ++i) {
        tau[i] = f.img[i];
        used[f.img[i]] = 1;
    }
    std::vector<int> unused;
    for (int v = 0; v < t; ++v)
        if (!used[v])
            unused.push_back(v);
    if (variant == 1)
        std::reverse(unused.begin(), unused.end());
    for (int i = s; i < t; ++i)
        tau[i] = unused[i - s];
    permutation_word(tau, variant, out);
}

} // namespace

std::vector<Generator> factorize(const FAMap& f, int variant)
{
    if (f.src > 0 && f.tgt == 0)
        throw std::invalid_argument("factorize: no map into the empty set");
    std::vector<Generator> out;
    factorize_into(f, variant, out);
    return out;
}

std::vector<FAMap> all_maps(int s, int t)
{
    std::vector<FAMap> out;
    if (t == 0) {
        if (s == 0)
            out.push_back(FAMap(0, {}));
        return out;
    }
    std::vector<int> v(s, 0);
    while (true) {
        out.push_back(FAMap(t, v));
        int i = 0;
        while (i < s && ++v[i] == t) {
            v[i] = 0;
            ++i;
        }
        if (i == s)
            break;
    }
    return out;
}

std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> perm_of_type(const Partition& type)
{
    std::vector<int> p;
    int start = 0;
    for (int len : type.parts()) {
        for (int i = 0; i < len; ++i)
            p.push_back(start + (i + 1) % len);
        start += len;
    }
    return p;
}

std::vector<int> perm_inverse(const std::vector<int>& p)
{
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        q[p[i]] = static_cast<int>(i);
    return q;
}

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> c(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        c[i] = a[b[i]];
    return c;
}

int perm_sign(const std::vector<int>& p)
{
    return ((static_cast<int>(p.size()) - cycle_type(p).length()) % 2) ? -1 : 1;
}

Partition cycle_type(const std::vector<int>& p)
{
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lens;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(lens);
}

std::vector<int> transposition(int n, int j)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::swap(v[j], v[j + 1]);
    return v;
}

} // namespace fa::oracle
