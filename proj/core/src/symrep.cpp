#include "fa/symrep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace fa {

namespace {

std::atomic<int> g_table_limit{12};

std::vector<int> beta_set(const Partition& lambda)
{
    int l = lambda.length();
    std::vector<int> b(l);
    for (int i = 0; i < l; ++i)
        b[i] = lambda.part(i) + (l - 1 - i);
    return b;
}

Partition from_beta(std::vector<int> b)
{
    std::sort(b.rbegin(), b.rend());
    int l = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int p = b[i] - (l - 1 - i);
        if (p > 0)
            parts.push_back(p);
    }
    return Partition(parts);
}

using Memo = std::map<std::pair<Partition, int>, std::int64_t>;

std::int64_t mn_rec(const Partition& lambda, const std::vector<int>& mu, int idx, Memo& memo)
{
    if (idx == static_cast<int>(mu.size()))
        return lambda.size() == 0 ? 1 : 0;
    auto key = std::make_pair(lambda, idx);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    int r = mu[idx];
    auto b = beta_set(lambda);
    std::int64_t total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        int target = b[i] - r;
        if (target < 0 || std::find(b.begin(), b.end(), target) != b.end())
            continue;
        int between = 0;
        for (int x : b)
            if (x > target && x < b[i])
                ++between;
        auto nb = b;
        nb[i] = target;
        std::int64_t v = mn_rec(from_beta(nb), mu, idx + 1, memo);
        total += (between % 2 ? -v : v);
    }
    memo[key] = total;
    return total;
}

std::shared_ptr<const CharacterTable> build_table(int n)
{
    auto t = std::make_shared<CharacterTable>();
    t->n = n;
    t->partitions = partitions_of(n);
    size_t k = t->partitions.size();
    t->chi.assign(k, std::vector<std::int64_t>(k));
    for (size_t j = 0; j < k; ++j) {
        Memo memo;
        for (size_t i = 0; i < k; ++i)
            t->chi[i][j] = mn_rec(t->partitions[i], t->partitions[j].parts(), 0, memo);
        t->class_sizes.push_back(class_size(t->partitions[j]));
    }
    return t;
}

} // namespace

void set_character_table_limit(int n)
{
    if (n < 0)
        throw std::invalid_argument("character table limit must be nonnegative");
    g_table_limit = n;
}

int character_table_limit()
{
    return g_table_limit;
}

std::shared_ptr<const CharacterTable> character_table(int n)
{
    if (n < 0)
        throw std::invalid_argument("character_table: negative degree");
    if (n > g_table_limit)
        throw std::out_of_range("character_table: degree " + std::to_string(n) + " exceeds limit " +
                                std::to_string(g_table_limit.load()));
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    auto t = build_table(n);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(n, t).first->second;
}

std::int64_t mn_character(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("mn_character: size mismatch");
    Memo memo;
    return mn_rec(lambda, mu.parts(), 0, memo);
}

ClassFunction::ClassFunction(int n) : n_(n)
{
    values_.resize(character_table(n)->partitions.size());
}

Rational& ClassFunction::operator[](const Partition& cycle_type)
{
    if (cycle_type.size() != n_)
        throw std::invalid_argument("class function: cycle type of wrong size");
    return values_[partition_index(cycle_type)];
}

const Rational& ClassFunction::operator[](const Partition& cycle_type) const
{
    if (cycle_type.size() != n_)
        throw std::invalid_argument("class function: cycle type of wrong size");
    return values_[partition_index(cycle_type)];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("class function sum: degree mismatch");
    for (size_t i = 0; i < values_.size(); ++i)
        values_[i] += other.values_[i];
    return *this;
}

ClassFunction ClassFunction::operator+(const ClassFunction& other) const
{
    ClassFunction r = *this;
    r += other;
    return r;
}

ClassFunction ClassFunction::operator*(const ClassFunction& other) const
{
    if (n_ != other.n_)
        throw std::invalid_argument("class function product: degree mismatch");
    ClassFunction r(n_);
    for (size_t i = 0; i < values_.size(); ++i)
        r.values_[i] = values_[i] * other.values_[i];
    return r;
}

ClassFunction ClassFunction::scaled(const Rational& c) const
{
    ClassFunction r = *this;
    for (auto& v : r.values_)
        v *= c;
    return r;
}

ClassFunction ClassFunction::irreducible(const Partition& lambda)
{
    auto t = character_table(lambda.size());
    ClassFunction f(lambda.size());
    int i = partition_index(lambda);
    for (size_t j = 0; j < t->partitions.size(); ++j)
        f.values_[j] = t->chi[i][j];
    return f;
}

ClassFunction ClassFunction::trivial(int n)
{
    ClassFunction f(n);
    for (auto& v : f.values_)
        v = 1;
    return f;
}

ClassFunction ClassFunction::sign(int n)
{
    auto t = character_table(n);
    ClassFunction f(n);
    for (size_t j = 0; j < t->partitions.size(); ++j) {
        const Partition& mu = t->partitions[j];
        f.values_[j] = ((mu.size() - mu.length()) % 2) ? -1 : 1;
    }
    return f;
}

ClassFunction ClassFunction::regular(int n)
{
    ClassFunction f(n);
    f.values_[partition_index(column(n))] = factorial(n);
    return f;
}

Rational ClassFunction::inner(const ClassFunction& other) const
{
    if (n_ != other.n_)
        throw std::invalid_argument("inner product: degree mismatch");
    auto t = character_table(n_);
    Rational s = 0;
    for (size_t j = 0; j < values_.size(); ++j)
        s += Rational(t->class_sizes[j]) * values_[j] * other.values_[j];
    return s / Rational(factorial(n_));
}

std::int64_t IrrDecomposition::operator[](const Partition& p) const
{
    auto it = mults.find(p);
    return it == mults.end() ? 0 : it->second;
}

void IrrDecomposition::add(const Partition& p, std::int64_t c)
{
    if (p.size() != n)
        throw std::invalid_argument("IrrDecomposition: partition " + p.pretty() + " has wrong size");
    if (c == 0)
        return;
    auto& m = mults[p];
    m += c;
    if (m == 0)
        mults.erase(p);
}

IrrDecomposition& IrrDecomposition::operator+=(const IrrDecomposition& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        n = other.n;
    if (n != other.n)
        throw std::invalid_argument("IrrDecomposition sum: degree mismatch");
    for (const auto& [p, c] : other.mults)
        add(p, c);
    return *this;
}

IrrDecomposition IrrDecomposition::operator+(const IrrDecomposition& other) const
{
    IrrDecomposition r = *this;
    r += other;
    return r;
}

IrrDecomposition IrrDecomposition::scaled(std::int64_t c) const
{
    IrrDecomposition r;
    r.n = n;
    for (const auto& [p, m] : mults)
        r.add(p, m * c);
    return r;
}

std::int64_t IrrDecomposition::dimension() const
{
    std::int64_t d = 0;
    for (const auto& [p, c] : mults)
        d += c * specht_dim(p);
    return d;
}

bool IrrDecomposition::is_effective() const
{
    return std::all_of(mults.begin(), mults.end(), [](const auto& e) { return e.second >= 0; });
}

ClassFunction IrrDecomposition::character() const
{
    ClassFunction f(n);
    for (const auto& [p, c] : mults)
        f += ClassFunction::irreducible(p).scaled(c);
    return f;
}

IrrDecomposition IrrDecomposition::single(const Partition& p, std::int64_t c)
{
    IrrDecomposition d;
    d.n = p.size();
    d.add(p, c);
    return d;
}

DecomposeResult decompose(const ClassFunction& f)
{
    auto t = character_table(f.n());
    DecomposeResult r;
    r.decomposition.n = f.n();
    Rational nf = factorial(f.n());
    for (size_t i = 0; i < t->partitions.size(); ++i) {
        Rational s = 0;
        for (size_t j = 0; j < t->partitions.size(); ++j)
            s += Rational(t->class_sizes[j]) * f.at_index(static_cast<int>(j)) * Rational(t->chi[i][j]);
        s /= nf;
        r.exact[t->partitions[i]] = s;
        if (s.get_den() != 1) {
            r.integral = false;
            r.is_virtual = true;
        } else {
            if (s < 0)
                r.is_virtual = true;
            r.decomposition.add(t->partitions[i], s.get_num().get_si());
        }
    }
    if (!r.integral)
        r.decomposition.mults.clear();
    return r;
}

IrrDecomposition decompose_integral(const ClassFunction& f)
{
    auto r = decompose(f);
    if (!r.integral)
        throw std::domain_error("class function of S_" + std::to_string(f.n()) +
                                " is not an integral combination of irreducibles");
    return r.decomposition;
}

ClassFunction induced_character(const ClassFunction& a, const ClassFunction& b)
{
    const int m = a.n(), n = b.n();
    auto t = character_table(m + n);
    ClassFunction out(m + n);
    for (size_t j = 0; j < t->partitions.size(); ++j) {
        const Partition& nu = t->partitions[j];
        std::vector<std::pair<int, int>> groups; /* (part, multiplicity) */
        for (int p : nu.parts()) {
            if (!groups.empty() && groups.back().first == p)
                ++groups.back().second;
            else
                groups.emplace_back(p, 1);
        }
        Rational znu = centralizer_order(nu);
        Rational total = 0;
        std::vector<int> k(groups.size(), 0);
        std::function<void(size_t, int)> rec = [&](size_t g, int used) {
            if (used > m)
                return;
            if (g == groups.size()) {
                if (used != m)
                    return;
                std::vector<int> pa, pb;
                for (size_t x = 0; x < groups.size(); ++x) {
                    for (int c = 0; c < k[x]; ++c)
                        pa.push_back(groups[x].first);
                    for (int c = k[x]; c < groups[x].second; ++c)
                        pb.push_back(groups[x].first);
                }
                Partition alpha(pa), beta(pb);
                const Rational& va = a[alpha];
                if (va == 0)
                    return;
                const Rational& vb = b[beta];
                if (vb == 0)
                    return;
                total += znu / Rational(centralizer_order(alpha) * centralizer_order(beta)) * va * vb;
                return;
            }
            for (int c = 0; c <= groups[g].second; ++c) {
                k[g] = c;
                rec(g + 1, used + c * groups[g].first);
            }
        };
        rec(0, 0);
        out.at_index(static_cast<int>(j)) = total;
    }
    return out;
}

IrrDecomposition induction_product(const IrrDecomposition& a, const IrrDecomposition& b)
{
    IrrDecomposition r = decompose_integral(induced_character(a.character(), b.character()));
    return r;
}

IrrDecomposition kronecker(const IrrDecomposition& a, const IrrDecomposition& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("kronecker: degree mismatch");
    return decompose_integral(a.character() * b.character());
}

IrrDecomposition sign_twist(const IrrDecomposition& a)
{
    IrrDecomposition r;
    r.n = a.n;
    for (const auto& [p, c] : a.mults)
        r.add(p.conjugate(), c);
    return r;
}

std::int64_t sgn_coinvariants(const IrrDecomposition& a)
{
    return a[column(a.n)];
}

const Rational& BiClassFunction::at(const Partition& alpha, const Partition& beta) const
{
    return values.at(partition_index(alpha)).at(partition_index(beta));
}

BimodDecomposition decompose_bimodule(const BiClassFunction& f)
{
    auto ts = character_table(f.s);
    auto tt = character_table(f.t);
    Rational norm = Rational(factorial(f.s)) * Rational(factorial(f.t));
    BimodDecomposition out;
    size_t ks = ts->partitions.size(), kt = tt->partitions.size();
    /* weighted[a][mu] = sum_beta |C_beta| chi_mu(beta) f(a, beta) */
    std::vector<std::vector<Rational>> weighted(ks, std::vector<Rational>(kt));
    for (size_t a = 0; a < ks; ++a)
        for (size_t mu = 0; mu < kt; ++mu) {
            Rational s = 0;
            for (size_t b = 0; b < kt; ++b)
                if (f.values[a][b] != 0)
                    s += Rational(tt->class_sizes[b] * tt->chi[mu][b]) * f.values[a][b];
            weighted[a][mu] = s;
        }
    for (size_t lam = 0; lam < ks; ++lam)
        for (size_t mu = 0; mu < kt; ++mu) {
            Rational s = 0;
            for (size_t a = 0; a < ks; ++a)
                if (weighted[a][mu] != 0)
                    s += Rational(ts->class_sizes[a] * ts->chi[lam][a]) * weighted[a][mu];
            s /= norm;
            if (s.get_den() != 1)
                throw std::domain_error("bimodule character is not an integral combination");
            if (s != 0)
                out[{ts->partitions[lam], tt->partitions[mu]}] = s.get_num().get_si();
        }
    return out;
}

namespace {

/* number of fixed points of tau^len where tau has cycle type beta */
std::int64_t fix_power(const std::vector<int>& cycles, int len)
{
    std::int64_t c = 0;
    for (int d : cycles)
        if (len % d == 0)
            c += d;
    return c;
}

/* the permutation with cycles (0..b0-1)(b0..b0+b1-1)... */
std::vector<int> canonical_perm(const Partition& type)
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

} // namespace

std::int64_t map_fixed_points(const Partition& alpha, const Partition& beta)
{
    std::int64_t v = 1;
    for (int c : alpha.parts())
        v *= fix_power(beta.parts(), c);
    return v;
}

std::int64_t surjection_fixed_points_ie(const Partition& alpha, const Partition& beta)
{
    const auto& cycles = beta.parts();
    int k = static_cast<int>(cycles.size());
    std::int64_t total = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> chosen;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i))
                chosen.push_back(cycles[i]);
        std::int64_t v = 1;
        for (int c : alpha.parts()) {
            v *= fix_power(chosen, c);
            if (v == 0)
                break;
        }
        int excluded = k - static_cast<int>(chosen.size());
        total += (excluded % 2) ? -v : v;
    }
    return total;
}

std::int64_t surjection_fixed_points_enum(const Partition& alpha, const Partition& beta)
{
    auto tau = canonical_perm(beta);
    const int t = beta.size();
    const int s = alpha.size();
    /* a fixed map is determined by its values y on cycle representatives,
     * subject to tau^len(y) = y */
    std::vector<std::vector<int>> choices;
    for (int len : alpha.parts()) {
        std::vector<int> ys;
        for (int y = 0; y < t; ++y) {
            int z = y;
            for (int i = 0; i < len; ++i)
                z = tau[z];
            if (z == y)
                ys.push_back(y);
        }
        choices.push_back(ys);
    }
    std::vector<int> f(s);
    std::int64_t count = 0;
    std::function<void(size_t, int)> rec = [&](size_t c, int start) {
        if (c == choices.size()) {
            std::vector<char> hit(t, 0);
            for (int x : f)
                hit[x] = 1;
            if (std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; }))
                ++count;
            return;
        }
        int len = alpha.part(static_cast<int>(c));
        for (int y : choices[c]) {
            int z = y;
            for (int i = 0; i < len; ++i) {
                f[start + i] = z;
                z = tau[z];
            }
            rec(c + 1, start + len);
        }
    };
    rec(0, 0);
    return count;
}

BiClassFunction perm_character_maps(int s, int t, bool surjective_only)
{
    if (s < 0 || t < 0)
        throw std::invalid_argument("perm_character_maps: negative size");
    auto ts = character_table(s);
    auto tt = character_table(t);
    BiClassFunction f;
    f.s = s;
    f.t = t;
    f.values.assign(ts->partitions.size(), std::vector<Rational>(tt->partitions.size()));
    const std::int64_t enum_budget = 200000;
    for (size_t a = 0; a < ts->partitions.size(); ++a)
        for (size_t b = 0; b < tt->partitions.size(); ++b) {
            const Partition& alpha = ts->partitions[a];
            const Partition& beta = tt->partitions[b];
            if (!surjective_only) {
                f.values[a][b] = map_fixed_points(alpha, beta);
                continue;
            }
            std::int64_t ie = surjection_fixed_points_ie(alpha, beta);
            if (s <= 8 && map_fixed_points(alpha, beta) <= enum_budget) {
                std::int64_t en = surjection_fixed_points_enum(alpha, beta);
                if (en != ie)
                    throw std::logic_error("surjection character mismatch at " + alpha.pretty() + "," +
                                           beta.pretty());
            }
            f.values[a][b] = ie;
        }
    return f;
}

} // namespace fa
