#include "fa/oracle/functor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace fa::oracle {

SparseVec BasisModel::outer(const Perm&, int, int) const
{
    throw std::logic_error(name() + " carries no outer symmetric group action");
}

int colex_rank(const std::vector<int>& c)
{
    long long r = 0;
    for (size_t i = 0; i < c.size(); ++i)
        r += binomial(c[i], static_cast<int>(i) + 1);
    return static_cast<int>(r);
}

std::vector<int> colex_subset(long long r, int k)
{
    std::vector<int> c(k);
    for (int i = k - 1; i >= 0; --i) {
        int x = i;
        while (binomial(x + 1, i + 1) <= r)
            ++x;
        c[i] = x;
        r -= binomial(x, i + 1);
    }
    return c;
}

std::vector<std::vector<int>> injection_basis(int n, int t)
{
    std::vector<std::vector<int>> out;
    for (const auto& m : all_maps(n, t))
        if (m.is_injective())
            out.push_back(m.img);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> surjection_basis(int t, int n)
{
    std::vector<std::vector<int>> out;
    for (const auto& m : all_maps(t, n))
        if (m.is_surjective())
            out.push_back(m.img);
    return out;
}

namespace {

long long ipow(long long b, int e)
{
    long long r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

long long falling(int a, int b)
{
    if (b < 0 || a < b)
        return 0;
    long long r = 1;
    for (int i = 0; i < b; ++i)
        r *= a - i;
    return r;
}

/* digits of idx in base b, least significant first */
std::vector<int> digits(long long idx, int b, int n)
{
    std::vector<int> d(n);
    for (int k = 0; k < n; ++k) {
        d[k] = static_cast<int>(idx % b);
        idx /= b;
    }
    return d;
}

long long undigits(const std::vector<int>& d, int b)
{
    long long idx = 0;
    for (int k = static_cast<int>(d.size()) - 1; k >= 0; --k)
        idx = idx * b + d[k];
    return idx;
}

using Terms = std::vector<std::pair<int, long long>>;

/* expand a tensor product of sparse factors into base-b indices */
SparseVec tensor_expand(const std::vector<Terms>& factors, int b)
{
    std::vector<std::pair<int, Rational>> out;
    std::vector<int> idx(factors.size());
    std::function<void(size_t, long long)> rec = [&](size_t k, long long coeff) {
        if (k == factors.size()) {
            out.emplace_back(static_cast<int>(undigits(idx, b)), Rational(static_cast<long>(coeff)));
            return;
        }
        for (const auto& [i, c] : factors[k]) {
            idx[k] = i;
            rec(k + 1, coeff * c);
        }
    };
    for (const auto& f : factors)
        if (f.empty())
            return {};
    rec(0, 1);
    return sparse_normalize(std::move(out));
}

/* expand a wedge product of sparse factors into colex subset indices */
SparseVec wedge_expand(const std::vector<Terms>& factors)
{
    std::vector<std::pair<int, Rational>> out;
    std::vector<int> idx(factors.size());
    std::function<void(size_t, long long)> rec = [&](size_t k, long long coeff) {
        if (k == factors.size()) {
            std::vector<int> s = idx;
            int inversions = 0;
            for (size_t a = 0; a < s.size(); ++a)
                for (size_t b = a + 1; b < s.size(); ++b)
                    if (s[a] > s[b])
                        ++inversions;
            std::sort(s.begin(), s.end());
            out.emplace_back(colex_rank(s), Rational(static_cast<long>(inversions % 2 ? -coeff : coeff)));
            return;
        }
        for (const auto& [i, c] : factors[k]) {
            if (std::find(idx.begin(), idx.begin() + k, i) != idx.begin() + k)
                continue;
            idx[k] = i;
            rec(k + 1, coeff * c);
        }
    };
    rec(0, 1);
    return sparse_normalize(std::move(out));
}

/* [x] - [y] in the basis [j] - [t-1], j < t-1 */
Terms pbar_difference(int x, int y, int t)
{
    Terms f;
    if (x == y)
        return f;
    if (x != t - 1)
        f.emplace_back(x, 1);
    if (y != t - 1)
        f.emplace_back(y, -1);
    return f;
}

Perm place_image(const Perm& sigma, const std::vector<int>& w)
{
    /* (sigma . w)[sigma(k)] = w[k] */
    std::vector<int> r(w.size());
    for (size_t k = 0; k < w.size(); ++k)
        r[sigma[k]] = w[k];
    return r;
}

class PfinModel : public BasisModel {
public:
    explicit PfinModel(int n) : n_(n) {}
    std::string name() const override { return "pfin:" + std::to_string(n_); }
    int dim(int t) const override { return static_cast<int>(ipow(t, n_)); }
    SparseVec act(const FAMap& f, int i) const override
    {
        auto w = digits(i, f.src, n_);
        for (auto& x : w)
            x = f.img[x];
        return {{static_cast<int>(undigits(w, f.tgt)), Rational(1)}};
    }
    int outer_degree() const override { return n_; }
    SparseVec outer(const Perm& sigma, int t, int i) const override
    {
        auto w = digits(i, t, n_);
        return {{static_cast<int>(undigits(place_image(sigma, w), t)), Rational(1)}};
    }

private:
    int n_;
};

class PbarTensorModel : public BasisModel {
public:
    explicit PbarTensorModel(int n) : n_(n) {}
    std::string name() const override { return "pbar:" + std::to_string(n_); }
    int dim(int t) const override { return t == 0 ? 0 : static_cast<int>(ipow(t - 1, n_)); }
    SparseVec act(const FAMap& f, int i) const override
    {
        const int t = f.src, u = f.tgt;
        auto w = digits(i, t - 1, n_);
        std::vector<Terms> factors;
        for (int x : w)
            factors.push_back(pbar_difference(f.img[x], f.img[t - 1], u));
        return tensor_expand(factors, u - 1);
    }
    int outer_degree() const override { return n_; }
    SparseVec outer(const Perm& sigma, int t, int i) const override
    {
        auto w = digits(i, t - 1, n_);
        return {{static_cast<int>(undigits(place_image(sigma, w), t - 1)), Rational(1)}};
    }

private:
    int n_;
};

class LambdaPfinModel : public BasisModel {
public:
    explicit LambdaPfinModel(int k) : k_(k) {}
    std::string name() const override { return "lambdapfin:" + std::to_string(k_); }
    int dim(int t) const override { return static_cast<int>(binomial(t, k_)); }
    SparseVec act(const FAMap& f, int i) const override
    {
        auto c = colex_subset(i, k_);
        std::vector<Terms> factors;
        for (int x : c)
            factors.push_back({{f.img[x], 1}});
        return wedge_expand(factors);
    }

private:
    int k_;
};

class LambdaPbarModel : public BasisModel {
public:
    explicit LambdaPbarModel(int k) : k_(k) {}
    std::string name() const override { return "lambdapbar:" + std::to_string(k_); }
    int dim(int t) const override { return t == 0 ? 0 : static_cast<int>(binomial(t - 1, k_)); }
    SparseVec act(const FAMap& f, int i) const override
    {
        const int t = f.src, u = f.tgt;
        auto c = colex_subset(i, k_);
        std::vector<Terms> factors;
        for (int x : c) {
            factors.push_back(pbar_difference(f.img[x], f.img[t - 1], u));
            if (factors.back().empty())
                return {};
        }
        return wedge_expand(factors);
    }

private:
    int k_;
};

class KfiModel : public BasisModel {
public:
    explicit KfiModel(int n) : n_(n) {}
    std::string name() const override { return "kfi:" + std::to_string(n_); }
    int dim(int t) const override { return static_cast<int>(falling(t, n_)); }
    SparseVec act(const FAMap& f, int i) const override
    {
        auto w = unrank(i, f.src);
        for (auto& x : w)
            x = f.img[x];
        if (!distinct(w))
            return {};
        return {{rank(w, f.tgt), Rational(1)}};
    }
    int outer_degree() const override { return n_; }
    SparseVec outer(const Perm& sigma, int t, int i) const override
    {
        return {{rank(place_image(sigma, unrank(i, t)), t), Rational(1)}};
    }

private:
    static bool distinct(const std::vector<int>& w)
    {
        for (size_t a = 0; a < w.size(); ++a)
            for (size_t b = a + 1; b < w.size(); ++b)
                if (w[a] == w[b])
                    return false;
        return true;
    }
    int rank(const std::vector<int>& w, int t) const
    {
        long long r = 0;
        for (int i = 0; i < n_; ++i) {
            int c = 0;
            for (int v = 0; v < w[i]; ++v)
                if (std::find(w.begin(), w.begin() + i, v) == w.begin() + i)
                    ++c;
            r += c * falling(t - 1 - i, n_ - 1 - i);
        }
        return static_cast<int>(r);
    }
    std::vector<int> unrank(long long r, int t) const
    {
        std::vector<int> w(n_);
        std::vector<char> used(t, 0);
        for (int i = 0; i < n_; ++i) {
            long long block = falling(t - 1 - i, n_ - 1 - i);
            int c = static_cast<int>(r / block);
            r %= block;
            for (int v = 0; v < t; ++v)
                if (!used[v] && c-- == 0) {
                    w[i] = v;
                    used[v] = 1;
                    break;
                }
        }
        return w;
    }
    int n_;
};

class ConstantModel : public BasisModel {
public:
    enum class Support { All, Empty, Nonempty };
    explicit ConstantModel(Support s) : s_(s) {}
    std::string name() const override
    {
        return s_ == Support::All ? "const" : (s_ == Support::Empty ? "k0" : "kbar");
    }
    int dim(int t) const override
    {
        if (s_ == Support::All)
            return 1;
        return (s_ == Support::Empty) == (t == 0) ? 1 : 0;
    }
    SparseVec act(const FAMap& f, int) const override
    {
        if (dim(f.tgt) == 0)
            return {};
        return {{0, Rational(1)}};
    }

private:
    Support s_;
};

/* Dual of the surjections onto n, covariant in the source set. */
class DualKfsModel : public BasisModel {
public:
    explicit DualKfsModel(int n) : n_(n) {}
    std::string name() const override { return "dkfs:" + std::to_string(n_); }
    int dim(int t) const override { return static_cast<int>(table(t).maps.size()); }
    SparseVec act(const FAMap& f, int i) const override
    {
        const auto& src = table(f.src);
        const auto& dst = table(f.tgt);
        const auto& q = src.maps[i];
        /* q' with q' o f = q */
        std::vector<int> qp(f.tgt, -1);
        for (int x = 0; x < f.src; ++x) {
            int y = f.img[x];
            if (qp[y] >= 0 && qp[y] != q[x])
                return {};
            qp[y] = q[x];
        }
        std::vector<int> free;
        for (int y = 0; y < f.tgt; ++y)
            if (qp[y] < 0)
                free.push_back(y);
        std::vector<std::pair<int, Rational>> out;
        long long total = ipow(n_, static_cast<int>(free.size()));
        for (long long code = 0; code < total; ++code) {
            auto d = digits(code, n_, static_cast<int>(free.size()));
            for (size_t k = 0; k < free.size(); ++k)
                qp[free[k]] = d[k];
            auto it = dst.index.find(undigits(qp, std::max(n_, 1)));
            if (it != dst.index.end())
                out.emplace_back(it->second, Rational(1));
        }
        return sparse_normalize(std::move(out));
    }

private:
    struct Table {
        std::vector<std::vector<int>> maps;
        std::unordered_map<long long, int> index;
    };
    const Table& table(int t) const
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = tables_.find(t);
        if (it != tables_.end())
            return it->second;
        Table tab;
        tab.maps = surjection_basis(t, n_);
        for (size_t k = 0; k < tab.maps.size(); ++k)
            tab.index[undigits(tab.maps[k], std::max(n_, 1))] = static_cast<int>(k);
        return tables_.emplace(t, std::move(tab)).first->second;
    }
    int n_;
    mutable std::mutex mtx_;
    mutable std::map<int, Table> tables_;
};

class TensorPowerModel : public BasisModel {
public:
    TensorPowerModel(ModelPtr base, int n) : base_(std::move(base)), n_(n) {}
    std::string name() const override { return "tensor(" + base_->name() + "," + std::to_string(n_) + ")"; }
    int dim(int t) const override { return static_cast<int>(ipow(base_->dim(t), n_)); }
    int max_size() const override { return base_->max_size(); }
    SparseVec act(const FAMap& f, int i) const override
    {
        auto w = digits(i, std::max(base_->dim(f.src), 1), n_);
        std::vector<Terms> factors;
        for (int x : w) {
            Terms t;
            for (const auto& [j, c] : base_->act(f, x)) {
                if (c.get_den() != 1)
                    throw std::logic_error("tensor power of a model with non-integral action");
                t.emplace_back(j, c.get_num().get_si());
            }
            factors.push_back(std::move(t));
        }
        return tensor_expand(factors, std::max(base_->dim(f.tgt), 1));
    }
    int outer_degree() const override { return n_; }
    SparseVec outer(const Perm& sigma, int t, int i) const override
    {
        int b = std::max(base_->dim(t), 1);
        auto w = digits(i, b, n_);
        return {{static_cast<int>(undigits(place_image(sigma, w), b)), Rational(1)}};
    }

private:
    ModelPtr base_;
    int n_;
};

class SumModel : public BasisModel {
public:
    explicit SumModel(std::vector<ModelPtr> parts) : parts_(std::move(parts))
    {
        outer_ = parts_.empty() ? -1 : parts_[0]->outer_degree();
        for (const auto& p : parts_)
            if (p->outer_degree() != outer_)
                outer_ = -1;
    }
    std::string name() const override
    {
        std::string s = "sum(";
        for (size_t k = 0; k < parts_.size(); ++k)
            s += (k ? "," : "") + parts_[k]->name();
        return s + ")";
    }
    int dim(int t) const override
    {
        int d = 0;
        for (const auto& p : parts_)
            d += p->dim(t);
        return d;
    }
    int max_size() const override
    {
        int m = -1;
        for (const auto& p : parts_)
            if (p->max_size() >= 0)
                m = m < 0 ? p->max_size() : std::min(m, p->max_size());
        return m;
    }
    SparseVec act(const FAMap& f, int i) const override
    {
        return route(f.src, f.tgt, i, [&](const BasisModel& p, int j) { return p.act(f, j); });
    }
    int outer_degree() const override { return outer_; }
    SparseVec outer(const Perm& sigma, int t, int i) const override
    {
        return route(t, t, i, [&](const BasisModel& p, int j) { return p.outer(sigma, t, j); });
    }

private:
    template <class F>
    SparseVec route(int s, int t, int i, F fn) const
    {
        int in_off = 0, out_off = 0;
        for (const auto& p : parts_) {
            int ds = p->dim(s);
            if (i < in_off + ds) {
                SparseVec v = fn(*p, i - in_off);
                for (auto& e : v)
                    e.first += out_off;
                return v;
            }
            in_off += ds;
            out_off += p->dim(t);
        }
        throw std::out_of_range("sum model: basis index out of range");
    }
    std::vector<ModelPtr> parts_;
    int outer_;
};

class SignOuterModel : public BasisModel {
public:
    SignOuterModel(ModelPtr base, int n) : base_(std::move(base)), n_(n) {}
    std::string name() const override { return base_->name() + "[sgn" + std::to_string(n_) + "]"; }
    int dim(int t) const override { return base_->dim(t); }
    int max_size() const override { return base_->max_size(); }
    SparseVec act(const FAMap& f, int i) const override { return base_->act(f, i); }
    int outer_degree() const override { return n_; }
    SparseVec outer(const Perm& sigma, int, int i) const override { return {{i, Rational(perm_sign(sigma))}}; }

private:
    ModelPtr base_;
    int n_;
};

std::vector<Rational> densify(const SparseVec& v, int n)
{
    std::vector<Rational> d(n);
    for (const auto& [i, c] : v)
        d[i] = c;
    return d;
}

RowSpaceResult column_space(const RationalMatrix& spans)
{
    SparseRows rows;
    rows.cols = spans.rows();
    for (int j = 0; j < spans.cols(); ++j) {
        SparseVec r;
        for (int i = 0; i < spans.rows(); ++i)
            if (spans(i, j) != 0)
                r.emplace_back(i, spans(i, j));
        rows.rows.push_back(std::move(r));
    }
    return row_space(rows);
}

/* Shared bookkeeping for subfunctors: RREF basis of the subspace at each size. */
class SubspaceFamily {
public:
    SubspaceFamily(const BasisModel& base, const std::vector<RationalMatrix>& spans)
    {
        for (size_t t = 0; t < spans.size(); ++t) {
            if (spans[t].rows() != base.dim(static_cast<int>(t)))
                throw std::invalid_argument("subspace spans do not match the base dimension");
            spaces_.push_back(column_space(spans[t]));
        }
    }
    int max_size() const { return static_cast<int>(spaces_.size()) - 1; }
    const RowSpaceResult& at(int t) const
    {
        if (t < 0 || t > max_size())
            throw std::out_of_range("subfunctor requested beyond its construction size");
        return spaces_[t];
    }
    /* subtract the subspace component; returns coordinates of the removed part */
    std::vector<Rational> reduce(std::vector<Rational>& v, int t) const
    {
        const auto& s = at(t);
        std::vector<Rational> coords(s.pivots.size());
        for (size_t k = 0; k < s.pivots.size(); ++k) {
            Rational c = v[s.pivots[k]];
            coords[k] = c;
            if (c == 0)
                continue;
            for (int j = 0; j < s.rref.cols(); ++j)
                if (s.rref(static_cast<int>(k), j) != 0)
                    v[j] -= c * s.rref(static_cast<int>(k), j);
        }
        return coords;
    }

private:
    std::vector<RowSpaceResult> spaces_;
};

class SubModel : public BasisModel {
public:
    SubModel(ModelPtr base, const std::vector<RationalMatrix>& spans, std::string name, bool keep_outer)
        : base_(std::move(base)), family_(*base_, spans), name_(std::move(name)), keep_outer_(keep_outer)
    {
    }
    std::string name() const override { return name_; }
    int dim(int t) const override { return static_cast<int>(family_.at(t).pivots.size()); }
    int max_size() const override { return family_.max_size(); }
    SparseVec act(const FAMap& f, int i) const override
    {
        return transport(f.src, f.tgt, i, [&](int j) { return base_->act(f, j); });
    }
    int outer_degree() const override { return keep_outer_ ? base_->outer_degree() : -1; }
    SparseVec outer(const Perm& sigma, int t, int i) const override
    {
        if (!keep_outer_)
            return BasisModel::outer(sigma, t, i);
        return transport(t, t, i, [&](int j) { return base_->outer(sigma, t, j); });
    }

private:
    template <class F>
    SparseVec transport(int s, int t, int i, F fn) const
    {
        const auto& src = family_.at(s);
        SparseVec image;
        for (int j = 0; j < src.rref.cols(); ++j)
            if (src.rref(i, j) != 0)
                sparse_add(image, fn(j), src.rref(i, j));
        auto v = densify(image, base_->dim(t));
        auto coords = family_.reduce(v, t);
        for (const auto& x : v)
            if (x != 0)
                throw std::logic_error(name_ + " is not closed under the action");
        SparseVec out;
        for (size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0)
                out.emplace_back(static_cast<int>(k), coords[k]);
        return out;
    }
    ModelPtr base_;
    SubspaceFamily family_;
    std::string name_;
    bool keep_outer_;
};

class QuotientModel : public BasisModel {
public:
    QuotientModel(ModelPtr base, const std::vector<RationalMatrix>& spans, std::string name, bool keep_outer)
        : base_(std::move(base)), family_(*base_, spans), name_(std::move(name)), keep_outer_(keep_outer)
    {
        for (int t = 0; t <= family_.max_size(); ++t) {
            std::vector<char> pivot(base_->dim(t), 0);
            for (int p : family_.at(t).pivots)
                pivot[p] = 1;
            std::vector<int> comp, pos(base_->dim(t), -1);
            for (int j = 0; j < base_->dim(t); ++j)
                if (!pivot[j]) {
                    pos[j] = static_cast<int>(comp.size());
                    comp.push_back(j);
                }
            complement_.push_back(comp);
            position_.push_back(pos);
        }
    }
    std::string name() const override { return name_; }
    int dim(int t) const override { return static_cast<int>(complement_.at(t).size()); }
    int max_size() const override { return family_.max_size(); }
    SparseVec act(const FAMap& f, int i) const override
    {
        return project(f.tgt, base_->act(f, complement_.at(f.src)[i]));
    }
    int outer_degree() const override { return keep_outer_ ? base_->outer_degree() : -1; }
    SparseVec outer(const Perm& sigma, int t, int i) const override
    {
        if (!keep_outer_)
            return BasisModel::outer(sigma, t, i);
        return project(t, base_->outer(sigma, t, complement_.at(t)[i]));
    }

private:
    SparseVec project(int t, const SparseVec& image) const
    {
        auto v = densify(image, base_->dim(t));
        family_.reduce(v, t);
        SparseVec out;
        for (int j = 0; j < static_cast<int>(v.size()); ++j)
            if (v[j] != 0)
                out.emplace_back(position_[t][j], v[j]);
        return out;
    }
    ModelPtr base_;
    SubspaceFamily family_;
    std::string name_;
    bool keep_outer_;
    std::vector<std::vector<int>> complement_;
    std::vector<std::vector<int>> position_;
};

std::vector<Perm> preserving_perms(int n, const std::vector<std::vector<int>>& blocks)
{
    std::vector<Perm> out;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::function<void(size_t)> rec = [&](size_t b) {
        if (b == blocks.size()) {
            out.push_back(p);
            return;
        }
        std::vector<int> images = blocks[b];
        std::sort(images.begin(), images.end());
        do {
            for (size_t k = 0; k < blocks[b].size(); ++k)
                p[blocks[b][k]] = images[k];
            rec(b + 1);
        } while (std::next_permutation(images.begin(), images.end()));
    };
    rec(0);
    return out;
}

} // namespace

GroupElement young_symmetrizer(const Partition& lambda)
{
    const int n = lambda.size();
    std::vector<std::vector<int>> rows, cols(lambda.part(0));
    int next = 0;
    for (int r = 0; r < lambda.length(); ++r) {
        rows.emplace_back();
        for (int c = 0; c < lambda.part(r); ++c) {
            rows.back().push_back(next);
            cols[c].push_back(next);
            ++next;
        }
    }
    auto R = preserving_perms(n, rows);
    auto C = preserving_perms(n, cols);
    std::map<Perm, Rational> acc;
    for (const auto& q : C)
        for (const auto& p : R)
            acc[perm_compose(q, p)] += perm_sign(q);
    GroupElement e;
    for (auto& [g, c] : acc)
        if (c != 0)
            e.emplace_back(g, c);
    return e;
}

GroupElement antisymmetrizer(int n)
{
    GroupElement e;
    for (const auto& p : all_permutations(n))
        e.emplace_back(p, Rational(perm_sign(p)));
    return e;
}

ModelPtr pfin_model(int n)
{
    return std::make_shared<PfinModel>(n);
}

ModelPtr pbar_tensor_model(int n)
{
    return std::make_shared<PbarTensorModel>(n);
}

ModelPtr lambda_pfin_model(int k)
{
    return std::make_shared<LambdaPfinModel>(k);
}

ModelPtr lambda_pbar_model(int k)
{
    return std::make_shared<LambdaPbarModel>(k);
}

ModelPtr kfi_model(int n)
{
    return std::make_shared<KfiModel>(n);
}

ModelPtr constant_model()
{
    return std::make_shared<ConstantModel>(ConstantModel::Support::All);
}

ModelPtr k0_model()
{
    return std::make_shared<ConstantModel>(ConstantModel::Support::Empty);
}

ModelPtr kbar_model()
{
    return std::make_shared<ConstantModel>(ConstantModel::Support::Nonempty);
}

ModelPtr dual_kfs_model(int n)
{
    return std::make_shared<DualKfsModel>(n);
}

ModelPtr tensor_power_model(ModelPtr base, int n)
{
    return std::make_shared<TensorPowerModel>(std::move(base), n);
}

ModelPtr sum_model(std::vector<ModelPtr> parts)
{
    return std::make_shared<SumModel>(std::move(parts));
}

ModelPtr sign_outer_model(ModelPtr base, int n)
{
    return std::make_shared<SignOuterModel>(std::move(base), n);
}

ModelPtr sub_model(ModelPtr base, const std::vector<RationalMatrix>& spans, std::string name, bool keep_outer)
{
    return std::make_shared<SubModel>(std::move(base), spans, std::move(name), keep_outer);
}

ModelPtr quotient_model(ModelPtr base, const std::vector<RationalMatrix>& spans, std::string name, bool keep_outer)
{
    return std::make_shared<QuotientModel>(std::move(base), spans, std::move(name), keep_outer);
}

std::vector<RationalMatrix> outer_image_spans(const BasisModel& base, const GroupElement& e, int max_size)
{
    std::vector<RationalMatrix> spans;
    for (int t = 0; t <= max_size; ++t) {
        int d = base.dim(t);
        RationalMatrix m(d, d);
        for (int i = 0; i < d; ++i) {
            SparseVec col;
            for (const auto& [g, c] : e)
                sparse_add(col, base.outer(g, t, i), c);
            m.set_column(i, col);
        }
        spans.push_back(std::move(m));
    }
    return spans;
}

ModelPtr schur_model(const Partition& lambda, ModelPtr base, int max_size)
{
    if (lambda.size() == 0)
        throw std::invalid_argument("schur_model: empty partition");
    auto tp = tensor_power_model(base, lambda.size());
    auto spans = outer_image_spans(*tp, young_symmetrizer(lambda), max_size);
    return sub_model(tp, spans, "schur:" + lambda.str() + ":" + base->name(), false);
}

ModelPtr projcover_model(int n, int max_size)
{
    auto pbar = pbar_tensor_model(n);
    auto spans = outer_image_spans(*pbar, antisymmetrizer(n), max_size);
    auto quotient = quotient_model(pbar, spans, "pbar:" + std::to_string(n) + "/lambda", true);
    return std::make_shared<SumModel>(
        std::vector<ModelPtr>{sign_outer_model(lambda_pfin_model(n + 1), n), quotient});
}

TruncatedFunctor::TruncatedFunctor(ModelPtr model, int N) : model_(std::move(model)), N_(N), cache_(std::make_shared<Cache>())
{
    if (N < 0)
        throw std::invalid_argument("TruncatedFunctor: negative size bound");
    if (model_->max_size() >= 0 && model_->max_size() < N)
        throw std::invalid_argument(model_->name() + " is only constructed up to size " +
                                    std::to_string(model_->max_size()));
}

int TruncatedFunctor::dim(int t) const
{
    if (t < 0 || t > N_)
        throw std::out_of_range("TruncatedFunctor: size " + std::to_string(t) + " beyond N = " + std::to_string(N_));
    return model_->dim(t);
}

std::vector<int> TruncatedFunctor::dims() const
{
    std::vector<int> d;
    for (int t = 0; t <= N_; ++t)
        d.push_back(model_->dim(t));
    return d;
}

SparseVec TruncatedFunctor::act(const FAMap& f, int i) const
{
    if (f.src > N_ || f.tgt > N_)
        throw std::out_of_range("TruncatedFunctor: map " + f.str() + " beyond N");
    return model_->act(f, i);
}

SparseVec TruncatedFunctor::apply(const FAMap& f, const SparseVec& v) const
{
    SparseVec out;
    for (const auto& [i, c] : v)
        sparse_add(out, act(f, i), c);
    return out;
}

SparseVec TruncatedFunctor::apply_outer(const Perm& sigma, int t, const SparseVec& v) const
{
    SparseVec out;
    for (const auto& [i, c] : v)
        sparse_add(out, model_->outer(sigma, t, i), c);
    return out;
}

RationalMatrix TruncatedFunctor::matrix(const FAMap& f) const
{
    RationalMatrix m(dim(f.tgt), dim(f.src));
    for (int i = 0; i < m.cols(); ++i)
        m.set_column(i, act(f, i));
    return m;
}

RationalMatrix TruncatedFunctor::outer_matrix(const Perm& sigma, int t) const
{
    RationalMatrix m(dim(t), dim(t));
    for (int i = 0; i < m.cols(); ++i)
        m.set_column(i, model_->outer(sigma, t, i));
    return m;
}

const std::vector<SparseVec>& TruncatedFunctor::generator_action(const Generator& g) const
{
    std::lock_guard<std::mutex> lock(cache_->mtx);
    auto it = cache_->gens.find(g);
    if (it != cache_->gens.end())
        return it->second;
    FAMap f = g.map();
    std::vector<SparseVec> cols;
    for (int i = 0; i < dim(f.src); ++i)
        cols.push_back(act(f, i));
    return cache_->gens.emplace(g, std::move(cols)).first->second;
}

RationalMatrix TruncatedFunctor::generator_matrix(const Generator& g) const
{
    const auto& cols = generator_action(g);
    RationalMatrix m(dim(g.target()), dim(g.source()));
    for (size_t i = 0; i < cols.size(); ++i)
        m.set_column(static_cast<int>(i), cols[i]);
    return m;
}

RationalMatrix TruncatedFunctor::word_matrix(const std::vector<Generator>& word, int source) const
{
    int d = dim(source);
    std::vector<SparseVec> cols(d);
    for (int i = 0; i < d; ++i)
        cols[i] = {{i, Rational(1)}};
    int size = source;
    for (const auto& g : word) {
        if (g.source() != size)
            throw std::logic_error("word_matrix: generator " + g.str() + " does not compose");
        const auto& act_cols = generator_action(g);
        for (auto& v : cols) {
            SparseVec next;
            for (const auto& [i, c] : v)
                sparse_add(next, act_cols[i], c);
            v = std::move(next);
        }
        size = g.target();
    }
    RationalMatrix m(dim(size), d);
    for (int i = 0; i < d; ++i)
        m.set_column(i, cols[i]);
    return m;
}

TruncatedFunctor TruncatedFunctor::with_size(int N) const
{
    return TruncatedFunctor(model_, N);
}

namespace {

ModelPtr model_from_descriptor(const std::string& d, int N)
{
    auto colon = d.find(':');
    std::string head = d.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : d.substr(colon + 1);
    auto number = [&]() {
        if (arg.empty() || arg.size() > 3 || arg.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("functor descriptor '" + d + "' needs a small nonnegative integer");
        return std::stoi(arg);
    };
    if (head == "pfin")
        return pfin_model(number());
    if (head == "pbar")
        return pbar_tensor_model(number());
    if (head == "lambdapfin")
        return lambda_pfin_model(number());
    if (head == "lambdapbar")
        return lambda_pbar_model(number());
    if (head == "kfi")
        return kfi_model(number());
    if (head == "dkfs")
        return dual_kfs_model(number());
    if (head == "proj")
        return projcover_model(number(), N);
    if (head == "const" && arg.empty())
        return constant_model();
    if (head == "k0" && arg.empty())
        return k0_model();
    if (head == "kbar" && arg.empty())
        return kbar_model();
    if (head == "schur") {
        auto c2 = arg.find(':');
        if (c2 == std::string::npos)
            throw std::invalid_argument("schur descriptor needs schur:<partition>:<base>");
        return schur_model(Partition::parse(arg.substr(0, c2)), model_from_descriptor(arg.substr(c2 + 1), N), N);
    }
    throw std::invalid_argument("unknown functor descriptor '" + d + "'");
}

} // namespace

TruncatedFunctor build(const std::string& descriptor, int N)
{
    if (N < 2)
        throw std::invalid_argument("build: size bound N must be at least 2");
    return TruncatedFunctor(model_from_descriptor(descriptor, N), N);
}

ClassFunction fb_character(const TruncatedFunctor& F, int t)
{
    ClassFunction chi(t);
    for (const auto& mu : partitions_of(t)) {
        FAMap g(t, perm_of_type(mu));
        Rational tr = 0;
        for (int i = 0; i < F.dim(t); ++i)
            for (const auto& [j, c] : F.act(g, i))
                if (j == i)
                    tr += c;
        chi[mu] = tr;
    }
    return chi;
}

BiClassFunction outer_bicharacter(const TruncatedFunctor& F, int t)
{
    int n = std::max(F.outer_degree(), 0);
    auto alphas = partitions_of(n);
    auto betas = partitions_of(t);
    BiClassFunction r;
    r.s = n;
    r.t = t;
    r.values.assign(alphas.size(), std::vector<Rational>(betas.size()));
    for (size_t a = 0; a < alphas.size(); ++a) {
        Perm sigma = perm_of_type(alphas[a]);
        for (size_t b = 0; b < betas.size(); ++b) {
            FAMap tau(t, perm_of_type(betas[b]));
            Rational tr = 0;
            for (int i = 0; i < F.dim(t); ++i) {
                SparseVec v = F.act(tau, i);
                if (F.outer_degree() >= 0)
                    v = F.apply_outer(sigma, t, v);
                for (const auto& [j, c] : v)
                    if (j == i)
                        tr += c;
            }
            r.values[a][b] = tr;
        }
    }
    return r;
}

FBModuleData extract_fb_data(const TruncatedFunctor& F, int trunc)
{
    if (trunc > F.N())
        throw std::invalid_argument("extract_fb_data: truncation beyond N");
    FBModuleData d;
    d.trunc = trunc;
    d.F0_dim = F.dim(0);
    for (int k = 1; k <= trunc; ++k) {
        IrrDecomposition irr = decompose_integral(fb_character(F, k));
        if (!irr.is_effective())
            throw std::logic_error("extract_fb_data: character of " + F.name() + " is not effective");
        d.degrees[k] = irr;
    }
    return d;
}

FunctorialityResult check_functoriality(const TruncatedFunctor& F, int max_size)
{
    FunctorialityResult r;
    int m = std::min(max_size, F.N());
    for (int s = 0; s <= m; ++s)
        for (int t = 0; t <= m; ++t)
            for (const auto& f : all_maps(s, t)) {
                RationalMatrix direct = F.matrix(f);
                if (f.is_identity() && !(direct == RationalMatrix::identity(F.dim(s)))) {
                    r.ok = false;
                    r.failure = "identity " + f.str() + " does not act as the identity";
                    return r;
                }
                for (int variant = 0; variant < 2; ++variant) {
                    auto word = factorize(f, variant);
                    FAMap composite = FAMap::identity(s);
                    for (const auto& g : word)
                        composite = compose(g.map(), composite);
                    if (!(composite == f)) {
                        r.ok = false;
                        r.failure = "factorization of " + f.str() + " is wrong";
                        return r;
                    }
                    if (!(F.word_matrix(word, s) == direct)) {
                        r.ok = false;
                        r.failure = "generator word for " + f.str() + " disagrees with the direct action";
                        return r;
                    }
                }
                ++r.maps_checked;
            }
    return r;
}

} // namespace fa::oracle
