#include "fa/oracle/nat_hom.hpp"

#include <bit>
#include <stdexcept>

namespace fa::oracle {

namespace {

struct ConstraintBuilder {
    SparseRows rows;

    explicit ConstraintBuilder(int cols) { rows.cols = cols; }

    /* rows of (sum_k c_k M_k) where each M_k is given by its sparse columns */
    void add_combination(const std::vector<std::pair<std::vector<SparseVec>, Rational>>& terms, int out_dim,
                         const Rational& identity_coeff = 0)
    {
        std::vector<SparseVec> out(out_dim);
        for (const auto& [cols, c] : terms)
            for (int j = 0; j < static_cast<int>(cols.size()); ++j)
                for (const auto& [i, v] : cols[j])
                    out[i].emplace_back(j, v * c);
        if (identity_coeff != 0)
            for (int j = 0; j < rows.cols; ++j)
                out[j].emplace_back(j, identity_coeff);
        for (auto& r : out) {
            r = sparse_normalize(std::move(r));
            if (!r.empty())
                rows.rows.push_back(std::move(r));
        }
    }
};

std::vector<SparseVec> action_columns(const TruncatedFunctor& G, const FAMap& f)
{
    std::vector<SparseVec> cols;
    for (int i = 0; i < G.dim(f.src); ++i)
        cols.push_back(G.act(f, i));
    return cols;
}

SparseVec column_of(const RationalMatrix& m, int j)
{
    SparseVec v;
    for (int i = 0; i < m.rows(); ++i)
        if (m(i, j) != 0)
            v.emplace_back(i, m(i, j));
    return v;
}

Rational coordinate(const SparseVec& v, int i)
{
    for (const auto& [j, c] : v)
        if (j == i)
            return c;
    return 0;
}

/* Q_tau applied to v in G(t); the identity when G has no outer action */
SparseVec target_outer(const TruncatedFunctor& G, const Perm& tau, int t, const SparseVec& v)
{
    if (G.outer_degree() < 0)
        return v;
    return G.apply_outer(tau, t, v);
}

/* character of a solution space inside G(size) under z -> Q_tau S_sigma z;
 * source(sigma, z) returns S_sigma z */
template <class Source>
BiClassFunction solution_character(const TruncatedFunctor& G, const KernelResult& k, int size, int source_degree,
                                   Source source)
{
    int target_degree = std::max(G.outer_degree(), 0);
    auto betas = partitions_of(target_degree);
    auto alphas = partitions_of(source_degree);
    BiClassFunction chi;
    chi.s = target_degree;
    chi.t = source_degree;
    chi.values.assign(betas.size(), std::vector<Rational>(alphas.size()));
    std::vector<SparseVec> basis;
    for (int j = 0; j < k.basis.cols(); ++j)
        basis.push_back(column_of(k.basis, j));
    for (size_t a = 0; a < alphas.size(); ++a) {
        Perm sigma = perm_of_type(alphas[a]);
        std::vector<SparseVec> moved;
        for (const auto& z : basis)
            moved.push_back(source(sigma, z));
        for (size_t b = 0; b < betas.size(); ++b) {
            Perm tau = perm_of_type(betas[b]);
            Rational tr = 0;
            for (size_t j = 0; j < basis.size(); ++j)
                tr += coordinate(target_outer(G, tau, size, moved[j]), k.free_cols[j]);
            chi.values[b][a] = tr;
        }
    }
    return chi;
}

HomResult from_kernel(const KernelResult& k, const std::string& method, int size)
{
    HomResult r;
    r.dimension = k.basis.cols();
    r.method = method;
    r.eval_size = size;
    r.certified_modular = k.certified_modular;
    for (int j = 0; j < k.basis.cols(); ++j) {
        RationalMatrix v(k.basis.rows(), 1);
        for (int i = 0; i < k.basis.rows(); ++i)
            v(i, 0) = k.basis(i, j);
        r.basis.push_back({v});
    }
    return r;
}

void require_size(const TruncatedFunctor& G, int needed, const char* what)
{
    if (G.N() < needed)
        throw std::invalid_argument(std::string(what) + ": needs G evaluated up to size " + std::to_string(needed));
}

/* kernel of (G(s_j) + I) for all adjacent transpositions of k */
void add_sign_constraints(ConstraintBuilder& cb, const TruncatedFunctor& G, int k)
{
    for (int j = 0; j + 1 < k; ++j)
        cb.add_combination({{action_columns(G, FAMap(k, transposition(k, j))), Rational(1)}}, G.dim(k), 1);
}

} // namespace

std::vector<std::pair<FAMap, int>> pi_terms(int n)
{
    std::vector<std::pair<FAMap, int>> terms;
    for (std::uint64_t Y = 0; Y < (std::uint64_t(1) << n); ++Y) {
        std::vector<int> img(n + 1);
        int sign = 1;
        for (int i = 0; i <= n; ++i)
            img[i] = i;
        for (int i = 1; i <= n; ++i)
            if (Y >> (i - 1) & 1) {
                img[i] = 0;
                sign = -sign;
            }
        terms.emplace_back(FAMap(n + 1, img), sign);
    }
    return terms;
}

FAMap relation_map(int s, std::uint64_t subset)
{
    std::vector<int> img(s + 1);
    for (int i = 0; i <= s; ++i)
        img[i] = (subset >> i & 1) ? 0 : i + 1;
    return FAMap(s + 2, img);
}

FAMap order_inclusion(int s, int j)
{
    std::vector<int> img(s);
    for (int i = 0; i < s; ++i)
        img[i] = i < j ? i : i + 1;
    return FAMap(s + 1, img);
}

HomResult nat_hom(const TruncatedFunctor& F, const TruncatedFunctor& G, bool with_character)
{
    if (F.N() != G.N())
        throw std::invalid_argument("nat_hom: functors are truncated at different sizes");
    const int N = F.N();
    std::vector<int> offset(N + 2, 0);
    for (int t = 0; t <= N; ++t)
        offset[t + 1] = offset[t] + G.dim(t) * F.dim(t);
    auto var = [&](int t, int r, int c) { return offset[t] + r * F.dim(t) + c; };

    SparseRows rows;
    rows.cols = offset[N + 1];
    for (const auto& g : generators_up_to(N)) {
        const int s = g.source(), t = g.target();
        const auto& Fg = F.generator_action(g);
        const auto& Gg = G.generator_action(g);
        /* rows of G(g) */
        std::vector<SparseVec> Grows(G.dim(t));
        for (int k = 0; k < static_cast<int>(Gg.size()); ++k)
            for (const auto& [r, v] : Gg[k])
                Grows[r].emplace_back(k, v);
        for (int r = 0; r < G.dim(t); ++r)
            for (int c = 0; c < F.dim(s); ++c) {
                std::vector<std::pair<int, Rational>> row;
                for (const auto& [k, v] : Fg[c])
                    row.emplace_back(var(t, r, k), v);
                for (const auto& [k, v] : Grows[r])
                    row.emplace_back(var(s, k, c), -v);
                auto n = sparse_normalize(std::move(row));
                if (!n.empty())
                    rows.rows.push_back(std::move(n));
            }
    }
    KernelResult k = kernel(rows);

    HomResult r;
    r.dimension = k.basis.cols();
    r.method = "generic";
    r.certified_modular = k.certified_modular;
    for (int j = 0; j < k.basis.cols(); ++j) {
        std::vector<RationalMatrix> eta;
        for (int t = 0; t <= N; ++t) {
            RationalMatrix m(G.dim(t), F.dim(t));
            for (int a = 0; a < m.rows(); ++a)
                for (int b = 0; b < m.cols(); ++b)
                    m(a, b) = k.basis(var(t, a, b), j);
            eta.push_back(std::move(m));
        }
        r.basis.push_back(std::move(eta));
    }
    if (!with_character)
        return r;

    /* locate each free coordinate */
    struct Loc {
        int t, row, col;
    };
    std::vector<Loc> locs;
    for (int u : k.free_cols) {
        int t = 0;
        while (offset[t + 1] <= u)
            ++t;
        int rel = u - offset[t];
        locs.push_back({t, rel / F.dim(t), rel % F.dim(t)});
    }
    int source_degree = std::max(F.outer_degree(), 0);
    int target_degree = std::max(G.outer_degree(), 0);
    auto alphas = partitions_of(source_degree);
    auto betas = partitions_of(target_degree);
    r.character.s = target_degree;
    r.character.t = source_degree;
    r.character.values.assign(betas.size(), std::vector<Rational>(alphas.size()));
    for (size_t a = 0; a < alphas.size(); ++a) {
        Perm sigma_inv = perm_inverse(perm_of_type(alphas[a]));
        for (size_t b = 0; b < betas.size(); ++b) {
            Perm tau = perm_of_type(betas[b]);
            Rational tr = 0;
            for (size_t j = 0; j < locs.size(); ++j) {
                const auto& [t, row, col] = locs[j];
                const auto& eta = r.basis[j][t];
                /* column col of eta P_sigma^{-1} */
                SparseVec pcol = F.outer_degree() >= 0 ? F.model().outer(sigma_inv, t, col)
                                                       : SparseVec{{col, Rational(1)}};
                SparseVec v;
                for (const auto& [i, c] : pcol)
                    sparse_add(v, column_of(eta, i), c);
                tr += coordinate(target_outer(G, tau, t, v), row);
            }
            r.character.values[b][a] = tr;
        }
    }
    r.has_character = true;
    return r;
}

HomResult hom_from_pfin(int n, const TruncatedFunctor& G, bool with_character)
{
    require_size(G, n, "hom_from_pfin");
    HomResult r;
    r.dimension = G.dim(n);
    r.method = "yoneda";
    r.eval_size = n;
    if (!with_character)
        return r;
    KernelResult k;
    k.basis = RationalMatrix::identity(G.dim(n));
    for (int i = 0; i < G.dim(n); ++i)
        k.free_cols.push_back(i);
    r.character = solution_character(G, k, n, n, [&](const Perm& sigma, const SparseVec& z) {
        return G.apply(FAMap(n, sigma), z);
    });
    r.has_character = true;
    return r;
}

HomResult hom_from_pbar_tensor(int s, const TruncatedFunctor& G, bool with_character)
{
    require_size(G, s + 2, "hom_from_pbar_tensor");
    const int d = G.dim(s + 1);
    ConstraintBuilder cb(d);
    if (s > 0) {
        std::vector<std::pair<std::vector<SparseVec>, Rational>> terms;
        for (const auto& [f, sign] : pi_terms(s))
            terms.emplace_back(action_columns(G, f), Rational(sign));
        cb.add_combination(terms, d, -1);
    }
    std::vector<std::pair<std::vector<SparseVec>, Rational>> rel;
    for (std::uint64_t Y = 0; Y < (std::uint64_t(1) << (s + 1)); ++Y)
        rel.emplace_back(action_columns(G, relation_map(s, Y)), Rational(std::popcount(Y) % 2 ? -1 : 1));
    cb.add_combination(rel, G.dim(s + 2));
    KernelResult k = kernel(cb.rows);
    HomResult r = from_kernel(k, "presentation", s + 1);
    if (!with_character)
        return r;
    r.character = solution_character(G, k, s + 1, s, [&](const Perm& sigma, const SparseVec& z) {
        std::vector<int> lifted(s + 1);
        lifted[0] = 0;
        for (int i = 1; i <= s; ++i)
            lifted[i] = sigma[i - 1] + 1;
        return G.apply(FAMap(s + 1, lifted), z);
    });
    r.has_character = true;
    return r;
}

HomResult hom_from_lambda_pfin(int k, const TruncatedFunctor& G, bool with_character)
{
    require_size(G, k, "hom_from_lambda_pfin");
    ConstraintBuilder cb(G.dim(k));
    add_sign_constraints(cb, G, k);
    KernelResult ker = kernel(cb.rows);
    HomResult r = from_kernel(ker, "sign-part", k);
    if (!with_character)
        return r;
    r.character = solution_character(G, ker, k, 0, [](const Perm&, const SparseVec& z) { return z; });
    r.has_character = true;
    return r;
}

HomResult hom_from_lambda_bar(int s, const TruncatedFunctor& G, bool with_character)
{
    require_size(G, s + 2, "hom_from_lambda_bar");
    ConstraintBuilder cb(G.dim(s + 1));
    add_sign_constraints(cb, G, s + 1);
    std::vector<std::pair<std::vector<SparseVec>, Rational>> terms;
    for (int j = 0; j <= s + 1; ++j)
        terms.emplace_back(action_columns(G, order_inclusion(s + 1, j)), Rational(j % 2 ? -1 : 1));
    cb.add_combination(terms, G.dim(s + 2));
    KernelResult ker = kernel(cb.rows);
    HomResult r = from_kernel(ker, "lambda-complex", s + 1);
    if (!with_character)
        return r;
    r.character = solution_character(G, ker, s + 1, 0, [](const Perm&, const SparseVec& z) { return z; });
    r.has_character = true;
    return r;
}

HomResult hom_from_projcover(int m, const TruncatedFunctor& G)
{
    require_size(G, m + 2, "hom_from_projcover");
    HomResult lam = hom_from_lambda_pfin(m + 1, G);
    HomResult bar = hom_from_pbar_tensor(m, G);
    const auto& cl = lam.character;
    const auto& cb = bar.character;
    auto alphas = partitions_of(m);
    auto betas = partitions_of(cb.s);
    auto sgn = ClassFunction::sign(m);
    HomResult r;
    r.method = "projective-cover";
    r.eval_size = m + 1;
    r.certified_modular = lam.certified_modular && bar.certified_modular;
    r.character = cb;
    for (size_t b = 0; b < betas.size(); ++b) {
        ClassFunction row(m);
        for (size_t a = 0; a < alphas.size(); ++a)
            row.at_index(static_cast<int>(a)) = cb.values[b][a];
        Rational sign_mult = row.inner(sgn);
        for (size_t a = 0; a < alphas.size(); ++a) {
            Rational sg = sgn.at_index(static_cast<int>(a));
            r.character.values[b][a] += sg * (cl.values[b][0] - sign_mult);
        }
    }
    r.dimension = r.character.total().get_num().get_si();
    r.has_character = true;
    return r;
}

} // namespace fa::oracle
