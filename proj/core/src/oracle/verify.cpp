#include "fa/oracle/verify.hpp"

#include <bit>
#include <functional>
#include <future>
#include <random>
#include <stdexcept>

namespace fa::oracle {

void Report::add(std::string id, json params, json expected, json computed)
{
    bool pass = expected == computed;
    add(std::move(id), std::move(params), std::move(expected), std::move(computed), pass);
}

void Report::add(std::string id, json params, json expected, json computed, bool pass)
{
    claims.push_back({std::move(id), std::move(params), std::move(expected), std::move(computed), pass});
}

void Report::append(const Report& other)
{
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

bool Report::pass() const
{
    return first_failure() == nullptr;
}

const Claim* Report::first_failure() const
{
    for (const auto& c : claims)
        if (!c.pass)
            return &c;
    return nullptr;
}

json claim_to_json(const Claim& c)
{
    return json{{"id", c.id}, {"params", c.params}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
}

json Report::to_json() const
{
    json arr = json::array();
    for (const auto& c : claims)
        arr.push_back(claim_to_json(c));
    return json{{"suite", suite}, {"pass", pass()}, {"claims", arr}};
}

json bimod_decomposition_to_json(const BimodDecomposition& d)
{
    json arr = json::array();
    for (const auto& [k, c] : d)
        arr.push_back(json{{"left", partition_to_json(k.first)}, {"right", partition_to_json(k.second)}, {"coeff", c}});
    return arr;
}

json labels_to_json(const std::map<SimpleLabel, std::int64_t>& m)
{
    json j = json::object();
    for (const auto& [label, c] : m)
        j[label.str()] = c;
    return j;
}

namespace {

std::vector<int> to_digits(long long idx, int base, int len)
{
    std::vector<int> d(len);
    for (int k = 0; k < len; ++k) {
        d[k] = static_cast<int>(idx % base);
        idx /= base;
    }
    return d;
}

long long from_digits(const std::vector<int>& d, int base)
{
    long long idx = 0;
    for (int k = static_cast<int>(d.size()) - 1; k >= 0; --k)
        idx = idx * base + d[k];
    return idx;
}

long long ipow(long long b, int e)
{
    long long r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

long long falling(int a, int b)
{
    if (a < b)
        return 0;
    long long r = 1;
    for (int i = 0; i < b; ++i)
        r *= a - i;
    return r;
}

int rank_of(const SparseRows& rows)
{
    return static_cast<int>(row_space(rows).pivots.size());
}

/* rows of a matrix given by sparse columns */
SparseRows rows_from_columns(const std::vector<SparseVec>& cols, int out_dim)
{
    SparseRows r;
    r.cols = static_cast<int>(cols.size());
    r.rows.assign(out_dim, {});
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [i, v] : cols[j])
            r.rows[i].emplace_back(j, v);
    return r;
}

std::vector<SparseVec> compose_columns(const std::vector<SparseVec>& outer, const std::vector<SparseVec>& inner)
{
    std::vector<SparseVec> out;
    for (const auto& v : inner) {
        SparseVec w;
        for (const auto& [i, c] : v)
            sparse_add(w, outer[i], c);
        out.push_back(std::move(w));
    }
    return out;
}

json dims_json(const std::vector<int>& v)
{
    return json(v);
}

BimodDecomposition regular_bimodule(int t)
{
    BimodDecomposition d;
    for (const auto& lambda : partitions_of(t))
        d[{lambda, lambda}] = 1;
    return d;
}

/* the pi_n precomposition operator on P^FA_{n+1}(t), as sparse columns */
std::vector<SparseVec> pi_on_pfin(int n, int t)
{
    auto terms = pi_terms(n);
    long long dim = ipow(t, n + 1);
    std::vector<SparseVec> cols;
    for (long long i = 0; i < dim; ++i) {
        auto g = to_digits(i, t, n + 1);
        std::vector<std::pair<int, Rational>> acc;
        for (const auto& [f, sign] : terms) {
            std::vector<int> h(n + 1);
            for (int x = 0; x <= n; ++x)
                h[x] = g[f.img[x]];
            acc.emplace_back(static_cast<int>(from_digits(h, t)), Rational(sign));
        }
        cols.push_back(sparse_normalize(std::move(acc)));
    }
    return cols;
}

/* contraction Lambda^{k+1}(k^t) -> Lambda^k(k^t) as sparse columns */
std::vector<SparseVec> contraction(int k, int t)
{
    std::vector<SparseVec> cols;
    long long dim = binomial(t, k + 1);
    for (long long i = 0; i < dim; ++i) {
        auto S = colex_subset(i, k + 1);
        std::vector<std::pair<int, Rational>> acc;
        for (int j = 0; j <= k; ++j) {
            auto T = S;
            T.erase(T.begin() + j);
            acc.emplace_back(colex_rank(T), Rational(j % 2 ? -1 : 1));
        }
        cols.push_back(sparse_normalize(std::move(acc)));
    }
    return cols;
}

/* norm map kFI(n, t) -> dual kFS(t, n): i -> sum of q with q o i = id */
std::vector<SparseVec> norm_map(int n, int t)
{
    auto inj = injection_basis(n, t);
    auto surj = surjection_basis(t, n);
    std::vector<SparseVec> cols(inj.size());
    for (size_t q = 0; q < surj.size(); ++q)
        for (size_t i = 0; i < inj.size(); ++i) {
            bool id = true;
            for (int x = 0; x < n && id; ++x)
                id = surj[q][inj[i][x]] == x;
            if (id)
                cols[i].emplace_back(static_cast<int>(q), Rational(1));
        }
    return cols;
}

std::vector<SparseVec> generator_columns(const TruncatedFunctor& F, const Generator& g)
{
    return F.generator_action(g);
}

bool columns_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b)
{
    return a == b;
}

/* projection P^FA_n(t) -> kFI(n, t) */
std::vector<SparseVec> project_to_injections(int n, int t)
{
    auto inj = injection_basis(n, t);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < inj.size(); ++i)
        index[inj[i]] = static_cast<int>(i);
    long long dim = ipow(t, n);
    std::vector<SparseVec> cols(dim);
    for (long long i = 0; i < dim; ++i) {
        auto it = index.find(to_digits(i, t, n));
        if (it != index.end())
            cols[i] = {{it->second, Rational(1)}};
    }
    return cols;
}

/* inclusion Pbar^{(x)n}(t) -> P^FA_n(t) in the basis of differences with [t-1] */
std::vector<SparseVec> pbar_inclusion(int n, int t)
{
    std::vector<SparseVec> cols;
    if (t == 0)
        return cols;
    long long dim = ipow(t - 1, n);
    for (long long i = 0; i < dim; ++i) {
        auto w = to_digits(i, t - 1, n);
        std::vector<std::pair<int, Rational>> acc;
        for (std::uint64_t Y = 0; Y < (std::uint64_t(1) << n); ++Y) {
            std::vector<int> v(n);
            for (int k = 0; k < n; ++k)
                v[k] = (Y >> k & 1) ? t - 1 : w[k];
            acc.emplace_back(static_cast<int>(from_digits(v, t)), Rational(std::popcount(Y) % 2 ? -1 : 1));
        }
        cols.push_back(sparse_normalize(std::move(acc)));
    }
    return cols;
}

void check_limits(const std::string& suite, int max_size, int lo, int hi)
{
    if (max_size < lo || max_size > hi)
        throw std::invalid_argument("suite " + suite + " needs " + std::to_string(lo) + " <= max-size <= " +
                                    std::to_string(hi));
}

} // namespace

bool pi_idempotent_check(int n)
{
    if (n < 0 || n > 8)
        throw std::invalid_argument("pi_idempotent_check: need 0 <= n <= 8");
    auto terms = pi_terms(n);
    std::map<FAMap, long long> pi, square;
    for (const auto& [f, a] : terms)
        pi[f] += a;
    for (const auto& [f, a] : terms)
        for (const auto& [g, b] : terms)
            square[compose(f, g)] += a * b;
    std::erase_if(pi, [](const auto& e) { return e.second == 0; });
    std::erase_if(square, [](const auto& e) { return e.second == 0; });
    return pi == square;
}

Report verify_idempotent(int max_n, int max_t)
{
    Report r{"idempotent", {}};
    for (int n = 0; n <= max_n; ++n) {
        r.add("pi.terms", {{"n", n}}, std::int64_t(1) << n, static_cast<std::int64_t>(pi_terms(n).size()));
        r.add("pi.idempotent", {{"n", n}}, true, pi_idempotent_check(n));
        for (int t = 1; t <= max_t && ipow(t, n + 1) <= 1024; ++t) {
            auto cols = pi_on_pfin(n, t);
            int dim = static_cast<int>(cols.size());
            json p{{"n", n}, {"t", t}};
            r.add("pi.matrix_idempotent", p, true, columns_equal(compose_columns(cols, cols), cols));
            r.add("pi.image_rank", p, ipow(t, 1) * ipow(t - 1, n), rank_of(rows_from_columns(cols, dim)));
            /* the image lies in the kernel of the augmentation on each factor 1..n */
            bool killed = true;
            for (int i = 1; i <= n && killed; ++i)
                for (const auto& v : cols) {
                    std::map<long long, Rational> image;
                    for (const auto& [idx, c] : v) {
                        auto d = to_digits(idx, t, n + 1);
                        d.erase(d.begin() + i);
                        image[from_digits(d, t)] += c;
                    }
                    for (const auto& [k, c] : image)
                        if (c != 0)
                            killed = false;
                }
            r.add("pi.image_in_pbar", p, true, killed);
        }
    }
    return r;
}

std::int64_t count_surjections(int t, int n)
{
    std::int64_t c = 0;
    for (const auto& m : all_maps(t, n))
        if (m.is_surjective())
            ++c;
    return c;
}

std::int64_t count_ssyt(const Partition& lambda, int m)
{
    /* fill cells row by row; entries weakly increase along rows, strictly down columns */
    std::vector<std::vector<int>> T;
    for (int r = 0; r < lambda.length(); ++r)
        T.emplace_back(lambda.part(r), 0);
    std::int64_t count = 0;
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == lambda.length()) {
            ++count;
            return;
        }
        if (c == lambda.part(r)) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, T[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, T[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            T[r][c] = v;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
    return count;
}

Report verify_right_aug(int n, int t, int N)
{
    if (N < std::max(n, t) + 2)
        throw std::invalid_argument("verify_right_aug: need N >= max(n, t) + 2");
    Report r{"right-aug", {}};
    json p{{"n", n}, {"t", t}, {"N", N}};
    auto G = build("pfin:" + std::to_string(t), N);
    auto expected = count_surjections(t, n);
    auto hom = hom_from_pbar_tensor(n, G, false);
    r.add("right_aug.dimension", p, expected, hom.dimension);

    /* restriction along Pbar^{(x)n} -> P^FA_n, from G(n) to G(n+1) */
    std::vector<SparseVec> cols(G.dim(n));
    for (std::uint64_t Y = 0; Y < (std::uint64_t(1) << n); ++Y) {
        FAMap h = relation_map(n - 1, Y);
        Rational sign = std::popcount(Y) % 2 ? -1 : 1;
        for (int i = 0; i < G.dim(n); ++i)
            sparse_add(cols[i], G.act(h, i), sign);
    }
    r.add("right_aug.restriction_rank", p, expected, rank_of(rows_from_columns(cols, G.dim(n + 1))));
    std::int64_t nonsurjective = 0, killed = 0;
    for (int i = 0; i < G.dim(n); ++i) {
        FAMap w(n, to_digits(i, n, t));
        if (w.is_surjective())
            continue;
        ++nonsurjective;
        if (cols[i].empty())
            ++killed;
    }
    r.add("right_aug.kernel_nonsurjective", p, nonsurjective, killed);
    return r;
}

Report verify_lambda_complex(int N)
{
    if (N < 2)
        throw std::invalid_argument("verify_lambda_complex: need N >= 2");
    Report r{"lambda-complex", {}};
    std::vector<TruncatedFunctor> L;
    for (int k = 0; k <= N; ++k)
        L.push_back(build("lambdapfin:" + std::to_string(k), N));
    for (int k = 0; k < N; ++k) {
        bool natural = true;
        for (const auto& g : generators_up_to(N)) {
            auto lhs = compose_columns(contraction(k, g.target()), generator_columns(L[k + 1], g));
            auto rhs = compose_columns(generator_columns(L[k], g), contraction(k, g.source()));
            if (lhs != rhs)
                natural = false;
        }
        r.add("lambda_complex.natural", {{"k", k}, {"N", N}}, true, natural);
    }
    for (int t = 0; t <= N; ++t) {
        json p{{"size", t}};
        std::vector<int> ranks, dims;
        bool squares_zero = true;
        for (int k = 0; k <= t; ++k)
            dims.push_back(static_cast<int>(binomial(t, k)));
        for (int k = 0; k < t; ++k) {
            auto d = contraction(k, t);
            ranks.push_back(rank_of(rows_from_columns(d, dims[k])));
            if (k + 1 < t)
                for (const auto& v : compose_columns(d, contraction(k + 1, t)))
                    if (!v.empty())
                        squares_zero = false;
        }
        r.add("lambda_complex.dims", p, [&] {
            std::vector<int> e;
            for (int k = 0; k <= t; ++k)
                e.push_back(static_cast<int>(binomial(t, k)));
            return dims_json(e);
        }(), dims_json(dims));
        r.add("lambda_complex.d_squared_zero", p, true, squares_zero);
        /* homology at Lambda^k for k >= 1, then the cokernel at Lambda^0 */
        std::vector<int> homology, expected;
        for (int k = 1; k <= t; ++k) {
            int in = k < t ? ranks[k] : 0;
            homology.push_back(dims[k] - ranks[k - 1] - in);
            expected.push_back(0);
        }
        r.add("lambda_complex.exact", p, dims_json(expected), dims_json(homology));
        int coker = dims[0] - (t > 0 ? ranks[0] : 0);
        r.add("lambda_complex.cokernel_k0", p, t == 0 ? 1 : 0, coker);
    }
    return r;
}

Report verify_norm_map(int n, int N)
{
    if (N < n + 2)
        throw std::invalid_argument("verify_norm_map: need N >= n + 2");
    Report r{"norm-map", {}};
    auto I = build("kfi:" + std::to_string(n), N);
    auto D = build("dkfs:" + std::to_string(n), N);
    bool natural = true;
    for (const auto& g : generators_up_to(N)) {
        auto lhs = compose_columns(norm_map(n, g.target()), generator_columns(I, g));
        auto rhs = compose_columns(generator_columns(D, g), norm_map(n, g.source()));
        if (lhs != rhs)
            natural = false;
    }
    r.add("norm_map.natural", {{"n", n}, {"N", N}}, true, natural);
    auto lambda_bar = lambda_pbar_model(n);
    for (int t = 0; t <= N; ++t) {
        json p{{"n", n}, {"t", t}};
        auto M = norm_map(n, t);
        int rank = rank_of(rows_from_columns(M, D.dim(t)));
        r.add("norm_map.kernel_dimension", p, lambda_bar->dim(t), I.dim(t) - rank);
        if (t == n)
            r.add("norm_map.iso_at_n", p, json::array({I.dim(t), D.dim(t)}), json::array({rank, rank}));
    }
    return r;
}

OracleMultiplicities oracle_multiplicities(const TruncatedFunctor& F, int max_degree)
{
    if (max_degree < 0)
        max_degree = F.N() - 2;
    if (max_degree > F.N() - 2)
        throw std::invalid_argument("oracle_multiplicities: degree bound needs N >= degree + 2");
    OracleMultiplicities out;
    out.max_degree = max_degree;
    auto record = [&](const SimpleLabel& l, std::int64_t c) {
        if (c != 0)
            out.mults[l] = c;
    };
    record(SimpleLabel::k0(), F.dim(0));
    for (int m = 0; m <= max_degree; ++m) {
        HomResult h = hom_from_projcover(m, F);
        ClassFunction chi(m);
        for (size_t a = 0; a < h.character.values.back().size(); ++a)
            chi.at_index(static_cast<int>(a)) = h.character.values.back()[a];
        IrrDecomposition d = decompose_integral(chi);
        for (const auto& [lambda, c] : d.mults)
            if (!lambda.is_column())
                record(SimpleLabel::c(lambda), c);
        std::int64_t sign_part = hom_from_lambda_pfin(m + 1, F, false).dimension;
        if (sign_part != d[column(m)])
            out.inconsistencies.push_back("L " + std::to_string(m) + ": sign part of F(" + std::to_string(m + 1) +
                                          ") is " + std::to_string(sign_part) + " but the cover character gives " +
                                          std::to_string(d[column(m)]));
        record(SimpleLabel::lambda_bar(m), sign_part);
    }
    return out;
}

Report suite_idempotent(int max_size)
{
    check_limits("idempotent", max_size, 0, 8);
    return verify_idempotent(max_size, max_size);
}

Report suite_vanishing(int max_size)
{
    check_limits("vanishing", max_size, 2, 7);
    Report r{"vanishing", {}};
    const int N = max_size;
    std::map<std::pair<int, int>, HomResult> presented;
    for (int s = 0; s <= N - 2; ++s)
        for (int t = 0; t <= s; ++t) {
            auto G = build("pbar:" + std::to_string(t), N);
            HomResult h = hom_from_pbar_tensor(s, G);
            presented[{s, t}] = h;
            json p{{"s", s}, {"t", t}, {"N", N}};
            if (t < s) {
                r.add("vanishing.zero", p, 0, h.dimension);
            } else {
                r.add("vanishing.endomorphism_dimension", p, factorial(t), h.dimension);
                r.add("vanishing.regular_bimodule", p, bimod_decomposition_to_json(regular_bimodule(t)),
                      bimod_decomposition_to_json(h.decomposition()));
            }
        }
    /* generic naturality solve at small sizes, and stability from N0 to N0+1 */
    std::vector<std::tuple<int, int, int>> generic = {{0, 0, 4}, {1, 0, 4}, {1, 1, 4}, {2, 0, 4}, {2, 1, 4},
                                                      {2, 2, 4}, {3, 2, 4}, {3, 3, 4}, {2, 2, 5}, {2, 1, 5}};
    for (const auto& [s, t, N0] : generic) {
        if (s > N - 2 || t > N - 2)
            continue;
        auto F = build("pbar:" + std::to_string(s), N0);
        auto G = build("pbar:" + std::to_string(t), N0);
        HomResult g0 = nat_hom(F, G);
        HomResult g1 = nat_hom(F.with_size(N0 + 1), G.with_size(N0 + 1), false);
        json p{{"s", s}, {"t", t}, {"N", N0}};
        const auto& h = presented.at({s, t});
        r.add("vanishing.generic_agrees", p, bimod_decomposition_to_json(h.decomposition()),
              bimod_decomposition_to_json(g0.decomposition()));
        r.add("vanishing.stable", p, g0.dimension, g1.dimension);
    }
    return r;
}

Report suite_right_aug(int max_size)
{
    check_limits("right-aug", max_size, 2, 7);
    Report r{"right-aug", {}};
    for (int n = 0; n <= max_size - 2; ++n)
        for (int t = 0; t <= max_size - 2; ++t)
            r.append(verify_right_aug(n, t, max_size));
    return r;
}

std::vector<std::string> groth_identity_names()
{
    return {"invert-triv", "w-relation", "h-relation", "pieri", "hook-inversion", "kfs"};
}

Report groth_identity(const std::string& name, int trunc)
{
    if (name == "kfs")
        return suite_kfs(trunc);
    check_limits("groth", trunc, 1, character_table_limit());
    Report r{"groth", {}};
    const int kmax = std::max(trunc - 4, 0);
    const VirtualFB triv = VirtualFB::trivial(trunc);
    const VirtualFB S0 = series_S(0, trunc);
    if (name == "invert-triv") {
        r.add("groth.invert_triv", {{"trunc", trunc}}, virtual_fb_to_json(VirtualFB::unit(trunc)),
              virtual_fb_to_json(day(triv, S0)));
        return r;
    }
    for (int k = 0; k <= kmax; ++k) {
        json p{{"k", k}, {"trunc", trunc}};
        if (name == "w-relation" && k + 1 <= trunc) {
            r.add("groth.w_relation", p, virtual_fb_to_json(VirtualFB::sign(k, trunc)),
                  virtual_fb_to_json(series_S(k, trunc) + series_S(k + 1, trunc)));
        } else if (name == "h-relation" && k + 1 <= trunc) {
            r.add("groth.h_relation", p, virtual_fb_to_json(day(VirtualFB::sign(k, trunc), triv)),
                  virtual_fb_to_json(series_H(k, trunc) + series_H(k + 1, trunc)));
        } else if (name == "pieri") {
            /* sgn_k times triv_m is (m+1, 1^{k-1}) + (m, 1^k) */
            VirtualFB pieri(trunc);
            for (int m = 0; k + m <= trunc; ++m) {
                if (k >= 1)
                    pieri.add(hook(k + m, k), 1);
                if (m >= 1)
                    pieri.add(hook(k + m, k + 1), 1);
                if (k == 0 && m == 0)
                    pieri.add(Partition(), 1);
            }
            r.add("groth.pieri_sign_triv", p, virtual_fb_to_json(pieri),
                  virtual_fb_to_json(day(VirtualFB::sign(k, trunc), triv)));
        } else if (name == "hook-inversion") {
            r.add("groth.hook_inversion", p, virtual_fb_to_json(series_S(k, trunc)),
                  virtual_fb_to_json(day(series_H(k, trunc), S0)));
        } else if (name != "w-relation" && name != "h-relation") {
            throw std::invalid_argument("unknown identity '" + name + "'");
        }
    }
    return r;
}

Report suite_groth(int max_size)
{
    Report r{"groth", {}};
    for (const auto& name : groth_identity_names())
        if (name != "kfs")
            r.append(groth_identity(name, max_size));
    return r;
}

Report suite_kfs(int max_size)
{
    check_limits("kfs", max_size, 1, 8);
    Report r{"kfs", {}};
    auto direct = kfs_class_direct(max_size);
    auto derived = kfs_class_from_kfa(max_size);
    auto kfa = kfa_class(max_size);
    for (int s = 0; s <= max_size; ++s)
        for (int t = 0; t <= max_size; ++t) {
            json p{{"s", s}, {"t", t}};
            r.add("kfs.cross_computation", p, bimod_decomposition_to_json(direct.block(s, t)),
                  bimod_decomposition_to_json(derived.block(s, t)));
            r.add("kfs.dimension", p, count_surjections(s, t), direct.block_dimension(s, t));
            r.add("kfa.dimension", p, ipow(t, s), kfa.block_dimension(s, t));
        }
    return r;
}

Report suite_hom_pfin(int max_size)
{
    check_limits("hom-pfin", max_size, 3, 7);
    Report r{"hom-pfin", {}};
    const int N = max_size;
    for (int n = 0; n <= N - 3; ++n) {
        auto table = hom_projcover_pfin(n, N - 2);
        auto G = build("pfin:" + std::to_string(n), N);
        for (int m = 0; m <= N - 2; ++m) {
            HomResult h = hom_from_projcover(m, G);
            json p{{"n", n}, {"m", m}, {"N", N}};
            r.add("hom_pfin.character", p, bimod_decomposition_to_json(table.block(n, m)),
                  bimod_decomposition_to_json(h.decomposition()));
            if (m == 1 && (n == 1 || n == 2))
                r.add("hom_pfin.hand_value", p, n, h.dimension);
        }
    }
    return r;
}

Report suite_hom_pbar(int max_size)
{
    check_limits("hom-pbar", max_size, 3, 7);
    Report r{"hom-pbar", {}};
    const int N = max_size;
    auto table = hom_pbar_pbar(N - 3);
    for (int t = 0; t <= N - 3; ++t) {
        auto G = build("pbar:" + std::to_string(t), N);
        for (int s = 0; s <= N - 3; ++s) {
            HomResult h = hom_from_pbar_tensor(s, G);
            json p{{"s", s}, {"t", t}, {"N", N}};
            auto formula = pbar_hom_block(table, s, t);
            r.add("hom_pbar.character", p, bimod_decomposition_to_json(formula),
                  bimod_decomposition_to_json(h.decomposition()));
            if ((s == 1 && t == 2) || (s == 0 && t == 1))
                r.add("hom_pbar.cancellation", p, json::array({0, 0}),
                      json::array({static_cast<std::int64_t>(formula.size()), h.dimension}));
        }
    }
    return r;
}

Report suite_kfi(int max_size)
{
    check_limits("kfi", max_size, 3, 8);
    Report r{"kfi", {}};
    const int N = max_size;
    for (int n = 1; n <= std::min(3, N - 2); ++n) {
        std::map<SimpleLabel, std::int64_t> expected{{SimpleLabel::lambda_bar(n), 1},
                                                      {SimpleLabel::lambda_bar(n - 1), 1}};
        for (const auto& lambda : partitions_of(n))
            if (!lambda.is_column())
                expected[SimpleLabel::c(lambda)] = specht_dim(lambda);
        json p{{"n", n}, {"N", N}};
        auto F = build("kfi:" + std::to_string(n), N);
        auto om = oracle_multiplicities(F);
        r.add("kfi.oracle_multiplicities", p, labels_to_json(expected), labels_to_json(om.mults));
        r.add("kfi.oracle_consistent", p, json::array(), json(om.inconsistencies));
        r.add("kfi.structure", p, labels_to_json(expected), labels_to_json(structure_kfi(n).composition_factors()));
        const int max_t = std::min(6, N);
        auto dims = composition_dimensions(expected, max_t);
        std::vector<std::int64_t> want;
        for (int t = 0; t <= max_t; ++t)
            want.push_back(falling(t, n));
        r.add("kfi.dimension_bookkeeping", p, json(want), json(dims));
    }
    return r;
}

Report suite_schur(int max_size)
{
    check_limits("schur", max_size, 1, 8);
    Report r{"schur", {}};
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto summands = decompose_schur_pfin(lambda);
            for (int m = 0; m <= max_size; ++m) {
                std::int64_t total = 0;
                for (const auto& s : summands)
                    total += s.dimension(m);
                json p{{"lambda", partition_to_json(lambda)}, {"m", m}};
                std::int64_t ssyt = count_ssyt(lambda, m);
                r.add("schur.dimension_identity", p, ssyt, total);
                r.add("schur.content_formula", p, ssyt, schur_dim(lambda, m));
            }
        }
    {
        Partition lambda{2, 1};
        std::vector<std::int64_t> dims;
        for (const auto& s : decompose_schur_pfin(lambda))
            dims.push_back(s.dimension(3));
        std::sort(dims.begin(), dims.end());
        r.add("schur.worked_case", {{"lambda", partition_to_json(lambda)}, {"m", 3}},
              json{{"total", 8}, {"summands", {2, 3, 3}}},
              json{{"total", count_ssyt(lambda, 3)}, {"summands", dims}});
    }
    /* Schur functors built from the Young symmetrizer at small sizes */
    const int Nb = std::max(2, std::min(max_size, 4));
    for (int n = 1; n <= 3; ++n)
        for (const auto& lambda : partitions_of(n)) {
            auto F = build("schur:" + lambda.str() + ":pfin:1", Nb);
            std::vector<std::int64_t> want;
            for (int t = 0; t <= Nb; ++t)
                want.push_back(count_ssyt(lambda, t));
            auto dims = F.dims();
            std::vector<std::int64_t> got(dims.begin(), dims.end());
            r.add("schur.oracle_dimensions", {{"lambda", partition_to_json(lambda)}, {"N", Nb}}, json(want), json(got));
        }
    return r;
}

Report suite_lambda_complex(int max_size)
{
    check_limits("lambda-complex", max_size, 2, 7);
    Report r = verify_lambda_complex(max_size);
    const int N = max_size;
    for (int s = 0; s <= N - 2; ++s) {
        for (int t = 0; t <= std::min(3, N); ++t) {
            auto h = hom_from_lambda_bar(s, build("pfin:" + std::to_string(t), N), false);
            r.add("lambda_bar.hom_pfin", {{"s", s}, {"t", t}, {"N", N}}, count_surjections(t, s) / factorial(s),
                  h.dimension);
        }
        for (int k = 0; k <= N - 1; ++k) {
            auto h = hom_from_lambda_bar(s, build("lambdapfin:" + std::to_string(k), N), false);
            r.add("lambda_bar.hom_lambda_pfin", {{"s", s}, {"k", k}, {"N", N}}, s == k ? 1 : 0, h.dimension);
        }
        auto h = hom_from_lambda_bar(s, build("lambdapbar:" + std::to_string(s), N), false);
        r.add("lambda_bar.simple_endomorphisms", {{"s", s}, {"N", N}}, 1, h.dimension);
    }
    for (int s = 0; s <= std::min(2, N - 2); ++s)
        for (const std::string target : {"pfin:1", "pfin:2", "lambdapbar:1", "lambdapbar:2", "kfi:2"}) {
            const int N0 = 4;
            auto G = build(target, N0);
            auto generic = nat_hom(build("lambdapbar:" + std::to_string(s), N0), G, false);
            auto fast = hom_from_lambda_bar(s, G, false);
            r.add("lambda_bar.generic_agrees", {{"s", s}, {"target", target}, {"N", N0}}, generic.dimension,
                  fast.dimension);
        }
    return r;
}

Report suite_norm_map(int max_size)
{
    check_limits("norm-map", max_size, 2, 7);
    Report r{"norm-map", {}};
    for (int n = 0; n <= std::min(3, max_size - 2); ++n)
        r.append(verify_norm_map(n, max_size));
    return r;
}

Report suite_multiplicities(int max_size)
{
    check_limits("multiplicities", max_size, 3, 8);
    Report r{"multiplicities", {}};
    const int N = max_size;
    const int degree = N - 2;
    for (const std::string d : {"const", "pfin:1", "pfin:2", "kfi:2", "pbar:2"}) {
        auto F = build(d, N);
        json p{{"F", d}, {"N", N}};
        auto om = oracle_multiplicities(F, degree);
        auto fb = extract_fb_data(F, N - 1);
        auto mr = multiplicities(fb);
        std::map<SimpleLabel, std::int64_t> symbolic;
        for (const auto& [label, c] : mr.mults) {
            int deg = label.kind() == SimpleLabel::Kind::C ? label.lambda().size()
                                                             : (label.kind() == SimpleLabel::Kind::LambdaBar ? label.n() : 0);
            if (deg <= degree)
                symbolic[label] = c;
        }
        r.add("multiplicities.agree", p, labels_to_json(om.mults), labels_to_json(symbolic));
        r.add("multiplicities.nonnegative", p, json::array(), json(mr.negative));
        r.add("multiplicities.oracle_consistent", p, json::array(), json(om.inconsistencies));
        auto dims = composition_dimensions(om.mults, degree);
        std::vector<std::int64_t> want;
        for (int t = 0; t <= degree; ++t)
            want.push_back(F.dim(t));
        r.add("multiplicities.dimension_sum", p, json(want), json(dims));
        if (d == "pfin:1")
            r.add("multiplicities.example", p, json{{"L 0", 1}, {"L 1", 1}}, labels_to_json(om.mults));
        if (d == "kfi:2")
            r.add("multiplicities.example", p, json{{"L 1", 1}, {"L 2", 1}, {"C 2", 1}}, labels_to_json(om.mults));
    }
    return r;
}

Report suite_functoriality(int max_size, std::uint64_t seed)
{
    check_limits("functoriality", max_size, 2, 6);
    Report r{"functoriality", {}};
    const int N = max_size;
    const int exhaustive = std::min(N, 4);
    const std::vector<std::string> descriptors = {"pfin:2", "pbar:2", "lambdapfin:2", "lambdapbar:2",
                                                  "kfi:2", "dkfs:2", "const", "k0",
                                                  "kbar", "proj:1", "schur:2:pfin:1", "schur:1,1:pbar:1"};
    for (const auto& d : descriptors) {
        auto F = build(d, N);
        auto fr = check_functoriality(F, exhaustive);
        r.add("functoriality.exhaustive", {{"F", d}, {"max", exhaustive}}, "", fr.failure, fr.ok);
    }
    /* dimension formulas */
    for (int n = 0; n <= 2; ++n) {
        std::vector<std::int64_t> pf, pb, lp, lb, fi, want_pf, want_pb, want_lp, want_lb, want_fi;
        auto Fpf = build("pfin:" + std::to_string(n), N), Fpb = build("pbar:" + std::to_string(n), N);
        auto Flp = build("lambdapfin:" + std::to_string(n), N), Flb = build("lambdapbar:" + std::to_string(n), N);
        auto Ffi = build("kfi:" + std::to_string(n), N);
        for (int t = 0; t <= N; ++t) {
            pf.push_back(Fpf.dim(t));
            pb.push_back(Fpb.dim(t));
            lp.push_back(Flp.dim(t));
            lb.push_back(Flb.dim(t));
            fi.push_back(Ffi.dim(t));
            want_pf.push_back(ipow(t, n));
            want_pb.push_back(t == 0 ? 0 : ipow(t - 1, n));
            want_lp.push_back(binomial(t, n));
            want_lb.push_back(t == 0 ? 0 : binomial(t - 1, n));
            want_fi.push_back(falling(t, n));
        }
        json p{{"n", n}, {"N", N}};
        r.add("build.dims.pfin", p, json(want_pf), json(pf));
        r.add("build.dims.pbar", p, json(want_pb), json(pb));
        r.add("build.dims.lambdapfin", p, json(want_lp), json(lp));
        r.add("build.dims.lambdapbar", p, json(want_lb), json(lb));
        r.add("build.dims.kfi", p, json(want_fi), json(fi));
    }
    for (int t = 0; t + 1 <= N; ++t) {
        auto F = build("lambdapbar:" + std::to_string(t), N);
        r.add("build.lambdapbar_top", {{"t", t}}, irr_to_json(IrrDecomposition::single(column(t + 1))),
              irr_to_json(decompose_integral(fb_character(F, t + 1))));
    }
    /* random maps between sets of size <= N through both factorizations */
    std::mt19937_64 rng(seed);
    for (const auto& d : descriptors) {
        auto F = build(d, N);
        int checked = 0;
        bool ok = true;
        for (int trial = 0; trial < 12; ++trial) {
            int s = static_cast<int>(rng() % (N + 1));
            int t = 1 + static_cast<int>(rng() % N);
            std::vector<int> img(s);
            for (auto& x : img)
                x = static_cast<int>(rng() % t);
            FAMap f(t, img);
            auto direct = F.matrix(f);
            ok = ok && F.word_matrix(factorize(f, 0), s) == direct && F.word_matrix(factorize(f, 1), s) == direct;
            ++checked;
        }
        r.add("functoriality.random", {{"F", d}, {"N", N}, {"seed", seed}, {"maps", checked}}, true, ok);
    }
    return r;
}

Report suite_properties(int max_size)
{
    check_limits("properties", max_size, 3, 6);
    Report r{"properties", {}};
    const int N = max_size;
    /* Yoneda through the generic solver, with stability at N0 + 1 */
    const int N0 = 4;
    for (const std::string g : {"pbar:1", "lambdapfin:2", "kfi:1", "const", "lambdapbar:1"})
        for (int n = 0; n <= N0 - 2; ++n) {
            auto G = build(g, N0);
            auto F = build("pfin:" + std::to_string(n), N0);
            auto h = nat_hom(F, G, false);
            auto h1 = nat_hom(F.with_size(N0 + 1), G.with_size(N0 + 1), false);
            json p{{"n", n}, {"G", g}, {"N", N0}};
            r.add("yoneda.dimension", p, G.dim(n), h.dimension);
            r.add("yoneda.stable", p, h.dimension, h1.dimension);
        }
    /* endomorphisms of Pbar^{(x)t} carry the regular bimodule character */
    for (int t = 0; t <= 3; ++t) {
        auto F = build("pbar:" + std::to_string(t), N0);
        auto h = nat_hom(F, F);
        r.add("end_pbar.regular", {{"t", t}, {"N", N0}}, bimod_decomposition_to_json(regular_bimodule(t)),
              bimod_decomposition_to_json(h.decomposition()));
    }
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t <= N; ++t) {
            json p{{"n", n}, {"t", t}};
            auto proj = project_to_injections(n, t);
            /* P_1 (x) Pbar^{(x)n-1} -> kFI(n, -) through pi_{n-1} on P_n */
            auto pi = pi_on_pfin(n - 1, t);
            int inj = static_cast<int>(falling(t, n));
            r.add("refine_surject.rank", p, inj, rank_of(rows_from_columns(compose_columns(proj, pi), inj)));
            /* Pbar^{(x)n} -> kFI(n, -) has cokernel Lambda^{n-1}(Pbar) */
            auto incl = pbar_inclusion(n, t);
            int rank = rank_of(rows_from_columns(compose_columns(proj, incl), inj));
            r.add("almost_surjectivity.cokernel", p, t == 0 ? 0 : binomial(t - 1, n - 1), inj - rank);
        }
    return r;
}

std::vector<std::string> suite_names()
{
    return {"idempotent", "vanishing",      "right-aug", "groth",          "kfs",           "hom-pfin",   "hom-pbar",
            "kfi",        "schur",          "lambda-complex", "norm-map", "multiplicities", "functoriality", "properties"};
}

Report run_suite(const std::string& name, int max_size, std::uint64_t seed)
{
    if (name == "idempotent")
        return suite_idempotent(max_size);
    if (name == "vanishing")
        return suite_vanishing(max_size);
    if (name == "right-aug")
        return suite_right_aug(max_size);
    if (name == "groth")
        return suite_groth(max_size);
    if (name == "kfs")
        return suite_kfs(max_size);
    if (name == "hom-pfin")
        return suite_hom_pfin(max_size);
    if (name == "hom-pbar")
        return suite_hom_pbar(max_size);
    if (name == "kfi")
        return suite_kfi(max_size);
    if (name == "schur")
        return suite_schur(max_size);
    if (name == "lambda-complex")
        return suite_lambda_complex(max_size);
    if (name == "norm-map")
        return suite_norm_map(max_size);
    if (name == "multiplicities")
        return suite_multiplicities(max_size);
    if (name == "functoriality")
        return suite_functoriality(max_size, seed);
    if (name == "properties")
        return suite_properties(max_size);
    if (name == "all") {
        std::vector<std::future<Report>> jobs;
        for (const auto& s : suite_names())
            jobs.push_back(std::async(std::launch::async, [s, max_size, seed] { return run_suite(s, max_size, seed); }));
        Report all{"all", {}};
        for (auto& j : jobs) {
            Report part = j.get();
            for (auto& c : part.claims)
                c.id = part.suite + "/" + c.id;
            all.append(part);
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string acceptance_title(int index)
{
    static const char* titles[] = {
        "hom(Pbar^s, Pbar^t) vanishes for t < s and is the regular bimodule for s = t <= 4 (N = 6)",
        "pi_n is idempotent for n <= 6",
        "dim hom(Pbar^n, P^FA_t) = |FS(t, n)| for n, t <= 4 (N = 6)",
        "Grothendieck identities for k <= 8 at truncation 12",
        "kFS from surjection characters equals S(0) convolved with kFA in bidegrees <= 6",
        "hom(P_m, P^FA_n) formula matches the oracle for n <= 3, m <= 4",
        "hom(Pbar^s, Pbar^t) formula matches the oracle for s, t <= 3",
        "composition factors of kFI(n, -) for n <= 3 (N = 8)",
        "Schur functor decomposition of S_lambda(P^FA) for |lambda| <= 4, m <= 6",
        "Lambda-complex exact at sizes <= 5; norm map kernels C(t-1, n) for n <= 3, t <= 5",
        "multiplicities agree with the oracle for k, P^FA_1, P^FA_2, kFI(2, -), Pbar^2",
    };
    if (index < 1 || index > 11)
        throw std::out_of_range("acceptance criteria are numbered 1..11");
    return titles[index - 1];
}

Report acceptance_criterion(int index)
{
    Report r;
    switch (index) {
    case 1:
        r = suite_vanishing(6);
        break;
    case 2:
        r = suite_idempotent(6);
        break;
    case 3:
        r = suite_right_aug(6);
        break;
    case 4:
        r = suite_groth(12);
        break;
    case 5:
        r = suite_kfs(6);
        break;
    case 6:
        r = suite_hom_pfin(6);
        break;
    case 7:
        r = suite_hom_pbar(6);
        break;
    case 8:
        r = suite_kfi(8);
        break;
    case 9:
        r = suite_schur(6);
        break;
    case 10:
        r = verify_lambda_complex(5);
        for (int n = 0; n <= 3; ++n)
            r.append(verify_norm_map(n, 5));
        break;
    case 11:
        r = suite_multiplicities(7);
        break;
    default:
        throw std::out_of_range("acceptance criteria are numbered 1..11");
    }
    r.suite = "criterion-" + std::to_string(index);
    return r;
}

} // namespace fa::oracle
