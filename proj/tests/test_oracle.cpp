#include "fa/oracle/verify.hpp"

#include <doctest.h>

using namespace fa;
using namespace fa::oracle;

namespace {

std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

std::map<SimpleLabel, std::int64_t> labels(std::initializer_list<std::pair<SimpleLabel, std::int64_t>> terms)
{
    return {terms.begin(), terms.end()};
}

void require_pass(const Report& r)
{
    const Claim* f = r.first_failure();
    INFO(r.suite << ": " << (f ? claim_to_json(*f).dump() : std::string()));
    CHECK(r.pass());
    CHECK_FALSE(r.claims.empty());
}

} // namespace

TEST_CASE("maps and factorizations")
{
    FAMap f(3, {0, 2, 2, 1});
    CHECK_FALSE(f.is_injective());
    CHECK(f.is_surjective());
    CHECK(compose(FAMap::identity(3), f) == f);
    CHECK(all_maps(3, 2).size() == 8);
    CHECK(all_permutations(4).size() == 24);
    for (int s = 0; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t)
            for (const auto& m : all_maps(s, t))
                for (int variant = 0; variant < 2; ++variant) {
                    FAMap acc = FAMap::identity(s);
                    for (const auto& g : factorize(m, variant))
                        acc = compose(g.map(), acc);
                    CHECK(acc == m);
                }
    CHECK(perm_sign(transposition(3, 0)) == -1);
    CHECK(cycle_type(perm_of_type({2, 1})) == Partition{2, 1});
}

TEST_CASE("built functors have the expected dimensions")
{
    const int N = 5;
    for (int t = 0; t <= N; ++t) {
        CHECK(build("pfin:2", N).dim(t) == ipow(t, 2));
        CHECK(build("pbar:2", N).dim(t) == (t == 0 ? 0 : ipow(t - 1, 2)));
        CHECK(build("lambdapfin:2", N).dim(t) == binomial(t, 2));
        CHECK(build("lambdapbar:2", N).dim(t) == (t == 0 ? 0 : binomial(t - 1, 2)));
        CHECK(build("kfi:2", N).dim(t) == (t >= 2 ? t * (t - 1) : 0));
        CHECK(build("dkfs:2", N).dim(t) == count_surjections(t, 2));
        CHECK(build("const", N).dim(t) == 1);
        CHECK(build("k0", N).dim(t) == (t == 0 ? 1 : 0));
        CHECK(build("kbar", N).dim(t) == (t == 0 ? 0 : 1));
        CHECK(build("schur:2,1:pfin:1", N).dim(t) == schur_dim({2, 1}, t));
    }
    CHECK_THROWS_AS(build("nope:1", 4), std::invalid_argument);
    CHECK_THROWS_AS(build("pfin:1", 1), std::invalid_argument);
}

TEST_CASE("built functors are functors")
{
    for (const std::string d : {"pfin:2", "pbar:2", "lambdapfin:2", "lambdapbar:1", "kfi:2", "dkfs:2", "const", "k0",
                                "kbar", "proj:1", "schur:2:pfin:1"}) {
        auto res = check_functoriality(build(d, 4), 4);
        INFO(d << " " << res.failure);
        CHECK(res.ok);
        CHECK(res.maps_checked > 0);
    }
}

TEST_CASE("characters of built functors")
{
    auto F = build("pfin:1", 4);
    CHECK(decompose_integral(fb_character(F, 3)) == IrrDecomposition{3, {{{3}, 1}, {{2, 1}, 1}}});
    FBModuleData data = extract_fb_data(build("pfin:2", 5), 5);
    for (int t = 1; t <= 5; ++t)
        CHECK(data.dimension(t) == t * t);
    CHECK(data.F0_dim == 0);
}

TEST_CASE("Yoneda through the generic solver")
{
    const int N = 4;
    for (const std::string g : {"pbar:1", "kfi:1", "const", "lambdapbar:1"})
        for (int n = 0; n <= N - 2; ++n) {
            auto G = build(g, N);
            auto h = nat_hom(build("pfin:" + std::to_string(n), N), G, false);
            CHECK(h.dimension == G.dim(n));
            CHECK(hom_from_pfin(n, G).dimension == G.dim(n));
        }
}

TEST_CASE("fast hom methods agree with the generic solver")
{
    const int N = 5;
    for (const std::string g : {"pbar:1", "pbar:2", "pfin:1", "kfi:2", "const", "kbar"}) {
        auto G = build(g, N);
        for (int s = 0; s <= 2; ++s) {
            auto generic = nat_hom(build("pbar:" + std::to_string(s), N), G);
            auto fast = hom_from_pbar_tensor(s, G);
            INFO(g << " s=" << s);
            CHECK(generic.dimension == fast.dimension);
            CHECK(generic.decomposition() == fast.decomposition());
        }
        for (int k = 0; k <= 2; ++k) {
            auto lam = nat_hom(build("lambdapbar:" + std::to_string(k), N), G, false);
            CHECK(lam.dimension == hom_from_lambda_bar(k, G).dimension);
            auto lampfin = nat_hom(build("lambdapfin:" + std::to_string(k), N), G, false);
            CHECK(lampfin.dimension == hom_from_lambda_pfin(k, G).dimension);
        }
    }
}

TEST_CASE("hom examples")
{
    CHECK(hom_from_pbar_tensor(2, build("pbar:1", 4)).dimension == 0);
    CHECK(hom_from_pbar_tensor(1, build("pbar:2", 5)).dimension == 0);
    CHECK(hom_from_pbar_tensor(0, build("kbar", 4)).dimension == 1);
    CHECK(hom_from_lambda_bar(1, build("kbar", 4)).dimension == 0);
    auto end2 = hom_from_pbar_tensor(2, build("pbar:2", 5));
    CHECK(end2.dimension == 2);
    CHECK(hom_from_projcover(1, build("pfin:1", 4)).dimension == 1);
    CHECK(hom_from_projcover(0, build("pfin:1", 4)).dimension == 1);
}

TEST_CASE("norm map and oracle multiplicities")
{
    require_pass(verify_norm_map(1, 5));
    require_pass(verify_norm_map(2, 5));
    CHECK(oracle_multiplicities(build("pfin:1", 5)).mults ==
          labels({{SimpleLabel::lambda_bar(0), 1}, {SimpleLabel::lambda_bar(1), 1}}));
    auto kfi2 = oracle_multiplicities(build("kfi:2", 6));
    CHECK(kfi2.inconsistencies.empty());
    CHECK(kfi2.mults == labels({{SimpleLabel::lambda_bar(1), 1}, {SimpleLabel::lambda_bar(2), 1},
                                {SimpleLabel::c({2}), 1}}));
    auto pbar2 = oracle_multiplicities(build("pbar:2", 6));
    auto dims = composition_dimensions(pbar2.mults, 4);
    for (int t = 1; t <= 4; ++t)
        CHECK(dims[t] == (t - 1) * (t - 1));
}

TEST_CASE("independent counts")
{
    CHECK(count_surjections(3, 2) == 6);
    CHECK(count_surjections(4, 3) == 36);
    CHECK(count_surjections(0, 0) == 1);
    CHECK(count_surjections(2, 3) == 0);
    CHECK(count_ssyt({2, 1}, 3) == 8);
    CHECK(count_ssyt({2}, 3) == 6);
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n))
            for (int m = 0; m <= 4; ++m)
                CHECK(count_ssyt(l, m) == schur_dim(l, m));
}

TEST_CASE("idempotent and small suites")
{
    for (int n = 0; n <= 3; ++n)
        CHECK(pi_idempotent_check(n));
    require_pass(verify_idempotent(2, 4));
    require_pass(verify_right_aug(2, 3, 5));
    require_pass(verify_lambda_complex(4));
    require_pass(suite_properties(4));
    require_pass(suite_functoriality(3, 17));
    require_pass(suite_schur(4));
}

TEST_CASE("suite plumbing")
{
    CHECK_THROWS_AS(run_suite("nope", 4), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("kfs", 100), std::invalid_argument);
    Report r = run_suite("groth", 8);
    require_pass(r);
    json j = r.to_json();
    CHECK(j.contains("claims"));
    Report bad{"x", {}};
    bad.add("a", json::object(), 1, 2);
    CHECK_FALSE(bad.pass());
    REQUIRE(bad.first_failure());
    CHECK(bad.first_failure()->id == "a");
    CHECK(acceptance_title(1).size() > 0);
}
