#ifndef FA_FACALC_HPP
#define FA_FACALC_HPP

#include "fa/fbgroth.hpp"

#include <map>
#include <string>
#include <vector>

namespace fa {

/* The underlying FB-module of an FA-module F in degrees <= trunc. */
struct FBModuleData {
    int trunc = 0;
    std::int64_t F0_dim = 0;
    std::map<int, IrrDecomposition> degrees; /* 1 <= k <= trunc */

    IrrDecomposition degree(int k) const;
    std::int64_t dimension(int k) const;
    /* degrees 1..trunc */
    VirtualFB bar() const;
    void validate() const;
};

/* Simple FA-modules: C(lambda) for lambda not a column, Lambda_bar(n), k_0. */
class SimpleLabel {
public:
    enum class Kind { K0, LambdaBar, C };

    static SimpleLabel k0();
    static SimpleLabel lambda_bar(int n);
    static SimpleLabel c(const Partition& lambda);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    const Partition& lambda() const { return lambda_; }

    /* "k0", "L 2", "C 2,1" */
    std::string str() const;
    /* accepts the forms produced by str(); "C 1,1" is rejected */
    static SimpleLabel parse(const std::string& text);

    auto operator<=>(const SimpleLabel&) const = default;

private:
    SimpleLabel(Kind k, int n, Partition lambda) : kind_(k), n_(n), lambda_(std::move(lambda)) {}
    Kind kind_;
    int n_;
    Partition lambda_;
};

/* S_nu(Pbar) or Lambda^j(P^FA) */
struct ProjectiveLabel {
    enum class Kind { SchurPbar, LambdaPfin };
    Kind kind = Kind::SchurPbar;
    Partition nu;
    int j = 0;

    static ProjectiveLabel schur_pbar(const Partition& nu) { return {Kind::SchurPbar, nu, 0}; }
    static ProjectiveLabel lambda_pfin(int j) { return {Kind::LambdaPfin, Partition(), j}; }

    std::int64_t dimension(int m) const;
    std::string str() const;
    auto operator<=>(const ProjectiveLabel&) const = default;
};

struct KfiStructure {
    ProjectiveLabel projective; /* Lambda^n(P^FA) */
    std::map<SimpleLabel, std::int64_t> simples;

    /* simples plus the two factors Lambda_bar(n), Lambda_bar(n-1) of the projective */
    std::map<SimpleLabel, std::int64_t> composition_factors() const;
};

/* bimodule classes; left = domain, right = codomain */
VirtualFBBimod kfa_class(int trunc);
VirtualFBBimod kfs_class_direct(int trunc);
VirtualFBBimod kfs_class_from_kfa(int trunc);
/* both computations, throws std::logic_error if they differ */
VirtualFBBimod fs_class(int trunc);

IrrDecomposition simple_eval(const SimpleLabel& label, int t);
std::int64_t simple_dimension(const SimpleLabel& label, int t);

std::vector<ProjectiveLabel> decompose_schur_pfin(const Partition& lambda);
KfiStructure structure_kfi(int n);

/* degree n = class of hom(P_n, F); valid in degrees <= F.trunc - 1 */
VirtualFB hom_projcover(const FBModuleData& F);

/* left = n (S_n^op), right = the projective cover index, up to trunc */
VirtualFBBimod hom_projcover_pfin(int n, int trunc);

/* left = *, right = the projective cover index */
VirtualFBBimod hom_projcover_pbar(int trunc);
VirtualFBBimod endo_projcover(int trunc);

/* left = * (target exponent), right = source exponent */
VirtualFBBimod hom_pbar_pbar(int trunc);
/* class of hom(Pbar^{(x)s}, Pbar^{(x)t}) read from hom_pbar_pbar */
BimodDecomposition pbar_hom_block(const VirtualFBBimod& table, int s, int t);

/* class of hom(Lambda^s(Pbar), Pbar^{(x)*}) in the * variable */
VirtualFB hom_lambdabar_pbar(int s, int trunc);

struct MultiplicityResult {
    std::map<SimpleLabel, std::int64_t> mults;
    std::vector<std::string> negative; /* labels whose computed value is negative */
    bool ok() const { return negative.empty(); }
};

MultiplicityResult multiplicities(const FBModuleData& F);

/* sum over labels of mult * dim(simple at t), for t <= max_t */
std::vector<std::int64_t> composition_dimensions(const std::map<SimpleLabel, std::int64_t>& mults, int max_t);

} // namespace fa

#endif
