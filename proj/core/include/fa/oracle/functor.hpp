#ifndef FA_ORACLE_FUNCTOR_HPP
#define FA_ORACLE_FUNCTOR_HPP

#include "fa/facalc.hpp"
#include "fa/linalg.hpp"
#include "fa/oracle/maps.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace fa::oracle {

using Perm = std::vector<int>;

/* A kFA-module given by a basis of each value and the action of every map
 * on basis vectors.  Models are valid at every size unless they say
 * otherwise through max_size(). */
class BasisModel {
public:
    virtual ~BasisModel() = default;
    virtual std::string name() const = 0;
    virtual int dim(int t) const = 0;
    virtual SparseVec act(const FAMap& f, int i) const = 0;
    /* largest size the model is defined at, -1 for unbounded */
    virtual int max_size() const { return -1; }
    /* degree n of a commuting S_n action (place permutations), -1 if none */
    virtual int outer_degree() const { return -1; }
    virtual SparseVec outer(const Perm& sigma, int t, int i) const;
};

using ModelPtr = std::shared_ptr<const BasisModel>;

/* An element of the group algebra of S_n. */
using GroupElement = std::vector<std::pair<Perm, Rational>>;

GroupElement young_symmetrizer(const Partition& lambda);
GroupElement antisymmetrizer(int n);

/* basis orders shared by the models */
int colex_rank(const std::vector<int>& subset);
std::vector<int> colex_subset(long long rank, int k);
/* injections n -> t in lexicographic order (kfi_model) */
std::vector<std::vector<int>> injection_basis(int n, int t);
/* surjections t -> n in all_maps order (dual_kfs_model) */
std::vector<std::vector<int>> surjection_basis(int t, int n);

ModelPtr pfin_model(int n);
ModelPtr pbar_tensor_model(int n);
ModelPtr lambda_pfin_model(int k);
ModelPtr lambda_pbar_model(int k);
ModelPtr kfi_model(int n);
ModelPtr constant_model();
ModelPtr k0_model();
ModelPtr kbar_model();
ModelPtr dual_kfs_model(int n);
ModelPtr tensor_power_model(ModelPtr base, int n);
ModelPtr sum_model(std::vector<ModelPtr> parts);
/* outer action replaced by sigma -> sgn(sigma) of degree n */
ModelPtr sign_outer_model(ModelPtr base, int n);
/* spans[t] columns span a subfunctor of base at size t, t <= max_size */
ModelPtr sub_model(ModelPtr base, const std::vector<RationalMatrix>& spans, std::string name, bool keep_outer);
ModelPtr quotient_model(ModelPtr base, const std::vector<RationalMatrix>& spans, std::string name, bool keep_outer);
/* image of a group algebra element acting through the outer action */
std::vector<RationalMatrix> outer_image_spans(const BasisModel& base, const GroupElement& e, int max_size);
ModelPtr schur_model(const Partition& lambda, ModelPtr base, int max_size);
ModelPtr projcover_model(int n, int max_size);

class TruncatedFunctor {
public:
    TruncatedFunctor(ModelPtr model, int N);

    int N() const { return N_; }
    int dim(int t) const;
    std::vector<int> dims() const;
    const BasisModel& model() const { return *model_; }
    ModelPtr model_ptr() const { return model_; }
    std::string name() const { return model_->name(); }
    int outer_degree() const { return model_->outer_degree(); }

    SparseVec act(const FAMap& f, int i) const;
    SparseVec apply(const FAMap& f, const SparseVec& v) const;
    SparseVec apply_outer(const Perm& sigma, int t, const SparseVec& v) const;
    RationalMatrix matrix(const FAMap& f) const;
    RationalMatrix outer_matrix(const Perm& sigma, int t) const;

    /* columns of the generator's matrix, cached */
    const std::vector<SparseVec>& generator_action(const Generator& g) const;
    RationalMatrix generator_matrix(const Generator& g) const;
    /* product of generator matrices along a word */
    RationalMatrix word_matrix(const std::vector<Generator>& word, int source) const;

    TruncatedFunctor with_size(int N) const;

private:
    struct Cache {
        std::mutex mtx;
        std::map<Generator, std::vector<SparseVec>> gens;
    };
    ModelPtr model_;
    int N_;
    std::shared_ptr<Cache> cache_;
};

/* Descriptors: pfin:n, pbar:n, lambdapfin:k, lambdapbar:k, kfi:n, dkfs:n,
 * const, k0, kbar, proj:n, schur:<partition>:<base descriptor>.
 * Throws std::invalid_argument for unknown descriptors or N < 2. */
TruncatedFunctor build(const std::string& descriptor, int N);

/* character of S_t on F(t) */
ClassFunction fb_character(const TruncatedFunctor& F, int t);
/* joint character of (outer S_n) x S_t on F(t) */
BiClassFunction outer_bicharacter(const TruncatedFunctor& F, int t);
/* underlying FB-module, degrees <= trunc <= N */
FBModuleData extract_fb_data(const TruncatedFunctor& F, int trunc);

struct FunctorialityResult {
    bool ok = true;
    int maps_checked = 0;
    std::string failure;
};

/* For all maps s -> t with s, t <= max_size, the model action equals the
 * product of generator matrices along two different factorizations, and
 * identities act as identities. */
FunctorialityResult check_functoriality(const TruncatedFunctor& F, int max_size);

} // namespace fa::oracle

#endif
