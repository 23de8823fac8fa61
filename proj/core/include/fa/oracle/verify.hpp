#ifndef FA_ORACLE_VERIFY_HPP
#define FA_ORACLE_VERIFY_HPP

#include "fa/json_io.hpp"
#include "fa/oracle/nat_hom.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fa::oracle {

struct Claim {
    std::string id;
    json params = json::object();
    json expected;
    json computed;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Claim> claims;

    void add(std::string id, json params, json expected, json computed);
    void add(std::string id, json params, json expected, json computed, bool pass);
    void append(const Report& other);
    bool pass() const;
    const Claim* first_failure() const;
    json to_json() const;
};

json claim_to_json(const Claim& c);
json bimod_decomposition_to_json(const BimodDecomposition& d);
json labels_to_json(const std::map<SimpleLabel, std::int64_t>& m);

/* pi_n o pi_n = pi_n in the monoid algebra of End(n+1), compared
 * coefficientwise on composed maps. */
bool pi_idempotent_check(int n);

/* idempotency for n <= max_n, and the image of pi_n on P^FA_{n+1}(t) equals
 * (P^FA_1 (x) Pbar^{(x)n})(t) for t <= max_t with t^{n+1} <= 1024 */
Report verify_idempotent(int max_n, int max_t);

/* dim hom(Pbar^{(x)n}, P^FA_t) = |surjections t -> n|, and restriction along
 * Pbar^{(x)n} -> P^FA_n has that rank with non-surjective maps in its kernel */
Report verify_right_aug(int n, int t, int N);

/* Lambda^{k+1}(P^FA) -> Lambda^k(P^FA): naturality, d o d = 0, exactness at
 * every size <= N, cokernel k_0 */
Report verify_lambda_complex(int N);

/* kFI(n,-) -> dual of kFS(-,n): naturality, isomorphism at n, kernel
 * dimension C(t-1, n) for t <= N */
Report verify_norm_map(int n, int N);

struct OracleMultiplicities {
    std::map<SimpleLabel, std::int64_t> mults;
    int max_degree = 0;
    std::vector<std::string> inconsistencies;
};

/* k0 from dim F(0); C(lambda) from the character of hom(P_m, F);
 * Lambda_bar(m) from the sign part of F(m+1), cross-checked with the
 * (1^m) coefficient.  Degrees m <= max_degree <= N-2. */
OracleMultiplicities oracle_multiplicities(const TruncatedFunctor& F, int max_degree = -1);

/* independent count of semistandard tableaux of shape lambda in [m] */
std::int64_t count_ssyt(const Partition& lambda, int m);
/* independent count of surjections t -> n */
std::int64_t count_surjections(int t, int n);

/* Suites; max_size bounds the set sizes (see README for each). */
Report suite_idempotent(int max_size);
Report suite_vanishing(int max_size);
Report suite_right_aug(int max_size);
Report suite_groth(int max_size);
/* one Grothendieck identity at truncation trunc; k runs up to trunc - 4 */
std::vector<std::string> groth_identity_names();
Report groth_identity(const std::string& name, int trunc);
Report suite_kfs(int max_size);
Report suite_hom_pfin(int max_size);
Report suite_hom_pbar(int max_size);
Report suite_kfi(int max_size);
Report suite_schur(int max_size);
Report suite_lambda_complex(int max_size);
Report suite_norm_map(int max_size);
Report suite_multiplicities(int max_size);
Report suite_functoriality(int max_size, std::uint64_t seed);
Report suite_properties(int max_size);

std::vector<std::string> suite_names();
/* throws std::invalid_argument for unknown names; "all" runs every suite */
Report run_suite(const std::string& name, int max_size, std::uint64_t seed = 0);

/* one report per numbered acceptance criterion, 1..11 */
Report acceptance_criterion(int index);
std::string acceptance_title(int index);

} // namespace fa::oracle

#endif
