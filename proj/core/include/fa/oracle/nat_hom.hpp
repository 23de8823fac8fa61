#ifndef FA_ORACLE_NAT_HOM_HPP
#define FA_ORACLE_NAT_HOM_HPP

#include "fa/oracle/functor.hpp"

#include <string>
#include <vector>

namespace fa::oracle {

/* Result of a hom(F, G) computation.  The character is the joint trace of
 * (target outer S_a) x (source outer S_b) on the solution space, stored as a
 * BiClassFunction with values[target class][source class]; its bimodule
 * decomposition therefore lists (target partition, source partition). */
struct HomResult {
    std::int64_t dimension = 0;
    std::string method;
    bool has_character = false;
    BiClassFunction character;
    /* solution vectors; for nat_hom one matrix per set size, otherwise a
     * single column vector in G(eval_size) */
    std::vector<std::vector<RationalMatrix>> basis;
    int eval_size = -1;
    bool certified_modular = false;

    BimodDecomposition decomposition() const { return decompose_bimodule(character); }
};

/* Solves eta_t F(g) = G(g) eta_s over every generator g with sizes <= N.
 * Requires F.N() == G.N(). */
HomResult nat_hom(const TruncatedFunctor& F, const TruncatedFunctor& G, bool with_character = true);

/* hom(P^FA_n, G) = G(n) by Yoneda, with the place permutation action. */
HomResult hom_from_pfin(int n, const TruncatedFunctor& G, bool with_character = true);

/* hom(Pbar^{(x)s}, G) as the vectors z in G(s+1) fixed by pi_s and killed by
 * the relation generating Pbar^{(x)s+1} inside P_1 (x) Pbar^{(x)s}.
 * Requires G.N() >= s+2. */
HomResult hom_from_pbar_tensor(int s, const TruncatedFunctor& G, bool with_character = true);

/* hom(Lambda^k(P^FA), G): the sign part of G(k). */
HomResult hom_from_lambda_pfin(int k, const TruncatedFunctor& G, bool with_character = true);

/* hom(Lambda^s(Pbar), G): the sign part of G(s+1) killed by the signed sum
 * of order-preserving inclusions s+1 -> s+2.  Requires G.N() >= s+2. */
HomResult hom_from_lambda_bar(int s, const TruncatedFunctor& G, bool with_character = true);

/* hom(P_m, G) for the projective cover P_m = Lambda^{m+1}(P^FA) (+)
 * Pbar^{(x)m}/Lambda^m(Pbar), through its two summands.  Character only. */
HomResult hom_from_projcover(int m, const TruncatedFunctor& G);

/* the idempotent pi_n in the monoid algebra of End(n+1) */
std::vector<std::pair<FAMap, int>> pi_terms(int n);

/* maps used by the relations above */
FAMap relation_map(int s, std::uint64_t subset);        /* h_Y: s+1 -> s+2 */
FAMap order_inclusion(int s, int j);                     /* s -> s+1 missing j */

} // namespace fa::oracle

#endif
