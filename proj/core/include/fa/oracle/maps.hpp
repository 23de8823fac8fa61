#ifndef FA_ORACLE_MAPS_HPP
#define FA_ORACLE_MAPS_HPP

#include "fa/partitions.hpp"

#include <string>
#include <vector>

namespace fa::oracle {

/* A map of finite sets {0..src-1} -> {0..tgt-1}. */
struct FAMap {
    int src = 0;
    int tgt = 0;
    std::vector<int> img;

    FAMap() = default;
    FAMap(int tgt, std::vector<int> images);

    static FAMap identity(int n);
    bool is_injective() const;
    bool is_surjective() const;
    bool is_identity() const;
    std::string str() const;

    auto operator<=>(const FAMap&) const = default;
};

/* g after f */
FAMap compose(const FAMap& g, const FAMap& f);

/* Generators of FA: adjacent transpositions of t, the inclusion t -> t+1
 * missing the top point, and the fold t+1 -> t sending t to t-1. */
struct Generator {
    enum class Kind { Swap, Incl, Fold };
    Kind kind;
    int size; /* Swap: t; Incl: source t; Fold: target t */
    int j = 0;

    FAMap map() const;
    int source() const;
    int target() const;
    std::string str() const;
    auto operator<=>(const Generator&) const = default;
};

/* Every generator with source and target <= n. */
std::vector<Generator> generators_up_to(int n);

/* Word in application order: f = w[k-1] o ... o w[0].  Variants 0 and 1
 * choose collisions, extensions and sorting passes differently. */
std::vector<Generator> factorize(const FAMap& f, int variant = 0);

std::vector<FAMap> all_maps(int s, int t);

/* permutations as image arrays, lexicographic */
std::vector<std::vector<int>> all_permutations(int n);
std::vector<int> perm_of_type(const Partition& type);
std::vector<int> perm_inverse(const std::vector<int>& p);
std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b); /* a after b */
int perm_sign(const std::vector<int>& p);
Partition cycle_type(const std::vector<int>& p);

/* adjacent transposition (j j+1) of n as an image array */
std::vector<int> transposition(int n, int j);

} // namespace fa::oracle

#endif
