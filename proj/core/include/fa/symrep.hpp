#ifndef FA_SYMREP_HPP
#define FA_SYMREP_HPP

#include "fa/linalg.hpp"
#include "fa/partitions.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace fa {

/* chi[lambda][mu]: rows are irreducibles, columns cycle types, both in
 * partitions_of(n) order */
struct CharacterTable {
    int n = 0;
    std::vector<Partition> partitions;
    std::vector<std::vector<std::int64_t>> chi;
    std::vector<std::int64_t> class_sizes;
};

/* Default 12.  Tables above the limit are rejected with std::out_of_range. */
void set_character_table_limit(int n);
int character_table_limit();

/* Cached, immutable; safe to call from several threads. */
std::shared_ptr<const CharacterTable> character_table(int n);

/* Murnaghan-Nakayama value without the cache */
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

class ClassFunction {
public:
    ClassFunction() : ClassFunction(0) {}
    explicit ClassFunction(int n);

    int n() const { return n_; }
    const std::vector<Rational>& values() const { return values_; }
    Rational& operator[](const Partition& cycle_type);
    const Rational& operator[](const Partition& cycle_type) const;
    Rational& at_index(int i) { return values_[i]; }
    const Rational& at_index(int i) const { return values_[i]; }

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction operator+(const ClassFunction& other) const;
    ClassFunction operator*(const ClassFunction& other) const; /* pointwise */
    ClassFunction scaled(const Rational& c) const;
    bool operator==(const ClassFunction& other) const = default;

    static ClassFunction irreducible(const Partition& lambda);
    static ClassFunction trivial(int n);
    static ClassFunction sign(int n);
    static ClassFunction regular(int n);

    /* (1/n!) sum |C| f(C) g(C) */
    Rational inner(const ClassFunction& other) const;

private:
    int n_;
    std::vector<Rational> values_;
};

/* Multiplicities of irreducibles; zero entries are never stored. */
struct IrrDecomposition {
    int n = 0;
    std::map<Partition, std::int64_t> mults;

    std::int64_t operator[](const Partition& p) const;
    void add(const Partition& p, std::int64_t c);
    IrrDecomposition& operator+=(const IrrDecomposition& other);
    IrrDecomposition operator+(const IrrDecomposition& other) const;
    IrrDecomposition scaled(std::int64_t c) const;
    bool operator==(const IrrDecomposition& other) const = default;

    std::int64_t dimension() const;
    bool is_effective() const;
    bool is_zero() const { return mults.empty(); }
    ClassFunction character() const;

    static IrrDecomposition single(const Partition& p, std::int64_t c = 1);
};

struct DecomposeResult {
    std::map<Partition, Rational> exact; /* every irreducible of degree n */
    IrrDecomposition decomposition;      /* valid when integral */
    bool integral = true;
    bool is_virtual = false; /* some multiplicity negative or non-integral */
};

DecomposeResult decompose(const ClassFunction& f);

/* Throws std::domain_error if f is not an integral combination. */
IrrDecomposition decompose_integral(const ClassFunction& f);

/* Character of Ind_{S_m x S_n}^{S_{m+n}} (a x b) */
ClassFunction induced_character(const ClassFunction& a, const ClassFunction& b);
IrrDecomposition induction_product(const IrrDecomposition& a, const IrrDecomposition& b);

IrrDecomposition kronecker(const IrrDecomposition& a, const IrrDecomposition& b);
IrrDecomposition sign_twist(const IrrDecomposition& a);

/* multiplicity of the sign representation, (1^k); for k = 0 the trivial */
std::int64_t sgn_coinvariants(const IrrDecomposition& a);

/* Class function of S_s x S_t, indexed [alpha][beta] in partitions_of order;
 * alpha is the cycle type acting on the domain s, beta on the codomain t. */
struct BiClassFunction {
    int s = 0;
    int t = 0;
    std::vector<std::vector<Rational>> values;

    const Rational& at(const Partition& alpha, const Partition& beta) const;
    Rational total() const { return values.empty() ? Rational(0) : values.back().back(); }
};

/* Pairs (lambda, mu) with multiplicity of S_lambda x S_mu. */
using BimodDecomposition = std::map<std::pair<Partition, Partition>, std::int64_t>;

BimodDecomposition decompose_bimodule(const BiClassFunction& f);

/* Fixed points of (sigma, tau) on maps s -> t, f -> tau f sigma^{-1}.  With
 * surjective_only the inclusion-exclusion count is compared against direct
 * enumeration wherever that is affordable; a mismatch throws std::logic_error. */
BiClassFunction perm_character_maps(int s, int t, bool surjective_only);

/* the two surjection counts, exposed for tests */
std::int64_t surjection_fixed_points_ie(const Partition& alpha, const Partition& beta);
std::int64_t surjection_fixed_points_enum(const Partition& alpha, const Partition& beta);
std::int64_t map_fixed_points(const Partition& alpha, const Partition& beta);

} // namespace fa

#endif
