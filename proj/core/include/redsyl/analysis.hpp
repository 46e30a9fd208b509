#ifndef REDSYL_ANALYSIS_HPP
#define REDSYL_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redsyl/bigint.hpp"
#include "redsyl/semidirect.hpp"

namespace redsyl {

struct Budgets {
    // Enumerations of N, Sylow representatives and coset systems stop here.
    std::uint64_t enumeration_ceiling = kDefaultEnumerationCeiling;
    // Element-by-element verification passes run only when |G| fits.
    std::uint64_t exhaustive_group_ceiling = 100'000;
    // Exact set cover is attempted when nu_p or the universe is small enough.
    std::uint64_t exact_cover_max_sylows = 64;
    std::uint64_t exact_cover_max_universe = 512;
    std::uint64_t exact_cover_node_budget = 2'000'000;
    // Exact union ratios cap the subset size.
    int union_ratio_max_n = 4;
};

enum class CoverMethod { Transversal, CommonTransversal, Greedy, Exact, All };

const char* cover_method_name(CoverMethod method);

// A set of Sylow subgroups {tPt^-1 : t in representatives} intended to cover
// the p-elements of G.
struct SylowCover {
    std::vector<Vec> representatives;
    CoverMethod method = CoverMethod::All;
    bool verified = false;
    bool verified_exhaustively = false; // literal element-by-element pass ran
};

struct RedundancyWitness {
    int rep = 0; // class representative x
    Vec vector;  // w in C_N(x) outside C_N(P); (w,1) centralizes (0,x)
};

struct RedundancyResult {
    bool redundant = false;
    std::vector<RedundancyWitness> witnesses; // one per class rep when redundant
    // Union-of-other-Sylows enumeration, when nu_p fits the ceiling.
    std::optional<bool> oracle_redundant;

    bool oracle_agrees() const { return !oracle_redundant || *oracle_redundant == redundant; }
};

struct LambdaEntry {
    int rep = 0;
    int class_size = 0;
    BigInt linear;                  // |C_N(x) : C_N(P)|
    std::optional<BigInt> enumerated; // literal count over Sylow representatives

    bool agree() const { return !enumerated || *enumerated == linear; }
    const BigInt& value() const { return enumerated ? *enumerated : linear; }
};

struct CasoloEntry {
    int generator = 0;
    std::uint64_t subgroup_order = 1;
    BigInt lambda;
    bool lambda_was_enumerated = false;
    BigInt lambda_linear;
    BigInt normalizer_index; // |N_G(P) : P|
    BigInt fixed_order;      // |C_N(H)|
    bool holds = false;
};

struct CasoloResult {
    bool verified = false;
    std::vector<CasoloEntry> entries;
};

struct GheriResult {
    BigInt lhs; // nu_p^(|P|/p)
    BigInt rhs; // product of lambda_G(x) over all x in P
    bool satisfied = false;
};

struct BoundCheck {
    std::string name;
    std::string relation;
    BigInt lhs;
    BigInt rhs;
    bool applicable = true;
    bool satisfied = true;
};

struct MinimalCoverResult {
    SylowCover cover;
    bool exact = false; // proven minimum (branch and bound completed)
};

struct UnionRatioResult {
    int n = 0;
    BigInt numerator;   // largest |P_1 u ... u P_n| over n-subsets (or greedy bound)
    BigInt denominator; // |G_p|
    bool exact = false;
    bool covers_all = false;
};

// Redundancy of P via the fixed-space criterion (C_N(x) > C_N(P) for every
// x), with per-class witnesses and an enumeration cross-check when feasible.
RedundancyResult is_redundant(const SemidirectGroup& G, const Budgets& budgets = {});

// lambda_G(x) per conjugacy class representative, both routes.
std::vector<LambdaEntry> lambda_table(const SemidirectGroup& G, const Budgets& budgets = {});

// Union of one deterministic transversal per N_i = C_N(P_i); covers G_p with
// at most (p+1) |N : N_1| subgroups. Requires thm1/thm2 provenance.
SylowCover transversal_cover(const SemidirectGroup& G, const Budgets& budgets = {});

// A simultaneous transversal for the cosets of N_{2i-1} and N_{2i} (pair
// indices start at 1), built from a perfect matching on intersecting cosets.
std::vector<Vec> common_transversal(const SemidirectGroup& G, int pair_index,
                                    const Budgets& budgets = {});

// Same construction for two arbitrary equal-index subspaces of N.
std::vector<Vec> common_transversal_for(const SemidirectGroup& G, const Subspace& first,
                                        const Subspace& second, const Budgets& budgets = {});

// Common transversals for the pairs (N_1,N_2), (N_3,N_4), ... plus a plain
// transversal for a leftover N_{p+1}; covers G_p with at most
// ceil((p+1)/2) |N : N_1| <= (2/3) nu_p subgroups.
SylowCover improved_cover(const SemidirectGroup& G, const Budgets& budgets = {});

// Minimum-cardinality cover of the p-elements by Sylow subgroups: exact
// branch and bound within budget, else greedy; greedy mode skips the search.
MinimalCoverResult minimal_cover(const SemidirectGroup& G, CoverMethod mode,
                                 const Budgets& budgets = {});

// Smallest number of Sylow subgroups other than P covering P itself (the
// quantity k of the p^2+p+1 bound); nullopt when P is not redundant.
struct RestrictedCoverResult {
    std::optional<BigInt> k;
    bool exact = false;
};
RestrictedCoverResult restricted_cover_size(const SemidirectGroup& G, const Budgets& budgets = {});

// lambda_G(H) |N_G(P):P| = |C_N(H)| for every cyclic H <= P.
CasoloResult check_casolo(const SemidirectGroup& G, const Budgets& budgets = {});

// nu_p^(|P|/p) >= prod_x lambda_G(x), exact big-integer arithmetic.
GheriResult check_gheri(const SemidirectGroup& G, const Budgets& budgets = {});

// All bound checks for the instance; rows carry an applicability flag.
std::vector<BoundCheck> check_bounds(const SemidirectGroup& G, const RedundancyResult& redundancy,
                                     const GheriResult& gheri,
                                     const std::vector<LambdaEntry>& lambdas,
                                     const Budgets& budgets = {});

// Largest fraction of G_p covered by n Sylow subgroups.
UnionRatioResult union_ratio(const SemidirectGroup& G, int n, CoverMethod mode,
                             const Budgets& budgets = {});

// Independent verification pass for a cover: the coset criterion for every
// x in P, plus a literal element-marking pass when |G| is small enough.
// Returns (verified, exhaustive_ran).
std::pair<bool, bool> verify_cover(const SemidirectGroup& G, const std::vector<Vec>& reps,
                                   const Budgets& budgets = {});

// Size bounds the transversal-style covers must satisfy, as integer rows.
std::vector<BoundCheck> cover_bound_checks(const SemidirectGroup& G, const SylowCover& cover);

// Order, class-size multiset and element-order histogram of G itself,
// computed by brute force; a necessary-condition fingerprint for comparing
// constructions. Requires |G| within the exhaustive ceiling.
struct SemidirectFingerprint {
    BigInt order;
    std::vector<BigInt> class_sizes;               // sorted
    std::vector<std::pair<BigInt, BigInt>> order_hist; // (element order, count)

    bool operator==(const SemidirectFingerprint& other) const = default;
};
SemidirectFingerprint semidirect_fingerprint(const SemidirectGroup& G, const Budgets& budgets = {});

// |G_p| by powering every element of G to |P|; the independent route to the
// class-formula count. Requires |G| within the exhaustive ceiling.
BigInt count_p_elements_exhaustive(const SemidirectGroup& G, const Budgets& budgets = {});

} // namespace redsyl

#endif
