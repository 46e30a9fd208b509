#ifndef REDSYL_SEMIDIRECT_HPP
#define REDSYL_SEMIDIRECT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "redsyl/action.hpp"
#include "redsyl/bigint.hpp"
#include "redsyl/gf.hpp"
#include "redsyl/pgroup.hpp"

namespace redsyl {

inline constexpr std::uint64_t kDefaultEnumerationCeiling = 1'000'000;

// Element (n, x) of G = N x| P with the product
// (n, x)(m, y) = (n + rho(x) m, x y).
struct GElement {
    Vec n;
    int x = 0;

    bool operator==(const GElement& other) const { return x == other.x && n == other.n; }
};

// G = N x| P for a linear action of P on N = GF(l)^dim. N is elementary
// abelian, P embeds as {(0, x)} and is a Sylow p-subgroup. Immutable; all
// queries are pure.
class SemidirectGroup {
public:
    explicit SemidirectGroup(LinearAction action);

    const LinearAction& action() const { return action_; }
    const PGroup& pgroup() const { return action_.group(); }
    const FieldGF& field() const { return action_.field(); }
    std::size_t dim() const { return action_.dim(); }

    BigInt n_order() const;
    BigInt order() const;

    GElement identity() const { return GElement{Vec(dim(), 0), 0}; }
    GElement embed_p(int x) const { return GElement{Vec(dim(), 0), x}; }
    GElement embed_n(Vec v) const { return GElement{std::move(v), 0}; }

    GElement multiply(const GElement& a, const GElement& b) const;
    GElement inverse(const GElement& a) const;
    // g a g^-1
    GElement conjugate(const GElement& a, const GElement& g) const;
    bool is_identity(const GElement& a) const;

    // Order via the normal form: (n,x)^r = (m, 1) with r the order of x, so
    // the order is r when m = 0 and r*l otherwise.
    BigInt element_order(const GElement& a) const;
    bool is_p_element(const GElement& a) const;

    // C_N(x) as a subspace basis.
    const Subspace& centralizer_in_n(int x) const { return action_.fixed_space(x); }
    BigInt centralizer_in_n_order(int x) const;
    // |C_G(x)| = |C_N(x)| * |C_P(x)| for x in P.
    BigInt centralizer_order(int x) const;

    // nu_p(G) = |N : C_N(P)|.
    BigInt sylow_count() const;

    // One canonical conjugating vector per Sylow subgroup (coset
    // representatives of C_N(P) in N, lexicographic order). Throws
    // TooLargeToEnumerate above the ceiling.
    void for_each_sylow_rep(std::uint64_t ceiling, const std::function<void(const Vec&)>& fn) const;
    std::vector<Vec> enumerate_sylows(std::uint64_t ceiling = kDefaultEnumerationCeiling) const;

    // All of N in lexicographic order (ceiling-gated).
    void for_each_n(std::uint64_t ceiling, const std::function<void(const Vec&)>& fn) const;

    struct ClassCount {
        int rep = 0;
        int class_size = 0;
        BigInt centralizer_order;
        BigInt count; // p-elements conjugate into this class
    };
    struct PElementCount {
        BigInt total;
        BigInt frobenius_multiplier; // |G_p| / |P|, integral by Frobenius
        std::vector<ClassCount> per_class;
    };
    // |G_p| by the class formula: sum over class representatives of
    // |G : C_G(x)|.
    PElementCount count_p_elements() const;

    // lambda_G(<x>): number of Sylow subgroups containing x, as the index
    // |C_N(x) : C_N(P)|.
    BigInt lambda_linear(int x) const;
    BigInt lambda_linear_subgroup(const std::vector<int>& members) const;
    // Same count by literally testing n^-1 x n in P over all Sylow
    // representatives; nullopt when enumeration exceeds the ceiling.
    std::optional<BigInt> lambda_enumerated(int x, std::uint64_t ceiling = kDefaultEnumerationCeiling) const;
    std::optional<BigInt> lambda_enumerated_subgroup(const std::vector<int>& generators,
                                                     std::uint64_t ceiling = kDefaultEnumerationCeiling) const;

    struct SylowsContaining {
        BigInt linear;
        std::optional<BigInt> enumerated;
        std::optional<std::vector<Vec>> representatives; // one per containing Sylow

        bool agree() const { return !enumerated || *enumerated == linear; }
    };
    // Both routes at once, with the witnessing conjugating vectors when the
    // enumeration fits the ceiling.
    SylowsContaining sylows_containing(int x, std::uint64_t ceiling = kDefaultEnumerationCeiling) const;

private:
    LinearAction action_;
    Subspace full_space_;
};

} // namespace redsyl

#endif
