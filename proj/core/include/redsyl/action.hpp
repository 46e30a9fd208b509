#ifndef REDSYL_ACTION_HPP
#define REDSYL_ACTION_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "redsyl/gf.hpp"
#include "redsyl/pgroup.hpp"

namespace redsyl {

enum class Provenance { Thm1, Thm2, Custom };

const char* provenance_name(Provenance prov);

// Extra structure carried by the root-of-unity construction: the scalar field
// GF(q), the chosen p-th root zeta, and the p+1 maximal subgroups with their
// Z/p quotient maps. The block matrices themselves live over the prime field.
struct Thm2Data {
    FieldGF scalar_field;
    Felem zeta = 0;
    std::vector<SubgroupOfP> maximal_subgroups;
    std::vector<std::vector<int>> homs;
};

// A linear action of P on N = GF(l)^dim: one invertible matrix per group
// element. The homomorphism property is verified exhaustively at
// construction. Immutable afterwards; fixed spaces are precomputed.
class LinearAction {
public:
    static LinearAction custom(std::shared_ptr<const PGroup> group, FieldGF field,
                               std::vector<MatrixGF> matrices);

    const PGroup& group() const { return *group_; }
    const std::shared_ptr<const PGroup>& group_ptr() const { return group_; }
    const FieldGF& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    Provenance provenance() const { return provenance_; }
    // The prime q of the regular-quotient construction (equals the field
    // characteristic); only meaningful for Thm1 provenance.
    std::uint64_t thm1_q() const { return field_.characteristic(); }
    const Thm2Data* thm2() const { return thm2_ ? thm2_.get() : nullptr; }

    const MatrixGF& matrix(int x) const { return matrices_[static_cast<std::size_t>(x)]; }

    // C_N(x) = ker(rho(x) - I).
    const Subspace& fixed_space(int x) const { return fixed_[static_cast<std::size_t>(x)]; }
    // C_N(P).
    const Subspace& fixed_space_all() const { return *fixed_all_; }
    // C_N(H) for an arbitrary element set H.
    Subspace fixed_space_of(const std::vector<int>& elements) const;

private:
    LinearAction(std::shared_ptr<const PGroup> group, FieldGF field, std::vector<MatrixGF> matrices,
                 Provenance prov, std::unique_ptr<Thm2Data> thm2, bool require_trivial_fixed);

    friend LinearAction thm1_action(std::shared_ptr<const PGroup> group, std::uint64_t q);
    friend LinearAction thm2_action(std::shared_ptr<const PGroup> group);

    std::shared_ptr<const PGroup> group_;
    FieldGF field_;
    std::size_t dim_;
    std::vector<MatrixGF> matrices_;
    Provenance provenance_;
    std::shared_ptr<Thm2Data> thm2_;
    std::vector<Subspace> fixed_;
    std::shared_ptr<Subspace> fixed_all_;
};

// Action of P on N = V/Z where V is the regular module over GF(q) (basis
// permuted by left multiplication) and Z the span of the all-ones vector.
// Coordinates use the quotient basis {v_g + Z : g != identity}, so the class
// of v_1 is minus the sum of all basis vectors. Requires q prime, q != p,
// P non-cyclic.
LinearAction thm1_action(std::shared_ptr<const PGroup> group, std::uint64_t q);

// Action of P on the direct sum of p+1 one-dimensional GF(q)-modules, the
// i-th with kernel the i-th maximal-cover subgroup, q the smallest prime
// power congruent to 1 mod p. Matrices are block diagonal over the prime
// field. Requires P non-cyclic.
LinearAction thm2_action(std::shared_ptr<const PGroup> group);

// Least q > 1 with q a prime power and q = 1 (mod p).
std::uint64_t smallest_prime_power_1modp(std::uint64_t p);

// The class in N of the sum of v_c over c in <x>: a nonzero vector fixed by
// rho(x) (Thm1 provenance only).
Vec witness_fixed_vector(const LinearAction& action, int x);

// The classes in N of the right-coset sums w_C, C running over the right
// cosets of <x>; all fixed by rho(x) (Thm1 provenance only).
std::vector<Vec> coset_fixed_basis(const LinearAction& action, int x);

} // namespace redsyl

#endif
