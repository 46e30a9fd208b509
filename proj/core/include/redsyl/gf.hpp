#ifndef REDSYL_GF_HPP
#define REDSYL_GF_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "redsyl/bigint.hpp"
#include "redsyl/errors.hpp"

namespace redsyl {

// Field elements are codes 0..q-1. The code is the base-l digit expansion of
// the polynomial coefficients, constant term least significant. This encoding
// fixes the element enumeration order everywhere determinism is promised.
using Felem = std::uint32_t;
using Vec = std::vector<Felem>;

bool is_prime(std::uint64_t n);

// Decomposes n = l^k with l prime, k >= 1; nullopt if n is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power_decompose(std::uint64_t n);

inline constexpr std::uint64_t kDefaultFieldCeiling = std::uint64_t{1} << 20;

// GF(l^k) with the lexicographically smallest monic irreducible modulus of
// degree k (under the shared digit encoding), so element codes are
// reproducible across runs. Immutable after construction.
class FieldGF {
public:
    std::uint64_t characteristic() const { return char_; }
    int degree() const { return degree_; }
    std::uint64_t order() const { return order_; }
    // Monic modulus, constant term first; for degree 1 this is x itself.
    const std::vector<Felem>& modulus() const { return modulus_; }

    Felem add(Felem a, Felem b) const;
    Felem sub(Felem a, Felem b) const;
    Felem neg(Felem a) const;
    Felem mul(Felem a, Felem b) const;
    Felem inv(Felem a) const;
    Felem pow(Felem a, std::uint64_t e) const;

    std::vector<Felem> decode(Felem code) const;
    Felem encode(const std::vector<Felem>& digits) const;

    bool operator==(const FieldGF& other) const {
        return char_ == other.char_ && degree_ == other.degree_;
    }

    friend FieldGF make_field(std::uint64_t l, int k, std::uint64_t ceiling);

private:
    FieldGF() = default;

    std::uint64_t char_ = 0;
    int degree_ = 0;
    std::uint64_t order_ = 0;
    std::vector<Felem> modulus_;
};

FieldGF make_field(std::uint64_t l, int k, std::uint64_t ceiling = kDefaultFieldCeiling);

// A p-th root of unity zeta != 1, obtained as g^((q-1)/p) for the smallest
// nonzero g whose power is != 1. Requires p | q-1.
Felem element_of_order(const FieldGF& field, std::uint64_t p);

// Dense matrix over GF(q), row-major. All elimination is exact; there is no
// pivot tolerance.
class MatrixGF {
public:
    MatrixGF(FieldGF field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static MatrixGF identity(const FieldGF& field, std::size_t n);
    static MatrixGF from_rows(const FieldGF& field, const std::vector<Vec>& rows, std::size_t cols);

    const FieldGF& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Felem at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Felem v) { entries_[i * cols_ + j] = v; }

    MatrixGF mul(const MatrixGF& other) const;
    Vec apply(const Vec& v) const;
    MatrixGF sub(const MatrixGF& other) const;
    MatrixGF transpose() const;
    MatrixGF stack(const MatrixGF& below) const;

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    // Reduced-echelon basis of the null space (dimension + rank = cols).
    std::vector<Vec> kernel() const;

    // One solution of M x = b, or nullopt; deterministic (free variables 0).
    std::optional<Vec> solve_right(const Vec& b) const;

    std::optional<MatrixGF> inverse() const;

    bool operator==(const MatrixGF& other) const;

private:
    FieldGF field_;
    std::size_t rows_, cols_;
    std::vector<Felem> entries_;
};

// A subspace of GF(q)^n held as a reduced-echelon basis. The canonical coset
// representative (zeros at the pivot coordinates) is the lexicographically
// least vector of its coset.
class Subspace {
public:
    Subspace(const FieldGF& field, std::size_t ambient_dim, const std::vector<Vec>& spanning);

    const FieldGF& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    // Canonical representative of v's coset: v reduced to zero at all pivots.
    Vec coset_rep(const Vec& v) const;

    BigInt size() const;
    BigInt coset_count() const;

    // Visits the canonical coset representatives in lexicographic order.
    // Throws TooLargeToEnumerate when the coset count exceeds the ceiling.
    void for_each_coset_rep(std::uint64_t ceiling, const std::function<void(const Vec&)>& fn) const;
    // Visits every vector of the subspace itself, in lexicographic order of
    // the coordinate tuple on the basis.
    void for_each_member(std::uint64_t ceiling, const std::function<void(const Vec&)>& fn) const;

private:
    FieldGF field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

// Encodes a vector as an integer, first coordinate most significant. Only
// valid when q^dim fits; callers gate by the enumeration ceiling.
std::uint64_t vec_code(const FieldGF& field, const Vec& v);

} // namespace redsyl

#endif
