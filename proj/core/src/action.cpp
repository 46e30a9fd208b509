#include "redsyl/action.hpp"

#include <algorithm>

namespace redsyl {

const char* provenance_name(Provenance prov) {
    switch (prov) {
        case Provenance::Thm1: return "thm1";
        case Provenance::Thm2: return "thm2";
        case Provenance::Custom: return "custom";
    }
    return "?";
}

LinearAction::LinearAction(std::shared_ptr<const PGroup> group, FieldGF field,
                           std::vector<MatrixGF> matrices, Provenance prov,
                           std::unique_ptr<Thm2Data> thm2, bool require_trivial_fixed)
    : group_(std::move(group)),
      field_(std::move(field)),
      dim_(matrices.empty() ? 0 : matrices[0].rows()),
      matrices_(std::move(matrices)),
      provenance_(prov),
      thm2_(std::move(thm2)) {
    const int n = group_->order();
    if (static_cast<int>(matrices_.size()) != n) {
        throw Error(ErrorKind::ShapeError, "need one matrix per group element");
    }
    for (const auto& m : matrices_) {
        if (m.rows() != dim_ || m.cols() != dim_) {
            throw Error(ErrorKind::ShapeError, "action matrices must be square of equal size");
        }
    }
    if (!(matrices_[0] == MatrixGF::identity(field_, dim_))) {
        throw Error(ErrorKind::InvalidGroupTable, "identity element must act as the identity matrix");
    }
    // Exhaustive homomorphism check.
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!(matrices_[static_cast<std::size_t>(x)].mul(matrices_[static_cast<std::size_t>(y)]) ==
                  matrices_[static_cast<std::size_t>(group_->mul(x, y))])) {
                throw Error(ErrorKind::InvalidGroupTable, "matrices do not define a homomorphism");
            }
        }
    }
    // Invertibility follows from the homomorphism property: rho(x)*rho(x^-1) = I.

    fixed_.reserve(static_cast<std::size_t>(n));
    const MatrixGF ident = MatrixGF::identity(field_, dim_);
    for (int x = 0; x < n; ++x) {
        MatrixGF d = matrices_[static_cast<std::size_t>(x)].sub(ident);
        fixed_.emplace_back(field_, dim_, d.kernel());
    }
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) all[static_cast<std::size_t>(x)] = x;
    fixed_all_ = std::make_shared<Subspace>(fixed_space_of(all));

    if (require_trivial_fixed && fixed_all_->dim() != 0) {
        throw Error(ErrorKind::InternalError, "construction must have trivial C_N(P)");
    }
}

Subspace LinearAction::fixed_space_of(const std::vector<int>& elements) const {
    // ker of the stacked (rho(x) - I).
    const MatrixGF ident = MatrixGF::identity(field_, dim_);
    MatrixGF stacked(field_, 0, dim_);
    for (int x : elements) {
        if (x == 0) continue;
        stacked = stacked.stack(matrices_[static_cast<std::size_t>(x)].sub(ident));
    }
    if (stacked.rows() == 0) {
        // Only the identity acts: everything is fixed.
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < dim_; ++i) {
            Vec v(dim_, 0);
            v[i] = 1;
            rows.push_back(std::move(v));
        }
        return Subspace(field_, dim_, rows);
    }
    return Subspace(field_, dim_, stacked.kernel());
}

LinearAction LinearAction::custom(std::shared_ptr<const PGroup> group, FieldGF field,
                                  std::vector<MatrixGF> matrices) {
    return LinearAction(std::move(group), std::move(field), std::move(matrices), Provenance::Custom,
                        nullptr, false);
}

LinearAction thm1_action(std::shared_ptr<const PGroup> group, std::uint64_t q) {
    if (!is_prime(q)) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q) + " is not prime");
    if (q == group->p()) throw Error(ErrorKind::SamePrime, "q must differ from p");
    if (group->is_cyclic()) {
        throw Error(ErrorKind::CyclicGroup, "group " + group->name() + " is cyclic");
    }
    const FieldGF field = make_field(q, 1);
    const int n = group->order();
    const std::size_t dim = static_cast<std::size_t>(n) - 1;
    const Felem minus_one = field.neg(1);

    std::vector<MatrixGF> matrices;
    matrices.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        MatrixGF m(field, dim, dim);
        for (int g = 1; g < n; ++g) {
            const int xg = group->mul(x, g);
            const std::size_t col = static_cast<std::size_t>(g) - 1;
            if (xg != 0) {
                m.set(static_cast<std::size_t>(xg) - 1, col, 1);
            } else {
                // v_1 + Z = -(sum of the other basis classes)
                for (std::size_t row = 0; row < dim; ++row) m.set(row, col, minus_one);
            }
        }
        matrices.push_back(std::move(m));
    }
    return LinearAction(std::move(group), field, std::move(matrices), Provenance::Thm1, nullptr, true);
}

std::uint64_t smallest_prime_power_1modp(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, "p = " + std::to_string(p) + " is not prime");
    for (std::uint64_t q = 2;; ++q) {
        if (q % p == 1 && prime_power_decompose(q)) return q;
    }
}

LinearAction thm2_action(std::shared_ptr<const PGroup> group) {
    const std::uint64_t p = group->p();
    const std::uint64_t q = smallest_prime_power_1modp(p);
    const auto [l, k] = *prime_power_decompose(q);
    const FieldGF scalar = make_field(l, k);
    const FieldGF prime_field = make_field(l, 1);
    const Felem zeta = element_of_order(scalar, p);

    auto cover = group->maximal_cover(); // throws CyclicGroup when P is cyclic
    std::vector<std::vector<int>> homs;
    homs.reserve(cover.size());
    for (const auto& sub : cover) homs.push_back(group->hom_to_cp(sub));

    const int n = group->order();
    const std::size_t blocks = cover.size(); // p + 1
    const std::size_t dim = blocks * static_cast<std::size_t>(k);

    std::vector<MatrixGF> matrices;
    matrices.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        MatrixGF m(prime_field, dim, dim);
        for (std::size_t i = 0; i < blocks; ++i) {
            const int e = homs[i][static_cast<std::size_t>(x)];
            const Felem scale = scalar.pow(zeta, static_cast<std::uint64_t>(e));
            // k x k block: multiplication by zeta^e on GF(q) over GF(l);
            // column t is zeta^e * x^t in digit coordinates.
            for (int t = 0; t < k; ++t) {
                std::uint64_t xt = 1;
                for (int s = 0; s < t; ++s) xt *= l;
                const Felem prod = scalar.mul(scale, static_cast<Felem>(xt));
                const auto digits = scalar.decode(prod);
                for (int r = 0; r < k; ++r) {
                    m.set(i * static_cast<std::size_t>(k) + static_cast<std::size_t>(r),
                          i * static_cast<std::size_t>(k) + static_cast<std::size_t>(t),
                          digits[static_cast<std::size_t>(r)]);
                }
            }
        }
        matrices.push_back(std::move(m));
    }
    auto data = std::unique_ptr<Thm2Data>(new Thm2Data{scalar, zeta, std::move(cover), std::move(homs)});
    return LinearAction(std::move(group), prime_field, std::move(matrices), Provenance::Thm2,
                        std::move(data), true);
}

Vec witness_fixed_vector(const LinearAction& action, int x) {
    if (action.provenance() != Provenance::Thm1) {
        throw Error(ErrorKind::WrongProvenance, "witness vectors require thm1 provenance");
    }
    const PGroup& g = action.group();
    const FieldGF& f = action.field();
    Vec w(action.dim(), 0);
    int c = 0;
    do {
        if (c != 0) {
            w[static_cast<std::size_t>(c) - 1] = f.add(w[static_cast<std::size_t>(c) - 1], 1);
        } else {
            // class of v_1 is minus the sum of the quotient basis
            for (auto& entry : w) entry = f.sub(entry, 1);
        }
        c = g.mul(c, x);
    } while (c != 0);
    return w;
}

std::vector<Vec> coset_fixed_basis(const LinearAction& action, int x) {
    if (action.provenance() != Provenance::Thm1) {
        throw Error(ErrorKind::WrongProvenance, "coset vectors require thm1 provenance");
    }
    const PGroup& g = action.group();
    const FieldGF& f = action.field();
    const int n = g.order();

    std::vector<int> cyc;
    int c = 0;
    do {
        cyc.push_back(c);
        c = g.mul(c, x);
    } while (c != 0);

    std::vector<Vec> out;
    std::vector<bool> marked(static_cast<std::size_t>(n), false);
    for (int rep = 0; rep < n; ++rep) {
        if (marked[static_cast<std::size_t>(rep)]) continue;
        Vec w(action.dim(), 0);
        for (int e : cyc) {
            const int member = g.mul(e, rep); // right coset <x> rep
            marked[static_cast<std::size_t>(member)] = true;
            if (member != 0) {
                w[static_cast<std::size_t>(member) - 1] = f.add(w[static_cast<std::size_t>(member) - 1], 1);
            } else {
                for (auto& entry : w) entry = f.sub(entry, 1);
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace redsyl
