#include "redsyl/semidirect.hpp"

#include <algorithm>

namespace redsyl {

namespace {

std::vector<Vec> full_basis(std::size_t dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec v(dim, 0);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return rows;
}

bool all_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Felem x) { return x == 0; });
}

} // namespace

SemidirectGroup::SemidirectGroup(LinearAction action)
    : action_(std::move(action)), full_space_(action_.field(), action_.dim(), full_basis(action_.dim())) {
    if (action_.field().characteristic() == action_.group().p()) {
        throw Error(ErrorKind::SamePrime, "N must be a p'-group: field characteristic equals p");
    }
}

BigInt SemidirectGroup::n_order() const {
    return big_pow(BigInt(field().order()), dim());
}

BigInt SemidirectGroup::order() const { return n_order() * pgroup().order(); }

GElement SemidirectGroup::multiply(const GElement& a, const GElement& b) const {
    if (a.n.size() != dim() || b.n.size() != dim()) {
        throw Error(ErrorKind::ShapeError, "element dimension mismatch");
    }
    Vec n = action_.matrix(a.x).apply(b.n);
    const FieldGF& f = field();
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = f.add(a.n[i], n[i]);
    return GElement{std::move(n), pgroup().mul(a.x, b.x)};
}

GElement SemidirectGroup::inverse(const GElement& a) const {
    const int xi = pgroup().inv(a.x);
    Vec n = action_.matrix(xi).apply(a.n);
    const FieldGF& f = field();
    for (auto& e : n) e = f.neg(e);
    return GElement{std::move(n), xi};
}

GElement SemidirectGroup::conjugate(const GElement& a, const GElement& g) const {
    return multiply(multiply(g, a), inverse(g));
}

bool SemidirectGroup::is_identity(const GElement& a) const { return a.x == 0 && all_zero(a.n); }

BigInt SemidirectGroup::element_order(const GElement& a) const {
    const std::uint64_t r = pgroup().order_of(a.x);
    GElement acc = identity();
    for (std::uint64_t i = 0; i < r; ++i) acc = multiply(acc, a);
    if (all_zero(acc.n)) return BigInt(r);
    return BigInt(r) * field().characteristic();
}

bool SemidirectGroup::is_p_element(const GElement& a) const {
    const std::uint64_t r = pgroup().order_of(a.x);
    GElement acc = identity();
    for (std::uint64_t i = 0; i < r; ++i) acc = multiply(acc, a);
    return all_zero(acc.n);
}

BigInt SemidirectGroup::centralizer_in_n_order(int x) const {
    return centralizer_in_n(x).size();
}

BigInt SemidirectGroup::centralizer_order(int x) const {
    return centralizer_in_n_order(x) * pgroup().centralizer_size(x);
}

BigInt SemidirectGroup::sylow_count() const { return action_.fixed_space_all().coset_count(); }

void SemidirectGroup::for_each_sylow_rep(std::uint64_t ceiling,
                                         const std::function<void(const Vec&)>& fn) const {
    action_.fixed_space_all().for_each_coset_rep(ceiling, fn);
}

std::vector<Vec> SemidirectGroup::enumerate_sylows(std::uint64_t ceiling) const {
    std::vector<Vec> reps;
    for_each_sylow_rep(ceiling, [&](const Vec& v) { reps.push_back(v); });
    return reps;
}

void SemidirectGroup::for_each_n(std::uint64_t ceiling, const std::function<void(const Vec&)>& fn) const {
    full_space_.for_each_member(ceiling, fn);
}

SemidirectGroup::PElementCount SemidirectGroup::count_p_elements() const {
    PElementCount out;
    out.total = 0;
    const BigInt g_order = order();
    const auto& classes = pgroup().conjugacy_classes();
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        const int rep = classes.representatives[c];
        ClassCount cc;
        cc.rep = rep;
        cc.class_size = static_cast<int>(classes.classes[c].size());
        cc.centralizer_order = centralizer_order(rep);
        cc.count = g_order / cc.centralizer_order;
        if (cc.count * cc.centralizer_order != g_order) {
            throw Error(ErrorKind::InternalError, "centralizer order does not divide |G|");
        }
        out.total += cc.count;
        out.per_class.push_back(std::move(cc));
    }
    const BigInt p_order = pgroup().order();
    out.frobenius_multiplier = out.total / p_order;
    if (out.frobenius_multiplier * p_order != out.total) {
        throw Error(ErrorKind::InternalError, "|G_p| is not a multiple of |P|");
    }
    return out;
}

BigInt SemidirectGroup::lambda_linear(int x) const {
    const std::size_t d = centralizer_in_n(x).dim();
    const std::size_t d0 = action_.fixed_space_all().dim();
    return big_pow(BigInt(field().order()), d - d0);
}

BigInt SemidirectGroup::lambda_linear_subgroup(const std::vector<int>& members) const {
    const Subspace fixed = action_.fixed_space_of(members);
    const std::size_t d0 = action_.fixed_space_all().dim();
    return big_pow(BigInt(field().order()), fixed.dim() - d0);
}

std::optional<BigInt> SemidirectGroup::lambda_enumerated(int x, std::uint64_t ceiling) const {
    return lambda_enumerated_subgroup({x}, ceiling);
}

std::optional<BigInt> SemidirectGroup::lambda_enumerated_subgroup(const std::vector<int>& generators,
                                                                  std::uint64_t ceiling) const {
    if (sylow_count() > ceiling) return std::nullopt;
    BigInt count = 0;
    std::vector<GElement> gens;
    gens.reserve(generators.size());
    for (int x : generators) gens.push_back(embed_p(x));
    for_each_sylow_rep(ceiling, [&](const Vec& n) {
        const GElement t = embed_n(n);
        const GElement ti = inverse(t);
        for (const auto& xe : gens) {
            const GElement c = multiply(multiply(ti, xe), t);
            if (!all_zero(c.n)) return;
        }
        count += 1;
    });
    return count;
}

SemidirectGroup::SylowsContaining SemidirectGroup::sylows_containing(int x,
                                                                     std::uint64_t ceiling) const {
    SylowsContaining out;
    out.linear = lambda_linear(x);
    if (sylow_count() > ceiling) return out;
    std::vector<Vec> reps;
    const GElement xe = embed_p(x);
    for_each_sylow_rep(ceiling, [&](const Vec& n) {
        const GElement t = embed_n(n);
        const GElement c = multiply(multiply(inverse(t), xe), t);
        if (all_zero(c.n)) reps.push_back(n);
    });
    out.enumerated = BigInt(reps.size());
    out.representatives = std::move(reps);
    return out;
}

} // namespace redsyl
