#include <doctest.h>

#include <random>

#include "redsyl/action.hpp"
#include "oracles.hpp"

using namespace redsyl;

namespace {

std::shared_ptr<const PGroup> group(const std::string& name) {
    return std::make_shared<const PGroup>(PGroup::catalog(name));
}

std::vector<std::vector<long long>> fixed_system(const LinearAction& a, int x) {
    const MatrixGF d = a.matrix(x).sub(MatrixGF::identity(a.field(), a.dim()));
    std::vector<std::vector<long long>> out(d.rows(), std::vector<long long>(d.cols()));
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) out[i][j] = d.at(i, j);
    }
    return out;
}

bool is_fixed(const LinearAction& a, int x, const Vec& v) {
    return a.matrix(x).apply(v) == v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Felem x) { return x == 0; });
}

int rank_of(const FieldGF& f, const std::vector<Vec>& vecs, std::size_t cols) {
    if (vecs.empty()) return 0;
    return static_cast<int>(MatrixGF::from_rows(f, vecs, cols).rank());
}

} // namespace

TEST_CASE("thm1 action on the Klein four-group") {
    const LinearAction a = thm1_action(group("C2^2"), 3);
    CHECK(a.dim() == 3);
    CHECK(a.field().order() == 3);
    CHECK(a.provenance() == Provenance::Thm1);
    CHECK(a.fixed_space_all().dim() == 0); // C_N(P) = 1

    // Each involution fixes exactly a line (independent row-reduction oracle).
    for (int x = 1; x < 4; ++x) {
        CHECK(a.fixed_space(x).dim() == 1);
        CHECK(oracle::kernel_dim_mod_p(fixed_system(a, x), 3) == 1);
    }

    const LinearAction a5 = thm1_action(group("C2^2"), 5);
    for (int x = 1; x < 4; ++x) {
        CHECK(oracle::kernel_dim_mod_p(fixed_system(a5, x), 5) == 1);
    }

    const LinearAction a2 = thm1_action(group("C3^2"), 2);
    CHECK(a2.dim() == 8);
    for (int x = 1; x < 9; ++x) {
        CHECK(oracle::kernel_dim_mod_p(fixed_system(a2, x), 2) == 2);
    }
}

TEST_CASE("thm1 rejects bad parameters") {
    CHECK_THROWS_AS(thm1_action(group("C2^2"), 4), Error);
    CHECK_THROWS_AS(thm1_action(group("C2^2"), 2), Error);
    CHECK_THROWS_AS(thm1_action(group("C2"), 3), Error);
    try {
        thm1_action(group("C2"), 3);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CyclicGroup);
    }
    try {
        thm1_action(group("C2^2"), 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SamePrime);
    }
}

TEST_CASE("witness fixed vectors") {
    const LinearAction a = thm1_action(group("C2^2"), 3);
    // Identity: the class of v_1, nonzero.
    const Vec w1 = witness_fixed_vector(a, 0);
    CHECK(!is_zero(w1));
    CHECK(w1 == Vec{2, 2, 2});
    for (int x = 1; x < 4; ++x) {
        const Vec w = witness_fixed_vector(a, x);
        CHECK(!is_zero(w));
        CHECK(is_fixed(a, x, w));
    }

    // Q8 over GF(3): the central involution (index 2) has a nonzero fixed witness.
    const LinearAction q = thm1_action(group("Q8"), 3);
    for (int x = 0; x < 8; ++x) {
        const Vec w = witness_fixed_vector(q, x);
        CHECK(!is_zero(w));
        CHECK(is_fixed(q, x, w));
    }

    const LinearAction t2 = thm2_action(group("C2^2"));
    CHECK_THROWS_AS(witness_fixed_vector(t2, 1), Error);
    try {
        witness_fixed_vector(t2, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongProvenance);
    }
}

TEST_CASE("coset fixed vectors") {
    const LinearAction a = thm1_action(group("C2^2"), 3);
    // x = identity: one vector per group element, spanning all of N.
    const auto all = coset_fixed_basis(a, 0);
    CHECK(all.size() == 4);
    CHECK(rank_of(a.field(), all, a.dim()) == 3);

    // x an involution: two coset vectors spanning only a line (their sum is
    // the class of the all-ones vector, which dies in N).
    for (int x = 1; x < 4; ++x) {
        const auto vecs = coset_fixed_basis(a, x);
        CHECK(vecs.size() == 2);
        for (const Vec& v : vecs) CHECK(is_fixed(a, x, v));
        CHECK(rank_of(a.field(), vecs, a.dim()) == 1);
    }

    const LinearAction a2 = thm1_action(group("C3^2"), 2);
    for (int x = 1; x < 9; ++x) {
        const auto vecs = coset_fixed_basis(a2, x);
        CHECK(vecs.size() == 3);
        for (const Vec& v : vecs) CHECK(is_fixed(a2, x, v));
        CHECK(rank_of(a2.field(), vecs, a2.dim()) == 2);
    }

    // Dimension property: rank >= |P : <x>| - 1 for every catalog instance.
    for (const char* name : {"C4xC2", "D8", "Q8"}) {
        const LinearAction act = thm1_action(group(name), 3);
        const PGroup& p = act.group();
        for (int x = 0; x < p.order(); ++x) {
            const auto vecs = coset_fixed_basis(act, x);
            const int index = p.order() / static_cast<int>(p.order_of(x));
            CHECK(static_cast<int>(vecs.size()) == index);
            CHECK(rank_of(act.field(), vecs, act.dim()) >= index - 1);
        }
    }
}

TEST_CASE("smallest prime power congruent to 1 mod p") {
    CHECK(smallest_prime_power_1modp(2) == 3);
    CHECK(smallest_prime_power_1modp(3) == 4);
    CHECK(smallest_prime_power_1modp(5) == 11);
    CHECK(smallest_prime_power_1modp(7) == 8);
    CHECK(smallest_prime_power_1modp(11) == 23);
    CHECK(smallest_prime_power_1modp(13) == 27);
    CHECK(smallest_prime_power_1modp(17) == 103);
    CHECK(smallest_prime_power_1modp(19) == 191);
    CHECK(smallest_prime_power_1modp(23) == 47);
    CHECK(smallest_prime_power_1modp(29) == 59);
    CHECK_THROWS_AS(smallest_prime_power_1modp(6), Error);
}

TEST_CASE("thm2 action") {
    const LinearAction a = thm2_action(group("C2^2"));
    CHECK(a.provenance() == Provenance::Thm2);
    REQUIRE(a.thm2() != nullptr);
    CHECK(a.thm2()->scalar_field.order() == 3);
    CHECK(a.field().order() == 3);
    CHECK(a.dim() == 3); // (p+1) * degree = 3 * 1
    CHECK(a.fixed_space_all().dim() == 0);

    const LinearAction b = thm2_action(group("C3^2"));
    CHECK(b.thm2()->scalar_field.order() == 4);
    CHECK(b.field().order() == 2);
    CHECK(b.dim() == 8); // 4 blocks of degree 2
    CHECK(b.fixed_space_all().dim() == 0);
    // Every x kills at least one summand: fixed dimension >= degree.
    for (int x = 0; x < 9; ++x) {
        CHECK(b.fixed_space(x).dim() >= 2);
        CHECK(oracle::kernel_dim_mod_p(fixed_system(b, x), 2) ==
              static_cast<int>(b.fixed_space(x).dim()));
    }

    const LinearAction q = thm2_action(group("Q8"));
    for (int x = 0; x < 8; ++x) {
        CHECK(q.fixed_space(x).dim() >= 1);
    }

    CHECK_THROWS_AS(thm2_action(group("C9")), Error);
}

TEST_CASE("thm1 fixed dimensions match the coset bound with equality") {
    for (auto [name, q] : {std::pair<const char*, std::uint64_t>{"C2^2", 3}, {"C2^2", 5},
                           {"C4xC2", 3}, {"D8", 3}, {"Q8", 3}, {"C3^2", 2}}) {
        const LinearAction a = thm1_action(group(name), q);
        const PGroup& p = a.group();
        for (int x = 0; x < p.order(); ++x) {
            const int index = p.order() / static_cast<int>(p.order_of(x));
            CHECK(static_cast<int>(a.fixed_space(x).dim()) == index - 1);
        }
    }
}

TEST_CASE("custom actions validate the homomorphism property") {
    auto p = group("C2^2");
    const FieldGF f3 = make_field(3, 1);
    std::vector<MatrixGF> trivial(4, MatrixGF::identity(f3, 2));
    const LinearAction a = LinearAction::custom(p, f3, trivial);
    CHECK(a.provenance() == Provenance::Custom);
    CHECK(a.fixed_space_all().dim() == 2);

    // A non-homomorphism is rejected.
    std::vector<MatrixGF> bad(4, MatrixGF::identity(f3, 2));
    bad[1].set(0, 0, 2); // diag(2,1): its square is diag(4,1) != I = rho(1*1)
    CHECK_THROWS_AS(LinearAction::custom(p, f3, bad), Error);

    // Spot check rho(x) rho(y) = rho(xy) on a constructed action.
    const LinearAction t = thm2_action(group("Heis3"));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(0, 26);
    for (int trial = 0; trial < 20; ++trial) {
        const int x = dist(rng), y = dist(rng);
        CHECK(t.matrix(x).mul(t.matrix(y)) == t.matrix(t.group().mul(x, y)));
    }
}
