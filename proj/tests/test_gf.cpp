#include <doctest.h>

#include <random>

#include "redsyl/gf.hpp"
#include "oracles.hpp"

using namespace redsyl;

namespace {

MatrixGF random_matrix(const FieldGF& f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
    MatrixGF m(f, rows, cols);
    std::uniform_int_distribution<Felem> dist(0, static_cast<Felem>(f.order() - 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, dist(rng));
    }
    return m;
}

std::vector<std::vector<long long>> to_oracle(const MatrixGF& m) {
    std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
    }
    return out;
}

} // namespace

TEST_CASE("make_field basics") {
    const FieldGF f3 = make_field(3, 1);
    CHECK(f3.order() == 3);
    CHECK(f3.characteristic() == 3);
    CHECK(f3.modulus() == std::vector<Felem>{0, 1}); // x

    // The only irreducible quadratic over GF(2) is x^2 + x + 1.
    const FieldGF f4 = make_field(2, 2);
    CHECK(f4.order() == 4);
    CHECK(f4.modulus() == std::vector<Felem>{1, 1, 1});

    const FieldGF f11 = make_field(11, 1);
    CHECK(f11.order() == 11);

    CHECK_THROWS_AS(make_field(4, 1), Error);
    CHECK_THROWS_AS(make_field(1, 1), Error);
    try {
        make_field(4, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidPrime);
    }
    try {
        make_field(2, 21); // 2^21 above the default ceiling
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldTooLarge);
    }
}

TEST_CASE("field axioms exhaustively for small q") {
    for (auto [l, k] : {std::pair<std::uint64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3},
                        {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
        const FieldGF f = make_field(l, k);
        const Felem q = static_cast<Felem>(f.order());
        for (Felem a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, f.order() - 1) == 1);
            }
            for (Felem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (Felem c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms on q = 32 exhaustively") {
    const FieldGF f = make_field(2, 5);
    for (Felem a = 0; a < 32; ++a) {
        for (Felem b = 0; b < 32; ++b) {
            for (Felem c = 0; c < 32; ++c) {
                REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

TEST_CASE("a^(q-1) = 1 and sampled axioms on larger fields") {
    std::mt19937 rng(3);
    for (auto [l, k] : {std::pair<std::uint64_t, int>{2, 8}, {2, 12}, {103, 1}, {3, 5}, {3, 4}}) {
        const FieldGF f = make_field(l, k);
        for (Felem a = 1; a < f.order(); ++a) {
            REQUIRE(f.pow(a, f.order() - 1) == 1);
            REQUIRE(f.mul(a, f.inv(a)) == 1);
        }
        std::uniform_int_distribution<Felem> dist(0, static_cast<Felem>(f.order() - 1));
        for (int trial = 0; trial < 2000; ++trial) {
            const Felem a = dist(rng), b = dist(rng), c = dist(rng);
            REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
    }
}

TEST_CASE("element_of_order") {
    const FieldGF f3 = make_field(3, 1);
    CHECK(element_of_order(f3, 2) == 2); // the unique element of order 2

    const FieldGF f4 = make_field(2, 2);
    const Felem z = element_of_order(f4, 3);
    CHECK(z != 1);
    CHECK(f4.pow(z, 3) == 1);

    // GF(11): brute-force power table gives the fifth roots of unity.
    const FieldGF f11 = make_field(11, 1);
    const Felem z5 = element_of_order(f11, 5);
    std::set<long long> fifth_roots;
    for (long long a = 1; a < 11; ++a) {
        long long pw = 1;
        for (int i = 0; i < 5; ++i) pw = pw * a % 11;
        if (pw == 1 && a != 1) fifth_roots.insert(a);
    }
    CHECK(fifth_roots.count(z5) == 1);

    CHECK_THROWS_AS(element_of_order(f3, 5), Error);
}

TEST_CASE("kernel of trivial matrices") {
    const FieldGF f3 = make_field(3, 1);
    MatrixGF zero(f3, 3, 3);
    CHECK(zero.kernel().size() == 3);
    CHECK(MatrixGF::identity(f3, 3).kernel().empty());
}

TEST_CASE("kernel dimension matches the independent row-reduction oracle") {
    std::mt19937 rng(20240817);
    const FieldGF f5 = make_field(5, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const MatrixGF m = random_matrix(f5, 4, 6, rng);
        const auto basis = m.kernel();
        CHECK(static_cast<int>(basis.size()) == oracle::kernel_dim_mod_p(to_oracle(m), 5));
        // Each basis vector is annihilated and the basis is independent.
        for (const Vec& v : basis) {
            const Vec image = m.apply(v);
            CHECK(std::all_of(image.begin(), image.end(), [](Felem x) { return x == 0; }));
        }
        if (!basis.empty()) {
            CHECK(MatrixGF::from_rows(f5, basis, 6).rank() == basis.size());
        }
    }
}

TEST_CASE("solve_right") {
    const FieldGF f5 = make_field(5, 1);
    const MatrixGF ident = MatrixGF::identity(f5, 4);
    const Vec b{1, 2, 3, 4};
    CHECK(*ident.solve_right(b) == b);

    MatrixGF zero(f5, 3, 3);
    CHECK(!zero.solve_right({1, 0, 0}).has_value());
    CHECK(zero.solve_right({0, 0, 0}).has_value());

    CHECK_THROWS_AS(zero.solve_right({1, 0}), Error);

    // Round-trip property on random invertible systems.
    std::mt19937 rng(7);
    std::uniform_int_distribution<Felem> dist(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        MatrixGF m = random_matrix(f5, 4, 4, rng);
        if (m.rank() != 4) continue;
        Vec v(4);
        for (auto& x : v) x = dist(rng);
        const Vec rhs = m.apply(v);
        const auto sol = m.solve_right(rhs);
        REQUIRE(sol.has_value());
        CHECK(*sol == v); // unique solution
        const auto inv = m.inverse();
        REQUIRE(inv.has_value());
        CHECK(inv->mul(m) == MatrixGF::identity(f5, 4));
    }
}

TEST_CASE("subspace coset representatives are lexicographically least") {
    const FieldGF f3 = make_field(3, 1);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const MatrixGF m = random_matrix(f3, 2, 4, rng);
        const Subspace s(f3, 4, {std::vector<Vec>{
                                    Vec{m.at(0, 0), m.at(0, 1), m.at(0, 2), m.at(0, 3)},
                                    Vec{m.at(1, 0), m.at(1, 1), m.at(1, 2), m.at(1, 3)}}});
        // Enumerate all of GF(3)^4, bucket by canonical representative and
        // confirm the representative is the smallest member of its coset.
        std::map<Vec, std::vector<Vec>> cosets;
        Vec v(4, 0);
        for (int code = 0; code < 81; ++code) {
            int rest = code;
            for (int i = 3; i >= 0; --i) {
                v[static_cast<std::size_t>(i)] = static_cast<Felem>(rest % 3);
                rest /= 3;
            }
            cosets[s.coset_rep(v)].push_back(v);
        }
        CHECK(BigInt(cosets.size()) == s.coset_count());
        for (auto& [rep, members] : cosets) {
            std::sort(members.begin(), members.end());
            CHECK(members.front() == rep);
            CHECK(BigInt(members.size()) == s.size());
        }
        // Enumeration order is lexicographic.
        std::vector<Vec> reps;
        s.for_each_coset_rep(1000, [&](const Vec& r) { reps.push_back(r); });
        CHECK(std::is_sorted(reps.begin(), reps.end()));
        CHECK(reps.size() == cosets.size());
    }
}

TEST_CASE("prime helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
    CHECK(prime_power_decompose(27) == std::make_pair(std::uint64_t{3}, 3));
    CHECK(prime_power_decompose(1024) == std::make_pair(std::uint64_t{2}, 10));
    CHECK(!prime_power_decompose(12).has_value());
}
