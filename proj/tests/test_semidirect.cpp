#include <doctest.h>

#include <random>

#include "redsyl/semidirect.hpp"
#include "oracles.hpp"

using namespace redsyl;

namespace {

std::shared_ptr<const PGroup> group(const std::string& name) {
    return std::make_shared<const PGroup>(PGroup::catalog(name));
}

SemidirectGroup make_thm1(const std::string& name, std::uint64_t q) {
    return SemidirectGroup(thm1_action(group(name), q));
}

SemidirectGroup make_thm2(const std::string& name) {
    return SemidirectGroup(thm2_action(group(name)));
}

SemidirectGroup make_trivial(const std::string& name, std::uint64_t q, std::size_t dim) {
    auto p = group(name);
    const FieldGF f = make_field(q, 1);
    std::vector<MatrixGF> mats(static_cast<std::size_t>(p->order()), MatrixGF::identity(f, dim));
    return SemidirectGroup(LinearAction::custom(p, f, mats));
}

GElement random_element(const SemidirectGroup& g, std::mt19937& rng) {
    std::uniform_int_distribution<Felem> fd(0, static_cast<Felem>(g.field().order() - 1));
    std::uniform_int_distribution<int> pd(0, g.pgroup().order() - 1);
    Vec n(g.dim());
    for (auto& x : n) x = fd(rng);
    return GElement{std::move(n), pd(rng)};
}

} // namespace

TEST_CASE("group law properties") {
    const SemidirectGroup g = make_thm1("C2^2", 3);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const GElement a = random_element(g, rng);
        const GElement b = random_element(g, rng);
        const GElement c = random_element(g, rng);
        CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
        CHECK(g.multiply(g.identity(), a) == a);
        CHECK(g.multiply(a, g.identity()) == a);
        CHECK(g.is_identity(g.multiply(a, g.inverse(a))));
        CHECK(g.is_identity(g.multiply(g.inverse(a), a)));
        CHECK(g.inverse(g.multiply(a, b)) == g.multiply(g.inverse(b), g.inverse(a)));
    }
}

TEST_CASE("fixed vectors conjugate P to itself pointwise") {
    const SemidirectGroup g = make_thm1("C2^2", 3);
    for (int x = 1; x < 4; ++x) {
        const Vec w = witness_fixed_vector(g.action(), x);
        // (w,1)(0,x)(w,1)^-1 = (0,x) exactly when w is fixed by x.
        CHECK(g.conjugate(g.embed_p(x), g.embed_n(w)) == g.embed_p(x));
    }
}

TEST_CASE("centralizers") {
    const SemidirectGroup g3 = make_thm1("C2^2", 3);
    CHECK(g3.centralizer_order(0) == g3.order());
    for (int x = 1; x < 4; ++x) {
        CHECK(g3.centralizer_in_n_order(x) == 3);
        CHECK(g3.centralizer_order(x) == 12); // 3 * |C_P(x)| = 3 * 4
    }

    const SemidirectGroup g5 = make_thm1("C2^2", 5);
    for (int x = 1; x < 4; ++x) {
        CHECK(g5.centralizer_in_n_order(x) == 5); // q^(p-1), the bound met with equality
        CHECK(g5.centralizer_order(x) == 20);
    }

    const SemidirectGroup g2 = make_thm1("C3^2", 2);
    for (int x = 1; x < 9; ++x) {
        CHECK(g2.centralizer_order(x) == 36); // 4 * 9
    }

    // Exhaustive centralizer enumeration oracle.
    const auto e3 = oracle::ExplicitGroup::from(g3);
    for (int x = 0; x < 4; ++x) {
        CHECK(BigInt(e3.centralizer_size(x)) == g3.centralizer_order(x));
    }
    const auto e2 = oracle::ExplicitGroup::from(g2);
    for (int x = 0; x < 9; ++x) {
        CHECK(BigInt(e2.centralizer_size(x)) == g2.centralizer_order(x));
    }
}

TEST_CASE("sylow counts") {
    CHECK(make_thm1("C2^2", 3).sylow_count() == 27);
    CHECK(make_thm2("C3^2").sylow_count() == 256);

    const SemidirectGroup g5 = make_thm1("C2^2", 5);
    CHECK(g5.sylow_count() == 125);
    // Confirmed by enumerating the distinct conjugates of P.
    const auto e5 = oracle::ExplicitGroup::from(g5);
    CHECK(e5.sylow_sets().size() == 125);

    // nu_p = 1 (mod p) for every constructed instance.
    for (const auto& g : {make_thm1("C2^2", 3), make_thm1("D8", 3), make_thm1("Q8", 3),
                          make_thm2("C2^2"), make_thm2("Heis3"), make_trivial("C2^2", 3, 2)}) {
        CHECK(g.sylow_count() % g.pgroup().p() == 1);
    }
}

TEST_CASE("sylow enumeration") {
    const SemidirectGroup g = make_thm1("C2^2", 3);
    const auto reps = g.enumerate_sylows();
    CHECK(BigInt(reps.size()) == g.sylow_count());
    // C_N(P) = 1: the representatives are exactly all of N, lexicographically.
    CHECK(reps.front() == Vec{0, 0, 0});
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    std::set<Vec> distinct(reps.begin(), reps.end());
    CHECK(distinct.size() == 27);

    // Pairwise distinct as explicit subgroups.
    const auto e = oracle::ExplicitGroup::from(g);
    std::set<std::vector<long long>> sets;
    for (const Vec& n : reps) {
        std::vector<long long> nn(n.begin(), n.end());
        sets.insert(e.conjugate_set(e.base_sylow(), e.make(nn, 0)));
    }
    CHECK(sets.size() == 27);
    CHECK(sets == e.sylow_sets());

    CHECK_THROWS_AS(g.enumerate_sylows(10), Error);
    try {
        g.enumerate_sylows(10);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::TooLargeToEnumerate);
    }

    // With a nontrivial C_N(P), representatives are proper coset reps.
    const SemidirectGroup t = make_trivial("C2^2", 3, 2);
    CHECK(t.sylow_count() == 1);
    CHECK(t.enumerate_sylows().size() == 1);
}

TEST_CASE("p-element counts via the class formula") {
    const SemidirectGroup g3 = make_thm1("C2^2", 3);
    const auto c3 = g3.count_p_elements();
    CHECK(c3.total == 28);
    CHECK(c3.frobenius_multiplier == 7);
    BigInt sum = 0;
    for (const auto& pc : c3.per_class) sum += pc.count;
    CHECK(sum == c3.total);

    const SemidirectGroup g5 = make_thm1("C2^2", 5);
    const auto c5 = g5.count_p_elements();
    CHECK(c5.total == 76);
    CHECK(c5.frobenius_multiplier == 19);
    CHECK(c5.total < g5.sylow_count()); // 76 < 125

    // Exhaustive oracle over all 500 elements.
    const auto e5 = oracle::ExplicitGroup::from(g5);
    CHECK(BigInt(e5.p_elements(2).size()) == c5.total);
    const auto e3 = oracle::ExplicitGroup::from(g3);
    CHECK(BigInt(e3.p_elements(2).size()) == c3.total);

    // a >= 2 whenever P is not normal.
    for (const auto& g : {make_thm1("C2^2", 3), make_thm1("C4xC2", 3), make_thm2("Q8")}) {
        CHECK(g.count_p_elements().frobenius_multiplier >= 2);
    }
    CHECK(make_trivial("C2^2", 3, 2).count_p_elements().frobenius_multiplier == 1);
}

TEST_CASE("element orders match the literal oracle") {
    for (const auto& g : {make_thm1("C2^2", 3), make_thm1("C3^2", 2), make_thm2("Q8")}) {
        const auto e = oracle::ExplicitGroup::from(g);
        std::mt19937 rng(11);
        std::uniform_int_distribution<long long> dist(0, e.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const long long id = dist(rng);
            std::vector<long long> nn = e.n_part(id);
            Vec n(nn.begin(), nn.end());
            const GElement el{n, e.p_part(id)};
            CHECK(g.element_order(el) == e.order(id));
            CHECK(g.is_p_element(el) == e.is_p_element(id, g.pgroup().p()));
        }
    }
}

TEST_CASE("sylows containing an element, two routes") {
    const SemidirectGroup g3 = make_thm1("C2^2", 3);
    CHECK(g3.lambda_linear(0) == g3.sylow_count());
    for (int x = 1; x < 4; ++x) {
        CHECK(g3.lambda_linear(x) == 3);
        CHECK(*g3.lambda_enumerated(x) == 3);
    }
    const SemidirectGroup g5 = make_thm1("C2^2", 5);
    for (int x = 1; x < 4; ++x) {
        CHECK(g5.lambda_linear(x) == 5);
        CHECK(*g5.lambda_enumerated(x) == 5);
    }
    // Ceiling disables only the enumeration route.
    CHECK(!g3.lambda_enumerated(1, 10).has_value());
    CHECK(g3.lambda_linear(1) == 3);

    for (const auto& g : {make_thm1("D8", 3), make_thm2("C3^2"), make_thm2("M16")}) {
        for (int rep : g.pgroup().conjugacy_classes().representatives) {
            const auto enumerated = g.lambda_enumerated(rep);
            REQUIRE(enumerated.has_value());
            CHECK(*enumerated == g.lambda_linear(rep));
        }
    }

    // The combined query returns the witnessing conjugating vectors.
    const auto sc = g3.sylows_containing(1);
    CHECK(sc.agree());
    REQUIRE(sc.representatives.has_value());
    CHECK(BigInt(sc.representatives->size()) == sc.linear);
    for (const Vec& n : *sc.representatives) {
        const GElement t = g3.embed_n(n);
        const GElement c = g3.multiply(g3.multiply(g3.inverse(t), g3.embed_p(1)), t);
        CHECK(std::all_of(c.n.begin(), c.n.end(), [](Felem v) { return v == 0; }));
    }
    CHECK(!g3.sylows_containing(1, 10).enumerated.has_value());
}

TEST_CASE("normalizer of P is C_N(P) P") {
    const SemidirectGroup g = make_thm1("C2^2", 3);
    const auto e = oracle::ExplicitGroup::from(g);
    // N_G(P) = P here.
    CHECK(e.normalizer_size(e.base_sylow()) == 4);

    const SemidirectGroup t = make_trivial("C2^2", 3, 2);
    const auto et = oracle::ExplicitGroup::from(t);
    CHECK(et.normalizer_size(et.base_sylow()) == et.size()); // P normal

    const SemidirectGroup d = make_thm1("D8", 3);
    const auto ed = oracle::ExplicitGroup::from(d);
    const BigInt expected = d.action().fixed_space_all().size() * d.pgroup().order();
    CHECK(BigInt(ed.normalizer_size(ed.base_sylow())) == expected);
}

TEST_CASE("p-elements are exactly the union of the Sylow subgroups") {
    for (const auto& g : {make_thm1("C2^2", 3), make_thm1("C3^2", 2), make_thm2("Q8")}) {
        const auto e = oracle::ExplicitGroup::from(g);
        std::set<long long> in_sylows;
        for (const auto& s : e.sylow_sets()) in_sylows.insert(s.begin(), s.end());
        const auto pelems = e.p_elements(g.pgroup().p());
        CHECK(in_sylows == std::set<long long>(pelems.begin(), pelems.end()));
    }
}

TEST_CASE("semidirect rejects p dividing |N|") {
    auto p = group("C2^2");
    const FieldGF f2 = make_field(2, 1);
    std::vector<MatrixGF> mats(4, MatrixGF::identity(f2, 2));
    CHECK_THROWS_AS(SemidirectGroup(LinearAction::custom(p, f2, mats)), Error);
}
