#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace hopfsimp;

TEST_CASE("complex text and JSON formats") {
    const SimplicialComplex paw = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
    CHECK(to_text(paw) == "n=4; {0,1,2},{2,3}");
    CHECK(to_json(paw).dump() == R"({"facets":[[0,1,2],[2,3]],"n":4})");
    CHECK(parse_complex("  n=4;{2,3}, {0,1,2} ") == paw);
    CHECK(parse_complex(R"({"n":4,"facets":[[0,1,2],[2,3]]})") == paw);
    CHECK(parse_complex("n=0;").is_unit());
    CHECK(to_text(SimplicialComplex()) == "n=0; {}");
    CHECK(parse_complex(to_text(SimplicialComplex())).is_unit());
}

TEST_CASE("malformed complexes are input errors") {
    CHECK_THROWS_AS(parse_complex(""), InputError);
    CHECK_THROWS_AS(parse_complex("n=3 {0,1}"), InputError);
    CHECK_THROWS_AS(parse_complex("n=2; {0,5}"), InputError);
    CHECK_THROWS_AS(parse_complex(R"({"n":2})"), InputError);
    CHECK_THROWS_AS(parse_complex(R"({"n":2,"facets":[[0,"x"]]})"), InputError);
    CHECK_THROWS_AS(parse_complex("{not json"), InputError);
    CHECK_THROWS_AS(read_complex_file("/nonexistent/complex.json"), InputError);
    CHECK_THROWS_AS(parse_complex("n=30; {0}"), CapacityError);
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 50; ++i) {
        const auto c = oracle::random_complex(1 + static_cast<int>(rng() % 6), rng);
        CHECK(parse_complex(to_text(c)) == c);
        CHECK(complex_from_json(to_json(c)) == c);
        const LinComb s = antipode_flat(c);
        CHECK(lincomb_from_text(to_text(s)) == s);
        CHECK(lincomb_from_json(to_json(s)) == s);
        const SymPoly f = psi(c, Character::zeta_q(2));
        CHECK(sympoly_from_json(to_json(f)) == f);
    }
}

TEST_CASE("rational coefficients print exactly") {
    LinComb a = LinComb::basis(simplex_complex(1), Rational(-3, 7));
    a.add(simplex_complex(0), Rational(Integer("123456789012345678901234567890")));
    CHECK(to_text(a) == "123456789012345678901234567890\tn=1; {0}\n-3/7\tn=2; {0,1}\n");
    CHECK(lincomb_from_text(to_text(a)) == a);
}

TEST_CASE("cache limit bounds the memo tables") {
    MemoCache<int, int> cache(2);
    cache.insert(1, 10);
    cache.insert(2, 20);
    cache.insert(3, 30);
    CHECK(cache.size() == 2);
    CHECK(cache.find(1) == 10);
    CHECK(!cache.find(3).has_value());
}
