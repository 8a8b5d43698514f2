#include "oracle.hpp"

#include "quiveralg/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace quiveralg;

TEST_SUITE("exact_linalg") {

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(parse_rational("+2/1")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("Zp arithmetic agrees with plain modular integers") {
    std::mt19937_64 rng(11);
    for (long long p : {2LL, 7LL, 101LL, 65521LL}) {
        std::uniform_int_distribution<long long> d(0, p - 1);
        for (int i = 0; i < 200; ++i) {
            long long a = d(rng), b = d(rng);
            Zp x(a, p), y(b, p);
            CHECK((x + y).value() == (a + b) % p);
            CHECK((x - y).value() == ((a - b) % p + p) % p);
            CHECK((x * y).value() == a * b % p);
            if (b != 0) {
                CHECK((x / y).value() == a * oracle::power_mod(b, p - 2, p) % p);
            }
        }
    }
}

TEST_CASE("Zp from rationals and error cases") {
    CHECK(Zp(Rational(1) / Rational(2), 7).value() == 4);
    CHECK(Zp(Rational(-3), 7).value() == 4);
    CHECK_THROWS(Zp(0, 7).inverse());
    CHECK_THROWS(Zp(1, 7) + Zp(1, 11));
    CHECK(is_prime(2));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("rank matches elimination oracle on random integer matrices") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-2, 2), size(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        int r = size(rng), c = size(rng);
        MatrixQ m(r, c);
        std::vector<std::vector<Rational>> raw(r, std::vector<Rational>(c));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < c; ++j) {
                raw[i][j] = entry(rng);
                m(i, j) = raw[i][j];
            }
        }
        const std::size_t expected = oracle::rank(raw);
        CHECK(rank(m) == expected);
        const MatrixQ n = nullspace(m);
        CHECK(static_cast<std::size_t>(n.cols()) + expected == static_cast<std::size_t>(c));
        CHECK(is_zero_matrix<Rational>(m * n));
    }
}

TEST_CASE("rank over Zp sees characteristic") {
    Matrix<Zp> m(2, 2);
    m << Zp(1, 3), Zp(2, 3), Zp(2, 3), Zp(1, 3);  // det = -3 = 0 mod 3
    CHECK(rank(m) == 1);
    MatrixQ q(2, 2);
    q << 1, 2, 2, 1;
    CHECK(rank(q) == 2);
}

TEST_CASE("sparse vectors drop cancelled entries") {
    SparseVector<int> v(1, Rational(2));
    v.add(1, Rational(-2));
    CHECK(v.empty());
    SparseVector<int> a(1), b(2);
    CHECK((a + b - a) == b);
    CHECK((Rational(3) * a).coefficient(1) == 3);
}

TEST_CASE("echelon basis expresses members and rejects non-members") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<SparseVector<int>> gens;
        for (int g = 0; g < 3; ++g) {
            SparseVector<int> v;
            for (int l = 0; l < 5; ++l) v.add(l, Rational(entry(rng)));
            gens.push_back(v);
        }
        EchelonBasis<int> e;
        for (const auto& g : gens) e.insert(g);
        SparseVector<int> combo = Rational(2) * gens[0] - gens[2];
        auto coeffs = e.express(combo);
        REQUIRE(coeffs);
        SparseVector<int> rebuilt;
        for (std::size_t i = 0; i < gens.size(); ++i) rebuilt.add_scaled(gens[i], (*coeffs)[i]);
        CHECK(rebuilt == combo);
        SparseVector<int> outside(7);
        CHECK_FALSE(e.contains(outside));
    }
}

TEST_CASE("rank-one splitting reproduces the matrix") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        MatrixQ m(2, 2);
        m << entry(rng), entry(rng), entry(rng), entry(rng);
        auto s = rank1_decompose_2x2(m);
        CHECK(s.first + s.second == m);
        CHECK(rank(s.first) <= 1);
        CHECK(rank(s.second) <= 1);
        CHECK(s.columns * s.rows == m);
    }
    CHECK_THROWS_AS(rank1_decompose_2x2(MatrixQ(3, 2)), InputError);
}

}
