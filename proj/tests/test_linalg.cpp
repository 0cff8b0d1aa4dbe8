#include "doctest.h"

#include <random>

#include "fphom/graded.hpp"
#include "fphom/polynomial.hpp"

using namespace fphom;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937& rng, int zero_bias = 0)
{
    Matrix m(f, r, c);
    std::uniform_int_distribution<int> dist(-zero_bias, f.p() - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = f.reduce(std::max(0, dist(rng)));
    return m;
}

Matrix from_rows(const PrimeField& f, std::vector<std::vector<int>> rows)
{
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = f.reduce(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("prime field validation")
{
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(97));
    CHECK_THROWS_AS(PrimeField(1), ValidationError);
    CHECK_THROWS_AS(PrimeField(9), ValidationError);
    CHECK_THROWS_AS(PrimeField(101), ValidationError);
    PrimeField f(7);
    for (PrimeField::Elem a = 1; a < 7; ++a)
        CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.sign(3) == 6);
}

TEST_CASE("shift")
{
    CHECK(shift(GradedVectorSpace{{1, 1}}, 1) == GradedVectorSpace{{2, 1}});
    CHECK(shift(GradedVectorSpace{}, 5).empty());
    CHECK(shift(GradedVectorSpace{{2, 3}, {5, 1}}, -1) == GradedVectorSpace{{1, 3}, {4, 1}});

    GradedVectorSpace v{{-3, 2}, {0, 1}, {7, 4}};
    for (int a = -20; a <= 20; ++a)
        for (int b = -20; b <= 20; ++b)
            CHECK(shift(v, a + b) == shift(shift(v, a), b));
    CHECK(shift(shift(v, 9), -9) == v);
}

TEST_CASE("matrix rank, kernel, rank-nullity")
{
    std::mt19937 rng(7);
    for (int p : {2, 3, 5, 97}) {
        PrimeField f(p);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t r = 1 + rng() % 9;
            const std::size_t c = 1 + rng() % 9;
            Matrix m = random_matrix(f, r, c, rng, p);
            Matrix k = m.kernel();
            CHECK(m.rank() + k.cols() == c);
            CHECK((m * k).is_zero());
            CHECK(k.rank() == k.cols());
            CHECK(m.transpose().rank() == m.rank());
        }
    }
}

TEST_CASE("echelon span insert/solve")
{
    PrimeField f(5);
    EchelonSpan span(f, 3, true);
    CHECK(span.insert(Vec{1, 2, 0}));
    CHECK(span.insert(Vec{0, 1, 1}));
    CHECK_FALSE(span.insert(Vec{1, 3, 1}));
    Vec coords;
    REQUIRE(span.solve(Vec{2, 0, 1}, coords));
    Vec rebuilt(3, 0);
    const std::vector<Vec> inserted{{1, 2, 0}, {0, 1, 1}};
    for (std::size_t k = 0; k < coords.size(); ++k)
        for (std::size_t j = 0; j < 3; ++j)
            rebuilt[j] = f.add(rebuilt[j], f.mul(coords[k], inserted[k][j]));
    CHECK(rebuilt == Vec{2, 0, 1});
    CHECK_FALSE(span.solve(Vec{0, 0, 1}, coords));
}

TEST_CASE("homology of small complexes")
{
    PrimeField f(3);
    SUBCASE("zero differential")
    {
        ChainComplex c(f, ChainComplex::Direction::cohomological);
        c.push_space(GradedVectorSpace{{0, 1}});
        c.push_space(GradedVectorSpace{{0, 1}});
        c.set_top_index(1);
        CHECK(c.homology_dims(0, 0, 0) == GradedVectorSpace{{0, 1}});
        CHECK(c.homology_dims(1, 0, 0) == GradedVectorSpace{{0, 1}});
    }
    SUBCASE("identity is acyclic")
    {
        ChainComplex c(f, ChainComplex::Direction::cohomological);
        c.push_space(GradedVectorSpace{{0, 1}});
        c.push_space(GradedVectorSpace{{0, 1}});
        GradedMap d(f, c.space(0), c.space(1), 0);
        d.set_block(0, Matrix::identity(f, 1));
        c.set_differential(0, d);
        CHECK(c.homology_dims(0, 0, 0).empty());
        CHECK(c.homology_dims(1, 0, 0).empty());
    }
    SUBCASE("k[x]/x^2 with |x| = 3: A <-x- s^3 A")
    {
        ChainComplex c(f, ChainComplex::Direction::homological);
        c.push_space(GradedVectorSpace{{0, 1}, {3, 1}});
        c.push_space(GradedVectorSpace{{3, 1}, {6, 1}});
        GradedMap d(f, c.space(1), c.space(0), 0);
        d.set_block(3, from_rows(f, {{1}}));
        c.set_differential(1, d);
        c.set_top_index(0);
        CHECK(c.is_complex());
        CHECK(c.homology_dims(0, 0, 0) == GradedVectorSpace{{0, 1}});
        CHECK(c.homology_dims(0, 0, 6) == GradedVectorSpace{{0, 1}});
        CHECK_THROWS_AS(c.homology_dims(1, 0, 6), TruncationError);
    }
    SUBCASE("window outside stored data")
    {
        ChainComplex c(f, ChainComplex::Direction::cohomological);
        c.push_space(GradedVectorSpace{{0, 1}});
        c.set_exact_window(0, 4);
        CHECK_THROWS_AS(c.homology_dims(0, 0, 5), TruncationError);
    }
}

TEST_CASE("homology of zero-differential complexes equals the spaces")
{
    std::mt19937 rng(11);
    PrimeField f(5);
    for (int trial = 0; trial < 20; ++trial) {
        ChainComplex c(f, ChainComplex::Direction::cohomological);
        std::vector<GradedVectorSpace> spaces;
        for (int s = 0; s < 4; ++s) {
            GradedVectorSpace v;
            for (int d = 0; d < 5; ++d)
                v.set_dim(d, static_cast<int>(rng() % 3));
            spaces.push_back(v);
            c.push_space(v);
        }
        for (int s = 0; s < 4; ++s)
            CHECK(c.homology_dims(s, 0, 4) == spaces[static_cast<std::size_t>(s)]);
    }
}

TEST_CASE("graded map rank-nullity degreewise")
{
    std::mt19937 rng(3);
    PrimeField f(2);
    GradedVectorSpace src{{0, 3}, {1, 4}, {2, 2}};
    GradedVectorSpace tgt{{1, 2}, {2, 5}, {3, 1}};
    GradedMap m(f, src, tgt, 1);
    for (const auto& [deg, d] : src.dims())
        m.set_block(deg, random_matrix(f, static_cast<std::size_t>(tgt.dim(deg + 1)), static_cast<std::size_t>(d), rng));
    for (const auto& [deg, d] : src.dims())
        CHECK(static_cast<int>(m.rank(deg) + m.kernel_dim(deg)) == d);
    CHECK_THROWS_AS(m.set_block(0, Matrix(f, 3, 3)), ValidationError);
}

TEST_CASE("parity verdicts")
{
    BigradedTable a;
    a.set(2, 4, 1);
    CHECK(parity_verdict(a).parity == Parity::even);
    BigradedTable b;
    b.set(1, 2, 1);
    CHECK(parity_verdict(b).parity == Parity::odd);
    BigradedTable c;
    c.set(0, 0, 1);
    c.set(1, 2, 1);
    CHECK(parity_verdict(c).parity == Parity::neither);
    BigradedTable e;
    auto v = parity_verdict(e);
    CHECK(v.parity == Parity::even);
    CHECK(v.empty);
    BigradedTable neg;
    neg.set(1, -3, 2);
    CHECK(parity_verdict(neg).parity == Parity::even);
}

TEST_CASE("serialization round trips")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        BigradedTable t;
        for (int k = 0; k < 8; ++k)
            t.set(static_cast<int>(rng() % 6), static_cast<int>(rng() % 21) - 10, static_cast<int>(rng() % 4));
        CHECK(BigradedTable::from_json(t.to_json()) == t);
        CHECK(BigradedTable::from_csv(t.to_csv()) == t);
        CHECK(BigradedTable::from_json(nlohmann::json::parse(t.to_json().dump())) == t);
    }
    GradedVectorSpace v{{-2, 1}, {3, 4}};
    CHECK(GradedVectorSpace::from_json(v.to_json()) == v);
    CHECK(v.to_json().dump() == R"({"dims":{"-2":1,"3":4}})");
    CHECK_THROWS_AS(GradedVectorSpace::from_json(nlohmann::json::parse(R"({"dims":{"a":1}})")), ValidationError);
    CHECK_THROWS_AS(GradedVectorSpace::from_json(nlohmann::json::parse(R"({"dims":{"1":-1}})")), ValidationError);
}

TEST_CASE("hilbert series")
{
    // F[x2] ⊗ Λ(y3) up to 9
    auto h = HilbertSeries::polynomial(2, 1, 9) * HilbertSeries::exterior(3, 1, 9);
    CHECK(h.to_space() == GradedVectorSpace{{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}});
    CHECK(free_commutative_series(GradedVectorSpace{{3, 1}}, 2, 9).to_space() ==
          GradedVectorSpace{{0, 1}, {3, 1}, {6, 1}, {9, 1}});
    CHECK(free_commutative_series(GradedVectorSpace{{3, 1}}, 3, 9).to_space() == GradedVectorSpace{{0, 1}, {3, 1}});
    CHECK(free_commutative_series(GradedVectorSpace{{2, 2}}, 5, 4).to_space() ==
          GradedVectorSpace{{0, 1}, {2, 2}, {4, 3}});
}

TEST_CASE("polynomial expressions")
{
    PrimeField f(3);
    const std::vector<std::string> names{"x", "y", "c1"};
    auto p = parse_polynomial("2*x^2*y - c1 + 4", names, f);
    CHECK(p.to_string(names) == "2*x^2*y + 2*c1 + 1");
    CHECK(parse_polynomial("x·y", names, f) == parse_polynomial("x*y", names, f));
    CHECK(parse_polynomial("(x+y)^3", names, f) == parse_polynomial("x^3 + y^3", names, f));
    CHECK(parse_polynomial("0", names, f).is_zero());
    CHECK(parse_polynomial("3x", names, f).is_zero());
    CHECK_THROWS_AS(parse_polynomial("z", names, f), ValidationError);
    CHECK_THROWS_AS(parse_polynomial("x +", names, f), ValidationError);
    CHECK(parse_polynomial("x^2*y", names, f).is_homogeneous({2, 3, 2}, 7));
}
