#include "doctest.h"

#include <random>

#include "fphom/free_lie.hpp"

using namespace fphom;

namespace {

std::shared_ptr<const Alphabet> alpha(std::vector<Generator> g)
{
    return std::make_shared<const Alphabet>(std::move(g));
}

}  // namespace

TEST_CASE("alphabet validation")
{
    CHECK_THROWS_AS(Alphabet({}), ValidationError);
    CHECK_THROWS_AS(Alphabet({{"x", 2}, {"x", 3}}), ValidationError);
    CHECK_THROWS_AS(Alphabet({{"x", 0}}), ValidationError);
    CHECK_THROWS_AS(Alphabet({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 2}}), ValidationError);
    auto a = Alphabet::from_json(nlohmann::json::parse(R"({"generators":[{"name":"x","degree":2}]})"));
    CHECK(a.degree(0) == 2);
    CHECK(Alphabet::from_json(nlohmann::json::parse(R"({"x":3,"y":5})")).size() == 2);
}

TEST_CASE("shifted bracket degrees and signs")
{
    PrimeField f(3);
    auto a = alpha({{"x", 2}, {"y", 3}});
    auto x = TensorElement::generator(a, f, 0);
    auto y = TensorElement::generator(a, f, 1);
    CHECK(*shifted_bracket(x, y).v_degree() == 4);
    // x has odd shifted degree, so [x,x] = 2 x^2.
    CHECK(shifted_bracket(x, x) == tensor_mul(x, x).scaled(2));
    // y has even shifted degree, so [y,y] = 0.
    CHECK(shifted_bracket(y, y).is_zero());
    CHECK(shifted_bracket(x, shifted_bracket(x, x)).is_zero());
    CHECK_THROWS_AS(restriction_power(x), DomainError);
    CHECK(*restriction_power(y).v_degree() == xi_degree(3, 3));
    CHECK_THROWS_AS((x + y).shifted_degree(), DomainError);
}

TEST_CASE("bracket degree property")
{
    std::mt19937 rng(17);
    for (int p : {2, 3, 5}) {
        PrimeField f(p);
        auto a = alpha({{"x", 2}, {"y", 3}, {"z", 4}});
        for (int trial = 0; trial < 50; ++trial) {
            auto gx = TensorElement::generator(a, f, rng() % 3);
            auto gy = TensorElement::generator(a, f, rng() % 3);
            auto gz = TensorElement::generator(a, f, rng() % 3);
            auto u = shifted_bracket(gx, gy);
            auto v = gz;
            auto b = shifted_bracket(u, v);
            if (!u.is_zero() && !b.is_zero())
                CHECK(*b.v_degree() == *u.v_degree() + *v.v_degree() - 1);
        }
    }
}

TEST_CASE("lyndon words")
{
    CHECK(is_lyndon(Word{0, 0, 1}));
    CHECK_FALSE(is_lyndon(Word{0, 1, 0}));
    CHECK_FALSE(is_lyndon(Word{0, 0}));
    CHECK(standard_split(Word{0, 0, 1}) == 1);
    CHECK(standard_split(Word{0, 1, 1}) == 2);
    CHECK(standard_split(Word{0, 0, 1, 0, 1}) == 3);
    // Generated words are Lyndon and distinct; counts follow the necklace formula
    // (binary Lyndon words of length 1..6: 2,1,2,3,6,9).
    Alphabet a({{"x", 1}, {"y", 1}});
    auto syms = enumerate_lie_symbols(a, 2, 6, 1);
    std::map<int, int> by_len;
    for (const auto& s : syms) {
        CHECK(is_lyndon(s.word));
        ++by_len[s.weight];
    }
    CHECK(by_len == std::map<int, int>{{1, 2}, {2, 1}, {3, 2}, {4, 3}, {5, 6}, {6, 9}});
}

TEST_CASE("free Lie examples")
{
    CHECK(lyndon_basis(alpha({{"x", 2}}), PrimeField(3), 10, 10).dims == GradedVectorSpace{{2, 1}, {3, 1}});
    CHECK(lyndon_basis(alpha({{"x", 2}, {"y", 2}}), PrimeField(5), 10, 4).dims ==
          GradedVectorSpace{{2, 2}, {3, 3}, {4, 2}});
    CHECK(bracket_closure_dims(alpha({{"x", 2}, {"y", 2}}), PrimeField(5), 4) ==
          GradedVectorSpace{{2, 2}, {3, 3}, {4, 2}});
    CHECK_THROWS_AS(lyndon_basis(alpha({{"x", 2}}), PrimeField(3), 10, 21), ValidationError);
    auto long_words = lyndon_basis(alpha({{"x", 2}, {"y", 2}}), PrimeField(3), 12, 13);
    CHECK_FALSE(long_words.fully_realized());
    CHECK(long_words.independent());
    CHECK(long_words.realized_dims == lyndon_basis(alpha({{"x", 2}, {"y", 2}}), PrimeField(3), 10, 13).dims);
}

TEST_CASE("lyndon basis is independent and matches the bracket closure")
{
    const std::vector<std::vector<Generator>> sets{
        {{"x", 2}}, {{"x", 3}}, {{"x", 2}, {"y", 3}}, {{"x", 2}, {"y", 2}}, {{"x", 3}, {"y", 4}},
        {{"x", 2}, {"y", 3}, {"z", 4}}};
    for (int p : {2, 3, 5}) {
        PrimeField f(p);
        for (const auto& g : sets) {
            auto a = alpha(g);
            const int cap = g.size() > 2 ? 8 : 10;
            auto b = lyndon_basis(a, f, kMaxWordLength, cap);
            INFO("p=" << p << " gens=" << g.size() << " cap=" << cap);
            CHECK(b.independent());
            CHECK(b.dims == bracket_closure_dims(a, f, cap));
        }
    }
}

TEST_CASE("restricted examples")
{
    CHECK(restricted_basis(alpha({{"x", 2}}), PrimeField(2), 10).dims ==
          GradedVectorSpace{{2, 1}, {3, 1}, {5, 1}, {9, 1}});
    CHECK(restricted_basis(alpha({{"x", 2}}), PrimeField(3), 8).dims == GradedVectorSpace{{2, 1}, {3, 1}, {7, 1}});
    CHECK(restricted_basis(alpha({{"x", 3}}), PrimeField(3), 8).dims == GradedVectorSpace{{3, 1}, {7, 1}});
}

TEST_CASE("restricted basis is independent and matches the restricted closure")
{
    const std::vector<std::vector<Generator>> sets{{{"x", 2}}, {{"x", 3}}, {{"x", 2}, {"y", 3}}, {{"x", 3}, {"y", 3}}};
    for (int p : {2, 3, 5}) {
        PrimeField f(p);
        for (const auto& g : sets) {
            auto a = alpha(g);
            auto b = restricted_basis(a, f, 10);
            INFO("p=" << p << " gens=" << g.size());
            CHECK(b.independent());
            CHECK(b.fully_realized());
            CHECK(b.dims == restricted_closure_dims(a, f, 10));
        }
    }
}

TEST_CASE("axioms hold in the tensor realization")
{
    for (int p : {2, 3, 5, 7}) {
        auto rep = check_axioms(alpha({{"x", 2}, {"y", 3}}), PrimeField(p), 10, 200, 1234u + static_cast<unsigned>(p));
        INFO(rep.to_json().dump());
        CHECK(rep.all_passed());
        CHECK(rep.result("jacobi").trials == 200);
        CHECK(rep.result("xi_bracket").passed > 100);
        if (p != 2)
            CHECK(rep.result("xi_bracket").skipped > 0);
    }
}
