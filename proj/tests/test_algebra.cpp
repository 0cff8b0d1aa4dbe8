#include "doctest.h"

#include "fphom/algebra.hpp"

using namespace fphom;

namespace {

std::shared_ptr<const FiniteAlgebra> share(FiniteAlgebra a)
{
    return std::make_shared<const FiniteAlgebra>(std::move(a));
}

}  // namespace

TEST_CASE("monomial algebras")
{
    auto ext = MonomialAlgebra::exterior(3, {{"x", 3}, {"y", 5}});
    CHECK(ext.dims(10) == GradedVectorSpace{{0, 1}, {3, 1}, {5, 1}, {8, 1}});
    CHECK(ext.is_finite());
    auto prod = ext.multiply({0, 1}, {1, 0});
    REQUIRE(prod);
    CHECK(prod->first == 2);  // y x = -x y
    CHECK_FALSE(ext.multiply({1, 0}, {1, 0}));

    auto poly = MonomialAlgebra::polynomial(3, {{"x", 2}, {"y", 2}});
    CHECK(poly.dims(8) == GradedVectorSpace{{0, 1}, {2, 2}, {4, 3}, {6, 4}, {8, 5}});

    // odd generators square to zero at odd p, not at p = 2
    CHECK(MonomialAlgebra::polynomial(3, {{"x", 3}}).dims(9) == GradedVectorSpace{{0, 1}, {3, 1}});
    CHECK(MonomialAlgebra::polynomial(2, {{"x", 3}}).dims(9) == GradedVectorSpace{{0, 1}, {3, 1}, {6, 1}, {9, 1}});

    auto sr = MonomialAlgebra::stanley_reisner(2, {{"a", 2}, {"b", 2}}, {{0}, {1}});
    CHECK(sr.dims(6) == GradedVectorSpace{{0, 1}, {2, 2}, {4, 2}, {6, 2}});

    CHECK_THROWS_AS(MonomialAlgebra::polynomial(4, {{"x", 2}}), ValidationError);
    CHECK_THROWS_AS(MonomialAlgebra::polynomial(3, {{"x", 0}}), ValidationError);
}

TEST_CASE("finite algebras are associative and graded commutative")
{
    for (int p : {2, 3, 5}) {
        for (const auto& a : {MonomialAlgebra::exterior(p, {{"x", 1}, {"y", 3}, {"z", 2}}),
                              MonomialAlgebra::mixed(p, {{"u", 2}, {"x", 3}}),
                              MonomialAlgebra::stanley_reisner(p, {{"a", 2}, {"b", 2}, {"c", 2}}, {{0, 1}, {1, 2}})}) {
            auto fa = FiniteAlgebra::from_monomial(a, 10);
            CHECK(fa.is_associative());
            CHECK(fa.is_graded_commutative());
        }
    }
}

TEST_CASE("subrings and quotients")
{
    auto json = nlohmann::json::parse(R"({"kind":"degreewise_subring",
        "ambient":{"kind":"polynomial","generators":[{"name":"x","degree":2},{"name":"y","degree":2}]},
        "generators":["x^2","x*y","y^2"]})");
    auto sub = FiniteAlgebra::from_json(json, 3, 12);
    CHECK(sub.dims() == GradedVectorSpace{{0, 1}, {4, 3}, {8, 5}, {12, 7}});
    CHECK(sub.is_associative());
    CHECK(sub.is_graded_commutative());

    auto q = nlohmann::json::parse(R"({"kind":"degreewise_quotient",
        "ambient":{"kind":"polynomial","generators":[{"name":"x","degree":2}]},
        "relations":["x^3"]})");
    auto qa = FiniteAlgebra::from_json(q, 5, 10);
    CHECK(qa.dims() == GradedVectorSpace{{0, 1}, {2, 1}, {4, 1}});
    CHECK(qa.is_associative());

    CHECK_THROWS_AS(FiniteAlgebra::from_json(nlohmann::json::parse(R"({"kind":"weird","generators":[]})"), 3, 4),
                    ValidationError);
    CHECK_THROWS_AS(
        FiniteAlgebra::from_json(nlohmann::json::parse(R"({"kind":"truncated","generators":[{"name":"x","degree":2}]})"),
                                 3, 4),
        ValidationError);
}

TEST_CASE("modules")
{
    auto a = share(FiniteAlgebra::from_monomial(MonomialAlgebra::exterior(3, {{"x", 1}}), 4));
    auto k = AlgebraModule::trivial(a, GradedVectorSpace{{0, 1}});
    CHECK_NOTHROW(k.validate());
    auto reg = AlgebraModule::regular(a);
    CHECK_NOTHROW(reg.validate());
    CHECK_FALSE(reg.is_trivial());

    // x acting by identity twice would give x^2 != 0
    GradedVectorSpace m{{0, 1}, {1, 1}, {2, 1}};
    GradedMap act(a->field(), m, m, 1);
    act.set_block(0, Matrix::identity(a->field(), 1));
    act.set_block(1, Matrix::identity(a->field(), 1));
    CHECK_THROWS_AS(AlgebraModule::from_generator_actions(a, m, {act}), ValidationError);

    // F2[c1,c2] -> F2[t], c1 -> 0, c2 -> t^2
    auto A = share(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(2, {{"c1", 2}, {"c2", 4}}), 12));
    auto B = FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(2, {{"t", 2}}), 12);
    auto [d2, t2] = B.evaluate(parse_polynomial("t^2", {"t"}, B.field()));
    CHECK(d2 == 4);
    auto mod = AlgebraModule::via_map(A, B, {Vec{0}, t2});
    CHECK(mod.space() == GradedVectorSpace{{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 1}});
    CHECK(mod.act(4, 0, 0) * Matrix::identity(A->field(), 1) == mod.act(4, 0, 0));
}
