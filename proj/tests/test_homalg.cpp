#include "doctest.h"

#include <random>

#include "fphom/homalg.hpp"

using namespace fphom;

namespace {

std::shared_ptr<const FiniteAlgebra> share(FiniteAlgebra a)
{
    return std::make_shared<const FiniteAlgebra>(std::move(a));
}

std::shared_ptr<const FiniteAlgebra> exterior(int p, std::vector<std::pair<std::string, int>> gens, int cap)
{
    return share(FiniteAlgebra::from_monomial(MonomialAlgebra::exterior(p, gens), cap));
}

BigradedTable table(std::initializer_list<std::tuple<int, int, int>> entries)
{
    BigradedTable t;
    for (auto [s, tt, d] : entries)
        t.set(s, tt, d);
    return t;
}

}  // namespace

TEST_CASE("Koszul resolutions")
{
    auto ext = exterior(3, {{"x", 3}}, 6);
    auto r = koszul_resolution(ext, 3);
    CHECK(r.degrees == std::vector<std::vector<int>>{{0}, {3}, {6}});

    auto poly = share(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(5, {{"u", 2}}), 10));
    auto rp = koszul_resolution(poly, 4);
    CHECK(rp.rank(0) == 1);
    CHECK(rp.rank(1) == 1);
    CHECK(rp.rank(2) == 0);
    CHECK(rp.degrees[1] == std::vector<int>{2});

    // p = 2, x of degree 3 with x^2 = 0 declared explicitly
    auto mixed = share(FiniteAlgebra::from_monomial(
        MonomialAlgebra(2, AlgebraKind::truncated, {{"u", 2, 0}, {"x", 3, 2}}, {}), 12));
    auto rm = koszul_resolution(mixed, 5);
    CHECK(rm.d_squared_zero());
    CHECK(rm.exact());

    auto trunc = share(FiniteAlgebra::from_monomial(MonomialAlgebra(3, AlgebraKind::truncated, {{"y", 2, 3}}, {}), 8));
    auto rt = koszul_resolution(trunc, 5);
    CHECK(rt.degrees == std::vector<std::vector<int>>{{0}, {2}, {6}, {8}, {12}});
}

TEST_CASE("Ext over exterior and polynomial algebras")
{
    for (int p : {2, 3, 5}) {
        auto a = exterior(p, {{"x", 3}}, 6);
        auto k = AlgebraModule::trivial(a, GradedVectorSpace{{0, 1}});
        CHECK(ext_dims(a, k, 4) == table({{0, 0, 1}, {1, -3, 1}, {2, -6, 1}, {3, -9, 1}, {4, -12, 1}}));

        auto u = share(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(p, {{"u", 2}}), 8));
        auto ku = AlgebraModule::trivial(u, GradedVectorSpace{{0, 1}});
        CHECK(ext_dims(u, ku, 3) == table({{0, 0, 1}, {1, -2, 1}}));
    }
    auto xy = exterior(3, {{"x", 3}, {"y", 5}}, 8);
    auto k = AlgebraModule::trivial(xy, GradedVectorSpace{{0, 1}});
    CHECK(ext_dims(xy, k, 2).row(2) == GradedVectorSpace{{-6, 1}, {-8, 1}, {-10, 1}});

    // Ext(k, A) for A self-injective: concentrated in s = 0
    auto e = exterior(3, {{"x", 1}, {"y", 3}}, 4);
    auto ext_reg = ext_dims(e, AlgebraModule::regular(e), 3);
    CHECK(ext_reg == table({{0, 4, 1}}));

    auto zero = AlgebraModule::trivial(e, GradedVectorSpace{});
    CHECK(ext_dims(e, zero, 3).empty());
}

TEST_CASE("Tor and the bar construction agree")
{
    for (int p : {2, 3, 5}) {
        auto u = share(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(p, {{"u", 2}}), 10));
        auto k = AlgebraModule::trivial(u, GradedVectorSpace{{0, 1}});
        auto tor = tor_dims(u, k, k, 4);
        CHECK(tor == table({{0, 0, 1}, {1, 2, 1}}));
        CHECK(tor.total_degrees() == GradedVectorSpace{{0, 1}, {1, 1}});
        CHECK(bar_homology_dims(*u, 4) == tor);

        // Tor(A, k) = k
        CHECK(tor_dims(u, AlgebraModule::regular(u), k, 4) == table({{0, 0, 1}}));

        auto x = exterior(p, {{"x", 3}}, 12);
        auto kx = AlgebraModule::trivial(x, GradedVectorSpace{{0, 1}});
        auto torx = tor_dims(x, kx, kx, 4);
        CHECK(torx == table({{0, 0, 1}, {1, 3, 1}, {2, 6, 1}, {3, 9, 1}, {4, 12, 1}}));
        CHECK(bar_homology_dims(*x, 4) == torx);
        CHECK(torx.total_degrees() == GradedVectorSpace{{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}});

        auto ux = share(FiniteAlgebra::from_monomial(
            MonomialAlgebra(p, AlgebraKind::truncated, {{"u", 2, 0}, {"x", 3, 2}}, {}), 9));
        auto kux = AlgebraModule::trivial(ux, GradedVectorSpace{{0, 1}});
        CHECK(bar_homology_dims(*ux, 3) == tor_dims(ux, kux, kux, 3));
    }
}

TEST_CASE("two-sided Tor over a polynomial algebra")
{
    // Tor^{F2[c1,c2]}(F2, F2[t]) with c1 -> 0, c2 -> t^2: generators in degrees 0 and 2 (u_{c1})
    auto A = share(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(2, {{"c1", 2}, {"c2", 4}}), 12));
    auto B = FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(2, {{"t", 2}}), 12);
    auto tmod = AlgebraModule::via_map(A, B, {Vec{0}, B.evaluate(parse_polynomial("t^2", {"t"}, B.field())).second});
    auto k = AlgebraModule::trivial(A, GradedVectorSpace{{0, 1}});
    auto one_sided = tor_dims(A, tmod, k, 3);
    CHECK(one_sided == table({{0, 0, 1}, {0, 2, 1}, {1, 2, 1}, {1, 4, 1}}));
    CHECK(tor_dims(A, k, tmod, 3) == one_sided);

    // both sides nontrivial: Tor(A, N) = N in degree 0
    BigradedTable expected;
    for (const auto& [d, n] : tmod.space().dims())
        expected.set(0, d, n);
    CHECK(tor_dims(A, AlgebraModule::regular(A), tmod, 3) == expected);
}

TEST_CASE("Hochschild cohomology of exterior algebras")
{
    auto a = exterior(3, {{"x", 3}}, 3);
    auto k3 = AlgebraModule::trivial(a, GradedVectorSpace{{3, 1}});
    auto hh = hochschild_dims(a, k3, 4);
    CHECK(hh.table == table({{0, 3, 1}, {1, 0, 1}, {2, -3, 1}, {3, -6, 1}, {4, -9, 1}}));

    auto b = exterior(5, {{"x", 1}}, 1);
    auto k1 = AlgebraModule::trivial(b, GradedVectorSpace{{1, 1}});
    auto hb = hochschild_dims(b, k1, 3).table;
    for (int n = 0; n <= 3; ++n)
        CHECK(hb.dim(n, 1 - n) == 1);

    CHECK(hochschild_dims(a, AlgebraModule::trivial(a, GradedVectorSpace{}), 3).table.empty());

    auto poly = share(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(3, {{"u", 2}}), 6));
    CHECK_THROWS_AS(hochschild_dims(poly, AlgebraModule::trivial(poly, GradedVectorSpace{{0, 1}}), 2),
                    ValidationError);
}

TEST_CASE("derivations")
{
    auto a = exterior(3, {{"x", 3}}, 3);
    auto k3 = AlgebraModule::trivial(a, GradedVectorSpace{{3, 1}});
    CHECK(derivations_dims(*a, k3).dims == GradedVectorSpace{{0, 1}});

    auto u = FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(5, {{"u", 2}}), 10);
    auto su = share(u);
    auto der = derivations_dims(u, AlgebraModule::trivial(su, GradedVectorSpace{{2, 1}}));
    CHECK(der.dims == GradedVectorSpace{{0, 1}});

    // derivations into a trivial module are dual to indecomposables
    auto json = nlohmann::json::parse(R"({"kind":"degreewise_subring",
        "ambient":{"kind":"polynomial","generators":[{"name":"x","degree":2},{"name":"y","degree":2}]},
        "generators":["x^2","x*y","y^2"]})");
    auto sub = share(FiniteAlgebra::from_json(json, 3, 12));
    auto q = indecomposable_dims(*sub);
    CHECK(q == GradedVectorSpace{{4, 3}});
    for (int d : {4, 8}) {
        auto kd = AlgebraModule::trivial(sub, GradedVectorSpace{{d, 1}});
        auto dd = derivations_dims(*sub, kd);
        for (int i = 1; i <= 12; ++i)
            CHECK(dd.dims.dim(d - i) == q.dim(i));
    }
}

TEST_CASE("associative AQ of exterior algebras")
{
    auto a = exterior(3, {{"x", 3}}, 3);
    auto k3 = AlgebraModule::trivial(a, GradedVectorSpace{{3, 1}});
    auto aq = aq_ass_dims(a, k3, 3);
    CHECK(aq.table == table({{0, 0, 1}, {1, -3, 1}, {2, -6, 1}, {3, -9, 1}}));
    CHECK(aq.verdict.parity == Parity::even);
    CHECK(aq.notes.empty());

    auto k2 = AlgebraModule::trivial(a, GradedVectorSpace{{2, 1}});
    auto aq2 = aq_ass_dims(a, k2, 2);
    CHECK(aq2.notes.size() == 1);

    auto b = exterior(2, {{"x", 1}, {"y", 1}}, 2);
    auto k1 = AlgebraModule::trivial(b, GradedVectorSpace{{1, 1}});
    auto aqb = aq_ass_dims(b, k1, 4);
    CHECK(aqb.verdict.parity == Parity::even);
    CHECK(aqb.notes.empty());
}

TEST_CASE("property: AQ of odd exterior algebras with odd coefficients is even")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        const int p = std::array{2, 3, 5}[trial % 3];
        std::uniform_int_distribution<int> ngen(1, 2), odd(0, 2), mdeg(0, 3);
        std::vector<std::pair<std::string, int>> gens;
        int top = 0;
        const int n = ngen(rng);
        for (int i = 0; i < n; ++i) {
            const int d = 2 * odd(rng) + 1;
            gens.push_back({std::string(1, static_cast<char>('a' + i)), d});
            top += d;
        }
        auto a = exterior(p, gens, top);
        GradedVectorSpace m;
        m.set_dim(2 * mdeg(rng) + 1, 1);
        if (rng() % 2)
            m.add_dim(2 * mdeg(rng) + 1, 1);
        auto aq = aq_ass_dims(a, AlgebraModule::trivial(a, m), 3);
        CAPTURE(trial);
        CHECK(aq.verdict.parity == Parity::even);
        CHECK(aq.notes.empty());
    }
}

TEST_CASE("property: Hochschild paths agree for regular coefficients")
{
    for (int p : {2, 3}) {
        auto a = exterior(p, {{"x", 1}, {"y", 3}}, 4);
        auto hh = hochschild_dims(a, AlgebraModule::regular(a), 3);
        CHECK(hh.via_ext == hh.via_cochains);
    }
}

TEST_CASE("property: Ext over an exterior algebra is periodic")
{
    for (int p : {3, 7}) {
        for (int d : {1, 3, 5}) {
            auto a = exterior(p, {{"x", d}}, d);
            auto k = AlgebraModule::trivial(a, GradedVectorSpace{{0, 1}});
            auto e = ext_dims(a, k, 6);
            for (int s = 0; s <= 6; ++s)
                CHECK(e.row(s) == GradedVectorSpace{{-d * s, 1}});
        }
    }
}
