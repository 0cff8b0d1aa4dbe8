// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "fphom/applications.hpp"
#include "fphom/diagrams.hpp"
#include "fphom/homalg.hpp"
#include "fphom/w1.hpp"

using namespace fphom;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why)
{
    if (o.pass)
        o.detail = why;
    o.pass = false;
}

std::shared_ptr<const Alphabet> alphabet(std::vector<Generator> gens)
{
    return std::make_shared<const Alphabet>(std::move(gens));
}

const std::vector<std::vector<Generator>>& generator_sets()
{
    static const std::vector<std::vector<Generator>> sets{
        {{"x", 2}},
        {{"x", 3}},
        {{"x", 2}, {"y", 3}},
        {{"x", 3}, {"y", 5}},
        {{"x", 2}, {"y", 2}},
        {{"x", 4}, {"y", 5}, {"z", 6}},
    };
    return sets;
}

BigradedTable row0(const GradedVectorSpace& g)
{
    BigradedTable t;
    for (const auto& [d, n] : g.dims())
        t.set(0, d, n);
    return t;
}

// 1
Outcome free_functor_identity()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    int checked = 0;
    for (int p : {2, 3, 5})
        for (const auto& gens : generator_sets()) {
            auto a = alphabet(gens);
            const PrimeField f(p);
            const auto restricted = restricted_basis(a, f, 15, 4 * kMaxLieCap).dims;
            const auto expected = sym_zeta_dims(restricted, p, 15);
            const auto got = free_w1_dims(*a, p, 15);
            if (!(got == expected))
                fail(o, "p=" + std::to_string(p) + ": " + got.to_string() + " vs " + expected.to_string());
            ++checked;
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60)
        fail(o, "took " + std::to_string(secs) + " s");
    if (o.pass) {
        std::ostringstream os;
        os << checked << " (prime, generator set) pairs to cap 15 in " << std::fixed;
        os.precision(2);
        os << secs << " s";
        o.detail = os.str();
    }
    return o;
}

// 2
Outcome oracle_equality()
{
    Outcome o;
    int checked = 0;
    for (int p : {2, 3, 5})
        for (const auto& gens : generator_sets()) {
            auto a = alphabet(gens);
            const PrimeField f(p);
            if (!(lyndon_basis(a, f, kMaxWordLength, 10).dims == bracket_closure_dims(a, f, 10)))
                fail(o, "Lyndon vs bracket closure at p=" + std::to_string(p));
            if (!(restricted_basis(a, f, 10).dims == restricted_closure_dims(a, f, 10)))
                fail(o, "restricted basis vs closure at p=" + std::to_string(p));
            ++checked;
        }
    if (o.pass)
        o.detail = std::to_string(checked) + " sets, both oracles, cap 10";
    return o;
}

// 3
Outcome axiom_suite()
{
    Outcome o;
    int trials = 0;
    for (int p : {2, 3, 5}) {
        const auto rep = check_axioms(alphabet({{"x", 2}, {"y", 3}, {"z", 5}}), PrimeField(p), 10, 200,
                                      7u + static_cast<unsigned>(p));
        for (const auto& r : rep.results) {
            trials += r.passed;
            if (r.failed > 0)
                fail(o, "p=" + std::to_string(p) + " " + r.axiom + ": " +
                            (r.witnesses.empty() ? std::string("failure") : r.witnesses.front()));
            if (r.passed < 150)
                fail(o, "p=" + std::to_string(p) + " " + r.axiom + ": only " + std::to_string(r.passed) +
                            " non-skipped trials");
        }
        if (p == 2) {
            bool additivity = false;
            for (const auto& r : rep.results)
                additivity = additivity || r.axiom.find("additiv") != std::string::npos;
            if (!additivity)
                fail(o, "p=2 additivity axiom missing from the report");
        }
    }
    if (o.pass)
        o.detail = std::to_string(trials) + " passing trials, 0 failures";
    return o;
}

// 4 (tables are kept for 12)
std::vector<BigradedTable>& even_tables()
{
    static std::vector<BigradedTable> tables;
    return tables;
}

Outcome hochschild_evenness()
{
    Outcome o;
    std::mt19937 rng(2024);
    const int cap = 12, s_max = 5;
    int instances = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const int p = std::array{2, 3, 5}[trial % 3];
        std::uniform_int_distribution<int> odd(0, 2), ngen(1, 2), mdeg(0, 2), mdim(1, 2);
        std::vector<std::pair<std::string, int>> gens;
        for (int k = 0, n = ngen(rng); k < n; ++k)
            gens.emplace_back(std::string(1, static_cast<char>('x' + k)), 2 * odd(rng) + 1);
        GradedVectorSpace m;
        m.add_dim(2 * mdeg(rng) + 1, mdim(rng));
        if (trial % 2)
            m.add_dim(2 * mdeg(rng) + 1, 1);
        auto a = std::make_shared<const FiniteAlgebra>(FiniteAlgebra::from_monomial(MonomialAlgebra::exterior(p, gens), cap));
        const auto mod = AlgebraModule::trivial(a, m);
        const auto aq = aq_ass_dims(a, mod, s_max);
        const auto hh = hochschild_dims(a, mod, s_max);
        if (aq.verdict.parity != Parity::even)
            fail(o, "instance " + std::to_string(trial) + " has parity " + to_string(aq.verdict.parity));
        if (!(hh.via_ext == hh.via_cochains))
            fail(o, "Hochschild paths differ on instance " + std::to_string(trial));
        even_tables().push_back(aq.table);
        ++instances;
    }
    if (o.pass)
        o.detail = std::to_string(instances) + " instances even, paths agree to s=5, cap 12";
    return o;
}

// 5
Outcome periodicity()
{
    Outcome o;
    for (int p : {2, 3, 5}) {
        auto a = std::make_shared<const FiniteAlgebra>(FiniteAlgebra::from_monomial(
            MonomialAlgebra(p, AlgebraKind::truncated, {{"x", 3, 2}}), 24));
        const auto ext = ext_dims(a, AlgebraModule::trivial(a, GradedVectorSpace{{0, 1}}), 8);
        BigradedTable expected;
        for (int s = 0; s <= 8; ++s)
            expected.set(s, -3 * s, 1);
        if (!(ext == expected))
            fail(o, "p=" + std::to_string(p) + ": " + ext.to_string());
    }
    if (o.pass)
        o.detail = "dim 1 at (s,-3s) for s <= 8, p = 2,3,5";
    return o;
}

// 6
Outcome tor_bar_loops()
{
    Outcome o;
    struct Case {
        GradedVectorSpace v;
        GradedVectorSpace expected;
    };
    for (const Case& c : {Case{{{2, 1}}, {{0, 1}, {1, 1}}}, Case{{{2, 1}, {4, 1}}, {{0, 1}, {1, 1}, {3, 1}, {4, 1}}}})
        for (int p : {2, 3, 5}) {
            try {
                const auto r = loop_cohomology_dims(c.v, p, 8);
                if (!(r.koszul == c.expected) || !(r.bar == c.expected) || !(r.exterior == c.expected))
                    fail(o, "V=" + c.v.to_string() + ", p=" + std::to_string(p) + ": " + r.koszul.to_string());
            }
            catch (const CrossCheckError& e) {
                fail(o, e.what());
            }
        }
    if (o.pass)
        o.detail = "Tor = bar = exterior for V={2:1} and {2:1,4:1}, p = 2,3,5";
    return o;
}

// 7
json random_tree_diagram(std::mt19937& rng, int p, int n, bool surjective_bias)
{
    std::uniform_int_distribution<int> dimd(0, 2), coin(0, 1);
    json j;
    j["objects"] = json::array();
    j["arrows"] = json::array();
    j["values"] = json::object();
    j["maps"] = json::object();
    std::vector<int> lambda(static_cast<std::size_t>(n));
    std::vector<std::array<int, 3>> dims(static_cast<std::size_t>(n));
    const std::array<int, 3> degrees{0, 2, 4};
    for (int i = 0; i < n; ++i) {
        const int parent = i == 0 ? -1 : std::uniform_int_distribution<int>(0, i - 1)(rng);
        const bool up = parent >= 0 && coin(rng);
        const auto ui = static_cast<std::size_t>(i);
        lambda[ui] = parent < 0 ? n : lambda[static_cast<std::size_t>(parent)] + (up ? 1 : -1);
        for (auto& d : dims[ui])
            d = dimd(rng);
        j["objects"].push_back({{"id", std::to_string(i)}, {"lambda", lambda[ui] + n}});
        json v = json::object();
        for (std::size_t k = 0; k < 3; ++k)
            if (dims[ui][k])
                v[std::to_string(degrees[k])] = dims[ui][k];
        j["values"][std::to_string(i)] = v;
        if (parent < 0)
            continue;
        const int src = up ? parent : i, dst = up ? i : parent;
        const std::string id = "e" + std::to_string(i);
        j["arrows"].push_back({{"src", std::to_string(src)}, {"dst", std::to_string(dst)}, {"id", id}});
        json m = json::object();
        for (std::size_t k = 0; k < 3; ++k) {
            const int rows = dims[static_cast<std::size_t>(src)][k];
            const int cols = dims[static_cast<std::size_t>(dst)][k];
            if (rows == 0 || cols == 0)
                continue;
            json mat = json::array();
            for (int r = 0; r < rows; ++r) {
                json row = json::array();
                for (int c = 0; c < cols; ++c)
                    row.push_back(surjective_bias ? (r == c ? 1 : 0) : std::uniform_int_distribution<int>(0, p - 1)(rng));
                mat.push_back(row);
            }
            m[std::to_string(degrees[k])] = mat;
        }
        j["maps"][id] = m;
    }
    return j;
}

Outcome diagram_concentration()
{
    Outcome o;
    std::mt19937 rng(77);
    int injective = 0, total = 0;
    for (int trial = 0; trial < 240; ++trial) {
        const int p = std::array{2, 3, 5}[trial % 3];
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const auto d = Diagram::from_json(random_tree_diagram(rng, p, n, trial % 2 == 0), p, 10);
        ++total;
        if (!injective_by_criterion(d, 10).injective)
            continue;
        ++injective;
        const BigradedTable lim = derived_lim_dims(d, 10);
        for (const auto& [st, dim] : lim.entries())
            if (st.first != 0)
                fail(o, "injective diagram with lim^" + std::to_string(st.first) + " != 0");
    }
    for (const char* complex : {R"({"vertices":["a","b","c"],"facets":[["a","b"],["b","c"],["a","c"]]})",
                                R"({"vertices":["a","b","c","d"],"facets":[["a","b","c"],["c","d"]]})",
                                R"({"vertices":["a","b"],"facets":[["a"],["b"]]})"}) {
        const auto d = Diagram::stanley_reisner_diagram(json::parse(complex), 3, 10);
        ++total;
        if (!injective_by_criterion(d, 10).injective) {
            fail(o, std::string("face-poset diagram not injective: ") + complex);
            continue;
        }
        ++injective;
        if (!(derived_lim_dims(d, 10) == row0(limit_dims(d, 10))))
            fail(o, std::string("face-poset diagram not concentrated: ") + complex);
    }
    const auto cospan = Diagram::from_json(
        json::parse(R"({"objects":[{"id":"c","lambda":0},{"id":"a","lambda":1},{"id":"b","lambda":1}],
            "arrows":[{"src":"c","dst":"a","id":"fa"},{"src":"c","dst":"b","id":"fb"}],
            "values":{"a":{"0":1},"b":{"0":1},"c":{"2":1}},"maps":{"fa":{},"fb":{}}})"),
        3, 10);
    if (derived_lim_dims(cospan, 10).dim(1, 2) != 1)
        fail(o, "cospan lim^1 at t=2 is " + std::to_string(derived_lim_dims(cospan, 10).dim(1, 2)));
    if (o.pass)
        o.detail = std::to_string(injective) + "/" + std::to_string(total) +
                   " diagrams injective, all concentrated; cospan has (1,2):1";
    return o;
}

// 8
Outcome diagram_aq()
{
    Outcome o;
    const int p = 5, cap = 12, q_max = 2;
    const json shape = json::parse(R"({"objects":[{"id":"c","lambda":0},{"id":"a","lambda":1},{"id":"b","lambda":1}],
        "arrows":[{"src":"c","dst":"a","id":"fa"},{"src":"c","dst":"b","id":"fb"}]})");
    json vj = shape;
    vj["values"] = {{"a", {{"4", 1}, {"6", 1}}}, {"b", {{"4", 1}, {"6", 1}}}, {"c", {{"4", 1}, {"6", 1}}}};
    vj["maps"] = {{"fa", {{"4", {{1}}}, {"6", {{1}}}}}, {"fb", {{"4", {{1}}}, {"6", {{1}}}}}};
    json mj = shape;
    mj["values"] = {{"a", {{"3", 2}, {"5", 1}}}, {"b", {{"3", 1}}}, {"c", {{"3", 1}}}};
    mj["maps"] = {{"fa", {{"3", {{1, 1}}}}}, {"fb", {{"3", {{1}}}}}};
    const auto v = Diagram::from_json(vj, p, cap);
    const auto m = Diagram::from_json(mj, p, cap);
    const auto res = diagram_aq_table(v, m, 2, q_max);
    if (!res.coefficients_injective)
        fail(o, "coefficients not injective");
    if (!res.concentrated)
        fail(o, "not concentrated at s = 0");
    // kernel formula: the generators are constant, so the s = 0 term is AQ(Lambda V, k) (x) lim M
    auto a = std::make_shared<const FiniteAlgebra>(
        FiniteAlgebra::from_monomial(MonomialAlgebra::exterior(p, {{"x", 3}, {"y", 5}}), cap));
    const auto single = aq_ass_dims(a, AlgebraModule::trivial(a, GradedVectorSpace{{0, 1}}), q_max);
    const auto lim = limit_dims(m, cap);
    for (int q = 0; q <= q_max; ++q) {
        BigradedTable expected;
        const GradedVectorSpace row = single.table.row(q);
        for (const auto& [t, n] : row.dims())
            for (const auto& [d, k] : lim.dims())
                expected.add(0, t + d, n * k);
        if (!(res.by_q.at(q) == expected))
            fail(o, "q=" + std::to_string(q) + ": " + res.by_q.at(q).to_string() + " vs kernel " + expected.to_string());
    }
    if (o.pass)
        o.detail = "surjective span concentrated, s=0 equals the kernel for q <= 2";
    return o;
}

// 9
Outcome invariants_golden()
{
    Outcome o;
    const auto g = GroupAction::from_json(json::parse(R"({"p":3,"matrices":[[[2,0],[0,2]]],"degrees":[2,2]})"));
    const auto c = lie_formality_checklist(g, 12);
    if (!(c.invariants.dims == GradedVectorSpace{{0, 1}, {4, 3}, {8, 5}, {12, 7}}))
        fail(o, "invariants " + c.invariants.dims.to_string());
    if (c.polynomial.status != PolynomialCheck::Status::not_polynomial || c.polynomial.witness_degree != 8 ||
        c.polynomial.witness_dim != 5 || c.polynomial.free_dim != 6)
        fail(o, "witness: " + c.polynomial.to_string());
    if (!c.criteria_satisfied)
        fail(o, "criteria not satisfied");
    if (o.pass)
        o.detail = "{0:1,4:3,8:5,12:7}, dim_8 = 5 < 6, criteria satisfied";
    return o;
}

// 10
Outcome stanley_reisner()
{
    Outcome o;
    int n = 0;
    for (const char* complex : {R"({"vertices":["v"],"facets":[["v"]]})", R"({"vertices":["a","b"],"facets":[["a"],["b"]]})",
                                R"({"vertices":["a","b","c"],"facets":[["a","b"],["b","c"],["a","c"]]})",
                                R"({"vertices":["a","b","c","d"],"facets":[["a","b","c"],["c","d"]]})"})
        for (int p : {2, 3}) {
            try {
                const auto r = stanley_reisner_dims(json::parse(complex), p, 2, 12);
                if (!(r.monomial_count == r.categorical_limit))
                    fail(o, complex);
                ++n;
            }
            catch (const CrossCheckError& e) {
                fail(o, e.what());
            }
        }
    if (o.pass)
        o.detail = std::to_string(n) + " (complex, prime) pairs agree to cap 12";
    return o;
}

// 11
Outcome emss_goldens()
{
    Outcome o;
    for (int n = 1; n <= 9; ++n) {
        const auto rep = emss_hypothesis_check(EMSSInput::projective_unitary(n, 2), 2 * n + 2);
        if (rep.x.surjective != (n % 2 == 1))
            fail(o, "BU(" + std::to_string(n) + ") surjectivity verdict " + (rep.x.surjective ? "true" : "false"));
    }
    const auto pu3 = emss_tor_algebra(EMSSInput::projective_unitary(3, 2), 14);
    if (!(pu3.totals == GradedVectorSpace{{0, 1}, {3, 1}, {5, 1}, {8, 1}}))
        fail(o, "PU(3) totals " + pu3.totals.to_string());
    const auto pu2 = emss_tor_algebra(EMSSInput::projective_unitary(2, 2), 12);
    bool witness = false;
    for (std::size_t k = 0; k < pu2.classes.size(); ++k)
        if (pu2.classes[k].t - pu2.classes[k].s == 1 && pu2.square_known[k] && pu2.square_zero[k])
            witness = true;
    if (!witness)
        fail(o, "PU(2) has no total-degree-1 class with zero square");
    if (o.pass)
        o.detail = "surjective iff n odd (n <= 9); PU(3) {0:1,3:1,5:1,8:1}; PU(2) degree-1 class squares to 0";
    return o;
}

// 12
Outcome obstruction_wiring()
{
    Outcome o;
    if (even_tables().empty())
        fail(o, "no tables from criterion 4");
    for (const auto& t : even_tables())
        if (!obstruction_line_vanishes(t).passes)
            fail(o, "obstruction line check failed on an even table");
    const auto rep = triviality_check(W1StructureTable::eilenberg_maclane_z2_2(12));
    if (rep.trivial)
        fail(o, "K(Z/2,2) table reported trivial");
    bool witness = false;
    for (const auto& off : rep.offenders)
        witness = witness || (off.generator == "x2" && off.value == "x3");
    if (!witness)
        fail(o, "witness xi(x2) = x3 missing");
    if (o.pass)
        o.detail = std::to_string(even_tables().size()) + " even tables pass; K(Z/2,2) fails with xi(x2) = x3";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"free-functor identity", free_functor_identity},
        {"Lie basis oracle equality", oracle_equality},
        {"axiom suite", axiom_suite},
        {"Hochschild evenness", hochschild_evenness},
        {"Ext periodicity", periodicity},
        {"Tor/bar/loop agreement", tor_bar_loops},
        {"diagram concentration", diagram_concentration},
        {"diagram AQ kernel", diagram_aq},
        {"invariants golden value", invariants_golden},
        {"Stanley-Reisner dual path", stanley_reisner},
        {"EMSS goldens", emss_goldens},
        {"obstruction wiring", obstruction_wiring},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        }
        catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
