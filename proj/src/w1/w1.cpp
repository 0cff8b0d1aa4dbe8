#include "fphom/w1.hpp"

#include <set>

#include "fphom/polynomial.hpp"

namespace fphom {

std::string W1Monomial::to_string(const Alphabet& a) const
{
    return epsilon ? "zeta(" + symbol.to_string(a) + ")" : symbol.to_string(a);
}

GradedVectorSpace zeta_space(const GradedVectorSpace& v, int p)
{
    GradedVectorSpace out;
    if (p == 2)
        return out;
    for (const auto& [i, d] : v.dims())
        if (i % 2 != 0 && d > 0)
            out.add_dim(zeta_degree(p, i), d);
    return out;
}

HilbertSeries sym_zeta_dims(const GradedVectorSpace& v, int p, int cap)
{
    return free_commutative_series(v.direct_sum(zeta_space(v, p)), p, cap);
}

std::vector<W1Monomial> enumerate_w1_monomials(const Alphabet& a, int p, int cap)
{
    std::vector<W1Monomial> out;
    for (const auto& s : enumerate_restricted_symbols(a, p, 4 * kMaxLieCap, cap)) {
        out.push_back({0, s, s.v_degree});
        if (p != 2 && s.v_degree % 2 != 0 && zeta_degree(p, s.v_degree) <= cap)
            out.push_back({1, s, zeta_degree(p, s.v_degree)});
    }
    return out;
}

HilbertSeries count_commutative_monomials(const std::vector<int>& generator_degrees, int p, int cap)
{
    std::vector<long long> c(static_cast<std::size_t>(cap) + 1, 0);
    c[0] = 1;
    for (int d : generator_degrees) {
        if (d <= 0)
            throw ValidationError("monomial generators need positive degree");
        if (d > cap)
            continue;
        if (p != 2 && d % 2 != 0) {
            for (int n = cap; n >= d; --n)
                c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - d)];
        } else {
            for (int n = d; n <= cap; ++n)
                c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - d)];
        }
    }
    HilbertSeries h(cap);
    for (int n = 0; n <= cap; ++n)
        h[n] = c[static_cast<std::size_t>(n)];
    return h;
}

HilbertSeries free_w1_dims(const Alphabet& a, int p, int cap, W1Mode mode)
{
    PrimeField f(p);
    if (cap < 0 || cap > kMaxLieCap)
        throw ValidationError("cap overflow: must be in [0, " + std::to_string(kMaxLieCap) + "]");
    std::vector<int> degrees;
    GradedVectorSpace lie;
    if (mode == W1Mode::abelian) {
        for (const auto& g : a.generators()) {
            if (g.degree % 2 != 0)
                throw DomainError("trivial operations require generators in even degrees ('" + g.name + "')");
            degrees.push_back(g.degree);
            lie.add_dim(g.degree, 1);
        }
    } else {
        for (const auto& g : a.generators())
            if (g.degree == 1)
                throw DomainError("free W1-algebra on a degree-one generator is infinite in degree one");
        for (const auto& m : enumerate_w1_monomials(a, p, cap))
            degrees.push_back(m.degree);
        lie = symbol_dims(enumerate_restricted_symbols(a, p, 4 * kMaxLieCap, cap));
    }
    HilbertSeries counted = count_commutative_monomials(degrees, p, cap);
    HilbertSeries formula = sym_zeta_dims(lie, p, cap);
    if (!(counted == formula))
        throw CrossCheckError("free W1 monomial count " + counted.to_string() + " disagrees with Sym_zeta " +
                              formula.to_string());
    return counted;
}

// ---------------------------------------------------------------- structure tables

namespace {

struct TableContext {
    std::vector<std::string> names;
    std::vector<int> degrees;
    PrimeField f;

    int degree_of(const std::string& name) const
    {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return degrees[i];
        throw ValidationError("structure table refers to unknown generator '" + name + "'");
    }

    Polynomial parse(const std::string& value, int expected_degree, const std::string& where) const
    {
        Polynomial v = parse_polynomial(value, names, f);
        if (!v.is_homogeneous(degrees, expected_degree))
            throw ValidationError(where + " = " + value + " is not homogeneous of degree " +
                                  std::to_string(expected_degree));
        return v;
    }
};

TableContext context_of(const W1StructureTable& s)
{
    TableContext c{{}, {}, PrimeField(s.p)};
    std::set<std::string> seen;
    for (const auto& g : s.generators) {
        if (!seen.insert(g.name).second)
            throw ValidationError("duplicate generator '" + g.name + "'");
        if (g.degree < 1)
            throw ValidationError("generator '" + g.name + "' must have degree >= 1");
        c.names.push_back(g.name);
        c.degrees.push_back(g.degree);
    }
    return c;
}

std::pair<std::string, std::string> split_pair(const std::string& key)
{
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw ValidationError("bracket key '" + key + "' must have the form 'x,y'");
    auto trim = [](std::string t) {
        const auto b = t.find_first_not_of(' ');
        const auto e = t.find_last_not_of(' ');
        return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    return {trim(key.substr(0, comma)), trim(key.substr(comma + 1))};
}

}  // namespace

void W1StructureTable::validate() const
{
    const TableContext c = context_of(*this);
    for (const auto& [g, value] : xi) {
        const int d = c.degree_of(g);
        Polynomial v = c.parse(value, xi_degree(p, d), "xi(" + g + ")");
        if (!v.is_zero() && !xi_admissible(p, d))
            throw ValidationError("xi(" + g + ") must vanish: xi is zero on even degree elements");
    }
    for (const auto& [g, value] : zeta) {
        if (p == 2)
            throw ValidationError("zeta does not exist at p = 2");
        const int d = c.degree_of(g);
        Polynomial v = c.parse(value, zeta_degree(p, d), "zeta(" + g + ")");
        if (!v.is_zero() && d % 2 == 0)
            throw ValidationError("zeta(" + g + ") must vanish: zeta is zero on even degree elements");
    }
    for (const auto& [key, value] : bracket) {
        const auto [x, y] = split_pair(key);
        c.parse(value, c.degree_of(x) + c.degree_of(y) - 1, "[" + x + "," + y + "]");
    }
}

nlohmann::json W1StructureTable::to_json() const
{
    nlohmann::json j;
    j["p"] = p;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : generators)
        j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    j["xi"] = xi;
    j["zeta"] = zeta;
    j["bracket"] = bracket;
    return j;
}

W1StructureTable W1StructureTable::from_json(const nlohmann::json& j)
{
    W1StructureTable s;
    try {
        s.p = j.at("p").get<int>();
        PrimeField check(s.p);
        for (const auto& g : j.at("generators"))
            s.generators.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
        if (j.contains("xi"))
            s.xi = j.at("xi").get<std::map<std::string, std::string>>();
        if (j.contains("zeta"))
            s.zeta = j.at("zeta").get<std::map<std::string, std::string>>();
        if (j.contains("bracket"))
            s.bracket = j.at("bracket").get<std::map<std::string, std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed structure table: ") + e.what());
    }
    s.validate();
    return s;
}

W1StructureTable W1StructureTable::eilenberg_maclane_z2_2(int cap)
{
    W1StructureTable s;
    s.p = 2;
    for (int d = 2; d <= cap; d = 2 * d - 1)
        s.generators.push_back({"x" + std::to_string(d), d});
    for (std::size_t i = 0; i + 1 < s.generators.size(); ++i)
        s.xi[s.generators[i].name] = s.generators[i + 1].name;
    return s;
}

nlohmann::json TrivialityReport::to_json() const
{
    nlohmann::json j;
    j["trivial"] = trivial;
    j["offenders"] = nlohmann::json::array();
    for (const auto& o : offenders)
        j["offenders"].push_back({{"generator", o.generator}, {"operation", o.operation}, {"value", o.value}});
    return j;
}

TrivialityReport triviality_check(const W1StructureTable& s)
{
    s.validate();
    const TableContext c = context_of(s);
    TrivialityReport r;
    auto scan = [&](const std::map<std::string, std::string>& values, const std::string& op) {
        for (const auto& name : c.names) {
            auto it = values.find(name);
            if (it == values.end())
                continue;
            Polynomial v = parse_polynomial(it->second, c.names, c.f);
            if (!v.is_zero())
                r.offenders.push_back({name, op, v.to_string(c.names)});
        }
    };
    scan(s.xi, "xi");
    scan(s.zeta, "zeta");
    for (const auto& [key, value] : s.bracket) {
        Polynomial v = parse_polynomial(value, c.names, c.f);
        if (!v.is_zero())
            r.offenders.push_back({key, "bracket", v.to_string(c.names)});
    }
    r.trivial = r.offenders.empty();
    return r;
}

nlohmann::json ObstructionReport::to_json() const
{
    nlohmann::json j;
    j["passes"] = passes;
    j["empty"] = empty;
    j["odd_support"] = nlohmann::json::array();
    for (const auto& [s, t] : odd_support)
        j["odd_support"].push_back({{"s", s}, {"t", t}});
    j["obstruction_line"] = nlohmann::json::array();
    for (const auto& [s, t] : obstruction_line)
        j["obstruction_line"].push_back({{"s", s}, {"t", t}});
    j["implication_chain"] = implication_chain;
    return j;
}

ObstructionReport obstruction_line_vanishes(const BigradedTable& t)
{
    ObstructionReport r;
    r.empty = true;
    for (const auto& [st, d] : t.entries()) {
        if (d == 0)
            continue;
        r.empty = false;
        const auto [s, tt] = st;
        if ((s + tt) % 2 != 0)
            r.odd_support.emplace_back(s, tt);
        if (tt == s - 1)
            r.obstruction_line.emplace_back(s, tt);
    }
    r.passes = r.odd_support.empty();
    if (r.passes) {
        r.implication_chain = {"no support with s+t odd (table is even)",
                               "AQ^{t,t-1} = 0 for every t, since t + (t-1) is odd",
                               "obstructions to lifting vanish: the map is obstruction-free"};
    } else {
        r.implication_chain = {"table has support with s+t odd; parity argument does not apply"};
    }
    return r;
}

}  // namespace fphom
