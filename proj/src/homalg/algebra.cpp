#include "fphom/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fphom {

std::string to_string(AlgebraKind k)
{
    switch (k) {
    case AlgebraKind::polynomial: return "polynomial";
    case AlgebraKind::exterior: return "exterior";
    case AlgebraKind::mixed: return "mixed";
    case AlgebraKind::truncated: return "truncated";
    case AlgebraKind::stanley_reisner: return "stanley_reisner";
    case AlgebraKind::degreewise_subring: return "degreewise_subring";
    case AlgebraKind::degreewise_quotient: return "degreewise_quotient";
    }
    return "?";
}

AlgebraKind algebra_kind_from_string(const std::string& s)
{
    for (auto k : {AlgebraKind::polynomial, AlgebraKind::exterior, AlgebraKind::mixed, AlgebraKind::truncated,
                   AlgebraKind::stanley_reisner, AlgebraKind::degreewise_subring, AlgebraKind::degreewise_quotient})
        if (to_string(k) == s)
            return k;
    throw ValidationError("unknown algebra kind '" + s + "'");
}

// ---------------------------------------------------------------- MonomialAlgebra

MonomialAlgebra::MonomialAlgebra(int p, AlgebraKind kind, std::vector<AlgebraGenerator> gens,
                                 std::optional<std::vector<std::vector<std::size_t>>> facets)
    : p_(p), kind_(kind), gens_(std::move(gens)), facets_(std::move(facets))
{
    PrimeField check(p);
    if (kind == AlgebraKind::degreewise_subring || kind == AlgebraKind::degreewise_quotient)
        throw ValidationError("degreewise kinds are not monomial algebras");
    std::set<std::string> seen;
    for (auto& g : gens_) {
        if (g.name.empty() || !seen.insert(g.name).second)
            throw ValidationError("generator names must be nonempty and distinct");
        if (g.degree < 1)
            throw ValidationError("generator '" + g.name + "' must have positive degree");
        if (g.height < 0 || g.height == 1)
            throw ValidationError("generator '" + g.name + "' has invalid truncation height");
        if (p != 2 && g.degree % 2 != 0)
            g.height = 2;
    }
    if (kind == AlgebraKind::stanley_reisner) {
        if (!facets_)
            throw ValidationError("Stanley-Reisner algebra needs a facet list");
        for (const auto& f : *facets_)
            for (auto v : f)
                if (v >= gens_.size())
                    throw ValidationError("facet refers to a missing vertex");
    } else if (facets_) {
        throw ValidationError("facets are only meaningful for Stanley-Reisner algebras");
    }
}

namespace {

std::vector<AlgebraGenerator> make_gens(const std::vector<std::pair<std::string, int>>& gens, int height)
{
    std::vector<AlgebraGenerator> out;
    for (const auto& [n, d] : gens)
        out.push_back({n, d, height});
    return out;
}

}  // namespace

MonomialAlgebra MonomialAlgebra::polynomial(int p, const std::vector<std::pair<std::string, int>>& gens)
{
    return MonomialAlgebra(p, AlgebraKind::polynomial, make_gens(gens, 0));
}

MonomialAlgebra MonomialAlgebra::exterior(int p, const std::vector<std::pair<std::string, int>>& gens)
{
    return MonomialAlgebra(p, AlgebraKind::exterior, make_gens(gens, 2));
}

MonomialAlgebra MonomialAlgebra::mixed(int p, const std::vector<std::pair<std::string, int>>& gens)
{
    return MonomialAlgebra(p, AlgebraKind::mixed, make_gens(gens, 0));
}

MonomialAlgebra MonomialAlgebra::stanley_reisner(int p, const std::vector<std::pair<std::string, int>>& gens,
                                                 const std::vector<std::vector<std::size_t>>& facets)
{
    return MonomialAlgebra(p, AlgebraKind::stanley_reisner, make_gens(gens, 0), facets);
}

std::vector<std::string> MonomialAlgebra::names() const
{
    std::vector<std::string> out;
    for (const auto& g : gens_)
        out.push_back(g.name);
    return out;
}

std::vector<int> MonomialAlgebra::degrees() const
{
    std::vector<int> out;
    for (const auto& g : gens_)
        out.push_back(g.degree);
    return out;
}

bool MonomialAlgebra::is_finite() const
{
    if (facets_) {
        // Finite iff every vertex appearing in a facet is truncated.
        for (const auto& f : *facets_)
            for (auto v : f)
                if (gens_[v].height == 0)
                    return false;
        return true;
    }
    return std::all_of(gens_.begin(), gens_.end(), [](const AlgebraGenerator& g) { return g.height > 0; });
}

bool MonomialAlgebra::is_basis_monomial(const Exponents& e) const
{
    if (e.size() != gens_.size())
        return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0)
            return false;
        if (gens_[i].height > 0 && e[i] >= gens_[i].height)
            return false;
    }
    if (facets_) {
        for (const auto& f : *facets_) {
            bool inside = true;
            for (std::size_t i = 0; i < e.size() && inside; ++i)
                if (e[i] > 0 && std::find(f.begin(), f.end(), i) == f.end())
                    inside = false;
            if (inside)
                return true;
        }
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    return true;
}

int MonomialAlgebra::degree(const Exponents& e) const
{
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += e[i] * gens_[i].degree;
    return d;
}

std::vector<Exponents> MonomialAlgebra::basis(int degree) const
{
    std::vector<Exponents> out;
    if (degree < 0)
        return out;
    Exponents e(gens_.size(), 0);
    const auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == gens_.size()) {
            if (remaining == 0 && is_basis_monomial(e))
                out.push_back(e);
            return;
        }
        const int d = gens_[i].degree;
        const int hmax = gens_[i].height > 0 ? gens_[i].height - 1 : remaining / d;
        for (int k = 0; k <= hmax && k * d <= remaining; ++k) {
            e[i] = k;
            self(self, i + 1, remaining - k * d);
        }
        e[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

GradedVectorSpace MonomialAlgebra::dims(int cap) const
{
    GradedVectorSpace v;
    for (int d = 0; d <= cap; ++d)
        v.set_dim(d, static_cast<int>(basis(d).size()));
    return v;
}

std::optional<std::pair<PrimeField::Elem, Exponents>> MonomialAlgebra::multiply(const Exponents& a,
                                                                                 const Exponents& b) const
{
    Exponents c(a);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b[i];
    if (!is_basis_monomial(c))
        return std::nullopt;
    long long sign = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (gens_[i].degree % 2 == 0 || a[i] == 0)
            continue;
        for (std::size_t j = 0; j < i; ++j)
            if (gens_[j].degree % 2 != 0)
                sign += static_cast<long long>(a[i]) * b[j];
    }
    PrimeField f(p_);
    return std::make_pair(f.sign(sign), c);
}

nlohmann::json MonomialAlgebra::to_json() const
{
    nlohmann::json j;
    j["kind"] = to_string(kind_);
    j["generators"] = nlohmann::json::array();
    for (const auto& g : gens_) {
        nlohmann::json gj{{"name", g.name}, {"degree", g.degree}};
        if (g.height > 0)
            gj["height"] = g.height;
        j["generators"].push_back(gj);
    }
    if (facets_) {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : *facets_) {
            nlohmann::json fj = nlohmann::json::array();
            for (auto v : f)
                fj.push_back(gens_[v].name);
            fs.push_back(fj);
        }
        j["facets"] = fs;
    }
    return j;
}

// ---------------------------------------------------------------- FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(const PrimeField& f, int cap) : f_(f), cap_(cap)
{
    if (cap < 0)
        throw ValidationError("negative degree cap");
    add_degree(0, {"1"});
}

void FiniteAlgebra::add_degree(int d, std::vector<std::string> labels)
{
    if (d < 0 || d > cap_)
        throw ValidationError("algebra degree outside [0, cap]");
    if (labels.empty())
        return;
    dims_.set_dim(d, static_cast<int>(labels.size()));
    labels_[d] = std::move(labels);
}

const std::vector<std::string>& FiniteAlgebra::labels(int d) const
{
    static const std::vector<std::string> none;
    auto it = labels_.find(d);
    return it == labels_.end() ? none : it->second;
}

void FiniteAlgebra::set_basis_product(int i, std::size_t a, int j, std::size_t b, Vec v)
{
    if (i + j > cap_)
        return;
    auto& table = products_[{i, j}];
    const std::size_t dj = static_cast<std::size_t>(dim(j));
    table.resize(static_cast<std::size_t>(dim(i)) * dj, Vec(static_cast<std::size_t>(dim(i + j)), 0));
    table.at(a * dj + b) = std::move(v);
}

Vec FiniteAlgebra::basis_product(int i, std::size_t a, int j, std::size_t b) const
{
    const std::size_t n = static_cast<std::size_t>(dim(i + j));
    if (i + j > cap_ || n == 0)
        return Vec(n, 0);
    if (i == 0) {
        Vec v(n, 0);
        v.at(b) = 1;
        return v;
    }
    if (j == 0) {
        Vec v(n, 0);
        v.at(a) = 1;
        return v;
    }
    auto it = products_.find({i, j});
    if (it == products_.end())
        return Vec(n, 0);
    return it->second.at(a * static_cast<std::size_t>(dim(j)) + b);
}

Vec FiniteAlgebra::multiply(int i, const Vec& a, int j, const Vec& b) const
{
    Vec out(static_cast<std::size_t>(dim(i + j)), 0);
    if (i + j > cap_)
        return out;
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] == 0)
            continue;
        for (std::size_t y = 0; y < b.size(); ++y) {
            if (b[y] == 0)
                continue;
            const Vec p = basis_product(i, x, j, y);
            const auto c = f_.mul(a[x], b[y]);
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] = f_.add(out[k], f_.mul(c, p[k]));
        }
    }
    return out;
}

Matrix FiniteAlgebra::left_mult(int i, const Vec& a, int j) const
{
    Matrix m(f_, static_cast<std::size_t>(dim(i + j)), static_cast<std::size_t>(dim(j)));
    for (std::size_t y = 0; y < static_cast<std::size_t>(dim(j)); ++y) {
        Vec e(static_cast<std::size_t>(dim(j)), 0);
        e[y] = 1;
        const Vec col = multiply(i, a, j, e);
        for (std::size_t r = 0; r < col.size(); ++r)
            m.at(r, y) = col[r];
    }
    return m;
}

FiniteAlgebra FiniteAlgebra::from_monomial(const MonomialAlgebra& a, int cap)
{
    PrimeField f(a.p());
    FiniteAlgebra out(f, cap);
    out.monomial_ = a;
    std::map<int, std::vector<Exponents>> basis;
    std::map<int, std::map<Exponents, std::size_t>> index;
    const auto names = a.names();
    PrimeField fp(a.p());
    for (int d = 1; d <= cap; ++d) {
        basis[d] = a.basis(d);
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < basis[d].size(); ++k) {
            index[d][basis[d][k]] = k;
            Polynomial mono(fp, a.ngens());
            mono.add_term(basis[d][k], 1);
            labels.push_back(mono.to_string(names));
        }
        out.add_degree(d, std::move(labels));
    }
    basis[0] = {Exponents(a.ngens(), 0)};
    index[0][basis[0][0]] = 0;
    for (int i = 1; i <= cap; ++i)
        for (int j = 1; i + j <= cap; ++j)
            for (std::size_t x = 0; x < basis[i].size(); ++x)
                for (std::size_t y = 0; y < basis[j].size(); ++y) {
                    Vec v(basis[i + j].size(), 0);
                    if (auto prod = a.multiply(basis[i][x], basis[j][y]))
                        v.at(index[i + j].at(prod->second)) = prod->first;
                    out.set_basis_product(i, x, j, y, std::move(v));
                }
    std::vector<Gen> gens;
    for (std::size_t g = 0; g < a.ngens(); ++g) {
        const int d = a.generators()[g].degree;
        Exponents e(a.ngens(), 0);
        e[g] = 1;
        Vec v(static_cast<std::size_t>(out.dim(d)), 0);
        if (d <= cap && a.is_basis_monomial(e))
            v.at(index[d].at(e)) = 1;
        gens.push_back({a.generators()[g].name, d, v});
    }
    out.gens_ = std::move(gens);
    out.complete_ = a.is_finite();
    if (out.complete_) {
        int bound = 0;
        for (const auto& g : a.generators())
            bound += g.degree * std::max(g.height - 1, 0);
        for (int d = cap + 1; d <= bound && out.complete_; ++d)
            out.complete_ = a.basis(d).empty();
    }
    return out;
}

std::pair<int, Vec> FiniteAlgebra::evaluate(const Polynomial& poly) const
{
    if (poly.nvars() != gens_.size())
        throw ValidationError("polynomial uses a different number of generators");
    std::optional<int> degree;
    Vec acc;
    for (const auto& [e, c] : poly.terms()) {
        int d = 0;
        Vec term = unit();
        for (std::size_t g = 0; g < e.size(); ++g)
            for (int k = 0; k < e[g]; ++k) {
                term = multiply(d, term, gens_[g].degree, gens_[g].value);
                d += gens_[g].degree;
            }
        if (degree && *degree != d)
            throw ValidationError("polynomial is not homogeneous");
        if (!degree) {
            degree = d;
            acc.assign(static_cast<std::size_t>(dim(d)), 0);
        }
        for (std::size_t k = 0; k < acc.size() && k < term.size(); ++k)
            acc[k] = f_.add(acc[k], f_.mul(c, term[k]));
    }
    if (!degree)
        throw ValidationError("cannot assign a degree to the zero polynomial");
    return {*degree, acc};
}

bool FiniteAlgebra::is_associative() const
{
    for (const auto& [i, di] : dims_.dims())
        for (const auto& [j, dj] : dims_.dims())
            for (const auto& [k, dk] : dims_.dims()) {
                if (i + j + k > cap_ || i == 0 || j == 0 || k == 0)
                    continue;
                for (std::size_t a = 0; a < static_cast<std::size_t>(di); ++a)
                    for (std::size_t b = 0; b < static_cast<std::size_t>(dj); ++b)
                        for (std::size_t c = 0; c < static_cast<std::size_t>(dk); ++c) {
                            Vec ec(static_cast<std::size_t>(dk), 0), ea(static_cast<std::size_t>(di), 0);
                            ec[c] = 1;
                            ea[a] = 1;
                            const Vec left = multiply(i + j, basis_product(i, a, j, b), k, ec);
                            const Vec right = multiply(i, ea, j + k, basis_product(j, b, k, c));
                            if (left != right)
                                return false;
                        }
            }
    return true;
}

bool FiniteAlgebra::is_graded_commutative() const
{
    for (const auto& [i, di] : dims_.dims())
        for (const auto& [j, dj] : dims_.dims()) {
            if (i + j > cap_)
                continue;
            for (std::size_t a = 0; a < static_cast<std::size_t>(di); ++a)
                for (std::size_t b = 0; b < static_cast<std::size_t>(dj); ++b) {
                    Vec ab = basis_product(i, a, j, b);
                    Vec ba = basis_product(j, b, i, a);
                    const auto s = f_.sign(static_cast<long long>(i) * j);
                    for (auto& x : ba)
                        x = f_.mul(x, s);
                    if (ab != ba)
                        return false;
                }
        }
    return true;
}

FiniteAlgebra FiniteAlgebra::subring(const std::vector<Gen>& gens) const
{
    FiniteAlgebra out(f_, cap_);
    out.complete_ = false;
    std::map<int, std::vector<Vec>> basis;  // in ambient coordinates
    basis[0] = {unit()};
    std::map<int, EchelonSpan> spans;
    for (const auto& g : gens) {
        if (g.degree <= 0)
            throw ValidationError("subring generators need positive degree");
        if (g.value.size() != static_cast<std::size_t>(dim(g.degree)))
            throw ValidationError("subring generator '" + g.name + "' has the wrong length");
    }
    for (int d = 1; d <= cap_; ++d) {
        EchelonSpan span(f_, static_cast<std::size_t>(dim(d)), true);
        std::vector<Vec> chosen;
        for (const auto& g : gens) {
            if (g.degree > d)
                continue;
            for (const auto& w : basis[d - g.degree]) {
                Vec v = multiply(g.degree, g.value, d - g.degree, w);
                if (span.insert(v))
                    chosen.push_back(std::move(v));
            }
        }
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < chosen.size(); ++k)
            labels.push_back("s" + std::to_string(d) + "_" + std::to_string(k));
        basis[d] = chosen;
        spans.emplace(d, std::move(span));
        out.add_degree(d, labels);
    }
    auto coords = [&](int d, const Vec& v) {
        Vec c;
        if (!spans.at(d).solve(v, c))
            throw CrossCheckError("subring is not closed under multiplication");
        return c;
    };
    for (int i = 1; i <= cap_; ++i)
        for (int j = 1; i + j <= cap_; ++j)
            for (std::size_t a = 0; a < basis[i].size(); ++a)
                for (std::size_t b = 0; b < basis[j].size(); ++b)
                    out.set_basis_product(i, a, j, b, coords(i + j, multiply(i, basis[i][a], j, basis[j][b])));
    std::vector<Gen> sg;
    for (const auto& g : gens)
        sg.push_back({g.name, g.degree, g.degree <= cap_ ? coords(g.degree, g.value) : Vec{}});
    out.gens_ = std::move(sg);
    return out;
}

FiniteAlgebra FiniteAlgebra::quotient(const std::vector<Vec>& ideal_gens, const std::vector<int>& degrees) const
{
    if (ideal_gens.size() != degrees.size())
        throw ValidationError("one degree per ideal generator required");
    FiniteAlgebra out(f_, cap_);
    out.complete_ = complete_;
    std::map<int, EchelonSpan> ideal;
    for (int d = 0; d <= cap_; ++d)
        ideal.emplace(d, EchelonSpan(f_, static_cast<std::size_t>(dim(d))));
    for (std::size_t g = 0; g < ideal_gens.size(); ++g) {
        const int dg = degrees[g];
        if (dg < 0 || ideal_gens[g].size() != static_cast<std::size_t>(dim(dg)))
            throw ValidationError("ideal generator has the wrong shape");
        for (int j = 0; dg + j <= cap_; ++j)
            for (std::size_t b = 0; b < static_cast<std::size_t>(dim(j)); ++b) {
                Vec eb(static_cast<std::size_t>(dim(j)), 0);
                eb[b] = 1;
                const Vec r = multiply(dg, ideal_gens[g], j, eb);
                for (int i = 0; dg + j + i <= cap_; ++i)
                    for (std::size_t a = 0; a < static_cast<std::size_t>(dim(i)); ++a) {
                        Vec ea(static_cast<std::size_t>(dim(i)), 0);
                        ea[a] = 1;
                        ideal.at(dg + j + i).insert(multiply(i, ea, dg + j, r));
                    }
            }
    }
    std::map<int, std::vector<std::size_t>> keep;  // ambient indices of quotient basis
    for (int d = 1; d <= cap_; ++d) {
        const auto& piv = ideal.at(d).pivots();
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < static_cast<std::size_t>(dim(d)); ++k)
            if (std::find(piv.begin(), piv.end(), k) == piv.end()) {
                keep[d].push_back(k);
                labels.push_back(this->labels(d).at(k));
            }
        out.add_degree(d, labels);
    }
    if (!ideal.at(0).pivots().empty())
        throw ValidationError("ideal contains the unit");
    keep[0] = {0};
    auto project = [&](int d, const Vec& v) {
        const Vec r = ideal.at(d).reduce(v);
        Vec c;
        for (auto k : keep[d])
            c.push_back(r[k]);
        return c;
    };
    auto lift = [&](int d, std::size_t a) {
        Vec v(static_cast<std::size_t>(dim(d)), 0);
        v[keep[d][a]] = 1;
        return v;
    };
    for (int i = 1; i <= cap_; ++i)
        for (int j = 1; i + j <= cap_; ++j)
            for (std::size_t a = 0; a < keep[i].size(); ++a)
                for (std::size_t b = 0; b < keep[j].size(); ++b)
                    out.set_basis_product(i, a, j, b, project(i + j, multiply(i, lift(i, a), j, lift(j, b))));
    std::vector<Gen> qg;
    for (const auto& g : gens_)
        qg.push_back({g.name, g.degree, g.degree <= cap_ ? project(g.degree, g.value) : Vec{}});
    out.gens_ = std::move(qg);
    return out;
}

FiniteAlgebra FiniteAlgebra::from_json(const nlohmann::json& j, int p, int cap)
{
    try {
        if (j.contains("p") && j.at("p").get<int>() != p)
            throw ValidationError("presentation is over p = " + std::to_string(j.at("p").get<int>()) +
                                  " but p = " + std::to_string(p) + " was requested");
        const AlgebraKind kind = algebra_kind_from_string(j.at("kind").get<std::string>());
        if (kind == AlgebraKind::degreewise_subring || kind == AlgebraKind::degreewise_quotient) {
            const FiniteAlgebra ambient = from_json(j.at("ambient"), p, cap);
            std::vector<std::string> names;
            for (const auto& g : ambient.generators())
                names.push_back(g.name);
            const PrimeField f(p);
            if (kind == AlgebraKind::degreewise_subring) {
                std::vector<Gen> gens;
                std::size_t k = 0;
                for (const auto& g : j.at("generators")) {
                    const bool named = g.is_object();
                    const std::string expr = named ? g.at("value").get<std::string>() : g.get<std::string>();
                    const std::string name = named ? g.at("name").get<std::string>() : "g" + std::to_string(++k);
                    auto [d, v] = ambient.evaluate(parse_polynomial(expr, names, f));
                    gens.push_back({name, d, v});
                }
                return ambient.subring(gens);
            }
            std::vector<Vec> rels;
            std::vector<int> degs;
            for (const auto& r : j.at("relations")) {
                auto [d, v] = ambient.evaluate(parse_polynomial(r.get<std::string>(), names, f));
                rels.push_back(v);
                degs.push_back(d);
            }
            return ambient.quotient(rels, degs);
        }
        std::vector<AlgebraGenerator> gens;
        for (const auto& g : j.at("generators")) {
            AlgebraGenerator ag{g.at("name").get<std::string>(), g.at("degree").get<int>(), 0};
            if (kind == AlgebraKind::exterior)
                ag.height = 2;
            if (kind == AlgebraKind::mixed && p != 2 && ag.degree % 2 != 0)
                ag.height = 2;
            if (g.contains("height"))
                ag.height = g.at("height").get<int>();
            else if (kind == AlgebraKind::truncated)
                throw ValidationError("truncated algebra needs a height for every generator");
            gens.push_back(ag);
        }
        std::optional<std::vector<std::vector<std::size_t>>> facets;
        if (j.contains("facets")) {
            facets.emplace();
            for (const auto& fj : j.at("facets")) {
                std::vector<std::size_t> face;
                for (const auto& v : fj) {
                    const std::string name = v.get<std::string>();
                    auto it = std::find_if(gens.begin(), gens.end(),
                                           [&](const AlgebraGenerator& g) { return g.name == name; });
                    if (it == gens.end())
                        throw ValidationError("facet refers to unknown vertex '" + name + "'");
                    face.push_back(static_cast<std::size_t>(it - gens.begin()));
                }
                facets->push_back(face);
            }
        }
        return from_monomial(MonomialAlgebra(p, kind, gens, facets), cap);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed algebra presentation: ") + e.what());
    }
}

// ---------------------------------------------------------------- AlgebraModule

AlgebraModule::AlgebraModule(std::shared_ptr<const FiniteAlgebra> a, GradedVectorSpace space)
    : a_(std::move(a)), space_(std::move(space))
{
    if (!a_)
        throw ValidationError("module without algebra");
}

AlgebraModule AlgebraModule::trivial(std::shared_ptr<const FiniteAlgebra> a, GradedVectorSpace space)
{
    return AlgebraModule(std::move(a), std::move(space));
}

bool AlgebraModule::is_trivial() const
{
    for (const auto& [key, blocks] : act_)
        for (const auto& [m, mat] : blocks)
            if (!mat.is_zero())
                return false;
    return true;
}

Matrix AlgebraModule::act(int i, std::size_t a, int m) const
{
    const PrimeField& f = a_->field();
    const std::size_t rows = static_cast<std::size_t>(space_.dim(m + i));
    const std::size_t cols = static_cast<std::size_t>(space_.dim(m));
    if (i == 0)
        return rows == cols ? Matrix::identity(f, rows) : Matrix(f, rows, cols);
    auto it = act_.find({i, a});
    if (it != act_.end()) {
        auto jt = it->second.find(m);
        if (jt != it->second.end())
            return jt->second;
    }
    return Matrix(f, rows, cols);
}

Matrix AlgebraModule::act_element(int i, const Vec& a, int m) const
{
    const PrimeField& f = a_->field();
    Matrix out(f, static_cast<std::size_t>(space_.dim(m + i)), static_cast<std::size_t>(space_.dim(m)));
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0)
            continue;
        const Matrix b = act(i, k, m);
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t c = 0; c < out.cols(); ++c)
                out.add_to(r, c, f.mul(a[k], b(r, c)));
    }
    return out;
}

AlgebraModule AlgebraModule::regular(std::shared_ptr<const FiniteAlgebra> a)
{
    AlgebraModule out(a, a->dims());
    for (const auto& [i, di] : a->dims().dims()) {
        if (i == 0)
            continue;
        for (std::size_t x = 0; x < static_cast<std::size_t>(di); ++x) {
            Vec e(static_cast<std::size_t>(di), 0);
            e[x] = 1;
            for (const auto& [m, dm] : a->dims().dims())
                if (m + i <= a->cap())
                    out.act_[{i, x}].emplace(m, a->left_mult(i, e, m));
        }
    }
    return out;
}

AlgebraModule AlgebraModule::from_generator_actions(std::shared_ptr<const FiniteAlgebra> a, GradedVectorSpace space,
                                                    const std::vector<GradedMap>& actions)
{
    const auto& gens = a->generators();
    if (actions.size() != gens.size())
        throw ValidationError("need one action per algebra generator");
    const PrimeField& f = a->field();
    AlgebraModule out(a, space);
    if (space.empty())
        return out;
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (actions[g].degree() != gens[g].degree)
            throw ValidationError("action of '" + gens[g].name + "' has the wrong degree");
    const int spread = *space.max_degree() - *space.min_degree();
    const int top = std::min(a->cap(), spread);

    struct Word {
        Vec value;
        std::map<int, Matrix> action;
    };
    std::map<int, std::vector<Word>> words;
    {
        Word unit{a->unit(), {}};
        for (const auto& [m, dm] : space.dims())
            unit.action.emplace(m, Matrix::identity(f, static_cast<std::size_t>(dm)));
        words[0].push_back(unit);
    }
    for (int d = 1; d <= top; ++d) {
        const std::size_t n = static_cast<std::size_t>(a->dim(d));
        if (n == 0)
            continue;
        EchelonSpan span(f, n, true);
        std::vector<Word> chosen;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const int dg = gens[g].degree;
            if (dg > d)
                continue;
            for (const auto& w : words[d - dg]) {
                Word nw{a->multiply(dg, gens[g].value, d - dg, w.value), {}};
                if (!span.insert(nw.value))
                    continue;
                for (const auto& [m, dm] : space.dims()) {
                    const Matrix inner = w.action.count(m) ? w.action.at(m)
                                                           : Matrix(f, static_cast<std::size_t>(space.dim(m + d - dg)),
                                                                    static_cast<std::size_t>(dm));
                    nw.action.emplace(m, actions[g].block(m + d - dg) * inner);
                }
                chosen.push_back(std::move(nw));
            }
        }
        if (span.dim() != n)
            throw ValidationError("algebra generators do not generate degree " + std::to_string(d));
        for (std::size_t x = 0; x < n; ++x) {
            Vec e(n, 0), c;
            e[x] = 1;
            span.solve(e, c);
            for (const auto& [m, dm] : space.dims()) {
                Matrix acc(f, static_cast<std::size_t>(space.dim(m + d)), static_cast<std::size_t>(dm));
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (c[k] != 0) {
                        const Matrix& w = chosen[k].action.at(m);
                        for (std::size_t r = 0; r < acc.rows(); ++r)
                            for (std::size_t cc = 0; cc < acc.cols(); ++cc)
                                acc.add_to(r, cc, f.mul(c[k], w(r, cc)));
                    }
                if (acc.rows() > 0 && acc.cols() > 0)
                    out.act_[{d, x}].emplace(m, std::move(acc));
            }
        }
        words[d] = std::move(chosen);
    }
    out.validate();
    return out;
}

AlgebraModule AlgebraModule::via_map(std::shared_ptr<const FiniteAlgebra> a, const FiniteAlgebra& b,
                                     const std::vector<Vec>& images)
{
    const auto& gens = a->generators();
    if (images.size() != gens.size())
        throw ValidationError("need one image per algebra generator");
    std::vector<GradedMap> actions;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const int d = gens[g].degree;
        if (images[g].size() != static_cast<std::size_t>(b.dim(d)))
            throw ValidationError("image of '" + gens[g].name + "' has the wrong degree");
        GradedMap m(b.field(), b.dims(), b.dims(), d);
        for (const auto& [j, dj] : b.dims().dims())
            if (j + d <= b.cap())
                m.set_block(j, b.left_mult(d, images[g], j));
        actions.push_back(std::move(m));
    }
    return from_generator_actions(std::move(a), b.dims(), actions);
}

void AlgebraModule::validate() const
{
    const FiniteAlgebra& A = *a_;
    if (space_.empty())
        return;
    const int top_m = *space_.max_degree();
    for (const auto& [i, di] : A.dims().dims())
        for (const auto& [j, dj] : A.dims().dims()) {
            if (i == 0 || j == 0 || i + j > A.cap())
                continue;
            for (const auto& [m, dm] : space_.dims()) {
                if (m + i + j > top_m)
                    continue;
                for (std::size_t x = 0; x < static_cast<std::size_t>(di); ++x)
                    for (std::size_t y = 0; y < static_cast<std::size_t>(dj); ++y) {
                        const Matrix lhs = act(i, x, m + j) * act(j, y, m);
                        const Matrix rhs = act_element(i + j, A.basis_product(i, x, j, y), m);
                        if (!(lhs == rhs))
                            throw ValidationError("module action is not associative in degree " + std::to_string(m) +
                                                  " for algebra degrees " + std::to_string(i) + ", " +
                                                  std::to_string(j));
                    }
            }
        }
}

GradedMap algebra_map_matrix(std::shared_ptr<const FiniteAlgebra> from, const FiniteAlgebra& to, const std::vector<Vec>& images)
{
    const AlgebraModule mod = AlgebraModule::via_map(from, to, images);
    const PrimeField& f = to.field();
    GradedMap out(f, from->dims(), to.dims(), 0);
    for (const auto& [d, n] : from->dims().dims()) {
        Matrix b(f, static_cast<std::size_t>(to.dim(d)), static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
            const Matrix col = mod.act(d, k, 0);
            for (std::size_t r = 0; r < col.rows(); ++r)
                b.at(r, k) = col(r, 0);
        }
        out.set_block(d, std::move(b));
    }
    return out;
}


}  // namespace fphom
