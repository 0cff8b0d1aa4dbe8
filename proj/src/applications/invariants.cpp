#include <algorithm>
#include <set>

#include "fphom/applications.hpp"
#include "fphom/diagrams.hpp"
#include "fphom/polynomial.hpp"

namespace fphom {

GroupAction::GroupAction(int p, std::vector<int> degrees, std::vector<Matrix> generators)
    : f_(p), degrees_(std::move(degrees)), gens_(std::move(generators))
{
    const std::size_t n = degrees_.size();
    if (n == 0)
        throw ValidationError("group action needs at least one basis vector");
    for (int d : degrees_)
        if (d < 1)
            throw ValidationError("basis degrees must be positive");
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        const Matrix& g = gens_[k];
        if (g.rows() != n || g.cols() != n)
            throw ValidationError("matrix " + std::to_string(k) + " is not " + std::to_string(n) + "x" +
                                  std::to_string(n));
        if (g.rank() != n)
            throw ValidationError("matrix " + std::to_string(k) + " is not invertible");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (g(i, j) != 0 && degrees_[i] != degrees_[j])
                    throw ValidationError("matrix " + std::to_string(k) + " does not preserve degrees");
    }
    for (std::size_t i = 0; i < n; ++i)
        names_.push_back("x" + std::to_string(i + 1));
}

void GroupAction::set_names(std::vector<std::string> names)
{
    if (names.size() != degrees_.size())
        throw ValidationError("one name per basis vector required");
    names_ = std::move(names);
}

GroupAction GroupAction::from_json(const nlohmann::json& j, std::optional<int> p)
{
    if (!j.is_object() || !j.contains("matrices") || !j.contains("degrees"))
        throw ValidationError("group action JSON needs \"matrices\" and \"degrees\"");
    int prime = 0;
    if (j.contains("p")) {
        prime = j.at("p").get<int>();
        if (p && *p != prime)
            throw ValidationError("prime in the input (" + std::to_string(prime) + ") differs from -p " +
                                  std::to_string(*p));
    }
    else if (p)
        prime = *p;
    else
        throw ValidationError("no prime given");
    const PrimeField f(prime);
    const auto degrees = j.at("degrees").get<std::vector<int>>();
    std::vector<Matrix> gens;
    for (const auto& m : j.at("matrices")) {
        if (!m.is_array() || m.size() != degrees.size())
            throw ValidationError("matrix row count does not match the number of degrees");
        Matrix g(f, degrees.size(), degrees.size());
        for (std::size_t r = 0; r < degrees.size(); ++r) {
            if (!m[r].is_array() || m[r].size() != degrees.size())
                throw ValidationError("matrix column count does not match the number of degrees");
            for (std::size_t c = 0; c < degrees.size(); ++c)
                g.at(r, c) = f.reduce(m[r][c].get<long long>());
        }
        gens.push_back(std::move(g));
    }
    GroupAction a(prime, degrees, std::move(gens));
    if (j.contains("names"))
        a.set_names(j.at("names").get<std::vector<std::string>>());
    return a;
}

std::size_t GroupAction::order() const
{
    const std::size_t n = degrees_.size();
    auto key = [&](const Matrix& m) {
        std::vector<PrimeField::Elem> k;
        for (std::size_t r = 0; r < n; ++r)
            for (auto e : m.row(r))
                k.push_back(e);
        return k;
    };
    std::set<std::vector<PrimeField::Elem>> seen;
    std::vector<Matrix> queue{Matrix::identity(f_, n)};
    seen.insert(key(queue[0]));
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gens_) {
            Matrix h = g * queue[q];
            if (seen.insert(key(h)).second) {
                if (seen.size() > kMaxOrder)
                    throw ValidationError("group order exceeds " + std::to_string(kMaxOrder));
                queue.push_back(std::move(h));
            }
        }
    return seen.size();
}

nlohmann::json InvariantResult::to_json() const
{
    nlohmann::json j;
    j["dims"] = dims.to_json();
    nlohmann::json b = nlohmann::json::object();
    for (const auto& [d, m] : basis) {
        nlohmann::json elems = nlohmann::json::array();
        const auto& labels = ambient->labels(d);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::string s;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (m(r, c) == 0)
                    continue;
                if (!s.empty())
                    s += " + ";
                if (m(r, c) != 1)
                    s += std::to_string(m(r, c)) + "*";
                s += labels[r];
            }
            elems.push_back(s);
        }
        b[std::to_string(d)] = elems;
    }
    j["basis"] = b;
    return j;
}

InvariantResult invariant_dims(const GroupAction& action, int cap)
{
    const PrimeField& f = action.field();
    std::vector<std::pair<std::string, int>> gens;
    for (std::size_t i = 0; i < action.degrees().size(); ++i)
        gens.emplace_back(action.names()[i], action.degrees()[i]);
    action.order();  // enforces the order bound
    auto ambient =
        std::make_shared<const FiniteAlgebra>(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(f.p(), gens), cap));
    const std::size_t n = gens.size();
    std::vector<GradedMap> maps;
    for (const auto& g : action.generators()) {
        std::vector<Vec> images;
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial img(f, n);
            for (std::size_t i = 0; i < n; ++i)
                if (g(i, j) != 0)
                    img = img + Polynomial::variable(f, n, i).scaled(g(i, j));
            images.push_back(ambient->evaluate(img).second);
        }
        maps.push_back(algebra_map_matrix(ambient, *ambient, images));
    }
    InvariantResult res;
    res.ambient = ambient;
    for (const auto& [d, dim] : ambient->dims().dims()) {
        const std::size_t m = static_cast<std::size_t>(dim);
        Matrix stacked(f, 0, m);
        for (const auto& g : maps)
            stacked = stacked.vstack(g.block(d) - Matrix::identity(f, m));
        Matrix basis = stacked.rows() == 0 ? Matrix::identity(f, m) : stacked.kernel();
        if (basis.cols() > 0) {
            res.dims.set_dim(d, static_cast<int>(basis.cols()));
            res.basis.emplace(d, std::move(basis));
        }
    }
    return res;
}

std::string PolynomialCheck::to_string() const
{
    if (status == Status::polynomial_up_to_cap)
        return "consistent with a polynomial ring up to the cap (generators " + generators.to_string() + ")";
    return "not polynomial: degree " + std::to_string(witness_degree) + " has " + std::to_string(witness_dim) +
           " invariants but the free algebra on the minimal generators has " + std::to_string(free_dim);
}

PolynomialCheck polynomial_semidecision(const InvariantResult& inv, int cap)
{
    const FiniteAlgebra& A = *inv.ambient;
    const PrimeField& f = A.field();
    auto column = [](const Matrix& m, std::size_t c) {
        Vec v(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
            v[r] = m(r, c);
        return v;
    };
    PolynomialCheck out;
    for (int d = 1; d <= cap; ++d) {
        auto it = inv.basis.find(d);
        if (it == inv.basis.end())
            continue;
        EchelonSpan span(f, static_cast<std::size_t>(A.dim(d)));
        for (int i = 1; i <= d / 2; ++i) {
            auto bi = inv.basis.find(i), bj = inv.basis.find(d - i);
            if (bi == inv.basis.end() || bj == inv.basis.end())
                continue;
            for (std::size_t x = 0; x < bi->second.cols(); ++x)
                for (std::size_t y = 0; y < bj->second.cols(); ++y)
                    span.insert(A.multiply(i, column(bi->second, x), d - i, column(bj->second, y)));
        }
        const int fresh = static_cast<int>(it->second.cols()) - static_cast<int>(span.dim());
        if (fresh > 0)
            out.generators.set_dim(d, fresh);
    }
    const HilbertSeries free = free_commutative_series(out.generators, f.p(), cap);
    for (int d = 0; d <= cap; ++d) {
        const long long have = inv.dims.dim(d);
        if (have != free[d]) {
            out.status = PolynomialCheck::Status::not_polynomial;
            out.witness_degree = d;
            out.witness_dim = have;
            out.free_dim = free[d];
            break;
        }
    }
    return out;
}

nlohmann::json FormalityChecklist::to_json() const
{
    nlohmann::json j;
    j["group_order"] = group_order;
    j["p_divides_order"] = p_divides_order;
    j["invariants"] = invariants.to_json();
    j["polynomial"] = {{"status", polynomial.status == PolynomialCheck::Status::polynomial_up_to_cap
                                      ? "polynomial_up_to_cap"
                                      : "not_polynomial"},
                       {"generators", polynomial.generators.to_json()},
                       {"summary", polynomial.to_string()}};
    if (polynomial.status == PolynomialCheck::Status::not_polynomial)
        j["polynomial"]["witness"] = {{"degree", polynomial.witness_degree},
                                      {"invariants", polynomial.witness_dim},
                                      {"free", polynomial.free_dim}};
    j["criteria_satisfied"] = criteria_satisfied;
    return j;
}

FormalityChecklist lie_formality_checklist(const GroupAction& action, int cap)
{
    FormalityChecklist c;
    c.group_order = action.order();
    c.p_divides_order = c.group_order % static_cast<std::size_t>(action.p()) == 0;
    c.invariants = invariant_dims(action, cap);
    c.polynomial = polynomial_semidecision(c.invariants, cap);
    c.criteria_satisfied = !c.p_divides_order;
    return c;
}

// ---------------------------------------------------------------- Stanley-Reisner

nlohmann::json StanleyReisnerResult::to_json() const
{
    return {{"dims", monomial_count.to_json()},
            {"monomial_count", monomial_count.to_json()},
            {"categorical_limit", categorical_limit.to_json()}};
}

StanleyReisnerResult stanley_reisner_dims(const nlohmann::json& complex, int p, int vertex_degree, int cap)
{
    if (!complex.is_object() || !complex.contains("vertices") || !complex.contains("facets"))
        throw ValidationError("simplicial complex needs \"vertices\" and \"facets\"");
    std::vector<std::string> vertices;
    for (const auto& v : complex.at("vertices"))
        vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    if (vertices.size() > 12)
        throw ValidationError("at most 12 vertices are supported");
    if (vertex_degree < 1)
        throw ValidationError("vertex degree must be positive");
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& v : vertices)
        gens.emplace_back(v, vertex_degree);
    std::vector<std::vector<std::size_t>> facets;
    for (const auto& facet : complex.at("facets")) {
        std::vector<std::size_t> idx;
        for (const auto& v : facet) {
            const std::string name = v.is_string() ? v.get<std::string>() : v.dump();
            auto it = std::find(vertices.begin(), vertices.end(), name);
            if (it == vertices.end())
                throw ValidationError("facet uses unknown vertex '" + name + "'");
            idx.push_back(static_cast<std::size_t>(it - vertices.begin()));
        }
        facets.push_back(std::move(idx));
    }
    StanleyReisnerResult r;
    r.monomial_count = MonomialAlgebra::stanley_reisner(p, gens, facets).dims(cap);
    r.categorical_limit = limit_dims(Diagram::stanley_reisner_diagram(complex, p, cap, vertex_degree), cap);
    if (!(r.monomial_count == r.categorical_limit))
        throw CrossCheckError("face ring by monomials " + r.monomial_count.to_string() + " differs from the limit " +
                              r.categorical_limit.to_string());
    return r;
}

}  // namespace fphom
