#include <algorithm>

#include "diagrams/limits.hpp"
#include "fphom/polynomial.hpp"

namespace fphom {

namespace {

bool same_map(const GradedMap& a, const GradedMap& b)
{
    for (const auto& [d, n] : a.source().dims())
        if (!(a.block(d) == b.block(d)))
            return false;
    return true;
}

Matrix matrix_from_json(const PrimeField& f, const nlohmann::json& rows, std::size_t r, std::size_t c,
                        const std::string& where)
{
    if (!rows.is_array() || rows.size() != r)
        throw ValidationError(where + ": expected " + std::to_string(r) + " rows");
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c)
            throw ValidationError(where + ": expected " + std::to_string(c) + " columns");
        for (std::size_t k = 0; k < c; ++k)
            m.at(i, k) = f.reduce(rows[i][k].get<long long>());
    }
    return m;
}

}  // namespace

Diagram::Diagram(std::shared_ptr<const DirectCategory> base, const PrimeField& f, std::vector<GradedVectorSpace> values,
                 std::vector<GradedMap> maps)
    : base_(std::move(base)), f_(f), values_(std::move(values)), maps_(std::move(maps))
{
    base_->require_valid();
    if (values_.size() != base_->objects().size())
        throw ValidationError("diagram needs one value per object");
    if (maps_.size() != base_->arrows().size())
        throw ValidationError("diagram needs one map per arrow");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
        const auto& arr = base_->arrows()[a];
        if (maps_[a].degree() != 0 || !(maps_[a].source() == values_[arr.dst]) ||
            !(maps_[a].target() == values_[arr.src]))
            throw ValidationError("map of arrow '" + arr.id + "' must be a degree-0 map F(" +
                                  base_->objects()[arr.dst].id + ") -> F(" + base_->objects()[arr.src].id + ")");
    }
}

const FiniteAlgebra* Diagram::algebra(std::size_t i) const
{
    return i < algebras_.size() ? algebras_[i].get() : nullptr;
}

void Diagram::set_algebras(std::vector<std::shared_ptr<const FiniteAlgebra>> algebras)
{
    if (algebras.size() != values_.size())
        throw ValidationError("one algebra per object required");
    for (std::size_t i = 0; i < algebras.size(); ++i)
        if (!(algebras[i]->dims() == values_[i]))
            throw ValidationError("algebra dimensions do not match the value at '" + base_->objects()[i].id + "'");
    algebras_ = std::move(algebras);
}

GradedMap Diagram::morphism_map(std::size_t morphism) const
{
    auto it = morphism_cache_.find(morphism);
    if (it != morphism_cache_.end())
        return it->second;
    const Morphism& m = base_->morphisms().at(morphism);
    GradedMap acc = maps_.at(m.path.back());
    for (std::size_t k = m.path.size() - 1; k-- > 0;)
        acc = maps_.at(m.path[k]).compose_after(acc);
    morphism_cache_.emplace(morphism, acc);
    return acc;
}

void Diagram::validate() const
{
    const DirectCategory& c = *base_;
    if (c.mode() == CompositionMode::free)
        return;
    for (std::size_t k = 0; k < c.morphisms().size(); ++k) {
        const Morphism& m = c.morphisms()[k];
        const GradedMap whole = morphism_map(k);
        for (std::size_t a = 0; a < c.arrows().size(); ++a) {
            const auto& arr = c.arrows()[a];
            if (arr.src != m.src)
                continue;
            if (arr.dst == m.dst) {
                if (!same_map(maps_[a], whole))
                    throw ValidationError("diagram is not functorial: arrow '" + arr.id + "' disagrees with a parallel path");
                continue;
            }
            const auto rest = c.hom(arr.dst, m.dst);
            if (rest.empty())
                continue;
            if (!same_map(maps_[a].compose_after(morphism_map(rest.front())), whole))
                throw ValidationError("diagram is not functorial: paths from '" + c.objects()[m.src].id + "' to '" +
                                      c.objects()[m.dst].id + "' through arrow '" + arr.id + "' disagree");
        }
    }
}

Diagram Diagram::from_json(const nlohmann::json& j, int p, int cap)
{
    auto base = std::make_shared<const DirectCategory>(DirectCategory::from_json(j));
    const PrimeField f(p);
    const auto& objects = base->objects();
    if (!j.contains("values"))
        throw ValidationError("diagram JSON needs \"values\"");
    const auto& values = j.at("values");
    std::vector<GradedVectorSpace> spaces;
    std::vector<std::shared_ptr<const FiniteAlgebra>> algebras;
    for (const auto& o : objects) {
        if (!values.contains(o.id))
            throw ValidationError("no value for object '" + o.id + "'");
        const auto& v = values.at(o.id);
        if (v.is_object() && v.contains("kind")) {
            auto a = std::make_shared<const FiniteAlgebra>(FiniteAlgebra::from_json(v, p, cap));
            spaces.push_back(a->dims());
            algebras.push_back(std::move(a));
        }
        else {
            spaces.push_back(GradedVectorSpace::from_json(v).truncate(cap));
            algebras.push_back(nullptr);
        }
    }
    const bool all_algebras = std::all_of(algebras.begin(), algebras.end(), [](const auto& a) { return a != nullptr; });
    if (!all_algebras && std::any_of(algebras.begin(), algebras.end(), [](const auto& a) { return a != nullptr; }))
        throw ValidationError("diagram values must be all graded spaces or all algebras");

    const nlohmann::json maps_json = j.contains("maps") ? j.at("maps") : nlohmann::json::object();
    std::vector<GradedMap> maps;
    for (const auto& arr : base->arrows()) {
        const GradedVectorSpace& src = spaces[arr.dst];
        const GradedVectorSpace& tgt = spaces[arr.src];
        if (!maps_json.contains(arr.id))
            throw ValidationError("no map for arrow '" + arr.id + "'");
        const auto& mj = maps_json.at(arr.id);
        if (!mj.is_object())
            throw ValidationError("map for arrow '" + arr.id + "' must be an object");
        if (all_algebras) {
            const FiniteAlgebra& to = *algebras[arr.src];
            std::vector<std::string> names;
            for (const auto& g : to.generators())
                names.push_back(g.name);
            std::vector<Vec> images;
            for (const auto& g : algebras[arr.dst]->generators()) {
                Vec img(static_cast<std::size_t>(to.dim(g.degree)), 0);
                if (mj.contains(g.name)) {
                    const Polynomial poly = parse_polynomial(mj.at(g.name).get<std::string>(), names, f);
                    if (!poly.is_zero()) {
                        auto [deg, v] = to.evaluate(poly);
                        if (deg != g.degree)
                            throw ValidationError("arrow '" + arr.id + "': image of '" + g.name + "' has degree " +
                                                  std::to_string(deg));
                        img = std::move(v);
                    }
                }
                images.push_back(std::move(img));
            }
            maps.push_back(algebra_map_matrix(algebras[arr.dst], to, images));
        }
        else {
            GradedMap m(f, src, tgt, 0);
            for (const auto& [key, rows] : mj.items()) {
                const int d = std::stoi(key);
                if (src.dim(d) == 0 && tgt.dim(d) == 0)
                    continue;
                m.set_block(d, matrix_from_json(f, rows, static_cast<std::size_t>(tgt.dim(d)),
                                                static_cast<std::size_t>(src.dim(d)),
                                                "map '" + arr.id + "' degree " + key));
            }
            maps.push_back(std::move(m));
        }
    }
    Diagram d(base, f, std::move(spaces), std::move(maps));
    if (all_algebras)
        d.set_algebras(std::move(algebras));
    d.validate();
    return d;
}

Diagram Diagram::stanley_reisner_diagram(const nlohmann::json& complex, int p, int cap, int vertex_degree)
{
    auto base = std::make_shared<const DirectCategory>(DirectCategory::face_poset(complex));
    const PrimeField f(p);
    const auto& objects = base->objects();
    // object ids are "{v1,v2,...}"
    auto vertices_of = [](const std::string& id) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : id.substr(1, id.size() - 2)) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            }
            else
                cur += ch;
        }
        if (!cur.empty())
            out.push_back(cur);
        return out;
    };
    std::vector<std::shared_ptr<const FiniteAlgebra>> algebras;
    std::vector<GradedVectorSpace> spaces;
    for (const auto& o : objects) {
        std::vector<std::pair<std::string, int>> gens;
        for (const auto& v : vertices_of(o.id))
            gens.emplace_back(v, vertex_degree);
        auto a = std::make_shared<const FiniteAlgebra>(
            FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(p, gens), cap));
        spaces.push_back(a->dims());
        algebras.push_back(std::move(a));
    }
    std::vector<GradedMap> maps;
    for (const auto& arr : base->arrows()) {
        const FiniteAlgebra& to = *algebras[arr.src];
        const auto small = vertices_of(objects[arr.src].id);
        std::vector<std::string> names(small.begin(), small.end());
        std::vector<Vec> images;
        for (const auto& g : algebras[arr.dst]->generators()) {
            auto it = std::find(small.begin(), small.end(), g.name);
            if (it != small.end())
                images.push_back(to.evaluate(Polynomial::variable(f, names.size(),
                                                                  static_cast<std::size_t>(it - small.begin())))
                                     .second);
            else
                images.emplace_back(static_cast<std::size_t>(to.dim(g.degree)), 0);
        }
        maps.push_back(algebra_map_matrix(algebras[arr.dst], to, images));
    }
    Diagram d(base, f, std::move(spaces), std::move(maps));
    d.set_algebras(std::move(algebras));
    return d;
}

// ---------------------------------------------------------------- limits

Matrix LimitSystem::constraint_matrix(int t) const
{
    const PrimeField& f = diagram->field();
    std::vector<std::size_t> off;
    std::size_t n = 0;
    for (auto obj : nodes) {
        off.push_back(n);
        n += static_cast<std::size_t>(diagram->value(obj).dim(t));
    }
    std::size_t rows = 0;
    for (const auto& e : edges)
        rows += static_cast<std::size_t>(diagram->value(nodes[e.from]).dim(t));
    Matrix m(f, rows, n);
    std::size_t r0 = 0;
    for (const auto& e : edges) {
        const std::size_t dr = static_cast<std::size_t>(diagram->value(nodes[e.from]).dim(t));
        const Matrix b = diagram->morphism_map(e.morphism).block(t);
        for (std::size_t r = 0; r < dr; ++r) {
            m.add_to(r0 + r, off[e.from] + r, f.neg(1));
            for (std::size_t c = 0; c < b.cols(); ++c)
                m.add_to(r0 + r, off[e.to] + c, b(r, c));
        }
        r0 += dr;
    }
    return m;
}

std::size_t LimitSystem::total_dim(int t) const
{
    std::size_t n = 0;
    for (auto obj : nodes)
        n += static_cast<std::size_t>(diagram->value(obj).dim(t));
    return n;
}

Matrix LimitSystem::basis(int t) const
{
    const std::size_t n = total_dim(t);
    if (n == 0)
        return Matrix(diagram->field(), 0, 0);
    const Matrix c = constraint_matrix(t);
    if (c.rows() == 0)
        return Matrix::identity(diagram->field(), n);
    return c.kernel();
}

int LimitSystem::dim(int t) const
{
    const std::size_t n = total_dim(t);
    if (n == 0)
        return 0;
    const Matrix c = constraint_matrix(t);
    return static_cast<int>(n - (c.rows() == 0 ? 0 : c.rank()));
}

LimitSystem whole_diagram(const Diagram& d)
{
    LimitSystem s{&d, {}, {}};
    for (std::size_t i = 0; i < d.base().objects().size(); ++i)
        s.nodes.push_back(i);
    const auto& arrows = d.base().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        // generating arrows suffice for a functorial diagram
        const auto hom = d.base().hom(arrows[a].src, arrows[a].dst);
        std::size_t morph = hom.front();
        for (auto k : hom)
            if (d.base().morphisms()[k].path == std::vector<std::size_t>{a})
                morph = k;
        s.edges.push_back({arrows[a].src, arrows[a].dst, morph});
    }
    return s;
}

GradedVectorSpace limit_dims(const Diagram& d, int cap)
{
    const LimitSystem sys = whole_diagram(d);
    GradedVectorSpace out;
    int lo = 0;
    for (std::size_t i = 0; i < d.base().objects().size(); ++i)
        if (auto m = d.value(i).min_degree())
            lo = std::min(lo, *m);
    for (int t = lo; t <= cap; ++t)
        if (int n = sys.dim(t); n > 0)
            out.set_dim(t, n);
    return out;
}

FiniteAlgebra limit_algebra(const Diagram& d, int cap)
{
    const std::size_t n = d.base().objects().size();
    for (std::size_t i = 0; i < n; ++i)
        if (!d.algebra(i))
            throw ValidationError("limit_algebra needs algebra values at every object");
    const PrimeField& f = d.field();
    const LimitSystem sys = whole_diagram(d);
    FiniteAlgebra out(f, cap);
    std::map<int, Matrix> bases;
    for (int t = 0; t <= cap; ++t) {
        Matrix b = sys.basis(t);
        if (b.cols() == 0)
            continue;
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < b.cols(); ++k)
            labels.push_back("l" + std::to_string(t) + "_" + std::to_string(k));
        out.add_degree(t, std::move(labels));
        bases.emplace(t, std::move(b));
    }
    auto column = [](const Matrix& m, std::size_t c) {
        Vec v(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
            v[r] = m(r, c);
        return v;
    };
    for (const auto& [i, bi] : bases)
        for (const auto& [j, bj] : bases) {
            if (i + j > cap || !bases.count(i + j))
                continue;
            const Matrix& bk = bases.at(i + j);
            EchelonSpan span(f, bk.rows(), true);
            for (std::size_t c = 0; c < bk.cols(); ++c)
                span.insert(column(bk, c));
            for (std::size_t x = 0; x < bi.cols(); ++x)
                for (std::size_t y = 0; y < bj.cols(); ++y) {
                    const Vec u = column(bi, x), v = column(bj, y);
                    Vec prod;
                    std::size_t ou = 0, ov = 0;
                    for (std::size_t obj = 0; obj < n; ++obj) {
                        const FiniteAlgebra& A = *d.algebra(obj);
                        const std::size_t du = static_cast<std::size_t>(A.dim(i));
                        const std::size_t dv = static_cast<std::size_t>(A.dim(j));
                        const Vec pu(u.begin() + static_cast<long>(ou), u.begin() + static_cast<long>(ou + du));
                        const Vec pv(v.begin() + static_cast<long>(ov), v.begin() + static_cast<long>(ov + dv));
                        const Vec w = (du > 0 && dv > 0) ? A.multiply(i, pu, j, pv)
                                                       : Vec(static_cast<std::size_t>(A.dim(i + j)), 0);
                        prod.insert(prod.end(), w.begin(), w.end());
                        ou += du;
                        ov += dv;
                    }
                    Vec coords;
                    if (!span.solve(prod, coords))
                        throw CrossCheckError("limit is not closed under multiplication");
                    out.set_basis_product(i, x, j, y, coords);
                }
        }
    return out;
}

}  // namespace fphom
