#include <algorithm>
#include <functional>

#include "diagrams/limits.hpp"

namespace fphom {

namespace {

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    const PrimeField& f = a.field();
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const auto x = a(ra, ca);
            if (x == 0)
                continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    if (b(rb, cb) != 0)
                        out.at(ra * b.rows() + rb, ca * b.cols() + cb) = f.mul(x, b(rb, cb));
        }
    return out;
}

std::size_t rank_of(const Matrix& m)
{
    return (m.rows() == 0 || m.cols() == 0) ? 0 : m.rank();
}

/// Covariant system i -> S(i) on the base, paired with M(i_0) at the bottom of each chain.
struct TopSystem {
    std::vector<GradedVectorSpace> spaces;
    std::function<GradedMap(std::size_t)> map;  // S(src) -> S(dst) for a morphism
};

/// Cohomology of prod over nondegenerate chains i_0 -> ... -> i_s of S(i_s) (x) M(i_0).
BigradedTable cosimplicial_table(const Diagram& m, const TopSystem& top, int s_max, int t_lo, int t_hi)
{
    const DirectCategory& cat = m.base();
    const PrimeField& f = m.field();
    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<std::vector<DirectCategory::Chain>> chains;
    std::vector<std::map<Key, std::size_t>> index;
    for (int s = 0; s <= s_max + 1; ++s) {
        chains.push_back(cat.chains(s));
        std::map<Key, std::size_t> idx;
        for (std::size_t c = 0; c < chains.back().size(); ++c)
            idx.emplace(Key{chains.back()[c].objects.front(), chains.back()[c].arrows}, c);
        index.push_back(std::move(idx));
    }
    std::map<std::size_t, GradedMap> top_maps;
    auto top_map = [&](std::size_t morph) -> const GradedMap& {
        auto it = top_maps.find(morph);
        if (it == top_maps.end())
            it = top_maps.emplace(morph, top.map(morph)).first;
        return it->second;
    };

    // offsets[c][a] for S-degree a
    struct Layout {
        std::vector<std::map<int, std::size_t>> offsets;
        std::size_t size = 0;
    };
    auto layout = [&](int s, int t) {
        Layout l;
        for (const auto& c : chains[static_cast<std::size_t>(s)]) {
            std::map<int, std::size_t> off;
            const GradedVectorSpace& S = top.spaces[c.objects.back()];
            const GradedVectorSpace& M = m.value(c.objects.front());
            for (const auto& [a, da] : S.dims()) {
                const int db = M.dim(t - a);
                if (db == 0)
                    continue;
                off[a] = l.size;
                l.size += static_cast<std::size_t>(da * db);
            }
            l.offsets.push_back(std::move(off));
        }
        return l;
    };
    auto place = [](Matrix& d, std::size_t r0, std::size_t c0, const Matrix& b, PrimeField::Elem sign) {
        const PrimeField& fld = d.field();
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b(r, c) != 0)
                    d.add_to(r0 + r, c0 + c, fld.mul(sign, b(r, c)));
    };
    // d^s_t : C^s -> C^{s+1}
    auto differential = [&](int s, int t, const Layout& src, const Layout& tgt) {
        Matrix d(f, tgt.size, src.size);
        const auto& tchains = chains[static_cast<std::size_t>(s) + 1];
        for (std::size_t ci = 0; ci < tchains.size(); ++ci) {
            const auto& c = tchains[ci];
            const std::size_t len = c.objects.size();  // s + 2
            const std::size_t last = c.objects.back();
            const std::size_t first = c.objects.front();
            for (std::size_t k = 0; k < len; ++k) {
                const auto sign = f.sign(static_cast<long long>(k));
                Key key;
                if (k == 0)
                    key = {c.objects[1], std::vector<std::size_t>(c.arrows.begin() + 1, c.arrows.end())};
                else if (k == len - 1)
                    key = {first, std::vector<std::size_t>(c.arrows.begin(), c.arrows.end() - 1)};
                else {
                    std::vector<std::size_t> arr(c.arrows.begin(), c.arrows.begin() + static_cast<long>(k) - 1);
                    arr.push_back(cat.compose(c.arrows[k - 1], c.arrows[k]));
                    arr.insert(arr.end(), c.arrows.begin() + static_cast<long>(k) + 1, c.arrows.end());
                    key = {first, std::move(arr)};
                }
                const std::size_t sc = index[static_cast<std::size_t>(s)].at(key);
                const auto& src_off = src.offsets[sc];
                for (const auto& [a, row0] : tgt.offsets[ci]) {
                    auto it = src_off.find(a);
                    if (it == src_off.end())
                        continue;
                    const int b = t - a;
                    if (k == 0) {
                        const std::size_t da = static_cast<std::size_t>(top.spaces[last].dim(a));
                        const Matrix mb = m.morphism_map(c.arrows[0]).block(b);
                        place(d, row0, it->second, kron(Matrix::identity(f, da), mb), sign);
                    }
                    else if (k == len - 1) {
                        const std::size_t db = static_cast<std::size_t>(m.value(first).dim(b));
                        const Matrix sa = top_map(c.arrows.back()).block(a);
                        place(d, row0, it->second, kron(sa, Matrix::identity(f, db)), sign);
                    }
                    else {
                        const std::size_t n = static_cast<std::size_t>(top.spaces[last].dim(a) *
                                                                       m.value(first).dim(b));
                        place(d, row0, it->second, Matrix::identity(f, n), sign);
                    }
                }
            }
        }
        return d;
    };

    BigradedTable out;
    for (int t = t_lo; t <= t_hi; ++t) {
        std::vector<Layout> lay;
        for (int s = 0; s <= s_max + 1; ++s)
            lay.push_back(layout(s, t));
        std::vector<std::size_t> ranks(static_cast<std::size_t>(s_max) + 1, 0);
        for (int s = 0; s <= s_max; ++s)
            ranks[static_cast<std::size_t>(s)] =
                rank_of(differential(s, t, lay[static_cast<std::size_t>(s)], lay[static_cast<std::size_t>(s) + 1]));
        for (int s = 0; s <= s_max; ++s) {
            const long long h = static_cast<long long>(lay[static_cast<std::size_t>(s)].size) -
                                static_cast<long long>(ranks[static_cast<std::size_t>(s)]) -
                                (s > 0 ? static_cast<long long>(ranks[static_cast<std::size_t>(s) - 1]) : 0);
            if (h > 0)
                out.set(s, t, static_cast<int>(h));
        }
    }
    return out;
}

int longest_chain(const DirectCategory& cat)
{
    int s = 0;
    while (!cat.chains(s + 1).empty())
        ++s;
    return s;
}

TopSystem constant_top(const Diagram& d)
{
    TopSystem top;
    const PrimeField& f = d.field();
    top.spaces.assign(d.base().objects().size(), GradedVectorSpace{{0, 1}});
    top.map = [f](std::size_t) {
        GradedMap g(f, GradedVectorSpace{{0, 1}}, GradedVectorSpace{{0, 1}}, 0);
        g.set_block(0, Matrix::identity(f, 1));
        return g;
    };
    return top;
}

std::pair<int, int> degree_range(const Diagram& d)
{
    int lo = 0, hi = 0;
    bool any = false;
    for (std::size_t i = 0; i < d.base().objects().size(); ++i) {
        const auto& v = d.value(i);
        if (v.empty())
            continue;
        lo = any ? std::min(lo, *v.min_degree()) : *v.min_degree();
        hi = any ? std::max(hi, *v.max_degree()) : *v.max_degree();
        any = true;
    }
    if (!any)
        return {0, -1};
    return {lo, hi};
}

// ---------------------------------------------------------------- symmetric powers

/// Basis of Sym^n of a graded space W: nondecreasing sequences of global basis indices.
struct SymBasis {
    std::vector<int> elem_degree;                          // global index -> degree
    std::vector<std::size_t> elem_local;                   // global index -> index within its degree
    std::map<int, std::vector<std::vector<std::size_t>>> monomials;  // by total degree
    std::map<std::vector<std::size_t>, std::size_t> position;       // monomial -> index within degree

    GradedVectorSpace dims() const
    {
        GradedVectorSpace g;
        for (const auto& [d, list] : monomials)
            g.set_dim(d, static_cast<int>(list.size()));
        return g;
    }
};

SymBasis sym_basis(const GradedVectorSpace& w, int n)
{
    SymBasis b;
    for (const auto& [d, k] : w.dims())
        for (int i = 0; i < k; ++i) {
            b.elem_degree.push_back(d);
            b.elem_local.push_back(static_cast<std::size_t>(i));
        }
    std::vector<std::size_t> cur;
    const auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(cur.size()) == n) {
            int deg = 0;
            for (auto e : cur)
                deg += b.elem_degree[e];
            auto& list = b.monomials[deg];
            b.position.emplace(cur, list.size());
            list.push_back(cur);
            return;
        }
        for (std::size_t e = from; e < b.elem_degree.size(); ++e) {
            cur.push_back(e);
            self(self, e);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return b;
}

/// Sym^n(phi) for a degree-0 map phi: W -> W'.
GradedMap sym_map(const PrimeField& f, const GradedMap& phi, const SymBasis& src, const SymBasis& tgt)
{
    GradedMap out(f, src.dims(), tgt.dims(), 0);
    // global index offsets of each degree in the target
    std::map<int, std::size_t> tgt_start;
    for (std::size_t e = 0; e < tgt.elem_degree.size(); ++e)
        if (!tgt_start.count(tgt.elem_degree[e]))
            tgt_start[tgt.elem_degree[e]] = e;
    for (const auto& [deg, list] : src.monomials) {
        auto tl = tgt.monomials.find(deg);
        if (tl == tgt.monomials.end())
            continue;
        Matrix block(f, tl->second.size(), list.size());
        for (std::size_t c = 0; c < list.size(); ++c) {
            std::map<std::vector<std::size_t>, PrimeField::Elem> poly{{{}, 1}};
            for (auto e : list[c]) {
                const int d = src.elem_degree[e];
                const Matrix b = phi.block(d);
                std::map<std::vector<std::size_t>, PrimeField::Elem> next;
                for (const auto& [mono, coeff] : poly)
                    for (std::size_t r = 0; r < b.rows(); ++r) {
                        const auto x = b(r, src.elem_local[e]);
                        if (x == 0)
                            continue;
                        auto nm = mono;
                        nm.insert(std::upper_bound(nm.begin(), nm.end(), tgt_start.at(d) + r), tgt_start.at(d) + r);
                        auto& slot = next[nm];
                        slot = f.add(slot, f.mul(coeff, x));
                    }
                poly = std::move(next);
            }
            for (const auto& [mono, coeff] : poly)
                if (coeff != 0)
                    block.at(tgt.position.at(mono), c) = coeff;
        }
        out.set_block(deg, std::move(block));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- reports

nlohmann::json InjectivityReport::to_json() const
{
    nlohmann::json j;
    j["injective"] = injective;
    j["failures"] = nlohmann::json::array();
    for (const auto& fl : failures)
        j["failures"].push_back({{"object", fl.object},
                                 {"degree", fl.degree},
                                 {"image_rank", fl.value_rank},
                                 {"matching_dim", fl.matching_dim}});
    return j;
}

nlohmann::json DiagramAQResult::to_json() const
{
    nlohmann::json j;
    j["slices"] = nlohmann::json::object();
    for (const auto& [q, t] : by_q)
        j["slices"][std::to_string(q)] = t.to_json();
    j["coefficients_injective"] = coefficients_injective;
    j["concentrated"] = concentrated;
    j["notes"] = notes;
    return j;
}

InjectivityReport injective_by_criterion(const Diagram& d, int cap)
{
    const DirectCategory& cat = d.base();
    const auto& ms = cat.morphisms();
    const PrimeField& f = d.field();
    InjectivityReport rep;
    const auto [lo, hi] = degree_range(d);
    for (std::size_t i = 0; i < cat.objects().size(); ++i) {
        // matching diagram: non-identity arrows j -> i and the slice morphisms between them
        LimitSystem sys{&d, {}, {}};
        std::vector<std::size_t> into;
        for (std::size_t k = 0; k < ms.size(); ++k)
            if (ms[k].dst == i) {
                into.push_back(k);
                sys.nodes.push_back(ms[k].src);
            }
        if (into.empty())
            continue;
        for (std::size_t a = 0; a < into.size(); ++a)
            for (std::size_t b = 0; b < into.size(); ++b)
                for (auto g : cat.hom(ms[into[a]].src, ms[into[b]].src))
                    if (cat.compose(g, into[b]) == into[a])
                        sys.edges.push_back({a, b, g});
        for (int t = lo; t <= std::min(hi, cap); ++t) {
            const int lim = sys.dim(t);
            if (lim == 0)
                continue;
            const std::size_t src = static_cast<std::size_t>(d.value(i).dim(t));
            Matrix map(f, sys.total_dim(t), src);
            std::size_t r0 = 0;
            for (auto k : into) {
                const Matrix b = d.morphism_map(k).block(t);
                for (std::size_t r = 0; r < b.rows(); ++r)
                    for (std::size_t c = 0; c < b.cols(); ++c)
                        map.at(r0 + r, c) = b(r, c);
                r0 += b.rows();
            }
            const int rank = static_cast<int>(rank_of(map));
            if (rank < lim) {
                rep.injective = false;
                rep.failures.push_back({cat.objects()[i].id, t, rank, lim});
            }
        }
    }
    return rep;
}

BigradedTable derived_lim_dims(const Diagram& d, int cap)
{
    const auto [lo, hi] = degree_range(d);
    return cosimplicial_table(d, constant_top(d), longest_chain(d.base()), lo, std::min(hi, cap));
}

DiagramAQResult diagram_aq_table(const Diagram& v, const Diagram& m, int s_max, int q_max)
{
    if (s_max < 0 || q_max < 0)
        throw ValidationError("s_max and q_max must be nonnegative");
    if (v.base().to_json() != m.base().to_json())
        throw ValidationError("V and M diagrams must share the same base category");
    if (v.field().p() != m.field().p())
        throw ValidationError("V and M diagrams must be over the same prime");
    const DirectCategory& cat = v.base();
    const PrimeField& f = v.field();
    DiagramAQResult res;

    // W(i) = dual of the desuspension of V(i): degree d of V gives a generator of degree d - 1,
    // dual class in degree 1 - d.
    std::vector<GradedVectorSpace> w;
    for (std::size_t i = 0; i < cat.objects().size(); ++i) {
        GradedVectorSpace wi;
        for (const auto& [d, n] : v.value(i).dims()) {
            if (d - 1 < 1)
                throw ValidationError("V at '" + cat.objects()[i].id + "' has a class in degree " + std::to_string(d) +
                                      "; generators of the exterior algebra need degree >= 1 after desuspension");
            if ((d - 1) % 2 == 0)
                res.notes.push_back("V at '" + cat.objects()[i].id + "' has classes of even degree " +
                                    std::to_string(d - 1) + " after desuspension");
            wi.set_dim(1 - d, n);
        }
        w.push_back(std::move(wi));
        for (const auto& [d, n] : m.value(i).dims())
            if (d % 2 == 0)
                res.notes.push_back("M at '" + cat.objects()[i].id + "' has classes in even degree " +
                                    std::to_string(d));
    }
    auto w_map = [&](std::size_t morph) {
        // V(dst) -> V(src) transposes to W(src) -> W(dst)
        const Morphism& mo = cat.morphisms().at(morph);
        const GradedMap vm = v.morphism_map(morph);
        GradedMap out(f, w[mo.src], w[mo.dst], 0);
        for (const auto& [d, n] : v.value(mo.src).dims())
            out.set_block(1 - d, vm.block(d).transpose());
        return out;
    };

    const auto [mlo, mhi] = degree_range(m);
    res.coefficients_injective = mhi >= mlo ? injective_by_criterion(m, mhi).injective : true;

    for (int q = 0; q <= q_max; ++q) {
        const int n = q == 0 ? 1 : q + 1;
        std::vector<SymBasis> bases;
        TopSystem top;
        for (const auto& wi : w) {
            bases.push_back(sym_basis(wi, n));
            top.spaces.push_back(bases.back().dims());
        }
        top.map = [&](std::size_t morph) {
            const Morphism& mo = cat.morphisms().at(morph);
            return sym_map(f, w_map(morph), bases[mo.src], bases[mo.dst]);
        };
        int slo = 0, shi = -1;
        bool any = false;
        for (const auto& sp : top.spaces)
            if (!sp.empty()) {
                slo = any ? std::min(slo, *sp.min_degree()) : *sp.min_degree();
                shi = any ? std::max(shi, *sp.max_degree()) : *sp.max_degree();
                any = true;
            }
        BigradedTable t;
        if (any && mhi >= mlo)
            t = cosimplicial_table(m, top, s_max, slo + mlo, shi + mhi);
        for (const auto& [st, dim] : t.entries())
            if (st.first > 0 && dim > 0)
                res.concentrated = false;
        res.by_q.emplace(q, std::move(t));
    }
    if (res.coefficients_injective && !res.concentrated)
        throw CrossCheckError("coefficients pass the injectivity criterion but the AQ slices have s > 0 support");
    return res;
}

}  // namespace fphom
