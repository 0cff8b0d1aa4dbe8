#include <algorithm>
#include <climits>
#include <map>

#include "fphom/homalg.hpp"

namespace fphom {

namespace {

void add_scaled_block(Matrix& m, std::size_t r0, std::size_t c0, const Matrix& b, PrimeField::Elem c)
{
    const PrimeField& f = m.field();
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t k = 0; k < b.cols(); ++k)
            if (b(r, k) != 0)
                m.add_to(r0 + r, c0 + k, f.mul(c, b(r, k)));
}

int vec_degree_count(const Vec& v)
{
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
}

std::size_t rank_of(const Matrix& m)
{
    return (m.rows() == 0 || m.cols() == 0) ? 0 : m.rank();
}

/// Convolve a table with a graded space in the t direction.
BigradedTable tensor_t(const BigradedTable& t, const GradedVectorSpace& v)
{
    BigradedTable out;
    for (const auto& [st, d] : t.entries())
        for (const auto& [deg, dv] : v.dims())
            if (d * dv > 0)
                out.add(st.first, st.second + deg, d * dv);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Ext

BigradedTable ext_dims(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, int s_max)
{
    if (s_max < 0)
        throw ValidationError("s_max must be nonnegative");
    const GradedVectorSpace& M = m.space();
    BigradedTable out;
    if (M.empty())
        return out;
    const FreeResolution P = koszul_resolution(a, s_max + 2);
    const PrimeField& f = a->field();

    auto cdim = [&](int s, int t) {
        int d = 0;
        for (int w : P.degrees[static_cast<std::size_t>(s)])
            d += M.dim(w + t);
        return d;
    };
    // delta^s: C^s_t -> C^{s+1}_t
    auto delta = [&](int s, int t) {
        Matrix d(f, static_cast<std::size_t>(cdim(s + 1, t)), static_cast<std::size_t>(cdim(s, t)));
        std::vector<std::size_t> src_off, tgt_off;
        std::size_t o = 0;
        for (int w : P.degrees[static_cast<std::size_t>(s)]) {
            src_off.push_back(o);
            o += static_cast<std::size_t>(M.dim(w + t));
        }
        o = 0;
        for (int w : P.degrees[static_cast<std::size_t>(s + 1)]) {
            tgt_off.push_back(o);
            o += static_cast<std::size_t>(M.dim(w + t));
        }
        for (const auto& e : P.differential[static_cast<std::size_t>(s + 1)]) {
            const int dw = P.degrees[static_cast<std::size_t>(s + 1)][e.source];
            const int dw2 = P.degrees[static_cast<std::size_t>(s)][e.target];
            const int da = dw - dw2;
            const Matrix act = m.act_element(da, e.coefficient, dw2 + t);
            add_scaled_block(d, tgt_off[e.source], src_off[e.target], act, f.sign(static_cast<long long>(da) * t));
        }
        return d;
    };

    for (int s = 0; s <= s_max; ++s) {
        const auto& degs = P.degrees[static_cast<std::size_t>(s)];
        if (degs.empty())
            continue;
        const int lo = *M.min_degree() - *std::max_element(degs.begin(), degs.end());
        const int hi = *M.max_degree() - *std::min_element(degs.begin(), degs.end());
        for (int t = lo; t <= hi; ++t) {
            const int c = cdim(s, t);
            if (c == 0)
                continue;
            const int h = c - static_cast<int>(rank_of(delta(s, t))) -
                          (s > 0 ? static_cast<int>(rank_of(delta(s - 1, t))) : 0);
            if (h > 0)
                out.set(s, t, h);
        }
    }
    return out;
}

// ---------------------------------------------------------------- Tor

namespace {

BigradedTable tor_with_trivial(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, int s_max)
{
    const GradedVectorSpace& M = m.space();
    BigradedTable out;
    if (M.empty())
        return out;
    const FreeResolution P = koszul_resolution(a, s_max + 2);
    const PrimeField& f = a->field();
    const int cap = a->cap();

    auto cdim = [&](int s, int t) {
        int d = 0;
        for (int w : P.degrees[static_cast<std::size_t>(s)])
            d += M.dim(t - w);
        return d;
    };
    // d_s: C_s[t] -> C_{s-1}[t]
    auto diff = [&](int s, int t) {
        Matrix d(f, static_cast<std::size_t>(cdim(s - 1, t)), static_cast<std::size_t>(cdim(s, t)));
        std::vector<std::size_t> src_off, tgt_off;
        std::size_t o = 0;
        for (int w : P.degrees[static_cast<std::size_t>(s)]) {
            src_off.push_back(o);
            o += static_cast<std::size_t>(M.dim(t - w));
        }
        o = 0;
        for (int w : P.degrees[static_cast<std::size_t>(s - 1)]) {
            tgt_off.push_back(o);
            o += static_cast<std::size_t>(M.dim(t - w));
        }
        for (const auto& e : P.differential[static_cast<std::size_t>(s)]) {
            const int dw = P.degrees[static_cast<std::size_t>(s)][e.source];
            const int da = dw - P.degrees[static_cast<std::size_t>(s - 1)][e.target];
            const int md = t - dw;
            const Matrix act = m.act_element(da, e.coefficient, md);
            add_scaled_block(d, tgt_off[e.target], src_off[e.source], act, f.sign(static_cast<long long>(da) * md));
        }
        return d;
    };
    for (int s = 0; s <= s_max; ++s)
        for (int t = *M.min_degree(); t <= cap; ++t) {
            const int c = cdim(s, t);
            if (c == 0)
                continue;
            const int h = c - (s > 0 ? static_cast<int>(rank_of(diff(s, t))) : 0) -
                          static_cast<int>(rank_of(diff(s + 1, t)));
            if (h > 0)
                out.set(s, t, h);
        }
    return out;
}

bool is_polynomial_algebra(const FiniteAlgebra& a)
{
    if (!a.monomial() || a.monomial()->facets())
        return false;
    for (const auto& g : a.monomial()->generators())
        if (g.height != 0)
            return false;
    return true;
}

/// Koszul complex of the operators x (x) 1 - 1 (x) x on M (x) N.
BigradedTable tor_two_sided(const FiniteAlgebra& a, const AlgebraModule& m, const AlgebraModule& n, int s_max)
{
    const PrimeField& f = a.field();
    const auto& gens = a.generators();
    const std::size_t r = gens.size();
    const int cap = a.cap();
    const GradedVectorSpace& M = m.space();
    const GradedVectorSpace& N = n.space();
    BigradedTable out;
    if (M.empty() || N.empty())
        return out;

    // Subsets of generators by size.
    std::vector<std::vector<std::vector<std::size_t>>> subsets(r + 2);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i))
                s.push_back(i);
        subsets[s.size()].push_back(s);
    }
    auto udeg = [&](const std::vector<std::size_t>& I) {
        int d = 0;
        for (auto i : I)
            d += gens[i].degree;
        return d;
    };
    struct Block {
        std::size_t subset;
        int i;  // M degree
        std::size_t offset;
        std::size_t size;
    };
    auto blocks = [&](int s, int t) {
        std::vector<Block> out_blocks;
        std::size_t o = 0;
        if (s < 0 || static_cast<std::size_t>(s) > r)
            return std::make_pair(out_blocks, o);
        for (std::size_t k = 0; k < subsets[static_cast<std::size_t>(s)].size(); ++k) {
            const int rest = t - udeg(subsets[static_cast<std::size_t>(s)][k]);
            for (const auto& [i, di] : M.dims()) {
                const int dn = N.dim(rest - i);
                if (di * dn == 0)
                    continue;
                out_blocks.push_back({k, i, o, static_cast<std::size_t>(di * dn)});
                o += static_cast<std::size_t>(di * dn);
            }
        }
        return std::make_pair(out_blocks, o);
    };
    auto diff = [&](int s, int t) {
        auto [src, ns] = blocks(s, t);
        auto [tgt, nt] = blocks(s - 1, t);
        Matrix d(f, nt, ns);
        for (const auto& b : src) {
            const auto& I = subsets[static_cast<std::size_t>(s)][b.subset];
            const int j = t - udeg(I) - b.i;  // N degree
            for (std::size_t pos = 0; pos < I.size(); ++pos) {
                auto J = I;
                J.erase(J.begin() + static_cast<long>(pos));
                const auto& lvl = subsets[static_cast<std::size_t>(s - 1)];
                const std::size_t jk = static_cast<std::size_t>(std::find(lvl.begin(), lvl.end(), J) - lvl.begin());
                const std::size_t g = I[pos];
                const int dg = gens[g].degree;
                const auto sign = f.sign(static_cast<long long>(pos));
                // x m (x) n
                for (const auto& tb : tgt)
                    if (tb.subset == jk && tb.i == b.i + dg) {
                        const Matrix am = m.act_element(dg, gens[g].value, b.i);
                        const std::size_t dn = static_cast<std::size_t>(N.dim(j));
                        for (std::size_t r1 = 0; r1 < am.rows(); ++r1)
                            for (std::size_t c1 = 0; c1 < am.cols(); ++c1)
                                if (am(r1, c1) != 0)
                                    for (std::size_t q = 0; q < dn; ++q)
                                        d.add_to(tb.offset + r1 * dn + q, b.offset + c1 * dn + q, f.mul(sign, am(r1, c1)));
                    }
                // - m (x) x n
                for (const auto& tb : tgt)
                    if (tb.subset == jk && tb.i == b.i) {
                        const Matrix an = n.act_element(dg, gens[g].value, j);
                        const std::size_t dm = static_cast<std::size_t>(M.dim(b.i));
                        const std::size_t dn_src = static_cast<std::size_t>(N.dim(j));
                        const std::size_t dn_tgt = static_cast<std::size_t>(N.dim(j + dg));
                        for (std::size_t q = 0; q < dm; ++q)
                            for (std::size_t r1 = 0; r1 < an.rows(); ++r1)
                                for (std::size_t c1 = 0; c1 < an.cols(); ++c1)
                                    if (an(r1, c1) != 0)
                                        d.add_to(tb.offset + q * dn_tgt + r1, b.offset + q * dn_src + c1,
                                                 f.neg(f.mul(sign, an(r1, c1))));
                    }
            }
        }
        return d;
    };
    for (int s = 0; s <= std::min<int>(s_max, static_cast<int>(r)); ++s)
        for (int t = 0; t <= cap; ++t) {
            const int c = static_cast<int>(blocks(s, t).second);
            if (c == 0)
                continue;
            const int h = c - (s > 0 ? static_cast<int>(rank_of(diff(s, t))) : 0) -
                          static_cast<int>(rank_of(diff(s + 1, t)));
            if (h > 0)
                out.set(s, t, h);
        }
    return out;
}

}  // namespace

BigradedTable tor_dims(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, const AlgebraModule& n,
                       int s_max)
{
    if (s_max < 0)
        throw ValidationError("s_max must be nonnegative");
    if (n.is_trivial()) {
        BigradedTable cut;
        const BigradedTable full = tensor_t(tor_with_trivial(a, m, s_max), n.space());
        for (const auto& [st, d] : full.entries())
            if (st.second <= a->cap())
                cut.set(st.first, st.second, d);
        return cut;
    }
    if (m.is_trivial())
        return tor_dims(a, n, m, s_max);
    if (!is_polynomial_algebra(*a))
        throw ValidationError("Tor with two nontrivial modules is only supported over polynomial algebras");
    return tor_two_sided(*a, m, n, s_max);
}

// ---------------------------------------------------------------- bar construction

namespace {

using BarBasis = std::vector<std::pair<int, std::size_t>>;  // (degree, basis index) per tensor factor

std::vector<BarBasis> bar_basis(const FiniteAlgebra& a, int s, int t)
{
    std::vector<BarBasis> out;
    BarBasis cur;
    const auto rec = [&](auto&& self, int left, int remaining) -> void {
        if (left == 0) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        for (int d = 1; d <= remaining - (left - 1); ++d)
            for (std::size_t k = 0; k < static_cast<std::size_t>(a.dim(d)); ++k) {
                cur.emplace_back(d, k);
                self(self, left - 1, remaining - d);
                cur.pop_back();
            }
    };
    rec(rec, s, t);
    return out;
}

}  // namespace

BigradedTable bar_homology_dims(const FiniteAlgebra& a, int s_max)
{
    if (s_max < 0)
        throw ValidationError("s_max must be nonnegative");
    const PrimeField& f = a.field();
    BigradedTable out;
    const int cap = a.cap();
    auto diff = [&](int s, const std::vector<BarBasis>& src, const std::vector<BarBasis>& tgt) {
        Matrix d(f, tgt.size(), src.size());
        std::map<BarBasis, std::size_t> index;
        for (std::size_t k = 0; k < tgt.size(); ++k)
            index.emplace(tgt[k], k);
        for (std::size_t c = 0; c < src.size(); ++c) {
            const BarBasis& b = src[c];
            for (int i = 1; i < s; ++i) {
                const auto& [d1, k1] = b[static_cast<std::size_t>(i - 1)];
                const auto& [d2, k2] = b[static_cast<std::size_t>(i)];
                const Vec prod = a.basis_product(d1, k1, d2, k2);
                for (std::size_t q = 0; q < prod.size(); ++q) {
                    if (prod[q] == 0)
                        continue;
                    BarBasis nb(b.begin(), b.begin() + i - 1);
                    nb.emplace_back(d1 + d2, q);
                    nb.insert(nb.end(), b.begin() + i + 1, b.end());
                    d.add_to(index.at(nb), c, f.mul(f.sign(i), prod[q]));
                }
            }
        }
        return d;
    };
    for (int t = 0; t <= cap; ++t) {
        std::vector<std::vector<BarBasis>> bases;
        for (int s = 0; s <= s_max + 1; ++s)
            bases.push_back(bar_basis(a, s, t));
        std::vector<std::size_t> ranks(static_cast<std::size_t>(s_max) + 3, 0);
        for (int s = 1; s <= s_max + 1; ++s)
            ranks[static_cast<std::size_t>(s)] =
                rank_of(diff(s, bases[static_cast<std::size_t>(s)], bases[static_cast<std::size_t>(s - 1)]));
        for (int s = 0; s <= s_max; ++s) {
            const int h = static_cast<int>(bases[static_cast<std::size_t>(s)].size()) -
                          static_cast<int>(ranks[static_cast<std::size_t>(s)]) -
                          static_cast<int>(ranks[static_cast<std::size_t>(s) + 1]);
            if (h > 0)
                out.set(s, t, h);
        }
    }
    return out;
}

// ---------------------------------------------------------------- Hochschild

BigradedTable hochschild_cochain_dims(const FiniteAlgebra& a, const AlgebraModule& m, int s_max)
{
    if (!a.is_complete())
        throw ValidationError("Hochschild cochains need a finite algebra stored up to its top degree");
    const PrimeField& f = a.field();
    const GradedVectorSpace& M = m.space();
    BigradedTable out;
    if (M.empty())
        return out;
    const int top = a.top_degree();

    // All tuples of length n grouped by total degree.
    std::vector<std::map<int, std::vector<BarBasis>>> tuples(static_cast<std::size_t>(s_max) + 2);
    for (int n = 0; n <= s_max + 1; ++n)
        for (int d = n; d <= n * top; ++d) {
            auto b = bar_basis(a, n, d);
            if (!b.empty())
                tuples[static_cast<std::size_t>(n)][d] = std::move(b);
        }

    struct Layout {
        std::map<BarBasis, std::size_t> offset;
        std::size_t size = 0;
    };
    auto layout = [&](int n, int t) {
        Layout l;
        for (const auto& [d, list] : tuples[static_cast<std::size_t>(n)])
            for (const auto& tau : list) {
                const int md = M.dim(d + t);
                if (md == 0)
                    continue;
                l.offset.emplace(tau, l.size);
                l.size += static_cast<std::size_t>(md);
            }
        return l;
    };
    auto tdeg = [](const BarBasis& b, std::size_t from, std::size_t to) {
        int d = 0;
        for (std::size_t i = from; i < to; ++i)
            d += b[i].first;
        return d;
    };
    // delta: C^n_t -> C^{n+1}_t
    auto delta = [&](int n, int t) {
        const Layout src = layout(n, t), tgt = layout(n + 1, t);
        Matrix d(f, tgt.size, src.size);
        for (const auto& [tau, row0] : tgt.offset) {
            const std::size_t len = tau.size();
            // (-1)^{|a1| t} a1 . f(a2 ... )
            {
                BarBasis rest(tau.begin() + 1, tau.end());
                auto it = src.offset.find(rest);
                if (it != src.offset.end()) {
                    const Matrix act = m.act(tau[0].first, tau[0].second, tdeg(rest, 0, rest.size()) + t);
                    add_scaled_block(d, row0, it->second, act, f.sign(static_cast<long long>(tau[0].first) * t));
                }
            }
            // (-1)^i f(... a_i a_{i+1} ...)
            for (std::size_t i = 1; i < len; ++i) {
                const auto& [d1, k1] = tau[i - 1];
                const auto& [d2, k2] = tau[i];
                if (d1 + d2 > top)
                    continue;
                const Vec prod = a.basis_product(d1, k1, d2, k2);
                for (std::size_t q = 0; q < prod.size(); ++q) {
                    if (prod[q] == 0)
                        continue;
                    BarBasis merged(tau.begin(), tau.begin() + static_cast<long>(i) - 1);
                    merged.emplace_back(d1 + d2, q);
                    merged.insert(merged.end(), tau.begin() + static_cast<long>(i) + 1, tau.end());
                    auto it = src.offset.find(merged);
                    if (it == src.offset.end())
                        continue;
                    const std::size_t md = static_cast<std::size_t>(M.dim(tdeg(tau, 0, len) + t));
                    for (std::size_t k = 0; k < md; ++k)
                        d.add_to(row0 + k, it->second + k, f.mul(f.sign(static_cast<long long>(i)), prod[q]));
                }
            }
            // (-1)^{n+1} f(a1 ... an) . a_{n+1}, with m . a = (-1)^{|a||m|} a m
            {
                BarBasis head(tau.begin(), tau.end() - 1);
                auto it = src.offset.find(head);
                if (it != src.offset.end()) {
                    const int fm = tdeg(head, 0, head.size()) + t;
                    const int da = tau.back().first;
                    const Matrix act = m.act(da, tau.back().second, fm);
                    add_scaled_block(d, row0, it->second, act,
                                     f.sign(static_cast<long long>(n + 1) + static_cast<long long>(da) * fm));
                }
            }
        }
        return d;
    };
    for (int n = 0; n <= s_max; ++n) {
        const int lo = *M.min_degree() - n * top;
        const int hi = *M.max_degree() - n;
        for (int t = lo; t <= hi; ++t) {
            const int c = static_cast<int>(layout(n, t).size);
            if (c == 0)
                continue;
            const int h = c - static_cast<int>(rank_of(delta(n, t))) -
                          (n > 0 ? static_cast<int>(rank_of(delta(n - 1, t))) : 0);
            if (h > 0)
                out.set(n, t, h);
        }
    }
    return out;
}

namespace {

void require_exterior(const FiniteAlgebra& a)
{
    if (!a.monomial() || a.monomial()->facets())
        throw ValidationError("Hochschild computation needs an exterior algebra presentation");
    for (const auto& g : a.monomial()->generators())
        if (g.height != 2)
            throw ValidationError("Hochschild computation needs an exterior algebra (generator '" + g.name + "')");
    if (!a.is_complete())
        throw ValidationError("algebra cap is below the top degree of the exterior algebra");
}

}  // namespace

HochschildResult hochschild_dims(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, int s_max)
{
    require_exterior(*a);
    HochschildResult r;
    auto k = AlgebraModule::trivial(a, GradedVectorSpace{{0, 1}});
    r.via_ext = tensor_t(ext_dims(a, k, s_max), m.space());
    r.via_cochains = hochschild_cochain_dims(*a, m, s_max);
    if (!(r.via_ext == r.via_cochains))
        throw CrossCheckError("Hochschild paths disagree:\nvia Ext:\n" + r.via_ext.to_string() + "\nvia cochains:\n" +
                              r.via_cochains.to_string());
    r.table = r.via_ext;
    return r;
}

// ---------------------------------------------------------------- derivations

DerivationResult derivations_dims(const FiniteAlgebra& a, const AlgebraModule& m)
{
    const PrimeField& f = a.field();
    const GradedVectorSpace& M = m.space();
    DerivationResult out;
    if (M.empty())
        return out;
    const int cap = a.cap();
    const int lo = *M.min_degree() - cap;
    const int hi = *M.max_degree() - 1;
    out.exact_from = a.is_complete() ? INT_MIN : *M.max_degree() - cap;

    for (int t = lo; t <= hi; ++t) {
        // Unknowns D(e) for basis elements e of degree i >= 1 with M_{i+t} != 0.
        std::map<int, std::size_t> var_off;
        std::size_t nvars = 0;
        for (int i = 1; i <= cap; ++i) {
            const int md = M.dim(i + t);
            if (md == 0 || a.dim(i) == 0)
                continue;
            var_off[i] = nvars;
            nvars += static_cast<std::size_t>(a.dim(i) * md);
        }
        if (nvars == 0)
            continue;
        std::vector<Vec> rows;
        for (int i = 1; i <= cap; ++i)
            for (int j = 1; i + j <= cap; ++j) {
                const int target = i + j + t;
                const std::size_t mt = static_cast<std::size_t>(M.dim(target));
                if (mt == 0 || a.dim(i) == 0 || a.dim(j) == 0)
                    continue;
                for (std::size_t x = 0; x < static_cast<std::size_t>(a.dim(i)); ++x)
                    for (std::size_t y = 0; y < static_cast<std::size_t>(a.dim(j)); ++y) {
                        // D(xy) - D(x).y - (-1)^{t i} x.D(y), with D(x).y = (-1)^{j (i+t)} y.D(x)
                        std::vector<Vec> eq(mt, Vec(nvars, 0));
                        const Vec prod = a.basis_product(i, x, j, y);
                        if (var_off.count(i + j))
                            for (std::size_t c = 0; c < prod.size(); ++c)
                                if (prod[c] != 0)
                                    for (std::size_t k = 0; k < mt; ++k) {
                                        auto& e = eq[k][var_off[i + j] + c * mt + k];
                                        e = f.add(e, prod[c]);
                                    }
                        if (var_off.count(i)) {
                            const std::size_t mi = static_cast<std::size_t>(M.dim(i + t));
                            const Matrix act = m.act(j, y, i + t);
                            const auto sgn = f.neg(f.sign(static_cast<long long>(j) * (i + t)));
                            for (std::size_t k = 0; k < mt; ++k)
                                for (std::size_t q = 0; q < mi; ++q) {
                                    auto& e = eq[k][var_off[i] + x * mi + q];
                                    e = f.add(e, f.mul(sgn, act(k, q)));
                                }
                        }
                        if (var_off.count(j)) {
                            const std::size_t mj = static_cast<std::size_t>(M.dim(j + t));
                            const Matrix act = m.act(i, x, j + t);
                            const auto sgn = f.neg(f.sign(static_cast<long long>(t) * i));
                            for (std::size_t k = 0; k < mt; ++k)
                                for (std::size_t q = 0; q < mj; ++q) {
                                    auto& e = eq[k][var_off[j] + y * mj + q];
                                    e = f.add(e, f.mul(sgn, act(k, q)));
                                }
                        }
                        for (auto& e : eq)
                            if (vec_degree_count(e) > 0)
                                rows.push_back(std::move(e));
                    }
            }
        Matrix sys(f, rows.size(), nvars);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < nvars; ++c)
                sys.at(r, c) = rows[r][c];
        const int dim = static_cast<int>(nvars) - static_cast<int>(rank_of(sys));
        if (dim > 0)
            out.dims.set_dim(t, dim);
    }
    return out;
}

GradedVectorSpace indecomposable_dims(const FiniteAlgebra& a)
{
    GradedVectorSpace out;
    const PrimeField& f = a.field();
    for (int d = 1; d <= a.cap(); ++d) {
        const std::size_t n = static_cast<std::size_t>(a.dim(d));
        if (n == 0)
            continue;
        EchelonSpan span(f, n);
        for (int i = 1; i < d; ++i)
            for (std::size_t x = 0; x < static_cast<std::size_t>(a.dim(i)); ++x)
                for (std::size_t y = 0; y < static_cast<std::size_t>(a.dim(d - i)); ++y)
                    span.insert(a.basis_product(i, x, d - i, y));
        if (n > span.dim())
            out.set_dim(d, static_cast<int>(n - span.dim()));
    }
    return out;
}

// ---------------------------------------------------------------- associative AQ

nlohmann::json AQResult::to_json() const
{
    nlohmann::json j;
    j["table"] = table.to_json();
    j["parity"] = to_string(verdict.parity);
    j["empty"] = verdict.empty;
    j["notes"] = notes;
    return j;
}

AQResult aq_ass_dims(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, int s_max)
{
    require_exterior(*a);
    AQResult r;
    for (const auto& g : a->monomial()->generators())
        if (g.degree % 2 == 0)
            r.notes.push_back("generator '" + g.name + "' has even degree; the evenness statement assumes V odd");
    for (const auto& [d, dim] : m.space().dims())
        if (d % 2 == 0 && dim > 0)
            r.notes.push_back("module has classes in even degree " + std::to_string(d) +
                              "; the evenness statement assumes M odd");
    const DerivationResult der = derivations_dims(*a, m);
    for (const auto& [t, d] : der.dims.dims())
        r.table.set(0, t, d);
    if (s_max >= 1) {
        const HochschildResult hh = hochschild_dims(a, m, s_max + 1);
        for (const auto& [st, d] : hh.table.entries())
            if (st.first >= 2)
                r.table.set(st.first - 1, st.second, d);
    }
    r.verdict = parity_verdict(r.table);
    return r;
}

}  // namespace fphom
