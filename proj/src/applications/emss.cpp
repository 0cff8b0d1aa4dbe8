#include <algorithm>
#include <bit>

#include "fphom/applications.hpp"
#include "fphom/polynomial.hpp"

namespace fphom {

namespace {

std::vector<std::pair<std::string, int>> parse_generators(const nlohmann::json& j, const std::string& what)
{
    const nlohmann::json& list = j.is_object() && j.contains("generators") ? j.at("generators") : j;
    if (j.is_object() && j.contains("kind") && j.at("kind") != "polynomial")
        throw ValidationError(what + " must be a polynomial algebra");
    std::vector<std::pair<std::string, int>> out;
    if (list.is_object()) {
        for (const auto& [name, deg] : list.items())
            out.emplace_back(name, deg.get<int>());
    }
    else if (list.is_array()) {
        for (const auto& g : list) {
            if (!g.contains("name") || !g.contains("degree"))
                throw ValidationError(what + ": generators need \"name\" and \"degree\"");
            out.emplace_back(g.at("name").get<std::string>(), g.at("degree").get<int>());
        }
    }
    else
        throw ValidationError(what + ": malformed generator list");
    for (const auto& [n, d] : out)
        if (d < 2 || d % 2 != 0)
            throw ValidationError(what + ": generator '" + n + "' must have positive even degree");
    return out;
}

long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<std::string> names_of(const std::vector<std::pair<std::string, int>>& g)
{
    std::vector<std::string> out;
    for (const auto& [n, d] : g)
        out.push_back(n);
    return out;
}

struct Built {
    std::shared_ptr<const FiniteAlgebra> b, x, y;
    std::vector<Vec> img_x, img_y;
    std::vector<Polynomial> poly_x, poly_y;
};

Built build(const EMSSInput& in, int cap)
{
    const PrimeField f(in.p);
    Built out;
    out.b = std::make_shared<const FiniteAlgebra>(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(in.p, in.base), cap));
    out.x = std::make_shared<const FiniteAlgebra>(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(in.p, in.x), cap));
    out.y = std::make_shared<const FiniteAlgebra>(FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(in.p, in.y), cap));
    auto images = [&](const std::vector<std::string>& text, const FiniteAlgebra& to,
                      const std::vector<std::pair<std::string, int>>& to_gens, std::vector<Vec>& vecs,
                      std::vector<Polynomial>& polys, const std::string& side) {
        const auto names = names_of(to_gens);
        for (std::size_t i = 0; i < in.base.size(); ++i) {
            const int deg = in.base[i].second;
            Polynomial poly = parse_polynomial(text.at(i), names, f);
            Vec v(static_cast<std::size_t>(to.dim(deg)), 0);
            if (!poly.is_zero()) {
                std::vector<int> var_degrees;
                for (const auto& g : to_gens)
                    var_degrees.push_back(g.second);
                if (!poly.is_homogeneous(var_degrees, deg))
                    throw ValidationError(side + ": image of '" + in.base[i].first + "' is not homogeneous of degree " +
                                          std::to_string(deg));
                if (deg <= cap)
                    v = to.evaluate(poly).second;
            }
            vecs.push_back(std::move(v));
            polys.push_back(std::move(poly));
        }
    };
    images(in.to_x, *out.x, in.x, out.img_x, out.poly_x, "to_x");
    images(in.to_y, *out.y, in.y, out.img_y, out.poly_y, "to_y");
    return out;
}

}  // namespace

EMSSInput EMSSInput::from_json(const nlohmann::json& j, std::optional<int> p)
{
    if (!j.is_object() || !j.contains("base") || !j.contains("x"))
        throw ValidationError("EMSS input needs \"base\" and \"x\"");
    EMSSInput in;
    if (j.contains("p")) {
        in.p = j.at("p").get<int>();
        if (p && *p != in.p)
            throw ValidationError("prime in the input (" + std::to_string(in.p) + ") differs from -p " +
                                  std::to_string(*p));
    }
    else if (p)
        in.p = *p;
    else
        throw ValidationError("no prime given");
    PrimeField check(in.p);
    in.base = parse_generators(j.at("base"), "base");
    in.x = parse_generators(j.at("x"), "x");
    if (j.contains("y"))
        in.y = parse_generators(j.at("y"), "y");
    const nlohmann::json maps = j.contains("maps") ? j.at("maps") : nlohmann::json::object();
    auto read = [&](const char* key) {
        std::vector<std::string> out;
        const nlohmann::json m = maps.contains(key) ? maps.at(key) : nlohmann::json::object();
        for (const auto& [name, deg] : in.base)
            out.push_back(m.contains(name) ? m.at(name).get<std::string>() : "0");
        for (const auto& [name, v] : m.items())
            if (std::none_of(in.base.begin(), in.base.end(), [&](const auto& g) { return g.first == name; }))
                throw ValidationError(std::string(key) + ": unknown base generator '" + name + "'");
        return out;
    };
    in.to_x = read("to_x");
    in.to_y = read("to_y");
    build(in, 0);  // parses the images and checks homogeneity
    return in;
}

EMSSInput EMSSInput::projective_unitary(int n, int p)
{
    if (n < 1 || n > 16)
        throw ValidationError("n must lie in [1, 16]");
    EMSSInput in;
    in.p = p;
    const PrimeField f(p);
    for (int i = 1; i <= n; ++i) {
        in.base.emplace_back("c" + std::to_string(i), 2 * i);
        const auto c = f.reduce(binomial(n, i));
        in.to_x.push_back(c == 0 ? "0" : std::to_string(c) + "*t^" + std::to_string(i));
        in.to_y.push_back("0");
    }
    in.x = {{"t", 2}};
    return in;
}

nlohmann::json EMSSInput::to_json() const
{
    auto gens = [](const std::vector<std::pair<std::string, int>>& g) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& [n, d] : g)
            a.push_back({{"name", n}, {"degree", d}});
        return nlohmann::json{{"generators", a}};
    };
    nlohmann::json j{{"p", p}, {"base", gens(base)}, {"x", gens(x)}, {"y", gens(y)}};
    for (std::size_t i = 0; i < base.size(); ++i) {
        j["maps"]["to_x"][base[i].first] = to_x[i];
        j["maps"]["to_y"][base[i].first] = to_y[i];
    }
    return j;
}

nlohmann::json EMSSHypothesisReport::to_json() const
{
    auto side = [](const Side& s) {
        nlohmann::json j{{"surjective", s.surjective}, {"linear", s.linear}};
        if (!s.surjective)
            j["first_failure_degree"] = s.first_failure;
        if (!s.linear)
            j["nonlinear_generator"] = s.nonlinear_generator;
        return j;
    };
    return {{"to_x", side(x)}, {"to_y", side(y)}, {"surjectivity_holds", surjectivity_holds()}, {"holds", holds()}};
}

EMSSHypothesisReport emss_hypothesis_check(const EMSSInput& in, int cap)
{
    const Built b = build(in, cap);
    EMSSHypothesisReport rep;
    auto check = [&](const std::shared_ptr<const FiniteAlgebra>& to, const std::vector<Vec>& imgs,
                     const std::vector<Polynomial>& polys, EMSSHypothesisReport::Side& side) {
        const GradedMap m = algebra_map_matrix(b.b, *to, imgs);
        for (const auto& [d, n] : to->dims().dims()) {
            const Matrix blk = m.block(d);
            const std::size_t r = blk.cols() == 0 ? 0 : blk.rank();
            if (static_cast<int>(r) < n) {
                side.surjective = false;
                side.first_failure = d;
                break;
            }
        }
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (const auto& [e, c] : polys[i].terms()) {
                int total = 0;
                for (auto x : e)
                    total += x;
                if (total != 1 && side.linear) {
                    side.linear = false;
                    side.nonlinear_generator = in.base[i].first;
                }
            }
    };
    check(b.x, b.img_x, b.poly_x, rep.x);
    check(b.y, b.img_y, b.poly_y, rep.y);
    return rep;
}

// ---------------------------------------------------------------- Koszul dga

namespace {

struct KBasis {
    int a;           // X degree
    std::size_t xi;  // X basis index
    unsigned mask;   // exterior generators u_i
    int b;           // Y degree
    std::size_t yi;
    auto operator<=>(const KBasis&) const = default;
};

}  // namespace

nlohmann::json TorAlgebra::to_json() const
{
    nlohmann::json j;
    j["table"] = table.to_json();
    j["totals"] = totals.to_json();
    j["classes"] = nlohmann::json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
        nlohmann::json c{{"s", classes[k].s}, {"t", classes[k].t}, {"total", classes[k].t - classes[k].s},
                         {"representative", classes[k].label}};
        if (square_known[k])
            c["square_zero"] = static_cast<bool>(square_zero[k]);
        j["classes"].push_back(c);
    }
    j["products"] = nlohmann::json::array();
    for (const auto& [pr, v] : products) {
        nlohmann::json terms = nlohmann::json::object();
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0)
                terms[std::to_string(k)] = v[k];
        if (!terms.empty())
            j["products"].push_back({{"left", pr.first}, {"right", pr.second}, {"result", terms}});
    }
    return j;
}

TorAlgebra emss_tor_algebra(const EMSSInput& in, int cap)
{
    const Built bt = build(in, cap);
    const FiniteAlgebra& X = *bt.x;
    const FiniteAlgebra& Y = *bt.y;
    const PrimeField& f = X.field();
    const std::size_t r = in.base.size();
    if (r > 12)
        throw ValidationError("at most 12 base generators are supported");

    auto udeg = [&](unsigned mask) {
        int d = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i))
                d += in.base[i].second;
        return d;
    };
    // basis of C_s[t]
    std::map<std::pair<int, int>, std::vector<KBasis>> basis;
    std::map<std::pair<int, int>, std::map<KBasis, std::size_t>> index;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        const int s = std::popcount(mask);
        const int du = udeg(mask);
        for (const auto& [a, na] : X.dims().dims())
            for (const auto& [b, nb] : Y.dims().dims()) {
                const int t = a + du + b;
                if (t > cap)
                    continue;
                for (std::size_t xi = 0; xi < static_cast<std::size_t>(na); ++xi)
                    for (std::size_t yi = 0; yi < static_cast<std::size_t>(nb); ++yi) {
                        auto& list = basis[{s, t}];
                        index[{s, t}].emplace(KBasis{a, xi, mask, b, yi}, list.size());
                        list.push_back({a, xi, mask, b, yi});
                    }
            }
    }
    auto size = [&](int s, int t) {
        auto it = basis.find({s, t});
        return it == basis.end() ? std::size_t{0} : it->second.size();
    };
    auto unit_vec = [](std::size_t n, std::size_t i) {
        Vec v(n, 0);
        v[i] = 1;
        return v;
    };
    // d: C_s[t] -> C_{s-1}[t]
    auto diff = [&](int s, int t) {
        Matrix d(f, size(s - 1, t), size(s, t));
        if (d.rows() == 0 || d.cols() == 0)
            return d;
        const auto& tgt_index = index.at({s - 1, t});
        const auto& src = basis.at({s, t});
        for (std::size_t c = 0; c < src.size(); ++c) {
            const KBasis& e = src[c];
            int pos = 0;
            for (std::size_t i = 0; i < r; ++i) {
                if (!(e.mask & (1u << i)))
                    continue;
                const auto sign = f.sign(pos++);
                const unsigned rest = e.mask & ~(1u << i);
                const int dg = in.base[i].second;
                // x f_X(c_i) (x) u_rest (x) y
                if (X.dim(e.a + dg) > 0) {
                    const Vec prod = X.multiply(e.a, unit_vec(static_cast<std::size_t>(X.dim(e.a)), e.xi), dg, bt.img_x[i]);
                    for (std::size_t q = 0; q < prod.size(); ++q)
                        if (prod[q] != 0)
                            d.add_to(tgt_index.at({e.a + dg, q, rest, e.b, e.yi}), c, f.mul(sign, prod[q]));
                }
                // - x (x) u_rest (x) f_Y(c_i) y
                if (Y.dim(e.b + dg) > 0) {
                    const Vec prod = Y.multiply(dg, bt.img_y[i], e.b, unit_vec(static_cast<std::size_t>(Y.dim(e.b)), e.yi));
                    for (std::size_t q = 0; q < prod.size(); ++q)
                        if (prod[q] != 0)
                            d.add_to(tgt_index.at({e.a, e.xi, rest, e.b + dg, q}), c, f.neg(f.mul(sign, prod[q])));
                }
            }
        }
        return d;
    };

    TorAlgebra out;
    struct Slot {
        std::vector<Vec> reps;
        EchelonSpan span;       // boundaries then reps, tracked
        std::size_t boundaries;
        std::size_t first_class;
    };
    std::map<std::pair<int, int>, Slot> slots;
    for (int s = 0; s <= static_cast<int>(r); ++s)
        for (int t = 0; t <= cap; ++t) {
            const std::size_t n = size(s, t);
            if (n == 0)
                continue;
            const Matrix dout = diff(s, t);
            const Matrix cycles = (s == 0 || dout.rows() == 0) ? Matrix::identity(f, n) : dout.kernel();
            const Matrix din = diff(s + 1, t);
            Slot slot{{}, EchelonSpan(f, n, true), 0, out.classes.size()};
            for (std::size_t c = 0; c < din.cols(); ++c) {
                Vec v(n);
                for (std::size_t k = 0; k < n; ++k)
                    v[k] = din(k, c);
                slot.span.insert(v);
            }
            slot.boundaries = slot.span.dim();
            for (std::size_t c = 0; c < cycles.cols(); ++c) {
                Vec v(n);
                for (std::size_t k = 0; k < n; ++k)
                    v[k] = cycles(k, c);
                if (slot.span.insert(v))
                    slot.reps.push_back(v);
            }
            if (slot.reps.empty())
                continue;
            out.table.set(s, t, static_cast<int>(slot.reps.size()));
            for (const auto& v : slot.reps) {
                std::string label;
                const auto& list = basis.at({s, t});
                for (std::size_t k = 0; k < n; ++k) {
                    if (v[k] == 0)
                        continue;
                    const KBasis& e = list[k];
                    std::string term = v[k] == 1 ? "" : std::to_string(v[k]) + "*";
                    std::vector<std::string> parts;
                    if (e.a > 0)
                        parts.push_back(X.labels(e.a)[e.xi]);
                    for (std::size_t i = 0; i < r; ++i)
                        if (e.mask & (1u << i))
                            parts.push_back("u_" + in.base[i].first);
                    if (e.b > 0)
                        parts.push_back(Y.labels(e.b)[e.yi]);
                    if (parts.empty())
                        parts.push_back("1");
                    for (std::size_t q = 0; q < parts.size(); ++q)
                        term += (q ? "*" : "") + parts[q];
                    label += (label.empty() ? "" : " + ") + term;
                }
                out.classes.push_back({s, t, label});
            }
            slots.emplace(std::make_pair(s, t), std::move(slot));
        }
    out.totals = out.table.total_degrees();

    // products of representatives
    auto multiply = [&](int s1, int t1, const Vec& v1, int s2, int t2, const Vec& v2) {
        const auto& b1 = basis.at({s1, t1});
        const auto& b2 = basis.at({s2, t2});
        const int s = s1 + s2, t = t1 + t2;
        Vec out_v(size(s, t), 0);
        if (out_v.empty())
            return out_v;
        const auto& idx = index.at({s, t});
        for (std::size_t i = 0; i < v1.size(); ++i) {
            if (v1[i] == 0)
                continue;
            for (std::size_t j = 0; j < v2.size(); ++j) {
                if (v2[j] == 0)
                    continue;
                const KBasis& e1 = b1[i];
                const KBasis& e2 = b2[j];
                if (e1.mask & e2.mask)
                    continue;
                // sign of sorting u_{mask1} u_{mask2}
                int inversions = 0;
                for (std::size_t q = 0; q < r; ++q)
                    if (e2.mask & (1u << q))
                        inversions += std::popcount(e1.mask >> (q + 1));
                const auto sgn = f.mul(f.sign(inversions), f.mul(v1[i], v2[j]));
                const Vec xp = X.basis_product(e1.a, e1.xi, e2.a, e2.xi);
                const Vec yp = Y.basis_product(e1.b, e1.yi, e2.b, e2.yi);
                for (std::size_t xq = 0; xq < xp.size(); ++xq) {
                    if (xp[xq] == 0)
                        continue;
                    for (std::size_t yq = 0; yq < yp.size(); ++yq) {
                        if (yp[yq] == 0)
                            continue;
                        auto& slot = out_v[idx.at({e1.a + e2.a, xq, e1.mask | e2.mask, e1.b + e2.b, yq})];
                        slot = f.add(slot, f.mul(sgn, f.mul(xp[xq], yp[yq])));
                    }
                }
            }
        }
        return out_v;
    };
    out.square_zero.assign(out.classes.size(), false);
    out.square_known.assign(out.classes.size(), false);
    for (const auto& [k1, sl1] : slots)
        for (const auto& [k2, sl2] : slots) {
            const int s = k1.first + k2.first, t = k1.second + k2.second;
            if (t > cap)
                continue;
            for (std::size_t i = 0; i < sl1.reps.size(); ++i)
                for (std::size_t j = 0; j < sl2.reps.size(); ++j) {
                    const std::size_t ci = sl1.first_class + i, cj = sl2.first_class + j;
                    Vec coords(out.classes.size(), 0);
                    const Vec prod = multiply(k1.first, k1.second, sl1.reps[i], k2.first, k2.second, sl2.reps[j]);
                    auto target = slots.find({s, t});
                    bool zero = true;
                    if (target != slots.end()) {
                        Vec c;
                        if (!target->second.span.solve(prod, c))
                            throw CrossCheckError("product of cycles is not a cycle");
                        for (std::size_t q = 0; q < target->second.reps.size(); ++q) {
                            const auto v = q + target->second.boundaries < c.size() ? c[q + target->second.boundaries] : 0;
                            coords[target->second.first_class + q] = v;
                            if (v != 0)
                                zero = false;
                        }
                    }
                    else if (std::any_of(prod.begin(), prod.end(), [](auto x) { return x != 0; })) {
                        // lands in a spot with no homology: must be a boundary
                        const Matrix din = diff(s + 1, t);
                        EchelonSpan bspan(f, prod.size());
                        for (std::size_t c = 0; c < din.cols(); ++c) {
                            Vec v(prod.size());
                            for (std::size_t k = 0; k < prod.size(); ++k)
                                v[k] = din(k, c);
                            bspan.insert(v);
                        }
                        if (!bspan.contains(prod))
                            throw CrossCheckError("product of cycles is not a cycle");
                    }
                    out.products[{ci, cj}] = coords;
                    if (ci == cj) {
                        out.square_known[ci] = true;
                        out.square_zero[ci] = zero;
                    }
                }
        }
    return out;
}

}  // namespace fphom
