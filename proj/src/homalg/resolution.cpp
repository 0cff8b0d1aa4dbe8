#include <map>

#include "fphom/homalg.hpp"

namespace fphom {

int FreeResolution::dim(int s, int t) const
{
    int d = 0;
    for (int w : degrees.at(static_cast<std::size_t>(s)))
        d += algebra->dim(t - w);
    return d;
}

Matrix FreeResolution::block(int s, int t) const
{
    const FiniteAlgebra& A = *algebra;
    const PrimeField& f = A.field();
    Matrix m(f, static_cast<std::size_t>(dim(s - 1, t)), static_cast<std::size_t>(dim(s, t)));
    if (s < 1 || s >= length())
        return m;
    auto offsets = [&](int idx) {
        std::vector<std::size_t> off;
        std::size_t o = 0;
        for (int w : degrees.at(static_cast<std::size_t>(idx))) {
            off.push_back(o);
            o += static_cast<std::size_t>(A.dim(t - w));
        }
        return off;
    };
    const auto src_off = offsets(s);
    const auto tgt_off = offsets(s - 1);
    const auto& src_deg = degrees[static_cast<std::size_t>(s)];
    const auto& tgt_deg = degrees[static_cast<std::size_t>(s - 1)];
    for (const auto& e : differential.at(static_cast<std::size_t>(s))) {
        const int ds = src_deg[e.source];
        const int da = ds - tgt_deg[e.target];
        const int db = t - ds;
        for (std::size_t b = 0; b < static_cast<std::size_t>(A.dim(db)); ++b) {
            Vec eb(static_cast<std::size_t>(A.dim(db)), 0);
            eb[b] = 1;
            // d(b w) = b d(w)
            const Vec v = A.multiply(db, eb, da, e.coefficient);
            for (std::size_t r = 0; r < v.size(); ++r)
                if (v[r] != 0)
                    m.add_to(tgt_off[e.target] + r, src_off[e.source] + b, v[r]);
        }
    }
    return m;
}

bool FreeResolution::d_squared_zero() const
{
    for (int s = 2; s < length(); ++s)
        for (int t = 0; t <= algebra->cap(); ++t)
            if (!(block(s - 1, t) * block(s, t)).is_zero())
                return false;
    return true;
}

bool FreeResolution::exact() const
{
    if (length() < 1 || degrees[0] != std::vector<int>{0})
        return false;
    for (int s = 0; s + 1 < length(); ++s)
        for (int t = 0; t <= algebra->cap(); ++t) {
            const int kernel = s == 0 ? dim(0, t) - (t == 0 ? 1 : 0)
                                      : dim(s, t) - static_cast<int>(block(s, t).rank());
            if (kernel != static_cast<int>(block(s + 1, t).rank()))
                return false;
        }
    return true;
}

nlohmann::json FreeResolution::to_json() const
{
    nlohmann::json j = nlohmann::json::array();
    for (int s = 0; s < length(); ++s)
        j.push_back({{"s", s}, {"rank", rank(s)}, {"generator_degrees", degrees[static_cast<std::size_t>(s)]}});
    return j;
}

FreeResolution koszul_resolution(std::shared_ptr<const FiniteAlgebra> a, int length)
{
    if (!a->monomial())
        throw ValidationError("Koszul resolution needs a monomial presentation");
    const MonomialAlgebra& mono = *a->monomial();
    switch (mono.kind()) {
    case AlgebraKind::polynomial:
    case AlgebraKind::exterior:
    case AlgebraKind::mixed:
    case AlgebraKind::truncated: break;
    default: throw ValidationError("Koszul resolution unsupported for kind " + to_string(mono.kind()));
    }
    if (length < 1)
        throw ValidationError("resolution length must be positive");
    const auto& gens = mono.generators();
    const std::size_t r = gens.size();
    const PrimeField& f = a->field();

    auto strand_degree = [&](std::size_t i, int n) {
        const int x = gens[i].degree, h = gens[i].height;
        if (h == 0)
            return n * x;
        return (n / 2) * h * x + (n % 2) * x;
    };
    // d(e_n) = x^{c} e_{n-1} in strand i
    auto strand_power = [&](std::size_t i, int n) {
        const int h = gens[i].height;
        return (h == 0 || n % 2 == 1) ? 1 : h - 1;
    };
    for (std::size_t i = 0; i < r; ++i) {
        const int need = gens[i].degree * (gens[i].height == 0 ? 1 : gens[i].height - 1);
        if (need > a->cap())
            throw ValidationError("algebra cap too small for the resolution of generator '" + gens[i].name + "'");
    }

    FreeResolution res;
    res.algebra = a;
    res.degrees.assign(static_cast<std::size_t>(length), {});
    res.differential.assign(static_cast<std::size_t>(length), {});
    std::vector<std::map<std::vector<int>, std::size_t>> index(static_cast<std::size_t>(length));

    std::vector<int> n(r, 0);
    const auto enumerate = [&](auto&& self, std::size_t i, int s) -> void {
        if (i == r) {
            int deg = 0;
            for (std::size_t j = 0; j < r; ++j)
                deg += strand_degree(j, n[j]);
            auto& lvl = index[static_cast<std::size_t>(s)];
            lvl.emplace(n, lvl.size());
            res.degrees[static_cast<std::size_t>(s)].push_back(deg);
            return;
        }
        const int top = gens[i].height == 0 ? 1 : length - 1;
        for (int k = 0; k <= top && s + k < length; ++k) {
            n[i] = k;
            self(self, i + 1, s + k);
        }
        n[i] = 0;
    };
    enumerate(enumerate, 0, 0);

    for (int s = 1; s < length; ++s) {
        for (const auto& [multi, w] : index[static_cast<std::size_t>(s)]) {
            for (std::size_t i = 0; i < r; ++i) {
                if (multi[i] == 0)
                    continue;
                const int power = strand_power(i, multi[i]);
                const int c_deg = power * gens[i].degree;
                long long sign = 0;
                for (std::size_t j = 0; j < i; ++j)
                    sign += multi[j] + static_cast<long long>(c_deg) * strand_degree(j, multi[j]);
                Polynomial c = Polynomial::variable(f, r, i).pow(power).scaled(f.sign(sign));
                auto target = multi;
                --target[i];
                res.differential[static_cast<std::size_t>(s)].push_back(
                    {w, index[static_cast<std::size_t>(s - 1)].at(target), a->evaluate(c).second});
            }
        }
    }
    if (!res.d_squared_zero())
        throw CrossCheckError("constructed resolution has d^2 != 0");
    if (!res.exact())
        throw CrossCheckError("constructed resolution is not exact up to the cap");
    return res;
}

}  // namespace fphom
