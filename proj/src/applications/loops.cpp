#include "fphom/applications.hpp"
#include "fphom/homalg.hpp"

namespace fphom {

nlohmann::json LoopResult::to_json() const
{
    return {{"dims", koszul.to_json()},
            {"koszul", koszul.to_json()},
            {"bar", bar.to_json()},
            {"exterior", exterior.to_json()},
            {"primitives", primitives}};
}

LoopResult loop_cohomology_dims(const GradedVectorSpace& v, int p, int cap)
{
    if (v.empty())
        throw ValidationError("V must be nonzero");
    std::vector<std::pair<std::string, int>> gens;
    int count = 0;
    for (const auto& [d, n] : v.dims()) {
        if (d < 2 || d % 2 != 0)
            throw ValidationError("V must be concentrated in positive even degrees (degree " + std::to_string(d) + ")");
        for (int k = 0; k < n; ++k)
            gens.emplace_back("v" + std::to_string(d) + "_" + std::to_string(k + 1), d);
        count += n;
    }
    // Tor_s sits in internal degree total + s, and s <= dim V
    const int internal = cap + count;
    auto a = std::make_shared<const FiniteAlgebra>(
        FiniteAlgebra::from_monomial(MonomialAlgebra::polynomial(p, gens), internal));
    const AlgebraModule k = AlgebraModule::trivial(a, GradedVectorSpace{{0, 1}});
    LoopResult r;
    r.koszul = tor_dims(a, k, k, count).total_degrees().truncate(cap);
    r.bar = bar_homology_dims(*a, count).total_degrees().truncate(cap);
    HilbertSeries ext = HilbertSeries::one(cap);
    for (const auto& [d, n] : v.dims())
        ext = ext * HilbertSeries::exterior(d - 1, n, cap);
    r.exterior = ext.to_space();
    r.primitives = count;
    if (!(r.koszul == r.bar))
        throw CrossCheckError("Koszul Tor " + r.koszul.to_string() + " differs from bar homology " + r.bar.to_string());
    if (!(r.koszul == r.exterior))
        throw CrossCheckError("Tor " + r.koszul.to_string() + " differs from the exterior series " +
                              r.exterior.to_string());
    return r;
}

}  // namespace fphom
