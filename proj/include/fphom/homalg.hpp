#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "fphom/algebra.hpp"

namespace fphom {

/// Free resolution P_* -> k over a FiniteAlgebra. P_s is free on generators of the listed degrees;
/// d(w) = sum of a * w' with a in A.
struct FreeResolution {
    struct Entry {
        std::size_t source;  // generator of P_s
        std::size_t target;  // generator of P_{s-1}
        Vec coefficient;     // element of A of degree deg(source) - deg(target)
    };

    std::shared_ptr<const FiniteAlgebra> algebra;
    std::vector<std::vector<int>> degrees;     // degrees[s][w]
    std::vector<std::vector<Entry>> differential;  // differential[s], s >= 1

    int length() const { return static_cast<int>(degrees.size()); }
    int rank(int s) const { return static_cast<int>(degrees.at(static_cast<std::size_t>(s)).size()); }
    /// P_s in internal degree t (as A-module, truncated at the algebra's cap).
    int dim(int s, int t) const;
    /// Matrix of d: P_s[t] -> P_{s-1}[t].
    Matrix block(int s, int t) const;

    bool d_squared_zero() const;
    /// Augmented complex exact in internal degrees <= cap for every s < length - 1.
    bool exact() const;
    nlohmann::json to_json() const;
};

/// Tensor product of Koszul strands: two-step for polynomial generators, periodic
/// (x, x^{h-1}, x, ...) for truncated or exterior ones. Validated (d^2 = 0, exactness to cap).
FreeResolution koszul_resolution(std::shared_ptr<const FiniteAlgebra> a, int length);

/// Ext_A^s(k, M) with t = map degree, s <= s_max. M must be finite dimensional.
BigradedTable ext_dims(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, int s_max);

/// Tor^A_s(M, N) with t = internal degree (t <= cap). N or M must be trivial, unless A is polynomial.
BigradedTable tor_dims(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, const AlgebraModule& n,
                       int s_max);

/// Homology of the normalized bar complex B(k, A, k), internal degree <= cap.
BigradedTable bar_homology_dims(const FiniteAlgebra& a, int s_max);

struct HochschildResult {
    BigradedTable via_ext;     // Ext_A(k,k) (x) M
    BigradedTable via_cochains;
    BigradedTable table;       // equal to both
};

/// HH^s(A, M) for A exterior on odd generators, M a symmetric bimodule given by a left module.
/// Computed two ways; CrossCheckError on disagreement.
HochschildResult hochschild_dims(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, int s_max);

/// Hochschild cohomology by normalized cochains; first term signed (-1)^{|a1| t}, right action
/// m.a = (-1)^{|a||m|} a m.
BigradedTable hochschild_cochain_dims(const FiniteAlgebra& a, const AlgebraModule& m, int s_max);

struct DerivationResult {
    GradedVectorSpace dims;        // by map degree
    int exact_from = 0;            // map degrees >= exact_from are unaffected by the cap
};

/// Graded derivations A -> M by map degree.
DerivationResult derivations_dims(const FiniteAlgebra& a, const AlgebraModule& m);

/// Dimensions of the indecomposables Abar / Abar^2 per degree.
GradedVectorSpace indecomposable_dims(const FiniteAlgebra& a);

struct AQResult {
    BigradedTable table;
    ParityVerdict verdict;
    std::vector<std::string> notes;  // hypothesis violations
    nlohmann::json to_json() const;
};

/// Row 0: derivations; row s > 0: HH^{s+1}. A exterior.
AQResult aq_ass_dims(std::shared_ptr<const FiniteAlgebra> a, const AlgebraModule& m, int s_max);

}  // namespace fphom
