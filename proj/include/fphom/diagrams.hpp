#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fphom/algebra.hpp"
#include "fphom/graded.hpp"

namespace fphom {

/// How parallel paths of generating arrows are identified.
enum class CompositionMode {
    poset,  // at most one morphism between two objects
    free    // every path of generating arrows is its own morphism
};

struct CategoryObject {
    std::string id;
    int lambda = 0;
};

struct CategoryArrow {
    std::string id;
    std::size_t src = 0;
    std::size_t dst = 0;
};

/// Non-identity morphism: a representative path of generating arrows.
struct Morphism {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::vector<std::size_t> path;
};

struct CategoryReport {
    bool valid = true;
    std::vector<std::string> violations;
    nlohmann::json to_json() const;
};

/// Finite category generated by arrows, with a degree function lambda that must strictly
/// increase along every non-identity arrow.
class DirectCategory {
public:
    DirectCategory(std::vector<CategoryObject> objects, std::vector<CategoryArrow> arrows,
                   CompositionMode mode = CompositionMode::poset);

    /// {"objects":[{"id","lambda"}],"arrows":[{"src","dst","id"}],"composition":"poset"|"free"}
    static DirectCategory from_json(const nlohmann::json& j);
    /// Face poset of a simplicial complex {"vertices":[...],"facets":[[...]]}, empty face included,
    /// lambda = dimension + 1.
    static DirectCategory face_poset(const nlohmann::json& complex);

    const std::vector<CategoryObject>& objects() const { return objects_; }
    const std::vector<CategoryArrow>& arrows() const { return arrows_; }
    CompositionMode mode() const { return mode_; }
    std::size_t object_index(const std::string& id) const;

    /// Checks lambda and finiteness; never throws.
    CategoryReport validate() const;
    /// Throws ValidationError carrying the first violation.
    void require_valid() const;

    /// All non-identity morphisms (requires a valid category).
    const std::vector<Morphism>& morphisms() const;
    /// Indices of morphisms from a to b.
    std::vector<std::size_t> hom(std::size_t a, std::size_t b) const;
    /// Morphism index of f after g, for g: a -> b and f: b -> c.
    std::size_t compose(std::size_t g, std::size_t f) const;

    /// Nondegenerate chains i_0 -> ... -> i_s as lists of s composable morphisms; s = 0 gives objects.
    struct Chain {
        std::vector<std::size_t> objects;
        std::vector<std::size_t> arrows;  // morphism indices, size objects.size() - 1
    };
    std::vector<Chain> chains(int s) const;

    nlohmann::json to_json() const;

private:
    std::vector<CategoryObject> objects_;
    std::vector<CategoryArrow> arrows_;
    CompositionMode mode_;
    mutable std::optional<std::vector<Morphism>> morphisms_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> hom_;
};

/// Contravariant diagram on a direct category: for an arrow i -> j a degree-0 map F(j) -> F(i).
/// Values may carry algebra structure (maps are then algebra maps).
class Diagram {
public:
    Diagram(std::shared_ptr<const DirectCategory> base, const PrimeField& f, std::vector<GradedVectorSpace> values,
            std::vector<GradedMap> maps);

    /// {"objects","arrows","values":{id: space or algebra},"maps":{arrow id: ...}}. Space maps are
    /// {"degree": [[row], ...]} blocks; algebra maps send generator names of F(dst) to polynomials in F(src).
    static Diagram from_json(const nlohmann::json& j, int p, int cap);
    /// sigma -> F_p[v : v in sigma] with restriction maps; vertex generators of the given degree.
    static Diagram stanley_reisner_diagram(const nlohmann::json& complex, int p, int cap, int vertex_degree = 2);

    const DirectCategory& base() const { return *base_; }
    std::shared_ptr<const DirectCategory> base_ptr() const { return base_; }
    const PrimeField& field() const { return f_; }
    const GradedVectorSpace& value(std::size_t i) const { return values_.at(i); }
    const GradedMap& arrow_map(std::size_t arrow) const { return maps_.at(arrow); }
    /// F(dst) -> F(src) for a morphism.
    GradedMap morphism_map(std::size_t morphism) const;
    const FiniteAlgebra* algebra(std::size_t i) const;
    void set_algebras(std::vector<std::shared_ptr<const FiniteAlgebra>> algebras);

    /// Parallel paths induce equal maps; sources/targets match the values.
    void validate() const;

private:
    std::shared_ptr<const DirectCategory> base_;
    PrimeField f_;
    std::vector<GradedVectorSpace> values_;
    std::vector<GradedMap> maps_;
    std::vector<std::shared_ptr<const FiniteAlgebra>> algebras_;
    mutable std::map<std::size_t, GradedMap> morphism_cache_;
};

/// Degreewise limit, degrees <= cap.
GradedVectorSpace limit_dims(const Diagram& d, int cap);

/// The limit as a subalgebra of the product, when every value is an algebra.
FiniteAlgebra limit_algebra(const Diagram& d, int cap);

struct InjectivityReport {
    bool injective = true;
    struct Failure {
        std::string object;
        int degree = 0;
        int value_rank = 0;   // rank of F(i) -> matching limit
        int matching_dim = 0;
    };
    std::vector<Failure> failures;
    nlohmann::json to_json() const;
};

/// F(i) -> lim over non-identity arrows j -> i of F(j) is surjective for every i, degrees <= cap.
InjectivityReport injective_by_criterion(const Diagram& d, int cap);

/// Derived limits by cosimplicial replacement over nondegenerate chains; degrees <= cap.
BigradedTable derived_lim_dims(const Diagram& d, int cap);

struct DiagramAQResult {
    std::map<int, BigradedTable> by_q;  // AQ degree q -> (s, t)
    bool coefficients_injective = false;
    bool concentrated = true;           // every q-slice supported in s = 0
    std::vector<std::string> notes;
    nlohmann::json to_json() const;
};

/// AQ of the objectwise exterior algebra on V with coefficients in M, assembled over the base:
/// the q-slice is the cohomology of prod over chains i_0 -> ... -> i_s of AQ^q(A(i_s), M(i_0)),
/// with AQ^q(A, M) = Sym^n(V^dual) (x) M, n = 1 for q = 0 and q + 1 otherwise.
/// Throws CrossCheckError if M passes the injectivity criterion but some slice has s > 0 support.
DiagramAQResult diagram_aq_table(const Diagram& v, const Diagram& m, int s_max, int q_max);

}  // namespace fphom
