#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fphom/graded.hpp"
#include "fphom/polynomial.hpp"

namespace fphom {

enum class AlgebraKind {
    polynomial,
    exterior,
    mixed,
    truncated,
    stanley_reisner,
    degreewise_subring,
    degreewise_quotient
};

std::string to_string(AlgebraKind k);
AlgebraKind algebra_kind_from_string(const std::string& s);

struct AlgebraGenerator {
    std::string name;
    int degree = 1;
    int height = 0;  // x^height = 0; 0 means no truncation
};

/// Graded-commutative algebra on generators with monomial relations:
/// truncations x^h = 0 and (Stanley-Reisner) vanishing of monomials whose support is not a face.
/// Odd generators at odd p always have height 2.
class MonomialAlgebra {
public:
    MonomialAlgebra(int p, AlgebraKind kind, std::vector<AlgebraGenerator> gens,
                    std::optional<std::vector<std::vector<std::size_t>>> facets = std::nullopt);

    static MonomialAlgebra polynomial(int p, const std::vector<std::pair<std::string, int>>& gens);
    static MonomialAlgebra exterior(int p, const std::vector<std::pair<std::string, int>>& gens);
    /// Exterior on odd generators, polynomial on even ones (at p = 2 odd generators stay polynomial).
    static MonomialAlgebra mixed(int p, const std::vector<std::pair<std::string, int>>& gens);
    static MonomialAlgebra stanley_reisner(int p, const std::vector<std::pair<std::string, int>>& gens,
                                           const std::vector<std::vector<std::size_t>>& facets);

    int p() const { return p_; }
    AlgebraKind kind() const { return kind_; }
    const std::vector<AlgebraGenerator>& generators() const { return gens_; }
    std::size_t ngens() const { return gens_.size(); }
    const std::optional<std::vector<std::vector<std::size_t>>>& facets() const { return facets_; }
    std::vector<std::string> names() const;
    std::vector<int> degrees() const;
    bool is_finite() const;

    bool is_basis_monomial(const Exponents& e) const;
    int degree(const Exponents& e) const;
    /// Basis monomials of the given degree, in a fixed order.
    std::vector<Exponents> basis(int degree) const;
    GradedVectorSpace dims(int cap) const;
    /// x^a x^b = sign * x^{a+b}, or nullopt when the product vanishes.
    std::optional<std::pair<PrimeField::Elem, Exponents>> multiply(const Exponents& a, const Exponents& b) const;

    nlohmann::json to_json() const;

private:
    int p_;
    AlgebraKind kind_;
    std::vector<AlgebraGenerator> gens_;
    std::optional<std::vector<std::vector<std::size_t>>> facets_;
};

/// Connected graded algebra truncated above `cap`, given by a basis per degree and
/// structure constants. Products landing above cap are dropped.
class FiniteAlgebra {
public:
    struct Gen {
        std::string name;
        int degree;
        Vec value;
    };

    FiniteAlgebra(const PrimeField& f, int cap);

    static FiniteAlgebra from_monomial(const MonomialAlgebra& a, int cap);
    /// Parses a presentation; kinds degreewise_subring / degreewise_quotient refer to an "ambient" algebra.
    static FiniteAlgebra from_json(const nlohmann::json& j, int p, int cap);

    const PrimeField& field() const { return f_; }
    int cap() const { return cap_; }
    const GradedVectorSpace& dims() const { return dims_; }
    int dim(int d) const { return dims_.dim(d); }
    int top_degree() const { return *dims_.max_degree(); }
    const std::vector<Gen>& generators() const { return gens_; }
    const std::vector<std::string>& labels(int d) const;
    const std::optional<MonomialAlgebra>& monomial() const { return monomial_; }
    /// True when every degree up to the top one is stored (no truncation loss).
    bool is_complete() const { return complete_; }

    /// Product of basis vectors a (degree i) and b (degree j); zero vector of degree i+j when above cap.
    Vec multiply(int i, const Vec& a, int j, const Vec& b) const;
    Vec basis_product(int i, std::size_t a, int j, std::size_t b) const;
    /// Matrix of left multiplication by `a` (degree i) from degree j to degree i + j.
    Matrix left_mult(int i, const Vec& a, int j) const;

    /// Evaluate a polynomial in the generators; throws when it is not homogeneous.
    std::pair<int, Vec> evaluate(const Polynomial& poly) const;
    Vec unit() const { return Vec{1}; }

    bool is_associative() const;
    bool is_graded_commutative() const;

    /// Subalgebra generated by homogeneous elements.
    FiniteAlgebra subring(const std::vector<Gen>& gens) const;
    /// Quotient by the ideal generated by homogeneous elements.
    FiniteAlgebra quotient(const std::vector<Vec>& ideal_gens, const std::vector<int>& degrees) const;

    void set_basis_product(int i, std::size_t a, int j, std::size_t b, Vec v);
    void add_degree(int d, std::vector<std::string> labels);
    void set_generators(std::vector<Gen> gens) { gens_ = std::move(gens); }

private:
    PrimeField f_;
    int cap_;
    GradedVectorSpace dims_;
    std::map<int, std::vector<std::string>> labels_;
    // products[{i,j}][a * dim(j) + b]
    std::map<std::pair<int, int>, std::vector<Vec>> products_;
    std::vector<Gen> gens_;
    std::optional<MonomialAlgebra> monomial_;
    bool complete_ = true;
};

/// Graded left module over a FiniteAlgebra; stores the action of every basis element.
class AlgebraModule {
public:
    AlgebraModule(std::shared_ptr<const FiniteAlgebra> a, GradedVectorSpace space);

    /// Positive degrees act by zero.
    static AlgebraModule trivial(std::shared_ptr<const FiniteAlgebra> a, GradedVectorSpace space);
    /// The algebra acting on itself.
    static AlgebraModule regular(std::shared_ptr<const FiniteAlgebra> a);
    /// Generators act by the given maps; the action of other basis elements is derived from words
    /// in the generators. Throws ValidationError if the action is not associative/unital.
    static AlgebraModule from_generator_actions(std::shared_ptr<const FiniteAlgebra> a, GradedVectorSpace space,
                                                const std::vector<GradedMap>& actions);
    /// B as an A-module through the algebra map sending A's generators to the given elements of B.
    static AlgebraModule via_map(std::shared_ptr<const FiniteAlgebra> a, const FiniteAlgebra& b,
                                 const std::vector<Vec>& images);

    const FiniteAlgebra& algebra() const { return *a_; }
    const std::shared_ptr<const FiniteAlgebra>& algebra_ptr() const { return a_; }
    const GradedVectorSpace& space() const { return space_; }
    bool is_trivial() const;

    /// Matrix of the basis element (i, a) acting from module degree m to m + i.
    Matrix act(int i, std::size_t a, int m) const;
    /// Action of an arbitrary degree-i element.
    Matrix act_element(int i, const Vec& a, int m) const;

    /// Throws ValidationError on failure.
    void validate() const;

private:
    std::shared_ptr<const FiniteAlgebra> a_;
    GradedVectorSpace space_;
    std::map<std::pair<int, std::size_t>, std::map<int, Matrix>> act_;  // (i, a) -> m -> matrix
};

/// Matrix form of the algebra map `from` -> `to` sending the generators of `from` to `images`.
GradedMap algebra_map_matrix(std::shared_ptr<const FiniteAlgebra> from, const FiniteAlgebra& to,
                             const std::vector<Vec>& images);

}  // namespace fphom
