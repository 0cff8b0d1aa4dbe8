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

// ---------------------------------------------------------------- group actions

/// Finite matrix group acting on a graded space V with basis x_0, ..., x_{n-1}.
/// Column j of a matrix is the image of x_j; matrices must preserve degrees.
class GroupAction {
public:
    static constexpr std::size_t kMaxOrder = 10000;

    GroupAction(int p, std::vector<int> degrees, std::vector<Matrix> generators);
    /// {"p":3, "matrices":[[[...]]], "degrees":[2,2], "names":["x","y"]}; "p" optional when given.
    static GroupAction from_json(const nlohmann::json& j, std::optional<int> p = std::nullopt);

    int p() const { return f_.p(); }
    const PrimeField& field() const { return f_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<std::string>& names() const { return names_; }
    void set_names(std::vector<std::string> names);
    const std::vector<Matrix>& generators() const { return gens_; }
    /// Size of the generated group (closure; ValidationError above kMaxOrder).
    std::size_t order() const;

private:
    PrimeField f_;
    std::vector<int> degrees_;
    std::vector<std::string> names_;
    std::vector<Matrix> gens_;
};

struct InvariantResult {
    GradedVectorSpace dims;
    std::shared_ptr<const FiniteAlgebra> ambient;  // Sym(V) truncated at cap
    std::map<int, Matrix> basis;                   // columns span the invariants in ambient degree d
    nlohmann::json to_json() const;
};

/// Fixed points of the induced action on Sym(V), degreewise up to cap.
InvariantResult invariant_dims(const GroupAction& action, int cap);

struct PolynomialCheck {
    enum class Status { polynomial_up_to_cap, not_polynomial };
    Status status = Status::polynomial_up_to_cap;
    GradedVectorSpace generators;  // minimal generator degrees found up to cap
    int witness_degree = -1;       // first degree where the invariants fall short of the free count
    long long witness_dim = 0;
    long long free_dim = 0;
    std::string to_string() const;
};

/// Greedy minimal generators of a subring given degreewise, compared with the free series on them.
PolynomialCheck polynomial_semidecision(const InvariantResult& inv, int cap);

struct FormalityChecklist {
    std::size_t group_order = 0;
    bool p_divides_order = false;
    InvariantResult invariants;
    PolynomialCheck polynomial;
    bool criteria_satisfied = false;  // only requires p not dividing the order
    nlohmann::json to_json() const;
};

FormalityChecklist lie_formality_checklist(const GroupAction& action, int cap);

// ---------------------------------------------------------------- Stanley-Reisner

struct StanleyReisnerResult {
    GradedVectorSpace monomial_count;
    GradedVectorSpace categorical_limit;
    nlohmann::json to_json() const;
};

/// Face-ring dimensions computed by monomial counting and as a limit over the face poset.
/// CrossCheckError on mismatch.
StanleyReisnerResult stanley_reisner_dims(const nlohmann::json& complex, int p, int vertex_degree, int cap);

// ---------------------------------------------------------------- Eilenberg-Moore

/// Polynomial algebras on even generators with algebra maps B -> X and B -> Y given on generators.
struct EMSSInput {
    int p = 2;
    std::vector<std::pair<std::string, int>> base, x, y;
    std::vector<std::string> to_x, to_y;  // polynomial images of the base generators

    /// {"p":2,"base":{"generators":[...]},"x":{...},"y":{...},"maps":{"to_x":{"c1":"t"},"to_y":{...}}}.
    /// "y" defaults to the ground field; missing images are zero.
    static EMSSInput from_json(const nlohmann::json& j, std::optional<int> p = std::nullopt);
    /// Base F_p[c_1..c_n] (|c_i| = 2i), X = F_p[t] (|t| = 2), Y = F_p, c_i -> C(n,i) t^i.
    static EMSSInput projective_unitary(int n, int p);
    nlohmann::json to_json() const;
};

struct EMSSHypothesisReport {
    struct Side {
        bool surjective = true;
        int first_failure = -1;  // degree where surjectivity fails
        bool linear = true;      // generators go to linear combinations of generators
        std::string nonlinear_generator;
    };
    Side x, y;
    bool holds() const { return x.surjective && y.surjective && x.linear && y.linear; }
    bool surjectivity_holds() const { return x.surjective && y.surjective; }
    nlohmann::json to_json() const;
};

EMSSHypothesisReport emss_hypothesis_check(const EMSSInput& in, int cap);

struct TorAlgebra {
    BigradedTable table;  // (s, internal degree t)
    GradedVectorSpace totals;
    struct Class {
        int s, t;
        std::string label;
    };
    std::vector<Class> classes;
    /// Product coordinates in the class basis, for pairs whose internal degrees add up to at most cap.
    std::map<std::pair<std::size_t, std::size_t>, Vec> products;
    std::vector<bool> square_zero;  // per class, when the square lies within the cap
    std::vector<bool> square_known;
    nlohmann::json to_json() const;
};

/// Homology of the Koszul dga H_X (x) Lambda(u) (x) H_Y, internal degrees <= cap.
TorAlgebra emss_tor_algebra(const EMSSInput& in, int cap);

// ---------------------------------------------------------------- loop spaces

struct LoopResult {
    GradedVectorSpace koszul;    // total degrees of Tor over Sym(V)
    GradedVectorSpace bar;       // total degrees of bar homology
    GradedVectorSpace exterior;  // series of the exterior algebra on the desuspension of V
    int primitives = 0;
    nlohmann::json to_json() const;
};

/// Cohomology of the loop space of a space with polynomial cohomology on V (even, positive),
/// total degrees <= cap. CrossCheckError if the three computations disagree.
LoopResult loop_cohomology_dims(const GradedVectorSpace& v, int p, int cap);

}  // namespace fphom
