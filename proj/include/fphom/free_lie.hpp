#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fphom/graded.hpp"

namespace fphom {

/// Element of V with its cohomological degree (>= 1).
struct Generator {
    std::string name;
    int degree = 1;
};

inline constexpr std::size_t kMaxGenerators = 4;
inline constexpr int kMaxWordLength = 10;
inline constexpr int kMaxLieCap = 20;

/// Ordered generator list; letter i is generators()[i].
class Alphabet {
public:
    explicit Alphabet(std::vector<Generator> gens);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    int degree(std::size_t letter) const { return gens_.at(letter).degree; }
    /// Degree in the desuspension s^{-1}V.
    int shifted_degree(std::size_t letter) const { return gens_.at(letter).degree - 1; }
    const std::string& name(std::size_t letter) const { return gens_.at(letter).name; }
    bool operator==(const Alphabet& o) const;

    static Alphabet from_json(const nlohmann::json& j);

private:
    std::vector<Generator> gens_;
};

using Word = std::vector<std::uint8_t>;

/// Which grading degree() reports. Words are always graded by the desuspended degrees
/// internally; the V-degree of a Lie element is that plus one.
enum class Grading { v_grading, shifted };

/// F_p-linear combination of words in the tensor algebra T(s^{-1}V).
class TensorElement {
public:
    TensorElement(std::shared_ptr<const Alphabet> alphabet, const PrimeField& f,
                  Grading grading = Grading::v_grading);

    static TensorElement generator(std::shared_ptr<const Alphabet> alphabet, const PrimeField& f,
                                   std::size_t letter, Grading grading = Grading::v_grading);
    static TensorElement unit(std::shared_ptr<const Alphabet> alphabet, const PrimeField& f,
                              Grading grading = Grading::v_grading);

    const std::shared_ptr<const Alphabet>& alphabet() const { return alphabet_; }
    const PrimeField& field() const { return f_; }
    Grading grading() const { return grading_; }
    const std::map<Word, PrimeField::Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t max_word_length() const;

    void add_term(const Word& w, PrimeField::Elem c);

    bool is_homogeneous() const;
    /// Desuspended degree; throws DomainError on inhomogeneous input, nullopt for zero.
    std::optional<int> shifted_degree() const;
    /// Degree under the element's grading flag.
    std::optional<int> degree() const;
    std::optional<int> v_degree() const;

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(PrimeField::Elem c) const;
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void check_compatible(const TensorElement& o) const;

    std::shared_ptr<const Alphabet> alphabet_;
    PrimeField f_;
    Grading grading_;
    std::map<Word, PrimeField::Elem> terms_;
};

/// Concatenation product; unit is the empty word.
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
/// a^n in the tensor algebra.
TensorElement tensor_pow(const TensorElement& a, int n);
/// ab - (-1)^{(|a|-1)(|b|-1)} ba; lands in V-degree |a| + |b| - 1.
TensorElement shifted_bracket(const TensorElement& a, const TensorElement& b);
/// The restriction xi realized as a^p. Throws DomainError when p is odd and |a| is even.
TensorElement restriction_power(const TensorElement& a);
/// [[...[x, y], y], ..., y] with n copies of y.
TensorElement iterated_right_bracket(const TensorElement& x, const TensorElement& y, int n);

/// Sparse echelon basis of a subspace of the tensor algebra.
class TensorSpan {
public:
    explicit TensorSpan(const PrimeField& f) : f_(f) {}
    /// Returns true if v was independent of the current span (and adds it).
    bool insert(const TensorElement& v);
    bool contains(const TensorElement& v) const;
    std::size_t dim() const { return rows_.size(); }

private:
    std::map<Word, PrimeField::Elem> reduce(const std::map<Word, PrimeField::Elem>& v) const;

    PrimeField f_;
    std::vector<std::map<Word, PrimeField::Elem>> rows_;
    std::vector<Word> pivots_;
};

// ---------------------------------------------------------------- Lie bases

/// A Lyndon word with its standard bracketing, or the self-bracket [b_w, b_w] of one.
struct LieSymbol {
    Word word;                // Lyndon word w (for self-brackets, the w in [b_w, b_w])
    bool self_bracket = false;
    int weight = 0;           // tensor length
    int v_degree = 0;

    std::string bracketing(const Alphabet& a) const;
};

struct LyndonBasisElement {
    LieSymbol symbol;
    std::string bracketing;
    std::optional<TensorElement> expansion;  // present when weight <= kMaxWordLength
};

/// Lyndon words with V-degree <= degree_cap and length <= weight_cap, plus the
/// self-brackets of those of even V-degree when p is odd. Enumeration only, no tensors.
std::vector<LieSymbol> enumerate_lie_symbols(const Alphabet& a, int p, int weight_cap, int degree_cap);

/// True when Lyndon word w is strictly smaller than each proper rotation.
bool is_lyndon(const Word& w);
/// Right factor of the standard factorization (longest proper Lyndon suffix).
std::size_t standard_split(const Word& w);

struct LyndonBasis {
    std::vector<LyndonBasisElement> elements;
    GradedVectorSpace dims;
    /// Counts of elements with a tensor expansion, and the rank of those expansions.
    GradedVectorSpace realized_dims;
    GradedVectorSpace independent_dims;
    bool independent() const { return realized_dims == independent_dims; }
    bool fully_realized() const { return realized_dims == dims; }
};

/// Lyndon basis with caps <= 20. Elements of weight <= 10 are expanded in the tensor algebra.
LyndonBasis lyndon_basis(std::shared_ptr<const Alphabet> a, const PrimeField& f, int weight_cap, int degree_cap);

/// Span of all iterated brackets of generators (and p-th powers when restricted), by V-degree.
/// Weight is capped at weight_cap, degree at degree_cap.
GradedVectorSpace bracket_closure_dims(std::shared_ptr<const Alphabet> a, const PrimeField& f, int degree_cap,
                                       int weight_cap = kMaxWordLength);
GradedVectorSpace restricted_closure_dims(std::shared_ptr<const Alphabet> a, const PrimeField& f,
                                          int degree_cap, int weight_cap = kMaxWordLength);

/// xi^i applied to a Lie symbol.
struct RestrictedSymbol {
    LieSymbol lie;
    int xi_power = 0;
    int weight = 0;
    int v_degree = 0;

    std::string to_string(const Alphabet& a) const;
};

/// d -> p d - p + 1
inline int xi_degree(int p, int d) { return p * d - p + 1; }
/// d -> p d - p + 2
inline int zeta_degree(int p, int d) { return p * d - p + 2; }
/// xi is defined on V-degree d (zero on even degrees for odd p).
inline bool xi_admissible(int p, int d) { return p == 2 || d % 2 != 0; }

/// Symbols xi^i l with V-degree <= degree_cap and weight l.weight * p^i <= weight_cap.
std::vector<RestrictedSymbol> enumerate_restricted_symbols(const Alphabet& a, int p, int weight_cap,
                                                           int degree_cap);
GradedVectorSpace symbol_dims(const std::vector<RestrictedSymbol>& symbols);

struct RestrictedBasisElement {
    RestrictedSymbol symbol;
    std::optional<TensorElement> realization;  // present when weight <= kMaxWordLength
};

struct RestrictedBasis {
    std::vector<RestrictedBasisElement> elements;
    GradedVectorSpace dims;
    GradedVectorSpace realized_dims;
    GradedVectorSpace independent_dims;
    bool independent() const { return realized_dims == independent_dims; }
    bool fully_realized() const { return realized_dims == dims; }
};

/// weight_cap may exceed kMaxWordLength; longer symbols are counted but not realized.
RestrictedBasis restricted_basis(std::shared_ptr<const Alphabet> a, const PrimeField& f, int degree_cap,
                                 int weight_cap = kMaxWordLength);

// ---------------------------------------------------------------- axioms

struct AxiomResult {
    std::string axiom;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    std::vector<std::string> witnesses;  // counterexamples and skip reasons (first few)
};

struct AxiomReport {
    int p = 0;
    std::vector<AxiomResult> results;
    bool all_passed() const;
    const AxiomResult& result(const std::string& axiom) const;
    nlohmann::json to_json() const;
};

/// Randomized verification of antisymmetry, graded Jacobi, [x,[x,x]] = 0,
/// [x, xi y] = ad^p(y)(x) and (p = 2) xi(x+y) = xi(x) + xi(y) + [x,y]
/// on homogeneous tensor elements.
AxiomReport check_axioms(std::shared_ptr<const Alphabet> a, const PrimeField& f, int degree_cap, int trials,
                         unsigned seed);

}  // namespace fphom
