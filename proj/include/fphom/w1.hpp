#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fphom/free_lie.hpp"

namespace fphom {

/// zeta^epsilon xi^i l, a polynomial generator of a free W1-algebra.
struct W1Monomial {
    int epsilon = 0;
    RestrictedSymbol symbol;
    int degree = 0;

    std::string to_string(const Alphabet& a) const;
};

/// Image of zeta: V^i contributes in degree p i - p + 2 for odd i, p odd. Zero at p = 2.
GradedVectorSpace zeta_space(const GradedVectorSpace& v, int p);

/// Series of the free graded-commutative algebra on V (+) zeta V up to cap.
HilbertSeries sym_zeta_dims(const GradedVectorSpace& v, int p, int cap);

/// free: the free W1-algebra on V. abelian: Sym(V) with trivial operations (V even).
enum class W1Mode { free, abelian };

std::vector<W1Monomial> enumerate_w1_monomials(const Alphabet& a, int p, int cap);

/// Number of graded-commutative monomials per degree on generators of the given degrees.
HilbertSeries count_commutative_monomials(const std::vector<int>& generator_degrees, int p, int cap);

/// Counts monomials in W1 generators and cross-checks against sym_zeta_dims of the
/// free restricted Lie algebra (CrossCheckError on disagreement). cap <= 20.
HilbertSeries free_w1_dims(const Alphabet& a, int p, int cap, W1Mode mode = W1Mode::free);

/// Operation values of a W1-algebra on the generators of a commutative algebra,
/// stored as polynomial expressions in those generators.
struct W1StructureTable {
    int p = 2;
    std::vector<Generator> generators;
    std::map<std::string, std::string> xi;
    std::map<std::string, std::string> zeta;
    std::map<std::string, std::string> bracket;  // key "x,y"

    /// Throws ValidationError if a value is malformed or violates the degree rules.
    void validate() const;
    nlohmann::json to_json() const;
    static W1StructureTable from_json(const nlohmann::json& j);

    /// H^*(K(Z/2,2); F_2): generators x_{2^n+1} of degree 2^n + 1 up to cap, linked by xi = Sq_1.
    static W1StructureTable eilenberg_maclane_z2_2(int cap);
};

struct TrivialityOffender {
    std::string generator;
    std::string operation;
    std::string value;
};

struct TrivialityReport {
    bool trivial = true;
    std::vector<TrivialityOffender> offenders;
    nlohmann::json to_json() const;
};

TrivialityReport triviality_check(const W1StructureTable& s);

struct ObstructionReport {
    bool passes = true;
    bool empty = false;
    std::vector<std::pair<int, int>> odd_support;      // (s, t) with s + t odd
    std::vector<std::pair<int, int>> obstruction_line;  // support on t = s - 1
    std::vector<std::string> implication_chain;
    nlohmann::json to_json() const;
};

/// Passes iff the table has no support with s + t odd.
ObstructionReport obstruction_line_vanishes(const BigradedTable& t);

}  // namespace fphom
