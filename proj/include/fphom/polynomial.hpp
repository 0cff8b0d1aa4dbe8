#pragma once

#include <map>
#include <string>
#include <vector>

#include "fphom/field.hpp"

namespace fphom {

using Exponents = std::vector<int>;

/// Commutative polynomial over F_p in a fixed list of named variables.
/// Sign rules for odd variables are the caller's business.
class Polynomial {
public:
    Polynomial(const PrimeField& f, std::size_t nvars) : f_(f), nvars_(nvars) {}

    static Polynomial constant(const PrimeField& f, std::size_t nvars, long long c);
    static Polynomial variable(const PrimeField& f, std::size_t nvars, std::size_t i);

    const PrimeField& field() const { return f_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, PrimeField::Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, PrimeField::Elem c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(PrimeField::Elem c) const;
    Polynomial pow(int e) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// Weighted degrees of the terms, given a degree per variable.
    std::vector<int> term_degrees(const std::vector<int>& var_degrees) const;
    /// True when every term has degree exactly `d`.
    bool is_homogeneous(const std::vector<int>& var_degrees, int d) const;
    /// Substitute polynomials (over a possibly different variable set) for the variables.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    PrimeField f_;
    std::size_t nvars_;
    std::map<Exponents, PrimeField::Elem> terms_;
};

/// Parses expressions like "2*x^2*y - z + 1" or "x2·x3" over the given variable names.
/// Unknown names raise ValidationError.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                            const PrimeField& f);

}  // namespace fphom
