#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fphom {

/// Input rejected before any computation starts (maps to CLI exit code 2).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation applied outside its domain, e.g. a restriction on the wrong parity.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A request reaches beyond the degree or homological window that was stored.
class TruncationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Two independent computations of the same quantity disagree (CLI exit code 3).
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(int n);

/// The prime field F_p, 2 <= p <= 97. Elements are stored as integers in [0, p).
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(int p);

    int p() const { return p_; }
    int characteristic() const { return p_; }

    Elem reduce(long long v) const
    {
        long long r = v % p_;
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    Elem add(Elem a, Elem b) const { return static_cast<Elem>((a + b) % p_); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((a + p_ - b) % p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(p_ - a); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((a * b) % p_); }
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long e) const;
    /// (-1)^e as a field element.
    Elem sign(long long e) const { return (e % 2 == 0) ? 1 : neg(1); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    int p_;
};

}  // namespace fphom
