#include "fphom/field.hpp"

namespace fphom {

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(int p) : p_(p)
{
    if (p < 2 || p > 97 || !is_prime(p))
        throw ValidationError("characteristic must be a prime in [2, 97], got " + std::to_string(p));
}

PrimeField::Elem PrimeField::pow(Elem a, long long e) const
{
    Elem result = 1 % p_;
    Elem base = a % p_;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const
{
    if (a % p_ == 0)
        throw DomainError("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

}  // namespace fphom
