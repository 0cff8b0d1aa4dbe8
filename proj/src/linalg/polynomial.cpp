#include "fphom/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fphom {

Polynomial Polynomial::constant(const PrimeField& f, std::size_t nvars, long long c)
{
    Polynomial out(f, nvars);
    out.add_term(Exponents(nvars, 0), f.reduce(c));
    return out;
}

Polynomial Polynomial::variable(const PrimeField& f, std::size_t nvars, std::size_t i)
{
    Polynomial out(f, nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    out.add_term(e, 1);
    return out;
}

void Polynomial::add_term(const Exponents& e, PrimeField::Elem c)
{
    if (e.size() != nvars_)
        throw std::invalid_argument("polynomial term has wrong number of exponents");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = f_.add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial out(*this);
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial out(*this);
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, f_.neg(c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("polynomial product over different variable sets");
    Polynomial out(f_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1);
            for (std::size_t i = 0; i < nvars_; ++i)
                e[i] += e2[i];
            out.add_term(e, f_.mul(c1, c2));
        }
    return out;
}

Polynomial Polynomial::scaled(PrimeField::Elem c) const
{
    Polynomial out(f_, nvars_);
    for (const auto& [e, v] : terms_)
        out.add_term(e, f_.mul(v, c));
    return out;
}

Polynomial Polynomial::pow(int e) const
{
    Polynomial out = constant(f_, nvars_, 1);
    for (int i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

std::vector<int> Polynomial::term_degrees(const std::vector<int>& var_degrees) const
{
    std::vector<int> out;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            d += e[i] * var_degrees.at(i);
        out.push_back(d);
    }
    return out;
}

bool Polynomial::is_homogeneous(const std::vector<int>& var_degrees, int d) const
{
    const auto degs = term_degrees(var_degrees);
    return std::all_of(degs.begin(), degs.end(), [d](int x) { return x == d; });
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (images.size() != nvars_)
        throw std::invalid_argument("substitution needs one image per variable");
    if (images.empty())
        throw std::invalid_argument("substitution into a polynomial without variables");
    const std::size_t target_vars = images.front().nvars();
    Polynomial out(f_, target_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(f_, target_vars, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0)
                term = term * images[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first)
            os << " + ";
        first = false;
        bool any = false;
        if (c != 1) {
            os << c;
            any = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (any)
                os << '*';
            os << names.at(i);
            if (e[i] > 1)
                os << '^' << e[i];
            any = true;
        }
        if (!any)
            os << '1';
    }
    return os.str();
}

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& names, const PrimeField& f)
        : s_(text), names_(names), f_(f)
    {
    }

    Polynomial parse()
    {
        Polynomial out = parse_sum();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected character");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ValidationError("polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat_times()
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            return true;
        }
        // UTF-8 middle dot
        if (s_.compare(pos_, 2, "\xC2\xB7") == 0) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    Polynomial parse_sum()
    {
        Polynomial acc(f_, names_.size());
        bool negate = false;
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        for (;;) {
            Polynomial t = parse_product();
            acc = negate ? acc - t : acc + t;
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                negate = s_[pos_] == '-';
                ++pos_;
                continue;
            }
            return acc;
        }
    }

    Polynomial parse_product()
    {
        Polynomial acc = parse_power();
        for (;;) {
            const std::size_t save = pos_;
            if (eat_times()) {
                acc = acc * parse_power();
                continue;
            }
            // Juxtaposition of a coefficient and a name ("2x") or parenthesis.
            skip_ws();
            if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                     s_[pos_] == '_')) {
                acc = acc * parse_power();
                continue;
            }
            pos_ = save;
            return acc;
        }
    }

    Polynomial parse_power()
    {
        Polynomial base = parse_atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            const long long e = parse_int();
            if (e < 0 || e > 1000)
                fail("exponent out of range");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    long long parse_int()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Polynomial parse_atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_sum();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(f_, names_.size(), parse_int());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end())
                fail("unknown variable '" + name + "'");
            return Polynomial::variable(f_, names_.size(), static_cast<std::size_t>(it - names_.begin()));
        }
        fail("unexpected character");
    }

    std::string s_;
    const std::vector<std::string>& names_;
    PrimeField f_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names, const PrimeField& f)
{
    return ExprParser(text, names, f).parse();
}

}  // namespace fphom
