#include <set>
#include <sstream>

#include "fphom/free_lie.hpp"

namespace fphom {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens))
{
    if (gens_.empty())
        throw ValidationError("generator list is empty");
    if (gens_.size() > kMaxGenerators)
        throw ValidationError("at most " + std::to_string(kMaxGenerators) + " generators are supported");
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.name.empty())
            throw ValidationError("generator with empty name");
        if (!seen.insert(g.name).second)
            throw ValidationError("duplicate generator name '" + g.name + "'");
        if (g.degree < 1)
            throw ValidationError("generator '" + g.name + "' must have degree >= 1");
    }
}

bool Alphabet::operator==(const Alphabet& o) const
{
    if (gens_.size() != o.gens_.size())
        return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree)
            return false;
    return true;
}

Alphabet Alphabet::from_json(const nlohmann::json& j)
{
    // Accepts {"x": 2, "y": 3}, [{"name": "x", "degree": 2}, ...] or {"generators": ...}.
    const nlohmann::json& g = (j.is_object() && j.contains("generators")) ? j.at("generators") : j;
    std::vector<Generator> out;
    try {
        if (g.is_array()) {
            for (const auto& e : g)
                out.push_back({e.at("name").get<std::string>(), e.at("degree").get<int>()});
        } else if (g.is_object()) {
            for (const auto& [k, v] : g.items())
                out.push_back({k, v.get<int>()});
        } else {
            throw ValidationError("generators must be an object or array");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed generator list: ") + e.what());
    }
    return Alphabet(std::move(out));
}

TensorElement::TensorElement(std::shared_ptr<const Alphabet> alphabet, const PrimeField& f, Grading grading)
    : alphabet_(std::move(alphabet)), f_(f), grading_(grading)
{
    if (!alphabet_)
        throw ValidationError("tensor element without alphabet");
}

TensorElement TensorElement::generator(std::shared_ptr<const Alphabet> alphabet, const PrimeField& f,
                                       std::size_t letter, Grading grading)
{
    if (letter >= alphabet->size())
        throw ValidationError("letter out of range");
    TensorElement e(std::move(alphabet), f, grading);
    e.add_term(Word{static_cast<std::uint8_t>(letter)}, 1);
    return e;
}

TensorElement TensorElement::unit(std::shared_ptr<const Alphabet> alphabet, const PrimeField& f, Grading grading)
{
    TensorElement e(std::move(alphabet), f, grading);
    e.add_term(Word{}, 1);
    return e;
}

std::size_t TensorElement::max_word_length() const
{
    std::size_t m = 0;
    for (const auto& [w, c] : terms_)
        m = std::max(m, w.size());
    return m;
}

void TensorElement::add_term(const Word& w, PrimeField::Elem c)
{
    c = f_.reduce(c);
    if (c == 0)
        return;
    for (auto letter : w)
        if (letter >= alphabet_->size())
            throw ValidationError("word uses a letter outside the alphabet");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second = f_.add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

namespace {

int word_shifted_degree(const Alphabet& a, const Word& w)
{
    int d = 0;
    for (auto l : w)
        d += a.shifted_degree(l);
    return d;
}

}  // namespace

bool TensorElement::is_homogeneous() const
{
    std::optional<int> d;
    for (const auto& [w, c] : terms_) {
        const int dw = word_shifted_degree(*alphabet_, w);
        if (d && *d != dw)
            return false;
        d = dw;
    }
    return true;
}

std::optional<int> TensorElement::shifted_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    if (!is_homogeneous())
        throw DomainError("element is not homogeneous");
    return word_shifted_degree(*alphabet_, terms_.begin()->first);
}

std::optional<int> TensorElement::v_degree() const
{
    auto d = shifted_degree();
    if (!d)
        return d;
    return *d + 1;
}

std::optional<int> TensorElement::degree() const
{
    return grading_ == Grading::v_grading ? v_degree() : shifted_degree();
}

void TensorElement::check_compatible(const TensorElement& o) const
{
    if (!(f_ == o.f_))
        throw ValidationError("tensor elements over different primes");
    if (alphabet_ != o.alphabet_ && !(*alphabet_ == *o.alphabet_))
        throw ValidationError("tensor elements over different alphabets");
    if (grading_ != o.grading_)
        throw ValidationError("tensor elements with different grading flags");
}

TensorElement TensorElement::operator+(const TensorElement& o) const
{
    check_compatible(o);
    TensorElement out(*this);
    for (const auto& [w, c] : o.terms_)
        out.add_term(w, c);
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const
{
    check_compatible(o);
    TensorElement out(*this);
    for (const auto& [w, c] : o.terms_)
        out.add_term(w, f_.neg(c));
    return out;
}

TensorElement TensorElement::scaled(PrimeField::Elem c) const
{
    TensorElement out(alphabet_, f_, grading_);
    for (const auto& [w, v] : terms_)
        out.add_term(w, f_.mul(v, c));
    return out;
}

std::string TensorElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1 || w.empty())
            os << c;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0 || c != 1)
                os << '*';
            os << alphabet_->name(w[i]);
        }
    }
    return os.str();
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b)
{
    TensorElement out = a.scaled(0);
    if (!(a.field() == b.field()) || !(*a.alphabet() == *b.alphabet()) || a.grading() != b.grading())
        throw ValidationError("tensor product of incompatible elements");
    const PrimeField& f = a.field();
    for (const auto& [w1, c1] : a.terms())
        for (const auto& [w2, c2] : b.terms()) {
            Word w(w1);
            w.insert(w.end(), w2.begin(), w2.end());
            out.add_term(w, f.mul(c1, c2));
        }
    return out;
}

TensorElement tensor_pow(const TensorElement& a, int n)
{
    if (n < 0)
        throw ValidationError("negative tensor power");
    TensorElement out = TensorElement::unit(a.alphabet(), a.field(), a.grading());
    for (int i = 0; i < n; ++i)
        out = tensor_mul(out, a);
    return out;
}

TensorElement shifted_bracket(const TensorElement& a, const TensorElement& b)
{
    if (a.is_zero() || b.is_zero())
        return a.scaled(0);
    const int da = *a.shifted_degree();
    const int db = *b.shifted_degree();
    const PrimeField& f = a.field();
    return tensor_mul(a, b) - tensor_mul(b, a).scaled(f.sign(static_cast<long long>(da) * db));
}

TensorElement restriction_power(const TensorElement& a)
{
    const int p = a.field().p();
    if (a.is_zero())
        return a;
    const int d = *a.v_degree();
    if (!xi_admissible(p, d))
        throw DomainError("xi is zero on even degree elements");
    return tensor_pow(a, p);
}

TensorElement iterated_right_bracket(const TensorElement& x, const TensorElement& y, int n)
{
    TensorElement out = x;
    for (int i = 0; i < n; ++i)
        out = shifted_bracket(out, y);
    return out;
}

std::map<Word, PrimeField::Elem> TensorSpan::reduce(const std::map<Word, PrimeField::Elem>& v) const
{
    std::map<Word, PrimeField::Elem> out(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        auto it = out.find(pivots_[k]);
        if (it == out.end())
            continue;
        const PrimeField::Elem factor = f_.neg(it->second);  // rows are normalized to pivot 1
        for (const auto& [w, c] : rows_[k]) {
            auto [jt, inserted] = out.try_emplace(w, 0);
            jt->second = f_.add(jt->second, f_.mul(factor, c));
            if (jt->second == 0)
                out.erase(jt);
        }
    }
    return out;
}

bool TensorSpan::contains(const TensorElement& v) const
{
    return reduce(v.terms()).empty();
}

bool TensorSpan::insert(const TensorElement& v)
{
    auto r = reduce(v.terms());
    if (r.empty())
        return false;
    const Word pivot = r.rbegin()->first;
    const PrimeField::Elem inv = f_.inv(r.rbegin()->second);
    for (auto& [w, c] : r)
        c = f_.mul(c, inv);
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace fphom
