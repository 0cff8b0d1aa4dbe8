#include <functional>

#include "fphom/free_lie.hpp"

namespace fphom {

namespace {

constexpr std::size_t kMaxEnumerated = 5'000'000;

std::string bracket_string(const Alphabet& a, const Word& w)
{
    if (w.size() == 1)
        return a.name(w[0]);
    const std::size_t k = standard_split(w);
    return "[" + bracket_string(a, Word(w.begin(), w.begin() + static_cast<long>(k))) + "," +
           bracket_string(a, Word(w.begin() + static_cast<long>(k), w.end())) + "]";
}

class ExpansionCache {
public:
    ExpansionCache(std::shared_ptr<const Alphabet> a, const PrimeField& f) : a_(std::move(a)), f_(f) {}

    const TensorElement& get(const Word& w)
    {
        auto it = cache_.find(w);
        if (it != cache_.end())
            return it->second;
        TensorElement e(a_, f_);
        if (w.size() == 1) {
            e = TensorElement::generator(a_, f_, w[0]);
        } else {
            const std::size_t k = standard_split(w);
            const Word u(w.begin(), w.begin() + static_cast<long>(k));
            const Word v(w.begin() + static_cast<long>(k), w.end());
            e = shifted_bracket(get(u), get(v));
        }
        return cache_.emplace(w, std::move(e)).first->second;
    }

    TensorElement expand(const LieSymbol& s)
    {
        const TensorElement& b = get(s.word);
        return s.self_bracket ? shifted_bracket(b, b) : b;
    }

private:
    std::shared_ptr<const Alphabet> a_;
    PrimeField f_;
    std::map<Word, TensorElement> cache_;
};

void check_basis_caps(int weight_cap, int degree_cap)
{
    if (weight_cap < 1 || weight_cap > kMaxLieCap * 4)
        throw ValidationError("word length cap out of range");
    if (degree_cap < 1 || degree_cap > kMaxLieCap)
        throw ValidationError("degree cap overflow: must be in [1, " + std::to_string(kMaxLieCap) + "]");
}

void check_caps(int weight_cap, int degree_cap)
{
    if (weight_cap < 1 || weight_cap > kMaxWordLength)
        throw ValidationError("word length cap must be in [1, " + std::to_string(kMaxWordLength) + "]");
    if (degree_cap < 1 || degree_cap > kMaxLieCap)
        throw ValidationError("degree cap overflow: must be in [1, " + std::to_string(kMaxLieCap) + "]");
}

}  // namespace

bool is_lyndon(const Word& w)
{
    if (w.empty())
        return false;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word rot(w.begin() + static_cast<long>(k), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(k));
        if (!(w < rot))
            return false;
    }
    return true;
}

std::size_t standard_split(const Word& w)
{
    for (std::size_t k = 1; k < w.size(); ++k)
        if (is_lyndon(Word(w.begin() + static_cast<long>(k), w.end())))
            return k;
    throw ValidationError("word of length < 2 has no standard factorization");
}

std::string LieSymbol::bracketing(const Alphabet& a) const
{
    const std::string b = bracket_string(a, word);
    return self_bracket ? "[" + b + "," + b + "]" : b;
}

std::vector<LieSymbol> enumerate_lie_symbols(const Alphabet& a, int p, int weight_cap, int degree_cap)
{
    bool has_degree_one = false;
    for (const auto& g : a.generators())
        has_degree_one = has_degree_one || g.degree == 1;
    if (has_degree_one && weight_cap > 64)
        throw ValidationError("degree-one generators need an explicit word length cap");
    const int n = has_degree_one ? weight_cap : std::min(weight_cap, std::max(degree_cap, 1));
    const int max_shifted = degree_cap - 1;
    const int k = static_cast<int>(a.size());

    std::vector<LieSymbol> out;
    // Prenecklace generation; a[1..t] with period q is Lyndon iff q == t.
    std::vector<int> w(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int, int)> rec = [&](int t, int q, int deg) {
        for (int j = w[static_cast<std::size_t>(t - q)]; j < k; ++j) {
            const int d = deg + a.shifted_degree(static_cast<std::size_t>(j));
            if (d > max_shifted)
                continue;
            w[static_cast<std::size_t>(t)] = j;
            const int nq = (j == w[static_cast<std::size_t>(t - q)]) ? q : t;
            if (nq == t) {
                LieSymbol s;
                for (int i = 1; i <= t; ++i)
                    s.word.push_back(static_cast<std::uint8_t>(w[static_cast<std::size_t>(i)]));
                s.weight = t;
                s.v_degree = d + 1;
                out.push_back(std::move(s));
                if (out.size() > kMaxEnumerated)
                    throw ValidationError("cap overflow: too many Lie basis elements");
            }
            if (t < n)
                rec(t + 1, nq, d);
        }
    };
    if (n >= 1)
        rec(1, 1, 0);

    if (p != 2) {
        const std::size_t base = out.size();
        for (std::size_t i = 0; i < base; ++i) {
            const LieSymbol& s = out[i];
            const int sd = s.v_degree - 1;
            if (sd % 2 == 0)
                continue;
            LieSymbol sq{s.word, true, 2 * s.weight, 2 * sd + 1};
            if (sq.weight <= weight_cap && sq.v_degree <= degree_cap)
                out.push_back(sq);
        }
    }
    return out;
}

LyndonBasis lyndon_basis(std::shared_ptr<const Alphabet> a, const PrimeField& f, int weight_cap, int degree_cap)
{
    check_basis_caps(weight_cap, degree_cap);
    LyndonBasis out;
    ExpansionCache cache(a, f);
    std::map<int, TensorSpan> spans;
    for (const auto& s : enumerate_lie_symbols(*a, f.p(), weight_cap, degree_cap)) {
        out.dims.add_dim(s.v_degree, 1);
        std::optional<TensorElement> e;
        if (s.weight <= kMaxWordLength) {
            e = cache.expand(s);
            out.realized_dims.add_dim(s.v_degree, 1);
            if (spans.try_emplace(s.v_degree, f).first->second.insert(*e))
                out.independent_dims.add_dim(s.v_degree, 1);
        }
        out.elements.push_back({s, s.bracketing(*a), std::move(e)});
    }
    return out;
}

namespace {

GradedVectorSpace closure_dims(std::shared_ptr<const Alphabet> a, const PrimeField& f, int degree_cap,
                               int weight_cap, bool restricted)
{
    check_caps(weight_cap, degree_cap);
    const int p = f.p();
    std::map<int, TensorSpan> spans;
    std::vector<TensorElement> all;
    std::vector<TensorElement> frontier;
    GradedVectorSpace dims;

    auto offer = [&](TensorElement c, std::vector<TensorElement>& next) {
        if (c.is_zero())
            return;
        if (static_cast<int>(c.max_word_length()) > weight_cap)
            return;
        const int d = *c.v_degree();
        if (d > degree_cap)
            return;
        auto it = spans.try_emplace(d, f).first;
        if (it->second.insert(c)) {
            dims.add_dim(d, 1);
            all.push_back(c);
            next.push_back(std::move(c));
        }
    };

    for (std::size_t l = 0; l < a->size(); ++l)
        offer(TensorElement::generator(a, f, l), frontier);

    auto weight_of = [](const TensorElement& e) { return static_cast<int>(e.max_word_length()); };
    while (!frontier.empty()) {
        std::vector<TensorElement> next;
        for (const auto& x : frontier) {
            const int wx = weight_of(x);
            const int dx = *x.shifted_degree();
            const std::size_t n_all = all.size();
            for (std::size_t i = 0; i < n_all; ++i) {
                const TensorElement y = all[i];
                if (wx + weight_of(y) > weight_cap || dx + *y.shifted_degree() + 1 > degree_cap)
                    continue;
                offer(shifted_bracket(x, y), next);
            }
            if (restricted && xi_admissible(p, dx + 1) && wx * p <= weight_cap && xi_degree(p, dx + 1) <= degree_cap)
                offer(restriction_power(x), next);
        }
        frontier = std::move(next);
    }
    return dims;
}

}  // namespace

GradedVectorSpace bracket_closure_dims(std::shared_ptr<const Alphabet> a, const PrimeField& f, int degree_cap,
                                       int weight_cap)
{
    return closure_dims(std::move(a), f, degree_cap, weight_cap, false);
}

GradedVectorSpace restricted_closure_dims(std::shared_ptr<const Alphabet> a, const PrimeField& f, int degree_cap,
                                          int weight_cap)
{
    return closure_dims(std::move(a), f, degree_cap, weight_cap, true);
}

std::string RestrictedSymbol::to_string(const Alphabet& a) const
{
    std::string s = lie.bracketing(a);
    for (int i = 0; i < xi_power; ++i)
        s = "xi(" + s + ")";
    return s;
}

std::vector<RestrictedSymbol> enumerate_restricted_symbols(const Alphabet& a, int p, int weight_cap, int degree_cap)
{
    std::vector<RestrictedSymbol> out;
    for (const auto& l : enumerate_lie_symbols(a, p, weight_cap, degree_cap)) {
        long long weight = l.weight;
        long long d = l.v_degree;
        int i = 0;
        for (;;) {
            out.push_back({l, i, static_cast<int>(weight), static_cast<int>(d)});
            if (!xi_admissible(p, static_cast<int>(d)))
                break;
            weight *= p;
            d = static_cast<long long>(p) * d - p + 1;
            ++i;
            if (weight > weight_cap || d > degree_cap)
                break;
        }
    }
    return out;
}

GradedVectorSpace symbol_dims(const std::vector<RestrictedSymbol>& symbols)
{
    GradedVectorSpace v;
    for (const auto& s : symbols)
        v.add_dim(s.v_degree, 1);
    return v;
}

RestrictedBasis restricted_basis(std::shared_ptr<const Alphabet> a, const PrimeField& f, int degree_cap,
                                 int weight_cap)
{
    check_basis_caps(weight_cap, degree_cap);
    RestrictedBasis out;
    ExpansionCache cache(a, f);
    std::map<int, TensorSpan> spans;
    for (const auto& s : enumerate_restricted_symbols(*a, f.p(), weight_cap, degree_cap)) {
        out.dims.add_dim(s.v_degree, 1);
        std::optional<TensorElement> e;
        if (s.weight <= kMaxWordLength) {
            e = cache.expand(s.lie);
            for (int i = 0; i < s.xi_power; ++i)
                e = restriction_power(*e);
            out.realized_dims.add_dim(s.v_degree, 1);
            if (spans.try_emplace(s.v_degree, f).first->second.insert(*e))
                out.independent_dims.add_dim(s.v_degree, 1);
        }
        out.elements.push_back({s, std::move(e)});
    }
    return out;
}

}  // namespace fphom
