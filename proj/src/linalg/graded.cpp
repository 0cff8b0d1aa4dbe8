#include "fphom/graded.hpp"

#include <algorithm>
#include <sstream>

namespace fphom {

// ---------------------------------------------------------------- GradedVectorSpace

GradedVectorSpace::GradedVectorSpace(std::initializer_list<std::pair<const int, int>> dims)
{
    for (const auto& [deg, d] : dims)
        set_dim(deg, d);
}

GradedVectorSpace::GradedVectorSpace(std::map<int, int> dims)
{
    for (const auto& [deg, d] : dims)
        set_dim(deg, d);
}

int GradedVectorSpace::dim(int degree) const
{
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

void GradedVectorSpace::set_dim(int degree, int d)
{
    if (d < 0)
        throw ValidationError("negative dimension in degree " + std::to_string(degree));
    if (d == 0) {
        dims_.erase(degree);
        labels_.erase(degree);
    }
    else {
        dims_[degree] = d;
    }
}

int GradedVectorSpace::total_dim() const
{
    int s = 0;
    for (const auto& [deg, d] : dims_)
        s += d;
    return s;
}

std::optional<int> GradedVectorSpace::min_degree() const
{
    if (dims_.empty())
        return std::nullopt;
    return dims_.begin()->first;
}

std::optional<int> GradedVectorSpace::max_degree() const
{
    if (dims_.empty())
        return std::nullopt;
    return dims_.rbegin()->first;
}

const std::vector<std::string>* GradedVectorSpace::labels(int degree) const
{
    auto it = labels_.find(degree);
    return it == labels_.end() ? nullptr : &it->second;
}

void GradedVectorSpace::set_labels(int degree, std::vector<std::string> labels)
{
    if (static_cast<int>(labels.size()) != dim(degree))
        throw ValidationError("label count does not match dimension in degree " + std::to_string(degree));
    labels_[degree] = std::move(labels);
}

GradedVectorSpace GradedVectorSpace::shift(int k) const
{
    GradedVectorSpace out;
    for (const auto& [deg, d] : dims_)
        out.dims_[deg + k] = d;
    for (const auto& [deg, l] : labels_)
        out.labels_[deg + k] = l;
    return out;
}

GradedVectorSpace GradedVectorSpace::direct_sum(const GradedVectorSpace& o) const
{
    GradedVectorSpace out(*this);
    out.labels_.clear();
    for (const auto& [deg, d] : o.dims_)
        out.add_dim(deg, d);
    return out;
}

GradedVectorSpace GradedVectorSpace::truncate(int cap) const
{
    GradedVectorSpace out;
    for (const auto& [deg, d] : dims_)
        if (deg <= cap)
            out.dims_[deg] = d;
    return out;
}

nlohmann::json GradedVectorSpace::to_json() const
{
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [deg, d] : dims_)
        dims[std::to_string(deg)] = d;
    return {{"dims", dims}};
}

GradedVectorSpace GradedVectorSpace::from_json(const nlohmann::json& j)
{
    const nlohmann::json& dims = j.contains("dims") ? j.at("dims") : j;
    if (!dims.is_object())
        throw ValidationError("graded space must be an object {\"dims\": {...}}");
    GradedVectorSpace out;
    for (const auto& [key, val] : dims.items()) {
        int deg = 0;
        try {
            std::size_t used = 0;
            deg = std::stoi(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        }
        catch (const std::exception&) {
            throw ValidationError("graded space: degree key '" + key + "' is not an integer");
        }
        if (!val.is_number_integer())
            throw ValidationError("graded space: dimension for degree " + key + " is not an integer");
        out.set_dim(deg, val.get<int>());
    }
    return out;
}

std::string GradedVectorSpace::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [deg, d] : dims_) {
        if (!first)
            os << ", ";
        first = false;
        os << deg << ':' << d;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- GradedMap

GradedMap::GradedMap(const PrimeField& f, GradedVectorSpace source, GradedVectorSpace target, int degree)
    : f_(f), source_(std::move(source)), target_(std::move(target)), degree_(degree)
{
}

Matrix GradedMap::block(int i) const
{
    auto it = blocks_.find(i);
    if (it != blocks_.end())
        return it->second;
    return Matrix(f_, static_cast<std::size_t>(target_.dim(i + degree_)), static_cast<std::size_t>(source_.dim(i)));
}

void GradedMap::set_block(int i, Matrix m)
{
    if (m.rows() != static_cast<std::size_t>(target_.dim(i + degree_)) ||
        m.cols() != static_cast<std::size_t>(source_.dim(i)))
        throw ValidationError("graded map block at degree " + std::to_string(i) + " has shape " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                              std::to_string(target_.dim(i + degree_)) + "x" + std::to_string(source_.dim(i)));
    blocks_.insert_or_assign(i, std::move(m));
}

GradedVectorSpace GradedMap::kernel_dims() const
{
    GradedVectorSpace out;
    for (const auto& [deg, d] : source_.dims())
        out.set_dim(deg, static_cast<int>(kernel_dim(deg)));
    return out;
}

GradedVectorSpace GradedMap::image_dims() const
{
    GradedVectorSpace out;
    for (const auto& [deg, d] : source_.dims())
        out.set_dim(deg + degree_, static_cast<int>(rank(deg)));
    return out;
}

GradedMap GradedMap::compose_after(const GradedMap& first) const
{
    GradedMap out(f_, first.source_, target_, first.degree_ + degree_);
    for (const auto& [deg, d] : first.source_.dims())
        out.set_block(deg, block(deg + first.degree_) * first.block(deg));
    return out;
}

bool GradedMap::is_zero() const
{
    return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

// ---------------------------------------------------------------- ChainComplex

void ChainComplex::push_space(GradedVectorSpace v)
{
    spaces_.push_back(std::move(v));
    top_ = std::max(top_, length() - 1);
}

void ChainComplex::set_differential(int s, GradedMap d)
{
    if (s < 0 || s >= length())
        throw std::out_of_range("differential index out of range");
    const int t = dir_ == Direction::cohomological ? s + 1 : s - 1;
    if (t < 0 || t >= length())
        throw std::out_of_range("differential target index out of range");
    if (!(d.source() == space(s)) || !(d.target() == space(t)) || d.degree() != 0)
        throw ValidationError("differential at index " + std::to_string(s) + " does not match the complex");
    diffs_.insert_or_assign(s, std::move(d));
}

GradedMap ChainComplex::outgoing(int s) const
{
    auto it = diffs_.find(s);
    if (it != diffs_.end())
        return it->second;
    const int t = dir_ == Direction::cohomological ? s + 1 : s - 1;
    GradedVectorSpace target = (t >= 0 && t < length()) ? space(t) : GradedVectorSpace{};
    return GradedMap::zero(f_, space(s), target, 0);
}

GradedMap ChainComplex::incoming(int s) const
{
    const int from = dir_ == Direction::cohomological ? s - 1 : s + 1;
    if (from < 0 || from >= length())
        return GradedMap::zero(f_, GradedVectorSpace{}, space(s), 0);
    return outgoing(from);
}

GradedVectorSpace ChainComplex::homology_dims(int s, int lo, int hi) const
{
    if (s < 0 || s > top_)
        throw TruncationError("homology requested at index " + std::to_string(s) + " beyond stored index " +
                              std::to_string(top_));
    if (lo < window_.first || hi > window_.second)
        throw TruncationError("degree window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "] exceeds exact window [" + std::to_string(window_.first) + ", " +
                              std::to_string(window_.second) + "]");
    const GradedMap out = outgoing(s);
    const GradedMap in = incoming(s);
    GradedVectorSpace h;
    for (const auto& [deg, d] : space(s).dims()) {
        if (deg < lo || deg > hi)
            continue;
        const auto ker = out.kernel_dim(deg);
        const auto im = in.rank(deg);
        h.set_dim(deg, static_cast<int>(ker - im));
    }
    return h;
}

bool ChainComplex::is_complex() const
{
    for (int s = 0; s < length(); ++s) {
        const int t = dir_ == Direction::cohomological ? s + 1 : s - 1;
        if (t < 0 || t >= length())
            continue;
        const GradedMap a = outgoing(s);
        const GradedMap b = outgoing(t);
        for (const auto& [deg, d] : space(s).dims()) {
            if (deg < window_.first || deg > window_.second)
                continue;
            if (!(b.block(deg) * a.block(deg)).is_zero())
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- BigradedTable

std::string to_string(Parity p)
{
    switch (p) {
    case Parity::even:
        return "even";
    case Parity::odd:
        return "odd";
    default:
        return "neither";
    }
}

int BigradedTable::dim(int s, int t) const
{
    auto it = entries_.find({s, t});
    return it == entries_.end() ? 0 : it->second;
}

void BigradedTable::set(int s, int t, int d)
{
    if (d < 0)
        throw ValidationError("negative dimension at (" + std::to_string(s) + "," + std::to_string(t) + ")");
    if (d == 0)
        entries_.erase({s, t});
    else
        entries_[{s, t}] = d;
}

GradedVectorSpace BigradedTable::row(int s) const
{
    GradedVectorSpace v;
    for (const auto& [st, d] : entries_)
        if (st.first == s)
            v.set_dim(st.second, d);
    return v;
}

void BigradedTable::set_row(int s, const GradedVectorSpace& v)
{
    for (const auto& [t, d] : v.dims())
        set(s, t, d);
}

GradedVectorSpace BigradedTable::total_degrees() const
{
    GradedVectorSpace v;
    for (const auto& [st, d] : entries_)
        v.add_dim(st.second - st.first, d);
    return v;
}

nlohmann::json BigradedTable::to_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [st, d] : entries_)
        rows.push_back({{"s", st.first}, {"t", st.second}, {"dim", d}});
    return rows;
}

BigradedTable BigradedTable::from_json(const nlohmann::json& j)
{
    const nlohmann::json& rows = (j.is_object() && j.contains("table")) ? j.at("table") : j;
    if (!rows.is_array())
        throw ValidationError("bigraded table must be an array of {\"s\",\"t\",\"dim\"} objects");
    BigradedTable out;
    for (const auto& r : rows) {
        if (!r.is_object() || !r.contains("s") || !r.contains("t") || !r.contains("dim"))
            throw ValidationError("bigraded table row lacks s, t or dim");
        out.add(r.at("s").get<int>(), r.at("t").get<int>(), r.at("dim").get<int>());
    }
    return out;
}

std::string BigradedTable::to_csv() const
{
    std::ostringstream os;
    os << "s,t,dim\n";
    for (const auto& [st, d] : entries_)
        os << st.first << ',' << st.second << ',' << d << '\n';
    return os.str();
}

BigradedTable BigradedTable::from_csv(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    BigradedTable out;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (header) {
            header = false;
            if (line.rfind("s,t,dim", 0) == 0)
                continue;
        }
        std::istringstream ls(line);
        std::string a, b, c;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
            throw ValidationError("malformed csv row: " + line);
        try {
            out.add(std::stoi(a), std::stoi(b), std::stoi(c));
        }
        catch (const std::logic_error&) {
            throw ValidationError("malformed csv row: " + line);
        }
    }
    return out;
}

std::string BigradedTable::to_string() const
{
    if (entries_.empty())
        return "(empty)\n";
    std::ostringstream os;
    os << "    s      t    dim\n";
    for (const auto& [st, d] : entries_) {
        os.width(5);
        os << st.first;
        os.width(7);
        os << st.second;
        os.width(7);
        os << d << '\n';
    }
    return os.str();
}

ParityVerdict parity_verdict(const BigradedTable& t)
{
    ParityVerdict v;
    v.empty = t.empty();
    bool has_even = false;
    bool has_odd = false;
    for (const auto& [st, d] : t.entries()) {
        if (((st.first + st.second) % 2 + 2) % 2 == 0)
            has_even = true;
        else
            has_odd = true;
    }
    if (has_even && has_odd)
        v.parity = Parity::neither;
    else if (has_odd)
        v.parity = Parity::odd;
    else
        v.parity = Parity::even;
    return v;
}

// ---------------------------------------------------------------- HilbertSeries

HilbertSeries::HilbertSeries(int cap) : cap_(cap), coeffs_(static_cast<std::size_t>(cap < 0 ? 0 : cap + 1), 0)
{
    if (cap < 0)
        throw ValidationError("series cap must be nonnegative");
}

HilbertSeries HilbertSeries::one(int cap)
{
    HilbertSeries h(cap);
    h[0] = 1;
    return h;
}

HilbertSeries HilbertSeries::from_space(const GradedVectorSpace& v, int cap)
{
    HilbertSeries h(cap);
    for (const auto& [deg, d] : v.dims()) {
        if (deg < 0)
            throw ValidationError("series from space with negative degree");
        if (deg <= cap)
            h[deg] = d;
    }
    return h;
}

HilbertSeries HilbertSeries::polynomial(int degree, int count, int cap)
{
    if (degree <= 0)
        throw ValidationError("polynomial generator must have positive degree");
    HilbertSeries h = one(cap);
    for (int c = 0; c < count; ++c)
        for (int d = degree; d <= cap; ++d)
            h[d] += h[d - degree];
    return h;
}

HilbertSeries HilbertSeries::exterior(int degree, int count, int cap)
{
    if (degree <= 0)
        throw ValidationError("exterior generator must have positive degree");
    HilbertSeries h = one(cap);
    for (int c = 0; c < count; ++c)
        for (int d = cap; d >= degree; --d)
            h[d] += h[d - degree];
    return h;
}

HilbertSeries HilbertSeries::operator*(const HilbertSeries& o) const
{
    const int cap = std::min(cap_, o.cap_);
    HilbertSeries out(cap);
    for (int i = 0; i <= cap; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0)
            continue;
        for (int j = 0; i + j <= cap; ++j)
            out[i + j] += (*this)[i] * o[j];
    }
    return out;
}

GradedVectorSpace HilbertSeries::to_space() const
{
    GradedVectorSpace v;
    for (int d = 0; d <= cap_; ++d)
        v.set_dim(d, static_cast<int>(coeffs_[static_cast<std::size_t>(d)]));
    return v;
}

nlohmann::json HilbertSeries::to_json() const
{
    nlohmann::json j = to_space().to_json();
    j["cap"] = cap_;
    return j;
}

std::string HilbertSeries::to_string() const
{
    return to_space().to_string() + " (exact to degree " + std::to_string(cap_) + ")";
}

HilbertSeries free_commutative_series(const GradedVectorSpace& generators, int p, int cap)
{
    HilbertSeries h = HilbertSeries::one(cap);
    for (const auto& [deg, d] : generators.dims()) {
        if (deg <= 0)
            throw ValidationError("free commutative algebra needs generators in positive degrees");
        if (deg > cap)
            continue;
        if (p != 2 && deg % 2 != 0)
            h = h * HilbertSeries::exterior(deg, d, cap);
        else
            h = h * HilbertSeries::polynomial(deg, d, cap);
    }
    return h;
}

}  // namespace fphom
