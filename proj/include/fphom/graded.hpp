#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fphom/matrix.hpp"

namespace fphom {

/// Cohomologically graded vector space with finite support, recorded by dimension.
/// Optional basis labels are carried along for reporting only.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;
    GradedVectorSpace(std::initializer_list<std::pair<const int, int>> dims);
    explicit GradedVectorSpace(std::map<int, int> dims);

    int dim(int degree) const;
    void set_dim(int degree, int d);
    void add_dim(int degree, int d) { set_dim(degree, dim(degree) + d); }
    /// Nonzero entries only.
    const std::map<int, int>& dims() const { return dims_; }
    int total_dim() const;
    bool empty() const { return dims_.empty(); }
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;

    const std::vector<std::string>* labels(int degree) const;
    void set_labels(int degree, std::vector<std::string> labels);

    /// (sV)^i = V^{i-1}, iterated k times.
    GradedVectorSpace shift(int k) const;
    GradedVectorSpace direct_sum(const GradedVectorSpace& o) const;
    /// Restriction to degrees <= cap.
    GradedVectorSpace truncate(int cap) const;

    bool operator==(const GradedVectorSpace& o) const { return dims_ == o.dims_; }

    nlohmann::json to_json() const;
    static GradedVectorSpace from_json(const nlohmann::json& j);
    std::string to_string() const;

private:
    std::map<int, int> dims_;
    std::map<int, std::vector<std::string>> labels_;
};

inline GradedVectorSpace shift(const GradedVectorSpace& v, int k) { return v.shift(k); }

/// Degree-d linear map between graded spaces, one block per source degree.
class GradedMap {
public:
    GradedMap(const PrimeField& f, GradedVectorSpace source, GradedVectorSpace target, int degree);

    static GradedMap zero(const PrimeField& f, GradedVectorSpace source, GradedVectorSpace target,
                          int degree)
    {
        return GradedMap(f, std::move(source), std::move(target), degree);
    }

    const PrimeField& field() const { return f_; }
    const GradedVectorSpace& source() const { return source_; }
    const GradedVectorSpace& target() const { return target_; }
    int degree() const { return degree_; }

    /// Block from source degree i to target degree i + degree (zero-filled if unset).
    Matrix block(int i) const;
    void set_block(int i, Matrix m);

    std::size_t rank(int i) const { return block(i).rank(); }
    std::size_t kernel_dim(int i) const { return static_cast<std::size_t>(source_.dim(i)) - rank(i); }
    GradedVectorSpace kernel_dims() const;
    GradedVectorSpace image_dims() const;
    /// this ∘ first
    GradedMap compose_after(const GradedMap& first) const;
    bool is_zero() const;

private:
    PrimeField f_;
    GradedVectorSpace source_;
    GradedVectorSpace target_;
    int degree_;
    std::map<int, Matrix> blocks_;
};

/// Finite stretch of a (co)chain complex of graded spaces. Differentials preserve the
/// internal degree; homological index s runs over [0, spaces.size()).
class ChainComplex {
public:
    enum class Direction { homological, cohomological };

    ChainComplex(const PrimeField& f, Direction dir) : f_(f), dir_(dir) {}

    const PrimeField& field() const { return f_; }
    Direction direction() const { return dir_; }

    /// Appends C_s; s is the new length minus one.
    void push_space(GradedVectorSpace v);
    /// Differential leaving index s (cohomological: C^s -> C^{s+1}; homological: C_s -> C_{s-1}).
    void set_differential(int s, GradedMap d);

    int length() const { return static_cast<int>(spaces_.size()); }
    const GradedVectorSpace& space(int s) const { return spaces_.at(static_cast<std::size_t>(s)); }
    /// Differential leaving s, or the zero map when none was stored at an end of the complex.
    GradedMap outgoing(int s) const;
    GradedMap incoming(int s) const;

    /// Internal degrees in [lo, hi] where stored data is complete.
    void set_exact_window(int lo, int hi) { window_ = {lo, hi}; }
    std::pair<int, int> exact_window() const { return window_; }
    /// Highest index whose homology is determined by the stored data.
    void set_top_index(int s) { top_ = s; }
    int top_index() const { return top_; }

    /// dim ker(d_out) - dim im(d_in) per internal degree in [lo, hi].
    GradedVectorSpace homology_dims(int s, int lo, int hi) const;
    /// Checks that consecutive differentials compose to zero inside the window.
    bool is_complex() const;

private:
    PrimeField f_;
    Direction dir_;
    std::vector<GradedVectorSpace> spaces_;
    std::map<int, GradedMap> diffs_;
    std::pair<int, int> window_{-1000000, 1000000};
    int top_ = -1;
};

enum class Parity { even, odd, neither };

std::string to_string(Parity p);

struct ParityVerdict {
    Parity parity = Parity::even;
    bool empty = false;
};

/// (s, t) -> dimension, finite support, no zero entries stored.
class BigradedTable {
public:
    int dim(int s, int t) const;
    void set(int s, int t, int d);
    void add(int s, int t, int d) { set(s, t, dim(s, t) + d); }
    const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Row s as a graded space indexed by t.
    GradedVectorSpace row(int s) const;
    void set_row(int s, const GradedVectorSpace& v);
    /// Collapse along t - s.
    GradedVectorSpace total_degrees() const;

    bool operator==(const BigradedTable& o) const { return entries_ == o.entries_; }

    nlohmann::json to_json() const;
    static BigradedTable from_json(const nlohmann::json& j);
    std::string to_csv() const;
    static BigradedTable from_csv(const std::string& text);
    std::string to_string() const;

private:
    std::map<std::pair<int, int>, int> entries_;
};

ParityVerdict parity_verdict(const BigradedTable& t);

/// Coefficients in degrees 0..cap.
class HilbertSeries {
public:
    explicit HilbertSeries(int cap);
    static HilbertSeries one(int cap);
    static HilbertSeries from_space(const GradedVectorSpace& v, int cap);
    /// 1/(1 - t^d) truncated, repeated `count` times.
    static HilbertSeries polynomial(int degree, int count, int cap);
    /// (1 + t^d)^count.
    static HilbertSeries exterior(int degree, int count, int cap);

    int cap() const { return cap_; }
    long long operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    long long& operator[](int d) { return coeffs_.at(static_cast<std::size_t>(d)); }
    HilbertSeries operator*(const HilbertSeries& o) const;
    bool operator==(const HilbertSeries& o) const { return cap_ == o.cap_ && coeffs_ == o.coeffs_; }
    const std::vector<long long>& coefficients() const { return coeffs_; }
    GradedVectorSpace to_space() const;

    nlohmann::json to_json() const;
    std::string to_string() const;

private:
    int cap_;
    std::vector<long long> coeffs_;
};

/// Free graded-commutative algebra series on generators V: exterior on odd degrees when p is
/// odd, polynomial otherwise. Generators of degree <= 0 are rejected.
HilbertSeries free_commutative_series(const GradedVectorSpace& generators, int p, int cap);

}  // namespace fphom
