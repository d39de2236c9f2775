#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "quadgraph/matrix.hpp"

namespace quadgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Number of k-dimensional subspaces of F_q^n, exact. Returns 0 for k < 0 or
/// k > n.
BigInt gaussian_binomial(int n, int k, long long q);

/// A k-dimensional subspace of F_q^n, stored as its unique reduced
/// row-echelon basis. Equality of Subspace values is equality of spans.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(FieldRef spec, int n);
    /// Canonicalize arbitrary spanning rows (zero rows dropped). The zero
    /// span is allowed here and yields the k = 0 subspace.
    static Subspace from_matrix(const Matrix& rows);

    int ambient() const { return n_; }
    int dim() const { return k_; }
    const FieldRef& field() const { return spec_; }
    Matrix basis_matrix() const;
    const std::vector<std::uint16_t>& raw_basis() const { return rows_; }
    std::uint16_t raw(int i, int j) const { return rows_[size_t(i) * n_ + j]; }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    bool contains_vector(const FVec& v) const;
    bool contains_vector_raw(const std::uint16_t* v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldRef spec_;
    int n_ = 0, k_ = 0;
    std::vector<std::uint16_t> rows_;  // k x n, RREF
    std::vector<int> pivots_;

    friend struct SubspaceHash;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const;
};

/// RREF canonical representative of the span of M. Errors on a zero span,
/// matching the canonicalize contract; use Subspace::from_matrix when the
/// zero subspace is a legitimate result.
Subspace canonicalize(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
bool is_subset(const Subspace& a, const Subspace& b);

/// Ordered, duplicate-free collection of subspaces with index lookup.
class SubspaceSet {
public:
    SubspaceSet() = default;

    void push_back(Subspace s);
    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const Subspace& operator[](size_t i) const { return items_[i]; }
    std::optional<size_t> index_of(const Subspace& s) const;
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

private:
    std::vector<Subspace> items_;
    std::unordered_map<Subspace, size_t, SubspaceHash> index_;
};

/// Streaming enumeration of all rank-k RREF matrices of shape (k, n) over
/// F_q in the canonical order: pivot-column patterns lexicographically, then
/// the free entries as an odometer (last free cell fastest, field elements in
/// index order). The visitor receives the raw k*n row-major entry buffer.
void enumerate_subspaces_visit(int n, int k, const FieldRef& spec,
                               const std::function<void(const std::uint16_t*)>& visit);

/// Materialized enumeration; cardinality equals gaussian_binomial(n, k, q).
/// When cache_dir is given, results are persisted as JSON keyed by
/// (n, k, q, modulus) and reloaded on later calls; stale or corrupt cache
/// files are silently regenerated.
SubspaceSet enumerate_subspaces(int n, int k, const FieldRef& spec,
                                const std::optional<std::filesystem::path>& cache_dir = {});

}  // namespace quadgraph
