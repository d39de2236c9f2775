#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "quadgraph/field.hpp"

namespace quadgraph {

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Dense matrix over F_q, row major. Sizes here are desk scale (a few dozen
/// rows at most), so everything is straightforward Gaussian elimination on
/// top of the field's lookup tables.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldRef spec, int rows, int cols);

    static Matrix identity(FieldRef spec, int n);
    /// Rows given as integer entries (reduced via FieldSpec::from_int).
    static Matrix from_int_rows(FieldRef spec,
                                const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldRef& field() const { return spec_; }

    FieldElement at(int i, int j) const { return FieldElement(spec_.get(), raw(i, j)); }
    void set(int i, int j, const FieldElement& v);

    std::uint16_t raw(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
    std::uint16_t& raw(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const std::uint16_t* row_data(int i) const { return a_.data() + size_t(i) * cols_; }
    std::uint16_t* row_data(int i) { return a_.data() + size_t(i) * cols_; }
    const std::vector<std::uint16_t>& data() const { return a_; }

    Matrix operator*(const Matrix& o) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    bool is_symmetric() const;

    Matrix row_slice(int begin, int end) const;
    static Matrix vstack(const Matrix& a, const Matrix& b);

    /// In-place reduction to reduced row echelon form; returns the rank and,
    /// if requested, the pivot columns.
    int rref_in_place(std::vector<int>* pivot_cols = nullptr);
    Matrix rref(int* rank = nullptr, std::vector<int>* pivot_cols = nullptr) const;
    int rank() const;

    /// Rows spanning { x : M x^T = 0 } (the right kernel, returned as row
    /// vectors). Result has cols() columns and cols() - rank() rows.
    Matrix right_kernel() const;

    std::optional<Matrix> inverse() const;

    std::string to_string() const;

private:
    FieldRef spec_;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint16_t> a_;

    void check_same_field(const Matrix& o) const;
};

using FVec = std::vector<FieldElement>;

FVec int_vector(const FieldRef& spec, const std::vector<long long>& entries);
Matrix row_matrix(const FieldRef& spec, const FVec& v);

}  // namespace quadgraph
