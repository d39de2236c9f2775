#include "quadgraph/matrix.hpp"

#include <sstream>

namespace quadgraph {

Matrix::Matrix(FieldRef spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

Matrix Matrix::identity(FieldRef spec, int n) {
    Matrix m(std::move(spec), n, n);
    for (int i = 0; i < n; ++i) m.raw(i, i) = 1;
    return m;
}

Matrix Matrix::from_int_rows(FieldRef spec, const std::vector<std::vector<long long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Matrix m(spec, r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw DimensionError("ragged rows");
        for (int j = 0; j < c; ++j) m.raw(i, j) = spec->from_int(rows[i][j]).index();
    }
    return m;
}

void Matrix::set(int i, int j, const FieldElement& v) {
    if (!spec_->same_field(v.spec())) throw FieldError("field mismatch");
    raw(i, j) = v.index();
}

void Matrix::check_same_field(const Matrix& o) const {
    if (!spec_ || !o.spec_ || !spec_->same_field(*o.spec_)) throw FieldError("field mismatch");
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(o);
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    const FieldSpec& f = *spec_;
    Matrix r(spec_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            std::uint16_t aik = raw(i, k);
            if (aik == 0) continue;
            const std::uint16_t* orow = o.row_data(k);
            std::uint16_t* rrow = r.row_data(i);
            for (int j = 0; j < o.cols_; ++j) rrow[j] = f.add(rrow[j], f.mul(aik, orow[j]));
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(spec_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.raw(j, i) = raw(i, j);
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && spec_ && o.spec_ &&
           spec_->same_field(*o.spec_);
}

bool Matrix::is_zero() const {
    for (auto v : a_)
        if (v) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (raw(i, j) != raw(j, i)) return false;
    return true;
}

Matrix Matrix::row_slice(int begin, int end) const {
    Matrix r(spec_, end - begin, cols_);
    for (int i = begin; i < end; ++i)
        for (int j = 0; j < cols_; ++j) r.raw(i - begin, j) = raw(i, j);
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    a.check_same_field(b);
    if (a.cols_ != b.cols_) throw DimensionError("vstack column mismatch");
    Matrix r(a.spec_, a.rows_ + b.rows_, a.cols_);
    std::copy(a.a_.begin(), a.a_.end(), r.a_.begin());
    std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + a.a_.size());
    return r;
}

int Matrix::rref_in_place(std::vector<int>* pivot_cols) {
    const FieldSpec& f = *spec_;
    if (pivot_cols) pivot_cols->clear();
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i) {
            if (raw(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) std::swap(raw(piv, j), raw(r, j));
        std::uint16_t inv = f.inv(raw(r, c));
        for (int j = 0; j < cols_; ++j) raw(r, j) = f.mul(raw(r, j), inv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            std::uint16_t m = raw(i, c);
            if (m == 0) continue;
            for (int j = 0; j < cols_; ++j)
                raw(i, j) = f.sub(raw(i, j), f.mul(m, raw(r, j)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

Matrix Matrix::rref(int* rank, std::vector<int>* pivot_cols) const {
    Matrix m = *this;
    int r = m.rref_in_place(pivot_cols);
    if (rank) *rank = r;
    return m;
}

int Matrix::rank() const {
    Matrix m = *this;
    return m.rref_in_place();
}

Matrix Matrix::right_kernel() const {
    std::vector<int> pivots;
    int rank = 0;
    Matrix r = rref(&rank, &pivots);
    const FieldSpec& f = *spec_;
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    Matrix ker(spec_, cols_ - rank, cols_);
    int kr = 0;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        ker.raw(kr, free) = 1;
        for (int i = 0; i < rank; ++i) ker.raw(kr, pivots[i]) = f.neg(r.raw(i, free));
        ++kr;
    }
    return ker;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("inverse of a non-square matrix");
    Matrix aug(spec_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.raw(i, j) = raw(i, j);
        aug.raw(i, cols_ + i) = 1;
    }
    // [M | I] always has full row rank; M is invertible iff every pivot
    // lands in the left block
    std::vector<int> pivots;
    aug.rref_in_place(&pivots);
    if (int(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
    Matrix inv(spec_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.raw(i, j) = aug.raw(i, cols_ + j);
    return inv;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

FVec int_vector(const FieldRef& spec, const std::vector<long long>& entries) {
    FVec v;
    v.reserve(entries.size());
    for (long long e : entries) v.push_back(spec->from_int(e));
    return v;
}

Matrix row_matrix(const FieldRef& spec, const FVec& v) {
    Matrix m(spec, 1, int(v.size()));
    for (size_t j = 0; j < v.size(); ++j) m.set(0, int(j), v[j]);
    return m;
}

}  // namespace quadgraph
