#include "agqss/fqmat.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace agqss::fqmat {

namespace {

void check_same_field(const MatrixFq& a, const MatrixFq& b) {
    if (!a.field().same_field(b.field()))
        throw DomainError("matrix operands live in different fields");
}

}  // namespace

MatrixFq::MatrixFq(std::shared_ptr<const gf::FieldSpec> spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols) {
    if (!spec_) throw DomainError("matrix requires a field spec");
    if (rows_ < 0 || cols_ < 0) throw DomainError("matrix dimensions must be non-negative");
    data_.assign(static_cast<std::size_t>(rows_) * cols_, 0);
}

MatrixFq MatrixFq::from_rows(std::shared_ptr<const gf::FieldSpec> spec,
                             const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    MatrixFq m(std::move(spec), r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DomainError("ragged row list in matrix construction");
        for (int j = 0; j < c; ++j) m.set_repr(i, j, rows[i][j]);
    }
    return m;
}

MatrixFq MatrixFq::identity(std::shared_ptr<const gf::FieldSpec> spec, int n) {
    MatrixFq m(std::move(spec), n, n);
    for (int i = 0; i < n; ++i) m.set_repr(i, i, 1);
    return m;
}

void MatrixFq::check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DomainError("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                          ") out of range for " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

int MatrixFq::repr_at(int r, int c) const {
    check_index(r, c);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
}

void MatrixFq::set_repr(int r, int c, int repr) {
    check_index(r, c);
    if (repr < 0 || repr >= spec_->order())
        throw DomainError("entry representation " + std::to_string(repr) + " out of range");
    data_[static_cast<std::size_t>(r) * cols_ + c] = repr;
}

gf::FieldElement MatrixFq::at(int r, int c) const { return spec_->element(repr_at(r, c)); }

void MatrixFq::set(int r, int c, gf::FieldElement v) {
    if (!v.spec().same_field(*spec_)) throw DomainError("entry from a different field");
    set_repr(r, c, v.repr());
}

std::vector<int> MatrixFq::row_reprs(int r) const {
    if (r < 0 || r >= rows_)
        throw DomainError("row index " + std::to_string(r) + " out of range");
    return std::vector<int>(data_.begin() + static_cast<std::size_t>(r) * cols_,
                            data_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

MatrixFq MatrixFq::columns(const std::vector<int>& cols) const {
    MatrixFq out(spec_, rows_, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 0 || cols[j] >= cols_)
            throw DomainError("column index " + std::to_string(cols[j]) + " out of range");
        for (int i = 0; i < rows_; ++i)
            out.data_[static_cast<std::size_t>(i) * cols.size() + j] =
                data_[static_cast<std::size_t>(i) * cols_ + cols[j]];
    }
    return out;
}

MatrixFq MatrixFq::transposed() const {
    MatrixFq out(spec_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.data_[static_cast<std::size_t>(j) * rows_ + i] =
                data_[static_cast<std::size_t>(i) * cols_ + j];
    return out;
}

bool MatrixFq::operator==(const MatrixFq& other) const {
    return spec_->same_field(*other.spec_) && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
}

MatrixFq matmul(const MatrixFq& a, const MatrixFq& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows())
        throw DomainError("matmul shape mismatch: " + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()));
    const gf::FieldSpec& f = a.field();
    MatrixFq out(a.field_ptr(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const int aik = a.repr_at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const int prod = f.mul_repr(aik, b.repr_at(k, j));
                out.set_repr(i, j, f.add_repr(out.repr_at(i, j), prod));
            }
        }
    }
    return out;
}

MatrixFq hstack(const MatrixFq& a, const MatrixFq& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw DomainError("hstack row count mismatch");
    MatrixFq out(a.field_ptr(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.set_repr(i, j, a.repr_at(i, j));
        for (int j = 0; j < b.cols(); ++j) out.set_repr(i, a.cols() + j, b.repr_at(i, j));
    }
    return out;
}

MatrixFq vstack(const MatrixFq& a, const MatrixFq& b) {
    check_same_field(a, b);
    if (a.cols() != b.cols()) throw DomainError("vstack column count mismatch");
    MatrixFq out(a.field_ptr(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set_repr(i, j, a.repr_at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.set_repr(a.rows() + i, j, b.repr_at(i, j));
    return out;
}

std::vector<int> mul_left(const std::vector<int>& v, const MatrixFq& m) {
    if (static_cast<int>(v.size()) != m.rows())
        throw DomainError("row vector length does not match matrix rows");
    const gf::FieldSpec& f = m.field();
    std::vector<int> out(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j)
            out[j] = f.add_repr(out[j], f.mul_repr(v[i], m.repr_at(i, j)));
    }
    return out;
}

std::vector<int> mul_right(const MatrixFq& m, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw DomainError("column vector length does not match matrix columns");
    const gf::FieldSpec& f = m.field();
    std::vector<int> out(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        int acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc = f.add_repr(acc, f.mul_repr(m.repr_at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

RrefResult rref(const MatrixFq& m) {
    const gf::FieldSpec& f = m.field();
    MatrixFq r = m;
    std::vector<int> pivots;
    int pivot_row = 0;
    for (int col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        int sel = -1;
        for (int i = pivot_row; i < r.rows(); ++i) {
            if (r.repr_at(i, col) != 0) { sel = i; break; }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int j = 0; j < r.cols(); ++j) {
                const int t = r.repr_at(pivot_row, j);
                r.set_repr(pivot_row, j, r.repr_at(sel, j));
                r.set_repr(sel, j, t);
            }
        }
        const int inv = f.inv_repr(r.repr_at(pivot_row, col));
        for (int j = col; j < r.cols(); ++j)
            r.set_repr(pivot_row, j, f.mul_repr(inv, r.repr_at(pivot_row, j)));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == pivot_row) continue;
            const int factor = r.repr_at(i, col);
            if (factor == 0) continue;
            for (int j = col; j < r.cols(); ++j) {
                const int sub = f.mul_repr(factor, r.repr_at(pivot_row, j));
                r.set_repr(i, j, f.sub_repr(r.repr_at(i, j), sub));
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return RrefResult{std::move(r), static_cast<int>(pivots.size()), std::move(pivots)};
}

int rank(const MatrixFq& m) { return rref(m).rank; }

namespace {

// Kernel basis read off a reduced row echelon form: one basis row per free
// column, unit in its own coordinate, pivot coordinates filled from the
// negated reduced entries.
MatrixFq kernel_from_reduced(const std::vector<int>& pivot_cols, const MatrixFq& reduced_body) {
    const gf::FieldSpec& f = reduced_body.field();
    std::vector<int> free_cols;
    std::size_t pi = 0;
    for (int c = 0; c < reduced_body.cols(); ++c) {
        if (pi < pivot_cols.size() && pivot_cols[pi] == c) { ++pi; continue; }
        free_cols.push_back(c);
    }
    MatrixFq basis(reduced_body.field_ptr(), static_cast<int>(free_cols.size()),
                   reduced_body.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis.set_repr(static_cast<int>(k), fc, 1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            basis.set_repr(static_cast<int>(k), pivot_cols[i],
                           f.neg_repr(reduced_body.repr_at(static_cast<int>(i), fc)));
    }
    return basis;
}

}  // namespace

MatrixFq kernel_basis(const MatrixFq& m) {
    const RrefResult rr = rref(m);
    return kernel_from_reduced(rr.pivot_cols, rr.reduced);
}

std::optional<AffineCoset> solve_affine(const MatrixFq& m, const std::vector<int>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw DomainError("right-hand side length does not match matrix rows");
    MatrixFq rhs(m.field_ptr(), m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) rhs.set_repr(i, 0, b[i]);
    const RrefResult rr = rref(hstack(m, rhs));
    // A pivot in the appended column means the system is inconsistent. The
    // first m.cols() columns of the reduced augmented matrix are exactly
    // rref(m) otherwise (rref is unique), so they are reused below.
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == m.cols()) return std::nullopt;
    std::vector<int> offset(m.cols(), 0);
    for (int i = 0; i < rr.rank; ++i) offset[rr.pivot_cols[i]] = rr.reduced.repr_at(i, m.cols());
    std::vector<int> body_cols(m.cols());
    for (int j = 0; j < m.cols(); ++j) body_cols[j] = j;
    return AffineCoset{std::move(offset), kernel_from_reduced(rr.pivot_cols, rr.reduced.columns(body_cols))};
}

int projected_dim(const MatrixFq& generators, const std::vector<int>& cols) {
    return rank(generators.columns(cols));
}

void validate_index_subset(const std::vector<int>& subset, int bound) {
    int prev = -1;
    for (int idx : subset) {
        if (idx < 0 || idx >= bound)
            throw DomainError("coordinate index " + std::to_string(idx) + " out of range [0, " +
                              std::to_string(bound) + ")");
        if (idx <= prev) throw DomainError("coordinate subset must be strictly ascending");
        prev = idx;
    }
}

std::uint64_t coset_size_checked(int q, int basis_rows, std::uint64_t cap) {
    std::uint64_t size = 1;
    for (int i = 0; i < basis_rows; ++i) {
        if (size > cap / static_cast<std::uint64_t>(q))
            throw CapError("coset size " + std::to_string(q) + "^" + std::to_string(basis_rows) +
                           " exceeds enumeration cap " + std::to_string(cap));
        size *= static_cast<std::uint64_t>(q);
    }
    if (size > cap)
        throw CapError("coset size " + std::to_string(size) + " exceeds enumeration cap " +
                       std::to_string(cap));
    return size;
}

std::vector<std::vector<int>> enumerate_coset(const AffineCoset& coset, std::uint64_t cap) {
    const MatrixFq& basis = coset.basis;
    if (static_cast<int>(coset.offset.size()) != basis.cols() && basis.rows() > 0)
        throw DomainError("coset offset length does not match basis width");
    const gf::FieldSpec& f = basis.field();
    const int q = f.order();
    const int k = basis.rows();
    const std::uint64_t size = coset_size_checked(q, k, cap);
    std::vector<std::vector<int>> out;
    out.reserve(size);
    std::vector<int> coeffs(k, 0);
    for (std::uint64_t t = 0; t < size; ++t) {
        std::uint64_t rem = t;
        for (int i = k - 1; i >= 0; --i) {
            coeffs[i] = static_cast<int>(rem % q);
            rem /= q;
        }
        std::vector<int> v = coset.offset;
        for (int i = 0; i < k; ++i) {
            if (coeffs[i] == 0) continue;
            for (int j = 0; j < basis.cols(); ++j)
                v[j] = f.add_repr(v[j], f.mul_repr(coeffs[i], basis.repr_at(i, j)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace agqss::fqmat
