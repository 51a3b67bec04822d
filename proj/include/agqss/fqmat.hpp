#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "agqss/errors.hpp"
#include "agqss/gf.hpp"

namespace agqss::fqmat {

/// Dense matrix over a finite field. Entries are stored as representations
/// (row major); the spec shared_ptr keeps the field alive. Zero-sized
/// dimensions are legal and behave like the empty matrix.
class MatrixFq {
 public:
    MatrixFq(std::shared_ptr<const gf::FieldSpec> spec, int rows, int cols);

    static MatrixFq from_rows(std::shared_ptr<const gf::FieldSpec> spec,
                              const std::vector<std::vector<int>>& rows);
    static MatrixFq identity(std::shared_ptr<const gf::FieldSpec> spec, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const gf::FieldSpec& field() const { return *spec_; }
    std::shared_ptr<const gf::FieldSpec> field_ptr() const { return spec_; }

    int repr_at(int r, int c) const;
    void set_repr(int r, int c, int repr);
    gf::FieldElement at(int r, int c) const;
    void set(int r, int c, gf::FieldElement v);

    std::vector<int> row_reprs(int r) const;

    /// Submatrix keeping the given columns, in the given order.
    MatrixFq columns(const std::vector<int>& cols) const;
    MatrixFq transposed() const;

    bool operator==(const MatrixFq& other) const;

 private:
    std::shared_ptr<const gf::FieldSpec> spec_;
    int rows_;
    int cols_;
    std::vector<int> data_;

    void check_index(int r, int c) const;
};

MatrixFq matmul(const MatrixFq& a, const MatrixFq& b);
MatrixFq hstack(const MatrixFq& a, const MatrixFq& b);
MatrixFq vstack(const MatrixFq& a, const MatrixFq& b);

/// v * M for a row vector v of length M.rows(); result length M.cols().
std::vector<int> mul_left(const std::vector<int>& v, const MatrixFq& m);
/// M * v for a column vector v of length M.cols(); result length M.rows().
std::vector<int> mul_right(const MatrixFq& m, const std::vector<int>& v);

struct RrefResult {
    MatrixFq reduced;
    int rank;
    std::vector<int> pivot_cols;  // ascending
};

/// Reduced row echelon form with deterministic pivoting: columns scanned left
/// to right, first nonzero row at or below the pivot row is chosen.
RrefResult rref(const MatrixFq& m);

int rank(const MatrixFq& m);

/// Basis of the right kernel {v : M v = 0}. Rows of the result are the basis
/// vectors, one per free column of rref(M) in ascending column order, each
/// carrying a 1 in its own free coordinate.
MatrixFq kernel_basis(const MatrixFq& m);

/// Solution set of M x = b as offset + row span of basis. offset is the
/// particular solution with all free coordinates zero.
struct AffineCoset {
    std::vector<int> offset;
    MatrixFq basis;
};

std::optional<AffineCoset> solve_affine(const MatrixFq& m, const std::vector<int>& b);

/// Rank of the generator matrix restricted to the given coordinates, i.e. the
/// dimension of the code spanned by the rows after puncturing to cols.
int projected_dim(const MatrixFq& generators, const std::vector<int>& cols);

inline constexpr std::uint64_t kDefaultCosetCap = 1u << 20;

/// All |F|^k members of the coset, k = basis rows. Element i uses the base-q
/// digits of i as basis coefficients, basis row 0 in the most significant
/// digit, so output order is deterministic. Throws CapError when the coset
/// size exceeds cap.
std::vector<std::vector<int>> enumerate_coset(const AffineCoset& coset,
                                              std::uint64_t cap = kDefaultCosetCap);

/// Number of coset members (q^k) if it fits in uint64 and the cap, else throws
/// CapError naming the size.
std::uint64_t coset_size_checked(int q, int basis_rows, std::uint64_t cap);

/// Validates a 0-based coordinate subset: strictly ascending, inside
/// [0, bound). Throws DomainError otherwise.
void validate_index_subset(const std::vector<int>& subset, int bound);

}  // namespace agqss::fqmat
