#ifndef CVLAB_MATRICES_HPP
#define CVLAB_MATRICES_HPP

#include "cvlab/compositions.hpp"
#include "cvlab/exact.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cvlab {

/// Dense matrix over the Gaussian rationals, row-major, exact arithmetic.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols,
                std::vector<GaussianRational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<GaussianRational>& entries() const { return entries_; }

    GaussianRational& at(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const GaussianRational& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    ExactMatrix& operator+=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
        a += b;
        return a;
    }

    /// Schoolbook product; inner dimensions must agree.
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

    /// Entry-wise scaling.
    ExactMatrix scaled(const GaussianRational& c) const;
    ExactMatrix scaled(const Rational& c) const;
    ExactMatrix scaled(const BigInt& c) const;

    /// Hermitian transpose: (A*)[j][i] = conj(A[i][j]).
    ExactMatrix conj_transpose() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
        return !(a == b);
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> entries_;
};

/// Matrix analogue of IdentityReport; lhs/rhs are full matrices so a failing
/// verdict serializes a complete witness.
struct MatrixIdentityReport {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> params;
    ExactMatrix lhs{0, 0};
    ExactMatrix rhs{0, 0};
    bool holds = false;
    std::string note;
};

/// sum weight (sum k_i A_i)  =  C(N,m) * (m/N) * sum n_i A_i.
MatrixIdentityReport check_eq28(const Caps& caps, const std::vector<ExactMatrix>& A,
                                std::int64_t m, std::uint64_t budget = kDefaultBudget);

/// sum weight (sum k_i A_i)^2
///   =  C(N-2,m-1) sum n_i A_i^2 + C(N-2,m-2) (sum n_i A_i)^2,
/// for square A_i of one common order, N >= 2, m >= 1. Conjectural — no
/// proof is on record — so a fails verdict is a finding, not a bug.
MatrixIdentityReport check_eq29(const Caps& caps, const std::vector<ExactMatrix>& A,
                                std::int64_t m, std::uint64_t budget = kDefaultBudget);

/// sum weight (sum k_i A_i)(sum k_i A_i)*
///   =  C(N-2,m-1) sum n_i A_i A_i* + C(N-2,m-2) (sum n_i A_i)(sum n_i A_i)*,
/// for rectangular A_i of one common shape, N >= 2, m >= 1. Also conjectural.
MatrixIdentityReport check_eq30(const Caps& caps, const std::vector<ExactMatrix>& A,
                                std::int64_t m, std::uint64_t budget = kDefaultBudget);

}  // namespace cvlab

#endif
