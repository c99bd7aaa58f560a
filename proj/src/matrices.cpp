#include "cvlab/matrices.hpp"

#include <sstream>

namespace cvlab {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols,
                         std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::domain_error("ExactMatrix: entries length != rows*cols");
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::domain_error("ExactMatrix: dimension mismatch in add");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::domain_error("ExactMatrix: dimension mismatch in mul");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] * c;
    return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] * c;
    return out;
}

ExactMatrix ExactMatrix::scaled(const BigInt& c) const {
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] * c;
    return out;
}

ExactMatrix ExactMatrix::conj_transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

namespace {

std::string caps_to_string(const Caps& caps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (i) os << ",";
        os << caps[i];
    }
    return os.str();
}

std::string dims_to_string(const std::vector<ExactMatrix>& A) {
    if (A.empty()) return "";
    return std::to_string(A.front().rows()) + "x" + std::to_string(A.front().cols());
}

void require_family(const Caps& caps, const std::vector<ExactMatrix>& A,
                    bool square) {
    if (A.size() != caps.size())
        throw std::domain_error("matrix family and caps must have the same length");
    for (const auto& M : A) {
        if (M.rows() != A.front().rows() || M.cols() != A.front().cols())
            throw std::domain_error("all matrices in the family must share dims");
        if (square && M.rows() != M.cols())
            throw std::domain_error("square matrices required");
    }
    if (A.front().rows() == 0 || A.front().cols() == 0)
        throw std::domain_error("matrices must be nonempty");
}

ExactMatrix weighted_sum(const std::vector<ExactMatrix>& A,
                         const BoundedComposition& k) {
    ExactMatrix sum(A.front().rows(), A.front().cols());
    for (std::size_t i = 0; i < A.size(); ++i)
        if (k[i] != 0) sum += A[i].scaled(BigInt(k[i]));
    return sum;
}

ExactMatrix caps_weighted_sum(const std::vector<ExactMatrix>& A, const Caps& caps) {
    ExactMatrix sum(A.front().rows(), A.front().cols());
    for (std::size_t i = 0; i < A.size(); ++i) sum += A[i].scaled(BigInt(caps[i]));
    return sum;
}

}  // namespace

MatrixIdentityReport check_eq28(const Caps& caps, const std::vector<ExactMatrix>& A,
                                std::int64_t m, std::uint64_t budget) {
    require_family(caps, A, /*square=*/false);
    const std::int64_t N = caps.total();
    if (m < 1 || m > N) throw std::domain_error("check_eq28: 1 <= m <= N required");

    MatrixIdentityReport r;
    r.identity_id = "eq28";
    r.params = {{"caps", caps_to_string(caps)},
                {"dims", dims_to_string(A)},
                {"m", std::to_string(m)}};

    ExactMatrix lhs(A.front().rows(), A.front().cols());
    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const BigInt w = composition_weight(en.current(), caps);
        lhs += weighted_sum(A, en.current()).scaled(w);
    }
    r.lhs = std::move(lhs);
    r.rhs = caps_weighted_sum(A, caps).scaled(
        Rational(binomial(N, m)) * make_rational(m, N));
    r.holds = r.lhs == r.rhs;
    return r;
}

namespace {

// Shared by eq29 (B_i = A_i) and eq30 (B_i = A_i*): checks
//   sum weight (sum k_i A_i)(sum k_i B_i)
//     = C(N-2,m-1) sum n_i A_i B_i + C(N-2,m-2) (sum n_i A_i)(sum n_i B_i).
MatrixIdentityReport check_quadratic(const char* id, const Caps& caps,
                                     const std::vector<ExactMatrix>& A,
                                     const std::vector<ExactMatrix>& B,
                                     std::int64_t m, std::uint64_t budget) {
    const std::int64_t N = caps.total();
    if (N < 2) throw std::domain_error(std::string(id) + ": N >= 2 required");
    if (m < 1 || m > N)
        throw std::domain_error(std::string(id) + ": 1 <= m <= N required");

    MatrixIdentityReport r;
    r.identity_id = id;
    r.params = {{"caps", caps_to_string(caps)},
                {"dims", dims_to_string(A)},
                {"m", std::to_string(m)}};

    ExactMatrix lhs(A.front().rows(), B.front().cols());
    CompositionEnumerator en(caps, m, budget);
    while (en.advance()) {
        const BigInt w = composition_weight(en.current(), caps);
        lhs += (weighted_sum(A, en.current()) * weighted_sum(B, en.current()))
                   .scaled(w);
    }
    r.lhs = std::move(lhs);

    ExactMatrix cross(A.front().rows(), B.front().cols());
    for (std::size_t i = 0; i < A.size(); ++i)
        cross += (A[i] * B[i]).scaled(BigInt(caps[i]));
    r.rhs = cross.scaled(binomial(N - 2, m - 1)) +
            (caps_weighted_sum(A, caps) * caps_weighted_sum(B, caps))
                .scaled(binomial(N - 2, m - 2));
    r.holds = r.lhs == r.rhs;
    return r;
}

}  // namespace

MatrixIdentityReport check_eq29(const Caps& caps, const std::vector<ExactMatrix>& A,
                                std::int64_t m, std::uint64_t budget) {
    require_family(caps, A, /*square=*/true);
    return check_quadratic("eq29", caps, A, A, m, budget);
}

MatrixIdentityReport check_eq30(const Caps& caps, const std::vector<ExactMatrix>& A,
                                std::int64_t m, std::uint64_t budget) {
    require_family(caps, A, /*square=*/false);
    std::vector<ExactMatrix> B;
    B.reserve(A.size());
    for (const auto& M : A) B.push_back(M.conj_transpose());
    return check_quadratic("eq30", caps, A, B, m, budget);
}

}  // namespace cvlab
