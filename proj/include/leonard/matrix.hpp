#ifndef LEONARD_MATRIX_HPP
#define LEONARD_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

struct matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vector = std::vector<FieldElement>;

// Dimensions in this library are desk scale. Larger inputs are rejected up
// front so entry blow-up stays bounded.
inline constexpr std::size_t kMaxDim = 64;

/// Dense exact matrix over a fixed field, row major, 0-indexed.
class ExactMatrix {
public:
    ExactMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(const FieldSpec& spec, std::size_t n);
    static ExactMatrix from_rows(const FieldSpec& spec,
                                 const std::vector<std::vector<std::string>>& rows);

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const FieldElement& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    FieldElement& at(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scale(const FieldElement& c) const;
    ExactMatrix transpose() const;
    ExactMatrix pow(std::size_t e) const;

    Vector apply(const Vector& v) const;

    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> entries_;
};

/// Coefficients low degree first; leading coefficient nonzero unless zero poly.
class ExactPolynomial {
public:
    ExactPolynomial(const FieldSpec& spec, std::vector<FieldElement> coeffs);

    static ExactPolynomial zero(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    FieldElement eval(const FieldElement& x) const;
    ExactMatrix eval(const ExactMatrix& X) const;

    ExactPolynomial operator*(const ExactPolynomial& o) const;
    bool operator==(const ExactPolynomial& o) const;

    // Quotient by (x - r); requires r to be a root.
    ExactPolynomial deflate(const FieldElement& r) const;

private:
    FieldSpec spec_;
    std::vector<FieldElement> coeffs_;
};

/// Invertible change of basis: columns of `forward` are the new basis vectors
/// expressed in the old coordinates.
struct BasisChange {
    ExactMatrix forward;
    ExactMatrix inverse;

    static BasisChange from_columns(const ExactMatrix& cols);
};

struct RowReduction {
    std::size_t rank;
    std::vector<Vector> kernel; // basis of the right kernel
};

std::size_t rank(const ExactMatrix& X);
std::vector<Vector> kernel_basis(const ExactMatrix& X);
RowReduction row_reduce(const ExactMatrix& X);

ExactMatrix inverse(const ExactMatrix& X); // throws matrix_error if singular

// Solve X a = b; throws if X is singular.
Vector solve(const ExactMatrix& X, const Vector& b);

// Monic characteristic polynomial det(lambda*I - X). Division-free
// (Berkowitz); over Q the input is cleared to integers first so all
// intermediates stay integral.
ExactPolynomial char_poly(const ExactMatrix& X);

// Minimal polynomial, monic, via the first linear dependence among powers.
ExactPolynomial minimal_polynomial(const ExactMatrix& X);

struct RootReport {
    std::vector<std::pair<FieldElement, std::size_t>> roots; // (root, multiplicity)
    bool splits; // true iff sum of multiplicities == degree
};

// All roots of f lying in its field of definition, with multiplicities.
// Over Q: rational-root candidates on the integer-cleared polynomial.
// Over GF(p): exhaustive evaluation (p is desk scale here).
RootReport roots_in_field(const ExactPolynomial& f);

// New matrix of the same operator after the change of basis:
// inverse * X * forward.
ExactMatrix represent(const ExactMatrix& X, const BasisChange& basis);

bool is_irreducible_tridiagonal(const ExactMatrix& X);

// Verifies the entry formulas for powers of an irreducible tridiagonal
// matrix: (X^r)_{ij} = 0 for r < |i-j|, and the sub/superdiagonal product
// formulas at r = |i-j|.
bool tridiagonal_power_entry_check(const ExactMatrix& X);

} // namespace leonard

#endif
