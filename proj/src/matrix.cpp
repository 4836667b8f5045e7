#include "leonard/matrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace leonard {

namespace {

void check_compat(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
    if (a.spec() != b.spec())
        throw matrix_error(std::string(what) + ": mixed fields");
}

} // namespace

ExactMatrix::ExactMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols),
      entries_(rows * cols, FieldElement::zero(spec)) {
    // flattened systems (e.g. vec'd operators) may reach kMaxDim^2 rows
    if (rows == 0 || cols == 0 || rows > kMaxDim * kMaxDim || cols > kMaxDim * kMaxDim)
        throw matrix_error("matrix dimension out of range: " + std::to_string(rows) +
                           "x" + std::to_string(cols));
}

ExactMatrix ExactMatrix::identity(const FieldSpec& spec, std::size_t n) {
    ExactMatrix I(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = FieldElement::one(spec);
    return I;
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& spec,
                                   const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) throw matrix_error("empty matrix literal");
    if (rows.size() > kMaxDim || rows[0].size() > kMaxDim)
        throw matrix_error("matrix literal exceeds the dimension cap of " +
                           std::to_string(kMaxDim));
    ExactMatrix X(spec, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw matrix_error("ragged matrix literal");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            X.at(i, j) = FieldElement::parse(rows[i][j], spec);
    }
    return X;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    check_compat(*this, o, "add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw matrix_error("add: dimension mismatch");
    ExactMatrix r(spec_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    check_compat(*this, o, "sub");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw matrix_error("sub: dimension mismatch");
    ExactMatrix r(spec_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    check_compat(*this, o, "mul");
    if (cols_ != o.rows_) throw matrix_error("mul: dimension mismatch");
    ExactMatrix r(spec_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::scale(const FieldElement& c) const {
    ExactMatrix r(spec_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] * c;
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::pow(std::size_t e) const {
    if (!is_square()) throw matrix_error("pow: non-square matrix");
    ExactMatrix r = identity(spec_, rows_);
    for (std::size_t k = 0; k < e; ++k) r = r * *this;
    return r;
}

Vector ExactMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw matrix_error("apply: dimension mismatch");
    Vector r(rows_, FieldElement::zero(spec_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += at(i, j) * v[j];
    return r;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const FieldElement& x) { return x.is_zero(); });
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           entries_ == o.entries_;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "[") << at(i, j).to_string();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

ExactPolynomial::ExactPolynomial(const FieldSpec& spec, std::vector<FieldElement> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::zero(const FieldSpec& spec) {
    return ExactPolynomial(spec, {});
}

FieldElement ExactPolynomial::eval(const FieldElement& x) const {
    FieldElement r = FieldElement::zero(spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + *it;
    return r;
}

ExactMatrix ExactPolynomial::eval(const ExactMatrix& X) const {
    if (!X.is_square()) throw matrix_error("poly eval: non-square matrix");
    ExactMatrix r(spec_, X.rows(), X.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r = r * X;
        for (std::size_t i = 0; i < X.rows(); ++i)
            r.at(i, i) += *it;
    }
    return r;
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero(spec_);
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1,
                                FieldElement::zero(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return ExactPolynomial(spec_, std::move(c));
}

bool ExactPolynomial::operator==(const ExactPolynomial& o) const {
    return spec_ == o.spec_ && coeffs_ == o.coeffs_;
}

ExactPolynomial ExactPolynomial::deflate(const FieldElement& r) const {
    if (is_zero()) throw matrix_error("deflate: zero polynomial");
    if (!eval(r).is_zero()) throw matrix_error("deflate: not a root");
    // synthetic division by (x - r)
    std::vector<FieldElement> q(coeffs_.size() - 1, FieldElement::zero(spec_));
    FieldElement carry = FieldElement::zero(spec_);
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
        carry = coeffs_[k] + carry * r;
        q[k - 1] = carry;
    }
    return ExactPolynomial(spec_, std::move(q));
}

BasisChange BasisChange::from_columns(const ExactMatrix& cols) {
    return BasisChange{cols, leonard::inverse(cols)};
}

namespace {

// Gaussian elimination over the field; returns echelon form in place,
// pivot column list, and the performed rank.
std::vector<std::size_t> echelonize(std::vector<Vector>& rows, const FieldSpec& spec) {
    std::vector<std::size_t> pivots;
    std::size_t m = rows.size();
    std::size_t n = m ? rows[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && rows[piv][c].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[r]);
        FieldElement s = rows[r][c].inv();
        for (std::size_t j = c; j < n; ++j) rows[r][j] = rows[r][j] * s;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            FieldElement f = rows[i][c];
            for (std::size_t j = c; j < n; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    (void)spec;
    return pivots;
}

std::vector<Vector> matrix_rows(const ExactMatrix& X) {
    std::vector<Vector> rows(X.rows());
    for (std::size_t i = 0; i < X.rows(); ++i) {
        rows[i].reserve(X.cols());
        for (std::size_t j = 0; j < X.cols(); ++j) rows[i].push_back(X.at(i, j));
    }
    return rows;
}

} // namespace

RowReduction row_reduce(const ExactMatrix& X) {
    auto rows = matrix_rows(X);
    auto pivots = echelonize(rows, X.spec());
    RowReduction out;
    out.rank = pivots.size();

    // kernel basis from the reduced echelon form: one vector per free column
    std::vector<bool> is_pivot(X.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < X.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vector v(X.cols(), FieldElement::zero(X.spec()));
        v[c] = FieldElement::one(X.spec());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][c];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const ExactMatrix& X) { return row_reduce(X).rank; }

std::vector<Vector> kernel_basis(const ExactMatrix& X) { return row_reduce(X).kernel; }

ExactMatrix inverse(const ExactMatrix& X) {
    if (!X.is_square()) throw matrix_error("inverse: non-square matrix");
    std::size_t n = X.rows();
    std::vector<Vector> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back(X.at(i, j));
        for (std::size_t j = 0; j < n; ++j)
            rows[i].push_back(i == j ? FieldElement::one(X.spec())
                                     : FieldElement::zero(X.spec()));
    }
    auto pivots = echelonize(rows, X.spec());
    if (pivots.size() != n || pivots.back() != n - 1)
        throw matrix_error("inverse: singular matrix");
    ExactMatrix R(X.spec(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            R.at(i, j) = rows[i][n + j];
    return R;
}

Vector solve(const ExactMatrix& X, const Vector& b) {
    if (!X.is_square() || b.size() != X.rows())
        throw matrix_error("solve: dimension mismatch");
    std::size_t n = X.rows();
    std::vector<Vector> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back(X.at(i, j));
        rows[i].push_back(b[i]);
    }
    auto pivots = echelonize(rows, X.spec());
    if (pivots.size() != n || pivots.back() != n - 1)
        throw matrix_error("solve: singular matrix");
    Vector x(n, FieldElement::zero(X.spec()));
    for (std::size_t i = 0; i < n; ++i) x[i] = rows[i][n];
    return x;
}

namespace {

// Samuelson-Berkowitz: division-free characteristic polynomial. Returns the
// coefficients of det(lambda*I - M), highest degree first.
std::vector<FieldElement> berkowitz(const ExactMatrix& M) {
    const FieldSpec& F = M.spec();
    std::size_t n = M.rows();
    std::vector<FieldElement> V = {FieldElement::one(F), -M.at(0, 0)};
    for (std::size_t i = 1; i < n; ++i) {
        // scalars s_m = R * B^m * C for the leading i x i block B,
        // row R = M[i][0..i-1], column C = M[0..i-1][i]
        Vector w(i, FieldElement::zero(F));
        for (std::size_t k = 0; k < i; ++k) w[k] = M.at(k, i);
        std::vector<FieldElement> s;
        s.reserve(i);
        for (std::size_t m = 0; m < i; ++m) {
            FieldElement dot = FieldElement::zero(F);
            for (std::size_t k = 0; k < i; ++k) dot += M.at(i, k) * w[k];
            s.push_back(dot);
            if (m + 1 < i) {
                Vector w2(i, FieldElement::zero(F));
                for (std::size_t r = 0; r < i; ++r)
                    for (std::size_t k = 0; k < i; ++k)
                        w2[r] += M.at(r, k) * w[k];
                w = std::move(w2);
            }
        }
        const FieldElement& a = M.at(i, i);
        std::vector<FieldElement> nv(i + 2, FieldElement::zero(F));
        for (std::size_t k = 0; k < i + 2; ++k) {
            if (k < V.size()) nv[k] = V[k];
            if (k >= 1 && k - 1 < V.size()) nv[k] -= a * V[k - 1];
            for (std::size_t l = 0; l + 2 <= k; ++l)
                if (l < V.size()) nv[k] -= s[k - l - 2] * V[l];
        }
        V = std::move(nv);
    }
    return V;
}

} // namespace

ExactPolynomial char_poly(const ExactMatrix& X) {
    if (!X.is_square()) throw matrix_error("char_poly: non-square matrix");
    const FieldSpec& F = X.spec();
    std::size_t n = X.rows();

    if (F.kind() == FieldSpec::Kind::Rational) {
        // clear denominators: char_X(l) = c^{-n} char_{cX}(c*l)
        mpz_class c = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                mpz_lcm(c.get_mpz_t(), c.get_mpz_t(),
                        X.at(i, j).rational().get_den().get_mpz_t());
        ExactMatrix M = X.scale(FieldElement::from_mpq(mpq_class(c), F));
        auto V = berkowitz(M); // integral throughout
        std::vector<FieldElement> low(n + 1, FieldElement::zero(F));
        mpz_class ck = 1; // c^k
        for (std::size_t k = 0; k <= n; ++k) {
            mpq_class scaled = V[n - k].rational() * mpq_class(ck);
            mpz_class cn;
            mpz_pow_ui(cn.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n));
            low[k] = FieldElement::from_mpq(scaled / mpq_class(cn), F);
            ck *= c;
        }
        return ExactPolynomial(F, std::move(low));
    }

    auto V = berkowitz(X);
    std::vector<FieldElement> low(n + 1, FieldElement::zero(F));
    for (std::size_t k = 0; k <= n; ++k) low[k] = V[n - k];
    return ExactPolynomial(F, std::move(low));
}

ExactPolynomial minimal_polynomial(const ExactMatrix& X) {
    if (!X.is_square()) throw matrix_error("minimal_polynomial: non-square matrix");
    const FieldSpec& F = X.spec();
    std::size_t n = X.rows();
    std::vector<Vector> powers; // vec(X^k), flattened
    ExactMatrix P = ExactMatrix::identity(F, n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vector flat;
        flat.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat.push_back(P.at(i, j));
        powers.push_back(std::move(flat));
        // does X^k lie in the span of lower powers?
        if (k >= 1) {
            ExactMatrix S(F, n * n, k);
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t r = 0; r < n * n; ++r)
                    S.at(r, c) = powers[c][r];
            // consistent iff rank([S]) == rank([S | X^k])
            ExactMatrix Sb(F, n * n, k + 1);
            for (std::size_t c = 0; c <= k; ++c)
                for (std::size_t r = 0; r < n * n; ++r)
                    Sb.at(r, c) = powers[c][r];
            if (rank(S) == rank(Sb)) {
                // solve S a = vec(X^k) via the kernel of Sb
                auto ker = kernel_basis(Sb);
                for (const auto& v : ker) {
                    if (!v[k].is_zero()) {
                        // sum_c v[c] X^c = 0, v[k] != 0: normalize monic
                        std::vector<FieldElement> coeffs(k + 1, FieldElement::zero(F));
                        for (std::size_t c = 0; c < k; ++c)
                            coeffs[c] = v[c] / v[k];
                        coeffs[k] = FieldElement::one(F);
                        return ExactPolynomial(F, std::move(coeffs));
                    }
                }
            }
        }
        P = P * X;
    }
    throw matrix_error("minimal_polynomial: no dependence found (unreachable)");
}

namespace {

// divisors of |v| by trial division; a remaining cofactor beyond the probe
// bound is kept as a single atom, which covers every case at desk scale
std::vector<mpz_class> positive_divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> primes, exps;
    mpz_class q = 2;
    while (q * q <= v && q < 1000000) {
        if (v % q == 0) {
            mpz_class e = 0;
            while (v % q == 0) { v /= q; e += 1; }
            primes.push_back(q);
            exps.push_back(e);
        }
        q += (q == 2) ? 1 : 2;
    }
    if (v > 1) { primes.push_back(v); exps.push_back(1); }
    std::vector<mpz_class> divs = {1};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::vector<mpz_class> next;
        mpz_class pk = 1;
        for (mpz_class e = 0; e <= exps[i]; e += 1) {
            for (const auto& d : divs) next.push_back(d * pk);
            pk *= primes[i];
        }
        divs = std::move(next);
    }
    return divs;
}

} // namespace

RootReport roots_in_field(const ExactPolynomial& f) {
    if (f.is_zero()) throw matrix_error("roots_in_field: zero polynomial");
    const FieldSpec& F = f.spec();
    RootReport rep;
    ExactPolynomial g = f;

    auto record_root = [&](const FieldElement& r) {
        std::size_t mult = 0;
        while (!g.is_zero() && g.degree() >= 1 && g.eval(r).is_zero()) {
            g = g.deflate(r);
            ++mult;
        }
        if (mult) rep.roots.emplace_back(r, mult);
    };

    if (F.kind() == FieldSpec::Kind::PrimeField) {
        if (F.p() > (1u << 22))
            throw matrix_error("roots_in_field: exhaustive GF(p) search limited to p <= 2^22");
        for (std::uint64_t x = 0; x < F.p() && g.degree() >= 1; ++x)
            record_root(FieldElement::from_integer(static_cast<long>(x), F));
    } else {
        record_root(FieldElement::zero(F));
        if (g.degree() >= 1) {
            // clear to integer coefficients
            mpz_class den = 1;
            for (const auto& c : g.coeffs())
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                        c.rational().get_den().get_mpz_t());
            std::vector<mpz_class> ic;
            for (const auto& c : g.coeffs())
                ic.push_back(mpz_class(c.rational() * mpq_class(den)));
            auto nums = positive_divisors(ic.front());
            auto dens = positive_divisors(ic.back());
            for (const auto& nu : nums)
                for (const auto& de : dens) {
                    for (int sign : {1, -1}) {
                        if (g.degree() < 1) break;
                        mpq_class cand(sign * nu, de);
                        cand.canonicalize();
                        record_root(FieldElement::from_mpq(cand, F));
                    }
                }
        }
    }

    std::size_t total = 0;
    for (const auto& [r, m] : rep.roots) total += m;
    rep.splits = (total == static_cast<std::size_t>(f.degree()));
    return rep;
}

ExactMatrix represent(const ExactMatrix& X, const BasisChange& basis) {
    return basis.inverse * X * basis.forward;
}

bool is_irreducible_tridiagonal(const ExactMatrix& X) {
    if (!X.is_square()) return false;
    std::size_t n = X.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t gap = i > j ? i - j : j - i;
            if (gap > 1 && !X.at(i, j).is_zero()) return false;
            if (gap == 1 && X.at(i, j).is_zero()) return false;
        }
    return true;
}

bool tridiagonal_power_entry_check(const ExactMatrix& X) {
    if (!is_irreducible_tridiagonal(X))
        throw matrix_error("tridiagonal_power_entry_check: input not irreducible tridiagonal");
    std::size_t n = X.rows();
    const FieldSpec& F = X.spec();
    std::vector<ExactMatrix> P; // X^0 .. X^n
    P.push_back(ExactMatrix::identity(F, n));
    for (std::size_t r = 1; r <= n; ++r) P.push_back(P.back() * X);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t gap = i > j ? i - j : j - i;
            for (std::size_t r = 0; r < gap && r <= n; ++r)
                if (!P[r].at(i, j).is_zero()) return false;
            FieldElement prod = FieldElement::one(F);
            if (i <= j)
                for (std::size_t h = i; h < j; ++h) prod *= X.at(h, h + 1);
            else
                for (std::size_t h = j; h < i; ++h) prod *= X.at(h + 1, h);
            if (P[gap].at(i, j) != prod || prod.is_zero()) return false;
        }
    return true;
}

} // namespace leonard
