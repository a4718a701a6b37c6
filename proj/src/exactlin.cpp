#include "monicrep/exactlin.hpp"

#include <algorithm>

namespace monicrep::exactlin {

Rational::Rational(BigInt n, BigInt d) {
    if (d.is_zero()) throw Error(ErrorCode::BadField, "rational with zero denominator");
    if (n.is_zero()) {
        num = BigInt(0);
        den = BigInt(1);
        return;
    }
    if (d.is_negative()) {
        n = -n;
        d = -d;
    }
    BigInt g = BigInt::gcd(n, d);
    num = n / g;
    den = d / g;
}

static bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31))
        throw Error(ErrorCode::BadField, "prime characteristic too large: " + std::to_string(p));
    if (!is_prime_i64(p)) throw Error(ErrorCode::BadField, std::to_string(p) + " is not prime");
    return Field(Kind::PrimeField, p);
}

Field Field::rationals() { return Field(Kind::Rationals, 0); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
    if (kind_ == Kind::PrimeField) {
        std::int64_t r = v % p_;
        if (r < 0) r += p_;
        return Scalar(r);
    }
    return Scalar(Rational(BigInt(v), BigInt(1)));
}

Scalar Field::from_fraction(const BigInt& num, const BigInt& den) const {
    if (kind_ == Kind::Rationals) return Scalar(Rational(num, den));
    BigInt p(p_);
    BigInt nr = num % p;
    BigInt dr = den % p;
    std::int64_t n = nr.to_int64();
    std::int64_t d = dr.to_int64();
    if (n < 0) n += p_;
    if (d < 0) d += p_;
    if (d == 0) throw Error(ErrorCode::BadField, "denominator not invertible mod p");
    Scalar dn(d);
    return mul(Scalar(n), inv(dn));
}

Scalar Field::parse(const std::string& s) const {
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_fraction(BigInt::from_string(s), BigInt(1));
    return from_fraction(BigInt::from_string(s.substr(0, slash)),
                         BigInt::from_string(s.substr(slash + 1)));
}

std::string Field::to_string(const Scalar& s) const {
    if (kind_ == Kind::PrimeField) return std::to_string(s.residue());
    const Rational& r = s.rational();
    if (r.den == BigInt(1)) return r.num.to_string();
    return r.num.to_string() + "/" + r.den.to_string();
}

bool Field::is_zero(const Scalar& a) const {
    return kind_ == Kind::PrimeField ? a.residue() == 0 : a.rational().num.is_zero();
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::PrimeField) {
        std::int64_t r = a.residue() + b.residue();
        if (r >= p_) r -= p_;
        return Scalar(r);
    }
    const Rational &x = a.rational(), &y = b.rational();
    return Scalar(Rational(x.num * y.den + y.num * x.den, x.den * y.den));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::PrimeField) return Scalar((a.residue() * b.residue()) % p_);
    const Rational &x = a.rational(), &y = b.rational();
    return Scalar(Rational(x.num * y.num, x.den * y.den));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::PrimeField) return a.residue() == 0 ? a : Scalar(p_ - a.residue());
    const Rational& x = a.rational();
    Rational r;
    r.num = -x.num;
    r.den = x.den;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw Error(ErrorCode::BadField, "inverse of zero");
    if (kind_ == Kind::PrimeField) {
        // extended Euclid
        std::int64_t t = 0, newt = 1, r = p_, newr = a.residue();
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return Scalar(t);
    }
    const Rational& x = a.rational();
    return Scalar(Rational(x.den, x.num));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar into_field(const Scalar& s, const Field& src, const Field& dst) {
    if (src == dst) return s;
    if (src.kind() == Field::Kind::Rationals) {
        const Rational& r = s.rational();
        return dst.from_fraction(r.num, r.den);
    }
    return dst.from_int(s.residue());
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, f.zero()) {}

Matrix Matrix::identity(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!field_.is_zero(x)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw Error(ErrorCode::DimensionMismatch, "matrix add shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.neg(e_[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
        throw Error(ErrorCode::DimensionMismatch, "matrix mul shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (field_.is_zero(a)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (field_.is_zero(b)) continue;
                r.set(i, j, field_.add(r.at(i, j), field_.mul(a, b)));
            }
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(rows_, cols_, field_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.mul(e_[i], c);
    return r;
}

Matrix Matrix::column(std::size_t c) const { return columns(c, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw Error(ErrorCode::DimensionMismatch, "column slice out of range");
    Matrix r(rows_, count, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) r.set(i, j, at(i, first + j));
    return r;
}

Matrix hstack(std::span<const Matrix> ms, std::size_t rows, const Field& f) {
    std::size_t cols = 0;
    for (const auto& m : ms) {
        if (m.rows() != rows || m.field() != f)
            throw Error(ErrorCode::DimensionMismatch, "hstack codomain mismatch");
        cols += m.cols();
    }
    Matrix r(rows, cols, f);
    std::size_t off = 0;
    for (const auto& m : ms) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, off + j, m.at(i, j));
        off += m.cols();
    }
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    const Matrix ms[] = {a, b};
    return hstack(std::span<const Matrix>(ms, 2), a.rows(), a.field());
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || a.field() != b.field())
        throw Error(ErrorCode::DimensionMismatch, "vstack domain mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
    return r;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::DimensionMismatch, "block_diag field mismatch");
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::DimensionMismatch, "kron field mismatch");
    const Field& f = a.field();
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), f);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (f.is_zero(a.at(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.set(i * b.rows() + k, j * b.cols() + l, f.mul(a.at(i, j), b.at(k, l)));
        }
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t pivot = r.rows();
        for (std::size_t i = row; i < r.rows(); ++i) {
            if (!f.is_zero(r.at(i, col))) {
                pivot = i;
                break;
            }
        }
        if (pivot == r.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                Scalar tmp = r.at(row, j);
                r.set(row, j, r.at(pivot, j));
                r.set(pivot, j, tmp);
            }
        }
        Scalar piv_inv = f.inv(r.at(row, col));
        for (std::size_t j = col; j < r.cols(); ++j) r.set(row, j, f.mul(r.at(row, j), piv_inv));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            const Scalar& factor = r.at(i, col);
            if (f.is_zero(factor)) continue;
            Scalar cf = factor; // r.at(i,col) changes below
            for (std::size_t j = col; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(cf, r.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const Field& f = m.field();
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (pi < rr.pivots.size() && rr.pivots[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Matrix k(m.cols(), free_cols.size(), f);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k.set(fc, j, f.one());
        for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
            k.set(rr.pivots[pi], j, f.neg(rr.mat.at(pi, fc)));
    }
    return k;
}

bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }

bool sum_is_direct(std::span<const Matrix> maps, std::size_t codomain_dim, const Field& f) {
    for (const auto& m : maps)
        if (m.rows() != codomain_dim || m.field() != f)
            throw Error(ErrorCode::DimensionMismatch, "sum_is_direct codomain mismatch");
    if (maps.empty()) return true;
    std::size_t total = 0;
    for (const auto& m : maps) total += rank(m);
    Matrix cat = hstack(maps, codomain_dim, f);
    return rank(cat) == total;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows() || m.field() != b.field())
        throw Error(ErrorCode::DimensionMismatch, "solve row counts disagree");
    RrefResult rr = rref(hstack(m, b));
    const Field& f = m.field();
    for (std::size_t p : rr.pivots)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.cols(), b.cols(), f);
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(rr.pivots[pi], j, rr.mat.at(pi, m.cols() + j));
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.rows(), m.field()));
}

Matrix column_space_basis(const Matrix& m) {
    // rref of the transpose: its nonzero rows are a canonical basis of the
    // column space, independent of the spanning set given.
    RrefResult rr = rref(m.transpose());
    std::size_t r = rr.pivots.size();
    Matrix basis(m.rows(), r, m.field());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) basis.set(j, i, rr.mat.at(i, j));
    return basis;
}

QuotientMaps quotient_maps(const Matrix& subspace_cols, std::size_t ambient_dim) {
    const Field& f = subspace_cols.field();
    if (subspace_cols.rows() != ambient_dim)
        throw Error(ErrorCode::DimensionMismatch, "quotient subspace lives in the wrong space");
    Matrix v = column_space_basis(subspace_cols);
    std::size_t r = v.cols();
    // Complete to a basis with standard vectors, smallest index first.
    Matrix t = v;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < ambient_dim && chosen.size() < ambient_dim - r; ++i) {
        Matrix e(ambient_dim, 1, f);
        e.set(i, 0, f.one());
        Matrix cand = hstack(t, e);
        if (rank(cand) > rank(t)) {
            t = std::move(cand);
            chosen.push_back(i);
        }
    }
    Matrix tinv = *inverse(t);
    std::size_t c = ambient_dim - r;
    Matrix proj(c, ambient_dim, f);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) proj.set(i, j, tinv.at(r + i, j));
    Matrix sect(ambient_dim, c, f);
    for (std::size_t i = 0; i < c; ++i) sect.set(chosen[i], i, f.one());
    return {std::move(proj), std::move(sect)};
}

} // namespace monicrep::exactlin
