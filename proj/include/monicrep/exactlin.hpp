#pragma once

#include "monicrep/bigint.hpp"
#include "monicrep/error.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace monicrep::exactlin {

// Reduced fraction with positive denominator; 0 is 0/1.
struct Rational {
    BigInt num;
    BigInt den;

    Rational() : num(0), den(1) {}
    Rational(BigInt n, BigInt d); // canonicalizes
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// A canonical field element: residue 0..p-1 over F_p, reduced fraction over Q.
class Scalar {
public:
    Scalar() : v_(std::int64_t{0}) {}
    explicit Scalar(std::int64_t residue) : v_(residue) {}
    explicit Scalar(Rational r) : v_(std::move(r)) {}

    bool is_residue() const { return std::holds_alternative<std::int64_t>(v_); }
    std::int64_t residue() const { return std::get<std::int64_t>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    std::variant<std::int64_t, Rational> v_;
};

// The ground field: F_p (p prime, verified) or the rationals.
class Field {
public:
    enum class Kind { PrimeField, Rationals };

    static Field prime(std::int64_t p);
    static Field rationals();

    Kind kind() const { return kind_; }
    std::int64_t characteristic() const { return kind_ == Kind::PrimeField ? p_ : 0; }
    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    Scalar from_fraction(const BigInt& num, const BigInt& den) const;
    Scalar parse(const std::string& s) const; // "a" or "a/b"
    std::string to_string(const Scalar& s) const;

    bool is_zero(const Scalar& a) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const; // a must be nonzero
    Scalar div(const Scalar& a, const Scalar& b) const;

private:
    Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_; // 0 for rationals
};

// Moves a scalar between fields: rationals with p-invertible denominator map
// into F_p; residues lift to integers. Identity when fields agree.
Scalar into_field(const Scalar& s, const Field& src, const Field& dst);

// Dense exact matrix, row-major, column-vector convention (m: k^cols -> k^rows).
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Field f);
    static Matrix identity(std::size_t n, Field f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar v) { e_[r * cols_ + c] = std::move(v); }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix transpose() const;
    Matrix scaled(const Scalar& c) const;
    Matrix column(std::size_t c) const;
    Matrix columns(std::size_t first, std::size_t count) const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> e_;
};

Matrix hstack(std::span<const Matrix> ms, std::size_t rows, const Field& f);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
// Block-diagonal sum.
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns form a basis of the null space; m * K = 0.
Matrix kernel_basis(const Matrix& m);
bool is_injective(const Matrix& m);
// True iff the images of the maps form a direct sum inside the shared codomain.
bool sum_is_direct(std::span<const Matrix> maps, std::size_t codomain_dim, const Field& f);
// Some x with m*x = b (b may have several columns), or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

// Canonical basis of the column space (depends only on the subspace).
Matrix column_space_basis(const Matrix& m);

// Quotient by an invariant subspace: projection p (c x n) and section s (n x c)
// with p*s = id and p*subspace = 0 (c = n - dim subspace). Deterministic.
struct QuotientMaps {
    Matrix projection;
    Matrix section;
};
QuotientMaps quotient_maps(const Matrix& subspace_cols, std::size_t ambient_dim);

} // namespace monicrep::exactlin
