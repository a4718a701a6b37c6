#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monicrep {

// Arbitrary-precision signed integer, sign/magnitude with base-2^32 limbs.
// Small by design: only the operations the exact linear algebra needs.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_string(const std::string& s); // decimal, optional leading '-'

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated toward zero, as in C. o must be nonzero.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return o <= *this; }

    BigInt abs() const;
    std::string to_string() const;

    // Fits in int64? (used by tests and the F_p fast path)
    bool fits_int64() const;
    std::int64_t to_int64() const;

    static BigInt gcd(const BigInt& a, const BigInt& b); // nonnegative
    static void divmod(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r);

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian, no trailing zero limbs

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& n, const std::vector<std::uint32_t>& d,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

} // namespace monicrep
