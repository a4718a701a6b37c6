#include "monicrep/bigint.hpp"

#include "monicrep/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace monicrep {

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with INT64_MIN
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw Error(ErrorCode::ParseError, "bare sign in integer literal");
    BigInt r;
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw Error(ErrorCode::ParseError, "bad digit in integer literal: " + s);
        r = r * ten + BigInt(s[i] - '0');
    }
    if (neg) r = -r;
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Schoolbook long division (Knuth D), quotient digit estimated from the top
// two limbs and corrected; magnitudes only.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& n, const std::vector<std::uint32_t>& d,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(n, d) < 0) {
        r = n;
        return;
    }
    if (d.size() == 1) {
        std::uint64_t dd = d[0];
        q.assign(n.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = n.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | n[i];
            q[i] = static_cast<std::uint32_t>(cur / dd);
            rem = cur % dd;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    {
        std::uint32_t top = d.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
    }
    auto shl = [&](const std::vector<std::uint32_t>& v) {
        if (shift == 0) return v;
        std::vector<std::uint32_t> out(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] |= v[i] << shift;
            out[i + 1] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) >> (32 - shift));
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<std::uint32_t> u = shl(n);
    std::vector<std::uint32_t> v = shl(d);
    std::size_t m = u.size(), t = v.size();
    u.push_back(0);
    q.assign(m - t + 1, 0);

    for (std::size_t k = m - t + 1; k-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[k + t]) << 32) | u[k + t - 1];
        std::uint64_t qhat = num / v[t - 1];
        if (qhat > 0xffffffffu) qhat = 0xffffffffu;
        // Multiply-and-subtract with correction loop (runs at most twice).
        while (true) {
            // compute u[k..k+t] - qhat*v
            std::vector<std::uint32_t> slice(u.begin() + k, u.begin() + k + t + 1);
            std::vector<std::uint32_t> prod = mul_mag(v, {static_cast<std::uint32_t>(qhat & 0xffffffffu),
                                                          static_cast<std::uint32_t>(qhat >> 32)});
            while (!slice.empty() && slice.back() == 0) slice.pop_back();
            if (cmp_mag(prod, slice) > 0) {
                --qhat;
                continue;
            }
            std::vector<std::uint32_t> rest = sub_mag(slice, prod);
            rest.resize(t + 1, 0);
            for (std::size_t i = 0; i <= t; ++i) u[k + i] = rest[i];
            break;
        }
        q[k] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // Remainder: un-normalize.
    while (!u.empty() && u.back() == 0) u.pop_back();
    if (shift) {
        std::vector<std::uint32_t> out(u.size(), 0);
        for (std::size_t i = 0; i < u.size(); ++i) {
            out[i] = u[i] >> shift;
            if (i + 1 < u.size())
                out[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i + 1]) << (32 - shift));
        }
        u = out;
        while (!u.empty() && u.back() == 0) u.pop_back();
    }
    r = u;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    return r;
}

void BigInt::divmod(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r) {
    if (d.sign_ == 0) throw Error(ErrorCode::DimensionMismatch, "BigInt division by zero");
    divmod_mag(n.mag_, d.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : n.sign_ * d.sign_;
    r.sign_ = r.mag_.empty() ? 0 : n.sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> chunks; // base 10^9 digits, little-endian
    std::vector<std::uint32_t> cur = mag_;
    while (!cur.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            std::uint64_t x = (rem << 32) | cur[i];
            cur[i] = static_cast<std::uint32_t>(x / 1000000000u);
            rem = x % 1000000000u;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        chunks.push_back(static_cast<std::uint32_t>(rem));
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= static_cast<std::uint64_t>(INT64_MAX);
    return u <= static_cast<std::uint64_t>(INT64_MAX) + 1;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw Error(ErrorCode::ParseError, "BigInt does not fit in int64");
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u |= mag_[0];
    if (mag_.size() >= 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(u) : static_cast<std::int64_t>(u);
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = y;
        y = r;
    }
    return x;
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::BadField: return "BadField";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::CyclicQuiver: return "CyclicQuiver";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::BadUnit: return "BadUnit";
        case ErrorCode::BadIdempotents: return "BadIdempotents";
        case ErrorCode::BadRadical: return "BadRadical";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::MissingIdempotents: return "MissingIdempotents";
        case ErrorCode::BadBimodule: return "BadBimodule";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::LiftFailed: return "LiftFailed";
        case ErrorCode::WindowTooShort: return "WindowTooShort";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::PreconditionUnknown: return "PreconditionUnknown";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

} // namespace monicrep
