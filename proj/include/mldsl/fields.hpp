/*
   Copyright 2026 The mldsl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "mldsl/errors.hpp"

namespace mldsl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Default prime for the fast coefficient backend: 2^31 - 1 (Mersenne).
inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;

/// Primes below this are rejected for the modular backend.
inline constexpr std::uint64_t kMinPrime = 1ull << 20;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Exact rational coefficients. Elements are always stored in lowest terms
/// with positive denominator (boost keeps the canonical form).
class RationalField {
   public:
    using Elem = BigRational;
    static constexpr bool is_prime_field = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }

    Elem from_fraction(const BigInt& num, const BigInt& den) const {
        if (den == 0) throw DomainError("rational with zero denominator");
        return Elem(num, den);
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_negative(const Elem& a) const { return a < 0; }

    std::string str(const Elem& a) const { return a.str(); }

    Elem from_string(const std::string& s) const { return Elem(s); }

    /// Scales a coefficient sequence (leading first) to the canonical
    /// representative of its scaling class: integer coefficients, content 1,
    /// positive leading coefficient.
    void scale_canonical(std::vector<Elem>& cs) const {
        if (cs.empty()) return;
        BigInt l = 1;
        for (const Elem& c : cs) l = lcm(l, denominator(c));
        std::vector<BigInt> ns;
        ns.reserve(cs.size());
        BigInt g = 0;
        for (const Elem& c : cs) {
            BigInt n = numerator(c) * (l / denominator(c));
            g = gcd(g, n);
            ns.push_back(std::move(n));
        }
        if (g == 0) return;
        if (ns.front() < 0) g = -g;
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = Elem(ns[i] / g);
    }

    std::string describe() const { return "q"; }

    bool operator==(const RationalField&) const { return true; }
};

/// Z/p for a runtime prime p. Elements are canonical representatives in
/// [0, p). All elements of one computation must come from the same field.
class PrimeField {
   public:
    using Elem = std::uint64_t;
    static constexpr bool is_prime_field = true;

    explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
        if (p <= kMinPrime) throw DomainError("prime field modulus must exceed 2^20");
        if (!is_prime_u64(p)) throw DomainError("prime field modulus " + std::to_string(p) + " is not prime");
        if (p >= (1ull << 62)) throw DomainError("prime field modulus too large");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    Elem from_fraction(const BigInt& num, const BigInt& den) const {
        Elem n = reduce_bigint(num);
        Elem d = reduce_bigint(den);
        if (d == 0) throw DomainError("denominator is divisible by the field characteristic");
        return mul(n, inv(d));
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return detail::mulmod_u64(a, b, p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("division by zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }
    /// Symmetric-lift sign, used only for display.
    bool is_negative(Elem a) const { return a > p_ / 2; }

    /// Renders with the symmetric lift in (-p/2, p/2] so small negative
    /// values read naturally and still parse back to the same element.
    std::string str(Elem a) const {
        if (is_negative(a)) return "-" + std::to_string(p_ - a);
        return std::to_string(a);
    }

    Elem from_string(const std::string& s) const {
        BigInt v(s);
        return reduce_bigint(v);
    }

    /// Monic scaling: divide through by the leading coefficient.
    void scale_canonical(std::vector<Elem>& cs) const {
        if (cs.empty() || cs.front() == 1) return;
        Elem k = inv(cs.front());
        for (Elem& c : cs) c = mul(c, k);
    }

    std::string describe() const { return "fp:" + std::to_string(p_); }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

   private:
    Elem reduce_bigint(const BigInt& v) const {
        BigInt r = v % BigInt(p_);
        if (r < 0) r += BigInt(p_);
        return r.convert_to<std::uint64_t>();
    }

    std::uint64_t p_;
};

}  // namespace mldsl
