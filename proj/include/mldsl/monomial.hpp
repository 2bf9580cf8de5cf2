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

#include <array>
#include <cstdint>
#include <span>

#include "mldsl/errors.hpp"
#include "mldsl/order.hpp"

namespace mldsl {

/// Hard cap on ring size. The pipeline needs 3*(m+1) variables plus one
/// auxiliary, so this covers models with up to 6 states with headroom.
inline constexpr int kMaxVars = 24;

/// Exponent vector with cached total degree. Stored inline so monomial
/// arithmetic never touches the heap.
class Monomial {
   public:
    Monomial() : deg_(0), n_(0) { e_.fill(0); }

    explicit Monomial(int nvars) : deg_(0), n_(static_cast<std::int16_t>(nvars)) {
        if (nvars < 0 || nvars > kMaxVars) throw DomainError("monomial variable count out of range");
        e_.fill(0);
    }

    static Monomial one(int nvars) { return Monomial(nvars); }

    static Monomial variable(int nvars, int idx, int power = 1) {
        Monomial m(nvars);
        m.set(idx, power);
        return m;
    }

    int nvars() const { return n_; }
    long degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    std::int32_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

    void set(int i, std::int32_t v) {
        if (i < 0 || i >= n_) throw DomainError("variable index out of range");
        if (v < 0) throw DomainError("negative exponent");
        deg_ += v - e_[static_cast<std::size_t>(i)];
        e_[static_cast<std::size_t>(i)] = v;
    }

    const std::int32_t* data() const { return e_.data(); }
    std::span<const std::int32_t> exponents() const { return {e_.data(), static_cast<std::size_t>(n_)}; }

    long degree_in(int first, int count) const {
        long d = 0;
        for (int i = first; i < first + count; ++i) d += e_[static_cast<std::size_t>(i)];
        return d;
    }

    Monomial times(const Monomial& o) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) r.e_[i] = e_[i] + o.e_[i];
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (int i = 0; i < n_; ++i) {
            if (e_[i] > o.e_[i]) return false;
        }
        return true;
    }

    /// this / o; requires o.divides(*this).
    Monomial divided_by(const Monomial& o) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i) r.e_[i] = e_[i] - o.e_[i];
        r.deg_ = deg_ - o.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.n_);
        long d = 0;
        for (int i = 0; i < a.n_; ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.n_; ++i) {
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        }
        return true;
    }

    /// Bitmask of variables with positive exponent (nvars <= kMaxVars <= 32).
    std::uint32_t support_mask() const {
        std::uint32_t m = 0;
        for (int i = 0; i < n_; ++i) {
            if (e_[i] > 0) m |= (1u << i);
        }
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        if (a.n_ != b.n_ || a.deg_ != b.deg_) return false;
        for (int i = 0; i < a.n_; ++i) {
            if (a.e_[i] != b.e_[i]) return false;
        }
        return true;
    }

   private:
    std::array<std::int32_t, kMaxVars> e_;
    long deg_;
    std::int16_t n_;
};

/// Three-way comparison under an order: -1 (less), 0, +1 (greater).
inline int compare(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
    if (a.nvars() != b.nvars()) throw RingMismatchError("comparing monomials from different rings");
    if (o.kind == OrderKind::GrevLex) {
        // fast path through the cached degrees
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        const std::int32_t* pa = a.data();
        const std::int32_t* pb = b.data();
        for (int i = a.nvars() - 1; i >= 0; --i) {
            if (pa[i] != pb[i]) return pa[i] < pb[i] ? 1 : -1;
        }
        return 0;
    }
    return detail::cmp_exponents(a.data(), b.data(), a.nvars(), o);
}

}  // namespace mldsl
