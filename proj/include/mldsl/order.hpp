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

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>

#include "mldsl/errors.hpp"

namespace mldsl {

enum class OrderKind : std::uint8_t { Lex, GrevLex, BlockElim };

/// A monomial order. Lex and GrevLex are the usual global orders; BlockElim
/// is an elimination order for the first `elim_count` ring variables: any
/// monomial involving one of them exceeds every monomial in the rest.
/// Comparison: total degree in the leading block first, then `inner` within
/// the leading block, then `inner` on the remaining variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int elim_count = 0;       // BlockElim only
    OrderKind inner = OrderKind::GrevLex;  // BlockElim only

    static MonomialOrder lex() { return {OrderKind::Lex, 0, OrderKind::Lex}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0, OrderKind::GrevLex}; }
    static MonomialOrder block_elim(int k, OrderKind inner = OrderKind::GrevLex) {
        if (k < 0) throw DomainError("negative elimination block");
        return {OrderKind::BlockElim, k, inner};
    }

    std::string to_string() const {
        switch (kind) {
            case OrderKind::Lex:
                return "lex";
            case OrderKind::GrevLex:
                return "grevlex";
            case OrderKind::BlockElim:
                return "elim(" + std::to_string(elim_count) + "," +
                       (inner == OrderKind::Lex ? "lex" : "grevlex") + ")";
        }
        return "?";
    }

    friend auto operator<=>(const MonomialOrder& a, const MonomialOrder& b) {
        return std::tie(a.kind, a.elim_count, a.inner) <=> std::tie(b.kind, b.elim_count, b.inner);
    }
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

/// -1 / 0 / +1 comparison of exponent ranges under a non-block order.
inline int cmp_exponent_range(const std::int32_t* a, const std::int32_t* b, int n, OrderKind kind) {
    if (kind == OrderKind::Lex) {
        for (int i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // grevlex: degree first, ties broken by the reversed exponent scan —
    // the rightmost differing entry decides, smaller entry wins.
    long da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

inline int cmp_exponents(const std::int32_t* a, const std::int32_t* b, int n, const MonomialOrder& o) {
    if (o.kind != OrderKind::BlockElim) return cmp_exponent_range(a, b, n, o.kind);
    int k = o.elim_count;
    if (k > n) k = n;
    long da = 0, db = 0;
    for (int i = 0; i < k; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    if (int c = cmp_exponent_range(a, b, k, o.inner); c != 0) return c;
    return cmp_exponent_range(a + k, b + k, n - k, o.inner);
}

}  // namespace detail

}  // namespace mldsl
