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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mldsl/errors.hpp"
#include "mldsl/monomial.hpp"

namespace mldsl {

enum class BlockRole : std::uint8_t { Auxiliary, PrimalP, DualB, DataU };

inline std::string block_role_name(BlockRole r) {
    switch (r) {
        case BlockRole::Auxiliary:
            return "auxiliary";
        case BlockRole::PrimalP:
            return "primal-p";
        case BlockRole::DualB:
            return "dual-b";
        case BlockRole::DataU:
            return "data-u";
    }
    return "?";
}

inline BlockRole block_role_from_name(const std::string& s) {
    if (s == "auxiliary") return BlockRole::Auxiliary;
    if (s == "primal-p") return BlockRole::PrimalP;
    if (s == "dual-b") return BlockRole::DualB;
    if (s == "data-u") return BlockRole::DataU;
    throw DomainError("unknown block role '" + s + "'");
}

struct VarBlock {
    BlockRole role;
    int count;

    friend bool operator==(const VarBlock&, const VarBlock&) = default;
};

/// A polynomial ring: an ordered list of named variables partitioned into
/// consecutive role blocks, over a fixed coefficient field. Immutable; share
/// through RingPtr.
template <class F>
class PolyRing {
   public:
    PolyRing(F field, std::vector<std::string> vars, std::vector<VarBlock> blocks)
        : field_(std::move(field)), vars_(std::move(vars)), blocks_(std::move(blocks)) {
        if (vars_.empty()) throw DomainError("ring needs at least one variable");
        if (static_cast<int>(vars_.size()) > kMaxVars)
            throw DomainError("ring exceeds the supported variable count (" + std::to_string(kMaxVars) + ")");
        int covered = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i].count <= 0) throw DomainError("empty ring block");
            if (blocks_[i].role == BlockRole::Auxiliary && i != 0)
                throw DomainError("auxiliary variables must form the first block");
            covered += blocks_[i].count;
        }
        if (covered != static_cast<int>(vars_.size())) throw DomainError("ring blocks do not cover the variables");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto [it, fresh] = index_.emplace(vars_[i], static_cast<int>(i));
            (void)it;
            if (!fresh) throw DomainError("duplicate variable name '" + vars_[i] + "'");
        }
    }

    static std::shared_ptr<const PolyRing> create(F field, std::vector<std::string> vars,
                                                  std::vector<VarBlock> blocks) {
        return std::make_shared<const PolyRing>(std::move(field), std::move(vars), std::move(blocks));
    }

    /// Single-block ring (role PrimalP) — the generic-utility shape.
    static std::shared_ptr<const PolyRing> create(F field, std::vector<std::string> vars) {
        VarBlock b{BlockRole::PrimalP, static_cast<int>(vars.size())};
        return create(std::move(field), std::move(vars), {b});
    }

    int size() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
    const std::vector<VarBlock>& blocks() const { return blocks_; }
    const F& field() const { return field_; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw DomainError("unknown variable '" + name + "'");
        return it->second;
    }

    bool has_variable(const std::string& name) const { return index_.count(name) > 0; }

    /// [first, first+count) of the first block with the given role.
    std::pair<int, int> block_range(BlockRole role) const {
        int at = 0;
        for (const VarBlock& b : blocks_) {
            if (b.role == role) return {at, b.count};
            at += b.count;
        }
        throw DomainError("ring has no '" + block_role_name(role) + "' block");
    }

    bool same_as(const PolyRing& other) const {
        return field_ == other.field_ && vars_ == other.vars_ && blocks_ == other.blocks_;
    }

   private:
    F field_;
    std::vector<std::string> vars_;
    std::vector<VarBlock> blocks_;
    std::map<std::string, int> index_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a && b && a->same_as(*b));
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b, const char* what) {
    if (!same_ring(a, b)) throw RingMismatchError(std::string(what) + ": operands in different rings");
}

/// New ring with a fresh auxiliary variable prepended (aux block first).
/// The name avoids user-visible alphabets, so it never collides.
template <class F>
RingPtr<F> extend_with_aux(const RingPtr<F>& ring, const std::string& hint = "@t") {
    std::string name = hint;
    int k = 0;
    while (ring->has_variable(name)) name = hint + std::to_string(k++);
    std::vector<std::string> vars;
    vars.reserve(ring->var_names().size() + 1);
    vars.push_back(name);
    vars.insert(vars.end(), ring->var_names().begin(), ring->var_names().end());
    std::vector<VarBlock> blocks;
    blocks.push_back({BlockRole::Auxiliary, 1});
    for (const VarBlock& b : ring->blocks()) blocks.push_back(b);
    return PolyRing<F>::create(ring->field(), std::move(vars), std::move(blocks));
}

/// Ring with variables reordered by perm (new position i holds old variable
/// perm[i]). Internal helper for elimination; block structure collapses to a
/// single block.
template <class F>
RingPtr<F> permuted_ring(const RingPtr<F>& ring, const std::vector<int>& perm) {
    std::vector<std::string> vars;
    vars.reserve(perm.size());
    for (int old : perm) vars.push_back(ring->var_name(old));
    return PolyRing<F>::create(ring->field(), std::move(vars));
}

/// Ring keeping exactly the variables not listed in `removed` (sorted
/// ascending), with block structure restricted accordingly.
template <class F>
RingPtr<F> subring_without(const RingPtr<F>& ring, const std::vector<int>& removed) {
    std::vector<bool> drop(static_cast<std::size_t>(ring->size()), false);
    for (int i : removed) drop[static_cast<std::size_t>(i)] = true;
    std::vector<std::string> vars;
    std::vector<VarBlock> blocks;
    int at = 0;
    for (const VarBlock& b : ring->blocks()) {
        int kept = 0;
        for (int i = at; i < at + b.count; ++i) {
            if (!drop[static_cast<std::size_t>(i)]) {
                vars.push_back(ring->var_name(i));
                ++kept;
            }
        }
        if (kept > 0) blocks.push_back({b.role, kept});
        at += b.count;
    }
    if (vars.empty()) throw DomainError("cannot eliminate every variable of a ring");
    return PolyRing<F>::create(ring->field(), std::move(vars), std::move(blocks));
}

}  // namespace mldsl
