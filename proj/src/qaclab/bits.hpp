// Copyright 2026 The qaclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QACLAB_BITS_HPP
#define QACLAB_BITS_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qaclab {

/// Largest qubit label representable in a QubitSet.
inline constexpr int kMaxQubitLabel = 63;

/// A set of 1-based qubit labels. Label q is stored at bit q-1.
class QubitSet {
   public:
    constexpr QubitSet() = default;
    QubitSet(std::initializer_list<int> labels);
    explicit QubitSet(const std::vector<int> &labels);

    static constexpr QubitSet from_mask(uint64_t mask) {
        QubitSet s;
        s.bits_ = mask;
        return s;
    }
    /// The labels first..last inclusive; empty when last < first.
    static QubitSet range(int first, int last);

    bool contains(int q) const;
    void insert(int q);
    void erase(int q);
    int size() const;
    bool empty() const {
        return bits_ == 0;
    }
    uint64_t mask() const {
        return bits_;
    }
    /// Smallest label, or 0 when empty.
    int min_label() const;
    /// Largest label, or 0 when empty.
    int max_label() const;
    /// Ascending labels.
    std::vector<int> labels() const;
    bool is_subset_of(QubitSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    bool intersects(QubitSet other) const {
        return (bits_ & other.bits_) != 0;
    }

    QubitSet operator&(QubitSet o) const {
        return from_mask(bits_ & o.bits_);
    }
    QubitSet operator|(QubitSet o) const {
        return from_mask(bits_ | o.bits_);
    }
    QubitSet operator-(QubitSet o) const {
        return from_mask(bits_ & ~o.bits_);
    }
    bool operator==(const QubitSet &) const = default;

    /// Lexicographic comparison of the ascending label lists.
    static bool lex_less(QubitSet a, QubitSet b);

    /// Formats as "{1,2,3}".
    std::string str() const;

   private:
    uint64_t bits_ = 0;
};

/// Basis-index bit position of qubit q in an n-qubit register. Qubit 1 is the
/// most significant bit: |x> has index sum_i x_i 2^(n-i).
inline int index_bit(int q, int n) {
    return n - q;
}

/// Index-space mask of the qubits in s for an n-qubit register.
uint64_t index_mask(QubitSet s, int n);

/// Reads the bits of `index` selected by the ascending labels of `s` and packs
/// them into a |s|-bit index (smallest label most significant).
uint64_t gather_bits(uint64_t index, QubitSet s, int n);

/// Inverse of gather_bits: spreads a |s|-bit value onto the positions of s.
uint64_t scatter_bits(uint64_t packed, QubitSet s, int n);

/// A 0/1-valued map on a set of qubit labels.
class BitString {
   public:
    BitString() = default;
    BitString(QubitSet domain, uint64_t values);

    /// The string over [n] read from a basis index.
    static BitString from_index(uint64_t index, int n);
    /// Constant-1 string on the domain.
    static BitString ones(QubitSet domain);
    /// Parses "0110" as a string on [4].
    static BitString parse(const std::string &text);

    QubitSet domain() const {
        return domain_;
    }
    int value(int q) const;
    void set(int q, int v);

    /// x restricted to s, which must be a subset of the domain.
    BitString restrict_to(QubitSet s) const;
    /// y u z for disjoint domains.
    BitString unite(const BitString &other) const;

    int weight() const;
    int parity() const {
        return weight() % 2;
    }
    /// True if some position of s (intersected with the domain) holds 0.
    bool has_zero_in(QubitSet s) const;

    /// Basis index in an n-qubit register; the domain must be exactly [n].
    uint64_t to_index(int n) const;

    bool operator==(const BitString &) const = default;
    /// Values in ascending label order, e.g. "011".
    std::string str() const;

   private:
    QubitSet domain_;
    uint64_t values_ = 0;  // bit q-1 holds the value at label q
};

}  // namespace qaclab

#endif
