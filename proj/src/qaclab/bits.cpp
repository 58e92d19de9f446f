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

#include "qaclab/bits.hpp"

#include <bit>

#include "qaclab/errors.hpp"

namespace qaclab {

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error([&] {
          std::string msg;
          for (size_t i = 0; i < issues.size(); i++) {
              if (i) {
                  msg += "; ";
              }
              msg += issues[i];
          }
          return msg;
      }()),
      issues_(std::move(issues)) {
}

static void check_label(int q) {
    if (q < 1 || q > kMaxQubitLabel) {
        throw InvalidArgument("qubit label " + std::to_string(q) + " outside 1.." + std::to_string(kMaxQubitLabel));
    }
}

QubitSet::QubitSet(std::initializer_list<int> labels) {
    for (int q : labels) {
        insert(q);
    }
}

QubitSet::QubitSet(const std::vector<int> &labels) {
    for (int q : labels) {
        insert(q);
    }
}

QubitSet QubitSet::range(int first, int last) {
    QubitSet s;
    for (int q = first; q <= last; q++) {
        s.insert(q);
    }
    return s;
}

bool QubitSet::contains(int q) const {
    return q >= 1 && q <= kMaxQubitLabel && ((bits_ >> (q - 1)) & 1);
}

void QubitSet::insert(int q) {
    check_label(q);
    bits_ |= uint64_t{1} << (q - 1);
}

void QubitSet::erase(int q) {
    check_label(q);
    bits_ &= ~(uint64_t{1} << (q - 1));
}

int QubitSet::size() const {
    return std::popcount(bits_);
}

int QubitSet::min_label() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
}

int QubitSet::max_label() const {
    return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
}

std::vector<int> QubitSet::labels() const {
    std::vector<int> out;
    out.reserve(size());
    for (uint64_t b = bits_; b; b &= b - 1) {
        out.push_back(std::countr_zero(b) + 1);
    }
    return out;
}

bool QubitSet::lex_less(QubitSet a, QubitSet b) {
    auto la = a.labels();
    auto lb = b.labels();
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

std::string QubitSet::str() const {
    std::string out = "{";
    bool first = true;
    for (int q : labels()) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += std::to_string(q);
    }
    return out + "}";
}

uint64_t index_mask(QubitSet s, int n) {
    uint64_t m = 0;
    for (int q : s.labels()) {
        m |= uint64_t{1} << index_bit(q, n);
    }
    return m;
}

uint64_t gather_bits(uint64_t index, QubitSet s, int n) {
    uint64_t out = 0;
    for (int q : s.labels()) {
        out = (out << 1) | ((index >> index_bit(q, n)) & 1);
    }
    return out;
}

uint64_t scatter_bits(uint64_t packed, QubitSet s, int n) {
    auto labels = s.labels();
    uint64_t out = 0;
    int k = static_cast<int>(labels.size());
    for (int j = 0; j < k; j++) {
        uint64_t bit = (packed >> (k - 1 - j)) & 1;
        out |= bit << index_bit(labels[j], n);
    }
    return out;
}

BitString::BitString(QubitSet domain, uint64_t values) : domain_(domain), values_(values & domain.mask()) {
}

BitString BitString::from_index(uint64_t index, int n) {
    BitString s;
    s.domain_ = QubitSet::range(1, n);
    for (int q = 1; q <= n; q++) {
        if ((index >> index_bit(q, n)) & 1) {
            s.values_ |= uint64_t{1} << (q - 1);
        }
    }
    return s;
}

BitString BitString::ones(QubitSet domain) {
    return BitString(domain, domain.mask());
}

BitString BitString::parse(const std::string &text) {
    if (text.empty() || text.size() > static_cast<size_t>(kMaxQubitLabel)) {
        throw InvalidArgument("bit string must have 1.." + std::to_string(kMaxQubitLabel) + " characters");
    }
    BitString s;
    s.domain_ = QubitSet::range(1, static_cast<int>(text.size()));
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            s.values_ |= uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw InvalidArgument("bit string '" + text + "' contains a character other than 0 or 1");
        }
    }
    return s;
}

int BitString::value(int q) const {
    if (!domain_.contains(q)) {
        throw InvalidArgument("qubit " + std::to_string(q) + " is outside the string's domain " + domain_.str());
    }
    return static_cast<int>((values_ >> (q - 1)) & 1);
}

void BitString::set(int q, int v) {
    if (!domain_.contains(q)) {
        throw InvalidArgument("qubit " + std::to_string(q) + " is outside the string's domain " + domain_.str());
    }
    uint64_t bit = uint64_t{1} << (q - 1);
    values_ = v ? (values_ | bit) : (values_ & ~bit);
}

BitString BitString::restrict_to(QubitSet s) const {
    if (!s.is_subset_of(domain_)) {
        throw InvalidArgument("cannot restrict a string on " + domain_.str() + " to " + s.str());
    }
    return BitString(s, values_);
}

BitString BitString::unite(const BitString &other) const {
    if (domain_.intersects(other.domain_)) {
        throw InvalidArgument("union of strings with overlapping domains " + domain_.str() + " and " +
                              other.domain_.str());
    }
    return BitString(domain_ | other.domain_, values_ | other.values_);
}

int BitString::weight() const {
    return std::popcount(values_);
}

bool BitString::has_zero_in(QubitSet s) const {
    QubitSet inside = s & domain_;
    return (inside.mask() & ~values_) != 0;
}

uint64_t BitString::to_index(int n) const {
    if (domain_ != QubitSet::range(1, n)) {
        throw InvalidArgument("string on " + domain_.str() + " is not a full string on [" + std::to_string(n) + "]");
    }
    uint64_t idx = 0;
    for (int q = 1; q <= n; q++) {
        idx |= static_cast<uint64_t>(value(q)) << index_bit(q, n);
    }
    return idx;
}

std::string BitString::str() const {
    std::string out;
    for (int q : domain_.labels()) {
        out += value(q) ? '1' : '0';
    }
    return out;
}

}  // namespace qaclab
