/*
Copyright 2026 The flexmv Authors

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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace flexmv {

/// Dense row-major bit matrix. Rows are padded to whole 64-bit words so a
/// row can be viewed as a word span and combined with other rows directly.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          words_(rows * words_per_row_, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool test(std::size_t r, std::size_t c) const noexcept {
        return (words_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        auto& w = words_[r * words_per_row_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        w = value ? (w | bit) : (w & ~bit);
    }

    std::span<const std::uint64_t> row(std::size_t r) const noexcept {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }

    /// True if rows `a` and `b` share at least one set column.
    bool rows_intersect(std::size_t a, std::size_t b) const noexcept {
        const auto ra = row(a);
        const auto rb = row(b);
        for (std::size_t i = 0; i < words_per_row_; ++i) {
            if (ra[i] & rb[i]) return true;
        }
        return false;
    }

    bool row_any(std::size_t r) const noexcept {
        for (auto w : row(r)) {
            if (w) return true;
        }
        return false;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace flexmv
