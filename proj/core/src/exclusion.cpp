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

#include "flexmv/exclusion.hpp"

#include <algorithm>
#include <sstream>

namespace flexmv {

namespace {

template <typename Label>
std::string matrix_csv(const BitMatrix& m, const std::vector<Label>& labels) {
    std::ostringstream out;
    out << "id";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << labels[r];
        for (std::size_t c = 0; c < m.cols(); ++c) out << ',' << (m.test(r, c) ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

}  // namespace

ExclusionMatrices compute_mems(const Instance& instance) {
    ExclusionMatrices m;
    const std::size_t n = instance.signals.size();
    const auto& vm = instance.variants;

    m.signal_ids_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.signal_ids_.push_back(instance.signals[i].id);
        m.signal_rows_.emplace(instance.signals[i].id, static_cast<SignalIndex>(i));
    }

    m.smem_ = BitMatrix(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        m.smem_.set(a, a);
        for (std::size_t b = a + 1; b < n; ++b) {
            if (vm.co_occur(static_cast<SignalIndex>(a), static_cast<SignalIndex>(b))) {
                m.smem_.set(a, b);
                m.smem_.set(b, a);
            }
        }
    }

    for (const auto& s : instance.signals) m.nodes_.push_back(s.node);
    std::sort(m.nodes_.begin(), m.nodes_.end());
    m.nodes_.erase(std::unique(m.nodes_.begin(), m.nodes_.end()), m.nodes_.end());
    for (std::size_t i = 0; i < m.nodes_.size(); ++i) m.node_rows_.emplace(m.nodes_[i], i);

    // node x variant presence, then nmem(p, q) = rows p and q intersect
    BitMatrix presence(m.nodes_.size(), vm.variant_count());
    for (std::size_t s = 0; s < n; ++s) {
        const auto row = m.node_rows_.at(instance.signals[s].node);
        for (std::size_t v = 0; v < vm.variant_count(); ++v) {
            if (vm.uses(static_cast<SignalIndex>(s), static_cast<VariantIndex>(v))) presence.set(row, v);
        }
    }
    const std::size_t k = m.nodes_.size();
    m.nmem_ = BitMatrix(k, k);
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
            if (presence.rows_intersect(p, q)) {
                m.nmem_.set(p, q);
                m.nmem_.set(q, p);
            }
        }
    }
    return m;
}

std::string ExclusionMatrices::smem_csv() const { return matrix_csv(smem_, signal_ids_); }
std::string ExclusionMatrices::nmem_csv() const { return matrix_csv(nmem_, nodes_); }

}  // namespace flexmv
