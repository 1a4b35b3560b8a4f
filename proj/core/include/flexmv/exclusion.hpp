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

#include <string>
#include <unordered_map>
#include <vector>

#include "flexmv/bit_matrix.hpp"
#include "flexmv/model.hpp"

namespace flexmv {

/// Signal and node mutual exclusion matrices.
///
/// smem(a, b) is set when some variant uses both signals, so the two must
/// never share bits of a frame. The diagonal is always set. nmem(p, q) is
/// set when p != q and some variant uses a signal of p and a signal of q,
/// so the two nodes must never share a slot. The diagonal is always clear.
class ExclusionMatrices {
public:
    ExclusionMatrices() = default;

    std::size_t signal_count() const noexcept { return smem_.rows(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }

    /// Node ids in ascending order; position i is the dense index of row i.
    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }

    bool signals_conflict(SignalIndex a, SignalIndex b) const noexcept { return smem_.test(a, b); }

    /// Lookup by node id. Throws std::out_of_range on unknown nodes.
    bool nodes_conflict(NodeId p, NodeId q) const { return nmem_.test(node_index(p), node_index(q)); }

    /// Lookup by signal id. Throws std::out_of_range on unknown ids.
    bool signals_conflict(const std::string& a, const std::string& b) const {
        return smem_.test(signal_index(a), signal_index(b));
    }

    /// Dense row of `node` in nmem(). Throws std::out_of_range on unknown nodes.
    std::size_t node_index(NodeId node) const { return node_rows_.at(node); }
    SignalIndex signal_index(const std::string& id) const { return signal_rows_.at(id); }

    const BitMatrix& smem() const noexcept { return smem_; }
    const BitMatrix& nmem() const noexcept { return nmem_; }
    const std::vector<std::string>& signal_ids() const noexcept { return signal_ids_; }

    /// CSV dumps: a header row of ids followed by one 0/1 row per id.
    std::string smem_csv() const;
    std::string nmem_csv() const;

    friend ExclusionMatrices compute_mems(const Instance& instance);

private:
    BitMatrix smem_;
    BitMatrix nmem_;
    std::vector<NodeId> nodes_;
    std::unordered_map<NodeId, std::size_t> node_rows_;
    std::vector<std::string> signal_ids_;
    std::unordered_map<std::string, SignalIndex> signal_rows_;
};

ExclusionMatrices compute_mems(const Instance& instance);

}  // namespace flexmv
