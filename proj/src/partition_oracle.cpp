#include <algorithm>
#include <limits>

#include "sparsedom/errors.hpp"
#include "sparsedom/partition.hpp"

namespace sparsedom {

void enumerate_partitions(const CompactKernel& ck,
                          const std::function<void(std::span<const std::uint32_t>, std::span<const std::int64_t>)>& visit,
                          const BnpOracleLimits& limits) {
    if (ck.multi_choice_bags() > limits.max_bags) {
        throw LimitExceeded("brute_force_bnp: " + std::to_string(ck.multi_choice_bags()) +
                            " multi-choice bags exceeds the limit of " + std::to_string(limits.max_bags));
    }
    std::uint64_t leaves = 1;
    for (std::uint32_t b = 0; b < ck.num_bags(); ++b) {
        if (ck.landmark_index[b] != kUnreachable) continue;
        leaves *= ck.dag.in.degree(b);
        if (leaves > limits.max_leaves) {
            throw LimitExceeded("brute_force_bnp: candidate product exceeds " + std::to_string(limits.max_leaves));
        }
    }

    std::vector<std::uint32_t> owner(ck.num_bags(), kUnassigned);
    std::vector<std::int64_t> size(ck.landmarks.size(), 0);
    std::vector<std::vector<std::uint32_t>> scratch(ck.num_bags());

    auto descend = [&](auto&& self, std::uint32_t b) -> void {
        if (b == ck.num_bags()) {
            visit(owner, size);
            return;
        }
        auto weight = static_cast<std::int64_t>(ck.members[b].size());
        if (ck.landmark_index[b] != kUnreachable) {
            owner[b] = ck.landmark_index[b];
            size[owner[b]] += weight;
            self(self, b + 1);
            size[owner[b]] -= weight;
            return;
        }
        auto& options = scratch[b];
        options.clear();
        for (std::uint32_t parent : ck.dag.in.row(b)) options.push_back(owner[parent]);
        std::sort(options.begin(), options.end());
        options.erase(std::unique(options.begin(), options.end()), options.end());
        for (std::uint32_t o : options) {
            owner[b] = o;
            size[o] += weight;
            self(self, b + 1);
            size[o] -= weight;
        }
        owner[b] = kUnassigned;
    };
    descend(descend, 0);
}

Partition brute_force_bnp(const Graph& g, std::span<const Vertex> landmarks, const BnpOracleLimits& limits) {
    CompactKernel ck = build_compact_kernel(g, landmarks);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    Partition best_partition;
    enumerate_partitions(
        ck,
        [&](std::span<const std::uint32_t> owner, std::span<const std::int64_t> size) {
            std::int64_t value = 0;
            for (auto s : size) value += s * s;
            if (value > best) return;
            Partition candidate = partition_from_bags(ck, owner);
            if (value < best || candidate.owner < best_partition.owner) {
                best = value;
                best_partition = std::move(candidate);
            }
        },
        limits);
    return best_partition;
}

}  // namespace sparsedom
