#include <algorithm>
#include <numeric>

#include "sparsedom/flow.hpp"
#include "sparsedom/partition.hpp"

namespace sparsedom {

namespace {

class BranchSearch {
public:
    BranchSearch(const CompactKernel& ck, const BranchOptions& options)
        : ck_(ck), options_(options), pieces_(static_cast<std::int64_t>(ck.landmarks.size())) {
        owner_.assign(ck.num_bags(), kUnassigned);
        size_.assign(ck.landmarks.size(), 0);
        for (std::uint32_t b = 0; b < ck.num_bags(); ++b) {
            if (ck.landmark_index[b] != kUnreachable) {
                assign(b, ck.landmark_index[b]);
            } else {
                order_.push_back(b);
                unassigned_ += bag_size(b);
            }
        }
        std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (ck.dag.layer[a] != ck.dag.layer[b]) return ck.dag.layer[a] < ck.dag.layer[b];
            return bag_size(a) > bag_size(b);
        });

        // Suffixes of order_ that form one layer of singleton bags go to the
        // flow solver instead of being branched on.
        flow_from_.assign(order_.size() + 1, false);
        flow_from_[order_.size()] = false;
        bool uniform = true;
        for (std::size_t i = order_.size(); i-- > 0;) {
            uniform = uniform && bag_size(order_[i]) == 1 &&
                      ck.dag.layer[order_[i]] == ck.dag.layer[order_.back()];
            flow_from_[i] = uniform;
        }
    }

    void seed_incumbent(std::span<const std::uint32_t> bag_owner, std::int64_t square_sum) {
        best_owner_.assign(bag_owner.begin(), bag_owner.end());
        best_ = square_sum;
    }

    void run() { descend(0); }

    bool complete() const { return !aborted_; }
    std::uint64_t nodes() const { return nodes_; }
    std::int64_t best() const { return best_; }
    const std::vector<std::uint32_t>& best_owner() const { return best_owner_; }

private:
    std::int64_t bag_size(std::uint32_t b) const { return static_cast<std::int64_t>(ck_.members[b].size()); }

    void assign(std::uint32_t b, std::uint32_t o) {
        square_sum_ += 2 * size_[o] * bag_size(b) + bag_size(b) * bag_size(b);
        size_[o] += bag_size(b);
        owner_[b] = o;
    }
    void unassign(std::uint32_t b) {
        std::uint32_t o = owner_[b];
        size_[o] -= bag_size(b);
        square_sum_ -= 2 * size_[o] * bag_size(b) + bag_size(b) * bag_size(b);
        owner_[b] = kUnassigned;
    }

    void candidates(std::uint32_t b, std::vector<std::uint32_t>& out) const {
        out.clear();
        for (std::uint32_t parent : ck_.dag.in.row(b)) {
            std::uint32_t o = owner_[parent];
            if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
        }
        std::sort(out.begin(), out.end(), [&](std::uint32_t x, std::uint32_t y) {
            return size_[x] != size_[y] ? size_[x] < size_[y] : x < y;
        });
    }

    void descend(std::size_t pos) {
        if (aborted_) return;
        if (++nodes_ > options_.budget) {
            aborted_ = true;
            return;
        }
        if (options_.on_expand) {
            BranchNode node;
            node.bag_owner = owner_;
            node.partial_square_sum = square_sum_;
            node.unassigned = unassigned_;
            node.bound = Rational(square_sum_) + Rational(unassigned_ * unassigned_, pieces_);
            options_.on_expand(node);
        }
        // Any completion has square sum >= partial + unassigned^2 / |L|.
        if (pieces_ * square_sum_ + unassigned_ * unassigned_ >= pieces_ * best_) return;

        if (pos == order_.size()) {
            best_ = square_sum_;
            best_owner_ = owner_;
            return;
        }
        if (flow_from_[pos]) {
            finish_with_flow(pos);
            return;
        }

        std::uint32_t b = order_[pos];
        std::vector<std::uint32_t> options;
        candidates(b, options);
        unassigned_ -= bag_size(b);
        for (std::uint32_t o : options) {
            assign(b, o);
            descend(pos + 1);
            unassign(b);
            if (aborted_) break;
        }
        unassigned_ += bag_size(b);
    }

    void finish_with_flow(std::size_t pos) {
        SbapInstance inst;
        inst.num_agents = size_.size();
        inst.num_tasks = order_.size() - pos;
        inst.base_load = size_;
        std::vector<std::uint32_t> options;
        for (std::size_t t = 0; t < inst.num_tasks; ++t) {
            candidates(order_[pos + t], options);
            for (auto o : options) inst.relation.emplace_back(o, static_cast<std::uint32_t>(t));
        }
        SbapSolution sol = solve_sbap(inst);
        if (sol.square_sum < best_) {
            best_ = sol.square_sum;
            best_owner_ = owner_;
            for (std::size_t t = 0; t < inst.num_tasks; ++t) best_owner_[order_[pos + t]] = sol.assignment[t];
        }
    }

    const CompactKernel& ck_;
    const BranchOptions& options_;
    std::int64_t pieces_;
    std::vector<std::uint32_t> order_;
    std::vector<bool> flow_from_;
    std::vector<std::uint32_t> owner_;
    std::vector<std::int64_t> size_;
    std::int64_t square_sum_ = 0;
    std::int64_t unassigned_ = 0;
    std::vector<std::uint32_t> best_owner_;
    std::int64_t best_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

BranchResult prt_branch(const Graph& g, std::span<const Vertex> landmarks, const BranchOptions& options) {
    CompactKernel ck = build_compact_kernel(g, landmarks);

    Partition start = prt_weight(g, landmarks, options.seed);
    std::vector<std::uint32_t> start_owner(ck.num_bags());
    for (std::uint32_t b = 0; b < ck.num_bags(); ++b) start_owner[b] = start.owner[ck.representative[b]];

    BranchSearch search(ck, options);
    search.seed_incumbent(start_owner, piece_stats(start).square_sum);
    search.run();

    BranchResult result;
    result.partition = partition_from_bags(ck, search.best_owner());
    result.square_sum = search.best();
    result.optimal = search.complete();
    result.nodes = search.nodes();
    return result;
}

}  // namespace sparsedom
