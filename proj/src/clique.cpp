#include "sdf/clique.hpp"

namespace sdf {

namespace {

class CliqueSearch {
public:
    CliqueSearch(std::span<const Bitset> rows, const CliqueOptions& options)
        : rows_(rows), options_(options), start_(std::chrono::steady_clock::now()) {}

    CliqueResult run() {
        const std::size_t n = rows_.size();
        Bitset candidates(n);
        if (options_.root) {
            current_.push_back(*options_.root);
            candidates = rows_[*options_.root];
            candidates.clear_through(*options_.root);
        } else {
            candidates.set_all();
        }
        best_ = current_;
        if (n > 0) expand(candidates);
        return CliqueResult{best_, !aborted_, nodes_};
    }

private:
    bool out_of_budget() {
        if (nodes_ > options_.budget.max_nodes) return true;
        if ((nodes_ & 255) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > options_.budget.max_seconds) return true;
        }
        return false;
    }

    void expand(const Bitset& candidates) {
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        const std::vector<std::size_t> order = candidates.to_indices();
        if (order.empty()) return;

        // bound[i] = number of colour classes needed for the suffix order[i..]; each class is an
        // independent set, so it contributes at most one vertex to any clique.
        std::vector<std::size_t> bound(order.size());
        std::vector<Bitset> class_blocked;
        for (std::size_t i = order.size(); i-- > 0;) {
            const std::size_t u = order[i];
            bool placed = false;
            for (auto& blocked : class_blocked) {
                if (!blocked.test(u)) {
                    blocked |= rows_[u];
                    placed = true;
                    break;
                }
            }
            if (!placed) class_blocked.push_back(rows_[u]);
            bound[i] = class_blocked.size();
        }

        const bool filter_level = options_.root && options_.second_filter && current_.size() == 1;
        Bitset next(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (current_.size() + bound[i] <= best_.size()) break;
            const std::size_t v = order[i];
            if (filter_level && !options_.second_filter(v)) continue;
            current_.push_back(v);
            if (current_.size() > best_.size()) best_ = current_;
            next.assign_and(candidates, rows_[v]);
            next.clear_through(v);
            if (next.any()) expand(next);
            current_.pop_back();
            if (aborted_) return;
        }
    }

    std::span<const Bitset> rows_;
    const CliqueOptions& options_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace

CliqueResult max_clique(std::span<const Bitset> rows, const CliqueOptions& options) {
    return CliqueSearch(rows, options).run();
}

} // namespace sdf
