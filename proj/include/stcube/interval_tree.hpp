#pragma once

#include <algorithm>
#include <vector>

namespace stcube {

/// Static centered interval tree over closed [lo, hi] ranges. Supports exact
/// stabbing queries and window (overlap) queries.
class IntervalTree {
public:
    struct Entry {
        double lo = 0.0;
        double hi = 0.0;
        int id = -1;
    };

    IntervalTree() = default;

    explicit IntervalTree(std::vector<Entry> entries) {
        if (!entries.empty()) root_ = build(std::move(entries));
    }

    /// Ids of all entries whose range contains t.
    void stab(double t, std::vector<int>& out) const {
        stab_node(root_, t, out);
    }

    /// Ids of all entries whose range overlaps the closed window [a, b].
    void window(double a, double b, std::vector<int>& out) const {
        window_node(root_, a, b, out);
    }

    bool empty() const { return root_ < 0; }

private:
    struct Node {
        double center = 0.0;
        std::vector<Entry> by_lo;  // entries containing center, ascending lo
        std::vector<Entry> by_hi;  // same entries, descending hi
        int left = -1;
        int right = -1;
    };

    int build(std::vector<Entry> entries) {
        // Center on the median midpoint to keep the tree balanced.
        std::vector<double> mids;
        mids.reserve(entries.size());
        for (const Entry& e : entries) mids.push_back(0.5 * (e.lo + e.hi));
        auto nth = mids.begin() + static_cast<std::ptrdiff_t>(mids.size() / 2);
        std::nth_element(mids.begin(), nth, mids.end());
        const double center = *nth;

        std::vector<Entry> lefts, rights, here;
        for (Entry& e : entries) {
            if (e.hi < center) lefts.push_back(e);
            else if (e.lo > center) rights.push_back(e);
            else here.push_back(e);
        }

        const int idx = static_cast<int>(nodes_.size());
        nodes_.push_back({});
        nodes_[static_cast<std::size_t>(idx)].center = center;
        {
            Node& n = nodes_[static_cast<std::size_t>(idx)];
            n.by_lo = here;
            std::sort(n.by_lo.begin(), n.by_lo.end(),
                      [](const Entry& a, const Entry& b) { return a.lo < b.lo; });
            n.by_hi = std::move(here);
            std::sort(n.by_hi.begin(), n.by_hi.end(),
                      [](const Entry& a, const Entry& b) { return a.hi > b.hi; });
        }
        // nodes_ may reallocate inside recursive calls; index first, link after.
        const int left = lefts.empty() ? -1 : build(std::move(lefts));
        const int right = rights.empty() ? -1 : build(std::move(rights));
        nodes_[static_cast<std::size_t>(idx)].left = left;
        nodes_[static_cast<std::size_t>(idx)].right = right;
        return idx;
    }

    void stab_node(int idx, double t, std::vector<int>& out) const {
        if (idx < 0) return;
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (t < n.center) {
            for (const Entry& e : n.by_lo) {
                if (e.lo > t) break;
                out.push_back(e.id);
            }
            stab_node(n.left, t, out);
        } else if (t > n.center) {
            for (const Entry& e : n.by_hi) {
                if (e.hi < t) break;
                out.push_back(e.id);
            }
            stab_node(n.right, t, out);
        } else {
            for (const Entry& e : n.by_lo) out.push_back(e.id);
        }
    }

    void window_node(int idx, double a, double b, std::vector<int>& out) const {
        if (idx < 0) return;
        const Node& n = nodes_[static_cast<std::size_t>(idx)];
        if (b < n.center) {
            // Entries here all reach up to center > b; overlap iff lo <= b.
            for (const Entry& e : n.by_lo) {
                if (e.lo > b) break;
                out.push_back(e.id);
            }
            window_node(n.left, a, b, out);
        } else if (a > n.center) {
            for (const Entry& e : n.by_hi) {
                if (e.hi < a) break;
                out.push_back(e.id);
            }
            window_node(n.right, a, b, out);
        } else {
            // Window straddles the center: everything here overlaps.
            for (const Entry& e : n.by_lo) out.push_back(e.id);
            window_node(n.left, a, b, out);
            window_node(n.right, a, b, out);
        }
    }

    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace stcube
