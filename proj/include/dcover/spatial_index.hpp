#ifndef DCOVER_SPATIAL_INDEX_HPP
#define DCOVER_SPATIAL_INDEX_HPP

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "geometry.hpp"

namespace dcover {

// Static kd-tree over a point set, answering "indices of all points inside a
// disk" with the same tolerance rule as contains(). Results are sorted
// ascending, i.e. identical to the linear scan they replace.
class SpatialIndex {
public:
    explicit SpatialIndex(std::span<const Point> points)
        : points_(points.begin(), points.end()) {
        order_.resize(points_.size());
        for (int i = 0; i < static_cast<int>(order_.size()); ++i) order_[i] = i;
        if (!order_.empty()) {
            nodes_.reserve(2 * order_.size() / kLeafSize + 2);
            build(0, static_cast<int>(order_.size()));
        }
    }

    explicit SpatialIndex(const std::vector<Point>& points)
        : SpatialIndex(std::span<const Point>(points)) {}

    std::size_t size() const { return points_.size(); }

    // All point indices within d.radius + tol of d.center, ascending.
    std::vector<int> query(const Disk& d, double tol = kContainTol) const {
        std::vector<int> out;
        if (!nodes_.empty()) collect(0, d.center, d.radius + tol, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Same result set, by full scan. Kept for cross-checking in tests.
    std::vector<int> query_linear(const Disk& d, double tol = kContainTol) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(points_.size()); ++i)
            if (contains(d, points_[i], tol)) out.push_back(i);
        return out;
    }

private:
    static constexpr int kLeafSize = 8;

    struct Node {
        double xmin, xmax, ymin, ymax;
        int begin, end;  // range in order_
        int left = -1, right = -1;
    };

    int build(int begin, int end) {
        Node node;
        node.begin = begin;
        node.end = end;
        node.xmin = node.ymin = std::numeric_limits<double>::infinity();
        node.xmax = node.ymax = -std::numeric_limits<double>::infinity();
        for (int i = begin; i < end; ++i) {
            const Point& p = points_[order_[i]];
            node.xmin = std::min(node.xmin, p.x);
            node.xmax = std::max(node.xmax, p.x);
            node.ymin = std::min(node.ymin, p.y);
            node.ymax = std::max(node.ymax, p.y);
        }
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back(node);
        if (end - begin > kLeafSize) {
            const bool split_x = (node.xmax - node.xmin) >= (node.ymax - node.ymin);
            const int mid = (begin + end) / 2;
            std::nth_element(order_.begin() + begin, order_.begin() + mid,
                             order_.begin() + end, [&](int a, int b) {
                                 return split_x ? points_[a].x < points_[b].x
                                                : points_[a].y < points_[b].y;
                             });
            const int l = build(begin, mid);
            const int r = build(mid, end);
            nodes_[id].left = l;
            nodes_[id].right = r;
        }
        return id;
    }

    static double clamp(double v, double lo, double hi) {
        return v < lo ? lo : (v > hi ? hi : v);
    }

    void collect(int id, Point c, double reach, std::vector<int>& out) const {
        const Node& node = nodes_[id];
        const double nx = clamp(c.x, node.xmin, node.xmax);
        const double ny = clamp(c.y, node.ymin, node.ymax);
        const double dx = c.x - nx, dy = c.y - ny;
        if (dx * dx + dy * dy > reach * reach) return;  // box out of reach
        // Box entirely inside the disk: take everything without point tests.
        const double fx = std::max(std::abs(c.x - node.xmin), std::abs(c.x - node.xmax));
        const double fy = std::max(std::abs(c.y - node.ymin), std::abs(c.y - node.ymax));
        if (fx * fx + fy * fy <= reach * reach) {
            for (int i = node.begin; i < node.end; ++i) out.push_back(order_[i]);
            return;
        }
        if (node.left < 0) {
            const double r2 = reach * reach;
            for (int i = node.begin; i < node.end; ++i) {
                const int idx = order_[i];
                if (dist_sq(c, points_[idx]) <= r2) out.push_back(idx);
            }
            return;
        }
        collect(node.left, c, reach, out);
        collect(node.right, c, reach, out);
    }

    std::vector<Point> points_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
};

} // namespace dcover

#endif
