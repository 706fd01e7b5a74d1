#pragma once

#include <optional>
#include <vector>

namespace symrep {

/// One cell of a Young diagram. Rows count downward, columns rightward,
/// both 1-based; the content is the diagonal index col - row.
struct Box {
    int row = 0;
    int col = 0;

    int content() const { return col - row; }

    friend bool operator==(const Box&, const Box&) = default;
};

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition (n = 0) is the root of the Young graph.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Total number of boxes.
    int n() const { return n_; }
    /// Number of rows (parts).
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Length of row r (1-based); 0 beyond the last row.
    int part(int r) const;
    const std::vector<int>& parts() const { return parts_; }

    bool contains(const Partition& inner) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part sequences; used as a map key order.
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Canonical partition order: reverse-lexicographic, largest first part
/// first, e.g. (3), (2,1), (1,1,1).
bool revlex_greater(const Partition& a, const Partition& b);

/// All partitions of n in canonical order. Throws SizeCapError beyond the
/// enumeration cap.
std::vector<Partition> enumerate_partitions(int n);

struct YoungNeighbors {
    std::vector<Partition> parents;  ///< remove one corner box
    std::vector<Partition> children; ///< add one addable box
};

/// Neighbors of a vertex in the Young graph, each list in canonical order.
YoungNeighbors young_graph_neighbors(const Partition& shape);

/// Number of increasing paths from `from` to `to` in the Young graph.
long long young_path_count(const Partition& from, const Partition& to);

/// A skew diagram outer/inner. Straight shapes have an empty inner part.
class SkewShape {
public:
    SkewShape(const Partition& straight); // NOLINT(google-explicit-constructor)
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    bool is_straight() const { return inner_.empty(); }
    int box_count() const { return outer_.n() - inner_.n(); }
    int rows() const { return outer_.rows(); }

    /// Columns of row r are row_first(r) .. row_last(r) inclusive
    /// (empty row when row_first > row_last).
    int row_first(int r) const { return inner_.part(r) + 1; }
    int row_last(int r) const { return outer_.part(r); }
    bool contains(int row, int col) const;
    bool contains(const Box& b) const { return contains(b.row, b.col); }

    /// All boxes in row-major order.
    std::vector<Box> boxes() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend bool operator<(const SkewShape& a, const SkewShape& b) {
        if (a.outer_ == b.outer_) return a.inner_ < b.inner_;
        return a.outer_ < b.outer_;
    }

private:
    Partition outer_;
    Partition inner_;
};

/// Height (occupied rows - 1) when the shape is a skew hook: edge-connected
/// with pairwise distinct contents. Absent otherwise. Requires >= 1 box.
std::optional<int> skew_hook_height(const SkewShape& shape);

/// Edge-connected components, each translated to a standalone skew shape
/// (row-major component order).
std::vector<SkewShape> connected_components(const SkewShape& shape);

} // namespace symrep
