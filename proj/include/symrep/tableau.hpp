#pragma once

#include "symrep/partition.hpp"

#include <optional>
#include <vector>

namespace symrep {

/// Standard filling of a (possibly skew) diagram by 1..k, strictly
/// increasing along rows and down columns. Equivalently an increasing path
/// in the Young graph from inner to outer.
class StandardTableau {
public:
    /// From row listings: labels of row r, left to right. Validates.
    StandardTableau(SkewShape shape, const std::vector<std::vector<int>>& row_labels);

    /// From the box of each label in order. Validates.
    static StandardTableau from_boxes(SkewShape shape, std::vector<Box> box_of_label);

    const SkewShape& shape() const { return shape_; }
    int size() const { return static_cast<int>(box_of_.size()); }

    const Box& box_of(int label) const;
    std::optional<int> label_at(int row, int col) const;

    /// Contents of the boxes of labels 1..k.
    std::vector<int> content_sequence() const;

    /// Labels row by row (text form "1,2;3").
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    StandardTableau(SkewShape shape, std::vector<Box> box_of_label, bool checked);
    void validate() const;

    SkewShape shape_;
    std::vector<Box> box_of_;
};

/// All standard tableaux of the shape, ordered by descending lexicographic
/// content sequence. The first entry of a straight shape is the row-reading
/// canonical tableau. Throws SizeCapError beyond the enumeration cap.
std::vector<StandardTableau> enumerate_tableaux(const SkewShape& shape);

/// Number of standard tableaux (the module dimension).
long long tableau_count(const SkewShape& shape);

/// Row-reading tableau: 1..k filled row by row.
StandardTableau canonical_tableau(const SkewShape& shape);

/// Swap labels i and i+1 when they sit in different rows and different
/// columns (then the result is standard); absent otherwise.
std::optional<StandardTableau> admissible_transposition(const StandardTableau& t, int i);

/// Inversion count of the permutation carrying the canonical numbering of
/// the shape to the numbering of t; 0 iff t is canonical.
int inversion_length(const StandardTableau& t);

/// Indices i of admissible transpositions carrying t to the canonical
/// tableau, applied left to right; length equals inversion_length(t).
std::vector<int> path_to_canonical(const StandardTableau& t);

} // namespace symrep
