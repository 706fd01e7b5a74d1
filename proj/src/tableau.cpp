#include "symrep/tableau.hpp"

#include "symrep/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace symrep {

StandardTableau::StandardTableau(SkewShape shape, std::vector<Box> box_of_label, bool)
    : shape_(std::move(shape)), box_of_(std::move(box_of_label)) {}

StandardTableau::StandardTableau(SkewShape shape,
                                 const std::vector<std::vector<int>>& row_labels)
    : shape_(std::move(shape)) {
    int k = shape_.box_count();
    if (static_cast<int>(row_labels.size()) != shape_.rows()) {
        throw std::invalid_argument("tableau rows do not match the shape");
    }
    box_of_.assign(static_cast<std::size_t>(k), Box{});
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int r = 1; r <= shape_.rows(); ++r) {
        const auto& row = row_labels[static_cast<std::size_t>(r - 1)];
        int width = shape_.row_last(r) - shape_.row_first(r) + 1;
        if (static_cast<int>(row.size()) != width) {
            throw std::invalid_argument("tableau row width does not match the shape");
        }
        for (int j = 0; j < width; ++j) {
            int label = row[static_cast<std::size_t>(j)];
            if (label < 1 || label > k || seen[static_cast<std::size_t>(label)]) {
                throw std::invalid_argument("tableau labels must be a bijection onto 1..k");
            }
            seen[static_cast<std::size_t>(label)] = true;
            box_of_[static_cast<std::size_t>(label - 1)] = Box{r, shape_.row_first(r) + j};
        }
    }
    validate();
}

StandardTableau StandardTableau::from_boxes(SkewShape shape, std::vector<Box> box_of_label) {
    StandardTableau t(std::move(shape), std::move(box_of_label), true);
    if (t.size() != t.shape_.box_count()) {
        throw std::invalid_argument("tableau label count does not match the shape");
    }
    for (const Box& b : t.box_of_) {
        if (!t.shape_.contains(b)) throw std::invalid_argument("tableau box outside the shape");
    }
    t.validate();
    return t;
}

void StandardTableau::validate() const {
    for (int label = 1; label <= size(); ++label) {
        const Box& b = box_of(label);
        auto left = label_at(b.row, b.col - 1);
        auto up = label_at(b.row - 1, b.col);
        if (shape_.contains(b.row, b.col - 1) && (!left || *left > label)) {
            throw std::invalid_argument("tableau rows must increase");
        }
        if (shape_.contains(b.row - 1, b.col) && (!up || *up > label)) {
            throw std::invalid_argument("tableau columns must increase");
        }
    }
}

const Box& StandardTableau::box_of(int label) const {
    if (label < 1 || label > size()) throw std::invalid_argument("label out of range");
    return box_of_[static_cast<std::size_t>(label - 1)];
}

std::optional<int> StandardTableau::label_at(int row, int col) const {
    for (int label = 1; label <= size(); ++label) {
        const Box& b = box_of_[static_cast<std::size_t>(label - 1)];
        if (b.row == row && b.col == col) return label;
    }
    return std::nullopt;
}

std::vector<int> StandardTableau::content_sequence() const {
    std::vector<int> out;
    out.reserve(box_of_.size());
    for (const Box& b : box_of_) out.push_back(b.content());
    return out;
}

std::vector<std::vector<int>> StandardTableau::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.rows()));
    for (int r = 1; r <= shape_.rows(); ++r) {
        for (int c = shape_.row_first(r); c <= shape_.row_last(r); ++c) {
            out[static_cast<std::size_t>(r - 1)].push_back(*label_at(r, c));
        }
    }
    return out;
}

namespace {

/// Boxes that can receive the next label: the filled region stays a union
/// of row prefixes whose column constraints are met.
std::vector<Box> addable_boxes(const SkewShape& shape, const std::vector<int>& filled_in_row) {
    std::vector<Box> out;
    for (int r = 1; r <= shape.rows(); ++r) {
        int col = shape.row_first(r) + filled_in_row[static_cast<std::size_t>(r - 1)];
        if (col > shape.row_last(r)) continue;
        if (shape.contains(r - 1, col)) {
            int above_filled = shape.row_first(r - 1) + filled_in_row[static_cast<std::size_t>(r - 2)] - 1;
            if (above_filled < col) continue;
        }
        out.push_back(Box{r, col});
    }
    return out;
}

void enumerate_rec(const SkewShape& shape, std::vector<int>& filled_in_row,
                   std::vector<Box>& path, std::vector<StandardTableau>& out) {
    if (static_cast<int>(path.size()) == shape.box_count()) {
        out.push_back(StandardTableau::from_boxes(shape, path));
        return;
    }
    std::vector<Box> choices = addable_boxes(shape, filled_in_row);
    std::sort(choices.begin(), choices.end(),
              [](const Box& a, const Box& b) { return a.content() > b.content(); });
    for (const Box& b : choices) {
        filled_in_row[static_cast<std::size_t>(b.row - 1)] += 1;
        path.push_back(b);
        enumerate_rec(shape, filled_in_row, path, out);
        path.pop_back();
        filled_in_row[static_cast<std::size_t>(b.row - 1)] -= 1;
    }
}

} // namespace

std::vector<StandardTableau> enumerate_tableaux(const SkewShape& shape) {
    require_size(shape.box_count(), enumeration_size_cap(), "enumerate_tableaux");
    std::vector<StandardTableau> out;
    std::vector<int> filled_in_row(static_cast<std::size_t>(shape.rows()), 0);
    std::vector<Box> path;
    enumerate_rec(shape, filled_in_row, path, out);
    return out;
}

long long tableau_count(const SkewShape& shape) {
    return static_cast<long long>(enumerate_tableaux(shape).size());
}

StandardTableau canonical_tableau(const SkewShape& shape) {
    std::vector<Box> boxes = shape.boxes();
    return StandardTableau::from_boxes(shape, std::move(boxes));
}

std::optional<StandardTableau> admissible_transposition(const StandardTableau& t, int i) {
    if (i < 1 || i >= t.size()) throw std::invalid_argument("transposition index out of range");
    Box a = t.box_of(i);
    Box b = t.box_of(i + 1);
    if (a.row == b.row || a.col == b.col) return std::nullopt;
    std::vector<Box> boxes;
    boxes.reserve(static_cast<std::size_t>(t.size()));
    for (int label = 1; label <= t.size(); ++label) boxes.push_back(t.box_of(label));
    std::swap(boxes[static_cast<std::size_t>(i - 1)], boxes[static_cast<std::size_t>(i)]);
    return StandardTableau::from_boxes(t.shape(), std::move(boxes));
}

int inversion_length(const StandardTableau& t) {
    StandardTableau base = canonical_tableau(t.shape());
    // s maps the canonical label of each box to the label of t there
    std::vector<int> s(static_cast<std::size_t>(t.size()));
    for (int label = 1; label <= t.size(); ++label) {
        const Box& b = base.box_of(label);
        s[static_cast<std::size_t>(label - 1)] = *t.label_at(b.row, b.col);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] > s[j]) ++inversions;
        }
    }
    return inversions;
}

std::vector<int> path_to_canonical(const StandardTableau& t) {
    StandardTableau target = canonical_tableau(t.shape());
    StandardTableau current = t;
    std::vector<int> word;
    // Settle labels k, k-1, ..., 2 into their canonical boxes by bubbling
    // the label found there upward; every swap along the way is admissible.
    for (int m = t.size(); m >= 2; --m) {
        const Box& home = target.box_of(m);
        int j = *current.label_at(home.row, home.col);
        for (int idx = j; idx < m; ++idx) {
            auto next = admissible_transposition(current, idx);
            if (!next) throw std::logic_error("path_to_canonical: inadmissible step");
            current = *next;
            word.push_back(idx);
        }
    }
    if (!(current == target)) throw std::logic_error("path_to_canonical: did not reach target");
    return word;
}

} // namespace symrep
