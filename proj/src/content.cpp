#include "symrep/content.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace symrep {

namespace {

std::string seq_to_string(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

} // namespace

std::variant<ContentVector, ContentRejection> ContentVector::validate(std::vector<int> raw) {
    if (!raw.empty() && raw[0] != 0) {
        return ContentRejection{1, 1, "condition (1): a_1 must be 0, got " +
                                          std::to_string(raw[0])};
    }
    for (std::size_t q = 1; q < raw.size(); ++q) {
        bool near = false;
        for (std::size_t p = 0; p < q; ++p) {
            if (raw[p] == raw[q] - 1 || raw[p] == raw[q] + 1) {
                near = true;
                break;
            }
        }
        if (!near) {
            return ContentRejection{2, static_cast<int>(q + 1),
                                    "condition (2): neither " + std::to_string(raw[q] - 1) +
                                        " nor " + std::to_string(raw[q] + 1) +
                                        " occurs before position " + std::to_string(q + 1)};
        }
        // check against the previous occurrence of the same value
        for (std::size_t p = q; p-- > 0;) {
            if (raw[p] != raw[q]) continue;
            bool lower = false, upper = false;
            for (std::size_t m = p + 1; m < q; ++m) {
                if (raw[m] == raw[q] - 1) lower = true;
                if (raw[m] == raw[q] + 1) upper = true;
            }
            if (!lower || !upper) {
                return ContentRejection{
                    3, static_cast<int>(q + 1),
                    "condition (3): repeated value " + std::to_string(raw[q]) +
                        " at positions " + std::to_string(p + 1) + " and " +
                        std::to_string(q + 1) + " without both neighbors between"};
            }
            break;
        }
    }
    return ContentVector(std::move(raw));
}

std::variant<ContentVector, ContentRejection> validate_content(std::vector<int> raw) {
    return ContentVector::validate(std::move(raw));
}

ContentVector content_vector(const StandardTableau& t) {
    if (!t.shape().is_straight()) {
        throw std::invalid_argument("content_vector requires a straight shape; "
                                    "use content_sequence for skew tableaux");
    }
    auto checked = ContentVector::validate(t.content_sequence());
    if (auto* rejection = std::get_if<ContentRejection>(&checked)) {
        throw std::logic_error("tableau content failed validation: " + rejection->message);
    }
    return std::get<ContentVector>(checked);
}

StandardTableau tableau_from_content(const ContentVector& alpha) {
    // Place box q on diagonal a_q; the conditions guarantee the placement
    // is the unique addable box there.
    std::map<int, int> diagonal_count;
    std::vector<Box> boxes;
    std::vector<int> row_lengths;
    boxes.reserve(alpha.entries().size());
    for (std::size_t q = 0; q < alpha.entries().size(); ++q) {
        int d = alpha.entries()[q];
        int m = diagonal_count[d];
        Box b = d >= 0 ? Box{m + 1, d + m + 1} : Box{-d + m + 1, m + 1};
        if (static_cast<int>(row_lengths.size()) < b.row) row_lengths.push_back(0);
        if (row_lengths[static_cast<std::size_t>(b.row - 1)] != b.col - 1 ||
            (b.row > 1 && row_lengths[static_cast<std::size_t>(b.row - 2)] < b.col)) {
            throw std::logic_error("validated content produced a non-addable box at position " +
                                   std::to_string(q + 1) + " of " +
                                   seq_to_string(alpha.entries()));
        }
        row_lengths[static_cast<std::size_t>(b.row - 1)] = b.col;
        diagonal_count[d] = m + 1;
        boxes.push_back(b);
    }
    return StandardTableau::from_boxes(SkewShape(Partition(std::move(row_lengths))),
                                       std::move(boxes));
}

std::variant<StandardTableau, ContentRejection> tableau_from_raw_content(std::vector<int> raw) {
    auto checked = ContentVector::validate(std::move(raw));
    if (auto* rejection = std::get_if<ContentRejection>(&checked)) return *rejection;
    return tableau_from_content(std::get<ContentVector>(checked));
}

} // namespace symrep
