#pragma once

#include "symrep/tableau.hpp"

#include <string>
#include <variant>
#include <vector>

namespace symrep {

/// Why an integer sequence is not a content vector: the first violated
/// condition (1, 2 or 3) and the 1-based position where it fails.
struct ContentRejection {
    int condition = 0;
    int index = 0;
    std::string message;
};

/// Integer sequence (a_1,...,a_n) satisfying
///   (1) a_1 = 0,
///   (2) every a_q with q > 1 has a_q - 1 or a_q + 1 among a_1..a_{q-1},
///   (3) between two equal entries both neighboring values occur.
/// These are exactly the content sequences of straight standard tableaux;
/// only validated values can be constructed.
class ContentVector {
public:
    static std::variant<ContentVector, ContentRejection> validate(std::vector<int> raw);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    friend bool operator==(const ContentVector&, const ContentVector&) = default;
    friend bool operator<(const ContentVector& a, const ContentVector& b) {
        return a.entries_ < b.entries_;
    }

private:
    explicit ContentVector(std::vector<int> entries) : entries_(std::move(entries)) {}

    std::vector<int> entries_;
};

std::variant<ContentVector, ContentRejection> validate_content(std::vector<int> raw);

/// Content sequence of a straight-shape tableau, as a validated vector.
ContentVector content_vector(const StandardTableau& t);

/// The unique straight tableau whose boxes realize the given contents;
/// total inverse of content_vector.
StandardTableau tableau_from_content(const ContentVector& alpha);

/// Convenience: validate, then construct.
std::variant<StandardTableau, ContentRejection> tableau_from_raw_content(std::vector<int> raw);

} // namespace symrep
