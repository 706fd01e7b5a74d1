#include "symrep/content.hpp"
#include "symrep/text.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace symrep;

namespace {

ContentVector valid(std::vector<int> raw) {
    auto checked = validate_content(std::move(raw));
    REQUIRE(std::holds_alternative<ContentVector>(checked));
    return std::get<ContentVector>(checked);
}

ContentRejection rejected(std::vector<int> raw) {
    auto checked = validate_content(std::move(raw));
    REQUIRE(std::holds_alternative<ContentRejection>(checked));
    return std::get<ContentRejection>(checked);
}

} // namespace

TEST_CASE("content vectors of basic tableaux") {
    CHECK(content_vector(canonical_tableau(SkewShape(Partition{3}))).entries() ==
          std::vector<int>{0, 1, 2});
    CHECK(content_vector(canonical_tableau(SkewShape(Partition{1}))).entries() ==
          std::vector<int>{0});
    CHECK(content_vector(canonical_tableau(SkewShape(Partition{2, 2}))).entries() ==
          std::vector<int>{0, 1, -1, 0});
}

TEST_CASE("validation accepts exactly the spectrum") {
    CHECK(valid({0, -1, 1}).entries() == std::vector<int>{0, -1, 1});
    CHECK(valid({}).size() == 0);

    ContentRejection first = rejected({1, 0});
    CHECK(first.condition == 1);
    CHECK(first.index == 1);

    ContentRejection second = rejected({0, 2});
    CHECK(second.condition == 2);
    CHECK(second.index == 2);

    ContentRejection third = rejected({0, 1, 0});
    CHECK(third.condition == 3);
    CHECK(third.index == 3);

    CHECK(rejected({0, -1, 0, 1, 0, -1}).condition == 3);
}

TEST_CASE("tableau_from_content inverts content_vector") {
    CHECK(tableau_from_content(valid({0})) == canonical_tableau(SkewShape(Partition{1})));
    StandardTableau expected(parse_shape("2,1"), {{1, 2}, {3}});
    CHECK(tableau_from_content(valid({0, 1, -1})) == expected);

    auto failure = tableau_from_raw_content({0, 1, 0});
    REQUIRE(std::holds_alternative<ContentRejection>(failure));
    CHECK(std::get<ContentRejection>(failure).condition == 3);

    for (int n = 1; n <= 6; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                CHECK(tableau_from_content(content_vector(t)) == t);
            }
        }
    }
}

TEST_CASE("skew tableaux expose raw content sequences only") {
    SkewShape shape(Partition{2, 2}, Partition{1});
    auto tableaux = enumerate_tableaux(shape);
    REQUIRE(tableaux.size() == 2);
    CHECK(tableaux[0].content_sequence() == std::vector<int>{1, -1, 0});
    CHECK(tableaux[1].content_sequence() == std::vector<int>{-1, 1, 0});
    CHECK_THROWS_AS(content_vector(tableaux[0]), std::invalid_argument);
}

TEST_CASE("validated sequences match tableau contents exhaustively") {
    // depth-first generation from the conditions, compared with enumeration
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> from_tableaux;
        for (const Partition& shape : enumerate_partitions(n)) {
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                from_tableaux.insert(t.content_sequence());
            }
        }
        std::set<std::vector<int>> from_conditions;
        std::vector<int> prefix;
        auto extend = [&](auto&& self) -> void {
            if (static_cast<int>(prefix.size()) == n) {
                from_conditions.insert(prefix);
                return;
            }
            int lo = 0, hi = 0;
            for (int v : prefix) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            for (int c = (prefix.empty() ? 0 : lo - 1); c <= (prefix.empty() ? 0 : hi + 1); ++c) {
                prefix.push_back(c);
                if (std::holds_alternative<ContentVector>(validate_content(prefix))) self(self);
                prefix.pop_back();
            }
        };
        extend(extend);
        CHECK(from_conditions == from_tableaux);
    }
}
