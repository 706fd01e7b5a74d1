#include "symrep/config.hpp"
#include "symrep/partition.hpp"
#include "symrep/tableau.hpp"
#include "symrep/text.hpp"

#include <doctest.h>

#include <algorithm>

using namespace symrep;

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

StandardTableau tableau(const std::string& shape, const std::vector<std::vector<int>>& rows) {
    return StandardTableau(parse_shape(shape), rows);
}

} // namespace

TEST_CASE("partition construction enforces the invariants") {
    CHECK_THROWS_AS(Partition({3, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition{}.n() == 0);
    CHECK(Partition{4, 2, 1}.n() == 7);
    CHECK(Partition{4, 2, 1}.part(2) == 2);
    CHECK(Partition{4, 2, 1}.part(9) == 0);
}

TEST_CASE("partitions enumerate in reverse-lexicographic order") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(3) ==
          std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(8).size() == 22);
    CHECK_THROWS_AS(enumerate_partitions(enumeration_size_cap() + 1), SizeCapError);
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("young graph neighbors") {
    YoungNeighbors root = young_graph_neighbors(Partition{});
    CHECK(root.parents.empty());
    CHECK(root.children == std::vector<Partition>{Partition{1}});

    YoungNeighbors mid = young_graph_neighbors(Partition{2, 1});
    CHECK(mid.parents == std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(mid.children ==
          std::vector<Partition>{Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}});

    YoungNeighbors row = young_graph_neighbors(Partition{5});
    CHECK(row.parents == std::vector<Partition>{Partition{4}});
    CHECK(row.children == std::vector<Partition>{Partition{6}, Partition{5, 1}});
}

TEST_CASE("young path counts") {
    CHECK(young_path_count(Partition{}, Partition{2, 1}) == 2);
    CHECK(young_path_count(Partition{1}, Partition{2, 1}) == 2);
    CHECK(young_path_count(Partition{2}, Partition{1, 1}) == 0);
    for (const Partition& shape : enumerate_partitions(5)) {
        CHECK(young_path_count(Partition{}, shape) == tableau_count(SkewShape(shape)));
    }
}

TEST_CASE("skew shapes validate containment") {
    CHECK_THROWS_AS(SkewShape(Partition{2, 1}, Partition{3}), std::invalid_argument);
    SkewShape shape(Partition{3, 2}, Partition{1});
    CHECK(shape.box_count() == 4);
    CHECK(shape.contains(1, 2));
    CHECK_FALSE(shape.contains(1, 1));
    CHECK(Box{2, 5}.content() == 3);
}

TEST_CASE("tableau enumeration counts and order") {
    CHECK(enumerate_tableaux(SkewShape(Partition{4})).size() == 1);
    CHECK(enumerate_tableaux(SkewShape(Partition{2, 1})).size() == 2);
    // hook with 5 boxes and two rows below the corner: C(4,2) fillings
    CHECK(enumerate_tableaux(SkewShape(Partition{3, 1, 1})).size() == 6);
    CHECK(enumerate_tableaux(SkewShape(Partition{2, 2}, Partition{1})).size() == 2);

    for (const Partition& shape : enumerate_partitions(5)) {
        auto tableaux = enumerate_tableaux(SkewShape(shape));
        CHECK(tableaux.front() == canonical_tableau(SkewShape(shape)));
        for (std::size_t i = 1; i < tableaux.size(); ++i) {
            CHECK(tableaux[i - 1].content_sequence() > tableaux[i].content_sequence());
        }
    }
}

TEST_CASE("sum of squared dimensions is n!") {
    for (int n = 1; n <= 6; ++n) {
        long long sum = 0;
        for (const Partition& shape : enumerate_partitions(n)) {
            long long d = tableau_count(SkewShape(shape));
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("standard tableau validation") {
    CHECK_THROWS_AS(tableau("2,1", {{1, 3}, {2}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(tableau("2,1", {{2, 1}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(tableau("2,1", {{1, 2}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(tableau("2,2", {{1, 2}, {4, 3}}), std::invalid_argument);
    StandardTableau t = tableau("2,1", {{1, 3}, {2}});
    CHECK(t.box_of(3) == Box{1, 2});
    CHECK(t.label_at(2, 1) == 2);
    CHECK_FALSE(t.label_at(2, 2).has_value());
}

TEST_CASE("canonical tableau is the row reading") {
    CHECK(canonical_tableau(SkewShape(Partition{3})).content_sequence() ==
          std::vector<int>{0, 1, 2});
    CHECK(canonical_tableau(SkewShape(Partition{1})).content_sequence() == std::vector<int>{0});
    CHECK(canonical_tableau(SkewShape(Partition{2, 1})).content_sequence() ==
          std::vector<int>{0, 1, -1});
    CHECK(format_tableau(canonical_tableau(SkewShape(Partition{2, 2}))) == "1,2;3,4");
}

TEST_CASE("admissible transpositions") {
    StandardTableau t = canonical_tableau(SkewShape(Partition{2, 1}));
    auto swapped = admissible_transposition(t, 2);
    REQUIRE(swapped.has_value());
    CHECK(swapped->content_sequence() == std::vector<int>{0, -1, 1});

    CHECK_FALSE(admissible_transposition(canonical_tableau(SkewShape(Partition{2})), 1));
    CHECK_FALSE(admissible_transposition(canonical_tableau(SkewShape(Partition{1, 1})), 1));
    CHECK_THROWS_AS(admissible_transposition(t, 3), std::invalid_argument);
}

TEST_CASE("inversion length counts the sorting distance") {
    for (const Partition& shape : enumerate_partitions(5)) {
        CHECK(inversion_length(canonical_tableau(SkewShape(shape))) == 0);
    }
    CHECK(inversion_length(tableau("2,1", {{1, 3}, {2}})) == 1);
    // brute inversion count of the relabeling permutation
    StandardTableau t = tableau("2,2", {{1, 3}, {2, 4}});
    StandardTableau base = canonical_tableau(t.shape());
    std::vector<int> s;
    for (int label = 1; label <= 4; ++label) {
        const Box& b = base.box_of(label);
        s.push_back(*t.label_at(b.row, b.col));
    }
    int expected = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++expected;
    CHECK(expected == 1);
    CHECK(inversion_length(t) == expected);
}

TEST_CASE("paths to the canonical tableau are geodesic") {
    CHECK(path_to_canonical(canonical_tableau(SkewShape(Partition{3, 2}))).empty());
    CHECK(path_to_canonical(tableau("2,1", {{1, 3}, {2}})) == std::vector<int>{2});
    for (const StandardTableau& t : enumerate_tableaux(SkewShape(Partition{3, 2}))) {
        std::vector<int> word = path_to_canonical(t);
        CHECK(static_cast<int>(word.size()) == inversion_length(t));
        StandardTableau current = t;
        for (int i : word) {
            auto next = admissible_transposition(current, i);
            REQUIRE(next.has_value());
            current = *next;
        }
        CHECK(current == canonical_tableau(t.shape()));
    }
}

TEST_CASE("skew hooks") {
    CHECK(skew_hook_height(SkewShape(Partition{2, 1})) == 1);
    CHECK_FALSE(skew_hook_height(SkewShape(Partition{2, 2})).has_value());
    CHECK(skew_hook_height(SkewShape(Partition{2, 2}, Partition{1})) == 1);
    CHECK(skew_hook_height(SkewShape(Partition{1, 1, 1})) == 2);
    CHECK(skew_hook_height(SkewShape(Partition{4})) == 0);
    // disconnected: contents distinct but two components
    CHECK_FALSE(skew_hook_height(SkewShape(Partition{3, 1}, Partition{2})).has_value());
}

TEST_CASE("connected components split and translate") {
    std::vector<SkewShape> parts = connected_components(SkewShape(Partition{3, 1}, Partition{2}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].box_count() + parts[1].box_count() == 2);
    for (const SkewShape& piece : parts) CHECK(piece.box_count() == 1);
    CHECK(connected_components(SkewShape(Partition{2, 2}, Partition{1})).size() == 1);

    // a two-box column and a detached box
    std::vector<SkewShape> mixed =
        connected_components(SkewShape(Partition{3, 2, 2}, Partition{2, 2}));
    REQUIRE(mixed.size() == 2);
    std::vector<int> sizes{mixed[0].box_count(), mixed[1].box_count()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2});
}

TEST_CASE("text forms round-trip") {
    CHECK(format_partition(parse_partition("3,2,1")) == "3,2,1");
    CHECK(format_partition(parse_partition("-")) == "-");
    CHECK(format_partition(parse_partition("")) == "-");
    CHECK(format_shape(parse_shape("3,2/1")) == "3,2/1");
    CHECK(format_shape(parse_shape("3,2")) == "3,2");
    CHECK(format_content(std::vector<int>{0, 1, -1}) == "[0,1,-1]");
    CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("x"), std::invalid_argument);
}
