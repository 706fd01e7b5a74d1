#pragma once

#include "symrep/content.hpp"
#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"
#include "symrep/tableau.hpp"

#include <string>
#include <vector>

namespace symrep {

/// "3,2,1"; "-" for the empty partition.
std::string format_partition(const Partition& p);
/// Accepts "3,2,1", "-" or "" (empty partition).
Partition parse_partition(const std::string& text);

/// "outer/inner", inner omitted for straight shapes.
std::string format_shape(const SkewShape& shape);
/// Accepts "3,2" or "3,2/1".
SkewShape parse_shape(const std::string& text);

/// Rows of labels: "1,2;3".
std::string format_tableau(const StandardTableau& t);

/// "[0,1,-1]".
std::string format_content(const std::vector<int>& entries);
std::string format_content(const ContentVector& alpha);

/// "(1 2 3)(4 5)"; "()" for the identity.
std::string format_cycles(const Permutation& g);
/// Parses cycle notation into a permutation of the given degree.
Permutation parse_cycles(const std::string& text, int degree);
/// Parses one-line notation "2,3,1".
Permutation parse_one_line(const std::string& text);

/// Decimal with 17 significant digits (round-trips doubles).
std::string format_double17(double x);

} // namespace symrep
