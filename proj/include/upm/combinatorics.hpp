/*
   Copyright 2026 The upm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

namespace upm {

/// Strictly increasing exponent tuple alpha_1 < ... < alpha_k inside
/// {0, ..., ceiling}. Indexes the column selections B_alpha and the
/// generalized Vandermonde determinants.
class IndexTuple {
 public:
  IndexTuple(std::vector<int> values, int ceiling);

  int k() const { return static_cast<int>(values_.size()); }
  int ceiling() const { return ceiling_; }
  int operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const IndexTuple&) const = default;

 private:
  std::vector<int> values_;
  int ceiling_;
};

/// Non-increasing parts with explicit trailing zeros; size() is the fixed
/// length k shared with index tuples and content vectors.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }
  /// Number of boxes.
  int weight() const;
  /// Rows with at least one box.
  int nonzero_rows() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

using ExponentVector = std::vector<int>;

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // jagged filling, entries in 1..k

  bool operator==(const Tableau&) const = default;
};

/// All C(ell+1, k) strictly increasing k-tuples in {0..ell}, lexicographic.
/// Throws when k < 1 or k > ell+1 (an empty range is a caller bug).
std::vector<IndexTuple> enumerate_index_tuples(int k, int ell);

/// lambda_i = alpha_{k-i+1} - k + i.
Partition tuple_to_partition(const IndexTuple& alpha);

/// Inverse map alpha_j = lambda_{k-j+1} + j - 1; `ceiling` must admit the
/// result (ceiling >= lambda_1 + k - 1).
IndexTuple partition_to_tuple(const Partition& lambda, int ceiling);

/// (ell - alpha_k, ..., ell - alpha_1); an involution.
IndexTuple complement(const IndexTuple& alpha);

/// Every semistandard filling of `shape` with entries in {1..max_entry}
/// (rows weakly increasing, columns strictly increasing), enumerated by
/// row-major smallest-entry-first backtracking. Shapes with more than
/// max_entry nonzero rows yield an empty list.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

/// Content vector of a tableau: entry i counts the occurrences of i+1.
ExponentVector tableau_content(const Tableau& t, int max_entry);

/// Number of semistandard tableaux of the given shape and content, counted
/// by direct enumeration of fillings. Zero whenever |content| != |shape|.
std::uint64_t gamma_coefficient(const Partition& shape, const ExponentVector& content, int max_entry);

}  // namespace upm
