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

#include "upm/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace upm {

IndexTuple::IndexTuple(std::vector<int> values, int ceiling) : values_(std::move(values)), ceiling_(ceiling) {
  if (values_.empty()) throw std::invalid_argument("index tuple must be non-empty");
  if (ceiling_ < 0) throw std::invalid_argument("index tuple ceiling must be non-negative");
  if (values_.front() < 0 || values_.back() > ceiling_) throw std::invalid_argument("index tuple entries must lie in [0, ceiling]");
  for (std::size_t j = 1; j < values_.size(); ++j) {
    if (values_[j - 1] >= values_[j]) throw std::invalid_argument("index tuple must be strictly increasing");
  }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have explicit length >= 1");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::nonzero_rows() const {
  int n = 0;
  while (n < size() && parts_[static_cast<std::size_t>(n)] > 0) ++n;
  return n;
}

std::vector<IndexTuple> enumerate_index_tuples(int k, int ell) {
  if (k < 1) throw std::invalid_argument("tuple length must be at least 1");
  if (ell < 0) throw std::invalid_argument("ceiling must be non-negative");
  if (k > ell + 1) throw std::invalid_argument("no strictly increasing tuple of that length fits below the ceiling");
  std::vector<IndexTuple> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.emplace_back(cur, ell);
    // Advance to the next combination in lexicographic order.
    int j = k - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == ell - (k - 1 - j)) --j;
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

Partition tuple_to_partition(const IndexTuple& alpha) {
  const int k = alpha.k();
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) parts[static_cast<std::size_t>(i - 1)] = alpha[k - i] - k + i;
  return Partition(std::move(parts));
}

IndexTuple partition_to_tuple(const Partition& lambda, int ceiling) {
  const int k = lambda.size();
  std::vector<int> values(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) values[static_cast<std::size_t>(j - 1)] = lambda[k - j] + j - 1;
  return IndexTuple(std::move(values), ceiling);
}

IndexTuple complement(const IndexTuple& alpha) {
  const int k = alpha.k();
  const int ell = alpha.ceiling();
  std::vector<int> values(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) values[static_cast<std::size_t>(j)] = ell - alpha[k - 1 - j];
  return IndexTuple(std::move(values), ell);
}

namespace {

// Row-major backtracking over the boxes of `shape`; at each box the candidate
// values run smallest first, bounded below by the left neighbour (weak rows)
// and the upper neighbour plus one (strict columns).
template <typename Emit>
void fill_boxes(const Partition& shape, int max_entry, std::vector<std::vector<int>>& rows,
                int r, int c, std::vector<int>* budget, Emit&& emit) {
  const int nrows = shape.nonzero_rows();
  if (r == nrows) {
    emit();
    return;
  }
  if (c == shape[r]) {
    fill_boxes(shape, max_entry, rows, r + 1, 0, budget, emit);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
  if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
  for (int v = lo; v <= max_entry; ++v) {
    if (budget != nullptr) {
      if ((*budget)[static_cast<std::size_t>(v - 1)] == 0) continue;
      --(*budget)[static_cast<std::size_t>(v - 1)];
    }
    rows[static_cast<std::size_t>(r)].push_back(v);
    fill_boxes(shape, max_entry, rows, r, c + 1, budget, emit);
    rows[static_cast<std::size_t>(r)].pop_back();
    if (budget != nullptr) ++(*budget)[static_cast<std::size_t>(v - 1)];
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  if (max_entry < 1) throw std::invalid_argument("tableau entries need max_entry >= 1");
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.nonzero_rows()));
  fill_boxes(shape, max_entry, rows, 0, 0, nullptr, [&] { out.push_back(Tableau{shape, rows}); });
  return out;
}

ExponentVector tableau_content(const Tableau& t, int max_entry) {
  ExponentVector content(static_cast<std::size_t>(max_entry), 0);
  for (const auto& row : t.rows) {
    for (int v : row) ++content[static_cast<std::size_t>(v - 1)];
  }
  return content;
}

std::uint64_t gamma_coefficient(const Partition& shape, const ExponentVector& content, int max_entry) {
  if (static_cast<int>(content.size()) != max_entry) throw std::invalid_argument("content vector length must equal max_entry");
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("content entries must be non-negative");
  }
  if (std::accumulate(content.begin(), content.end(), 0) != shape.weight()) return 0;
  std::uint64_t count = 0;
  std::vector<int> budget = content;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.nonzero_rows()));
  fill_boxes(shape, max_entry, rows, 0, 0, &budget, [&] { ++count; });
  return count;
}

}  // namespace upm
