// Copyright 2026 The linsecagg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINSECAGG_INDEX_SET_H_
#define LINSECAGG_INDEX_SET_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linsecagg {

// A subset of user indices. Members are 1-based and strictly ascending.
class IndexSet {
 public:
  IndexSet() = default;

  // Sorts the input. Throws Error(kIndexOutOfRange) on 0 or duplicates.
  static IndexSet FromMembers(std::vector<std::size_t> members);
  // {1, ..., k}.
  static IndexSet Full(std::size_t k);
  // Parses "1,2,4"; whitespace around entries is allowed.
  static IndexSet Parse(std::string_view text);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::size_t max() const { return members_.empty() ? 0 : members_.back(); }

  bool Contains(std::size_t i) const;
  bool IsSubsetOf(const IndexSet& other) const;
  IndexSet Without(std::size_t i) const;

  // Throws Error(kIndexOutOfRange) unless every member is <= k.
  void CheckRange(std::size_t k) const;

  // 0/1 indicator of length k.
  std::vector<int> Indicator(std::size_t k) const;

  std::string ToString() const;

  // Lexicographic on the member list.
  friend std::strong_ordering operator<=>(const IndexSet&,
                                          const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  explicit IndexSet(std::vector<std::size_t> sorted) : members_(std::move(sorted)) {}

  std::vector<std::size_t> members_;
};

}  // namespace linsecagg

#endif  // LINSECAGG_INDEX_SET_H_
