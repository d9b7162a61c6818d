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

#include "linsecagg/index_set.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "linsecagg/error.h"

namespace linsecagg {

IndexSet IndexSet::FromMembers(std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  if (!members.empty() && members.front() == 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "user indices are 1-based");
  }
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw Error(ErrorCode::kIndexOutOfRange, "duplicate user index in set");
  }
  return IndexSet(std::move(members));
}

IndexSet IndexSet::Full(std::size_t k) {
  std::vector<std::size_t> members(k);
  for (std::size_t i = 0; i < k; ++i) members[i] = i + 1;
  return IndexSet(std::move(members));
}

IndexSet IndexSet::Parse(std::string_view text) {
  std::vector<std::size_t> members;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return IndexSet();
  while (true) {
    std::size_t comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kParse,
                  "bad index set entry '" + std::string(item) + "'");
    }
    members.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return FromMembers(std::move(members));
}

bool IndexSet::Contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool IndexSet::IsSubsetOf(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

IndexSet IndexSet::Without(std::size_t i) const {
  std::vector<std::size_t> rest;
  rest.reserve(members_.size());
  for (std::size_t m : members_) {
    if (m != i) rest.push_back(m);
  }
  return IndexSet(std::move(rest));
}

void IndexSet::CheckRange(std::size_t k) const {
  if (max() > k) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(max()) + " exceeds " + std::to_string(k));
  }
}

std::vector<int> IndexSet::Indicator(std::size_t k) const {
  CheckRange(k);
  std::vector<int> out(k, 0);
  for (std::size_t m : members_) out[m - 1] = 1;
  return out;
}

std::string IndexSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

}  // namespace linsecagg
