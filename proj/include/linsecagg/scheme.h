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

// The one-shot linear scheme x = w + P s: user k sends its input plus the key
// Z_k = <p_k, s>, where s holds N uniform source keys and P is K x N.

#ifndef LINSECAGG_SCHEME_H_
#define LINSECAGG_SCHEME_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linsecagg/index_set.h"
#include "linsecagg/instance.h"
#include "linsecagg/matrix.h"
#include "linsecagg/rational.h"
#include "linsecagg/region.h"

namespace linsecagg {

// An instance paired with some K x N encoding matrix. The encoder is not
// required to be correct or secure; see VerifyEncoder.
class EncodingScheme {
 public:
  // Throws Error(kShapeMismatch) unless P is K x N over the instance field.
  EncodingScheme(AggregationInstance instance, Matrix encoder);

  const AggregationInstance& instance() const { return instance_; }
  const Matrix& encoder() const { return encoder_; }

 private:
  AggregationInstance instance_;
  Matrix encoder_;
};

// Builds P whose rows outside `set` are zero with F P = 0 and
// rank(G P) = N: U is the canonical nullspace basis of F_I, and P keeps the
// first N columns of U (left to right) that are independent under G_I.
// Throws Error(kConditionNotSatisfied) if `set` fails the rank-increment
// condition.
Matrix ConstructEncoder(const AggregationInstance& inst, const IndexSet& set);

// Members of `set` whose row of P is zero.
std::vector<std::size_t> ZeroRowsInSet(const Matrix& encoder, const IndexSet& set);

struct EncoderCheck {
  bool condition1 = false;  // F P = 0
  bool condition2 = false;  // rank(G P) = N
  std::size_t gp_rank = 0;
  std::vector<std::string> violations;

  bool ok() const { return condition1 && condition2; }
};

// Throws Error(kShapeMismatch) unless P is K x N over the instance field.
EncoderCheck VerifyEncoder(const AggregationInstance& inst, const Matrix& encoder);

// Rows of P that are nonzero, as a set of users.
IndexSet Support(const Matrix& encoder);

struct SchemeMetrics {
  RateTuple rate_tuple;          // key symbols per user / L
  Rational communication_rate;   // symbols sent per user / L
  Rational total_key_rate;       // H(all keys) / L, in q-ary units
};

// Single block: R_k = 1(p_k != 0), R_X = 1, total key rate rank(P).
SchemeMetrics SupportRates(const Matrix& encoder);

// x = w + P s. Throws Error(kShapeMismatch) on length mismatch.
std::vector<Element> SimulateRound(const EncodingScheme& scheme,
                                   std::span<const Element> w,
                                   std::span<const Element> s);

// F x. Throws Error(kShapeMismatch) unless |x| = K.
std::vector<Element> Decode(const AggregationInstance& inst, std::span<const Element> x);

struct TimeShareBlock {
  IndexSet set;
  Matrix encoder;
  std::size_t block_count = 0;
};

// Time slots split among vertex schemes; every slot draws N fresh source keys
// and its own input symbol per user.
class TimeShareSchedule {
 public:
  TimeShareSchedule(AggregationInstance instance, std::vector<TimeShareBlock> blocks);

  const AggregationInstance& instance() const { return instance_; }
  const std::vector<TimeShareBlock>& blocks() const { return blocks_; }
  std::size_t total_length() const { return total_length_; }

  // One encoder per slot, blocks in order.
  std::vector<Matrix> SlotEncoders() const;
  // Key symbols held by each user over the whole schedule.
  std::vector<std::size_t> KeyUsage() const;

 private:
  AggregationInstance instance_;
  std::vector<TimeShareBlock> blocks_;
  std::size_t total_length_ = 0;
};

SchemeMetrics ScheduleMetrics(const TimeShareSchedule& schedule);

// Realizes `rate` by time-sharing vertex schemes with the exact membership
// weights; L is the lcm of their denominators. Throws Error(kNotAchievable)
// if the rate lies outside the region.
TimeShareSchedule BuildTimeShareSchedule(const AggregationInstance& inst,
                                         const RegionVertices& vertices,
                                         const RateTuple& rate);

}  // namespace linsecagg

#endif  // LINSECAGG_SCHEME_H_
