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

#include "linsecagg/scheme.h"

#include <stdexcept>
#include <utility>

#include "linsecagg/error.h"

namespace linsecagg {
namespace {

void RequireEncoderShape(const AggregationInstance& inst, const Matrix& encoder) {
  if (encoder.modulus() != inst.modulus() || encoder.rows() != inst.num_users() ||
      encoder.cols() != inst.n()) {
    throw Error(ErrorCode::kShapeMismatch,
                "encoder must be " + std::to_string(inst.num_users()) + "x" +
                    std::to_string(inst.n()) + " over GF(" +
                    std::to_string(inst.modulus().value()) + "), got " +
                    std::to_string(encoder.rows()) + "x" +
                    std::to_string(encoder.cols()) + " over GF(" +
                    std::to_string(encoder.modulus().value()) + ")");
  }
}

bool IsMinimal(const AggregationInstance& inst, const IndexSet& set) {
  for (std::size_t i : set.members()) {
    IndexSet rest = set.Without(i);
    if (!rest.empty() && RankIncrementCheck(inst, rest)) return false;
  }
  return true;
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  BigInt x = a, y = b;
  while (y != 0) {
    BigInt t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return a / x * b;
}

}  // namespace

EncodingScheme::EncodingScheme(AggregationInstance instance, Matrix encoder)
    : instance_(std::move(instance)), encoder_(std::move(encoder)) {
  RequireEncoderShape(instance_, encoder_);
}

Matrix ConstructEncoder(const AggregationInstance& inst, const IndexSet& set) {
  if (!RankIncrementCheck(inst, set)) {
    throw Error(ErrorCode::kConditionNotSatisfied,
                "set " + set.ToString() + " fails the rank-increment condition");
  }
  const std::size_t n = inst.n();
  const Matrix basis = NullspaceBasis(SubmatrixCols(inst.f(), set));
  const Matrix image = Multiply(SubmatrixCols(inst.g(), set), basis);

  std::vector<std::size_t> chosen;
  Matrix picked(inst.modulus(), image.rows(), 0);
  for (std::size_t j = 0; j < image.cols() && chosen.size() < n; ++j) {
    Matrix candidate = HStack(picked, SubmatrixCols(image, IndexSet::FromMembers({j + 1})));
    if (Rank(candidate) > chosen.size()) {
      picked = std::move(candidate);
      chosen.push_back(j);
    }
  }
  if (chosen.size() != n) {
    throw std::logic_error("G_I U has rank below N although the condition holds");
  }

  Matrix encoder(inst.modulus(), inst.num_users(), n);
  for (std::size_t r = 0; r < set.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      encoder.set(set.members()[r] - 1, c, basis.at(r, chosen[c]));
    }
  }
  if (!ZeroRowsInSet(encoder, set).empty() && IsMinimal(inst, set)) {
    throw std::logic_error("a minimal key-holder set produced a zero key row");
  }
  return encoder;
}

std::vector<std::size_t> ZeroRowsInSet(const Matrix& encoder, const IndexSet& set) {
  set.CheckRange(encoder.rows());
  std::vector<std::size_t> out;
  for (std::size_t m : set.members()) {
    if (encoder.RowIsZero(m - 1)) out.push_back(m);
  }
  return out;
}

EncoderCheck VerifyEncoder(const AggregationInstance& inst, const Matrix& encoder) {
  RequireEncoderShape(inst, encoder);
  EncoderCheck check;
  const Matrix fp = Multiply(inst.f(), encoder);
  check.condition1 = fp.IsZero();
  if (!check.condition1) {
    check.violations.push_back("Condition 1 violated: F*P = " + fp.ToString() + " != 0");
  }
  check.gp_rank = Rank(Multiply(inst.g(), encoder));
  check.condition2 = check.gp_rank == inst.n();
  if (!check.condition2) {
    check.violations.push_back("Condition 2 violated: rank(G*P) = " +
                               std::to_string(check.gp_rank) + " < N = " +
                               std::to_string(inst.n()));
  }
  return check;
}

IndexSet Support(const Matrix& encoder) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < encoder.rows(); ++r) {
    if (!encoder.RowIsZero(r)) rows.push_back(r + 1);
  }
  return IndexSet::FromMembers(std::move(rows));
}

SchemeMetrics SupportRates(const Matrix& encoder) {
  std::vector<Rational> rates;
  for (std::size_t r = 0; r < encoder.rows(); ++r) {
    rates.emplace_back(encoder.RowIsZero(r) ? 0 : 1);
  }
  return SchemeMetrics{RateTuple(std::move(rates)), Rational(1),
                       Rational(static_cast<long long>(Rank(encoder)))};
}

std::vector<Element> SimulateRound(const EncodingScheme& scheme,
                                   std::span<const Element> w,
                                   std::span<const Element> s) {
  const AggregationInstance& inst = scheme.instance();
  if (w.size() != inst.num_users() || s.size() != inst.n()) {
    throw Error(ErrorCode::kShapeMismatch,
                "simulate needs |w| = K = " + std::to_string(inst.num_users()) +
                    " and |s| = N = " + std::to_string(inst.n()));
  }
  const FieldModulus& field = inst.modulus();
  std::vector<Element> keys = Multiply(scheme.encoder(), s);
  std::vector<Element> x(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    x[k] = field.Add(w[k] % field.value(), keys[k]);
  }
  return x;
}

std::vector<Element> Decode(const AggregationInstance& inst, std::span<const Element> x) {
  if (x.size() != inst.num_users()) {
    throw Error(ErrorCode::kShapeMismatch,
                "decode needs |x| = K = " + std::to_string(inst.num_users()));
  }
  return Multiply(inst.f(), x);
}

TimeShareSchedule::TimeShareSchedule(AggregationInstance instance,
                                     std::vector<TimeShareBlock> blocks)
    : instance_(std::move(instance)), blocks_(std::move(blocks)) {
  for (const TimeShareBlock& b : blocks_) {
    RequireEncoderShape(instance_, b.encoder);
    total_length_ += b.block_count;
  }
}

std::vector<Matrix> TimeShareSchedule::SlotEncoders() const {
  std::vector<Matrix> out;
  out.reserve(total_length_);
  for (const TimeShareBlock& b : blocks_) {
    for (std::size_t i = 0; i < b.block_count; ++i) out.push_back(b.encoder);
  }
  return out;
}

std::vector<std::size_t> TimeShareSchedule::KeyUsage() const {
  std::vector<std::size_t> usage(instance_.num_users(), 0);
  for (const TimeShareBlock& b : blocks_) {
    for (std::size_t k = 0; k < usage.size(); ++k) {
      if (!b.encoder.RowIsZero(k)) usage[k] += b.block_count;
    }
  }
  return usage;
}

SchemeMetrics ScheduleMetrics(const TimeShareSchedule& schedule) {
  const Rational length(static_cast<long long>(schedule.total_length()));
  std::vector<Rational> rates;
  for (std::size_t used : schedule.KeyUsage()) {
    rates.push_back(Rational(static_cast<long long>(used)) / length);
  }
  std::size_t key_symbols = 0;
  for (const TimeShareBlock& b : schedule.blocks()) {
    key_symbols += b.block_count * Rank(b.encoder);
  }
  return SchemeMetrics{RateTuple(std::move(rates)), Rational(1),
                       Rational(static_cast<long long>(key_symbols)) / length};
}

TimeShareSchedule BuildTimeShareSchedule(const AggregationInstance& inst,
                                         const RegionVertices& vertices,
                                         const RateTuple& rate) {
  MembershipResult membership = Membership(rate, vertices);
  if (!membership.member) {
    std::string why = membership.violated ? membership.violated->ToString() : "empty region";
    throw Error(ErrorCode::kNotAchievable,
                "rate " + rate.ToString() + " is outside the region (violates " + why + ")");
  }
  BigInt length = 1;
  for (const Rational& w : membership.weights) length = Lcm(length, denominator(w));

  std::vector<TimeShareBlock> blocks;
  for (std::size_t j = 0; j < membership.weights.size(); ++j) {
    const Rational count = membership.weights[j] * length;
    if (count == 0) continue;
    const IndexSet& set = vertices.minimal_sets[j];
    blocks.push_back(TimeShareBlock{set, ConstructEncoder(inst, set),
                                    numerator(count).convert_to<std::size_t>()});
  }
  TimeShareSchedule schedule(inst, std::move(blocks));

  const std::vector<std::size_t> usage = schedule.KeyUsage();
  for (std::size_t k = 0; k < usage.size(); ++k) {
    if (Rational(static_cast<long long>(usage[k])) > rate[k] * length) {
      throw std::logic_error("time-share schedule exceeds the key budget of user " +
                             std::to_string(k + 1));
    }
  }
  return schedule;
}

}  // namespace linsecagg
