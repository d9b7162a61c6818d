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

#include "linsecagg/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "linsecagg/error.h"
#include "linsecagg/region.h"

namespace linsecagg {
namespace {

using CountEntries = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t SaturatingPow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = SaturatingMul(r, base);
  return r;
}

// Sorted (key, count) runs of a key list.
CountEntries RunLength(std::vector<std::uint64_t>& keys) {
  std::sort(keys.begin(), keys.end());
  CountEntries out;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    out.emplace_back(keys[i], j - i);
    i = j;
  }
  return out;
}

// Sorts and sums the counts of equal keys.
CountEntries Combine(CountEntries all) {
  std::sort(all.begin(), all.end());
  CountEntries out;
  for (const auto& [key, count] : all) {
    if (!out.empty() && out.back().first == key) {
      out.back().second += count;
    } else {
      out.emplace_back(key, count);
    }
  }
  return out;
}

// Merges per-worker tables, each already sorted.
CountEntries MergeSorted(std::vector<CountEntries> parts) {
  if (parts.size() == 1) return std::move(parts[0]);
  CountEntries all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return Combine(std::move(all));
}

// Partition [0, total) into `parts` contiguous ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> SplitRange(std::uint64_t total,
                                                                unsigned parts) {
  parts = std::max(1u, parts);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const std::uint64_t step = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t begin = 0;
  for (unsigned i = 0; i < parts; ++i) {
    const std::uint64_t len = step + (i < extra ? 1 : 0);
    if (len > 0) out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

template <typename Work>
void RunWorkers(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ranges,
                Work&& work) {
  if (ranges.size() <= 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i) work(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    threads.emplace_back([&, i] {
      try {
        work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void Digits(std::uint64_t index, std::uint32_t q, std::vector<Element>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Element>(index % q);
    index /= q;
  }
}

// Advances a base-q odometer (last digit fastest).
void Increment(std::vector<Element>& digits, std::uint32_t q) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < q) return;
    digits[i] = 0;
  }
}

Element Dot(std::span<const Element> row, const Element* v, std::uint32_t q) {
  std::uint64_t acc = 0;
  if (q < (1u << 16) && row.size() < (std::size_t{1} << 32)) {
    for (std::size_t c = 0; c < row.size(); ++c) acc += std::uint64_t{row[c]} * v[c];
  } else {
    for (std::size_t c = 0; c < row.size(); ++c) acc += std::uint64_t{row[c]} * v[c] % q;
  }
  return static_cast<Element>(acc % q);
}

std::uint64_t Pack(std::span<const Element> digits, std::uint32_t q) {
  std::uint64_t key = 0;
  for (Element d : digits) key = key * q + d;
  return key;
}

std::uint64_t LowMask(unsigned bits) {
  return bits >= 64 ? kSaturated : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

JointCountTable::JointCountTable(std::uint32_t q, std::size_t f_digits,
                                 std::size_t g_digits, std::size_t x_digits,
                                 CountEntries entries)
    : q_(q),
      f_digits_(f_digits),
      g_digits_(g_digits),
      x_digits_(x_digits),
      g_bits_(FieldBits(q, g_digits)),
      x_bits_(FieldBits(q, x_digits)),
      entries_(std::move(entries)) {
  for (const auto& e : entries_) total_ += e.second;
}

unsigned JointCountTable::FieldBits(std::uint32_t q, std::size_t digits) {
  const std::uint64_t size = SaturatingPow(q, digits);
  if (size == kSaturated) return 64;
  return static_cast<unsigned>(std::bit_width(size - 1));
}

JointCountTable::Triple JointCountTable::Unpack(std::uint64_t key) const {
  Triple t;
  t.f.resize(f_digits_);
  t.g.resize(g_digits_);
  t.x.resize(x_digits_);
  Digits(key & LowMask(x_bits_), q_, t.x);
  key >>= x_bits_;
  Digits(key & LowMask(g_bits_), q_, t.g);
  Digits(key >> g_bits_, q_, t.f);
  return t;
}

JointCountTable CountJoint(const AggregationInstance& inst,
                           std::span<const Matrix> slot_encoders,
                           const OracleOptions& options, bool* correct) {
  const std::uint32_t q = inst.modulus().value();
  const std::size_t k = inst.num_users();
  const std::size_t m = inst.m();
  const std::size_t n = inst.n();
  const std::size_t slots = slot_encoders.size();
  for (const Matrix& p : slot_encoders) EncodingScheme(inst, p);

  const std::size_t w_syms = k * slots;
  const std::size_t s_syms = n * slots;
  const std::uint64_t tuples = SaturatingPow(q, w_syms + s_syms);
  if (tuples > options.budget) throw BudgetExceededError(tuples, options.budget);
  const unsigned f_bits = JointCountTable::FieldBits(q, m * slots);
  const unsigned g_bits = JointCountTable::FieldBits(q, n * slots);
  const unsigned x_bits = JointCountTable::FieldBits(q, w_syms);
  if (f_bits + g_bits + x_bits > 64) {
    throw Error(ErrorCode::kBudgetExceeded, "packed (f, g, x) keys exceed 64 bits");
  }
  const std::uint64_t w_count = SaturatingPow(q, w_syms);
  const std::uint64_t s_count = SaturatingPow(q, s_syms);
  const FieldModulus& field = inst.modulus();

  // Key vector P_l s_l of every source-key assignment, slot-major.
  std::vector<Element> key_table(s_count * w_syms);
  {
    std::vector<Element> s(s_syms, 0);
    for (std::uint64_t si = 0; si < s_count; ++si) {
      for (std::size_t l = 0; l < slots; ++l) {
        std::span<const Element> s_slot(s.data() + l * n, n);
        std::vector<Element> z = Multiply(slot_encoders[l], s_slot);
        std::copy(z.begin(), z.end(), key_table.begin() + si * w_syms + l * k);
      }
      Increment(s, q);
    }
  }

  const unsigned key_bits = f_bits + g_bits + x_bits;
  const bool dense = key_bits <= 24 &&
                     (std::uint64_t{1} << key_bits) <= std::max<std::uint64_t>(4096, 4 * tuples);
  const std::uint64_t key_space = dense ? std::uint64_t{1} << key_bits : 0;
  const auto ranges = SplitRange(w_count, options.workers);
  std::vector<CountEntries> parts(ranges.size());
  std::vector<char> part_correct(ranges.size(), 1);

  RunWorkers(ranges, [&](std::size_t part) {
    const auto [begin, end] = ranges[part];
    std::vector<std::uint64_t> dense_counts;
    std::vector<std::uint64_t> keys;
    if (dense) {
      dense_counts.assign(key_space, 0);
    } else {
      keys.reserve((end - begin) * s_count);
    }
    std::vector<Element> w(w_syms), f(m * slots), g(n * slots), x(w_syms);
    Digits(begin, q, w);
    bool ok = true;
    for (std::uint64_t wi = begin; wi < end; ++wi) {
      for (std::size_t l = 0; l < slots; ++l) {
        const Element* w_slot = w.data() + l * k;
        for (std::size_t r = 0; r < m; ++r) f[l * m + r] = Dot(inst.f().row(r), w_slot, q);
        for (std::size_t r = 0; r < n; ++r) g[l * n + r] = Dot(inst.g().row(r), w_slot, q);
      }
      const std::uint64_t fg_key = ((Pack(f, q) << g_bits) | Pack(g, q)) << x_bits;
      for (std::uint64_t si = 0; si < s_count; ++si) {
        const Element* z = key_table.data() + si * w_syms;
        for (std::size_t i = 0; i < w_syms; ++i) x[i] = field.Add(w[i], z[i]);
        // The server's decoder applied to what it received.
        for (std::size_t l = 0; l < slots && ok; ++l) {
          for (std::size_t r = 0; r < m && ok; ++r) {
            ok = Dot(inst.f().row(r), x.data() + l * k, q) == f[l * m + r];
          }
        }
        const std::uint64_t key = fg_key | Pack(x, q);
        if (dense) {
          ++dense_counts[key];
        } else {
          keys.push_back(key);
        }
      }
      Increment(w, q);
    }
    part_correct[part] = ok;
    if (dense) {
      for (std::uint64_t key = 0; key < key_space; ++key) {
        if (dense_counts[key] > 0) parts[part].emplace_back(key, dense_counts[key]);
      }
    } else {
      parts[part] = RunLength(keys);
    }
  });

  if (correct != nullptr) {
    *correct = std::all_of(part_correct.begin(), part_correct.end(),
                           [](char c) { return c != 0; });
  }
  return JointCountTable(q, m * slots, n * slots, w_syms, MergeSorted(std::move(parts)));
}

SecurityVerdict VerdictFromTable(const JointCountTable& table, bool correct) {
  const std::uint32_t q = table.q();
  const unsigned x_bits = table.x_bits();
  const unsigned gx_bits = table.g_bits() + x_bits;
  const std::uint64_t x_mask = LowMask(x_bits);
  const auto& entries = table.entries();

  // (f, x) marginal. Small x spaces are counted one f group at a time in a
  // dense array; otherwise a sorted global table is searched.
  const bool dense_x = x_bits <= 20;
  std::vector<std::uint64_t> x_counts(dense_x ? std::size_t{1} << x_bits : 0, 0);
  CountEntries fx;
  if (!dense_x) {
    CountEntries raw;
    raw.reserve(entries.size());
    for (const auto& [key, count] : entries) {
      raw.emplace_back(((key >> gx_bits) << x_bits) | (key & x_mask), count);
    }
    fx = Combine(std::move(raw));
  }
  auto count_fx = [&](std::uint64_t f_key, std::uint64_t key) {
    if (dense_x) return x_counts[key & x_mask];
    const std::uint64_t fx_key = (f_key << x_bits) | (key & x_mask);
    auto it = std::lower_bound(fx.begin(), fx.end(), std::make_pair(fx_key, std::uint64_t{0}));
    return it->second;
  };

  SecurityVerdict verdict;
  verdict.correct = correct;
  verdict.secure = true;
  verdict.tuples = table.total();
  const double total = static_cast<double>(table.total());
  const double log_q = std::log(static_cast<double>(q));
  double mi = 0.0;

  std::size_t i = 0;
  while (i < entries.size()) {
    const std::uint64_t f_key = entries[i].first >> gx_bits;
    std::size_t f_end = i;
    std::uint64_t c_f = 0;
    while (f_end < entries.size() && (entries[f_end].first >> gx_bits) == f_key) {
      c_f += entries[f_end].second;
      if (dense_x) x_counts[entries[f_end].first & x_mask] += entries[f_end].second;
      ++f_end;
    }
    std::size_t j = i;
    while (j < f_end) {
      const std::uint64_t fg_key = entries[j].first >> x_bits;
      std::size_t fg_end = j;
      std::uint64_t c_fg = 0;
      while (fg_end < f_end && (entries[fg_end].first >> x_bits) == fg_key) {
        c_fg += entries[fg_end].second;
        ++fg_end;
      }
      for (std::size_t t = j; t < fg_end; ++t) {
        const auto [key, c_fgx] = entries[t];
        const std::uint64_t c_fx = count_fx(f_key, key);
        const unsigned __int128 lhs = static_cast<unsigned __int128>(c_fgx) * c_f;
        const unsigned __int128 rhs = static_cast<unsigned __int128>(c_fg) * c_fx;
        if (lhs != rhs && verdict.secure) {
          verdict.secure = false;
          verdict.counterexample =
              CounterExample{table.Unpack(key), c_fgx, c_f, c_fg, c_fx};
        }
        if (lhs != rhs) {
          const double ratio = static_cast<double>(lhs) / static_cast<double>(rhs);
          mi += (static_cast<double>(c_fgx) / total) * std::log(ratio) / log_q;
        }
      }
      j = fg_end;
    }
    if (dense_x) {
      for (std::size_t t = i; t < f_end; ++t) x_counts[entries[t].first & x_mask] = 0;
    }
    i = f_end;
  }
  verdict.mi_estimate = mi;
  return verdict;
}

SecurityVerdict ExhaustiveVerdict(const EncodingScheme& scheme,
                                  const OracleOptions& options) {
  bool correct = false;
  std::vector<Matrix> slots{scheme.encoder()};
  JointCountTable table = CountJoint(scheme.instance(), slots, options, &correct);
  return VerdictFromTable(table, correct);
}

SecurityVerdict ExhaustiveVerdict(const TimeShareSchedule& schedule,
                                  const OracleOptions& options) {
  bool correct = false;
  const std::vector<Matrix> slots = schedule.SlotEncoders();
  JointCountTable table = CountJoint(schedule.instance(), slots, options, &correct);
  return VerdictFromTable(table, correct);
}

SweepReport ConverseSweep(const AggregationInstance& inst, const OracleOptions& options) {
  const std::uint32_t q = inst.modulus().value();
  const std::size_t k = inst.num_users();
  const std::size_t n = inst.n();
  const std::uint64_t encoders = SaturatingPow(q, k * n);
  const std::uint64_t work = SaturatingMul(encoders, SaturatingPow(q, k + n));
  if (work > options.budget) throw BudgetExceededError(work, options.budget);

  OracleOptions per_encoder = options;
  per_encoder.workers = 1;

  struct Outcome {
    bool passing = false;
    bool sufficient = false;
  };
  std::vector<Outcome> outcomes(encoders);
  const auto ranges = SplitRange(encoders, options.workers);
  auto encoder_at = [&](std::uint64_t index) {
    std::vector<Element> digits(k * n);
    Digits(index, q, digits);
    Matrix p(inst.modulus(), k, n);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < n; ++c) p.set(r, c, digits[r * n + c]);
    }
    return p;
  };
  RunWorkers(ranges, [&](std::size_t part) {
    for (std::uint64_t idx = ranges[part].first; idx < ranges[part].second; ++idx) {
      Matrix p = encoder_at(idx);
      SecurityVerdict v = ExhaustiveVerdict(EncodingScheme(inst, p), per_encoder);
      outcomes[idx] = Outcome{v.correct && v.secure, VerifyEncoder(inst, p).ok()};
    }
  });

  SweepReport report;
  report.total_encoders = encoders;
  std::set<IndexSet> supports;
  for (std::uint64_t idx = 0; idx < encoders; ++idx) {
    const Outcome& o = outcomes[idx];
    if (o.sufficient && !o.passing) report.sufficiency_violations.push_back(encoder_at(idx));
    if (!o.passing) continue;
    Matrix p = encoder_at(idx);
    IndexSet support = Support(p);
    if (support.empty() || !RankIncrementCheck(inst, support)) {
      report.theorem3_violations.push_back(p);
    }
    supports.insert(support);
    report.passing_encoders.push_back(std::move(p));
  }
  report.support_sets.assign(supports.begin(), supports.end());

  EnumerationOptions enum_options;
  enum_options.allow_large = true;
  report.minimal_sets = EnumerateMinimalSets(inst, enum_options).minimal_sets;
  for (const IndexSet& m : report.minimal_sets) {
    if (!supports.contains(m)) report.unrealized_minimal_sets.push_back(m);
  }
  return report;
}

std::size_t RowSpaceRank(const Matrix& a) {
  const std::uint32_t q = a.modulus().value();
  const std::uint64_t combos = SaturatingPow(q, a.rows());
  if (combos > (std::uint64_t{1} << 24) || SaturatingPow(q, a.cols()) == kSaturated) {
    throw Error(ErrorCode::kBudgetExceeded, "row space too large to enumerate");
  }
  const FieldModulus& field = a.modulus();
  std::set<std::uint64_t> seen;
  std::vector<Element> coeff(a.rows(), 0);
  std::vector<Element> v(a.cols());
  for (std::uint64_t i = 0; i < combos; ++i) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        v[c] = field.Add(v[c], field.Mul(coeff[r], a.at(r, c)));
      }
    }
    seen.insert(Pack(v, q));
    Increment(coeff, q);
  }
  std::size_t rank = 0;
  for (std::uint64_t size = 1; size < seen.size(); size *= q) ++rank;
  return rank;
}

std::size_t ImageOfNullspaceDim(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kShapeMismatch, "A and B must share columns and field");
  }
  const std::uint32_t q = a.modulus().value();
  const std::uint64_t count = SaturatingPow(q, a.cols());
  if (count > (std::uint64_t{1} << 24) || SaturatingPow(q, b.rows()) == kSaturated) {
    throw Error(ErrorCode::kBudgetExceeded, "domain too large to enumerate");
  }
  std::set<std::uint64_t> image;
  std::vector<Element> x(a.cols(), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<Element> ax = Multiply(a, x);
    if (std::all_of(ax.begin(), ax.end(), [](Element e) { return e == 0; })) {
      image.insert(Pack(Multiply(b, x), q));
    }
    Increment(x, q);
  }
  std::size_t dim = 0;
  for (std::uint64_t size = 1; size < image.size(); size *= q) ++dim;
  return dim;
}

bool Claim1Oracle(const Matrix& a, const Matrix& b) {
  const RankDecomposition terms = RankDecompositionTerms(a, b);
  if (!terms.Holds()) return false;
  const std::uint32_t q = a.modulus().value();
  if ((q == 2 || q == 3) && a.rows() <= 3 && b.rows() <= 3 && a.cols() <= 4) {
    if (RowSpaceRank(VStack(a, b)) != terms.stack_rank) return false;
    if (RowSpaceRank(a) != terms.rank_a) return false;
    if (ImageOfNullspaceDim(a, b) != terms.dim_b_null_a) return false;
  }
  return true;
}

}  // namespace linsecagg
