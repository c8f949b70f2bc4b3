// Copyright 2026 The bidrec Authors
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

#ifndef BIDREC_ORACLE_HPP
#define BIDREC_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidrec/dists.hpp"

namespace bidrec {

enum class InfoMode { winner_only, winner_and_price };

struct RoundRequest {
  double reserve = 0.0;                           // our bid, bidder 0
  std::optional<std::vector<int>> participants;   // absent => oracle decides (default all)
  InfoMode info_mode = InfoMode::winner_only;
  std::uint64_t round_seed = 0;

  bool operator==(const RoundRequest&) const = default;
};

struct Outcome {
  int winner = 0;                        // 0..n, 0 = reserve
  std::optional<double> winning_bid;     // winner-and-price mode only
  std::vector<int> participants;         // bidders actually present, ascending

  bool operator==(const Outcome&) const = default;
};

// Win counts per identity 0..n from one batch of rounds at a fixed reserve.
struct Tally {
  std::vector<std::int64_t> wins;
  std::int64_t rounds = 0;
  std::int64_t reserve_wins() const { return wins.empty() ? 0 : wins[0]; }
};

// The auction being probed. Implementations must be deterministic functions
// of (their own state, RoundRequest).
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual int bidder_count() const = 0;
  virtual Outcome run_round(const RoundRequest& req) = 0;
  // Rounds executed so far, for sample accounting.
  virtual std::uint64_t rounds_consumed() const = 0;
};

// Draws participant sets; takes the round seed token, returns ascending ids.
using ParticipationDrawer = std::function<std::vector<int>(std::uint64_t round_seed)>;

// Independent inclusion with probability q; guarantees a non-empty set by
// re-drawing the full set when everyone would be absent.
ParticipationDrawer independent_participation(std::uint64_t root, int n, double q);

// Simulated sealed-bid auction over a BidModel. Each participant's bid is an
// inverse-CDF transform of a counter-RNG uniform keyed by (root, round, id),
// so a bidder's bid distribution never depends on who else shows up.
class SimOracle final : public Oracle {
 public:
  SimOracle(BidModel model, std::uint64_t root_seed);

  int bidder_count() const override { return model_.bidder_count(); }
  Outcome run_round(const RoundRequest& req) override;
  std::uint64_t rounds_consumed() const override { return rounds_; }

  void set_participation(ParticipationDrawer drawer) { participation_ = std::move(drawer); }
  const BidModel& model() const { return model_; }
  std::uint64_t root_seed() const { return root_; }

  // White-box hook for tests: the bid bidder i would place in a round.
  double bid_of(int bidder, std::uint64_t round_seed) const;

 private:
  BidModel model_;
  std::uint64_t root_;
  std::uint64_t rounds_ = 0;
  ParticipationDrawer participation_;  // null => everyone
};

// count independent rounds at one reserve; round seeds derive from
// (batch_seed, round index), so the tally is reproducible and
// order-independent.
Tally run_batch(Oracle& oracle, double reserve, std::int64_t count,
                const std::optional<std::vector<int>>& participants,
                std::uint64_t batch_seed, InfoMode mode = InfoMode::winner_only);

struct TraceRound {
  std::int64_t index = 0;
  RoundRequest request;
  Outcome outcome;
};

struct Trace {
  std::vector<TraceRound> rounds;
  std::optional<std::uint64_t> root_seed;  // written as a '#' header when saved
};

// Oracle wrapper that appends every round to a trace.
class RecordingOracle final : public Oracle {
 public:
  RecordingOracle(Oracle& inner, Trace& trace) : inner_(inner), trace_(trace) {}
  int bidder_count() const override { return inner_.bidder_count(); }
  Outcome run_round(const RoundRequest& req) override;
  std::uint64_t rounds_consumed() const override { return inner_.rounds_consumed(); }

 private:
  Oracle& inner_;
  Trace& trace_;
};

class ReplayMismatch : public std::runtime_error {
 public:
  ReplayMismatch(std::int64_t round, const std::string& what)
      : std::runtime_error("replay mismatch at round " + std::to_string(round) + ": " + what),
        round_(round) {}
  std::int64_t round() const { return round_; }

 private:
  std::int64_t round_;
};

// Serves a recorded trace back as an oracle. Every incoming request must
// match the recorded sequence exactly; recorded outcomes are re-derived from
// the inner oracle and compared bit-for-bit.
class ReplayOracle final : public Oracle {
 public:
  ReplayOracle(Oracle& inner, const Trace& trace) : inner_(inner), trace_(trace) {}
  int bidder_count() const override { return inner_.bidder_count(); }
  Outcome run_round(const RoundRequest& req) override;
  std::uint64_t rounds_consumed() const override { return inner_.rounds_consumed(); }
  bool exhausted() const { return next_ >= trace_.rounds.size(); }

 private:
  Oracle& inner_;
  const Trace& trace_;
  std::size_t next_ = 0;
};

// Re-runs every recorded request against a fresh oracle and verifies the
// outcomes are identical. Throws ReplayMismatch naming the first bad round.
void replay(Oracle& oracle, const Trace& trace);

}  // namespace bidrec

#endif  // BIDREC_ORACLE_HPP
