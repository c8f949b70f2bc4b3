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

#include "bidrec/oracle.hpp"

#include <algorithm>

#include "bidrec/rng.hpp"

namespace bidrec {

ParticipationDrawer independent_participation(std::uint64_t root, int n, double q) {
  if (q <= 0.0 || q > 1.0) throw std::invalid_argument("q out of (0,1]");
  return [root, n, q](std::uint64_t round_seed) {
    std::vector<int> present;
    for (int i = 1; i <= n; ++i) {
      if (rng::uniform(root, rng::Stream::participation, 0, round_seed, static_cast<std::uint64_t>(i)) < q) {
        present.push_back(i);
      }
    }
    if (present.empty()) {
      present.resize(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) present[static_cast<std::size_t>(i - 1)] = i;
    }
    return present;
  };
}

SimOracle::SimOracle(BidModel model, std::uint64_t root_seed)
    : model_(std::move(model)), root_(root_seed) {
  auto report = validate(model_);
  if (!report.ok()) {
    throw std::invalid_argument("invalid BidModel: " + report.first().what);
  }
}

double SimOracle::bid_of(int bidder, std::uint64_t round_seed) const {
  const double u = rng::uniform(root_, rng::Stream::bids, 0, round_seed,
                                static_cast<std::uint64_t>(bidder));
  return sample_bid(model_, bidder, u);
}

Outcome SimOracle::run_round(const RoundRequest& req) {
  if (req.reserve < 0.0 || req.reserve > 1.0) {
    throw std::invalid_argument("reserve out of [0,1]");
  }
  std::vector<int> present;
  if (req.participants.has_value()) {
    present = *req.participants;
    if (present.empty()) throw std::invalid_argument("participants set must be non-empty");
    std::sort(present.begin(), present.end());
    for (std::size_t k = 0; k < present.size(); ++k) {
      if (present[k] < 1 || present[k] > bidder_count() ||
          (k > 0 && present[k] == present[k - 1])) {
        throw std::invalid_argument("invalid participants set");
      }
    }
  } else if (participation_) {
    present = participation_(req.round_seed);
  } else {
    present.resize(static_cast<std::size_t>(bidder_count()));
    for (int i = 1; i <= bidder_count(); ++i) present[static_cast<std::size_t>(i - 1)] = i;
  }

  // Reserve loses exact ties; among bidders the lowest index keeps a tie.
  int winner = 0;
  double best = req.reserve;
  for (int i : present) {
    const double b = bid_of(i, req.round_seed);
    if (b > best || (winner == 0 && b == best)) {
      winner = i;
      best = b;
    }
  }
  ++rounds_;

  Outcome out;
  out.winner = winner;
  out.participants = std::move(present);
  if (req.info_mode == InfoMode::winner_and_price) out.winning_bid = best;
  return out;
}

Tally run_batch(Oracle& oracle, double reserve, std::int64_t count,
                const std::optional<std::vector<int>>& participants,
                std::uint64_t batch_seed, InfoMode mode) {
  if (count < 1) throw std::invalid_argument("batch count must be >= 1");
  Tally tally;
  tally.wins.assign(static_cast<std::size_t>(oracle.bidder_count()) + 1, 0);
  RoundRequest req;
  req.reserve = reserve;
  req.participants = participants;
  req.info_mode = mode;
  for (std::int64_t t = 0; t < count; ++t) {
    req.round_seed = rng::hash_words({batch_seed, static_cast<std::uint64_t>(t)});
    const Outcome out = oracle.run_round(req);
    ++tally.wins[static_cast<std::size_t>(out.winner)];
  }
  tally.rounds = count;
  return tally;
}

Outcome RecordingOracle::run_round(const RoundRequest& req) {
  Outcome out = inner_.run_round(req);
  trace_.rounds.push_back({static_cast<std::int64_t>(trace_.rounds.size()), req, out});
  return out;
}

Outcome ReplayOracle::run_round(const RoundRequest& req) {
  if (next_ >= trace_.rounds.size()) {
    throw ReplayMismatch(static_cast<std::int64_t>(next_), "trace exhausted");
  }
  const TraceRound& rec = trace_.rounds[next_];
  if (!(req == rec.request)) {
    throw ReplayMismatch(rec.index, "request differs from recorded sequence");
  }
  Outcome out = inner_.run_round(req);
  if (!(out == rec.outcome)) {
    throw ReplayMismatch(rec.index, "outcome differs from recording");
  }
  ++next_;
  return out;
}

void replay(Oracle& oracle, const Trace& trace) {
  for (const TraceRound& rec : trace.rounds) {
    const Outcome out = oracle.run_round(rec.request);
    if (!(out == rec.outcome)) {
      throw ReplayMismatch(rec.index, "outcome differs from recording");
    }
  }
}

}  // namespace bidrec
