// SPDX-License-Identifier: Apache-2.0
//
// sdchan - semi-deterministic cluster channel simulator for positioning
// Copyright (C) 2025-2026 sdchan contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SDCHAN_SIMULATION_HPP
#define SDCHAN_SIMULATION_HPP

#include <functional>
#include <optional>

#include "sdchan/cir_metrics.hpp"
#include "sdchan/positioning.hpp"
#include "sdchan/scenario.hpp"
#include "sdchan/sos_field.hpp"

namespace sdchan
{

/// Per-snapshot channel evolution for one TRP-UE link: random clusters are
/// generated once per track segment and drifted, semi-deterministic paths
/// are re-resolved every snapshot, overlapping segments are cross-faded.
class LinkSimulator
{
  public:
    LinkSimulator(const Scenario &scenario, std::size_t trp_index);

    /// Invokes the sink once per snapshot, in snapshot order.
    void run(const std::function<void(const SnapshotChannel &)> &sink);

    int trp_id() const { return trp_.id; }

  private:
    std::vector<ResolvedPath> make_segment_paths(std::size_t segment_index) const;

    const Scenario &scenario_;
    TrpConfig trp_;
    Track track_;
    std::vector<CorrelatedField> shadow_fields_; // one per random cluster
};

/// Convenience wrapper collecting all snapshots of one link.
std::vector<SnapshotChannel> simulate_link(const Scenario &scenario, std::size_t trp_index);

struct CirDumpRequest
{
    int trp_id{0};
    int snapshot{0};
};

struct RunOptions
{
    std::string out_dir;
    bool write_traces{true};
    bool write_positions{false};
    std::vector<CirDumpRequest> cir_dumps;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> only_trp_id; // restrict outputs to one link
};

struct RunResult
{
    std::vector<std::string> files;
    std::vector<PowerTrace> traces; // one per TRP, scenario order
    std::vector<FixRecord> fixes;   // filled when positions were computed
};

/// Simulates all links (in parallel, deterministically), writes the selected
/// outputs, and returns the traces for programmatic use. Identical scenario
/// and seed produce byte-identical files.
RunResult run_simulation(Scenario scenario, const RunOptions &options);

/// TOA trilateration over the per-link FAP delays of one snapshot row set.
std::vector<FixRecord> solve_positions(const Scenario &scenario,
                                       const std::vector<PowerTrace> &traces);

} // namespace sdchan

#endif
