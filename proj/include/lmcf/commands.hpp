#pragma once

// The five front-door commands. Each writes its files under `out` and returns the report it wrote.

#include <utility>
#include <vector>

#include "lmcf/io.hpp"

namespace lmcf {

Json cmd_soliton(const RunConfig& rc, const fs::path& out);
Json cmd_flow(const RunConfig& rc, const fs::path& out);
Json cmd_blowup(const RunConfig& rc, const fs::path& out);
Json cmd_symmetry(const RunConfig& rc, const fs::path& out);
Json cmd_atlas(const RunConfig& rc, const fs::path& out);

/// Coprime (p, q) with q <= q_max and p/q in (1/(2n), 1/sqrt(2n)), ordered by (q, p).
std::vector<std::pair<int, int>> atlas_pairs(int n, int q_max);

/// Initial curve of a flow run, and the boundary treatment it implies when none is configured.
PlanarCurve flow_initial_curve(const FlowSection& section);
Boundary default_boundary(const FlowSection& section);

/// Indices of at most `budget` snapshots: first, last, and a mix of uniform and log-spaced times
/// approaching the final time.
std::vector<std::size_t> choose_snapshots(const FlowTrajectory& traj, int budget);

/// Writes summary.csv, snapshots/ and trajectory.json; load_trajectory reads them back.
void save_trajectory(const FlowTrajectory& traj, const fs::path& dir, int budget, const Json& extra = {});
FlowTrajectory load_trajectory(const fs::path& dir, Json* meta = nullptr);

}  // namespace lmcf
