#pragma once

#include "frontiers/sim/world.hpp"

namespace frontiers::sim {

/// Synthetic benchmark worlds (meters; enclosed by walls; resolution
/// defaults to the 5 cm map resolution).

/// A single straight corridor, start at one end.
World corridor_world(double length = 20.0, double width = 4.0, double resolution = 0.05);

/// One open square room small enough for the first submap to see everything.
World single_room_world(double side = 7.0, double resolution = 0.05);

/// Two rooms joined by a one-cell doorway: passable for rays, never for the
/// inflated robot.
World two_room_pinhole_world(double resolution = 0.05);

/// Two corridor loops sharing a middle bar (a figure eight), about 40 x 25 m:
/// long runs that build drift plus revisits that close loops.
World two_loop_world(double resolution = 0.05);

/// A map shaped like the clustering failure case: a full-height one-cell
/// center wall splitting observed free space, unknown band along the top,
/// so the dense frontier hugs both sides of the wall symmetrically.
/// Returned grid has Unknown cells (it plays the fused map, not a
/// simulation truth).
OccupancyGrid wall_split_frontier_map();

}  // namespace frontiers::sim
