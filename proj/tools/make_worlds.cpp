// Emits the bundled synthetic worlds as PGM + JSON pairs, ready for
// `frontier_bench explore --world ...`.

#include <iostream>

#include "frontiers/sim/worlds.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "worlds";
  std::filesystem::create_directories(dir);
  using namespace frontiers::sim;
  save_world(corridor_world(), dir / "corridor.pgm");
  save_world(single_room_world(), dir / "room.pgm");
  save_world(two_room_pinhole_world(), dir / "pinhole.pgm");
  save_world(two_loop_world(), dir / "two_loop.pgm");
  std::cout << "wrote corridor, room, pinhole, two_loop under " << dir.string() << "\n";
  return 0;
}
