#pragma once

#include <optional>
#include <random>
#include <vector>

#include "meander/diagram.hpp"

namespace meander {

// Reidemeister moves on signed Gauss codes. New crossings get the next free
// labels; removals relabel to keep 1..n. nullopt when the move does not apply.

// A kink on `edge`, visited over first or under first.
std::optional<Diagram> r1_add(const Diagram& d, int edge, bool over_first, int sign);
std::vector<Diagram> r1_removals(const Diagram& d);
// Pushes a strand along edge e1 over (or under) edge e2 across a common face.
std::optional<Diagram> r2_add(const Diagram& d, int e1, int e2, bool e1_over, bool same_order, int sign);
std::vector<Diagram> r2_removals(const Diagram& d);
// Every triangle face with a strand over (or under) both of its crossings.
std::vector<Diagram> r3_moves(const Diagram& d);

enum class MoveKind { r1_add, r1_remove, r2_add, r2_remove, r3 };
struct Move {
  MoveKind kind;
  Diagram result;
};
// One applicable move of a random kind.
std::optional<Move> random_move(const Diagram& d, std::mt19937_64& rng);

}  // namespace meander
