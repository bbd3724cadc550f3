#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "faultdom/graph.hpp"

namespace faultdom {

enum class Family { Cycle, Path, Complete, Petersen, LadderSegment, Tree3Ball };

/// Named finite graph families.
///
///   cycle n (n >= 3), path n (n >= 1), complete n (n >= 1), petersen,
///   ladder_segment len (P_len x P_2, len >= 2), tree3_ball r (r >= 0).
///
/// Petersen: outer 5-cycle 0..4, inner pentagram i+5 ~ ((i+2) mod 5)+5,
/// spokes i ~ i+5; labels v1..v10. tree3_ball(r) is the radius-r ball of the
/// infinite 3-regular tree around a root of degree 3, numbered in BFS order.
Graph make_family(Family family, std::size_t param = 0);

/// Parses "cycle:5", "petersen", "tree3_ball:2", "torus:SQ:6:6", ...
/// Throws InputError on an unknown name or bad parameter.
Graph make_family(std::string_view spec);

/// Depth of every vertex in a tree3_ball (BFS layer of the root).
std::vector<std::size_t> tree3_depths(std::size_t radius);

enum class LatticeKind { SQ, TRI, HEX, KING, LADDER };

std::string_view lattice_name(LatticeKind kind);
/// Accepts SQ, TRI, HEX, KING (or K), LADDER; case-insensitive.
LatticeKind parse_lattice(std::string_view name);
/// Vertex degree of the infinite lattice.
std::size_t lattice_degree(LatticeKind kind);

/// Torus quotient of an infinite lattice; vertex (r, c) has index r*cols + c
/// and label "r,c".
///
/// Embeddings, all on the integer grid:
///   SQ     4-neighbour grid.
///   KING   8-neighbour grid.
///   TRI    SQ plus the diagonal (r,c)-(r+1,c+1).
///   HEX    brick wall: SQ horizontal edges, and a vertical edge
///          (r,c)-(r+1,c) only where r+c is even. Both dimensions must be
///          even so the parity rule survives the wrap.
///   LADDER rows = 2, wrap only along columns (C_cols x P_2).
///
/// Minimum size is 5 per dimension (cols >= 6 for LADDER) so the radius-2
/// neighbourhood of every vertex embeds injectively; below that, the wrap can
/// create twins that do not exist in the infinite lattice.
Graph make_torus(LatticeKind kind, std::size_t rows, std::size_t cols);

/// Same adjacency rule without wrap-around (a finite window of the lattice).
Graph make_window(LatticeKind kind, std::size_t rows, std::size_t cols);

}  // namespace faultdom
