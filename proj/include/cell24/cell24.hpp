#pragma once

// Combinatorics of the right-angled ideal 24-cell: its 24 sides, 24 ideal
// vertices, side/vertex incidence, the 96 ridges, and the horosphere cube
// frame at each ideal vertex.  Everything here is exact and table-driven;
// there are no coordinates and no floating point.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "cell24/labels.hpp"

namespace cell24 {

// Sides and vertices are indexed 0..23 in lexicographic label order with
// + < - < 0, so indices are stable across runs.
struct Side {
  uint8_t id = 0;
  bool operator==(const Side&) const = default;
  bool operator<(const Side& o) const { return id < o.id; }
};

struct Vertex {
  uint8_t id = 0;
  bool operator==(const Vertex&) const = default;
  bool operator<(const Vertex& o) const { return id < o.id; }
};

inline constexpr int kNumSides = 24;
inline constexpr int kNumVertices = 24;
inline constexpr int kNumRidges = 96;

const std::array<SignLabel4, kNumSides>& side_labels();
const std::array<SignLabel4, kNumVertices>& vertex_labels();

Side side_from_label(const SignLabel4& l);
Vertex vertex_from_label(const SignLabel4& l);
inline const SignLabel4& label(Side s) { return side_labels()[s.id]; }
inline const SignLabel4& label(Vertex v) { return vertex_labels()[v.id]; }

inline Side act(KElem k, Side s) { return side_from_label(k.act(label(s))); }
inline Vertex act(KElem k, Vertex v) { return vertex_from_label(k.act(label(v))); }

// A vertex label has one nonzero entry (unit type) or four (half type).
bool is_half_vertex(Vertex v);

// The two nonzero positions of a side label, ascending.
std::pair<int, int> side_positions(Side s);

// Sides intersect in H^4 iff their labels have an equal nonzero entry in one
// position and their remaining nonzero entries occupy different positions.
bool sides_intersect(Side s1, Side s2);

// Sides that meet only at the sphere at infinity.  Not used by the pipeline;
// kept as a documented predicate for tests.
bool sides_touch_at_infinity(Side s1, Side s2);

bool vertex_on_side(Vertex v, Side s);

std::vector<Vertex> vertices_of_side(Side s);
std::vector<Side> sides_of_vertex(Vertex v);

// A ridge is an unordered pair of intersecting sides, stored with the
// smaller index first.
struct Ridge {
  Side a, b;
  bool operator==(const Ridge&) const = default;
  bool operator<(const Ridge& o) const {
    return a.id != o.a.id ? a.id < o.a.id : b.id < o.b.id;
  }
};

const std::vector<Ridge>& ridges();

// The horosphere cross-section at an ideal vertex is a cube.  A frame fixes,
// for each of its three axes, which pair of opposite faces it crosses and
// which face counts as the positive direction.
//
// Unit-type vertex with nonzero position p: the axes are the three ambient
// coordinate directions q != p in ascending order, and the positive face is
// the one with entry + at position q.  Half-type vertices get the frame of
// v_{++++} (axes {S_{++00},S_{00++}}, {S_{+0+0},S_{0+0+}}, {S_{0++0},S_{+00+}},
// positive face first) transported by the K element taking v_{++++} to v.
struct CubeFrame {
  struct Axis {
    Side pos, neg;
    int ambient = -1;  // ambient coordinate index for unit-type axes
  };
  Vertex vertex;
  bool half = false;
  std::array<Axis, 3> axes;
};

CubeFrame cube_frame(Vertex v);

}  // namespace cell24
