#include "cell24/cell24.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cell24 {

namespace {

std::array<SignLabel4, 24> make_side_labels() {
  std::vector<SignLabel4> all;
  int8_t vals[3] = {1, -1, 0};
  for (int8_t a : vals)
    for (int8_t b : vals)
      for (int8_t c : vals)
        for (int8_t d : vals) {
          SignLabel4 l(a, b, c, d);
          if (l.nonzero_count() == 2) all.push_back(l);
        }
  std::sort(all.begin(), all.end());
  std::array<SignLabel4, 24> out;
  std::copy(all.begin(), all.end(), out.begin());
  return out;
}

std::array<SignLabel4, 24> make_vertex_labels() {
  std::vector<SignLabel4> all;
  int8_t vals[3] = {1, -1, 0};
  for (int8_t a : vals)
    for (int8_t b : vals)
      for (int8_t c : vals)
        for (int8_t d : vals) {
          SignLabel4 l(a, b, c, d);
          int n = l.nonzero_count();
          if (n == 1 || n == 4) all.push_back(l);
        }
  std::sort(all.begin(), all.end());
  std::array<SignLabel4, 24> out;
  std::copy(all.begin(), all.end(), out.begin());
  return out;
}

}  // namespace

const std::array<SignLabel4, kNumSides>& side_labels() {
  static const auto tab = make_side_labels();
  return tab;
}

const std::array<SignLabel4, kNumVertices>& vertex_labels() {
  static const auto tab = make_vertex_labels();
  return tab;
}

Side side_from_label(const SignLabel4& l) {
  static const std::map<SignLabel4, uint8_t> idx = [] {
    std::map<SignLabel4, uint8_t> m;
    for (uint8_t i = 0; i < kNumSides; ++i) m[side_labels()[i]] = i;
    return m;
  }();
  auto it = idx.find(l);
  if (it == idx.end()) throw std::invalid_argument("not a side label: " + l.str());
  return Side{it->second};
}

Vertex vertex_from_label(const SignLabel4& l) {
  static const std::map<SignLabel4, uint8_t> idx = [] {
    std::map<SignLabel4, uint8_t> m;
    for (uint8_t i = 0; i < kNumVertices; ++i) m[vertex_labels()[i]] = i;
    return m;
  }();
  auto it = idx.find(l);
  if (it == idx.end()) throw std::invalid_argument("not a vertex label: " + l.str());
  return Vertex{it->second};
}

bool is_half_vertex(Vertex v) { return label(v).nonzero_count() == 4; }

std::pair<int, int> side_positions(Side s) {
  const SignLabel4& l = label(s);
  int p = -1, q = -1;
  for (int i = 0; i < 4; ++i)
    if (l[i] != 0) (p < 0 ? p : q) = i;
  return {p, q};
}

bool sides_intersect(Side s1, Side s2) {
  const SignLabel4 &a = label(s1), &b = label(s2);
  int equal_nonzero = 0, shared_positions = 0;
  for (int i = 0; i < 4; ++i) {
    if (a[i] != 0 && b[i] != 0) {
      ++shared_positions;
      if (a[i] == b[i]) ++equal_nonzero;
    }
  }
  return equal_nonzero == 1 && shared_positions == 1;
}

bool sides_touch_at_infinity(Side s1, Side s2) {
  const SignLabel4 &a = label(s1), &b = label(s2);
  int equal = 0, opposite = 0, shared = 0;
  for (int i = 0; i < 4; ++i) {
    if (a[i] != 0 && b[i] != 0) {
      ++shared;
      if (a[i] == b[i]) ++equal; else ++opposite;
    }
  }
  if (shared == 0) return true;  // complementary nonzero positions
  return shared == 2 && equal == 1 && opposite == 1;
}

bool vertex_on_side(Vertex v, Side s) {
  const SignLabel4 &vl = label(v), &sl = label(s);
  if (!is_half_vertex(v)) {
    for (int i = 0; i < 4; ++i)
      if (vl[i] != 0) return sl[i] == vl[i];
    return false;
  }
  for (int i = 0; i < 4; ++i)
    if (sl[i] != 0 && sl[i] != vl[i]) return false;
  return true;
}

std::vector<Vertex> vertices_of_side(Side s) {
  std::vector<Vertex> out;
  for (uint8_t i = 0; i < kNumVertices; ++i)
    if (vertex_on_side(Vertex{i}, s)) out.push_back(Vertex{i});
  return out;
}

std::vector<Side> sides_of_vertex(Vertex v) {
  std::vector<Side> out;
  for (uint8_t i = 0; i < kNumSides; ++i)
    if (vertex_on_side(v, Side{i})) out.push_back(Side{i});
  return out;
}

const std::vector<Ridge>& ridges() {
  static const std::vector<Ridge> tab = [] {
    std::vector<Ridge> out;
    for (uint8_t i = 0; i < kNumSides; ++i)
      for (uint8_t j = i + 1; j < kNumSides; ++j)
        if (sides_intersect(Side{i}, Side{j})) out.push_back(Ridge{Side{i}, Side{j}});
    return out;
  }();
  return tab;
}

CubeFrame cube_frame(Vertex v) {
  CubeFrame f;
  f.vertex = v;
  const SignLabel4& vl = label(v);
  if (!is_half_vertex(v)) {
    int p = 0;
    while (vl[p] == 0) ++p;
    int ai = 0;
    for (int q = 0; q < 4; ++q) {
      if (q == p) continue;
      SignLabel4 pos, neg;
      pos.s[p] = neg.s[p] = vl.s[p];
      pos.s[q] = 1;
      neg.s[q] = -1;
      f.axes[ai] = {side_from_label(pos), side_from_label(neg), q};
      ++ai;
    }
    return f;
  }
  f.half = true;
  // transport the v_{++++} frame by the K element sending v_{++++} to v
  uint8_t bits = 0;
  for (int i = 0; i < 4; ++i)
    if (vl[i] < 0) bits |= uint8_t(1) << i;
  KElem kv(bits);
  static const std::array<std::pair<SignLabel4, SignLabel4>, 3> base = {{
      {SignLabel4(1, 1, 0, 0), SignLabel4(0, 0, 1, 1)},
      {SignLabel4(1, 0, 1, 0), SignLabel4(0, 1, 0, 1)},
      {SignLabel4(0, 1, 1, 0), SignLabel4(1, 0, 0, 1)},
  }};
  for (int ai = 0; ai < 3; ++ai)
    f.axes[ai] = {side_from_label(kv.act(base[ai].first)),
                  side_from_label(kv.act(base[ai].second)), -1};
  return f;
}

}  // namespace cell24
