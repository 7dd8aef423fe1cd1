// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <map>

#include "doctest.h"
#include "qwalk/errors.hpp"
#include "qwalk/graphs.hpp"

using namespace qwalk;

namespace {

PortLabel L(std::uint32_t v, std::uint32_t p) { return {v, p}; }

// Exhaustive bijection check independent of validate_graph.
bool is_bijection(const PortedGraph& g) {
  std::vector<int> hits(g.label_count(), 0);
  for (std::size_t k = 0; k < g.label_count(); ++k) ++hits[g.flat_index(g.shift_pairing(g.label_at(k)))];
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

bool is_involution(const PortedGraph& g) {
  for (std::size_t k = 0; k < g.label_count(); ++k) {
    const auto l = g.label_at(k);
    if (!(g.shift_pairing(g.shift_pairing(l)) == l)) return false;
  }
  return true;
}

std::vector<PortedGraph> desk_scale_graphs() {
  std::vector<PortedGraph> gs;
  for (auto style : {ShiftStyle::DirectionPreserving, ShiftStyle::FlipFlop}) {
    for (int n : {2, 3, 5, 101}) {
      gs.push_back(build_line(n, Boundary::Periodic, style));
      gs.push_back(build_line(n, Boundary::Reflecting, style));
    }
    for (int w : {2, 3, 7, 20}) {
      gs.push_back(build_torus(w, w + 1, false, style));
      gs.push_back(build_torus(w, w, true, style));
    }
  }
  for (int w : {2, 4, 10, 42}) gs.push_back(build_hex_torus(w, w));
  gs.push_back(build_hex_torus(6, 4));
  for (int d : {3, 4, 5})
    for (int s = 1; s <= 5; ++s) gs.push_back(build_bethe({d, s}));
  return gs;
}

}  // namespace

TEST_CASE("line oracles") {
  const auto p = build_line(101, Boundary::Periodic);
  CHECK(p.kind() == GraphKind::Cycle);
  CHECK(p.shift_style() == ShiftStyle::DirectionPreserving);
  CHECK(p.shift_pairing(L(0, kLeft)) == L(100, kLeft));
  CHECK(p.shift_pairing(L(100, kRight)) == L(0, kRight));

  const auto five = build_line(5, Boundary::Periodic);
  for (std::uint32_t x = 0; x < 5; ++x) CHECK(five.shift_pairing(L(x, 0)) == L((x + 4) % 5, 0));

  // Direction-preserving reflection: the outward end port feeds the inward one.
  const auto r = build_line(101, Boundary::Reflecting);
  CHECK(r.kind() == GraphKind::LineReflecting);
  CHECK(r.shift_pairing(L(0, kLeft)) == L(0, kRight));
  CHECK(r.shift_pairing(L(100, kRight)) == L(100, kLeft));
  CHECK(r.boundary_vertices() == std::vector<std::uint32_t>{0, 100});
  CHECK(validate_graph(r).empty());

  // Flip-flop reflection self-pairs.
  const auto rf = build_line(101, Boundary::Reflecting, ShiftStyle::FlipFlop);
  CHECK(rf.shift_pairing(L(0, kLeft)) == L(0, kLeft));
  CHECK(rf.shift_pairing(L(5, kLeft)) == L(4, kRight));
  CHECK(rf.shift_pairing(L(5, kRight)) == L(6, kLeft));

  CHECK_THROWS_AS(build_line(1, Boundary::Periodic), InvariantError);
}

TEST_CASE("torus oracles") {
  const auto t = build_torus(20, 20, false, ShiftStyle::DirectionPreserving);
  CHECK(t.vertex_count() == 400);
  CHECK(t.distinct_degrees() == std::vector<std::uint32_t>{4});

  const auto d = build_torus(3, 3, true, ShiftStyle::DirectionPreserving);
  CHECK(d.distinct_degrees() == std::vector<std::uint32_t>{8});
  // (row 0, col 0) north-east -> (row 2, col 1) = vertex 7.
  CHECK(d.shift_pairing(L(0, kNorthEast)) == L(7, kNorthEast));

  const auto two = build_torus(2, 2, false, ShiftStyle::DirectionPreserving);
  for (std::uint32_t v = 0; v < 4; ++v) {
    const auto once = two.shift_pairing(L(v, kEast));
    CHECK(two.shift_pairing(once) == L(v, kEast));
  }

  const auto ff = build_torus(5, 4, true, ShiftStyle::FlipFlop);
  CHECK(ff.shift_pairing(L(0, kNorth)) == L(15, kSouth));
  CHECK(ff.shift_pairing(L(0, kSouthWest)) == L(9, kNorthEast));
  CHECK_THROWS_AS(build_torus(1, 5, false), InvariantError);
}

TEST_CASE("hex torus oracles") {
  const auto h = build_hex_torus(4, 4);
  CHECK(h.vertex_count() == 16);
  CHECK(h.label_count() == 48);
  CHECK(h.distinct_degrees() == std::vector<std::uint32_t>{3});
  CHECK(is_involution(h));
  // (0,0) is even: vertical goes north, wrapping to row 3.
  CHECK(h.shift_pairing(L(0, kHexVertical)) == L(12, kHexVertical));
  CHECK(h.shift_pairing(L(1, kHexVertical)) == L(5, kHexVertical));
  CHECK(build_hex_torus(42, 42).vertex_count() == 1764);
  CHECK_THROWS_AS(build_hex_torus(5, 4), InvariantError);
  CHECK_THROWS_AS(build_hex_torus(4, 3), InvariantError);
}

TEST_CASE("bethe oracles") {
  CHECK(bethe_shell_size(3, 1) == 3);
  CHECK(bethe_shell_size(3, 2) == 6);
  CHECK(bethe_shell_size(3, 3) == 12);
  CHECK(bethe_vertex_count({3, 3}) == 22);
  CHECK(bethe_vertex_count({4, 2}) == 17);

  const auto b = build_bethe({3, 3});
  CHECK(b.vertex_count() == 22);
  CHECK(validate_graph(b).empty());
  std::map<std::uint32_t, int> per_shell;
  int leaves = 0;
  for (std::uint32_t v = 0; v < b.vertex_count(); ++v) {
    ++per_shell[b.shells()[v]];
    if (b.degree(v) == 1) {
      ++leaves;
      CHECK(b.shells()[v] == 3);
    } else {
      CHECK(b.degree(v) == 3);
    }
  }
  CHECK(leaves == 12);
  CHECK(per_shell == std::map<std::uint32_t, int>{{0, 1}, {1, 3}, {2, 6}, {3, 12}});

  const auto b1 = build_bethe({3, 1});
  CHECK(b1.vertex_count() == 4);
  CHECK(b1.degree(0) == 3);
  for (std::uint32_t v = 1; v < 4; ++v) CHECK(b1.shift_pairing(L(v, 0)) == L(0, v - 1));

  // Explicit-tree oracle for (4, 2): count vertices by walking child ports.
  const auto b42 = build_bethe({4, 2});
  std::size_t seen = 1;
  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto v : frontier) {
      for (std::uint32_t p = v == 0 ? 0 : 1; p < b42.degree(v); ++p) {
        next.push_back(b42.shift_pairing(L(v, p)).vertex);
      }
    }
    seen += next.size();
    frontier = next;
  }
  CHECK(seen == 17);
  CHECK(b42.vertex_count() == 17);

  CHECK_THROWS_AS(build_bethe({2, 3}), InvariantError);
  CHECK_THROWS_AS(build_bethe({3, 0}), InvariantError);
}

TEST_CASE("edge counts") {
  for (int w : {3, 6, 11}) {
    const auto n = static_cast<std::size_t>(w * w);
    CHECK(build_torus(w, w, false).edge_count() == 2 * n);
    CHECK(build_torus(w, w, true).edge_count() == 4 * n);
  }
  CHECK(build_hex_torus(10, 8).edge_count() == 120);
  for (int s = 1; s <= 5; ++s) {
    const auto b = build_bethe({3, s});
    CHECK(b.edge_count() == b.vertex_count() - 1);
  }
}

TEST_CASE("builder invariants hold exhaustively at desk scale") {
  for (const auto& g : desk_scale_graphs()) {
    CAPTURE(to_string(g.kind()));
    CAPTURE(g.vertex_count());
    CHECK(g.label_count() <= 100000);
    CHECK(validate_graph(g).empty());
    CHECK(is_bijection(g));
    if (g.shift_style() == ShiftStyle::FlipFlop) CHECK(is_involution(g));
    if (g.shift_style() == ShiftStyle::DirectionPreserving) {
      for (std::size_t k = 0; k < g.label_count(); ++k) {
        const auto l = g.label_at(k);
        const auto t = g.shift_pairing(l);
        const bool end = t.vertex == l.vertex;  // reflecting line end
        CHECK((t.port == l.port || end));
      }
    }
    CHECK_NOTHROW((void)g.permutation());
  }
}

TEST_CASE("validate_graph negative controls") {
  // Cycle of 3, flip-flop, with (1, 1) pointing at a label that does not exist.
  std::vector<PortLabel> t{{2, 1}, {1, 0}, {0, 1}, {7, 0}, {1, 1}, {0, 0}};
  const PortedGraph dangling(GraphKind::Custom, ShiftStyle::FlipFlop, {2, 2, 2}, t);
  const auto v = validate_graph(dangling);
  REQUIRE(v.size() == 1);
  CHECK(v[0].label == L(1, 1));
  CHECK(to_string(v[0]).find("(1, 1)") != std::string::npos);
  CHECK_THROWS_AS((void)dangling.permutation(), InvariantError);

  // Bijective but not an involution, declared flip-flop.
  const PortedGraph rot(GraphKind::Custom, ShiftStyle::FlipFlop, {1, 1, 1}, {{1, 0}, {2, 0}, {0, 0}});
  CHECK(validate_graph(rot).size() == 3);

  // Direction-preserving that swaps ports between vertices.
  const PortedGraph swap(GraphKind::Custom, ShiftStyle::DirectionPreserving, {2, 2},
                         {{1, 1}, {1, 0}, {0, 1}, {0, 0}});
  CHECK_FALSE(validate_graph(swap).empty());

  // Collision: two labels map to the same place.
  const PortedGraph clash(GraphKind::Custom, ShiftStyle::FlipFlop, {1, 1}, {{0, 0}, {0, 0}});
  CHECK_FALSE(validate_graph(clash).empty());
}

TEST_CASE("flat indexing") {
  const auto b = build_bethe({3, 2});
  for (std::size_t k = 0; k < b.label_count(); ++k) CHECK(b.flat_index(b.label_at(k)) == k);
  CHECK_THROWS_AS((void)b.flat_index(L(5, 2)), std::out_of_range);
}

TEST_CASE("graph spec json") {
  auto parse = [](const char* s) { return nlohmann::json::parse(s).get<GraphSpec>(); };
  const auto t = parse(R"({"kind": "torus", "width": 20, "height": 20})");
  CHECK(t.kind == GraphKind::Torus);
  CHECK(t.effective_shift() == ShiftStyle::FlipFlop);
  CHECK(parse(R"({"kind": "torus", "width": 5, "diagonals": true})").kind == GraphKind::TorusDiagonal);
  const auto line = parse(R"({"kind": "line", "n": 101, "boundary": "periodic", "shift": "direction_preserving"})");
  CHECK(line.kind == GraphKind::Cycle);
  CHECK(line.effective_shift() == ShiftStyle::DirectionPreserving);
  CHECK(build_graph(line).shift_pairing(L(0, 0)) == L(100, 0));
  const auto b = parse(R"({"kind": "bethe", "base_degree": 3, "shells": 3})");
  CHECK(build_graph(b).vertex_count() == 22);
  CHECK(nlohmann::json(b).get<GraphSpec>().shells == 3);

  CHECK_THROWS_AS(parse(R"({"kind": "moebius", "n": 3})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"kind": "line"})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"kind": "line", "n": 5, "boundary": "sticky"})"), ConfigError);
  CHECK_THROWS_AS(build_graph(parse(R"({"kind": "hex_torus", "width": 4, "shift": "direction_preserving"})")),
                  ConfigError);
  try {
    parse(R"({"kind": "torus", "width": "wide"})");
    FAIL("expected throw");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("width", 0) == 0);
  }
}
