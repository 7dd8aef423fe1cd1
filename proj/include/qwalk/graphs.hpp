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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qwalk {

enum class GraphKind { LineReflecting, Cycle, Torus, TorusDiagonal, HexTorus, Bethe, Custom };
enum class ShiftStyle { DirectionPreserving, FlipFlop };
enum class Boundary { Reflecting, Periodic };

std::string_view to_string(GraphKind kind);
std::string_view to_string(ShiftStyle style);

// Torus port order. The first four are used by the degree-4 torus; the
// diagonal torus appends the last four. North is row - 1.
enum TorusPort : std::uint32_t { kNorth = 0, kEast, kSouth, kWest, kNorthEast, kSouthEast, kSouthWest, kNorthWest };
// Line ports: 0 steps to x - 1, 1 steps to x + 1.
enum LinePort : std::uint32_t { kLeft = 0, kRight = 1 };
// Hexagonal ports. kVertical is North when (row + col) is even, else South.
enum HexPort : std::uint32_t { kHexEast = 0, kHexWest = 1, kHexVertical = 2 };

struct PortLabel {
  std::uint32_t vertex = 0;
  std::uint32_t port = 0;
  friend bool operator==(const PortLabel&, const PortLabel&) = default;
};

struct GraphMetadata {
  int n = 0;  // line length
  int width = 0;
  int height = 0;
  int base_degree = 0;
  int shells = 0;
  std::optional<Boundary> boundary;
};

// Vertex set with ordered ports and the shift pairing on (vertex, port) labels.
// Labels are flattened vertex-major, port-minor. Immutable once built.
class PortedGraph {
 public:
  // `targets[k]` is the image of flat label k. No validation happens here; use
  // validate_graph (the builders below always produce valid graphs).
  PortedGraph(GraphKind kind, ShiftStyle style, std::vector<std::uint32_t> degrees,
              std::vector<PortLabel> targets, GraphMetadata metadata = {});

  GraphKind kind() const { return kind_; }
  ShiftStyle shift_style() const { return style_; }
  const GraphMetadata& metadata() const { return meta_; }

  std::size_t vertex_count() const { return degrees_.size(); }
  std::size_t label_count() const { return targets_.size(); }
  std::uint32_t degree(std::uint32_t v) const { return degrees_.at(v); }
  std::size_t offset(std::uint32_t v) const { return offsets_.at(v); }
  std::size_t flat_index(PortLabel label) const;
  PortLabel label_at(std::size_t flat) const;

  PortLabel shift_pairing(PortLabel label) const;
  const std::vector<PortLabel>& targets() const { return targets_; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  const std::vector<std::size_t>& offsets() const { return offsets_; }

  // Flat destination index per flat source label. Throws InvariantError when
  // the pairing is not a bijection on labels.
  std::vector<std::uint32_t> permutation() const;

  // Undirected edges: labels whose pairing leaves the vertex, halved.
  std::size_t edge_count() const;

  std::vector<std::uint32_t> distinct_degrees() const;

  // Bethe: shell index per vertex (0 = centre). Empty for other kinds.
  const std::vector<std::uint32_t>& shells() const { return shell_; }
  // Reflecting line: the two end vertices.
  const std::vector<std::uint32_t>& boundary_vertices() const { return boundary_; }

  void set_shells(std::vector<std::uint32_t> shells) { shell_ = std::move(shells); }
  void set_boundary_vertices(std::vector<std::uint32_t> b) { boundary_ = std::move(b); }

 private:
  GraphKind kind_;
  ShiftStyle style_;
  std::vector<std::uint32_t> degrees_;
  std::vector<std::size_t> offsets_;
  std::vector<PortLabel> targets_;
  GraphMetadata meta_;
  std::vector<std::uint32_t> shell_;
  std::vector<std::uint32_t> boundary_;
};

struct BetheSpec {
  int base_degree = 3;
  int shells = 1;
};

// Shell s >= 1 holds d (d-1)^(s-1) vertices.
std::size_t bethe_shell_size(int base_degree, int shell);
std::size_t bethe_vertex_count(const BetheSpec& spec);

PortedGraph build_line(int n, Boundary boundary,
                       ShiftStyle style = ShiftStyle::DirectionPreserving);
PortedGraph build_torus(int width, int height, bool diagonals,
                        ShiftStyle style = ShiftStyle::FlipFlop);
PortedGraph build_hex_torus(int width, int height);
PortedGraph build_bethe(const BetheSpec& spec);

struct Violation {
  PortLabel label;
  std::string message;
};
std::string to_string(const Violation& v);

// Empty iff the pairing is a bijection onto existing labels, an involution for
// flip-flop graphs, and port- and bijection-preserving per port for
// direction-preserving graphs.
std::vector<Violation> validate_graph(const PortedGraph& g);

// Serializable graph description. `shift` defaults to flip-flop for every kind:
// with a direction-preserving shift the Grover search on the torus never
// localizes. Direction-preserving remains available for lines and tori.
struct GraphSpec {
  GraphKind kind = GraphKind::Torus;
  int n = 0;
  Boundary boundary = Boundary::Reflecting;
  int width = 0;
  int height = 0;
  bool diagonals = false;
  int base_degree = 3;
  int shells = 1;
  std::optional<ShiftStyle> shift;

  ShiftStyle effective_shift() const;
};

PortedGraph build_graph(const GraphSpec& spec);
std::string describe(const GraphSpec& spec);

void to_json(nlohmann::json& j, const GraphSpec& spec);
void from_json(const nlohmann::json& j, GraphSpec& spec);

}  // namespace qwalk
