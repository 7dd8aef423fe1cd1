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

#include "qwalk/graphs.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <utility>

#include "json_fields.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

using u32 = std::uint32_t;

constexpr std::array<std::pair<int, int>, 8> kTorusMoves{{
    {-1, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 1}, {1, 1}, {1, -1}, {-1, -1},
}};

u32 reverse_torus_port(u32 p) { return p < 4 ? (p + 2) % 4 : 4 + (p - 4 + 2) % 4; }

int wrap(int x, int m) { return ((x % m) + m) % m; }

std::string label_str(PortLabel l) {
  return "(" + std::to_string(l.vertex) + ", " + std::to_string(l.port) + ")";
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::LineReflecting: return "line_reflecting";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Torus: return "torus";
    case GraphKind::TorusDiagonal: return "torus_diagonal";
    case GraphKind::HexTorus: return "hex_torus";
    case GraphKind::Bethe: return "bethe";
    case GraphKind::Custom: return "custom";
  }
  return "unknown";
}

std::string_view to_string(ShiftStyle style) {
  return style == ShiftStyle::FlipFlop ? "flip_flop" : "direction_preserving";
}

PortedGraph::PortedGraph(GraphKind kind, ShiftStyle style, std::vector<u32> degrees,
                         std::vector<PortLabel> targets, GraphMetadata metadata)
    : kind_(kind),
      style_(style),
      degrees_(std::move(degrees)),
      targets_(std::move(targets)),
      meta_(std::move(metadata)) {
  offsets_.resize(degrees_.size() + 1);
  offsets_[0] = 0;
  for (std::size_t v = 0; v < degrees_.size(); ++v) {
    if (degrees_[v] == 0) throw InvariantError("vertex " + std::to_string(v) + " has degree 0");
    offsets_[v + 1] = offsets_[v] + degrees_[v];
  }
  if (offsets_.back() != targets_.size()) {
    throw InvariantError("pairing table size does not match the sum of degrees");
  }
  offsets_.pop_back();
}

std::size_t PortedGraph::flat_index(PortLabel label) const {
  if (label.vertex >= degrees_.size() || label.port >= degrees_[label.vertex]) {
    throw std::out_of_range("label " + label_str(label) + " does not exist");
  }
  return offsets_[label.vertex] + label.port;
}

PortLabel PortedGraph::label_at(std::size_t flat) const {
  if (flat >= targets_.size()) throw std::out_of_range("flat label out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
  const auto v = static_cast<u32>(std::distance(offsets_.begin(), it) - 1);
  return {v, static_cast<u32>(flat - offsets_[v])};
}

PortLabel PortedGraph::shift_pairing(PortLabel label) const {
  return targets_[flat_index(label)];
}

std::vector<u32> PortedGraph::permutation() const {
  std::vector<u32> dest(targets_.size());
  std::vector<char> hit(targets_.size(), 0);
  for (std::size_t k = 0; k < targets_.size(); ++k) {
    const PortLabel t = targets_[k];
    if (t.vertex >= degrees_.size() || t.port >= degrees_[t.vertex]) {
      throw InvariantError("shift pairing has a dangling port at " + label_str(label_at(k)));
    }
    const std::size_t j = offsets_[t.vertex] + t.port;
    if (hit[j]) throw InvariantError("shift pairing is not a bijection at " + label_str(t));
    hit[j] = 1;
    dest[k] = static_cast<u32>(j);
  }
  return dest;
}

std::size_t PortedGraph::edge_count() const {
  std::size_t leaving = 0;
  for (std::size_t k = 0; k < targets_.size(); ++k) {
    if (targets_[k].vertex != label_at(k).vertex) ++leaving;
  }
  return leaving / 2;
}

std::vector<u32> PortedGraph::distinct_degrees() const {
  std::set<u32> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

std::size_t bethe_shell_size(int base_degree, int shell) {
  if (shell == 0) return 1;
  std::size_t n = static_cast<std::size_t>(base_degree);
  for (int s = 1; s < shell; ++s) n *= static_cast<std::size_t>(base_degree - 1);
  return n;
}

std::size_t bethe_vertex_count(const BetheSpec& spec) {
  std::size_t total = 1;
  for (int s = 1; s <= spec.shells; ++s) total += bethe_shell_size(spec.base_degree, s);
  return total;
}

PortedGraph build_line(int n, Boundary boundary, ShiftStyle style) {
  if (n < 2) throw InvariantError("line needs n >= 2, got " + std::to_string(n));
  const bool ff = style == ShiftStyle::FlipFlop;
  std::vector<PortLabel> targets(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < n; ++x) {
    const auto left = static_cast<u32>(wrap(x - 1, n));
    const auto right = static_cast<u32>(wrap(x + 1, n));
    targets[2 * x + kLeft] = {left, ff ? kRight : kLeft};
    targets[2 * x + kRight] = {right, ff ? kLeft : kRight};
  }
  GraphMetadata meta;
  meta.n = n;
  meta.boundary = boundary;
  GraphKind kind = GraphKind::Cycle;
  if (boundary == Boundary::Reflecting) {
    kind = GraphKind::LineReflecting;
    const auto last = static_cast<u32>(n - 1);
    // The outward port at each end is routed back into the same vertex.
    targets[kLeft] = {0, ff ? kLeft : kRight};
    targets[2 * (n - 1) + kRight] = {last, ff ? kRight : kLeft};
  }
  PortedGraph g(kind, style, std::vector<u32>(static_cast<std::size_t>(n), 2), std::move(targets),
                meta);
  if (boundary == Boundary::Reflecting) g.set_boundary_vertices({0, static_cast<u32>(n - 1)});
  return g;
}

PortedGraph build_torus(int width, int height, bool diagonals, ShiftStyle style) {
  if (width < 2 || height < 2) {
    throw InvariantError("torus needs width, height >= 2, got " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  const u32 d = diagonals ? 8 : 4;
  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<PortLabel> targets(n * d);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const std::size_t v = static_cast<std::size_t>(r) * width + c;
      for (u32 p = 0; p < d; ++p) {
        const auto [dr, dc] = kTorusMoves[p];
        const auto u = static_cast<u32>(wrap(r + dr, height) * width + wrap(c + dc, width));
        targets[v * d + p] = {u, style == ShiftStyle::FlipFlop ? reverse_torus_port(p) : p};
      }
    }
  }
  GraphMetadata meta;
  meta.width = width;
  meta.height = height;
  return PortedGraph(diagonals ? GraphKind::TorusDiagonal : GraphKind::Torus, style,
                     std::vector<u32>(n, d), std::move(targets), meta);
}

PortedGraph build_hex_torus(int width, int height) {
  if (width < 2 || height < 2 || width % 2 != 0 || height % 2 != 0) {
    throw InvariantError("hex torus needs even width and height >= 2, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<PortLabel> targets(n * 3);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const std::size_t v = static_cast<std::size_t>(r) * width + c;
      const int vr = (r + c) % 2 == 0 ? wrap(r - 1, height) : wrap(r + 1, height);
      targets[3 * v + kHexEast] = {static_cast<u32>(r * width + wrap(c + 1, width)), kHexWest};
      targets[3 * v + kHexWest] = {static_cast<u32>(r * width + wrap(c - 1, width)), kHexEast};
      targets[3 * v + kHexVertical] = {static_cast<u32>(vr * width + c), kHexVertical};
    }
  }
  GraphMetadata meta;
  meta.width = width;
  meta.height = height;
  return PortedGraph(GraphKind::HexTorus, ShiftStyle::FlipFlop, std::vector<u32>(n, 3),
                     std::move(targets), meta);
}

PortedGraph build_bethe(const BetheSpec& spec) {
  if (spec.base_degree < 3) throw InvariantError("bethe lattice needs base_degree >= 3");
  if (spec.shells < 1) throw InvariantError("bethe lattice needs shells >= 1");
  const u32 d = static_cast<u32>(spec.base_degree);
  const std::size_t total = bethe_vertex_count(spec);

  // Breadth-first from the centre: shell by shell, children in port order.
  std::vector<u32> degree(total);
  std::vector<u32> shell(total);
  std::vector<PortLabel> parent(total);  // (parent vertex, parent's port)
  degree[0] = d;
  std::size_t next = 1;
  std::size_t shell_begin = 0;
  std::size_t shell_end = 1;
  for (int s = 1; s <= spec.shells; ++s) {
    for (std::size_t v = shell_begin; v < shell_end; ++v) {
      const u32 first_child_port = v == 0 ? 0 : 1;
      for (u32 p = first_child_port; p < d; ++p) {
        degree[next] = s == spec.shells ? 1 : d;
        shell[next] = static_cast<u32>(s);
        parent[next] = {static_cast<u32>(v), p};
        ++next;
      }
    }
    shell_begin = shell_end;
    shell_end = next;
  }

  std::vector<std::size_t> offset(total);
  std::size_t labels = 0;
  for (std::size_t v = 0; v < total; ++v) {
    offset[v] = labels;
    labels += degree[v];
  }
  std::vector<PortLabel> targets(labels);
  for (std::size_t u = 1; u < total; ++u) {
    const PortLabel up = parent[u];
    targets[offset[u]] = up;
    targets[offset[up.vertex] + up.port] = {static_cast<u32>(u), 0};
  }
  GraphMetadata meta;
  meta.base_degree = spec.base_degree;
  meta.shells = spec.shells;
  PortedGraph g(GraphKind::Bethe, ShiftStyle::FlipFlop, std::move(degree), std::move(targets),
                meta);
  g.set_shells(std::move(shell));
  return g;
}

std::string to_string(const Violation& v) {
  return "label " + label_str(v.label) + ": " + v.message;
}

std::vector<Violation> validate_graph(const PortedGraph& g) {
  std::vector<Violation> out;
  const auto& targets = g.targets();
  const auto& degrees = g.degrees();
  const auto& offsets = g.offsets();
  auto exists = [&](PortLabel t) { return t.vertex < degrees.size() && t.port < degrees[t.vertex]; };

  std::vector<u32> preimages(targets.size(), 0);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const PortLabel t = targets[k];
    if (!exists(t)) {
      out.push_back({g.label_at(k), "maps to nonexistent label " + label_str(t)});
      continue;
    }
    ++preimages[offsets[t.vertex] + t.port];
  }
  for (std::size_t j = 0; j < preimages.size(); ++j) {
    if (preimages[j] > 1) {
      out.push_back({g.label_at(j), "is the image of " + std::to_string(preimages[j]) +
                                        " labels (pairing not injective)"});
    }
  }

  if (g.shift_style() == ShiftStyle::FlipFlop) {
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const PortLabel t = targets[k];
      if (!exists(t)) continue;
      const PortLabel back = targets[offsets[t.vertex] + t.port];
      if (!exists(back)) continue;  // already reported as dangling
      if (!(back == g.label_at(k))) {
        out.push_back({g.label_at(k), "flip-flop pairing is not an involution (returns to " +
                                          label_str(back) + ")"});
      }
    }
  } else {
    // Direction-preserving: port kept, except in-place reflections at boundary vertices.
    const auto& boundary = g.boundary_vertices();
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const PortLabel src = g.label_at(k);
      const PortLabel t = targets[k];
      if (!exists(t) || t.port == src.port) continue;
      const bool reflection = t.vertex == src.vertex &&
                              std::find(boundary.begin(), boundary.end(), src.vertex) != boundary.end();
      if (!reflection) {
        out.push_back({src, "direction-preserving pairing changes port to " + label_str(t)});
      }
    }
  }
  return out;
}

ShiftStyle GraphSpec::effective_shift() const { return shift.value_or(ShiftStyle::FlipFlop); }

PortedGraph build_graph(const GraphSpec& spec) {
  const ShiftStyle style = spec.effective_shift();
  switch (spec.kind) {
    case GraphKind::LineReflecting:
      return build_line(spec.n, Boundary::Reflecting, style);
    case GraphKind::Cycle:
      return build_line(spec.n, Boundary::Periodic, style);
    case GraphKind::Torus:
      return build_torus(spec.width, spec.height, false, style);
    case GraphKind::TorusDiagonal:
      return build_torus(spec.width, spec.height, true, style);
    case GraphKind::HexTorus:
      if (style != ShiftStyle::FlipFlop) throw ConfigError("shift: hex_torus supports flip_flop only");
      return build_hex_torus(spec.width, spec.height);
    case GraphKind::Bethe:
      if (style != ShiftStyle::FlipFlop) throw ConfigError("shift: bethe supports flip_flop only");
      return build_bethe({spec.base_degree, spec.shells});
    case GraphKind::Custom:
      break;
  }
  throw ConfigError("kind: custom graphs cannot be built from a spec");
}

std::string describe(const GraphSpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case GraphKind::LineReflecting:
    case GraphKind::Cycle:
      os << to_string(spec.kind) << " n=" << spec.n;
      break;
    case GraphKind::Torus:
    case GraphKind::TorusDiagonal:
    case GraphKind::HexTorus:
      os << to_string(spec.kind) << " " << spec.width << "x" << spec.height;
      break;
    case GraphKind::Bethe:
      os << "bethe d=" << spec.base_degree << " shells=" << spec.shells;
      break;
    case GraphKind::Custom:
      os << "custom";
      break;
  }
  return os.str();
}

void to_json(nlohmann::json& j, const GraphSpec& spec) {
  j = nlohmann::json::object();
  switch (spec.kind) {
    case GraphKind::LineReflecting:
    case GraphKind::Cycle:
      j["kind"] = "line";
      j["n"] = spec.n;
      j["boundary"] = spec.kind == GraphKind::Cycle ? "periodic" : "reflecting";
      break;
    case GraphKind::Torus:
    case GraphKind::TorusDiagonal:
      j["kind"] = "torus";
      j["width"] = spec.width;
      j["height"] = spec.height;
      j["diagonals"] = spec.kind == GraphKind::TorusDiagonal;
      break;
    case GraphKind::HexTorus:
      j["kind"] = "hex_torus";
      j["width"] = spec.width;
      j["height"] = spec.height;
      break;
    case GraphKind::Bethe:
      j["kind"] = "bethe";
      j["base_degree"] = spec.base_degree;
      j["shells"] = spec.shells;
      break;
    case GraphKind::Custom:
      j["kind"] = "custom";
      break;
  }
  if (spec.shift) j["shift"] = std::string(to_string(*spec.shift));
}

void from_json(const nlohmann::json& j, GraphSpec& spec) {
  using detail::optional;
  using detail::required;
  spec = GraphSpec{};
  const auto kind = required<std::string>(j, "kind");
  if (kind == "line" || kind == "cycle") {
    spec.n = required<int>(j, "n");
    const auto boundary = optional<std::string>(j, "boundary", kind == "cycle" ? "periodic" : "reflecting");
    if (boundary == "periodic") {
      spec.kind = GraphKind::Cycle;
      spec.boundary = Boundary::Periodic;
    } else if (boundary == "reflecting") {
      spec.kind = GraphKind::LineReflecting;
      spec.boundary = Boundary::Reflecting;
    } else {
      throw ConfigError("boundary: expected 'reflecting' or 'periodic', got '" + boundary + "'");
    }
  } else if (kind == "torus" || kind == "torus_diagonal" || kind == "hex_torus") {
    spec.width = required<int>(j, "width");
    spec.height = optional<int>(j, "height", spec.width);
    if (kind == "hex_torus") {
      spec.kind = GraphKind::HexTorus;
    } else {
      spec.diagonals = optional<bool>(j, "diagonals", kind == "torus_diagonal");
      spec.kind = spec.diagonals ? GraphKind::TorusDiagonal : GraphKind::Torus;
    }
  } else if (kind == "bethe") {
    spec.kind = GraphKind::Bethe;
    spec.base_degree = optional<int>(j, "base_degree", 3);
    spec.shells = required<int>(j, "shells");
  } else {
    throw ConfigError("kind: unknown graph kind '" + kind + "'");
  }
  if (j.contains("shift")) {
    const auto s = required<std::string>(j, "shift");
    if (s == "flip_flop") {
      spec.shift = ShiftStyle::FlipFlop;
    } else if (s == "direction_preserving") {
      spec.shift = ShiftStyle::DirectionPreserving;
    } else {
      throw ConfigError("shift: expected 'flip_flop' or 'direction_preserving', got '" + s + "'");
    }
  }
}

}  // namespace qwalk
