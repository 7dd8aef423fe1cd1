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
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/graphs.hpp"
#include "qwalk/kernels.hpp"

namespace qwalk {

// Amplitudes over the (vertex, port) labels of one graph, flattened the same
// way as PortedGraph.
class WalkState {
 public:
  explicit WalkState(std::shared_ptr<const PortedGraph> graph);
  WalkState(std::shared_ptr<const PortedGraph> graph, std::vector<Amplitude> amplitudes);

  static WalkState basis(std::shared_ptr<const PortedGraph> graph, PortLabel label);

  const PortedGraph& graph() const { return *graph_; }
  const std::shared_ptr<const PortedGraph>& graph_ptr() const { return graph_; }

  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  std::vector<Amplitude>& buffer() { return amps_; }

  Amplitude amplitude(PortLabel label) const { return amps_[graph_->flat_index(label)]; }
  void set_amplitude(PortLabel label, Amplitude a) { amps_[graph_->flat_index(label)] = a; }

  double norm() const;

 private:
  std::shared_ptr<const PortedGraph> graph_;
  std::vector<Amplitude> amps_;
};

// Default coin per degree plus per-vertex overrides (marked vertex, line ends).
class CoinAssignment {
 public:
  CoinAssignment() = default;

  // Realizes `spec` at every degree that occurs in `g`.
  static CoinAssignment uniform(const PortedGraph& g, const CoinSpec& spec);

  void set_default(CoinMatrix coin);
  void set_override(std::uint32_t vertex, CoinMatrix coin);

  const std::map<int, CoinMatrix>& defaults() const { return defaults_; }
  const std::map<std::uint32_t, CoinMatrix>& overrides() const { return overrides_; }

  // Throws InvariantError on a missing default or a dimension mismatch.
  const CoinMatrix& coin_for(const PortedGraph& g, std::uint32_t vertex) const;
  void validate(const PortedGraph& g) const;

 private:
  std::map<int, CoinMatrix> defaults_;
  std::map<std::uint32_t, CoinMatrix> overrides_;
};

// Compiled step: coin blocks grouped into runs of vertices sharing a coin, and
// the shift as a gather table. Immutable; share freely across threads.
class WalkOperator {
 public:
  WalkOperator(std::shared_ptr<const PortedGraph> graph, const CoinAssignment& coins,
               const kernels::KernelTable* table = nullptr);

  const PortedGraph& graph() const { return *graph_; }
  const kernels::KernelTable& kernel_table() const { return *table_; }

  void apply_coin(std::span<const Amplitude> in, std::span<Amplitude> out) const;
  void apply_shift(std::span<const Amplitude> in, std::span<Amplitude> out) const;

  // Shift after coin. `scratch` is resized as needed.
  void step(WalkState& state, std::vector<Amplitude>& scratch) const;
  // Exact inverse of step: inverse shift, then adjoint coins.
  void step_inverse(WalkState& state, std::vector<Amplitude>& scratch) const;

  // `observe(t, state)` runs before the first step (t = 0) and after each one.
  void evolve(WalkState& state, std::size_t steps,
              const std::function<void(std::size_t, const WalkState&)>& observe = {}) const;

 private:
  struct Block {
    std::size_t offset;  // first flat label
    std::size_t vertices;
    std::uint32_t degree;
    std::size_t coin;  // index into coins_
  };
  struct Prepared {
    bool structured;
    Amplitude alpha, beta;                 // structured
    std::vector<Amplitude> matrix;         // dense, row-major
    Amplitude adj_alpha, adj_beta;         // adjoint, structured
    std::vector<Amplitude> adj_matrix;     // adjoint, dense
  };

  void run_coin(const Amplitude* in, Amplitude* out, bool adjoint) const;

  std::shared_ptr<const PortedGraph> graph_;
  const kernels::KernelTable* table_;
  std::vector<Prepared> coins_;
  std::vector<Block> blocks_;
  std::vector<std::uint32_t> source_;   // shift: out[j] = in[source_[j]]
  std::vector<std::uint32_t> dest_;     // inverse shift: out[k] = in[dest_[k]]
};

WalkState apply_coin(const WalkState& state, const CoinAssignment& coins);
WalkState apply_shift(const WalkState& state);
WalkState step(const WalkState& state, const CoinAssignment& coins);
WalkState evolve(const WalkState& state, const CoinAssignment& coins, std::size_t t);
WalkState step_inverse(const WalkState& state, const CoinAssignment& coins);

double vertex_probability(const WalkState& state, std::uint32_t vertex);
std::vector<double> position_distribution(const WalkState& state);

}  // namespace qwalk
