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

#include "qwalk/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

WalkState::WalkState(std::shared_ptr<const PortedGraph> graph)
    : graph_(std::move(graph)), amps_(graph_->label_count(), Amplitude(0.0)) {}

WalkState::WalkState(std::shared_ptr<const PortedGraph> graph, std::vector<Amplitude> amplitudes)
    : graph_(std::move(graph)), amps_(std::move(amplitudes)) {
  if (amps_.size() != graph_->label_count()) {
    throw InvariantError("state length " + std::to_string(amps_.size()) + " != label count " +
                         std::to_string(graph_->label_count()));
  }
}

WalkState WalkState::basis(std::shared_ptr<const PortedGraph> graph, PortLabel label) {
  WalkState s(std::move(graph));
  s.set_amplitude(label, 1.0);
  return s;
}

double WalkState::norm() const {
  return std::sqrt(kernels::active_kernels().norm_squared(amps_.data(), amps_.size()));
}

CoinAssignment CoinAssignment::uniform(const PortedGraph& g, const CoinSpec& spec) {
  CoinAssignment a;
  for (auto d : g.distinct_degrees()) a.set_default(realize_coin(spec.with_degree(static_cast<int>(d))));
  return a;
}

void CoinAssignment::set_default(CoinMatrix coin) {
  const int d = coin.dimension();
  defaults_.insert_or_assign(d, std::move(coin));
}

void CoinAssignment::set_override(std::uint32_t vertex, CoinMatrix coin) {
  overrides_.insert_or_assign(vertex, std::move(coin));
}

const CoinMatrix& CoinAssignment::coin_for(const PortedGraph& g, std::uint32_t vertex) const {
  const auto d = static_cast<int>(g.degree(vertex));
  if (auto it = overrides_.find(vertex); it != overrides_.end()) {
    if (it->second.dimension() != d) {
      throw InvariantError("coin override at vertex " + std::to_string(vertex) + " has dimension " +
                           std::to_string(it->second.dimension()) + ", vertex degree is " +
                           std::to_string(d));
    }
    return it->second;
  }
  auto it = defaults_.find(d);
  if (it == defaults_.end()) {
    throw InvariantError("no default coin for degree " + std::to_string(d));
  }
  return it->second;
}

void CoinAssignment::validate(const PortedGraph& g) const {
  for (auto d : g.distinct_degrees()) {
    if (!defaults_.count(static_cast<int>(d))) {
      throw InvariantError("no default coin for degree " + std::to_string(d));
    }
  }
  for (const auto& [v, m] : overrides_) {
    if (v >= g.vertex_count()) {
      throw InvariantError("coin override at vertex " + std::to_string(v) + " is out of range");
    }
    (void)coin_for(g, v);
  }
}

WalkOperator::WalkOperator(std::shared_ptr<const PortedGraph> graph, const CoinAssignment& coins,
                           const kernels::KernelTable* table)
    : graph_(std::move(graph)), table_(table ? table : &kernels::active_kernels()) {
  const PortedGraph& g = *graph_;
  coins.validate(g);

  std::map<const CoinMatrix*, std::size_t> index;
  auto prepare = [&](const CoinMatrix& m) {
    auto [it, fresh] = index.emplace(&m, coins_.size());
    if (!fresh) return it->second;
    Prepared p{};
    if (auto r = m.rank_one_form()) {
      p.structured = true;
      p.alpha = r->alpha;
      p.beta = r->beta;
      // J is real symmetric, so (aJ + bI)^dagger = conj(a) J + conj(b) I.
      p.adj_alpha = std::conj(r->alpha);
      p.adj_beta = std::conj(r->beta);
    } else {
      p.structured = false;
      p.matrix.assign(m.entries().begin(), m.entries().end());
      const CoinMatrix adj = m.adjoint();
      p.adj_matrix.assign(adj.entries().begin(), adj.entries().end());
    }
    coins_.push_back(std::move(p));
    return it->second;
  };

  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t c = prepare(coins.coin_for(g, v));
    const std::uint32_t d = g.degree(v);
    if (!blocks_.empty() && blocks_.back().coin == c && blocks_.back().degree == d) {
      ++blocks_.back().vertices;
    } else {
      blocks_.push_back({g.offset(v), 1, d, c});
    }
  }

  dest_ = g.permutation();
  source_.resize(dest_.size());
  for (std::size_t k = 0; k < dest_.size(); ++k) source_[dest_[k]] = static_cast<std::uint32_t>(k);
}

void WalkOperator::run_coin(const Amplitude* in, Amplitude* out, bool adjoint) const {
  for (const Block& b : blocks_) {
    const Prepared& p = coins_[b.coin];
    if (p.structured) {
      table_->structured_coin(in + b.offset, out + b.offset, b.vertices, b.degree,
                              adjoint ? p.adj_alpha : p.alpha, adjoint ? p.adj_beta : p.beta);
    } else {
      table_->dense_coin(in + b.offset, out + b.offset, b.vertices, b.degree,
                         adjoint ? p.adj_matrix.data() : p.matrix.data());
    }
  }
}

void WalkOperator::apply_coin(std::span<const Amplitude> in, std::span<Amplitude> out) const {
  if (in.size() != source_.size() || out.size() != source_.size()) {
    throw InvariantError("apply_coin: buffer length does not match the graph");
  }
  run_coin(in.data(), out.data(), false);
}

void WalkOperator::apply_shift(std::span<const Amplitude> in, std::span<Amplitude> out) const {
  if (in.size() != source_.size() || out.size() != source_.size()) {
    throw InvariantError("apply_shift: buffer length does not match the graph");
  }
  table_->gather(in.data(), out.data(), source_.data(), source_.size());
}

void WalkOperator::step(WalkState& state, std::vector<Amplitude>& scratch) const {
  auto& amps = state.buffer();
  scratch.resize(amps.size());
  run_coin(amps.data(), scratch.data(), false);
  table_->gather(scratch.data(), amps.data(), source_.data(), source_.size());
}

void WalkOperator::step_inverse(WalkState& state, std::vector<Amplitude>& scratch) const {
  auto& amps = state.buffer();
  scratch.resize(amps.size());
  table_->gather(amps.data(), scratch.data(), dest_.data(), dest_.size());
  run_coin(scratch.data(), amps.data(), true);
}

void WalkOperator::evolve(WalkState& state, std::size_t steps,
                          const std::function<void(std::size_t, const WalkState&)>& observe) const {
  if (&state.graph() != graph_.get()) {
    throw InvariantError("evolve: state belongs to a different graph");
  }
  std::vector<Amplitude> scratch;
  if (observe) observe(0, state);
  for (std::size_t t = 1; t <= steps; ++t) {
    step(state, scratch);
    if (observe) observe(t, state);
  }
}

WalkState apply_coin(const WalkState& state, const CoinAssignment& coins) {
  const WalkOperator op(state.graph_ptr(), coins);
  WalkState out(state.graph_ptr());
  op.apply_coin(state.amplitudes(), out.amplitudes());
  return out;
}

WalkState apply_shift(const WalkState& state) {
  const auto dest = state.graph().permutation();
  WalkState out(state.graph_ptr());
  auto in = state.amplitudes();
  auto o = out.amplitudes();
  for (std::size_t k = 0; k < dest.size(); ++k) o[dest[k]] = in[k];
  return out;
}

WalkState step(const WalkState& state, const CoinAssignment& coins) {
  return evolve(state, coins, 1);
}

WalkState evolve(const WalkState& state, const CoinAssignment& coins, std::size_t t) {
  const WalkOperator op(state.graph_ptr(), coins);
  WalkState out = state;
  op.evolve(out, t);
  return out;
}

WalkState step_inverse(const WalkState& state, const CoinAssignment& coins) {
  const WalkOperator op(state.graph_ptr(), coins);
  WalkState out = state;
  std::vector<Amplitude> scratch;
  op.step_inverse(out, scratch);
  return out;
}

double vertex_probability(const WalkState& state, std::uint32_t vertex) {
  const PortedGraph& g = state.graph();
  if (vertex >= g.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(vertex) + " out of range");
  }
  const auto amps = state.amplitudes();
  double p = 0.0;
  for (std::size_t k = g.offset(vertex), e = k + g.degree(vertex); k < e; ++k) p += std::norm(amps[k]);
  return p;
}

std::vector<double> position_distribution(const WalkState& state) {
  const PortedGraph& g = state.graph();
  std::vector<double> dist(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) dist[v] = vertex_probability(state, v);
  return dist;
}

}  // namespace qwalk
