// Copyright 2026 The digits-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace digits {

// Declarative descriptors of the two acoustic-model topologies. These are
// configs and size estimates only; no training or inference happens here.

enum class LayerKind {
  kAffineLda,
  kDenseReluBnDropout,
  kTdnnf,
  kLinear,
  kPrefinal,
  kOutputChain,
  kOutputXent,
};

struct LayerSpec {
  LayerKind kind;
  int in_dim = 0;
  int out_dim = 0;
  std::optional<int> bottleneck;   // required for tdnnf
  std::optional<int> time_stride;  // tdnnf only

  bool operator==(const LayerSpec&) const = default;
};

struct NetworkSpec {
  std::string name;  // "dense" or "light"
  int ivector_dim = 100;
  int raw_dim = 40;
  std::vector<LayerSpec> trunk;
  std::vector<LayerSpec> chain_branch;
  std::vector<LayerSpec> xent_branch;

  bool operator==(const NetworkSpec&) const = default;
};

// Builds the "dense" (13 tdnnf layers at 1536, bottleneck 160) or "light"
// (4 tdnnf layers at 1024) descriptor. Throws UnknownName otherwise.
NetworkSpec build_network(std::string_view name);

// Deterministic size estimate. Convention: affine-like layers count
// in*out + out; linear counts in*out; a tdnnf layer counts
// taps*in*bottleneck + bottleneck*out + out + bottleneck with 2 time taps
// on the factorized half. Batch-norm and dropout parameters are excluded.
std::int64_t param_count(const NetworkSpec& spec);
std::int64_t param_count(const LayerSpec& layer);

// The counting convention above, one line, suitable for report output.
std::string param_count_convention();

// Line-oriented config. emit/parse round-trip exactly:
// parse_config(emit_config(s)) == s and re-emission is byte-identical.
std::string emit_config(const NetworkSpec& spec);
NetworkSpec parse_config(std::string_view text);

// Structural checks: chained dims, tdnnf bottlenecks present, both output
// branches present. Throws BadConfig on violation.
void validate(const NetworkSpec& spec);

std::string_view layer_kind_name(LayerKind kind);

}  // namespace digits
