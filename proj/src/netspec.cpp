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

#include "digits/netspec.hpp"

#include <map>
#include <sstream>

#include "digits/errors.hpp"

namespace digits {

namespace {

constexpr std::int64_t kTdnnfTimeTaps = 2;
constexpr int kNominalTargets = 512;  // toolkit default, not a tuned value

std::optional<LayerKind> layer_kind_from_name(std::string_view name) {
  static const std::map<std::string_view, LayerKind> kinds = {
      {"affine_lda", LayerKind::kAffineLda},
      {"dense_relu_bn_dropout", LayerKind::kDenseReluBnDropout},
      {"tdnnf", LayerKind::kTdnnf},
      {"linear", LayerKind::kLinear},
      {"prefinal", LayerKind::kPrefinal},
      {"output_chain", LayerKind::kOutputChain},
      {"output_xent", LayerKind::kOutputXent},
  };
  auto it = kinds.find(name);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

std::vector<LayerSpec> make_branch(int trunk_dim, LayerKind output_kind) {
  return {
      {LayerKind::kPrefinal, trunk_dim, 256, {}, {}},
      {output_kind, 256, kNominalTargets, {}, {}},
  };
}

void emit_layers(std::ostringstream& out, const std::vector<LayerSpec>& layers) {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& l = layers[i];
    out << "layer " << i << " kind=" << layer_kind_name(l.kind)
        << " in=" << l.in_dim << " out=" << l.out_dim;
    if (l.bottleneck) out << " bottleneck=" << *l.bottleneck;
    if (l.time_stride) out << " stride=" << *l.time_stride;
    out << '\n';
  }
}

int parse_int(std::string_view value, const std::string& line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(std::string(value), &used);
    if (used != value.size()) throw std::invalid_argument(std::string(value));
    return v;
  } catch (const std::exception&) {
    throw BadConfig("bad integer in config line \"" + line + "\"");
  }
}

}  // namespace

std::string_view layer_kind_name(LayerKind kind) {
  switch (kind) {
    case LayerKind::kAffineLda:
      return "affine_lda";
    case LayerKind::kDenseReluBnDropout:
      return "dense_relu_bn_dropout";
    case LayerKind::kTdnnf:
      return "tdnnf";
    case LayerKind::kLinear:
      return "linear";
    case LayerKind::kPrefinal:
      return "prefinal";
    case LayerKind::kOutputChain:
      return "output_chain";
    case LayerKind::kOutputXent:
      return "output_xent";
  }
  return "unknown";
}

NetworkSpec build_network(std::string_view name) {
  int tdnnf_layers = 0, dim = 0;
  if (name == "dense") {
    tdnnf_layers = 13;
    dim = 1536;
  } else if (name == "light") {
    tdnnf_layers = 4;
    dim = 1024;
  } else {
    throw UnknownName("no network named \"" + std::string(name) +
                      "\"; expected dense or light");
  }

  NetworkSpec spec;
  spec.name = name;
  const int spliced = spec.raw_dim * 3 + spec.ivector_dim;  // +-1 frame splice
  spec.trunk.push_back({LayerKind::kAffineLda, spliced, spliced, {}, {}});
  spec.trunk.push_back({LayerKind::kDenseReluBnDropout, spliced, dim, {}, {}});
  for (int i = 0; i < tdnnf_layers; ++i) {
    // Stride 1 for the first three layers, 3 afterwards.
    spec.trunk.push_back({LayerKind::kTdnnf, dim, dim, 160, i < 3 ? 1 : 3});
  }
  spec.trunk.push_back({LayerKind::kLinear, dim, dim, {}, {}});
  spec.chain_branch = make_branch(dim, LayerKind::kOutputChain);
  spec.xent_branch = make_branch(dim, LayerKind::kOutputXent);
  validate(spec);
  return spec;
}

std::int64_t param_count(const LayerSpec& layer) {
  const std::int64_t in = layer.in_dim, out = layer.out_dim;
  switch (layer.kind) {
    case LayerKind::kTdnnf: {
      const std::int64_t bn = layer.bottleneck.value_or(0);
      return kTdnnfTimeTaps * in * bn + bn * out + out + bn;
    }
    case LayerKind::kLinear:
      return in * out;
    default:
      return in * out + out;
  }
}

std::int64_t param_count(const NetworkSpec& spec) {
  std::int64_t total = 0;
  for (const LayerSpec& l : spec.trunk) total += param_count(l);
  for (const LayerSpec& l : spec.chain_branch) total += param_count(l);
  for (const LayerSpec& l : spec.xent_branch) total += param_count(l);
  return total;
}

std::string param_count_convention() {
  return "affine: in*out+out; linear: in*out; tdnnf: 2*in*bottleneck + "
         "bottleneck*out + out + bottleneck; batch-norm/dropout excluded";
}

std::string emit_config(const NetworkSpec& spec) {
  std::ostringstream out;
  out << "# micro digit-recognizer network descriptor\n";
  out << "# stride pattern, input splice, and target count are toolkit "
         "defaults, not measured settings\n";
  out << "network " << spec.name << '\n';
  out << "input ivector=" << spec.ivector_dim << " raw=" << spec.raw_dim
      << '\n';
  emit_layers(out, spec.trunk);
  out << "branch chain\n";
  emit_layers(out, spec.chain_branch);
  out << "branch xent\n";
  emit_layers(out, spec.xent_branch);
  return out.str();
}

NetworkSpec parse_config(std::string_view text) {
  NetworkSpec spec;
  spec.ivector_dim = 0;
  spec.raw_dim = 0;
  std::vector<LayerSpec>* section = &spec.trunk;
  bool saw_network = false;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    if (word == "network") {
      fields >> spec.name;
      if (spec.name.empty()) throw BadConfig("network line missing name");
      saw_network = true;
    } else if (word == "input") {
      std::string kv;
      while (fields >> kv) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
          throw BadConfig("bad input field \"" + kv + "\"");
        }
        std::string key = kv.substr(0, eq);
        int value = parse_int(kv.substr(eq + 1), line);
        if (key == "ivector") {
          spec.ivector_dim = value;
        } else if (key == "raw") {
          spec.raw_dim = value;
        } else {
          throw BadConfig("unknown input key \"" + key + "\"");
        }
      }
    } else if (word == "branch") {
      std::string branch;
      fields >> branch;
      if (branch == "chain") {
        section = &spec.chain_branch;
      } else if (branch == "xent") {
        section = &spec.xent_branch;
      } else {
        throw BadConfig("unknown branch \"" + branch + "\"");
      }
    } else if (word == "layer") {
      int idx = -1;
      fields >> idx;
      if (idx != static_cast<int>(section->size())) {
        throw BadConfig("layer index out of order in \"" + line + "\"");
      }
      LayerSpec layer{};
      bool saw_kind = false, saw_in = false, saw_out = false;
      std::string kv;
      while (fields >> kv) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
          throw BadConfig("bad layer field \"" + kv + "\"");
        }
        std::string key = kv.substr(0, eq);
        std::string value = kv.substr(eq + 1);
        if (key == "kind") {
          std::optional<LayerKind> kind = layer_kind_from_name(value);
          if (!kind) throw BadConfig("unknown layer kind \"" + value + "\"");
          layer.kind = *kind;
          saw_kind = true;
        } else if (key == "in") {
          layer.in_dim = parse_int(value, line);
          saw_in = true;
        } else if (key == "out") {
          layer.out_dim = parse_int(value, line);
          saw_out = true;
        } else if (key == "bottleneck") {
          layer.bottleneck = parse_int(value, line);
        } else if (key == "stride") {
          layer.time_stride = parse_int(value, line);
        } else {
          throw BadConfig("unknown layer key \"" + key + "\"");
        }
      }
      if (!saw_kind || !saw_in || !saw_out) {
        throw BadConfig("layer line missing kind/in/out: \"" + line + "\"");
      }
      section->push_back(layer);
    } else {
      throw BadConfig("unrecognized config line \"" + line + "\"");
    }
  }
  if (!saw_network) throw BadConfig("config missing network line");
  validate(spec);
  return spec;
}

void validate(const NetworkSpec& spec) {
  auto check_chain = [](const std::vector<LayerSpec>& layers,
                        const char* what) {
    for (std::size_t i = 0; i < layers.size(); ++i) {
      const LayerSpec& l = layers[i];
      if (l.in_dim <= 0 || l.out_dim <= 0) {
        throw BadConfig(std::string(what) + ": non-positive dimension");
      }
      if (l.kind == LayerKind::kTdnnf && !l.bottleneck) {
        throw BadConfig(std::string(what) + ": tdnnf layer without bottleneck");
      }
      if (i > 0 && layers[i - 1].out_dim != l.in_dim) {
        throw BadConfig(std::string(what) + ": dimension mismatch at layer " +
                        std::to_string(i));
      }
    }
  };
  check_chain(spec.trunk, "trunk");
  check_chain(spec.chain_branch, "chain branch");
  check_chain(spec.xent_branch, "xent branch");
  if (spec.chain_branch.empty() || spec.xent_branch.empty()) {
    throw BadConfig("both output branches must be present");
  }
  if (!spec.trunk.empty()) {
    const int trunk_out = spec.trunk.back().out_dim;
    if (spec.chain_branch.front().in_dim != trunk_out ||
        spec.xent_branch.front().in_dim != trunk_out) {
      throw BadConfig("branch input does not match trunk output");
    }
  }
}

}  // namespace digits
