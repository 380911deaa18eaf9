/*
 * Copyright 2026 The seqpose Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEQPOSE_ATTENTION_CONVLSTM_H_
#define SEQPOSE_ATTENTION_CONVLSTM_H_

#include <array>
#include <cstdint>
#include <vector>

#include "seqpose/attention/feature_tensor.h"

namespace seqpose {

enum ConvLstmGate { kInputGate = 0, kForgetGate, kOutputGate, kCandidate };
inline constexpr int kNumConvLstmGates = 4;

// Weights of a peephole-free ConvLSTM cell. Each gate g has
//   input_weights[g]  laid out [ky][kx][in_channel][hidden_channel]
//   hidden_weights[g] laid out [ky][kx][hidden_channel][hidden_channel]
//   biases[g]         one per hidden channel
struct ConvLstmParams {
  int kernel = 3;
  int in_channels = 0;
  int hidden_channels = 0;
  std::array<std::vector<double>, kNumConvLstmGates> input_weights;
  std::array<std::vector<double>, kNumConvLstmGates> hidden_weights;
  std::array<std::vector<double>, kNumConvLstmGates> biases;

  static ConvLstmParams Zero(int kernel, int in_channels, int hidden_channels);
  // Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) weights and zero biases drawn
  // from the seeded stream; bit-identical for a given seed.
  static ConvLstmParams Seeded(int kernel, int in_channels,
                               int hidden_channels, uint64_t seed);

  // Throws Error(kDimMismatch) on inconsistent array sizes or an even kernel.
  void Validate() const;

  double& input_weight(int gate, int ky, int kx, int ci, int co) {
    return input_weights[gate][InputIndex(ky, kx, ci, co)];
  }
  double& hidden_weight(int gate, int ky, int kx, int ci, int co) {
    return hidden_weights[gate][HiddenIndex(ky, kx, ci, co)];
  }
  size_t InputIndex(int ky, int kx, int ci, int co) const {
    return ((static_cast<size_t>(ky) * kernel + kx) * in_channels + ci) *
               hidden_channels + co;
  }
  size_t HiddenIndex(int ky, int kx, int ci, int co) const {
    return ((static_cast<size_t>(ky) * kernel + kx) * hidden_channels + ci) *
               hidden_channels + co;
  }
};

struct ConvLstmState {
  FeatureTensor hidden;
  FeatureTensor cell;

  static ConvLstmState Zero(int h, int w, int hidden_channels);
};

struct ConvLstmStepResult {
  ConvLstmState state;
  // Identical to state.hidden.
  FeatureTensor output;
};

// One recurrence step with same-padded convolutions:
//   i = sigma(Wxi * x + Whi * h + bi)    f = sigma(Wxf * x + Whf * h + bf)
//   o = sigma(Wxo * x + Who * h + bo)    g = tanh(Wxg * x + Whg * h + bg)
//   c' = f . c + i . g                   h' = o . tanh(c')
ConvLstmStepResult ConvLstmStep(const FeatureTensor& x,
                                const ConvLstmState& prev,
                                const ConvLstmParams& params);

}  // namespace seqpose

#endif  // SEQPOSE_ATTENTION_CONVLSTM_H_
