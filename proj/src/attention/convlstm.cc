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

#include "seqpose/attention/convlstm.h"

#include <cmath>

#include "seqpose/common/error.h"
#include "seqpose/common/rng.h"

namespace seqpose {
namespace {

double Sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

// Accumulates the same-padded cross-correlation of `in` with `weights`
// (layout [ky][kx][in_c][out_c]) into `out` (h*w*out_c, row-major).
void AccumulateConv(const FeatureTensor& in, const std::vector<double>& weights,
                    int kernel, int out_channels, std::vector<double>& out) {
  const int h = in.h();
  const int w = in.w();
  const int in_channels = in.c();
  const int r = kernel / 2;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double* dst = &out[(static_cast<size_t>(y) * w + x) * out_channels];
      for (int ky = 0; ky < kernel; ++ky) {
        const int sy = y + ky - r;
        if (sy < 0 || sy >= h) continue;
        for (int kx = 0; kx < kernel; ++kx) {
          const int sx = x + kx - r;
          if (sx < 0 || sx >= w) continue;
          for (int ci = 0; ci < in_channels; ++ci) {
            const double v = in.at(sy, sx, ci);
            if (v == 0.0) continue;
            const double* k =
                &weights[((static_cast<size_t>(ky) * kernel + kx) * in_channels +
                          ci) * out_channels];
            for (int co = 0; co < out_channels; ++co) dst[co] += v * k[co];
          }
        }
      }
    }
  }
}

}  // namespace

ConvLstmParams ConvLstmParams::Zero(int kernel, int in_channels,
                                    int hidden_channels) {
  ConvLstmParams p;
  p.kernel = kernel;
  p.in_channels = in_channels;
  p.hidden_channels = hidden_channels;
  if (kernel <= 0 || in_channels <= 0 || hidden_channels <= 0) {
    throw Error(ErrorCode::kDimMismatch, "ConvLSTM sizes must be positive");
  }
  const size_t k2 = static_cast<size_t>(kernel) * kernel;
  for (int g = 0; g < kNumConvLstmGates; ++g) {
    p.input_weights[g].assign(k2 * in_channels * hidden_channels, 0.0);
    p.hidden_weights[g].assign(k2 * hidden_channels * hidden_channels, 0.0);
    p.biases[g].assign(hidden_channels, 0.0);
  }
  p.Validate();
  return p;
}

ConvLstmParams ConvLstmParams::Seeded(int kernel, int in_channels,
                                      int hidden_channels, uint64_t seed) {
  ConvLstmParams p = Zero(kernel, in_channels, hidden_channels);
  Rng rng(seed);
  const double fan_in =
      static_cast<double>(kernel) * kernel * (in_channels + hidden_channels);
  const double bound = 1.0 / std::sqrt(fan_in);
  for (int g = 0; g < kNumConvLstmGates; ++g) {
    for (double& v : p.input_weights[g]) v = rng.Uniform(-bound, bound);
    for (double& v : p.hidden_weights[g]) v = rng.Uniform(-bound, bound);
  }
  return p;
}

void ConvLstmParams::Validate() const {
  if (kernel <= 0 || kernel % 2 == 0) {
    throw Error(ErrorCode::kDimMismatch,
                "ConvLSTM kernel must be odd and positive, got " +
                    std::to_string(kernel));
  }
  const size_t k2 = static_cast<size_t>(kernel) * kernel;
  for (int g = 0; g < kNumConvLstmGates; ++g) {
    if (input_weights[g].size() != k2 * in_channels * hidden_channels ||
        hidden_weights[g].size() != k2 * hidden_channels * hidden_channels ||
        biases[g].size() != static_cast<size_t>(hidden_channels)) {
      throw Error(ErrorCode::kDimMismatch,
                  "ConvLSTM weight arrays inconsistent with kernel/channels");
    }
  }
}

ConvLstmState ConvLstmState::Zero(int h, int w, int hidden_channels) {
  const TensorShape shape{h, w, hidden_channels};
  return {FeatureTensor(shape), FeatureTensor(shape)};
}

ConvLstmStepResult ConvLstmStep(const FeatureTensor& x,
                                const ConvLstmState& prev,
                                const ConvLstmParams& params) {
  params.Validate();
  if (x.c() != params.in_channels) {
    throw Error(ErrorCode::kDimMismatch,
                "input has " + std::to_string(x.c()) + " channels, cell expects " +
                    std::to_string(params.in_channels));
  }
  const TensorShape state_shape{x.h(), x.w(), params.hidden_channels};
  if (prev.hidden.shape() != state_shape || prev.cell.shape() != state_shape) {
    throw Error(ErrorCode::kDimMismatch,
                "state must be " + state_shape.ToString() + ", got " +
                    prev.hidden.shape().ToString());
  }

  const int ch = params.hidden_channels;
  const size_t pixels = static_cast<size_t>(x.h()) * x.w();
  std::array<std::vector<double>, kNumConvLstmGates> pre;
  for (int g = 0; g < kNumConvLstmGates; ++g) {
    pre[g].resize(pixels * ch);
    for (size_t p = 0; p < pixels; ++p) {
      for (int co = 0; co < ch; ++co) pre[g][p * ch + co] = params.biases[g][co];
    }
    AccumulateConv(x, params.input_weights[g], params.kernel, ch, pre[g]);
    AccumulateConv(prev.hidden, params.hidden_weights[g], params.kernel, ch,
                   pre[g]);
  }

  ConvLstmStepResult result{ConvLstmState::Zero(x.h(), x.w(), ch),
                            FeatureTensor(state_shape)};
  const auto cell_prev = prev.cell.data();
  auto cell = result.state.cell.data();
  auto hidden = result.state.hidden.data();
  for (size_t k = 0; k < pixels * ch; ++k) {
    const double i = Sigmoid(pre[kInputGate][k]);
    const double f = Sigmoid(pre[kForgetGate][k]);
    const double o = Sigmoid(pre[kOutputGate][k]);
    const double g = std::tanh(pre[kCandidate][k]);
    cell[k] = f * cell_prev[k] + i * g;
    hidden[k] = o * std::tanh(cell[k]);
  }
  result.output = result.state.hidden;
  return result;
}

}  // namespace seqpose
