// Copyright 2026 The sac-oie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sacoie/models/training.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sacoie {

void ValidateTrainConfig(const TrainConfig &config) {
  if (!(config.learning_rate > 0)) throw std::invalid_argument("learning rate must be positive");
  if (config.batch_size <= 0) throw std::invalid_argument("batch size must be positive");
  if (config.epochs <= 0) throw std::invalid_argument("epochs must be positive");
  if (!(config.clip_norm > 0)) throw std::invalid_argument("clip norm must be positive");
}

TrainHistory RunSgd(autodiff::ParameterSet<float> &params, std::size_t examples,
                    const ExampleLoss &loss, const TrainConfig &config,
                    const EpochCallback &on_epoch) {
  ValidateTrainConfig(config);
  if (examples == 0) throw std::invalid_argument("no training examples");
  // Distinct stream from the one used for initialization.
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(examples);
  std::iota(order.begin(), order.end(), 0);
  const autodiff::SgdConfig sgd{config.learning_rate, config.clip_norm};

  TrainHistory history;
  params.ZeroGrad();
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double total = 0.0;
    for (std::size_t begin = 0; begin < examples; begin += config.batch_size) {
      const std::size_t end = std::min(examples, begin + config.batch_size);
      const float scale = 1.0f / static_cast<float>(end - begin);
      for (std::size_t i = begin; i < end; ++i) {
        auto l = loss(order[i]);
        total += l.item();
        autodiff::Scale(l, scale).Backward();
      }
      autodiff::SgdStep(params, sgd);
    }
    history.epoch_loss.push_back(total / static_cast<double>(examples));
    if (on_epoch && !on_epoch(epoch, history.epoch_loss.back())) {
      history.stopped_early = true;
      break;
    }
  }
  return history;
}

}  // namespace sacoie
