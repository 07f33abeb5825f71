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

// Mini-batch SGD loop shared by the chunker and the tuple extractor.

#ifndef SACOIE_MODELS_TRAINING_H_
#define SACOIE_MODELS_TRAINING_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sacoie/tensor/optimizer.h"
#include "sacoie/tensor/parameters.h"
#include "sacoie/tensor/tensor.h"

namespace sacoie {

struct TrainConfig {
  std::uint64_t seed = 1;
  double learning_rate = 0.05;
  int batch_size = 16;
  int epochs = 20;
  double clip_norm = 5.0;
};

// Throws std::invalid_argument for non-positive fields.
void ValidateTrainConfig(const TrainConfig &config);

struct TrainHistory {
  // Mean per-example loss of each completed epoch.
  std::vector<double> epoch_loss;
  bool stopped_early = false;
};

// Loss of one training example, built from the current parameter values.
using ExampleLoss = std::function<autodiff::Tensor<float>(std::size_t example)>;
// Called after each epoch (1-based); returning false stops training.
using EpochCallback = std::function<bool(int epoch, double mean_loss)>;

// Visits the examples in a seeded shuffled order each epoch; every batch
// averages its example losses before one SGD step. Parameters are expected
// to be initialized already.
TrainHistory RunSgd(autodiff::ParameterSet<float> &params, std::size_t examples,
                    const ExampleLoss &loss, const TrainConfig &config,
                    const EpochCallback &on_epoch = nullptr);

}  // namespace sacoie

#endif  // SACOIE_MODELS_TRAINING_H_
