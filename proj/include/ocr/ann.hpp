#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ocr/features.hpp"

namespace ocr {

struct TrainConfig {
    int max_epochs = 1000;
    double goal_sse = 1e-4;
    double learning_rate = 0.01;  // initial rate of the adaptive schedule
    double momentum = 0.9;
    int hidden_count = 24;
    std::uint32_t seed = 42;
    double target_hi = 0.95;
    double target_lo = 0.05;
};

struct ScaleRange {
    double min = 0;
    double max = 0;
};

struct TrainingLog {
    int epochs_run = 0;
    double final_sse = 0;
};

// 11 -> hidden -> 36 perceptron with logistic activations throughout.
struct MlpModel {
    std::array<int, 3> dims{11, 24, 36};
    std::vector<double> w1, b1;  // hidden x 11 row-major, hidden
    std::vector<double> w2, b2;  // 36 x hidden row-major, 36
    std::vector<ScaleRange> input_scaling;  // 11 per-feature training ranges
    std::string label_order;
    std::uint32_t seed = 0;
    TrainConfig config;
    TrainingLog log;
};

// Per-feature min/max over a set of vectors.
std::vector<ScaleRange> feature_ranges(const std::vector<FeatureVector>& vectors);

// Weights and biases drawn from uniform(-0.5, 0.5), deterministic per seed.
MlpModel init_mlp(const TrainConfig& config, const std::vector<ScaleRange>& scaling);

// Min-max scaling to [0, 1] with clamping outside the training range;
// constant features (min == max) map to 0.5.
std::array<double, 11> scale_features(const MlpModel& model, const FeatureVector& f);

// All 36 output activations, each in (0, 1).
std::vector<double> forward(const MlpModel& model, const FeatureVector& f);

// Soft one-hot targets in database order: target_hi at the true class.
std::vector<std::vector<double>> make_targets(const TemplateDatabase& db, const TrainConfig& config);

// Sum over all samples and outputs of (target - activation)^2, no averaging.
double sse(const MlpModel& model, const std::vector<FeatureVector>& inputs,
           const std::vector<std::vector<double>>& targets);

// Flat parameter view in the order w1 | b1 | w2 | b2.
std::vector<double> parameters(const MlpModel& model);
void set_parameters(MlpModel& model, std::span<const double> params);

// Analytic gradient of sse() with respect to parameters(), same layout.
std::vector<double> sse_gradient(const MlpModel& model, const std::vector<FeatureVector>& inputs,
                                 const std::vector<std::vector<double>>& targets);

struct TrainResult {
    MlpModel model;
    std::vector<double> history;  // SSE after each epoch
};

// Full-batch gradient descent with momentum and an adaptive learning rate:
// a step that raises SSE by more than 4% is rejected (rate * 0.7, momentum
// reset), an improving step grows the rate by 5%. Stops at max_epochs or when
// SSE <= goal_sse. Deterministic for a given (model, db, config).
TrainResult train(MlpModel model, const TemplateDatabase& db, const TrainConfig& config);

struct Classification {
    char label = '?';
    double confidence = 0;  // winning activation
    char runner_up = '?';
};

// Argmax over the 36 activations; ties go to the lowest index.
Classification classify(const MlpModel& model, const FeatureVector& f);

void save_model(const MlpModel& model, const std::string& path);
MlpModel load_model(const std::string& path);

}  // namespace ocr
