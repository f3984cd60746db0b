#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dewsp/linalg.hpp"
#include "dewsp/rng.hpp"

namespace dewsp {

enum class OptimizerRule { RmsProp, Adam, Sgd };
enum class Activation { Tanh, Relu, Sigmoid };

const char* to_string(OptimizerRule rule);
const char* to_string(Activation act);

struct Hyperparameters {
  int n_hidden_layers = 2;       // {2, 3}
  int n_hidden_units = 8;        // {2, 4, 8, 16}
  double init_std = 0.05;        // {0.025, 0.05, 0.075}
  double dropout_rate = 0.5;     // {0.25, 0.5, 0.75}
  int batch_size = 64;           // {28, 64, 128}
  OptimizerRule optimizer = OptimizerRule::Adam;
  Activation hidden_activation = Activation::Tanh;
  double learning_rate = 0.001;
  int max_epochs = 100;
  int patience = 10;

  bool operator==(const Hyperparameters&) const = default;
};

// Throws InvalidSpec when a field is outside its allowed set. init_model
// itself accepts off-grid values (e.g. init_std = 0 in tests).
void validate_hyperparameters(const Hyperparameters& hp);

// Hidden layer: affine -> batch norm -> activation -> dropout.
struct LayerParams {
  Matrix w;  // in x units
  std::vector<double> b;
  std::vector<double> gamma, beta;              // batch-norm scale/shift
  std::vector<double> running_mean, running_var;

  bool operator==(const LayerParams&) const = default;
};

struct Model {
  Hyperparameters hp;
  int n_inputs = 0;
  std::vector<LayerParams> hidden;
  std::vector<double> w_out;  // units -> 1, linear
  double b_out = 0.0;
  uint64_t rng_seed = 0;
  double best_validation_mse = 0.0;

  bool operator==(const Model&) const = default;
};

// Weights ~ N(0, init_std^2) from the seeded generator, biases zero,
// batch-norm at identity (gamma 1, beta 0, running mean 0 / var 1).
Model init_model(const Hyperparameters& hp, int n_inputs, uint64_t seed);

enum class ExecMode { Train, Infer };

// One prediction per input row. Train mode normalizes with batch statistics
// and applies inverted dropout (requires rng); infer mode uses running
// statistics and no dropout, so it is deterministic.
std::vector<double> forward(const Model& model, const Matrix& x, ExecMode mode,
                            Rng* rng = nullptr);

struct Dataset {
  Matrix x;
  std::vector<double> y;

  int n_rows() const { return x.rows; }
};

enum class StopReason { EarlyStop, MaxEpochs };

struct TrainReport {
  std::vector<double> train_loss;  // per-epoch mean batch MSE
  std::vector<double> val_mse;     // per-epoch validation MSE
  int stopping_epoch = 0;          // epochs actually run (1-based count)
  int best_epoch = 0;
  StopReason reason = StopReason::MaxEpochs;
};

// Minimizes MSE with the configured optimizer rule; keeps the weights of the
// best validation epoch; stops after `patience` epochs without improvement.
// Throws NonFiniteLoss if training diverges.
std::pair<Model, TrainReport> train(const Model& init, const Dataset& train_set,
                                    const Dataset& val_set);

// Mean squared error of infer-mode predictions.
double evaluate_mse(const Model& model, const Dataset& data);

// Deterministic per-asset forecasts; one row per asset.
std::vector<double> predict(const Model& model, const Matrix& rows);

// Compares analytic gradients against central finite differences over every
// parameter, in batch-statistics mode with dropout disabled. The result is
// max_i |analytic_i - numeric_i| / max(|analytic|_inf, |numeric|_inf).
// Requires a smooth activation (tanh or sigmoid).
double gradient_check(const Model& model, const Dataset& batch, double epsilon);

// Number of trainable parameters (batch-norm running statistics excluded).
size_t param_count(const Model& model);
std::vector<double> flatten_params(const Model& model);
void unflatten_params(Model& model, const std::vector<double>& flat);

// Test/diagnostic hooks: intermediate values of one hidden layer in a given
// mode. `batchnorm_output` is the pre-activation normalized value;
// `hidden_activations` is the layer output after activation and dropout.
Matrix batchnorm_output(const Model& model, const Matrix& x, int layer, ExecMode mode);
Matrix hidden_activations(const Model& model, const Matrix& x, int layer, ExecMode mode,
                          Rng* rng = nullptr);

}  // namespace dewsp
