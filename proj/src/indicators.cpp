#include "dewsp/indicators.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "dewsp/csv.hpp"
#include "dewsp/errors.hpp"

namespace dewsp {

namespace {

constexpr double kNoTarget = std::numeric_limits<double>::quiet_NaN();

double window_mean(std::span<const double> v, int j, int t) {
  // Mean of v[t-j+1 .. t].
  double s = 0.0;
  for (int i = 0; i < j; ++i) s += v[t - i];
  return s / static_cast<double>(j);
}

}  // namespace

std::string SignalSpec::name() const {
  switch (kind) {
    case SignalKind::Mom: return "MOM(" + std::to_string(m) + "M)";
    case SignalKind::Ma: return "MA(" + std::to_string(s) + "M-" + std::to_string(l) + "M)";
    case SignalKind::Vol: return "VOL(" + std::to_string(s) + "M-" + std::to_string(l) + "M)";
  }
  return "?";
}

int SignalSpec::lookback() const {
  switch (kind) {
    case SignalKind::Mom: return m;      // needs price at t-m
    case SignalKind::Ma: return l - 1;   // window of l prices ending at t
    case SignalKind::Vol: return l;      // OBV starts one bar late
  }
  return 0;
}

std::vector<SignalSpec> default_signal_specs() {
  std::vector<SignalSpec> specs;
  for (int m : {1, 3, 6, 9, 12}) specs.push_back(SignalSpec::mom(m));
  for (int s : {1, 2, 3})
    for (int l : {9, 12}) specs.push_back(SignalSpec::ma(s, l));
  for (int s : {1, 2, 3})
    for (int l : {9, 12}) specs.push_back(SignalSpec::vol(s, l));
  return specs;
}

int warmup_months(const std::vector<SignalSpec>& specs) {
  int w = 0;
  for (const auto& spec : specs) w = std::max(w, spec.lookback());
  return w;
}

int mom_signal(std::span<const double> prices, int m, int t) {
  if (m < 1) fail(ErrorCode::InvalidSpec, "MOM look-back must be >= 1");
  if (t < m || t >= static_cast<int>(prices.size())) {
    fail(ErrorCode::InsufficientHistory,
         "MOM(" + std::to_string(m) + ") needs index >= " + std::to_string(m));
  }
  return prices[t] >= prices[t - m] ? 1 : -1;
}

int ma_signal(std::span<const double> prices, int s, int l, int t) {
  if (s < 1 || s >= l) fail(ErrorCode::InvalidSpec, "MA windows need 1 <= s < l");
  if (t - l + 1 < 0 || t >= static_cast<int>(prices.size())) {
    fail(ErrorCode::InsufficientHistory, "MA(" + std::to_string(s) + "," + std::to_string(l) +
                                             ") needs index >= " + std::to_string(l - 1));
  }
  return window_mean(prices, s, t) >= window_mean(prices, l, t) ? 1 : -1;
}

std::vector<double> obv(std::span<const double> prices, std::span<const double> volumes) {
  if (prices.size() != volumes.size()) {
    fail(ErrorCode::LengthMismatch, "price and volume series differ in length");
  }
  if (prices.size() < 2) fail(ErrorCode::LengthMismatch, "OBV needs at least 2 bars");
  std::vector<double> out(prices.size() - 1, 0.0);
  double acc = 0.0;
  for (size_t k = 1; k < prices.size(); ++k) {
    double d = prices[k] >= prices[k - 1] ? 1.0 : -1.0;
    acc += volumes[k] * d;
    out[k - 1] = acc;
  }
  return out;
}

int vol_signal(std::span<const double> prices, std::span<const double> volumes, int s, int l,
               int t) {
  if (s < 1 || s >= l) fail(ErrorCode::InvalidSpec, "VOL windows need 1 <= s < l");
  // OBV at bar k lives at index k-1; the l-window ending at bar t needs t >= l.
  if (t < l || t >= static_cast<int>(prices.size())) {
    fail(ErrorCode::InsufficientHistory, "VOL(" + std::to_string(s) + "," + std::to_string(l) +
                                             ") needs index >= " + std::to_string(l));
  }
  auto series = obv(prices, volumes);
  int u = t - 1;  // bar t in OBV indexing
  return window_mean(series, s, u) >= window_mean(series, l, u) ? 1 : -1;
}

int evaluate_signal(const SignalSpec& spec, std::span<const double> prices,
                    std::span<const double> volumes, int t) {
  switch (spec.kind) {
    case SignalKind::Mom: return mom_signal(prices, spec.m, t);
    case SignalKind::Ma: return ma_signal(prices, spec.s, spec.l, t);
    case SignalKind::Vol: return vol_signal(prices, volumes, spec.s, spec.l, t);
  }
  fail(ErrorCode::InvalidSpec, "unknown signal kind");
}

FeatureMatrix FeatureMatrix::with_targets() const {
  FeatureMatrix out;
  out.signal_names = signal_names;
  for (int i = 0; i < n_rows(); ++i) {
    if (!has_target[i]) continue;
    out.rows.push_back(rows[i]);
    out.targets.push_back(targets[i]);
    out.has_target.push_back(1);
  }
  out.signals = Matrix(out.n_rows(), signals.cols);
  int r = 0;
  for (int i = 0; i < n_rows(); ++i) {
    if (!has_target[i]) continue;
    for (int c = 0; c < signals.cols; ++c) out.signals.at(r, c) = signals.at(i, c);
    ++r;
  }
  return out;
}

FeatureMatrix FeatureMatrix::slice_months(IndexRange window) const {
  FeatureMatrix out;
  out.signal_names = signal_names;
  for (int i = 0; i < n_rows(); ++i) {
    if (!window.contains(rows[i].month)) continue;
    out.rows.push_back(rows[i]);
    out.targets.push_back(targets[i]);
    out.has_target.push_back(has_target[i]);
  }
  out.signals = Matrix(out.n_rows(), signals.cols);
  int r = 0;
  for (int i = 0; i < n_rows(); ++i) {
    if (!window.contains(rows[i].month)) continue;
    for (int c = 0; c < signals.cols; ++c) out.signals.at(r, c) = signals.at(i, c);
    ++r;
  }
  return out;
}

FeatureMatrix build_features(const Universe& universe, const std::vector<SignalSpec>& specs,
                             IndexRange window) {
  int warmup = warmup_months(specs);
  int n_months = universe.n_months();
  if (window.begin < warmup) {
    fail(ErrorCode::InsufficientWarmup, "window starts at month " + std::to_string(window.begin) +
                                            " but the signal set needs " + std::to_string(warmup) +
                                            " months of warm-up");
  }
  if (window.end > n_months || window.begin >= window.end) {
    fail(ErrorCode::InsufficientWarmup, "feature window out of range");
  }

  FeatureMatrix features;
  for (const auto& spec : specs) features.signal_names.push_back(spec.name());

  int n_rows = universe.n_assets() * window.length();
  features.signals = Matrix(n_rows, static_cast<int>(specs.size()));
  features.rows.reserve(n_rows);
  features.targets.reserve(n_rows);
  features.has_target.reserve(n_rows);

  int r = 0;
  for (int a = 0; a < universe.n_assets(); ++a) {
    const AssetSeries& asset = universe.assets[a];
    std::vector<double> prices(asset.bars.size()), volumes(asset.bars.size());
    for (size_t i = 0; i < asset.bars.size(); ++i) {
      prices[i] = asset.bars[i].adj_close;
      volumes[i] = asset.bars[i].volume;
    }
    for (int t = window.begin; t < window.end; ++t) {
      features.rows.push_back({a, t});
      for (size_t c = 0; c < specs.size(); ++c) {
        features.signals.at(r, static_cast<int>(c)) =
            static_cast<double>(evaluate_signal(specs[c], prices, volumes, t));
      }
      if (t + 1 < n_months) {
        features.targets.push_back(asset.returns[t]);
        features.has_target.push_back(1);
      } else {
        features.targets.push_back(kNoTarget);
        features.has_target.push_back(0);
      }
      ++r;
    }
  }
  return features;
}

void write_features_csv(const std::string& path, const Universe& universe,
                        const FeatureMatrix& features) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + path + "'");
  out << "ticker,date";
  for (const auto& name : features.signal_names) out << "," << name;
  out << ",target\n";
  for (int i = 0; i < features.n_rows(); ++i) {
    const FeatureRow& row = features.rows[i];
    out << universe.assets[row.asset].ticker << ","
        << format_year_month(universe.first_month + row.month);
    for (int c = 0; c < features.n_signals(); ++c) {
      out << "," << format_double(features.signals.at(i, c));
    }
    out << ",";
    if (features.has_target[i]) out << format_double(features.targets[i]);
    out << "\n";
  }
}

}  // namespace dewsp
