#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dewsp/linalg.hpp"
#include "dewsp/market_data.hpp"

namespace dewsp {

enum class SignalKind { Mom, Ma, Vol };

// One binary indicator parameterization. MOM uses the look-back m; MA and VOL
// use a short window s and a long window l, both ending at the current month.
struct SignalSpec {
  SignalKind kind = SignalKind::Mom;
  int m = 0;
  int s = 0;
  int l = 0;

  std::string name() const;
  // Months of history required before the first valid evaluation index.
  int lookback() const;

  static SignalSpec mom(int m) { return {SignalKind::Mom, m, 0, 0}; }
  static SignalSpec ma(int s, int l) { return {SignalKind::Ma, 0, s, l}; }
  static SignalSpec vol(int s, int l) { return {SignalKind::Vol, 0, s, l}; }
};

// MOM {1,3,6,9,12}, MA {1,2,3}x{9,12}, VOL {1,2,3}x{9,12}: 17 signals.
std::vector<SignalSpec> default_signal_specs();
int warmup_months(const std::vector<SignalSpec>& specs);

// Buy (+1) iff price at t is at least the price m months back.
int mom_signal(std::span<const double> prices, int m, int t);

// Buy (+1) iff the s-month average price is at least the l-month average,
// both windows ending at t.
int ma_signal(std::span<const double> prices, int s, int l, int t);

// Cumulative signed volume. Output index i holds the value for bar i+1,
// so the series has length prices.size() - 1.
std::vector<double> obv(std::span<const double> prices, std::span<const double> volumes);

// Buy (+1) iff the s-month average of OBV is at least the l-month average.
int vol_signal(std::span<const double> prices, std::span<const double> volumes, int s, int l, int t);

int evaluate_signal(const SignalSpec& spec, std::span<const double> prices,
                    std::span<const double> volumes, int t);

struct FeatureRow {
  int asset = 0;  // index into universe.assets
  int month = 0;  // bar index within the common window
};

// Per-(asset, month) matrix of {-1,+1} signals with a 1-month-ahead simple
// return target. Rows at the final bar carry no target and are meant for
// inference only.
struct FeatureMatrix {
  std::vector<std::string> signal_names;
  std::vector<FeatureRow> rows;
  Matrix signals;                    // rows x signals, entries in {-1,+1}
  std::vector<double> targets;       // aligned with rows; NaN where absent
  std::vector<uint8_t> has_target;

  int n_rows() const { return static_cast<int>(rows.size()); }
  int n_signals() const { return signals.cols; }

  // Rows that have a target (training/validation view).
  FeatureMatrix with_targets() const;
  // Rows whose month lies in [window.begin, window.end).
  FeatureMatrix slice_months(IndexRange window) const;
};

// One row per (asset, month in window), ordered by (ticker, month). The
// window is in bar indices and must start at or after the specs' warm-up.
FeatureMatrix build_features(const Universe& universe, const std::vector<SignalSpec>& specs,
                             IndexRange window);

void write_features_csv(const std::string& path, const Universe& universe,
                        const FeatureMatrix& features);

}  // namespace dewsp
