#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dewsp/dates.hpp"

namespace dewsp {

struct OhlcvBar {
  Date date;
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  double adj_close = 0.0;
  double volume = 0.0;

  bool operator==(const OhlcvBar&) const = default;
};

// One asset's bar history plus simple returns on adjusted close.
// returns[i] is the return over bars[i] -> bars[i+1], so len(returns) =
// len(bars) - 1 and returns[i] belongs to the month of bars[i+1].
struct AssetSeries {
  std::string ticker;
  std::vector<OhlcvBar> bars;
  std::vector<double> returns;
};

void recompute_returns(AssetSeries& series);

// Column names in the source CSV; defaults match the canonical schema
// `date,open,high,low,adj_close,volume`.
struct CsvSchema {
  std::string date = "date";
  std::string open = "open";
  std::string high = "high";
  std::string low = "low";
  std::string adj_close = "adj_close";
  std::string volume = "volume";
};

AssetSeries load_ohlcv(const std::string& path, const CsvSchema& schema = {});
AssetSeries parse_ohlcv_csv(const std::string& text, const std::string& ticker,
                            const CsvSchema& schema = {});

// Keeps the final bar of each calendar month.
AssetSeries monthly_last(const AssetSeries& daily);

double simple_return(double p_now, double p_prev);

// Assets aligned on a common monthly window. assets are sorted by ticker and
// every series covers [first_month, first_month + n_months) with one bar per
// month.
struct Universe {
  std::vector<AssetSeries> assets;
  int first_month = 0;  // flat month index of bar 0

  int n_assets() const { return static_cast<int>(assets.size()); }
  int n_months() const { return assets.empty() ? 0 : static_cast<int>(assets[0].bars.size()); }
};

struct UniverseBuildOptions {
  std::optional<int> start_month;  // clamp, flat month index
  std::optional<int> end_month;    // inclusive
};

struct UniverseDiagnostics {
  std::vector<std::string> rejected;  // per rejected asset: reason
  int common_start = 0;
  int common_end = 0;  // inclusive
};

// Computes the common window across monthly series, drops assets that do not
// cover it fully (gap months are never filled in), and sorts by ticker.
Universe build_universe(std::vector<AssetSeries> monthly, const UniverseBuildOptions& options = {},
                        UniverseDiagnostics* diagnostics = nullptr);

struct SplitPlan {
  double is_fraction = 0.70;           // in-sample share of the window
  double train_fraction_of_is = 0.50;  // training share of in-sample
  int min_window_months = 10;
};

struct SplitBounds {
  IndexRange train;
  IndexRange validation;
  IndexRange test;
};

// Chronological train/validation/test month ranges. Floor rounding at both
// boundaries; the leftover months go to the later sub-window.
SplitBounds split(int n_months, const SplitPlan& plan = {});
SplitBounds split(const Universe& universe, const SplitPlan& plan = {});

}  // namespace dewsp
