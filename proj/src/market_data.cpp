#include "dewsp/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dewsp/csv.hpp"
#include "dewsp/errors.hpp"

namespace dewsp {

void recompute_returns(AssetSeries& series) {
  series.returns.clear();
  if (series.bars.size() < 2) return;
  series.returns.reserve(series.bars.size() - 1);
  for (size_t i = 0; i + 1 < series.bars.size(); ++i) {
    series.returns.push_back(simple_return(series.bars[i + 1].adj_close, series.bars[i].adj_close));
  }
}

double simple_return(double p_now, double p_prev) {
  if (p_prev <= 0.0) {
    fail(ErrorCode::NonPositivePrice, "previous price must be positive, got " + format_double(p_prev));
  }
  return p_now / p_prev - 1.0;
}

AssetSeries parse_ohlcv_csv(const std::string& text, const std::string& ticker,
                            const CsvSchema& schema) {
  CsvTable table = read_csv_text(text);
  if (table.header.empty()) fail(ErrorCode::EmptyInput, ticker + ": empty file");

  const std::string names[6] = {schema.date, schema.open,      schema.high,
                                schema.low,  schema.adj_close, schema.volume};
  int cols[6];
  for (int i = 0; i < 6; ++i) {
    cols[i] = table.column(names[i]);
    if (cols[i] < 0) fail(ErrorCode::MissingColumn, ticker + ": missing column '" + names[i] + "'");
  }

  AssetSeries series;
  series.ticker = ticker;
  series.bars.reserve(table.rows.size());

  int line_no = 1;  // header is line 1
  for (const auto& row : table.rows) {
    ++line_no;
    std::string context = ticker + " line " + std::to_string(line_no);
    if (row.size() < table.header.size()) {
      fail(ErrorCode::UnparseableRow, context + ": expected " + std::to_string(table.header.size()) +
                                          " fields, got " + std::to_string(row.size()));
    }
    OhlcvBar bar;
    try {
      bar.date = parse_date(row[cols[0]]);
    } catch (const Error&) {
      fail(ErrorCode::UnparseableRow, context + ": bad date '" + row[cols[0]] + "'");
    }
    bar.open = parse_double(row[cols[1]], context);
    bar.high = parse_double(row[cols[2]], context);
    bar.low = parse_double(row[cols[3]], context);
    bar.adj_close = parse_double(row[cols[4]], context);
    bar.volume = parse_double(row[cols[5]], context);

    if (bar.open <= 0.0 || bar.high <= 0.0 || bar.low <= 0.0 || bar.adj_close <= 0.0) {
      fail(ErrorCode::NonPositivePrice, context + ": prices must be positive");
    }
    if (bar.volume < 0.0) fail(ErrorCode::UnparseableRow, context + ": negative volume");
    if (!(bar.low <= bar.open && bar.open <= bar.high)) {
      fail(ErrorCode::UnparseableRow, context + ": expected low <= open <= high");
    }

    if (!series.bars.empty() && !(series.bars.back().date < bar.date)) {
      fail(ErrorCode::NonMonotoneDates,
           context + ": date " + format_date(bar.date) + " not after " +
               format_date(series.bars.back().date));
    }
    series.bars.push_back(bar);
  }

  if (series.bars.empty()) fail(ErrorCode::EmptyInput, ticker + ": no data rows");
  recompute_returns(series);
  return series;
}

AssetSeries load_ohlcv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();

  // Ticker = file stem.
  std::string ticker = path;
  if (auto pos = ticker.find_last_of("/\\"); pos != std::string::npos) ticker = ticker.substr(pos + 1);
  if (auto pos = ticker.rfind('.'); pos != std::string::npos) ticker = ticker.substr(0, pos);

  return parse_ohlcv_csv(buf.str(), ticker, schema);
}

AssetSeries monthly_last(const AssetSeries& daily) {
  if (daily.bars.empty()) fail(ErrorCode::EmptyInput, daily.ticker + ": no bars to resample");
  AssetSeries monthly;
  monthly.ticker = daily.ticker;
  for (const auto& bar : daily.bars) {
    if (!monthly.bars.empty() &&
        monthly.bars.back().date.month_index() == bar.date.month_index()) {
      monthly.bars.back() = bar;  // later bar in the same month wins
    } else {
      monthly.bars.push_back(bar);
    }
  }
  recompute_returns(monthly);
  return monthly;
}

Universe build_universe(std::vector<AssetSeries> monthly, const UniverseBuildOptions& options,
                        UniverseDiagnostics* diagnostics) {
  if (monthly.empty()) fail(ErrorCode::EmptyInput, "no assets supplied");

  std::sort(monthly.begin(), monthly.end(),
            [](const AssetSeries& a, const AssetSeries& b) { return a.ticker < b.ticker; });

  int common_start = 0;
  int common_end = 0;  // inclusive month indices
  bool first = true;
  for (const auto& asset : monthly) {
    if (asset.bars.empty()) fail(ErrorCode::EmptyInput, asset.ticker + ": empty series");
    int lo = asset.bars.front().date.month_index();
    int hi = asset.bars.back().date.month_index();
    if (first) {
      common_start = lo;
      common_end = hi;
      first = false;
    } else {
      common_start = std::max(common_start, lo);
      common_end = std::min(common_end, hi);
    }
  }
  if (options.start_month) common_start = std::max(common_start, *options.start_month);
  if (options.end_month) common_end = std::min(common_end, *options.end_month);
  if (common_end < common_start) {
    fail(ErrorCode::WindowTooShort, "assets share no common months");
  }

  Universe universe;
  universe.first_month = common_start;

  for (auto& asset : monthly) {
    AssetSeries clipped;
    clipped.ticker = asset.ticker;
    for (const auto& bar : asset.bars) {
      int m = bar.date.month_index();
      if (m >= common_start && m <= common_end) clipped.bars.push_back(bar);
    }
    int expected = common_end - common_start + 1;
    bool complete = static_cast<int>(clipped.bars.size()) == expected;
    if (complete) {
      // All months present and strictly increasing implies exactly one bar per month.
      for (size_t i = 0; i < clipped.bars.size(); ++i) {
        if (clipped.bars[i].date.month_index() != common_start + static_cast<int>(i)) {
          complete = false;
          break;
        }
      }
    }
    if (!complete) {
      if (diagnostics) {
        diagnostics->rejected.push_back(asset.ticker + ": gaps inside common window " +
                                        format_year_month(common_start) + ".." +
                                        format_year_month(common_end));
      }
      continue;
    }
    recompute_returns(clipped);
    universe.assets.push_back(std::move(clipped));
  }

  if (diagnostics) {
    diagnostics->common_start = common_start;
    diagnostics->common_end = common_end;
  }
  if (universe.n_assets() < 2) {
    fail(ErrorCode::EmptyInput, "universe needs at least 2 assets with full coverage, got " +
                                    std::to_string(universe.n_assets()));
  }
  return universe;
}

SplitBounds split(int n_months, const SplitPlan& plan) {
  if (n_months < plan.min_window_months) {
    fail(ErrorCode::WindowTooShort, "window of " + std::to_string(n_months) +
                                        " months is below the minimum of " +
                                        std::to_string(plan.min_window_months));
  }
  int n_is = static_cast<int>(std::floor(plan.is_fraction * n_months));
  int n_train = static_cast<int>(std::floor(plan.train_fraction_of_is * n_is));
  SplitBounds bounds;
  bounds.train = {0, n_train};
  bounds.validation = {n_train, n_is};
  bounds.test = {n_is, n_months};
  return bounds;
}

SplitBounds split(const Universe& universe, const SplitPlan& plan) {
  return split(universe.n_months(), plan);
}

}  // namespace dewsp
