#pragma once

// Rendering of classification reports as JSON, CSV and aligned text.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dpfib/dp3.hpp"

namespace dpfib {

enum class OutputFormat { Table, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Keys in fixed order: family{d1,d2,d3,n}, smooth_pic2, k3, euler, cone,
/// degeneration{r,mu,ks2,shokurov,odp} (null when absent), verdict, route.
nlohmann::ordered_json to_json(const ClassificationReport& rep);

/// d1,d2,d3,n,smooth_pic2,k3,euler,cone,r,mu,ks2,shokurov,odp,verdict,route
const std::vector<std::string>& csv_columns();

/// One value per csv_columns() entry; degeneration fields are empty
/// strings when absent.
std::vector<std::string> csv_fields(const ClassificationReport& rep);

std::string csv_line(const std::vector<std::string>& fields);

/// Accumulates rows and prints them with aligned columns.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(std::vector<std::string> row);
  void print(std::ostream& os) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Enumeration filters: all, smooth, rational, nonrational, chi=<v>.
class ReportFilter {
 public:
  /// nullopt for an unknown filter.
  static std::optional<ReportFilter> parse(std::string_view spec);
  bool matches(const ClassificationReport& rep) const;
  const std::string& spec() const { return spec_; }

 private:
  enum class Kind { All, Smooth, Rational, Nonrational, Chi };
  ReportFilter(Kind kind, std::int64_t chi, std::string spec)
      : kind_(kind), chi_(chi), spec_(std::move(spec)) {}
  Kind kind_;
  std::int64_t chi_;
  std::string spec_;
};

/// Names of the criteria behind a verdict, one per line.
std::vector<std::string> explain(const ClassificationReport& rep);

}  // namespace dpfib
