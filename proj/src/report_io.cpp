#include "dpfib/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>

namespace dpfib {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

nlohmann::ordered_json to_json(const ClassificationReport& rep) {
  nlohmann::ordered_json j;
  j["family"] = {{"d1", rep.family.d1}, {"d2", rep.family.d2}, {"d3", rep.family.d3}, {"n", rep.family.n}};
  j["smooth_pic2"] = rep.smooth_pic2;
  j["k3"] = rep.k3;
  j["euler"] = rep.euler;
  j["cone"] = std::string(to_string(rep.cone));
  if (rep.degeneration) {
    const auto& d = *rep.degeneration;
    j["degeneration"] = {{"r", d.r}, {"mu", d.mu}, {"ks2", d.ks2}, {"shokurov", d.shokurov}, {"odp", d.odp}};
  } else {
    j["degeneration"] = nullptr;
  }
  j["verdict"] = std::string(to_string(rep.verdict));
  j["route"] = std::string(to_string(rep.route));
  return j;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns{"d1", "d2",  "d3",  "n",        "smooth_pic2",
                                                "k3", "euler", "cone", "r",     "mu",
                                                "ks2", "shokurov", "odp", "verdict", "route"};
  return columns;
}

std::vector<std::string> csv_fields(const ClassificationReport& rep) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  std::vector<std::string> f{std::to_string(rep.family.d1), std::to_string(rep.family.d2),
                             std::to_string(rep.family.d3), std::to_string(rep.family.n),
                             b(rep.smooth_pic2),            std::to_string(rep.k3),
                             std::to_string(rep.euler),     std::string(to_string(rep.cone))};
  if (rep.degeneration) {
    const auto& d = *rep.degeneration;
    f.insert(f.end(), {std::to_string(d.r), std::to_string(d.mu), std::to_string(d.ks2), b(d.shokurov),
                       std::to_string(d.odp)});
  } else {
    f.insert(f.end(), 5, std::string());
  }
  f.emplace_back(to_string(rep.verdict));
  f.emplace_back(to_string(rep.route));
  return f;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

void TextTable::add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

void TextTable::print(std::ostream& os) const {
  std::vector<std::size_t> width(header_.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(header_);
  for (const auto& r : rows_) widen(r);

  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      if (i + 1 == row.size()) {
        os << row[i];
      } else {
        os << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      }
    }
    os << '\n';
  };
  emit(header_);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  emit(rule);
  for (const auto& r : rows_) emit(r);
}

std::optional<ReportFilter> ReportFilter::parse(std::string_view spec) {
  const std::string s(spec);
  if (spec == "all") return ReportFilter(Kind::All, 0, s);
  if (spec == "smooth") return ReportFilter(Kind::Smooth, 0, s);
  if (spec == "rational") return ReportFilter(Kind::Rational, 0, s);
  if (spec == "nonrational") return ReportFilter(Kind::Nonrational, 0, s);
  if (spec.starts_with("chi=")) {
    const std::string_view v = spec.substr(4);
    std::int64_t chi = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), chi);
    if (ec == std::errc() && ptr == v.data() + v.size() && !v.empty()) return ReportFilter(Kind::Chi, chi, s);
  }
  return std::nullopt;
}

bool ReportFilter::matches(const ClassificationReport& rep) const {
  switch (kind_) {
    case Kind::All: return true;
    case Kind::Smooth: return rep.smooth_pic2;
    case Kind::Rational: return rep.verdict == Verdict::Rational;
    case Kind::Nonrational: return rep.verdict == Verdict::Nonrational;
    case Kind::Chi: return rep.euler == chi_;
  }
  return false;
}

std::vector<std::string> explain(const ClassificationReport& rep) {
  std::vector<std::string> lines;
  const DP3Family& f = rep.family;
  lines.push_back("cone position of K_X^2: " + std::string(to_string(rep.cone)) +
                  " (decisive test 5n >= 12 - 3(d1+d2+d3) for n < 0)");
  if (!rep.smooth_pic2) {
    if (!necessary_smooth_pic2(f)) {
      lines.push_back("fails a necessary condition for smoothness with rk Pic = 2 (Reid multiplicity criterion along Y_2, Y_3, Y_4)");
    } else {
      lines.push_back("necessary conditions hold but the sufficient smoothness conditions do not; no verdict for a general member");
    }
    return lines;
  }
  lines.push_back("general member is smooth with rk Pic = 2 (base locus inside Y_4, Bertini)");
  switch (rep.route) {
    case Route::MainTheoremRational:
      lines.push_back("d1 = 0 and n = 1: the unique rational family");
      break;
    case Route::CubicThreefold:
      lines.push_back("d1 = 1, d2 = n = 0: birational to a smooth cubic threefold, nonrational by the intermediate Jacobian (Clemens-Griffiths)");
      break;
    case Route::ShokurovConicBundle: {
      const auto& d = *rep.degeneration;
      lines.push_back("degeneration x1 F + x2 G = 0 has " + std::to_string(d.odp) +
                      " nodes; blow-up of Y_3 gives a conic bundle over F_" + std::to_string(d.r));
      lines.push_back("degeneration divisor 5 s_inf + " + std::to_string(d.mu) + " l; 2K + delta = " +
                      to_string(d.two_k_plus_delta) + " is effective");
      lines.push_back("Shokurov criterion: the conic bundle is nonruled; nonrationality specializes to X (Kollar)");
      break;
    }
    case Route::None:
      break;
  }
  return lines;
}

}  // namespace dpfib
