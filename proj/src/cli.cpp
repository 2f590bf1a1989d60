#include "dpfib/cli.hpp"

#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "dpfib/dp3.hpp"
#include "dpfib/report_io.hpp"
#include "dpfib/scroll.hpp"
#include "dpfib/special_cases.hpp"
#include "dpfib/sweep.hpp"

namespace dpfib {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string bool_str(bool v) { return v ? "true" : "false"; }

nlohmann::ordered_json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

std::string class_str(DivisorClass c) { return to_string(c); }

struct GlobalOptions {
  std::string format = "table";
  bool explain = false;

  OutputFormat output() const { return *parse_format(format); }
};

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::vector<std::int64_t> values;
  bool diagnostic = false;
};

void print_report_vertical(std::ostream& out, const ClassificationReport& rep) {
  TextTable t({"field", "value"});
  const auto& cols = csv_columns();
  const auto fields = csv_fields(rep);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (!fields[i].empty()) t.add_row({cols[i], fields[i]});
  }
  if (rep.degeneration) {
    t.add_row({"delta", to_string(rep.degeneration->delta)});
    t.add_row({"2K+delta", to_string(rep.degeneration->two_k_plus_delta)});
  }
  t.print(out);
}

int cmd_classify(const GlobalOptions& g, const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  DP3Family f;
  try {
    f = DP3Family::make(a.values[0], a.values[1], a.values[2], a.values[3]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const ClassificationReport rep = classify(f);
  const OutputFormat fmt = g.output();
  switch (fmt) {
    case OutputFormat::Json: out << to_json(rep).dump() << '\n'; break;
    case OutputFormat::Csv:
      out << csv_line(csv_columns()) << '\n' << csv_line(csv_fields(rep)) << '\n';
      break;
    case OutputFormat::Table: print_report_vertical(out, rep); break;
  }

  if (a.diagnostic) {
    const Ks2Discrepancy k = ks2_discrepancy(f);
    if (fmt == OutputFormat::Json) {
      nlohmann::ordered_json j;
      j["ks2_printed"] = k.printed;
      j["ks2_scroll_adjunction"] = k.adjunction;
      j["agree"] = k.agree();
      out << j.dump() << '\n';
    } else {
      std::ostream& os = fmt == OutputFormat::Csv ? err : out;
      os << "ks2 (8 - mu): " << k.printed << "\nks2 (adjunction on Proj(O(d1)+O(d3)+O)): " << k.adjunction
         << '\n'
         << (k.agree() ? "the two values agree\n" : "the two values DISAGREE (they coincide only when d2 = d3)\n");
    }
  }
  if (g.explain) {
    std::ostream& os = fmt == OutputFormat::Table ? out : err;
    for (const auto& line : explain(rep)) os << "# " << line << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::int64_t max_d1 = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::vector<std::string> filters;
  bool serial = false;
};

int cmd_enumerate(const GlobalOptions& g, const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  const EnumerationRange range{a.max_d1, a.n_min, a.n_max};
  try {
    range.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid range: ") + e.what());
  }
  std::vector<ReportFilter> filters;
  for (const auto& spec : a.filters) {
    auto f = ReportFilter::parse(spec);
    if (!f) throw UsageError("unknown filter '" + spec + "' (expected all, smooth, rational, nonrational, chi=<v>)");
    filters.push_back(*f);
  }

  const auto reports = a.serial ? enumerate_serial(range) : enumerate_parallel(range);
  const OutputFormat fmt = g.output();
  TextTable table(csv_columns());
  if (fmt == OutputFormat::Csv) out << csv_line(csv_columns()) << '\n';
  for (const auto& rep : reports) {
    const bool keep = std::all_of(filters.begin(), filters.end(), [&](const ReportFilter& f) { return f.matches(rep); });
    if (!keep) continue;
    switch (fmt) {
      case OutputFormat::Json: out << to_json(rep).dump() << '\n'; break;
      case OutputFormat::Csv: out << csv_line(csv_fields(rep)) << '\n'; break;
      case OutputFormat::Table: table.add_row(csv_fields(rep)); break;
    }
    if (g.explain) {
      err << "# " << rep.family.to_string() << '\n';
      for (const auto& line : explain(rep)) err << "#   " << line << '\n';
    }
  }
  if (fmt == OutputFormat::Table) table.print(out);
  return kExitOk;
}

// ------------------------------------------------------------------ linsys

struct LinsysArgs {
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> cls;
  std::string query;
};

Scroll scroll_from(const std::vector<std::int64_t>& degrees) {
  try {
    return Scroll::normalize(degrees);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string subscroll_name(SubscrollIndex j) { return "Y" + std::to_string(j.j); }

int cmd_linsys(const GlobalOptions& g, const LinsysArgs& a, std::ostream& out) {
  const Scroll scroll = scroll_from(a.degrees);
  const DivisorClass cls{a.cls[0], a.cls[1]};
  const OutputFormat fmt = g.output();

  nlohmann::ordered_json j;
  j["scroll"] = std::vector<std::int64_t>(scroll.degrees().begin(), scroll.degrees().end());
  j["class"] = {cls.a, cls.b};
  j["query"] = a.query;
  std::vector<std::pair<std::string, std::string>> rows;

  try {
    if (a.query == "h0") {
      const BigInt v = h0(scroll, cls);
      j["h0"] = big_json(v);
      rows.emplace_back("h0", v.str());
    } else if (a.query.starts_with("mult:")) {
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(a.query.substr(5), &used);
        if (used != a.query.size() - 5) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw UsageError("malformed query '" + a.query + "' (expected mult:<j>)");
      }
      if (idx < 2 || idx > scroll.rank()) {
        throw UsageError("subscroll index must lie in [2, " + std::to_string(scroll.rank()) + "]");
      }
      const SubscrollIndex sj{idx};
      const std::int64_t closed = mult_subscroll(scroll, cls, sj);
      const std::int64_t oracle = mult_subscroll_oracle(scroll, cls, sj);
      if (closed != oracle) {
        throw std::logic_error("closed-form multiplicity " + std::to_string(closed) +
                               " disagrees with enumeration " + std::to_string(oracle));
      }
      j["subscroll"] = subscroll_name(sj);
      j["mult_closed_form"] = closed;
      j["mult_oracle"] = oracle;
      rows.emplace_back("mult_" + subscroll_name(sj) + " (closed form)", std::to_string(closed));
      rows.emplace_back("mult_" + subscroll_name(sj) + " (oracle)", std::to_string(oracle));
    } else if (a.query == "baselocus") {
      const auto locus = base_locus(scroll, cls);
      const std::string name = locus ? subscroll_name(*locus) : "none";
      j["baselocus"] = locus ? nlohmann::ordered_json(name) : nlohmann::ordered_json(nullptr);
      rows.emplace_back("baselocus", name);
    } else if (a.query == "monomials") {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& m : monomials(scroll, cls)) {
        arr.push_back({{"exponents", m.exponents}, {"coeff_degree", m.coeff_degree}});
        std::string mono;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
          if (i) mono += ' ';
          mono += "x" + std::to_string(i + 1) + "^" + std::to_string(m.exponents[i]);
        }
        rows.emplace_back(mono, std::to_string(m.coeff_degree));
      }
      j["monomials"] = std::move(arr);
    } else {
      throw UsageError("unknown query '" + a.query + "' (expected h0, mult:<j>, baselocus, monomials)");
    }
  } catch (const EmptySystemError& e) {
    throw UsageError(e.what());
  }

  switch (fmt) {
    case OutputFormat::Json: out << j.dump() << '\n'; break;
    case OutputFormat::Csv:
      out << "key,value\n";
      for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
      break;
    case OutputFormat::Table: {
      out << "|" << class_str(cls) << "| on scroll " << scroll.to_string() << '\n';
      TextTable t({a.query == "monomials" ? "monomial" : "quantity", a.query == "monomials" ? "coeff_degree" : "value"});
      for (const auto& [k, v] : rows) t.add_row({k, v});
      t.print(out);
      break;
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------------- chow

struct ChowArgs {
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<std::int64_t>> classes;
};

int cmd_chow(const GlobalOptions& g, const ChowArgs& a, std::ostream& out) {
  const Scroll scroll = scroll_from(a.degrees);
  std::vector<DivisorClass> classes;
  for (const auto& c : a.classes) classes.push_back({c[0], c[1]});
  if (classes.size() != scroll.rank()) {
    throw UsageError("a rank-" + std::to_string(scroll.rank()) + " scroll needs exactly " +
                     std::to_string(scroll.rank()) + " --class arguments, got " + std::to_string(classes.size()));
  }
  const BigInt v = intersection_number(scroll, classes);
  switch (g.output()) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["scroll"] = std::vector<std::int64_t>(scroll.degrees().begin(), scroll.degrees().end());
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : classes) arr.push_back({c.a, c.b});
      j["classes"] = std::move(arr);
      j["intersection"] = big_json(v);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv: out << "intersection\n" << v.str() << '\n'; break;
    case OutputFormat::Table: {
      out << "scroll " << scroll.to_string() << '\n';
      for (std::size_t i = 0; i < classes.size(); ++i) out << (i ? " . " : "") << '(' << class_str(classes[i]) << ')';
      out << " = " << v.str() << '\n';
      break;
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- dp2-check

struct Dp2Args {
  std::string seeds = "1..100";
  std::uint64_t prime = PrimeField::kDefaultPrime;
  bool serial = false;
};

int cmd_dp2(const GlobalOptions& g, const Dp2Args& a, std::ostream& out) {
  std::vector<std::uint64_t> seeds;
  std::optional<PrimeField> field;
  try {
    seeds = parse_seed_list(a.seeds);
    field.emplace(a.prime);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (field->modulus() <= 8) throw UsageError("the field characteristic must exceed 8");

  const auto outcomes = a.serial ? dp2_sweep_serial(seeds, *field) : dp2_sweep_parallel(seeds, *field);
  std::map<std::int64_t, std::uint64_t> histogram;
  std::uint64_t degenerate = 0, nonruled = 0, nongeneric = 0;
  for (const auto& o : outcomes) {
    if (!o.report) {
      ++degenerate;
      continue;
    }
    ++histogram[o.report->mu];
    if (o.report->nonruled) ++nonruled;
    if (!o.report->generic) ++nongeneric;
  }
  const std::uint64_t usable = outcomes.size() - degenerate;

  switch (g.output()) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["prime"] = field->modulus();
      j["seeds"] = outcomes.size();
      j["degenerate"] = degenerate;
      nlohmann::ordered_json hist = nlohmann::ordered_json::object();
      for (const auto& [mu, count] : histogram) hist[std::to_string(mu)] = count;
      j["mu_histogram"] = std::move(hist);
      j["nonruled"] = nonruled;
      j["non_generic"] = nongeneric;
      auto per_seed = nlohmann::ordered_json::array();
      for (const auto& o : outcomes) {
        nlohmann::ordered_json s;
        s["seed"] = o.seed;
        if (o.report) {
          const auto& r = *o.report;
          s["degenerate"] = false;
          s["lambda"] = r.lambda;
          s["mu"] = r.mu;
          s["mu_distinct"] = r.mu_distinct;
          s["xi"] = {r.xi.a, r.xi.b};
          s["two_k_plus_xi"] = {r.two_k_plus_xi.a, r.two_k_plus_xi.b};
          s["effective"] = r.two_k_plus_xi_effective;
          s["nonruled"] = r.nonruled;
          s["generic"] = r.generic;
        } else {
          s["degenerate"] = true;
          s["error"] = o.error;
        }
        per_seed.push_back(std::move(s));
      }
      j["reports"] = std::move(per_seed);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "seed,degenerate,lambda,mu,mu_distinct,xi_a,xi_b,two_k_plus_xi_a,two_k_plus_xi_b,effective,nonruled,generic\n";
      for (const auto& o : outcomes) {
        if (!o.report) {
          out << o.seed << ",true,,,,,,,,,,\n";
          continue;
        }
        const auto& r = *o.report;
        out << o.seed << ",false," << r.lambda << ',' << r.mu << ',' << r.mu_distinct << ',' << r.xi.a << ','
            << r.xi.b << ',' << r.two_k_plus_xi.a << ',' << r.two_k_plus_xi.b << ','
            << bool_str(r.two_k_plus_xi_effective) << ',' << bool_str(r.nonruled) << ',' << bool_str(r.generic)
            << '\n';
      }
      break;
    case OutputFormat::Table: {
      out << "seeds: " << outcomes.size() << " over Z/" << field->modulus() << "Z\n";
      for (const auto& o : outcomes) {
        if (!o.report) {
          out << "seed " << o.seed << ": degenerate (" << o.error << ")\n";
        } else if (!o.report->generic) {
          out << "seed " << o.seed << ": non-generic discriminant (mu=" << o.report->mu
              << ", distinct=" << o.report->mu_distinct << ")\n";
        }
      }
      TextTable t({"mu", "seeds"});
      for (const auto& [mu, count] : histogram) t.add_row({std::to_string(mu), std::to_string(count)});
      t.print(out);
      if (usable > 0) {
        const auto& r = *std::find_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.report.has_value(); })->report;
        out << "lambda = " << r.lambda << ", Xi = " << to_string(r.xi) << " on F_0, 2K + Xi = "
            << to_string(r.two_k_plus_xi) << '\n';
      }
      out << "nonruled: " << nonruled << "/" << usable << " non-degenerate seeds\n";
      break;
    }
  }
  return outcomes.empty() || degenerate == outcomes.size() ? kExitUsage : kExitOk;
}

// ------------------------------------------------------------ picard-check

int cmd_picard(const GlobalOptions& g, std::ostream& out) {
  const CurveSystem sys = reducible_fibre_system();
  const auto subsets = invariant_disjoint_subsets(sys);
  auto names = [&](const std::vector<int>& idx) {
    std::vector<std::string> v;
    for (int i : idx) v.push_back(sys.label(i));
    return v;
  };

  switch (g.output()) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      std::vector<std::string> labels;
      for (int i = 0; i < sys.size(); ++i) labels.push_back(sys.label(i));
      j["curves"] = labels;
      auto orbits = nlohmann::ordered_json::array();
      for (const auto& o : sys.orbits()) orbits.push_back(names(o));
      j["orbits"] = std::move(orbits);
      auto meets = nlohmann::ordered_json::array();
      for (auto [x, y] : sys.edges()) meets.push_back({sys.label(x), sys.label(y)});
      j["meets"] = std::move(meets);
      auto subs = nlohmann::ordered_json::array();
      for (const auto& s : subsets) subs.push_back(names(s));
      j["invariant_disjoint_subsets"] = std::move(subs);
      j["rank_two_verified"] = subsets.empty();
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "subset\n";
      for (const auto& s : subsets) {
        auto n = names(s);
        std::string joined;
        for (const auto& x : n) joined += (joined.empty() ? "" : " ") + x;
        out << joined << '\n';
      }
      break;
    case OutputFormat::Table: {
      out << "orbits:\n";
      for (const auto& o : sys.orbits()) {
        out << "  {";
        const auto n = names(o);
        for (std::size_t i = 0; i < n.size(); ++i) out << (i ? ", " : "") << n[i];
        out << "}\n";
      }
      out << "meeting pairs:\n";
      for (auto [x, y] : sys.edges()) out << "  " << sys.label(x) << " -- " << sys.label(y) << '\n';
      if (subsets.empty()) {
        out << "no invariant disjoint subset; rank-2 combinatorial step verified\n";
      } else {
        out << "invariant disjoint subsets:\n";
        for (const auto& s : subsets) {
          out << " ";
          for (const auto& x : names(s)) out << ' ' << x;
          out << '\n';
        }
      }
      break;
    }
  }
  return kExitOk;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(const std::string& spec) {
  auto parse_u64 = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed seed list '" + spec + "'");
    }
    return std::stoull(s);
  };
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      seeds.push_back(parse_u64(item));
      continue;
    }
    const std::uint64_t lo = parse_u64(item.substr(0, dots));
    const std::uint64_t hi = parse_u64(item.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty seed range '" + item + "'");
    if (hi - lo > 10'000'000) throw std::invalid_argument("seed range too large '" + item + "'");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw std::invalid_argument("empty seed list");
  return seeds;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rationality of cubic surface fibrations on rank-4 scrolls over P^1", "dpfib"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--explain", g.explain, "Print the criteria behind each verdict");

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one family (d1, d2, d3, n)");
  classify_cmd->add_option("values", ca.values, "d1 d2 d3 n")->expected(4)->required();
  classify_cmd->add_flag("--diagnostic", ca.diagnostic, "Compare K_S^2 with the adjunction value on Proj(O(d1)+O(d3)+O)");

  EnumerateArgs ea;
  auto* enum_cmd = app.add_subcommand("enumerate", "Classify every family in a range");
  enum_cmd->add_option("max_d1", ea.max_d1)->required();
  enum_cmd->add_option("n_min", ea.n_min)->required();
  enum_cmd->add_option("n_max", ea.n_max)->required();
  enum_cmd->add_option("--filter", ea.filters, "all | smooth | rational | nonrational | chi=<v> (repeatable, ANDed)");
  enum_cmd->add_flag("--serial", ea.serial, "Use the serial reference kernel");

  LinsysArgs la;
  auto* linsys_cmd = app.add_subcommand("linsys", "Query the linear system |aM + bL| on a scroll");
  linsys_cmd->add_option("degrees", la.degrees, "Scroll degrees (normalized)")->required()->expected(2, 64);
  linsys_cmd->add_option("--class", la.cls, "a b")->expected(2)->required();
  linsys_cmd->add_option("--query", la.query, "h0 | mult:<j> | baselocus | monomials")->required();

  ChowArgs cha;
  auto* chow_cmd = app.add_subcommand("chow", "Intersection number of k divisor classes on a rank-k scroll");
  chow_cmd->add_option("degrees", cha.degrees, "Scroll degrees (normalized)")->required()->expected(2, 64);
  chow_cmd->add_option("--class", cha.classes, "a b (repeat k times)")->expected(2)->required();

  Dp2Args da;
  auto* dp2_cmd = app.add_subcommand("dp2-check", "Discriminant root count for the degree-2 double cover");
  dp2_cmd->add_option("--seeds", da.seeds, "Seed list, e.g. 1..100 or 1,5,9..12");
  dp2_cmd->add_option("--prime", da.prime, "Odd prime for the coefficient field");
  dp2_cmd->add_flag("--serial", da.serial, "Use the serial reference kernel");

  auto* picard_cmd = app.add_subcommand("picard-check", "Galois-invariant disjoint subsets of the ten fibre components");

  std::vector<std::string> argv_store{"dpfib"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dpfib: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(g, ca, out, err);
    if (*enum_cmd) return cmd_enumerate(g, ea, out, err);
    if (*linsys_cmd) return cmd_linsys(g, la, out);
    if (*chow_cmd) return cmd_chow(g, cha, out);
    if (*dp2_cmd) return cmd_dp2(g, da, out);
    if (*picard_cmd) return cmd_picard(g, out);
  } catch (const UsageError& e) {
    err << "dpfib: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dpfib: internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dpfib
