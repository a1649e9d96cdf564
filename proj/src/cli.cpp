#include "vvmf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"

#include "vvmf/mde.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/reps.hpp"
#include "vvmf/serialize.hpp"
#include "vvmf/valuation.hpp"

namespace vvmf::cli {

namespace {

enum class Format { Json, Csv, Table };

struct CommandConfig {
  std::string format;
  std::string output;
  std::string triple;
  int terms = -1;
  std::int64_t prime = 0;
  std::int64_t level = 0;
  std::int64_t level_max = 0;
  bool verify = false;
  int weight = 0;
  Gamma02Character g02;
  Gamma3Character g3;
};

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw InputError(ErrorCode::ParseError, "unknown format '" + text + "' (json, csv, table)");
}

RepTriple parse_triple(const std::string& text) {
  std::vector<std::int64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(ErrorCode::ParseError, "bad integer '" + item + "' in --triple");
    }
  }
  if (parts.size() != 4) {
    throw InputError(ErrorCode::ParseError, "--triple expects A,B,C,N, got '" + text + "'");
  }
  return validate_triple(parts[0], parts[1], parts[2], parts[3]);
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string triple_label(const RepTriple& t) {
  return "(" + std::to_string(t.A()) + "," + std::to_string(t.B()) + "," + std::to_string(t.C()) +
         "; " + std::to_string(t.N()) + ")";
}

void series_table(std::ostream& os, const std::string& name, const QExpansion& f) {
  os << name << "  q^" << f.exponent().str() << " * (\n";
  for (int n = 0; n <= f.order(); ++n) {
    os << "  " << std::setw(5) << n << "  " << f[n].str() << '\n';
  }
  os << ")\n";
}

void series_csv_rows(std::ostream& os, const std::string& name, const QExpansion& f) {
  for (int n = 0; n <= f.order(); ++n) {
    os << name << ',' << f.exponent().str() << ',' << n << ',' << f[n].str() << '\n';
  }
}

struct Outcome {
  std::string text;
  int code = kExitOk;
};

Outcome cmd_coeffs(const CommandConfig& cfg, Format fmt) {
  const RepTriple t = parse_triple(cfg.triple);
  const int terms = cfg.terms < 0 ? 10 : cfg.terms;
  const MDESystem sys = build_mde(t, terms);
  const MinimalVector f0 = minimal_vector(sys, terms);
  std::ostringstream os;
  if (fmt == Format::Json) {
    os << coefficients_json(sys, f0).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    os << "component,exponent,n,coefficient\n";
    for (int i = 0; i < 3; ++i) series_csv_rows(os, std::to_string(i), f0.components[i]);
  } else {
    os << "triple " << triple_label(t) << "  k0 = " << sys.k0 << "  alpha4 = " << sys.alpha4.str()
       << "  alpha6 = " << sys.alpha6.str() << '\n';
    const char* names[] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) series_table(os, names[i], f0.components[i]);
  }
  return {os.str()};
}

Outcome cmd_params(const CommandConfig& cfg, Format fmt) {
  const RepTriple t = parse_triple(cfg.triple);
  const MDESystem sys = build_mde(t, cfg.terms < 0 ? 5 : cfg.terms);
  std::ostringstream os;
  if (fmt == Format::Json) {
    os << parameters_json(sys).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    os << "key,value\n";
    os << "k0," << sys.k0 << "\nx0," << sys.x0.get_str() << "\nx4," << sys.x4.get_str()
       << "\nx6," << sys.x6.get_str() << "\nalpha4," << sys.alpha4.str() << "\nalpha6,"
       << sys.alpha6.str() << '\n';
    for (int n = 0; n <= sys.order(); ++n) {
      os << "G0(" << n << ")," << sys.g0[n].str() << "\nG1(" << n << ")," << sys.g1[n].str()
         << "\nG2(" << n << ")," << sys.g2[n].str() << '\n';
    }
  } else {
    os << "triple " << triple_label(t) << "\n  k0 = " << sys.k0 << "\n  x0 = " << sys.x0.get_str()
       << "\n  x4 = " << sys.x4.get_str() << "\n  x6 = " << sys.x6.get_str()
       << "\n  alpha4 = " << sys.alpha4.str() << "\n  alpha6 = " << sys.alpha6.str() << '\n';
    os << "  n  G2(n)  G1(n)  G0(n)\n";
    for (int n = 0; n <= sys.order(); ++n) {
      os << "  " << n << "  " << sys.g2[n].str() << "  " << sys.g1[n].str() << "  "
         << sys.g0[n].str() << '\n';
    }
  }
  return {os.str()};
}

Outcome cmd_valuations(const CommandConfig& cfg, Format fmt) {
  const RepTriple t = parse_triple(cfg.triple);
  if (cfg.prime == 0) throw InputError(ErrorCode::InvalidArgument, "--prime is required");
  const ValuationReport r = verify_formula(t, cfg.prime, cfg.terms < 0 ? kDefaultFormulaTerms : cfg.terms);
  std::ostringstream os;
  if (fmt == Format::Json) {
    os << to_json(r).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    os << report_csv(r);
  } else {
    const PrimeCase& pc = r.prime_case;
    os << "triple " << triple_label(t) << "  p = " << r.p << "  case "
       << (pc.case_id ? pc.case_label : std::string("not covered"));
    if (pc.covered()) os << "  delta = " << pc.delta << (pc.hypothesis ? "" : "  (hypothesis fails)");
    os << "\ncomponent exponent " << t.root(r.labeling.slot).str() << "\n     n  observed  predicted\n";
    for (const auto& row : r.rows) {
      os << std::setw(6) << row.n << std::setw(10) << row.observed.str() << std::setw(11)
         << (row.predicted ? std::to_string(*row.predicted) : std::string("-")) << '\n';
    }
    os << "verdict: " << verdict_name(r.verdict) << '\n';
  }
  const bool predicted = !r.rows.empty() && r.rows.front().predicted.has_value();
  return {os.str(), predicted && !r.all_rows_match ? kExitVerificationFailed : kExitOk};
}

Outcome cmd_classify(const CommandConfig& cfg, Format fmt) {
  const RepTriple t = parse_triple(cfg.triple);
  const Classification c = classify_triple(t);
  std::ostringstream os;
  if (fmt == Format::Json) {
    os << to_json(t, c).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    os << "A,B,C,N,k0,congruence_by_small_level,primitive_level7,gamma02_pattern,ubd_primes\n"
       << t.A() << ',' << t.B() << ',' << t.C() << ',' << t.N() << ',' << t.k0() << ','
       << c.congruence_by_small_level << ',' << c.primitive_level7 << ','
       << (c.gamma02_pattern ? std::to_string(*c.gamma02_pattern) : "") << ','
       << join(c.ubd_primes, ";") << '\n';
  } else {
    os << "triple " << triple_label(t) << "  k0 = " << t.k0() << '\n'
       << "  congruence by small level: " << (c.congruence_by_small_level ? "yes" : "no") << '\n'
       << "  primitive level 7:         " << (c.primitive_level7 ? "yes" : "no") << '\n'
       << "  Gamma_0(2) pattern M:      "
       << (c.gamma02_pattern ? std::to_string(*c.gamma02_pattern) : "-") << '\n'
       << "  ubd primes:                [" << join(c.ubd_primes, ", ") << "]\n";
    for (const auto& n : c.notes) os << "  note: " << n << '\n';
  }
  return {os.str()};
}

struct ScanRow {
  RepTriple triple;
  Classification cls;
  std::string verdict;
  bool verification_failed = false;
};

ScanRow scan_one(const RepTriple& t, bool verify, int terms) {
  ScanRow row{t, classify_triple(t), "open"};
  if (row.cls.congruence_by_small_level) {
    row.verdict = "bounded-congruence";
  } else if (row.cls.primitive_level7) {
    row.verdict = "bounded-asserted";
  } else if (!row.cls.ubd_primes.empty()) {
    row.verdict = "ubd-certified";
    if (verify) {
      bool ok = true;
      for (auto p : row.cls.ubd_primes) {
        ok = ok && verify_formula(t, p, terms).verdict == Verdict::FormulaVerified;
      }
      row.verdict = ok ? "ubd-verified" : "ubd-verification-failed";
      row.verification_failed = !ok;
    }
  }
  return row;
}

Outcome cmd_scan(const CommandConfig& cfg, Format fmt) {
  if (cfg.level < 1) throw InputError(ErrorCode::InvalidArgument, "--level must be >= 1");
  const std::int64_t hi = cfg.level_max > 0 ? cfg.level_max : cfg.level;
  if (hi < cfg.level) throw InputError(ErrorCode::InvalidArgument, "--level-max below --level");
  std::vector<RepTriple> triples;
  for (std::int64_t n = cfg.level; n <= hi; ++n) {
    auto level = enumerate_level(n);
    triples.insert(triples.end(), level.begin(), level.end());
  }
  const int terms = cfg.terms < 0 ? kDefaultFormulaTerms : cfg.terms;
  std::vector<std::optional<ScanRow>> rows(triples.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < triples.size(); ++i) rows[i] = scan_one(triples[i], cfg.verify, terms);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a->triple < b->triple; });

  bool failed = false;
  std::ostringstream os;
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = to_json(r->triple);
      j["ubd_primes"] = r->cls.ubd_primes;
      j["verdict"] = r->verdict;
      arr.push_back(std::move(j));
      failed = failed || r->verification_failed;
    }
    os << arr.dump(2) << '\n';
  } else {
    if (fmt == Format::Csv) os << "A,B,C,N,k0,ubd_primes,verdict\n";
    for (const auto& r : rows) {
      const RepTriple& t = r->triple;
      failed = failed || r->verification_failed;
      if (fmt == Format::Csv) {
        os << t.A() << ',' << t.B() << ',' << t.C() << ',' << t.N() << ',' << t.k0() << ','
           << join(r->cls.ubd_primes, ";") << ',' << r->verdict << '\n';
      } else {
        os << std::left << std::setw(20) << triple_label(t) << " k0=" << std::setw(4) << t.k0()
           << " ubd=[" << join(r->cls.ubd_primes, ",") << "]  " << r->verdict << '\n';
      }
    }
  }
  return {os.str(), failed ? kExitVerificationFailed : kExitOk};
}

Outcome family_output(const FamilyResult& r, std::string_view name, Format fmt) {
  std::ostringstream os;
  const RepTriple& t = r.triple;
  if (fmt == Format::Json) {
    os << to_json(r, name).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    os << "family,A,B,C,N,formula_level,finite_image_M\n"
       << name << ',' << t.A() << ',' << t.B() << ',' << t.C() << ',' << t.N() << ','
       << r.formula_level << ',' << (r.finite_image_M ? std::to_string(*r.finite_image_M) : "")
       << '\n';
  } else {
    os << name << " -> triple " << triple_label(t) << "  k0 = " << t.k0() << "\n  exponents:";
    for (const auto& e : r.eigen_exponents) os << ' ' << e.str();
    os << "\n  formula level: " << r.formula_level
       << "\n  relation exponent: " << r.presentation_check.str()
       << "\n  finite-image pattern M: "
       << (r.finite_image_M ? std::to_string(*r.finite_image_M) : "-") << '\n';
  }
  return {os.str()};
}

Outcome cmd_eisenstein(const CommandConfig& cfg, Format fmt) {
  const QExpansion e = eisenstein(cfg.weight, cfg.terms < 0 ? 10 : cfg.terms);
  std::ostringstream os;
  if (fmt == Format::Json) {
    os << to_json(e).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    os << "n,coefficient\n";
    for (int n = 0; n <= e.order(); ++n) os << n << ',' << e[n].str() << '\n';
  } else {
    series_table(os, "E" + std::to_string(cfg.weight), e);
  }
  return {os.str()};
}

Outcome cmd_basis(const CommandConfig& cfg, Format fmt) {
  const RepTriple t = parse_triple(cfg.triple);
  const int terms = cfg.terms < 0 ? 5 : cfg.terms;
  const MDESystem sys = build_mde(t, terms);
  const MinimalVector f0 = minimal_vector(sys, terms);
  const DerivedBasis basis = derived_basis(sys, f0, terms);
  std::ostringstream os;
  if (fmt == Format::Json) {
    os << basis_json(sys, f0, basis).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    os << "series,exponent,n,coefficient\n";
    for (int i = 0; i < 3; ++i) {
      series_csv_rows(os, "F0[" + std::to_string(i) + "]", f0.components[i]);
      series_csv_rows(os, "DF0[" + std::to_string(i) + "]", basis.DF0[i]);
      series_csv_rows(os, "D2F0[" + std::to_string(i) + "]", basis.D2F0[i]);
    }
    os << "det_B,,," << basis.det.str() << '\n';
  } else {
    os << "triple " << triple_label(t) << "  k0 = " << sys.k0 << "\nB =\n";
    for (const auto& row : basis.B) {
      os << "  [";
      for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << row[j].str();
      os << "]\n";
    }
    os << "det(B) = " << basis.det.str() << '\n';
    for (int i = 0; i < 3; ++i) {
      series_table(os, "F0[" + std::to_string(i) + "]", f0.components[i]);
      series_table(os, "DF0[" + std::to_string(i) + "]", basis.DF0[i]);
      series_table(os, "D2F0[" + std::to_string(i) + "]", basis.D2F0[i]);
    }
  }
  return {os.str()};
}

Outcome cmd_profile(const CommandConfig& cfg, Format fmt) {
  const RepTriple t = parse_triple(cfg.triple);
  const int terms = cfg.terms < 0 ? 200 : cfg.terms;
  const MinimalVector f0 = minimal_vector(build_mde(t, terms), terms);
  const auto hints = recursion_prime_hints(t, terms);
  std::ostringstream os;
  Json arr = Json::array();
  if (fmt == Format::Csv) os << "component,p,min_valuation,argmin,strictly_decreasing,verdict\n";
  for (int i = 0; i < 3; ++i) {
    const DenominatorProfile prof = denominator_profile(f0.components[i], terms, hints);
    if (fmt == Format::Json) {
      Json j = to_json(prof);
      j["component"] = i;
      j["exponent"] = f0.components[i].exponent().str();
      arr.push_back(std::move(j));
    } else if (fmt == Format::Csv) {
      for (const auto& pp : prof.primes) {
        os << i << ',' << pp.p << ',' << pp.min_valuation << ',' << pp.argmin << ','
           << pp.strictly_decreasing << ',' << profile_verdict_name(prof.verdict) << '\n';
      }
    } else {
      os << "component " << i << " (q^" << f0.components[i].exponent().str()
         << "): " << profile_verdict_name(prof.verdict) << '\n';
      for (const auto& pp : prof.primes) {
        os << "  p=" << pp.p << "  min nu=" << pp.min_valuation << " at n=" << pp.argmin
           << (pp.strictly_decreasing ? "  strictly decreasing" : "") << '\n';
      }
    }
  }
  if (fmt == Format::Json) os << arr.dump(2) << '\n';
  return {os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimal-weight vectors, p-adic valuations and level scans",
               "vvmf"};
  app.require_subcommand(1);
  app.fallthrough();
  CommandConfig cfg;
  const char* env_format = std::getenv(kFormatEnvVar);
  cfg.format = env_format ? env_format : "table";
  app.add_option("--format", cfg.format, "Output format: json, csv or table")->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");

  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("--triple", cfg.triple, "Exponents and level as A,B,C,N")->required();
  };
  auto add_terms = [&](CLI::App* sub) {
    sub->add_option("--terms,-T", cfg.terms, "Number of coefficients beyond the leading one");
  };

  auto* coeffs = app.add_subcommand("coeffs", "Minimal weight vector F0");
  add_triple(coeffs);
  add_terms(coeffs);
  auto* params = app.add_subcommand("params", "k0, x_j, alpha4, alpha6 and the ODE coefficient series");
  add_triple(params);
  add_terms(params);
  auto* vals = app.add_subcommand("valuations", "Observed vs predicted p-adic valuations");
  add_triple(vals);
  add_terms(vals);
  vals->add_option("--prime,-p", cfg.prime, "Prime dividing N")->required();
  auto* classify = app.add_subcommand("classify", "Classification flags and ubd primes");
  add_triple(classify);
  auto* scan = app.add_subcommand("scan", "Enumerate admissible triples with a verdict each");
  scan->add_option("--level", cfg.level, "Level N (or first level of a range)")->required();
  scan->add_option("--level-max", cfg.level_max, "Last level of the range");
  scan->add_flag("--verify", cfg.verify, "Run the valuation law check for every ubd prime");
  add_terms(scan);
  auto* family = app.add_subcommand("family", "Triples induced from index-3 subgroups");
  family->require_subcommand(1);
  family->fallthrough();
  auto* g02 = family->add_subcommand("gamma02", "Characters of Gamma_0(2)");
  g02->add_option("--M", cfg.g02.M, "Order of the cusp eigenvalue")->required();
  g02->add_option("--A", cfg.g02.A, "Numerator, gcd(A, M) = 1")->required();
  g02->add_option("--x", cfg.g02.x, "chi(E) = e(x/4)")->required();
  auto* g3 = family->add_subcommand("gamma3", "Characters of Gamma^3");
  g3->add_option("--x0", cfg.g3.x0)->required();
  g3->add_option("--x1", cfg.g3.x1)->required();
  g3->add_option("--x2", cfg.g3.x2)->required();
  auto* eis = app.add_subcommand("eisenstein", "Normalized Eisenstein series");
  eis->add_option("--weight,-k", cfg.weight, "Even weight >= 2")->required();
  add_terms(eis);
  auto* basis = app.add_subcommand("basis", "F0, DF0, D^2F0 and the leading coefficient matrix");
  add_triple(basis);
  add_terms(basis);
  auto* profile = app.add_subcommand("profile", "Per-prime denominator statistics of F0");
  add_triple(profile);
  add_terms(profile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    const Format fmt = parse_format(cfg.format);
    Outcome result;
    if (coeffs->parsed()) result = cmd_coeffs(cfg, fmt);
    else if (params->parsed()) result = cmd_params(cfg, fmt);
    else if (vals->parsed()) result = cmd_valuations(cfg, fmt);
    else if (classify->parsed()) result = cmd_classify(cfg, fmt);
    else if (scan->parsed()) result = cmd_scan(cfg, fmt);
    else if (g02->parsed()) result = family_output(gamma02_family(cfg.g02), "gamma02", fmt);
    else if (g3->parsed()) result = family_output(gamma3_family(cfg.g3), "gamma3", fmt);
    else if (eis->parsed()) result = cmd_eisenstein(cfg, fmt);
    else if (basis->parsed()) result = cmd_basis(cfg, fmt);
    else if (profile->parsed()) result = cmd_profile(cfg, fmt);

    if (cfg.output.empty()) {
      out << result.text;
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw InputError(ErrorCode::InvalidArgument, "cannot open " + cfg.output);
      file << result.text;
    }
    if (result.code == kExitVerificationFailed) {
      err << "verification failed: the predicted valuation law was not confirmed\n";
    }
    return result.code;
  } catch (const InputError& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace vvmf::cli
