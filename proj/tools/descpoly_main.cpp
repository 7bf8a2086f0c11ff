// descpoly command-line front end. Links only the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "descpoly/descpoly.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr unsigned kDefaultEnumCap = 10;
constexpr unsigned kDefaultVerifyNmax = 8;
constexpr unsigned kDefaultKmax = 8;

enum class Format { Plain, Json, Csv };

struct Globals {
  Format format = Format::Plain;
  std::optional<unsigned> nmax;
  unsigned kmax = kDefaultKmax;
};

// Raised for input problems; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolyHandle {
  descpoly_poly* p = nullptr;
  PolyHandle() = default;
  PolyHandle(const PolyHandle&) = delete;
  PolyHandle& operator=(const PolyHandle&) = delete;
  PolyHandle(PolyHandle&& o) noexcept : p(o.p) { o.p = nullptr; }
  ~PolyHandle() { descpoly_poly_free(p); }
};

struct ListHandle {
  descpoly_polylist* l = nullptr;
  ~ListHandle() { descpoly_polylist_free(l); }
};

struct GfHandle {
  descpoly_gf* g = nullptr;
  ~GfHandle() { descpoly_gf_free(g); }
};

struct ReportHandle {
  descpoly_report* r = nullptr;
  ~ReportHandle() { descpoly_report_free(r); }
};

std::string describe(descpoly_status st) {
  return std::string(descpoly_status_name(st)) + ": " + descpoly_last_error();
}

// A computation that should have succeeded failed; maps to exit code 1.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(descpoly_status st) {
  if (st == DESCPOLY_OK) return;
  if (st == DESCPOLY_E_NEGATIVE_EXPONENT_RESIDUE || st == DESCPOLY_E_INTERNAL) throw CheckFailure(describe(st));
  throw UsageError(describe(st));
}

std::vector<std::string> coeffs(const descpoly_poly* p) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < descpoly_poly_size(p); ++j) out.emplace_back(descpoly_poly_coeff(p, j));
  return out;
}

std::vector<std::vector<std::string>> coeff_grid(const descpoly_polylist* l) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < descpoly_polylist_size(l); ++i) out.push_back(coeffs(descpoly_polylist_at(l, i)));
  return out;
}

std::string render(const std::vector<std::string>& c, char var) {
  std::string out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::string v = c[j];
    if (v == "0") continue;
    const bool negative = v[0] == '-';
    if (negative) v.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (j == 0 || v != "1") out += v;
    if (j >= 1) out += var;
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  auto to_unsigned = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || s[0] == '-') throw UsageError("cannot parse n-range '" + text + "'");
    return static_cast<unsigned>(v);
  };
  for (const std::string sep : {"..", "-", ":"}) {
    auto pos = text.find(sep);
    if (pos != std::string::npos && pos > 0) {
      unsigned lo = to_unsigned(text.substr(0, pos));
      unsigned hi = to_unsigned(text.substr(pos + sep.size()));
      if (lo > hi) throw UsageError("empty n-range '" + text + "'");
      return {lo, hi};
    }
  }
  unsigned v = to_unsigned(text);
  return {v, v};
}

std::vector<int> parse_perm(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != field.size()) throw UsageError("cannot parse permutation entry '" + field + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty permutation");
  return out;
}

// table

struct TableOptions {
  std::string n_range;
  unsigned k = 0;
  std::string route = "rec";
};

PolyHandle compute_bnk(unsigned n, unsigned k, descpoly_route route, unsigned cap) {
  PolyHandle h;
  check(descpoly_bnk(n, k, route, cap, &h.p));
  return h;
}

int cmd_table(const Globals& g, const TableOptions& o) {
  const auto [lo, hi] = parse_range(o.n_range);
  const unsigned cap = g.nmax.value_or(kDefaultEnumCap);
  static const std::map<std::string, descpoly_route> routes{{"enum", DESCPOLY_ROUTE_ENUMERATION},
                                                            {"rec", DESCPOLY_ROUTE_RECURRENCE},
                                                            {"closed", DESCPOLY_ROUTE_CLOSED_FORM}};
  const bool all = o.route == "all";

  struct Row {
    unsigned n;
    std::vector<std::string> values;
    std::optional<bool> agree;
  };
  std::vector<Row> rows;
  bool disagreement = false;
  for (unsigned n = lo; n <= hi; ++n) {
    if (all) {
      PolyHandle e = compute_bnk(n, o.k, DESCPOLY_ROUTE_ENUMERATION, cap);
      PolyHandle r = compute_bnk(n, o.k, DESCPOLY_ROUTE_RECURRENCE, cap);
      PolyHandle c = compute_bnk(n, o.k, DESCPOLY_ROUTE_CLOSED_FORM, cap);
      const bool agree = descpoly_poly_equal(e.p, r.p) && descpoly_poly_equal(r.p, c.p);
      if (!agree) {
        disagreement = true;
        std::cerr << "error: routes disagree for n=" << n << " k=" << o.k << ": enum " << render(coeffs(e.p), 'y')
                  << ", rec " << render(coeffs(r.p), 'y') << ", closed " << render(coeffs(c.p), 'y') << "\n";
      }
      rows.push_back({n, coeffs(r.p), agree});
    } else {
      PolyHandle p = compute_bnk(n, o.k, routes.at(o.route), cap);
      rows.push_back({n, coeffs(p.p), std::nullopt});
    }
  }

  switch (g.format) {
    case Format::Json: {
      ordered_json doc;
      doc["command"] = "table";
      doc["k"] = o.k;
      doc["route"] = o.route;
      doc["rows"] = ordered_json::array();
      for (const auto& row : rows)
        for (std::size_t r = 0; r < row.values.size(); ++r) {
          ordered_json rec;
          rec["n"] = row.n;
          rec["k"] = o.k;
          rec["r"] = r;
          rec["value"] = row.values[r];
          if (row.agree) rec["agree"] = *row.agree;
          doc["rows"].push_back(std::move(rec));
        }
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "n,k,r,value" << (all ? ",agree" : "") << "\n";
      for (const auto& row : rows)
        for (std::size_t r = 0; r < row.values.size(); ++r) {
          std::cout << row.n << ',' << o.k << ',' << r << ',' << row.values[r];
          if (row.agree) std::cout << ',' << (*row.agree ? "true" : "false");
          std::cout << "\n";
        }
      break;
    case Format::Plain:
      for (const auto& row : rows) {
        std::cout << "B_{" << row.n << "," << o.k << "}(y) = " << render(row.values, 'y');
        if (row.agree) std::cout << (*row.agree ? "    [enum = rec = closed]" : "    [ROUTES DISAGREE]");
        std::cout << "\n";
      }
      break;
  }
  return disagreement ? kExitVerifyFailed : kExitOk;
}

// poly

struct PolyOptions {
  unsigned k = 0;
  std::string which = "P";
  std::string construction = "formula";
};

int cmd_poly(const Globals& g, const PolyOptions& o) {
  if (o.k > g.kmax)
    throw UsageError("k = " + std::to_string(o.k) + " exceeds --kmax " + std::to_string(g.kmax));
  const descpoly_which which = o.which == "PP" ? DESCPOLY_WHICH_PP : DESCPOLY_WHICH_P;
  static const std::vector<std::pair<std::string, descpoly_construction>> known{
      {"formula", DESCPOLY_CONSTRUCTION_FORMULA},
      {"stretch", DESCPOLY_CONSTRUCTION_STRETCH},
      {"duplication", DESCPOLY_CONSTRUCTION_DUPLICATION}};

  std::vector<std::pair<std::string, PolyHandle>> built;
  for (const auto& [name, c] : known) {
    if (o.construction != "all" && o.construction != name) continue;
    // The recursive constructions start from P_1.
    if (o.construction == "all" && o.k == 0 && c != DESCPOLY_CONSTRUCTION_FORMULA) continue;
    PolyHandle h;
    check(descpoly_pk(o.k, which, c, &h.p));
    built.emplace_back(name, std::move(h));
  }
  bool agree = true;
  for (const auto& entry : built) agree = agree && descpoly_poly_equal(entry.second.p, built.front().second.p);
  if (!agree) std::cerr << "error: constructions of " << o.which << "_" << o.k << " disagree\n";
  const auto first = coeffs(built.front().second.p);

  switch (g.format) {
    case Format::Json: {
      ordered_json doc;
      doc["command"] = "poly";
      doc["k"] = o.k;
      doc["which"] = o.which;
      doc["construction"] = o.construction;
      doc["coefficients"] = first;
      if (o.construction == "all") {
        ordered_json each;
        for (const auto& [name, h] : built) each[name] = coeffs(h.p);
        doc["constructions"] = std::move(each);
        doc["agree"] = agree;
      }
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "k,which,construction,power,value\n";
      for (const auto& [name, h] : built) {
        const auto c = coeffs(h.p);
        for (std::size_t j = 0; j < c.size(); ++j)
          std::cout << o.k << ',' << o.which << ',' << name << ',' << j << ',' << c[j] << "\n";
      }
      break;
    case Format::Plain:
      for (const auto& [name, h] : built) {
        const auto c = coeffs(h.p);
        std::cout << o.which << "_" << o.k << "(u) = " << render(c, 'u') << "    [" << name << "]\n";
      }
      std::cout << "coefficients:";
      for (const auto& v : first) std::cout << ' ' << v;
      std::cout << "\n";
      if (o.construction == "all") std::cout << (agree ? "constructions agree\n" : "CONSTRUCTIONS DISAGREE\n");
      break;
  }
  return agree ? kExitOk : kExitVerifyFailed;
}

// gf

struct GfOptions {
  unsigned k = 0;
  unsigned order = 10;
};

int cmd_gf(const Globals& g, const GfOptions& o) {
  if (o.k > g.kmax)
    throw UsageError("k = " + std::to_string(o.k) + " exceeds --kmax " + std::to_string(g.kmax));
  GfHandle gf;
  check(descpoly_gf_build(o.k, &gf.g));
  ListHandle series;
  check(descpoly_gf_series(gf.g, o.order, &series.l));
  const auto num = coeff_grid(descpoly_gf_numerator(gf.g));
  const auto den = coeff_grid(descpoly_gf_denominator(gf.g));
  const auto ser = coeff_grid(series.l);

  switch (g.format) {
    case Format::Json: {
      ordered_json doc;
      doc["command"] = "gf";
      doc["k"] = o.k;
      doc["order"] = o.order;
      doc["numerator"] = num;
      doc["denominator"] = den;
      doc["series"] = ser;
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      std::cout << "part,z,y,value\n";
      auto emit = [](const char* part, const std::vector<std::vector<std::string>>& grid) {
        for (std::size_t z = 0; z < grid.size(); ++z)
          for (std::size_t y = 0; y < grid[z].size(); ++y)
            std::cout << part << ',' << z << ',' << y << ',' << grid[z][y] << "\n";
      };
      emit("numerator", num);
      emit("denominator", den);
      emit("series", ser);
      break;
    }
    case Format::Plain: {
      auto emit = [](const char* label, const std::vector<std::vector<std::string>>& grid) {
        std::cout << label << ":\n";
        for (std::size_t z = 0; z < grid.size(); ++z)
          std::cout << "  z^" << z << ": " << render(grid[z], 'y') << "\n";
      };
      emit("numerator", num);
      emit("denominator", den);
      std::cout << "series:\n";
      for (std::size_t n = 0; n < ser.size(); ++n)
        std::cout << "  B_{" << n << "," << o.k << "}(y) = " << render(ser[n], 'y') << "\n";
      break;
    }
  }
  return kExitOk;
}

// juggle

struct JuggleOptions {
  std::string perm;
  unsigned k = 0;
};

int cmd_juggle(const Globals& g, const JuggleOptions& o) {
  const std::vector<int> perm = parse_perm(o.perm);
  const std::size_t n = perm.size();
  std::vector<std::int64_t> throws(n);
  check(descpoly_phi(perm.data(), n, o.k, throws.data()));
  int valid = 0;
  check(descpoly_juggle_is_valid(throws.data(), n, &valid));
  std::int64_t balls = 0;
  check(descpoly_juggle_ball_count(throws.data(), n, &balls));

  std::optional<std::vector<std::int64_t>> fk;
  std::optional<std::vector<int>> sorted;
  std::string crosscheck = "n/a";
  if (o.k >= 1) {
    fk.emplace(n);
    check(descpoly_fk_transform(throws.data(), n, fk->data()));
    sorted.emplace(n);
    check(descpoly_bsort_pass(perm.data(), n, sorted->data()));
    std::vector<std::int64_t> expected(n);
    check(descpoly_phi(sorted->data(), n, o.k - 1, expected.data()));
    crosscheck = expected == *fk ? "ok" : "mismatch";
  }

  auto join = [](const auto& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
  };
  switch (g.format) {
    case Format::Json: {
      ordered_json doc;
      doc["command"] = "juggle";
      doc["perm"] = perm;
      doc["k"] = o.k;
      doc["throws"] = throws;
      doc["valid"] = valid != 0;
      doc["balls"] = balls;
      doc["fk"] = fk ? ordered_json(*fk) : ordered_json(nullptr);
      doc["bsort"] = sorted ? ordered_json(*sorted) : ordered_json(nullptr);
      doc["crosscheck"] = crosscheck;
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "i,pi,throw,fk_throw,bsort_pi\n";
      for (std::size_t i = 0; i < n; ++i) {
        std::cout << i + 1 << ',' << perm[i] << ',' << throws[i] << ',';
        if (fk) std::cout << (*fk)[i];
        std::cout << ',';
        if (sorted) std::cout << (*sorted)[i];
        std::cout << "\n";
      }
      break;
    case Format::Plain:
      std::cout << "phi(" << join(perm) << "; k=" << o.k << ") = (" << join(throws) << ")\n";
      std::cout << "valid: " << (valid ? "yes" : "no") << "\n";
      std::cout << "balls: " << balls << "\n";
      if (fk) {
        std::cout << "f_k image: (" << join(*fk) << ")\n";
        std::cout << "bsort: " << join(*sorted) << "\n";
      }
      std::cout << "crosscheck: " << crosscheck << "\n";
      break;
  }
  return crosscheck == "mismatch" ? kExitVerifyFailed : kExitOk;
}

// verify

struct VerifyOptions {
  std::string suite = "all";
};

int cmd_verify(const Globals& g, const VerifyOptions& o) {
  static const std::map<std::string, descpoly_suite> suites{
      {"identities", DESCPOLY_SUITE_IDENTITIES}, {"routes", DESCPOLY_SUITE_ROUTES},
      {"bijections", DESCPOLY_SUITE_BIJECTIONS}, {"juggling", DESCPOLY_SUITE_JUGGLING},
      {"structure", DESCPOLY_SUITE_STRUCTURE},   {"all", DESCPOLY_SUITE_ALL}};
  const unsigned nmax = g.nmax.value_or(kDefaultVerifyNmax);
  ReportHandle report;
  check(descpoly_verify(suites.at(o.suite), nmax, g.kmax, &report.r));
  const std::size_t count = descpoly_report_size(report.r);
  const bool passed = descpoly_report_all_passed(report.r) != 0;

  switch (g.format) {
    case Format::Json: {
      ordered_json doc;
      doc["command"] = "verify";
      doc["suite"] = o.suite;
      doc["nmax"] = nmax;
      doc["kmax"] = g.kmax;
      doc["passed"] = passed;
      doc["checks"] = ordered_json::array();
      for (std::size_t i = 0; i < count; ++i) {
        ordered_json c;
        c["suite"] = descpoly_report_suite(report.r, i);
        c["claim"] = descpoly_report_claim(report.r, i);
        c["passed"] = descpoly_report_passed(report.r, i) != 0;
        c["cases"] = descpoly_report_cases(report.r, i);
        c["counterexample"] = descpoly_report_counterexample(report.r, i);
        doc["checks"].push_back(std::move(c));
      }
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "suite,claim,passed,cases,counterexample\n";
      for (std::size_t i = 0; i < count; ++i)
        std::cout << descpoly_report_suite(report.r, i) << ',' << csv_field(descpoly_report_claim(report.r, i)) << ','
                  << (descpoly_report_passed(report.r, i) ? "true" : "false") << ','
                  << descpoly_report_cases(report.r, i) << ','
                  << csv_field(descpoly_report_counterexample(report.r, i)) << "\n";
      break;
    case Format::Plain: {
      std::size_t ok = 0;
      for (std::size_t i = 0; i < count; ++i) {
        const bool p = descpoly_report_passed(report.r, i) != 0;
        ok += p ? 1 : 0;
        std::cout << (p ? "PASS " : "FAIL ") << "[" << descpoly_report_suite(report.r, i) << "] "
                  << descpoly_report_claim(report.r, i) << " (" << descpoly_report_cases(report.r, i)
                  << " cases)\n";
        if (!p) std::cout << "     counterexample: " << descpoly_report_counterexample(report.r, i) << "\n";
      }
      std::cout << ok << "/" << count << " checks passed (nmax=" << nmax << ", kmax=" << g.kmax << ")\n";
      break;
    }
  }
  return passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent polynomials of permutations with bounded maximum drop"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::map<std::string, Format> formats{{"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("plain");
  app.add_option("--nmax", g.nmax, "Enumeration cap (table, default 10) or exhaustive bound (verify, default 8)");
  app.add_option("--kmax", g.kmax, "Cap on k for poly/gf and bound for polynomial checks")->default_val(kDefaultKmax);

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Rows (n, k, r, b_{n,k}(r))");
  table_cmd->add_option("--n", table.n_range, "n or a range lo..hi")->required();
  table_cmd->add_option("--k", table.k, "maximum drop")->required();
  table_cmd->add_option("--route", table.route, "enum | rec | closed | all")
      ->check(CLI::IsMember({"enum", "rec", "closed", "all"}))
      ->default_val("rec");

  PolyOptions poly;
  auto* poly_cmd = app.add_subcommand("poly", "Coefficients of P_k(u) or its stretch PP_k(u)");
  poly_cmd->add_option("--k", poly.k)->required();
  poly_cmd->add_option("--which", poly.which, "P | PP")->check(CLI::IsMember({"P", "PP"}))->default_val("P");
  poly_cmd->add_option("--construction", poly.construction, "formula | stretch | duplication | all")
      ->check(CLI::IsMember({"formula", "stretch", "duplication", "all"}))
      ->default_val("formula");

  GfOptions gf;
  auto* gf_cmd = app.add_subcommand("gf", "Generating function and its series coefficients");
  gf_cmd->add_option("--k", gf.k)->required();
  gf_cmd->add_option("--order", gf.order, "highest z-power of the series")->default_val(10);

  JuggleOptions juggle;
  auto* juggle_cmd = app.add_subcommand("juggle", "Juggling sequence of a permutation and its f_k image");
  juggle_cmd->add_option("--perm", juggle.perm, "comma-separated values, e.g. 3,2,1")->required();
  juggle_cmd->add_option("--k", juggle.k)->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", verify.suite, "identities | routes | bijections | juggling | structure | all")
      ->check(CLI::IsMember({"identities", "routes", "bijections", "juggling", "structure", "all"}))
      ->default_val("all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(g, table);
    if (*poly_cmd) return cmd_poly(g, poly);
    if (*gf_cmd) return cmd_gf(g, gf);
    if (*juggle_cmd) return cmd_juggle(g, juggle);
    if (*verify_cmd) return cmd_verify(g, verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
