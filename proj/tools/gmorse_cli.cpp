// gmorse command-line front end. Links the C API only.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmorse.h"
#include "tables_data.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------------
// run configuration

struct RunConfig {
  std::string mode = "spin";      // spin | pseudospin | nonrel
  std::string potential = "gmp";  // gmp | kratzer
  double D = 15.0, alpha = 0.1, re = 0.4;
  double M = 1.0, Cs = 0.0, Cps = 0.0, mu = 1.0;
  double d0 = -1.0; // < 0: library default
  std::vector<std::string> states;
  std::string output = "csv"; // csv | json
};

gmorse_symmetry parse_mode(const std::string &mode) {
  if (mode == "spin")
    return GMORSE_SPIN;
  if (mode == "pseudospin")
    return GMORSE_PSEUDOSPIN;
  if (mode == "nonrel")
    return GMORSE_NONREL;
  throw CLI::ValidationError("--mode", "expected spin|pseudospin|nonrel");
}

gmorse_potential parse_potential(const std::string &pot) {
  if (pot == "gmp")
    return GMORSE_GMP;
  if (pot == "kratzer")
    return GMORSE_KRATZER;
  throw CLI::ValidationError("--potential", "expected gmp|kratzer");
}

gmorse_model *make_model(const RunConfig &cfg, gmorse_symmetry sym) {
  gmorse_model *m = gmorse_model_new();
  if (!m)
    throw std::runtime_error("out of memory");
  if (gmorse_set_potential(m, cfg.D, cfg.alpha, cfg.re) != GMORSE_OK)
    throw std::runtime_error(std::string("bad potential parameters: ") + gmorse_last_error());
  gmorse_set_mass(m, cfg.M);
  gmorse_set_symmetry_constant(m, sym == GMORSE_PSEUDOSPIN ? cfg.Cps : cfg.Cs);
  gmorse_set_reduced_mass(m, cfg.mu);
  if (cfg.d0 >= 0)
    gmorse_set_d0(m, cfg.d0);
  return m;
}

// ---------------------------------------------------------------------------
// deterministic numeric formatting: 7 decimals for relativistic energies,
// 6 significant digits for non-relativistic ones (the reference tables'
// printing), exponent form for diagnostics

std::string fmt_rel(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.7f", v);
  return b;
}
std::string fmt_nonrel(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.6g", v);
  return b;
}
std::string fmt_diag(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.6e", v);
  return b;
}

/// A value plus its canonical rendering; JSON carries the reparsed rendering
/// so both encodings hold identical payloads.
struct Cell {
  std::string text;
  json value;

  static Cell str(std::string s) { return {s, json(s)}; }
  static Cell num(double v, std::string (*fmt)(double)) {
    const std::string t = fmt(v);
    return {t, json(std::stod(t))};
  }
  static Cell integer(int v) { return {std::to_string(v), json(v)}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  json meta = json::object();

  void emit(const std::string &format) const {
    if (format == "json") {
      json out;
      out["meta"] = meta;
      out["rows"] = json::array();
      for (const auto &row : rows) {
        json r = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i)
          r[columns[i]] = row[i].value;
        out["rows"].push_back(std::move(r));
      }
      std::printf("%s\n", out.dump(2).c_str());
      return;
    }
    std::string header;
    for (std::size_t i = 0; i < columns.size(); ++i)
      header += (i ? "," : "") + columns[i];
    std::printf("%s\n", header.c_str());
    for (const auto &row : rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i)
        line += (i ? "," : "") + row[i].text;
      std::printf("%s\n", line.c_str());
    }
  }
};

// ---------------------------------------------------------------------------
// embedded reference tables

struct T3Row {
  std::string state;
  int n, l;
  double alpha, re, reference, ls;
};
struct T4Row {
  std::string state;
  int n, l;
  double re, reference;
};
struct T5Row {
  double alpha, re;
  int n, kappa;
  double reference;
};
struct T6Row {
  double alpha, re, cps;
  int n, kappa;
  double reference;
};

std::vector<std::vector<std::string>> parse_csv(const char *text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  bool header_skipped = false;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    if (!header_skipped) {
      header_skipped = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ','))
      fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

const std::vector<T3Row> &table3_rows() {
  static const auto rows = [] {
    std::vector<T3Row> out;
    for (const auto &f : parse_csv(tables::kTable3Csv))
      out.push_back({f[0], std::stoi(f[1]), std::stoi(f[2]), std::stod(f[3]), std::stod(f[4]),
                     std::stod(f[5]), std::stod(f[6])});
    return out;
  }();
  return rows;
}
const std::vector<T4Row> &table4_rows() {
  static const auto rows = [] {
    std::vector<T4Row> out;
    for (const auto &f : parse_csv(tables::kTable4Csv))
      out.push_back({f[0], std::stoi(f[1]), std::stoi(f[2]), std::stod(f[3]), std::stod(f[4])});
    return out;
  }();
  return rows;
}
const std::vector<T5Row> &table5_rows() {
  static const auto rows = [] {
    std::vector<T5Row> out;
    for (const auto &f : parse_csv(tables::kTable5Csv))
      out.push_back(
          {std::stod(f[0]), std::stod(f[1]), std::stoi(f[2]), std::stoi(f[3]), std::stod(f[4])});
    return out;
  }();
  return rows;
}
const std::vector<T6Row> &table6_rows() {
  static const auto rows = [] {
    std::vector<T6Row> out;
    for (const auto &f : parse_csv(tables::kTable6Csv))
      out.push_back({std::stod(f[0]), std::stod(f[1]), std::stod(f[2]), std::stoi(f[3]),
                     std::stoi(f[4]), std::stod(f[5])});
    return out;
  }();
  return rows;
}

std::string state_label(gmorse_symmetry sym, int n, int kappa) {
  char buf[32];
  if (gmorse_format_state(sym, n, kappa, buf, sizeof buf) != GMORSE_OK)
    return "?";
  return buf;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_energy(const RunConfig &cfg) {
  if (cfg.states.empty()) {
    std::fprintf(stderr, "energy: at least one --state is required\n");
    return kExitUsage;
  }
  const auto sym = parse_mode(cfg.mode);
  const auto pot = parse_potential(cfg.potential);

  // parse all states first: unknown tokens are usage errors
  std::vector<std::pair<int, int>> parsed;
  for (const auto &token : cfg.states) {
    int n = 0, k = 0;
    if (gmorse_parse_state(token.c_str(), sym, &n, &k) != GMORSE_OK) {
      std::fprintf(stderr, "energy: bad state token '%s': %s\n", token.c_str(),
                   gmorse_last_error());
      return kExitUsage;
    }
    parsed.push_back({n, k});
  }

  gmorse_model *m = make_model(cfg, sym);
  Table t;
  t.columns = {"state", "n", sym == GMORSE_NONREL ? "l" : "kappa",
               "energy", "residual", "epsilon", "delta", "status"};
  t.meta = {{"command", "energy"}, {"mode", cfg.mode},      {"potential", cfg.potential},
            {"D", cfg.D},          {"alpha", cfg.alpha},    {"re", cfg.re},
            {"M", cfg.M},          {"Cs", cfg.Cs},          {"Cps", cfg.Cps},
            {"mu", cfg.mu},        {"d0", cfg.d0 >= 0 ? cfg.d0 : gmorse_default_d0()}};

  bool any_failed = false;
  auto fmt_e = (sym == GMORSE_NONREL) ? fmt_nonrel : fmt_rel;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const auto [n, k] = parsed[i];
    gmorse_solution sol{};
    const auto st = gmorse_solve(m, pot, sym, n, k, &sol);
    std::vector<Cell> row;
    row.push_back(Cell::str(cfg.states[i]));
    row.push_back(Cell::integer(n));
    row.push_back(Cell::integer(k));
    if (st == GMORSE_OK) {
      row.push_back(Cell::num(sol.energy, fmt_e));
      row.push_back(Cell::num(sol.residual, fmt_diag));
      row.push_back(Cell::num(sol.epsilon, fmt_diag));
      row.push_back(Cell::num(sol.delta, fmt_diag));
      row.push_back(Cell::str("ok"));
    } else {
      any_failed = true;
      row.push_back(Cell::str(""));
      row.push_back(Cell::str(""));
      row.push_back(Cell::str(""));
      row.push_back(Cell::str(""));
      row.push_back(Cell::str(gmorse_status_name(st)));
    }
    t.rows.push_back(std::move(row));
  }
  gmorse_model_free(m);
  t.emit(cfg.output);
  return any_failed ? kExitNumeric : kExitOk;
}

int cmd_table(int id, const RunConfig &cfg) {
  Table t;
  bool any_failed = false;

  if (id == 3 || id == 4) {
    const double tol = 1e-4;
    RunConfig base = cfg;
    base.mu = 1.0;
    base.D = 15.0;
    if (id == 3) {
      t.columns = {"state", "n", "l", "alpha", "re", "computed", "reference", "absdiff"};
      t.meta = {{"command", "table"}, {"table", 3}, {"tolerance", tol}};
      for (const auto &row : table3_rows()) {
        base.alpha = row.alpha;
        base.re = row.re;
        gmorse_model *m = make_model(base, GMORSE_NONREL);
        gmorse_solution sol{};
        const auto st = gmorse_solve(m, GMORSE_GMP, GMORSE_NONREL, row.n, row.l, &sol);
        gmorse_model_free(m);
        const double diff = (st == GMORSE_OK) ? std::abs(sol.energy - row.reference) : 1e300;
        if (diff > tol)
          any_failed = true;
        t.rows.push_back({Cell::str(row.state), Cell::integer(row.n), Cell::integer(row.l),
                          Cell::num(row.alpha, fmt_nonrel), Cell::num(row.re, fmt_nonrel),
                          Cell::num(sol.energy, fmt_nonrel), Cell::num(row.reference, fmt_nonrel),
                          Cell::num(diff, fmt_diag)});
      }
    } else {
      t.columns = {"state", "n", "l", "re", "computed", "reference", "absdiff"};
      t.meta = {{"command", "table"}, {"table", 4}, {"tolerance", tol}};
      for (const auto &row : table4_rows()) {
        base.alpha = 0.0;
        base.re = row.re;
        gmorse_model *m = make_model(base, GMORSE_NONREL);
        gmorse_solution sol{};
        const auto st = gmorse_solve(m, GMORSE_KRATZER, GMORSE_NONREL, row.n, row.l, &sol);
        gmorse_model_free(m);
        const double diff = (st == GMORSE_OK) ? std::abs(sol.energy - row.reference) : 1e300;
        if (diff > tol)
          any_failed = true;
        t.rows.push_back({Cell::str(row.state), Cell::integer(row.n), Cell::integer(row.l),
                          Cell::num(row.re, fmt_nonrel), Cell::num(sol.energy, fmt_nonrel),
                          Cell::num(row.reference, fmt_nonrel), Cell::num(diff, fmt_diag)});
      }
    }
  } else if (id == 5) {
    const double tol = 1e-6;
    t.columns = {"alpha", "re", "n", "kappa", "label", "computed", "reference", "absdiff"};
    t.meta = {{"command", "table"}, {"table", 5}, {"tolerance", tol}, {"M", 1.0}, {"D", 15.0},
              {"Cs", 0.0}};
    RunConfig base = cfg;
    base.M = 1.0;
    base.D = 15.0;
    base.Cs = 0.0;
    for (const auto &row : table5_rows()) {
      base.alpha = row.alpha;
      base.re = row.re;
      gmorse_model *m = make_model(base, GMORSE_SPIN);
      // printed column pair: kappa < 0 and its degenerate partner -(kappa+1)
      for (int kappa : {row.kappa, -row.kappa - 1}) {
        gmorse_solution sol{};
        const auto st = gmorse_solve(m, GMORSE_GMP, GMORSE_SPIN, row.n, kappa, &sol);
        const double diff = (st == GMORSE_OK) ? std::abs(sol.energy - row.reference) : 1e300;
        if (diff > tol)
          any_failed = true;
        t.rows.push_back({Cell::num(row.alpha, fmt_nonrel), Cell::num(row.re, fmt_nonrel),
                          Cell::integer(row.n), Cell::integer(kappa),
                          Cell::str(state_label(GMORSE_SPIN, row.n, kappa)),
                          Cell::num(sol.energy, fmt_rel), Cell::num(row.reference, fmt_rel),
                          Cell::num(diff, fmt_diag)});
      }
      gmorse_model_free(m);
    }
  } else if (id == 6) {
    const double tol = 1e-6;
    t.columns = {"alpha", "re", "Cps", "n", "kappa", "label", "computed", "reference", "absdiff"};
    t.meta = {{"command", "table"}, {"table", 6}, {"tolerance", tol}, {"M", 1.0}, {"D", 15.0}};
    RunConfig base = cfg;
    base.M = 1.0;
    base.D = 15.0;
    for (const auto &row : table6_rows()) {
      base.alpha = row.alpha;
      base.re = row.re;
      base.Cps = row.cps;
      gmorse_model *m = make_model(base, GMORSE_PSEUDOSPIN);
      // kappa < 0 column plus the quasi-degenerate (n-1, kappa > 0) partner
      for (int kappa : {row.kappa, 1 - row.kappa}) {
        gmorse_solution sol{};
        const auto st = gmorse_solve(m, GMORSE_GMP, GMORSE_PSEUDOSPIN, row.n, kappa, &sol);
        const double diff = (st == GMORSE_OK) ? std::abs(sol.energy - row.reference) : 1e300;
        if (diff > tol)
          any_failed = true;
        const int display_n = (kappa > 0) ? row.n - 1 : row.n; // label as printed
        t.rows.push_back({Cell::num(row.alpha, fmt_nonrel), Cell::num(row.re, fmt_nonrel),
                          Cell::num(row.cps, fmt_nonrel), Cell::integer(row.n),
                          Cell::integer(kappa),
                          Cell::str(state_label(GMORSE_PSEUDOSPIN, display_n, kappa)),
                          Cell::num(sol.energy, fmt_rel), Cell::num(row.reference, fmt_rel),
                          Cell::num(diff, fmt_diag)});
      }
      gmorse_model_free(m);
    }
  } else {
    std::fprintf(stderr, "table: unknown table id %d (expected 3, 4, 5 or 6)\n", id);
    return kExitUsage;
  }

  t.emit(cfg.output);
  if (any_failed) {
    std::fprintf(stderr, "table %d: cells beyond tolerance:\n", id);
    const std::size_t diff_col = t.columns.size() - 1;
    for (const auto &row : t.rows) {
      const double d = row[diff_col].value.is_number() ? row[diff_col].value.get<double>() : 1e300;
      const double tol = t.meta["tolerance"].get<double>();
      if (d > tol) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i)
          line += (i ? "," : "") + row[i].text;
        std::fprintf(stderr, "  %s\n", line.c_str());
      }
    }
    return kExitNumeric;
  }
  return kExitOk;
}

int cmd_wavefunction(const RunConfig &cfg, int points) {
  if (points <= 0) {
    std::fprintf(stderr, "wavefunction: --points must be positive\n");
    return kExitUsage;
  }
  if (cfg.states.size() != 1) {
    std::fprintf(stderr, "wavefunction: exactly one --state is required\n");
    return kExitUsage;
  }
  const auto sym = parse_mode(cfg.mode);
  const auto pot = parse_potential(cfg.potential);
  int n = 0, k = 0;
  if (gmorse_parse_state(cfg.states[0].c_str(), sym, &n, &k) != GMORSE_OK) {
    std::fprintf(stderr, "wavefunction: bad state '%s': %s\n", cfg.states[0].c_str(),
                 gmorse_last_error());
    return kExitUsage;
  }

  gmorse_model *m = make_model(cfg, sym);
  std::vector<double> r(static_cast<std::size_t>(points)), up(r.size()), low(r.size());
  auto st = gmorse_default_grid(m, pot, sym, n, k, r.data(), r.size());
  double norm = 0;
  if (st == GMORSE_OK)
    st = gmorse_wavefunction(m, pot, sym, n, k, r.data(), r.size(), up.data(), low.data(), &norm);

  gmorse_solution sol{};
  if (st == GMORSE_OK)
    gmorse_solve(m, pot, sym, n, k, &sol);
  gmorse_model_free(m);
  if (st != GMORSE_OK) {
    std::fprintf(stderr, "wavefunction: %s: %s\n", gmorse_status_name(st), gmorse_last_error());
    return kExitNumeric;
  }

  Table t;
  t.columns = {"r", "upper", "lower"};
  t.meta = {{"command", "wavefunction"},
            {"mode", cfg.mode},
            {"potential", cfg.potential},
            {"state", cfg.states[0]},
            {"n", n},
            {"kappa_or_l", k},
            {"energy", std::stod(fmt_rel(sol.energy))},
            {"norm_check", norm}};
  for (std::size_t i = 0; i < r.size(); ++i)
    t.rows.push_back(
        {Cell::num(r[i], fmt_diag), Cell::num(up[i], fmt_diag), Cell::num(low[i], fmt_diag)});
  t.emit(cfg.output);
  return kExitOk;
}

int cmd_potential(const RunConfig &cfg, double rmin, double rmax, int points) {
  if (points <= 0 || !(rmin > 0) || !(rmax > rmin)) {
    std::fprintf(stderr, "potential: need --points > 0 and 0 < --rmin < --rmax\n");
    return kExitUsage;
  }
  const auto pot = parse_potential(cfg.potential);
  gmorse_model *m = make_model(cfg, GMORSE_NONREL);
  std::vector<double> r(static_cast<std::size_t>(points)), v(r.size());
  for (int i = 0; i < points; ++i)
    r[static_cast<std::size_t>(i)] =
        rmin + (rmax - rmin) * i / std::max(1, points - 1);
  const auto st = gmorse_potential_eval(m, pot, r.data(), r.size(), v.data());
  gmorse_model_free(m);
  if (st != GMORSE_OK) {
    std::fprintf(stderr, "potential: %s: %s\n", gmorse_status_name(st), gmorse_last_error());
    return kExitNumeric;
  }
  Table t;
  t.columns = {"r", "V"};
  t.meta = {{"command", "potential"}, {"potential", cfg.potential}, {"D", cfg.D},
            {"alpha", cfg.alpha},     {"re", cfg.re}};
  for (std::size_t i = 0; i < r.size(); ++i)
    t.rows.push_back({Cell::num(r[i], fmt_diag), Cell::num(v[i], fmt_diag)});
  t.emit(cfg.output);
  return kExitOk;
}

int cmd_verify(const RunConfig &cfg, bool states_given) {
  if (states_given && cfg.states.empty()) {
    std::fprintf(stderr, "verify: empty state list\n");
    return kExitUsage;
  }

  struct VerifyCase {
    std::string state;
    int n, l;
    double alpha, re, budget;
  };
  std::vector<VerifyCase> cases;
  if (states_given) {
    for (const auto &token : cfg.states) {
      int n = 0, l = 0;
      if (gmorse_parse_state(token.c_str(), GMORSE_NONREL, &n, &l) != GMORSE_OK) {
        std::fprintf(stderr, "verify: bad state '%s': %s\n", token.c_str(), gmorse_last_error());
        return kExitUsage;
      }
      cases.push_back({token, n, l, cfg.alpha, cfg.re, -1.0});
    }
  } else {
    for (const auto &row : table3_rows())
      cases.push_back({row.state, row.n, row.l, row.alpha, row.re,
                       5.0 * std::max(std::abs(row.reference - row.ls), 5e-5)});
  }

  Table t;
  t.columns = {"state", "alpha", "re", "closed_form", "oracle", "absdiff", "budget", "status"};
  t.meta = {{"command", "verify"},
            {"D", cfg.D},
            {"mu", cfg.mu},
            {"d0", cfg.d0 >= 0 ? cfg.d0 : gmorse_default_d0()}};

  bool any_failed = false;
  RunConfig base = cfg;
  for (const auto &c : cases) {
    base.alpha = c.alpha;
    base.re = c.re;
    gmorse_model *m = make_model(base, GMORSE_NONREL);
    gmorse_solution sol{};
    double oracle = 0;
    auto st = gmorse_solve(m, GMORSE_GMP, GMORSE_NONREL, c.n, c.l, &sol);
    if (st == GMORSE_OK)
      st = gmorse_oracle_nonrel(m, GMORSE_GMP, c.n, c.l, &oracle);
    gmorse_model_free(m);

    const double diff = std::abs(sol.energy - oracle);
    const bool ok = st == GMORSE_OK && (c.budget < 0 || diff <= c.budget);
    if (!ok)
      any_failed = true;
    t.rows.push_back({Cell::str(c.state), Cell::num(c.alpha, fmt_nonrel),
                      Cell::num(c.re, fmt_nonrel), Cell::num(sol.energy, fmt_nonrel),
                      Cell::num(oracle, fmt_nonrel), Cell::num(diff, fmt_diag),
                      Cell::num(c.budget, fmt_diag),
                      Cell::str(st == GMORSE_OK ? (ok ? "ok" : "over-budget")
                                                : gmorse_status_name(st))});
  }
  t.emit(cfg.output);
  return any_failed ? kExitNumeric : kExitOk;
}

bool apply_config_file(const std::string &path, RunConfig &cfg) {
  std::ifstream in(path);
  if (!in)
    throw CLI::ValidationError("--config", "cannot open " + path);
  json j;
  in >> j;
  if (j.contains("mode"))
    cfg.mode = j["mode"].get<std::string>();
  if (j.contains("potential"))
    cfg.potential = j["potential"].get<std::string>();
  if (j.contains("D"))
    cfg.D = j["D"].get<double>();
  if (j.contains("alpha"))
    cfg.alpha = j["alpha"].get<double>();
  if (j.contains("re"))
    cfg.re = j["re"].get<double>();
  if (j.contains("M"))
    cfg.M = j["M"].get<double>();
  if (j.contains("Cs"))
    cfg.Cs = j["Cs"].get<double>();
  if (j.contains("Cps"))
    cfg.Cps = j["Cps"].get<double>();
  if (j.contains("mu"))
    cfg.mu = j["mu"].get<double>();
  if (j.contains("d0"))
    cfg.d0 = j["d0"].get<double>();
  if (j.contains("output"))
    cfg.output = j["output"].get<std::string>();
  if (j.contains("states"))
    cfg.states = j["states"].get<std::vector<std::string>>();
  return j.contains("states");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"bound-state spectra and wavefunctions of the generalized Morse potential"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--config", config_path, "JSON run configuration file");
    sub->add_option("--mode", cfg.mode, "spin|pseudospin|nonrel");
    sub->add_option("--potential", cfg.potential, "gmp|kratzer");
    sub->add_option("--D", cfg.D, "dissociation energy");
    sub->add_option("--alpha", cfg.alpha, "potential range parameter");
    sub->add_option("--re", cfg.re, "equilibrium distance");
    sub->add_option("--M", cfg.M, "mass (relativistic modes)");
    sub->add_option("--Cs", cfg.Cs, "spin symmetry constant");
    sub->add_option("--Cps", cfg.Cps, "pseudospin symmetry constant");
    sub->add_option("--mu", cfg.mu, "reduced mass (nonrel mode)");
    sub->add_option("--d0", cfg.d0, "centrifugal approximation constant (default: library value)");
    sub->add_option("--output", cfg.output, "csv|json");
  };

  auto *energy = app.add_subcommand("energy", "solve bound-state energies for listed states");
  add_common(energy);
  energy->add_option("--state", cfg.states, "state labels (repeatable), e.g. 0p3/2 or 2p");

  int table_id = 0;
  auto *table = app.add_subcommand("table", "reproduce a built-in reference table with diffs");
  add_common(table);
  table->add_option("id", table_id, "table id: 3, 4, 5 or 6")->required();

  int wf_points = 4000;
  auto *wavefunction =
      app.add_subcommand("wavefunction", "sample normalized radial components of one state");
  add_common(wavefunction);
  wavefunction->add_option("--state", cfg.states, "state label");
  wavefunction->add_option("--points", wf_points, "number of grid points");

  double pot_rmin = 0.02, pot_rmax = 4.0;
  int pot_points = 400;
  auto *potential = app.add_subcommand("potential", "sample the potential on a uniform grid");
  add_common(potential);
  potential->add_option("--rmin", pot_rmin, "first radius");
  potential->add_option("--rmax", pot_rmax, "last radius");
  potential->add_option("--points", pot_points, "number of samples");

  auto *verify =
      app.add_subcommand("verify", "compare closed forms against the exact-centrifugal solver");
  add_common(verify);
  verify->add_option("--state", cfg.states,
                     "nonrel state labels (default: the full built-in grid)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  bool config_had_states = false;
  try {
    if (!config_path.empty()) {
      // config supplies values; explicit flags already parsed win
      RunConfig from_file = cfg;
      config_had_states = apply_config_file(config_path, from_file);
      auto keep = [&](const char *flag) {
        for (auto *sub : app.get_subcommands())
          if (sub->count(flag) > 0)
            return true;
        return false;
      };
      if (!keep("--mode"))
        cfg.mode = from_file.mode;
      if (!keep("--potential"))
        cfg.potential = from_file.potential;
      if (!keep("--D"))
        cfg.D = from_file.D;
      if (!keep("--alpha"))
        cfg.alpha = from_file.alpha;
      if (!keep("--re"))
        cfg.re = from_file.re;
      if (!keep("--M"))
        cfg.M = from_file.M;
      if (!keep("--Cs"))
        cfg.Cs = from_file.Cs;
      if (!keep("--Cps"))
        cfg.Cps = from_file.Cps;
      if (!keep("--mu"))
        cfg.mu = from_file.mu;
      if (!keep("--d0"))
        cfg.d0 = from_file.d0;
      if (!keep("--output"))
        cfg.output = from_file.output;
      if (!keep("--state"))
        cfg.states = from_file.states;
    }
    if (cfg.output != "csv" && cfg.output != "json") {
      std::fprintf(stderr, "unknown output format '%s'\n", cfg.output.c_str());
      return kExitUsage;
    }

    if (energy->parsed())
      return cmd_energy(cfg);
    if (table->parsed())
      return cmd_table(table_id, cfg);
    if (wavefunction->parsed())
      return cmd_wavefunction(cfg, wf_points);
    if (potential->parsed())
      return cmd_potential(cfg, pot_rmin, pot_rmax, pot_points);
    if (verify->parsed())
      return cmd_verify(cfg, verify->count("--state") > 0 || config_had_states);
  } catch (const CLI::ValidationError &e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
  return kExitUsage;
}
