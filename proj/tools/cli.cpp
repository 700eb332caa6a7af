#include "cli.hpp"

#include <CLI11.hpp>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "scarf/scarf.h"

namespace scarf_cli {

namespace {

struct UsageError {
  std::string message;
};

struct ApiError {
  scarf_status status;
  std::string message;
};

void usage_if(bool bad, const std::string& message) {
  if (bad) throw UsageError{message};
}

void check(scarf_status s) {
  if (s != SCARF_OK) throw ApiError{s, scarf_last_error()};
}

class Text {
 public:
  ~Text() { scarf_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

bool looks_exact(const std::string& b) { return b.find('/') != std::string::npos; }

double float_b(const RunConfig& c) {
  usage_if(c.b.empty(), "--b is required for " + c.subcommand);
  usage_if(looks_exact(c.b), "--b: exact value '" + c.b +
                                 "' is only accepted by decompose and verify --which polynomial|ledger; give a decimal");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(c.b.c_str(), &end);
  usage_if(end == c.b.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v),
           "--b: '" + c.b + "' is not a finite number");
  return v;
}

void check_state(const RunConfig& c) {
  usage_if(c.N < 1, "--N must be >= 1 (got " + std::to_string(c.N) + ")");
  usage_if(c.ell < 0 || c.ell > c.N - 1,
           "--ell must satisfy 0 <= ell <= N-1 (got " + std::to_string(c.ell) + " with --N " + std::to_string(c.N) + ")");
}

std::string format_or(const RunConfig& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw UsageError{"--format must be " + list + " for " + c.subcommand + " (got '" + f + "')"};
}

std::string pretty(const std::string& json) { return nlohmann::json::parse(json).dump(2) + "\n"; }

struct Artifact {
  std::string text;
  bool passed = true;
};

Artifact decompose(const RunConfig& c) {
  check_state(c);
  const std::string format = format_or(c, "json", {"json", "csv"});
  scarf_table* t = nullptr;
  check(scarf_table_create(c.N, c.ell, &t));
  std::unique_ptr<scarf_table, void (*)(scarf_table*)> owned(t, scarf_table_destroy);
  const char* b = c.b.empty() ? nullptr : c.b.c_str();
  Text out;
  if (format == "json") {
    check(scarf_table_json(t, b, out.out()));
    return {pretty(out.str())};
  }
  check(scarf_table_csv(t, b, out.out()));
  return {out.str()};
}

Artifact table(const RunConfig& c) {
  usage_if(c.N < 1, "--N must be >= 1 (got " + std::to_string(c.N) + ")");
  const std::string format = format_or(c, "json", {"json", "csv"});
  Text out;
  int ok = 0;
  check(scarf_closed_forms_json(c.N, out.out(), &ok));
  if (format == "json") return {pretty(out.str()), ok == 1};
  const auto doc = nlohmann::json::parse(out.str());
  auto coeffs = [](const nlohmann::json& poly) {
    std::string joined;
    for (const auto& c : poly) joined += (joined.empty() ? "" : ";") + c.get<std::string>();
    return joined;
  };
  // coefficient lists are b^0;b^1;...
  std::string csv = "row,ell,K,expected,computed,match\n";
  for (const auto& e : doc["entries"]) {
    csv += e["row"].get<std::string>() + "," + std::to_string(e["ell"].get<int>()) + "," +
           std::to_string(e["K"].get<int>()) + "," + coeffs(e["expected"]) + "," + coeffs(e["computed"]) + "," +
           (e["match"].get<bool>() ? "true" : "false") + "\n";
  }
  return {csv, ok == 1};
}

Artifact spectrum(const RunConfig& c) {
  usage_if(c.d < 1, "--d must be >= 1 (got " + std::to_string(c.d) + ")");
  usage_if(c.channel < 0, "--channel must be >= 0 (got " + std::to_string(c.channel) + ")");
  usage_if(c.grid < 16, "--grid must be >= 16 (got " + std::to_string(c.grid) + ")");
  usage_if(c.count < 1 || c.count > c.grid, "--count must be in 1..grid (got " + std::to_string(c.count) + ")");
  usage_if(c.scheme != "plain" && c.scheme != "factored", "--scheme must be plain|factored (got '" + c.scheme + "')");
  const double b = float_b(c);
  const std::string format = format_or(c, "csv", {"csv", "json"});
  scarf_spectrum* sp = nullptr;
  check(scarf_spectrum_compute(c.d, c.channel, b, c.grid, c.count,
                               c.scheme == "plain" ? SCARF_SCHEME_PLAIN : SCARF_SCHEME_FACTORED, &sp));
  std::unique_ptr<scarf_spectrum, void (*)(scarf_spectrum*)> owned(sp, scarf_spectrum_destroy);
  if (format == "csv") {
    Text out;
    check(scarf_spectrum_csv(sp, out.out()));
    return {out.str()};
  }
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < scarf_spectrum_count(sp); ++i) {
    double raw = 0, ex = 0;
    check(scarf_spectrum_value(sp, i, &raw, &ex));
    rows.push_back({{"index", i}, {"eigenvalue_raw", raw}, {"eigenvalue_richardson", ex}});
  }
  const nlohmann::json doc{{"schema", 1},  {"d", c.d},           {"channel", c.channel},
                           {"b", b},       {"grid", c.grid},     {"fine_grid", 2 * c.grid + 1},
                           {"scheme", c.scheme}, {"eigenvalues", rows}};
  return {doc.dump(2) + "\n"};
}

Artifact audit(const RunConfig& c) {
  usage_if(c.N < 1, "--N must be >= 1 (got " + std::to_string(c.N) + ")");
  usage_if(c.d < 1, "--d must be >= 1 (got " + std::to_string(c.d) + ")");
  usage_if(c.grid < 16, "--grid must be >= 16 (got " + std::to_string(c.grid) + ")");
  usage_if(!(c.tol > 0), "--tol must be positive");
  const double b = float_b(c);
  format_or(c, "json", {"json"});
  Text out;
  int passed = 0;
  check(scarf_audit_json(c.N, c.d, b, c.grid, c.tol, out.out(), &passed));
  return {pretty(out.str()), passed == 1};
}

Artifact verify(const RunConfig& c) {
  usage_if(c.which.empty(), "--which is required (gradient|commutator|polynomial|ledger)");
  check_state(c);
  usage_if(c.points < 2, "--points must be >= 2 (got " + std::to_string(c.points) + ")");
  format_or(c, "json", {"json"});
  std::string b = c.b;
  if (c.which == "gradient" || c.which == "commutator") {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", float_b(c));
    b = buf;
  } else if (c.which == "polynomial") {
    usage_if(c.b.empty(), "--b is required for verify --which polynomial");
  }
  Text out;
  int passed = 0;
  check(scarf_verify_json(c.which.c_str(), c.N, c.ell, b.empty() ? nullptr : b.c_str(), c.points, out.out(), &passed));
  return {pretty(out.str()), passed == 1};
}

Artifact gram(const RunConfig& c) {
  usage_if(c.N_list.empty(), "--N-list needs at least one N");
  usage_if(c.ell < 0, "--ell must be >= 0 (got " + std::to_string(c.ell) + ")");
  for (int N : c.N_list) {
    usage_if(N <= c.ell, "--N-list: every N must exceed --ell (got N=" + std::to_string(N) + ", ell=" +
                             std::to_string(c.ell) + ")");
  }
  usage_if(c.d < 1, "--d must be >= 1 (got " + std::to_string(c.d) + ")");
  usage_if(c.measure != "dchi" && c.measure != "cos", "--measure must be dchi|cos (got '" + c.measure + "')");
  const double b = float_b(c);
  const std::string format = format_or(c, "csv", {"csv", "json"});
  Text out;
  int passed = 0;
  check(scarf_gram_csv(c.N_list.data(), c.N_list.size(), c.ell, b, c.d, c.measure == "dchi" ? 0 : 1, out.out(),
                       &passed));
  if (format == "csv") return {out.str(), passed == 1};
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  nlohmann::json matrix = nlohmann::json::array();
  while (std::getline(in, line)) {
    nlohmann::json row = nlohmann::json::array();
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    matrix.push_back(row);
  }
  const nlohmann::json doc{{"schema", 1},        {"N_list", c.N_list}, {"ell", c.ell},      {"b", b},
                           {"d", c.d},           {"measure", c.measure}, {"normalized", matrix}, {"tol", 1e-9},
                           {"pass", passed == 1}};
  return {doc.dump(2) + "\n", passed == 1};
}

std::filesystem::path output_path(const std::string& output) {
  std::filesystem::path p(output);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("SCARF_OUTPUT_DIR"); dir != nullptr && *dir != '\0') p = dir / p;
  }
  return p;
}

}  // namespace

std::optional<int> parse(int argc, const char* const* argv, RunConfig& config, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical checks for the Scarf I potential on S^{d+1}."};
  app.set_version_flag("--version", std::string(scarf_version()));
  app.require_subcommand(1, 1);

  auto format = [&](CLI::App* s) {
    s->add_option("--format", config.format, "json or csv");
    s->add_option("--output", config.output, "write here instead of stdout (relative to $SCARF_OUTPUT_DIR if set)");
  };

  auto* dec = app.add_subcommand(
      "decompose",
      "Expand cos^l(chi) P_n^{(l-b+1/2, l+b+1/2)}(sin chi), n = N-1-l, as sum_K c_K(b) cos^l(chi) "
      "C_{K-l}^{l+1}(sin chi) with exact rational polynomials c_K(b).");
  dec->add_option("--N", config.N, "principal number N >= 1")->required();
  dec->add_option("--ell", config.ell, "0 <= l <= N-1")->required();
  dec->add_option("--b", config.b, "also evaluate every c_K at this exact b (p/q or decimal)");
  format(dec);

  auto* tab = app.add_subcommand(
      "table", "Compare c_K(b) for l = N-1 .. N-4 against the closed forms, e.g. c_{N-2} = -b and c_{N-1} = (2N-1)/(4(N-1)) at l = N-2.");
  tab->add_option("--N", config.N, "principal number N >= 1")->required();
  format(tab);

  auto* spec = app.add_subcommand(
      "spectrum",
      "Lowest eigenvalues of -U'' + V U with V(chi) = (b^2 + a(a+1))/cos^2 chi - b(2a+1) tan chi / cos chi, "
      "a = l + (d-2)/2, on grids M and 2M+1 with Richardson extrapolation; expected eps_n = (a+n+1)^2.");
  spec->add_option("--d", config.d, "sphere S^{d+1}, d >= 1");
  spec->add_option("--channel", config.channel, "angular channel l >= 0");
  spec->add_option("--b", config.b, "magnetic parameter (decimal)")->required();
  spec->add_option("--grid", config.grid, "coarse grid M >= 16 (fine grid is 2M+1)");
  spec->add_option("--count", config.count, "number of eigenvalues");
  spec->add_option("--scheme", config.scheme, "factored (default) or plain");
  format(spec);

  auto* aud = app.add_subcommand(
      "audit", "Check eps = (K+d/2)^2 = K(K+d) + d^2/4 with K = N-1 at node N-1-l in every channel l < N, "
               "and that the multiplicities sum_l dim H_l(S^d) add up to the harmonic count (N^2 for d = 2).");
  aud->add_option("--N", config.N, "principal number N >= 1")->required();
  aud->add_option("--d", config.d, "sphere S^{d+1}, d >= 1");
  aud->add_option("--b", config.b, "magnetic parameter (decimal)")->required();
  aud->add_option("--grid", config.grid, "coarse grid M >= 16");
  aud->add_option("--tol", config.tol, "absolute tolerance on each eigenvalue");
  format(aud);

  auto* ver = app.add_subcommand(
      "verify",
      "gradient: sum_K (K+1)^2 c_K S~_K - 2b F^-1 cos^l dP/ds = N^2 phi on a grid; "
      "commutator: |[H_Sc, K~^2] phi| (weight cos^2 chi) vanishes only for b = 0 or l = N-1; "
      "polynomial: D(x) = sum_K N^2 c_K prod_{J!=K} (x-(J+1)^2)/((K+1)^2-(J+1)^2), x = K~^2+1, "
      "maps S~_K to N^2 c_K S~_K; ledger: (K+1)^2 c_K + [-2b dP/ds]_K = N^2 c_K exactly.");
  ver->add_option("--which", config.which, "gradient|commutator|polynomial|ledger")
      ->required()
      ->check(CLI::IsMember({"gradient", "commutator", "polynomial", "ledger"}));
  ver->add_option("--N", config.N, "principal number N >= 1")->required();
  ver->add_option("--ell", config.ell, "0 <= l <= N-1")->required();
  ver->add_option("--b", config.b, "decimal for gradient/commutator, exact p/q allowed for polynomial/ledger");
  ver->add_option("--points", config.points, "interior grid size for gradient/commutator");
  format(ver);

  auto* gr = app.add_subcommand(
      "gram", "Normalized Gram matrix <U_N, U_N'> = int U_N U_N' dchi (or phi with cos^d chi dchi); "
              "expected identity.");
  gr->add_option("--N-list", config.N_list, "N values, e.g. --N-list 1,2,3")->required()->delimiter(',');
  gr->add_option("--ell", config.ell, "channel l >= 0")->required();
  gr->add_option("--b", config.b, "magnetic parameter (decimal)")->required();
  gr->add_option("--d", config.d, "sphere S^{d+1}, d >= 1");
  gr->add_option("--measure", config.measure, "dchi (U states) or cos (phi states with cos^d chi)");
  format(gr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Artifact a;
    const std::string& s = config.subcommand;
    if (s == "decompose") {
      a = decompose(config);
    } else if (s == "table") {
      a = table(config);
    } else if (s == "spectrum") {
      a = spectrum(config);
    } else if (s == "audit") {
      a = audit(config);
    } else if (s == "verify") {
      a = verify(config);
    } else if (s == "gram") {
      a = gram(config);
    } else {
      throw UsageError{"unknown subcommand '" + s + "'"};
    }
    if (config.output.empty()) {
      out << a.text;
      out.flush();
    } else {
      const auto path = output_path(config.output);
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      std::ofstream f(path, std::ios::binary);
      f << a.text;
      if (!f) {
        err << "error: cannot write --output " << path.string() << "\n";
        return kFailure;
      }
    }
    if (!a.passed) err << s << ": verification failed\n";
    return a.passed ? kOk : kMismatch;
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kUsage;
  } catch (const ApiError& e) {
    err << "error (" << scarf_status_name(e.status) << "): " << e.message << "\n";
    switch (e.status) {
      case SCARF_E_INVALID_ARGUMENT:
      case SCARF_E_PARSE:
      case SCARF_E_NON_NORMALIZABLE:
      case SCARF_E_DOMAIN:
        return kUsage;
      default:
        return kFailure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace scarf_cli
