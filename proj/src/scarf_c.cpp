#include "scarf/scarf.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "scarf/decomp.hpp"
#include "scarf/error.hpp"
#include "scarf/operators.hpp"
#include "scarf/quadrature.hpp"
#include "scarf/serialize.hpp"
#include "scarf/spectral.hpp"

struct scarf_table {
  scarf::DecompositionTable table;
};

struct scarf_spectrum {
  scarf::SpectralProblem problem;
  scarf::RichardsonSpectrum result;
};

namespace {

thread_local std::string last_error;

scarf_status status_of(scarf::ErrorCode code) {
  using scarf::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SCARF_E_INVALID_ARGUMENT;
    case ErrorCode::DomainError: return SCARF_E_DOMAIN;
    case ErrorCode::DegreeMismatch: return SCARF_E_DEGREE_MISMATCH;
    case ErrorCode::InexactDivision: return SCARF_E_INEXACT_DIVISION;
    case ErrorCode::DivisionByZero: return SCARF_E_DIVISION_BY_ZERO;
    case ErrorCode::NonNormalizable: return SCARF_E_NON_NORMALIZABLE;
    case ErrorCode::ConvergenceFailure: return SCARF_E_CONVERGENCE;
    case ErrorCode::ParseError: return SCARF_E_PARSE;
  }
  return SCARF_E_INTERNAL;
}

template <class Fn>
scarf_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return SCARF_OK;
  } catch (const scarf::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SCARF_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return SCARF_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw scarf::Error(scarf::ErrorCode::InvalidArgument, what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_float(const char* text) {
  require(text != nullptr, "b is required");
  char* end = nullptr;
  const double v = std::strtod(text, &end);
  if (end == text || *end != '\0' || !std::isfinite(v)) {
    throw scarf::Error(scarf::ErrorCode::ParseError, std::string("not a finite number: '") + text + "'");
  }
  return v;
}

void set_flag(int* flag, bool value) {
  if (flag != nullptr) *flag = value ? 1 : 0;
}

nlohmann::json verify(const std::string& which, int N, int ell, const char* b_text, int points, bool& passed) {
  if (points <= 0) points = 200;
  if (which == "gradient") {
    const double b = parse_float(b_text);
    const double tol = 1e-10;
    const double r = scarf::gradient_identity_residual(N, ell, b, points);
    passed = r < tol;
    return {{"schema", 1}, {"which", which}, {"N", N}, {"ell", ell}, {"b", b}, {"points", points},
            {"max_residual", r}, {"tol", tol}, {"pass", passed}};
  }
  if (which == "commutator") {
    const double b = parse_float(b_text);
    const double norm = scarf::commutator_probe(N, ell, b, points);
    const bool commutes = b == 0.0 || ell == N - 1;
    passed = commutes ? norm <= 1e-10 : norm >= 1e-3;
    return {{"schema", 1}, {"which", which}, {"N", N}, {"ell", ell}, {"b", b}, {"points", points},
            {"norm", norm}, {"expected", commutes ? "zero" : "nonzero"}, {"zero_tol", 1e-10},
            {"nonzero_floor", 1e-3}, {"pass", passed}};
  }
  if (which == "ledger") {
    auto report = scarf::ledger_identity(N, ell);
    passed = report.holds();
    nlohmann::json j = report.to_json();
    j["which"] = which;
    if (b_text != nullptr) {
      const auto b = scarf::Rational::parse(b_text);
      j["b"] = b.to_string();
      for (std::size_t i = 0; i < report.components.size(); ++i) {
        j["components"][i]["total_at_b"] = report.components[i].total.eval(b).to_string();
      }
    }
    j["pass"] = passed;
    return j;
  }
  if (which == "polynomial") {
    require(b_text != nullptr, "polynomial check needs an exact b");
    const auto r = scarf::dynamical_polynomial_apply(N, ell, scarf::Rational::parse(b_text));
    bool lower = true;
    for (const auto& c : r.literal.components) {
      if (c.K < N - 1 && !c.match) lower = false;
    }
    const bool literal_ok = !r.literal.available || (lower && r.corrected.all_match());
    passed = r.generalized.all_match() && literal_ok;
    nlohmann::json j = r.to_json();
    j["which"] = which;
    j["literal_lower_components_match"] = r.literal.available ? nlohmann::json(lower) : nlohmann::json(nullptr);
    j["pass"] = passed;
    return j;
  }
  throw scarf::Error(scarf::ErrorCode::InvalidArgument,
                     "unknown check '" + which + "' (expected gradient, commutator, polynomial or ledger)");
}

}  // namespace

extern "C" {

const char* scarf_version(void) { return "0.1.0"; }

const char* scarf_status_name(scarf_status status) {
  switch (status) {
    case SCARF_OK: return "ok";
    case SCARF_E_INVALID_ARGUMENT: return "invalid_argument";
    case SCARF_E_DOMAIN: return "domain_error";
    case SCARF_E_DEGREE_MISMATCH: return "degree_mismatch";
    case SCARF_E_INEXACT_DIVISION: return "inexact_division";
    case SCARF_E_DIVISION_BY_ZERO: return "division_by_zero";
    case SCARF_E_NON_NORMALIZABLE: return "non_normalizable";
    case SCARF_E_CONVERGENCE: return "convergence_failure";
    case SCARF_E_PARSE: return "parse_error";
    case SCARF_E_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* scarf_last_error(void) { return last_error.c_str(); }

void scarf_string_free(char* s) { std::free(s); }

scarf_status scarf_table_create(int N, int ell, scarf_table** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new scarf_table{scarf::jacobi_to_gegenbauer(N, ell)};
  });
}

void scarf_table_destroy(scarf_table* table) { delete table; }

scarf_status scarf_table_json(const scarf_table* table, const char* b_exact, char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    nlohmann::json j = table->table.to_json();
    if (b_exact != nullptr) {
      const auto b = scarf::Rational::parse(b_exact);
      nlohmann::json values = nlohmann::json::object();
      for (int K = table->table.lowest_K(); K <= table->table.highest_K(); ++K) {
        values[std::to_string(K)] = table->table.coefficient(K).eval(b).to_string();
      }
      j["b"] = b.to_string();
      j["at_b"] = values;
    }
    *out_json = duplicate(j.dump());
  });
}

scarf_status scarf_table_csv(const scarf_table* table, const char* b_exact, char** out_csv) {
  return guarded([&] {
    require(table != nullptr && out_csv != nullptr, "null argument");
    std::optional<scarf::Rational> b;
    if (b_exact != nullptr) b = scarf::Rational::parse(b_exact);
    std::string csv = b ? "K,degree,coefficient,value_at_b_exact,value_at_b\n" : "K,degree,coefficient\n";
    for (int K = table->table.lowest_K(); K <= table->table.highest_K(); ++K) {
      const auto& c = table->table.coefficient(K);
      csv += std::to_string(K) + "," + std::to_string(c.degree()) + "," + c.to_string();
      if (b) {
        const auto v = c.eval(*b);
        csv += "," + v.to_string() + "," + fmt(v.to_double());
      }
      csv += "\n";
    }
    *out_csv = duplicate(csv);
  });
}

scarf_status scarf_table_eval(const scarf_table* table, int K, double b, double* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = scarf::eval_at(table->table.coefficient(K), b);
  });
}

scarf_status scarf_closed_forms_json(int N, char** out_json, int* all_match) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto report = scarf::verify_closed_forms(N);
    set_flag(all_match, report.all_match());
    *out_json = duplicate(report.to_json().dump());
  });
}

scarf_status scarf_spectrum_compute(int d, int channel, double b, int M, int count, scarf_scheme scheme,
                                    scarf_spectrum** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(scheme == SCARF_SCHEME_PLAIN || scheme == SCARF_SCHEME_FACTORED, "unknown scheme");
    const scarf::SpectralProblem p{d, channel, b, M};
    auto result = scarf::richardson_spectrum(
        p, count, scheme == SCARF_SCHEME_PLAIN ? scarf::Scheme::Plain : scarf::Scheme::Factored);
    *out = new scarf_spectrum{p, std::move(result)};
  });
}

void scarf_spectrum_destroy(scarf_spectrum* spectrum) { delete spectrum; }

size_t scarf_spectrum_count(const scarf_spectrum* spectrum) {
  return spectrum == nullptr ? 0 : spectrum->result.extrapolated.size();
}

scarf_status scarf_spectrum_value(const scarf_spectrum* spectrum, size_t index, double* raw, double* extrapolated) {
  return guarded([&] {
    require(spectrum != nullptr, "null spectrum");
    require(index < spectrum->result.extrapolated.size(), "eigenvalue index out of range");
    if (raw != nullptr) *raw = spectrum->result.coarse[index];
    if (extrapolated != nullptr) *extrapolated = spectrum->result.extrapolated[index];
  });
}

scarf_status scarf_spectrum_csv(const scarf_spectrum* spectrum, char** out_csv) {
  return guarded([&] {
    require(spectrum != nullptr && out_csv != nullptr, "null argument");
    std::string csv = "index,eigenvalue_raw,eigenvalue_richardson\n";
    const auto& r = spectrum->result;
    for (std::size_t i = 0; i < r.extrapolated.size(); ++i) {
      csv += std::to_string(i) + "," + fmt(r.coarse[i]) + "," + fmt(r.extrapolated[i]) + "\n";
    }
    *out_csv = duplicate(csv);
  });
}

scarf_status scarf_audit_json(int N, int d, double b, int M, double tol, char** out_json, int* passed) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto report = scarf::degeneracy_audit(N, d, b, M, tol);
    set_flag(passed, report.pass());
    *out_json = duplicate(report.to_json().dump());
  });
}

scarf_status scarf_verify_json(const char* which, int N, int ell, const char* b, int points, char** out_json,
                               int* passed) {
  return guarded([&] {
    require(which != nullptr && out_json != nullptr, "null argument");
    bool ok = false;
    const auto j = verify(which, N, ell, b, points, ok);
    set_flag(passed, ok);
    *out_json = duplicate(j.dump());
  });
}

scarf_status scarf_gram_csv(const int* N_list, size_t count, int ell, double b, int d, int measure, char** out_csv,
                            int* passed) {
  return guarded([&] {
    require(N_list != nullptr && count > 0 && out_csv != nullptr, "need a non-empty N list");
    require(measure == 0 || measure == 1, "measure must be 0 (dchi) or 1 (cos^d dchi)");
    std::vector<scarf::StateSampler> states;
    for (size_t i = 0; i < count; ++i) {
      states.push_back({measure == 0 ? scarf::StateKind::U : scarf::StateKind::Phi, N_list[i], ell, b, d});
    }
    scarf::check_normalizable(scarf::SpectralProblem{d, ell, b, 16});
    const auto r = scarf::gram_matrix(states, measure == 0 ? scarf::Measure::DChi : scarf::Measure::CosDChi, d);
    std::string csv = "N";
    for (size_t i = 0; i < count; ++i) csv += "," + std::to_string(N_list[i]);
    csv += "\n";
    for (size_t i = 0; i < count; ++i) {
      csv += std::to_string(N_list[i]);
      for (size_t j = 0; j < count; ++j) csv += "," + fmt(r.normalized[i][j]);
      csv += "\n";
    }
    set_flag(passed, r.is_identity(1e-9));
    *out_csv = duplicate(csv);
  });
}

}  // extern "C"
