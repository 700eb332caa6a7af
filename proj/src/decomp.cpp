#include "scarf/decomp.hpp"

#include "scarf/error.hpp"
#include "scarf/orthopoly.hpp"
#include "scarf/serialize.hpp"

namespace scarf {

namespace {

void require_indices(int N, int ell) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
  if (ell < 0 || ell > N - 1) {
    throw Error(ErrorCode::InvalidArgument,
                "ell must satisfy 0 <= ell <= N-1 (N=" + std::to_string(N) + ", ell=" + std::to_string(ell) + ")");
  }
}

Parity parity_of(const BPoly& p) {
  if (p.is_zero()) return Parity::Zero;
  bool even = false;
  bool odd = false;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coefficient(k).is_zero()) continue;
    (k % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return Parity::Mixed;
  return even ? Parity::Even : Parity::Odd;
}

}  // namespace

DecompositionTable::DecompositionTable(int N, int ell, std::vector<BPoly> coefficients)
    : N_(N), ell_(ell), c_(std::move(coefficients)) {
  require_indices(N, ell);
  if (c_.size() != static_cast<std::size_t>(N - ell)) {
    throw Error(ErrorCode::InvalidArgument, "decomposition table needs exactly N-ell coefficients");
  }
}

const BPoly& DecompositionTable::coefficient(int K) const {
  if (K < ell_ || K > N_ - 1) {
    throw Error(ErrorCode::InvalidArgument, "K=" + std::to_string(K) + " outside [ell, N-1]");
  }
  return c_[static_cast<std::size_t>(K - ell_)];
}

nlohmann::json DecompositionTable::to_json() const {
  nlohmann::json c = nlohmann::json::object();
  for (int K = ell_; K <= N_ - 1; ++K) c[std::to_string(K)] = scarf::to_json(coefficient(K));
  return {{"schema", 1}, {"N", N_}, {"ell", ell_}, {"c", c}};
}

std::vector<SPoly> rescaled_harmonic_basis(int N, int ell) {
  require_indices(N, ell);
  std::vector<SPoly> basis;
  basis.reserve(static_cast<std::size_t>(N - ell));
  for (int K = ell; K <= N - 1; ++K) basis.push_back(gegenbauer_exact(K - ell, ell + 1));
  return basis;
}

DecompositionTable jacobi_to_gegenbauer(int N, int ell) {
  require_indices(N, ell);
  const SPoly target = jacobi_exact(N - 1 - ell, ell);
  const auto basis = rescaled_harmonic_basis(N, ell);
  return DecompositionTable(N, ell, triangular_change_of_basis(target, basis));
}

bool ClosedFormReport::all_match() const {
  for (const auto& e : entries) {
    if (!e.match) return false;
  }
  return !entries.empty();
}

nlohmann::json ClosedFormReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) {
    rows.push_back({{"row", e.row},
                    {"ell", e.ell},
                    {"K", e.K},
                    {"expected", scarf::to_json(e.expected)},
                    {"computed", scarf::to_json(e.computed)},
                    {"match", e.match}});
  }
  return {{"schema", 1}, {"N", N}, {"all_match", all_match()}, {"entries", rows}};
}

ClosedFormReport verify_closed_forms(int N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
  ClosedFormReport report;
  report.N = N;
  for (int offset : closed_form_rows(N)) {
    const int ell = N - 1 - offset;
    const auto expected = closed_form_coefficients(N, offset);
    const auto table = jacobi_to_gegenbauer(N, ell);
    for (int K = ell; K <= N - 1; ++K) {
      ClosedFormEntry e;
      e.ell = ell;
      e.K = K;
      e.row = "l=N-" + std::to_string(offset + 1);
      e.expected = expected[static_cast<std::size_t>(K - ell)];
      e.computed = table.coefficient(K);
      e.match = e.expected == e.computed;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
    case Parity::Zero: return "zero";
  }
  return "?";
}

std::vector<DegreeRecord> degree_profile(const DecompositionTable& table) {
  std::vector<DegreeRecord> out;
  for (int K = table.lowest_K(); K <= table.highest_K(); ++K) {
    const BPoly& c = table.coefficient(K);
    const int bound = table.N() - 1 - K;
    DegreeRecord r;
    r.K = K;
    r.max_degree = c.degree();
    r.min_nonzero_degree = c.min_degree();
    r.parity = parity_of(c);
    r.within_bound = r.max_degree <= bound;
    const Parity want = bound % 2 == 0 ? Parity::Even : Parity::Odd;
    r.parity_matches = r.parity == want || r.parity == Parity::Zero;
    out.push_back(r);
  }
  return out;
}

StructureReport check_structure(const DecompositionTable& table) {
  StructureReport r;
  r.N = table.N();
  r.ell = table.ell();
  const auto basis = rescaled_harmonic_basis(table.N(), table.ell());
  r.reconstruction = recombine(table.coefficients(), basis) == jacobi_exact(table.N() - 1 - table.ell(), table.ell());

  r.degree_bound = true;
  r.unperturbed_limit = true;
  r.parity = true;
  for (int K = table.lowest_K(); K <= table.highest_K(); ++K) {
    const BPoly& c = table.coefficient(K);
    const int bound = table.N() - 1 - K;
    if (c.degree() > bound) r.degree_bound = false;
    const bool vanishes = c.eval(Rational(0)).is_zero();
    if (K < table.N() - 1 ? !vanishes : vanishes) r.unperturbed_limit = false;
    const BPoly mirrored = bound % 2 == 0 ? c : -c;
    if (c.reflect() != mirrored) r.parity = false;
  }
  return r;
}

}  // namespace scarf
