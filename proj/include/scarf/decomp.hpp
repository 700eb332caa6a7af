#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scarf/bpoly.hpp"
#include "scarf/spoly.hpp"

namespace scarf {

/// Mixing coefficients of one perturbed quasi-radial state in the rescaled
/// hyperspherical basis:
///
///   P_{N-1-l}^{l-b+1/2, l+b+1/2}(s) = sum_{K=l}^{N-1} c_K(b) C_{K-l}^{l+1}(s).
///
/// Both sides carry the same factor F^{-1}(chi) cos^l(chi), so this polynomial
/// identity is the wave-function expansion itself.
class DecompositionTable {
 public:
  DecompositionTable(int N, int ell, std::vector<BPoly> coefficients);

  int N() const { return N_; }
  int ell() const { return ell_; }
  int lowest_K() const { return ell_; }
  int highest_K() const { return N_ - 1; }
  std::size_t size() const { return c_.size(); }

  /// c_K for K in [l, N-1]; throws InvalidArgument otherwise.
  const BPoly& coefficient(int K) const;
  /// Coefficients ordered by K = l, l+1, ..., N-1.
  const std::vector<BPoly>& coefficients() const { return c_; }

  /// {"schema": 1, "N": .., "ell": .., "c": {"K": ["num/den", ...]}}
  nlohmann::json to_json() const;

 private:
  int N_;
  int ell_;
  std::vector<BPoly> c_;
};

/// Gegenbauer basis {C_{K-l}^{l+1} : K = l..N-1} in s.
std::vector<SPoly> rescaled_harmonic_basis(int N, int ell);

/// Requires 0 <= l <= N-1.
DecompositionTable jacobi_to_gegenbauer(int N, int ell);

// ---- closed forms of the first four rows ---------------------------------

/// Which rows of the closed-form table exist at this N (l = N-1 .. N-4, l >= 0).
std::vector<int> closed_form_rows(int N);

/// Closed-form coefficients for l = N - 1 - row_offset, ordered by K = l..N-1.
/// row_offset in {0, 1, 2, 3}.
std::vector<BPoly> closed_form_coefficients(int N, int row_offset);

struct ClosedFormEntry {
  int ell = 0;
  int K = 0;
  std::string row;  // "l=N-1", ...
  BPoly expected;
  BPoly computed;
  bool match = false;
};

struct ClosedFormReport {
  int N = 0;
  std::vector<ClosedFormEntry> entries;
  bool all_match() const;
  nlohmann::json to_json() const;
};

/// Compares every available closed-form row at this N against
/// jacobi_to_gegenbauer bit-exactly. Mismatches are entries, not exceptions.
ClosedFormReport verify_closed_forms(int N);

// ---- structure -------------------------------------------------------------

enum class Parity { Even, Odd, Mixed, Zero };
const char* parity_name(Parity p);

struct DegreeRecord {
  int K = 0;
  int max_degree = BPoly::kZeroDegree;
  int min_nonzero_degree = BPoly::kZeroDegree;
  Parity parity = Parity::Zero;
  bool within_bound = false;   // max_degree <= N-1-K
  bool parity_matches = false; // parity is (-1)^{N-1-K}
};

std::vector<DegreeRecord> degree_profile(const DecompositionTable& table);

struct StructureReport {
  int N = 0;
  int ell = 0;
  bool reconstruction = false;     // sum c_K C_{K-l}^{l+1} == P_n exactly
  bool degree_bound = false;       // deg_b c_K <= N-1-K
  bool unperturbed_limit = false;  // c_K(0) = 0 for K < N-1, c_{N-1}(0) != 0
  bool parity = false;             // c_K(-b) = (-1)^{N-1-K} c_K(b)
  bool ok() const { return reconstruction && degree_bound && unperturbed_limit && parity; }
};

StructureReport check_structure(const DecompositionTable& table);

}  // namespace scarf
