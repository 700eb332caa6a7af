#pragma once

#include <optional>

#include "scarf/spoly.hpp"

namespace scarf {

/// P_n^{alpha,beta} with alpha = l - b + 1/2 and beta = l + b + 1/2, so that
/// alpha + beta = 2l + 1 does not depend on b.
struct JacobiParams {
  int n = 0;
  int ell = 0;
};

/// C_k^lambda, normalized so that C_1^lambda(x) = 2 lambda x.
struct GegenbauerParams {
  int k = 0;
  int lambda = 1;
};

/// Exact Jacobi polynomial in s with coefficients in Q[b], built with the
/// three-term recurrence.
SPoly jacobi_exact(int n, int ell);

/// Exact Gegenbauer polynomial (b-free coefficients).
SPoly gegenbauer_exact(int k, int lambda);

// Floating-point evaluation for arbitrary real parameters. `order` selects
// the derivative d^order/dx^order (0, 1 or 2); derivatives use the shifted
// family identities rather than differentiating the recurrence.
double jacobi_value(int n, double alpha, double beta, double x, int order = 0);
double gegenbauer_value(int k, double lambda, double x, int order = 0);

struct FamilyValue {
  double value = 0.0;
  std::optional<double> derivative;
};

/// Jacobi member of the deformed family at b = b0. Throws DomainError for |x| > 1.
FamilyValue eval_float_family(const JacobiParams& params, double b0, double x, bool with_derivative);
/// Throws DomainError for |x| > 1.
FamilyValue eval_float_family(const GegenbauerParams& params, double x, bool with_derivative);

}  // namespace scarf
