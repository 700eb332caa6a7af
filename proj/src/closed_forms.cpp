// Closed-form mixing coefficients for the four highest orbital momenta of a
// multiplet, l = N-1 .. N-4, written out as rational functions of N.
// Coefficients are listed for K = l, l+1, ..., N-1.
//
// These are an independent fixture: verify_closed_forms() compares them
// against the back-substitution result and trusts neither side.

#include "scarf/decomp.hpp"
#include "scarf/error.hpp"

namespace scarf {

namespace {

Rational q(long n) { return Rational(n); }

}  // namespace

std::vector<int> closed_form_rows(int N) {
  std::vector<int> rows;
  for (int offset = 0; offset <= 3; ++offset) {
    if (N - 1 - offset >= 0) rows.push_back(offset);
  }
  return rows;
}

std::vector<BPoly> closed_form_coefficients(int N, int row_offset) {
  if (row_offset < 0 || row_offset > 3 || N - 1 - row_offset < 0) {
    throw Error(ErrorCode::InvalidArgument, "no closed-form row l=N-" + std::to_string(row_offset + 1) +
                                                " at N=" + std::to_string(N));
  }
  const Rational n(N);
  const BPoly b = BPoly::b();
  switch (row_offset) {
    case 0:
      // phi_{N,N-1} = S~_{N-1,N-1}
      return {BPoly(1)};
    case 1:
      // phi_{N,N-2} = (2N-1)/(4(N-1)) S~_{N-1,N-2} - b S~_{N-2,N-2}
      return {-b, BPoly((q(2) * n - q(1)) / (q(4) * (n - q(1))))};
    case 2:
      // phi_{N,N-3} = 1/8 (2N-1)/(N-2) S~_{N-1} - b/2 (N-1)/(N-2) S~_{N-2} + b^2/2 S~_{N-3}
      return {BPoly::monomial(Rational(1, 2), 2),
              b * (-(n - q(1)) / (q(2) * (n - q(2)))),
              BPoly((q(2) * n - q(1)) / (q(8) * (n - q(2))))};
    default: {
      // phi_{N,N-4} = 1/32 (4(N-1)^2-1)/((N-3)(N-2)) S~_{N-1}
      //             - b/8 (2N-3)(N-1)/((N-2)(N-3)) S~_{N-2}
      //             + b^2/8 (2N-3)/(N-3) S~_{N-3}
      //             - b/24 [4b^2(N-2) + (2N-1)]/(N-2) S~_{N-4}
      const BPoly lowest = (BPoly::monomial(q(4) * (n - q(2)), 2) + BPoly(q(2) * n - q(1))) * b *
                           (-Rational(1) / (q(24) * (n - q(2))));
      return {lowest,
              BPoly::monomial((q(2) * n - q(3)) / (q(8) * (n - q(3))), 2),
              b * (-(q(2) * n - q(3)) * (n - q(1)) / (q(8) * (n - q(2)) * (n - q(3)))),
              BPoly((q(4) * (n - q(1)) * (n - q(1)) - q(1)) / (q(32) * (n - q(3)) * (n - q(2))))};
    }
  }
}

}  // namespace scarf
