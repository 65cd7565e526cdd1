#include "troprate/inequality.hpp"

#include "troprate/errors.hpp"

namespace troprate {

TropMatrix solve_upper_bound(const TropMatrix& a, const TropMatrix& d) {
  if (d.cols() != 1 || d.rows() != a.rows()) {
    throw DimensionError("upper bound: right-hand side must be a column of "
                         "matching length");
  }
  if (!a.is_column_regular()) {
    throw PreconditionError("upper bound: matrix has an all-zero column");
  }
  if (!d.is_positive()) {
    throw PreconditionError("upper bound: right-hand side has a zero entry");
  }
  return conj_transpose(conj_transpose(d) * a);
}

GeneratorSet solve_closure(const TropMatrix& b, double tol) {
  return GeneratorSet{kleene_star(b, tol)};
}

}  // namespace troprate
