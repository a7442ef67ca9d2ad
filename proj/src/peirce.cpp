#include "h2c/peirce.hpp"

namespace h2c {

bool is_idempotent(const Algebra& a, const Element& e) {
  return !is_zero_vec(e) && a.mul(e, e) == e;
}

PeirceDecomposition peirce_decompose(const Algebra& a, const Element& e) {
  if (!is_idempotent(a, e)) throw Error(Errc::not_idempotent, "element is not a nonzero idempotent");
  const FieldSpec& f = a.field();
  Mat re = a.mult_matrix(e);

  auto shifted = [&](const Scalar& lambda) {
    Mat m = re;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) -= lambda;
    return Subspace::span(kernel(m));
  };

  PeirceDecomposition d{e, shifted(Scalar::one(f)), shifted(Scalar::fraction(1, 2, f)),
                        shifted(Scalar::zero(f))};
  if (d.one.dim() + d.half.dim() + d.zero.dim() != a.dim())
    throw Error(Errc::not_jordan,
                "eigenspaces of multiplication by the idempotent do not fill the algebra");
  return d;
}

}  // namespace h2c
