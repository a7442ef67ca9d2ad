#include "h2c/random.hpp"

namespace h2c {

std::uint64_t Rng::uniform(std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(eng_);
}

Scalar Rng::scalar(const FieldSpec& f) {
  switch (f.kind) {
    case FieldKind::prime:
      return Scalar::residue(uniform(f.p), f);
    case FieldKind::rational: {
      long num = static_cast<long>(uniform(13)) - 6;
      long den = static_cast<long>(uniform(3)) + 1;
      return Scalar::fraction(num, den, f);
    }
    case FieldKind::gaussian_rational: {
      Scalar re = scalar(FieldSpec::rationals());
      Scalar im = scalar(FieldSpec::rationals());
      return Scalar::gaussian(re.re(), im.re());
    }
  }
  return Scalar::zero(f);
}

Element Rng::element(const Algebra& a) {
  Element e = a.zero();
  for (auto& c : e) c = scalar(a.field());
  return e;
}

}  // namespace h2c
