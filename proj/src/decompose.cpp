#include "h2c/decompose.hpp"

#include "h2c/constructions.hpp"

namespace h2c {

H2Frame verify_h2_frame(const Algebra& j, const Element& e, const Element& h) {
  Element one = j.unit() ? *j.unit() : find_unit(j);
  Scalar half = Scalar::fraction(1, 2, j.field());
  if (j.mul(e, e) != e) throw Error(Errc::relation_failed, "e*e=e");
  if (j.mul(h, h) != one) throw Error(Errc::relation_failed, "h*h=1");
  if (j.mul(e, h) != half * h) throw Error(Errc::relation_failed, "e*h=h/2");
  Mat rows = Mat::from_rows({one, e, h}, j.dim(), j.field());
  if (rows.rank() != 3) throw Error(Errc::dependent_frame, "{1,e,h} are linearly dependent");
  return {e, h, one};
}

namespace {

Mat stack(const std::vector<Mat>& mats) {
  std::size_t rows = 0;
  for (const auto& m : mats) rows += m.rows();
  Mat out(rows, mats[0].cols(), mats[0].field());
  std::size_t r = 0;
  for (const auto& m : mats)
    for (std::size_t i = 0; i < m.rows(); ++i) out.set_row(r++, m.row(i));
  return out;
}

// matrix of z -> (z, a, b) = (za)b - z(ab)
Mat associator_condition(const Algebra& j, const Element& a, const Element& b) {
  Mat ra = j.mult_matrix(a);
  Mat rb = j.mult_matrix(b);
  Mat rab = j.mult_matrix(j.mul(a, b));
  Mat out = rb * ra;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t k = 0; k < out.cols(); ++k) out.at(i, k) -= rab.at(i, k);
  return out;
}

}  // namespace

Subspace compute_z(const Algebra& j, const H2Frame& frame) {
  std::vector<Mat> conditions;
  for (const Element* a : {&frame.e, &frame.h})
    for (const Element* b : {&frame.e, &frame.h})
      conditions.push_back(associator_condition(j, *a, *b));
  return Subspace::span(kernel(stack(conditions)));
}

Subspace compute_n(const Algebra& j, const H2Frame& frame) {
  Mat re = j.mult_matrix(frame.e);
  Scalar half = Scalar::fraction(1, 2, j.field());
  for (std::size_t i = 0; i < re.rows(); ++i) re.at(i, i) -= half;
  Mat rh = j.mult_matrix(frame.h);
  return Subspace::span(kernel(stack({re, rh})));
}

namespace {

Mat embedding_matrix(const Algebra& j, const H2Frame& frame, const Subspace& z,
                     const Subspace& n) {
  Mat d(j.dim(), 3 * z.dim() + n.dim(), j.field());
  for (std::size_t i = 0; i < z.dim(); ++i) {
    Element zi = z.basis_vector(i);
    d.set_col(i, zi);
    d.set_col(z.dim() + i, j.mul(frame.e, zi));
    d.set_col(2 * z.dim() + i, j.mul(frame.h, zi));
  }
  for (std::size_t jn = 0; jn < n.dim(); ++jn) d.set_col(3 * z.dim() + jn, n.basis_vector(jn));
  return d;
}

}  // namespace

Report check_module_decomposition(const Algebra& j, const H2Frame& frame, const Subspace& z,
                                  const Subspace& n) {
  if (j.dim() != 3 * z.dim() + n.dim())
    return {false, "dim J = " + std::to_string(j.dim()) + " != 3*" + std::to_string(z.dim()) +
                       " + " + std::to_string(n.dim())};
  Mat d = embedding_matrix(j, frame, z, n);
  if (d.rank() != j.dim())
    return {false, "{z_i, e z_i, h z_i} u {n_j} is not a basis of J"};
  for (std::size_t a = 0; a < n.dim(); ++a)
    for (std::size_t b = a; b < n.dim(); ++b)
      if (!z.contains(j.mul(n.basis_vector(a), n.basis_vector(b))))
        return {false, "N*N escapes Z at (n" + std::to_string(a) + ",n" + std::to_string(b) + ")"};
  for (std::size_t a = 0; a < z.dim(); ++a)
    for (std::size_t b = 0; b < n.dim(); ++b)
      if (!n.contains(j.mul(z.basis_vector(a), n.basis_vector(b))))
        return {false, "Z*N escapes N at (z" + std::to_string(a) + ",n" + std::to_string(b) + ")"};
  return {};
}

GradedBracketAlgebra extract_brackets(const Algebra& j, const H2Frame& frame, const Subspace& z,
                                      const Subspace& n) {
  const FieldSpec& f = j.field();
  GradedBracketAlgebra s;
  s.field = f;
  s.s0_dim = z.dim();
  s.s1_dim = n.dim();
  s.p00 = make_table(s.s0_dim, s.s0_dim, s.s0_dim, f);
  s.p01 = make_table(s.s0_dim, s.s1_dim, s.s1_dim, f);
  s.p11 = make_table(s.s1_dim, s.s1_dim, s.s0_dim, f);
  s.b00 = make_table(s.s0_dim, s.s0_dim, s.s1_dim, f);
  s.b01 = make_table(s.s0_dim, s.s1_dim, s.s0_dim, f);
  s.convention = BracketConvention::raw;

  auto in_z = [&](const Element& v, const char* what) {
    auto c = z.coordinates(v);
    if (!c) throw Error(Errc::bracket_escapes_component, std::string(what) + " escapes Z");
    return *c;
  };
  auto in_n = [&](const Element& v, const char* what) {
    auto c = n.coordinates(v);
    if (!c) throw Error(Errc::bracket_escapes_component, std::string(what) + " escapes N");
    return *c;
  };

  for (std::size_t i = 0; i < z.dim(); ++i) {
    Element zi = z.basis_vector(i);
    for (std::size_t jj = 0; jj < z.dim(); ++jj) {
      Element zj = z.basis_vector(jj);
      s.p00[i][jj] = in_z(j.mul(zi, zj), "Z*Z product");
      // {z_i, z_j} = (e z_j, z_i, h)
      Element br = associator(j, j.mul(frame.e, zj), zi, frame.h);
      s.b00[i][jj] = in_n(br, "even bracket value");
    }
    for (std::size_t jj = 0; jj < n.dim(); ++jj) {
      Element nj = n.basis_vector(jj);
      s.p01[i][jj] = in_n(j.mul(zi, nj), "Z*N product");
      // {z_i, n_j} = -h (z_i, e, n_j)
      Element br = -Scalar::one(f) * j.mul(frame.h, associator(j, zi, frame.e, nj));
      s.b01[i][jj] = in_z(br, "mixed bracket value");
    }
  }
  for (std::size_t i = 0; i < n.dim(); ++i)
    for (std::size_t jj = 0; jj < n.dim(); ++jj)
      s.p11[i][jj] = in_z(j.mul(n.basis_vector(i), n.basis_vector(jj)), "N*N product");

  s.unit = in_z(frame.one, "unit");
  validate_shape(s);
  return s;
}

DecompositionResult decompose(const Algebra& j, const Element& e, const Element& h) {
  H2Frame frame = verify_h2_frame(j, e, h);
  Subspace z = compute_z(j, frame);
  Subspace n = compute_n(j, frame);
  Report mod = check_module_decomposition(j, frame, z, n);
  if (!mod.pass) throw Error(Errc::not_jordan, "module decomposition failed: " + mod.witness);
  GradedBracketAlgebra s = extract_brackets(j, frame, z, n);
  Mat d = embedding_matrix(j, frame, z, n);
  return {frame, z, n, std::move(s), std::move(d)};
}

std::pair<Algebra, H2Frame> reconstruct(const GradedBracketAlgebra& s) {
  if (s.convention == BracketConvention::raw && !s.has_zero_brackets())
    throw Error(Errc::wrong_convention,
                "tensor reconstruction needs an epsilon-rescaled bracket (or zero brackets)");
  Algebra out = build_tensor_algebra(s);
  const std::size_t n0 = s.s0_dim;
  Element e = out.zero(), h = out.zero(), one = out.zero();
  for (std::size_t i = 0; i < n0; ++i) {
    e[i] = s.unit[i];
    h[2 * n0 + i] = s.unit[i];
    one[i] = s.unit[i];
    one[n0 + i] = s.unit[i];
  }
  out.declare_unit(one);
  return {std::move(out), H2Frame{e, h, one}};
}

Mat reconstruction_map(const DecompositionResult& d, const Scalar& eps) {
  const FieldSpec& f = d.s.field;
  if (!(eps.field() == f) || !(eps * eps == Scalar::of_int(-1, f)))
    throw Error(Errc::bad_epsilon, "twist element must square to -1");
  const std::size_t nz = d.z.dim(), nn = d.n.dim();
  const std::size_t dim = 3 * nz + nn;
  // images of the decomposition basis [z_i | e z_i | h z_i | n_j]
  Mat u(dim, dim, f);
  for (std::size_t i = 0; i < nz; ++i) {
    u.at(i, i) = Scalar::one(f);           // z_i -> e x z_i + f x z_i
    u.at(nz + i, i) = Scalar::one(f);
    u.at(i, nz + i) = Scalar::one(f);      // e z_i -> e x z_i
    u.at(2 * nz + i, 2 * nz + i) = Scalar::one(f);  // h z_i -> h x z_i
  }
  for (std::size_t j = 0; j < nn; ++j) u.at(3 * nz + j, 3 * nz + j) = eps;  // n_j -> eps k x n_j
  auto dinv = inverse(d.embedding);
  if (!dinv) throw Error(Errc::invalid_input, "decomposition basis matrix is singular");
  return u * *dinv;
}

bool verify_isomorphism(const Algebra& a, const Algebra& b, const Mat& l) {
  if (a.dim() != b.dim() || l.rows() != b.dim() || l.cols() != a.dim())
    throw Error(Errc::dimension_mismatch, "isomorphism check needs equal dimensions");
  if (!(a.field() == b.field())) throw Error(Errc::field_mismatch, "isomorphism across fields");
  if (l.rank() != a.dim()) return false;
  Element ua = a.unit() ? *a.unit() : find_unit(a);
  Element ub = b.unit() ? *b.unit() : find_unit(b);
  if (l.apply(ua) != ub) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Element li = l.col(i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (l.apply(a.basis_product(i, j)) != b.mul(li, l.col(j))) return false;
    }
  }
  return true;
}

}  // namespace h2c
