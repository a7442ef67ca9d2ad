#include "h2c/constructions.hpp"

#include "h2c/random.hpp"

namespace h2c {

bool same_structure_constants(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || !(a.field() == b.field())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
  return true;
}

std::pair<Algebra, H2Frame> h2f(const FieldSpec& f) {
  Algebra a(f, {"e", "f", "h"});
  Scalar one = Scalar::one(f), half = Scalar::fraction(1, 2, f);
  a.add_term(0, 0, 0, one);  // e e = e
  a.add_term(1, 1, 1, one);  // f f = f
  a.add_term(0, 2, 2, half);
  a.add_term(2, 0, 2, half);  // e h = h/2
  a.add_term(1, 2, 2, half);
  a.add_term(2, 1, 2, half);  // f h = h/2
  a.add_term(2, 2, 0, one);
  a.add_term(2, 2, 1, one);  // h h = e + f
  Element e = a.basis_element(0), h = a.basis_element(2);
  Element unit = e + a.basis_element(1);
  a.declare_unit(unit);
  return {std::move(a), H2Frame{e, h, unit}};
}

Algebra m2(const FieldSpec& f) {
  Algebra a(f, {"e11", "e12", "e21", "e22"});
  Scalar one = Scalar::one(f);
  auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v)
          if (c == u) a.add_term(idx(r, c), idx(u, v), idx(r, v), one);
  a.declare_unit(a.basis_element(0) + a.basis_element(3));
  return a;
}

Mat m2_transpose(const FieldSpec& f) {
  Mat star(4, 4, f);
  Scalar one = Scalar::one(f);
  star.at(0, 0) = one;
  star.at(2, 1) = one;  // e12 -> e21
  star.at(1, 2) = one;
  star.at(3, 3) = one;
  return star;
}

Mat m2_symplectic(const FieldSpec& f) {
  // adj: e11 <-> e22, e12 -> -e12, e21 -> -e21
  Mat star(4, 4, f);
  Scalar one = Scalar::one(f);
  star.at(3, 0) = one;
  star.at(0, 3) = one;
  star.at(1, 1) = -one;
  star.at(2, 2) = -one;
  return star;
}

namespace {

// coordinates of a 2x2 matrix (std basis) in the basis {e, f, h, k}
Vec to_efhk(const Vec& w) {
  const FieldSpec& f = w[0].field();
  Scalar half = Scalar::fraction(1, 2, f);
  return {w[0], w[3], half * (w[1] + w[2]), half * (w[1] - w[2])};
}

Element jordan_mul(const Algebra& a, const Element& x, const Element& y) {
  return Scalar::fraction(1, 2, a.field()) * (a.mul(x, y) + a.mul(y, x));
}

}  // namespace

std::pair<Algebra, H2Frame> m2_plus(const FieldSpec& f) {
  Algebra std_m2 = m2(f);
  std::vector<Element> basis = {
      std_m2.basis_element(0),                              // e
      std_m2.basis_element(3),                              // f
      std_m2.basis_element(1) + std_m2.basis_element(2),    // h
      std_m2.basis_element(1) - std_m2.basis_element(2)};   // k
  Algebra a(f, {"e", "f", "h", "k"});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vec coords = to_efhk(jordan_mul(std_m2, basis[i], basis[j]));
      for (std::size_t k = 0; k < 4; ++k) a.add_term(i, j, k, coords[k]);
    }
  Element e = a.basis_element(0), h = a.basis_element(2);
  Element unit = e + a.basis_element(1);
  a.declare_unit(unit);
  return {std::move(a), H2Frame{e, h, unit}};
}

namespace {

// symmetric n x n matrices under the Jordan product
std::pair<Algebra, H2Frame> hermitian_nxn(const FieldSpec& f, std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // (r, c) with r <= c
  for (std::size_t r = 0; r < n; ++r) {
    names.push_back("E" + std::to_string(r + 1) + std::to_string(r + 1));
    cells.emplace_back(r, r);
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      names.push_back("F" + std::to_string(r + 1) + std::to_string(c + 1));
      cells.emplace_back(r, c);
    }
  const std::size_t dim = cells.size();

  auto rep = [&](std::size_t b) {
    std::vector<Vec> m(n, zero_vec(n, f));
    auto [r, c] = cells[b];
    m[r][c] = Scalar::one(f);
    m[c][r] = Scalar::one(f);
    return m;
  };

  Algebra a(f, names);
  Scalar half = Scalar::fraction(1, 2, f);
  for (std::size_t bi = 0; bi < dim; ++bi) {
    auto x = rep(bi);
    for (std::size_t bj = 0; bj < dim; ++bj) {
      auto y = rep(bj);
      // (xy + yx)/2 entrywise
      for (std::size_t t = 0; t < dim; ++t) {
        auto [r, c] = cells[t];
        Scalar v = Scalar::zero(f);
        for (std::size_t s = 0; s < n; ++s) v += x[r][s] * y[s][c] + y[r][s] * x[s][c];
        a.add_term(bi, bj, t, half * v);
      }
    }
  }
  Element unit = a.zero();
  for (std::size_t r = 0; r < n; ++r) unit[r] = Scalar::one(f);
  a.declare_unit(unit);
  return {std::move(a), H2Frame{}};
}

std::size_t offdiag_index(std::size_t n, std::size_t r, std::size_t c) {
  // index of F(r+1)(c+1) with r < c, after the n diagonal cells
  std::size_t idx = n;
  for (std::size_t i = 0; i < r; ++i) idx += n - 1 - i;
  return idx + (c - r - 1);
}

}  // namespace

std::pair<Algebra, H2Frame> h4f(const FieldSpec& f) {
  auto [a, unused] = hermitian_nxn(f, 4);
  Element e = a.basis_element(0) + a.basis_element(1);              // diag(1,1,0,0)
  Element h = a.basis_element(offdiag_index(4, 0, 2)) +             // F13
              a.basis_element(offdiag_index(4, 1, 3));              // F24
  return {std::move(a), H2Frame{e, h, *a.unit()}};
}

Algebra field_algebra(const FieldSpec& f) {
  Algebra a(f, {"1"});
  a.add_term(0, 0, 0, Scalar::one(f));
  a.declare_unit(a.basis_element(0));
  return a;
}

Algebra f_plus_f(const FieldSpec& f) {
  Algebra a(f, {"a", "b"});
  a.add_term(0, 0, 0, Scalar::one(f));
  a.add_term(1, 1, 1, Scalar::one(f));
  a.declare_unit(a.basis_element(0) + a.basis_element(1));
  return a;
}

Mat f_plus_f_exchange(const FieldSpec& f) {
  Mat star(2, 2, f);
  star.at(0, 1) = Scalar::one(f);
  star.at(1, 0) = Scalar::one(f);
  return star;
}

Algebra dual_numbers(const FieldSpec& f) {
  Algebra a(f, {"1", "t"});
  a.add_term(0, 0, 0, Scalar::one(f));
  a.add_term(0, 1, 1, Scalar::one(f));
  a.add_term(1, 0, 1, Scalar::one(f));
  a.declare_unit(a.basis_element(0));
  return a;
}

InvolutiveAlgebra make_involutive(Algebra a, Mat star) {
  Report assoc = is_associative(a);
  if (!assoc.pass) throw Error(Errc::not_associative, assoc.witness);
  if (!a.unit()) a.declare_unit(find_unit(a));
  if (star.rows() != a.dim() || star.cols() != a.dim())
    throw Error(Errc::dimension_mismatch, "involution matrix shape mismatch");
  if (star * star != Mat::identity(a.dim(), a.field()))
    throw Error(Errc::not_involutive, "star is not an involution of the vector space");
  if (star.apply(*a.unit()) != *a.unit())
    throw Error(Errc::not_involutive, "star does not fix the unit");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (star.apply(a.basis_product(i, j)) != a.mul(star.col(j), star.col(i)))
        throw Error(Errc::not_involutive, "star(xy) != star(y)star(x) at (" + a.basis_name(i) +
                                              "," + a.basis_name(j) + ")");
  return {std::move(a), std::move(star)};
}

namespace {

struct SplitParts {
  Subspace h, k;
};

SplitParts symmetric_split(const InvolutiveAlgebra& inv) {
  Mat plus = inv.star, minus = inv.star;
  for (std::size_t i = 0; i < plus.rows(); ++i) {
    plus.at(i, i) -= Scalar::one(inv.a.field());
    minus.at(i, i) += Scalar::one(inv.a.field());
  }
  SplitParts parts{Subspace::span(kernel(plus)), Subspace::span(kernel(minus))};
  if (parts.h.dim() + parts.k.dim() != inv.a.dim())
    throw Error(Errc::not_involutive, "symmetric/skew parts do not fill the algebra");
  return parts;
}

}  // namespace

GradedBracketAlgebra split_involution(const InvolutiveAlgebra& inv, bool include_total) {
  const FieldSpec& f = inv.a.field();
  SplitParts parts = symmetric_split(inv);
  const Subspace& hs = parts.h;
  const Subspace& ks = parts.k;

  GradedBracketAlgebra s;
  s.field = f;
  s.s0_dim = hs.dim();
  s.s1_dim = ks.dim();
  s.p00 = make_table(s.s0_dim, s.s0_dim, s.s0_dim, f);
  s.p01 = make_table(s.s0_dim, s.s1_dim, s.s1_dim, f);
  s.p11 = make_table(s.s1_dim, s.s1_dim, s.s0_dim, f);
  s.b00 = make_table(s.s0_dim, s.s0_dim, s.s1_dim, f);
  s.b01 = make_table(s.s0_dim, s.s1_dim, s.s0_dim, f);
  if (include_total) s.b11 = make_table(s.s1_dim, s.s1_dim, s.s1_dim, f);
  s.convention = BracketConvention::epsilon_rescaled;

  Scalar quarter = Scalar::fraction(1, 4, f);
  auto coords = [&](const Subspace& comp, const Element& v, const char* what) {
    auto c = comp.coordinates(v);
    if (!c) throw Error(Errc::invalid_input, std::string("involution split: ") + what +
                                                 " escaped its component");
    return *c;
  };

  for (std::size_t i = 0; i < s.s0_dim; ++i) {
    Element hi = hs.basis_vector(i);
    for (std::size_t j = 0; j < s.s0_dim; ++j) {
      Element hj = hs.basis_vector(j);
      s.p00[i][j] = coords(hs, jordan_mul(inv.a, hi, hj), "H.H");
      s.b00[i][j] = coords(ks, quarter * commutator(inv.a, hi, hj), "[H,H]");
    }
    for (std::size_t j = 0; j < s.s1_dim; ++j) {
      Element kj = ks.basis_vector(j);
      s.p01[i][j] = coords(ks, jordan_mul(inv.a, hi, kj), "H.K");
      s.b01[i][j] = coords(hs, quarter * commutator(inv.a, hi, kj), "[H,K]");
    }
  }
  for (std::size_t i = 0; i < s.s1_dim; ++i) {
    Element ki = ks.basis_vector(i);
    for (std::size_t j = 0; j < s.s1_dim; ++j) {
      Element kj = ks.basis_vector(j);
      s.p11[i][j] = coords(hs, jordan_mul(inv.a, ki, kj), "K.K");
      if (include_total) (*s.b11)[i][j] = coords(ks, quarter * commutator(inv.a, ki, kj), "[K,K]");
    }
  }
  s.unit = coords(hs, *inv.a.unit(), "unit");
  validate_shape(s);
  return s;
}

std::pair<Algebra, H2Frame> build_h2_matrix(const InvolutiveAlgebra& inv) {
  const FieldSpec& f = inv.a.field();
  const std::size_t da = inv.a.dim();
  SplitParts parts = symmetric_split(inv);
  const std::size_t nh = parts.h.dim(), nk = parts.k.dim();

  // M2(A) on basis e_rs x a_t
  std::vector<std::string> names;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t t = 0; t < da; ++t)
        names.push_back("m" + std::to_string(r + 1) + std::to_string(s + 1) + "." +
                        inv.a.basis_name(t));
  Algebra m2a(f, names);
  auto midx = [da](std::size_t r, std::size_t s, std::size_t t) { return (r * 2 + s) * da + t; };
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v) {
          if (s != u) continue;
          for (std::size_t t = 0; t < da; ++t)
            for (std::size_t w = 0; w < da; ++w)
              for (const auto& [k, c] : inv.a.product_terms(t, w))
                m2a.add_term(midx(r, s, t), midx(u, v, w), midx(r, v, k), c);
        }

  // hermitian basis in M2(A) coordinates
  const std::size_t dim = 3 * nh + nk;
  Mat basis(4 * da, dim, f);
  auto put = [&](std::size_t col, std::size_t r, std::size_t s, const Element& a_elem,
                 const Scalar& sign) {
    for (std::size_t t = 0; t < da; ++t)
      if (!a_elem[t].is_zero()) basis.at(midx(r, s, t), col) += sign * a_elem[t];
  };
  Scalar one = Scalar::one(f), minus = -one;
  for (std::size_t i = 0; i < nh; ++i) {
    Element hi = parts.h.basis_vector(i);
    put(i, 0, 0, hi, one);               // e x h_i
    put(nh + i, 1, 1, hi, one);          // f x h_i
    put(2 * nh + i, 0, 1, hi, one);      // h x h_i
    put(2 * nh + i, 1, 0, hi, one);
  }
  for (std::size_t j = 0; j < nk; ++j) {
    Element kj = parts.k.basis_vector(j);
    put(3 * nh + j, 0, 1, kj, one);      // k x k_j
    put(3 * nh + j, 1, 0, kj, minus);
  }

  std::vector<std::string> jnames;
  for (const char* blk : {"e", "f", "h"})
    for (std::size_t i = 0; i < nh; ++i) jnames.push_back(std::string(blk) + ".h" + std::to_string(i));
  for (std::size_t j = 0; j < nk; ++j) jnames.push_back("k.k" + std::to_string(j));

  Algebra out(f, jnames);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Element p = jordan_mul(m2a, basis.col(i), basis.col(j));
      auto coords = solve(basis, p);
      if (!coords)
        throw Error(Errc::invalid_input, "hermitian product left the hermitian subspace");
      for (std::size_t k = 0; k < dim; ++k) out.add_term(i, j, k, (*coords)[k]);
    }

  auto gamma = parts.h.coordinates(*inv.a.unit());
  if (!gamma) throw Error(Errc::not_involutive, "unit is not star-symmetric");
  Element e = out.zero(), h = out.zero(), unit = out.zero();
  for (std::size_t i = 0; i < nh; ++i) {
    e[i] = (*gamma)[i];
    h[2 * nh + i] = (*gamma)[i];
    unit[i] = (*gamma)[i];
    unit[nh + i] = (*gamma)[i];
  }
  out.declare_unit(unit);
  return {std::move(out), H2Frame{e, h, unit}};
}

InvolutiveAlgebra cohn_envelope(const GradedBracketAlgebra& s) {
  validate_shape(s);
  if (!s.b11)
    throw Error(Errc::missing_bracket_slot, "Cohn envelope needs a total bracket (b11 missing)");
  const FieldSpec& f = s.field;
  const std::size_t n0 = s.s0_dim, n1 = s.s1_dim;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n0; ++i) names.push_back("z" + std::to_string(i));
  for (std::size_t j = 0; j < n1; ++j) names.push_back("n" + std::to_string(j));

  Algebra env(f, names);
  Scalar two = Scalar::of_int(2, f);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      for (std::size_t k = 0; k < n0; ++k) env.add_term(i, j, k, s.p00[i][j][k]);
      for (std::size_t k = 0; k < n1; ++k) env.add_term(i, j, n0 + k, two * s.b00[i][j][k]);
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n1; ++k) {
        env.add_term(i, n0 + j, n0 + k, s.p01[i][j][k]);
        env.add_term(n0 + j, i, n0 + k, s.p01[i][j][k]);
      }
      for (std::size_t k = 0; k < n0; ++k) {
        env.add_term(i, n0 + j, k, two * s.b01[i][j][k]);
        env.add_term(n0 + j, i, k, -(two * s.b01[i][j][k]));
      }
    }
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n0; ++k) env.add_term(n0 + i, n0 + j, k, s.p11[i][j][k]);
      for (std::size_t k = 0; k < n1; ++k)
        env.add_term(n0 + i, n0 + j, n0 + k, two * (*s.b11)[i][j][k]);
    }

  Mat star(n0 + n1, n0 + n1, f);
  for (std::size_t i = 0; i < n0; ++i) star.at(i, i) = Scalar::one(f);
  for (std::size_t j = 0; j < n1; ++j) star.at(n0 + j, n0 + j) = Scalar::of_int(-1, f);
  return make_involutive(std::move(env), std::move(star));
}

Algebra build_tensor_algebra(const GradedBracketAlgebra& s) {
  validate_shape(s);
  const FieldSpec& f = s.field;
  const std::size_t n0 = s.s0_dim, n1 = s.s1_dim;

  Algebra std_m2 = m2(f);
  std::vector<Element> outer = {
      std_m2.basis_element(0),                             // e
      std_m2.basis_element(3),                             // f
      std_m2.basis_element(1) + std_m2.basis_element(2),   // h
      std_m2.basis_element(1) - std_m2.basis_element(2)};  // k

  std::vector<std::string> names;
  for (const char* blk : {"e", "f", "h"})
    for (std::size_t i = 0; i < n0; ++i) names.push_back(std::string(blk) + ".z" + std::to_string(i));
  for (std::size_t j = 0; j < n1; ++j) names.push_back("k.n" + std::to_string(j));
  Algebra out(f, names);

  auto idx = [n0](std::size_t blk, std::size_t l) { return blk < 3 ? blk * n0 + l : 3 * n0 + l; };
  auto blk_deg = [](std::size_t blk) { return blk == 3 ? 1 : 0; };
  auto comp_dim = [&](int deg) { return deg == 0 ? n0 : n1; };

  for (std::size_t ba = 0; ba < 4; ++ba)
    for (std::size_t bb = 0; bb < 4; ++bb) {
      Vec jord = to_efhk(jordan_mul(std_m2, outer[ba], outer[bb]));
      Vec comm = to_efhk(commutator(std_m2, outer[ba], outer[bb]));
      int da = blk_deg(ba), db = blk_deg(bb);
      for (std::size_t i = 0; i < comp_dim(da); ++i)
        for (std::size_t j = 0; j < comp_dim(db); ++j) {
          GVec x = graded_basis(s, da, i), y = graded_basis(s, db, j);
          GVec xy = gmul(s, x, y);
          if (xy.deg == 0) {
            for (std::size_t blk = 0; blk < 3; ++blk)
              if (!jord[blk].is_zero())
                for (std::size_t l = 0; l < n0; ++l)
                  out.add_term(idx(ba, i), idx(bb, j), idx(blk, l), jord[blk] * xy.v[l]);
          } else {
            if (!jord[3].is_zero())
              for (std::size_t l = 0; l < n1; ++l)
                out.add_term(idx(ba, i), idx(bb, j), idx(3, l), jord[3] * xy.v[l]);
          }
          if (is_zero_vec(comm)) continue;  // in particular [k,k] = 0
          auto br = gbracket(s, x, y);
          if (!br) throw Error(Errc::invalid_input, "undefined bracket with nonzero commutator");
          if (br->deg == 0) {
            for (std::size_t blk = 0; blk < 3; ++blk)
              if (!comm[blk].is_zero())
                for (std::size_t l = 0; l < n0; ++l)
                  out.add_term(idx(ba, i), idx(bb, j), idx(blk, l), comm[blk] * br->v[l]);
          } else {
            if (!comm[3].is_zero())
              for (std::size_t l = 0; l < n1; ++l)
                out.add_term(idx(ba, i), idx(bb, j), idx(3, l), comm[3] * br->v[l]);
          }
        }
    }
  return out;
}

namespace {

Element form_value(const BilinearFormData& d, const Vec& x, const Vec& y) {
  Element out = d.a.zero();
  for (std::size_t i = 0; i < d.v_dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d.v_dim; ++j) {
      if (y[j].is_zero()) continue;
      out = out + (x[i] * y[j]) * d.gram[i][j];
    }
  }
  return out;
}

Vec action_value(const BilinearFormData& d, const Element& a, const Vec& x) {
  Vec out = zero_vec(d.v_dim, d.a.field());
  for (std::size_t i = 0; i < d.a.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d.v_dim; ++j) {
      if (x[j].is_zero()) continue;
      out = out + (a[i] * x[j]) * d.action[i][j];
    }
  }
  return out;
}

void validate_bilinear_data(const BilinearFormData& d) {
  if (!is_commutative(d.a).pass || !is_associative(d.a).pass)
    throw Error(Errc::invalid_input, "coefficient algebra must be commutative and associative");
  if (!d.a.unit()) throw Error(Errc::invalid_input, "coefficient algebra must be unital");
  if (d.v_dim < 2) throw Error(Errc::invalid_input, "module must contain the two distinguished vectors");
  if (d.gram.size() != d.v_dim || d.action.size() != d.a.dim())
    throw Error(Errc::invalid_input, "gram/action table shape mismatch");
  for (const auto& row : d.gram)
    if (row.size() != d.v_dim) throw Error(Errc::invalid_input, "gram table shape mismatch");
  for (const auto& row : d.action)
    if (row.size() != d.v_dim) throw Error(Errc::invalid_input, "action table shape mismatch");

  for (std::size_t i = 0; i < d.v_dim; ++i)
    for (std::size_t j = 0; j < d.v_dim; ++j)
      if (d.gram[i][j] != d.gram[j][i]) throw Error(Errc::invalid_input, "gram matrix not symmetric");

  const Element& unit = *d.a.unit();
  for (std::size_t k = 0; k < d.v_dim; ++k) {
    Vec vk = zero_vec(d.v_dim, d.a.field());
    vk[k] = Scalar::one(d.a.field());
    if (action_value(d, unit, vk) != vk)
      throw Error(Errc::invalid_input, "unit does not act as identity on the module");
  }
  for (std::size_t i = 0; i < d.a.dim(); ++i)
    for (std::size_t j = 0; j < d.a.dim(); ++j)
      for (std::size_t k = 0; k < d.v_dim; ++k) {
        Vec vk = zero_vec(d.v_dim, d.a.field());
        vk[k] = Scalar::one(d.a.field());
        Vec lhs = action_value(d, d.a.basis_product(i, j), vk);
        Vec rhs = action_value(d, d.a.basis_element(i), action_value(d, d.a.basis_element(j), vk));
        if (lhs != rhs) throw Error(Errc::invalid_input, "module action is not associative");
      }
  // A-bilinearity of the form
  for (std::size_t i = 0; i < d.a.dim(); ++i)
    for (std::size_t k = 0; k < d.v_dim; ++k)
      for (std::size_t l = 0; l < d.v_dim; ++l) {
        Vec vk = zero_vec(d.v_dim, d.a.field());
        vk[k] = Scalar::one(d.a.field());
        Vec vl = zero_vec(d.v_dim, d.a.field());
        vl[l] = Scalar::one(d.a.field());
        Element lhs = form_value(d, action_value(d, d.a.basis_element(i), vk), vl);
        Element rhs = d.a.mul(d.a.basis_element(i), d.gram[k][l]);
        if (lhs != rhs) throw Error(Errc::invalid_input, "form is not A-bilinear");
      }
  if (form_value(d, d.u, d.u) != *d.a.unit() || form_value(d, d.v, d.v) != *d.a.unit() ||
      !is_zero_vec(form_value(d, d.u, d.v)))
    throw Error(Errc::invalid_input, "distinguished vectors need f(u,u)=f(v,v)=1, f(u,v)=0");
}

}  // namespace

std::pair<Algebra, H2Frame> build_bilinear_form_algebra(const BilinearFormData& d) {
  validate_bilinear_data(d);
  const FieldSpec& f = d.a.field();
  const std::size_t da = d.a.dim();
  std::vector<std::string> names = d.a.basis_names();
  for (std::size_t j = 0; j < d.v_dim; ++j)
    names.push_back(j < d.v_names.size() ? d.v_names[j] : "v" + std::to_string(j));

  Algebra out(f, names);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& [k, c] : d.a.product_terms(i, j)) out.add_term(i, j, k, c);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < d.v_dim; ++j)
      for (std::size_t k = 0; k < d.v_dim; ++k) {
        out.add_term(i, da + j, da + k, d.action[i][j][k]);
        out.add_term(da + j, i, da + k, d.action[i][j][k]);
      }
  for (std::size_t i = 0; i < d.v_dim; ++i)
    for (std::size_t j = 0; j < d.v_dim; ++j)
      for (std::size_t k = 0; k < da; ++k) out.add_term(da + i, da + j, k, d.gram[i][j][k]);

  Element unit = out.zero();
  for (std::size_t i = 0; i < da; ++i) unit[i] = (*d.a.unit())[i];
  out.declare_unit(unit);

  Scalar half = Scalar::fraction(1, 2, f);
  Element e = out.zero(), h = out.zero();
  for (std::size_t i = 0; i < da; ++i) e[i] = half * (*d.a.unit())[i];
  for (std::size_t j = 0; j < d.v_dim; ++j) {
    e[da + j] = -(half * d.u[j]);
    h[da + j] = d.v[j];
  }
  Report jordan = is_jordan(out);
  if (!jordan.pass) throw Error(Errc::not_jordan, "bilinear-form algebra is not Jordan: " + jordan.witness);
  H2Frame frame = verify_h2_frame(out, e, h);
  return {std::move(out), frame};
}

BilinearFormData free_bilinear_module(const Algebra& a, std::size_t m,
                                      std::vector<std::string> v_names) {
  const FieldSpec& f = a.field();
  const std::size_t da = a.dim();
  BilinearFormData d(a);
  d.v_dim = m * da;
  d.v_names = std::move(v_names);
  auto vidx = [da](std::size_t slot, std::size_t t) { return slot * da + t; };
  d.gram.assign(d.v_dim, std::vector<Element>(d.v_dim, a.zero()));
  d.action.assign(da, std::vector<Vec>(d.v_dim, zero_vec(d.v_dim, f)));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < da; ++t)
      for (std::size_t w = 0; w < da; ++w)
        d.gram[vidx(s, t)][vidx(s, w)] = a.basis_product(t, w);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < da; ++t) {
        Element prod = a.basis_product(i, t);
        for (std::size_t k = 0; k < da; ++k) d.action[i][vidx(s, t)][vidx(s, k)] = prod[k];
      }
  d.u = zero_vec(d.v_dim, f);
  d.v = zero_vec(d.v_dim, f);
  const Element& unit = *a.unit();
  for (std::size_t t = 0; t < da; ++t) {
    d.u[vidx(0, t)] = unit[t];
    d.v[vidx(1, t)] = unit[t];
  }
  return d;
}

BilinearFormData spin_factor_data(const FieldSpec& f, std::size_t v_dim) {
  if (v_dim < 2) throw Error(Errc::invalid_input, "spin factor needs dim V >= 2");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v_dim; ++i) names.push_back("u" + std::to_string(i + 1));
  return free_bilinear_module(field_algebra(f), v_dim, std::move(names));
}

std::pair<Algebra, H2Frame> spin_factor(const FieldSpec& f, std::size_t v_dim) {
  return build_bilinear_form_algebra(spin_factor_data(f, v_dim));
}

BilinearRealization bilinear_realization(const GradedBracketAlgebra& s) {
  validate_shape(s);
  if (!s.has_zero_brackets())
    throw Error(Errc::invalid_input, "bilinear realization needs a zero bracket");
  const FieldSpec& f = s.field;
  const std::size_t n0 = s.s0_dim, n1 = s.s1_dim;

  BilinearFormData d(even_part_algebra(s));
  Element unit0 = zero_vec(n0, f);
  for (std::size_t i = 0; i < n0; ++i) unit0[i] = s.unit[i];
  d.a.declare_unit(unit0);
  // V = N + Z(1-2e) + Zh with f(x,y) = the A-component of xy
  d.v_dim = n1 + 2 * n0;
  for (std::size_t j = 0; j < n1; ++j) d.v_names.push_back("n" + std::to_string(j));
  for (std::size_t i = 0; i < n0; ++i) d.v_names.push_back("d.z" + std::to_string(i));
  for (std::size_t i = 0; i < n0; ++i) d.v_names.push_back("h.z" + std::to_string(i));
  d.gram.assign(d.v_dim, std::vector<Element>(d.v_dim, d.a.zero()));
  d.action.assign(n0, std::vector<Vec>(d.v_dim, zero_vec(d.v_dim, f)));
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b) d.gram[a][b] = -Scalar::one(f) * s.p11[a][b];
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      d.gram[n1 + i][n1 + j] = s.p00[i][j];
      d.gram[n1 + n0 + i][n1 + n0 + j] = s.p00[i][j];
    }
  for (std::size_t z = 0; z < n0; ++z) {
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t k = 0; k < n1; ++k) d.action[z][a][k] = s.p01[z][a][k];
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t k = 0; k < n0; ++k) {
        d.action[z][n1 + i][n1 + k] = s.p00[z][i][k];
        d.action[z][n1 + n0 + i][n1 + n0 + k] = s.p00[z][i][k];
      }
  }
  d.u = zero_vec(d.v_dim, f);
  d.v = zero_vec(d.v_dim, f);
  for (std::size_t i = 0; i < n0; ++i) {
    d.u[n1 + i] = s.unit[i];
    d.v[n1 + n0 + i] = s.unit[i];
  }

  auto [b, frame] = build_bilinear_form_algebra(d);

  // tensor basis [e x z_i | f x z_i | h x z_i | k x n_j] -> A + V, where V
  // is laid out as [N | (1-2e)Z | hZ] after the A block
  Mat map(n0 + d.v_dim, 3 * n0 + n1, f);
  Scalar half = Scalar::fraction(1, 2, f);
  const std::size_t dblock = n0 + n1, hblock = n0 + n1 + n0;
  for (std::size_t i = 0; i < n0; ++i) {
    map.at(i, i) = half;  // e x z_i = z_i/2 - ((1-2e)z_i)/2
    map.at(dblock + i, i) = -half;
    map.at(i, n0 + i) = half;  // f x z_i = z_i/2 + ((1-2e)z_i)/2
    map.at(dblock + i, n0 + i) = half;
    map.at(hblock + i, 2 * n0 + i) = Scalar::one(f);  // h x z_i
  }
  for (std::size_t j = 0; j < n1; ++j) map.at(n0 + j, 3 * n0 + j) = Scalar::one(f);  // k x n_j

  return {std::move(d), std::move(b), frame, std::move(map)};
}

IdentityReport verify_m2_commutator_table(const FieldSpec& f) {
  Algebra a = m2(f);
  Element e = a.basis_element(0);
  Element fe = a.basis_element(3);
  Element h = a.basis_element(1) + a.basis_element(2);
  Element k = a.basis_element(1) - a.basis_element(2);
  Element one = *a.unit();
  std::vector<std::pair<std::string, Element>> hbasis = {{"e", e}, {"f", fe}, {"h", h}};

  auto jm = [&](const Element& x, const Element& y) { return jordan_mul(a, x, y); };
  auto br = [&](const Element& x, const Element& y) { return commutator(a, x, y); };
  auto tr = [&](const Element& x) { return x[0] + x[3]; };
  auto jassoc = [&](const Element& x, const Element& y, const Element& z) {
    return jm(jm(x, y), z) - jm(x, jm(y, z));
  };

  IdentityReport rep;
  auto unary = [&](const std::string& name, auto&& check) {
    for (const auto& [aname, av] : hbasis)
      if (!check(av)) {
        rep.families.push_back({name, false, "a=" + aname});
        return;
      }
    rep.families.push_back({name, true, ""});
  };
  auto binary = [&](const std::string& name, auto&& check) {
    for (const auto& [aname, av] : hbasis)
      for (const auto& [bname, bv] : hbasis)
        if (!check(av, bv)) {
          rep.families.push_back({name, false, "a=" + aname + " b=" + bname});
          return;
        }
    rep.families.push_back({name, true, ""});
  };

  Scalar half = Scalar::fraction(1, 2, f), two = Scalar::of_int(2, f), four = Scalar::of_int(4, f);
  unary("trace-halving", [&](const Element& x) { return jm(x, k) == (half * tr(x)) * k; });
  unary("bracket-k-jordan", [&](const Element& x) { return is_zero_vec(jm(br(x, k), k)); });
  unary("double-bracket-recovery", [&](const Element& x) {
    return br(br(k, x), k) == four * x - (two * tr(x)) * one;
  });
  binary("mixed-double-bracket", [&](const Element& x, const Element& y) {
    return br(x, br(k, y)) == (tr(x) * tr(y) - two * tr(jm(x, y))) * k;
  });
  binary("bracket-pair-product", [&](const Element& x, const Element& y) {
    return jm(br(k, x), br(k, y)) == (two * tr(jm(x, y)) - tr(x) * tr(y)) * one;
  });
  binary("double-bracket-pair", [&](const Element& x, const Element& y) {
    Element target = four * br(x, y);
    return br(br(k, x), br(k, y)) == target && br(br(br(k, x), k), y) == target;
  });
  binary("nested-bracket-vanish", [&](const Element& x, const Element& y) {
    return is_zero_vec(br(br(x, br(k, y)), k));
  });
  binary("k-associator-vanish",
         [&](const Element& x, const Element& y) { return is_zero_vec(jassoc(br(x, y), k, k)); });

  auto quadratic_trace = [&](const Element& x, const Element& y) {
    return two * jm(x, y) == tr(x) * y + tr(y) * x + (tr(jm(x, y)) - tr(x) * tr(y)) * one;
  };
  bool qt = true;
  std::string qt_witness;
  for (const auto& [aname, av] : hbasis)
    for (const auto& [bname, bv] : hbasis)
      if (!quadratic_trace(av, bv)) {
        qt = false;
        qt_witness = "a=" + aname + " b=" + bname;
      }
  Rng rng(0x5eedULL);
  for (int trial = 0; trial < 32 && qt; ++trial) {
    Element x = a.zero(), y = a.zero();
    for (const auto& [aname, av] : hbasis) {
      x = x + rng.scalar(f) * av;
      y = y + rng.scalar(f) * av;
    }
    if (!quadratic_trace(x, y)) {
      qt = false;
      qt_witness = "random trial " + std::to_string(trial);
    }
  }
  rep.families.push_back({"quadratic-trace", qt, qt_witness});
  return rep;
}

}  // namespace h2c
