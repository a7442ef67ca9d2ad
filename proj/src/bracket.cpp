#include "h2c/bracket.hpp"

#include <functional>

namespace h2c {

std::string convention_name(BracketConvention c) {
  return c == BracketConvention::raw ? "raw" : "epsilon_rescaled";
}

BracketConvention convention_from_name(std::string_view s) {
  if (s == "raw") return BracketConvention::raw;
  if (s == "epsilon_rescaled") return BracketConvention::epsilon_rescaled;
  throw Error(Errc::parse_error, "unknown bracket convention: " + std::string(s));
}

ProductTable make_table(std::size_t rows, std::size_t cols, std::size_t target_dim,
                        const FieldSpec& f) {
  return ProductTable(rows, std::vector<Vec>(cols, zero_vec(target_dim, f)));
}

namespace {

void check_table(const ProductTable& t, std::size_t rows, std::size_t cols,
                 std::size_t target_dim, const char* name) {
  if (t.size() != rows) throw Error(Errc::invalid_input, std::string(name) + ": bad row count");
  for (const auto& row : t) {
    if (row.size() != cols) throw Error(Errc::invalid_input, std::string(name) + ": bad column count");
    for (const auto& v : row)
      if (v.size() != target_dim)
        throw Error(Errc::invalid_input, std::string(name) + ": bad value dimension");
  }
}

bool table_is_zero(const ProductTable& t) {
  for (const auto& row : t)
    for (const auto& v : row)
      if (!is_zero_vec(v)) return false;
  return true;
}

std::string gname(int deg, std::size_t i) {
  return (deg == 0 ? "z" : "n") + std::to_string(i);
}

}  // namespace

bool GradedBracketAlgebra::has_zero_brackets() const {
  return table_is_zero(b00) && table_is_zero(b01) && (!b11 || table_is_zero(*b11));
}

void validate_shape(const GradedBracketAlgebra& s) {
  if (s.s0_dim == 0) throw Error(Errc::invalid_input, "S0 must contain the unit (s0_dim >= 1)");
  check_table(s.p00, s.s0_dim, s.s0_dim, s.s0_dim, "p00");
  check_table(s.p01, s.s0_dim, s.s1_dim, s.s1_dim, "p01");
  check_table(s.p11, s.s1_dim, s.s1_dim, s.s0_dim, "p11");
  check_table(s.b00, s.s0_dim, s.s0_dim, s.s1_dim, "b00");
  check_table(s.b01, s.s0_dim, s.s1_dim, s.s0_dim, "b01");
  if (s.b11) check_table(*s.b11, s.s1_dim, s.s1_dim, s.s1_dim, "b11");
  if (s.unit.size() != s.s0_dim) throw Error(Errc::invalid_input, "unit must live in S0");
}

GVec graded_basis(const GradedBracketAlgebra& s, int deg, std::size_t i) {
  GVec g = graded_zero(s, deg);
  g.v[i] = Scalar::one(s.field);
  return g;
}

GVec graded_zero(const GradedBracketAlgebra& s, int deg) {
  return {deg, zero_vec(deg == 0 ? s.s0_dim : s.s1_dim, s.field)};
}

namespace {

GVec gv_add(const GVec& a, const GVec& b) {
  if (a.deg != b.deg) throw Error(Errc::invalid_input, "graded degree mismatch");
  return {a.deg, a.v + b.v};
}

GVec gv_sub(const GVec& a, const GVec& b) {
  if (a.deg != b.deg) throw Error(Errc::invalid_input, "graded degree mismatch");
  return {a.deg, a.v - b.v};
}

GVec gv_scale(const Scalar& c, const GVec& a) { return {a.deg, c * a.v}; }

// bilinear combination over a table; the caller fixes argument order
GVec table_apply(const GradedBracketAlgebra& s, const ProductTable& t, int out_deg,
                 const Vec& a, const Vec& b) {
  GVec out = graded_zero(s, out_deg);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < out.v.size(); ++k)
        if (!t[i][j][k].is_zero()) out.v[k] += c * t[i][j][k];
    }
  }
  return out;
}

}  // namespace

GVec gmul(const GradedBracketAlgebra& s, const GVec& a, const GVec& b) {
  if (a.deg == 0 && b.deg == 0) return table_apply(s, s.p00, 0, a.v, b.v);
  if (a.deg == 0 && b.deg == 1) return table_apply(s, s.p01, 1, a.v, b.v);
  if (a.deg == 1 && b.deg == 0) return table_apply(s, s.p01, 1, b.v, a.v);
  return table_apply(s, s.p11, 0, a.v, b.v);
}

std::optional<GVec> gbracket(const GradedBracketAlgebra& s, const GVec& a, const GVec& b) {
  if (a.deg == 0 && b.deg == 0) return table_apply(s, s.b00, 1, a.v, b.v);
  if (a.deg == 0 && b.deg == 1) return table_apply(s, s.b01, 0, a.v, b.v);
  if (a.deg == 1 && b.deg == 0)
    return gv_scale(-Scalar::one(s.field), table_apply(s, s.b01, 0, b.v, a.v));
  return std::nullopt;
}

GVec gassoc(const GradedBracketAlgebra& s, const GVec& a, const GVec& b, const GVec& c) {
  return gv_sub(gmul(s, gmul(s, a, b), c), gmul(s, a, gmul(s, b, c)));
}

Algebra underlying_algebra(const GradedBracketAlgebra& s) {
  validate_shape(s);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.s0_dim; ++i) names.push_back(gname(0, i));
  for (std::size_t j = 0; j < s.s1_dim; ++j) names.push_back(gname(1, j));
  Algebra a(s.field, names);
  const std::size_t n0 = s.s0_dim;
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) a.add_term(i, j, k, s.p00[i][j][k]);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < s.s1_dim; ++j)
      for (std::size_t k = 0; k < s.s1_dim; ++k) {
        a.add_term(i, n0 + j, n0 + k, s.p01[i][j][k]);
        a.add_term(n0 + j, i, n0 + k, s.p01[i][j][k]);
      }
  for (std::size_t i = 0; i < s.s1_dim; ++i)
    for (std::size_t j = 0; j < s.s1_dim; ++j)
      for (std::size_t k = 0; k < n0; ++k) a.add_term(n0 + i, n0 + j, k, s.p11[i][j][k]);
  return a;
}

Algebra even_part_algebra(const GradedBracketAlgebra& s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.s0_dim; ++i) names.push_back(gname(0, i));
  Algebra a(s.field, names);
  for (std::size_t i = 0; i < s.s0_dim; ++i)
    for (std::size_t j = 0; j < s.s0_dim; ++j)
      for (std::size_t k = 0; k < s.s0_dim; ++k) a.add_term(i, j, k, s.p00[i][j][k]);
  return a;
}

Report check_graded_algebra(const GradedBracketAlgebra& s) {
  validate_shape(s);
  Algebra a = underlying_algebra(s);
  Element u = zero_vec(a.dim(), s.field);
  for (std::size_t i = 0; i < s.s0_dim; ++i) u[i] = s.unit[i];
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Element bj = a.basis_element(j);
    if (a.mul(u, bj) != bj) return {false, "unit fails on " + a.basis_name(j)};
  }
  Report jordan = is_jordan(a);
  if (!jordan.pass) return {false, "underlying algebra not Jordan: " + jordan.witness};
  return {};
}

bool IdentityReport::all_pass() const {
  for (const auto& f : families)
    if (!f.pass) return false;
  return true;
}

const FamilyResult* IdentityReport::find(std::string_view name) const {
  for (const auto& f : families)
    if (f.family == name) return &f;
  return nullptr;
}

namespace {

struct Checker {
  const GradedBracketAlgebra& s;
  IdentityReport report;
  Scalar four;
  bool raw;

  explicit Checker(const GradedBracketAlgebra& s_)
      : s(s_), four(Scalar::of_int(4, s_.field)),
        raw(s_.convention == BracketConvention::raw) {}

  std::size_t dim(int deg) const { return deg == 0 ? s.s0_dim : s.s1_dim; }

  void record(const std::string& family, bool pass, const std::string& witness) {
    report.families.push_back({family, pass, pass ? "" : witness});
  }

  std::string tuple_name(std::initializer_list<std::pair<int, std::size_t>> xs) const {
    std::string out = "(";
    bool first = true;
    for (auto [d, i] : xs) {
      if (!first) out += ",";
      out += gname(d, i);
      first = false;
    }
    return out + ")";
  }

  void antisymmetry() {
    for (std::size_t i = 0; i < s.s0_dim; ++i)
      for (std::size_t j = 0; j < s.s0_dim; ++j) {
        Vec lhs = s.b00[i][j];
        Vec rhs = Scalar::of_int(-1, s.field) * s.b00[j][i];
        if (lhs != rhs || (i == j && !is_zero_vec(lhs))) {
          record("antisymmetry", false, tuple_name({{0, i}, {0, j}}));
          return;
        }
      }
    record("antisymmetry", true, "");
  }

  // (x,y,z) = 4{{x,z},y} (raw) / 4{y,{x,z}} (rescaled), all defined patterns
  void assoc_bracket() {
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy)
        for (int dz = 0; dz <= 1; ++dz)
          for (std::size_t ix = 0; ix < dim(dx); ++ix)
            for (std::size_t iy = 0; iy < dim(dy); ++iy)
              for (std::size_t iz = 0; iz < dim(dz); ++iz) {
                GVec x = graded_basis(s, dx, ix), y = graded_basis(s, dy, iy),
                     z = graded_basis(s, dz, iz);
                auto inner = gbracket(s, x, z);
                if (!inner) continue;
                auto outer = raw ? gbracket(s, *inner, y) : gbracket(s, y, *inner);
                if (!outer) continue;
                GVec lhs = gassoc(s, x, y, z);
                if (lhs.v != gv_scale(four, *outer).v) {
                  record("assoc-bracket", false,
                         tuple_name({{dx, ix}, {dy, iy}, {dz, iz}}));
                  return;
                }
              }
    record("assoc-bracket", true, "");
  }

  // {xy,z} = x{y,z} + y{x,z}
  void leibniz_a() {
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy)
        for (int dz = 0; dz <= 1; ++dz)
          for (std::size_t ix = 0; ix < dim(dx); ++ix)
            for (std::size_t iy = 0; iy < dim(dy); ++iy)
              for (std::size_t iz = 0; iz < dim(dz); ++iz) {
                GVec x = graded_basis(s, dx, ix), y = graded_basis(s, dy, iy),
                     z = graded_basis(s, dz, iz);
                auto t1 = gbracket(s, gmul(s, x, y), z);
                auto byz = gbracket(s, y, z);
                auto bxz = gbracket(s, x, z);
                if (!t1 || !byz || !bxz) continue;
                GVec rhs = gv_add(gmul(s, x, *byz), gmul(s, y, *bxz));
                if (t1->v != rhs.v) {
                  record("leibniz-a", false, tuple_name({{dx, ix}, {dy, iy}, {dz, iz}}));
                  return;
                }
              }
    record("leibniz-a", true, "");
  }

  // {xy,z} = {y,xz} + {x,yz}
  void leibniz_b() {
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy)
        for (int dz = 0; dz <= 1; ++dz)
          for (std::size_t ix = 0; ix < dim(dx); ++ix)
            for (std::size_t iy = 0; iy < dim(dy); ++iy)
              for (std::size_t iz = 0; iz < dim(dz); ++iz) {
                GVec x = graded_basis(s, dx, ix), y = graded_basis(s, dy, iy),
                     z = graded_basis(s, dz, iz);
                auto t1 = gbracket(s, gmul(s, x, y), z);
                auto t2 = gbracket(s, y, gmul(s, x, z));
                auto t3 = gbracket(s, x, gmul(s, y, z));
                if (!t1 || !t2 || !t3) continue;
                if (t1->v != gv_add(*t2, *t3).v) {
                  record("leibniz-b", false, tuple_name({{dx, ix}, {dy, iy}, {dz, iz}}));
                  return;
                }
              }
    record("leibniz-b", true, "");
  }

  // ({z,u},m,n) + ({u,n},m,z) + ({n,z},m,u) = 0, z,u even, m,n odd
  void odd_cycle() {
    for (std::size_t z = 0; z < s.s0_dim; ++z)
      for (std::size_t u = 0; u < s.s0_dim; ++u)
        for (std::size_t m = 0; m < s.s1_dim; ++m)
          for (std::size_t n = 0; n < s.s1_dim; ++n) {
            GVec gz = graded_basis(s, 0, z), gu = graded_basis(s, 0, u);
            GVec gm = graded_basis(s, 1, m), gn = graded_basis(s, 1, n);
            GVec t1 = gassoc(s, *gbracket(s, gz, gu), gm, gn);
            GVec t2 = gassoc(s, *gbracket(s, gu, gn), gm, gz);
            GVec t3 = gassoc(s, *gbracket(s, gn, gz), gm, gu);
            if (!is_zero_vec(gv_add(gv_add(t1, t2), t3).v)) {
              record("odd-cycle", false, tuple_name({{0, z}, {0, u}, {1, m}, {1, n}}));
              return;
            }
          }
    record("odd-cycle", true, "");
  }

  using Fetch = std::optional<GVec> (*)(const Checker&, const GVec&, const GVec&, const GVec&);

  bool sweep3(const std::string& family, int d1, int d2, int d3,
              const std::function<bool(const GVec&, const GVec&, const GVec&)>& ok) {
    for (std::size_t i = 0; i < dim(d1); ++i)
      for (std::size_t j = 0; j < dim(d2); ++j)
        for (std::size_t k = 0; k < dim(d3); ++k) {
          if (!ok(graded_basis(s, d1, i), graded_basis(s, d2, j), graded_basis(s, d3, k))) {
            record(family, false, tuple_name({{d1, i}, {d2, j}, {d3, k}}));
            return false;
          }
        }
    record(family, true, "");
    return true;
  }

  void crosschecks() {
    auto b = [&](const GVec& a_, const GVec& c_) { return *gbracket(s, a_, c_); };
    Scalar minus4 = -four;
    // sign of the bracket-quadratic families flips with the convention
    Scalar q = raw ? four : minus4;

    // {z,vw} = v{z,w} + w{z,v} and {z,vw} = {zv,w} + {zw,v}, all even
    sweep3("square-even", 0, 0, 0, [&](const GVec& z, const GVec& v, const GVec& w) {
      GVec lhs = b(z, gmul(s, v, w));
      return lhs.v == gv_add(gmul(s, v, b(z, w)), gmul(s, w, b(z, v))).v &&
             lhs.v == gv_add(b(gmul(s, z, v), w), b(gmul(s, z, w), v)).v;
    });
    // {zw,n} = z{w,n} + w{z,n} and {zw,n} = {z,wn} + {w,zn}
    sweep3("square-mixed", 0, 0, 1, [&](const GVec& z, const GVec& w, const GVec& n) {
      GVec lhs = b(gmul(s, z, w), n);
      return lhs.v == gv_add(gmul(s, z, b(w, n)), gmul(s, w, b(z, n))).v &&
             lhs.v == gv_add(b(z, gmul(s, w, n)), b(w, gmul(s, z, n))).v;
    });
    // {z,mn} = m{z,n} + n{z,m}
    sweep3("square-odd", 0, 1, 1, [&](const GVec& z, const GVec& m, const GVec& n) {
      return b(z, gmul(s, m, n)).v == gv_add(gmul(s, m, b(z, n)), gmul(s, n, b(z, m))).v;
    });
    // (u,w,v) = -4{w,{u,v}} raw, +4 rescaled
    sweep3("assoc-even", 0, 0, 0, [&](const GVec& u, const GVec& w, const GVec& v) {
      return gassoc(s, u, w, v).v == gv_scale(-q, b(w, b(u, v))).v;
    });
    // (u,w,n) = -4{w,{u,n}} raw, +4 rescaled
    sweep3("assoc-mixed", 0, 0, 1, [&](const GVec& u, const GVec& w, const GVec& n) {
      return gassoc(s, u, w, n).v == gv_scale(-q, b(w, b(u, n))).v;
    });
    // (u,n,m) = 4{{u,m},n} raw, -4 rescaled
    sweep3("assoc-odd", 0, 1, 1, [&](const GVec& u, const GVec& n, const GVec& m) {
      return gassoc(s, u, n, m).v == gv_scale(q, b(b(u, m), n)).v;
    });
    // {w,un} = {uw,n} - {u,nw}
    sweep3("deriv-sum", 0, 0, 1, [&](const GVec& w, const GVec& u, const GVec& n) {
      return b(w, gmul(s, u, n)).v == gv_sub(b(gmul(s, u, w), n), b(u, gmul(s, n, w))).v;
    });
    // {w,un} = u{w,n} + n{w,u}
    sweep3("deriv-prod", 0, 0, 1, [&](const GVec& w, const GVec& u, const GVec& n) {
      return b(w, gmul(s, u, n)).v == gv_add(gmul(s, u, b(w, n)), gmul(s, n, b(w, u))).v;
    });
    // {mn,p} = -{pm,n} - {pn,m}, all odd
    sweep3("deriv-odd", 1, 1, 1, [&](const GVec& m, const GVec& n, const GVec& p) {
      GVec rhs = gv_add(b(gmul(s, p, m), n), b(gmul(s, p, n), m));
      return b(gmul(s, m, n), p).v == gv_scale(Scalar::of_int(-1, s.field), rhs).v;
    });
  }
};

}  // namespace

IdentityReport verify_bracket_identities(const GradedBracketAlgebra& s) {
  validate_shape(s);
  Checker c(s);
  c.antisymmetry();
  c.assoc_bracket();
  c.leibniz_a();
  c.leibniz_b();
  c.odd_cycle();
  c.crosschecks();
  return std::move(c.report);
}

GradedBracketAlgebra rescale_bracket(const GradedBracketAlgebra& s, const Scalar& eps) {
  if (s.convention != BracketConvention::raw)
    throw Error(Errc::wrong_convention, "bracket is already epsilon-rescaled");
  if (!(eps.field() == s.field) || !(eps * eps == Scalar::of_int(-1, s.field)))
    throw Error(Errc::bad_epsilon, "rescaling element must square to -1");
  GradedBracketAlgebra out = s;
  auto scale = [&](ProductTable& t) {
    for (auto& row : t)
      for (auto& v : row) v = eps * v;
  };
  scale(out.b00);
  scale(out.b01);
  if (out.b11) scale(*out.b11);
  out.convention = BracketConvention::epsilon_rescaled;
  return out;
}

}  // namespace h2c
