// jcoord: exact certification and coordinatization of Jordan algebras that
// contain the symmetric 2x2 matrices as a unital subalgebra.
//
// Exit codes: 0 success, 1 mathematical failure (with a witness in the
// report), 2 I/O or parse failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "h2c/io.hpp"
#include "h2c/random.hpp"

using namespace h2c;

namespace {

std::string report_line(const Report& r) {
  return r.pass ? "PASS" : "FAIL (" + r.witness + ")";
}

void print_identity_report(const IdentityReport& rep, const std::string& indent) {
  for (const auto& fam : rep.families)
    std::cout << indent << fam.family << ": " << (fam.pass ? "PASS" : "FAIL at " + fam.witness)
              << "\n";
}

FieldSpec parse_field(const std::string& name) {
  try {
    return FieldSpec::from_name(name);
  } catch (const Error&) {
    throw Error(Errc::parse_error, "--field expects q, qi or gf<p>, got '" + name + "'");
  }
}

int cmd_check(const std::string& path, unsigned random_checks, std::uint64_t seed) {
  AlgebraFile file = read_algebra_file(path);
  const Algebra& a = file.algebra;
  std::cout << "field: " << a.field().name() << "\n";
  std::cout << "dim: " << a.dim() << "\n";

  Report comm = is_commutative(a);
  std::cout << "commutative: " << report_line(comm) << "\n";
  Report jordan = is_jordan(a);
  std::cout << "jordan: " << report_line(jordan) << "\n";
  Report assoc = is_associative(a);
  std::cout << "associative: " << report_line(assoc) << "\n";
  if (a.unit()) {
    std::cout << "unit: " << vec_str(*a.unit()) << "\n";
  } else {
    try {
      std::cout << "unit: " << vec_str(find_unit(a)) << "\n";
    } catch (const Error&) {
      std::cout << "unit: none\n";
    }
  }

  bool ok = jordan.pass;
  if (random_checks > 0) {
    // cross-validation of the linearized certificate against the defining
    // identity (x^2 y) x = x^2 (y x) on random elements
    Rng rng(seed);
    bool random_ok = true;
    for (unsigned t = 0; t < random_checks && random_ok; ++t) {
      Element x = rng.element(a), y = rng.element(a);
      Element x2 = a.mul(x, x);
      if (a.mul(a.mul(x2, y), x) != a.mul(x2, a.mul(y, x))) random_ok = false;
    }
    std::cout << "jordan-random (n=" << random_checks << ", seed=" << seed
              << "): " << (random_ok ? "PASS" : "FAIL") << "\n";
    ok = ok && random_ok;
  }
  return ok ? 0 : 1;
}

struct DecomposeOutput {
  std::optional<DecompositionResult> d;
  bool all_pass = false;
};

DecomposeOutput run_decompose(const Algebra& a, const Element& e, const Element& h) {
  H2Frame frame = verify_h2_frame(a, e, h);
  std::cout << "frame: OK\n";
  Subspace z = compute_z(a, frame);
  Subspace n = compute_n(a, frame);
  std::cout << "dim J: " << a.dim() << "\n";
  std::cout << "dim Z: " << z.dim() << "\n";
  std::cout << "dim N: " << n.dim() << "\n";
  Report mod = check_module_decomposition(a, frame, z, n);
  std::cout << "decomposition: " << report_line(mod) << "\n";
  if (!mod.pass) return {};

  DecompositionResult d = decompose(a, e, h);
  Report graded = check_graded_algebra(d.s);
  std::cout << "graded subalgebra: " << report_line(graded) << "\n";
  IdentityReport rep = verify_bracket_identities(d.s);
  std::cout << "identities (" << convention_name(d.s.convention) << "):\n";
  print_identity_report(rep, "  ");
  std::cout << "brackets trivial: " << (d.s.has_zero_brackets() ? "YES" : "NO") << "\n";
  bool ok = graded.pass && rep.all_pass();
  return {std::move(d), ok};
}

int cmd_decompose(const std::string& path, const std::string& ename, const std::string& hname,
                  const std::string& emit) {
  AlgebraFile file = read_algebra_file(path);
  DecomposeOutput out = run_decompose(file.algebra, file.named(ename), file.named(hname));
  if (out.d && !emit.empty()) {
    write_bracket_file(emit, BracketFile{out.d->s});
    std::cout << "emitted: " << emit << "\n";
  }
  return out.all_pass ? 0 : 1;
}

int cmd_rebuild(const std::string& path, const std::string& emit) {
  BracketFile file = read_bracket_file(path);
  GradedBracketAlgebra s = file.s;
  std::cout << "convention: " << convention_name(s.convention) << "\n";
  if (s.convention == BracketConvention::raw && !s.has_zero_brackets()) {
    Scalar eps = sqrt_minus_one(s.field);  // NoSqrtMinusOne -> exit 1 with guidance
    std::cout << "eps: " << eps.str() << "\n";
    s = rescale_bracket(s, eps);
  }
  auto [j, frame] = reconstruct(s);
  std::cout << "reconstructed dim: " << j.dim() << "\n";
  Report jordan = is_jordan(j);
  std::cout << "jordan: " << report_line(jordan) << "\n";
  if (!emit.empty()) {
    AlgebraFile out(j);
    out.elements["e"] = frame.e;
    out.elements["f"] = frame.one - frame.e;
    out.elements["h"] = frame.h;
    write_algebra_file(emit, out);
    std::cout << "emitted: " << emit << "\n";
  }
  return jordan.pass ? 0 : 1;
}

int cmd_roundtrip(const std::string& path, const std::string& ename, const std::string& hname) {
  AlgebraFile file = read_algebra_file(path);
  const Algebra& a = file.algebra;
  Report jordan = is_jordan(a);
  std::cout << "stage jordan: " << report_line(jordan) << "\n";
  if (!jordan.pass) {
    std::cout << "roundtrip: FAIL\n";
    return 1;
  }
  DecomposeOutput out = run_decompose(a, file.named(ename), file.named(hname));
  if (!out.all_pass) {
    std::cout << "roundtrip: FAIL\n";
    return 1;
  }
  Scalar eps = sqrt_minus_one(a.field());
  std::cout << "stage rescale: eps=" << eps.str() << "\n";
  GradedBracketAlgebra rs = rescale_bracket(out.d->s, eps);
  auto [j2, frame2] = reconstruct(rs);
  Report jordan2 = is_jordan(j2);
  std::cout << "stage reconstruct: dim=" << j2.dim() << " jordan " << report_line(jordan2) << "\n";
  Mat l = reconstruction_map(*out.d, eps);
  bool iso = verify_isomorphism(a, j2, l);
  std::cout << "stage isomorphism: " << (iso ? "PASS" : "FAIL") << "\n";
  bool ok = jordan2.pass && iso;
  std::cout << "roundtrip: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_envelope(const std::string& path, const std::string& emit) {
  BracketFile file = read_bracket_file(path);
  std::cout << "total bracket: " << (file.s.b11 ? "present" : "missing") << "\n";
  InvolutiveAlgebra env = cohn_envelope(file.s);
  std::cout << "associative: PASS\n";
  std::cout << "involution: PASS\n";

  // the plus-algebra of the envelope must be S itself
  Algebra plus(env.a.field(), env.a.basis_names());
  Scalar half = Scalar::fraction(1, 2, env.a.field());
  for (std::size_t i = 0; i < env.a.dim(); ++i)
    for (std::size_t j = 0; j < env.a.dim(); ++j) {
      Element p = half * (env.a.basis_product(i, j) + env.a.basis_product(j, i));
      for (std::size_t k = 0; k < env.a.dim(); ++k) plus.add_term(i, j, k, p[k]);
    }
  bool plus_ok = same_structure_constants(plus, underlying_algebra(file.s));
  std::cout << "plus-algebra equals S: " << (plus_ok ? "PASS" : "FAIL") << "\n";

  if (!emit.empty()) {
    AlgebraFile out(env.a);
    out.maps.insert_or_assign("star", env.star);
    write_algebra_file(emit, out);
    std::cout << "emitted: " << emit << "\n";
  }
  return plus_ok ? 0 : 1;
}

int cmd_make(const std::string& kind, const std::string& field_name, const std::string& emit,
             std::size_t vdim, const std::string& base, const std::string& star_name,
             bool bracket) {
  FieldSpec field = parse_field(field_name);

  auto algebra_out = [&](const std::pair<Algebra, H2Frame>& jf) {
    AlgebraFile out(jf.first);
    out.elements["e"] = jf.second.e;
    out.elements["f"] = jf.second.one - jf.second.e;
    out.elements["h"] = jf.second.h;
    write_algebra_file(emit, out);
  };
  auto involutive = [&]() {
    if (base == "f") {
      if (star_name != "id") throw Error(Errc::parse_error, "base f needs --star id");
      return make_involutive(field_algebra(field), Mat::identity(1, field));
    }
    if (base == "ff") {
      Mat star = star_name == "id" ? Mat::identity(2, field) : f_plus_f_exchange(field);
      return make_involutive(f_plus_f(field), std::move(star));
    }
    if (base == "m2") {
      if (star_name == "transpose") return make_involutive(m2(field), m2_transpose(field));
      if (star_name == "symplectic") return make_involutive(m2(field), m2_symplectic(field));
      throw Error(Errc::parse_error, "base m2 needs --star transpose or symplectic");
    }
    throw Error(Errc::parse_error, "--base expects f, ff or m2");
  };

  if (kind == "h2f") {
    algebra_out(h2f(field));
  } else if (kind == "m2") {
    write_algebra_file(emit, AlgebraFile(m2(field)));
  } else if (kind == "m2plus") {
    if (bracket) {
      GradedBracketAlgebra s = split_involution(make_involutive(m2(field), m2_transpose(field)),
                                                /*include_total=*/true);
      write_bracket_file(emit, BracketFile{std::move(s)});
    } else {
      algebra_out(m2_plus(field));
    }
  } else if (kind == "h2matrix") {
    InvolutiveAlgebra inv = involutive();
    if (bracket) {
      write_bracket_file(emit, BracketFile{split_involution(inv, /*include_total=*/true)});
    } else {
      algebra_out(build_h2_matrix(inv));
    }
  } else if (kind == "spinfactor") {
    algebra_out(spin_factor(field, vdim));
  } else if (kind == "h4f") {
    algebra_out(h4f(field));
  } else {
    throw Error(Errc::parse_error, "kind must be h2f, m2, m2plus, h2matrix, spinfactor or h4f");
  }
  std::cout << "emitted: " << emit << "\n";
  return 0;
}

int cmd_m2table(const std::string& field_name) {
  FieldSpec field = parse_field(field_name);
  IdentityReport rep = verify_m2_commutator_table(field);
  print_identity_report(rep, "");
  std::size_t passed = 0;
  for (const auto& fam : rep.families) passed += fam.pass ? 1 : 0;
  std::cout << "m2 commutator table: " << passed << "/" << rep.families.size() << "\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coordinatization toolkit for Jordan algebras containing H2(F)"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");

  std::string path, emit, ename = "e", hname = "h";
  std::string field_name = "q", base = "f", star_name = "id", kind;
  unsigned random_checks = 0;
  std::uint64_t seed = 42;
  std::size_t vdim = 3;
  bool bracket = false;

  CLI::App* check = app.add_subcommand("check", "certify commutative / Jordan / associative");
  check->add_option("path", path, "algebra file")->required();
  check->add_option("--random-checks", random_checks,
                    "additionally test (x^2 y) x = x^2 (y x) on random elements");
  check->add_option("--seed", seed, "seed for the random sweep");

  CLI::App* dec = app.add_subcommand("decompose", "extract Z, N and the partial bracket");
  dec->set_help_flag("--help", "print help");
  dec->add_option("path", path, "algebra file")->required();
  dec->add_option("--e", ename, "name of the idempotent frame element");
  dec->add_option("--h", hname, "name of the square-root-of-one frame element");
  dec->add_option("--emit", emit, "write the extracted coordinates as a bracket file");

  CLI::App* reb = app.add_subcommand("rebuild", "reconstruct the tensor-form algebra");
  reb->add_option("path", path, "bracket file")->required();
  reb->add_option("--emit", emit, "write the reconstructed algebra file");

  CLI::App* rt = app.add_subcommand("roundtrip", "decompose, rebuild and verify the isomorphism");
  rt->set_help_flag("--help", "print help");
  rt->add_option("path", path, "algebra file")->required();
  rt->add_option("--e", ename, "name of the idempotent frame element");
  rt->add_option("--h", hname, "name of the square-root-of-one frame element");

  CLI::App* env = app.add_subcommand("envelope", "associative envelope of a total bracket");
  env->add_option("path", path, "bracket file with the odd-odd slot")->required();
  env->add_option("--emit", emit, "write the envelope with its involution");

  CLI::App* mk = app.add_subcommand("make", "generate a shipped example deterministically");
  mk->add_option("kind", kind, "h2f | m2 | m2plus | h2matrix | spinfactor | h4f")->required();
  mk->add_option("--field", field_name, "q | qi | gf<p>");
  mk->add_option("--emit", emit, "output path")->required();
  mk->add_option("--vdim", vdim, "module dimension for spinfactor");
  mk->add_option("--base", base, "h2matrix coefficient algebra: f | ff | m2");
  mk->add_option("--star", star_name, "involution: id | exchange | transpose | symplectic");
  mk->add_flag("--bracket", bracket, "emit the split coordinates with the total bracket");

  CLI::App* tbl = app.add_subcommand("m2table", "verify the commutator/trace table of M2(F)+");
  tbl->add_option("--field", field_name, "q | qi | gf<p>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(path, random_checks, seed);
    if (*dec) return cmd_decompose(path, ename, hname, emit);
    if (*reb) return cmd_rebuild(path, emit);
    if (*rt) return cmd_roundtrip(path, ename, hname);
    if (*env) return cmd_envelope(path, emit);
    if (*mk) return cmd_make(kind, field_name, emit, vdim, base, star_name, bracket);
    if (*tbl) return cmd_m2table(field_name);
  } catch (const Error& e) {
    std::cout << errc_name(e.code()) << ": " << e.what() << "\n";
    if (e.code() == Errc::no_sqrt_minus_one)
      std::cout << "hint: rerun over qi or gf<p> with p = 1 (mod 4)\n";
    return e.code() == Errc::parse_error ? 2 : 1;
  }
  return 2;
}
