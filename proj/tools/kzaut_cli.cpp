// Batch front end: one subcommand per pipeline, line-oriented `key: value`
// output in the canonical text grammar.
//
// Exit codes: 0 computed (verdicts are output, not errors), 2 parse/usage
// error, 3 mathematical precondition violated, 4 step limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kzaut/coordcheck.hpp"
#include "kzaut/tame.hpp"
#include "kzaut/textio.hpp"

namespace {

using namespace kzaut;

constexpr const char* kSPairCapEnvVar = "KZAUT_SPAIR_CAP";

// Flag values starting with '@' name a file holding the expression.
std::string expand_arg(const std::string& raw) {
  if (raw.empty() || raw[0] != '@') return raw;
  std::ifstream in(raw.substr(1));
  if (!in) throw CLI::ValidationError("cannot read file '" + raw.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Polynomial poly_arg(const std::string& raw) { return parse_poly(expand_arg(raw)); }
PolyMap map_arg(const std::string& raw) { return parse_map(expand_arg(raw)); }
ZPoly zpoly_arg(const std::string& raw) { return ZPoly(poly_arg(raw)); }
ZXPoly zxpoly_arg(const std::string& raw) { return ZXPoly(poly_arg(raw)); }

Rational rational_arg(const std::string& raw) {
  const Polynomial p = poly_arg(raw);
  if (!p.is_constant())
    throw CLI::ValidationError("expected a rational constant, got '" + raw + "'");
  return p.constant_term();
}

std::size_t spair_cap_from_env() {
  const char* raw = std::getenv(kSPairCapEnvVar);
  if (raw == nullptr) return kDefaultSPairCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0)
    throw CLI::ValidationError(std::string(kSPairCapEnvVar) +
                               " must be a positive integer");
  return static_cast<std::size_t>(value);
}

void kv(const std::string& key, const std::string& value) {
  std::cout << key << ": " << value << "\n";
}
void kv(const std::string& key, const Polynomial& p) { kv(key, print_canonical(p)); }
void kv(const std::string& key, bool b) { kv(key, b ? std::string("true") : std::string("false")); }
void kv(const std::string& key, int n) { kv(key, std::to_string(n)); }

void print_construction(const ConstructionResult& r) {
  kv("f1", r.f1);
  kv("f2", r.f2);
  kv("g1", r.g1);
  kv("g2", r.g2);
}

void print_coordinate_report(const Polynomial& f, const CoordinateReport& r) {
  kv("f", f);
  kv("degree-bound", r.degree_bound);
  kv("lnd", r.lnd_ok);
  kv("unimodular", r.unimodular_ok);
  kv("verdict", r.is_coordinate() ? std::string("Coordinate")
                                  : std::string("NotCoordinate"));
}

int dispatch(CLI::App& app, int argc, char** argv) {
  app.require_subcommand(1);

  // construct
  auto* construct_cmd =
      app.add_subcommand("construct", "Build (f1, f2) and its inverse from (p, a[, b])");
  std::string c_p, c_a, c_b;
  construct_cmd->add_option("-p", c_p, "modulus p in k[z]")->required();
  construct_cmd->add_option("-a", c_a, "a(z, x)")->required();
  construct_cmd->add_option("-b", c_b, "inverse b(z, x); computed when omitted");
  construct_cmd->callback([&] {
    const ZPoly p = zpoly_arg(c_p);
    const ZXPoly a = zxpoly_arg(c_a);
    const ZXPoly b = c_b.empty() ? invert_mod_p(a, p) : zxpoly_arg(c_b);
    const ConstructionResult r = build_pair(ConstructionInput{p, a, b});
    kv("p", p.value());
    kv("a", a.value());
    kv("b", b.value());
    print_construction(r);
    kv("inverse-verified", verify_inverse(r.forward(), r.inverse()));
  });

  // invert-mod-p
  auto* invert_cmd =
      app.add_subcommand("invert-mod-p", "Inverse of a(z, x) in (k[z]/(p))[x]");
  std::string i_a, i_p;
  invert_cmd->add_option("-a", i_a, "a(z, x)")->required();
  invert_cmd->add_option("-p", i_p, "modulus p in k[z]")->required();
  invert_cmd->callback([&] {
    const ZPoly p = zpoly_arg(i_p);
    const ZXPoly a = zxpoly_arg(i_a);
    const ZXPoly b = invert_mod_p(a, p);
    kv("a", a.value());
    kv("p", p.value());
    kv("b", b.value());
    kv("check", check_inverse_pair(a, b, p));
  });

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "Composite F o G by substitution");
  std::string k_f, k_g;
  compose_cmd->add_option("-f", k_f, "left map")->required();
  compose_cmd->add_option("-g", k_g, "right map")->required();
  compose_cmd->callback([&] {
    const PolyMap h = compose(map_arg(k_f), map_arg(k_g));
    for (int i = 0; i < h.arity(); ++i)
      kv("component" + std::to_string(i + 1), h[i]);
  });

  // verify-inverse
  auto* verify_cmd =
      app.add_subcommand("verify-inverse", "Check F o G = id = G o F");
  std::string v_f, v_g;
  verify_cmd->add_option("-f", v_f, "map F")->required();
  verify_cmd->add_option("-g", v_g, "map G")->required();
  verify_cmd->callback(
      [&] { kv("inverse", verify_inverse(map_arg(v_f), map_arg(v_g))); });

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "Tame/Wild verdict for the map built from (p, a)");
  std::string t_p, t_a, t_b;
  classify_cmd->add_option("-p", t_p, "modulus p in k[z]")->required();
  classify_cmd->add_option("-a", t_a, "a(z, x)")->required();
  classify_cmd->add_option("-b", t_b, "inverse b(z, x); computed when omitted");
  classify_cmd->callback([&] {
    const ZPoly p = zpoly_arg(t_p);
    const ZXPoly a = zxpoly_arg(t_a);
    const TamenessVerdict v =
        t_b.empty() ? classify(p, a) : classify(p, a, zxpoly_arg(t_b));
    kv("verdict", v.verdict == Tameness::Tame ? std::string("Tame")
                                              : std::string("Wild"));
    kv("d1", v.d1);
    if (v.e1) kv("e1", *v.e1);
  });

  // decompose
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Elementary/affine factor list recomposing to (f1, f2)");
  std::string d_p, d_a, d_b;
  decompose_cmd->add_option("-p", d_p, "modulus p in k[z]")->required();
  decompose_cmd->add_option("-a", d_a, "a(z, x)")->required();
  decompose_cmd->add_option("-b", d_b, "inverse b(z, x); computed when omitted");
  decompose_cmd->callback([&] {
    const ZPoly p = zpoly_arg(d_p);
    const ZXPoly a = zxpoly_arg(d_a);
    const ZXPoly b = d_b.empty() ? invert_mod_p(a, p) : zxpoly_arg(d_b);
    const TameCertificate cert = decompose(p, a, b);
    kv("p", p.value());
    kv("a", a.value());
    kv("b", b.value());
    for (std::size_t i = 0; i < cert.factors.size(); ++i)
      kv("factor" + std::to_string(i + 1), print_canonical(cert.factors[i]));
    kv("target", print_canonical(cert.target));
    const PolyMap& lin = cert.factors[2];
    kv("determinant", lin[0].coefficient_in(Var::x, 1) * lin[1].coefficient_in(Var::y, 1) -
                          lin[0].coefficient_in(Var::y, 1) * lin[1].coefficient_in(Var::x, 1));
    kv("recomposes", cert.recompose() == cert.target);
  });

  // nagata
  auto* nagata_cmd = app.add_subcommand(
      "nagata", "The Nagata automorphism and its 2-variable construction");
  nagata_cmd->callback([&] {
    const NagataData n = nagata();
    kv("sigma1", n.sigma[0]);
    kv("sigma2", n.sigma[1]);
    kv("sigma3", n.sigma[2]);
    print_construction(n.construction);
    const PolyMap tau(Polynomial::variable(Var::y), Polynomial::variable(Var::x),
                      Polynomial::variable(Var::z));
    const PolyMap conjugated =
        compose(compose(tau, embed_3var(n.construction.forward())), tau);
    kv("remark23-identity", conjugated == n.sigma);
  });

  // coord-test
  auto* coord_cmd =
      app.add_subcommand("coord-test", "k[z]-coordinate test for f in k[x,y,z]");
  std::string cf;
  coord_cmd->add_option("-f", cf, "polynomial f")->required();
  coord_cmd->callback([&] {
    const Polynomial f = poly_arg(cf);
    print_coordinate_report(f, coordinate_test_z(f, spair_cap_from_env()));
  });

  // coord-test-2var
  auto* coord2_cmd =
      app.add_subcommand("coord-test-2var", "Coordinate test for f in k[x,y]");
  std::string c2f;
  coord2_cmd->add_option("-f", c2f, "polynomial f (no z)")->required();
  coord2_cmd->callback([&] {
    const Polynomial f = poly_arg(c2f);
    print_coordinate_report(f, coordinate_test_2var(f, spair_cap_from_env()));
  });

  // lnd-check
  auto* lnd_cmd = app.add_subcommand(
      "lnd-check", "Local nilpotency of the derivation with the given images");
  std::string l_dx, l_dy, l_dz = "0";
  int l_bound = 0;
  lnd_cmd->add_option("--dx", l_dx, "image of x")->required();
  lnd_cmd->add_option("--dy", l_dy, "image of y")->required();
  lnd_cmd->add_option("--dz", l_dz, "image of z (default 0)");
  lnd_cmd->add_option("--bound", l_bound, "iteration bound (>= 1)")->required();
  lnd_cmd->callback([&] {
    const Derivation d{poly_arg(l_dx), poly_arg(l_dy), poly_arg(l_dz)};
    const NilpotencyReport r = lnd_check(d, l_bound);
    kv("lnd", r.is_lnd);
    kv("bound", r.bound_used);
    if (r.witness) {
      kv("witness-variable", std::string(1, var_name(r.witness->first)));
      kv("witness", r.witness->second);
    }
  });

  // exp
  auto* exp_cmd = app.add_subcommand(
      "exp", "Exponential automorphism of s*D for s in the kernel of D");
  std::string e_dx, e_dy, e_dz = "0", e_s;
  exp_cmd->add_option("--dx", e_dx, "image of x")->required();
  exp_cmd->add_option("--dy", e_dy, "image of y")->required();
  exp_cmd->add_option("--dz", e_dz, "image of z (default 0)");
  exp_cmd->add_option("-s", e_s, "kernel element s")->required();
  exp_cmd->callback([&] {
    const Derivation d{poly_arg(e_dx), poly_arg(e_dy), poly_arg(e_dz)};
    const PolyMap m = exp_map(d, poly_arg(e_s));
    for (int i = 0; i < m.arity(); ++i)
      kv("component" + std::to_string(i + 1), m[i]);
  });

  // groebner-contains-one
  auto* gb_cmd = app.add_subcommand("groebner-contains-one",
                                    "Whether the ideal of the generators is (1)");
  std::vector<std::string> gens_raw;
  gb_cmd->add_option("-g", gens_raw, "generator (repeatable)")->required();
  gb_cmd->callback([&] {
    std::vector<Polynomial> gens;
    for (const std::string& raw : gens_raw) gens.push_back(poly_arg(raw));
    kv("contains-one", contains_one(gens, spair_cap_from_env()));
  });

  // prop31
  auto* prop_cmd = app.add_subcommand(
      "prop31", "Slice coordinate test at z = a plus the full k[z]-coordinate test");
  std::string p_f, p_a;
  prop_cmd->add_option("-f", p_f, "polynomial f")->required();
  prop_cmd->add_option("-a", p_a, "slice value a in k")->required();
  prop_cmd->callback([&] {
    const Polynomial f = poly_arg(p_f);
    const SliceTestReport r = slice_test(f, rational_arg(p_a), spair_cap_from_env());
    kv("f", f);
    kv("slice-value", to_string(r.slice_value));
    kv("slice-coordinate", r.slice_coordinate_ok);
    kv("z-coordinate", r.z_coordinate_ok);
    kv("conclusion", r.z_coordinate_ok
                         ? std::string("f is a k[z]-coordinate")
                         : std::string("f is not a k[z]-coordinate"));
    kv("hypothesis-note", r.hypothesis_note);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for k[z]-automorphisms of k[x,y,z]"};
  try {
    return dispatch(app, argc, argv);
  } catch (const kzaut::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const kzaut::ArityError& e) {
    std::cerr << "arity error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const kzaut::StepLimitExceededError& e) {
    std::cerr << "step limit: " << e.what() << "\n";
    return 4;
  } catch (const kzaut::CongruenceFailedError& e) {
    std::cerr << "error: " << e.what() << " (remainder " << e.witness << ")\n";
    return 3;
  } catch (const kzaut::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
