// conzeta: command line front end for connection Laplacians and their zeta functions.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or parse error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conzeta/conzeta.hpp"

namespace {

using namespace conzeta;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Writes to --out if given, else to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidInput("cannot write " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Options {
  std::string file, out, kind = "circular", op = "L", corpus = "default", manifest;
  int n = 4, m = 12, k = 1;
  double p = 0.5, s_re = 0, s_im = 0, tol = 1e-8, t = 0, tmax = 10;
  std::uint64_t seed = 1;
  bool squared = false, limit = false;
  std::vector<double> rect = {-3, 3, 0, 60};
  std::vector<std::size_t> res = {600, 1200};
};

Rect to_rect(const std::vector<double>& r) { return {r.at(0), r.at(1), r.at(2), r.at(3)}; }
Resolution to_res(const std::vector<std::size_t>& r) { return {r.at(0), r.at(1)}; }

bool is_integer(double v) { return std::isfinite(v) && v == std::round(v) && std::abs(v) < 1e6; }

// Exact zeta_L(m) = tr(L^{-m}) for integer m.
BigInt zeta_L_exact(const SimplicialComplex& g, int m) {
  const auto l = connection_laplacian(g);
  if (m <= 0) return trace_power(l, -m);
  return trace_power(unimodular_inverse(l), m);
}

int cmd_build(const GeneratorSpec& spec, const std::string& out) {
  Output o(out);
  write_complex(o.get(), build_complex(spec));
  return 0;
}

int cmd_spectrum(const SimplicialComplex& g, const std::string& out) {
  const auto spec = connection_spectrum(g);
  Output o(out);
  o.get() << "index,eigenvalue\n";
  for (std::size_t i = 0; i < spec.size(); ++i) o.get() << i << ',' << format_double(spec.eigenvalues[i]) << '\n';
  return 0;
}

int cmd_zeta(const SimplicialComplex& g, double re, double im, bool squared, const std::string& out) {
  Output o(out);
  if (im == 0 && is_integer(re)) {
    const int m = static_cast<int>(re);
    o.get() << (squared ? zeta_L2_exact(g, m) : zeta_L_exact(g, m)) << '\n';
    return 0;
  }
  const auto spec = connection_spectrum(g);
  const Complex s(re, im);
  const Complex v = squared ? zeta_L2(spec, s) : zeta_L(spec, s);
  o.get() << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
  return 0;
}

int cmd_grid(const SimplicialComplex& g, const Rect& rect, const Resolution& res, const std::string& out) {
  const auto grid = zeta_grid(connection_spectrum(g), rect, res);
  Output o(out);
  write_grid_csv(o.get(), grid);
  return 0;
}

int cmd_roots(const SimplicialComplex& g, const Rect& rect, const Resolution& res, double tol,
              const std::string& out) {
  const auto roots = root_scan(connection_spectrum(g), rect, res, tol);
  Output o(out);
  write_roots_jsonl(o.get(), roots);
  std::cerr << roots.roots.size() << " roots, " << roots.seeds << " seeds, " << roots.nonconverged
            << " without convergence, max |Re| " << format_double(roots.max_abs_real()) << '\n';
  return 0;
}

int cmd_limit_roots(double tmax, const std::string& out) {
  Output o(out);
  const auto f = [](double t) { return limit_forms::smooth<double>(t, QuadratureConfig{}.trapezoid_nodes); };
  for (double t : limit_roots(tmax)) write_root_json(o.get(), Complex(0, t), std::abs(f(t)));
  return 0;
}

int cmd_charpoly(const SimplicialComplex& g, bool squared, const std::string& out) {
  const auto l = connection_laplacian(g);
  Output o(out);
  for (const auto& c : char_poly_coefficients(squared ? l * l : l)) o.get() << c << '\n';
  return 0;
}

int cmd_refine(SimplicialComplex g, int k, const std::string& out) {
  if (k < 0) throw InvalidInput("refinement count must be nonnegative");
  for (int i = 0; i < k; ++i) g = barycentric_refinement(g);
  Output o(out);
  write_complex(o.get(), g);
  return 0;
}

int cmd_verify(const std::string& corpus, const std::string& out) {
  if (corpus != "default") throw InvalidInput("unknown corpus '" + corpus + "'");
  const auto rep = run_verify(default_corpus());
  Output o(out);
  rep.write(o.get());
  return rep.all_passed() ? 0 : kExitCheckFailed;
}

int cmd_dump(const SimplicialComplex& g, const std::string& op, const std::string& out) {
  IntegerMatrix m;
  if (op == "L") m = connection_laplacian(g);
  else if (op == "D") m = dirac_operator(g);
  else if (op == "H") m = hodge_laplacian(g);
  else if (op == "g") m = green_matrix(g);
  else if (op == "hydrogen") m = hydrogen_operator(g);
  else throw InvalidInput("unknown operator '" + op + "' (L, D, H, g, hydrogen)");
  Output o(out);
  write_matrix(o.get(), m);
  return 0;
}

int cmd_limit_eval(double t, const std::string& out) {
  const auto e = limit_zeta(t);
  Output o(out);
  o.get() << "t," << format_double(e.t) << '\n'
          << "smooth_integral," << format_double(e.smooth_integral) << '\n'
          << "cos_transform," << format_double(e.cos_transform) << '\n'
          << "v_integral," << format_double(e.v_integral) << '\n'
          << "abelian_integral," << format_double(e.abelian_integral) << '\n'
          << "spread," << format_double(e.spread) << '\n';
  return 0;
}

int run_manifest(const std::string& path) {
  const auto m = read_manifest_file(path);
  if (m.command == "build") return cmd_build(m.input, m.output);
  if (m.command == "verify") return cmd_verify("default", m.output);
  const auto g = build_complex(m.input);
  if (m.command == "spectrum") return cmd_spectrum(g, m.output);
  if (m.command == "zeta") return cmd_zeta(g, m.s_re, m.s_im, m.squared, m.output);
  if (m.command == "grid") return cmd_grid(g, m.rect, m.resolution, m.output);
  if (m.command == "roots") return cmd_roots(g, m.rect, m.resolution, m.tolerance, m.output);
  if (m.command == "charpoly") return cmd_charpoly(g, m.squared, m.output);
  if (m.command == "refine") return cmd_refine(g, m.refine_steps, m.output);
  throw InvalidInput("unknown manifest command '" + m.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connection Laplacians, spectral zeta functions and their Barycentric limit"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* c) { c->add_option("--file", o.file, "complex file")->required(); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "output path (default stdout)"); };

  auto* build = app.add_subcommand("build", "generate a complex");
  build->add_option("--kind", o.kind, "circular, complete, random, erdos-renyi, random-graph, figure-eight");
  build->add_option("--n", o.n, "size parameter");
  build->add_option("--m", o.m, "facets (random) or edges (random-graph)");
  build->add_option("--p", o.p, "edge probability (erdos-renyi)");
  build->add_option("--seed", o.seed, "generator seed");
  add_out(build);

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of L as CSV");
  add_file(spectrum);
  add_out(spectrum);

  auto* zeta = app.add_subcommand("zeta", "evaluate zeta_L or zeta_{L^2}");
  add_file(zeta);
  zeta->add_option("--s", o.s_re, "real part of s")->required();
  zeta->add_option("--im", o.s_im, "imaginary part of s");
  zeta->add_flag("--squared", o.squared, "use zeta_{L^2}");
  add_out(zeta);

  auto* grid = app.add_subcommand("grid", "|zeta_{L^2}| on a rectangle as CSV");
  add_file(grid);
  grid->add_option("--rect", o.rect, "x_min x_max y_min y_max")->expected(4);
  grid->add_option("--res", o.res, "nx ny")->expected(2);
  add_out(grid);

  auto* roots = app.add_subcommand("roots", "roots of zeta_{L^2} or of the limit function, JSON lines");
  roots->add_option("--file", o.file, "complex file");
  roots->add_flag("--limit", o.limit, "roots of t -> z(it) instead");
  roots->add_option("--tmax", o.tmax, "upper end of t for --limit");
  roots->add_option("--rect", o.rect, "x_min x_max y_min y_max")->expected(4);
  roots->add_option("--res", o.res, "nx ny")->expected(2);
  roots->add_option("--tol", o.tol, "residual tolerance");
  add_out(roots);

  auto* charpoly = app.add_subcommand("charpoly", "p_0..p_n of det(A - x) = sum p_k (-x)^(n-k)");
  add_file(charpoly);
  charpoly->add_flag("--squared", o.squared, "use L^2");
  add_out(charpoly);

  auto* refine = app.add_subcommand("refine", "Barycentric refinement");
  add_file(refine);
  refine->add_option("--k", o.k, "number of refinements");
  add_out(refine);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--corpus", o.corpus, "corpus name");
  add_out(verify);

  auto* dump = app.add_subcommand("dump-operator", "print an integer operator");
  add_file(dump);
  dump->add_option("--op", o.op, "L, D, H, g or hydrogen");
  add_out(dump);

  auto* limit = app.add_subcommand("limit", "the Barycentric limit zeta function");
  limit->require_subcommand(1);
  auto* leval = limit->add_subcommand("eval", "z(it) by four integral forms");
  leval->add_option("--t", o.t, "argument t")->required();
  add_out(leval);
  auto* lroots = limit->add_subcommand("roots", "real roots of t -> z(it)");
  lroots->add_option("--tmax", o.tmax, "upper end of t")->required();
  add_out(lroots);

  auto* run = app.add_subcommand("run", "execute a JSON job manifest");
  run->add_option("--manifest", o.manifest, "manifest path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    auto load = [&] { return read_complex_file(o.file); };
    if (*build) {
      GeneratorSpec spec{o.kind, o.n, o.m, o.p, o.seed, ""};
      return cmd_build(spec, o.out);
    }
    if (*spectrum) return cmd_spectrum(load(), o.out);
    if (*zeta) return cmd_zeta(load(), o.s_re, o.s_im, o.squared, o.out);
    if (*grid) return cmd_grid(load(), to_rect(o.rect), to_res(o.res), o.out);
    if (*roots) {
      if (o.limit) return cmd_limit_roots(o.tmax, o.out);
      if (o.file.empty()) throw InvalidInput("roots needs --file or --limit");
      return cmd_roots(load(), to_rect(o.rect), to_res(o.res), o.tol, o.out);
    }
    if (*charpoly) return cmd_charpoly(load(), o.squared, o.out);
    if (*refine) return cmd_refine(load(), o.k, o.out);
    if (*verify) return cmd_verify(o.corpus, o.out);
    if (*dump) return cmd_dump(load(), o.op, o.out);
    if (*leval) return cmd_limit_eval(o.t, o.out);
    if (*lroots) return cmd_limit_roots(o.tmax, o.out);
    if (*run) return run_manifest(o.manifest);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
