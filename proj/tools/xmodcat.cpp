#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xmodcat/errors.hpp"
#include "xmodcat/io.hpp"

namespace {

using namespace xmodcat;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_invalid("SyntaxError", "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail_invalid("SyntaxError", "cannot open output file: " + out_path);
  out << text;
}

std::string fmt_complex(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::invalid_input:
      return 1;
    case ErrorKind::invariant_failure:
      return 2;
    case ErrorKind::numerical_degeneracy:
      return 3;
  }
  return 2;
}

int cmd_check(const std::string& file, const std::string& out) {
  std::string raw = read_file(file);
  XModDocument doc = parse_document(raw);
  XPtr x = build_crossed_module(doc);  // throws with witnesses on any axiom failure
  std::ostringstream os;
  os << "name: " << (doc.name.empty() ? "(unnamed)" : doc.name) << "\n"
     << "x1: group of order " << x->x1.order << ", valid\n"
     << "x2: group of order " << x->x2.order << ", valid\n"
     << "action: right action by automorphisms, valid\n"
     << "boundary: homomorphism, valid\n"
     << "equivariance: ok\n"
     << "peiffer: ok\n"
     << "kernel |K| = " << x->sub.k_elements.size() << ", image |I| = "
     << x->sub.i_elements.size() << ", cokernel |C| = " << x->sub.coker.group.order
     << ", |X| = " << x->sub.abs_x << "\n";
  emit(out, os.str());
  return 0;
}

int cmd_simples(const std::string& file, const std::string& out, std::uint64_t seed) {
  std::string raw = read_file(file);
  XPtr x = build_crossed_module(parse_document(raw));
  SimpleTable t = simple_objects(x, seed);
  std::ostringstream os;
  os << "index  orbit_rep  char  dim  twist\n";
  long long sum = 0;
  for (int p = 0; p < t.size(); ++p) {
    os << p << "  " << t.labels[p].orbit_rep << "  " << t.labels[p].chi << "  "
       << t.dims[p] << "  " << fmt_complex(t.twists[p]) << "\n";
    sum += static_cast<long long>(t.dims[p]) * t.dims[p];
  }
  os << "total: " << t.size() << " simples, sum d^2 = " << sum << "\n";
  emit(out, os.str());
  return 0;
}

int cmd_transparent(const std::string& file, const std::string& out, std::uint64_t seed) {
  std::string raw = read_file(file);
  XPtr x = build_crossed_module(parse_document(raw));
  SimpleTable t = simple_objects(x, seed);
  ModularData md = modular_data(t);
  std::ostringstream os;
  long long sum = 0;
  std::vector<int> tr = transparent_simples(md);
  os << "transparent simples: " << tr.size() << " of " << t.size() << "\n";
  for (int p : tr) {
    os << "p=" << p << " orbit_rep=" << t.labels[p].orbit_rep << " char="
       << t.labels[p].chi << " dim=" << t.dims[p] << "\n";
    sum += static_cast<long long>(t.dims[p]) * t.dims[p];
  }
  os << "sum of d^2 over transparent = " << sum << " (|K||C| = " << x->sub.d << ")\n";
  emit(out, os.str());
  return 0;
}

int cmd_verify(const std::string& file, const std::string& out, std::uint64_t seed,
               double tol) {
  std::string raw = read_file(file);
  XPtr x = build_crossed_module(parse_document(raw));
  CategoryBundle b = build_bundle(x, seed);
  VerificationSuite suite = run_invariant_suite(b, seed, tol);
  std::ostringstream os;
  for (const CheckResult& c : suite.checks) {
    os << (c.pass ? "ok   " : "FAIL ") << c.name;
    char buf[48];
    std::snprintf(buf, sizeof buf, " (residual %.3g)", c.residual);
    os << buf;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << "modular: " << (suite.modular ? "yes" : "no") << "\n"
     << (suite.all_pass ? "all checks passed\n" : "some checks FAILED\n");
  emit(out, os.str());
  if (!suite.all_pass)
    fail_invariant("InvariantFailure", "verification suite reported failures");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"premodular category data of a finite crossed module"};
  app.require_subcommand(1);

  std::uint64_t seed = xmodcat::kDefaultSeed;
  double tol = xmodcat::kTol;
  std::string out_path;
  app.add_option("--seed", seed, "random seed for the character-table method")
      ->envname("XMODCAT_SEED");
  app.add_option("--tol", tol, "comparison tolerance");
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  std::string file;
  auto add_cmd = [&](const char* name, const char* desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->fallthrough();  // --seed/--tol/--out may follow the subcommand
    c->add_option("file", file, "crossed-module document")->required();
    return c;
  };
  CLI::App* c_check = add_cmd("check", "validate the crossed-module axioms");
  CLI::App* c_simples = add_cmd("simples", "list the simple objects");
  CLI::App* c_mdata = add_cmd("modular-data", "emit the full data report (JSON)");
  CLI::App* c_transp = add_cmd("transparent", "list the transparent simple objects");
  CLI::App* c_gx = add_cmd("gx", "emit the Tannakian group G(X) (JSON)");
  CLI::App* c_modularize = add_cmd("modularize", "emit Xbar, its report and the double match");
  CLI::App* c_verify = add_cmd("verify", "run the invariant suite; exit 0 iff all pass");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(c_check)) return cmd_check(file, out_path);
    if (app.got_subcommand(c_simples)) return cmd_simples(file, out_path, seed);
    if (app.got_subcommand(c_mdata)) {
      emit(out_path, xmodcat::data_report(read_file(file), seed, tol));
      return 0;
    }
    if (app.got_subcommand(c_transp)) return cmd_transparent(file, out_path, seed);
    if (app.got_subcommand(c_gx)) {
      emit(out_path, xmodcat::gx_report(read_file(file), seed));
      return 0;
    }
    if (app.got_subcommand(c_modularize)) {
      emit(out_path, xmodcat::modularize_report(read_file(file), seed, tol));
      return 0;
    }
    if (app.got_subcommand(c_verify)) return cmd_verify(file, out_path, seed, tol);
  } catch (const xmodcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
