// Command-line surface: validate modules, compute Hom/Ext/stable Hom
// dimensions, connecting classes, Fitting decompositions, transposes, Tor,
// summand realizations with certificates, and the selftest suites.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quivhom/fitting.hpp"
#include "quivhom/hilton_rees.hpp"
#include "quivhom/io.hpp"
#include "quivhom/selftest.hpp"
#include "quivhom/transpose_tor.hpp"

namespace {

using namespace quivhom;
using nlohmann::json;

struct Output {
  bool as_json = false;
  json j = json::object();
  std::ostringstream text;

  void field(const std::string& name, const json& value) {
    j[name] = value;
    if (value.is_string()) {
      text << name << " = " << value.get<std::string>() << "\n";
    } else {
      text << name << " = " << value.dump() << "\n";
    }
  }
  void emit() const {
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
  }
};

json dims_json(const Rep& r) {
  json out = json::array();
  for (size_t v = 0; v < r.dims().size(); ++v) out.push_back(r.dim(v));
  return out;
}

json coords_json(const MatrixModP& col) {
  json out = json::array();
  for (size_t i = 0; i < col.rows(); ++i) out.push_back(col.at(i, 0));
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw_input("cannot write file: " + path);
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"homological functor summands over bound quiver algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string path_a, path_b, out_path, backend_str = "ext1";
  uint64_t seed = 0;
  uint32_t prime = 101;
  bool verify = false;

  auto* cmd_check = app.add_subcommand("check", "validate a module file");
  cmd_check->add_option("module", path_a)->required();

  auto* cmd_hom = app.add_subcommand("hom", "dimension of Hom(M, N)");
  cmd_hom->add_option("M", path_a)->required();
  cmd_hom->add_option("N", path_b)->required();

  auto* cmd_ext = app.add_subcommand("ext", "dimension of Ext^1(A, M)");
  cmd_ext->add_option("A", path_a)->required();
  cmd_ext->add_option("M", path_b)->required();

  auto* cmd_stable = app.add_subcommand("stable-hom", "dimension of Hom(B, A) mod projectives");
  cmd_stable->add_option("B", path_a)->required();
  cmd_stable->add_option("A", path_b)->required();

  auto* cmd_theta = app.add_subcommand("theta", "connecting class of a morphism");
  cmd_theta->add_option("f", path_a)->required();

  auto* cmd_fitting = app.add_subcommand("fitting", "Fitting decomposition of an endomorphism");
  cmd_fitting->add_option("f", path_a)->required();

  auto* cmd_transpose = app.add_subcommand("transpose", "transpose of a module");
  cmd_transpose->add_option("A", path_a)->required();
  cmd_transpose->add_option("--out", out_path, "write the transposed module to a file");

  auto* cmd_tor = app.add_subcommand("tor", "dimension of Tor_1(A, N)");
  cmd_tor->add_option("A", path_a)->required();
  cmd_tor->add_option("N", path_b)->required();

  auto* cmd_realize = app.add_subcommand("realize", "realize the summand encoded by a stable idempotent");
  cmd_realize->add_option("A", path_a)->required();
  cmd_realize->add_option("f", path_b)->required();
  cmd_realize->add_option("--backend", backend_str, "ext1|stablehom|tor1")->capture_default_str();
  cmd_realize->add_flag("--verify", verify, "verify the certificate on the default battery");
  cmd_realize->add_option("--out", out_path, "write the certificate JSON to a file");
  cmd_realize->add_option("--seed", seed, "seed for the battery")->capture_default_str();

  auto* cmd_selftest = app.add_subcommand("selftest", "run the full property suites");
  cmd_selftest->add_option("--seed", seed, "seed for all randomized inputs")->capture_default_str();
  cmd_selftest->add_option("--prime", prime, "ground field characteristic")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.as_json = as_json;
  FileCache files;

  if (cmd_check->parsed()) {
    FileCache::LoadedRep lr = files.load_rep(path_a);  // construction validates
    out.field("ok", true);
    out.field("dims", dims_json(lr.rep));
    out.emit();
    return 0;
  }
  if (cmd_hom->parsed()) {
    FileCache::LoadedRep m = files.load_rep(path_a);
    FileCache::LoadedRep n = files.load_rep(path_b);
    if (!(m.rep.algebra() == n.rep.algebra())) throw_input("hom: modules live over different algebras");
    out.field("dim Hom", hom_basis(m.rep, n.rep).size());
    out.emit();
    return 0;
  }
  if (cmd_ext->parsed()) {
    FileCache::LoadedRep a = files.load_rep(path_a);
    FileCache::LoadedRep m = files.load_rep(path_b);
    out.field("dim Ext1", ext1(a.rep, m.rep).dim);
    out.emit();
    return 0;
  }
  if (cmd_stable->parsed()) {
    FileCache::LoadedRep b = files.load_rep(path_a);
    FileCache::LoadedRep a = files.load_rep(path_b);
    out.field("dim StableHom", stable_hom(b.rep, a.rep).dim);
    out.emit();
    return 0;
  }
  if (cmd_theta->parsed()) {
    FileCache::LoadedRepMap f = files.load_rep_map(path_a);
    HomCache cache(f.map.from().algebra_ptr());
    ConnectingClass theta = connecting_class(cache, f.map);
    out.field("dim Ext1(B, OmegaA)", theta.value.rows());
    out.field("theta", coords_json(theta.value));
    out.field("zero", theta.value.is_zero());
    out.emit();
    return 0;
  }
  if (cmd_fitting->parsed()) {
    FileCache::LoadedRepMap f = files.load_rep_map(path_a);
    FittingResult fr = fitting_decomposition(f.map);
    out.field("index", fr.n);
    out.field("dims kernel", dims_json(fr.kernel_rep));
    out.field("dims image", dims_json(fr.image_rep));
    out.emit();
    return 0;
  }
  if (cmd_transpose->parsed()) {
    FileCache::LoadedRep a = files.load_rep(path_a);
    auto opposite = std::make_shared<const AlgebraTable>(opposite_algebra(a.rep.algebra()));
    Rep tr = transpose(a.rep, opposite);
    out.field("dims Tr", dims_json(tr));
    if (!out_path.empty()) write_file(out_path, rep_to_json(tr, a.algebra_path, !a.opposite));
    out.emit();
    return 0;
  }
  if (cmd_tor->parsed()) {
    FileCache::LoadedRep a = files.load_rep(path_a);
    FileCache::LoadedRep n = files.load_rep(path_b);
    if (!tables_opposite(a.rep.algebra(), n.rep.algebra()))
      throw_input("tor: the two modules must live over opposite algebras "
                  "(one of the files needs \"opposite\": true)");
    out.field("dim Tor1", tor1(a.rep, n.rep).dim);
    out.emit();
    return 0;
  }
  if (cmd_realize->parsed()) {
    FileCache::LoadedRep a = files.load_rep(path_a);
    FileCache::LoadedRepMap f = files.load_rep_map(path_b);
    if (!(f.map.from() == a.rep)) throw_input("realize: f is not an endomorphism of A");
    BackendTag tag = backend_from_name(backend_str);
    HomCache cache(a.rep.algebra_ptr());
    SummandCertificate cert = realize_summand(cache, a.rep, f.map, tag);
    validate_certificate(cache, cert);
    out.field("backend", backend_name(tag));
    out.field("chain length", cert.steps.size());
    out.field("dims B", dims_json(cert.b));
    out.field("terminal", cert.terminal_flag);

    VerifyReport report;
    bool verified_ok = true;
    if (verify) {
      std::unique_ptr<FunctorBackend> backend;
      std::vector<BatteryEntry> battery;
      if (tag == BackendTag::kTor1) {
        auto opposite = std::make_shared<const AlgebraTable>(opposite_algebra(a.rep.algebra()));
        battery = default_battery(opposite, seed);
        backend = make_tor1_backend(cache, opposite);
      } else {
        battery = default_battery(a.rep.algebra_ptr(), seed);
        backend = tag == BackendTag::kExt1Cov ? make_ext1_backend(cache)
                                              : make_stable_hom_backend(cache);
      }
      report = verify_certificate(*backend, cert, battery);
      verified_ok = report.pass;
      json rows = json::array();
      for (const VerifyRow& row : report.rows) {
        out.text << "battery " << row.name << ": dim G(A,M) = " << row.dim_g_a
                 << ", rank e = " << row.rank_e << ", dim G(B,M) = " << row.dim_g_b << ", "
                 << (row.pass ? "pass" : "FAIL") << "\n";
        rows.push_back(json{{"name", row.name},
                            {"dim_G_A", row.dim_g_a},
                            {"rank_e", row.rank_e},
                            {"dim_G_B", row.dim_g_b},
                            {"pass", row.pass}});
      }
      out.j["battery"] = std::move(rows);
      out.field("verified", report.pass);
    }
    if (!out_path.empty())
      write_file(out_path, certificate_to_json(cert, verify ? &report : nullptr, a.algebra_path,
                                               a.opposite));
    out.emit();
    return verified_ok ? 0 : 1;
  }
  if (cmd_selftest->parsed()) {
    bool pass = false;
    std::string report = selftest_report(SelftestOptions{seed, prime}, &pass);
    std::cout << report;
    return pass ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
