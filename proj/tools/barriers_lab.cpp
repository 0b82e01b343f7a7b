#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "barriers/chain.hpp"
#include "barriers/classical.hpp"
#include "barriers/confinement.hpp"
#include "barriers/css.hpp"
#include "barriers/css_barrier.hpp"
#include "barriers/report.hpp"
#include "barriers/tensor_product.hpp"
#include "barriers/verify.hpp"

namespace {

using namespace barriers;
using nlohmann::ordered_json;

struct GlobalOpts {
  uint64_t seed = 7;
  unsigned cap_exact = kDefaultExactCapBits;
  double budget_secs = 0.0;
  std::string out;
  std::string format = "json";
};

void write_output(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string base_dir_of(const std::string& path) {
  auto dir = std::filesystem::path(path).parent_path();
  return dir.empty() ? std::string(".") : dir.string();
}

// Classical manifests are handled as CSS codes with no Z checks.
CssCode load_any_css(const CodeManifest& m, const std::string& base) {
  if (m.kind == "css") return load_css(m, base);
  ClassicalCode c = load_classical(m, base);
  return CssCode(c.H(), BitMat(0, c.n()));
}

ordered_json path_json(const PauliPath& p) {
  ordered_json j;
  j["n"] = p.n;
  j["flips"] = p.flip_sequence();
  return j;
}

ordered_json barrier_json(const BarrierResult& r) {
  ordered_json j;
  j["value"] = r.value;
  j["exact"] = r.exact;
  j["target"] = r.target;
  j["witness"] = path_json(r.witness);
  return j;
}

int cmd_gen(const GlobalOpts& g, const std::string& family, std::size_t len,
            bool periodic) {
  ClassicalCode code = family == "rep" ? repetition_code(len, periodic)
                                       : composite_repetition(len);
  std::ostringstream out;
  write_pcm(out, code.H());
  write_output(g, out.str());
  return 0;
}

int cmd_hgp(const GlobalOpts& g, unsigned dim,
            const std::vector<std::string>& factor_files) {
  if (factor_files.size() != dim)
    throw std::runtime_error("hgp: expected " + std::to_string(dim) +
                             " factor files");
  std::vector<ClassicalCode> factors;
  for (const auto& f : factor_files)
    factors.emplace_back(read_pcm_file(f));

  std::string prefix = g.out.empty() ? "hgp" : g.out;
  CodeManifest m;
  m.kind = "css";
  m.seed = g.seed;
  {
    std::ostringstream prov;
    prov << "barriers-lab hgp --dim " << dim << " --factors ";
    for (std::size_t i = 0; i < factor_files.size(); ++i)
      prov << (i ? "," : "") << factor_files[i];
    m.provenance = prov.str();
  }

  const CssCode* css = nullptr;
  CssCode c2 = dim == 2 ? hgp2(factors[0], factors[1])
                        : CssCode(BitMat(0, 1), BitMat(0, 1));
  std::optional<Hgp3Code> c3;
  std::optional<Hgp4Code> c4;
  if (dim == 2) {
    css = &c2;
    HgpPrediction p;
    p.n = factors[0].n() * factors[1].n() + factors[0].m() * factors[1].m();
    m.params["n"] = p.n;
  } else if (dim == 3) {
    c3 = hgp3(factors[0], factors[1], factors[2]);
    css = &c3->css;
    HgpPrediction p = predict_params3(factors[0], factors[1], factors[2]);
    m.params["n"] = p.n;
    m.params["k"] = p.k;
  } else if (dim == 4) {
    c4 = hgp4(factors[0], factors[1], factors[2], factors[3]);
    css = &c4->css;
    HgpPrediction p = predict_params4(factors[0], factors[1], factors[2],
                                      factors[3]);
    m.params["n"] = p.n;
    m.params["k"] = p.k;
  } else {
    throw std::runtime_error("hgp: dim must be 2, 3, or 4");
  }
  m.params["dim"] = dim;

  auto emit = [&](const std::string& role, const BitMat& mat,
                  const std::string& suffix) {
    std::string file = prefix + "." + suffix + ".pcm";
    write_pcm_file(file, mat);
    m.matrices[role] = std::filesystem::path(file).filename().string();
  };
  emit("H_X", css->hx(), "hx");
  emit("H_Z", css->hz(), "hz");
  if (css->meta_x()) emit("meta_X", *css->meta_x(), "mx");
  if (css->meta_z()) emit("meta_Z", *css->meta_z(), "mz");
  for (std::size_t i = 0; i < factors.size(); ++i)
    emit("factor_" + std::to_string(i + 1), factors[i].H(),
         "f" + std::to_string(i + 1));
  m.blocks = css->blocks();
  m.write(prefix + ".json");
  std::cout << "wrote " << prefix << ".json (n=" << css->n() << ")\n";
  return 0;
}

int cmd_tensor(const GlobalOpts& g, const std::vector<std::string>& factor_files,
               bool bounds) {
  if (factor_files.size() != 2)
    throw std::runtime_error("tensor: expected exactly 2 factor files");
  TensorProductCode code(ClassicalCode(read_pcm_file(factor_files[0])),
                         ClassicalCode(read_pcm_file(factor_files[1])));
  if (bounds) {
    BoundLedger ledger =
        bound_ledger(code, true, kDefaultEnumCapBits, g.cap_exact);
    ordered_json j;
    j["e_a"] = ledger.e_a;
    j["e_b"] = ledger.e_b;
    j["d_a"] = ledger.d_a;
    j["d_b"] = ledger.d_b;
    j["lower_energy"] = ledger.lower_energy;
    j["lower_distance"] = ledger.lower_distance;
    j["upper_strip"] = ledger.upper_strip;
    j["conjectured_lower"] = ledger.conjectured_lower;
    if (ledger.measured) j["measured"] = *ledger.measured;
    write_output(g, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  write_pcm(out, code.product().H());
  write_output(g, out.str());
  return 0;
}

int cmd_logicals(const GlobalOpts& g, const std::string& manifest_path,
                 const std::string& kind_name, bool canonical) {
  CodeManifest m = CodeManifest::read(manifest_path);
  std::string base = base_dir_of(manifest_path);
  Kind kind = kind_name == "x" ? Kind::X : Kind::Z;
  ordered_json j;
  j["kind"] = kind_name;
  j["operators"] = ordered_json::array();

  auto op_json = [&](const BitVec& v) {
    ordered_json jo;
    jo["weight"] = v.weight();
    jo["support"] = v.support();
    return jo;
  };

  if (canonical) {
    unsigned dim = static_cast<unsigned>(m.params.at("dim"));
    auto factor = [&](std::size_t i) {
      return ClassicalCode(read_pcm_file(
          base + "/" + m.matrices.at("factor_" + std::to_string(i))));
    };
    CanonicalLogicalSet set = [&] {
      if (dim == 3) {
        Hgp3Code code = hgp3(factor(1), factor(2), factor(3));
        return kind == Kind::Z ? canonical_z_3d(code) : canonical_x_3d(code);
      }
      if (dim == 4) {
        Hgp4Code code = hgp4(factor(1), factor(2), factor(3), factor(4));
        return kind == Kind::Z ? canonical_z_4d(code) : canonical_x_4d(code);
      }
      throw std::runtime_error("canonical logicals need a dim-3 or dim-4 code");
    }();
    for (const auto& op : set.operators) {
      ordered_json jo = op_json(op.op);
      jo["family"] = op.family;
      jo["labels"] = op.labels;
      j["operators"].push_back(std::move(jo));
    }
  } else {
    CssCode css = load_any_css(m, base);
    for (const BitVec& v : logical_space(css, kind))
      j["operators"].push_back(op_json(v));
  }
  write_output(g, j.dump(2) + "\n");
  return 0;
}

int cmd_barrier(const GlobalOpts& g, const std::string& manifest_path,
                const std::string& kind_name, const std::string& target_bits,
                bool best_first, std::size_t frontier) {
  CodeManifest m = CodeManifest::read(manifest_path);
  std::string base = base_dir_of(manifest_path);

  BarrierResult result;
  if (kind_name == "classical") {
    ClassicalCode code = load_classical(m, base);
    if (target_bits.empty()) {
      result = code_barrier_exact(code, g.cap_exact);
    } else {
      BitVec target = BitVec::from_string(target_bits);
      if (best_first) {
        BestFirstConfig cfg;
        cfg.frontier_cap = frontier;
        cfg.seed = g.seed;
        cfg.heuristic_weight = 1.0;
        result = barrier_best_first(
            [&code](const BitVec& x) { return code.syndrome_energy(x); },
            code.n(), target, cfg);
      } else {
        result = barrier_exact(code.H(), target, g.cap_exact);
      }
    }
  } else {
    Kind kind = kind_name == "x" ? Kind::X : Kind::Z;
    CssCode css = load_any_css(m, base);
    if (target_bits.empty()) {
      result = code_barrier_exact(css, kind, g.cap_exact);
    } else {
      BitVec target = BitVec::from_string(target_bits);
      if (best_first) {
        BestFirstConfig cfg;
        cfg.frontier_cap = frontier;
        cfg.seed = g.seed;
        cfg.heuristic_weight = 1.0;
        result = barrier_best_first(css_energy(css, kind), css.n(), target, cfg);
      } else {
        result = operator_barrier_exact(css, kind, target, g.cap_exact);
      }
    }
  }
  write_output(g, barrier_json(result).dump(2) + "\n");
  return 0;
}

int cmd_confine(const GlobalOpts& g, const std::string& manifest_path,
                const std::string& kind_name, std::size_t wmax,
                const std::string& f_text, std::size_t t, bool soundness) {
  CodeManifest m = CodeManifest::read(manifest_path);
  CssCode css = load_any_css(m, base_dir_of(manifest_path));
  Kind kind = kind_name == "x" ? Kind::X : Kind::Z;
  MonotoneF f = MonotoneF::parse(f_text);
  ordered_json j;
  j["kind"] = kind_name;
  j["f"] = f.to_string();
  j["t"] = t;
  if (soundness) {
    SoundnessReport rep = soundness_scan(css, kind, t, f, wmax);
    j["w_max"] = rep.w_max;
    j["syndromes_checked"] = rep.syndromes_checked;
    j["violations"] = ordered_json::array();
    for (const auto& v : rep.violations)
      j["violations"].push_back({{"syndrome_weight", v.syndrome_weight},
                                 {"min_error_weight", v.min_error_weight}});
  } else {
    ConfinementReport rep = confinement_scan(css, kind, wmax, f, t);
    j["w_max"] = rep.w_max;
    j["points"] = ordered_json::array();
    for (const auto& p : rep.points)
      j["points"].push_back({{"syndrome_weight", p.syndrome_weight},
                             {"max_reduced_weight", p.max_reduced_weight}});
    j["violations"] = ordered_json::array();
    for (const auto& v : rep.violations)
      j["violations"].push_back({{"error_support", v.error.support()},
                                 {"syndrome_weight", v.syndrome_weight},
                                 {"reduced_weight", v.reduced_weight}});
  }
  write_output(g, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
  VerifyConfig cfg;
  cfg.seed = g.seed;
  cfg.cap_exact = g.cap_exact;
  cfg.budget_secs = g.budget_secs;
  VerificationReport report = run_verify(suite, cfg);
  write_output(g, emit_report(report, g.format));
  if (!g.out.empty()) std::cerr << emit_report(report, "table");
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy barriers and confinement for product codes over GF(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--seed", g.seed, "random seed for seeded operations");
  app.add_option("--cap-exact", g.cap_exact, "exact-search state cap (bits)");
  app.add_option("--budget-secs", g.budget_secs, "soft time budget");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "report format: json|table|csv")
      ->check(CLI::IsMember({"json", "table", "csv"}));

  auto* gen = app.add_subcommand("gen", "generate a classical code")->fallthrough();
  std::string gen_family;
  std::size_t gen_len = 2;
  bool gen_periodic = false;
  gen->add_option("family", gen_family, "rep | composite")
      ->required()
      ->check(CLI::IsMember({"rep", "composite"}));
  gen->add_option("--len", gen_len, "code length parameter L")->required();
  gen->add_flag("--periodic", gen_periodic, "periodic repetition code");

  auto* hgp = app.add_subcommand("hgp", "build a hypergraph product code")->fallthrough();
  unsigned hgp_dim = 3;
  std::string hgp_factors;
  hgp->add_option("--dim", hgp_dim, "2, 3, or 4")->required();
  hgp->add_option("--factors", hgp_factors, "comma-separated pcm files")
      ->required();

  auto* tensor = app.add_subcommand("tensor", "build a classical tensor product")->fallthrough();
  std::string tensor_factors;
  bool tensor_bounds = false;
  tensor->add_option("--factors", tensor_factors, "two pcm files")->required();
  tensor->add_flag("--bounds", tensor_bounds, "emit the barrier bound ledger");

  auto* logicals = app.add_subcommand("logicals", "list logical operators")->fallthrough();
  std::string log_code, log_kind = "z";
  bool log_canonical = false;
  logicals->add_option("--code", log_code, "manifest file")->required();
  logicals->add_option("--kind", log_kind, "z | x")
      ->check(CLI::IsMember({"z", "x"}));
  logicals->add_flag("--canonical", log_canonical, "canonical product form");

  auto* barrier = app.add_subcommand("barrier", "energy barrier search")->fallthrough();
  std::string bar_code, bar_kind = "z", bar_target;
  bool bar_best_first = false;
  std::size_t bar_frontier = 1'000'000;
  barrier->add_option("--code", bar_code, "manifest file")->required();
  barrier->add_option("--kind", bar_kind, "z | x | classical")
      ->check(CLI::IsMember({"z", "x", "classical"}));
  barrier->add_option("--target", bar_target, "target as a 0/1 string");
  barrier->add_flag("--best-first", bar_best_first, "heuristic search");
  barrier->add_option("--frontier", bar_frontier, "best-first expansion cap");

  auto* confine = app.add_subcommand("confine", "confinement / soundness scan")->fallthrough();
  std::string con_code, con_kind = "z", con_f = "x";
  std::size_t con_wmax = 4, con_t = 4;
  bool con_soundness = false;
  confine->add_option("--code", con_code, "manifest file")->required();
  confine->add_option("--kind", con_kind, "z | x")
      ->check(CLI::IsMember({"z", "x"}));
  confine->add_option("--wmax", con_wmax, "max error weight scanned");
  confine->add_option("--f", con_f, "monotone function, e.g. x^3/4");
  confine->add_option("--t", con_t, "confinement threshold t");
  confine->add_flag("--soundness", con_soundness, "soundness variant");

  auto* verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
  std::string verify_suite;
  verify->add_option("--suite", verify_suite, "suite name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(g, gen_family, gen_len, gen_periodic);
    if (hgp->parsed()) return cmd_hgp(g, hgp_dim, split_list(hgp_factors));
    if (tensor->parsed())
      return cmd_tensor(g, split_list(tensor_factors), tensor_bounds);
    if (logicals->parsed())
      return cmd_logicals(g, log_code, log_kind, log_canonical);
    if (barrier->parsed())
      return cmd_barrier(g, bar_code, bar_kind, bar_target, bar_best_first,
                         bar_frontier);
    if (confine->parsed())
      return cmd_confine(g, con_code, con_kind, con_wmax, con_f, con_t,
                         con_soundness);
    if (verify->parsed()) return cmd_verify(g, verify_suite);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
