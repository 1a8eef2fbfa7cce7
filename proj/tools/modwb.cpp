#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ffla/config.hpp"
#include "support/util.hpp"
#include "workbench/acceptance.hpp"
#include "workbench/classify.hpp"

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) wb::fail_validation("cannot write " + path);
  out << text;
}

void print_record(const workbench::ClassificationRecord& rec, const std::string& name) {
  std::cout << "module " << name << ": dim " << rec.dim << ", id " << rec.id << "\n"
            << "  injective hull: dim " << rec.env_dim << ", " << rec.env_summands
            << " indecomposable summand(s)\n"
            << "  projective cover: dim " << rec.cover_dim << "\n"
            << "  quasi-injective: " << yn(rec.quasi) << "\n"
            << "  automorphism-invariant: " << yn(rec.invariant) << "\n"
            << "  quasi-projective: " << yn(rec.dual_quasi) << "\n"
            << "  automorphism-coinvariant: " << yn(rec.dual_invariant) << "\n";
  if (rec.pseudo_ran) std::cout << "  pseudo-injective: " << yn(rec.pseudo) << "\n";
  std::cout << "  indecomposable: " << yn(rec.indecomposable) << "\n  End/J blocks:";
  for (const auto& b : rec.end_blocks)
    std::cout << " " << b.first << "x" << b.first << "/F_" << b.second;
  std::cout << "\n  F_2 quotients of End: " << rec.f2_quotients << "\n  socle profile:";
  for (uint32_t x : rec.socle_profile) std::cout << " " << x;
  std::cout << "\n";
}

int run_check(const std::string& path, const std::string& name, const std::string& report_kind,
              const std::string& json_out, bool oracle) {
  workbench::Context ctx = workbench::load_file(path);
  const workbench::Module& m = ctx.module(name);
  workbench::ClassificationRecord rec =
      workbench::classify(m, modrep::simples(*ctx.alg), oracle);
  print_record(rec, name);
  if (report_kind == "indecomposable") {
    invariance::IndecomposableReport r =
        invariance::indecomposable_report(invariance::embed_in_hull(m));
    std::cout << "indecomposable report:\n"
              << "  End/J is F_2: " << yn(r.end_mod_is_f2) << "\n"
              << "  hull summands: " << r.hull_summands << "\n"
              << "  summands pairwise non-isomorphic: " << yn(r.summands_pairwise_noniso) << "\n"
              << "  summand endo residues all F_2: " << yn(r.summand_ends_are_f2) << "\n"
              << "  F_2 quotients of End(hull): " << r.hull_f2_quotients << "\n";
  } else if (report_kind == "socle") {
    invariance::SocleReport r = invariance::socle_report(invariance::embed_in_hull(m));
    std::cout << "socle report:\n"
              << "  summands: " << r.summands << "\n"
              << "  pairwise non-isomorphic: " << yn(r.pairwise_noniso) << "\n"
              << "  endomorphism fields all F_2: " << yn(r.ends_are_f2) << "\n"
              << "  essential in the module: " << yn(r.essential) << "\n"
              << "  sizes match the End blocks: " << yn(r.sizes_match_blocks) << "\n";
  } else if (report_kind == "dual") {
    invariance::DualIndecomposableReport r =
        invariance::dual_indecomposable_report(invariance::cover_of(m));
    std::cout << "dual report:\n"
              << "  End/J is F_2: " << yn(r.end_mod_is_f2) << "\n"
              << "  cover summands: " << r.cover_summands << "\n"
              << "  summands pairwise non-isomorphic: " << yn(r.summands_pairwise_noniso) << "\n"
              << "  summand endo residues all F_2: " << yn(r.summand_ends_are_f2) << "\n";
  }
  if (!json_out.empty()) {
    write_text(json_out, workbench::record_to_json(rec).dump(2) + "\n");
    std::cout << "record written to " << json_out << "\n";
  }
  return 0;
}

int run_envelope(const std::string& path, const std::string& name) {
  workbench::Context ctx = workbench::load_file(path);
  const workbench::Module& m = ctx.module(name);
  envelopes::Envelope env = envelopes::injective_envelope(m);
  modrep::Decomposition dec = modrep::decompose(env.env);
  std::cout << "module " << name << " (dim " << m.dim() << ") embeds essentially in an injective of dim "
            << env.env.dim() << "\n  summand dims:";
  for (const modrep::Summand& s : dec.parts) std::cout << " " << s.mod.dim();
  std::cout << "\n  embedding (rows = module basis):\n" << ffla::to_string(env.embed) << "\n";
  envelopes::Cover cov = envelopes::projective_cover(m);
  std::cout << "projective cover: dim " << cov.cover.dim() << ", kernel dim " << cov.kernel.dim()
            << "\n";
  return 0;
}

int run_decompose(const std::string& path, const std::string& name) {
  workbench::Context ctx = workbench::load_file(path);
  const workbench::Module& m = ctx.module(name);
  modrep::Decomposition dec = modrep::decompose(m);
  std::cout << "module " << name << " (dim " << m.dim() << ") = direct sum of " << dec.parts.size()
            << " indecomposable(s)\n";
  for (size_t i = 0; i < dec.parts.size(); ++i)
    std::cout << "  part " << i << ": dim " << dec.parts[i].mod.dim() << "\n";
  return 0;
}

int run_search(const std::string& path, uint32_t max_dim, const std::string& out_path,
               bool oracle) {
  workbench::Context ctx = workbench::load_file(path);
  workbench::SearchResult res = workbench::search_modules(*ctx.alg, max_dim, oracle);
  write_text(out_path, workbench::search_report(res));
  uint64_t notable = 0;
  for (const workbench::ClassificationRecord& r : res.records)
    if (r.invariant && !r.quasi) ++notable;
  std::cout << res.records.size() << " isomorphism classes up to dim " << max_dim << " written to "
            << out_path << "\n"
            << notable << " automorphism-invariant but not quasi-injective\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"module invariance workbench"};
  app.require_subcommand(1);
  bool oracle = false;
  std::string kernel = "bitpacked";
  app.add_flag("--oracle", oracle, "cross-check with brute-force sweeps where they fit");
  app.add_option("--kernel", kernel, "F_2 elimination kernel")
      ->check(CLI::IsMember({"bitpacked", "generic"}));

  std::string check_file, check_module, check_report, check_json;
  CLI::App* check = app.add_subcommand("check", "classify one module");
  check->add_option("file", check_file, "input file")->required();
  check->add_option("--module", check_module, "module name in the file")->required();
  check->add_option("--report", check_report, "extra report")
      ->check(CLI::IsMember({"indecomposable", "socle", "dual"}));
  check->add_option("--json", check_json, "also write the record to this path");

  std::string env_file, env_module;
  CLI::App* envelope = app.add_subcommand("envelope", "injective hull and projective cover");
  envelope->add_option("file", env_file, "input file")->required();
  envelope->add_option("--module", env_module, "module name in the file")->required();

  std::string dec_file, dec_module;
  CLI::App* decomp = app.add_subcommand("decompose", "split into indecomposable summands");
  decomp->add_option("file", dec_file, "input file")->required();
  decomp->add_option("--module", dec_module, "module name in the file")->required();

  std::string search_file, search_out;
  uint32_t max_dim = 0;
  CLI::App* search = app.add_subcommand("search", "classify every small module over the algebra");
  search->add_option("file", search_file, "input file")->required();
  search->add_option("--max-dim", max_dim, "largest module dimension")->required();
  search->add_option("--out", search_out, "report path")->required();

  std::string corpus_dir = "corpus";
  CLI::App* verify = app.add_subcommand("verify-paper", "run the full acceptance suite");
  verify->add_option("--corpus", corpus_dir, "corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    ffla::F2KernelScope scope(kernel == "generic" ? ffla::F2Kernel::generic
                                                  : ffla::F2Kernel::bitpacked);
    if (*check) return run_check(check_file, check_module, check_report, check_json, oracle);
    if (*envelope) return run_envelope(env_file, env_module);
    if (*decomp) return run_decompose(dec_file, dec_module);
    if (*search) return run_search(search_file, max_dim, search_out, oracle);
    workbench::AcceptanceResult res = workbench::run_acceptance(corpus_dir);
    std::cout << workbench::render(res);
    return res.all_pass() ? 0 : 3;
  } catch (const wb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == wb::ErrorKind::usage ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
