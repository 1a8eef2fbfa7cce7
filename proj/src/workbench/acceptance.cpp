#include "workbench/acceptance.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "algebra/units.hpp"
#include "ffla/config.hpp"
#include "support/util.hpp"
#include "workbench/classify.hpp"

namespace workbench {
namespace {

// criterion-level failure, distinct from infrastructure errors
struct CritFail {
  std::string msg;
};

void need(bool ok, const std::string& msg) {
  if (!ok) throw CritFail{msg};
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"ex_3_1", "ex_3_2", "ex_5_1", "f2_x2",
                                              "f2_x3",  "f3_x2",  "f2_xy",  "f2xf2"};
  return names;
}

// corpus files and per-algebra searches, loaded once and shared
class Corpus {
 public:
  explicit Corpus(std::string dir) : dir_(std::move(dir)) {}

  const Context& ctx(const std::string& name) {
    auto it = files_.find(name);
    if (it == files_.end()) it = files_.emplace(name, load_file(dir_ + "/" + name + ".json")).first;
    return it->second;
  }

  const SearchResult& search(const std::string& name) {
    auto it = searches_.find(name);
    if (it == searches_.end())
      it = searches_.emplace(name, search_modules(*ctx(name).alg, 5, true)).first;
    return it->second;
  }

 private:
  std::string dir_;
  std::map<std::string, Context> files_;
  std::map<std::string, SearchResult> searches_;
};

void run_one(AcceptanceResult& out, const std::string& label,
             const std::function<std::string()>& fn) {
  Criterion c;
  c.label = label;
  try {
    c.detail = fn();
    c.pass = true;
  } catch (const CritFail& e) {
    c.detail = e.msg;
  } catch (const std::exception& e) {
    c.detail = std::string("error: ") + e.what();
  }
  out.criteria.push_back(std::move(c));
}

std::string plural(uint64_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

}  // namespace

bool AcceptanceResult::all_pass() const {
  for (const Criterion& c : criteria)
    if (!c.pass) return false;
  return !criteria.empty();
}

std::string render(const AcceptanceResult& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.criteria.size(); ++i) {
    const Criterion& c = r.criteria[i];
    os << (c.pass ? "PASS" : "FAIL") << " " << (i + 1 < 10 ? " " : "") << (i + 1) << "/"
       << r.criteria.size() << " " << c.label;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  os << (r.all_pass() ? "all criteria pass" : "criteria FAILED") << "\n";
  return os.str();
}

AcceptanceResult run_acceptance(const std::string& corpus_dir) {
  AcceptanceResult out;
  Corpus corp(corpus_dir);
  const ffla::Field& f2 = ffla::Field::get(2);
  const ffla::Field& f3 = ffla::Field::get(3);

  run_one(out, "corner module: unit-stable on its hull, endo-unstable, indecomposable, socle rank 2",
          [&]() -> std::string {
            const Context& c = corp.ctx("ex_3_1");
            const Module& m = c.module("M");
            invariance::Embedded e = invariance::embed_in_hull(m);
            need(invariance::is_automorphism_invariant(e).holds,
                 "module is not stable under hull units");
            need(!invariance::is_quasi_injective(e).holds,
                 "module is stable under all hull endomorphisms");
            need(modrep::has_local_endomorphism_ring(m), "module is not indecomposable");
            need(modrep::goldie_dimension(m) == 2, "socle rank is not 2");
            need(modrep::socle(m) == c.submodules.at("socM"), "socle disagrees with the seeded one");
            return "all four facts hold for the 3-dimensional module";
          });

  run_one(out, "corner module: F_2 endo residue; hull is two non-isomorphic pieces, both with F_2 residues",
          [&]() -> std::string {
            invariance::Embedded e = invariance::embed_in_hull(corp.ctx("ex_3_1").module("M"));
            invariance::IndecomposableReport r = invariance::indecomposable_report(e);
            need(r.end_mod_is_f2, "End(M)/J is not F_2");
            need(r.hull_summands == 2, "hull does not split into exactly two pieces");
            need(r.summands_pairwise_noniso, "hull summands are isomorphic");
            need(r.summand_ends_are_f2, "a hull summand has endo residue bigger than F_2");
            need(r.hull_f2_quotients >= 2, "End(hull) has fewer than two F_2 quotients");
            return "hull splits as 2 non-isomorphic pieces, every endo residue is F_2";
          });

  run_one(out, "tail module: unit-stable, endo-unstable; socle is an essential sum of two non-isomorphic simples",
          [&]() -> std::string {
            const Context& c = corp.ctx("ex_3_2");
            const Module& m = c.module("M");
            invariance::Embedded e = invariance::embed_in_hull(m);
            need(invariance::is_automorphism_invariant(e).holds,
                 "module is not stable under hull units");
            need(!invariance::is_quasi_injective(e).holds,
                 "module is stable under all hull endomorphisms");
            need(modrep::socle(m) == c.submodules.at("socM"), "socle disagrees with the seeded one");
            invariance::SocleReport r = invariance::socle_report(e);
            need(r.summands == 2, "socle does not have exactly two summands");
            need(r.pairwise_noniso, "socle summands are isomorphic");
            need(r.essential, "socle is not essential");
            need(r.ends_are_f2, "a socle summand has endomorphisms beyond F_2");
            need(r.sizes_match_blocks, "a socle summand size disagrees with its block");
            return "socle = two non-isomorphic simples, essential, F_2 endomorphisms";
          });

  run_one(out, "dual corner module: unit-stable on its cover, not endo-stable; cover is two non-isomorphic pieces",
          [&]() -> std::string {
            const Module& m = corp.ctx("ex_5_1").module("M");
            invariance::Covered c = invariance::cover_of(m);
            need(invariance::is_automorphism_coinvariant(c).holds,
                 "module kernel is not stable under cover units");
            need(!invariance::is_quasi_projective(c).holds,
                 "module kernel is stable under all cover endomorphisms");
            invariance::DualIndecomposableReport r = invariance::dual_indecomposable_report(c);
            need(r.end_mod_is_f2, "End(M)/J is not F_2");
            need(r.cover_summands == 2, "cover does not split into exactly two pieces");
            need(r.summands_pairwise_noniso, "cover summands are isomorphic");
            need(r.summand_ends_are_f2, "a cover summand has endo residue bigger than F_2");
            return "cover splits as 2 non-isomorphic pieces with F_2 endo residues";
          });

  run_one(out, "semisimple samples: all-idempotent factor times a factor where everything is a two-unit sum",
          [&]() -> std::string {
            std::vector<std::pair<std::string, algebra::Algebra>> samples;
            algebra::Algebra m1f2 = algebra::matrix_algebra(f2, 1);
            algebra::Algebra m2f2 = algebra::matrix_algebra(f2, 2);
            algebra::Algebra m1f3 = algebra::matrix_algebra(f3, 1);
            algebra::Algebra m2f3 = algebra::matrix_algebra(f3, 2);
            algebra::Algebra f4 = algebra::matrix_algebra_over_extension(f2, 2, 1);
            samples.emplace_back("F_2", m1f2);
            samples.emplace_back("M_2(F_2)", m2f2);
            samples.emplace_back("F_3", m1f3);
            samples.emplace_back("M_2(F_3)", m2f3);
            samples.emplace_back("F_4", f4);
            samples.emplace_back("M_2(F_4)", algebra::matrix_algebra_over_extension(f2, 2, 2));
            samples.emplace_back("F_2 x F_2", algebra::product_algebra(m1f2, m1f2));
            samples.emplace_back("F_2 x M_2(F_2)", algebra::product_algebra(m1f2, m2f2));
            samples.emplace_back("F_2 x F_4", algebra::product_algebra(m1f2, f4));
            samples.emplace_back("F_3 x F_3", algebra::product_algebra(m1f3, m1f3));
            samples.emplace_back("F_3 x M_2(F_3)", algebra::product_algebra(m1f3, m2f3));
            samples.emplace_back("F_4 x M_2(F_2)", algebra::product_algebra(f4, m2f2));
            for (const auto& [name, a] : samples) {
              algebra::BooleanTwoGoodSplit split = algebra::boolean_two_good_split(a);
              need(split.exists, name + ": no split");
              need(a.is_idempotent(split.e1) && a.is_central(split.e1),
                   name + ": split marker is not a central idempotent");
              need(split.boolean_part.dim() + split.two_good_part.dim() == a.dim(),
                   name + ": factors do not fill the algebra");
              if (split.boolean_part.dim() > 0) {
                Row digits(split.boolean_part.dim(), 0);
                do {
                  Row x = ffla::apply_row(digits, split.boolean_part.basis());
                  need(a.is_idempotent(x), name + ": non-idempotent element in the boolean factor");
                } while (wb::next_tuple(digits, static_cast<uint16_t>(a.field().q())));
              }
              if (split.two_good_part.dim() > 0) {
                algebra::Subalg factor =
                    algebra::subalgebra_on(a, split.two_good_part, a.sub(a.one(), split.e1));
                need(algebra::every_element_two_unit_sum(factor.alg).two_good,
                     name + ": element with no two-unit sum in the complementary factor");
              }
            }
            return plural(samples.size(), "semisimple sample") + " split and re-swept";
          });

  run_one(out, "unit-stable subrings: each is its boolean slice times the full two-good factor",
          [&]() -> std::string {
            algebra::Algebra m1f2 = algebra::matrix_algebra(f2, 1);
            algebra::Algebra m2f2 = algebra::matrix_algebra(f2, 2);
            algebra::Algebra p22 = algebra::product_algebra(m1f2, m1f2);
            algebra::Algebra p2m = algebra::product_algebra(m1f2, m2f2);
            algebra::Algebra p22m = algebra::product_algebra(p22, m2f2);
            algebra::Algebra f4 = algebra::matrix_algebra_over_extension(f2, 2, 1);
            algebra::Algebra p24 = algebra::product_algebra(m1f2, f4);
            struct Samp {
              std::string name;
              const algebra::Algebra* s;
              ffla::Subspace t;
            };
            std::vector<Samp> samps;
            samps.push_back({"diagonal of F_2 x F_2", &p22,
                             ffla::Subspace::from_rows(f2, {Row{1, 1}}, 2)});
            samps.push_back({"all of F_2 x F_2", &p22, ffla::Subspace::full(f2, 2)});
            samps.push_back({"all of F_2 x M_2(F_2)", &p2m, ffla::Subspace::full(f2, 5)});
            samps.push_back({"diagonal F_2 with all of M_2(F_2)", &p22m,
                             ffla::Subspace::from_rows(f2,
                                                       {Row{1, 1, 0, 0, 0, 0}, Row{0, 0, 1, 0, 0, 0},
                                                        Row{0, 0, 0, 1, 0, 0}, Row{0, 0, 0, 0, 1, 0},
                                                        Row{0, 0, 0, 0, 0, 1}},
                                                       6)});
            samps.push_back({"all of M_2(F_2)", &m2f2, ffla::Subspace::full(f2, 4)});
            samps.push_back({"all of F_2 x F_4", &p24, ffla::Subspace::full(f2, 3)});
            for (const Samp& s : samps) {
              algebra::UnitStableReport rep = algebra::unit_stable_subring_split(*s.s, s.t);
              need(rep.valid, s.name + ": subring failed validity (" + rep.reason + ")");
              need(rep.split_matches, s.name + ": subring is not the claimed product");
              algebra::BooleanTwoGoodSplit bs = algebra::boolean_two_good_split(*s.s);
              need(bs.exists && rep.t2 == bs.two_good_part,
                   s.name + ": second factor is not the full two-good factor");
              need(rep.t1.sum(rep.t2) == s.t, s.name + ": factors do not span the subring");
              need(rep.t1.intersect(rep.t2).dim() == 0, s.name + ": factors overlap");
              if (rep.t1.dim() > 0) {
                Row digits(rep.t1.dim(), 0);
                do {
                  Row x = ffla::apply_row(digits, rep.t1.basis());
                  need(s.s->is_idempotent(x), s.name + ": non-idempotent element in the boolean slice");
                } while (wb::next_tuple(digits, static_cast<uint16_t>(s.s->field().q())));
              }
            }
            return plural(samps.size(), "subring") + " split and re-swept";
          });

  run_one(out, "every unit-stable search find splits: idempotent-residue part plus endo-stable part",
          [&]() -> std::string {
            uint64_t count = 0;
            for (const std::string& name : corpus_names()) {
              const SearchResult& sr = corp.search(name);
              for (size_t i = 0; i < sr.reps.size(); ++i) {
                if (!sr.records[i].invariant) continue;
                invariance::StructDecomposition sd =
                    invariance::struct_decompose(invariance::embed_in_hull(sr.reps[i]));
                need(sd.n_certified, name + " " + sr.records[i].id +
                                         ": idempotent-residue part failed its sweep");
                need(sd.l_certified,
                     name + " " + sr.records[i].id + ": complement failed the hull-stability check");
                ++count;
              }
            }
            return plural(count, "unit-stable find") + " decomposed and certified";
          });

  run_one(out, "searches: End with no F_2 residue forces endo-stability from unit-stability",
          [&]() -> std::string {
            uint64_t count = 0;
            for (const std::string& name : corpus_names())
              for (const ClassificationRecord& r : corp.search(name).records) {
                if (r.f2_quotients != 0) continue;
                need(!(r.invariant && !r.quasi),
                     name + " " + r.id + ": unit-stable, endo-unstable, yet no F_2 residue");
                ++count;
              }
            return plural(count, "record") + " without F_2 residue checked";
          });

  run_one(out, "commutative samples: no search find is unit-stable without being endo-stable",
          [&]() -> std::string {
            uint64_t algs = 0, count = 0;
            for (const std::string& name : corpus_names()) {
              if (!corp.ctx(name).alg->commutative()) continue;
              ++algs;
              for (const ClassificationRecord& r : corp.search(name).records) {
                need(!(r.invariant && !r.quasi),
                     name + " " + r.id + ": unit-stable but not endo-stable");
                ++count;
              }
            }
            need(algs == 5, "expected five commutative samples, saw " + std::to_string(algs));
            return plural(count, "record") + " over " + plural(algs, "commutative algebra");
          });

  run_one(out, "small search finds: pseudo-stability coincides with unit-stability",
          [&]() -> std::string {
            uint64_t count = 0;
            for (const std::string& name : corpus_names())
              for (const ClassificationRecord& r : corp.search(name).records) {
                if (r.dim > 3) continue;
                need(r.pseudo_ran, name + " " + r.id + ": pseudo-stability sweep did not run");
                need(r.pseudo == r.invariant,
                     name + " " + r.id + ": pseudo-stability disagrees with unit-stability");
                ++count;
              }
            return plural(count, "record") + " of dimension <= 3 compared";
          });

  run_one(out, "simples with F_2 endomorphisms: dimension equals the matrix-block size",
          [&]() -> std::string {
            uint64_t count = 0;
            for (const std::string& name : corpus_names()) {
              const algebra::Algebra& a = *corp.ctx(name).alg;
              algebra::Quotient q = algebra::semisimple_quotient(a);
              algebra::Wedderburn wed = algebra::wedderburn_blocks(q.alg);
              std::vector<Module> sims = modrep::simples(a);
              need(wed.blocks.size() == sims.size(), name + ": block/simple count mismatch");
              for (size_t i = 0; i < sims.size(); ++i) {
                uint32_t h = modrep::hom_space(sims[i], sims[i]).dim();
                if (wb::checked_pow(a.field().q(), h, 1ull << 16).value_or(0) != 2) continue;
                need(sims[i].dim() == wed.blocks[i].n,
                     name + ": simple " + std::to_string(i) + " size disagrees with its block");
                ++count;
              }
            }
            return plural(count, "simple") + " with two-element endomorphism field checked";
          });

  run_one(out, "infrastructure: canonical reduction, kernel agreement, radical oracle, hull invariants",
          [&]() -> std::string {
            std::mt19937_64 rng(0x12cf5eedull);
            auto rand_mat = [&](const ffla::Field& f, uint32_t r, uint32_t c) {
              Mat m(f, r, c);
              for (uint32_t i = 0; i < r; ++i)
                for (uint32_t j = 0; j < c; ++j)
                  m.at(i, j) = static_cast<uint16_t>(rng() % f.q());
              return m;
            };
            for (int t = 0; t < 200; ++t) {
              const ffla::Field& f = (t % 2) ? f3 : f2;
              Mat m = rand_mat(f, 1 + rng() % 8, 1 + rng() % 8);
              ffla::Rref a = ffla::rref(m);
              ffla::Rref b = ffla::rref(a.m);
              need(a.m == b.m && a.pivots == b.pivots, "reduction is not idempotent");
              need(ffla::rank(m) == a.rank(), "rank disagrees with the reduction");
            }
            for (int t = 0; t < 200; ++t) {
              const ffla::Field& f = (t % 2) ? f3 : f2;
              uint32_t amb = 2 + rng() % 7;
              ffla::Subspace u = ffla::Subspace::from_rows(rand_mat(f, 1 + rng() % amb, amb));
              ffla::Subspace w = ffla::Subspace::from_rows(rand_mat(f, 1 + rng() % amb, amb));
              need(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim(),
                   "sum/intersection dimensions do not balance");
            }
            for (int t = 0; t < 1000; ++t) {
              Mat m = rand_mat(f2, 1 + rng() % 10, 1 + rng() % 10);
              Mat r1, n1;
              std::vector<uint32_t> p1;
              uint32_t k1;
              {
                ffla::F2KernelScope scope(ffla::F2Kernel::generic);
                ffla::Rref rr = ffla::rref(m);
                r1 = rr.m;
                p1 = rr.pivots;
                n1 = ffla::left_nullspace(m);
                k1 = ffla::rank(m);
              }
              {
                ffla::F2KernelScope scope(ffla::F2Kernel::bitpacked);
                ffla::Rref rr = ffla::rref(m);
                need(rr.m == r1 && rr.pivots == p1, "kernels disagree on the reduction");
                need(ffla::left_nullspace(m) == n1, "kernels disagree on the left nullspace");
                need(ffla::rank(m) == k1, "kernels disagree on rank");
              }
            }
            uint64_t envs = 0;
            for (const std::string& name : corpus_names()) {
              const Context& c = corp.ctx(name);
              const algebra::Algebra& a = *c.alg;
              need(algebra::radical(a) == algebra::radical_elementwise(a),
                   name + ": radical routes disagree");
              std::vector<Module> mods;
              for (const auto& [mn, m] : c.modules) mods.push_back(m);
              mods.push_back(modrep::regular_module(a));
              for (const Module& s : modrep::simples(a)) mods.push_back(s);
              std::vector<ffla::Subspace> ideals =
                  modrep::all_submodules(modrep::regular_module(a));
              for (const Module& m : mods) {
                if (m.dim() == 0) continue;
                envelopes::Envelope env = envelopes::injective_envelope(m);
                need(ffla::rank(env.embed) == m.dim(), name + ": embedding lost rank");
                ffla::Subspace se = modrep::socle(env.env);
                Mat sb = modrep::socle(m).basis();
                for (uint32_t i = 0; i < sb.rows(); ++i)
                  need(se.contains(ffla::apply_row(sb.row(i), env.embed)),
                       name + ": socle not carried into the hull socle");
                ffla::Subspace img = ffla::Subspace::from_rows(env.embed);
                for (const ffla::Subspace& sub : modrep::all_submodules(env.env))
                  if (sub.dim() > 0)
                    need(sub.intersect(img).dim() > 0, name + ": embedding is not essential");
                need(envelopes::baer_injective(env.env, ideals),
                     name + ": hull fails the right-ideal extension test");
                ++envs;
              }
            }
            return "200 reductions, 200 dimension balances, 1000 kernel cases, " +
                   plural(envs, "hull") + " certified";
          });

  return out;
}

}  // namespace workbench
