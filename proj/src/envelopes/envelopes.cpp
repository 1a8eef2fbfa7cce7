#include "envelopes/envelopes.hpp"

#include <optional>

#include "support/util.hpp"

namespace envelopes {

namespace {

size_t match_simple(const Module& s, const std::vector<Module>& ss) {
  for (size_t i = 0; i < ss.size(); ++i)
    if (modrep::is_isomorphic(s, ss[i]).verdict == modrep::Iso::yes) return i;
  wb::check_internal(false, "a simple module matches one of the blocks");
  return ss.size();
}

Row flatten(const Mat& m) {
  Row r;
  r.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (uint32_t i = 0; i < m.rows(); ++i)
    for (uint32_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
  return r;
}

Module zero_module(const Algebra& a) {
  return Module(a, 0, std::vector<Mat>(a.dim(), Mat(a.field(), 0, 0)));
}

std::vector<Module> collect_per_block(const Algebra& a, modrep::Decomposition parts,
                                      bool by_socle) {
  std::vector<Module> ss = modrep::simples(a);
  std::vector<std::optional<Module>> picked(ss.size());
  for (modrep::Summand& part : parts.parts) {
    Module cand = by_socle ? modrep::dual_module(part.mod, a) : std::move(part.mod);
    Module tag = by_socle ? modrep::submodule_module(cand, modrep::socle(cand))
                          : modrep::top(cand).mod;
    size_t i = match_simple(tag, ss);
    if (!picked[i]) picked[i] = std::move(cand);
  }
  std::vector<Module> out;
  for (size_t i = 0; i < picked.size(); ++i) {
    wb::check_internal(picked[i].has_value(), "every block is represented");
    out.push_back(std::move(*picked[i]));
  }
  return out;
}

}  // namespace

std::vector<Module> indecomposable_injectives(const Algebra& a) {
  Algebra op = algebra::opposite(a);
  modrep::Decomposition d = modrep::decompose(modrep::regular_module(op));
  std::vector<Module> out = collect_per_block(a, std::move(d), true);
  for (const Module& e : out)
    wb::check_internal(modrep::has_local_endomorphism_ring(e), "injective hulls of simples are indecomposable");
  return out;
}

std::vector<Module> indecomposable_projectives(const Algebra& a) {
  modrep::Decomposition d = modrep::decompose(modrep::regular_module(a));
  return collect_per_block(a, std::move(d), false);
}

Envelope injective_envelope(const Module& m) {
  const Algebra& a = m.alg();
  const ffla::Field& f = m.field();
  if (m.dim() == 0) return {zero_module(a), Mat(f, 0, 0)};

  Subspace soc = modrep::socle(m);
  Module soc_mod = modrep::submodule_module(m, soc);
  std::vector<Module> ss = modrep::simples(a);
  std::vector<Module> injs = indecomposable_injectives(a);
  modrep::Decomposition sd = modrep::decompose(soc_mod);

  // one hull per simple socle summand, concatenated in summand order
  std::vector<size_t> block_of;
  uint32_t d_e = 0;
  for (const modrep::Summand& part : sd.parts) {
    size_t i = match_simple(part.mod, ss);
    block_of.push_back(i);
    d_e += injs[i].dim();
  }
  Module env = injs[block_of[0]];
  for (size_t t = 1; t < block_of.size(); ++t) env = modrep::direct_sum(env, injs[block_of[t]]);
  wb::check_internal(env.dim() == d_e, "hull dimensions add up");

  // map each socle summand onto the socle of its own hull copy
  uint32_t d_s = soc.dim();
  Mat stack_b(f, 0, d_s);
  Mat stack_c(f, 0, d_e);
  uint32_t offset = 0;
  for (size_t t = 0; t < sd.parts.size(); ++t) {
    const Module& hull = injs[block_of[t]];
    Subspace hull_soc = modrep::socle(hull);
    Module hull_soc_mod = modrep::submodule_module(hull, hull_soc);
    modrep::IsoResult iso = modrep::is_isomorphic(sd.parts[t].mod, hull_soc_mod);
    wb::check_internal(iso.verdict == modrep::Iso::yes, "socle summands match their hull socles");
    Mat into_hull = iso.witness * hull_soc.basis();
    Mat placed(f, into_hull.rows(), d_e);
    for (uint32_t r = 0; r < into_hull.rows(); ++r)
      for (uint32_t c = 0; c < into_hull.cols(); ++c) placed.at(r, offset + c) = into_hull(r, c);
    stack_b = ffla::vstack(stack_b, sd.parts[t].image.basis());
    stack_c = ffla::vstack(stack_c, placed);
    offset += hull.dim();
  }
  std::optional<Mat> beta = ffla::solve(stack_b, stack_c);
  wb::check_internal(beta.has_value(), "the socle matching exists in soc coordinates");

  // extend the socle matching through the hom space
  modrep::HomSpace h = modrep::hom_space(m, env);
  Mat conds(f, h.dim(), static_cast<size_t>(d_s) * d_e);
  for (uint32_t t = 0; t < h.dim(); ++t) conds.set_row(t, flatten(soc.basis() * h.matrix(t)));
  Mat rhs(f, 1, static_cast<size_t>(d_s) * d_e);
  rhs.set_row(0, flatten(*beta));
  std::optional<Mat> coords = ffla::solve_left(conds, rhs);
  wb::check_internal(coords.has_value(), "socle embeddings extend to the hull");

  Mat u = h.combine(coords->row(0));
  wb::check_internal(ffla::rank(u) == m.dim(), "the extension stays injective");
  wb::check_internal(Subspace::from_rows(u).contains(modrep::socle(env)),
                     "the image sits essentially in the hull");
  return {std::move(env), std::move(u)};
}

bool baer_injective(const Module& m, const std::vector<Subspace>& right_ideals) {
  const Algebra& a = m.alg();
  Module reg = modrep::regular_module(a);
  modrep::HomSpace from_all = modrep::hom_space(reg, m);

  for (const Subspace& ideal : right_ideals) {
    Module sub = modrep::submodule_module(reg, ideal);
    modrep::HomSpace from_ideal = modrep::hom_space(sub, m);
    if (from_ideal.dim() == 0) continue;
    Mat restricted(m.field(), from_all.dim(), static_cast<size_t>(ideal.dim()) * m.dim());
    for (uint32_t t = 0; t < from_all.dim(); ++t)
      restricted.set_row(t, flatten(ideal.basis() * from_all.matrix(t)));
    if (ffla::rank(restricted) != from_ideal.dim()) return false;
  }
  return true;
}

bool is_injective_module(const Module& m, uint64_t cap) {
  Module reg = modrep::regular_module(m.alg());
  return baer_injective(m, modrep::all_submodules(reg, cap));
}

Cover projective_cover(const Module& m) {
  const Algebra& a = m.alg();
  if (m.dim() == 0)
    return {zero_module(a), Mat(a.field(), 0, 0), Subspace::zero(a.field(), 0)};

  // covers are hulls on the other side of the duality
  Algebra op = algebra::opposite(a);
  Module md = modrep::dual_module(m, op);
  Envelope env = injective_envelope(md);
  Module cover = modrep::dual_module(env.env, a);
  Mat onto = env.embed.transpose();

  wb::check_internal(ffla::rank(onto) == m.dim(), "the cover maps onto the module");
  Subspace kernel = Subspace::from_rows(ffla::left_nullspace(onto));
  wb::check_internal(modrep::invariant_subspace(cover, kernel), "the kernel is a submodule");
  wb::check_internal(modrep::radical_submodule(cover).contains(kernel),
                     "the kernel is superfluous, so the cover is minimal");
  return {std::move(cover), std::move(onto), std::move(kernel)};
}

}  // namespace envelopes
