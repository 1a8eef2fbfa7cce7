#include "workbench/classify.hpp"

#include <algorithm>
#include <numeric>

#include "support/util.hpp"

namespace workbench {
namespace {

using nlohmann::json;

json row_to_json(const Row& r) {
  json a = json::array();
  for (uint16_t x : r) a.push_back(x);
  return a;
}

json mat_to_json(const Mat& m) {
  json a = json::array();
  for (uint32_t i = 0; i < m.rows(); ++i) a.push_back(row_to_json(m.row(i)));
  return a;
}

json witness_json(const invariance::Certificate& c) {
  return json{{"from", row_to_json(c.moved_from)},
              {"map", mat_to_json(c.witness)},
              {"to", row_to_json(c.moved_to)}};
}

Row row_from_json(const json& j, const ffla::Field& f, uint32_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len)
    wb::fail_validation(where + ": expected an array of " + std::to_string(len) + " scalars");
  Row r(len);
  for (uint32_t i = 0; i < len; ++i) {
    if (!j[i].is_number_integer() || j[i].get<int64_t>() < 0 || j[i].get<int64_t>() >= f.q())
      wb::fail_validation(where + ": scalar out of field range");
    r[i] = static_cast<uint16_t>(j[i].get<int64_t>());
  }
  return r;
}

Mat mat_from_json(const json& j, const ffla::Field& f, uint32_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    wb::fail_validation(where + ": expected " + std::to_string(n) + " rows");
  Mat m(f, n, n);
  for (uint32_t i = 0; i < n; ++i) m.set_row(i, row_from_json(j[i], f, n, where));
  return m;
}

// one stored witness re-checked against the outer module and marked subspace
void audit_witness(const json& w, const Module& outer, const ffla::Subspace& marked,
                   bool must_be_invertible, const std::string& where) {
  const ffla::Field& f = outer.field();
  uint32_t n = outer.dim();
  if (!w.is_object() || !w.contains("map") || !w.contains("from") || !w.contains("to"))
    wb::fail_validation(where + ": expected {map, from, to}");
  Mat map = mat_from_json(w["map"], f, n, where + ".map");
  Row from = row_from_json(w["from"], f, n, where + ".from");
  Row to = row_from_json(w["to"], f, n, where + ".to");
  modrep::HomSpace hs = modrep::hom_space(outer, outer);
  if (!hs.space.contains(map.data()))
    wb::fail_validation(where + ": map is not an endomorphism of the outer module");
  if (must_be_invertible && ffla::rank(map) != n)
    wb::fail_validation(where + ": map is not invertible");
  if (!marked.contains(from)) wb::fail_validation(where + ": source is not in the marked subspace");
  if (ffla::apply_row(from, map) != to) wb::fail_validation(where + ": map does not send from to to");
  if (marked.contains(to)) wb::fail_validation(where + ": image did not leave the marked subspace");
}

}  // namespace

std::string canonical_hash(const Module& m) {
  const ffla::Field& f = m.field();
  uint32_t n = m.dim();
  wb::Fnv1a h;
  h.u32(f.p());
  h.u32(f.k());
  h.u32(n);
  if (n == 0) return wb::hex16(h.value());

  Mat stack = m.action(0);
  for (uint32_t i = 1; i < m.alg().dim(); ++i) stack = ffla::vstack(stack, m.action(i));
  ffla::Rref r = ffla::rref(stack);
  // the identity is in the span of the action matrices, so the stack has
  // full column rank and the top of its rref is an invertible basis change
  wb::check_internal(r.rank() == n, "stacked action lost rank");
  Mat t(f, n, n);
  for (uint32_t i = 0; i < n; ++i) t.set_row(i, r.m.row(i));
  auto tinv = ffla::inverse(t);
  wb::check_internal(tinv.has_value(), "canonical basis change is singular");

  // basis order matters: modules differing only in which basis element acts
  // nontrivially are not isomorphic and must not share an id
  for (uint32_t i = 0; i < m.alg().dim(); ++i) {
    Mat conj = t * m.action(i) * *tinv;
    for (uint16_t x : conj.data()) h.u16(x);
  }
  return wb::hex16(h.value());
}

ClassificationRecord classify(const Module& m, const std::vector<Module>& simple_list,
                              bool oracle) {
  ClassificationRecord r;
  r.id = canonical_hash(m);
  r.dim = m.dim();
  r.witnesses = json::object();

  invariance::InvarianceReport rep = invariance::full_report(m);
  r.quasi = rep.quasi.holds;
  r.invariant = rep.invariant.holds;
  r.dual_quasi = rep.dual_quasi.holds;
  r.dual_invariant = rep.dual_invariant.holds;
  r.end_blocks = rep.end_blocks;
  r.f2_quotients = rep.f2_quotients;

  if (m.dim() == 0) {
    r.socle_profile.assign(simple_list.size(), 0);
    r.pseudo = invariance::is_pseudo_injective(m);
    r.pseudo_ran = true;
    return r;
  }

  invariance::Embedded e = invariance::embed_in_hull(m);
  invariance::Covered c = invariance::cover_of(m);
  r.env_dim = e.hull.env.dim();
  r.cover_dim = c.cover.cover.dim();
  r.env_summands = static_cast<uint32_t>(modrep::decompose(e.hull.env).parts.size());
  r.indecomposable = modrep::has_local_endomorphism_ring(m);
  r.socle_profile = modrep::socle_multiplicities(m, simple_list);

  if (wb::checked_pow(m.field().q(), m.dim(), 1ull << 10)) {
    try {
      r.pseudo = invariance::is_pseudo_injective(m);
      r.pseudo_ran = true;
    } catch (const wb::Error& err) {
      if (err.kind != wb::ErrorKind::cap) throw;
    }
  }

  if (!rep.quasi.holds) r.witnesses["quasi"] = witness_json(rep.quasi);
  if (!rep.invariant.holds) r.witnesses["invariant"] = witness_json(rep.invariant);
  if (!rep.dual_quasi.holds) r.witnesses["dual_quasi"] = witness_json(rep.dual_quasi);
  if (!rep.dual_invariant.holds) r.witnesses["dual_invariant"] = witness_json(rep.dual_invariant);

  if (oracle) {
    uint64_t q = m.field().q();
    if (wb::checked_pow(q, modrep::hom_space(e.hull.env, e.hull.env).dim(), 1ull << 16)) {
      wb::check_internal(invariance::quasi_injective_oracle(e).holds == r.quasi,
                         "sweep oracle disagrees on hull endomorphism stability");
      wb::check_internal(invariance::automorphism_invariant_oracle(e).holds == r.invariant,
                         "sweep oracle disagrees on hull automorphism stability");
    }
    if (wb::checked_pow(q, modrep::hom_space(c.cover.cover, c.cover.cover).dim(), 1ull << 16)) {
      wb::check_internal(invariance::quasi_projective_oracle(c).holds == r.dual_quasi,
                         "sweep oracle disagrees on cover endomorphism stability");
      wb::check_internal(invariance::automorphism_coinvariant_oracle(c).holds == r.dual_invariant,
                         "sweep oracle disagrees on cover automorphism stability");
    }
  }
  return r;
}

SearchResult search_modules(const Algebra& a, uint32_t max_dim, bool oracle) {
  if (max_dim == 0) wb::fail_validation("max_dim must be positive");
  if (!wb::checked_pow(a.field().q(), max_dim, 1ull << 16))
    wb::fail_cap("q^max_dim exceeds 2^16");

  std::vector<Module> injs = envelopes::indecomposable_injectives(a);
  Module square_free = injs[0];
  for (size_t i = 1; i < injs.size(); ++i) square_free = modrep::direct_sum(square_free, injs[i]);

  std::vector<Module> candidates;
  for (const ffla::Subspace& s : modrep::all_submodules(square_free))
    if (s.dim() > 0 && s.dim() <= max_dim)
      candidates.push_back(modrep::submodule_module(square_free, s));
  Module reg = modrep::regular_module(a);
  for (const ffla::Subspace& n : modrep::all_submodules(reg)) {
    uint32_t qdim = reg.dim() - n.dim();
    if (qdim > 0 && qdim <= max_dim)
      candidates.push_back(modrep::quotient_module(reg, n).mod);
  }

  SearchResult out;
  for (const Module& cand : candidates) {
    bool known = false;
    for (const Module& rep : out.reps) {
      if (rep.dim() != cand.dim()) continue;
      if (modrep::is_isomorphic(cand, rep).verdict == modrep::Iso::yes) {
        known = true;
        break;
      }
    }
    if (!known) out.reps.push_back(cand);
  }

  std::vector<Module> simple_list = modrep::simples(a);
  for (const Module& rep : out.reps) out.records.push_back(classify(rep, simple_list, oracle));

  std::vector<size_t> order(out.reps.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return out.records[x].id < out.records[y].id; });
  SearchResult sorted;
  for (size_t i : order) {
    sorted.reps.push_back(std::move(out.reps[i]));
    sorted.records.push_back(std::move(out.records[i]));
  }
  return sorted;
}

json record_to_json(const ClassificationRecord& r) {
  json blocks = json::array();
  for (const auto& b : r.end_blocks) blocks.push_back(json::array({b.first, b.second}));
  json socle = json::array();
  for (uint32_t x : r.socle_profile) socle.push_back(x);
  return json{{"cover_dim", r.cover_dim},
              {"dim", r.dim},
              {"dual_invariant", r.dual_invariant},
              {"dual_quasi", r.dual_quasi},
              {"end_blocks", blocks},
              {"env_dim", r.env_dim},
              {"env_summands", r.env_summands},
              {"f2_quotients", r.f2_quotients},
              {"id", r.id},
              {"indecomposable", r.indecomposable},
              {"invariant", r.invariant},
              {"pseudo", r.pseudo},
              {"pseudo_ran", r.pseudo_ran},
              {"quasi", r.quasi},
              {"socle_profile", socle},
              {"witnesses", r.witnesses}};
}

std::string search_report(const SearchResult& s) {
  json arr = json::array();
  for (const ClassificationRecord& r : s.records) arr.push_back(record_to_json(r));
  return arr.dump(2) + "\n";
}

void audit_record(const Module& m, const ClassificationRecord& r) {
  if (canonical_hash(m) != r.id) wb::fail_validation("record id does not match the module");
  if (m.dim() != r.dim) wb::fail_validation("record dim does not match the module");
  struct Flag {
    const char* key;
    bool value;
    bool invertible;
    bool hull_side;
  };
  const Flag flags[] = {{"quasi", r.quasi, false, true},
                        {"invariant", r.invariant, true, true},
                        {"dual_quasi", r.dual_quasi, false, false},
                        {"dual_invariant", r.dual_invariant, true, false}};
  bool any_hull = !r.quasi || !r.invariant;
  bool any_cover = !r.dual_quasi || !r.dual_invariant;
  std::optional<invariance::Embedded> e;
  std::optional<invariance::Covered> c;
  if (m.dim() > 0 && any_hull) e.emplace(invariance::embed_in_hull(m));
  if (m.dim() > 0 && any_cover) c.emplace(invariance::cover_of(m));
  for (const Flag& fl : flags) {
    bool have = r.witnesses.is_object() && r.witnesses.contains(fl.key);
    if (fl.value) {
      if (have) wb::fail_validation(std::string("witness present for passing flag ") + fl.key);
      continue;
    }
    if (!have) wb::fail_validation(std::string("no witness for failing flag ") + fl.key);
    if (fl.hull_side)
      audit_witness(r.witnesses[fl.key], e->hull.env, ffla::Subspace::from_rows(e->hull.embed),
                    fl.invertible, std::string("witnesses.") + fl.key);
    else
      audit_witness(r.witnesses[fl.key], c->cover.cover, c->cover.kernel, fl.invertible,
                    std::string("witnesses.") + fl.key);
  }
}

}  // namespace workbench
