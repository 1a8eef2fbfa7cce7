#include "workbench/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "support/util.hpp"

namespace workbench {
namespace {

using nlohmann::json;

const json& member(const json& j, const std::string& where, const char* key) {
  if (!j.is_object()) wb::fail_validation(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) wb::fail_validation(where + ": missing \"" + key + "\"");
  return *it;
}

uint64_t uint_member(const json& j, const std::string& where, const char* key) {
  const json& v = member(j, where, key);
  // accept signed storage too: in-memory documents built from int literals
  // carry them as signed even when nonnegative
  if (!v.is_number_integer() || v.get<int64_t>() < 0)
    wb::fail_validation(where + "." + key + ": expected a nonnegative integer");
  return v.get<uint64_t>();
}

uint16_t scalar_at(const json& j, const ffla::Field& f, const std::string& where) {
  if (!j.is_number_integer() || j.get<int64_t>() < 0 || j.get<int64_t>() >= f.q())
    wb::fail_validation(where + ": expected a scalar in 0.." + std::to_string(f.q() - 1));
  return static_cast<uint16_t>(j.get<int64_t>());
}

Row row_at(const json& j, const ffla::Field& f, uint32_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len)
    wb::fail_validation(where + ": expected an array of " + std::to_string(len) + " scalars");
  Row r(len);
  for (uint32_t i = 0; i < len; ++i) r[i] = scalar_at(j[i], f, where + "[" + std::to_string(i) + "]");
  return r;
}

Mat mat_at(const json& j, const ffla::Field& f, uint32_t rows, uint32_t cols,
           const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    wb::fail_validation(where + ": expected an array of " + std::to_string(rows) + " rows");
  Mat m(f, rows, cols);
  for (uint32_t i = 0; i < rows; ++i)
    m.set_row(i, row_at(j[i], f, cols, where + "[" + std::to_string(i) + "]"));
  return m;
}

// Axiom pre-checks on the raw table, each failure naming the basis index or
// triple; the Algebra/Module constructors re-run them as the real gate.
void check_algebra_axioms(const ffla::Field& f, uint32_t d, const std::vector<uint16_t>& table,
                          const Row& one) {
  auto mul_rows = [&](const Row& x, const Row& y) {
    Row r(d, 0);
    for (uint32_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (uint32_t j = 0; j < d; ++j) {
        if (y[j] == 0) continue;
        uint16_t c = f.mul(x[i], y[j]);
        for (uint32_t k = 0; k < d; ++k)
          r[k] = f.add(r[k], f.mul(c, table[(static_cast<size_t>(i) * d + j) * d + k]));
      }
    }
    return r;
  };
  for (uint32_t i = 0; i < d; ++i) {
    Row b(d, 0);
    b[i] = 1;
    if (mul_rows(one, b) != b || mul_rows(b, one) != b)
      wb::fail_validation("algebra.one: not a two-sided identity against basis element " +
                          std::to_string(i));
  }
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j)
      for (uint32_t k = 0; k < d; ++k) {
        Row bi(d, 0), bj(d, 0), bk(d, 0);
        bi[i] = bj[j] = bk[k] = 1;
        if (mul_rows(mul_rows(bi, bj), bk) != mul_rows(bi, mul_rows(bj, bk)))
          wb::fail_validation("algebra.mul: associativity fails at basis triple (" +
                              std::to_string(i) + ", " + std::to_string(j) + ", " +
                              std::to_string(k) + ")");
      }
}

void check_module_axioms(const Algebra& a, const std::vector<Mat>& action, uint32_t dim,
                         const std::string& where) {
  Mat one(a.field(), dim, dim);
  for (uint32_t i = 0; i < a.dim(); ++i)
    if (a.one()[i] != 0) one = one + action[i].scaled(a.one()[i]);
  if (!one.is_identity()) wb::fail_validation(where + ": identity does not act as the identity");
  for (uint32_t i = 0; i < a.dim(); ++i)
    for (uint32_t j = 0; j < a.dim(); ++j) {
      Row prod = a.mul(a.basis_elem(i), a.basis_elem(j));
      Mat expect(a.field(), dim, dim);
      for (uint32_t k = 0; k < a.dim(); ++k)
        if (prod[k] != 0) expect = expect + action[k].scaled(prod[k]);
      if (action[i] * action[j] != expect)
        wb::fail_validation(where + ".action: product of actions (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") disagrees with the structure constants");
    }
}

}  // namespace

const Module& Context::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) wb::fail_validation("no module named \"" + name + "\" in the file");
  return it->second;
}

Context load_json(const json& j) {
  if (!j.is_object()) wb::fail_validation("file: expected a top-level object");
  if (uint_member(j, "file", "schema_version") != 1)
    wb::fail_validation("schema_version: expected 1");

  const json& jf = member(j, "file", "field");
  uint64_t p = uint_member(jf, "field", "p");
  uint64_t k = uint_member(jf, "field", "k");
  if (p > 65536 || k > 16) wb::fail_validation("field: p or k out of range");
  const ffla::Field& f = ffla::Field::get(static_cast<uint32_t>(p), static_cast<uint32_t>(k));

  const json& ja = member(j, "file", "algebra");
  const json& jl = member(ja, "algebra", "labels");
  if (!jl.is_array() || jl.empty()) wb::fail_validation("algebra.labels: expected a nonempty array");
  Context ctx;
  std::set<std::string> seen;
  for (size_t i = 0; i < jl.size(); ++i) {
    if (!jl[i].is_string())
      wb::fail_validation("algebra.labels[" + std::to_string(i) + "]: expected a string");
    std::string lab = jl[i].get<std::string>();
    if (!seen.insert(lab).second)
      wb::fail_validation("algebra.labels[" + std::to_string(i) + "]: duplicate label \"" + lab +
                          "\"");
    ctx.labels.push_back(std::move(lab));
  }
  uint32_t d = static_cast<uint32_t>(ctx.labels.size());

  Row one = row_at(member(ja, "algebra", "one"), f, d, "algebra.one");
  const json& jm = member(ja, "algebra", "mul");
  if (!jm.is_array() || jm.size() != d)
    wb::fail_validation("algebra.mul: expected " + std::to_string(d) + " rows of products");
  std::vector<uint16_t> table(static_cast<size_t>(d) * d * d);
  for (uint32_t i = 0; i < d; ++i) {
    const json& ji = jm[i];
    if (!ji.is_array() || ji.size() != d)
      wb::fail_validation("algebra.mul[" + std::to_string(i) + "]: expected " + std::to_string(d) +
                          " products");
    for (uint32_t jj = 0; jj < d; ++jj) {
      Row prod = row_at(ji[jj], f, d,
                        "algebra.mul[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
      for (uint32_t kk = 0; kk < d; ++kk)
        table[(static_cast<size_t>(i) * d + jj) * d + kk] = prod[kk];
    }
  }
  check_algebra_axioms(f, d, table, one);
  ctx.alg = std::make_unique<Algebra>(f, d, std::move(table), std::move(one),
                                      algebra::Validate::full);

  const json& jmods = member(j, "file", "modules");
  if (!jmods.is_object()) wb::fail_validation("modules: expected an object");
  for (auto it = jmods.begin(); it != jmods.end(); ++it) {
    std::string where = "modules." + it.key();
    uint64_t dim = uint_member(*it, where, "dim");
    if (dim > 64) wb::fail_validation(where + ".dim: out of range");
    const json& jact = member(*it, where, "action");
    if (!jact.is_array() || jact.size() != d)
      wb::fail_validation(where + ".action: expected one matrix per basis element (" +
                          std::to_string(d) + ")");
    std::vector<Mat> action;
    for (uint32_t i = 0; i < d; ++i)
      action.push_back(mat_at(jact[i], f, static_cast<uint32_t>(dim), static_cast<uint32_t>(dim),
                              where + ".action[" + std::to_string(i) + "]"));
    check_module_axioms(*ctx.alg, action, static_cast<uint32_t>(dim), where);
    ctx.modules.emplace(it.key(), Module(*ctx.alg, static_cast<uint32_t>(dim), std::move(action)));
  }

  if (j.contains("submodules")) {
    const json& jsubs = j["submodules"];
    if (!jsubs.is_object()) wb::fail_validation("submodules: expected an object");
    for (auto it = jsubs.begin(); it != jsubs.end(); ++it) {
      std::string where = "submodules." + it.key();
      const json& jmod = member(*it, where, "module");
      if (!jmod.is_string()) wb::fail_validation(where + ".module: expected a module name");
      auto mit = ctx.modules.find(jmod.get<std::string>());
      if (mit == ctx.modules.end())
        wb::fail_validation(where + ".module: no module named \"" + jmod.get<std::string>() + "\"");
      const Module& m = mit->second;
      const json& jrows = member(*it, where, "rows");
      if (!jrows.is_array() || jrows.empty())
        wb::fail_validation(where + ".rows: expected a nonempty array of rows");
      std::vector<Row> rows;
      for (size_t i = 0; i < jrows.size(); ++i)
        rows.push_back(row_at(jrows[i], f, m.dim(), where + ".rows[" + std::to_string(i) + "]"));
      Subspace s = Subspace::from_rows(f, rows, m.dim());
      if (!modrep::invariant_subspace(m, s))
        wb::fail_validation(where + ": row span is not invariant under the module action");
      ctx.submodules.emplace(it.key(), std::move(s));
    }
  }
  return ctx;
}

Context load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) wb::fail_validation("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_json(json::parse(buf.str()));
  } catch (const json::parse_error& e) {
    wb::fail_validation(path + ": " + e.what());  // message carries line and column
  } catch (const wb::Error& e) {
    if (e.kind == wb::ErrorKind::validation) wb::fail_validation(path + ": " + e.what());
    throw;
  }
}

}  // namespace workbench
