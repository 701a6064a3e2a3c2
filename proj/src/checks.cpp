#include "plk/checks.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "plk/cyclic_lie.hpp"
#include "plk/egf.hpp"
#include "plk/free_operad.hpp"
#include "plk/operad_quotient.hpp"
#include "plk/prelie.hpp"
#include "plk/rooted_tree.hpp"

namespace plk {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string itoa_big(const Integer& v) { return v.str(); }

Integer power(int base, int exp) {
  Integer r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

// Shared heavy artifacts for one run; built lazily under a lock so parallel
// checks reuse them.
struct Ctx {
  CheckConfig cfg;
  std::mutex m;
  std::map<int, Span> y;
  std::map<int, Span> subop;
  std::map<int, Span> module;
  std::map<int, int> cl_dim_cache;
  bool subop_built = false, module_built = false;

  const Span& yspan(int n) {
    std::lock_guard<std::mutex> lock(m);
    auto it = y.find(n);
    if (it == y.end()) it = y.emplace(n, y_span(n)).first;
    return it->second;
  }
  const std::map<int, Span>& suboperad() {
    std::lock_guard<std::mutex> lock(m);
    if (!subop_built) {
      subop = suboperad_closure(cfg.max_arity);
      subop_built = true;
    }
    return subop;
  }
  const std::map<int, Span>& lie_module() {
    std::lock_guard<std::mutex> lock(m);
    if (!module_built) {
      if (!subop_built) {
        subop = suboperad_closure(cfg.max_arity);
        subop_built = true;
      }
      module = lie_module_closure(subop, cfg.max_arity);
      module_built = true;
    }
    return module;
  }
  int cl_dimension(int n) {
    {
      std::lock_guard<std::mutex> lock(m);
      auto it = cl_dim_cache.find(n);
      if (it != cl_dim_cache.end()) return it->second;
    }
    int d = cl_component(n).dim();  // memoized globally
    std::lock_guard<std::mutex> lock(m);
    cl_dim_cache[n] = d;
    return d;
  }
};

void emit(std::vector<CheckResult>& out, const std::string& id, std::optional<int> arity,
          std::string expected, std::string actual, bool ok, Clock::time_point t0) {
  out.push_back({id, arity, std::move(expected), std::move(actual), ok, ms_since(t0)});
}

// ---- individual checks -------------------------------------------------------

void check_quotient_dims(Ctx& ctx, std::vector<CheckResult>& out) {
  const std::string id = "quotient-dims";
  int cap = ctx.cfg.quotient_max_arity;
  if (cap > 6) {
    auto t0 = Clock::now();
    emit(out, id, std::nullopt, "quotient arities up to 6",
         "requested " + std::to_string(cap) + ": over the resource cap", false, t0);
    cap = 6;
  }
  for (int n = 3; n <= cap; ++n) {
    Integer trees{tree_component(n).trees.size()};
    Integer expect = power(n, n - 1);
    {
      auto t0 = Clock::now();
      int dim = quotient_dim(prelie_presentation(), n);
      bool ok = Integer(dim) == expect && trees == expect;
      emit(out, id, n, "n^(n-1) = " + itoa_big(expect) + " = rooted-tree count",
           "prelie presentation: " + std::to_string(dim) + ", trees: " + itoa_big(trees), ok,
           t0);
    }
    {
      auto t0 = Clock::now();
      int dim = quotient_dim(two_gen_presentation(), n);
      emit(out, id, n, "n^(n-1) = " + itoa_big(expect),
           "bracket/bullet presentation: " + std::to_string(dim), Integer(dim) == expect, t0);
    }
  }
}

void check_orbit_rank(Ctx&, std::vector<CheckResult>& out) {
  const std::string id = "orbit-rank";
  struct Row {
    const char* name;
    SpeciesVector relator;
    int expected;
  };
  std::vector<Row> rows;
  rows.push_back({"eight-term bracket/bullet relation", two_gen_relator(), 2});
  rows.push_back({"Jacobi relator", jacobi_relator(Signature::lie()), 1});
  rows.push_back({"pre-Lie relator", prelie_relator(), 3});
  for (auto& r : rows) {
    auto t0 = Clock::now();
    int rank = orbit_rank(r.relator);
    emit(out, id, 3, std::string(r.name) + ": orbit rank " + std::to_string(r.expected),
         "rank " + std::to_string(rank), rank == r.expected, t0);
  }
}

void check_symmetrized_relation(Ctx&, std::vector<CheckResult>& out) {
  const std::string id = "symmetrized-relation";
  {
    auto t0 = Clock::now();
    SpeciesVector combo = symmetrized_two_gen_combination();
    SpeciesVector displayed = bracket_through_bullet_relation();
    bool ok = combo == displayed;
    emit(out, id, 3, "1/3 (r - 2 r.(23)) equals the bracket-through-bullet relation",
         ok ? "equal as free-operad vectors" : "difference " + (combo - displayed).str(), ok,
         t0);
  }
  {
    auto t0 = Clock::now();
    SpeciesVector lhs_side =
        parse_combination("{[1,2],3} - {1,[2,3]}", Signature::lie_bullet());
    SpeciesVector rhs_side = lhs_side - bracket_through_bullet_relation();
    bool ok = eval(lhs_side) == eval(rhs_side);
    emit(out, id, 3, "both sides evaluate to the same element of the rooted-tree model",
         ok ? "equal evaluations" : "evaluations differ", ok, t0);
  }
  {
    auto t0 = Clock::now();
    const Span& ideal = ideal_component(two_gen_presentation(), 3);
    SpeciesVector res = reduce_mod_ideal(bracket_through_bullet_relation(), ideal);
    emit(out, id, 3, "the relation reduces to zero in the quotient",
         res.zero() ? "residue 0" : "residue " + res.str(), res.zero(), t0);
  }
}

void check_filtration(Ctx&, std::vector<CheckResult>& out) {
  const std::string id = "filtration";
  Signature sig = Signature::lie_bullet();
  {
    auto t0 = Clock::now();
    long pairs = 0, violations = 0;
    for (int n = 2; n <= 5; ++n)
      for (int a = 1; a < n; ++a) {
        std::vector<Label> la, lb;
        for (int i = 1; i <= a; ++i) la.push_back(i);
        for (int i = a + 1; i <= n; ++i) lb.push_back(i);
        for (const TreeTensor& x : free_component(sig, la).tensors)
          for (const TreeTensor& y : free_component(sig, lb).tensors) {
            int s = 1;
            TreeTensor xy = TreeTensor::node(Gen::bracket, x, y, s);
            ++pairs;
            if (weight(xy) != weight(x) + weight(y)) ++violations;
          }
      }
    emit(out, id, 5, "left bracket action adds weights exactly (0 violations)",
         std::to_string(violations) + " violations over " + std::to_string(pairs) + " pairs",
         violations == 0, t0);
  }
  {
    auto t0 = Clock::now();
    long count = 0, violations = 0;
    for (int n = 2; n <= 4; ++n) {
      const auto& c = free_component(sig, n);
      for (const TreeTensor& x : c.tensors)
        for (Label i : c.labels) {
          int s = 1;
          TreeTensor br = TreeTensor::node(Gen::bracket, TreeTensor::leaf(1000),
                                           TreeTensor::leaf(1001), s);
          auto [t, sign] = substitute_leaf(x, i, br);
          ++count;
          if (weight(t) < weight(x)) ++violations;
        }
    }
    emit(out, id, 5, "right bracket composition never lowers the weight (0 violations)",
         std::to_string(violations) + " violations over " + std::to_string(count) +
             " compositions",
         violations == 0, t0);
  }
  auto t0 = Clock::now();
  Span f2 = filtration_span(3, 2);
  Span f3 = filtration_span(3, 3);
  emit(out, id, 3, "level-2 span has dimension 9", "dimension " + std::to_string(f2.dim()),
       f2.dim() == 9, t0);
  t0 = Clock::now();
  emit(out, id, 3, "level-3 span has dimension 8", "dimension " + std::to_string(f3.dim()),
       f3.dim() == 8, t0);

  t0 = Clock::now();
  SpeciesVector lhs = eval_tensor(parse_tensor("{[1,2],3}").first);
  SpeciesVector rhs = eval_tensor(parse_tensor("{1,[2,3]}").first);
  bool diff_in = f3.contains(lhs - rhs);
  emit(out, id, 3, "the two-term difference lies in level 3",
       diff_in ? "contained" : "not contained", diff_in, t0);
  t0 = Clock::now();
  bool lhs_out = !f3.contains(lhs);
  emit(out, id, 3, "either term alone does not lie in level 3",
       lhs_out ? "not contained" : "contained", lhs_out, t0);
  t0 = Clock::now();
  bool lhs_in2 = f2.contains(lhs);
  emit(out, id, 3, "each term lies in level 2", lhs_in2 ? "contained" : "not contained",
       lhs_in2, t0);
}

void check_y_vs_cl(Ctx& ctx, std::vector<CheckResult>& out) {
  const std::string id = "y-vs-cl";
  int cap = ctx.cfg.max_arity;
  if (cap > 7) {
    auto t0 = Clock::now();
    emit(out, id, std::nullopt, "arities up to 7",
         "requested " + std::to_string(cap) + ": over the resource cap", false, t0);
    cap = 7;
  }
  for (int n = 2; n <= cap; ++n) {
    auto t0 = Clock::now();
    const Span& y = ctx.yspan(n);
    int cdim = ctx.cl_dimension(n);
    emit(out, id, n, "dim of symmetrized-product span = dim CL = " + std::to_string(cdim),
         "span dimension " + std::to_string(y.dim()),
         static_cast<int>(y.dim()) == cdim, t0);

    t0 = Clock::now();
    std::string chi_y, chi_cl;
    bool chars_ok = true;
    for (const Perm& sigma : cycle_type_representatives(n)) {
      Rational cy = y.character([&](KeyId k) {
        return act_trees(sigma, SpeciesVector::unit(&tree_component(n).space, k, 1));
      });
      Rational cc = cl_character(n, sigma);
      if (!chi_y.empty()) {
        chi_y += ",";
        chi_cl += ",";
      }
      chi_y += to_string(cy);
      chi_cl += to_string(cc);
      chars_ok = chars_ok && cy == cc;
    }
    emit(out, id, n, "characters per cycle type = CL characters [" + chi_cl + "]",
         "span characters [" + chi_y + "]", chars_ok, t0);
  }
}

void check_suboperad_free(Ctx& ctx, std::vector<CheckResult>& out) {
  const std::string id = "suboperad-free";
  int cap = std::min(ctx.cfg.max_arity, 7);
  auto t0 = Clock::now();
  std::vector<Integer> cl_dims;
  for (int n = 2; n <= cap; ++n) cl_dims.push_back(Integer(ctx.cl_dimension(n)));
  EGFSeries t = free_operad_series(EGFSeries::from_dims(cl_dims, 2, cap));
  const auto& P = ctx.suboperad();
  for (int n = 2; n <= cap; ++n) {
    if (n > 2) t0 = Clock::now();
    Rational expect = t.dim(n);
    int dim = static_cast<int>(P.at(n).dim());
    emit(out, id, n,
         "closure dimension = free-operad count over CL dims = " + to_string(expect),
         "closure dimension " + std::to_string(dim), Rational(dim) == expect, t0);
  }
}

void check_module_closure(Ctx& ctx, std::vector<CheckResult>& out) {
  const std::string id = "module-closure";
  int cap = std::min(ctx.cfg.max_arity, 7);
  const auto& M = ctx.lie_module();
  for (int n = 2; n <= cap; ++n) {
    auto t0 = Clock::now();
    Integer expect = power(n, n - 1);
    int dim = static_cast<int>(M.at(n).dim());
    emit(out, id, n, "closure dimension = n^(n-1) = " + itoa_big(expect),
         "closure dimension " + std::to_string(dim), Integer(dim) == expect, t0);
  }
}

void check_egf(Ctx& ctx, std::vector<CheckResult>& out) {
  const std::string id = "egf";
  auto t0 = Clock::now();
  int order = ctx.cfg.egf_order;
  if (order < 2 || order > 64) {
    emit(out, id, std::nullopt, "truncation order in [2, 64]",
         "requested " + std::to_string(order) + ": over the resource cap", false, t0);
    order = std::min(std::max(order, 2), 64);
  }
  std::vector<Integer> dims;
  for (int n = 2; n <= std::min(order, 6); ++n) dims.push_back(Integer(ctx.cl_dimension(n)));
  EgfReport report = verify_dimension_identity(dims, order);
  for (const EgfRow& row : report.rows) {
    if (row.n > 1) t0 = Clock::now();
    std::string tag = row.extrapolated ? " (generator dim extrapolated)" : "";
    emit(out, id, row.n, "n^(n-1)/n! recovered: dimension " + itoa_big(row.expected) + tag,
         "dimension " + to_string(row.actual), row.match, t0);
  }
}

void check_factorization(Ctx&, std::vector<CheckResult>& out) {
  const std::string id = "factorization";
  Signature sig = Signature::lie_bullet();
  for (int n = 1; n <= 5; ++n) {
    auto t0 = Clock::now();
    const auto& comp = free_component(sig, n);
    long failures = 0;
    for (const TreeTensor& t : comp.tensors) {
      Factorization f = gamma_factorize(t);
      std::vector<SpeciesVector> parts;
      for (const TreeTensor& part : f.parts)
        parts.push_back(free_component(sig, part.labels()).vec(part));
      if (full_compose(sig, f.S, parts) != comp.vec(t)) {
        ++failures;
        continue;
      }
      for (const TreeTensor& part : f.parts) {
        auto pieces = bullet_cut_factorize(part);
        if (pieces.empty()) {
          if (!part.trivial()) ++failures;
          continue;
        }
        TreeTensor acc = pieces[0];
        bool ok = true;
        for (std::size_t k = 1; k < pieces.size(); ++k) {
          auto [next, sign] = substitute_leaf(acc, pieces[k].min_label(), pieces[k]);
          if (sign != 1) ok = false;
          acc = next;
        }
        if (!ok || acc != part) ++failures;
      }
    }
    emit(out, id, n,
         "all " + std::to_string(comp.tensors.size()) + " basis tensors round trip",
         std::to_string(failures) + " failures", failures == 0, t0);
  }
}

void check_coherence(Ctx& ctx, std::vector<CheckResult>& out) {
  const std::string id = "coherence";
  Signature sig = Signature::lie_bullet();
  std::mt19937_64 rng(ctx.cfg.seed);
  {
    auto t0 = Clock::now();
    long failures = 0;
    const int trials = 500;
    for (int trial = 0; trial < trials; ++trial) {
      int a = 2 + static_cast<int>(rng() % 2);
      int b = 2 + static_cast<int>(rng() % (5 - a - 1));
      std::vector<Label> la, lb;
      for (int i = 1; i <= a; ++i) la.push_back(i);
      for (int i = a + 1; i <= a + b; ++i) lb.push_back(i);
      const auto& ca = free_component(sig, la);
      const auto& cb = free_component(sig, lb);
      const TreeTensor& T = ca.tensors[rng() % ca.tensors.size()];
      const TreeTensor& S = cb.tensors[rng() % cb.tensors.size()];
      Label i = la[rng() % la.size()];
      SpeciesVector lhs = eval(partial_compose(sig, T, i, S));
      SpeciesVector rhs = graft_compose_vec(eval(ca.vec(T)), i, eval(cb.vec(S)));
      if (lhs != rhs) ++failures;
    }
    emit(out, id, 5, "evaluation is an operad morphism on 500 random compositions",
         std::to_string(failures) + " failures", failures == 0, t0);
  }
  {
    auto t0 = Clock::now();
    long failures = 0;
    const int trials = 500;
    const Presentation& p = prelie_presentation();
    for (int trial = 0; trial < trials; ++trial) {
      int n = 3 + static_cast<int>(rng() % 2);
      const Span& ideal = ideal_component(p, n);
      const auto& comp = free_component(p.sig, n);
      std::uniform_int_distribution<int> coef(-3, 3);
      SpeciesVector u(&comp.space), v(&comp.space);
      for (KeyId k = 0; k < comp.space.dim(); ++k) {
        if (rng() % 4 == 0) u.add_term(k, coef(rng));
        if (rng() % 4 == 0) v.add_term(k, coef(rng));
      }
      if (trial % 2 == 0) {
        // make the pair equal in the quotient by an ideal shift
        v = u;
        const auto& rows = ideal.rows();
        if (!rows.empty()) v.add_scaled(coef(rng), rows[rng() % rows.size()]);
      }
      bool eq_quotient = reduce_mod_ideal(u - v, ideal).zero();
      bool eq_trees = eval(u - v).zero();
      if (eq_quotient != eq_trees) ++failures;
    }
    emit(out, id, 4, "quotient equality agrees with rooted-tree equality on 500 random pairs",
         std::to_string(failures) + " failures", failures == 0, t0);
  }
}

struct Registered {
  CheckInfo info;
  void (*fn)(Ctx&, std::vector<CheckResult>&);
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> regs = {
      {{"quotient-dims",
        "quotient dimensions match the rooted-tree counts in both presentations"},
       check_quotient_dims},
      {{"orbit-rank", "S3-orbit ranks of the defining relators"}, check_orbit_rank},
      {{"symmetrized-relation",
        "the symmetrized relator combination equals the bracket-through-bullet relation"},
       check_symmetrized_relation},
      {{"filtration", "weight behaviour of the bracket actions and the arity-3 strata"},
       check_filtration},
      {{"y-vs-cl", "symmetrized-product spans against cyclic Lie dimensions and characters"},
       check_y_vs_cl},
      {{"suboperad-free",
        "suboperad closure against the free-operad count over cyclic Lie dimensions"},
       check_suboperad_free},
      {{"module-closure", "the Lie closure of the suboperad exhausts the components"},
       check_module_closure},
      {{"egf", "generating-series identity recovering n^(n-1) in every arity"}, check_egf},
      {{"factorization", "skeleton and bullet-cut factorizations round trip"},
       check_factorization},
      {{"coherence", "evaluation morphism and quotient/tree-model agreement on random data"},
       check_coherence},
  };
  return regs;
}

}  // namespace

const std::vector<CheckInfo>& all_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& r : registry()) out.push_back(r.info);
    return out;
  }();
  return infos;
}

bool known_check(const std::string& id) {
  for (const auto& r : registry())
    if (r.info.id == id) return true;
  return id == "all";
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const CheckConfig& config, int parallel) {
  if (config.max_arity < 2) throw std::invalid_argument("max arity must be at least 2");
  if (config.quotient_max_arity < 3)
    throw std::invalid_argument("quotient max arity must be at least 3");

  std::vector<std::size_t> selected;
  bool all = false;
  for (const auto& id : ids)
    if (id == "all") all = true;
  for (std::size_t k = 0; k < registry().size(); ++k) {
    const auto& r = registry()[k];
    if (all) {
      selected.push_back(k);
      continue;
    }
    for (const auto& id : ids)
      if (id == r.info.id) selected.push_back(k);
  }
  if (!all) {
    for (const auto& id : ids)
      if (!known_check(id)) throw std::invalid_argument("unknown check id: " + id);
    if (selected.empty()) throw std::invalid_argument("no checks selected");
  }

  Ctx ctx{config};
  std::vector<std::vector<CheckResult>> buckets(selected.size());

  auto run_one = [&](std::size_t slot) {
    const auto& reg = registry()[selected[slot]];
    try {
      reg.fn(ctx, buckets[slot]);
    } catch (const std::exception& e) {
      buckets[slot].push_back({reg.info.id, std::nullopt, "check completes without errors",
                               std::string("error: ") + e.what(), false, 0});
    }
  };

  if (parallel <= 1) {
    for (std::size_t k = 0; k < selected.size(); ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    int nworkers = std::min<std::size_t>(parallel, selected.size());
    for (int w = 0; w < nworkers; ++w)
      workers.emplace_back([&] {
        while (true) {
          std::size_t k = next.fetch_add(1);
          if (k >= selected.size()) return;
          run_one(k);
        }
      });
    for (auto& t : workers) t.join();
  }

  std::vector<CheckResult> out;
  for (auto& b : buckets)
    for (auto& r : b) out.push_back(std::move(r));
  return out;
}

std::string report_text(const CheckConfig& config, const std::vector<CheckResult>& results) {
  std::string out;
  out += "config: max-arity " + std::to_string(config.max_arity) + ", quotient-max-arity " +
         std::to_string(config.quotient_max_arity) + ", egf-order " +
         std::to_string(config.egf_order) + "\n";
  std::map<std::string, std::pair<int, int>> per_check;  // id -> (passed, total)
  for (const auto& r : results) {
    out += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.check_id;
    if (r.arity) out += " (n=" + std::to_string(*r.arity) + ")";
    out += ": expected " + r.expected + "; got " + r.actual + " [" +
           std::to_string(r.runtime_ms) + " ms]\n";
    auto& pc = per_check[r.check_id];
    pc.first += r.passed ? 1 : 0;
    pc.second += 1;
  }
  int checks_passed = 0;
  for (const auto& [id, pc] : per_check)
    if (pc.first == pc.second) ++checks_passed;
  out += "summary: " + std::to_string(checks_passed) + "/" + std::to_string(per_check.size()) +
         " checks passed";
  long rows_passed = 0;
  for (const auto& r : results) rows_passed += r.passed ? 1 : 0;
  out += " (" + std::to_string(rows_passed) + "/" + std::to_string(results.size()) +
         " assertions)\n";
  return out;
}

std::string report_json(const CheckConfig& config, const std::vector<CheckResult>& results) {
  nlohmann::json j;
  j["version"] = "0.1.0";
  j["config"] = {{"max_arity", config.max_arity},
                 {"quotient_max_arity", config.quotient_max_arity},
                 {"egf_order", config.egf_order},
                 {"seed", config.seed}};
  j["results"] = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json row;
    row["check_id"] = r.check_id;
    if (r.arity)
      row["arity"] = *r.arity;
    else
      row["arity"] = nullptr;
    row["expected"] = r.expected;
    row["actual"] = r.actual;
    row["passed"] = r.passed;
    row["runtime_ms"] = r.runtime_ms;
    j["results"].push_back(std::move(row));
  }
  return j.dump(2);
}

}  // namespace plk
