// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Quantities are checked against brute-force references (oracles.hpp) where a
// finite enumeration exists; each criterion also returns a log of its numbers
// so criterion 15 can rerun it and compare bytes.

#include <sys/wait.h>
#include <unistd.h>

#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "spanbound/backend/any.hpp"
#include "spanbound/cli/commands.hpp"
#include "spanbound/cli/dispatch.hpp"
#include "spanbound/cli/fuzz.hpp"
#include "spanbound/cli/json_io.hpp"
#include "spanbound/connectivity.hpp"
#include "spanbound/groups.hpp"
#include "spanbound/theorems.hpp"

using namespace spanbound;
using cli::Json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json log = Json::array();
  std::size_t checked = 0;

  void require(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

template <class T>
std::shared_ptr<const T> get(std::string_view spec) {
  return std::get<std::shared_ptr<const T>>(create_backend(spec));
}

using FF = FiniteField;
using Vec = oracle::Vec;

oracle::PolyField ref_of(const FF& f) { return {f.field().modulus(), Vec(f.modulus().begin(), f.modulus().end())}; }

std::vector<Vec> vecs(const std::vector<FF::element_type>& es) { return {es.begin(), es.end()}; }

std::size_t odim(const oracle::PolyField& ref, const std::vector<Vec>& gens) { return oracle::span_dim(ref.p, ref.n(), gens); }

template <class R>
SetInstance<R> random_set(const std::shared_ptr<const R>& r, Rng& rng, std::size_t max_size) {
  std::vector<Elem<R>> es;
  const auto n = 1 + rng.below(max_size);
  while (es.size() < n) {
    auto e = r->sample(rng, SizeBudget{});
    if (!r->is_zero(e)) es.push_back(std::move(e));
  }
  return make_set(r, es);
}

template <class R>
Subspace<R> random_subspace(const std::shared_ptr<const R>& r, Rng& rng, std::size_t max_gens) {
  return span_of(random_set(r, rng, max_gens));
}

long sl(std::size_t n) { return static_cast<long>(n); }

std::string str(const mpq_class& q) { return q.get_str(); }

mpq_class ratio(std::size_t num, std::size_t den) {
  mpq_class q(sl(num), sl(den));
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- 1

Outcome c01_affine_family() {
  Outcome o;
  auto rf = get<RationalFunctionFieldBackend>("RF(Q)");
  for (int n = 3; n <= 8; ++n) {
    std::vector<std::string> texts;
    for (int i = 1; i <= n; ++i) texts.push_back("t-" + std::to_string(i));
    const auto a = parse_set(rf, texts);
    const auto d = span_of(a).dim(), di = span_of(inverse_set(a)).dim();
    o.require(d == 2, "dim span A_" + std::to_string(n) + " = " + std::to_string(d));
    o.require(di == static_cast<std::size_t>(n), "dim span A_" + std::to_string(n) + "^-1 = " + std::to_string(di));
    o.log.push_back({n, d, di});
  }
  o.detail = o.pass ? "n = 3..8: dims 2 and n" : o.detail;
  return o;
}

// ---------------------------------------------------------------- 2

template <class F>
void kneser_batch(Outcome& o, const std::shared_ptr<const F>& f, std::uint64_t seed, int count) {
  const auto ref = ref_of(*f);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto a = random_set(f, rng, 5), b = random_set(f, rng, 5);
    const auto v = kneser_check(a, b);
    const auto da = odim(ref, vecs(a.elements)), db = odim(ref, vecs(b.elements));
    const auto ab = oracle::products(ref, vecs(a.elements), vecs(b.elements));
    const auto dab = odim(ref, ab);
    o.require(v.dims == std::vector<std::size_t>{da, db} && v.product_dim == dab, f->describe() + ": dims disagree with enumeration");
    std::size_t dh = v.stabilizer_dim;
    if (i % 4 == 0) {
      dh = oracle::log_p(ref.p, oracle::stabilizer_set(ref, oracle::span_set(ref.p, ref.n(), ab)).size());
      o.require(dh == v.stabilizer_dim, f->describe() + ": stabilizer disagrees with exhaustive search");
    }
    o.require(v.holds && dab + dh >= da + db, f->describe() + ": dim AB + dim H < dim A + dim B");
    o.log.push_back({da, db, dab, dh});
  }
}

Outcome c02_kneser() {
  Outcome o;
  kneser_batch(o, get<FF>("FF(2,8)"), 2001, 1000);
  kneser_batch(o, get<FF>("FF(3,4)"), 2002, 500);
  if (o.pass) o.detail = std::to_string(o.log.size()) + " instances";
  return o;
}

// ---------------------------------------------------------------- 3

Outcome c03_nfold() {
  Outcome o;
  auto f = get<FF>("FF(2,6)");
  Rng rng(3001);
  for (int i = 0; i < 300; ++i) {
    std::vector<SetInstance<FF>> sets;
    const int k = i % 2 ? 4 : 3;
    for (int j = 0; j < k; ++j) sets.push_back(random_set(f, rng, 3));
    const auto v = kneser_nfold(sets);
    o.require(v.statement1 && v.statement2 && v.statement3, "a statement is false on instance " + std::to_string(i));
    o.require(v.implications_consistent(), "implications inconsistent on instance " + std::to_string(i));
    o.log.push_back({v.dims, v.product_dim, v.stabilizer_dim});
  }
  if (o.pass) o.detail = "300 triples/quadruples";
  return o;
}

// ---------------------------------------------------------------- 4, 5, 7

struct GrowthInstance {
  SetInstance<FF> a, b;
};

std::vector<GrowthInstance> growth_instances(const std::shared_ptr<const FF>& f, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<GrowthInstance> out;
  while (out.size() < 50) {
    auto a = random_set(f, rng, 4);
    auto b = random_set(f, rng, 3);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

bool le_rational(std::size_t lhs, const mpq_class& factor, std::size_t rhs) { return mpq_class(sl(lhs)) <= factor * sl(rhs); }

Outcome c04_petridis() {
  Outcome o;
  auto f = get<FF>("FF(2,6)");
  const auto ref = ref_of(*f);
  Rng rng(4002);
  for (const auto& [a, b] : growth_instances(f, 4001)) {
    const auto rho = rho_minimize(a, b, RhoMode::Exhaustive);
    const auto [num, den] = oracle::min_growth(ref, vecs(a.elements), vecs(b.elements));
    o.require(rho.rho == ratio(num, den), "rho " + str(rho.rho) + " differs from enumeration");
    const auto xb = vecs(rho.x.basis());
    std::size_t worst = 0;
    for (int t = 0; t < 100; ++t) {
      const auto c = random_set(f, rng, 3);
      const auto rep = petridis_check(a, b, c, rho);
      const auto cx = oracle::products(ref, vecs(c.elements), xb);
      const auto dcx = odim(ref, cx), dcxb = odim(ref, oracle::products(ref, cx, vecs(b.elements)));
      o.require(rep.cx_dim == dcx && rep.cxb_dim == dcxb, "CX / CXB dims differ from enumeration");
      o.require(rep.holds && le_rational(dcxb, rho.rho, dcx), "dim CXB > rho dim CX");
      worst = std::max(worst, dcxb);
    }
    o.log.push_back({str(rho.rho), rho.x_dim, worst});
  }
  if (o.pass) o.detail = "50 instances x 100 C";
  return o;
}

Outcome c05_plunnecke() {
  Outcome o;
  auto f = get<FF>("FF(2,6)");
  const auto ref = ref_of(*f);
  for (const auto& [a, b] : growth_instances(f, 5001)) {
    const auto rep = plunnecke_powers(a, b, 4);
    const auto alpha = ratio(odim(ref, oracle::products(ref, vecs(a.elements), vecs(b.elements))), odim(ref, vecs(a.elements)));
    o.require(rep.alpha == alpha, "alpha differs from enumeration");
    auto xbn = vecs(rep.rho.x.basis());
    const auto dx = odim(ref, xbn);
    mpq_class bound(sl(dx));
    for (unsigned n = 1; n <= 4; ++n) {
      xbn = oracle::products(ref, xbn, vecs(b.elements));
      const auto d = odim(ref, xbn);
      bound *= alpha;
      o.require(rep.xbn_dims.size() >= n && rep.xbn_dims[n - 1] == d, "dim X B^n differs from enumeration");
      o.require(mpq_class(sl(d)) <= bound, "dim X B^" + std::to_string(n) + " > alpha^n dim X");
    }
    o.require(rep.holds, "plunnecke report does not hold");
    o.log.push_back({str(rep.alpha), dx, rep.xbn_dims});
  }
  if (o.pass) o.detail = "50 instances, n <= 4";
  return o;
}

Outcome c07_cube() {
  Outcome o;
  auto f = get<FF>("FF(2,6)");
  const auto ref = ref_of(*f);
  for (const auto& inst : growth_instances(f, 5001)) {
    const auto& a = inst.a;
    const auto rep = cube_bound_check(a);
    const auto av = vecs(a.elements);
    const auto a2 = oracle::products(ref, av, av);
    const auto m = odim(ref, av), n = odim(ref, a2), c = odim(ref, oracle::products(ref, a2, av));
    o.require(rep.m == m && rep.n == n && rep.cube == c, "cube dims differ from enumeration");
    o.require(c * c <= n * n * n && m * m * c <= n * n * n, "cube bound fails");
    o.require(rep.holds, "cube report does not hold");
    o.log.push_back({m, n, c});
  }
  if (o.pass) o.detail = "the 50 sets A of criterion 5";
  return o;
}

// ---------------------------------------------------------------- 6

Outcome c06_triple() {
  Outcome o;
  auto q = get<Quaternions>("QUAT");
  const auto worked = ruzsa_triple_check(parse_set(q, {"1", "i"}), parse_set(q, {"1", "j"}), parse_set(q, {"1", "i"}));
  o.require(worked.abc * worked.abc == 16 && worked.ab * worked.bc * worked.max_abc == 32, "worked quaternion case is not 16 <= 32");
  Rng rng(6001);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_set(q, rng, 3), b = random_set(q, rng, 3), c = random_set(q, rng, 3);
    const auto t = ruzsa_triple_check(a, b, c);
    std::size_t mx = 0;
    for (const auto& e : b.elements) mx = std::max(mx, product_span(std::vector<SetInstance<Quaternions>>{a, make_set(q, {e}), c}).dim());
    o.require(t.max_abc == mx, "max_b dim AbC mismatch");
    o.require(t.holds && t.abc * t.abc <= t.ab * t.bc * t.max_abc, "QUAT triple inequality fails");
    o.log.push_back({t.abc, t.ab, t.bc, t.max_abc});
  }
  auto f = get<FF>("FF(3,4)");
  const auto ref = ref_of(*f);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_set(f, rng, 3), b = random_set(f, rng, 3), c = random_set(f, rng, 3);
    const auto t = ruzsa_triple_check(a, b, c);
    const auto ab = oracle::products(ref, vecs(a.elements), vecs(b.elements));
    const auto abc = odim(ref, oracle::products(ref, ab, vecs(c.elements)));
    const auto dab = odim(ref, ab), dbc = odim(ref, oracle::products(ref, vecs(b.elements), vecs(c.elements)));
    std::size_t mx = 0;
    for (const auto& e : b.elements) mx = std::max(mx, odim(ref, oracle::products(ref, oracle::products(ref, vecs(a.elements), {e}), vecs(c.elements))));
    o.require(t.abc == abc && t.ab == dab && t.bc == dbc && t.max_abc == mx, "FF triple dims differ from enumeration");
    o.require(t.holds && abc * abc <= dab * dbc * mx, "FF triple inequality fails");
    // commutative form: dim(ABC)^2 <= dim(AB) dim(BC) dim(AC)
    const auto dac = odim(ref, oracle::products(ref, vecs(a.elements), vecs(c.elements)));
    o.require(t.commutative_holds && *t.commutative_holds && abc * abc <= dab * dbc * dac, "commutative specialization fails");
    o.log.push_back({t.abc, t.ab, t.bc, t.max_abc});
  }
  if (o.pass) o.detail = "500 QUAT + 500 FF(3^4); worked case 16 <= 32";
  return o;
}

// ---------------------------------------------------------------- 8

Outcome c08_structure() {
  Outcome o;
  auto f = get<FF>("FF(2,12)");
  Rng rng(8001);
  for (int i = 0; i < 200; ++i) {
    const auto v = random_subspace(f, rng, 6);
    const auto h = stabilizer(v, Side::Left).h;
    o.require(same_subspace(product(h, h), h), "stabilizer not multiplicatively closed");
    o.require(contains(h, f->one()), "stabilizer misses k");
    o.require(12 % h.dim() == 0, "dim H = " + std::to_string(h.dim()) + " does not divide 12");
    const auto reps = coset_decompose(v, h, Side::Left);
    o.require(reps.size() * h.dim() == v.dim(), "|S| dim H != dim V");
    o.log.push_back({v.dim(), h.dim(), reps.size()});
  }
  if (o.pass) o.detail = "200 subspaces of GF(2^12)";
  return o;
}

// ---------------------------------------------------------------- 9

Outcome c09_dyson() {
  Outcome o;
  auto f = get<FF>("FF(2,8)");
  Rng rng(9001);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_set(f, rng, 4), b = random_set(f, rng, 4);
    const auto anchor = a.elements[rng.below(a.size())];
    const auto w = dyson_transform(a, b, anchor);
    const auto sa = span_of(a), sb = span_of(b);
    o.require(same_subspace(product(w.h, w.v), w.v), "H V != V");
    o.require(is_subspace_of(translate(anchor, sb, Side::Left), w.v), "k<aB> not inside V");
    o.require(is_subspace_of(w.v, product(sa, sb)), "V not inside k<AB>");
    o.require(w.v.dim() + w.h.dim() >= sa.dim() + sb.dim(), "dim V + dim H < dim A + dim B");
    o.require(w.holds(), "witness flags disagree");
    o.log.push_back({w.v.dim(), w.h.dim(), w.depth});
  }
  if (o.pass) o.detail = "200 instances in GF(2^8)";
  return o;
}

// ---------------------------------------------------------------- 10

Outcome c10_connectivity() {
  Outcome o;
  auto f = get<FF>("FF(2,6)");
  Rng rng(10001);
  const auto gf8 = span_elements(f, f->subfield_basis(3));
  std::vector<Subspace<FF>> refs{gf8};
  while (refs.size() < 20) refs.push_back(random_subspace(f, rng, 4));
  for (const mpq_class lambda : {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4)}) {
    for (std::size_t i = 0; i < refs.size(); ++i) {
      const auto& v = refs[i];
      const auto rep = kappa_and_atoms(v, lambda);
      o.require(rep.exact, "enumeration not exact");
      o.require(rep.atom_unique, "atom containing 1 not unique");
      o.require(contains(rep.atom, f->one()) && same_subspace(product(rep.atom, rep.atom), rep.atom), "atom not multiplicatively closed");
      o.require(rep.left_translates.value_or(false), "some atom is not a translate xH");
      o.require(rep.atoms_disjoint.value_or(false), "two atoms intersect");
      o.require(rep.lattice_closed && rep.lower_bound, "fragment lattice or lower bound fails");
      if (i == 0 && lambda == mpq_class(1, 2)) {
        o.require(rep.kappa == mpq_class(3, 2), "kappa(GF(8), 1/2) = " + str(rep.kappa));
        o.require(same_subspace(rep.atom, gf8), "atom of GF(8) is not GF(8)");
      }
      o.log.push_back({str(lambda), str(rep.kappa), rep.atom.dim(), rep.fragments.size(), rep.atoms_found.value_or(0)});
    }
    for (int t = 0; t < 1000; ++t) {
      const auto& v = refs[rng.below(refs.size())];
      const auto w1 = random_subspace(f, rng, 4);
      const auto w2 = sum(random_subspace(f, rng, 4), span_elements(f, {w1.basis()[rng.below(w1.dim())]}));
      const auto s = submodularity_check(w1, w2, v, lambda);
      const mpq_class lhs = connectivity_cost(sum(w1, w2), v, lambda) + connectivity_cost(intersect(w1, w2), v, lambda);
      const mpq_class rhs = connectivity_cost(w1, v, lambda) + connectivity_cost(w2, v, lambda);
      o.require(s.applicable && s.holds && lhs <= rhs && s.lhs == lhs && s.rhs == rhs,
                "submodularity fails at lambda " + str(lambda) + ": " + str(s.lhs) + " vs " + str(s.rhs) + " (direct " + str(lhs) + " vs " + str(rhs) +
                    ", applicable " + std::to_string(s.applicable) + ")");
    }
  }
  if (o.pass) o.detail = "3 lambdas x 20 V, 3000 submodular pairs, kappa(GF(8)) = 3/2";
  return o;
}

// ---------------------------------------------------------------- 11

Outcome c11_tao() {
  Outcome o;
  Rng rng(11001);
  int found = 0, cases[3] = {0, 0, 0};
  for (int attempt = 0; found < 50 && attempt < 5000; ++attempt) {
    auto f = get<FF>(attempt % 2 ? "FF(2,4)" : "FF(2,6)");
    Subspace<FF> v = attempt % 7 == 0 ? span_elements(f, f->subfield_basis(2)) : random_subspace(f, rng, 3);
    if (attempt % 7 == 0 && rng.coin()) v = translate(random_set(f, rng, 1).elements[0], v, Side::Left);
    const auto w = attempt % 3 == 0 ? v : sum(v, random_subspace(f, rng, 1));
    const auto dv = sl(v.dim()), dwv = sl(product(w, v).dim());
    mpq_class eps = 2 - mpq_class(dwv, dv);
    eps.canonicalize();
    if (eps <= 0) continue;
    if (rng.coin()) eps /= 2;
    ++found;
    const auto t = tao_classify(v, w, eps);
    const mpq_class two_over = 2 / eps;
    Subspace<FF> cover(f, {});
    for (const auto& x : t.x) cover = sum(cover, coset(t.h, x, Side::Left));
    bool inside = true;
    for (const auto& e : v.basis()) inside = inside && contains(cover, e);
    o.require(inside, "V not covered by the cosets Hx");
    if (t.case_number == 1) {
      o.require(t.x.size() == 1 && mpq_class(sl(t.h.dim())) <= (two_over - 1) * dv, "case 1 bound fails");
    } else {
      o.require(t.case_number == 2, "unknown case");
      o.require(mpq_class(sl(t.x.size())) <= two_over - 1, "|X| > 2/eps - 1");
      o.require(cover.dim() == t.x.size() * t.h.dim(), "cosets are not direct");
      o.require(mpq_class(sl(t.h.dim())) * (two_over + 1) <= (two_over - 1) * dv, "case 2 dimension bound fails");
    }
    o.require(t.holds() && t.kappa <= t.cost_w, "witness flags disagree");
    ++cases[t.case_number];
    o.log.push_back({f->describe(), str(eps), t.case_number, t.h.dim(), t.x.size()});
  }
  o.require(found == 50, "only " + std::to_string(found) + " hypothesis-satisfying instances");
  if (o.pass) o.detail = "50 witnesses (" + std::to_string(cases[1]) + " case 1, " + std::to_string(cases[2]) + " case 2)";
  return o;
}

// ---------------------------------------------------------------- 12, 13

GroupPtr group(std::string_view spec) { return std::make_shared<const Group>(Group::parse(spec)); }

GroupSet cyclic_set(const GroupPtr& g, std::uint64_t mask) {
  std::vector<GroupElement> es;
  for (std::int64_t i = 0; i < 64; ++i)
    if (mask >> i & 1) es.push_back({i});
  return make_group_set(g, es);
}

GroupSet random_group_set(const GroupPtr& g, Rng& rng, std::size_t max_size) {
  std::vector<GroupElement> es;
  const auto n = 1 + rng.below(max_size);
  for (std::uint64_t i = 0; i < n; ++i) es.push_back(g->sample(rng, 3));
  return make_group_set(g, es);
}

// Z/n sets as residues, multiplied by hand.
std::size_t cyclic_product_size(int n, std::uint64_t mx, std::uint64_t my) {
  std::uint64_t out = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((mx >> a & 1) && (my >> b & 1)) out |= std::uint64_t{1} << ((a + b) % n);
  return static_cast<std::size_t>(std::popcount(out));
}

std::size_t cyclic_stabilizer_size(int n, std::uint64_t mx) {
  std::size_t count = 0;
  for (int g = 0; g < n; ++g) {
    std::uint64_t moved = 0;
    for (int a = 0; a < n; ++a)
      if (mx >> a & 1) moved |= std::uint64_t{1} << ((a + g) % n);
    if (moved == mx) ++count;
  }
  return count;
}

template <class F>
void group_instance(Outcome& o, const GroupSet& x, const GroupSet& y, const GroupSet& z, const std::shared_ptr<const GroupAlgebra<F>>& ga) {
  const auto c = correspondence_check(x, y, ga);
  o.require(c.holds(), x.group->describe() + ": correspondence fails");
  const auto r = group_ruzsa_check(x, y, z, ga);
  o.require(r.agree && r.holds, x.group->describe() + ": Ruzsa verdicts disagree or fail");
  Json entry{x.group->describe(), c.x_dim, c.xy_dim, c.stabilizer_dim, r.xyz};
  if (x.group->is_abelian()) {
    const auto k = group_kneser_check(x, y, ga);
    o.require(k.agree && k.holds && k.ga_holds, x.group->describe() + ": Kneser verdicts disagree or fail");
    entry.push_back(k.h);
  }
  o.log.push_back(std::move(entry));
}

Outcome c12_groups() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    auto g = group("Z/" + std::to_string(n));
    const auto ga = modular_group_algebra(g);
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mx = 1; mx < full; ++mx) {
      const auto x = cyclic_set(g, mx);
      o.require(set_stabilizer(x).size() == cyclic_stabilizer_size(n, mx), "S(X) differs from hand computation");
      for (std::uint64_t my = 1; my < full; ++my) {
        const auto y = cyclic_set(g, my);
        const auto c = correspondence_check(x, y, ga);
        o.require(c.holds() && c.xy_size == cyclic_product_size(n, mx, my), "Z/" + std::to_string(n) + " correspondence fails");
        const auto k = group_kneser_check(x, y, ga);
        o.require(k.agree && k.holds, "Z/" + std::to_string(n) + " Kneser verdicts disagree");
        if ((mx + my) % 3 == 0) {
          const auto r = group_ruzsa_check(x, y, cyclic_set(g, (mx * 7 + my) % (full - 1) + 1), ga);
          o.require(r.agree && r.holds, "Z/" + std::to_string(n) + " Ruzsa verdicts disagree");
        }
      }
    }
    o.log.push_back({n, "exhaustive"});
  }
  Rng rng(12001);
  const std::vector<std::string> specs{"S3", "D4", "Z/2xZ/3xZ/4", "Z/8xZ/8", "Z/7xZ/9", "Z/60"};
  for (int i = 0; i < 300; ++i) {
    const auto g = group(specs[i % specs.size()]);
    const auto ga = modular_group_algebra(g);
    group_instance(o, random_group_set(g, rng, 5), random_group_set(g, rng, 5), random_group_set(g, rng, 3), ga);
  }
  if (o.pass) o.detail = "all X, Y in Z/n (n <= 6) + 300 random (S3, D4, |G| <= 64)";
  return o;
}

template <class F>
SetInstance<GroupAlgebra<F>> random_units(const std::shared_ptr<const GroupAlgebra<F>>& ga, Rng& rng, std::size_t max_size) {
  std::vector<typename GroupAlgebra<F>::element_type> es;
  const auto n = 1 + rng.below(max_size);
  const auto p = ga->field().modulus();
  while (es.size() < n) es.push_back(ga->monomial(ga->group().sample(rng, 3), ga->field().from_int(1 + static_cast<long>(rng.below(p - 1)))));
  return make_set(ga, es);
}

Outcome c13_algebra() {
  Outcome o;
  Rng rng(13001);
  // criterion 4 and 5 on commutative group algebras; B holds units, arbitrary A
  for (const char* spec : {"GA(GF(2),Z/5)", "GA(GF(3),Z/4)"}) {
    auto ga = get<ModularGroupAlgebra>(spec);
    for (int i = 0; i < 25; ++i) {
      const auto a = random_set(ga, rng, 3);
      auto b = random_units(ga, rng, 2);
      const auto pl = algebra_plunnecke(a, b, 4);
      o.require(pl.holds, std::string(spec) + ": algebra Plunnecke fails");
      b.elements.push_back(random_set(ga, rng, 1).elements[0]);  // one unit suffices for Petridis
      b = make_set(ga, b.elements);
      for (int t = 0; t < 20; ++t) {
        const auto pe = algebra_petridis(a, b, random_units(ga, rng, 3));
        o.require(pe.holds, std::string(spec) + ": algebra Petridis fails");
      }
      o.log.push_back({spec, str(pl.alpha), pl.xbn_dims});
    }
  }
  // criterion 6 on a noncommutative and a commutative algebra
  for (const char* spec : {"GA(GF(5),S3)", "GA(GF(3),Z/4)"}) {
    auto ga = get<ModularGroupAlgebra>(spec);
    for (int i = 0; i < 250; ++i) {
      const auto t = algebra_triple(random_set(ga, rng, 3), random_units(ga, rng, 3), random_set(ga, rng, 3));
      o.require(t.holds, std::string(spec) + ": algebra triple fails");
      o.log.push_back({t.abc, t.ab, t.bc, t.max_abc});
    }
  }
  // A_X-form sets reproduce the group numbers
  for (const char* gs : {"Z/6", "Z/2xZ/4", "S3", "D4"}) {
    const auto g = group(gs);
    const auto ga = modular_group_algebra(g);
    for (int i = 0; i < 40; ++i) {
      const auto x = random_group_set(g, rng, 4), y = random_group_set(g, rng, 3), z = random_group_set(g, rng, 3);
      const auto ax = to_group_algebra(x, ga), ay = to_group_algebra(y, ga), az = to_group_algebra(z, ga);
      const auto t = algebra_triple(ax, ay, az);
      o.require(t.abc == product_set({x, y, z}).size() && t.ab == product_set(x, y).size() && t.bc == product_set(y, z).size(),
                std::string(gs) + ": triple numbers differ from the group");
      if (g->is_abelian()) {
        const auto pl = algebra_plunnecke(ax, ay, 3);
        const auto gp = group_plunnecke_check(x, y, 3, ga);
        const auto alpha = ratio(product_set(x, y).size(), x.size());
        o.require(pl.holds && pl.alpha == alpha && gp.alpha == alpha && gp.agree && gp.ga_holds.value_or(false),
                  std::string(gs) + ": Plunnecke numbers differ from the group");
        const auto pe = algebra_petridis(ax, ay, to_group_algebra(z, ga));
        o.require(pe.holds, std::string(gs) + ": Petridis fails on A_X");
      }
    }
  }
  if (o.pass) o.detail = "Petridis/Plunnecke/triple on GA backends; A_X numbers match groups";
  return o;
}

// ---------------------------------------------------------------- 14, 15

int run_tool(const std::vector<std::string>& args) {
  if (const char* tool = std::getenv("SPANBOUND_TOOL")) {
    std::string cmd = std::string("\"") + tool + "\"";
    for (const auto& a : args) cmd += " \"" + a + "\"";
    cmd += " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }
  std::vector<std::string> storage{"spanbound"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  std::ostringstream out, err;
  return cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

fs::path scratch(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("spanbound_acceptance_" + std::to_string(::getpid())) / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

Outcome c14_inseparable() {
  Outcome o;
  const std::string spec = "EXT(GF(2)(s),y^2+s)";
  const auto dir = scratch("c14");
  const int rc = run_tool({"fuzz", "--backend", spec, "--checker", "kneser", "--count", "500", "--seed", "14", "--mode", "report", "--out", dir.string()});
  o.require(rc == 0, "fuzz exited " + std::to_string(rc));
  if (rc != 0) return o;
  const auto rep = cli::read_json_file(dir / "report.json");
  const auto findings = cli::read_jsonl_file(dir / "findings.jsonl");
  const auto counter = cli::read_jsonl_file(dir / "counterexamples.jsonl");
  o.require(counter.empty(), "report mode wrote counterexamples");
  o.require(rep["summary"]["findings"].get<std::size_t>() == findings.size(), "findings count mismatch");
  o.require(rep["records"].size() == 500, "expected 500 records");
  const auto backend = create_backend(spec);
  for (const auto& f : findings) {
    bool ok = f.value("checker", "") == "kneser" && f.contains("sets") && f.contains("quantities") && !f.value("holds", true) &&
              !f.value("asserted", true);
    if (ok) {
      cli::NamedSets sets;
      for (const auto& [name, texts] : f["sets"].items()) sets.emplace_back(name, texts.get<std::vector<std::string>>());
      const auto again = cli::run_checker(backend, "kneser", sets, cli::CheckParams{});
      ok = again.record["quantities"] == f["quantities"] && !again.holds;
    }
    o.require(ok, "malformed or non-reproducible finding");
  }
  o.log.push_back(cli::stable_dump(rep));
  o.detail = "exit 0, " + std::to_string(findings.size()) + " well-formed findings in 500 cases";
  fs::remove_all(dir);
  return o;
}

using Criterion = std::function<Outcome()>;

Outcome c15_determinism(const std::vector<std::pair<int, Criterion>>& reruns, const std::map<int, std::string>& first_logs) {
  Outcome o;
  for (const auto& [id, fn] : reruns) {
    const auto again = fn().log.dump();
    o.require(first_logs.count(id) && first_logs.at(id) == again, "criterion " + std::to_string(id) + " changed on rerun");
  }
  cli::FuzzOptions fz;
  fz.backend = "FF(2,8)";
  fz.checker = "kneser";
  fz.count = 200;
  fz.seed = 15;
  fz.threads = 1;
  const auto a = cli::run_fuzz(fz);
  fz.threads = 4;
  const auto b = cli::run_fuzz(fz);
  o.require(cli::stable_dump(a.report) == cli::stable_dump(b.report), "fuzz report depends on thread count");
  const auto d1 = scratch("c15a"), d2 = scratch("c15b");
  for (const auto& d : {d1, d2})
    run_tool({"fuzz", "--backend", "QUAT", "--checker", "triple", "--count", "100", "--seed", "15", "--out", d.string()});
  std::ifstream f1(d1 / "report.json"), f2(d2 / "report.json");
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  o.require(!s1.str().empty() && s1.str() == s2.str(), "tool report.json differs between runs");
  fs::remove_all(d1.parent_path());
  if (o.pass) o.detail = "reruns of criteria 1-14 byte-identical; fuzz independent of threads";
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string name;
    Criterion fn;
    double limit_s;  // 0: no limit
  };
  const std::vector<Entry> entries{
      {1, "A_n spans and inverses", c01_affine_family, 5},
      {2, "linear Kneser", c02_kneser, 60},
      {3, "n-fold Kneser", c03_nfold, 60},
      {4, "Petridis", c04_petridis, 300},
      {5, "Plunnecke powers", c05_plunnecke, 300},
      {6, "Ruzsa triple", c06_triple, 120},
      {7, "cube bound", c07_cube, 0},
      {8, "stabilizer structure", c08_structure, 0},
      {9, "Dyson transform", c09_dyson, 120},
      {10, "connectivity and atoms", c10_connectivity, 600},
      {11, "Tao classifier", c11_tao, 0},
      {12, "group correspondence", c12_groups, 0},
      {13, "group algebra variants", c13_algebra, 0},
      {14, "inseparable probe", c14_inseparable, 0},
  };

  int failures = 0;
  std::map<int, std::string> logs;
  auto report = [&](int id, const std::string& name, const Outcome& o, double secs, double limit) {
    const bool in_time = limit == 0 || secs < limit;
    const bool ok = o.pass && in_time;
    if (!ok) ++failures;
    std::string detail = o.detail;
    if (o.pass && !in_time) detail = "over the " + std::to_string(static_cast<int>(limit)) + " s limit";
    std::printf("%s  C%02d %-24s %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), o.checked, secs);
    std::fflush(stdout);
  };

  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    logs[e.id] = o.log.dump();
    report(e.id, e.name, o, secs, e.limit_s);
  }

  std::vector<std::pair<int, Criterion>> reruns;
  for (const auto& e : entries) reruns.emplace_back(e.id, e.fn);
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c15_determinism(reruns, logs);
  } catch (const std::exception& ex) {
    o.pass = false;
    o.detail = std::string("exception: ") + ex.what();
  }
  report(15, "determinism", o, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 0);

  std::printf("%d of 15 criteria failed\n", failures);
  return failures ? 1 : 0;
}
