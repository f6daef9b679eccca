#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "spanbound/backend/any.hpp"
#include "spanbound/theorems.hpp"

using namespace spanbound;

namespace {

template <class T>
std::shared_ptr<const T> get(std::string_view spec) {
  return std::get<std::shared_ptr<const T>>(create_backend(spec));
}

template <class R>
SetInstance<R> set(const std::shared_ptr<const R>& r, std::vector<std::string> texts) {
  return parse_set(r, texts);
}

std::shared_ptr<const FiniteField> ff16() { return get<FiniteField>("FF(2,x^4+x+1)"); }

SetInstance<FiniteField> gf4_basis(const std::shared_ptr<const FiniteField>& f) { return make_set(f, f->subfield_basis(2)); }

template <class R>
SetInstance<R> random_set(const std::shared_ptr<const R>& r, Rng& rng, std::size_t max_size) {
  std::vector<Elem<R>> es;
  const auto n = 1 + rng.below(max_size);
  for (std::uint64_t i = 0; i < n; ++i) es.push_back(r->sample(rng, SizeBudget{}));
  return make_set(r, es);
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

oracle::PolyField ref_of(const FiniteField& f) { return {f.field().modulus(), oracle::Vec(f.modulus().begin(), f.modulus().end())}; }

mpq_class oracle_rho(const FiniteField& f, const SetInstance<FiniteField>& a, const SetInstance<FiniteField>& b) {
  const std::vector<oracle::Vec> av(a.elements.begin(), a.elements.end()), bv(b.elements.begin(), b.elements.end());
  const auto [num, den] = oracle::min_growth(ref_of(f), av, bv);
  mpq_class r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Kneser, OneAndX) {
  auto f = ff16();
  const auto v = kneser_check(set(f, {"1", "x"}), set(f, {"1", "x"}));
  EXPECT_EQ(v.product_dim, 3U);
  EXPECT_EQ(v.stabilizer_dim, 1U);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.asserted);
  EXPECT_EQ(v.slack(), 0);
}

TEST(Kneser, SubfieldEquality) {
  auto f = ff16();
  const auto v = kneser_check(gf4_basis(f), gf4_basis(f));
  EXPECT_EQ(v.product_dim, 2U);
  EXPECT_EQ(v.stabilizer_dim, 2U);
  EXPECT_TRUE(v.periodic);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.slack(), 0);
}

TEST(Kneser, TrivialFactor) {
  auto f = ff16();
  const auto v = kneser_check(set(f, {"1"}), set(f, {"x", "x^3+1", "x^2"}));
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.product_dim, 3U);
}

TEST(Kneser, NeedsCommutativeBackend) {
  auto q = get<Quaternions>("QUAT");
  expect_error(ErrorKind::NonCommutativeBackend, [&] { kneser_check(set(q, {"1", "i"}), set(q, {"1", "j"})); });
}

TEST(Kneser, InseparableIsReportOnly) {
  auto e = get<ModularFunctionExtension>("EXT(GF(2)(s),y^2+s)");
  const auto v = kneser_check(set(e, {"1", "y"}), set(e, {"1", "s*y"}));
  EXPECT_FALSE(v.asserted);
}

TEST(KneserNfold, ThreeCopies) {
  auto f = ff16();
  const auto a = set(f, {"1", "x"});
  const auto v = kneser_nfold<FiniteField>({a, a, a});
  EXPECT_EQ(v.product_dim, 4U);
  EXPECT_TRUE(v.statement1 && v.statement2 && v.statement3);
  // {1,x}^3 spans all of GF(16), which is its own stabilizer
  EXPECT_TRUE(v.periodic);
  EXPECT_TRUE(v.implications_consistent());
  EXPECT_TRUE(v.chain_bound);
}

TEST(KneserNfold, PeriodicBranch) {
  auto f = ff16();
  const auto v = kneser_nfold<FiniteField>({gf4_basis(f), gf4_basis(f), gf4_basis(f)});
  EXPECT_TRUE(v.periodic);
  EXPECT_TRUE(v.statement3);
  EXPECT_TRUE(v.holds);
}

TEST(KneserNfold, TwoSetsMatchPairwise) {
  auto f = ff16();
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_set(f, rng, 3), b = random_set(f, rng, 3);
    const auto p = kneser_check(a, b);
    const auto n = kneser_nfold<FiniteField>({a, b});
    ASSERT_EQ(p.product_dim, n.product_dim);
    ASSERT_EQ(p.stabilizer_dim, n.stabilizer_dim);
    ASSERT_EQ(p.holds, n.holds);
  }
}

TEST(Rho, TrivialB) {
  auto f = ff16();
  const auto r = rho_minimize(set(f, {"1", "x", "x^2"}), set(f, {"1"}), RhoMode::Exhaustive);
  EXPECT_EQ(r.rho, 1);
}

TEST(Rho, ExhaustiveMatchesOracle) {
  auto f = ff16();
  const auto a = set(f, {"1", "x", "x^2"}), b = set(f, {"1", "x"});
  const auto r = rho_minimize(a, b, RhoMode::Exhaustive);
  EXPECT_EQ(r.consumed, 15U);  // 7 lines, 7 planes, 1 space
  EXPECT_LE(r.rho, mpq_class(4, 3));
  EXPECT_EQ(r.rho, oracle_rho(*f, a, b));
  EXPECT_EQ(mpq_class(static_cast<long>(r.xb_dim), static_cast<long>(r.x_dim)), r.rho);
}

TEST(Rho, SubfieldIsTheMinimizer) {
  auto f = ff16();
  const auto r = rho_minimize(gf4_basis(f), gf4_basis(f), RhoMode::Exhaustive);
  EXPECT_EQ(r.rho, 1);
  EXPECT_TRUE(same_subspace(r.x, span_of(gf4_basis(f))));
}

TEST(Rho, BudgetExceeded) {
  auto f = get<FiniteField>("FF(2,8)");
  std::vector<FiniteField::element_type> es;
  for (std::uint64_t i = 1; i <= 128; i <<= 1) es.push_back(f->element_at(i));
  expect_error(ErrorKind::BudgetExceeded, [&] { rho_minimize(make_set(f, es), make_set(f, es), RhoMode::Exhaustive, 10); });
}

TEST(Rho, ExhaustiveNeedsFiniteField) {
  auto rf = get<RationalFunctionFieldBackend>("RF(Q)");
  expect_error(ErrorKind::InfiniteFieldExhaustive, [&] { rho_minimize(set(rf, {"1", "t"}), set(rf, {"1", "t"}), RhoMode::Exhaustive); });
}

TEST(Petridis, TrivialC) {
  auto f = ff16();
  const auto a = set(f, {"1", "x", "x^2"}), b = set(f, {"1", "x"});
  const auto rho = rho_minimize(a, b, RhoMode::Exhaustive);
  const auto rep = petridis_check(a, b, set(f, {"1"}), rho);
  EXPECT_EQ(mpq_class(static_cast<long>(rep.cxb_dim)), rho.rho * static_cast<long>(rep.cx_dim));
  EXPECT_TRUE(rep.holds);
}

TEST(Petridis, RandomC) {
  auto f = ff16();
  const auto a = set(f, {"1", "x", "x^2"}), b = set(f, {"1", "x"});
  const auto rho = rho_minimize(a, b, RhoMode::Exhaustive);
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto c = make_set(f, {f->sample(rng, SizeBudget{}), f->sample(rng, SizeBudget{})});
    const auto rep = petridis_check(a, b, c, rho);
    ASSERT_TRUE(rep.holds);
    ASSERT_LE(mpq_class(static_cast<long>(rep.cxb_dim)), rho.rho * static_cast<long>(rep.cx_dim));
  }
}

TEST(Petridis, HeuristicRhoRejected) {
  auto f = ff16();
  const auto a = set(f, {"1", "x", "x^2"}), b = set(f, {"1", "x"});
  const auto rho = rho_minimize(a, b, RhoMode::Heuristic);
  expect_error(ErrorKind::HeuristicRho, [&] { petridis_check(a, b, set(f, {"1"}), rho); });
}

TEST(Plunnecke, OneAndX) {
  auto f = ff16();
  const auto rep = plunnecke_powers(set(f, {"1", "x"}), set(f, {"1", "x"}), 3);
  EXPECT_EQ(rep.alpha, mpq_class(3, 2));
  EXPECT_TRUE(rep.holds);
  ASSERT_EQ(rep.xbn_dims.size(), 3U);
  // dim X B^2 <= (9/4) dim X
  EXPECT_LE(mpq_class(static_cast<long>(rep.xbn_dims[1])) * 4, mpq_class(9 * static_cast<long>(rep.rho.x_dim)));
}

TEST(Plunnecke, TrivialB) {
  auto f = ff16();
  const auto rep = plunnecke_powers(set(f, {"x", "x^2+1"}), set(f, {"1"}), 4);
  EXPECT_EQ(rep.alpha, 1);
  for (auto d : rep.xbn_dims) EXPECT_EQ(d, rep.rho.x_dim);
}

TEST(Plunnecke, QuaternionsNeedCommutingSets) {
  auto q = get<Quaternions>("QUAT");
  expect_error(ErrorKind::CommutationFailure, [&] { plunnecke_powers(set(q, {"1", "i"}), set(q, {"1", "j"}), 2); });
}

TEST(Triple, QuaternionWorkedCase) {
  auto q = get<Quaternions>("QUAT");
  const auto rep = ruzsa_triple_check(set(q, {"1", "i"}), set(q, {"1", "j"}), set(q, {"1", "i"}));
  EXPECT_EQ(rep.abc, 4U);
  EXPECT_EQ(rep.ab, 4U);
  EXPECT_EQ(rep.bc, 4U);
  EXPECT_EQ(rep.max_abc, 2U);
  EXPECT_TRUE(rep.holds);
  EXPECT_FALSE(rep.commutative_holds);
}

TEST(Triple, FiniteField) {
  auto f = ff16();
  const auto a = set(f, {"1", "x"});
  const auto rep = ruzsa_triple_check(a, a, a);
  EXPECT_EQ(rep.abc, 4U);
  EXPECT_EQ(rep.ab, 3U);
  EXPECT_EQ(rep.bc, 3U);
  EXPECT_EQ(rep.max_abc, 3U);
  EXPECT_TRUE(rep.holds);
  ASSERT_TRUE(rep.commutative_holds);
  EXPECT_TRUE(*rep.commutative_holds);
}

TEST(Triple, SingletonB) {
  auto q = get<Quaternions>("QUAT");
  const auto rep = ruzsa_triple_check(set(q, {"1", "i", "k"}), set(q, {"1+j"}), set(q, {"j", "1"}));
  EXPECT_EQ(rep.max_abc, rep.abc);
  EXPECT_TRUE(rep.holds);
}

TEST(Cube, Examples) {
  auto f = ff16();
  const auto one = cube_bound_check(set(f, {"1"}));
  EXPECT_EQ(one.cube, 1U);
  EXPECT_TRUE(one.holds);
  const auto ox = cube_bound_check(set(f, {"1", "x"}));
  EXPECT_EQ(ox.m, 2U);
  EXPECT_EQ(ox.n, 3U);
  EXPECT_EQ(ox.cube, 4U);
  EXPECT_TRUE(ox.sqrt_form && ox.ratio_form);
  const auto sub = cube_bound_check(gf4_basis(f));
  EXPECT_EQ(sub.m, sub.n);
  EXPECT_EQ(sub.n, sub.cube);
  EXPECT_TRUE(sub.holds);
}

TEST(Dyson, SingletonA) {
  auto f = ff16();
  const auto b = set(f, {"1", "x^2", "x^3+x"});
  const auto w = dyson_transform(set(f, {"x"}), b, f->parse("x"));
  EXPECT_EQ(w.h.dim(), 1U);
  EXPECT_TRUE(same_subspace(w.v, translate(f->parse("x"), span_of(b), Side::Left)));
  EXPECT_TRUE(w.holds());
}

TEST(Dyson, SubfieldIsTerminal) {
  auto f = ff16();
  const auto w = dyson_transform(gf4_basis(f), gf4_basis(f), f->one());
  EXPECT_EQ(w.depth, 0U);
  EXPECT_TRUE(same_subspace(w.h, span_of(gf4_basis(f))));
  EXPECT_TRUE(same_subspace(w.v, span_of(gf4_basis(f))));
  EXPECT_TRUE(w.holds());
}

TEST(Dyson, OneAndX) {
  auto f = ff16();
  const auto w = dyson_transform(set(f, {"1", "x"}), set(f, {"1", "x"}), f->one());
  EXPECT_GE(w.v.dim() + w.h.dim(), 4U);
  EXPECT_TRUE(w.holds());
}

TEST(Dyson, AnchorMustLieInA) {
  auto f = ff16();
  expect_error(ErrorKind::InvalidArgument, [&] { dyson_transform(set(f, {"1", "x"}), set(f, {"1"}), f->parse("x^2")); });
}

TEST(Diderrich, QuaternionFirstBranch) {
  auto q = get<Quaternions>("QUAT");
  const auto rep = diderrich_check<Quaternions>({set(q, {"1", "i"}), set(q, {"1", "j"})});
  EXPECT_EQ(rep.product_dim, 4U);
  EXPECT_TRUE(rep.first_branch);
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.asserted);
}

TEST(Diderrich, SubfieldSecondBranch) {
  auto f = ff16();
  const auto rep = diderrich_check<FiniteField>({gf4_basis(f), gf4_basis(f)});
  EXPECT_EQ(rep.product_dim, 2U);
  EXPECT_FALSE(rep.first_branch);
  EXPECT_TRUE(rep.left_periodic);
  EXPECT_TRUE(rep.holds);
  EXPECT_FALSE(rep.asserted);
}

TEST(Diderrich, NonCommutativePrefix) {
  auto q = get<Quaternions>("QUAT");
  expect_error(ErrorKind::NonCommutativePrefix, [&] { diderrich_check<Quaternions>({set(q, {"i", "j"}), set(q, {"1"})}); });
}

TEST(Subring, GF4) {
  auto f = get<FiniteField>("FF(2,x^2+x+1)");
  const auto w = aS_subring_search(f, {f->parse("x"), f->parse("x")});
  EXPECT_EQ(w.v.dim(), 2U);
  ASSERT_TRUE(w.h);
  EXPECT_EQ(w.h->dim(), 2U);
  EXPECT_TRUE(is_division_closed(*w.h));
  EXPECT_TRUE(is_subspace_of(*w.h, w.v));
}

TEST(Subring, GeneratorPowers) {
  auto f = ff16();
  const auto x = f->parse("x");
  const auto w = aS_subring_search(f, {x, x, x, x});
  for (int e = 1; e <= 4; ++e) EXPECT_TRUE(contains(w.v, f->parse("x^" + std::to_string(e))));
  if (w.h) {
    EXPECT_GT(w.h->dim(), 1U);
    EXPECT_TRUE(is_division_closed(*w.h));
    EXPECT_TRUE(is_subspace_of(*w.h, w.v));
  }
}

TEST(Subring, OneRejected) {
  auto f = get<FiniteField>("FF(2,x^2+x+1)");
  expect_error(ErrorKind::OneElement, [&] { aS_subring_search(f, {f->one(), f->parse("x")}); });
  expect_error(ErrorKind::WrongArity, [&] { aS_subring_search(f, {f->parse("x")}); });
}

TEST(Doubling, Subfield) {
  auto f = ff16();
  const auto c = small_doubling_cover(gf4_basis(f), 1);
  EXPECT_EQ(c.h.dim(), 2U);
  EXPECT_EQ(c.x.size(), 1U);
  EXPECT_TRUE(c.holds);
}

TEST(Doubling, OneAndX) {
  auto f = ff16();
  const auto c = small_doubling_cover(set(f, {"1", "x"}), mpq_class(1, 2));
  EXPECT_EQ(c.dim_a2, 3U);
  EXPECT_EQ(c.h.dim(), 1U);
  EXPECT_EQ(c.x.size(), 3U);
  EXPECT_TRUE(c.count_bound && c.dim_bound && c.holds);
  expect_error(ErrorKind::HypothesisFailed, [&] { small_doubling_cover(set(f, {"1", "x"}), 1); });
}

TEST(Algebra, CyclicPlunnecke) {
  auto ga = get<ModularGroupAlgebra>("GA(GF(2),Z/5)");
  const auto a = set(ga, {"e[0]", "e[1]"});
  EXPECT_EQ(product_span(a, a).dim(), 3U);
  const auto rep = algebra_plunnecke(a, a, 3);
  EXPECT_EQ(rep.alpha, mpq_class(3, 2));
  EXPECT_TRUE(rep.holds);
  const auto single = algebra_plunnecke(a, set(ga, {"e[3]"}), 3);
  EXPECT_EQ(single.alpha, 1);
  for (auto d : single.xbn_dims) EXPECT_EQ(d, single.rho.x_dim);
}

TEST(Algebra, SymmetricTriple) {
  auto ga = get<ModularGroupAlgebra>("GA(GF(5),S3)");
  const auto a = set(ga, {"e[0]", "e[2]"});  // identity and a transposition
  const auto rep = algebra_triple(a, a, a);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.abc, 2U);  // {1, t}^3 = {1, t}
}

TEST(Algebra, UnitPreconditions) {
  auto ga = get<ModularGroupAlgebra>("GA(GF(3),Z/2)");
  const auto zd = set(ga, {"e[0]+e[1]"});
  const auto a = set(ga, {"e[0]"});
  expect_error(ErrorKind::UnitPreconditionFailed, [&] { algebra_triple(a, zd, a); });
  expect_error(ErrorKind::UnitPreconditionFailed, [&] { algebra_plunnecke(a, zd, 2); });
  expect_error(ErrorKind::UnitPreconditionFailed, [&] { algebra_petridis(a, zd, a); });
  expect_error(ErrorKind::UnitPreconditionFailed, [&] { algebra_petridis(a, a, zd); });
  auto s3 = get<ModularGroupAlgebra>("GA(GF(5),S3)");
  expect_error(ErrorKind::NonAbelianForThAlg1, [&] { algebra_plunnecke(set(s3, {"e[2]"}), set(s3, {"e[3]"}), 2); });
  expect_error(ErrorKind::UnsupportedBackend, [&] { algebra_triple(set(ff16(), {"1"}), set(ff16(), {"1"}), set(ff16(), {"1"})); });
}

// The inequalities are theorems: every in-hypothesis instance must hold.
TEST(Property, RandomFiniteFieldInstances) {
  for (const char* spec : {"FF(2,6)", "FF(3,4)"}) {
    auto f = get<FiniteField>(spec);
    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
      const auto a = random_set(f, rng, 3), b = random_set(f, rng, 3), c = random_set(f, rng, 2);
      const auto kn = kneser_check(a, b);
      ASSERT_TRUE(kn.holds) << spec << " case " << i;
      const auto rho = rho_minimize(a, b, RhoMode::Exhaustive);
      ASSERT_EQ(rho.rho, oracle_rho(*f, a, b));
      ASSERT_LE(rho.rho * static_cast<long>(span_of(a).dim()), mpq_class(static_cast<long>(product_span(a, b).dim())));
      ASSERT_TRUE(petridis_check(a, b, c, rho).holds);
      const auto pl = plunnecke_powers(a, b, 3);
      ASSERT_TRUE(pl.holds);
      ASSERT_EQ(mpq_class(static_cast<long>(pl.xbn_dims[0])), pl.rho.rho * static_cast<long>(pl.rho.x_dim));
      ASSERT_TRUE(ruzsa_triple_check(a, b, c).holds);
      ASSERT_TRUE(cube_bound_check(a).holds);
      ASSERT_TRUE(dyson_transform(a, b, a.elements.front()).holds());
      const auto heur = rho_minimize(a, b, RhoMode::Heuristic);
      ASSERT_GE(heur.rho, rho.rho);
    }
  }
}

TEST(Property, KneserTranslateInvariance) {
  auto f = get<FiniteField>("FF(2,6)");
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_set(f, rng, 4), b = random_set(f, rng, 4);
    const auto x = f->sample(rng, SizeBudget{}), y = f->sample(rng, SizeBudget{});
    std::vector<FiniteField::element_type> xa, by;
    for (const auto& e : a.elements) xa.push_back(f->mul(x, e));
    for (const auto& e : b.elements) by.push_back(f->mul(e, y));
    const auto v = kneser_check(a, b), w = kneser_check(make_set(f, xa), make_set(f, by));
    ASSERT_EQ(v.product_dim, w.product_dim);
    ASSERT_EQ(v.stabilizer_dim, w.stabilizer_dim);
    ASSERT_EQ(v.dims, w.dims);
    ASSERT_EQ(v.holds, w.holds);
    ASSERT_EQ(v.statement3, w.statement3);
  }
}

TEST(Property, QuaternionInstances) {
  auto q = get<Quaternions>("QUAT");
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_set(q, rng, 3), b = random_set(q, rng, 3), c = random_set(q, rng, 3);
    ASSERT_TRUE(ruzsa_triple_check(a, b, c).holds);
    if (a.size() == 1 || detail::is_commutative_set(*q, a.elements)) ASSERT_TRUE(diderrich_check<Quaternions>({a, b}).holds);
  }
}
