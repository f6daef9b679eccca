#pragma once

// Per-backend checker bodies, instantiated in dispatch_fields.cpp and
// dispatch_other.cpp so that the two halves compile in parallel.

#include "spanbound/cli/dispatch.hpp"
#include "spanbound/connectivity.hpp"

namespace spanbound::cli::detail {

template <class R>
Json elements_json(const R& r, const std::vector<Elem<R>>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(r.format(x));
  return out;
}

template <class R>
Json basis_json(const Subspace<R>& v) {
  return elements_json(v.backend(), v.basis());
}

inline Json dims_json(const std::vector<std::size_t>& ds) {
  Json out = Json::array();
  for (auto d : ds) out.push_back(d);
  return out;
}

inline void need_sets(const std::string& checker, const NamedSets& sets, std::size_t lo, std::size_t hi) {
  if (sets.size() < lo || sets.size() > hi)
    fail(ErrorKind::ArityMismatch, checker + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                                       " sets, got " + std::to_string(sets.size()));
}

template <class R>
CheckOutcome run_typed(const BackendPtr<R>& backend, const std::string& checker, const NamedSets& named, const CheckParams& p) {
  const R& r = *backend;
  std::vector<SetInstance<R>> sets;
  for (const auto& [name, texts] : named) sets.push_back(parse_set(backend, texts, name));

  CheckOutcome out;
  Json& rec = out.record;
  rec["checker"] = checker;
  rec["backend"] = r.describe();
  Json sj = Json::object();
  for (const auto& s : sets) sj[s.name] = elements_json(r, s.elements);
  rec["sets"] = sj;
  Json q = Json::object();
  Json w = Json::object();
  auto verdict = [&](bool holds, bool asserted) {
    out.holds = holds;
    out.asserted = asserted;
  };

  if (checker == "span") {
    need_sets(checker, named, 1, 1);
    const auto v = span_of(sets[0]);
    q["size"] = sets[0].size();
    q["dim"] = v.dim();
    if (std::all_of(sets[0].elements.begin(), sets[0].elements.end(), [&](const auto& x) { return r.is_unit(x); }))
      q["dim_inverse"] = span_of(inverse_set(sets[0])).dim();
    w["basis"] = basis_json(v);
    verdict(v.dim() <= sets[0].size(), true);
  } else if (checker == "kneser" || checker == "kneser_nfold") {
    if (checker == "kneser") need_sets(checker, named, 2, 2);
    auto k = checker == "kneser" ? kneser_check(sets[0], sets[1]) : kneser_nfold(sets);
    q["dims"] = dims_json(k.dims);
    q["product_dim"] = k.product_dim;
    q["stabilizer_dim"] = k.stabilizer_dim;
    q["slack"] = k.slack();
    q["statement1"] = k.statement1;
    q["statement2"] = k.statement2;
    q["statement3"] = k.statement3;
    q["implications_consistent"] = k.implications_consistent();
    q["periodic"] = k.periodic;
    if (k.chain_violation) q["chain_violation"] = *k.chain_violation;
    w["stabilizer"] = basis_json(k.stabilizer);
    w["product"] = basis_json(k.product);
    verdict(k.holds && k.implications_consistent(), k.asserted);
  } else if (checker == "rho") {
    need_sets(checker, named, 2, 2);
    auto x = rho_minimize(sets[0], sets[1], p.rho, p.budget, p.seed);
    q["rho"] = rational_text(x.rho);
    q["mode"] = std::string(to_string(x.mode));
    q["x_dim"] = x.x_dim;
    q["xb_dim"] = x.xb_dim;
    q["consumed"] = x.consumed;
    w["x"] = basis_json(x.x);
    // dim XB >= dim X in a division ring
    verdict(!r.is_division_ring() || x.rho >= 1, r.is_division_ring());
  } else if (checker == "petridis" || checker == "algebra_petridis") {
    need_sets(checker, named, 3, 3);
    PetridisReport<R> rep;
    RhoResult<R> x;
    if (checker == "petridis") {
      x = rho_minimize(sets[0], sets[1], p.rho, p.budget, p.seed);
      rep = petridis_check(sets[0], sets[1], sets[2], x);
    } else {
      x = rho_minimize(sets[0], sets[1], RhoMode::Exhaustive, p.budget);
      rep = algebra_petridis(sets[0], sets[1], sets[2], p.budget);
    }
    q["rho"] = rational_text(rep.rho);
    q["cx_dim"] = rep.cx_dim;
    q["cxb_dim"] = rep.cxb_dim;
    w["x"] = basis_json(x.x);
    verdict(rep.holds, true);
  } else if (checker == "plunnecke" || checker == "algebra_plunnecke") {
    need_sets(checker, named, 2, 2);
    auto rep = checker == "plunnecke" ? plunnecke_powers(sets[0], sets[1], p.n_max, p.budget, p.seed)
                                      : algebra_plunnecke(sets[0], sets[1], p.n_max, p.budget);
    q["alpha"] = rational_text(rep.alpha);
    q["rho"] = rational_text(rep.rho.rho);
    q["rho_mode"] = std::string(to_string(rep.rho.mode));
    q["x_dim"] = rep.rho.x_dim;
    q["xbn_dims"] = dims_json(rep.xbn_dims);
    if (rep.an_dims) q["an_dims"] = dims_json(*rep.an_dims);
    if (rep.an_holds) q["an_holds"] = *rep.an_holds;
    w["x"] = basis_json(rep.rho.x);
    verdict(rep.holds, checker == "algebra_plunnecke" ? rep.rho.mode == RhoMode::Exhaustive : rep.asserted);
  } else if (checker == "triple" || checker == "algebra_triple") {
    need_sets(checker, named, 3, 3);
    auto rep = checker == "triple" ? ruzsa_triple_check(sets[0], sets[1], sets[2]) : algebra_triple(sets[0], sets[1], sets[2]);
    q["abc"] = rep.abc;
    q["ab"] = rep.ab;
    q["bc"] = rep.bc;
    q["max_abc"] = rep.max_abc;
    q["lhs"] = rep.abc * rep.abc;
    q["rhs"] = rep.ab * rep.bc * rep.max_abc;
    if (rep.ac) q["ac"] = *rep.ac;
    if (rep.commutative_holds) q["commutative_holds"] = *rep.commutative_holds;
    w["argmax"] = r.format(sets[1].elements[rep.argmax]);
    verdict(rep.holds && rep.commutative_holds.value_or(true), true);
  } else if (checker == "cube") {
    need_sets(checker, named, 1, 1);
    auto rep = cube_bound_check(sets[0]);
    q["m"] = rep.m;
    q["n"] = rep.n;
    q["cube"] = rep.cube;
    q["sqrt_form"] = rep.sqrt_form;
    q["ratio_form"] = rep.ratio_form;
    verdict(rep.holds, true);
  } else if (checker == "dyson") {
    need_sets(checker, named, 2, 2);
    const auto anchor = p.element ? r.parse(*p.element) : sets[0].elements.front();
    auto d = dyson_transform(sets[0], sets[1], anchor, kDefaultClosureBudget);
    q["dim_a"] = d.dim_a;
    q["dim_b"] = d.dim_b;
    q["dim_v"] = d.v.dim();
    q["dim_h"] = d.h.dim();
    q["depth"] = d.depth;
    q["stabilized"] = d.stabilized;
    q["contains_ab"] = d.contains_ab;
    q["inside_product"] = d.inside_product;
    q["dimension_bound"] = d.dimension_bound;
    w["a"] = r.format(d.a);
    w["h"] = basis_json(d.h);
    w["v"] = basis_json(d.v);
    verdict(d.holds(), true);
  } else if (checker == "diderrich") {
    need_sets(checker, named, 2, 64);
    auto d = diderrich_check(sets);
    q["dims"] = dims_json(d.dims);
    q["product_dim"] = d.product_dim;
    q["left_stabilizer_dim"] = d.left_stabilizer_dim;
    q["right_stabilizer_dim"] = d.right_stabilizer_dim;
    q["branch"] = d.branch();
    verdict(d.holds, d.asserted);
  } else if (checker == "subring") {
    need_sets(checker, named, 1, 1);
    auto s = aS_subring_search(backend, sets[0].elements);
    q["dim_v"] = s.v.dim();
    q["one_in_v"] = s.one_in_v;
    q["found"] = s.h.has_value();
    if (s.h) {
      q["dim_h"] = s.h->dim();
      q["route"] = s.route;
      w["h"] = basis_json(*s.h);
    }
    w["v"] = basis_json(s.v);
    verdict(s.h.has_value(), s.asserted);
  } else if (checker == "doubling") {
    need_sets(checker, named, 1, 1);
    auto c = small_doubling_cover(sets[0], p.epsilon.value_or(mpq_class(1)));
    q["epsilon"] = rational_text(c.epsilon);
    q["dim_a"] = c.dim_a;
    q["dim_a2"] = c.dim_a2;
    q["dim_h"] = c.h.dim();
    q["cosets"] = c.x.size();
    q["count_bound"] = c.count_bound;
    q["dim_bound"] = c.dim_bound;
    w["h"] = basis_json(c.h);
    w["x"] = elements_json(r, c.x);
    verdict(c.holds, c.asserted);
  } else if (checker == "stabilizer") {
    need_sets(checker, named, 1, 1);
    const auto v = span_of(sets[0]);
    auto left = stabilizer(v, Side::Left);
    auto right = stabilizer(v, Side::Right);
    const auto reps = coset_decompose(v, left.h, Side::Left);
    q["dim_v"] = v.dim();
    q["left_dim"] = left.dim();
    q["right_dim"] = right.dim();
    q["left_division_closed"] = left.is_division_closed;
    q["right_division_closed"] = right.is_division_closed;
    q["cosets"] = reps.size();
    w["left"] = basis_json(left.h);
    w["right"] = basis_json(right.h);
    w["coset_representatives"] = elements_json(r, reps);
    bool ok = reps.size() * left.dim() == v.dim();
    if (const auto n = r.dimension(); n && r.is_division_ring()) ok = ok && *n % left.dim() == 0 && *n % right.dim() == 0;
    verdict(ok && (!r.is_division_ring() || (left.is_division_closed && right.is_division_closed)), r.is_division_ring());
  } else if (checker == "atoms") {
    need_sets(checker, named, 1, 1);
    const auto v = span_of(sets[0]);
    auto a = kappa_and_atoms(v, p.lambda.value_or(mpq_class(1, 2)), p.budget);
    q["lambda"] = rational_text(a.lambda);
    q["kappa"] = rational_text(a.kappa);
    q["dim_v"] = v.dim();
    q["dim_atom"] = a.atom.dim();
    q["fragments"] = a.fragments.size();
    q["enumerated"] = a.enumerated;
    q["exact"] = a.exact;
    q["atom_is_division_ring"] = a.atom_is_division_ring;
    q["atom_unique"] = a.atom_unique;
    q["lattice_closed"] = a.lattice_closed;
    q["lower_bound"] = a.lower_bound;
    if (a.atoms_found) q["atoms_found"] = *a.atoms_found;
    if (a.left_translates) q["left_translates"] = *a.left_translates;
    if (a.right_translates) q["right_translates"] = *a.right_translates;
    if (a.atoms_disjoint) q["atoms_disjoint"] = *a.atoms_disjoint;
    w["atom"] = basis_json(a.atom);
    verdict(a.holds(), a.exact);
  } else if (checker == "tao") {
    need_sets(checker, named, 1, 2);
    const auto v = span_of(sets[0]);
    const auto wv = named.size() == 2 ? span_of(sets[1]) : v;
    auto t = tao_classify(v, wv, p.epsilon.value_or(mpq_class(1, 2)), p.budget);
    q["epsilon"] = rational_text(t.epsilon);
    q["kappa"] = rational_text(t.kappa);
    q["cost_w"] = rational_text(t.cost_w);
    q["case"] = t.case_number;
    q["dim_v"] = v.dim();
    q["dim_h"] = t.h.dim();
    q["cosets"] = t.x.size();
    q["bound"] = t.bound;
    q["count_bound"] = t.count_bound;
    q["covered"] = t.covered;
    q["exact"] = t.exact;
    w["h"] = basis_json(t.h);
    w["x"] = elements_json(r, t.x);
    verdict(t.holds(), t.exact);
  } else if (checker == "submodularity") {
    need_sets(checker, named, 3, 3);
    const auto lambda = p.lambda.value_or(mpq_class(1, 2));
    auto s = submodularity_check(span_of(sets[0]), span_of(sets[1]), span_of(sets[2]), lambda);
    q["lambda"] = rational_text(lambda);
    q["applicable"] = s.applicable;
    if (s.applicable) {
      q["lhs"] = rational_text(s.lhs);
      q["rhs"] = rational_text(s.rhs);
    }
    verdict(s.holds, s.applicable && r.is_division_ring());
  } else {
    fail(ErrorKind::InvalidArgument, "unknown checker '" + checker + "'");
  }
  rec["quantities"] = std::move(q);
  rec["witness"] = std::move(w);
  rec["holds"] = out.holds;
  rec["asserted"] = out.asserted;
  return out;
}

template <class R>
std::vector<Elem<R>> sample_units(const R& r, Rng& rng, const SizeBudget& size, std::size_t count) {
  std::vector<Elem<R>> out;
  while (out.size() < count) {
    if constexpr (is_group_algebra<R>::value) {
      out.push_back(r.basis_element(r.group().sample(rng, std::max(1, size.degree))));
    } else {
      auto x = r.sample(rng, size);
      if (r.is_unit(x)) out.push_back(std::move(x));
    }
  }
  return out;
}

// a_i = s_i + t_i z for one random z: pairwise commuting
template <class R>
std::vector<Elem<R>> sample_commuting(const R& r, Rng& rng, const SizeBudget& size, std::size_t count) {
  const auto z = r.sample(rng, size);
  std::vector<Elem<R>> out;
  while (out.size() < count) {
    auto x = r.add(r.from_scalar(r.field().sample(rng, size)), r.scale(r.field().sample(rng, size), z));
    if (!r.is_zero(x)) out.push_back(std::move(x));
  }
  return out;
}

template <class R>
NamedSets sample_typed(const BackendPtr<R>& backend, const std::string& checker, Rng& rng, const SizeBudget& size, std::size_t max_set) {
  const R& r = *backend;
  auto pick = [&] { return static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(std::max<std::size_t>(1, max_set)))); };
  auto any = [&](std::size_t n) {
    std::vector<Elem<R>> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(r.sample(rng, size));
    return out;
  };
  auto text = [&](const std::vector<Elem<R>>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(r.format(x));
    return out;
  };
  NamedSets s;
  auto add = [&](std::string name, const std::vector<Elem<R>>& xs) { s.emplace_back(std::move(name), text(xs)); };
  static const char* names[] = {"A", "B", "C", "D"};

  if (checker == "span" || checker == "cube" || checker == "doubling" || checker == "stabilizer" || checker == "atoms") {
    add("A", any(pick()));
  } else if (checker == "kneser" || checker == "rho" || checker == "tao") {
    add("A", any(pick()));
    add("B", any(pick()));
  } else if (checker == "plunnecke") {
    auto a = any(pick());
    add("A", a);
    add("B", rng.below(4) == 0 ? a : any(pick()));
  } else if (checker == "kneser_nfold" || checker == "diderrich") {
    const auto n = static_cast<std::size_t>(rng.between(3, 4));
    for (std::size_t i = 0; i < n; ++i) add(names[i], any(pick()));
  } else if (checker == "petridis" || checker == "triple" || checker == "submodularity") {
    add("A", any(pick()));
    add("B", any(pick()));
    add("C", any(pick()));
  } else if (checker == "dyson") {
    add("A", r.is_commutative() ? any(pick()) : sample_commuting(r, rng, size, pick()));
    add("B", any(pick()));
  } else if (checker == "subring") {
    std::vector<Elem<R>> as;
    while (as.size() < *r.dimension()) {
      auto x = r.sample(rng, size);
      if (!(x == r.one())) as.push_back(std::move(x));
    }
    add("A", as);
  } else if (checker == "algebra_petridis") {
    add("A", any(pick()));
    auto b = any(pick() - 1);
    auto u = sample_units(r, rng, size, 1);
    b.insert(b.begin() + static_cast<std::ptrdiff_t>(rng.below(b.size() + 1)), u.front());
    add("B", b);
    add("C", sample_units(r, rng, size, pick()));
  } else if (checker == "algebra_plunnecke") {
    add("A", any(pick()));
    add("B", sample_units(r, rng, size, pick()));
  } else if (checker == "algebra_triple") {
    add("A", any(pick()));
    add("B", sample_units(r, rng, size, pick()));
    add("C", any(pick()));
  } else {
    fail(ErrorKind::IncompatibleChecker, "no sampler for checker '" + checker + "'");
  }
  return s;
}

}  // namespace spanbound::cli::detail
