// Checker bodies for function fields, quaternions and group algebras; the
// variant dispatch; group-level checkers.

#include <fstream>
#include <sstream>

#include "dispatch_impl.hpp"
#include "spanbound/groups.hpp"

namespace spanbound::cli {
namespace detail {

#define SPANBOUND_EXTERN(R)                                                                                                     \
  extern template CheckOutcome run_typed<R>(const BackendPtr<R>&, const std::string&, const NamedSets&, const CheckParams&); \
  extern template NamedSets sample_typed<R>(const BackendPtr<R>&, const std::string&, Rng&, const SizeBudget&, std::size_t);

SPANBOUND_EXTERN(FiniteField)
SPANBOUND_EXTERN(RationalExtension)
SPANBOUND_EXTERN(ModularFunctionExtension)
SPANBOUND_EXTERN(RationalFunctionExtension)

}  // namespace detail

namespace {

const std::vector<std::string> kBackendCheckers = {
    "span",      "kneser",    "kneser_nfold", "rho",   "petridis", "plunnecke",        "triple",
    "cube",      "dyson",     "diderrich",    "subring", "doubling", "stabilizer",     "atoms",
    "tao",       "submodularity", "algebra_petridis", "algebra_plunnecke", "algebra_triple"};
const std::vector<std::string> kGroupCheckers = {"group_kneser", "group_plunnecke", "group_ruzsa", "correspondence", "embed"};

bool one_of(std::string_view name, std::initializer_list<std::string_view> names) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

const std::vector<std::string>& backend_checkers() { return kBackendCheckers; }
const std::vector<std::string>& group_checkers() { return kGroupCheckers; }
bool is_backend_checker(std::string_view name) { return std::find(kBackendCheckers.begin(), kBackendCheckers.end(), name) != kBackendCheckers.end(); }
bool is_group_checker(std::string_view name) { return std::find(kGroupCheckers.begin(), kGroupCheckers.end(), name) != kGroupCheckers.end(); }

void require_compatible(const AnyBackend& backend, const std::string& checker) {
  if (!is_backend_checker(checker)) fail(ErrorKind::IncompatibleChecker, "'" + checker + "' is not a backend checker");
  std::visit(
      [&](const auto& p) {
        const auto& r = *p;
        auto reject = [&](const std::string& why) { fail(ErrorKind::IncompatibleChecker, checker + " on " + r.describe() + ": " + why); };
        const bool ga = r.kind() == BackendKind::GA;
        if (checker.rfind("algebra_", 0) == 0 && !ga) reject("algebra variants run on group algebras");
        if (one_of(checker, {"kneser", "kneser_nfold", "petridis", "plunnecke", "triple", "cube", "dyson", "diderrich", "subring",
                             "doubling", "atoms", "tao", "submodularity"}) &&
            !r.is_division_ring())
          reject("needs a division ring");
        if (one_of(checker, {"kneser", "kneser_nfold", "plunnecke", "cube", "doubling"}) && !r.is_commutative())
          reject("needs a commutative backend (no commuting filter is applied)");
        if (one_of(checker, {"petridis", "algebra_petridis"}) && !r.field().is_finite()) reject("needs a finite base field for exhaustive rho");
        if (checker == "subring" && !r.dimension()) reject("needs dim K finite");
        if (checker == "stabilizer" && ga && !r.dimension()) reject("random sets over an infinite group rarely contain e_g");
      },
      backend);
}

CheckOutcome run_checker(const AnyBackend& backend, const std::string& checker, const NamedSets& sets, const CheckParams& params) {
  if (is_group_checker(checker)) fail(ErrorKind::IncompatibleChecker, "'" + checker + "' runs on group instances");
  return std::visit([&](const auto& p) { return detail::run_typed(p, checker, sets, params); }, backend);
}

NamedSets sample_sets(const AnyBackend& backend, const std::string& checker, Rng& rng, const SizeBudget& size, std::size_t max_set) {
  return std::visit([&](const auto& p) { return detail::sample_typed(p, checker, rng, size, max_set); }, backend);
}

GroupPtr load_group(const std::string& spec, const std::filesystem::path& base_dir) {
  if (spec.rfind("cayley:", 0) == 0) {
    std::filesystem::path path = spec.substr(7);
    if (path.is_relative()) path = base_dir / path;
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidGroup, "cannot read Cayley table '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::make_shared<const Group>(Group::from_cayley_text(ss.str(), "cayley:" + path.filename().string()));
  }
  return std::make_shared<const Group>(Group::parse(spec));
}

namespace {

template <class F>
CheckOutcome run_group_typed(const GroupPtr& g, const std::shared_ptr<const GroupAlgebra<F>>& ga, const std::string& checker,
                             const std::vector<GroupSet>& sets, const CheckParams& p) {
  CheckOutcome out;
  Json q = Json::object();
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (sets.size() < lo || sets.size() > hi)
      fail(ErrorKind::ArityMismatch, checker + " takes " + std::to_string(lo) + ".." + std::to_string(hi) + " sets, got " + std::to_string(sets.size()));
  };
  if (checker == "group_kneser") {
    arity(2, 2);
    auto k = group_kneser_check(sets[0], sets[1], ga);
    q["x"] = k.x;
    q["y"] = k.y;
    q["xy"] = k.xy;
    q["h"] = k.h;
    q["dim_x"] = k.dim_x;
    q["dim_y"] = k.dim_y;
    q["dim_xy"] = k.dim_xy;
    q["dim_h"] = k.dim_h;
    q["slack"] = static_cast<long>(k.xy + k.h) - static_cast<long>(k.x + k.y);
    q["agree"] = k.agree;
    out.holds = k.holds && k.agree;
  } else if (checker == "group_plunnecke") {
    arity(2, 2);
    auto r = group_plunnecke_check(sets[0], sets[1], p.n_max, ga, p.budget);
    q["alpha"] = rational_text(r.alpha);
    q["rho"] = rational_text(r.ratio);
    q["z"] = r.z.size();
    q["zyn"] = detail::dims_json(r.zyn);
    q["zyn_dim"] = detail::dims_json(r.zyn_dim);
    if (r.ga_holds) q["ga_holds"] = *r.ga_holds;
    q["agree"] = r.agree;
    out.holds = r.holds && r.agree && r.ga_holds.value_or(true);
  } else if (checker == "group_ruzsa") {
    arity(3, 3);
    auto r = group_ruzsa_check(sets[0], sets[1], sets[2], ga);
    q["xyz"] = r.xyz;
    q["xy"] = r.xy;
    q["yz"] = r.yz;
    q["max_xyz"] = r.max_xyz;
    q["agree"] = r.agree;
    out.holds = r.holds && r.agree;
  } else if (checker == "correspondence") {
    arity(1, 2);
    auto c = correspondence_check(sets[0], sets.size() == 2 ? sets[1] : sets[0], ga);
    q["x_size"] = c.x_size;
    q["x_dim"] = c.x_dim;
    q["xy_size"] = c.xy_size;
    q["xy_dim"] = c.xy_dim;
    q["stabilizer_size"] = c.stabilizer_size;
    q["stabilizer_dim"] = c.stabilizer_dim;
    q["stabilizer_match"] = c.stabilizer_match;
    out.holds = c.holds();
  } else if (checker == "embed") {
    arity(1, 2);
    auto e = embed_torsion_free(sets[0], sets.size() == 2 ? std::optional<GroupSet>(sets[1]) : std::nullopt);
    q["size"] = e.size;
    q["dim"] = e.dim;
    if (e.xy_size) q["xy_size"] = *e.xy_size;
    if (e.xy_dim) q["xy_dim"] = *e.xy_dim;
    q["homomorphism"] = e.homomorphism;
    q["stabilizer_trivial"] = e.stabilizer_trivial;
    out.record["witness"] = Json{{"image", detail::elements_json(*e.image.backend, e.image.elements)}};
    out.holds = e.holds();
  } else {
    fail(ErrorKind::InvalidArgument, "unknown group checker '" + checker + "'");
  }
  out.asserted = true;
  Json rec;
  rec["checker"] = checker;
  rec["backend"] = ga->describe();
  rec["group"] = g->describe();
  rec["sets"] = Json::object();
  rec["quantities"] = std::move(q);
  rec["witness"] = out.record.contains("witness") ? out.record["witness"] : Json::object();
  rec["holds"] = out.holds;
  rec["asserted"] = out.asserted;
  out.record = std::move(rec);
  return out;
}

}  // namespace

CheckOutcome run_group_checker(const GroupPtr& group, const std::string& checker, const NamedSets& named, const CheckParams& p) {
  if (!is_group_checker(checker)) fail(ErrorKind::IncompatibleChecker, "'" + checker + "' runs on backend instances");
  std::vector<GroupSet> sets;
  for (const auto& [name, texts] : named) sets.push_back(parse_group_set(group, texts));
  std::string field = p.field.value_or("");
  CheckOutcome out;
  if (field == "Q") {
    out = run_group_typed(group, rational_group_algebra(group), checker, sets, p);
  } else {
    std::optional<std::uint32_t> prime;
    if (!field.empty()) {
      if (field.size() < 5 || field.rfind("GF(", 0) != 0 || field.back() != ')')
        fail(ErrorKind::SyntaxError, "field must be Q or GF(p), got '" + field + "'");
      prime = static_cast<std::uint32_t>(std::stoul(field.substr(3, field.size() - 4)));
    }
    out = run_group_typed(group, modular_group_algebra(group, prime), checker, sets, p);
  }
  // keep the caller's set names
  Json sj = Json::object();
  for (std::size_t i = 0; i < named.size(); ++i) sj[named[i].first] = format_group_set(sets[i]);
  out.record["sets"] = sj;
  return out;
}

}  // namespace spanbound::cli
