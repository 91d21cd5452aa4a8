#include "aslab/cli.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "aslab/addpoly.hpp"
#include "aslab/ascurve.hpp"
#include "aslab/berger.hpp"
#include "aslab/budget.hpp"
#include "aslab/errors.hpp"
#include "aslab/families.hpp"
#include "aslab/lattice.hpp"
#include "aslab/orbits.hpp"
#include "aslab/verify.hpp"
#include "aslab/zeta.hpp"
#include "json.hpp"

namespace aslab {

namespace {

using json = nlohmann::ordered_json;

constexpr std::int64_t kSafeInteger = (std::int64_t(1) << 53) - 1;

std::string rat(const mpq_class& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

json integer(const mpz_class& v) {
  if (abs(v) <= kSafeInteger) return v.get_si();
  return v.get_str();
}

json slope_list(const SlopeSet& s) {
  json a = json::array();
  for (const auto& v : s) a.push_back(rat(v));
  return a;
}

json gram_json(const Gram& g) {
  json rows = json::array();
  for (const auto& row : g.entries) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rat(v));
    rows.push_back(r);
  }
  return {{"labels", g.labels}, {"entries", rows}};
}

json report_json(const LatticeReport& rep) {
  json rel = json::array();
  for (const auto& v : rep.relations) {
    json r = json::array();
    for (const auto& c : v) r.push_back(integer(c));
    rel.push_back(r);
  }
  return {{"rank", rep.rank}, {"basis", rep.basis_labels}, {"discriminant", rat(rep.discriminant)}, {"relations", rel}};
}

void write_csv(std::ostream& out, const Gram& g) {
  out << "label";
  for (const auto& l : g.labels) out << "," << l;
  out << "\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << g.labels[i];
    for (const auto& v : g.entries[i]) out << "," << rat(v);
    out << "\n";
  }
}

std::uint32_t characteristic(std::uint64_t q) {
  auto f = prime_factors(q);
  if (q < 2 || f.size() != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
  return static_cast<std::uint32_t>(f[0]);
}

FieldPtr field_of_order(std::uint64_t q) {
  const auto p = characteristic(q);
  return make_field(p, static_cast<unsigned>(log_p(q, p)));
}

class Session {
 public:
  explicit Session(std::string command) : command_(std::move(command)) {}

  void use(const FieldPtr& F) {
    for (const auto& G : fields_)
      if (G->same_as(*F)) return;
    fields_.push_back(F);
  }
  void set_threads(unsigned t) { threads_ = t; }

  json manifest() const {
    json fields = json::array();
    for (const auto& F : fields_)
      fields.push_back({{"p", F->p()}, {"n", F->n()}, {"modulus", F->modulus()}});
    json m = {{"command", command_},
              {"fields", fields},
              {"budget", {{"evaluations", evaluation_budget()}, {"override", std::getenv("ASLAB_BUDGET") != nullptr}}}};
    if (threads_) m["threads"] = threads_;
    m["version"] = kVersion;
    return m;
  }

  void emit(std::ostream& out, json result) const {
    result["manifest"] = manifest();
    out << result.dump(2) << "\n";
  }

 private:
  std::string command_;
  std::vector<FieldPtr> fields_;
  unsigned threads_ = 0;
};

json criterion_json(const CriterionResult& r) {
  json j = {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"summary", r.summary}, {"failures", r.failures}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.time_limit > 0) j["time_limit_seconds"] = r.time_limit;
  return j;
}

json comparisons_json(const Gram& oracle, const Gram& closed) {
  json a = json::array();
  if (oracle.size() != closed.size()) return a;
  for (std::size_t i = 0; i < oracle.size(); ++i)
    for (std::size_t j = 0; j < oracle.size(); ++j) {
      const auto& x = oracle.entries[i][j];
      const auto& y = closed.entries[i][j];
      a.push_back({{"pair", {oracle.labels[i], oracle.labels[j]}},
                   {"oracle", rat(x)},
                   {"closed", rat(y)},
                   {"status", x == y ? "equal" : "differs"}});
    }
  return a;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::string command = "aslab";
  for (const auto& a : args) command += " " + a;
  Session session(command);

  CLI::App app{"Artin-Schreier curves, L-functions and Mordell-Weil lattices", "aslab"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  bool csv = false;
  app.add_option("--threads", threads, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
  app.add_flag("--csv", csv, "print Gram matrices as CSV");
  app.add_flag("--json", "JSON output (default)");
  app.set_version_flag("--version", kVersion);

  // field
  auto* field = app.add_subcommand("field", "finite field arithmetic");
  std::uint32_t f_p = 0;
  unsigned f_n = 1;
  std::string f_a, f_b;
  field->add_option("--p", f_p, "characteristic")->required();
  field->add_option("--n", f_n, "degree over F_p");
  field->add_option("--a", f_a, "element, \"[c0,c1,...]\" or an integer");
  field->add_option("--b", f_b, "second element");

  // orbits
  auto* orbits = app.add_subcommand("orbits", "self-dual Frobenius orbits on roots of z^(r^nu)+z");
  std::uint64_t o_r = 0;
  unsigned o_nu = 1;
  std::vector<std::int64_t> o_poles{1};
  std::vector<std::int64_t> o_away{3};
  orbits->add_option("--r", o_r, "odd prime power")->required();
  orbits->add_option("--nu", o_nu, "extension degree")->check(CLI::PositiveNumber);
  orbits->add_option("--poles", o_poles, "pole orders of f at degree-1 places")->delimiter(',');
  orbits->add_option("--away", o_away, "conductor exponents of rho at degree-1 places away from the poles")
      ->delimiter(',');

  // ascurve
  auto* ascurve = app.add_subcommand("ascurve", "invariants of an Artin-Schreier cover");
  ASCoverSpec as_spec;
  ascurve->add_option("--p", as_spec.p, "characteristic")->required();
  ascurve->add_option("--q", as_spec.q, "degree of the cover")->required();
  ascurve->add_option("--poles", as_spec.poles, "pole orders")->required()->delimiter(',');
  ascurve->add_option("--base-genus", as_spec.base_genus, "genus of the base curve");
  ascurve->add_option("--base-prank", as_spec.base_prank, "p-rank of the base curve");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "point counts and L-polynomial");
  std::string z_field, z_eq;
  unsigned z_through = 0, z_nu = 1;
  zeta->add_option("--field", z_field, "base field, \"q\" or \"p^n\"")->required();
  zeta->add_option("--as", z_eq, "equation, e.g. \"q=3,f=x^2\" or \"A=[(0,1),(1,1)],f=x^2\"")->required();
  zeta->add_option("--through", z_through, "count over F_{r^k} for k = 1..through (default: genus + 1)");
  zeta->add_option("--nu", z_nu, "supersingular factors over F_{r^nu}")->check(CLI::PositiveNumber);

  // genus
  auto* genus = app.add_subcommand("genus", "genus of the surface fibre X");
  PairType g_pt;
  std::uint32_t g_p = 0;
  genus->add_option("--a", g_pt.a, "pole orders of f")->required()->delimiter(',');
  genus->add_option("--b", g_pt.b, "pole orders of g")->required()->delimiter(',');
  genus->add_option("--gC", g_pt.g_C, "genus of the base of C");
  genus->add_option("--gD", g_pt.g_D, "genus of the base of D");
  genus->add_option("--p", g_p, "characteristic (checks p does not divide the pole orders)");

  // rank
  auto* rank = app.add_subcommand("rank", "Mordell-Weil rank of a preset");
  std::string r_preset;
  std::uint64_t r_q = 0;
  std::int64_t r_param = 0;
  rank->add_option("--preset", r_preset,
                   "type_2_11 | f_eq_g_quadratic | cubic_fermat | reciprocal_m | generic_selfpair_M")
      ->required();
  rank->add_option("--q", r_q, "prime power")->required();
  rank->add_option("--m,--param", r_param, "m for reciprocal_m, M for generic_selfpair_M");

  // lattice
  auto* lattice = app.add_subcommand("lattice", "height lattices of the explicit families");
  std::string l_kind, l_b;
  std::uint64_t l_q = 0;
  bool l_oracle = false;
  lattice->add_option("kind", l_kind, "iso | noniso | conjecture")
      ->required()
      ->check(CLI::IsMember({"iso", "noniso", "conjecture"}));
  lattice->add_option("--q", l_q, "prime power")->required();
  lattice->add_option("--b", l_b, "b in F_q (noniso)");
  lattice->add_flag("--oracle", l_oracle, "compute the Gram matrix from canonical heights");

  // verify
  auto* verify = app.add_subcommand("verify", "acceptance checks");
  std::string v_suite = "acceptance";
  std::vector<std::string> v_only;
  std::uint64_t v_q = 5;
  std::string v_b = "2";
  verify->add_option("--suite", v_suite, "acceptance | lattice-iso | lattice-noniso | lattice-conjecture")
      ->check(CLI::IsMember({"acceptance", "lattice-iso", "lattice-noniso", "lattice-conjecture"}));
  verify->add_option("--only", v_only, "criterion ids for the acceptance suite")->delimiter(',');
  verify->add_option("--q", v_q, "prime power for the lattice suites");
  verify->add_option("--b", v_b, "b for lattice-noniso");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    // the parse errors of ASLAB_BUDGET surface here
    evaluation_budget();
    if (threads) {
      set_threads(threads);
      session.set_threads(threads);
    }

    if (*field) {
      auto F = make_field(f_p, f_n);
      session.use(F);
      json r = {{"descriptor", F->descriptor()},
                {"size", integer(mpz_class(std::to_string(F->size())))},
                {"modulus", F->modulus()},
                {"primitive_element", F->format(F->primitive_element())}};
      if (!f_a.empty()) {
        Elem a = F->parse(f_a);
        json e = {{"value", F->format(a)},
                  {"frobenius", F->format(F->frobenius(a, F->p()))},
                  {"absolute_trace", F->absolute_trace(a)}};
        e["inverse"] = a ? json(F->format(F->inv(a))) : json(nullptr);
        e["order"] = a ? json(F->order(a)) : json(nullptr);
        if (F->p() != 2) e["quadratic_character"] = F->quadratic_character(a);
        r["a"] = e;
        if (!f_b.empty()) {
          Elem b = F->parse(f_b);
          r["b"] = F->format(b);
          r["sum"] = F->format(F->add(a, b));
          r["difference"] = F->format(F->sub(a, b));
          r["product"] = F->format(F->mul(a, b));
          r["quotient"] = b ? json(F->format(F->div(a, b))) : json(nullptr);
        }
      }
      session.emit(out, r);
      return 0;
    }

    if (*orbits) {
      auto res = self_dual_orbits(o_r, o_nu);
      session.use(res.orbits.field);
      ConductorData cd;
      for (auto a : o_poles) cd.ramified.push_back({a, 1});
      for (auto f : o_away) cd.away.push_back({f, 1});
      auto bound = analytic_rank_lower_bound(o_r, o_nu, cd);
      std::vector<std::size_t> sizes;
      json list = json::array();
      for (const auto& o : res.orbits.orbits) {
        sizes.push_back(o.size());
        json a = json::array();
        for (Elem b : o) a.push_back(res.orbits.field->format(b));
        list.push_back(a);
      }
      json r = {{"r", o_r},
                {"nu", o_nu},
                {"count", res.count},
                {"count_bound", rat(res.bound)},
                {"orbit_sizes", sizes},
                {"bound_over_k", rat(bound.over_k)},
                {"bound_over_kprime", integer(bound.over_kprime)},
                {"parity_satisfied", bound.parity_satisfied},
                {"twisted_conductor_degree", twisted_conductor_degree(cd, characteristic(o_r))},
                {"orbits", list}};
      session.emit(out, r);
      return 0;
    }

    if (*ascurve) {
      as_spec.validate();
      json endo = json::object();
      for (const char* name : {"image_of_group_algebra", "ordinary", "supersingular_invariants"}) {
        try {
          endo[name] = endo_dims(as_spec, parse_endo_regime(name));
        } catch (const InvalidArgument&) {
          endo[name] = nullptr;
        }
      }
      json r = {{"spec", as_spec.to_string()},
                {"genus", as_genus(as_spec)},
                {"prank", as_prank(as_spec)},
                {"hodge_slopes", slope_list(hodge_polygon(as_spec))},
                {"np_eq_hp", newton_equals_hodge(as_spec)},
                {"endo_dims", endo}};
      session.emit(out, r);
      return 0;
    }

    if (*zeta) {
      auto F = parse_field(z_field);
      session.use(F);
      auto eq = parse_as_equation(F, z_eq);
      auto spec = eq.spec();
      const int g = static_cast<int>(as_genus(spec));
      const unsigned through = z_through ? z_through : static_cast<unsigned>(g + 1);
      std::vector<mpz_class> counts;
      for (unsigned k = 1; k <= through; ++k) counts.push_back(count_points(eq, k));
      json c = json::array();
      for (const auto& v : counts) c.push_back(integer(v));
      json r = {{"equation", z_eq}, {"spec", spec.to_string()}, {"genus", g}, {"counts", c}};
      if (static_cast<int>(through) >= g) {
        auto L = l_polynomial(counts, g, mpz_class(std::to_string(F->size())));
        json coeffs = json::array();
        for (const auto& a : L.coeffs) coeffs.push_back(a.get_str());
        r["L_coeffs"] = coeffs;
        r["L"] = L.to_string();
        r["slopes"] = slope_list(slopes(L, F->p()));
        r["prank"] = prank_from_L(L, F->p());
        r["ss_multiplicity"] = ss_divisibility(L, L.r, z_nu);
      } else {
        r["L_coeffs"] = nullptr;
        r["note"] = "need at least genus-many counts for the L-polynomial";
      }
      session.emit(out, r);
      return 0;
    }

    if (*genus) {
      g_pt.validate(g_p);
      json r = {{"a", g_pt.a},
                {"b", g_pt.b},
                {"M", g_pt.M()},
                {"N", g_pt.N()},
                {"genus_X", genus_X(g_pt)},
                {"c2", c2(g_pt)},
                {"fiber_at_infinity", fiber_at_infinity(g_pt)}};
      session.emit(out, r);
      return 0;
    }

    if (*rank) {
      const auto preset = parse_preset(r_preset);
      session.use(field_of_order(r_q));
      auto res = preset_rank(preset, r_q, r_param);
      json r = {{"preset", preset_name(preset)},
                {"q", r_q},
                {"type", {{"a", res.type.a}, {"b", res.type.b}}},
                {"hom_rank", res.hom_rank},
                {"c1", res.c1},
                {"c2", res.c2},
                {"genus_X", res.genus_X},
                {"rank", res.rank}};
      if (r_param) r["param"] = r_param;
      session.emit(out, r);
      return 0;
    }

    if (*lattice) {
      if (l_kind == "iso") {
        auto fam = iso_family(l_q);
        session.use(fam.K);
        Gram closed = iso_gram_closed(l_q);
        Gram g = l_oracle ? oracle_gram(fam.E, fam.points, fam.labels) : closed;
        if (csv) {
          out << "# " << session.manifest().dump() << "\n";
          write_csv(out, g);
          return 0;
        }
        json r = {{"family", "isotrivial"},
                  {"q", l_q},
                  {"source", l_oracle ? "oracle" : "closed_form"},
                  {"gram", gram_json(g)},
                  {"lattice", report_json(lattice_report(g, iso_basis(l_q)))},
                  {"discriminant_closed_form", rat(iso_discriminant_closed(l_q))}};
        if (l_oracle) r["matches_closed_form"] = compare_grams(g, closed).empty();
        session.emit(out, r);
        return 0;
      }
      if (l_kind == "noniso") {
        if (l_b.empty()) throw InvalidArgument("noniso needs --b");
        auto F = field_of_order(l_q);
        auto fam = noniso_family(l_q, F->parse(l_b));
        session.use(fam.F);
        Gram closed = noniso_gram_closed(l_q, fam.b);
        Gram g = l_oracle ? oracle_gram(fam.E, fam.points, fam.labels) : closed;
        if (csv) {
          out << "# " << session.manifest().dump() << "\n";
          write_csv(out, g);
          return 0;
        }
        json tr = json::object();
        for (Elem x = 0; x < fam.F->size(); ++x) tr[fam.F->format(x)] = trace_gamma(fam.F, fam.b, x);
        json r = {{"family", "nonisotrivial"},
                  {"q", l_q},
                  {"b", fam.F->format(fam.b)},
                  {"source", l_oracle ? "oracle" : "closed_form"},
                  {"gram", gram_json(g)},
                  {"lattice", report_json(lattice_report(g, noniso_basis(l_q)))},
                  {"trace_gamma", tr}};
        if (l_oracle) r["matches_closed_form"] = compare_grams(g, closed).empty();
        session.emit(out, r);
        return 0;
      }
      // conjecture
      auto fam = iso_family(l_q);
      session.use(fam.K);
      auto rep = index_conjecture_check(l_q);
      json r = {{"q", l_q},
                {"det_V", rat(rep.det_V)},
                {"det_V1", rat(rep.det_V1)},
                {"index", rat(rep.index)},
                {"conjectured", integer(rep.conjectured)},
                {"integral", rep.integral},
                {"match", rep.match},
                {"det_V_matches_closed_form", rep.det_V_matches_closed},
                {"extra_points_in_span", rep.orbit_in_span},
                {"orbit_size", rep.orbit_size}};
      session.emit(out, r);
      return rep.match ? 0 : 1;
    }

    if (*verify) {
      json r = {{"suite", v_suite}};
      bool pass = true;
      if (v_suite == "acceptance") {
        if (v_only.empty()) v_only = criterion_ids();
        json crit = json::array();
        for (const auto& id : v_only) {
          auto c = run_criterion(id);
          pass = pass && c.pass;
          crit.push_back(criterion_json(c));
        }
        r["criteria"] = crit;
      } else if (v_suite == "lattice-conjecture") {
        session.use(iso_family(v_q).K);
        auto c = verify_lattice_conjecture(v_q);
        pass = c.pass;
        r["q"] = v_q;
        r["criteria"] = json::array({criterion_json(c)});
      } else {
        LatticeComparison cmp;
        r["q"] = v_q;
        if (v_suite == "lattice-iso") {
          session.use(iso_family(v_q).K);
          cmp = verify_lattice_iso(v_q);
        } else {
          auto F = field_of_order(v_q);
          session.use(F);
          Elem b = F->parse(v_b);
          r["b"] = F->format(b);
          cmp = verify_lattice_noniso(v_q, b);
        }
        pass = cmp.result.pass;
        r["criteria"] = json::array({criterion_json(cmp.result)});
        if (cmp.oracle.size()) {
          r["comparisons"] = comparisons_json(cmp.oracle, cmp.closed);
          r["lattice"] = report_json(cmp.report);
        }
      }
      r["pass"] = pass;
      session.emit(out, r);
      return pass ? 0 : 1;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace aslab
