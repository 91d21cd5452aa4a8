#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aslab/ascurve.hpp"
#include "aslab/berger.hpp"
#include "aslab/budget.hpp"
#include "aslab/errors.hpp"
#include "aslab/families.hpp"
#include "aslab/height.hpp"
#include "aslab/lattice.hpp"
#include "aslab/orbits.hpp"
#include "aslab/zeta.hpp"

namespace py = pybind11;
using namespace aslab;

namespace {

py::object fraction(const mpq_class& x) {
  static py::object F = py::module_::import("fractions").attr("Fraction");
  return F(x.get_num().get_str() + "/" + x.get_den().get_str());
}

py::int_ big(const mpz_class& x) { return py::int_(py::str(x.get_str())); }

py::list fractions(const std::vector<mpq_class>& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

py::dict gram_dict(const Gram& g) {
  py::list rows;
  for (const auto& r : g.entries) rows.append(fractions(r));
  py::dict d;
  d["labels"] = g.labels;
  d["entries"] = rows;
  return d;
}

py::dict report_dict(const LatticeReport& rep) {
  py::list rel;
  for (const auto& v : rep.relations) {
    py::list r;
    for (const auto& c : v) r.append(big(c));
    rel.append(r);
  }
  py::dict d;
  d["rank"] = rep.rank;
  d["basis"] = rep.basis_labels;
  d["discriminant"] = fraction(rep.discriminant);
  d["relations"] = rel;
  return d;
}

ASCoverSpec spec_of(std::uint32_t p, std::uint64_t q, std::vector<std::int64_t> poles, std::int64_t g0,
                    std::int64_t p0) {
  ASCoverSpec s{p, q, g0, p0, std::move(poles)};
  s.validate();
  return s;
}

FieldPtr field_of_order(std::uint64_t q) {
  auto f = prime_factors(q);
  if (q < 2 || f.size() != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
  auto p = static_cast<std::uint32_t>(f[0]);
  return make_field(p, static_cast<unsigned>(log_p(q, p)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Artin-Schreier curves, L-polynomials and height lattices";

  static py::exception<BudgetExceeded> budget_exc(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<CheckFailed> check_exc(m, "CheckFailed", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const BudgetExceeded& e) {
      py::set_error(budget_exc, e.what());
    } catch (const CheckFailed& e) {
      py::set_error(check_exc, e.what());
    }
  });

  m.def("set_threads", &set_threads, py::arg("n"));
  m.def("evaluation_budget", &evaluation_budget);

  m.def(
      "field_info",
      [](std::uint32_t p, unsigned n) {
        auto F = make_field(p, n);
        py::dict d;
        d["descriptor"] = F->descriptor();
        d["size"] = F->size();
        d["modulus"] = F->modulus();
        d["primitive_element"] = F->format(F->primitive_element());
        return d;
      },
      py::arg("p"), py::arg("n") = 1);

  m.def(
      "as_genus", [](std::uint32_t p, std::uint64_t q, std::vector<std::int64_t> poles, std::int64_t g0,
                     std::int64_t p0) { return as_genus(spec_of(p, q, std::move(poles), g0, p0)); },
      py::arg("p"), py::arg("q"), py::arg("poles"), py::arg("base_genus") = 0, py::arg("base_prank") = 0);
  m.def(
      "as_prank", [](std::uint32_t p, std::uint64_t q, std::vector<std::int64_t> poles, std::int64_t g0,
                     std::int64_t p0) { return as_prank(spec_of(p, q, std::move(poles), g0, p0)); },
      py::arg("p"), py::arg("q"), py::arg("poles"), py::arg("base_genus") = 0, py::arg("base_prank") = 0);
  m.def(
      "hodge_slopes",
      [](std::uint32_t p, std::uint64_t q, std::vector<std::int64_t> poles) {
        return fractions(hodge_polygon(spec_of(p, q, std::move(poles), 0, 0)));
      },
      py::arg("p"), py::arg("q"), py::arg("poles"));

  m.def(
      "zeta",
      [](const std::string& field, const std::string& equation, unsigned through) {
        auto F = parse_field(field);
        auto eq = parse_as_equation(F, equation);
        const int g = static_cast<int>(as_genus(eq.spec()));
        if (through == 0) through = static_cast<unsigned>(g + 1);
        std::vector<mpz_class> counts;
        {
          py::gil_scoped_release nogil;
          for (unsigned k = 1; k <= through; ++k) counts.push_back(count_points(eq, k));
        }
        py::dict d;
        py::list c;
        for (const auto& v : counts) c.append(big(v));
        d["genus"] = g;
        d["counts"] = c;
        if (static_cast<int>(through) >= g) {
          auto L = l_polynomial(counts, g, mpz_class(std::to_string(F->size())));
          py::list a;
          for (const auto& v : L.coeffs) a.append(big(v));
          d["L_coeffs"] = a;
          d["slopes"] = fractions(slopes(L, F->p()));
          d["prank"] = prank_from_L(L, F->p());
        }
        return d;
      },
      py::arg("field"), py::arg("equation"), py::arg("through") = 0);

  m.def(
      "self_dual_orbit_count", [](std::uint64_t r, unsigned nu) { return self_dual_orbits(r, nu).count; },
      py::arg("r"), py::arg("nu") = 1);

  m.def(
      "genus_X",
      [](std::vector<std::int64_t> a, std::vector<std::int64_t> b, std::int64_t gC, std::int64_t gD) {
        PairType t{std::move(a), std::move(b), gC, gD};
        t.validate();
        return genus_X(t);
      },
      py::arg("a"), py::arg("b"), py::arg("g_C") = 0, py::arg("g_D") = 0);

  m.def(
      "preset_rank",
      [](const std::string& preset, std::uint64_t q, std::int64_t param) {
        auto r = preset_rank(parse_preset(preset), q, param);
        py::dict d;
        d["rank"] = r.rank;
        d["hom_rank"] = r.hom_rank;
        d["c1"] = r.c1;
        d["c2"] = r.c2;
        d["genus_X"] = r.genus_X;
        return d;
      },
      py::arg("preset"), py::arg("q"), py::arg("param") = 0);

  m.def(
      "iso_gram",
      [](std::uint64_t q, bool oracle) {
        Gram g;
        {
          py::gil_scoped_release nogil;
          if (oracle) {
            auto fam = iso_family(q);
            g = oracle_gram(fam.E, fam.points, fam.labels);
          } else {
            g = iso_gram_closed(q);
          }
        }
        return gram_dict(g);
      },
      py::arg("q"), py::arg("oracle") = false);

  m.def(
      "noniso_gram",
      [](std::uint64_t q, const std::string& b, bool oracle) {
        auto F = field_of_order(q);
        auto fam = noniso_family(q, F->parse(b));
        Gram g;
        {
          py::gil_scoped_release nogil;
          g = oracle ? oracle_gram(fam.E, fam.points, fam.labels) : noniso_gram_closed(q, fam.b);
        }
        return gram_dict(g);
      },
      py::arg("q"), py::arg("b"), py::arg("oracle") = false);

  m.def(
      "iso_lattice", [](std::uint64_t q) { return report_dict(lattice_report(iso_gram_closed(q), iso_basis(q))); },
      py::arg("q"));
  m.def(
      "noniso_lattice",
      [](std::uint64_t q, const std::string& b) {
        auto F = field_of_order(q);
        Elem e = F->parse(b);
        noniso_family(q, e);
        return report_dict(lattice_report(noniso_gram_closed(q, e), noniso_basis(q)));
      },
      py::arg("q"), py::arg("b"));

  m.def(
      "index_conjecture",
      [](std::uint64_t q) {
        IndexReport r;
        {
          py::gil_scoped_release nogil;
          r = index_conjecture_check(q);
        }
        py::dict d;
        d["index"] = fraction(r.index);
        d["conjectured"] = big(r.conjectured);
        d["det_V"] = fraction(r.det_V);
        d["match"] = r.match;
        return d;
      },
      py::arg("q"));

  m.def(
      "iso_point_height",
      [](std::uint64_t q, const std::vector<long>& coeffs) {
        auto fam = iso_family(q);
        if (coeffs.size() != fam.points.size())
          throw InvalidArgument("need " + std::to_string(fam.points.size()) + " coefficients");
        mpq_class h;
        {
          py::gil_scoped_release nogil;
          h = canonical_height(fam.E, ec_combination(fam.E, fam.points, coeffs));
        }
        return fraction(h);
      },
      py::arg("q"), py::arg("coeffs"));
}
