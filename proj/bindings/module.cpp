#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "grw/io.hpp"
#include "grw/verify.hpp"

namespace py = pybind11;
using namespace grw;

namespace {

// Counts cross the boundary as exact Python ints via their decimal form.
py::object to_py_int(const Count& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

Count from_py_int(py::handle h) { return Count(py::str(h).cast<std::string>()); }

py::list counts_to_list(const std::vector<Count>& row) {
  py::list out;
  for (const auto& v : row) out.append(to_py_int(v));
  return out;
}

py::list table_to_list(const std::vector<std::vector<Count>>& rows) {
  py::list out;
  for (const auto& row : rows) out.append(counts_to_list(row));
  return out;
}

// Elements are accepted as expressions ("a^2+a"), integers (embedded via
// F_p), or coefficient lists.
ExtElt elt_from_py(const FieldSpec& fs, py::handle obj) {
  if (py::isinstance<py::str>(obj)) return fs.parse(obj.cast<std::string>());
  if (py::isinstance<py::int_>(obj))
    return fs.ext().from_base(fs.base().from_int(obj.cast<std::int64_t>()));
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    BasePoly coeffs;
    for (auto item : obj.cast<py::sequence>()) {
      if (py::isinstance<py::int_>(item)) {
        if (fs.e() == 1) {
          coeffs.push_back(fs.base().from_int(item.cast<std::int64_t>()));
        } else {
          auto code = item.cast<std::int64_t>();
          if (code < 0 || static_cast<std::uint64_t>(code) >= fs.q())
            throw InvalidInput("coefficient code out of range for the base field");
          coeffs.push_back(BaseElt(code));
        }
      } else {
        coeffs.push_back(fs.base().from_digits(item.cast<std::vector<std::int64_t>>()));
      }
    }
    return fs.ext().from_coeffs(std::move(coeffs));
  }
  throw InvalidInput("expected an element expression, integer or coefficient list");
}

Vec<ExtField> word_from_py(const FieldSpec& fs, py::sequence seq) {
  Vec<ExtField> word;
  for (auto item : seq) word.push_back(elt_from_py(fs, item));
  return word;
}

GrwMethod grw_method(const std::string& name) {
  if (name == "subspaces") return GrwMethod::Subspaces;
  if (name == "closed_spaces") return GrwMethod::ClosedSpaces;
  if (name == "maxwt") return GrwMethod::MaxWeight;
  throw InvalidInput("unknown method: " + name);
}

py::dict enumerator_to_dict(const EnumeratorPoly& e) {
  py::dict d;
  d["r"] = e.r;
  d["n"] = e.n();
  d["coefficients"] = counts_to_list(e.poly.coeff);
  d["polynomial"] = e.poly.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact generalized rank weight hierarchies, distributions and enumerators of linear "
            "codes over finite field extensions";

  auto err = py::register_exception<Error>(m, "GrwError", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", err.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceededError", err.ptr());
  py::register_exception<Underdetermined>(m, "UnderdeterminedError", err.ptr());
  py::register_exception<InconsistentBTable>(m, "InconsistentBTableError", err.ptr());

  m.attr("DEFAULT_BUDGET") = kDefaultSubspaceBudget;

  py::class_<FieldSpec>(m, "FieldSpec",
                        "The tower F_p <= F_q <= F_{q^m} with its polynomial basis")
      .def(py::init([](std::int64_t p, int e, int m,
                       std::optional<std::vector<std::int64_t>> base_modulus,
                       std::optional<std::vector<std::int64_t>> ext_modulus, std::uint64_t seed) {
             std::optional<BasePoly> em;
             if (ext_modulus) {
               BasePoly v;
               std::uint64_t q = 1;
               for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(p);
               for (auto c : *ext_modulus) {
                 if (c < 0 || static_cast<std::uint64_t>(c) >= q)
                   throw InvalidInput("ext modulus coefficient code out of range");
                 v.push_back(BaseElt(c));
               }
               em = std::move(v);
             }
             return FieldSpec(p, e, m, std::move(base_modulus), std::move(em), seed);
           }),
           py::arg("p"), py::arg("e") = 1, py::arg("m") = 1, py::arg("base_modulus") = py::none(),
           py::arg("ext_modulus") = py::none(), py::arg("seed") = 0)
      .def_property_readonly("p", &FieldSpec::p)
      .def_property_readonly("e", &FieldSpec::e)
      .def_property_readonly("m", &FieldSpec::m)
      .def_property_readonly("q", &FieldSpec::q)
      .def_property_readonly("q_pow_m", [](const FieldSpec& fs) { return to_py_int(fs.q_pow_m()); })
      .def("parse",
           [](const FieldSpec& fs, const std::string& text) { return fs.to_string(fs.parse(text)); })
      .def("expand",
           [](const FieldSpec& fs, py::handle elt) {
             auto coords = fs.ext().expand(elt_from_py(fs, elt));
             return std::vector<std::uint64_t>(coords.begin(), coords.end());
           },
           "Coordinates over F_q (canonical codes) with respect to the polynomial basis")
      .def("add", [](const FieldSpec& fs, py::handle a, py::handle b) {
        return fs.to_string(fs.ext().add(elt_from_py(fs, a), elt_from_py(fs, b)));
      })
      .def("mul", [](const FieldSpec& fs, py::handle a, py::handle b) {
        return fs.to_string(fs.ext().mul(elt_from_py(fs, a), elt_from_py(fs, b)));
      })
      .def("inv", [](const FieldSpec& fs, py::handle a) {
        return fs.to_string(fs.ext().inv(elt_from_py(fs, a)));
      })
      .def("pow", [](const FieldSpec& fs, py::handle a, std::uint64_t n) {
        return fs.to_string(fs.ext().pow(elt_from_py(fs, a), n));
      })
      .def("frobenius", [](const FieldSpec& fs, py::handle a) {
        return fs.to_string(fs.ext().frobenius(elt_from_py(fs, a)));
      })
      .def("__eq__", [](const FieldSpec& a, const FieldSpec& b) { return a == b; })
      .def("__repr__", [](const FieldSpec& fs) {
        return "FieldSpec(p=" + std::to_string(fs.p()) + ", e=" + std::to_string(fs.e()) +
               ", m=" + std::to_string(fs.m()) + ")";
      });

  py::class_<LinearCode>(m, "LinearCode", "An [n, k] linear code over F_{q^m}")
      .def(py::init([](const FieldSpec& fs, py::sequence rows) {
             std::vector<Vec<ExtField>> parsed;
             for (auto row : rows) parsed.push_back(word_from_py(fs, row.cast<py::sequence>()));
             return LinearCode(fs, mat_from_rows(fs.ext(), parsed));
           }),
           py::arg("field"), py::arg("generator"))
      .def_static("gabidulin",
                  [](const FieldSpec& fs, std::size_t n, std::size_t k, py::object points) {
                    Vec<ExtField> pts;
                    if (points.is_none()) {
                      for (std::size_t j = 0; j < n; ++j)
                        pts.push_back(fs.ext().pow(fs.ext().gen(), j));
                    } else {
                      pts = word_from_py(fs, points.cast<py::sequence>());
                    }
                    return gabidulin_code(fs, n, k, pts);
                  },
                  py::arg("field"), py::arg("n"), py::arg("k"), py::arg("points") = py::none())
      .def_static("cyclic",
                  [](const FieldSpec& fs, std::size_t n, py::sequence g) {
                    return cyclic_code(fs, n, word_from_py(fs, g));
                  },
                  py::arg("field"), py::arg("n"), py::arg("g"))
      .def_property_readonly("field", &LinearCode::field)
      .def_property_readonly("n", &LinearCode::n)
      .def_property_readonly("k", &LinearCode::k)
      .def_property_readonly("generator",
                             [](const LinearCode& c) {
                               py::list rows;
                               for (std::size_t i = 0; i < c.k(); ++i) {
                                 py::list row;
                                 for (std::size_t j = 0; j < c.n(); ++j)
                                   row.append(c.field().to_string(c.generator().at(i, j)));
                                 rows.append(row);
                               }
                               return rows;
                             },
                             "RREF generator matrix as element expressions")
      .def("dual", [](const LinearCode& c) { return dual_code(c); })
      .def("rank_weight",
           [](const LinearCode& c, py::sequence word) {
             return rank_weight(c.field(), word_from_py(c.field(), word));
           })
      .def("grw",
           [](const LinearCode& c, std::size_t r, const std::string& method, std::uint64_t budget) {
             return generalized_rank_weight(c, r, grw_method(method), budget);
           },
           py::arg("r"), py::arg("method") = "subspaces",
           py::arg("budget") = kDefaultSubspaceBudget)
      .def("hierarchy",
           [](const LinearCode& c, const std::string& method, std::uint64_t budget) {
             return grw_hierarchy(c, grw_method(method), budget);
           },
           py::arg("method") = "subspaces", py::arg("budget") = kDefaultSubspaceBudget)
      .def("is_mrd",
           [](const LinearCode& c, std::size_t r, std::uint64_t budget) {
             return is_r_mrd(c, r, GrwMethod::Subspaces, budget);
           },
           py::arg("r") = 1, py::arg("budget") = kDefaultSubspaceBudget)
      .def("distribution",
           [](const LinearCode& c, const std::string& method, std::optional<std::size_t> r_max,
              std::uint64_t budget) {
             DistributionTable table;
             if (method == "brute") {
               table = brute_force_distribution(c, r_max, budget);
             } else if (method == "transversal") {
               table = a_from_b(b_table_transversal(c, budget));
             } else if (method == "both") {
               table = brute_force_distribution(c, std::nullopt, budget);
               if (table != a_from_b(b_table_transversal(c, budget)))
                 throw Error("cross-check mismatch between brute force and transversal tables");
             } else {
               throw InvalidInput("unknown method: " + method);
             }
             return table_to_list(table.rows);
           },
           py::arg("method") = "both", py::arg("r_max") = py::none(),
           py::arg("budget") = kDefaultSubspaceBudget,
           "rows[r][w] = number of r-dimensional subcodes of rank weight w")
      .def("dual_distribution",
           [](const LinearCode& c, const std::string& method, std::uint64_t budget) {
             DualDistMethod mm = method == "solve"    ? DualDistMethod::Solve
                                 : method == "direct" ? DualDistMethod::Direct
                                                      : DualDistMethod::Transversal;
             if (method != "solve" && method != "direct" && method != "transversal" &&
                 method != "lemma38")
               throw InvalidInput("unknown method: " + method);
             return table_to_list(dual_distribution(c, mm, budget).rows);
           },
           py::arg("method") = "transversal", py::arg("budget") = kDefaultSubspaceBudget)
      .def("b_table",
           [](const LinearCode& c, std::uint64_t budget) {
             return table_to_list(b_table_transversal(c, budget).rows);
           },
           py::arg("budget") = kDefaultSubspaceBudget,
           "rows[t][r] = sum over t-dim U of the number of r-dim subcodes of C(U)")
      .def("dual_b_table",
           [](const LinearCode& c, std::uint64_t budget) {
             return table_to_list(dual_b_table(c, budget).rows);
           },
           py::arg("budget") = kDefaultSubspaceBudget)
      .def("enumerator",
           [](const LinearCode& c, std::size_t r, const std::string& source, std::uint64_t budget) {
             EnumeratorPoly poly;
             if (source == "btable") {
               poly = enumerator(c, r, EnumeratorSource::BTable, budget);
             } else if (source == "distribution") {
               poly = enumerator(c, r, EnumeratorSource::Distribution, budget);
             } else if (source == "both") {
               poly = enumerator(c, r, EnumeratorSource::BTable, budget);
               if (!(poly == enumerator(c, r, EnumeratorSource::Distribution, budget)))
                 throw Error("cross-check mismatch between enumerator sources");
             } else {
               throw InvalidInput("unknown source: " + source);
             }
             return enumerator_to_dict(poly);
           },
           py::arg("r"), py::arg("source") = "both", py::arg("budget") = kDefaultSubspaceBudget)
      .def("codeword_weight_counts",
           [](const LinearCode& c, std::uint64_t budget) {
             return counts_to_list(codeword_weight_counts(c, budget));
           },
           py::arg("budget") = kDefaultSubspaceBudget)
      .def("macwilliams_rhs",
           [](const LinearCode& c, std::size_t t, std::size_t r, std::uint64_t budget) {
             return to_py_int(macwilliams_rhs(brute_force_distribution(c, std::nullopt, budget), t, r));
           },
           py::arg("t"), py::arg("r"), py::arg("budget") = kDefaultSubspaceBudget)
      .def("verify",
           [](const LinearCode& c, std::uint64_t budget) {
             py::list out;
             for (const auto& r : verify_code(c, budget)) {
               py::dict d;
               d["name"] = r.name;
               d["passed"] = r.passed;
               d["skipped"] = r.skipped;
               d["detail"] = r.detail;
               out.append(d);
             }
             return out;
           },
           py::arg("budget") = kDefaultSubspaceBudget)
      .def("to_json", [](const LinearCode& c) { return code_to_json(c).dump(2); })
      .def("save", [](const LinearCode& c, const std::string& path) { save_code_file(c, path); })
      .def("__eq__", [](const LinearCode& a, const LinearCode& b) { return a == b; })
      .def("__repr__", [](const LinearCode& c) {
        return "LinearCode(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) +
               ", q=" + std::to_string(c.field().q()) + ", m=" + std::to_string(c.field().m()) +
               ")";
      });

  m.def("load_code", &load_code_file, py::arg("path"), "Load a code description file");

  m.def("gauss_binom",
        [](std::size_t a, std::size_t b, py::int_ q) { return to_py_int(gauss_binom(a, b, from_py_int(q))); },
        py::arg("a"), py::arg("b"), py::arg("q"),
        "Number of b-dimensional subspaces of an a-dimensional space over F_q");

  m.def("gauss_forward", [](py::sequence a, py::int_ q) {
    std::vector<Count> v;
    for (auto item : a) v.push_back(from_py_int(item));
    return counts_to_list(gauss_forward(v, from_py_int(q)));
  });

  m.def("gauss_inversion", [](py::sequence b, py::int_ q) {
    std::vector<Count> v;
    for (auto item : b) v.push_back(from_py_int(item));
    return counts_to_list(gauss_inversion(v, from_py_int(q)));
  });

  m.def("vandermonde_check", [](std::size_t a, std::size_t b, std::size_t c, py::int_ q) {
    return vandermonde_check(a, b, c, from_py_int(q));
  });

  m.def("falling_q_product", [](std::size_t t, py::int_ q) {
    return counts_to_list(falling_q_product(t, from_py_int(q)).coeff);
  });

  m.def("mrd_b",
        [](std::size_t n, std::size_t k, std::uint64_t q, int mm, std::size_t t, std::size_t r) {
          return to_py_int(mrd_b(n, k, q, mm, t, r));
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("m"), py::arg("t"), py::arg("r"));

  m.def("mrd_distribution",
        [](std::size_t n, std::size_t k, std::uint64_t q, int mm) {
          return table_to_list(mrd_distribution(n, k, q, mm).rows);
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("m"),
        "Distribution shared by every MRD code with the given parameters");

  m.def("find_irreducible",
        [](std::int64_t p, int degree, std::uint64_t seed) {
          auto f = find_irreducible(BaseField(p), degree, seed);
          return std::vector<std::int64_t>(f.begin(), f.end());
        },
        py::arg("p"), py::arg("degree"), py::arg("seed") = 0,
        "Monic irreducible polynomial over F_p, ascending residues");
}
