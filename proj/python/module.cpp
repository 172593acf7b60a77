#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "uso/census.hpp"
#include "uso/checks.hpp"
#include "uso/constructions.hpp"
#include "uso/io.hpp"
#include "uso/lcp.hpp"

namespace py = pybind11;
using namespace uso;

namespace {

// python speaks strings; rationals cross the boundary as "p/q"
RationalMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  int n = static_cast<int>(rows.size());
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix M(n, cols);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) M.at(r, c) = parse_rational(rows[r][c]);
  }
  return M;
}

RationalVector vector_from_strings(const std::vector<std::string>& entries) {
  RationalVector v(static_cast<int>(entries.size()));
  for (int i = 0; i < v.size(); ++i) v[i] = parse_rational(entries[i]);
  return v;
}

std::vector<std::string> vector_to_strings(const RationalVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (int i = 0; i < v.size(); ++i) out.push_back(rational_to_string(v[i]));
  return out;
}

}  // namespace

PYBIND11_MODULE(pyuso, m) {
  m.doc() = "unique-sink orientations of the n-cube from P-matrix LCPs";

  py::register_exception<DegenerateError>(m, "DegenerateError");
  py::register_exception<NotPMatrixError>(m, "NotPMatrixError");
  py::register_exception<NotUsoError>(m, "NotUsoError");
  py::register_exception<NotUniqueSinkError>(m, "NotUniqueSinkError");

  py::class_<Orientation>(m, "Orientation")
      .def_property_readonly("n", &Orientation::dim)
      .def("out", &Orientation::out, py::arg("vertex"))
      .def("edge_out", &Orientation::edge_out, py::arg("vertex"), py::arg("coord"))
      .def("__eq__", [](const Orientation& a, const Orientation& b) { return a == b; })
      .def("__hash__", [](const Orientation& phi) {
        std::size_t h = std::hash<int>{}(phi.dim());
        for (std::uint32_t v = 0; v < phi.vertex_count(); ++v)
          h = h * 1000003u + phi.out(v);
        return h;
      })
      .def("to_json", [](const Orientation& phi) { return orientation_to_json(phi).dump(); })
      .def_static("from_json", [](const std::string& s) {
        return orientation_from_json(nlohmann::json::parse(s));
      })
      .def("to_dot", [](const Orientation& phi) { return orientation_to_dot(phi); });

  m.def("uniform", &Orientation::uniform, py::arg("n"));
  m.def("reverse", &reverse, py::arg("phi"), py::arg("coords"));
  m.def("restrict",
        [](const Orientation& phi, std::uint32_t base, CoordSet coords) {
          return subcube_restriction(phi, Subcube{Vertex{phi.dim(), base}, coords});
        },
        py::arg("phi"), py::arg("base"), py::arg("coords"));

  m.def("is_uso", &is_uso);
  m.def("is_acyclic", &is_acyclic);
  m.def("is_locally_uniform", &is_locally_uniform);
  m.def("is_holt_klee", &is_holt_klee);
  m.def("is_strongly_holt_klee", &is_strongly_holt_klee);
  m.def("classify", [](const Orientation& phi) {
    ClassProfile p = classify(phi);
    return py::dict(py::arg("uso") = p.is_uso, py::arg("acyclic") = p.is_acyclic,
                    py::arg("locally_uniform") = p.is_locally_uniform,
                    py::arg("holt_klee") = p.is_holt_klee,
                    py::arg("strongly_holt_klee") = p.is_strongly_holt_klee);
  });

  m.def("is_p_matrix",
        [](const std::vector<std::vector<std::string>>& M) { return is_p_matrix(matrix_from_strings(M)); });
  m.def("is_z_matrix",
        [](const std::vector<std::vector<std::string>>& M) { return is_z_matrix(matrix_from_strings(M)); });
  m.def("is_k_matrix",
        [](const std::vector<std::vector<std::string>>& M) { return is_k_matrix(matrix_from_strings(M)); });

  m.def("induce",
        [](const std::vector<std::vector<std::string>>& M, const std::vector<std::string>& q) {
          return induced_orientation(matrix_from_strings(M), vector_from_strings(q));
        },
        py::arg("matrix"), py::arg("q"));

  m.def("solve",
        [](const std::vector<std::vector<std::string>>& M, const std::vector<std::string>& q) {
          LcpSolution sol = solve_lcp(matrix_from_strings(M), vector_from_strings(q));
          return py::dict(py::arg("basis") = sol.basis,
                          py::arg("w") = vector_to_strings(sol.w),
                          py::arg("z") = vector_to_strings(sol.z));
        },
        py::arg("matrix"), py::arg("q"));

  m.def("walk",
        [](const std::vector<std::vector<std::string>>& M, const std::vector<std::string>& q,
           std::uint32_t start, const std::string& rule, std::uint64_t seed) {
          RationalMatrix mm = matrix_from_strings(M);
          PivotRule r;
          if (rule == "least-index") r = PivotRule::LeastIndex;
          else if (rule == "random") r = PivotRule::Random;
          else throw std::invalid_argument("unknown rule " + rule);
          return pivot_walk(mm, vector_from_strings(q), Vertex{mm.rows(), start}, r, seed);
        },
        py::arg("matrix"), py::arg("q"), py::arg("start"),
        py::arg("rule") = "least-index", py::arg("seed") = 0);

  m.def("monotone_uso", [](int k, const std::vector<bool>& table) {
    return monotone_uso(MonotoneFunction(k, table));
  });
  m.def("antichain_uso", [](int k, const std::vector<std::uint32_t>& members) {
    return monotone_uso(antichain_function(members, k));
  });

  m.def("sample_k_usos",
        [](int n, int trials, std::uint64_t seed) {
          KSampleResult r = sample_k_usos(n, trials, seed);
          return py::dict(py::arg("trials") = r.trials,
                          py::arg("degenerate_skipped") = r.degenerate_skipped,
                          py::arg("distinct") = r.distinct);
        },
        py::arg("n"), py::arg("trials"), py::arg("seed"));
  m.def("k_family_lower_bound", &k_family_lower_bound, py::arg("n"));

  m.def("census",
        [](int n) {
          CensusReport rep = enumerate_usos(n);
          return py::dict(py::arg("n") = rep.n, py::arg("total") = rep.total,
                          py::arg("usos") = rep.usos, py::arg("acyclic") = rep.acyclic,
                          py::arg("locally_uniform") = rep.locally_uniform,
                          py::arg("holt_klee") = rep.holt_klee,
                          py::arg("strongly_holt_klee") = rep.strongly_holt_klee);
        },
        py::arg("n"));

  m.def("count_fixed_matrix_usos",
        [](const std::vector<std::vector<std::string>>& M, int samples,
           std::uint64_t seed, bool exact_n2) {
          FixedMatrixCount r =
              count_fixed_matrix_usos(matrix_from_strings(M), samples, seed, exact_n2);
          py::dict d(py::arg("samples") = r.samples,
                     py::arg("degenerate_skipped") = r.degenerate_skipped,
                     py::arg("distinct") = r.distinct);
          if (r.exact) d["exact"] = *r.exact;
          return d;
        },
        py::arg("matrix"), py::arg("samples"), py::arg("seed"),
        py::arg("exact_n2") = false);

  m.def("local_uniformity_witness",
        [](const std::vector<std::vector<std::string>>& M) -> py::object {
          auto w = local_uniformity_witness(matrix_from_strings(M));
          if (!w) return py::none();
          return py::dict(py::arg("q") = vector_to_strings(w->q),
                          py::arg("i") = w->i, py::arg("j") = w->j);
        },
        py::arg("matrix"));
}
