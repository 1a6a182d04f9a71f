#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bedard/cli.hpp"
#include "bedard/error.hpp"
#include "bedard/flagbrute.hpp"
#include "bedard/pieces.hpp"

namespace py = pybind11;
using namespace bedard;

namespace {

std::shared_ptr<const Group> group_of(const std::string& type) { return Group::from_type(type); }

GenSet subset_of(const std::vector<int>& j, int rank) {
  for (int i : j)
    if (i < 0 || i >= rank) throw ParseError("generator index " + std::to_string(i) + " out of range");
  return GenSet::from_indices(j);
}

py::list steps_list(const Group& g, const std::vector<TStep>& steps) {
  py::list out;
  for (const auto& st : steps) out.append(py::dict(py::arg("J") = st.j.indices(), py::arg("w") = g.format(st.w)));
  return out;
}

py::dict group_info(const std::string& type) {
  const auto g = group_of(type);
  const auto rs = RootSystem::from_cartan_matrix(g->cartan_matrix());
  return py::dict(py::arg("type") = g->name(), py::arg("rank") = g->rank(), py::arg("order") = g->order(),
                  py::arg("num_positive_roots") = rs.num_positive(), py::arg("longest") = g->format(g->longest()));
}

py::dict pieces(const std::string& type, const std::vector<int>& j, const std::string& twist,
                std::optional<int> torus_rank, std::optional<int> q) {
  const auto g = group_of(type);
  const Twist eps = Twist::parse(g, twist);
  const auto datum = ReductiveDatum::from_group(g, torus_rank.value_or(g->rank()));
  const Census c = census(subset_of(j, g->rank()), eps, datum);
  py::list rows;
  for (const auto& row : c.rows) {
    py::dict item(py::arg("w") = g->format(row.key.w), py::arg("J_inf") = row.key.j_inf.indices(),
                  py::arg("steps") = steps_list(*g, row.key.steps), py::arg("d") = row.d, py::arg("N_t") = row.n_t,
                  py::arg("m_t") = row.m_t, py::arg("dim") = row.dim);
    item["count_poly"] = row.count ? py::cast(row.count->coefficients()) : py::none();
    if (q) item["count_at_q"] = row.count ? py::cast(row.count->evaluate(*q)) : py::none();
    rows.append(item);
  }
  py::dict out(py::arg("J") = j, py::arg("twist") = eps.label(), py::arg("torus_rank") = datum.torus_rank,
               py::arg("variety_poly") = c.variety.coefficients(), py::arg("pieces") = rows,
               py::arg("sum_ok") = c.sum_ok, py::arg("dim_bound_ok") = c.dim_bound_ok, py::arg("euler_ok") = c.euler_ok);
  if (q) out["variety_at_q"] = c.variety.evaluate(*q);
  return out;
}

py::dict psi_trace(const std::string& type, const std::string& w, const std::vector<int>& j, const std::string& twist) {
  const auto g = group_of(type);
  const Twist eps = Twist::parse(g, twist);
  const GenSet jj = subset_of(j, g->rank());
  const SSeq s = psi(g->parse(w), jj, eps);
  const TSeq t = s_to_t(s, eps);
  py::list sseq;
  for (const auto& st : s.steps)
    sseq.append(py::dict(py::arg("J") = st.j.indices(), py::arg("J_prime") = st.j_prime.indices(),
                         py::arg("u") = g->format(st.u)));
  return py::dict(py::arg("sseq") = sseq, py::arg("tseq") = steps_list(*g, t.steps),
                  py::arg("J_inf") = j_infinity(t, eps).indices());
}

std::string phi_of(const std::string& type, const std::vector<std::string>& u, const std::vector<int>& j,
                   const std::string& twist) {
  const auto g = group_of(type);
  const Twist eps = Twist::parse(g, twist);
  const GenSet jj = subset_of(j, g->rank());
  std::vector<Element> elems;
  for (const auto& word : u) elems.push_back(g->parse(word));
  const SSeq s = sseq_from_u(elems, jj, eps);
  if (const auto v = validate_s(s.steps, jj, eps)) throw NotMinimalInput("axiom " + v->axiom + " fails: " + v->detail);
  return g->format(phi(s, *g));
}

py::dict z_census_py(int n, int q, const std::vector<int>& j, std::size_t budget) {
  const auto w_group = Group::from_type("A" + std::to_string(n - 1));
  ZCensusOptions options;
  options.budget = budget;
  const ZCensus c = z_census(n, q, subset_of(j, w_group->rank()), options);
  py::list pieces;
  for (const auto& p : c.pieces) pieces.append(py::dict(py::arg("steps") = steps_list(*w_group, p.t.steps), py::arg("count") = p.count));
  return py::dict(py::arg("total") = c.total, py::arg("pieces") = pieces, py::arg("orbits") = c.orbits,
                  py::arg("orbit_constant") = c.orbit_constant, py::arg("fibres_ok") = c.fibres_ok,
                  py::arg("all_valid") = c.all_valid);
}

py::dict line_census_py(int n, int q, int m) {
  const LineCensus c = gl_line_census(n, q, m);
  return py::dict(py::arg("lines") = c.lines, py::arg("classes") = c.class_counts,
                  py::arg("observed_pieces") = c.observed_pieces(), py::arg("dictionary_ok") = c.dictionary_ok);
}

py::dict sp_line_census_py(int half, int q, int m) {
  const SpLineCensus c = sp_line_census(half, q, m);
  py::dict classes;
  for (const auto& tag : sp_line_tags(half)) {
    const auto it = c.class_counts.find(tag);
    classes[py::str(tag.tag())] = it == c.class_counts.end() ? 0 : it->second;
  }
  return py::dict(py::arg("lines") = c.lines, py::arg("classes") = classes);
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::main_entry(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Piece censuses for partial flag manifolds";

  auto base = py::register_exception<Error>(m, "BedardError");
  py::register_exception<UnknownType>(m, "UnknownType", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidTwist>(m, "InvalidTwist", base.ptr());
  py::register_exception<NotMinimalInput>(m, "NotMinimalInput", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("group_info", &group_info, py::arg("type"));
  m.def("pieces", &pieces, py::arg("type"), py::arg("j") = std::vector<int>{}, py::arg("twist") = "id",
        py::arg("torus_rank") = py::none(), py::arg("q") = py::none(),
        "Census of the pieces of the partial flag manifold of type J.");
  m.def("psi", &psi_trace, py::arg("type"), py::arg("w"), py::arg("j") = std::vector<int>{}, py::arg("twist") = "id");
  m.def("phi", &phi_of, py::arg("type"), py::arg("u"), py::arg("j") = std::vector<int>{}, py::arg("twist") = "id");
  m.def("z_census", &z_census_py, py::arg("n"), py::arg("q"), py::arg("j") = std::vector<int>{},
        py::arg("budget") = kDefaultBudget, "Brute-force census of Z over F_q for GL_n.");
  m.def("line_census", &line_census_py, py::arg("n"), py::arg("q"), py::arg("m"));
  m.def("sp_line_census", &sp_line_census_py, py::arg("half"), py::arg("q"), py::arg("m"));
  m.def("run", &run_cli, py::arg("args"), "Run the command line front end; returns (exit_code, stdout, stderr).");
}
