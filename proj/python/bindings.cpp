#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pjp/error.hpp"
#include "pjp/io.hpp"
#include "pjp/verify.hpp"

namespace py = pybind11;
using namespace pjp;

namespace {

Subset subset(const std::vector<int>& I, int rank) {
  Subset s;
  for (int i : I) {
    if (i < 1 || i > rank) throw Error(ErrorCode::InvalidInput, "simple reflection index out of range");
    s.insert(i - 1);
  }
  return s;
}

Multiplicity multiplicity(const RootSystem& rs, const std::vector<std::string>& k) {
  RVec v;
  for (const auto& s : k) v.push_back(parse_rational(s));
  if (v.size() == 1) return Multiplicity::uniform(rs, v[0]);
  return Multiplicity(rs, v);
}

Weight weight(const std::vector<int>& c, int rank) {
  if (static_cast<int>(c.size()) != rank) throw Error(ErrorCode::InvalidInput, "weight has the wrong rank");
  return Weight::from_coords(c);
}

RootSystemPtr root_system(const std::string& name, const std::string& scale) {
  return build_root_system(name, parse_rational(scale));
}

std::string steinberg(const std::string& rs_name, const std::vector<int>& I, const std::string& scale) {
  auto rs = root_system(rs_name, scale);
  Subset s = subset(I, rs->rank());
  return steinberg_json(rs, s, {Subset(), s, Subset::full(rs->rank())}).dump();
}

std::string epoly(const std::string& rs_name, const std::vector<int>& lam, const std::vector<std::string>& k,
                  const std::string& method, const std::string& scale) {
  auto rs = root_system(rs_name, scale);
  auto kk = multiplicity(*rs, k);
  Weight l = weight(lam, rs->rank());
  LaurentPoly e = method == "gs" ? e_poly_gs(rs, l, kk) : e_poly(rs, l, kk);
  if (method == "both" && !(e == e_poly_gs(rs, l, kk)))
    throw Error(ErrorCode::InternalInconsistency, "recursion and Gram system disagree");
  return to_json(EPolyResult{rs, l, kk, e, spectral(*rs, l, kk).value}).dump();
}

std::string jacobi(const std::string& rs_name, const std::vector<int>& I, const std::vector<int>& lam,
                   const std::vector<std::string>& k, const std::string& method, const std::string& scale) {
  auto rs = root_system(rs_name, scale);
  auto kk = multiplicity(*rs, k);
  Subset s = subset(I, rs->rank());
  Weight l = weight(lam, rs->rank());
  auto p = method == "gs" ? jacobi_gs(rs, s, l, kk) : jacobi_sym(rs, s, l, kk);
  if (method == "both" && !same_jacobi(p, jacobi_gs(rs, s, l, kk)))
    throw Error(ErrorCode::InternalInconsistency, "symmetrization and Gram system disagree");
  return to_json(p).dump();
}

std::string vec(const std::string& rs_name, const std::vector<int>& I, const std::vector<int>& lam,
                const std::vector<std::string>& k, const std::string& scale) {
  auto rs = root_system(rs_name, scale);
  return to_json(big_p(rs, subset(I, rs->rank()), weight(lam, rs->rank()), multiplicity(*rs, k))).dump();
}

std::string mvop(const std::string& rs_name, const std::vector<int>& I, const std::vector<int>& sigma,
                 const std::vector<std::string>& k, const std::string& scale) {
  auto rs = root_system(rs_name, scale);
  Subset s = subset(I, rs->rank());
  Weight sg = weight(sigma, rs->rank());
  Json labels = Json::array();
  for (const auto& l : mvop_labels(*rs, s, sg)) labels.push_back(to_json(l));
  return Json{{"labels", labels},
              {"weight", to_json(weight_matrix(rs, s))},
              {"mvop", to_json(mvop_matrix(rs, s, sg, multiplicity(*rs, k)))}}
      .dump();
}

// decode and re-encode, exercising the JSON readers
std::string normalize(const std::string& kind, const std::string& text) {
  Json j = Json::parse(text);
  if (kind == "epoly") return to_json(epoly_from_json(j)).dump();
  if (kind == "jacobi") return to_json(jacobi_from_json(j)).dump();
  if (kind == "vector") return to_json(vector_from_json(j)).dump();
  throw Error(ErrorCode::InvalidInput, "unknown kind '" + kind + "'");
}

std::vector<py::tuple> verify(int criterion, const std::vector<std::string>& kset, int box, int jobs) {
  VerifyOptions opts;
  if (!kset.empty()) {
    opts.kset.clear();
    for (const auto& s : kset) opts.kset.push_back(parse_rational(s));
  }
  opts.box = box;
  opts.jobs = jobs;
  CriterionReport r;
  {
    py::gil_scoped_release release;
    r = run_criterion(criterion, opts);
  }
  std::vector<py::tuple> out;
  for (const auto& c : r.cases) out.push_back(py::make_tuple(c.name, c.pass, c.detail));
  return out;
}

}  // namespace

PYBIND11_MODULE(_pjp, m) {
  m.doc() = "Parabolic Jacobi polynomials and Steinberg bases (JSON interface)";
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&]() { return py::exception<Error>(m, "PjpError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (std::string(error_name(e.code())) + ": " + e.detail()).c_str());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(error.get_stored(), (std::string("InvalidInput: ") + e.what()).c_str());
    }
  });
  m.def("steinberg", &steinberg, py::arg("rs"), py::arg("I"), py::arg("scale") = "1");
  m.def("epoly", &epoly, py::arg("rs"), py::arg("lam"), py::arg("k"), py::arg("method") = "sym",
        py::arg("scale") = "1");
  m.def("jacobi", &jacobi, py::arg("rs"), py::arg("I"), py::arg("lam"), py::arg("k"), py::arg("method") = "sym",
        py::arg("scale") = "1");
  m.def("vec", &vec, py::arg("rs"), py::arg("I"), py::arg("lam"), py::arg("k"), py::arg("scale") = "1");
  m.def("mvop", &mvop, py::arg("rs"), py::arg("I"), py::arg("sigma"), py::arg("k"), py::arg("scale") = "1");
  m.def("normalize", &normalize, py::arg("kind"), py::arg("text"));
  m.def("verify", &verify, py::arg("criterion"), py::arg("kset"), py::arg("box") = 6, py::arg("jobs") = 1);
}
