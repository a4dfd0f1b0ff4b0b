#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "babel/apartment.hpp"
#include "babel/render.hpp"
#include "babel/serialize.hpp"
#include "babel/sl2.hpp"
#include "babel/suites.hpp"

namespace py = pybind11;
using namespace babel;

// Values cross the boundary as JSON text; the Python package decodes them.
namespace {

Json parse(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto at_precision(int p1, int p2, F&& f) {
  PrecisionScope scope(Precision{p1, p2});
  return f();
}

const RootDatum& datum(const std::string& phi) { return root_datum(parse_root_type(phi)); }

Point point(const std::string& phi, int n, const std::string& s) {
  return point_from_json(parse(s), datum(phi).rank, n);
}

std::vector<Point> points(const std::string& phi, int n, const std::string& s) {
  Json j = parse(s);
  if (!j.is_array()) throw Error(Errc::InvalidInput, "expected an array of points");
  std::vector<Point> out;
  for (const Json& p : j) out.push_back(point_from_json(p, datum(phi).rank, n));
  return out;
}

std::string suite(const std::string& name, uint64_t seed, int samples, uint32_t q, const std::string& phi,
                  int n, int threads, int p1, int p2) {
  SuiteConfig c;
  c.seed = seed;
  c.samples = samples;
  c.q = q;
  c.precision = Precision{p1, p2};
  c.phi = parse_root_type(phi);
  c.n = n;
  c.threads = threads;
  SuiteReport r;
  {
    py::gil_scoped_release release;
    r = suite_run(c, name);
  }
  return to_json(r).dump();
}

std::string lex_cmp_json(const std::string& a, const std::string& b) {
  return order_name(lex_cmp(lexpoly_from_json(parse(a)), lexpoly_from_json(parse(b))));
}

std::string weyl_nf(const std::string& phi, int n, const std::string& word) {
  return to_json(word_to_element(datum(phi), n, word)).dump();
}

std::string locate(const std::string& phi, int n, const std::string& p) {
  Apartment ap(datum(phi), n);
  try {
    return to_json(ap.locate(point(phi, n, p))).dump();
  } catch (const Error& e) {
    if (e.code() == Errc::NotInApartment) return "null";
    throw;
  }
}

std::string dist2(const std::string& phi, int n, const std::string& p, const std::string& q) {
  Apartment ap(datum(phi), n);
  Point a = point(phi, n, p), b = point(phi, n, q);
  ap.check(a);
  ap.check(b);
  return to_json(ap.dist2(a, b), n).dump();
}

bool enclosure(const std::string& phi, int n, const std::string& omega, const std::string& z) {
  return Apartment(datum(phi), n).enclosure_contains(points(phi, n, omega), point(phi, n, z));
}

std::string circumcenter(const std::string& phi, int n, const std::string& pts) {
  CircumResult r = Apartment(datum(phi), n).circumcenter(points(phi, n, pts));
  return Json{{"center", point_to_json(r.center)}, {"radius2", to_json(r.radius2, n)}}.dump();
}

std::string bruhat(const std::string& g, int p1, int p2) {
  return at_precision(p1, p2, [&] {
    BruhatResult r = with_precision_retry([&] { return bruhat_decompose(mat2_from_json(parse(g))); });
    return Json{{"b", to_json(r.b)}, {"n", to_json(r.n)}, {"bp", to_json(r.bp)}, {"label", to_json(r.label)}}.dump();
  });
}

std::string cartan(const std::string& g, int p1, int p2) {
  return at_precision(p1, p2, [&] {
    CartanResult r = with_precision_retry([&] { return cartan_decompose(mat2_from_json(parse(g))); });
    return Json{{"k", to_json(r.k)}, {"t", to_json(r.t)}, {"kp", to_json(r.kp)}, {"m", to_json(r.m)}}.dump();
  });
}

std::string cell(const std::string& g, int p1, int p2) {
  return at_precision(p1, p2, [&] {
    return to_json(with_precision_retry([&] { return cell_of(mat2_from_json(parse(g))); })).dump();
  });
}

std::string dist(const std::string& g, const std::string& h, int p1, int p2) {
  return at_precision(p1, p2, [&] {
    Mat2 a = mat2_from_json(parse(g)), b = mat2_from_json(parse(h));
    return to_json(with_precision_retry([&] { return building_dist(a, b); })).dump();
  });
}

}  // namespace

PYBIND11_MODULE(_babel, m) {
  m.doc() = "Native core of babelbuild; arguments and results are JSON text.";

  static py::exception<Error> base(m, "BabelError", PyExc_ValueError);
  static py::exception<Error> precision(m, "PrecisionExhausted", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = e.code() == Errc::PrecisionExhausted ? py::object(precision) : py::object(base);
      py::object inst = type(e.what());
      inst.attr("code") = errc_name(e.code());
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  m.def("suite_names", &suite_names);
  m.def("suite_run", &suite, py::arg("name"), py::arg("seed"), py::arg("samples"), py::arg("q"),
        py::arg("phi"), py::arg("n"), py::arg("threads"), py::arg("p1"), py::arg("p2"));
  m.def("lex_cmp", &lex_cmp_json);
  m.def("weyl_nf", &weyl_nf);
  m.def("locate", &locate);
  m.def("dist2", &dist2);
  m.def("enclosure_contains", &enclosure);
  m.def("circumcenter", &circumcenter);
  m.def("bruhat", &bruhat);
  m.def("cartan", &cartan);
  m.def("cell", &cell);
  m.def("building_dist", &dist);
  m.def("render_apartment", [](const std::string& phi) { return render_apartment_svg(parse_root_type(phi)); });
  m.def("render_enclosure", [] {
    auto pair = enclosure_example_pair();
    return render_enclosure_svg(pair[0], pair[1]);
  });
}
