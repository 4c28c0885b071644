#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavekit/depth.hpp"
#include "wavekit/error.hpp"
#include "wavekit/recognition.hpp"
#include "wavekit/reduction.hpp"
#include "wavekit/waves.hpp"

namespace py = pybind11;
using namespace wavekit;

// Words cross the boundary as strings; results come back as plain tuples
// and dicts.
namespace {

CyclicWord word(const std::string& s) { return reduce(parse_word(s)); }

std::vector<std::string> strings(const std::vector<CyclicWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

py::dict pair_dict(const MeridianPair& p) {
  py::dict d;
  d["m1"] = to_string(p.m1);
  d["m2"] = to_string(p.m2);
  d["working"] = to_string(p.working);
  d["wave"] = kind_name(p.wave.kind);
  d["h1_m1"] = homology_of_filling(p.base, p.m1).str();
  d["h1_m2"] = homology_of_filling(p.base, p.m2).str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "WavekitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object cls = py::module_::import("wavekit._core").attr("WavekitError");
      py::object exc = cls(e.what());
      exc.attr("code") = e.code();
      PyErr_SetObject(cls.ptr(), exc.ptr());
    }
  });

  m.def("reduce", [](const std::string& s) { return to_string(word(s)); });
  m.def("canonical_form", [](const std::string& s) { return to_string(canonical_form(word(s))); });
  m.def("abelianize", [](const std::string& s) {
    const AbelianImage a = abelianize(word(s));
    return std::make_pair(a.a, a.b);
  });
  m.def("is_realizable", [](const std::string& s) { return is_realizable(word(s)); });
  m.def("is_primitive", [](const std::string& s) { return cmz_is_primitive(word(s)); });
  m.def("is_primitive_or_power", [](const std::string& s) { return is_primitive_or_power(word(s)); });
  m.def("is_positive", [](const std::string& s) { return is_positive_curve(word(s)); });
  m.def("whitehead_minimize", [](const std::string& s) { return to_string(whitehead_minimize(word(s)).minimal); });
  m.def("meridian_pair", [](const std::string& s) { return pair_dict(distinguished_meridian_pair(word(s))); });
  m.def("vertical_pair", [](const std::string& s) { return pair_dict(vertical_slope_pair(word(s))); });
  m.def("homology", [](const std::string& x, const std::string& y) {
    return homology_of_filling(word(x), word(y)).str();
  });
  m.def("recognize", [](const std::string& x, const std::string& y) {
    return std::string(verdict_name(recognize_words(word(x), word(y)).verdict));
  });
  m.def("embeds_in_family", [](const std::string& s) {
    return std::string(verdict_name(embeds_in_family(word(s)).verdict));
  });
  m.def("is_11_tunnel", [](const std::string& s) { return is_11_tunnel(word(s)); });
  m.def("depth", [](const std::string& s) {
    const DepthResult d = depth(word(s));
    return std::make_pair(d.depth, strings(d.path));
  });
  m.def("unknotting_dot", [](const std::string& s) { return to_dot(build_unknotting_graph(word(s))); });
}
