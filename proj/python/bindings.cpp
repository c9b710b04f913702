#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iostream>
#include <sstream>

#include "qkac/charring.hpp"
#include "qkac/cli.hpp"
#include "qkac/drinfeld.hpp"
#include "qkac/error.hpp"

namespace py = pybind11;
using namespace qkac;
using rootdata::CartanDatum;
using rootdata::RootVec;

namespace {

py::tuple key(const RootVec& g) {
  py::tuple t(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) t[i] = g[i];
  return t;
}

template <class Map>
py::dict to_dict(const Map& m) {
  py::dict d;
  for (const auto& [g, v] : m) d[key(g)] = v;
  return d;
}

py::dict dims(const CartanDatum& datum, int height) {
  borel::Borel b(datum, height);
  return to_dict(b.dim_series(height).terms());
}

py::dict multiplicities(const CartanDatum& datum, int height) {
  borel::Borel b(datum, height);
  charring::CharacterRing ring(b, height);
  return to_dict(ring.multiplicities());
}

py::dict weyl_kac(const CartanDatum& datum, std::vector<int> weight, int height) {
  borel::Borel b(datum, height);
  charring::CharacterRing ring(b, height);
  return to_dict(ring.weyl_kac(rootdata::Weight(std::move(weight))).terms());
}

py::list certificates(const CartanDatum& datum, int height) {
  borel::Borel b(datum, height);
  drinfeld::PairingEvaluator tau(datum);
  const auto report = drinfeld::verify_nondegenerate(b, tau, height, {});
  py::list out;
  for (const auto& row : report.rows) {
    py::dict r;
    r["gamma"] = key(row.gamma);
    r["dim"] = row.dim;
    if (row.certificate) {
      r["sign"] = row.certificate->sign;
      r["q_power"] = row.certificate->q_power;
      r["factors"] = row.certificate->factors;
    } else {
      r["error"] = row.certificate_error;
    }
    out.append(r);
  }
  return out;
}

std::string pairing_determinant(const CartanDatum& datum, std::vector<int> gamma) {
  RootVec g(std::move(gamma));
  borel::Borel b(datum, std::max(g.height(), 1));
  drinfeld::PairingEvaluator tau(datum);
  return drinfeld::pairing_matrix(b, tau, g).det.to_string();
}

py::tuple run_cli(std::vector<std::string> args) {
  std::vector<char*> argv;
  std::string prog = "qkac";
  argv.push_back(prog.data());
  for (auto& a : args) argv.push_back(a.data());
  // Real front end, streams captured.
  std::ostringstream out, err;
  int rc;
  {
    py::gil_scoped_release release;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    rc = cli::main_entry(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
  }
  return py::make_tuple(rc, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in quantized enveloping algebras of Kac-Moody type";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<InvalidInput> invalid(m, "InvalidInput", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInput& e) {
      py::set_error(invalid, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<CartanDatum>(m, "CartanDatum")
      .def(py::init<std::string, std::vector<std::vector<int>>, std::vector<int>>(),
           py::arg("name"), py::arg("cartan"), py::arg("symmetrizer"))
      .def_static("preset", &CartanDatum::preset)
      .def_static("from_json", &CartanDatum::from_json, py::arg("text"), py::arg("name") = "custom")
      .def("to_json", &CartanDatum::to_json)
      .def_property_readonly("name", &CartanDatum::name)
      .def_property_readonly("rank", &CartanDatum::rank)
      .def_property_readonly("cartan", &CartanDatum::cartan_matrix)
      .def_property_readonly("symmetrizer", &CartanDatum::symmetrizer)
      .def("__repr__", [](const CartanDatum& d) { return "<CartanDatum " + d.name() + ">"; });

  m.def("preset_names", &CartanDatum::preset_names);
  m.def("dims", &dims, py::arg("datum"), py::arg("height"));
  m.def("multiplicities", &multiplicities, py::arg("datum"), py::arg("height"));
  m.def("peterson_multiplicities", [](const CartanDatum& d, int h) {
    return to_dict(rootdata::peterson_multiplicities(d, h));
  }, py::arg("datum"), py::arg("height"));
  m.def("weyl_kac", &weyl_kac, py::arg("datum"), py::arg("weight"), py::arg("height"));
  m.def("certificates", &certificates, py::arg("datum"), py::arg("height"));
  m.def("pairing_determinant", &pairing_determinant, py::arg("datum"), py::arg("gamma"));
  m.def("run_cli", &run_cli, py::arg("args"),
        "Runs the command line front end; returns (exit_code, stdout, stderr).");
}
