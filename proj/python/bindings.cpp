// Thin Python bindings. Structured results cross the boundary as JSON text
// and are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gk/catalog.hpp"
#include "gk/cli.hpp"
#include "gk/error.hpp"
#include "gk/json.hpp"
#include "gk/prime_graph.hpp"
#include "gk/spectra.hpp"
#include "gk/verifier.hpp"

namespace py = pybind11;

namespace {
  gk::GroupId group(std::string const& name) {
    auto g = gk::GroupId::parse(name);
    g.validate();
    return gk::canonical(g);
  }

  std::vector<std::string> names(std::vector<gk::GroupId> const& groups) {
    std::vector<std::string> out;
    for (auto const& g : groups) {
      out.push_back(g.to_string());
    }
    return out;
  }
}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Prime graphs of finite simple groups";

  py::register_exception<gk::Error>(m, "GkError", PyExc_ValueError);

  m.def("canonical", [](std::string const& name) { return group(name).to_string(); });
  m.def("order", [](std::string const& name) { return gk::order_of(group(name)).to_string(); });
  m.def("order_value", [](std::string const& name) {
    return gk::order_of(group(name)).value().str();
  });
  m.def("spectrum", [](std::string const& name) {
    std::vector<std::string> out;
    for (auto const& x : gk::spectrum_of(group(name)).mu) {
      out.push_back(x.str());
    }
    return out;
  });
  m.def("graph_json", [](std::string const& name) { return gk::graph_summary(group(name)).dump(); });
  m.def("dot", [](std::string const& name) {
    auto g = group(name);
    return gk::to_dot(gk::build_gk(gk::order_of(g), gk::spectrum_of(g).mu), g.to_string());
  });
  m.def("enumerate_s_p", [](std::uint64_t p) { return names(gk::enumerate_S_p(p).groups); });
  m.def("reference_s37", [] { return names(gk::reference_S37()); });
  m.def("graphs_with_pattern",
        [](std::vector<std::uint64_t> const& primes, std::vector<unsigned> const& degrees) {
          auto                                                     fam = gk::enumerate_with_pattern(primes, degrees);
          std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> out;
          for (auto const& g : fam.graphs) {
            out.push_back(g.edges());
          }
          return out;
        });
  m.def("verify_json", [](std::string const& name) {
    return nlohmann::json(gk::verify_case(group(name))).dump();
  });
  m.def("table1", &gk::cli::table1_text);
}
