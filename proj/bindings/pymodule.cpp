#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpark/catalan.hpp"
#include "qpark/coxeter.hpp"
#include "qpark/deodhar.hpp"
#include "qpark/flagoracle.hpp"
#include "qpark/hecke.hpp"
#include "qpark/homfly.hpp"
#include "qpark/noncrossing.hpp"
#include "qpark/verify.hpp"

namespace py = pybind11;
using namespace qpark;
using nlohmann::json;

namespace {

std::set<int> to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

json poly_payload(const LaurentPoly& p) {
  json j;
  j["polynomial"] = json::parse(p.json());
  j["value_at_1"] = p.value_at_one().str();
  j["pretty"] = p.str();
  return j;
}

std::string park_json(const std::string& type, long p, const std::vector<int>& J,
                      const std::string& sign) {
  auto sys = CoxeterSystem::build(type);
  ParkingSpec spec{sys, p, to_set(J), sign == "-" ? -1 : +1};
  json j = poly_payload(park_poly(spec));
  j["spec"] = {{"type", sys->name()}, {"p", p}, {"J", J}, {"sign", sign}};
  return j.dump();
}

std::string park_cell_sum_json(const std::string& type, long p, const std::vector<int>& J,
                               const std::string& sign) {
  auto sys = CoxeterSystem::build(type);
  std::vector<int> cword;
  for (int s = 1; s <= sys->rank(); ++s) cword.push_back(s);
  LaurentPoly poly =
      park_sum(sys.get(), to_set(J), sign == "-" ? -1 : +1, repeat_word(cword, static_cast<int>(p)));
  json j = poly_payload(poly);
  j["spec"] = {{"type", sys->name()}, {"p", p}, {"J", J}, {"sign", sign}, {"route", "deodhar"}};
  return j.dump();
}

std::string kirk_json(int n, long p, int k) {
  json j = poly_payload(kirk_poly(n, p, k));
  j["spec"] = {{"n", n}, {"p", p}, {"k", k}};
  return j.dump();
}

std::string deodhar_json(const std::string& type, const std::vector<int>& vword,
                         const std::vector<int>& word) {
  auto sys = CoxeterSystem::build(type);
  CoxeterElement v = sys->from_word(vword);
  json j;
  j["spec"] = {{"type", sys->name()}, {"v", v.reduced_word()}, {"word", word}};
  json arr = json::array();
  for (const auto& sw : distinguished_subwords(v, word)) arr.push_back(json::parse(sw.json()));
  j["subwords"] = arr;
  j["count"] = arr.size();
  j["minimal_count"] = minimal_subword_count(v, word);
  j["cell_polynomial"] = json::parse(cell_poly(v, word).json());
  return j.dump();
}

std::string homfly_json(int strands, const std::string& braid) {
  BraidWord b = BraidWord::parse(strands, braid);
  MarkovValue value = homfly(b);
  json j;
  j["spec"] = {{"strands", b.strands}, {"braid", b.letters}, {"writhe", b.writhe()}};
  j["polynomial"] = json::parse(value.num.json());
  j["z_denominator_power"] = value.z_pow;
  j["pretty"] = value.str();
  return j.dump();
}

std::string parking_table_json_impl() {
  ParkingTableReport rep = parking_table_a3p3();
  json j;
  json boxes = json::array(), parks = json::array(), kirks = json::array();
  for (const auto& [J, c] : rep.box_counts)
    boxes.push_back({{"J", std::vector<int>(J.begin(), J.end())}, {"count", c}});
  for (const auto& [J, c] : rep.park_values)
    parks.push_back({{"J", std::vector<int>(J.begin(), J.end())}, {"park", c.str()}});
  for (const auto& c : rep.kirkman) kirks.push_back(c.str());
  j["box_counts"] = boxes;
  j["park_values"] = parks;
  j["kirkman"] = kirks;
  j["pass"] = rep.pass;
  return j.dump();
}

std::string verify_json(const std::string& suite) {
  SuiteResult r = verify_suite(suite);
  json j;
  j["suite"] = r.name;
  j["pass"] = r.pass;
  j["lines"] = r.lines;
  j["seconds"] = r.seconds;
  return j.dump();
}

std::string sigma_json(const std::string& type, const std::vector<int>& J,
                       const std::string& sign) {
  auto sys = CoxeterSystem::build(type);
  return sigma_elt(sys.get(), to_set(J), sign == "-" ? -1 : +1).json();
}

std::string nc_json(int n, const std::vector<int>& cword_in) {
  std::vector<int> cword = cword_in;
  if (cword.empty())
    for (int s = 1; s <= n - 1; ++s) cword.push_back(s);
  auto list = nc_enumerate(n, cword);
  json j;
  j["spec"] = {{"n", n}, {"c", cword}};
  json arr = json::array();
  for (const auto& p : list)
    arr.push_back({{"word", p.element.reduced_word()},
                   {"blocks", p.blocks},
                   {"absolute_length", p.absolute_length}});
  j["noncrossing"] = arr;
  j["count"] = list.size();
  return j.dump();
}

bool oracle_verify_py(const std::string& what, int n, int q) {
  auto G = FqGroup::build(n, q);
  bool pass = true;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::set<int> J;
    for (int i = 0; i < n - 1; ++i)
      if (mask & (1u << i)) J.insert(i + 1);
    if (what == "main") {
      pass = pass && verify_main(*G, J).pass;
    } else if (what == "trace") {
      pass = pass && verify_trace(*G, J, n == 2 ? 6 : 3).pass;
    } else if (what == "cell") {
      std::vector<std::vector<int>> words = {{}, {1}};
      if (n >= 3) words.push_back({1, 2, 1});
      for (const auto& word : words) pass = pass && verify_cell(*G, J, word).pass;
    } else {
      fail(Errc::InvalidInput, "unknown oracle check: " + what);
    }
  }
  return pass;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Hecke traces, Deodhar cells, parking/Kirkman polynomials, HOMFLYPT "
            "slices, and finite-field flag counting";

  py::register_exception<Error>(m, "QparkError");

  m.def("park_json", &park_json, py::arg("type"), py::arg("p"), py::arg("J"),
        py::arg("sign") = "+");
  m.def("park_cell_sum_json", &park_cell_sum_json, py::arg("type"), py::arg("p"),
        py::arg("J"), py::arg("sign") = "+");
  m.def("kirk_json", &kirk_json, py::arg("n"), py::arg("p"), py::arg("k"));
  m.def("deodhar_json", &deodhar_json, py::arg("type"), py::arg("v"), py::arg("word"));
  m.def("homfly_json", &homfly_json, py::arg("strands"), py::arg("braid"));
  m.def("parking_table_json", &parking_table_json_impl);
  m.def("verify_json", &verify_json, py::arg("suite"));
  m.def("sigma_json", &sigma_json, py::arg("type"), py::arg("J"), py::arg("sign") = "-");
  m.def("nc_json", &nc_json, py::arg("n"), py::arg("c") = std::vector<int>{});
  m.def("oracle_verify", &oracle_verify_py, py::arg("what"), py::arg("n"), py::arg("q"));
  m.def("suite_names", &suite_names);
}
