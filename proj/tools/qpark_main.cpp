// qpark: exact Hecke-algebra traces, Deodhar subword enumeration, rational
// parking/Kirkman polynomials, HOMFLYPT slices, and finite-field flag
// counting, wired to verification sweeps of the identities they satisfy.

#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpark/catalan.hpp"
#include "qpark/coxeter.hpp"
#include "qpark/deodhar.hpp"
#include "qpark/flagoracle.hpp"
#include "qpark/hecke.hpp"
#include "qpark/homfly.hpp"
#include "qpark/noncrossing.hpp"
#include "qpark/symfunc.hpp"
#include "qpark/verify.hpp"

using namespace qpark;
using nlohmann::json;

namespace {

std::set<int> parse_subset(const std::string& text) {
  std::set<int> J;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) J.insert(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return J;
}

json subset_json(const std::set<int>& J) { return json(std::vector<int>(J.begin(), J.end())); }

json poly_json(const LaurentPoly& p) { return json::parse(p.json()); }

void emit(const json& j, const std::string& format) {
  if (format == "pretty")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

void emit_poly(const json& payload, const LaurentPoly& poly, const std::string& format) {
  if (format == "csv") {
    std::cout << "doubled_exponent,coefficient\n";
    for (const auto& [e, c] : poly.terms()) std::cout << e << "," << c.str() << "\n";
    return;
  }
  if (format == "pretty") {
    std::cout << payload.dump(2) << "\n";
    std::cout << "polynomial: " << poly.str() << "\n";
    return;
  }
  emit(payload, format);
}

int run_verify(const std::string& suite, int n, int q, const std::string& type, long p) {
  // restricted runs when parameters are supplied
  if (suite == "main" || suite == "cell" || suite == "trace") {
    if (n > 0 && q > 0) {
      auto G = FqGroup::build(n, q);
      bool pass = true;
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> J;
        for (int i = 0; i < n - 1; ++i)
          if (mask & (1u << i)) J.insert(i + 1);
        OracleReport rep;
        if (suite == "main") rep = verify_main(*G, J);
        else if (suite == "trace") rep = verify_trace(*G, J, n == 2 ? 6 : 3);
        else {
          std::vector<std::vector<int>> words = {{}};
          std::vector<std::vector<int>> layer = {{}};
          const int cap = n == 2 ? 6 : 3;
          for (int len = 1; len <= cap; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : layer)
              for (int s = 1; s <= n - 1; ++s) {
                auto w2 = w;
                w2.push_back(s);
                next.push_back(w2);
                words.push_back(w2);
              }
            layer = std::move(next);
          }
          for (const auto& word : words) {
            auto one = verify_cell(*G, J, word);
            rep.pass = rep.pass && one.pass;
          }
        }
        for (const auto& line : rep.lines) std::printf("J=%s %s\n", subset_str(J).c_str(), line.c_str());
        pass = pass && rep.pass;
      }
      std::printf("%s\n", pass ? "PASS" : "FAIL");
      return pass ? 0 : 1;
    }
  }
  if (suite == "parking" && !type.empty() && p > 0) {
    auto sys = CoxeterSystem::build(type);
    std::vector<int> cword;
    for (int s = 1; s <= sys->rank(); ++s) cword.push_back(s);
    auto word = repeat_word(cword, static_cast<int>(p));
    bool pass = true;
    for (unsigned mask = 0; mask < (1u << sys->rank()); ++mask) {
      std::set<int> J;
      for (int i = 0; i < sys->rank(); ++i)
        if (mask & (1u << i)) J.insert(i + 1);
      for (int sign : {-1, +1}) {
        ParkingSpec spec{sys, p, J, sign};
        LaurentPoly prod = park_poly(spec);
        LaurentPoly cells = park_sum(sys.get(), J, sign, word);
        bool ok = prod == cells;
        pass = pass && ok;
        std::printf("[%s] J=%s sign=%c: %s\n", ok ? "ok" : "FAIL", subset_str(J).c_str(),
                    sign > 0 ? '+' : '-', prod.str().c_str());
      }
    }
    std::printf("%s\n", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
  }
  SuiteResult r = verify_suite(suite);
  for (const auto& line : r.lines) std::printf("%s\n", line.c_str());
  std::printf("%s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.seconds);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hecke traces, Deodhar cells, parking/Kirkman polynomials, HOMFLYPT "
               "slices, and finite-field flag counting"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format: json|csv|pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  // table-a3p3
  auto* fig = app.add_subcommand("table-a3p3",
                                 "reproduce the S_4, c=(1,2,3), p=3 table of box counts, "
                                 "park values, and kirkman numbers");

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification sweep");
  std::string suite;
  int ver_n = 0, ver_q = 0;
  long ver_p = 0;
  std::string ver_type;
  ver->add_option("suite", suite, "one of: main cell trace parking jm lascoux kirkman noncrossing homfly cellsums properties")
      ->required();
  ver->add_option("--n", ver_n, "matrix size (main/cell/trace)");
  ver->add_option("--q", ver_q, "field size (main/cell/trace)");
  ver->add_option("--type", ver_type, "Coxeter type, e.g. A3, B2, I2:5 (parking)");
  ver->add_option("--p", ver_p, "parameter p (parking)");

  // park
  auto* park = app.add_subcommand("park", "rational parabolic parking polynomial");
  std::string park_type = "A3", park_J, park_sign = "+";
  long park_p = 3;
  park->add_option("--type", park_type, "Coxeter type, e.g. A3, B2, I2:7, G2");
  park->add_option("--p", park_p, "p coprime to the Coxeter number")->required();
  park->add_option("--J", park_J, "generator indices, e.g. 1,3");
  park->add_option("--sign", park_sign, "+ or -")->check(CLI::IsMember({"+", "-"}));

  // kirk
  auto* kirk = app.add_subcommand("kirk", "rational Kirkman polynomial of (S_n, p)");
  int kirk_n = 4, kirk_k = -1;
  long kirk_p = 5;
  kirk->add_option("--n", kirk_n)->required();
  kirk->add_option("--p", kirk_p)->required();
  kirk->add_option("--k", kirk_k, "exterior degree; all of 0..n-1 when omitted");

  // deodhar
  auto* deo = app.add_subcommand("deodhar", "enumerate v-distinguished subwords");
  std::string deo_type = "A2", deo_v = "e";
  std::vector<int> deo_word;
  deo->add_option("--type", deo_type);
  deo->add_option("--v", deo_v, "reduced word for v, e.g. '1 2', or e");
  deo->add_option("--word", deo_word, "base word letters")->expected(-1);

  // homfly
  auto* hom = app.add_subcommand("homfly", "reduced HOMFLYPT polynomial of a braid closure");
  int hom_strands = 2;
  std::string hom_braid;
  hom->add_option("--strands", hom_strands)->required();
  hom->add_option("--braid", hom_braid, "letters, e.g. '1 1 1' or '1 -2 1'")->required();

  // norm
  auto* norm = app.add_subcommand("norm", "relative norm central elements Sigma_{J,±}");
  std::string norm_type = "A2", norm_J;
  norm->add_option("--type", norm_type);
  norm->add_option("--J", norm_J, "generator indices, e.g. 1,2");

  // nc
  auto* nc = app.add_subcommand("nc", "noncrossing partitions, parking functions, faces");
  std::string nc_action;
  int nc_n = 3, nc_k = 0;
  std::vector<int> nc_c;
  nc->add_option("action", nc_action, "enumerate|parking|faces|verify")->required();
  nc->add_option("--n", nc_n)->required();
  nc->add_option("--c", nc_c, "Coxeter word; defaults to 1 2 .. n-1")->expected(-1);
  nc->add_option("--k", nc_k, "face dimension (faces)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "finite-field verification with count tables");
  auto* over = oracle->add_subcommand("verify", "verify main|cell|trace over GL_n(F_q)");
  std::string oracle_what;
  int oracle_n = 2, oracle_q = 2;
  std::string oracle_J;
  std::vector<int> oracle_word;
  over->add_option("what", oracle_what, "main|cell|trace")->required();
  over->add_option("--n", oracle_n)->required();
  over->add_option("--q", oracle_q)->required();
  over->add_option("--J", oracle_J, "generator indices");
  over->add_option("--word", oracle_word, "word for cell counts")->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fig) {
      ParkingTableReport rep = parking_table_a3p3();
      json j;
      j["command"] = "table-a3p3";
      json boxes = json::array(), parks = json::array(), kirks = json::array();
      for (const auto& [J, c] : rep.box_counts) boxes.push_back({{"J", subset_json(J)}, {"count", c}});
      for (const auto& [J, c] : rep.park_values)
        parks.push_back({{"J", subset_json(J)}, {"park", c.str()}});
      for (const auto& c : rep.kirkman) kirks.push_back(c.str());
      j["box_counts"] = boxes;
      j["park_values"] = parks;
      j["kirkman"] = kirks;
      j["pass"] = rep.pass;
      j["seconds"] = rep.seconds;
      emit(j, format);
      return rep.pass ? 0 : 1;
    }
    if (*ver) return run_verify(suite, ver_n, ver_q, ver_type, ver_p);
    if (*park) {
      auto sys = CoxeterSystem::build(park_type);
      ParkingSpec spec{sys, park_p, parse_subset(park_J), park_sign == "+" ? +1 : -1};
      LaurentPoly poly = park_poly(spec);
      json j;
      j["spec"] = {{"type", sys->name()},
                   {"p", park_p},
                   {"J", subset_json(spec.J)},
                   {"sign", park_sign}};
      j["polynomial"] = poly_json(poly);
      j["value_at_1"] = poly.value_at_one().str();
      emit_poly(j, poly, format);
      return 0;
    }
    if (*kirk) {
      json j;
      j["spec"] = {{"n", kirk_n}, {"p", kirk_p}};
      if (kirk_k >= 0) {
        LaurentPoly poly = kirk_poly(kirk_n, kirk_p, kirk_k);
        j["spec"]["k"] = kirk_k;
        j["polynomial"] = poly_json(poly);
        j["value_at_1"] = poly.value_at_one().str();
        emit_poly(j, poly, format);
      } else {
        json arr = json::array();
        for (int k = 0; k <= kirk_n - 1; ++k) {
          LaurentPoly poly = kirk_poly(kirk_n, kirk_p, k);
          arr.push_back({{"k", k},
                         {"polynomial", poly_json(poly)},
                         {"value_at_1", poly.value_at_one().str()}});
        }
        j["polynomials"] = arr;
        emit(j, format);
      }
      return 0;
    }
    if (*deo) {
      auto sys = CoxeterSystem::build(deo_type);
      CoxeterElement v = sys->identity();
      if (deo_v != "e") {
        std::vector<int> vword;
        std::string cur;
        for (char ch : deo_v + " ") {
          if (ch == ' ' || ch == ',') {
            if (!cur.empty()) vword.push_back(std::stoi(cur));
            cur.clear();
          } else {
            cur += ch;
          }
        }
        v = sys->from_word(vword);
      }
      auto subwords = distinguished_subwords(v, deo_word);
      json j;
      j["spec"] = {{"type", sys->name()}, {"v", v.reduced_word()}, {"word", deo_word}};
      json arr = json::array();
      for (const auto& sw : subwords) arr.push_back(json::parse(sw.json()));
      j["subwords"] = arr;
      j["count"] = subwords.size();
      j["cell_polynomial"] = poly_json(cell_poly(v, deo_word));
      emit(j, format);
      return 0;
    }
    if (*hom) {
      BraidWord b = BraidWord::parse(hom_strands, hom_braid);
      MarkovValue value = homfly(b);
      json j;
      j["spec"] = {{"strands", b.strands}, {"braid", b.letters}, {"writhe", b.writhe()}};
      j["polynomial"] = json::parse(value.num.json());
      j["z_denominator_power"] = value.z_pow;
      j["pretty"] = value.str();
      emit(j, format);
      return 0;
    }
    if (*norm) {
      auto sys = CoxeterSystem::build(norm_type);
      std::set<int> J = parse_subset(norm_J);
      json j;
      j["spec"] = {{"type", sys->name()}, {"J", subset_json(J)}};
      j["sigma_minus"] = json::parse(sigma_elt(sys.get(), J, -1).json());
      j["sigma_plus"] = json::parse(sigma_elt(sys.get(), J, +1).json());
      emit(j, format);
      return 0;
    }
    if (*nc) {
      if (nc_c.empty())
        for (int s = 1; s <= nc_n - 1; ++s) nc_c.push_back(s);
      json j;
      j["spec"] = {{"n", nc_n}, {"c", nc_c}};
      if (nc_action == "enumerate") {
        auto list = nc_enumerate(nc_n, nc_c);
        json arr = json::array();
        for (const auto& p : list)
          arr.push_back({{"word", p.element.reduced_word()},
                         {"blocks", p.blocks},
                         {"absolute_length", p.absolute_length}});
        j["noncrossing"] = arr;
        j["count"] = list.size();
      } else if (nc_action == "parking") {
        auto list = nc_parking_functions(nc_n, nc_c);
        json arr = json::array();
        for (const auto& p : list)
          arr.push_back({{"pi", p.nc_index}, {"rep", p.rep.reduced_word()}});
        j["parking_functions"] = arr;
        j["count"] = list.size();
      } else if (nc_action == "faces") {
        auto faces = nc_asso_faces(nc_n, nc_c, nc_k);
        j["k"] = nc_k;
        j["faces"] = faces;
        j["count"] = faces.size();
      } else if (nc_action == "verify") {
        auto rep = nc_verify_prop(nc_n, nc_c);
        j["pass"] = rep.pass;
        j["mismatches"] = rep.lines;
        emit(j, format);
        return rep.pass ? 0 : 1;
      } else {
        std::fprintf(stderr, "unknown nc action: %s\n", nc_action.c_str());
        return 2;
      }
      emit(j, format);
      return 0;
    }
    if (*oracle) {
      auto G = FqGroup::build(oracle_n, oracle_q);
      std::set<int> J = parse_subset(oracle_J);
      std::vector<std::set<int>> subsets;
      if (oracle_J.empty()) {
        for (unsigned mask = 0; mask < (1u << (oracle_n - 1)); ++mask) {
          std::set<int> JJ;
          for (int i = 0; i < oracle_n - 1; ++i)
            if (mask & (1u << i)) JJ.insert(i + 1);
          subsets.push_back(JJ);
        }
      } else {
        subsets.push_back(J);
      }
      json j;
      j["group"] = {{"n", oracle_n}, {"q", oracle_q}, {"order", G->order()}};
      bool pass = true;
      json reports = json::array();
      for (const auto& JJ : subsets) {
        OracleReport rep;
        json tables;
        if (oracle_what == "main") {
          rep = verify_main(*G, JJ);
          for (int sign : {-1, +1}) {
            json table = json::array();
            for (const auto& [w, c] : G->mult_pushforward(JJ, sign))
              table.push_back({{"w", CoxeterElement(G->weyl(), w).reduced_word()},
                               {"count", c.str()}});
            tables[sign < 0 ? "minus" : "plus"] = table;
          }
        } else if (oracle_what == "cell") {
          rep = verify_cell(*G, JJ, oracle_word);
          for (int sign : {-1, +1})
            tables[sign < 0 ? "minus" : "plus"] =
                G->steinberg_count(JJ, sign, oracle_word).str();
        } else if (oracle_what == "trace") {
          rep = verify_trace(*G, JJ, oracle_n == 2 ? 6 : 3);
          json table = json::array();
          for (const auto& w : G->weyl()->elements())
            table.push_back({{"w", w.reduced_word()},
                             {"minus", rat_str(G->tau_g(JJ, -1, w))},
                             {"plus", rat_str(G->tau_g(JJ, +1, w))}});
          tables["bitrace"] = table;
        } else {
          std::fprintf(stderr, "unknown oracle check: %s\n", oracle_what.c_str());
          return 2;
        }
        pass = pass && rep.pass;
        reports.push_back({{"J", subset_json(JJ)},
                           {"pass", rep.pass},
                           {"detail", rep.lines},
                           {"tables", tables}});
      }
      j["reports"] = reports;
      j["pass"] = pass;
      emit(j, format);
      return pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
