#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rhobind/factors.hpp"
#include "rhobind/families.hpp"
#include "rhobind/matrices.hpp"
#include "rhobind/spectral.hpp"
#include "rhobind/verifier.hpp"
#include "rhobind/version.hpp"

namespace {

using namespace rhobind;

std::vector<std::pair<std::string, Graph>> load_graphs(const std::vector<std::string>& g6s,
                                                       const std::string& path) {
  std::vector<std::pair<std::string, Graph>> out;
  for (const auto& s : g6s) out.emplace_back(s, parse_graph6(s));
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open graph file: " + path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      out.emplace_back(line, parse_graph6(line));
    }
  }
  if (out.empty()) throw DomainError("no input graphs (use --g6 or --file)");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write file: " + path);
  out << text;
}

std::string factor_str(const FactorSubgraph& f) {
  if (f.edges.empty()) return "{}";
  std::string s;
  for (auto [u, v] : f.edges) s += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adjacency spectral radius, binding numbers, and degree-prescribed factors"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::vector<std::string> g6s;
  std::string file, hbits, family, build, parts_csv, campaign;
  std::string out_json, out_csv;
  double tol = kDefaultPowerTol;
  int n = 0, s = 0, case_id = 0, p = 1, n_max = 7;
  long samples = 1000;
  std::uint64_t seed = 42;
  bool want_root = false, extended = false, stable = false;

  auto* rho = app.add_subcommand("rho", "largest adjacency eigenvalue of input graphs");
  rho->add_option("--g6", g6s, "graph6 string (repeatable)");
  rho->add_option("--file", file, "file with one graph6 string per line");
  rho->add_option("--tol", tol, "residual tolerance");

  auto* binding = app.add_subcommand("binding", "exact binding number with a witness set");
  binding->add_option("--g6", g6s, "graph6 string (repeatable)");
  binding->add_option("--file", file, "file with one graph6 string per line");

  auto* check = app.add_subcommand("check", "component-count criterion for even prescriptions");
  check->add_option("--g6", g6s, "graph6 string (repeatable)");
  check->add_option("--file", file, "file with one graph6 string per line");

  auto* hfactor = app.add_subcommand("hfactor", "search one prescribed factor");
  hfactor->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  hfactor->add_option("--g6", g6s, "graph6 string")->required();
  hfactor->add_option("--h", hbits, "per-vertex bits, '1' = degree 1, '0' = degree 0 or 2")
      ->required();

  auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
  charpoly->add_option("--g6", g6s, "graph6 string (full adjacency matrix)");
  charpoly->add_option("--family", family, "quotient family: B2 | B3 | B4 | Bstar");
  charpoly->add_option("--n", n, "order parameter");
  charpoly->add_option("--s", s, "clique parameter");
  charpoly->add_flag("--root", want_root, "also print the largest real root");

  auto* extremal = app.add_subcommand("extremal", "build family graphs and run case checks");
  extremal->add_option("--build", build, "G2 | Gstar | indep");
  extremal->add_option("--case", case_id, "1 (n >= 2s+5) or 2 (n = 2s+4)");
  extremal->add_option("--lemma-parts", parts_csv, "clique parts for the domination lemma");
  extremal->add_option("--n", n, "order");
  extremal->add_option("--s", s, "clique parameter");
  extremal->add_option("--p", p, "lemma parameter p");

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("--campaign", campaign, "thm11 | thm12-family | sharpness | search")
      ->required();
  verify->add_option("--n", n, "order (family/sharpness/search)");
  verify->add_option("--n-max", n_max, "max order (thm11)");
  verify->add_option("--samples", samples, "random samples (search)");
  verify->add_option("--seed", seed, "random seed (search)");
  verify->add_flag("--extended", extended, "also scan joins with extra parts (family)");
  verify->add_option("--json", out_json, "write the JSON report here");
  verify->add_option("--csv", out_csv, "write the CSV summary here");
  verify->add_flag("--stable-output", stable, "zero the runtime field for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::printf("# rhobind %s\n", kVersion);

    if (app.got_subcommand(rho)) {
      for (const auto& [txt, g] : load_graphs(g6s, file)) {
        const PerronData pd = spectral_radius(g, tol);
        std::printf("%s rho=%.12f residual=%.3g iterations=%ld\n", txt.c_str(), pd.radius,
                    pd.residual, pd.iterations);
      }
    } else if (app.got_subcommand(binding)) {
      for (const auto& [txt, g] : load_graphs(g6s, file)) {
        const BindingResult b = binding_number(g);
        std::printf("%s bind=%s witness=%s\n", txt.c_str(),
                    b.value ? b.value->str().c_str() : "inf", b.witness.str().c_str());
      }
    } else if (app.got_subcommand(check)) {
      for (const auto& [txt, g] : load_graphs(g6s, file)) {
        const DeficiencyResult d = lu_kano_deficiency(g);
        std::printf("%s deficiency=%d witness=%s all_even_realizable=%s\n", txt.c_str(),
                    d.max_deficiency, d.witness.str().c_str(),
                    d.max_deficiency <= 1 ? "true" : "false");
      }
    } else if (app.got_subcommand(hfactor)) {
      const Graph g = parse_graph6(g6s.at(0));
      const HAssignment h = HAssignment::from_bits(hbits);
      const auto f = find_h_factor(g, h);
      if (f) {
        const bool ok = verify_h_factor(g, h, *f);
        std::printf("%s h=%s factor=%s verified=%s\n", g6s.at(0).c_str(), hbits.c_str(),
                    factor_str(*f).c_str(), ok ? "true" : "false");
      } else {
        std::printf("%s h=%s factor=NONE\n", g6s.at(0).c_str(), hbits.c_str());
      }
    } else if (app.got_subcommand(charpoly)) {
      IntPolynomial poly;
      if (!g6s.empty()) {
        poly = char_poly_exact(adjacency_matrix(parse_graph6(g6s.at(0))));
      } else if (family == "B2") {
        poly = phi_B2(n, s);
      } else if (family == "B3") {
        poly = phi_B3(s);
      } else if (family == "B4") {
        poly = phi_B4(s);
      } else if (family == "Bstar") {
        poly = phi_Bstar(n);
      } else {
        throw DomainError("need --g6 or --family B2|B3|B4|Bstar");
      }
      std::printf("%s\n", poly.str().c_str());
      if (want_root) std::printf("largest_root=%.12f\n", largest_real_root(poly));
    } else if (app.got_subcommand(extremal)) {
      if (!build.empty()) {
        Graph g;
        if (build == "G2")
          g = build_G2(n, s);
        else if (build == "Gstar")
          g = build_Gstar(n);
        else if (build == "indep")
          g = build_independent_join(s);
        else
          throw DomainError("unknown --build (use G2 | Gstar | indep)");
        const PerronData pd = spectral_radius(g);
        std::printf("graph6=%s n=%d edges=%ld rho=%.12f\n", write_graph6(g).c_str(), g.order(),
                    g.edge_count(), pd.radius);
      } else if (case_id != 0) {
        const CaseCheckRecord rec = case_id == 1 ? check_case1(n, s) : check_case2(s);
        std::printf("%s\n%s\n", kCaseCsvHeader, rec.csv_row().c_str());
      } else if (!parts_csv.empty()) {
        const Lemma22Result lr = check_lemma22(s, parse_int_list(parts_csv), p);
        std::printf("n=%d lhs_rho=%.12f rhs_rho=%.12f margin=%.6g passed=%s\n", lr.n,
                    lr.lhs_radius, lr.rhs_radius, lr.margin, lr.passed ? "true" : "false");
      } else {
        throw DomainError("need one of --build, --case, --lemma-parts");
      }
    } else if (app.got_subcommand(verify)) {
      VerificationReport rep;
      if (campaign == "thm11")
        rep = verify_theorem11(n_max);
      else if (campaign == "thm12-family")
        rep = verify_theorem12_family(n == 0 ? 11 : n, extended);
      else if (campaign == "sharpness")
        rep = verify_sharpness(n == 0 ? 11 : n);
      else if (campaign == "search")
        rep = search_counterexample(n == 0 ? 11 : n, samples, seed);
      else
        throw DomainError("unknown campaign (thm11 | thm12-family | sharpness | search)");

      if (!out_json.empty()) write_text_file(out_json, rep.json_str(stable));
      if (!out_csv.empty()) write_text_file(out_csv, rep.csv_str(stable));
      std::printf("campaign=%s checked=%ld violations=%zu passed=%s runtime_s=%.2f\n",
                  rep.campaign.c_str(), rep.checked, rep.violations.size(),
                  rep.passed ? "true" : "false", rep.runtime_s);
      for (const Violation& v : rep.violations)
        std::printf("violation %s %s\n", v.graph6.c_str(), v.detail.c_str());
      return rep.passed ? 0 : 1;
    }
    return 0;
  } catch (const Graph6Error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "computation error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
