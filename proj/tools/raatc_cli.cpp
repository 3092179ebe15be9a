// Batch front end: every computation behind one binary with JSON on stdout,
// logs on stderr. Exit 0 success, 1 parse/validation, 2 internal
// inconsistency.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "raatc/clique.hpp"
#include "raatc/covering.hpp"
#include "raatc/f2_cohomology.hpp"
#include "raatc/graph.hpp"
#include "raatc/motion.hpp"
#include "raatc/polyhedral.hpp"
#include "raatc/projective.hpp"
#include "raatc/tc_poly.hpp"

using nlohmann::json;
using namespace raatc;

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t g_digest = 1469598103934665603ULL;  // FNV-1a accumulator

void digest_bytes(const std::string& data) {
  for (unsigned char c : data) {
    g_digest ^= c;
    g_digest *= 1099511628211ULL;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string data = ss.str();
  digest_bytes(data);
  return data;
}

// graph files: JSON object, or the compact "<n>;<u>-<v>,..." text format
Graph load_graph(const std::string& path) {
  std::string data = read_file(path);
  const size_t first = data.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && data[first] == '{')
    return Graph::from_json(json::parse(data));
  // strip whitespace for the text format
  std::string compact;
  for (char c : data)
    if (!isspace(static_cast<unsigned char>(c))) compact += c;
  return Graph::parse(compact);
}

SimplicialComplex load_complex(const std::string& path) {
  return SimplicialComplex::parse(json::parse(read_file(path)));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

json tuple_json(const CliqueTuple& tuple) {
  json cliques = json::array();
  for (VertexSet c : tuple.cliques) cliques.push_back(set_members(c));
  return cliques;
}

json tcpoly_json(const Graph& g) {
  const TcSequence seq = tc_sequence(g);
  const IntPolynomial p = poly_from_sequence(seq);
  const IdentityReport ids = check_identities(p, seq);
  return {{"P", p.to_string()},
          {"coeffs", p.to_json()},
          {"K", seq.slope},
          {"e", seq.e},
          {"tc_values", seq.values},
          {"identities",
           {{"value_at_one", ids.value_at_one},
            {"derivative_at_one", ids.derivative_at_one},
            {"degree_is_e", ids.degree_is_e}}}};
}

json projbounds_json(const ProjProfile& profile, const SimplicialComplex& k) {
  const BoundInterval bounds = tc_bounds(profile, k);
  const BoundInterval upper = norm_upper(profile, k);
  json per_factor = json::array();
  for (int n : profile.dims) {
    const TcPnResult tc = tc_pn(n, profile);
    per_factor.push_back({{"n", n},
                          {"zcl", zcl_pn(n)},
                          {"exact", tc.exact},
                          {"lower", tc.lower},
                          {"upper", tc.upper}});
  }
  json j = bounds.to_json();
  j["norm_upper"] = upper.to_json();
  j["per_factor"] = per_factor;
  return j;
}

json path_spec_json(const PathSpec& spec) {
  json factors = json::array();
  for (const FactorPath& fp : spec.factors)
    factors.push_back({{"start_rep", fp.start_rep},
                       {"perp", fp.perp},
                       {"angle", fp.angle},
                       {"t_move_start", fp.t_move_start},
                       {"t_move_end", fp.t_move_end}});
  return {{"factors", factors}};
}

// The fixture atlas: one entry per headline number, keyed for the golden
// diff. Everything here is deterministic.
json build_atlas() {
  json atlas;

  const std::vector<std::pair<std::string, Graph>> graphs = {
      {"edgeless3", edgeless_graph(3)},
      {"k1", complete_graph(1)},
      {"k2", complete_graph(2)},
      {"k3", complete_graph(3)},
      {"k4", complete_graph(4)},
      {"k5", complete_graph(5)},
      {"k6", complete_graph(6)},
      {"dc_2_1", disjoint_cliques(2, 1)},
      {"dc_3_2", disjoint_cliques(3, 2)},
      {"dc_4_4", disjoint_cliques(4, 4)},
      {"fig1", Graph::parse("3;1-2")},
      {"fig2", Graph::parse("4;0-1,1-2,1-3,2-3")},
      {"fig3",
       Graph::parse("8;0-1,0-2,0-3,0-4,0-5,0-6,1-3,1-5,2-4,2-6,3-4,3-5,"
                    "3-6,3-7,4-5,4-6,4-7,5-6,5-7,6-7")},
      {"o3", o_n(3)},
  };
  for (const auto& [name, g] : graphs)
    atlas["tcpoly/" + name] = tcpoly_json(g);
  atlas["tcpoly/fig1_double"] = tcpoly_json(double_graph(Graph::parse("3;1-2"), 0));
  atlas["tcpoly/fig2_double"] =
      tcpoly_json(double_graph(Graph::parse("4;0-1,1-2,1-3,2-3"), 0));
  atlas["tcpoly/fig3_double"] = tcpoly_json(double_graph(
      Graph::parse("8;0-1,0-2,0-3,0-4,0-5,0-6,1-3,1-5,2-4,2-6,3-4,3-5,"
                   "3-6,3-7,4-5,4-6,4-7,5-6,5-7,6-7"),
      7));

  for (int n = 2; n <= 6; ++n) {
    std::vector<int> zs;
    const Graph g = o_n(n);
    for (int r = 2; r <= n + 2; ++r) zs.push_back(z_r(g, r));
    atlas["zseq/o" + std::to_string(n)] = zs;
  }
  {
    const ZrResult res = z_r_with_witness(o_n(3), 3);
    atlas["zr/o3_r3"] = {{"z", res.value},
                         {"witness", tuple_json(res.witness)}};
  }

  const std::vector<std::tuple<std::string, std::string, int>> doubles = {
      {"fig1", "3;1-2", 0},
      {"fig2", "4;0-1,1-2,1-3,2-3", 0},
      {"fig3",
       "8;0-1,0-2,0-3,0-4,0-5,0-6,1-3,1-5,2-4,2-6,3-4,3-5,3-6,3-7,4-5,"
       "4-6,4-7,5-6,5-7,6-7",
       7},
  };
  for (const auto& [name, text, v] : doubles)
    atlas["double/" + name] = compare_double(Graph::parse(text), v, 5).to_json();

  const auto proj = [](std::vector<int> dims, const SimplicialComplex& k) {
    ProjProfile profile;
    profile.dims = std::move(dims);
    return projbounds_json(profile, k);
  };
  atlas["projbounds/bdry_222"] = proj({2, 2, 2}, SimplicialComplex::boundary_simplex(3));
  atlas["projbounds/bdry_444"] = proj({4, 4, 4}, SimplicialComplex::boundary_simplex(3));
  atlas["projbounds/wedge_5_3"] = proj({5, 3}, SimplicialComplex::points(2));
  atlas["projbounds/wedge_2_2"] = proj({2, 2}, SimplicialComplex::points(2));
  atlas["projbounds/wedge_7_7"] = proj({7, 7}, SimplicialComplex::points(2));
  atlas["projbounds/interval_11"] = proj({11}, SimplicialComplex::full_simplex(1));

  {
    json thresholds = json::array();
    for (int n = 1; n <= 16; ++n) {
      F2Context ctx({n}, SimplicialComplex::full_simplex(1));
      int top = 0;
      for (int p = 1; p <= 2 * n + 2; ++p)
        if (!zd_power(0, p, ctx).empty()) top = p;
      thresholds.push_back({{"n", n}, {"top_power", top}, {"zcl", zcl_pn(n)}});
    }
    atlas["cohom/zd_thresholds"] = thresholds;
  }

  const std::vector<std::tuple<std::string, SimplicialComplex, std::vector<int>>>
      audits = {
          {"point_d1", SimplicialComplex::full_simplex(1), {1}},
          {"bdry_111", SimplicialComplex::boundary_simplex(3), {1, 1, 1}},
          {"edge_33", SimplicialComplex::full_simplex(2), {3, 3}},
          {"point_d7", SimplicialComplex::full_simplex(1), {7}},
      };
  for (const auto& [name, k, dims] : audits) {
    const AuditReport report = audit(k, dims, 2000, 20260823ULL);
    atlas["audit/" + name] = {{"bound", report.bound},
                              {"max_total_z", report.max_total_z},
                              {"all_pass", report.all_pass()},
                              {"failures", report.failures.size()}};
  }
  return atlas;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topological-complexity toolkit for graph groups and "
               "polyhedral products"};
  app.require_subcommand(1);

  std::string graph_file, complex_file, profile_file, tc_table_file;
  std::string from_file, to_file, dims_text, s1_text, s2_text;
  std::string goldens_dir = "data/goldens";
  int r = 2, vertex = 0, rmax = 5, samples = 1000;
  std::uint64_t seed = 0;
  bool wedge = false, write_goldens = false;

  auto* zr_cmd = app.add_subcommand("zr", "z_r of a graph with witness");
  zr_cmd->add_option("-g,--graph", graph_file)->required();
  zr_cmd->add_option("-r", r)->required();

  auto* tcpoly_cmd =
      app.add_subcommand("tcpoly", "TC generating-function numerator");
  tcpoly_cmd->add_option("-g,--graph", graph_file)->required();

  auto* double_cmd =
      app.add_subcommand("double", "graph double comparison report");
  double_cmd->add_option("-g,--graph", graph_file)->required();
  double_cmd->add_option("-v,--vertex", vertex)->required();
  double_cmd->add_option("--rmax", rmax);

  auto* polyprod_cmd =
      app.add_subcommand("polyprod", "cat and TC_r of a polyhedral product");
  polyprod_cmd->add_option("-K,--complex", complex_file)->required();
  polyprod_cmd->add_option("--profile", profile_file)->required();
  polyprod_cmd->add_option("-r", r)->required();

  auto* projbounds_cmd =
      app.add_subcommand("projbounds", "TC bounds for projective products");
  projbounds_cmd->add_option("-K,--complex", complex_file);
  projbounds_cmd->add_option("--dims", dims_text)->required();
  projbounds_cmd->add_option("--tc-table", tc_table_file);
  projbounds_cmd->add_flag("--wedge", wedge,
                           "two-point complex (wedge of two factors)");

  auto* cohom_cmd =
      app.add_subcommand("cohomcheck", "mod-2 zero-divisor product check");
  cohom_cmd->add_option("-K,--complex", complex_file)->required();
  cohom_cmd->add_option("--dims", dims_text)->required();
  cohom_cmd->add_option("--s1", s1_text)->required();
  cohom_cmd->add_option("--s2", s2_text)->required();

  auto* plan_cmd = app.add_subcommand("plan", "explicit motion plan");
  plan_cmd->add_option("-K,--complex", complex_file)->required();
  plan_cmd->add_option("--from", from_file)->required();
  plan_cmd->add_option("--to", to_file)->required();

  auto* audit_cmd =
      app.add_subcommand("audit", "randomized motion-planner audit");
  audit_cmd->add_option("-K,--complex", complex_file)->required();
  audit_cmd->add_option("--dims", dims_text)->required();
  audit_cmd->add_option("-n,--samples", samples);
  audit_cmd->add_option("--seed", seed);

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "run the full atlas against goldens");
  fixtures_cmd->add_option("--goldens", goldens_dir);
  fixtures_cmd->add_flag("--write", write_goldens,
                         "regenerate the golden file");

  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) command += ' ';
    command += argv[i];
  }
  digest_bytes(command);

  const auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;
  json outputs;
  try {
    if (zr_cmd->parsed()) {
      const Graph g = load_graph(graph_file);
      if (r <= 32) {
        const ZrResult res = z_r_with_witness(g, r);
        outputs = {{"z", res.value}, {"witness", tuple_json(res.witness)}};
        if (auto shortcut = z_shortcut_check(g, r, res.witness))
          outputs["shortcut"] = *shortcut;
      } else {
        outputs = {{"z", z_r(g, r)}};
      }
    } else if (tcpoly_cmd->parsed()) {
      outputs = tcpoly_json(load_graph(graph_file));
    } else if (double_cmd->parsed()) {
      outputs = compare_double(load_graph(graph_file), vertex, rmax).to_json();
    } else if (polyprod_cmd->parsed()) {
      const SimplicialComplex k = load_complex(complex_file);
      const FactorProfile profile =
          FactorProfile::from_json(json::parse(read_file(profile_file)));
      const CatResult cat = cat_polyprod(profile, k);
      const TcResult tc = tc_polyprod(profile, k, r);
      outputs = {{"cat", {{"value", cat.value}, {"exact", cat.exact}}},
                 {"tc",
                  {{"exact", tc.exact},
                   {"value", tc.value},
                   {"lower", tc.lower},
                   {"upper", tc.upper}}}};
    } else if (projbounds_cmd->parsed()) {
      ProjProfile profile;
      profile.dims = parse_int_list(dims_text);
      if (!tc_table_file.empty()) {
        json merged = {{"dims", profile.dims},
                       {"tc_table", json::parse(read_file(tc_table_file))}};
        profile = ProjProfile::from_json(merged);
      }
      SimplicialComplex k;
      if (wedge) {
        if (profile.dims.size() != 2)
          throw std::invalid_argument("--wedge needs exactly two dims");
        k = SimplicialComplex::points(2);
      } else {
        if (complex_file.empty())
          throw std::invalid_argument("need -K or --wedge");
        k = load_complex(complex_file);
      }
      outputs = projbounds_json(profile, k);
    } else if (cohom_cmd->parsed()) {
      const SimplicialComplex k = load_complex(complex_file);
      F2Context ctx(parse_int_list(dims_text), k);
      auto face = [](const std::string& text) {
        FaceSet s = 0;
        if (text != "-")  // "-" denotes the empty face
          for (int v : parse_int_list(text)) s |= FaceSet{1} << (v - 1);
        return s;
      };
      const MixedLowerCheck check =
          verify_mixed_lower(ctx, face(s1_text), face(s2_text));
      outputs = {{"ok", check.ok},
                 {"element_nonzero", check.element_nonzero},
                 {"left", check.left},
                 {"right", check.right}};
    } else if (plan_cmd->parsed()) {
      const SimplicialComplex k = load_complex(complex_file);
      const Configuration c1 =
          Configuration::from_json(json::parse(read_file(from_file)), k);
      const Configuration c2 =
          Configuration::from_json(json::parse(read_file(to_file)), k);
      const PathSpec spec = plan(c1, c2);
      outputs = path_spec_json(spec);
      outputs["stratum"] = stratum(c1, c2).per_factor;
    } else if (audit_cmd->parsed()) {
      const SimplicialComplex k = load_complex(complex_file);
      const AuditReport report =
          audit(k, parse_int_list(dims_text), samples, seed);
      outputs = report.to_json();
      if (!report.all_pass()) exit_code = 1;
    } else if (fixtures_cmd->parsed()) {
      const json atlas = build_atlas();
      const std::string path = goldens_dir + "/atlas.json";
      if (write_goldens) {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write " + path);
        out << atlas.dump(2) << '\n';
        outputs = {{"written", path}, {"entries", atlas.size()}};
      } else {
        const json golden = json::parse(read_file(path));
        int mismatches = 0;
        for (auto it = golden.begin(); it != golden.end(); ++it) {
          if (!atlas.contains(it.key()) || atlas.at(it.key()) != it.value()) {
            ++mismatches;
            std::cerr << "mismatch: " << it.key() << '\n';
          }
        }
        for (auto it = atlas.begin(); it != atlas.end(); ++it) {
          if (!golden.contains(it.key())) {
            ++mismatches;
            std::cerr << "missing golden: " << it.key() << '\n';
          }
        }
        outputs = {{"entries", atlas.size()}, {"mismatches", mismatches}};
        if (mismatches > 0) exit_code = 1;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  const auto t1 = std::chrono::steady_clock::now();
  json envelope = {
      {"command", command},
      {"inputs_digest",
       (std::ostringstream() << std::hex << g_digest).str()},
      {"version", kVersion},
      {"wall_ms",
       std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()},
      {"outputs", outputs}};
  std::cout << envelope.dump(2) << std::endl;
  return exit_code;
}
