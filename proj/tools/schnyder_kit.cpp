#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sk/corpus.hpp"
#include "sk/drawing.hpp"
#include "sk/duality.hpp"
#include "sk/even.hpp"
#include "sk/io.hpp"
#include "sk/sampler.hpp"

using namespace sk;
using json = nlohmann::ordered_json;

namespace {

constexpr uint64_t default_seed = 20240601;

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (auto& v : vs) out.push_back({{"axiom", v.axiom}, {"where", v.where}, {"id", v.id}, {"detail", v.detail}});
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) std::cout << text;
  else write_file(path, text);
}

int env_jobs() {
  const char* s = std::getenv("SCHNYDER_KIT_JOBS");
  return s ? std::max(1, std::atoi(s)) : 1;
}

PlaneMap named_map(const std::string& name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "cube") return cube();
  if (name == "octahedron") return octahedron();
  if (name == "dodecahedron") return dodecahedron();
  if (name == "icosahedron") return icosahedron();
  if (name.rfind("cycle", 0) == 0) return cycle_map(std::stoi(name.substr(5)));
  throw Error("corpus", "UnknownMap", "no built-in map named " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schnyder decompositions, orthogonal drawings and the Baxter sampler"};
  app.require_subcommand(1);
  std::string in, out, map_path, orient_path, decomp_path, label_path, drawing_path;
  int d = 4;

  auto* validate = app.add_subcommand("validate", "validate a map and optional structures on it");
  std::string as = "angulation";
  int root = -1;
  validate->add_option("map", in, "map JSON")->required();
  validate->add_option("--d", d, "face or vertex degree");
  validate->add_option("--as", as, "angulation or regular")->check(CLI::IsMember({"angulation", "regular"}));
  validate->add_option("--root", root, "root vertex for --as regular (default: the file's root_vertex)");
  validate->add_option("--orientation", orient_path, "orientation JSON");
  validate->add_option("--decomposition", decomp_path, "decomposition JSON");
  validate->add_option("--labelling", label_path, "labelling JSON");
  validate->add_option("--drawing", drawing_path, "drawing JSON");

  auto* orient = app.add_subcommand("orient", "compute a d/(d-2)-orientation");
  bool even = false, minimal = false;
  orient->add_option("map", in, "map JSON")->required();
  orient->add_option("--d", d, "face degree")->required();
  orient->add_flag("--even", even, "even orientation (d even)");
  orient->add_flag("--minimal", minimal, "minimal element of the lattice");
  orient->add_option("-o,--out", out, "output file");

  auto* convert = app.add_subcommand("convert", "move between orientations, labellings and decompositions");
  std::string from, to;
  convert->add_option("input", in, "structure JSON")->required();
  convert->add_option("--map", map_path, "host map JSON")->required();
  convert->add_option("--d", d, "face degree");
  convert->add_option("--from", from)->required()->check(CLI::IsMember({"orientation", "labelling", "schnyder"}));
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"orientation", "labelling", "schnyder"}));
  convert->add_option("-o,--out", out, "output file");

  auto* dualize = app.add_subcommand("dualize", "dual map, or transport a decomposition to the dual");
  std::string dual_map_out;
  dualize->add_option("map", in, "d-angulation JSON")->required();
  dualize->add_option("--d", d, "face degree");
  dualize->add_option("--decomposition", decomp_path, "primal Schnyder decomposition JSON");
  dualize->add_option("--map-out", dual_map_out, "where to write the dual map when transporting");
  dualize->add_option("-o,--out", out, "output file");

  auto* lattice = app.add_subcommand("lattice", "the lattice of d/(d-2)-orientations");
  std::string action;
  std::size_t cap = 1000000;
  lattice->add_option("map", in, "map JSON")->required();
  lattice->add_option("--d", d, "face degree")->required();
  lattice->add_option("action", action, "count, enumerate or min")->required()
      ->check(CLI::IsMember({"count", "enumerate", "min"}));
  lattice->add_option("--cap", cap, "enumeration cap");
  lattice->add_option("-o,--out", out, "output file");

  auto* draw = app.add_subcommand("draw", "grid drawing of a rooted 4-regular map of mincut 4");
  std::string mode = "orthogonal", svg_path, json_path;
  bool compact = false, with_root = false;
  draw->add_option("map", in, "map JSON")->required();
  draw->add_option("--root", root, "root vertex")->required();
  draw->add_option("--mode", mode)->check(CLI::IsMember({"orthogonal", "straightline"}));
  draw->add_flag("--compact", compact, "apply the balanced reduction");
  draw->add_flag("--with-root", with_root, "route the root edges (orthogonal mode)");
  draw->add_option("--svg", svg_path, "SVG output");
  draw->add_option("--json", json_path, "drawing JSON output (stdout when neither is given)");

  auto* sample = app.add_subcommand("sample", "rejection sampler and concentration statistics");
  int n = 8, count = 100, jobs = env_jobs();
  uint64_t seed = default_seed;
  long long max_attempts = 100000000;
  std::string report, csv;
  sample->add_option("--n", n, "faces of the quadrangulation")->required();
  sample->add_option("--count", count, "accepted samples");
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--jobs", jobs, "worker threads (default SCHNYDER_KIT_JOBS or 1)");
  sample->add_option("--max-attempts", max_attempts, "rejection budget per sample");
  sample->add_option("--report", report, "stats JSON output (stdout otherwise)");
  sample->add_option("--csv", csv, "per-sample CSV output");

  auto* enumerate = app.add_subcommand("enumerate", "all (quadrangulation, even decomposition) pairs, one JSON per line");
  std::size_t pair_cap = 1000000;
  enumerate->add_option("--n", n, "faces of the quadrangulation")->required();
  enumerate->add_option("--cap", pair_cap, "enumeration cap");
  enumerate->add_option("-o,--out", out, "output file");

  auto* corpus = app.add_subcommand("corpus", "emit a built-in map");
  std::string name;
  corpus->add_option("name", name, "tetrahedron, cube, octahedron, dodecahedron, icosahedron or cycleN")->required();
  corpus->add_option("-o,--out", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      auto m = map_from_json(read_file(in));
      json rep{{"nv", m.nv}, {"ne", m.ne()}, {"nf", m.nf}, {"as", as}, {"d", d}};
      bool ok = true;
      if (as == "regular") {
        int r0 = root >= 0 ? root : m.root_vertex;
        auto r = as_regular(m, d, r0);
        rep["root"] = r0;
        rep["mincut_at_least_d"] = mincut_at_least(m, d);
        ok = ok && rep["mincut_at_least_d"].get<bool>();
        if (!decomp_path.empty()) {
          auto f = decomposition_from_json(read_file(decomp_path));
          auto vs = validate_regular_decomposition(r, f.s);
          rep["decomposition"] = violations_json(vs);
          ok = ok && vs.empty();
          if (vs.empty() && d == 4) rep["even"] = is_even_regular(r, f.s);
        }
        if (!label_path.empty()) {
          auto f = labelling_from_json(read_file(label_path), d);
          auto vs = validate_regular_labelling(r, f.l);
          rep["labelling"] = violations_json(vs);
          ok = ok && vs.empty();
        }
      } else {
        auto g = as_angulation(m, d);
        rep["girth"] = girth(m);
        ok = ok && rep["girth"].get<int>() >= d;
        if (!orient_path.empty()) {
          auto o = orientation_from_json(read_file(orient_path));
          auto msg = check_dd2(g, o);
          rep["orientation"] = msg;
          ok = ok && msg.empty();
          if (msg.empty()) rep["even"] = is_even(o);
        }
        if (!decomp_path.empty()) {
          auto f = decomposition_from_json(read_file(decomp_path));
          auto vs = f.reduced ? validate_reduced_schnyder(g, f.s) : validate_decomposition(g, f.s);
          rep["decomposition"] = violations_json(vs);
          ok = ok && vs.empty();
        }
        if (!label_path.empty()) {
          auto f = labelling_from_json(read_file(label_path), d);
          auto vs = validate_labelling(g, f.l);
          rep["labelling"] = violations_json(vs);
          ok = ok && vs.empty();
        }
      }
      if (!drawing_path.empty()) {
        auto gd = parse_drawing_json(read_file(drawing_path));
        rep["drawing_planar"] = check_planarity(gd);
        ok = ok && rep["drawing_planar"].get<bool>();
      }
      rep["valid"] = ok;
      std::cout << rep.dump(1) << "\n";
      return ok ? 0 : 1;
    }

    if (*orient) {
      auto g = as_angulation(map_from_json(read_file(in)), d);
      FracOrientation o;
      if (even) {
        if (d % 2) throw Error("orient", "OddD", "--even needs an even d");
        o = scaled(compute_p_p1_orientation(g), 2);
      } else {
        o = compute_dd2_orientation(g);
      }
      if (minimal) o = minimal_orientation(g, o);
      emit(orientation_to_json(o), out);
      return 0;
    }

    if (*convert) {
      auto g = as_angulation(map_from_json(read_file(map_path)), d);
      auto text = read_file(in);
      CornerLabelling l;
      if (from == "orientation") l = psi_inverse(g, orientation_from_json(text));
      else if (from == "labelling") l = labelling_from_json(text, d).l;
      else l = phi_inverse(g, decomposition_from_json(text).s);
      auto vs = validate_labelling(g, l);
      if (!vs.empty()) throw Error("convert", "InvalidLabelling", vs.front().axiom + " at " + vs.front().where +
                                                                    " " + std::to_string(vs.front().id));
      if (to == "orientation") emit(orientation_to_json(psi(g, l)), out);
      else if (to == "labelling") emit(labelling_to_json(l, "primal"), out);
      else emit(decomposition_to_json(phi(g, l), "primal"), out);
      return 0;
    }

    if (*dualize) {
      auto g = as_angulation(map_from_json(read_file(in)), d);
      auto r = dual_view(g);
      auto dual_text = map_to_json(r.map);
      if (decomp_path.empty()) {
        emit(dual_text, out);
        return 0;
      }
      auto f = decomposition_from_json(read_file(decomp_path));
      auto vs = validate_decomposition(g, f.s);
      if (!vs.empty()) throw Error("dualize", "InvalidDecomposition", vs.front().detail);
      if (!dual_map_out.empty()) write_file(dual_map_out, dual_text);
      emit(decomposition_to_json(chi(g, r, f.s), "dual"), out);
      return 0;
    }

    if (*lattice) {
      auto g = as_angulation(map_from_json(read_file(in)), d);
      if (action == "min") {
        emit(orientation_to_json(minimal_orientation(g)), out);
        return 0;
      }
      auto all = lattice_enumerate(g, {cap, 1});
      if (action == "count") {
        emit(std::to_string(all.size()) + "\n", out);
      } else {
        std::string text;
        for (auto& o : all) text += json{{"k", o.k}, {"values", o.value}}.dump() + "\n";
        emit(text, out);
      }
      return 0;
    }

    if (*draw) {
      auto r = as_regular(map_from_json(read_file(in)), 4, root);
      auto t = compute_even_regular_decomposition(r);
      auto p = place_by_equatorial_lines(r, t);
      auto gd = mode == "orthogonal" ? orthogonal_drawing(r, t, p) : straight_line_drawing(r, t, p);
      if (compact) gd = apply_reduction(gd, balanced_reduction_choice(classify_faces(r, t, p)));
      if (with_root) {
        if (mode != "orthogonal") throw Error("draw", "InvalidArgument", "--with-root needs orthogonal mode");
        gd = add_root(gd);
      }
      if (!svg_path.empty()) write_file(svg_path, emit_svg(gd));
      if (!json_path.empty()) write_file(json_path, emit_drawing_json(gd));
      if (svg_path.empty() && json_path.empty()) std::cout << emit_drawing_json(gd);
      return 0;
    }

    if (*sample) {
      auto st = concentration_experiment(n, count, seed, jobs, max_attempts);
      emit(stats_json(st), report);
      if (!csv.empty()) write_file(csv, stats_csv(st));
      return 0;
    }

    if (*enumerate) {
      std::string text;
      for_each_pair(n, [&](const SchnyderPair& p) {
        auto t = encode(p.q, p.s);
        json j{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}};
        j["map"] = json::parse(map_to_json(p.q.map));
        j["decomposition"] = json::parse(decomposition_to_json(p.s, "primal"));
        text += j.dump() + "\n";
      }, {pair_cap});
      emit(text, out);
      return 0;
    }

    if (*corpus) {
      emit(map_to_json(named_map(name)), out);
      return 0;
    }
  } catch (const Error& e) {
    std::cout << json{{"stage", e.stage()}, {"kind", e.kind()}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"stage", "cli"}, {"kind", "InternalError"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
