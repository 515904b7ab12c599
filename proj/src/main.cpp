#include <fstream>
#include <iostream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "clusterflip/hirota.hpp"
#include "clusterflip/json_io.hpp"
#include "clusterflip/stairpath.hpp"
#include "clusterflip/surface.hpp"

namespace {

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void emit_poly(const std::string& name, const cflip::LaurentPoly& p,
               bool as_json, std::ostream& out) {
  if (as_json) {
    nlohmann::ordered_json doc;
    doc["name"] = name;
    doc["value"] = cflip::poly_to_json(p);
    out << doc.dump(2) << "\n";
  } else {
    out << name << " = " << p.to_string() << "\n";
  }
}

void cmd_flip_square(int n, bool as_json, const std::string& out_path) {
  auto poly = cflip::quad_pattern(n);
  cflip::Seed seed = poly.initial_seed().run_layers(poly.flip(0, 2));

  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  if (as_json) {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["diagonal"] = nlohmann::ordered_json::array();
    for (const auto& id : poly.edge_points(1, 3)) {
      nlohmann::ordered_json entry;
      entry["id"] = id;
      entry["mutations"] = seed.mutation_count(id);
      entry["value"] = cflip::poly_to_json(seed.value(id));
      doc["diagonal"].push_back(entry);
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& id : poly.edge_points(1, 3)) {
      out << id << std::string(seed.mutation_count(id), '\'') << " = "
          << seed.value(id).to_string() << "\n";
    }
  }
}

void cmd_dump(const std::string& what, int n, const std::string& out_path) {
  cflip::Quiver q;
  if (what == "quad")
    q = cflip::quad_pattern(n).quiver();
  else if (what == "triangle")
    q = cflip::build_triangle_quiver(n);
  else
    throw std::runtime_error("unknown pattern: " + what);

  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  out << cflip::quiver_to_json(q).dump(2) << "\n";
}

void cmd_psi(int t, int k, int i, int j, bool as_json, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  std::string name = "psi_" + std::to_string(t) + "_" + std::to_string(k);
  emit_poly(name, cflip::psi(t, k, i, j), as_json, out);
}

void cmd_stairs(int n, int i, int j, const std::string& flavor, bool as_json,
                const std::string& out_path) {
  auto fl = flavor == "leftup" ? cflip::StairFlavor::LeftUp
                               : cflip::StairFlavor::RightDown;
  auto paths = cflip::enumerate_stairs(n, i, j, fl);

  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  if (as_json) {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["flavor"] = flavor;
    doc["paths"] = nlohmann::ordered_json::array();
    for (const auto& p : paths) {
      nlohmann::ordered_json entry;
      entry["lengths"] = p.lengths;
      entry["end"] = {p.end().i, p.end().j};
      entry["weight"] = cflip::poly_to_json(p.weight());
      doc["paths"].push_back(entry);
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& p : paths) {
      out << "(";
      for (std::size_t w = 0; w < p.lengths.size(); ++w)
        out << (w ? "," : "") << p.lengths[w];
      out << ") -> x[" << p.end().i << "," << p.end().j
          << "]  " << p.weight().to_string() << "\n";
    }
  }
}

void cmd_hirota_g(int a, int b, int i, int j, bool as_json,
                  const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  std::string name = "g_" + std::to_string(a) + "_" + std::to_string(b);
  emit_poly(name, cflip::hirota_g(a, b, i, j), as_json, out);
}

int cmd_hirota_verify(int amax, int bmax, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  bool all_ok = true;
  for (int a = 0; a <= amax; ++a)
    for (int b = 0; b <= bmax; ++b) {
      bool ok = cflip::verify_g_recurrence(a, b, 0, 0);
      all_ok = all_ok && ok;
      out << "g recurrence a=" << a << " b=" << b << ": "
          << (ok ? "ok" : "FAIL") << "\n";
    }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cluster-variable computations on subdivided polygons"};
  app.require_subcommand(1);

  int flip_n = 1;
  bool flip_json = false;
  std::string flip_out;
  auto* flip = app.add_subcommand(
      "flip-square", "flip the diagonal of an n-subdivided quadrilateral");
  flip->add_option("--n", flip_n, "subdivision depth")
      ->required()
      ->check(CLI::Range(1, 1 << 10));
  flip->add_flag("--json", flip_json, "emit JSON instead of text");
  flip->add_option("--out", flip_out, "write to a file instead of stdout");

  std::string dump_what = "quad";
  int dump_n = 1;
  std::string dump_out;
  auto* dump = app.add_subcommand("dump", "print a pattern quiver as JSON");
  dump->add_option("--what", dump_what, "quad or triangle")
      ->check(CLI::IsMember({"quad", "triangle"}));
  dump->add_option("--n", dump_n, "subdivision depth")
      ->required()
      ->check(CLI::Range(1, 1 << 10));
  dump->add_option("--out", dump_out, "write to a file instead of stdout");

  int psi_t = 1, psi_k = 1, psi_i = 0, psi_j = 0;
  bool psi_json = false;
  std::string psi_out;
  auto* psi_cmd = app.add_subcommand(
      "psi", "expansion of the grid recurrence value psi_{t,k}(x_{i,j})");
  psi_cmd->add_option("--t", psi_t, "coordinate along the new diagonal")
      ->required()
      ->check(CLI::Range(0, 64));
  psi_cmd->add_option("--k", psi_k, "square size parameter")
      ->required()
      ->check(CLI::Range(-1, 64));
  psi_cmd->add_option("--i", psi_i, "grid row");
  psi_cmd->add_option("--j", psi_j, "grid column");
  psi_cmd->add_flag("--json", psi_json, "emit JSON instead of text");
  psi_cmd->add_option("--out", psi_out, "write to a file instead of stdout");

  int st_n = 1, st_i = 0, st_j = 0;
  std::string st_flavor = "leftup";
  bool st_json = false;
  std::string st_out;
  auto* stairs = app.add_subcommand(
      "stairs", "enumerate the 2^n stair paths of x_{i,j} with their weights");
  stairs->add_option("--n", st_n, "total path length")
      ->required()
      ->check(CLI::Range(0, 20));
  stairs->add_option("--flavor", st_flavor, "leftup or rightdown")
      ->check(CLI::IsMember({"leftup", "rightdown"}));
  stairs->add_option("--i", st_i, "grid row");
  stairs->add_option("--j", st_j, "grid column");
  stairs->add_flag("--json", st_json, "emit JSON instead of text");
  stairs->add_option("--out", st_out, "write to a file instead of stdout");

  auto* hirota = app.add_subcommand(
      "hirota", "lattice-completed polynomial g and its recurrence");
  hirota->require_subcommand(1);

  int g_a = 1, g_b = 1, g_i = 0, g_j = 0;
  bool g_json = false;
  std::string g_out;
  auto* g_cmd = hirota->add_subcommand("g", "print g(a,b,i,j)");
  g_cmd->add_option("--a", g_a, "first lattice parameter")
      ->required()
      ->check(CLI::Range(0, 16));
  g_cmd->add_option("--b", g_b, "second lattice parameter")
      ->required()
      ->check(CLI::Range(0, 16));
  g_cmd->add_option("--i", g_i, "grid row");
  g_cmd->add_option("--j", g_j, "grid column");
  g_cmd->add_flag("--json", g_json, "emit JSON instead of text");
  g_cmd->add_option("--out", g_out, "write to a file instead of stdout");

  int v_amax = 2, v_bmax = 2;
  std::string v_out;
  auto* v_cmd = hirota->add_subcommand(
      "verify", "check the g recurrence for all a <= amax, b <= bmax");
  v_cmd->add_option("--amax", v_amax, "largest first parameter")
      ->check(CLI::Range(0, 8));
  v_cmd->add_option("--bmax", v_bmax, "largest second parameter")
      ->check(CLI::Range(0, 8));
  v_cmd->add_option("--out", v_out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (flip->parsed()) cmd_flip_square(flip_n, flip_json, flip_out);
    if (dump->parsed()) cmd_dump(dump_what, dump_n, dump_out);
    if (psi_cmd->parsed()) cmd_psi(psi_t, psi_k, psi_i, psi_j, psi_json, psi_out);
    if (stairs->parsed())
      cmd_stairs(st_n, st_i, st_j, st_flavor, st_json, st_out);
    if (g_cmd->parsed()) cmd_hirota_g(g_a, g_b, g_i, g_j, g_json, g_out);
    if (v_cmd->parsed()) return cmd_hirota_verify(v_amax, v_bmax, v_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
