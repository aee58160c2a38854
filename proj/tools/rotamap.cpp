// rotamap: analyze rotation groups of chiral and regular polytopes, build
// Petrie-Coxeter type maps and quotients, and generate sample inputs.
//
// Exit codes: 0 success, 1 mathematical verdict failure (not polytopal under
// --require-polytopal, not self-dual, a construction check failed, catalog
// mismatch), 2 operational error (parse, I/O, coset cap, bad arguments).

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotamap/catalog.hpp"
#include "rotamap/report.hpp"

namespace fs = std::filesystem;
using namespace rotamap;

namespace {

  constexpr int exit_ok          = 0;
  constexpr int exit_math        = 1;
  constexpr int exit_operational = 2;

  // I/O failure, reported with exit code 2.
  struct IoError : Error {
    using Error::Error;
  };

  std::string read_file(fs::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(fs::path const& path, std::string const& text) {
    if (path.has_parent_path()) {
      fs::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out || !(out << text)) {
      throw IoError("cannot write " + path.string());
    }
  }

  Presentation load(fs::path const& path) {
    try {
      return parse_presentation(read_file(path));
    } catch (ParseError const& e) {
      throw ParseError(e.line(), path.string() + ": " + e.what());
    }
  }

  void print_report(AnalysisReport const& r, bool json) {
    if (json) {
      std::cout << to_json(r).dump(2) << '\n';
    } else {
      std::cout << render_text(r);
    }
  }

  struct Options {
    bool        json          = false;
    std::size_t max_cosets    = default_coset_cap;
    bool        require_poly  = false;
    std::string file;
    std::string out;
    std::string out_dir = ".";
    std::size_t petrie  = 0;
    bool        central = false;
    bool        verify  = false;
    std::string name;
    std::string family;
    std::uint32_t b = 0, c = 0;
  };

  int cmd_analyze(Options const& o) {
    auto r = analyze(load(o.file), o.max_cosets);
    print_report(r, o.json);
    if (o.require_poly && !r.polytopal) {
      std::cerr << "rotamap: not polytopal\n";
      return exit_math;
    }
    return exit_ok;
  }

  fs::path default_output(fs::path const& input, std::string const& suffix) {
    auto out = input;
    out.replace_filename(input.stem().string() + suffix + ".pres");
    return out;
  }

  int finish_construction(Options const& o, ConstructionResult const& c,
                          fs::path const& out) {
    write_file(out, "# " + c.operation + "\n" + serialize(c.output));
    if (o.json) {
      nlohmann::json j = to_json(c.report);
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << c.operation << '\n'
                << "  input group order         " << c.base_order << '\n';
      if (c.extended_order) {
        std::cout << "  extended group order      " << c.extended_order << '\n';
      }
      std::cout << render_text(c.report);
    }
    std::cerr << "rotamap: wrote " << out.string() << '\n';
    return exit_ok;
  }

  int cmd_petrie_coxeter(Options const& o) {
    auto c   = construct_petrie_coxeter(load(o.file), o.max_cosets);
    auto out = o.out.empty() ? default_output(o.file, "-pc") : fs::path(o.out);
    return finish_construction(o, c, out);
  }

  int cmd_quotient(Options const& o) {
    if ((o.petrie == 0) == !o.central) {
      throw CLI::ValidationError("quotient", "give exactly one of --petrie K "
                                             "or --central");
    }
    auto c      = construct_quotient(load(o.file), o.petrie, o.max_cosets);
    auto suffix = o.central ? std::string("-central")
                            : "-petrie" + std::to_string(o.petrie);
    auto out    = o.out.empty() ? default_output(o.file, suffix) : fs::path(o.out);
    return finish_construction(o, c, out);
  }

  TorusKind parse_family(std::string const& s) {
    if (s == "4,4" || s == "44") {
      return TorusKind::t44;
    }
    if (s == "3,6" || s == "36") {
      return TorusKind::t36;
    }
    if (s == "6,3" || s == "63") {
      return TorusKind::t63;
    }
    throw CLI::ValidationError("family", "expected 4,4 or 3,6 or 6,3, got '" + s + "'");
  }

  void write_manifest(fs::path const& dir, nlohmann::json const& entries) {
    nlohmann::json m{{"schema", report_schema_version}, {"entries", entries}};
    write_file(dir / "manifest.json", m.dump(2) + "\n");
  }

  int cmd_generate_torus(Options const& o) {
    TorusFamily t{parse_family(o.family), o.b, o.c};
    if (t.b == 0 && t.c == 0) {
      throw CLI::ValidationError("torus", "(b,c) must not be (0,0)");
    }
    auto        oracle = lattice_torus_oracle(t);
    std::string k = t.kind == TorusKind::t44 ? "44" : t.kind == TorusKind::t36 ? "36" : "63";
    std::string file = "torus-" + k + "-" + std::to_string(t.b) + "-"
                       + std::to_string(t.c) + ".pres";
    fs::path dir(o.out_dir);
    write_file(dir / file, "# torus map " + t.name() + "\n"
                               + serialize(torus_presentation(t)));
    nlohmann::json expected{
        {"report",
         {{"group_order", oracle.order},
          {"f_vector", {oracle.f_vector.vertices, oracle.f_vector.edges,
                        oracle.f_vector.faces}}}}};
    write_manifest(dir, {{file, expected}});
    std::cout << (dir / file).string() << '\n';
    return exit_ok;
  }

  int cmd_generate_catalog(Options const& o) {
    auto entries = catalog();
    if (!o.name.empty()) {
      std::erase_if(entries, [&](auto const& e) { return e.name != o.name; });
      if (entries.empty()) {
        throw CLI::ValidationError("catalog", "unknown catalog entry '" + o.name + "'");
      }
    }
    if (o.verify) {
      bool all = true;
      for (auto const& e : entries) {
        auto r = verify(e, o.max_cosets);
        std::cout << (r.ok() ? "ok    " : "FAIL  ") << e.name << '\n';
        for (auto const& m : r.mismatches) {
          std::cout << "      " << m << '\n';
        }
        all = all && r.ok();
      }
      return all ? exit_ok : exit_math;
    }
    fs::path       dir(o.out_dir);
    nlohmann::json manifest = nlohmann::json::object();
    for (auto const& e : entries) {
      auto file = e.name + ".pres";
      write_file(dir / file, "# " + e.description + "\n" + serialize(e.presentation));
      manifest[file] = e.expected;
      std::cout << (dir / file).string() << '\n';
    }
    write_manifest(dir, manifest);
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotation groups of chiral and regular polytopes"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--max-cosets", o.max_cosets, "coset enumeration cap")
        ->check(CLI::PositiveNumber);
  };

  int (*action)(Options const&) = nullptr;

  auto* analyze = app.add_subcommand("analyze", "report invariants of a presentation");
  analyze->add_option("file", o.file, "presentation file")->required();
  analyze->add_flag("--require-polytopal", o.require_poly,
                    "exit 1 unless the intersection condition holds");
  common(analyze);
  analyze->callback([&] { action = cmd_analyze; });

  auto* construct = app.add_subcommand("construct", "build a map or a quotient");
  construct->require_subcommand(1);
  auto* pc = construct->add_subcommand("petrie-coxeter",
                                       "Petrie-Coxeter type map of a self-dual input");
  pc->add_option("file", o.file, "rank-4 presentation")->required();
  pc->add_option("--out", o.out, "output presentation file");
  common(pc);
  pc->callback([&] { action = cmd_petrie_coxeter; });
  auto* quot = construct->add_subcommand("quotient", "Petrie or central quotient");
  quot->add_option("file", o.file, "rank-4 presentation")->required();
  quot->add_option("--petrie", o.petrie, "add the relator (s1 s3)^K")
      ->check(CLI::PositiveNumber);
  quot->add_flag("--central", o.central, "factor out the centre");
  quot->add_option("--out", o.out, "output presentation file");
  common(quot);
  quot->callback([&] { action = cmd_quotient; });

  auto* generate = app.add_subcommand("generate", "write sample presentations");
  generate->require_subcommand(1);
  auto* torus = generate->add_subcommand("torus", "torus map {p,q}_(b,c)");
  torus->add_option("family", o.family, "4,4 | 3,6 | 6,3")->required();
  torus->add_option("b", o.b)->required();
  torus->add_option("c", o.c)->required();
  torus->add_option("--out-dir", o.out_dir, "output directory");
  torus->callback([&] { action = cmd_generate_torus; });
  auto* cat = generate->add_subcommand("catalog", "built-in examples");
  cat->add_option("name", o.name, "entry name (default: all)");
  cat->add_flag("--verify", o.verify, "recompute and compare expectations");
  cat->add_option("--out-dir", o.out_dir, "output directory");
  cat->add_option("--max-cosets", o.max_cosets, "coset enumeration cap")
      ->check(CLI::PositiveNumber);
  cat->callback([&] { action = cmd_generate_catalog; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    // --help and friends exit 0; real argument errors are operational.
    return app.exit(e) == 0 ? exit_ok : exit_operational;
  }

  try {
    return action(o);
  } catch (CLI::ValidationError const& e) {
    std::cerr << "rotamap: " << e.what() << '\n';
    return exit_operational;
  } catch (ParseError const& e) {
    std::cerr << "rotamap: " << e.what() << '\n';
    return exit_operational;
  } catch (CapExceeded const& e) {
    std::cerr << "rotamap: " << e.what() << '\n';
    return exit_operational;
  } catch (IoError const& e) {
    std::cerr << "rotamap: " << e.what() << '\n';
    return exit_operational;
  } catch (Error const& e) {
    std::cerr << "rotamap: " << e.what() << '\n';
    return exit_math;
  } catch (std::exception const& e) {
    std::cerr << "rotamap: " << e.what() << '\n';
    return exit_operational;
  }
}
