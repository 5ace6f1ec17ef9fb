// surfemb: command-line front end for the embedding library.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "surfemb/canon.hpp"
#include "surfemb/enumerate.hpp"
#include "surfemb/error.hpp"
#include "surfemb/graphs.hpp"
#include "surfemb/io.hpp"
#include "surfemb/pipelines.hpp"
#include "surfemb/polygon.hpp"
#include "surfemb/verify.hpp"

using namespace surfemb;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<NamedEmbedding> load(const std::string& path) {
  auto list = parse_embeddings(read_file(path));
  for (auto& x : list)
    if (x.name.empty()) x.name = path;
  return list;
}

std::string dart_text(Dart d) {
  return std::to_string(d.edge) + (d.end == End::first ? "+" : "-");
}

void print_class(std::ostream& out, const EmbeddingClass& c) {
  out << c.digest() << "  genus " << c.genus << "  faces";
  for (int f : c.face_degrees) out << ' ' << f;
  out << "  group " << c.group_order << "  " << to_string(c.chirality) << "\n";
}

void print_classes(std::ostream& out, const std::vector<EmbeddingClass>& classes) {
  const int orientable = count_orientable(classes);
  out << classes.size() << " classes: " << orientable << " orientable, "
      << classes.size() - static_cast<std::size_t>(orientable) << " non-orientable\n";
  out << "group orders " << format_group_orders(group_order_histogram(classes)) << "\n";
  for (const auto& c : classes) print_class(out, c);
}

DedupMode parse_mode(const std::string& s) {
  if (s == "iso") return DedupMode::iso;
  if (s == "equiv" || s == "equivalence") return DedupMode::equivalence;
  throw InvalidInput("unknown mode '" + s + "' (iso or equiv)");
}

void print_stage(std::ostream& out, const Stage& s) {
  out << s.name << ": " << s.candidates << " candidates, " << s.iso_classes.size()
      << " iso classes, " << s.equivalence_classes.size() << " equivalence classes ("
      << s.orientable() << " orientable + " << s.non_orientable() << " non-orientable)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotation systems, surface embeddings and their enumeration"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "Worker threads (default: SURFEMB_WORKERS or all cores)");

  std::string file;
  std::vector<std::string> files;

  auto* faces = app.add_subcommand("faces", "List the faces of an embedding");
  faces->add_option("file", file)->required();
  auto* genus = app.add_subcommand("genus", "Print vertex, edge, face counts and genus");
  genus->add_option("file", file)->required();
  auto* word = app.add_subcommand("word", "Boundary word of a one-face embedding");
  word->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "Deduplicate embeddings from files");
  std::string mode = "iso";
  classify->add_option("files", files)->required();
  classify->add_option("--mode", mode, "iso or equiv");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive enumeration over all rotation systems");
  std::string graph_spec;
  int genus_filter = -1;
  bool one_face = false;
  bool distribution = false;
  std::uint64_t budget = kDefaultBudget;
  enumerate->add_option("--graph", graph_spec, "Graph, e.g. K5, K3,3, theta:5, circulant:8:1,4")
      ->required();
  enumerate->add_option("--genus", genus_filter, "Keep only embeddings of this genus");
  enumerate->add_flag("--one-face", one_face, "Keep only one-face embeddings");
  enumerate->add_option("--mode", mode, "iso or equiv");
  enumerate->add_flag("--distribution", distribution, "Per-genus counts over the whole space");
  enumerate->add_option("--budget", budget, "Maximum number of rotation systems");

  auto* pipeline = app.add_subcommand("pipeline", "Guided construction from Theta_5 (k5 or k33)");
  std::string which;
  pipeline->add_option("target", which)->required()->check(CLI::IsMember({"k5", "k33"}));

  auto* theta = app.add_subcommand("theta", "One-face embeddings of Theta_m");
  int m = 5, theta_genus = 2;
  theta->add_option("--m", m)->required();
  theta->add_option("--genus", theta_genus)->required();
  theta->add_option("--mode", mode, "iso or equiv");
  theta->add_option("--budget", budget);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  bool include_slow = false;
  std::string tsv_path;
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_flag("--include-slow", include_slow);
  verify->add_option("--budget", budget);
  verify->add_option("--tsv", tsv_path, "Also write the machine-readable rows to this file");

  auto* convert = app.add_subcommand("convert", "Convert an appendix listing to the native format");
  std::string format;
  convert->add_option("format", format)->required()->check(CLI::IsMember({"appendixA", "appendixB"}));
  convert->add_option("file", file, "Listing file (default: the bundled copy)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*faces) {
      for (const auto& x : load(file)) {
        const FaceSet fs = trace_faces(x.embedding);
        std::cout << x.name << ": " << fs.stats.faces << " faces\n";
        for (std::size_t i = 0; i < fs.faces.size(); ++i) {
          std::cout << "  face " << i << " (" << fs.faces[i].length() << "):";
          for (Dart d : fs.faces[i].darts) std::cout << ' ' << dart_text(d);
          std::cout << "\n";
        }
      }
    } else if (*genus) {
      for (const auto& x : load(file)) {
        const SurfaceStats s = surface_stats(x.embedding);
        std::cout << x.name << ": n=" << s.vertices << " e=" << s.edges << " f=" << s.faces
                  << " genus=" << s.genus << "\n";
      }
    } else if (*word) {
      for (const auto& x : load(file)) {
        const PolygonWord w = boundary_word(x.embedding);
        const SurfaceType s = surface_from_word(w);
        std::cout << x.name << ": " << w.to_string() << "  ("
                  << (s.orientable ? "orientable genus " + std::to_string(s.genus())
                                   : "non-orientable, chi " + std::to_string(s.euler_characteristic))
                  << ", " << s.corners << " corners)\n";
      }
    } else if (*classify) {
      std::vector<Embedding> all;
      for (const auto& f : files)
        for (auto& x : load(f)) all.push_back(std::move(x.embedding));
      print_classes(std::cout, dedup(all, parse_mode(mode)));
    } else if (*enumerate) {
      const MultiGraph g = graphs::parse_spec(graph_spec);
      if (distribution) {
        const auto d = genus_distribution(g, budget, workers);
        std::cout << std::left << std::setw(7) << "genus" << std::setw(12) << "systems" << std::setw(7)
                  << "iso" << std::setw(7) << "equiv" << std::setw(12) << "orientable" << std::setw(16)
                  << "non-orientable" << "groups\n";
        for (const auto& r : d.records) {
          std::cout << std::setw(7) << r.genus << std::setw(12) << r.rotation_systems << std::setw(7)
                    << r.iso_classes << std::setw(7) << r.equivalence_classes << std::setw(12)
                    << r.orientable << std::setw(16) << r.non_orientable
                    << format_group_orders(r.group_orders) << "\n";
        }
        std::cout << "total " << d.total_equivalence_classes() << " equivalence classes\n";
      } else {
        EnumerationOptions o;
        if (genus_filter >= 0) o.genus = genus_filter;
        if (one_face) o.faces = 1;
        o.mode = parse_mode(mode);
        o.budget = budget;
        o.workers = workers;
        print_classes(std::cout, exhaustive_classes(g, o));
      }
    } else if (*pipeline) {
      if (which == "k5") {
        const K5Pipeline p = run_k5_pipeline();
        for (const Stage* s : {&p.theta5, &p.t123, &p.k4_plus, &p.w4, &p.k5_minus_edge, &p.k5})
          print_stage(std::cout, *s);
        std::cout << "K5-uv candidates: " << p.from_w4 << " from W4, " << p.from_k4_plus
                  << " from K4+\n";
        print_classes(std::cout, p.k5.equivalence_classes);
      } else {
        const K33Pipeline p = run_k33_pipeline();
        std::cout << p.completions.size() << " labelled completions, "
                  << p.orbit_representatives.size() << " up to the automorphisms fixing the labels\n";
        for (int t = 0; t < 3; ++t) {
          std::cout << "Theta5#" << t + 1 << ": central edge CD " << p.count(t, 3, "CD")
                    << ", central edge AB " << p.count(t, 3, "AB") << "\n";
        }
        print_stage(std::cout, p.k33);
        print_classes(std::cout, p.k33.equivalence_classes);
      }
    } else if (*theta) {
      print_classes(std::cout, theta_embeddings(m, theta_genus, parse_mode(mode), budget));
    } else if (*verify) {
      SuiteOptions o;
      o.include_slow = include_slow;
      o.budget = budget;
      o.workers = workers;
      const VerificationReport r = run_suite(suite, o);
      std::cout << r.table();
      if (!tsv_path.empty()) {
        std::ofstream out(tsv_path, std::ios::binary);
        if (!out) throw InvalidInput("cannot write " + tsv_path);
        out << r.tsv();
      }
      return r.passed() ? 0 : 1;
    } else if (*convert) {
      const std::string text = file.empty()
                                   ? std::string(format == "appendixA" ? appendix_a_text() : appendix_b_text())
                                   : read_file(file);
      std::cout << write_embeddings(format == "appendixA" ? parse_appendix_a(text)
                                                          : parse_appendix_b(text));
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
