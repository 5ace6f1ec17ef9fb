#include "surfemb/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "surfemb/graphs.hpp"
#include "surfemb/io.hpp"
#include "surfemb/pipelines.hpp"
#include "surfemb/polygon.hpp"

namespace surfemb {

bool VerificationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string VerificationReport::table() const {
  std::size_t wi = 4, we = 8, wc = 8;
  for (const auto& r : rows) {
    wi = std::max(wi, r.item.size());
    we = std::max(we, r.expected.size());
    wc = std::max(wc, r.computed.size());
  }
  std::ostringstream out;
  out << "suite " << suite << "\n";
  out << std::left << std::setw(static_cast<int>(wi)) << "item" << "  "
      << std::setw(static_cast<int>(we)) << "expected" << "  " << std::setw(static_cast<int>(wc))
      << "computed" << "  status\n";
  for (const auto& r : rows) {
    out << std::setw(static_cast<int>(wi)) << r.item << "  " << std::setw(static_cast<int>(we))
        << r.expected << "  " << std::setw(static_cast<int>(wc)) << r.computed << "  "
        << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; });
  out << (failed ? "FAILED" : "PASSED") << " (" << rows.size() - static_cast<std::size_t>(failed)
      << "/" << rows.size() << " rows)\n";
  return out.str();
}

std::string VerificationReport::tsv() const {
  std::string out;
  for (const auto& r : rows)
    out += r.item + "\t" + r.expected + "\t" + r.computed + "\t" + (r.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "appendixA", "appendixB",
                                              "k33", "torus-table", "theta-question"};
  return names;
}

std::string format_group_orders(const std::map<std::uint64_t, int>& histogram) {
  std::string out;
  for (auto it = histogram.rbegin(); it != histogram.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += std::to_string(it->first) + "^" + std::to_string(it->second);
  }
  return out;
}

const std::vector<TorusRow>& torus_table_rows() {
  static const std::vector<TorusRow> rows{
      {"K4", "K4", 2, 0, 2, "4^1,3^1", false},
      {"K5", "K5", 6, 3, 3, "20^1,4^1,2^3,1^1", false},
      {"K3,3", "K3,3", 2, 0, 2, "18^1,2^1", false},
      {"3-prism", "prism:3", 5, 0, 5, "6^1,2^2,1^2", false},
      {"octahedron", "octahedron", 17, 4, 13, "12^1,6^1,4^3,3^1,2^6,1^5", false},
      {"K6", "K6", 4, 2, 2, "6^2,2^1,1^1", true},
      {"K3,4", "K3,4", 3, 0, 3, "4^1,3^1,2^1", false},
      {"C7(2)", "circulant:7:1,2", 28, 23, 5, "14^1,2^14,1^13", false},
      {"K3,5", "K3,5", 1, 0, 1, "3^1", false},
      {"cube", "cube", 5, 0, 5, "24^1,8^2,3^1,2^1", false},
      {"C8+", "circulant:8:1,4", 5, 1, 4, "2^4,1^1", false},
      {"K4,4", "K4,4", 2, 0, 2, "32^1,16^1", false},
      {"C8(2)", "circulant:8:1,2", 37, 20, 17, "16^1,4^4,2^13,1^19", false},
      {"complement(cube)", "complement:cube", 8, 4, 4, "4^2,2^5,1^1", false},
      {"Petersen", "petersen", 1, 0, 1, "3^1", false},
  };
  return rows;
}

namespace {

class Builder {
 public:
  explicit Builder(std::string suite) { report_.suite = std::move(suite); }

  template <class T>
  void check(std::string item, const T& expected, const T& computed) {
    std::ostringstream e, c;
    e << expected;
    c << computed;
    report_.rows.push_back({std::move(item), e.str(), c.str(), expected == computed});
  }
  void check_text(std::string item, std::string expected, std::string computed) {
    const bool pass = expected == computed;
    report_.rows.push_back({std::move(item), std::move(expected), std::move(computed), pass});
  }
  void check_bool(std::string item, bool ok) {
    report_.rows.push_back({std::move(item), "true", ok ? "true" : "false", ok});
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

std::string split_counts(int orientable, int non_orientable) {
  return std::to_string(orientable) + "+" + std::to_string(non_orientable);
}

std::string stage_split(const Stage& s) { return split_counts(s.orientable(), s.non_orientable()); }

std::set<std::string> keys_of(const std::vector<EmbeddingClass>& classes) {
  std::set<std::string> out;
  for (const auto& c : classes) out.insert(c.canonical_key);
  return out;
}

std::string group_list(const std::vector<EmbeddingClass>& classes) {
  std::vector<std::uint64_t> g;
  for (const auto& c : classes) g.push_back(c.group_order);
  std::sort(g.begin(), g.end());
  std::string out;
  for (auto x : g) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::string distribution_text(const GenusDistribution& d) {
  std::string out = "{";
  for (const auto& r : d.records) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(r.genus) + ": " + std::to_string(r.equivalence_classes);
  }
  return out + "}";
}

std::string spectrum_text(const GenusDistribution& d) {
  std::string out = "{";
  for (int g : d.spectrum()) out += (out.size() > 1 ? ", " : "") + std::to_string(g);
  return out + "}";
}

int pairwise_equivalent(const std::vector<NamedEmbedding>& list) {
  std::set<std::string> keys;
  for (const auto& x : list) keys.insert(equivalence_key(x.embedding));
  return static_cast<int>(list.size() - keys.size());
}

const char* const kTheta5Words[3] = {"a+b+c+d+e+c-d-a-b-e-", "a+b+c+d+e+a-b-c-d-e-",
                                     "a+b+c+a-d+c-e+d-b-e-"};
const char* const kK33Word = "a+b+c+d+e+f+b-g+h+c-f-i+g-a-d-h-i-e-";

void theta5_rows(Builder& b) {
  EnumerationOptions o;
  o.genus = 2;
  const auto classes = exhaustive_classes(graphs::theta(5), o);
  b.check("Theta5 genus-2 classes", std::size_t{3}, classes.size());
  b.check("Theta5 orientable+non", std::string("0+3"),
          split_counts(count_orientable(classes),
                       static_cast<int>(classes.size()) - count_orientable(classes)));
  b.check_text("Theta5 group orders", "2,5,10", group_list(classes));
  const auto ref = theta5_reference();
  const std::uint64_t orders[3] = {2, 10, 5};
  for (int i = 0; i < 3; ++i) {
    b.check("Theta5#" + std::to_string(i + 1) + " group order", orders[i],
            automorphism_group_order(ref[static_cast<std::size_t>(i)]));
  }
}

void pipeline_rows(Builder& b) {
  const K5Pipeline p = run_k5_pipeline();
  b.check("T123 raw splits", std::size_t{30}, p.t123.candidates);
  b.check("T123 iso classes", std::size_t{8}, p.t123.iso_classes.size());
  b.check("T123 equivalence classes", std::size_t{6}, p.t123.equivalence_classes.size());
  b.check_text("T123 orientable+non", "2+4", stage_split(p.t123));
  b.check("K4+ equivalence classes", std::size_t{5}, p.k4_plus.equivalence_classes.size());
  b.check_text("K4+ orientable+non", "2+3", stage_split(p.k4_plus));
  b.check("W4 equivalence classes", std::size_t{4}, p.w4.equivalence_classes.size());
  b.check_text("W4 orientable+non", "1+3", stage_split(p.w4));
  b.check("K5-uv candidates from W4", std::size_t{72}, p.from_w4);
  b.check("K5-uv candidates from K4+", std::size_t{120}, p.from_k4_plus);
  b.check("K5-uv iso classes", std::size_t{60}, p.k5_minus_edge.iso_classes.size());
  b.check_text("K5-uv orientable+non", "21+18", stage_split(p.k5_minus_edge));
  b.check("K5 iso classes", std::size_t{45}, p.k5.iso_classes.size());
  b.check("K5 equivalence classes", std::size_t{31}, p.k5.equivalence_classes.size());
  b.check_text("K5 orientable+non", "14+17", stage_split(p.k5));
  b.check_text("K5 group orders", "5^1,4^2,2^1,1^27",
               format_group_orders(group_order_histogram(p.k5.equivalence_classes)));
  bool order5_achiral = false;
  for (const auto& c : p.k5.equivalence_classes)
    if (c.group_order == 5) order5_achiral = c.chirality == Chirality::non_orientable;
  b.check_bool("K5 order-5 class non-orientable", order5_achiral);

  EnumerationOptions o;
  o.genus = 2;
  o.mode = DedupMode::equivalence;
  const auto exhaustive = exhaustive_classes(graphs::complete(5), o);
  b.check_bool("K5 genus 2: exhaustive keys == pipeline keys",
               keys_of(exhaustive) == keys_of(p.k5.equivalence_classes));
}

void word_rows(Builder& b) {
  const auto ref = theta5_reference();
  for (int i = 0; i < 3; ++i) {
    const PolygonWord w = boundary_word(ref[static_cast<std::size_t>(i)]);
    const SurfaceType s = surface_from_word(w);
    const std::string tag = "Theta5#" + std::to_string(i + 1);
    b.check_text(tag + " word surface", "orientable genus 2, 2 corners",
                 std::string(s.orientable ? "orientable" : "non-orientable") + " genus " +
                     std::to_string(s.genus()) + ", " + std::to_string(s.corners) + " corners");
    b.check_bool(tag + " word ~ " + kTheta5Words[i],
                 words_equivalent(w, PolygonWord::parse(kTheta5Words[i])));
  }
  const SurfaceType octagon = surface_from_word(PolygonWord::parse("a+b+a-b-c+d+c-d-"));
  b.check("octagon a+b+a-b-c+d+c-d- genus", 2, octagon.genus());
  b.check_bool("octagon orientable", octagon.orientable);
  const SurfaceType torus = surface_from_word(PolygonWord::parse("a+b+a-b-"));
  b.check("a+b+a-b- genus", 1, torus.genus());
  b.check_bool("a+b+a-b- orientable", torus.orientable);
}

void chord_rows(Builder& b) {
  const ChordAnalysis a = theta5_chord_analysis();
  b.check("labelled face sequences", std::size_t{5}, a.labelled_sequences.size());
  b.check("canonical chord diagrams", std::size_t{4}, a.canonical_diagrams.size());
  const auto realized = static_cast<std::size_t>(std::count(a.realizable.begin(), a.realizable.end(), true));
  b.check("realizable diagrams", std::size_t{3}, realized);
  std::set<ChordDiagram> ref;
  for (const auto& e : theta5_reference()) ref.insert(face_pattern(e));
  b.check_bool("realized diagrams are those of Theta5#1-#3",
               ref == std::set<ChordDiagram>(a.realized_patterns.begin(), a.realized_patterns.end()));
  bool f_unrealized = false;
  for (std::size_t i = 0; i < a.canonical_diagrams.size(); ++i) {
    if (a.canonical_diagrams[i].chord_lengths() == std::vector<int>{3, 3, 5, 5, 5})
      f_unrealized = !a.realizable[i];
  }
  b.check_bool("diagram with chord lengths 3,3,5,5,5 unrealized", f_unrealized);
}

VerificationReport core_suite(const SuiteOptions& opt) {
  Builder b("core");
  theta5_rows(b);
  pipeline_rows(b);
  const auto k5 = genus_distribution(graphs::complete(5), opt.budget, opt.workers);
  b.check_text("K5 genus distribution", "{1: 6, 2: 31, 3: 13}", distribution_text(k5));
  b.check("K5 total embeddings", 50, k5.total_equivalence_classes());
  const auto k33 = genus_distribution(graphs::complete_bipartite(3, 3), opt.budget, opt.workers);
  b.check_text("K3,3 genus distribution", "{1: 2, 2: 1}", distribution_text(k33));
  b.check_text("K3,3 spectrum", "{1, 2}", spectrum_text(k33));
  b.check_text("K2 genus distribution", "{0: 1}", distribution_text(genus_distribution(graphs::complete(2))));
  word_rows(b);
  chord_rows(b);
  return b.take();
}

VerificationReport appendix_a_suite() {
  Builder b("appendixA");
  const auto list = parse_appendix_a(appendix_a_text());
  b.check("parsed systems", std::size_t{31}, list.size());
  const MultiGraph k5 = graphs::complete(5);
  int bad_surface = 0, not_k5 = 0, mismatches = 0, orientable = 0;
  std::vector<EmbeddingClass> classes;
  for (const auto& x : list) {
    const SurfaceStats s = surface_stats(x.embedding);
    if (s.genus != 2 || s.faces != 3) ++bad_surface;
    if (!graphs_isomorphic(x.embedding.graph(), k5)) ++not_k5;
    const EmbeddingClass c = class_from_key(equivalence_key(x.embedding));
    if (c.chirality == Chirality::orientable) ++orientable;
    if (x.tag && *x.tag != c.chirality) {
      ++mismatches;
      b.note(x.name + " is tagged " + to_string(*x.tag) + " but recomputes as " +
             to_string(c.chirality));
    }
    classes.push_back(c);
  }
  b.check("systems not isomorphic to K5", 0, not_k5);
  b.check("systems without genus 2 and 3 faces", 0, bad_surface);
  b.check("equivalent pairs", 0, pairwise_equivalent(list));
  b.check("chirality tag mismatches", 0, mismatches);
  b.check_text("orientable+non", "14+17",
               split_counts(orientable, static_cast<int>(list.size()) - orientable));
  b.check_text("group orders", "5^1,4^2,2^1,1^27", format_group_orders(group_order_histogram(classes)));
  b.check_bool("same classes as the guided construction", keys_of(classes) == keys_of(pipeline_k5()));
  return b.take();
}

VerificationReport appendix_b_suite() {
  Builder b("appendixB");
  const auto list = parse_appendix_b(appendix_b_text());
  b.check("parsed systems", std::size_t{13}, list.size());
  int bad_surface = 0, mismatches = 0, orientable = 0;
  std::vector<EmbeddingClass> classes;
  for (const auto& x : list) {
    const SurfaceStats s = surface_stats(x.embedding);
    if (s.genus != 3 || s.faces != 1) ++bad_surface;
    const EmbeddingClass c = class_from_key(equivalence_key(x.embedding));
    if (c.chirality == Chirality::orientable) ++orientable;
    if (x.tag && *x.tag != c.chirality) {
      ++mismatches;
      b.note(x.name + " is tagged " + to_string(*x.tag) + " but recomputes as " +
             to_string(c.chirality));
    }
    classes.push_back(c);
  }
  b.check("systems without genus 3 and one face", 0, bad_surface);
  b.check("equivalent pairs", 0, pairwise_equivalent(list));
  b.check("chirality tag mismatches", 0, mismatches);
  b.check_text("orientable+non", "11+2",
               split_counts(orientable, static_cast<int>(list.size()) - orientable));
  EnumerationOptions o;
  o.genus = 3;
  o.mode = DedupMode::equivalence;
  const auto exhaustive = exhaustive_classes(graphs::complete(5), o);
  b.check("exhaustive genus-3 classes", std::size_t{13}, exhaustive.size());
  b.check_bool("same classes as exhaustive search", keys_of(classes) == keys_of(exhaustive));
  return b.take();
}

VerificationReport k33_suite(const SuiteOptions& opt) {
  Builder b("k33");
  const auto dist = genus_distribution(graphs::complete_bipartite(3, 3), opt.budget, opt.workers);
  b.check_text("genus distribution", "{1: 2, 2: 1}", distribution_text(dist));
  const K33Pipeline p = run_k33_pipeline();
  b.check("Theta5#1 labelings, central edge CD", 4, p.count(0, 3, "CD"));
  b.check("Theta5#1 labelings, central edge AB", 0, p.count(0, 3, "AB"));
  b.check("Theta5#2 completions", 0, p.orbits_from(1));
  b.check("Theta5#3 central edge CD, up to symmetry", 2, p.central_orbits(2, "CD"));
  b.check("Theta5#3 central edge AB, classes", 1, p.central_classes(2, "AB"));
  b.note("Theta5#3 central edge AB: " + std::to_string(p.count(2, 3, "AB")) +
         " labelings before identification");
  b.check("pipeline classes", std::size_t{1}, p.k33.equivalence_classes.size());
  EnumerationOptions o;
  o.genus = 2;
  o.mode = DedupMode::equivalence;
  const auto exhaustive = exhaustive_classes(graphs::complete_bipartite(3, 3), o);
  b.check_bool("pipeline key == exhaustive key", keys_of(exhaustive) == keys_of(p.k33.equivalence_classes));
  if (!exhaustive.empty()) {
    const EmbeddingClass& c = exhaustive.front();
    b.check_text("chirality", "non_orientable", to_string(c.chirality));
    const PolygonWord w = boundary_word(c.representative);
    b.check("boundary word length", std::size_t{18}, w.length());
    b.check("word corners", 6, surface_from_word(w).corners);
    b.check_bool(std::string("word ~ ") + kK33Word, words_equivalent(w, PolygonWord::parse(kK33Word)));
  }
  return b.take();
}

VerificationReport torus_suite(const SuiteOptions& opt) {
  Builder b("torus-table");
  int rows = 0, rotation_matches = 0, full_matches = 0;
  for (const TorusRow& row : torus_table_rows()) {
    const MultiGraph g = graphs::parse_spec(row.graph_spec);
    const std::uint64_t size = rotation_space_size(g);
    if (row.slow && !opt.include_slow) {
      b.note(row.name + " skipped (slow row, " + std::to_string(size) +
             " rotation systems; pass --include-slow)");
      continue;
    }
    if (size > opt.budget) {
      b.note(row.name + " skipped (" + std::to_string(size) + " rotation systems exceed budget " +
             std::to_string(opt.budget) + ")");
      continue;
    }
    EnumerationOptions o;
    o.genus = 1;
    o.budget = opt.budget;
    o.workers = opt.workers;
    const auto iso = exhaustive_classes(g, o);
    std::set<std::string> eq;
    for (const auto& c : iso) eq.insert(equivalence_key(c.representative));
    std::vector<EmbeddingClass> classes;
    for (const auto& k : eq) classes.push_back(class_from_key(k));
    const int orientable = count_orientable(classes);
    const int count = static_cast<int>(classes.size());
    b.check(row.name + " #emb", row.classes, count);
    if (row.classes != count) {
      b.note(row.name + ": " + std::to_string(iso.size()) +
             " isomorphism classes when mirror images are kept apart");
    }
    b.check_text(row.name + " or+non", split_counts(row.orientable, row.non_orientable),
                 split_counts(orientable, count - orientable));
    const std::string rotation_groups = format_group_orders(group_order_histogram(classes));
    // An achiral class also has reversing automorphisms, doubling the full group.
    std::map<std::uint64_t, int> full;
    for (const auto& c : classes)
      ++full[c.chirality == Chirality::non_orientable ? 2 * c.group_order : c.group_order];
    const std::string full_groups = format_group_orders(full);
    b.check_text(row.name + " groups", row.groups, rotation_groups);
    ++rows;
    rotation_matches += rotation_groups == row.groups;
    full_matches += full_groups == row.groups;
    if (rotation_groups != row.groups)
      b.note(row.name + ": groups including orientation-reversing maps " + full_groups);
    b.note(row.name + ": " + std::to_string(size) + " rotation systems, " + std::to_string(iso.size()) +
           " isomorphism classes");
  }
  b.note("group orders counting orientation-preserving maps match " + std::to_string(rotation_matches) +
         "/" + std::to_string(rows) + " rows; counting reversing maps too matches " +
         std::to_string(full_matches) + "/" + std::to_string(rows));
  b.note("skipped: K7, icosahedron and the other larger rows of the table (rotation spaces "
         "beyond desk scale)");
  return b.take();
}

VerificationReport theta_suite(const SuiteOptions& opt) {
  Builder b("theta-question");
  b.check("Theta3 genus-1 classes", std::size_t{1}, theta_embeddings(3, 1, DedupMode::iso, opt.budget).size());
  b.check("Theta5 genus-2 classes", std::size_t{3}, theta_embeddings(5, 2, DedupMode::iso, opt.budget).size());
  const auto t7 = theta_embeddings(7, 3, DedupMode::iso, opt.budget);
  const auto t7eq = theta_embeddings(7, 3, DedupMode::equivalence, opt.budget);
  const int orientable = count_orientable(t7eq);
  std::ostringstream msg;
  msg << "Theta7 genus 3: " << t7.size() << " isomorphism classes, " << t7eq.size()
      << " equivalence classes (" << orientable << " orientable + "
      << t7eq.size() - static_cast<std::size_t>(orientable) << " non-orientable), group orders "
      << format_group_orders(group_order_histogram(t7eq));
  b.note(msg.str());
  b.check_bool("Theta7 genus-3 enumeration completes", !t7eq.empty());
  return b.take();
}

}  // namespace

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "core") return core_suite(options);
  if (name == "appendixA") return appendix_a_suite();
  if (name == "appendixB") return appendix_b_suite();
  if (name == "k33") return k33_suite(options);
  if (name == "torus-table") return torus_suite(options);
  if (name == "theta-question") return theta_suite(options);
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

}  // namespace surfemb
