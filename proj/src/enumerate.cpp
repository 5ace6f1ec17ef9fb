#include "surfemb/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "surfemb/error.hpp"
#include "surfemb/graphs.hpp"

namespace surfemb {

int default_workers() {
  if (const char* env = std::getenv("SURFEMB_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t rotation_space_size(const MultiGraph& g) {
  std::uint64_t total = 1;
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    for (int k = 2; k < g.degree(v); ++k) {
      if (total > UINT64_MAX / static_cast<std::uint64_t>(k)) return UINT64_MAX;
      total *= static_cast<std::uint64_t>(k);
    }
  }
  return total;
}

namespace {

struct ScanFilter {
  std::optional<int> genus;
  std::optional<int> faces;
  bool collect_keys = true;
  DedupMode mode = DedupMode::iso;
};

struct ScanResult {
  std::map<int, std::uint64_t> raw_by_genus;
  std::map<int, std::set<std::string>> keys_by_genus;

  void merge(ScanResult&& other) {
    for (auto& [g, c] : other.raw_by_genus) raw_by_genus[g] += c;
    for (auto& [g, keys] : other.keys_by_genus) keys_by_genus[g].merge(keys);
  }
};

// Per-vertex cyclic orders of the incident darts, least dart fixed first.
struct RotationChoices {
  std::vector<std::vector<std::vector<int>>> options;  // [vertex][choice] -> darts
  std::vector<std::uint64_t> radix;

  explicit RotationChoices(const MultiGraph& g) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
      std::vector<int> darts;
      for (EdgeId id : g.incident_edges(v)) darts.push_back(g.dart_at(v, id).index());
      std::sort(darts.begin(), darts.end());
      std::vector<std::vector<int>> opts;
      if (darts.size() <= 1) {
        opts.push_back(darts);
      } else {
        std::vector<int> tail(darts.begin() + 1, darts.end());
        do {
          std::vector<int> cyc{darts.front()};
          cyc.insert(cyc.end(), tail.begin(), tail.end());
          opts.push_back(std::move(cyc));
        } while (std::next_permutation(tail.begin(), tail.end()));
      }
      radix.push_back(opts.size());
      options.push_back(std::move(opts));
    }
  }
};

class Scanner {
 public:
  Scanner(const MultiGraph& g, const RotationChoices& choices, const ScanFilter& filter)
      : g_(g), choices_(choices), filter_(filter) {
    const int darts = g.dart_count();
    vertex_of_.resize(static_cast<std::size_t>(darts));
    for (int d = 0; d < darts; ++d)
      vertex_of_[static_cast<std::size_t>(d)] = g.vertex_of(Dart::from_index(d)) - 1;
    succ_.assign(static_cast<std::size_t>(darts), 0);
    pred_.assign(static_cast<std::size_t>(darts), 0);
    stamp_.assign(static_cast<std::size_t>(darts), 0);
  }

  ScanResult run(std::uint64_t begin, std::uint64_t end) {
    ScanResult result;
    if (begin >= end) return result;
    const std::size_t n = choices_.radix.size();
    std::vector<std::uint64_t> digit(n, 0);
    std::uint64_t rest = begin;
    for (std::size_t i = n; i-- > 0;) {
      digit[i] = rest % choices_.radix[i];
      rest /= choices_.radix[i];
    }
    for (std::size_t v = 0; v < n; ++v) apply(v, digit[v]);

    const int chi_base = g_.vertex_count() - g_.edge_count();
    for (std::uint64_t index = begin; index < end; ++index) {
      const int faces = count_faces();
      const int genus = (2 - (chi_base + faces)) / 2;
      ++result.raw_by_genus[genus];
      if (filter_.collect_keys && (!filter_.genus || *filter_.genus == genus) &&
          (!filter_.faces || *filter_.faces == faces)) {
        result.keys_by_genus[genus].insert(key());
      }
      // Odometer step, last vertex fastest.
      for (std::size_t i = n; i-- > 0;) {
        if (++digit[i] < choices_.radix[i]) {
          apply(i, digit[i]);
          break;
        }
        digit[i] = 0;
        apply(i, 0);
      }
    }
    return result;
  }

 private:
  void apply(std::size_t v, std::uint64_t choice) {
    const auto& cyc = choices_.options[v][static_cast<std::size_t>(choice)];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      succ_[static_cast<std::size_t>(a)] = b;
      pred_[static_cast<std::size_t>(b)] = a;
    }
  }

  int count_faces() {
    const int darts = static_cast<int>(succ_.size());
    if (darts == 0) return 1;
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    int faces = 0;
    for (int start = 0; start < darts; ++start) {
      if (stamp_[static_cast<std::size_t>(start)] == generation_) continue;
      ++faces;
      int d = start;
      do {
        stamp_[static_cast<std::size_t>(d)] = generation_;
        d = succ_[static_cast<std::size_t>(d ^ 1)];
      } while (d != start);
    }
    return faces;
  }

  std::string key() {
    const detail::MapView map{g_.vertex_count(), g_.dart_count(), vertex_of_, succ_};
    std::string k = canon_.key(map);
    if (filter_.mode == DedupMode::equivalence) {
      const detail::MapView mirror{g_.vertex_count(), g_.dart_count(), vertex_of_, pred_};
      k = std::min(k, canon_.key(mirror));
    }
    return k;
  }

  const MultiGraph& g_;
  const RotationChoices& choices_;
  const ScanFilter& filter_;
  std::vector<int> vertex_of_;
  std::vector<int> succ_;
  std::vector<int> pred_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  detail::Canonizer canon_;
};

ScanResult scan(const MultiGraph& g, const ScanFilter& filter, std::uint64_t budget,
                int workers, const CanonLimits& limits) {
  if (!g.is_connected()) throw InvalidInput("exhaustive enumeration needs a connected graph");
  const std::uint64_t total = rotation_space_size(g);
  if (total > budget) throw BudgetExceeded(total, budget);
  if (filter.collect_keys) detail::check_limits(g, limits);

  const RotationChoices choices(g);
  if (workers <= 0) workers = default_workers();
  workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
  workers = std::max(workers, 1);

  std::vector<ScanResult> parts(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(parts.size());
  auto bound = [&](int w) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(total) * static_cast<unsigned>(w)) /
        static_cast<unsigned>(workers));
  };
  auto work = [&](int w) {
    try {
      Scanner scanner(g, choices, filter);
      parts[static_cast<std::size_t>(w)] = scanner.run(bound(w), bound(w + 1));
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  ScanResult merged;
  for (auto& p : parts) merged.merge(std::move(p));
  return merged;
}

}  // namespace

std::vector<EmbeddingClass> exhaustive_classes(const MultiGraph& g,
                                               const EnumerationOptions& options) {
  ScanFilter filter;
  filter.genus = options.genus;
  filter.faces = options.faces;
  filter.mode = options.mode;
  ScanResult result = scan(g, filter, options.budget, options.workers, options.limits);
  std::set<std::string> keys;
  for (auto& [genus, ks] : result.keys_by_genus) keys.merge(ks);
  std::vector<EmbeddingClass> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(class_from_key(k, options.limits));
  return out;
}

int GenusDistribution::total_equivalence_classes() const {
  int total = 0;
  for (const auto& r : records) total += r.equivalence_classes;
  return total;
}

std::uint64_t GenusDistribution::total_rotation_systems() const {
  std::uint64_t total = 0;
  for (const auto& r : records) total += r.rotation_systems;
  return total;
}

std::set<int> GenusDistribution::spectrum() const {
  std::set<int> s;
  for (const auto& r : records) s.insert(r.genus);
  return s;
}

const GenusRecord* GenusDistribution::find(int genus) const {
  for (const auto& r : records)
    if (r.genus == genus) return &r;
  return nullptr;
}

GenusDistribution genus_distribution(const MultiGraph& g, std::uint64_t budget, int workers) {
  ScanFilter filter;
  ScanResult result = scan(g, filter, budget, workers, CanonLimits{});
  GenusDistribution dist;
  for (const auto& [genus, raw] : result.raw_by_genus) {
    GenusRecord rec;
    rec.genus = genus;
    rec.rotation_systems = raw;
    const auto& keys = result.keys_by_genus[genus];
    rec.iso_classes = static_cast<int>(keys.size());
    std::set<std::string> eq;
    for (const auto& k : keys) eq.insert(equivalence_key(embedding_from_key(k)));
    for (const auto& k : eq) {
      const EmbeddingClass c = class_from_key(k);
      ++rec.equivalence_classes;
      ++(c.chirality == Chirality::orientable ? rec.orientable : rec.non_orientable);
      ++rec.group_orders[c.group_order];
    }
    dist.records.push_back(std::move(rec));
  }
  return dist;
}

std::vector<EmbeddingClass> theta_embeddings(int m, int genus, DedupMode mode,
                                             std::uint64_t budget) {
  EnumerationOptions options;
  options.genus = genus;
  options.mode = mode;
  options.budget = budget;
  return exhaustive_classes(graphs::theta(m), options);
}

ChordDiagram ChordDiagram::canonical() const {
  const int len = static_cast<int>(partner.size());
  ChordDiagram best = *this;
  std::vector<int> image(partner.size());
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int shift = 0; shift < len; ++shift) {
      auto map = [&](int p) { return ((reflect ? shift - p : p + shift) % len + len) % len; };
      for (int p = 0; p < len; ++p)
        image[static_cast<std::size_t>(map(p))] = map(partner[static_cast<std::size_t>(p)]);
      if (image < best.partner) best.partner = image;
    }
  }
  return best;
}

std::vector<int> ChordDiagram::chord_lengths() const {
  const int len = static_cast<int>(partner.size());
  std::vector<int> out;
  for (int p = 0; p < len; ++p) {
    const int q = partner[static_cast<std::size_t>(p)];
    if (p < q) out.push_back(std::min(q - p, len - (q - p)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChordDiagram face_pattern(const Embedding& e) {
  if (e.vertex_count() != 2) throw InvalidInput("face pattern needs a two-vertex embedding");
  const FaceSet faces = trace_faces(e);
  if (faces.faces.size() != 1) throw InvalidInput("face pattern needs a one-face embedding");
  const auto& darts = faces.faces.front().darts;
  ChordDiagram diagram;
  diagram.partner.assign(darts.size(), -1);
  std::vector<int> first(static_cast<std::size_t>(e.edge_count() + 1), -1);
  for (std::size_t p = 0; p < darts.size(); ++p) {
    int& f = first[static_cast<std::size_t>(darts[p].edge)];
    if (f < 0) {
      f = static_cast<int>(p);
    } else {
      diagram.partner[p] = f;
      diagram.partner[static_cast<std::size_t>(f)] = static_cast<int>(p);
    }
  }
  return diagram.canonical();
}

std::vector<ChordDiagram> admissible_matchings(int positions) {
  std::vector<ChordDiagram> out;
  if (positions <= 0 || positions % 2) return out;
  std::vector<int> partner(static_cast<std::size_t>(positions), -1);
  auto rec = [&](auto&& self) -> void {
    const auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
      out.push_back({partner});
      return;
    }
    const int p = static_cast<int>(it - partner.begin());
    for (int q = p + 1; q < positions; ++q) {
      const int gap = q - p;
      if (partner[static_cast<std::size_t>(q)] != -1 || gap % 2 == 0 || gap == 1 ||
          gap == positions - 1)
        continue;
      partner[static_cast<std::size_t>(p)] = q;
      partner[static_cast<std::size_t>(q)] = p;
      self(self);
      partner[static_cast<std::size_t>(p)] = -1;
      partner[static_cast<std::size_t>(q)] = -1;
    }
  };
  rec(rec);
  return out;
}

ChordAnalysis theta5_chord_analysis() {
  constexpr int kPositions = 10;
  ChordAnalysis out;
  std::set<ChordDiagram> canon;
  for (const ChordDiagram& m : admissible_matchings(kPositions)) {
    const auto lengths = m.chord_lengths();
    const bool all_diametric =
        std::all_of(lengths.begin(), lengths.end(), [](int l) { return l == kPositions / 2; });
    if (m.partner[0] == 3 || all_diametric) out.labelled_sequences.push_back(m);
    canon.insert(m.canonical());
  }
  out.canonical_diagrams.assign(canon.begin(), canon.end());

  // Every one-face rotation system of Theta_5 (4! x 4! of them).
  std::set<ChordDiagram> realized;
  const MultiGraph theta5 = graphs::theta(5);
  std::vector<EdgeId> tail_u{2, 3, 4, 5};
  do {
    std::vector<EdgeId> tail_v{2, 3, 4, 5};
    do {
      std::vector<EdgeId> ru{1}, rv{1};
      ru.insert(ru.end(), tail_u.begin(), tail_u.end());
      rv.insert(rv.end(), tail_v.begin(), tail_v.end());
      const Embedding e(theta5, {ru, rv});
      if (face_count(e) == 1) realized.insert(face_pattern(e));
    } while (std::next_permutation(tail_v.begin(), tail_v.end()));
  } while (std::next_permutation(tail_u.begin(), tail_u.end()));
  out.realized_patterns.assign(realized.begin(), realized.end());
  for (const auto& d : out.canonical_diagrams) out.realizable.push_back(realized.count(d) > 0);
  return out;
}

}  // namespace surfemb
