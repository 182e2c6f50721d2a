#pragma once

// Schützenberger approximation complexes for Inv⟨X | w = 1⟩ with w sparse.
//
// A Complex is a folded, deterministic, inverse-closed labelled graph (the
// 1-skeleton) together with the w-labelled polygons attached to it. Faces are
// attached one at a time at a vertex that is not yet the start vertex of any
// face; after each attachment the polygon is folded onto the existing graph
// with rules (1)-(2) (identify two edge-ends at a vertex reading the same
// letter) until the graph is deterministic again.
//
// Vertex ids are dense and assigned in creation order; v0 is always id 0.
// Face ids are dense and assigned in attachment order; F1 is id 0.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <tuple>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "word.hpp"

namespace sparseinv {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;

/// Ω(v0) and the parent of F1: the root of the augmented dual tree.
inline constexpr FaceId kBase = std::numeric_limits<FaceId>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr std::uint32_t kInfinity =
    std::numeric_limits<std::uint32_t>::max();

struct Vertex {
  std::uint32_t dist = kInfinity;
  FaceId owner = kBase;         // Ω(v)
  FaceId sigma_face = kBase;    // face whose σ̄ is this vertex, kBase if none
  bool saturated() const { return sigma_face != kBase; }
};

struct Face {
  FaceId id = 0;
  std::vector<VertexId> boundary;  // clockwise from σ̄, reads w
  FaceId parent = kBase;
  std::uint32_t rho_hat = 0;       // î(ρ), in (0, n]
  std::uint32_t phi_hat = 0;       // î(φ), in [0, n)
  std::uint32_t order = 0;         // 1-based attachment order

  VertexId sigma() const { return boundary.front(); }
  std::uint32_t gluing_length() const {
    return static_cast<std::uint32_t>(boundary.size()) - rho_hat + phi_hat;
  }
};

struct Gamma {
  VertexId rho = kNoVertex;
  VertexId phi = kNoVertex;
  std::uint32_t length = 0;
};

struct LabeledEdge {
  VertexId src;
  Letter letter;  // always a positive letter
  VertexId dst;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// The augmented dual graph D′: root v0, one node per face.
struct DualTree {
  std::vector<FaceId> parent;                 // kBase for F1
  std::vector<std::vector<FaceId>> children;  // per face
  std::vector<FaceId> root_children;
  std::vector<std::uint32_t> depth;           // F1 has depth 1

  std::size_t max_out_degree() const {
    std::size_t d = root_children.size();
    for (const auto& c : children) {
      d = std::max(d, c.size());
    }
    return d;
  }
};

struct ComplexOptions {
  std::size_t face_cap = 1'000'000;
  /// When set, pending identifications are resolved in a pseudo-random order
  /// drawn from this seed instead of LIFO.
  std::optional<std::uint64_t> fold_seed;
  bool require_sparse = true;
};

/// Plain data view of a complex, used for serialization and audit replay.
struct ComplexData {
  Word word;
  std::vector<Vertex> vertices;
  std::vector<LabeledEdge> edges;
  std::vector<Face> faces;
};

class Complex {
 public:
  /// S_1: a single polygon F1 attached at v0. Throws NotSparse unless w is
  /// sparse (or the check is switched off in the options).
  explicit Complex(Word w, ComplexOptions options = {})
      : word_(std::move(w)),
        n_(word_.size()),
        letters_(word_.alphabet().letter_count()),
        options_(options) {
    if (options_.require_sparse) {
      auto report = is_sparse(word_);
      if (!report.sparse) {
        throw Error(ErrorKind::not_sparse,
                    "relator '" + safe_str(word_) + "': " +
                        to_string(report.reason));
      }
    } else if (n_ == 0) {
      throw Error(ErrorKind::invalid_argument, "empty relator");
    }
    if (options_.fold_seed) {
      rng_.seed(*options_.fold_seed);
    }
    add_vertex(0, kBase);
    attach_face(0);
  }

  /// Rebuilds a complex from exported data without re-folding. Problems that
  /// cannot be represented (non-deterministic edges, dangling ids) are kept
  /// in import_issues() for the audit to report.
  static Complex from_data(const ComplexData& data) {
    Complex c;
    c.word_ = data.word;
    c.n_ = c.word_.size();
    c.letters_ = c.word_.alphabet().letter_count();
    for (const auto& e : data.edges) {
      c.letters_ = std::max(c.letters_, 2 * (e.letter.generator() + 1));
    }
    c.options_.require_sparse = false;
    c.distances_exact_ = false;
    c.vertices_ = data.vertices;
    c.out_.assign(c.vertices_.size() * c.letters_, kNoVertex);
    c.uf_.resize(c.vertices_.size());
    for (VertexId v = 0; v < c.uf_.size(); ++v) {
      c.uf_[v] = v;
      c.vertices_[v].sigma_face = kBase;
    }
    c.incident_.assign(c.vertices_.size(), {});
    auto note = [&c](std::string s) { c.import_issues_.push_back(std::move(s)); };
    for (const auto& e : data.edges) {
      if (e.src >= c.vertices_.size() || e.dst >= c.vertices_.size()) {
        note("edge references unknown vertex");
        continue;
      }
      auto set = [&](VertexId s, Letter x, VertexId t) {
        auto& slot = c.out_[s * c.letters_ + x.code()];
        if (slot != kNoVertex && slot != t) {
          note("vertex " + std::to_string(s) + " has two edges reading '" +
               std::string(1, x.to_char()) + "'");
        } else {
          slot = t;
        }
      };
      set(e.src, e.letter, e.dst);
      set(e.dst, e.letter.inverse(), e.src);
    }
    c.faces_ = data.faces;
    for (FaceId f = 0; f < c.faces_.size(); ++f) {
      auto& face = c.faces_[f];
      face.id = f;
      bool ok = face.boundary.size() == c.n_;
      for (VertexId b : face.boundary) {
        ok = ok && b < c.vertices_.size();
      }
      if (!ok) {
        note("face " + std::to_string(f) + " has a malformed boundary");
        face.boundary.resize(c.n_, 0);
        for (auto& b : face.boundary) {
          b = std::min<VertexId>(b, static_cast<VertexId>(c.vertices_.size() - 1));
        }
      }
      if (c.vertices_[face.sigma()].sigma_face != kBase) {
        note("vertex " + std::to_string(face.sigma()) +
             " is the start vertex of two faces");
      }
      c.vertices_[face.sigma()].sigma_face = f;
      std::vector<VertexId> seen;
      for (VertexId b : face.boundary) {
        if (std::find(seen.begin(), seen.end(), b) == seen.end()) {
          c.incident_[b].push_back(f);
          seen.push_back(b);
        }
      }
    }
    for (VertexId v = 0; v < c.vertices_.size(); ++v) {
      if (!c.vertices_[v].saturated()) {
        c.frontier_.emplace(c.vertices_[v].dist, v);
      }
    }
    return c;
  }

  ComplexData data() const {
    ComplexData d{word_, vertices_, edges(), faces_};
    return d;
  }

  const Word& word() const { return word_; }
  std::size_t relator_length() const { return n_; }
  std::uint32_t letter_count() const { return letters_; }
  const ComplexOptions& options() const { return options_; }

  VertexId base() const { return 0; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto t : out_) {
      c += t != kNoVertex ? 1 : 0;
    }
    return c / 2;
  }

  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Face& face(FaceId f) const { return faces_.at(f); }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<FaceId>& incident_faces(VertexId v) const {
    return incident_.at(v);
  }

  /// Faces may be attached out of distance order (the class enumeration does
  /// this); distances stay exact because every face's ancestors are present.
  /// Only imported complexes lose this guarantee.
  bool distances_exact() const { return distances_exact_; }
  const std::vector<std::string>& import_issues() const {
    return import_issues_;
  }

  /// The end of the edge leaving v with label x, if present.
  std::optional<VertexId> target(VertexId v, Letter x) const {
    if (x.code() >= letters_ || v >= vertices_.size()) {
      return std::nullopt;
    }
    auto t = out_[v * letters_ + x.code()];
    if (t == kNoVertex) {
      return std::nullopt;
    }
    return t;
  }

  std::vector<LabeledEdge> edges() const {
    std::vector<LabeledEdge> out;
    for (VertexId v = 0; v < vertices_.size(); ++v) {
      for (std::uint32_t c = 0; c < letters_; c += 2) {
        auto t = out_[v * letters_ + c];
        if (t != kNoVertex) {
          out.push_back({v, Letter::from_code(c), t});
        }
      }
    }
    return out;
  }

  std::uint32_t distance(VertexId v) const { return vertices_.at(v).dist; }
  FaceId omega(VertexId v) const { return vertices_.at(v).owner; }

  Gamma gamma(FaceId f) const {
    const Face& a = faces_.at(f);
    return Gamma{a.boundary[a.rho_hat % n_], a.boundary[a.phi_hat],
                 a.gluing_length()};
  }

  /// Position of v on ∂A, if v lies on it.
  std::optional<std::uint32_t> index_in_face(FaceId f, VertexId v) const {
    const auto& b = faces_.at(f).boundary;
    for (std::uint32_t i = 0; i < b.size(); ++i) {
      if (b[i] == v) {
        return i;
      }
    }
    return std::nullopt;
  }

  /// Attaches a fresh polygon with σ at v and folds. Throws AlreadySaturated
  /// when v already is the start vertex of a face.
  FaceId attach_face(VertexId v) {
    if (poisoned_) {
      throw Error(ErrorKind::structure_violation,
                  "complex is unusable after an earlier structure violation");
    }
    if (v >= vertices_.size()) {
      throw Error(ErrorKind::invalid_argument,
                  "unknown vertex " + std::to_string(v));
    }
    if (vertices_[v].saturated()) {
      throw Error(ErrorKind::already_saturated,
                  "vertex " + std::to_string(v) + " already carries face " +
                      std::to_string(vertices_[v].sigma_face));
    }
    if (faces_.size() >= options_.face_cap) {
      throw Error(ErrorKind::resource_limit,
                  "face cap of " + std::to_string(options_.face_cap) +
                      " reached");
    }
    try {
      return attach_polygon(v);
    } catch (const Error&) {
      poisoned_ = true;
      throw;
    }
  }

  /// The unsaturated vertex of least distance (ties: creation order).
  std::optional<VertexId> next_attachment_vertex() {
    while (!frontier_.empty()) {
      auto [d, v] = frontier_.top();
      if (vertices_[v].saturated() || vertices_[v].dist != d) {
        frontier_.pop();
        continue;
      }
      return v;
    }
    return std::nullopt;
  }

  /// Largest R such that every vertex at distance ≤ R is saturated.
  std::int64_t saturated_radius() {
    auto v = next_attachment_vertex();
    if (!v) {
      return std::numeric_limits<std::int64_t>::max();
    }
    return static_cast<std::int64_t>(vertices_[*v].dist) - 1;
  }

  /// Attaches faces at minimum-distance unsaturated vertices until every
  /// vertex at distance ≤ R is saturated.
  void build_to_radius(std::uint32_t radius) {
    while (auto v = next_attachment_vertex()) {
      if (vertices_[*v].dist > radius) {
        break;
      }
      attach_face(*v);
    }
  }

  /// Same order as build_to_radius, stopping once `count` faces exist.
  void build_to_face_count(std::size_t count) {
    while (faces_.size() < count) {
      auto v = next_attachment_vertex();
      if (!v) {
        break;
      }
      attach_face(*v);
    }
  }

  /// Distances from v0 recomputed by a plain BFS over the 1-skeleton.
  std::vector<std::uint32_t> bfs_distances() const {
    std::vector<std::uint32_t> dist(vertices_.size(), kInfinity);
    std::deque<VertexId> queue{base()};
    dist[base()] = 0;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (std::uint32_t c = 0; c < letters_; ++c) {
        auto t = out_[u * letters_ + c];
        if (t != kNoVertex && dist[t] == kInfinity) {
          dist[t] = dist[u] + 1;
          queue.push_back(t);
        }
      }
    }
    return dist;
  }

  /// D′ built from the stored parent links. Throws StructureViolation when
  /// the links do not form a tree rooted at v0.
  DualTree dual_tree() const {
    DualTree tree;
    const std::size_t m = faces_.size();
    tree.parent.resize(m);
    tree.children.assign(m, {});
    tree.depth.assign(m, 0);
    for (FaceId f = 0; f < m; ++f) {
      FaceId p = faces_[f].parent;
      tree.parent[f] = p;
      if (p == kBase) {
        tree.root_children.push_back(f);
      } else if (p >= m) {
        throw Error(ErrorKind::structure_violation,
                    "face " + std::to_string(f) + " has unknown parent");
      } else {
        tree.children[p].push_back(f);
      }
    }
    if (tree.root_children.size() != 1) {
      throw Error(ErrorKind::structure_violation,
                  "the root must have exactly one child, found " +
                      std::to_string(tree.root_children.size()));
    }
    std::vector<FaceId> stack{tree.root_children.front()};
    tree.depth[stack.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      ++reached;
      for (FaceId c : tree.children[f]) {
        tree.depth[c] = tree.depth[f] + 1;
        stack.push_back(c);
      }
    }
    if (reached != m) {
      throw Error(ErrorKind::structure_violation,
                  "parent links contain a cycle");
    }
    return tree;
  }

 private:
  Complex() = default;

  static std::string safe_str(const Word& w) {
    try {
      return w.str();
    } catch (const Error&) {
      return "<" + std::to_string(w.size()) + " letters>";
    }
  }

  VertexId add_vertex(std::uint32_t dist, FaceId owner) {
    auto id = static_cast<VertexId>(vertices_.size());
    vertices_.push_back(Vertex{dist, owner, kBase});
    out_.resize(out_.size() + letters_, kNoVertex);
    uf_.push_back(id);
    incident_.emplace_back();
    return id;
  }

  VertexId find(VertexId v) {
    while (uf_[v] != v) {
      uf_[v] = uf_[uf_[v]];
      v = uf_[v];
    }
    return v;
  }

  VertexId& slot(VertexId v, Letter x) { return out_[v * letters_ + x.code()]; }

  FaceId attach_polygon(VertexId sigma) {
    const std::size_t n = n_;
    const auto old_count = static_cast<VertexId>(vertices_.size());
    const auto face_id = static_cast<FaceId>(faces_.size());

    // provisional polygon vertices 1..n-1 live at old_count + i - 1
    out_.resize(out_.size() + (n - 1) * letters_, kNoVertex);
    for (std::size_t i = 1; i < n; ++i) {
      uf_.push_back(static_cast<VertexId>(old_count + i - 1));
    }
    auto corner = [&](std::size_t i) -> VertexId {
      i %= n;
      return i == 0 ? sigma : static_cast<VertexId>(old_count + i - 1);
    };

    std::vector<std::size_t> touched;  // slots of old vertices set here
    std::vector<std::pair<VertexId, VertexId>> pending;

    auto set_slot = [&](VertexId s, Letter x, VertexId t) {
      slot(s, x) = t;
      if (s < old_count) {
        touched.push_back(s * letters_ + x.code());
      }
    };

    auto add_edge = [&](VertexId s, Letter x, VertexId t) {
      s = find(s);
      t = find(t);
      if (auto cur = slot(s, x); cur != kNoVertex) {
        pending.emplace_back(cur, t);
      } else if (auto back = slot(t, x.inverse()); back != kNoVertex) {
        pending.emplace_back(back, s);
      } else {
        set_slot(s, x, t);
        set_slot(t, x.inverse(), s);
      }
    };

    auto take_pending = [&]() {
      std::size_t k = pending.size() - 1;
      if (options_.fold_seed) {
        k = std::uniform_int_distribution<std::size_t>(0, k)(rng_);
      }
      auto pair = pending[k];
      pending[k] = pending.back();
      pending.pop_back();
      return pair;
    };

    auto merge = [&](VertexId a, VertexId b) {
      a = find(a);
      b = find(b);
      if (a == b) {
        return;
      }
      if (a > b) {
        std::swap(a, b);
      }
      if (b < old_count) {
        throw Error(ErrorKind::structure_violation,
                    "folding face " + std::to_string(face_id) +
                        " identified existing vertices " + std::to_string(a) +
                        " and " + std::to_string(b));
      }
      uf_[b] = a;
      for (std::uint32_t c = 0; c < letters_; ++c) {
        Letter y = Letter::from_code(c);
        VertexId t = slot(b, y);
        if (t == kNoVertex) {
          continue;
        }
        slot(b, y) = kNoVertex;
        t = find(t);
        if (auto cur = slot(a, y); cur != kNoVertex) {
          pending.emplace_back(cur, t);
        } else {
          set_slot(a, y, t);
        }
      }
    };

    std::vector<std::size_t> edge_order(n);
    for (std::size_t i = 0; i < n; ++i) {
      edge_order[i] = i;
    }
    if (options_.fold_seed) {
      std::shuffle(edge_order.begin(), edge_order.end(), rng_);
    }
    for (std::size_t i : edge_order) {
      add_edge(corner(i), word_[i], corner(i + 1));
      while (!pending.empty()) {
        auto [a, b] = take_pending();
        merge(a, b);
      }
    }

    std::vector<VertexId> image(n);
    for (std::size_t i = 0; i < n; ++i) {
      image[i] = find(corner(i));
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    // a polygon edge is glued iff it coincides with an edge that existed
    // before this attachment
    std::vector<bool> glued(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      VertexId s = image[i];
      VertexId t = image[(i + 1) % n];
      if (s < old_count && t < old_count) {
        auto key = s * letters_ + word_[i].code();
        glued[i] = !std::binary_search(touched.begin(), touched.end(), key);
      }
    }
    {
      auto sorted = image;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::structure_violation,
                    "face " + std::to_string(face_id) +
                        " does not embed: two boundary vertices were "
                        "identified");
      }
    }
    std::uint32_t phi_hat = 0;
    while (phi_hat < n && glued[phi_hat]) {
      ++phi_hat;
    }
    auto rho_hat = static_cast<std::uint32_t>(n);
    while (rho_hat > phi_hat && glued[rho_hat - 1]) {
      --rho_hat;
    }
    for (std::size_t i = phi_hat; i < rho_hat; ++i) {
      if (glued[i]) {
        throw Error(ErrorKind::structure_violation,
                    "glued edges of face " + std::to_string(face_id) +
                        " do not form an arc through its start vertex");
      }
    }

    // compact the surviving provisional vertices
    std::vector<VertexId> renumber(n - 1, kNoVertex);
    VertexId next = old_count;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      auto p = static_cast<VertexId>(old_count + k);
      if (find(p) == p) {
        renumber[k] = next++;
      }
    }
    auto canonical = [&](VertexId x) {
      x = find(x);
      return x < old_count ? x : renumber[x - old_count];
    };
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (renumber[k] == kNoVertex) {
        continue;
      }
      VertexId from = old_count + static_cast<VertexId>(k);
      VertexId to = renumber[k];
      for (std::uint32_t c = 0; c < letters_; ++c) {
        VertexId t = out_[from * letters_ + c];
        out_[to * letters_ + c] = t == kNoVertex ? kNoVertex : canonical(t);
      }
    }
    for (auto key : touched) {
      if (out_[key] != kNoVertex) {
        out_[key] = canonical(out_[key]);
      }
    }
    for (auto& b : image) {
      b = canonical(b);
    }
    out_.resize(static_cast<std::size_t>(next) * letters_);
    uf_.resize(next);
    for (VertexId v = old_count; v < next; ++v) {
      uf_[v] = v;
    }

    Face face;
    face.id = face_id;
    face.boundary = image;
    face.parent = vertices_[sigma].owner;
    face.rho_hat = rho_hat;
    face.phi_hat = phi_hat;
    face.order = face_id + 1;

    for (VertexId v = old_count; v < next; ++v) {
      vertices_.push_back(Vertex{kInfinity, face_id, kBase});
      incident_.emplace_back();
    }
    vertices_[sigma].sigma_face = face_id;
    for (VertexId b : image) {
      incident_[b].push_back(face_id);
    }
    faces_.push_back(std::move(face));

    relax_from(image, old_count);
    for (VertexId v = old_count; v < next; ++v) {
      frontier_.emplace(vertices_[v].dist, v);
    }
    return face_id;
  }

  // Edges were only added, so distances can only drop; propagate from the
  // pre-existing vertices of the new face.
  void relax_from(const std::vector<VertexId>& seeds, VertexId old_count) {
    std::deque<VertexId> queue;
    for (VertexId s : seeds) {
      if (s < old_count) {
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      const auto du = vertices_[u].dist;
      if (du == kInfinity) {
        continue;
      }
      for (std::uint32_t c = 0; c < letters_; ++c) {
        VertexId t = out_[u * letters_ + c];
        if (t != kNoVertex && du + 1 < vertices_[t].dist) {
          vertices_[t].dist = du + 1;
          if (t < old_count && !vertices_[t].saturated()) {
            frontier_.emplace(vertices_[t].dist, t);
          }
          queue.push_back(t);
        }
      }
    }
  }

  Word word_;
  std::size_t n_ = 0;
  std::uint32_t letters_ = 0;
  ComplexOptions options_;
  std::vector<Vertex> vertices_;
  std::vector<VertexId> out_;  // vertex * letters_ + letter -> target
  std::vector<VertexId> uf_;
  std::vector<std::vector<FaceId>> incident_;
  std::vector<Face> faces_;
  using FrontierEntry = std::pair<std::uint32_t, VertexId>;
  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>,
                      std::greater<>>
      frontier_;
  std::mt19937_64 rng_;
  bool distances_exact_ = true;
  bool poisoned_ = false;
  std::vector<std::string> import_issues_;
};

/// A labelled-isomorphism invariant: vertices renumbered in BFS order from v0
/// (letters scanned in code order), then the edge list and face boundaries in
/// that numbering. Two complexes are label-isomorphic iff their forms match.
struct CanonicalForm {
  std::vector<LabeledEdge> edges;
  std::vector<std::vector<VertexId>> faces;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline CanonicalForm canonical_form(const Complex& c) {
  std::vector<VertexId> number(c.vertex_count(), kNoVertex);
  std::deque<VertexId> queue{c.base()};
  number[c.base()] = 0;
  VertexId next = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (std::uint32_t code = 0; code < c.letter_count(); ++code) {
      auto t = c.target(u, Letter::from_code(code));
      if (t && number[*t] == kNoVertex) {
        number[*t] = next++;
        queue.push_back(*t);
      }
    }
  }
  CanonicalForm form;
  for (const auto& e : c.edges()) {
    form.edges.push_back({number[e.src], e.letter, number[e.dst]});
  }
  std::sort(form.edges.begin(), form.edges.end(),
            [](const LabeledEdge& a, const LabeledEdge& b) {
              return std::tie(a.src, a.letter, a.dst) <
                     std::tie(b.src, b.letter, b.dst);
            });
  for (const auto& f : c.faces()) {
    std::vector<VertexId> b;
    for (VertexId v : f.boundary) {
      b.push_back(number[v]);
    }
    form.faces.push_back(std::move(b));
  }
  std::sort(form.faces.begin(), form.faces.end());
  return form;
}

}  // namespace sparseinv
