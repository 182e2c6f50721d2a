#pragma once

// Face types, vertex classes and the finite table of class-level transitions
// that the automata are read from.
//
// A face type is (î(ρ), î(φ), 2k) where k is the boundary coordinate of the
// point of the face farthest from v0. A vertex class is either the base class
// {v0} or (type of Ω(v), position of v on Ω(v)). Transitions between classes
// come in three kinds, by how Ω changes along the edge: same face, into a
// child face (push), or back to the parent (pop). A pop additionally depends
// on the class of the start vertex of the face being left, which is what the
// pushdown stack remembers.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace sparseinv {

struct FaceType {
  std::uint32_t rho_hat = 0;
  std::uint32_t phi_hat = 0;
  std::int64_t two_k = 0;

  std::string str() const {
    return "(" + std::to_string(rho_hat) + "," + std::to_string(phi_hat) +
           "," + std::to_string(two_k) + ")";
  }
  friend auto operator<=>(const FaceType&, const FaceType&) = default;
};

struct VertexClass {
  bool base = true;
  FaceType type;
  std::uint32_t index = 0;

  static VertexClass base_class() { return {}; }
  static VertexClass face(FaceType t, std::uint32_t i) { return {false, t, i}; }

  std::string str() const {
    return base ? std::string("[v0]")
                : "[" + type.str() + ":" + std::to_string(index) + "]";
  }
  // the base class sorts first
  friend auto operator<=>(const VertexClass& a, const VertexClass& b) {
    if (a.base != b.base) {
      return a.base ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.base) {
      return std::strong_ordering::equal;
    }
    if (auto c = a.type <=> b.type; c != 0) {
      return c;
    }
    return a.index <=> b.index;
  }
  friend bool operator==(const VertexClass& a, const VertexClass& b) {
    return (a <=> b) == 0;
  }
};

/// 2·k for face f. Needs exact distances at ρ and φ.
inline std::int64_t k_value(const Complex& c, FaceId f) {
  if (!c.distances_exact()) {
    throw Error(ErrorKind::stale_distances,
                "distances of an imported complex are not certified");
  }
  const Face& a = c.face(f);
  const Gamma g = c.gamma(f);
  const auto dr = c.distance(g.rho);
  const auto dp = c.distance(g.phi);
  if (dr == kInfinity || dp == kInfinity) {
    throw Error(ErrorKind::stale_distances,
                "face " + std::to_string(f) + " is not connected to v0");
  }
  return static_cast<std::int64_t>(a.rho_hat) + a.phi_hat +
         static_cast<std::int64_t>(dr) - static_cast<std::int64_t>(dp);
}

inline FaceType face_type(const Complex& c, FaceId f) {
  const Face& a = c.face(f);
  return FaceType{a.rho_hat, a.phi_hat, k_value(c, f)};
}

inline VertexClass vertex_class(const Complex& c, VertexId v) {
  if (v == c.base()) {
    return VertexClass::base_class();
  }
  const FaceId owner = c.omega(v);
  auto idx = c.index_in_face(owner, v);
  if (owner == kBase || !idx) {
    throw Error(ErrorKind::structure_violation,
                "vertex " + std::to_string(v) + " is not on its owner face");
  }
  return VertexClass::face(face_type(c, owner), *idx);
}

/// The point of ∂A farthest from v0: a vertex when 2k is even, otherwise the
/// midpoint of the edge between positions (2k-1)/2 and (2k+1)/2.
struct FarthestPoint {
  std::int64_t two_k = 0;
  VertexId first = kNoVertex;
  VertexId second = kNoVertex;  // kNoVertex when the point is a vertex
  bool is_vertex() const { return second == kNoVertex; }
};

inline FarthestPoint farthest_point(const Complex& c, FaceId f) {
  FarthestPoint p;
  p.two_k = k_value(c, f);
  const auto n = static_cast<std::int64_t>(c.relator_length());
  const auto& b = c.face(f).boundary;
  auto at = [&](std::int64_t i) { return b[((i % n) + n) % n]; };
  if (p.two_k % 2 == 0) {
    p.first = at(p.two_k / 2);
  } else {
    p.first = at((p.two_k - 1) / 2);
    p.second = at((p.two_k + 1) / 2);
  }
  return p;
}

enum class TransitionKind { none, same_face, push, pop };

inline const char* to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::none: return "none";
    case TransitionKind::same_face: return "same";
    case TransitionKind::push: return "push";
    case TransitionKind::pop: return "pop";
  }
  return "?";
}

using ClassId = std::uint32_t;
inline constexpr ClassId kBaseClass = 0;
inline constexpr ClassId kNoClass = std::numeric_limits<ClassId>::max();

struct ClassTransition {
  TransitionKind kind = TransitionKind::none;
  ClassId target = kNoClass;       // same_face and push
  ClassId push_symbol = kNoClass;  // push: class of the new face's start vertex
  std::map<ClassId, ClassId> pop_targets;  // pop: guard -> target

  friend bool operator==(const ClassTransition&,
                         const ClassTransition&) = default;
};

enum class EnumerationOrder { fifo, lifo };

struct EnumerationOptions {
  std::size_t face_cap = 1'000'000;
  EnumerationOrder order = EnumerationOrder::fifo;
  std::optional<std::uint64_t> fold_seed;
};

class ClassTable {
 public:
  const Word& word() const { return complex_->word(); }
  std::uint32_t letter_count() const { return letters_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<VertexClass>& classes() const { return classes_; }
  const VertexClass& at(ClassId id) const { return classes_.at(id); }
  bool complete() const { return complete_; }

  std::optional<ClassId> find(const VertexClass& c) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
    if (it == classes_.end() || *it != c) {
      return std::nullopt;
    }
    return static_cast<ClassId>(it - classes_.begin());
  }

  const ClassTransition& transition(ClassId c, Letter x) const {
    static const ClassTransition absent;
    if (x.code() >= letters_) {
      return absent;
    }
    return transitions_.at(c * letters_ + x.code());
  }

  /// Distinct face types, sorted.
  std::vector<FaceType> face_types() const {
    std::vector<FaceType> out;
    for (const auto& c : classes_) {
      if (!c.base) {
        out.push_back(c.type);
      }
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// A vertex of each class in the working complex used for enumeration.
  VertexId representative(ClassId c) const { return representatives_.at(c); }
  const Complex& working_complex() const { return *complex_; }

  /// Class of a vertex of some other complex over the same relator.
  ClassId class_of(const Complex& c, VertexId v) const {
    auto vc = vertex_class(c, v);
    auto id = find(vc);
    if (!id) {
      throw Error(ErrorKind::incomplete_table,
                  "class " + vc.str() + " is missing from the table");
    }
    return *id;
  }

 private:
  friend ClassTable enumerate_classes(const Word&, EnumerationOptions);

  std::vector<VertexClass> classes_;
  std::vector<VertexId> representatives_;
  std::vector<ClassTransition> transitions_;  // class * letters_ + code
  std::uint32_t letters_ = 0;
  std::shared_ptr<const Complex> complex_;
  bool complete_ = false;
};

/// Discovers every vertex class and its transitions by growing one complex.
///
/// Classes are processed as contexts: for a class g, the face B attached at a
/// representative of g is built along with the child faces at each vertex
/// that B owns. After that every edge at those vertices is present, so their
/// transitions (with g as the pop guard) can be read off. Seeing the same
/// class and letter twice with different data is reported as a structure
/// violation.
inline ClassTable enumerate_classes(const Word& w,
                                    EnumerationOptions options = {}) {
  ComplexOptions copts;
  copts.face_cap = options.face_cap;
  copts.fold_seed = options.fold_seed;
  auto complex = std::make_shared<Complex>(w, copts);
  Complex& c = *complex;
  const std::uint32_t letters = c.letter_count();
  const std::size_t n = c.relator_length();

  std::vector<VertexClass> classes;
  std::vector<VertexId> reps;
  std::map<VertexClass, ClassId> ids;
  std::deque<ClassId> work;
  // keyed by discovery ids; canonical ids are assigned at the end
  std::map<std::pair<ClassId, std::uint32_t>, ClassTransition> found;

  auto intern = [&](VertexId v) {
    auto vc = vertex_class(c, v);
    auto [it, inserted] = ids.emplace(vc, static_cast<ClassId>(classes.size()));
    if (inserted) {
      classes.push_back(vc);
      reps.push_back(v);
      work.push_back(it->second);
    }
    return it->second;
  };
  auto face_at = [&](VertexId v) {
    const Vertex& vx = c.vertex(v);
    return vx.saturated() ? vx.sigma_face : c.attach_face(v);
  };
  auto conflict = [&](ClassId cls, Letter x, const std::string& what) {
    return Error(ErrorKind::structure_violation,
                 "class " + classes[cls].str() + " letter '" +
                     std::string(1, x.to_char()) + "': " + what);
  };

  intern(c.base());
  while (!work.empty()) {
    ClassId g;
    if (options.order == EnumerationOrder::fifo) {
      g = work.front();
      work.pop_front();
    } else {
      g = work.back();
      work.pop_back();
    }
    const FaceId b = face_at(reps[g]);
    const Face& face = c.face(b);
    std::vector<VertexId> readers;
    if (g == kBaseClass) {
      readers.push_back(c.base());
    }
    for (std::uint32_t i = face.phi_hat + 1; i < face.rho_hat && i < n; ++i) {
      readers.push_back(c.face(b).boundary[i]);
    }
    for (VertexId u : readers) {
      if (u != c.base()) {
        face_at(u);
      }
    }
    for (VertexId u : readers) {
      const ClassId cu = intern(u);
      const FaceId ou = c.omega(u);
      for (std::uint32_t code = 0; code < letters; ++code) {
        const Letter x = Letter::from_code(code);
        ClassTransition t;
        ClassId guard = kNoClass;
        if (auto v = c.target(u, x)) {
          const FaceId ov = c.omega(*v);
          if (ov == ou) {
            t.kind = TransitionKind::same_face;
            t.target = intern(*v);
          } else if (ov != kBase && c.face(ov).parent == ou) {
            t.kind = TransitionKind::push;
            t.target = intern(*v);
            t.push_symbol = intern(c.face(ov).sigma());
          } else if (ou != kBase && c.face(ou).parent == ov) {
            t.kind = TransitionKind::pop;
            guard = intern(c.face(ou).sigma());
            t.pop_targets[guard] = intern(*v);
          } else {
            throw Error(ErrorKind::structure_violation,
                        "edge " + std::to_string(u) + "->" +
                            std::to_string(*v) +
                            " joins faces that are not adjacent in the dual "
                            "tree");
          }
        }
        auto key = std::make_pair(cu, code);
        auto it = found.find(key);
        if (it == found.end()) {
          found.emplace(key, t);
          continue;
        }
        ClassTransition& old = it->second;
        if (old.kind != t.kind || old.target != t.target ||
            old.push_symbol != t.push_symbol) {
          throw conflict(cu, x, "inconsistent transition");
        }
        if (t.kind == TransitionKind::pop) {
          auto [pit, fresh] = old.pop_targets.emplace(guard, t.pop_targets[guard]);
          if (!fresh && pit->second != t.pop_targets[guard]) {
            throw conflict(cu, x, "inconsistent pop target");
          }
        }
      }
    }
  }

  // canonical order: base first, then by (face type, index)
  std::vector<ClassId> order(classes.size());
  for (ClassId i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](ClassId a, ClassId b) { return classes[a] < classes[b]; });
  std::vector<ClassId> rename(classes.size());
  for (ClassId i = 0; i < order.size(); ++i) {
    rename[order[i]] = i;
  }
  auto rn = [&](ClassId x) { return x == kNoClass ? kNoClass : rename[x]; };

  ClassTable table;
  table.letters_ = letters;
  table.complex_ = complex;
  for (ClassId i : order) {
    table.classes_.push_back(classes[i]);
    table.representatives_.push_back(reps[i]);
  }
  table.transitions_.assign(classes.size() * letters, {});
  for (auto& [key, t] : found) {
    ClassTransition r;
    r.kind = t.kind;
    r.target = rn(t.target);
    r.push_symbol = rn(t.push_symbol);
    for (auto [gd, tg] : t.pop_targets) {
      r.pop_targets[rn(gd)] = rn(tg);
    }
    table.transitions_[rename[key.first] * letters + key.second] = r;
  }
  for (ClassId i = 0; i < classes.size(); ++i) {
    for (std::uint32_t code = 0; code < letters; ++code) {
      if (!found.count({i, code})) {
        throw Error(ErrorKind::incomplete_table,
                    "class " + classes[i].str() + " was never saturated");
      }
    }
  }
  table.complete_ = true;
  return table;
}

}  // namespace sparseinv
