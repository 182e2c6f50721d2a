#pragma once

// Structural audits of approximation complexes. Every check reports the first
// counterexample it meets, in coordinates a reader can look up in the JSON
// export (face ids, boundary positions, vertex ids).

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "complex.hpp"

namespace sparseinv {

struct AuditCheck {
  std::string name;
  bool passed = true;
  std::size_t examined = 0;
  std::string witness;
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AuditCheck& c) { return c.passed; });
  }
  const AuditCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }
};

namespace detail {

inline void fail(AuditCheck& check, std::string witness) {
  if (check.passed) {
    check.passed = false;
    check.witness = std::move(witness);
  }
}

inline bool on_face(const Complex& c, VertexId v, FaceId f) {
  const auto& inc = c.incident_faces(v);
  return std::find(inc.begin(), inc.end(), f) != inc.end();
}

inline std::string face_str(FaceId f) { return "face " + std::to_string(f); }

// Positions of ∂A lying on B, and whether they form one cyclic arc whose
// consecutive vertices are also consecutive on ∂B.
inline std::string intersection_defect(const Complex& c, FaceId a, FaceId b) {
  const auto& ba = c.face(a).boundary;
  const auto& bb = c.face(b).boundary;
  const std::size_t n = ba.size();
  std::vector<bool> in_a(n), in_b(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    in_a[i] = on_face(c, ba[i], b);
    in_b[i] = on_face(c, bb[i], a);
    k += in_a[i] ? 1 : 0;
  }
  if (k == n) {
    return face_str(a) + " and " + face_str(b) + " share every vertex";
  }
  auto arcs = [n](const std::vector<bool>& in) {
    std::size_t starts = 0;
    for (std::size_t i = 0; i < n; ++i) {
      starts += (in[i] && !in[(i + n - 1) % n]) ? 1 : 0;
    }
    return starts;
  };
  if (arcs(in_a) != 1 || arcs(in_b) != 1) {
    return face_str(a) + " ∩ " + face_str(b) + " is not a connected arc";
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (in_a[i] && in_a[j]) {
      auto pi = c.index_in_face(b, ba[i]);
      auto pj = c.index_in_face(b, ba[j]);
      if (!pi || !pj || ((*pi + 1) % n != *pj && (*pj + 1) % n != *pi)) {
        return face_str(a) + " ∩ " + face_str(b) + ": vertices at positions " +
               std::to_string(i) + "," + std::to_string(j) + " of " +
               face_str(a) + " are not joined by a shared edge";
      }
    }
  }
  const bool sa = on_face(c, ba[0], b);
  const bool sb = on_face(c, bb[0], a);
  if (sa == sb) {
    return face_str(a) + " ∩ " + face_str(b) + " contains " +
           (sa ? "both start vertices" : "neither start vertex");
  }
  return {};
}

}  // namespace detail

/// Embedding and intersection properties of the faces: (1) each boundary is
/// n distinct vertices reading w; (2) two faces meet in a connected arc
/// holding exactly one of their start vertices; (3) three faces meet in one
/// vertex, the start vertex of one of them, which meets the other two only
/// there; (4) no vertex lies on four faces; (5) parents precede children.
inline AuditReport verify_structure(const Complex& c) {
  AuditReport report;
  const std::size_t n = c.relator_length();
  const Word& w = c.word();

  AuditCheck import{"import", true, c.import_issues().size(), {}};
  if (!c.import_issues().empty()) {
    detail::fail(import, c.import_issues().front());
  }
  report.checks.push_back(import);

  AuditCheck embed{"face-embedding", true, 0, {}};
  for (const auto& f : c.faces()) {
    ++embed.examined;
    for (std::size_t i = 0; i < n && embed.passed; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (f.boundary[i] == f.boundary[j]) {
          detail::fail(embed, detail::face_str(f.id) + ": positions " +
                                  std::to_string(i) + " and " +
                                  std::to_string(j) + " are both vertex " +
                                  std::to_string(f.boundary[i]));
          break;
        }
      }
      if (!embed.passed) {
        break;
      }
      auto t = c.target(f.boundary[i], w[i]);
      if (!t || *t != f.boundary[(i + 1) % n]) {
        detail::fail(embed, detail::face_str(f.id) + ": edge " +
                                std::to_string(i) + " does not read '" +
                                std::string(1, w[i].to_char()) + "'");
      }
    }
  }
  report.checks.push_back(embed);

  std::set<std::pair<FaceId, FaceId>> pairs;
  std::set<std::tuple<FaceId, FaceId, FaceId>> triples;
  AuditCheck quad{"quadruple-intersection", true, 0, {}};
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    auto inc = c.incident_faces(v);
    std::sort(inc.begin(), inc.end());
    ++quad.examined;
    if (inc.size() >= 4) {
      detail::fail(quad, "vertex " + std::to_string(v) + " lies on " +
                             std::to_string(inc.size()) + " faces");
    }
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        pairs.emplace(inc[i], inc[j]);
      }
    }
    if (inc.size() == 3) {
      triples.emplace(inc[0], inc[1], inc[2]);
    }
  }

  AuditCheck pairwise{"pairwise-intersection", true, 0, {}};
  for (auto [a, b] : pairs) {
    ++pairwise.examined;
    if (auto defect = detail::intersection_defect(c, a, b); !defect.empty()) {
      detail::fail(pairwise, defect);
    }
  }
  report.checks.push_back(pairwise);

  AuditCheck triple{"triple-intersection", true, 0, {}};
  for (auto [a, b, d] : triples) {
    ++triple.examined;
    std::vector<VertexId> common;
    for (VertexId x : c.face(a).boundary) {
      if (detail::on_face(c, x, b) && detail::on_face(c, x, d)) {
        common.push_back(x);
      }
    }
    const std::string where = "faces " + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(d);
    if (common.size() != 1) {
      detail::fail(triple, where + " share " + std::to_string(common.size()) +
                               " vertices");
      continue;
    }
    const VertexId t = common.front();
    bool found = false;
    for (FaceId r : {a, b, d}) {
      if (c.face(r).sigma() != t) {
        continue;
      }
      bool isolated = true;
      for (FaceId o : {a, b, d}) {
        if (o == r) {
          continue;
        }
        for (VertexId x : c.face(r).boundary) {
          if (x != t && detail::on_face(c, x, o)) {
            isolated = false;
          }
        }
      }
      found = found || isolated;
    }
    if (!found) {
      detail::fail(triple, where + " meet at vertex " + std::to_string(t) +
                               ", which is not an isolated start vertex");
    }
  }
  report.checks.push_back(triple);
  report.checks.push_back(quad);

  AuditCheck order{"attach-order", true, 0, {}};
  for (const auto& f : c.faces()) {
    ++order.examined;
    if (f.id > 0 && f.order <= c.face(f.id - 1).order) {
      detail::fail(order, detail::face_str(f.id) + " has non-increasing order");
    }
    if (f.parent != kBase &&
        (f.parent >= c.face_count() || c.face(f.parent).order >= f.order)) {
      detail::fail(order, detail::face_str(f.id) +
                              " was attached before its parent");
    }
  }
  report.checks.push_back(order);
  return report;
}

/// verify_structure plus the gluing-length bound, the dual tree, the stored Ω
/// against its definition, distances against a fresh BFS, and the geodesic
/// conditions on every edge that lies on a geodesic from v0.
inline AuditReport audit(const Complex& c) {
  AuditReport report = verify_structure(c);
  const std::size_t n = c.relator_length();

  AuditCheck gluing{"gluing-length", true, 0, {}};
  for (const auto& f : c.faces()) {
    ++gluing.examined;
    if (f.phi_hat >= f.rho_hat || f.rho_hat > n) {
      detail::fail(gluing, detail::face_str(f.id) + " has rho_hat " +
                               std::to_string(f.rho_hat) + ", phi_hat " +
                               std::to_string(f.phi_hat));
      continue;
    }
    if (2 * f.gluing_length() + 2 > n) {
      detail::fail(gluing, detail::face_str(f.id) + " is glued along " +
                               std::to_string(f.gluing_length()) + " edges");
    }
    if (f.parent != kBase && f.parent < c.face_count()) {
      for (std::uint32_t i = f.rho_hat; i <= n + f.phi_hat; ++i) {
        if (!detail::on_face(c, f.boundary[i % n], f.parent)) {
          detail::fail(gluing, detail::face_str(f.id) + ": gluing vertex " +
                                   std::to_string(i % n) +
                                   " is not on the parent face");
        }
      }
    }
  }
  report.checks.push_back(gluing);

  AuditCheck tree_check{"dual-tree", true, c.face_count(), {}};
  DualTree tree;
  bool have_tree = false;
  try {
    tree = c.dual_tree();
    have_tree = true;
  } catch (const Error& e) {
    detail::fail(tree_check, e.what());
  }
  if (have_tree) {
    if (tree.max_out_degree() + 1 > n) {
      detail::fail(tree_check, "a node of the dual tree has " +
                                   std::to_string(tree.max_out_degree()) +
                                   " children");
    }
    for (const auto& b : c.faces()) {
      if (b.parent == kBase) {
        if (b.sigma() != c.base()) {
          detail::fail(tree_check, detail::face_str(b.id) +
                                       " hangs off the root but is not at v0");
        }
        continue;
      }
      if (!detail::on_face(c, b.sigma(), b.parent)) {
        detail::fail(tree_check, "start vertex of " + detail::face_str(b.id) +
                                     " is not on its parent");
      }
      for (FaceId other : c.incident_faces(b.sigma())) {
        if (other != b.id &&
            !detail::on_face(c, c.face(other).sigma(), b.parent)) {
          detail::fail(tree_check,
                       detail::face_str(other) + " contains the start vertex of " +
                           detail::face_str(b.id) +
                           " but its own start vertex is off the parent");
        }
      }
    }
  }
  report.checks.push_back(tree_check);

  AuditCheck omega{"omega", true, 0, {}};
  if (have_tree) {
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
      ++omega.examined;
      FaceId expected = kBase;
      if (v != c.base()) {
        std::uint32_t best = kInfinity;
        std::size_t ties = 0;
        for (FaceId f : c.incident_faces(v)) {
          if (tree.depth[f] < best) {
            best = tree.depth[f];
            expected = f;
            ties = 1;
          } else if (tree.depth[f] == best) {
            ++ties;
          }
        }
        if (ties != 1) {
          detail::fail(omega, "vertex " + std::to_string(v) +
                                  " has no unique shallowest face");
          continue;
        }
      }
      if (c.omega(v) != expected) {
        detail::fail(omega, "vertex " + std::to_string(v) +
                                " has stored owner " +
                                std::to_string(c.omega(v)) + ", expected " +
                                std::to_string(expected));
      }
    }
  }
  report.checks.push_back(omega);

  const auto bfs = c.bfs_distances();
  AuditCheck dist{"distances", true, c.vertex_count(), {}};
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    if (bfs[v] != c.distance(v)) {
      detail::fail(dist, "vertex " + std::to_string(v) + " stores distance " +
                             std::to_string(c.distance(v)) + ", BFS gives " +
                             std::to_string(bfs[v]));
      break;
    }
  }
  report.checks.push_back(dist);

  AuditCheck geo{"geodesic-theorem", true, 0, {}};
  for (const auto& e : c.edges()) {
    for (auto [u, v] : {std::pair{e.src, e.dst}, std::pair{e.dst, e.src}}) {
      if (bfs[u] == kInfinity || bfs[v] != bfs[u] + 1) {
        continue;
      }
      ++geo.examined;
      const FaceId ou = c.omega(u);
      const FaceId ov = c.omega(v);
      const std::string where = "geodesic edge " + std::to_string(u) + "->" +
                                std::to_string(v);
      if (ov == kBase || ov >= c.face_count()) {
        detail::fail(geo, where + " ends at a vertex owned by the root");
        continue;
      }
      if (ou != ov && c.face(ov).parent != ou) {
        detail::fail(geo, where + ": owners are neither equal nor parent/child");
        continue;
      }
      auto pu = c.index_in_face(ov, u);
      auto pv = c.index_in_face(ov, v);
      if (!pu || !pv || ((*pu + 1) % n != *pv && (*pv + 1) % n != *pu)) {
        detail::fail(geo, where + " is not an edge of " + detail::face_str(ov));
        continue;
      }
      if (ou != ov) {
        auto g = c.gamma(ov);
        if (u != g.rho && u != g.phi) {
          detail::fail(geo, where + " enters " + detail::face_str(ov) +
                                " away from the ends of its gluing arc");
        }
      }
    }
  }
  report.checks.push_back(geo);
  return report;
}

}  // namespace sparseinv
