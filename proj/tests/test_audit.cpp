#include <gtest/gtest.h>

#include "sparseinv/audit.hpp"

using namespace sparseinv;

namespace {

const Word kSurface = Word::parse("abABcdCD");

ComplexData built_data(std::uint32_t radius) {
  Complex c(kSurface);
  c.build_to_radius(radius);
  return c.data();
}

const AuditCheck& check(const AuditReport& r, const std::string& name) {
  const AuditCheck* found = r.find(name);
  if (found == nullptr) {
    throw std::runtime_error("no check named " + name);
  }
  return *found;
}

}  // namespace

TEST(Audit, InitialComplexPasses) {
  Complex c(kSurface);
  EXPECT_TRUE(verify_structure(c).passed());
  EXPECT_TRUE(audit(c).passed());
}

TEST(Audit, BuildsPass) {
  for (const char* w : {"abABcdCD", "cdCDabAB", "abABcdCDefEF"}) {
    Complex c(Word::parse(w));
    c.build_to_face_count(400);
    const AuditReport r = audit(c);
    for (const auto& ch : r.checks) {
      EXPECT_TRUE(ch.passed) << w << " " << ch.name << ": " << ch.witness;
    }
    EXPECT_GT(check(r, "pairwise-intersection").examined, 0u) << w;
    EXPECT_GT(check(r, "triple-intersection").examined, 0u) << w;
  }
}

TEST(Audit, ReportsEveryCheck) {
  Complex c(kSurface);
  c.build_to_radius(2);
  const AuditReport r = audit(c);
  for (const char* name :
       {"import", "face-embedding", "pairwise-intersection",
        "triple-intersection", "quadruple-intersection", "attach-order",
        "gluing-length", "dual-tree", "omega", "distances", "geodesic-theorem"}) {
    EXPECT_NE(r.find(name), nullptr) << name;
  }
  EXPECT_EQ(verify_structure(c).checks.size(), 6u);
}

TEST(Audit, ImportedCopyPasses) {
  Complex c = Complex::from_data(built_data(3));
  const AuditReport r = audit(c);
  for (const auto& ch : r.checks) {
    EXPECT_TRUE(ch.passed) << ch.name << ": " << ch.witness;
  }
}

TEST(Audit, DuplicatedBoundaryVertexIsCaught) {
  ComplexData d = built_data(3);
  d.faces[1].boundary[1] = d.faces[1].boundary[0];
  const AuditReport r = verify_structure(Complex::from_data(d));
  EXPECT_FALSE(r.passed());
  const auto& embed = check(r, "face-embedding");
  EXPECT_FALSE(embed.passed);
  EXPECT_NE(embed.witness.find("face 1: positions 0 and 1"), std::string::npos)
      << embed.witness;
}

TEST(Audit, WrongBoundaryLabelIsCaught) {
  ComplexData d = built_data(2);
  // swap two non-adjacent boundary vertices, so the face no longer reads w
  std::swap(d.faces[2].boundary[2], d.faces[2].boundary[5]);
  const AuditReport r = verify_structure(Complex::from_data(d));
  const auto& embed = check(r, "face-embedding");
  EXPECT_FALSE(embed.passed);
  EXPECT_NE(embed.witness.find("does not read"), std::string::npos) << embed.witness;
}

TEST(Audit, StaleDistanceIsCaught) {
  ComplexData d = built_data(2);
  d.vertices[5].dist += 3;
  const AuditReport r = audit(Complex::from_data(d));
  const auto& dist = check(r, "distances");
  EXPECT_FALSE(dist.passed);
  EXPECT_NE(dist.witness.find("vertex 5"), std::string::npos) << dist.witness;
}

TEST(Audit, WrongOwnerIsCaught) {
  ComplexData d = built_data(2);
  // a vertex of F1 other than v0 is owned by F1; point it at a child instead
  const VertexId v = d.faces[0].boundary[4];
  d.vertices[v].owner = 1;
  EXPECT_FALSE(check(audit(Complex::from_data(d)), "omega").passed);
}

TEST(Audit, ReversedAttachOrderIsCaught) {
  ComplexData d = built_data(2);
  std::swap(d.faces[0].order, d.faces[1].order);
  EXPECT_FALSE(check(verify_structure(Complex::from_data(d)), "attach-order").passed);
}

TEST(Audit, NondeterministicEdgeIsReportedAsImportIssue) {
  ComplexData d = built_data(1);
  LabeledEdge extra = d.edges.front();
  extra.dst = (extra.dst + 1) % static_cast<VertexId>(d.vertices.size());
  d.edges.push_back(extra);
  const Complex c = Complex::from_data(d);
  EXPECT_FALSE(c.import_issues().empty());
  const AuditReport r = verify_structure(c);
  const auto& imp = check(r, "import");
  EXPECT_FALSE(imp.passed);
  EXPECT_NE(imp.witness.find("two edges"), std::string::npos) << imp.witness;
}

TEST(Audit, SecondFaceOnSameStartVertexIsCaught) {
  ComplexData d = built_data(1);
  Face copy = d.faces[1];
  copy.id = static_cast<FaceId>(d.faces.size());
  copy.order = static_cast<std::uint32_t>(d.faces.size() + 1);
  d.faces.push_back(copy);
  const AuditReport r = audit(Complex::from_data(d));
  EXPECT_FALSE(r.passed());
}
