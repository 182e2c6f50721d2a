#pragma once

// JSON and DOT renderings of reports, complexes, class tables and automata,
// plus JSON import of complexes for audit replay.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "audit.hpp"
#include "automata.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "face_types.hpp"
#include "word.hpp"
#include "word_problem.hpp"

namespace sparseinv {

using nlohmann::json;

namespace detail {

inline json id_or_null(std::uint32_t id, std::uint32_t none) {
  return id == none ? json(nullptr) : json(id);
}

inline std::string letter_str(Letter x) { return std::string(1, x.to_char()); }

inline Letter parse_letter(const json& j) {
  const auto s = j.get<std::string>();
  if (s.size() != 1) {
    throw Error(ErrorKind::parse, "letter must be a single character: " + s);
  }
  return Word::parse(s)[0];
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out.push_back('\\');
    }
    out.push_back(ch);
  }
  return out;
}

}  // namespace detail

inline json to_json(const CyclicSubword& q) {
  return {{"notation", q.notation()},
          {"i", q.i},
          {"j", q.j},
          {"eps", q.eps},
          {"letters", q.str()},
          {"zone", q.zone.elements()}};
}

inline json to_json(const SparseReport& r, const Word& w) {
  json j = {{"word", w.str()}, {"sparse", r.sparse}, {"reason", to_string(r.reason)}};
  if (r.witness) {
    j["witness"] = {{"q1", to_json(r.witness->q1)},
                    {"q1_prime", to_json(r.witness->q1p)},
                    {"q2", to_json(r.witness->q2)},
                    {"q2_prime", to_json(r.witness->q2p)}};
  }
  return j;
}

inline json to_json(const WpVerdict& v) {
  json j = {{"verdict", to_string(v.outcome)}, {"radius", v.radius}};
  if (v.vertex) {
    j["vertex"] = *v.vertex;
    j["distance"] = v.distance;
  }
  if (v.failed_at) {
    j["failed_at"] = *v.failed_at;
  }
  return j;
}

inline json to_json(const AuditReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"examined", c.examined},
                      {"witness", c.witness}});
  }
  return {{"passed", r.passed()}, {"checks", checks}};
}

inline json to_json(const Complex& c) {
  json vertices = json::array();
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    vertices.push_back({{"id", v},
                        {"dist", c.distance(v)},
                        {"owner", detail::id_or_null(c.omega(v), kBase)}});
  }
  json edges = json::array();
  for (const auto& e : c.edges()) {
    edges.push_back(
        {{"src", e.src}, {"letter", detail::letter_str(e.letter)}, {"dst", e.dst}});
  }
  json faces = json::array();
  for (const auto& f : c.faces()) {
    faces.push_back({{"id", f.id},
                     {"parent", detail::id_or_null(f.parent, kBase)},
                     {"boundary", f.boundary},
                     {"rho_hat", f.rho_hat},
                     {"phi_hat", f.phi_hat},
                     {"order", f.order}});
  }
  return {{"n", c.relator_length()},
          {"word", c.word().str()},
          {"vertices", vertices},
          {"edges", edges},
          {"faces", faces}};
}

/// Reads the document written by to_json(const Complex&). Structural problems
/// are left for audit(); only malformed JSON is rejected here.
inline Complex complex_from_json(const json& j) {
  try {
    ComplexData d;
    d.word = Word::parse(j.at("word").get<std::string>());
    if (j.at("n").get<std::size_t>() != d.word.size()) {
      throw Error(ErrorKind::parse, "n does not match the word length");
    }
    for (const auto& v : j.at("vertices")) {
      if (v.at("id").get<std::size_t>() != d.vertices.size()) {
        throw Error(ErrorKind::parse, "vertex ids must be 0,1,2,... in order");
      }
      Vertex vx;
      vx.dist = v.at("dist").get<std::uint32_t>();
      vx.owner = v.at("owner").is_null() ? kBase : v.at("owner").get<FaceId>();
      d.vertices.push_back(vx);
    }
    if (d.vertices.empty()) {
      throw Error(ErrorKind::parse, "complex has no vertices");
    }
    for (const auto& e : j.at("edges")) {
      Letter x = detail::parse_letter(e.at("letter"));
      VertexId s = e.at("src").get<VertexId>();
      VertexId t = e.at("dst").get<VertexId>();
      if (x.is_inverse()) {
        std::swap(s, t);
        x = x.inverse();
      }
      d.edges.push_back({s, x, t});
    }
    for (const auto& f : j.at("faces")) {
      Face face;
      face.id = f.at("id").get<FaceId>();
      face.parent = f.at("parent").is_null() ? kBase : f.at("parent").get<FaceId>();
      face.boundary = f.at("boundary").get<std::vector<VertexId>>();
      face.rho_hat = f.at("rho_hat").get<std::uint32_t>();
      face.phi_hat = f.at("phi_hat").get<std::uint32_t>();
      face.order = f.at("order").get<std::uint32_t>();
      d.faces.push_back(std::move(face));
    }
    return Complex::from_data(d);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("complex JSON: ") + e.what());
  }
}

inline Complex complex_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("complex JSON: ") + e.what());
  }
  return complex_from_json(j);
}

inline std::string to_dot(const Complex& c) {
  std::ostringstream out;
  out << "digraph complex {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << v << "\\nd=" << c.distance(v) << "\"";
    if (v == c.base()) {
      out << ", shape=doublecircle, style=filled, fillcolor=gold";
    }
    out << "];\n";
  }
  for (const auto& e : c.edges()) {
    out << "  v" << e.src << " -> v" << e.dst << " [label=\""
        << e.letter.to_char() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline json to_json(const VertexClass& c, ClassId id) {
  if (c.base) {
    return {{"id", id}, {"kind", "base"}, {"face_type", nullptr}, {"index", nullptr}};
  }
  return {{"id", id},
          {"kind", "face"},
          {"face_type", {c.type.rho_hat, c.type.phi_hat, c.type.two_k}},
          {"index", c.index}};
}

inline json to_json(const ClassTable& t) {
  json classes = json::array();
  for (ClassId i = 0; i < t.size(); ++i) {
    classes.push_back(to_json(t.at(i), i));
  }
  json rows = json::array();
  for (ClassId i = 0; i < t.size(); ++i) {
    for (std::uint32_t code = 0; code < t.letter_count(); ++code) {
      const Letter x = Letter::from_code(code);
      const auto& tr = t.transition(i, x);
      json row = {{"from", i}, {"letter", detail::letter_str(x)},
                  {"kind", to_string(tr.kind)}};
      switch (tr.kind) {
        case TransitionKind::none:
          break;
        case TransitionKind::same_face:
        case TransitionKind::push:
          row["to"] = tr.target;
          row["pop_guard"] = nullptr;
          if (tr.kind == TransitionKind::push) {
            row["push_symbol"] = tr.push_symbol;
          }
          rows.push_back(row);
          break;
        case TransitionKind::pop:
          for (auto [guard, to] : tr.pop_targets) {
            row["to"] = to;
            row["pop_guard"] = guard;
            rows.push_back(row);
          }
          break;
      }
    }
  }
  return {{"word", t.word().str()}, {"classes", classes}, {"transitions", rows}};
}

inline json to_json(const Pda& p, const ClassTable& t) {
  json states = json::array();
  for (ClassId s = 0; s < p.state_count(); ++s) {
    states.push_back({{"id", s}, {"label", p.label(s)}, {"accepting", p.accepting(s)}});
  }
  json rules = json::array();
  for (const auto& r : p.rules()) {
    json action = {{"op", to_string(r.op)}};
    if (r.op == StackOp::push) {
      action["symbol"] = r.symbol;
    }
    rules.push_back({{"state", r.state},
                     {"letter", detail::letter_str(r.letter)},
                     {"guard", r.guard ? json(*r.guard) : json(nullptr)},
                     {"next", r.next},
                     {"action", action}});
  }
  return {{"word", t.word().str()},
          {"language", p.language() == PdaLanguage::identity ? "identity" : "rclass"},
          {"initial_state", kBaseClass},
          {"initial_stack", kBaseClass},
          {"states", states},
          {"rules", rules}};
}

inline json to_json(const Dfa& d) {
  json states = json::array();
  for (std::uint32_t s = 0; s < d.state_count; ++s) {
    states.push_back({{"id", s},
                      {"label", s < d.labels.size() ? d.labels[s] : std::to_string(s)},
                      {"accepting", static_cast<bool>(d.accepting[s])}});
  }
  json rows = json::array();
  for (std::uint32_t s = 0; s < d.state_count; ++s) {
    for (std::uint32_t code = 0; code < d.letter_count; ++code) {
      auto to = d.next(s, code);
      if (to != kNoState) {
        rows.push_back({{"from", s},
                        {"letter", detail::letter_str(Letter::from_code(code))},
                        {"to", to}});
      }
    }
  }
  return {{"initial", d.initial}, {"states", states}, {"transitions", rows}};
}

inline json to_json(const MinimizedDfa& m) {
  json j = to_json(m.dfa);
  j["live_states"] = m.live_states;
  j["dead_state"] = m.dead_state ? json(*m.dead_state) : json(nullptr);
  return j;
}

/// States are drawn with their ids and labelled by class; `hidden` (usually
/// the dead state) is left out together with its incoming edges.
inline std::string to_dot(const Dfa& d, std::uint32_t hidden = kNoState) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
  for (std::uint32_t s = 0; s < d.state_count; ++s) {
    if (s == hidden) {
      continue;
    }
    const std::string label = s < d.labels.size() ? d.labels[s] : "";
    out << "  q" << s << " [shape=" << (d.accepting[s] ? "doublecircle" : "circle")
        << ", label=\"" << s << "\", tooltip=\"" << detail::dot_escape(label)
        << "\"];\n";
  }
  out << "  start -> q" << d.initial << ";\n";
  for (std::uint32_t s = 0; s < d.state_count; ++s) {
    if (s == hidden) {
      continue;
    }
    // one edge per target, listing all its letters
    std::vector<std::pair<std::uint32_t, std::string>> grouped;
    for (std::uint32_t code = 0; code < d.letter_count; ++code) {
      auto to = d.next(s, code);
      if (to == kNoState || to == hidden) {
        continue;
      }
      auto it = std::find_if(grouped.begin(), grouped.end(),
                             [to](const auto& g) { return g.first == to; });
      const char ch = Letter::from_code(code).to_char();
      if (it == grouped.end()) {
        grouped.emplace_back(to, std::string(1, ch));
      } else {
        it->second += std::string(",") + ch;
      }
    }
    for (const auto& [to, letters] : grouped) {
      out << "  q" << s << " -> q" << to << " [label=\"" << letters << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const MinimizedDfa& m) {
  return to_dot(m.dfa, m.dead_state.value_or(kNoState));
}

}  // namespace sparseinv
