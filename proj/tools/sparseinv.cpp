// Command-line front end.
//
// Exit codes: 0 success (or a positive verdict), 1 negative verdict from
// check/audit, 2 parse or usage error, 3 relator not sparse, 4 resource
// limit, 5 any other library error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sparseinv.hpp"

namespace {

using namespace sparseinv;

struct Config {
  std::string format = "auto";
  std::string out;
  std::size_t face_cap = 1'000'000;
  std::optional<std::uint64_t> seed;
};

void write(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) {
    throw Error(ErrorKind::invalid_argument, "cannot write " + cfg.out);
  }
  f << text;
}

std::string resolved(const Config& cfg, const std::string& fallback) {
  return cfg.format == "auto" ? fallback : cfg.format;
}

ComplexOptions complex_options(const Config& cfg) {
  ComplexOptions o;
  o.face_cap = cfg.face_cap;
  o.fold_seed = cfg.seed;
  return o;
}

EnumerationOptions enumeration_options(const Config& cfg) {
  EnumerationOptions o;
  o.face_cap = cfg.face_cap;
  o.fold_seed = cfg.seed;
  return o;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_check(const Config& cfg, const std::string& w_text) {
  const Word w = Word::parse(w_text);
  const SparseReport r = is_sparse(w);
  if (resolved(cfg, "text") == "json") {
    write(cfg, dump(to_json(r, w)));
  } else {
    std::ostringstream out;
    out << (r.sparse ? "SPARSE" : "NOT SPARSE");
    if (!r.sparse) {
      out << ": " << to_string(r.reason);
    }
    out << "\n";
    if (r.witness) {
      const auto& x = *r.witness;
      for (auto [name, q] : {std::pair{"q1 ", &x.q1}, std::pair{"q1'", &x.q1p},
                             std::pair{"q2 ", &x.q2}, std::pair{"q2'", &x.q2p}}) {
        out << "  " << name << " = " << q->notation() << " = " << q->str()
            << "  zone {";
        const auto zone = q->zone.elements();
        for (std::size_t i = 0; i < zone.size(); ++i) {
          out << (i ? "," : "") << zone[i];
        }
        out << "}\n";
      }
    }
    write(cfg, out.str());
  }
  return r.sparse ? 0 : 1;
}

int cmd_solve(const Config& cfg, const std::string& w_text,
              const std::string& u_text, const std::string& policy) {
  const Word w = Word::parse(w_text);
  const Word u = Word::parse(u_text);
  SolverOptions o;
  o.complex = complex_options(cfg);
  o.policy = policy == "paper" ? RadiusPolicy::paper : RadiusPolicy::local;
  const WpVerdict v = is_identity(w, u, o);
  if (resolved(cfg, "text") == "json") {
    write(cfg, dump(to_json(v)));
  } else {
    std::ostringstream out;
    out << to_string(v.outcome);
    if (v.vertex) {
      out << " distance=" << v.distance;
    } else {
      out << " failed_at=" << *v.failed_at;
    }
    out << " radius=" << v.radius << "\n";
    write(cfg, out.str());
  }
  return 0;
}

int cmd_rclass(const Config& cfg, const std::string& w_text,
               const std::string& u_text) {
  const Word w = Word::parse(w_text);
  const Word u = Word::parse(u_text);
  SolverOptions o;
  o.complex = complex_options(cfg);
  const bool in = in_r_class(w, u, o);
  if (resolved(cfg, "text") == "json") {
    write(cfg, dump({{"word", u.str()}, {"in_r_class", in}}));
  } else {
    write(cfg, std::string(in ? "IN_RCLASS" : "NOT_IN_RCLASS") + "\n");
  }
  return 0;
}

int cmd_geodesic(const Config& cfg, const std::string& w_text,
                 const std::string& u_text) {
  const Word w = Word::parse(w_text);
  const Word u = Word::parse(u_text);
  const ClassTable table = enumerate_classes(w, enumeration_options(cfg));
  const bool geo = build_geodesic_fsa(table).accepts(u);
  if (resolved(cfg, "text") == "json") {
    write(cfg, dump({{"word", u.str()}, {"geodesic", geo}}));
  } else {
    write(cfg, std::string(geo ? "GEODESIC" : "NOT_GEODESIC") + "\n");
  }
  return 0;
}

std::string pda_text(const Pda& p) {
  std::ostringstream out;
  out << "states " << p.state_count() << ", initial 0, initial stack 0, accept {";
  bool first = true;
  for (ClassId s = 0; s < p.state_count(); ++s) {
    if (p.accepting(s)) {
      out << (first ? "" : ",") << s;
      first = false;
    }
  }
  out << "}\n";
  for (ClassId s = 0; s < p.state_count(); ++s) {
    out << "  " << s << " = " << p.label(s) << "\n";
  }
  for (const auto& r : p.rules()) {
    out << "delta(" << r.state << ", " << r.letter.to_char() << ", "
        << (r.guard ? std::to_string(*r.guard) : std::string("*")) << ") = ("
        << r.next << ", ";
    switch (r.op) {
      case StackOp::keep: out << "keep"; break;
      case StackOp::push: out << "push " << r.symbol; break;
      case StackOp::pop: out << "pop"; break;
    }
    out << ")\n";
  }
  return out.str();
}

std::string classes_text(const ClassTable& t) {
  std::ostringstream out;
  out << t.size() << " classes, " << t.face_types().size() << " face types\n";
  for (ClassId c = 0; c < t.size(); ++c) {
    out << c << " " << t.at(c).str() << ":";
    for (std::uint32_t code = 0; code < t.letter_count(); ++code) {
      const Letter x = Letter::from_code(code);
      const auto& tr = t.transition(c, x);
      if (tr.kind == TransitionKind::none) {
        continue;
      }
      out << " " << x.to_char() << "->";
      if (tr.kind == TransitionKind::pop) {
        out << "pop{";
        bool first = true;
        for (auto [g, to] : tr.pop_targets) {
          out << (first ? "" : ",") << g << ":" << to;
          first = false;
        }
        out << "}";
      } else {
        out << tr.target;
        if (tr.kind == TransitionKind::push) {
          out << "(push " << tr.push_symbol << ")";
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string dfa_text(const Dfa& d) {
  std::ostringstream out;
  out << d.state_count << " states, initial " << d.initial << "\n";
  for (std::uint32_t s = 0; s < d.state_count; ++s) {
    out << s << (d.accepting[s] ? " accept" : " reject") << " ["
        << (s < d.labels.size() ? d.labels[s] : "") << "]:";
    for (std::uint32_t code = 0; code < d.letter_count; ++code) {
      auto to = d.next(s, code);
      if (to != kNoState) {
        out << " " << Letter::from_code(code).to_char() << "->" << to;
      }
    }
    out << "\n";
  }
  return out.str();
}

int cmd_emit(const Config& cfg, const std::string& w_text,
             const std::string& which) {
  const Word w = Word::parse(w_text);
  if (which.rfind("complex@", 0) == 0) {
    std::uint32_t radius = 0;
    try {
      radius = static_cast<std::uint32_t>(std::stoul(which.substr(8)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_argument, "bad radius in '" + which + "'");
    }
    Complex c(w, complex_options(cfg));
    c.build_to_radius(radius);
    const auto fmt = resolved(cfg, "json");
    write(cfg, fmt == "dot" ? to_dot(c) : dump(to_json(c)));
    return 0;
  }
  const ClassTable table = enumerate_classes(w, enumeration_options(cfg));
  if (which == "classes") {
    const auto fmt = resolved(cfg, "text");
    write(cfg, fmt == "json" ? dump(to_json(table)) : classes_text(table));
  } else if (which == "pda" || which == "rpda") {
    const Pda p = build_pda(table, which == "pda" ? PdaLanguage::identity
                                                  : PdaLanguage::rclass);
    const auto fmt = resolved(cfg, "text");
    write(cfg, fmt == "json" ? dump(to_json(p, table)) : pda_text(p));
  } else if (which == "fsa" || which == "dfa") {
    const Dfa fsa = build_geodesic_fsa(table);
    const auto fmt = resolved(cfg, "dot");
    if (which == "fsa") {
      write(cfg, fmt == "json" ? dump(to_json(fsa))
                 : fmt == "dot" ? to_dot(fsa)
                                : dfa_text(fsa));
    } else {
      const MinimizedDfa m = minimize(fsa);
      write(cfg, fmt == "json" ? dump(to_json(m))
                 : fmt == "dot" ? to_dot(m)
                                : dfa_text(m.dfa));
    }
  } else {
    throw Error(ErrorKind::invalid_argument,
                "unknown emit target '" + which +
                    "' (pda, rpda, fsa, dfa, classes, complex@R)");
  }
  return 0;
}

std::string audit_text(const AuditReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.examined
        << " examined)";
    if (!c.passed) {
      out << ": " << c.witness;
    }
    out << "\n";
  }
  out << (r.passed() ? "AUDIT PASSED" : "AUDIT FAILED") << "\n";
  return out.str();
}

int cmd_audit(const Config& cfg, const std::string& w_text,
              std::optional<std::uint32_t> radius, const std::string& import) {
  std::optional<Complex> c;
  if (!import.empty()) {
    std::ifstream f(import);
    if (!f) {
      throw Error(ErrorKind::invalid_argument, "cannot read " + import);
    }
    std::stringstream buf;
    buf << f.rdbuf();
    c.emplace(complex_from_json(buf.str()));
  } else {
    if (w_text.empty() || !radius) {
      throw Error(ErrorKind::invalid_argument,
                  "audit needs a relator and a radius, or --import");
    }
    c.emplace(Word::parse(w_text), complex_options(cfg));
    c->build_to_radius(*radius);
  }
  const AuditReport r = audit(*c);
  write(cfg, resolved(cfg, "text") == "json" ? dump(to_json(r)) : audit_text(r));
  return r.passed() ? 0 : 1;
}

int cmd_cone_types(const Config& cfg, const std::string& w_text) {
  const Word w = Word::parse(w_text);
  const ClassTable table = enumerate_classes(w, enumeration_options(cfg));
  const MinimizedDfa m = minimize(build_geodesic_fsa(table));
  const ConeTypeCount k = cone_type_count(m);
  if (resolved(cfg, "text") == "json") {
    write(cfg, dump({{"word", w.str()},
                     {"classes", table.size()},
                     {"cone_types", k.live},
                     {"without_initial", k.without_initial},
                     {"with_dead", k.with_dead}}));
  } else {
    std::ostringstream out;
    out << "cone types: " << k.live << "\n"
        << "  classes (unminimized states): " << table.size() << "\n"
        << "  excluding the cone of v0: " << k.without_initial << "\n"
        << "  counting the empty cone: " << k.with_dead << "\n";
    write(cfg, out.str());
  }
  return 0;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse:
    case ErrorKind::invalid_argument:
      return 2;
    case ErrorKind::not_sparse:
      return 3;
    case ErrorKind::resource_limit:
      return 4;
    default:
      return 5;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse one-relator inverse monoids: word problem, automata, audits"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("SPARSE_FACE_CAP")) {
    try {
      cfg.face_cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: SPARSE_FACE_CAP must be a positive integer\n";
      return 2;
    }
  }
  std::uint64_t seed = 0;
  app.add_option("--format", cfg.format, "text, json or dot (default depends on the verb)")
      ->check(CLI::IsMember({"auto", "text", "json", "dot"}));
  app.add_option("--out", cfg.out, "write output to this file instead of stdout");
  app.add_option("--face-cap", cfg.face_cap,
                 "maximum number of faces in any complex (also SPARSE_FACE_CAP)")
      ->check(CLI::PositiveNumber);
  auto* seed_opt =
      app.add_option("--seed", seed, "resolve folds in a seeded random order");

  std::string w, u, which, policy = "local", import;
  std::optional<std::uint32_t> radius;

  auto* check = app.add_subcommand("check", "test whether a relator is sparse");
  check->add_option("w", w, "relator")->required();
  auto* solve = app.add_subcommand("solve", "decide whether u = 1");
  solve->add_option("w", w, "relator")->required();
  solve->add_option("u", u, "word (\"\" for the empty word)")->required();
  solve->add_option("--policy", policy, "radius policy: local or paper")
      ->check(CLI::IsMember({"local", "paper"}));
  auto* rclass = app.add_subcommand("rclass", "decide whether u is R-related to 1");
  rclass->add_option("w", w, "relator")->required();
  rclass->add_option("u", u, "word")->required();
  auto* geodesic = app.add_subcommand("geodesic", "decide whether u labels a geodesic from 1");
  geodesic->add_option("w", w, "relator")->required();
  geodesic->add_option("u", u, "word")->required();
  auto* emit = app.add_subcommand("emit", "print an automaton, class table or complex");
  emit->add_option("w", w, "relator")->required();
  emit->add_option("which", which, "pda, rpda, fsa, dfa, classes or complex@R")->required();
  auto* audit_cmd = app.add_subcommand("audit", "run the structural audits on a complex");
  audit_cmd->add_option("w", w, "relator");
  audit_cmd->add_option("R", radius, "saturated radius to build");
  audit_cmd->add_option("--import", import, "audit a complex JSON file instead");
  auto* cones = app.add_subcommand("cone-types", "count cone types of the graph of 1");
  cones->add_option("w", w, "relator")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (seed_opt->count() > 0) {
    cfg.seed = seed;
  }

  try {
    if (*check) return cmd_check(cfg, w);
    if (*solve) return cmd_solve(cfg, w, u, policy);
    if (*rclass) return cmd_rclass(cfg, w, u);
    if (*geodesic) return cmd_geodesic(cfg, w, u);
    if (*emit) return cmd_emit(cfg, w, which);
    if (*audit_cmd) return cmd_audit(cfg, w, radius, import);
    if (*cones) return cmd_cone_types(cfg, w);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return 2;
}
