#pragma once

// Automata read from a complete ClassTable:
//   - a deterministic pushdown automaton whose states and stack symbols are
//     vertex classes, accepting either the words equal to 1 or the words
//     R-related to 1;
//   - the finite automaton of geodesics, and its minimization, whose live
//     states are the cone types of the Schützenberger graph of 1.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "face_types.hpp"
#include "word.hpp"

namespace sparseinv {

enum class PdaLanguage { identity, rclass };
enum class StackOp { keep, push, pop };

inline const char* to_string(StackOp op) {
  switch (op) {
    case StackOp::keep: return "keep";
    case StackOp::push: return "push";
    case StackOp::pop: return "pop";
  }
  return "?";
}

/// One row of δ. A missing guard means the rule fires on any stack top.
struct PdaRule {
  ClassId state;
  Letter letter;
  std::optional<ClassId> guard;
  ClassId next;
  StackOp op;
  ClassId symbol = kNoClass;  // pushed class for StackOp::push
};

struct PdaRun {
  bool accepted = false;
  bool consumed = false;         // false when δ was undefined somewhere
  std::size_t position = 0;      // letters read
  ClassId state = kBaseClass;
  std::vector<ClassId> stack;    // top first
};

class Pda {
 public:
  Pda(const ClassTable& table, PdaLanguage language)
      : language_(language),
        states_(static_cast<std::uint32_t>(table.size())),
        letters_(table.letter_count()),
        accepting_(table.size(), language == PdaLanguage::rclass) {
    if (!table.complete()) {
      throw Error(ErrorKind::incomplete_table,
                  "class table has unsaturated classes");
    }
    accepting_[kBaseClass] = true;
    delta_.reserve(static_cast<std::size_t>(states_) * letters_);
    for (ClassId c = 0; c < states_; ++c) {
      labels_.push_back(table.at(c).str());
      for (std::uint32_t code = 0; code < letters_; ++code) {
        delta_.push_back(table.transition(c, Letter::from_code(code)));
      }
    }
  }

  PdaLanguage language() const { return language_; }
  std::uint32_t state_count() const { return states_; }
  std::uint32_t letter_count() const { return letters_; }
  bool accepting(ClassId s) const { return accepting_.at(s); }
  const std::string& label(ClassId s) const { return labels_.at(s); }

  /// δ(state, x, top): the next state and stack action, if defined.
  std::optional<PdaRule> step(ClassId state, Letter x, ClassId top) const {
    if (x.code() >= letters_ || state >= states_) {
      return std::nullopt;
    }
    const auto& t = delta_[state * letters_ + x.code()];
    switch (t.kind) {
      case TransitionKind::none:
        return std::nullopt;
      case TransitionKind::same_face:
        return PdaRule{state, x, std::nullopt, t.target, StackOp::keep};
      case TransitionKind::push:
        return PdaRule{state, x, std::nullopt, t.target, StackOp::push,
                       t.push_symbol};
      case TransitionKind::pop: {
        auto it = t.pop_targets.find(top);
        if (it == t.pop_targets.end()) {
          return std::nullopt;
        }
        return PdaRule{state, x, top, it->second, StackOp::pop};
      }
    }
    return std::nullopt;
  }

  PdaRun run(const Word& u) const {
    PdaRun r;
    std::vector<ClassId> stack{kBaseClass};  // back is the top
    for (; r.position < u.size(); ++r.position) {
      auto rule = stack.empty() ? std::nullopt
                                : step(r.state, u[r.position], stack.back());
      if (!rule) {
        break;
      }
      r.state = rule->next;
      if (rule->op == StackOp::push) {
        stack.push_back(rule->symbol);
      } else if (rule->op == StackOp::pop) {
        stack.pop_back();
      }
    }
    r.consumed = r.position == u.size();
    r.accepted = r.consumed && accepting_[r.state];
    r.stack.assign(stack.rbegin(), stack.rend());
    return r;
  }

  bool accepts(const Word& u) const { return run(u).accepted; }

  /// δ as a flat list of rows, one per (state, letter, guard).
  std::vector<PdaRule> rules() const {
    std::vector<PdaRule> out;
    for (ClassId s = 0; s < states_; ++s) {
      for (std::uint32_t code = 0; code < letters_; ++code) {
        const Letter x = Letter::from_code(code);
        const auto& t = delta_[s * letters_ + code];
        if (t.kind == TransitionKind::pop) {
          for (auto [guard, next] : t.pop_targets) {
            out.push_back({s, x, guard, next, StackOp::pop});
          }
        } else if (auto rule = step(s, x, kBaseClass)) {
          out.push_back(*rule);
        }
      }
    }
    return out;
  }

 private:
  PdaLanguage language_;
  std::uint32_t states_;
  std::uint32_t letters_;
  std::vector<bool> accepting_;
  std::vector<ClassTransition> delta_;
  std::vector<std::string> labels_;
};

inline Pda build_pda(const ClassTable& table, PdaLanguage language) {
  return Pda(table, language);
}

/// The stack the PDA holds after reading any path label ending at v: the
/// classes of the start vertices of the faces from Ω(v) up to F1, then [v0].
inline std::vector<ClassId> stack_oracle(const ClassTable& table,
                                         const Complex& c, VertexId v) {
  std::vector<ClassId> stack;
  for (FaceId f = c.omega(v); f != kBase; f = c.face(f).parent) {
    stack.push_back(table.class_of(c, c.face(f).sigma()));
  }
  stack.push_back(kBaseClass);
  return stack;
}

inline constexpr std::uint32_t kNoState = std::numeric_limits<std::uint32_t>::max();

/// A deterministic automaton with a partial transition table (kNoState marks
/// a missing transition).
struct Dfa {
  std::uint32_t state_count = 0;
  std::uint32_t letter_count = 0;
  std::uint32_t initial = 0;
  std::vector<std::uint32_t> delta;  // state * letter_count + code
  std::vector<bool> accepting;
  std::vector<std::string> labels;

  std::uint32_t next(std::uint32_t s, std::uint32_t code) const {
    if (s == kNoState || code >= letter_count) {
      return kNoState;
    }
    return delta[s * letter_count + code];
  }

  std::uint32_t run(const Word& u) const {
    std::uint32_t s = initial;
    for (Letter x : u) {
      s = next(s, x.code());
    }
    return s;
  }

  bool accepts(const Word& u) const {
    auto s = run(u);
    return s != kNoState && accepting[s];
  }

  bool complete() const {
    return std::find(delta.begin(), delta.end(), kNoState) == delta.end();
  }
};

/// States are the classes. Same-face edges are kept when they move toward
/// the farthest point of the face, 2î(u) < 2î(v) ≤ 2k or 2î(u) > 2î(v) ≥ 2k;
/// every push edge is kept; pops never lie on geodesics. All states accept.
inline Dfa build_geodesic_fsa(const ClassTable& table) {
  if (!table.complete()) {
    throw Error(ErrorKind::incomplete_table,
                "class table has unsaturated classes");
  }
  Dfa d;
  d.state_count = static_cast<std::uint32_t>(table.size());
  d.letter_count = table.letter_count();
  d.initial = kBaseClass;
  d.accepting.assign(d.state_count, true);
  d.delta.assign(static_cast<std::size_t>(d.state_count) * d.letter_count,
                 kNoState);
  for (ClassId c = 0; c < d.state_count; ++c) {
    d.labels.push_back(table.at(c).str());
    for (std::uint32_t code = 0; code < d.letter_count; ++code) {
      const auto& t = table.transition(c, Letter::from_code(code));
      std::uint32_t to = kNoState;
      if (t.kind == TransitionKind::push) {
        to = t.target;
      } else if (t.kind == TransitionKind::same_face) {
        const VertexClass& from = table.at(c);
        const std::int64_t a = 2 * static_cast<std::int64_t>(from.index);
        const std::int64_t b =
            2 * static_cast<std::int64_t>(table.at(t.target).index);
        const std::int64_t k = from.type.two_k;
        if ((a < b && b <= k) || (a > b && b >= k)) {
          to = t.target;
        }
      }
      d.delta[c * d.letter_count + code] = to;
    }
  }
  return d;
}

struct MinimizedDfa {
  Dfa dfa;                               // complete and minimal
  std::uint32_t live_states = 0;         // excludes the dead state
  std::optional<std::uint32_t> dead_state;
  std::vector<std::uint32_t> state_map;  // input state -> state, or kNoState
};

namespace detail {

// Hopcroft partition refinement over a complete automaton.
inline std::vector<std::uint32_t> hopcroft(std::uint32_t states,
                                           std::uint32_t letters,
                                           const std::vector<std::uint32_t>& delta,
                                           const std::vector<bool>& accepting) {
  std::vector<std::vector<std::vector<std::uint32_t>>> inverse(
      letters, std::vector<std::vector<std::uint32_t>>(states));
  for (std::uint32_t s = 0; s < states; ++s) {
    for (std::uint32_t c = 0; c < letters; ++c) {
      inverse[c][delta[s * letters + c]].push_back(s);
    }
  }
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of(states);
  {
    std::vector<std::uint32_t> acc, rej;
    for (std::uint32_t s = 0; s < states; ++s) {
      (accepting[s] ? acc : rej).push_back(s);
    }
    for (auto* b : {&acc, &rej}) {
      if (!b->empty()) {
        for (auto s : *b) {
          block_of[s] = static_cast<std::uint32_t>(blocks.size());
        }
        blocks.push_back(std::move(*b));
      }
    }
  }
  std::deque<std::uint32_t> work;
  std::vector<bool> queued(blocks.size(), true);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    work.push_back(b);
  }
  std::vector<bool> marked(states, false);
  while (!work.empty()) {
    const std::uint32_t splitter = work.front();
    work.pop_front();
    queued[splitter] = false;
    for (std::uint32_t c = 0; c < letters; ++c) {
      std::vector<std::uint32_t> pre;
      for (auto t : blocks[splitter]) {
        for (auto s : inverse[c][t]) {
          if (!marked[s]) {
            marked[s] = true;
            pre.push_back(s);
          }
        }
      }
      std::vector<std::uint32_t> touched;
      for (auto s : pre) {
        touched.push_back(block_of[s]);
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (auto y : touched) {
        std::vector<std::uint32_t> in, out;
        for (auto s : blocks[y]) {
          (marked[s] ? in : out).push_back(s);
        }
        if (out.empty()) {
          continue;
        }
        const auto z = static_cast<std::uint32_t>(blocks.size());
        blocks[y] = std::move(in);
        blocks.push_back(std::move(out));
        queued.push_back(false);
        for (auto s : blocks[z]) {
          block_of[s] = z;
        }
        if (queued[y]) {
          work.push_back(z);
          queued[z] = true;
        } else {
          auto smaller = blocks[y].size() <= blocks[z].size() ? y : z;
          work.push_back(smaller);
          queued[smaller] = true;
        }
      }
      for (auto s : pre) {
        marked[s] = false;
      }
    }
  }
  return block_of;
}

}  // namespace detail

/// Drops unreachable states, completes with a dead state, and merges
/// equivalent states. States are numbered in breadth-first order from the
/// initial state, so equal languages give identical automata.
inline MinimizedDfa minimize(const Dfa& in) {
  const std::uint32_t letters = in.letter_count;
  std::vector<std::uint32_t> reach(in.state_count, kNoState);
  std::vector<std::uint32_t> order;
  {
    std::deque<std::uint32_t> q{in.initial};
    reach[in.initial] = 0;
    order.push_back(in.initial);
    while (!q.empty()) {
      auto s = q.front();
      q.pop_front();
      for (std::uint32_t c = 0; c < letters; ++c) {
        auto t = in.next(s, c);
        if (t != kNoState && reach[t] == kNoState) {
          reach[t] = static_cast<std::uint32_t>(order.size());
          order.push_back(t);
          q.push_back(t);
        }
      }
    }
  }
  // trimmed automaton plus a sink at index `sink`
  const auto sink = static_cast<std::uint32_t>(order.size());
  const std::uint32_t states = sink + 1;
  std::vector<std::uint32_t> delta(static_cast<std::size_t>(states) * letters,
                                   sink);
  std::vector<bool> accepting(states, false);
  for (std::uint32_t i = 0; i < sink; ++i) {
    accepting[i] = in.accepting[order[i]];
    for (std::uint32_t c = 0; c < letters; ++c) {
      auto t = in.next(order[i], c);
      delta[i * letters + c] = t == kNoState ? sink : reach[t];
    }
  }
  const auto block_of = detail::hopcroft(states, letters, delta, accepting);

  // renumber blocks breadth-first from the initial block
  std::vector<std::uint32_t> number(states, kNoState);
  std::vector<std::uint32_t> rep;
  {
    std::deque<std::uint32_t> q{0};
    number[block_of[0]] = 0;
    rep.push_back(0);
    while (!q.empty()) {
      auto s = q.front();
      q.pop_front();
      for (std::uint32_t c = 0; c < letters; ++c) {
        auto t = delta[s * letters + c];
        if (number[block_of[t]] == kNoState) {
          number[block_of[t]] = static_cast<std::uint32_t>(rep.size());
          rep.push_back(t);
          q.push_back(t);
        }
      }
    }
  }
  MinimizedDfa m;
  Dfa& d = m.dfa;
  d.state_count = static_cast<std::uint32_t>(rep.size());
  d.letter_count = letters;
  d.initial = 0;
  d.delta.resize(static_cast<std::size_t>(d.state_count) * letters);
  d.accepting.resize(d.state_count);
  for (std::uint32_t b = 0; b < d.state_count; ++b) {
    d.accepting[b] = accepting[rep[b]];
    for (std::uint32_t c = 0; c < letters; ++c) {
      d.delta[b * letters + c] = number[block_of[delta[rep[b] * letters + c]]];
    }
  }
  // the dead state is the block that cannot reach acceptance
  std::vector<bool> live(d.state_count, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t b = 0; b < d.state_count; ++b) {
      if (live[b]) {
        continue;
      }
      bool l = d.accepting[b];
      for (std::uint32_t c = 0; c < letters && !l; ++c) {
        l = live[d.delta[b * letters + c]];
      }
      if (l) {
        live[b] = true;
        changed = true;
      }
    }
  }
  for (std::uint32_t b = 0; b < d.state_count; ++b) {
    if (live[b]) {
      ++m.live_states;
    } else {
      m.dead_state = b;
    }
  }
  for (std::uint32_t b = 0; b < d.state_count; ++b) {
    std::string label;
    if (m.dead_state == b) {
      label = "dead";
    } else {
      for (std::uint32_t s = 0; s < sink; ++s) {
        if (number[block_of[s]] == b) {
          label += (label.empty() ? "" : " ") +
                   (order[s] < in.labels.size() ? in.labels[order[s]]
                                                : std::to_string(order[s]));
        }
      }
    }
    d.labels.push_back(label.empty() ? std::to_string(b) : label);
  }
  m.state_map.assign(in.state_count, kNoState);
  for (std::uint32_t i = 0; i < sink; ++i) {
    m.state_map[order[i]] = number[block_of[i]];
  }
  return m;
}

/// Cone-type counts under the three usual conventions.
struct ConeTypeCount {
  std::uint32_t live = 0;             // initial state included, dead excluded
  std::uint32_t without_initial = 0;  // the cone type of v0 left out
  std::uint32_t with_dead = 0;        // the empty cone counted as a type
};

inline ConeTypeCount cone_type_count(const MinimizedDfa& m) {
  ConeTypeCount c;
  c.live = m.live_states;
  c.with_dead = m.live_states + (m.dead_state ? 1 : 0);
  // the initial state is its own cone type unless another reachable state
  // landed in the same block
  std::uint32_t sharing = 0;
  for (auto s : m.state_map) {
    sharing += s == m.dfa.initial ? 1 : 0;
  }
  c.without_initial = sharing == 1 ? c.live - 1 : c.live;
  return c;
}

}  // namespace sparseinv
