#pragma once

// Word problem and R-class membership for Inv⟨X | w = 1⟩ with w sparse:
// u = 1 iff u labels a closed path at v0 in the Schützenberger graph of 1,
// and u R 1 iff u labels some path from v0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "complex.hpp"
#include "word.hpp"

namespace sparseinv {

struct TraceResult {
  bool complete = false;
  VertexId end = 0;               // last vertex reached
  std::size_t failed_at = 0;      // first unreadable position when incomplete

  explicit operator bool() const { return complete; }
};

/// Follows u from v0 through the folded 1-skeleton.
inline TraceResult trace(const Complex& c, const Word& u,
                         VertexId start = 0) {
  TraceResult r;
  r.end = start;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto t = c.target(r.end, u[i]);
    if (!t) {
      r.failed_at = i;
      return r;
    }
    r.end = *t;
  }
  r.complete = true;
  r.failed_at = u.size();
  return r;
}

/// How far the complex is saturated before a word of length L is traced.
///   local: L-1+floor((n-2)/2), enough for every edge at distance < L.
///   paper: L·n, the coarse bound that is safe by a cruder argument.
enum class RadiusPolicy { local, paper };

inline const char* to_string(RadiusPolicy p) {
  return p == RadiusPolicy::local ? "local" : "paper";
}

inline std::uint32_t required_radius(std::size_t relator_length,
                                     std::size_t word_length,
                                     RadiusPolicy policy = RadiusPolicy::local) {
  if (word_length == 0) {
    return 0;
  }
  if (policy == RadiusPolicy::paper) {
    return static_cast<std::uint32_t>(word_length * relator_length);
  }
  return static_cast<std::uint32_t>(word_length - 1 +
                                    (relator_length - 2) / 2);
}

enum class WpOutcome { identity, not_identity, not_in_r_class };

inline const char* to_string(WpOutcome o) {
  switch (o) {
    case WpOutcome::identity: return "IDENTITY";
    case WpOutcome::not_identity: return "NOT_IDENTITY";
    case WpOutcome::not_in_r_class: return "NOT_IN_RCLASS";
  }
  return "?";
}

struct WpVerdict {
  WpOutcome outcome = WpOutcome::not_in_r_class;
  std::optional<VertexId> vertex;        // end of the path when it exists
  std::uint32_t distance = 0;            // d(v0, vertex)
  std::optional<std::size_t> failed_at;  // when no path exists
  std::uint32_t radius = 0;              // saturated radius used
};

struct SolverOptions {
  RadiusPolicy policy = RadiusPolicy::local;
  ComplexOptions complex;
};

/// Keeps one growing complex per relator so that repeated queries only pay
/// for the largest radius seen so far.
class Solver {
 public:
  explicit Solver(Word w, SolverOptions options = {})
      : options_(options), complex_(std::move(w), options.complex) {}

  const Complex& complex() const { return complex_; }
  const SolverOptions& options() const { return options_; }

  WpVerdict solve(const Word& u) { return solve_at(u, radius_for(u)); }

  /// Same verdict computation at an explicit saturated radius.
  WpVerdict solve_at(const Word& u, std::uint32_t radius) {
    complex_.build_to_radius(radius);
    WpVerdict v;
    v.radius = radius;
    auto r = trace(complex_, u);
    if (!r) {
      v.outcome = WpOutcome::not_in_r_class;
      v.failed_at = r.failed_at;
      return v;
    }
    v.vertex = r.end;
    v.distance = complex_.distance(r.end);
    v.outcome = r.end == complex_.base() ? WpOutcome::identity
                                         : WpOutcome::not_identity;
    return v;
  }

  std::uint32_t radius_for(const Word& u) const {
    return required_radius(complex_.relator_length(), u.size(),
                           options_.policy);
  }

 private:
  SolverOptions options_;
  Complex complex_;
};

inline WpVerdict is_identity(const Word& w, const Word& u,
                             SolverOptions options = {}) {
  Solver s(w, options);
  return s.solve(u);
}

inline bool in_r_class(const Word& w, const Word& u,
                       SolverOptions options = {}) {
  return is_identity(w, u, options).outcome != WpOutcome::not_in_r_class;
}

}  // namespace sparseinv
