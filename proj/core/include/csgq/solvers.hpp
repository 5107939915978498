#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csgq/qubo.hpp"

namespace csgq {

struct SaParams {
  int sweeps = 0;           // 0 = auto: 10 * num_vars
  double t_initial = 0.0;   // 0 = auto: max |coefficient|
  double t_final = 0.0;     // 0 = auto: 1e-3 * t_initial
};

struct TabuParams {
  int tenure = 0;               // 0 = auto: min(20, num_vars)
  long max_non_improving = 0;   // 0 = auto: 50 * num_vars
};

struct SolverConfig {
  std::uint64_t seed = 0;
  int num_reads = 100;
  SaParams sa;
  TabuParams tabu;
};

struct Sample {
  Bits bits;
  double energy = 0.0;
};

/// Solver output, sorted ascending by energy (ties broken by bitstring).
/// Energies always equal energy(q, bits) recomputed from scratch.
struct SampleSet {
  std::vector<Sample> samples;
  std::string solver_id;
  double elapsed_s = 0.0;

  const Sample& best() const { return samples.front(); }
};

/// Enumerates all 2^m states (Gray-code order, incremental energy deltas) and
/// returns the num_reads lowest. First sample is the global minimum.
/// Hard cap: num_vars <= 24; beyond it throws CapacityError.
SampleSet solve_exhaustive(const Qubo& q, const SolverConfig& cfg = {});
inline constexpr int kExhaustiveCap = 24;

/// num_reads independent restarts of single-bit-flip Metropolis annealing
/// with a geometric temperature schedule; each read contributes its
/// best-found state. Deterministic given cfg.seed (per-read substreams).
SampleSet solve_sa(const Qubo& q, const SolverConfig& cfg);

/// Multi-start single-bit-flip tabu search with aspiration (a tabu flip is
/// allowed when it beats the restart's incumbent). Flip deltas are maintained
/// incrementally, O(m) per move. One restart per read; a restart stops after
/// tabu.max_non_improving consecutive non-improving moves.
SampleSet solve_tabu(const Qubo& q, const SolverConfig& cfg);

/// Solver-selection contract: algorithms take an opaque solve function so
/// exhaustive/SA/tabu (or anything else with this shape) are interchangeable.
using SolveFn = std::function<SampleSet(const Qubo&)>;

enum class SolverKind { kExhaustive, kSa, kTabu };

const char* solver_name(SolverKind kind);
std::optional<SolverKind> solver_from_name(const std::string& name);

SolveFn make_solver(SolverKind kind, SolverConfig cfg);

}  // namespace csgq
