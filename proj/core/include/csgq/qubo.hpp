#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csgq/graph.hpp"

namespace csgq {

using Bits = std::vector<std::uint8_t>;

/// Upper-triangular quadratic form over binary variables plus a constant
/// offset. Diagonal entries (a,a) hold linear terms. Zero coefficients are
/// never stored; accumulating to zero removes the entry.
struct Qubo {
  int num_vars = 0;
  double offset = 0.0;
  std::map<std::pair<int, int>, double> coeffs;  // key (a,b) with a <= b

  /// Accumulates v onto the (a,b) coefficient (order-normalized).
  void add(int a, int b, double v);
  double coeff(int a, int b) const;  // 0 when absent

  bool operator==(const Qubo&) const = default;
};

/// offset + sum_a coeffs[a,a]*b_a + sum_{a<b} coeffs[a,b]*b_a*b_b.
double energy(const Qubo& q, const Bits& bits);

/// The five problem encodings.
///
/// kBisection      one variable per agent; energy = weight of the 2-part cut
/// kKochenberger   one-hot (agent, slot); energy = -V(CS) when feasible
/// kZens           at-most-one slot; all-zero agents are their own singletons
/// kOneHotCut      one-hot min-k-cut; energy = 2 * cut weight when feasible
/// kRQubo          at-most-one slot; all-zero agents share "coalition 0";
///                 energy = cut weight when feasible
enum class Formulation { kBisection, kKochenberger, kZens, kOneHotCut, kRQubo };

const char* formulation_name(Formulation f);  // gcsq|kochenberger|zens|nsplit|rqubo
std::optional<Formulation> formulation_from_name(const std::string& name);

/// Maps (agent position p, slot c) to flat variable index p*slots + c, and
/// decoded positions back to the original agent ids in `agents`.
struct Encoding {
  Formulation kind = Formulation::kBisection;
  std::vector<AgentId> agents;  // ascending original ids
  int slots = 0;                // 0 for bisection

  int num_vars() const {
    const int n = static_cast<int>(agents.size());
    return kind == Formulation::kBisection ? n : n * slots;
  }
  int var(int agent_pos, int slot) const { return agent_pos * slots + slot; }
};

/// Penalty weight making any constraint violation cost more than the largest
/// possible objective gain.
struct PenaltyParams {
  double p = 1.0;
};

/// P = 1 + sum |w_ij| over the encoded (sub)graph.
PenaltyParams penalty_bound(const WeightedGraph& g);

/// Slot counts used by the one-shot formulations: n for Kochenberger and
/// the one-hot cut, floor(n/2) for ZEnS, n-1 for R-QUBO (never below 1),
/// 0 for bisection.
int default_slots(Formulation f, int n);

/// Logical variable count of an encoding: n for bisection, n*slots otherwise.
int logical_variables(Formulation f, int n, int slots);
int logical_variables(Formulation f, int n);  // at default slots

// Encoding builders. `agents` carries the original ids for decoding
// (empty = identity 1..n). Coefficients accumulate additively; constant
// penalty terms land in Qubo::offset.

/// Weighted minimum cut: per pair i<j, +w on both diagonals and -2w on the
/// pair, so energy(bits) equals the weight of the cut between the 0-side and
/// the 1-side. Requires n >= 2.
std::pair<Qubo, Encoding> build_bisection(const WeightedGraph& g,
                                          std::vector<AgentId> agents = {});

/// Same-slot reward -w per pair and slot, plus the exactly-one penalty
/// P(1 - sum_c x_ic)^2 per agent. Feasible energy = -V(decoded CS).
std::pair<Qubo, Encoding> build_kochenberger(const WeightedGraph& g, int slots,
                                             PenaltyParams p,
                                             std::vector<AgentId> agents = {});

/// Same-slot reward with an at-most-one penalty only; all-zero agents decode
/// as their own singletons. Feasible energy = -V(decoded CS).
std::pair<Qubo, Encoding> build_zens(const WeightedGraph& g, int slots,
                                     PenaltyParams p,
                                     std::vector<AgentId> agents = {});

/// Per-slot cut terms plus the exactly-one penalty. A cross pair contributes
/// w at both agents' slots, so feasible energy = 2 * cut weight.
/// Requires slots >= 2.
std::pair<Qubo, Encoding> build_onehot_cut(const WeightedGraph& g, int slots,
                                           PenaltyParams p,
                                           std::vector<AgentId> agents = {});

/// Cut terms per slot plus -w on cross-slot pairs and an at-most-one penalty;
/// all-zero agents share "coalition 0". Feasible energy = cut weight.
/// With slots = 1 this is coefficient-identical to build_bisection.
std::pair<Qubo, Encoding> build_rqubo(const WeightedGraph& g, int slots,
                                      PenaltyParams p,
                                      std::vector<AgentId> agents = {});

/// Builds formulation `f` with the given slot count (ignored for bisection).
std::pair<Qubo, Encoding> build_formulation(Formulation f,
                                            const WeightedGraph& g, int slots,
                                            PenaltyParams p,
                                            std::vector<AgentId> agents = {});

/// Bitstring decoded under the encoding's multiplicity rule. `violations`
/// counts agents breaking the rule; the structure is populated only when
/// feasible (violations == 0), in canonical order, with original agent ids.
struct DecodedSolution {
  CoalitionStructure structure;
  bool feasible = false;
  int violations = 0;
};

DecodedSolution decode(const Bits& bits, const Encoding& enc);

/// Text export: `m <num_vars>`, `offset <val>`, one `a b coeff` line per
/// stored coefficient in ascending index order. For debugging and diffing.
void write_qubo(const Qubo& q, std::ostream& out);

}  // namespace csgq
