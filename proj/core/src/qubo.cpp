#include "csgq/qubo.hpp"

#include <algorithm>
#include <ostream>

#include "csgq/text.hpp"

namespace csgq {

void Qubo::add(int a, int b, double v) {
  if (v == 0.0) return;
  if (a > b) std::swap(a, b);
  auto [it, inserted] = coeffs.try_emplace({a, b}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0.0) coeffs.erase(it);
  }
}

double Qubo::coeff(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto it = coeffs.find({a, b});
  return it == coeffs.end() ? 0.0 : it->second;
}

double energy(const Qubo& q, const Bits& bits) {
  if (static_cast<int>(bits.size()) != q.num_vars) {
    throw ArgumentError("bitstring length does not match num_vars");
  }
  double e = q.offset;
  for (const auto& [key, c] : q.coeffs) {
    const auto [a, b] = key;
    if (a == b) {
      if (bits[a]) e += c;
    } else if (bits[a] && bits[b]) {
      e += c;
    }
  }
  return e;
}

const char* formulation_name(Formulation f) {
  switch (f) {
    case Formulation::kBisection: return "gcsq";
    case Formulation::kKochenberger: return "kochenberger";
    case Formulation::kZens: return "zens";
    case Formulation::kOneHotCut: return "nsplit";
    case Formulation::kRQubo: return "rqubo";
  }
  return "?";
}

std::optional<Formulation> formulation_from_name(const std::string& name) {
  if (name == "gcsq" || name == "bisection") return Formulation::kBisection;
  if (name == "kochenberger") return Formulation::kKochenberger;
  if (name == "zens") return Formulation::kZens;
  if (name == "nsplit" || name == "onehot_cut") return Formulation::kOneHotCut;
  if (name == "rqubo") return Formulation::kRQubo;
  return std::nullopt;
}

PenaltyParams penalty_bound(const WeightedGraph& g) {
  return {1.0 + g.sum_abs_weights()};
}

int default_slots(Formulation f, int n) {
  switch (f) {
    case Formulation::kBisection: return 0;
    case Formulation::kKochenberger: return n;
    case Formulation::kOneHotCut: return n;
    case Formulation::kZens: return std::max(1, n / 2);
    case Formulation::kRQubo: return std::max(1, n - 1);
  }
  return 0;
}

int logical_variables(Formulation f, int n, int slots) {
  return f == Formulation::kBisection ? n : n * slots;
}

int logical_variables(Formulation f, int n) {
  return logical_variables(f, n, default_slots(f, n));
}

namespace {

std::vector<AgentId> identity_agents(int n) {
  std::vector<AgentId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i + 1;
  return ids;
}

Encoding make_encoding(Formulation kind, const WeightedGraph& g, int slots,
                       std::vector<AgentId> agents) {
  if (agents.empty()) agents = identity_agents(g.num_agents());
  if (static_cast<int>(agents.size()) != g.num_agents()) {
    throw ArgumentError("agent id list does not match graph size");
  }
  if (!std::is_sorted(agents.begin(), agents.end())) {
    throw ArgumentError("agent ids must be ascending");
  }
  return Encoding{kind, std::move(agents), slots};
}

// P(1 - sum_c x)^2 expanded: +P to the offset, -P on each diagonal,
// +2P on each intra-agent slot pair.
void add_exactly_one_penalty(Qubo& q, const Encoding& enc, double p) {
  const int n = static_cast<int>(enc.agents.size());
  for (int a = 0; a < n; ++a) {
    q.offset += p;
    for (int c = 0; c < enc.slots; ++c) {
      q.add(enc.var(a, c), enc.var(a, c), -p);
      for (int c2 = c + 1; c2 < enc.slots; ++c2) {
        q.add(enc.var(a, c), enc.var(a, c2), 2.0 * p);
      }
    }
  }
}

// +P on intra-agent slot pairs only: being in zero slots stays free.
void add_at_most_one_penalty(Qubo& q, const Encoding& enc, double p) {
  const int n = static_cast<int>(enc.agents.size());
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < enc.slots; ++c) {
      for (int c2 = c + 1; c2 < enc.slots; ++c2) {
        q.add(enc.var(a, c), enc.var(a, c2), p);
      }
    }
  }
}

}  // namespace

std::pair<Qubo, Encoding> build_bisection(const WeightedGraph& g,
                                          std::vector<AgentId> agents) {
  const int n = g.num_agents();
  if (n < 2) throw ArgumentError("bisection needs at least 2 agents");
  Encoding enc = make_encoding(Formulation::kBisection, g, 0, std::move(agents));
  Qubo q;
  q.num_vars = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = g.weight(i + 1, j + 1);
      q.add(i, i, w);
      q.add(j, j, w);
      q.add(i, j, -2.0 * w);
    }
  }
  return {std::move(q), std::move(enc)};
}

std::pair<Qubo, Encoding> build_kochenberger(const WeightedGraph& g, int slots,
                                             PenaltyParams p,
                                             std::vector<AgentId> agents) {
  if (slots < 1) throw ArgumentError("kochenberger needs slots >= 1");
  const int n = g.num_agents();
  Encoding enc =
      make_encoding(Formulation::kKochenberger, g, slots, std::move(agents));
  Qubo q;
  q.num_vars = enc.num_vars();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = g.weight(i + 1, j + 1);
      for (int c = 0; c < slots; ++c) {
        q.add(enc.var(i, c), enc.var(j, c), -w);
      }
    }
  }
  add_exactly_one_penalty(q, enc, p.p);
  return {std::move(q), std::move(enc)};
}

std::pair<Qubo, Encoding> build_zens(const WeightedGraph& g, int slots,
                                     PenaltyParams p,
                                     std::vector<AgentId> agents) {
  if (slots < 1) throw ArgumentError("zens needs slots >= 1");
  const int n = g.num_agents();
  Encoding enc = make_encoding(Formulation::kZens, g, slots, std::move(agents));
  Qubo q;
  q.num_vars = enc.num_vars();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = g.weight(i + 1, j + 1);
      for (int c = 0; c < slots; ++c) {
        q.add(enc.var(i, c), enc.var(j, c), -w);
      }
    }
  }
  add_at_most_one_penalty(q, enc, p.p);
  return {std::move(q), std::move(enc)};
}

std::pair<Qubo, Encoding> build_onehot_cut(const WeightedGraph& g, int slots,
                                           PenaltyParams p,
                                           std::vector<AgentId> agents) {
  if (slots < 2) throw ArgumentError("one-hot cut needs slots >= 2");
  const int n = g.num_agents();
  Encoding enc =
      make_encoding(Formulation::kOneHotCut, g, slots, std::move(agents));
  Qubo q;
  q.num_vars = enc.num_vars();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = g.weight(i + 1, j + 1);
      for (int c = 0; c < slots; ++c) {
        q.add(enc.var(i, c), enc.var(i, c), w);
        q.add(enc.var(j, c), enc.var(j, c), w);
        q.add(enc.var(i, c), enc.var(j, c), -2.0 * w);
      }
    }
  }
  add_exactly_one_penalty(q, enc, p.p);
  return {std::move(q), std::move(enc)};
}

std::pair<Qubo, Encoding> build_rqubo(const WeightedGraph& g, int slots,
                                      PenaltyParams p,
                                      std::vector<AgentId> agents) {
  if (slots < 1) throw ArgumentError("rqubo needs slots >= 1");
  const int n = g.num_agents();
  Encoding enc = make_encoding(Formulation::kRQubo, g, slots, std::move(agents));
  Qubo q;
  q.num_vars = enc.num_vars();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = g.weight(i + 1, j + 1);
      for (int c = 0; c < slots; ++c) {
        q.add(enc.var(i, c), enc.var(i, c), w);
        q.add(enc.var(j, c), enc.var(j, c), w);
        q.add(enc.var(i, c), enc.var(j, c), -2.0 * w);
        for (int c2 = 0; c2 < slots; ++c2) {
          if (c2 == c) continue;
          q.add(enc.var(i, c), enc.var(j, c2), -w);
        }
      }
    }
  }
  add_at_most_one_penalty(q, enc, p.p);
  return {std::move(q), std::move(enc)};
}

std::pair<Qubo, Encoding> build_formulation(Formulation f,
                                            const WeightedGraph& g, int slots,
                                            PenaltyParams p,
                                            std::vector<AgentId> agents) {
  switch (f) {
    case Formulation::kBisection: return build_bisection(g, std::move(agents));
    case Formulation::kKochenberger:
      return build_kochenberger(g, slots, p, std::move(agents));
    case Formulation::kZens: return build_zens(g, slots, p, std::move(agents));
    case Formulation::kOneHotCut:
      return build_onehot_cut(g, slots, p, std::move(agents));
    case Formulation::kRQubo:
      return build_rqubo(g, slots, p, std::move(agents));
  }
  throw ArgumentError("unknown formulation");
}

DecodedSolution decode(const Bits& bits, const Encoding& enc) {
  if (static_cast<int>(bits.size()) != enc.num_vars()) {
    throw ArgumentError("bitstring length does not match encoding");
  }
  const int n = static_cast<int>(enc.agents.size());
  DecodedSolution out;

  if (enc.kind == Formulation::kBisection) {
    Coalition zero_side, one_side;
    for (int a = 0; a < n; ++a) {
      (bits[a] ? one_side : zero_side).members.push_back(enc.agents[a]);
    }
    std::vector<Coalition> cs;
    if (!zero_side.members.empty()) cs.push_back(std::move(zero_side));
    if (!one_side.members.empty()) cs.push_back(std::move(one_side));
    out.structure = CoalitionStructure(std::move(cs)).canonical();
    out.feasible = true;
    return out;
  }

  const bool exactly_one = enc.kind == Formulation::kKochenberger ||
                           enc.kind == Formulation::kOneHotCut;
  std::vector<Coalition> groups(enc.slots);
  Coalition zero_group;     // rqubo: shared "coalition 0"
  std::vector<Coalition> singletons;  // zens: all-zero agents

  for (int a = 0; a < n; ++a) {
    int set_slot = -1;
    int count = 0;
    for (int c = 0; c < enc.slots; ++c) {
      if (bits[enc.var(a, c)]) {
        ++count;
        set_slot = c;
      }
    }
    if (count > 1 || (exactly_one && count == 0)) {
      ++out.violations;
      continue;
    }
    if (count == 1) {
      groups[set_slot].members.push_back(enc.agents[a]);
    } else if (enc.kind == Formulation::kZens) {
      singletons.push_back(Coalition({enc.agents[a]}));
    } else {  // rqubo
      zero_group.members.push_back(enc.agents[a]);
    }
  }

  out.feasible = out.violations == 0;
  if (!out.feasible) return out;

  std::vector<Coalition> cs;
  if (!zero_group.members.empty()) cs.push_back(std::move(zero_group));
  for (auto& g : groups) {
    if (!g.members.empty()) cs.push_back(std::move(g));
  }
  for (auto& s : singletons) cs.push_back(std::move(s));
  out.structure = CoalitionStructure(std::move(cs)).canonical();
  return out;
}

void write_qubo(const Qubo& q, std::ostream& out) {
  out << "m " << q.num_vars << "\n";
  out << "offset " << format_double(q.offset) << "\n";
  for (const auto& [key, c] : q.coeffs) {
    out << key.first << " " << key.second << " " << format_double(c) << "\n";
  }
}

}  // namespace csgq
