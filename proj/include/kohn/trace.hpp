#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kohn/json_io.hpp"
#include "kohn/localalg.hpp"

namespace kohn {

// A multiplier: a germ together with its certified subellipticity order
// (an exact rational lower bound) and the trace node that derived it.
struct Multiplier {
    Poly poly;
    Rat order;
    int node = -1;
};

enum class NodeKind { Pre, P1, P2, Axiom };

std::string node_kind_name(NodeKind k);
NodeKind node_kind_from_name(const std::string& s);

// One derivation step.  Every node stores enough to re-verify its defining
// identity against the recorded outputs of its inputs:
//   Pre    - admitted pre-multiplier, vanishing at 0, order 1/2
//   P1     - output = jacobian determinant of the inputs; halved order
//   P2     - certificate: unit * output^root = sum cof_i * input_i
//   Axiom  - linear coordinate transport: output = input o matrix
struct TraceNode {
    NodeKind kind = NodeKind::Pre;
    std::vector<int> inputs;
    std::vector<unsigned> vars;  // P1: differentiated variables (0-based)
    unsigned root = 0;           // P2
    std::optional<MembershipCertificate> cert;  // P2
    std::optional<LinearChange> matrix;         // Axiom
    Poly output;
    Rat order;
};

struct NodeCheck {
    int id = 0;
    bool ok = true;
    std::string message;
};

struct VerifyReport {
    bool ok = true;
    std::vector<NodeCheck> nodes;
    unsigned count_pre = 0, count_p1 = 0, count_p2 = 0, count_axiom = 0;
    unsigned max_root = 0;
    std::vector<std::string> final_orders;  // orders of terminal nodes
    std::vector<int> failed_nodes;
};

// Append-only derivation DAG.  Single writer; readers may share freely.
class Trace {
public:
    explicit Trace(unsigned nvars) : nvars_(nvars) {}

    unsigned nvars() const { return nvars_; }
    const std::vector<TraceNode>& nodes() const { return nodes_; }
    const TraceNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return nodes_.size(); }

    const std::vector<Poly>& premultiplier_set() const { return premultipliers_; }
    void set_premultiplier_set(std::vector<Poly> S) { premultipliers_ = std::move(S); }

    int append(TraceNode node);

    // Best known multiplier with this exact polynomial, if any.
    std::optional<Multiplier> best_for(const Poly& p) const;

    Json to_json() const;
    static Trace from_json(const Json& j);

private:
    unsigned nvars_;
    std::vector<TraceNode> nodes_;
    std::vector<Poly> premultipliers_;
    std::unordered_multimap<std::size_t, int> by_hash_;
};

// Kohn's procedures as trace-building steps.

// Admit a germ vanishing at the reference point; order 1/2.
Multiplier register_premultiplier(const Poly& p, Trace& trace);

// (P1): Jacobian determinant of n multipliers; order = min(1/2, min in)/2.
Multiplier apply_p1(const std::vector<Multiplier>& ms, Trace& trace);

// (P2): g with g^r in the ideal of the inputs; minimal certified root,
// searched up to the effective Nullstellensatz cap; order = min in / r.
Multiplier apply_p2(const Poly& g, const std::vector<Multiplier>& ms, Trace& trace,
                    RandomSource& rng, const Caps& caps = {});

// (P2) with an explicit root cap and a prebuilt tracked basis of the
// inputs' ideal.  Throws verification_error if no root <= cap certifies.
Multiplier apply_p2_capped(const Poly& g, const std::vector<Multiplier>& ms,
                           const StandardBasis& sb, unsigned cap, Trace& trace,
                           const Caps& caps = {});

// (P2) from a ready-made certificate with root r.
Multiplier apply_p2_with_cert(const Poly& g, const std::vector<Multiplier>& ms, unsigned r,
                              MembershipCertificate cert, Trace& trace);

// Linear transport: a multiplier of order e stays a multiplier of order e
// under an invertible linear change of coordinates.
Multiplier transport(const Multiplier& m, const LinearChange& L, Trace& trace);

// For an invertible germ: 1 = unit^{-1} * poly, a P2 step with root 1.
Multiplier normalize_unit(const Multiplier& m, Trace& trace);

// Re-executes every node's defining identity and order arithmetic.
VerifyReport verify_trace(const Trace& trace);

Json verify_report_to_json(const VerifyReport& r);

}  // namespace kohn
