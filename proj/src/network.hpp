#pragma once

#include "poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace crnkit {

// Errors are split by who gets to see them: parse/usage problems (bad model
// text, unknown symbols, malformed requests) versus analysis refusals
// (assumption violations discovered while computing).
class CrnError : public std::runtime_error {
public:
    enum class Kind { parse, analysis };
    CrnError(Kind kind, const std::string& msg, int line = 0, int col = 0)
        : std::runtime_error(msg), kind(kind), line(line), col(col) {}
    Kind kind;
    int line;
    int col;
};

[[noreturn]] inline void parse_fail(const std::string& msg, int line = 0, int col = 0) {
    std::string full = msg;
    if (line > 0) {
        full = "line " + std::to_string(line);
        if (col > 0) full += ", col " + std::to_string(col);
        full += ": " + msg;
    }
    throw CrnError(CrnError::Kind::parse, full, line, col);
}

[[noreturn]] inline void analysis_fail(const std::string& msg) {
    throw CrnError(CrnError::Kind::analysis, msg);
}

// Species index -> multiplicity (>= 1). Empty map is the empty complex.
using Multiset = std::map<int, long>;

struct Reaction {
    Multiset reactants;
    Multiset products;
    Polynomial rate;
    int line = 0;
};

// Variable universe for all polynomials attached to a network: species first
// (indices 0..S-1), then parameters (S..S+P-1).
struct ReactionNetwork {
    std::vector<std::string> species;
    std::vector<std::string> params;
    std::vector<Reaction> reactions;

    std::size_t nvars() const { return species.size() + params.size(); }
    std::size_t param_var(std::size_t p) const { return species.size() + p; }
    int species_index(const std::string& name) const;
    int param_index(const std::string& name) const;
    const std::string& var_name(std::size_t v) const;

    bool operator==(const ReactionNetwork& o) const;
};

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<long> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    long& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    long at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct StoichStructure {
    IntMatrix alpha;  // reactant multiplicities, species x reactions
    IntMatrix beta;   // product multiplicities
    IntMatrix gamma;  // beta - alpha
};

ReactionNetwork parse_network(const std::string& text);
std::string serialize_network(const ReactionNetwork& net);

StoichStructure stoichiometry(const ReactionNetwork& net);

// RHS(X) = gamma * rts(X), one exact polynomial per species.
std::vector<Polynomial> build_rhs(const ReactionNetwork& net);

struct MassActionReport {
    std::vector<bool> reaction_ok;  // rate == k * prod species^alpha, k > 0 times params
    bool all_ok = true;
};
MassActionReport validate_mass_action(const ReactionNetwork& net);

struct RateSignReport {
    struct Finding {
        int reaction;
        std::vector<double> point;  // species values at the offending sample
        double value;
    };
    std::vector<bool> flagged;
    std::vector<Finding> findings;  // first offending sample per flagged reaction
    bool all_nonnegative = true;
};
// Samples rates on a deterministic quasi-random grid of species values in
// [0, 10] (origin included); parameters default to 1 unless assigned.
RateSignReport validate_rates(const ReactionNetwork& net,
                              const std::map<std::string, double>& params = {},
                              int samples = 256);

// Species produced by a reaction with an empty reactant complex (external
// arrivals). Such species can never belong to a siphon.
std::vector<bool> input_species(const ReactionNetwork& net, const StoichStructure& st);

// Reactions with a nonzero, entrywise-nonnegative gamma column and a nonempty
// reactant multiset: net creation without consumption (e.g. D+Y -> 2D+Y).
std::vector<int> hidden_inflow_reactions(const ReactionNetwork& net, const StoichStructure& st);

std::string complex_to_string(const ReactionNetwork& net, const Multiset& ms);
std::string reaction_to_string(const ReactionNetwork& net, const Reaction& r);

}  // namespace crnkit
