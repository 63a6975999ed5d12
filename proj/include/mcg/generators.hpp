#pragma once

#include "mcg/surface.hpp"

#include <iosfwd>

namespace mcg {

// Named mapping-class generators acting on the twice-punctured surface.
struct GeneratorName {
    enum class Kind {
        Rho,        // clockwise 2*pi/g rotation
        RhoExch,    // exchange of knobs i and j
        Omega,      // counterclockwise semitwist of knob i
        Tau,        // right-handed twist along the meridian beta_i
        Eta,        // slide of Z_i about puncture k (1 or 2)
        EtaPrime,   // slide of Z'_i about puncture k
        Theta,      // slide of Z_i about the meridian foot of knob j
        ThetaPrime, // slide of Z'_i about the meridian foot of knob j
        Xi,         // slide of Z_i through handle j
        XiPrime,    // slide of Z'_i through handle j
        TwistDelta, // twist along the knob boundary delta_i
        TwistAlpha, // twist along the through-handle curve alpha_i (probe)
        TGamma      // genus-one twist t_gamma
    };

    Kind kind = Kind::Rho;
    int i = 0; // first index (or puncture-free)
    int j = 0; // second index / puncture number

    static GeneratorName rho() { return {Kind::Rho, 0, 0}; }
    static GeneratorName rho_exch(int i, int j) { return {Kind::RhoExch, i, j}; }
    static GeneratorName omega(int i) { return {Kind::Omega, i, 0}; }
    static GeneratorName tau(int i) { return {Kind::Tau, i, 0}; }
    static GeneratorName eta(int i, int k) { return {Kind::Eta, i, k}; }
    static GeneratorName eta_prime(int i, int k) { return {Kind::EtaPrime, i, k}; }
    static GeneratorName theta(int i, int j) { return {Kind::Theta, i, j}; }
    static GeneratorName theta_prime(int i, int j) { return {Kind::ThetaPrime, i, j}; }
    static GeneratorName xi(int i, int j) { return {Kind::Xi, i, j}; }
    static GeneratorName xi_prime(int i, int j) { return {Kind::XiPrime, i, j}; }
    static GeneratorName twist_delta(int i) { return {Kind::TwistDelta, i, 0}; }
    static GeneratorName twist_alpha(int i) { return {Kind::TwistAlpha, i, 0}; }
    static GeneratorName tgamma() { return {Kind::TGamma, 0, 0}; }

    std::string str() const;
    void validate(int genus) const; // throws GeneratorError

    bool operator==(const GeneratorName& o) const {
        return kind == o.kind && i == o.i && j == o.j;
    }
    bool operator<(const GeneratorName& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

class GeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hand-derived automorphism table for a named generator (cached per genus;
// cache access is serialized).
const Automorphism& build_generator(const SurfaceModel& model, const GeneratorName& name);

// Independently derived homology action (transvection / signed permutation /
// elementary forms), for cross-checking abelianization_matrix of the table.
Matrix homology_oracle(const SurfaceModel& model, const GeneratorName& name);

// A word in named generators with exponents; empty = identity.
struct MappingClassExpr {
    std::vector<std::pair<GeneratorName, int>> factors;
};

// left-to-right composition, leftmost factor applied last
Automorphism evaluate(const SurfaceModel& model, const MappingClassExpr& expr);

// Named slide loops of Prop-2.1-style products.
struct LoopName {
    enum class Kind { E, G, F } kind = Kind::E;
    int index = 0; // j for E/G, k for F
};

// product of the named slides of Z_i (Z'_i when primed) along the loops,
// leftmost factor applied last
Automorphism slide_product(const SurfaceModel& model, int i,
                           const std::vector<LoopName>& loops, bool primed);

// theorem generating set: 3 generators at genus one, 8 otherwise
std::vector<GeneratorName> theorem_generating_set(int genus);

struct RelationResult {
    std::string name;
    bool pass = false;
    int tau_power = 0; // slack used, 0 when exact
    std::string detail;
};

struct RelationReport {
    std::vector<RelationResult> results;
    bool all_pass() const;
};

// executable relation suite R1..R6
RelationReport relation_suite(const SurfaceModel& model);

// test hook: run the suite with one generator table replaced
RelationReport relation_suite_with_override(const SurfaceModel& model,
                                            const GeneratorName& name,
                                            const Automorphism& table);

} // namespace mcg
