#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algdesign/design.hpp"
#include "algdesign/errors.hpp"

namespace algdesign {

using StateVector = std::vector<std::uint64_t>;

/// Minimal generators of the complement of a downward-closed set: the
/// candidate leading terms {alpha + e_i not in the model}, minimised.
std::vector<Monomial> border(const Staircase& model);

/// Reduced basis under Weight(w, DegRevLex); w must be non-negative.
GroebnerBasis gb_for_weight(const Design& d, std::span<const Rational> w);

struct MembershipResult {
    bool member = false;
    RationalVector witness;  // strictly positive weight vector when member
    std::string reason;      // why the model is rejected
};

/// Decides whether some term order yields `model` as the quotient basis. A
/// witness is certified by gb_for_weight; throws InvalidArgument when the
/// model size differs from the design size.
MembershipResult model_membership(const Design& d, const Staircase& model);

struct FanLimits {
    std::size_t max_models = 50000;
    std::chrono::duration<double> time_budget = std::chrono::seconds(300);

    static FanLimits unlimited() {
        return {std::numeric_limits<std::size_t>::max(), std::chrono::hours(24 * 365)};
    }
};

enum class Execution { Serial, Parallel };

struct FanModel {
    Staircase model;
    RationalVector witness;
    StateVector state;
    std::uint64_t total_degree = 0;
};

struct OrbitClass {
    Staircase representative;           // smallest member in canonical order
    std::vector<std::size_t> members;   // indices into the model list
    std::size_t orbit_size = 0;         // size of the full permutation orbit
    bool closed = false;                // whole orbit lies in the model set
    std::uint64_t total_degree = 0;
    std::string hilbert;                // e.g. `1 + 6s + s^2`
};

struct FanReport {
    std::size_t arity = 0;
    std::size_t design_size = 0;
    std::vector<FanModel> models;  // canonical staircase order
    std::vector<OrbitClass> classes;
};

/// Raised when the enumeration exceeds its limits; carries the models found
/// so far in canonical order.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::vector<FanModel> partial)
        : Error(what), partial_(std::move(partial)) {}
    const std::vector<FanModel>& partial() const { return partial_; }

private:
    std::vector<FanModel> partial_;
};

/// All staircases achievable by some term order. Serial and parallel
/// execution give identical reports.
FanReport enumerate_fan(const Design& d, const FanLimits& limits = {}, Execution exec = Execution::Parallel);

/// Orbits under permutation of the variables; classes sorted by total degree,
/// then representative.
std::vector<OrbitClass> classify_orbits(std::span<const Staircase> models);

struct StateGeometry {
    std::vector<StateVector> states;    // per model, in report order
    std::vector<StateVector> vertices;  // distinct vertices, sorted
    std::uint64_t min_total_degree = 0;
    std::uint64_t max_total_degree = 0;
};

StateGeometry state_geometry(const FanReport& report, Execution exec = Execution::Parallel);

/// Strictly positive w with w.alpha < w.beta for every model element alpha and
/// border monomial beta, or nullopt.
std::optional<RationalVector> corner_cut_witness(const Staircase& model);

/// All corner-cut staircases with n elements in k variables, canonical order.
std::vector<Staircase> corner_cut_staircases(std::size_t k, std::size_t n, const FanLimits& limits = {});

struct CornerCutReport {
    std::vector<std::size_t> corner_cuts;  // indices into the fan models
    std::size_t corner_cut_count = 0;      // all size-n corner cuts in k variables
    bool generic = false;
};

CornerCutReport corner_cut_analysis(const FanReport& report, const FanLimits& limits = {});

}  // namespace algdesign
