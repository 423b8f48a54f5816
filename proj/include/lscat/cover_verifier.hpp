#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lscat/affine_alcove.hpp"

namespace lscat {

enum class Check {
    VertexAlcoves,      // |W_k| and the alcoves around v_k agree with the vertex subsystem
    CellWalls,          // an integral wall through a point of C_k passes through v_k
    CellTransport,      // w carrying a point of C_k into C_k fixes v_k
    CellCover,          // the cells cover the closed alcove
    RetractionWelldef,  // the straight-line retraction of C_k onto v_k commutes with W_k
    GrassCover,
    SpinDoubleCover,
    DimIdentity,
};

/// "vertex_alcoves", "cell_walls", ..., "dim_identity".
std::string to_string(Check c);
/// Throws std::invalid_argument for an unknown name.
Check parse_check(const std::string& name);
/// Every check in declaration order.
std::vector<Check> all_checks();
/// The checks that make sense for a type: grass_cover needs family C,
/// spin_double_cover needs B or D, dim_identity needs a classical family.
std::vector<Check> supported_checks(const LieType& t);
bool is_supported(Check c, const LieType& t);

struct VerifyPlan {
    LieType lie_type;
    std::vector<Check> checks;
    std::uint64_t seed = 0;
    std::size_t samples = 500;
    std::size_t word_length_bound = 8;
    long grid_denominator = 12;

    /// Throws std::invalid_argument for samples = 0, word_length_bound = 0,
    /// grid_denominator < 1, an empty or repeated check list, or a check
    /// unsupported for the family.
    void validate() const;
};

/// Everything needed to re-run a failing instance.
struct Counterexample {
    Check check = Check::VertexAlcoves;
    std::size_t k = 0;
    std::vector<TorusPoint> points;          // sampled torus points, if any
    std::optional<AffineIsometry> element;   // affine Weyl element involved, if any
    std::optional<Rat> s;                    // retraction parameter, if any
    int variant = 0;                         // which clause of the check failed
    std::size_t n = 0, plane_dim = 0, j = 0; // Grassmannian instances
    QuatMatrix matrix;                       // plane representative or orbit element
    std::string detail;
};

struct CheckResult {
    Check check = Check::VertexAlcoves;
    bool passed = true;
    std::size_t instances = 0;   // instances where the statement's hypothesis held
    std::size_t sampled = 0;     // candidates drawn, including vacuous ones
    std::optional<Counterexample> counterexample;
    double seconds = 0.0;
};

struct VerifyReport {
    VerifyPlan plan;
    std::vector<CheckResult> results;  // in plan order

    [[nodiscard]] bool passed() const;
};

/// Runs the plan. Checks run concurrently, each with its own generator
/// seeded from the plan seed and the check name, so the report is
/// independent of scheduling. Throws std::invalid_argument for an invalid plan.
VerifyReport run(const VerifyPlan& plan);

/// Runs a single check with the plan's parameters.
CheckResult run_check(const VerifyPlan& plan, Check check);

/// Torus-level well-definedness of the retraction R_k: for sampled u in C_k
/// and affine Weyl elements w of word length <= bound with w(u) in C_k,
/// w(v_k) = v_k and w((1-s)u + s v_k) = (1-s) w(u) + s v_k.
CheckResult retraction_welldef_check(const RootSystem& rs, std::size_t k, std::size_t trials, std::uint64_t seed = 0,
                                std::size_t word_length_bound = 8, long grid_denominator = 12);

/// Re-checks a reported counterexample against the underlying operations.
/// True when the failure is confirmed.
bool reproduce(const LieType& t, const Counterexample& c);

/// Random point of the closed fundamental alcove with barycentric
/// coordinates in (1/denominator)Z. When `on_boundary` is set, the weight of
/// at least one vertex is zero, so the point lies on a face.
TorusPoint sample_alcove_point(const FundamentalAlcove& alcove, long denominator, bool on_boundary,
                               std::mt19937_64& rng);

}  // namespace lscat
