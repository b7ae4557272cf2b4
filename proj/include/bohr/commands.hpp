#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohr/operators.hpp"
#include "bohr/report.hpp"
#include "bohr/series.hpp"

namespace bohr {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitDomain = 2,
    kExitSolver = 3,
    kExitViolation = 4,
    kExitReconstruction = 5,
};

/// Flags shared by the bohrlab subcommands. Each command reads the subset
/// it needs and echoes exactly that subset under "params".
struct CommandOptions {
    std::string op = "cesaro";
    double beta = 1.0;
    double gamma = 1.0;
    int m = 0;
    std::optional<double> r;
    std::int64_t samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-12;
    double eps = 1e-12;
    double quad_tol = 1e-10;
    std::string r_mode = "below";
    std::vector<double> grid;
    std::optional<double> grid_from;
    std::optional<double> grid_to;
    int grid_steps = 0;
    std::vector<double> a_values;
    int threads = 1;
    int max_factors = 6;
};

/// cesaro|cbeta|bernardi|libera|alexander|primitive|bohr -> operator.
/// Throws DomainError for unknown names or out-of-domain parameters.
OperatorKind operator_from_options(const CommandOptions& options);

RunReport cmd_radius(const CommandOptions& options);
RunReport cmd_curve(const CommandOptions& options);
RunReport cmd_verify(const CommandOptions& options);
RunReport cmd_sharpness(const CommandOptions& options);
RunReport cmd_selftest(const CommandOptions& options, WeightGenerator generator = &binomial_coeffs);

}  // namespace bohr
