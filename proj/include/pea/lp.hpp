#pragma once

#include <pea/rational.hpp>

#include <cstddef>
#include <vector>

namespace pea::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
    RationalVector coefficients;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

/// maximize objective . x subject to the constraints and x >= 0.
struct Program {
    RationalVector objective;
    std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational optimum;
    RationalVector solution;
    std::size_t pivots = 0;
};

/// Exact two-phase tableau simplex. Entering and leaving variables follow
/// Bland's rule, so the method terminates and the pivot sequence depends
/// only on the input.
Result maximize(const Program& program);

}  // namespace pea::lp
