#ifndef SEMWIDTH_LP_HPP
#define SEMWIDTH_LP_HPP

#include <cstddef>
#include <vector>

#include "semwidth/rational.hpp"

namespace semwidth {

// Dense linear program in the form
//     minimize c . x   subject to   A x >= b,  x >= 0.
// Solved by an exact rational two-phase simplex with Bland's anti-cycling
// rule; the dual solution is read off the final basis so that every optimum
// ships with a certificate.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;           // size num_vars
    std::vector<std::vector<Rational>> rows;   // each size num_vars
    std::vector<Rational> rhs;                 // one per row
};

struct LPSolution {
    bool feasible = false;
    Rational objective;
    std::vector<Rational> x;     // primal, size num_vars
    std::vector<Rational> dual;  // y >= 0 with A^T y <= c and y.b = objective
};

LPSolution solve_min_lp(const LinearProgram& lp);

}  // namespace semwidth

#endif
