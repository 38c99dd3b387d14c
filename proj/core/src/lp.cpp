#include "semwidth/lp.hpp"

#include <optional>
#include <stdexcept>

#include "semwidth/errors.hpp"

namespace semwidth {

namespace {

// Tableau layout: columns [ x (n) | surplus (m) | artificial (m) | rhs ].
// Row i encodes  A_i x - s_i + a_i = b_i  with b_i >= 0.
class Simplex {
public:
    explicit Simplex(const LinearProgram& lp)
        : n_(lp.num_vars), m_(lp.rows.size()), cols_(n_ + 2 * m_ + 1) {
        tableau_.assign(m_, std::vector<Rational>(cols_, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = lp.rows[i][j];
            tableau_[i][surplus(i)] = Rational(-1);
            tableau_[i][artificial(i)] = Rational(1);
            tableau_[i][rhs()] = lp.rhs[i];
            if (tableau_[i][rhs()] < Rational(0))
                throw DomainError("simplex requires nonnegative right-hand sides");
            basis_[i] = artificial(i);
        }
    }

    // Returns nullopt when phase 1 proves infeasibility.
    std::optional<LPSolution> solve(const std::vector<Rational>& costs) {
        // Phase 1: minimize the sum of the artificials.
        std::vector<Rational> phase1(cols_ - 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) phase1[artificial(i)] = Rational(1);
        Rational value = run_phase(phase1, /*allow_artificial=*/true);
        if (value != Rational(0)) return std::nullopt;
        evict_artificials();

        // Phase 2: the real objective over the structural columns.
        std::vector<Rational> phase2(cols_ - 1, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) phase2[j] = costs[j];
        run_phase(phase2, /*allow_artificial=*/false);

        LPSolution out;
        out.feasible = true;
        out.x.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) out.x[basis_[i]] = tableau_[i][rhs()];
        out.objective = Rational(0);
        for (std::size_t j = 0; j < n_; ++j) out.objective += costs[j] * out.x[j];
        // Dual: y_i = c_B B^-1 e_i = -(reduced cost of artificial column i),
        // since artificial columns carry zero phase-2 cost.
        out.dual.assign(m_, Rational(0));
        const std::vector<Rational> reduced = reduced_costs(phase2);
        for (std::size_t i = 0; i < m_; ++i) out.dual[i] = -reduced[artificial(i)];
        return out;
    }

private:
    std::size_t surplus(std::size_t i) const { return n_ + i; }
    std::size_t artificial(std::size_t i) const { return n_ + m_ + i; }
    std::size_t rhs() const { return cols_ - 1; }

    std::vector<Rational> reduced_costs(const std::vector<Rational>& costs) const {
        std::vector<Rational> reduced = costs;
        reduced.resize(cols_ - 1, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational cb = costs[basis_[i]];
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j + 1 < cols_; ++j)
                reduced[j] -= cb * tableau_[i][j];
        }
        return reduced;
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational p = tableau_[row][col];
        for (std::size_t j = 0; j < cols_; ++j) tableau_[row][j] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tableau_[i][col].is_zero()) continue;
            const Rational factor = tableau_[i][col];
            for (std::size_t j = 0; j < cols_; ++j)
                tableau_[i][j] -= factor * tableau_[row][j];
        }
        basis_[row] = col;
    }

    Rational run_phase(const std::vector<Rational>& costs, bool allow_artificial) {
        while (true) {
            const std::vector<Rational> reduced = reduced_costs(costs);
            // Bland: entering column = smallest eligible index.
            std::optional<std::size_t> entering;
            const std::size_t limit = allow_artificial ? cols_ - 1 : n_ + m_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (reduced[j] < Rational(0)) {
                    entering = j;
                    break;
                }
            }
            if (!entering) break;
            // Ratio test; ties leave the row whose basic column index is
            // smallest (Bland again).
            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tableau_[i][*entering] <= Rational(0)) continue;
                const Rational ratio = tableau_[i][rhs()] / tableau_[i][*entering];
                if (!leaving || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving) throw DomainError("linear program is unbounded");
            pivot(*leaving, *entering);
        }
        Rational value(0);
        for (std::size_t i = 0; i < m_; ++i)
            value += costs[basis_[i]] * tableau_[i][rhs()];
        return value;
    }

    // After phase 1 every artificial sits at zero. Pivot basic artificials
    // out on any structural column; an all-zero row is redundant and its
    // artificial may stay basic (it never moves again).
    void evict_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_ + m_) continue;
            for (std::size_t j = 0; j < n_ + m_; ++j) {
                if (!tableau_[i][j].is_zero()) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    std::size_t n_;
    std::size_t m_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LPSolution solve_min_lp(const LinearProgram& lp) {
    if (lp.objective.size() != lp.num_vars)
        throw std::invalid_argument("objective size mismatch");
    if (lp.rows.size() != lp.rhs.size())
        throw std::invalid_argument("row/rhs size mismatch");
    for (const auto& row : lp.rows)
        if (row.size() != lp.num_vars) throw std::invalid_argument("row size mismatch");

    if (lp.rows.empty()) {
        LPSolution out;
        out.feasible = true;
        out.objective = Rational(0);
        out.x.assign(lp.num_vars, Rational(0));
        return out;
    }

    Simplex simplex(lp);
    auto solution = simplex.solve(lp.objective);
    if (!solution) {
        LPSolution out;
        out.feasible = false;
        return out;
    }
    return *solution;
}

}  // namespace semwidth
