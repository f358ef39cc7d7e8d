#ifndef LRCDUAL_SIMPLEX_HPP
#define LRCDUAL_SIMPLEX_HPP

#include <iosfwd>
#include <vector>

#include "lrcdual/exact.hpp"

namespace lrcdual {

enum class Relation { le, eq, ge };
enum class Sense { minimize, maximize };

struct LpConstraint {
    std::vector<Rat> coeffs;
    Relation rel = Relation::le;
    Rat rhs;
};

/// A linear program over nonnegative variables. All data is exact rational.
struct LpProblem {
    int num_vars = 0;
    Sense sense = Sense::minimize;
    std::vector<Rat> objective;  // size num_vars
    std::vector<LpConstraint> rows;

    /// Human-readable listing, one constraint per line (for cross-checking
    /// against external solvers).
    void dump(std::ostream& os) const;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rat objective;                // exact optimum when status == optimal
    std::vector<Rat> assignment;  // size num_vars when optimal
    std::vector<Rat> dual;        // one multiplier per original row when optimal
};

/// Two-phase primal simplex on a dense rational tableau, Bland's rule
/// throughout (guaranteed termination). On an optimal exit the solver
/// re-checks every original constraint exactly, verifies the reduced-cost
/// optimality certificate, and asserts primal objective == dual objective;
/// any violation throws std::logic_error. One solve per instance; distinct
/// instances are independent and may run concurrently.
class SimplexSolver {
  public:
    explicit SimplexSolver(const LpProblem& problem);
    LpSolution solve();

  private:
    enum class ColKind { structural, slack, surplus, artificial };

    int pick_entering() const;
    int pick_leaving(int col) const;
    void pivot(int row, int col);
    void price_out(const std::vector<Rat>& costs);
    bool optimize();  // returns false on unbounded

    const LpProblem& p_;
    int m_ = 0;                         // tableau rows
    int cols_ = 0;                      // tableau columns (excl. rhs)
    std::vector<std::vector<Rat>> t_;   // m x cols
    std::vector<Rat> b_;                // rhs, kept >= 0
    std::vector<Rat> cost_;             // reduced costs, size cols
    Rat z_;                             // objective of the current basis
    std::vector<int> basis_;            // size m
    std::vector<ColKind> kind_;         // size cols
    std::vector<bool> banned_;          // size cols
    std::vector<int> row_origin_;       // tableau row -> original row index
    std::vector<Rat> row_multiplier_;   // original row -> transform multiplier
    std::vector<Relation> row_rel_;     // relation after transformation
    bool used_ = false;
};

LpSolution lp_solve(const LpProblem& problem);

}  // namespace lrcdual

#endif
