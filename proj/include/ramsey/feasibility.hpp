#ifndef RAMSEY_FEASIBILITY_HPP
#define RAMSEY_FEASIBILITY_HPP

#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

#include "ramsey/colored_graph.hpp"

namespace ramsey {

// Verdicts are proofs-by-arithmetic, so everything is exact (halves occur).
using Rational = boost::rational<long long>;

// "622.5" for halves, plain integers otherwise, "a/b" for the rest
std::string format_rational(const Rational& r);

// degree -> maximum edge count over the relevant Ramsey-graph family
struct EdgeMaxTable {
    std::map<int, long long> entries;
    bool has(int n) const { return entries.count(n) != 0; }
    long long at(int n) const;
};

struct FeasibilityTables {
    EdgeMaxTable e1, e2;
    int bound1 = 0; // colour-1 degree must stay below this Ramsey number
    int bound2 = 0;
};

// Table used in the (J5,J6;37) argument, extended by the two border entries
// needed for the n=36 window.
FeasibilityTables builtin_j5j6_tables();

FeasibilityTables parse_tables(std::istream& in);

// C(n,3) - 1/2 * sum_j h[j] * j * (n-1-j)
Rational goodman_triangle_count(const DegreeHistogram& h);

// (1/3) * sum_v [e1(N1(v)) + e2(N2(v))]; must match mono_triangle_count
long long triangle_sum_via_neighborhoods(const ColoredCompleteGraph& g);

// E1(deg1 v) - e1(N1(v)) + E2(deg2 v) - e2(N2(v))
long long vertex_deficiency(const ColoredCompleteGraph& g, int v, const EdgeMaxTable& e1,
                            const EdgeMaxTable& e2);

struct DeficiencyLedger {
    int n = 0;
    Rational constant;                  // -3 C(n,3)
    int degree_lo = 0, degree_hi = -1;  // admissible colour-1 degree window
    std::vector<Rational> coefficients; // per degree in the window
    Rational max_coefficient;
    std::vector<int> argmax_degrees;

    Rational coefficient(int degree) const { return coefficients[degree - degree_lo]; }
};

DeficiencyLedger deficiency_sum_ledger(int n, const FeasibilityTables& tables);

enum class FeasibilityKind { Infeasible, Open };
enum class FeasibilityReason {
    NegativeSum,        // the deficiency sum is negative for every degree sequence
    Divisibility,       // forced triangle count is not an integer
    PositiveSlack,      // max sum > 0
    TieNotForced,       // max sum == 0 but reached by several degrees
    DivisibilityPasses, // max sum == 0, forced counts integral
};

struct FeasibilityVerdict {
    FeasibilityKind kind = FeasibilityKind::Open;
    FeasibilityReason reason = FeasibilityReason::PositiveSlack;
    bool tight = false;
    int tight_degree = -1;
    int divisibility_color = 0; // colour whose forced triangle count fails
    Rational forced_triangles;  // the non-integral count when divisibility fails
    DeficiencyLedger ledger;
};

FeasibilityVerdict feasibility_verdict(int n, const FeasibilityTables& tables);

} // namespace ramsey

#endif
