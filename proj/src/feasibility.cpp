#include "ramsey/feasibility.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace ramsey {

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    if (r.denominator() == 2) {
        long long whole = r.numerator() / 2;
        if (r.numerator() < 0 && r.numerator() % 2 != 0) {
            // -1245/2 prints as -622.5
            whole = (r.numerator() + 1) / 2;
            return (whole == 0 ? "-0" : std::to_string(whole)) + ".5";
        }
        return std::to_string(whole) + ".5";
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

long long EdgeMaxTable::at(int n) const {
    auto it = entries.find(n);
    if (it == entries.end())
        throw std::out_of_range("edge-max table has no entry for degree " + std::to_string(n));
    return it->second;
}

FeasibilityTables builtin_j5j6_tables() {
    FeasibilityTables t;
    t.bound1 = 17; // R(J4,J6)
    t.bound2 = 22; // R(J5,J5)
    t.e1.entries = {{14, 39}, {15, 45}, {16, 50}};    // E1(J4,J6;n)
    t.e2.entries = {{19, 93}, {20, 100}, {21, 105}};  // E2(J5,J5;n)
    return t;
}

FeasibilityTables parse_tables(std::istream& in) {
    FeasibilityTables t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "E1" || key == "E2") {
            int n;
            long long v;
            if (!(ls >> n >> v))
                throw std::runtime_error("bad table line " + std::to_string(lineno));
            (key == "E1" ? t.e1 : t.e2).entries[n] = v;
        } else if (key == "bound1" || key == "bound2") {
            int v;
            if (!(ls >> v)) throw std::runtime_error("bad table line " + std::to_string(lineno));
            (key == "bound1" ? t.bound1 : t.bound2) = v;
        } else {
            throw std::runtime_error("unknown table key '" + key + "' on line " +
                                     std::to_string(lineno));
        }
    }
    if (t.bound1 <= 0 || t.bound2 <= 0) throw std::runtime_error("tables need bound1 and bound2");
    return t;
}

namespace {
long long choose3(long long n) { return n * (n - 1) * (n - 2) / 6; }
} // namespace

Rational goodman_triangle_count(const DegreeHistogram& h) {
    long long n = h.n;
    Rational total(choose3(n), 1);
    for (long long j = 0; j < static_cast<long long>(h.counts.size()); ++j)
        total -= Rational(h.counts[j] * j * (n - 1 - j), 2);
    return total;
}

long long triangle_sum_via_neighborhoods(const ColoredCompleteGraph& g) {
    if (!g.is_total() || g.colors() != 2)
        throw std::invalid_argument("neighborhood triangle sum needs a total 2-coloring");
    long long sum = 0;
    for (int v = 0; v < g.order(); ++v)
        for (int t = 1; t <= 2; ++t) sum += neighborhood_subgraph(g, v, t).edge_count(t);
    if (sum % 3 != 0) throw std::logic_error("neighborhood edge sum not divisible by 3");
    return sum / 3;
}

long long vertex_deficiency(const ColoredCompleteGraph& g, int v, const EdgeMaxTable& e1,
                            const EdgeMaxTable& e2) {
    if (!g.is_total() || g.colors() != 2)
        throw std::invalid_argument("deficiency needs a total 2-coloring");
    long long d = 0;
    d += e1.at(g.degree(1, v)) - neighborhood_subgraph(g, v, 1).edge_count(1);
    d += e2.at(g.degree(2, v)) - neighborhood_subgraph(g, v, 2).edge_count(2);
    return d;
}

DeficiencyLedger deficiencyLedger_impl(int n, const FeasibilityTables& t) {
    DeficiencyLedger led;
    led.n = n;
    led.constant = Rational(-3 * choose3(n), 1);
    led.degree_lo = std::max(0, n - t.bound2); // colour-2 degree below bound2
    led.degree_hi = std::min(n - 1, t.bound1 - 1);
    if (led.degree_lo > led.degree_hi)
        throw std::out_of_range("empty degree window: bounds rule every vertex out");
    bool first = true;
    for (int i = led.degree_lo; i <= led.degree_hi; ++i) {
        Rational coef = Rational(t.e1.at(i), 1) + Rational(t.e2.at(n - 1 - i), 1) +
                        Rational(3LL * i * (n - 1 - i), 2);
        led.coefficients.push_back(coef);
        if (first || coef > led.max_coefficient) {
            led.max_coefficient = coef;
            led.argmax_degrees = {i};
            first = false;
        } else if (coef == led.max_coefficient) {
            led.argmax_degrees.push_back(i);
        }
    }
    return led;
}

DeficiencyLedger deficiency_sum_ledger(int n, const FeasibilityTables& tables) {
    return deficiencyLedger_impl(n, tables);
}

FeasibilityVerdict feasibility_verdict(int n, const FeasibilityTables& tables) {
    FeasibilityVerdict v;
    v.ledger = deficiency_sum_ledger(n, tables);
    // the sum is maximised by putting all n vertices on an argmax degree
    Rational best = v.ledger.constant + Rational(n, 1) * v.ledger.max_coefficient;
    if (best < 0) {
        v.kind = FeasibilityKind::Infeasible;
        v.reason = FeasibilityReason::NegativeSum;
        return v;
    }
    if (best > 0) {
        v.kind = FeasibilityKind::Open;
        v.reason = FeasibilityReason::PositiveSlack;
        return v;
    }
    if (v.ledger.argmax_degrees.size() != 1) {
        v.kind = FeasibilityKind::Open;
        v.reason = FeasibilityReason::TieNotForced;
        return v;
    }
    // every vertex is forced to the tight degree with zero deficiency, so the
    // per-colour triangle counts n*E_i/3 must be integers
    v.tight = true;
    v.tight_degree = v.ledger.argmax_degrees.front();
    Rational t1(static_cast<long long>(n) * tables.e1.at(v.tight_degree), 3);
    Rational t2(static_cast<long long>(n) * tables.e2.at(n - 1 - v.tight_degree), 3);
    if (t1.denominator() != 1) {
        v.kind = FeasibilityKind::Infeasible;
        v.reason = FeasibilityReason::Divisibility;
        v.divisibility_color = 1;
        v.forced_triangles = t1;
    } else if (t2.denominator() != 1) {
        v.kind = FeasibilityKind::Infeasible;
        v.reason = FeasibilityReason::Divisibility;
        v.divisibility_color = 2;
        v.forced_triangles = t2;
    } else {
        v.kind = FeasibilityKind::Open;
        v.reason = FeasibilityReason::DivisibilityPasses;
    }
    return v;
}

} // namespace ramsey
