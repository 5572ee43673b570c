#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slgal/asymptotics.hpp"
#include "slgal/kimura.hpp"

namespace slgal {

struct SweepRow {
    double param;
    std::vector<CandidateEigenvalue> eigenvalues;  // each passed verify() when verification was requested
    double bound_lo, bound_hi;
};

struct SweepTable {
    std::string parameter;
    std::vector<SweepRow> rows;  // ascending in param
    bool sqrt_bounds = false;    // bounds are on sqrt(lambda)
};

/// Rows over nu- in [nu_lo, nu_hi] with alpha2 = alpha1 nu- + alpha3/alpha1.
/// Bounds: sqrt(max(nu-, 0)) and alpha2 / (2 sqrt(alpha3)).
SweepTable sweep_hulthen(double alpha1, double alpha3, double nu_lo, double nu_hi, int n, bool verified = true);

/// Rows over alpha in [a_lo, a_hi]; bounds max(alpha - 1, -alpha) and sup nu.
SweepTable sweep_allen_cahn(double a_lo, double a_hi, int n, bool verified = true);

/// CSV: param,branch_k,lambda,sqrt_lambda,bound_lo,bound_hi
void write_sweep_csv(const SweepTable& t, std::ostream& out);

struct RegionGrid {
    double re_lo, re_hi, im_lo, im_hi;
    int res;
    std::vector<char> cells;  // row-major, im outer; 'D', 'C', 'N' or 'B'

    double re_at(int i) const;
    double im_at(int j) const;
    char at(int i, int j) const { return cells[static_cast<std::size_t>(j) * res + i]; }
};

/// classify_lambda at cell centres; a cell is 'B' when its centre is on the boundary
/// or a corner classifies differently from the centre.
RegionGrid region_grid(const SLProblem& p, double re_lo, double re_hi, double im_lo, double im_hi, int res);

/// CSV: lam_re,lam_im,class
void write_region_csv(const RegionGrid& g, std::ostream& out);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace slgal
