#pragma once

#include <optional>
#include <vector>

#include "slgal/defaults.hpp"
#include "slgal/frobenius.hpp"
#include "slgal/linalg.hpp"

namespace slgal {

struct ComplexPath {
    std::vector<Complex> waypoints;
    bool closed = false;

    /// Reverse traversal.
    ComplexPath reversed() const;
};

/// Minimum distance from the polyline to any point in `avoid`.
double path_clearance(const ComplexPath& path, const std::vector<Complex>& avoid);

/// Y(end) for Y' = [[0, 1], [-q, -p]] Y along the polyline, Y(start) = I.
Matrix2C fundamental_along_path(const ComplexODE& ode, Complex lambda, const ComplexPath& path,
                                double rtol = defaults::continuation_rtol);

/// base -> centre + radius * (base - centre)/|base - centre| -> circle (N-gon) -> back.
ComplexPath circle_loop(Complex base, Complex centre, double radius, bool counterclockwise = true,
                        int waypoints = defaults::loop_waypoints);

/// Tail leaves `base` vertically by `height`, runs horizontally above `centre`, drops to the circle.
ComplexPath lifted_loop(Complex base, Complex centre, double radius, double height,
                        int waypoints = defaults::loop_waypoints);

struct LoopGeometry {
    Complex base;
    double radius = 0.0;  // 0: choose a default
};

/// Finite singular points of the problem's equation.
std::vector<Complex> finite_singular_locations(const SLProblem& p);

/// Midpoint of [z-, z+], lifted off the axis when a singularity sits within clearance of it.
Complex default_base(const SLProblem& p);

/// Counterclockwise loop around a finite point, or a clockwise circle about the midpoint of [z-, z+] for
/// infinity (default radius 1.5 reach + 0.5, reach being the farthest finite singularity or base).
/// Throws Geometry when the path passes within clearance of a singularity.
Matrix2C monodromy_matrix(const SLProblem& p, Complex lambda, const SingularPoint& around, Complex base,
                          double radius = 0.0, double clearance = defaults::path_clearance);

struct EigenvectorTest {
    bool common = false;
    std::optional<Vector2C> vector;
    double angle = 0.0;
};

/// Eigen-directions of a 2x2 matrix: two for diagonalizable, one for (near-)defective, none for scalar.
std::vector<Vector2C> eigen_directions(const Matrix2C& m);

EigenvectorTest common_eigenvector_test(const Matrix2C& m1, const Matrix2C& m2,
                                        double tol = defaults::eigenvector_angle_tol);

struct MonodromyResult {
    Matrix2C m_minus, m_plus, m_third;
    Complex base;
    std::optional<Vector2C> common_eigenvector;
    bool triangularizable = false;
    double angle = 0.0;
    double cycle_residual = 0.0;  // |M3 M+ M- - I| / max(1, |M3| |M+| |M-|)
};

MonodromyResult compute_monodromy(const SLProblem& p, Complex lambda, double tol = defaults::eigenvector_angle_tol);

/// Trace and determinant of the loop matrix against those of diag(e^{2 pi i rho+}, e^{2 pi i rho-}).
bool monodromy_eigen_check(const SLProblem& p, Complex lambda, const SingularPoint& around, double tol);

}  // namespace slgal
