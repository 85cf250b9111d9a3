#pragma once

#include "melonic/kinematics.hpp"

namespace melonic {

/// Principal branch W0(y), y >= -1/e. Throws DomainError below the branch point.
double lambert_w0(double y);

/// Lower real branch W-1(y), -1/e <= y < 0.
double lambert_wm1(double y);

/// The positive root of w + log w = t, i.e. W0(e^t), without forming e^t.
double wright_omega(double t);

/// g(x1, z) = z W((1/z) e^((1+x1^2)/z)) - 1 - x1^2, evaluated in log space as
/// z * omega(-log z + (1+x1^2)/z) - 1 - x1^2. Exactly zero at x1 = 0.
double g_shift(double x1, const Coupling& coupling);

/// G(x) = 1/(1 + |x|^2 + g(x1, z)). Throws EvaluationDomain if the
/// denominator is not positive.
double g2_exact(const Point3& x, const Coupling& coupling);

/// g + z log(1 + x1^2 + g); zero at the fixed point.
double sde_residual_algebraic(double x1, const Coupling& coupling);

}  // namespace melonic
