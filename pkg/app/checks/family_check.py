"""
Named-family properties:

  phi_identity     every measure of phi_t equals 2t√(1−t²) on a 101-point grid
  phi_symmetry     the three T_ij of phi_t coincide
  xi_tangle        xi_r has vanishing three-tangle
  gm_ordering      C_GM(psi(0.7)) > 0.8 > T_GM(psi(0.7))
  min_ordering     C_min(xi) > C_min(psi) and T_min(xi) < T_min(psi) for r in 0.72..0.88
"""

from typing import List

import numpy as np

from app.checks.base_check import BaseCheck, CheckContext, CheckResult
from app.enums.enums import FamilyName
from app.services.family_service import build_named, phi_value
from app.services.measure_service import report

IDENTITY_TOL = 1e-9
TANGLE_TOL = 1e-8
IDENTITY_GRID = 101
PHI_MEASURES = (
    "t_min",
    "t_gm",
    "c_min",
    "c_gm",
    "t_min_a",
    "t_gm_a",
    "t_min_b",
    "t_gm_b",
    "t_min_c",
    "t_gm_c",
)
GM_REFERENCE = 0.8
GM_POINT = 0.7
MIN_ORDERING_POINTS = (0.72, 0.76, 0.80, 0.84, 0.88)


class FamilyOrderingCheck(BaseCheck):
    stream = 7

    def run(self, context: CheckContext) -> List[CheckResult]:
        grid = np.linspace(0.0, 1.0, IDENTITY_GRID)

        identity = 0.0
        symmetry = 0.0
        tangle = 0.0
        for t in grid:
            rep = report(build_named(FamilyName.PHI_T, float(t)))
            expected = phi_value(float(t))
            for column in PHI_MEASURES:
                identity = max(identity, abs(getattr(rep, column) - expected))
            symmetry = max(symmetry, max(rep.t_ab, rep.t_bc, rep.t_ca) - min(rep.t_ab, rep.t_bc, rep.t_ca))
            tangle = max(tangle, report(build_named(FamilyName.XI_R, float(t))).tangle)

        psi = report(build_named(FamilyName.PSI_R, GM_POINT))
        gm_margin = min(psi.c_gm - GM_REFERENCE, GM_REFERENCE - psi.t_gm)

        min_margin = np.inf
        for r in MIN_ORDERING_POINTS:
            xi = report(build_named(FamilyName.XI_R, r))
            ps = report(build_named(FamilyName.PSI_R, r))
            min_margin = min(min_margin, xi.c_min - ps.c_min, ps.t_min - xi.t_min)

        return [
            self.deviation("phi_identity", IDENTITY_GRID, identity, IDENTITY_TOL),
            self.deviation("phi_symmetry", IDENTITY_GRID, symmetry, IDENTITY_TOL),
            self.deviation("xi_tangle", IDENTITY_GRID, tangle, TANGLE_TOL),
            self.margin(
                "gm_ordering",
                1,
                gm_margin,
                detail=f"c_gm={psi.c_gm:.4f} t_gm={psi.t_gm:.4f}",
            ),
            self.margin("min_ordering", len(MIN_ORDERING_POINTS), float(min_margin)),
        ]
