#!/usr/bin/env python
"""
theorem_constants

Constants of the convergence certificate.

  zeta   = exp(-M0 (N - N_s - 1) T) (1 - exp(-delta T))
  xi0    = exp(-(N - 1) M0 K0),            K0 = d0 T
  alpha1 = 1 - xi0^d0 zeta chi^(d0 - 1)
  alpha2 = xi0^d0 chi^(d0 - 1)
  beta   = exp(-kappa_lower K0)

For realistic d0, M0 and K0, alpha1 rounds to 1 and alpha2 underflows, so
the constants are carried as logarithms and all interval checks are made
on the log form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from core_scripts.errors import DomainError, InconsistencyError, \
    PreconditionError


@dataclass(frozen=True)
class TheoremConstants:
    M0: float
    N: int
    N_s: int
    d0: int
    T: float
    delta: float
    kappa_lower: float
    applicable: bool = True
    log_zeta: Optional[float] = None
    log_xi0: Optional[float] = None
    log_chi: Optional[float] = None
    chi_is_zeta: bool = True

    @property
    def M_s(self):
        return self.M0 * self.N_s

    @property
    def K0(self):
        return self.d0 * self.T

    @property
    def zeta(self):
        return None if self.log_zeta is None else math.exp(self.log_zeta)

    @property
    def xi0(self):
        return None if self.log_xi0 is None else math.exp(self.log_xi0)

    @property
    def chi(self):
        return None if self.log_chi is None else math.exp(self.log_chi)

    @property
    def log_one_minus_alpha1(self):
        if not self.applicable:
            return None
        return self.log_alpha2 + self.log_zeta

    @property
    def log_alpha2(self):
        if not self.applicable:
            return None
        return self.d0 * self.log_xi0 + (self.d0 - 1) * self.log_chi

    @property
    def alpha1(self):
        if not self.applicable:
            return None
        return -math.expm1(self.log_one_minus_alpha1)

    @property
    def alpha2(self):
        if not self.applicable:
            return None
        return math.exp(self.log_alpha2)

    @property
    def log_beta_tilde(self):
        return -self.kappa_lower * self.K0

    @property
    def beta_tilde(self):
        return math.exp(self.log_beta_tilde)

    def with_chi(self, chi):
        """ Same constants with chi replaced (chi in (0, 1])
        """
        if not 0 < chi <= 1:
            raise DomainError("chi must lie in (0, 1]")
        return TheoremConstants(
            self.M0, self.N, self.N_s, self.d0, self.T, self.delta,
            self.kappa_lower, self.applicable, self.log_zeta, self.log_xi0,
            None if not self.applicable else math.log(chi), False)

    def interval_violations(self):
        """ Names of constants outside their declared intervals
        """
        out = []
        if not self.applicable:
            return out
        if not self.log_beta_tilde < 0:
            out.append('beta_tilde')
        if not self.log_zeta < 0:
            out.append('zeta')
        if not self.log_xi0 < 0:
            out.append('xi0')
        if not self.log_one_minus_alpha1 < 0:
            out.append('alpha1')
        if not self.log_alpha2 <= 0:
            out.append('alpha2')
        return out

    def envelope_factor_log(self):
        """ log((3 - alpha2 - alpha1) / (1 - alpha1))
        """
        if not self.applicable:
            return None
        numer = 2.0 - self.alpha2 + math.exp(self.log_one_minus_alpha1)
        return math.log(numer) - self.log_one_minus_alpha1


def compute_constants(scenario, S, d0: int,
                      chi: Optional[float] = None) -> TheoremConstants:
    """ constants = compute_constants(scenario, S, d0, chi=None)

    input
    -----
      scenario: Scenario
      S:        root set
      d0:       longest path length from S in the full-period union
      chi:      value in (0, 1]; None selects chi = zeta

    output
    ------
      constants: TheoremConstants; applicable is False when S = V
    """
    n = scenario.n_agents
    n_s = len(set(S))
    if n_s == 0:
        raise PreconditionError("root set is empty")
    if d0 < 0:
        raise DomainError("d0 must be nonnegative")
    if d0 == 0 and n_s < n:
        raise InconsistencyError(
            "d0 = 0 while {:d} receivers exist".format(n - n_s))
    if chi is not None and not 0 < chi <= 1:
        raise DomainError("chi must lie in (0, 1]")

    M0 = scenario.schedule.max_abs_weight
    T = scenario.window_T
    base = dict(M0=M0, N=n, N_s=n_s, d0=int(d0), T=T, delta=scenario.delta,
                kappa_lower=scenario.gains.kappa_lower)
    if n_s == n:
        return TheoremConstants(applicable=False, **base)

    log_zeta = -M0 * (n - n_s - 1) * T \
        + math.log(-math.expm1(-scenario.delta * T))
    log_xi0 = -(n - 1) * M0 * d0 * T
    log_chi = log_zeta if chi is None else math.log(chi)
    return TheoremConstants(log_zeta=log_zeta, log_xi0=log_xi0,
                            log_chi=log_chi, chi_is_zeta=chi is None, **base)


if __name__ == "__main__":
    print("Constants of the convergence certificate")
