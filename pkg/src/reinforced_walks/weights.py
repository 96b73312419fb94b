"""Reinforcement weight families, summability classification, certified tail sums.

Every infinite series produced here carries an analytic remainder bracket
(lo, hi); raw truncations are never reported as values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Number = Union[int, float, Fraction]


class WeightDomainError(ValueError):
    """Weight function evaluated outside its domain."""


class DivergentSumError(ValueError):
    """Requested tail sum diverges (or cannot be certified to converge)."""


class UnclassifiableWeightError(ValueError):
    """Table weight without a declared analytic tail: summability is undecidable."""


@dataclass(frozen=True)
class SummabilityClass:
    """Convergence flags for the four tail conditions used by the bounds.

    reciprocal_summable:      sum_{i>=1} 1/w(i) < inf
    sqrt_weighted_summable:   sum_{i>=1} i^(1/2)/w(i+l0) < inf
    linear_weighted_summable: sum_{i>=1} i/w(i+l0) < inf
    linear_ratio_bounded:     sup_{i>=1} i/w(i+l0) < inf
    """

    reciprocal_summable: bool
    sqrt_weighted_summable: bool
    linear_weighted_summable: bool
    linear_ratio_bounded: bool

    def check_implications(self) -> None:
        # linear => sqrt => reciprocal, and linear => ratio-bounded
        if self.linear_weighted_summable and not self.sqrt_weighted_summable:
            raise AssertionError("implication chain broken: linear => sqrt")
        if self.sqrt_weighted_summable and not self.reciprocal_summable:
            raise AssertionError("implication chain broken: sqrt => reciprocal")
        if self.linear_weighted_summable and not self.linear_ratio_bounded:
            raise AssertionError("implication chain broken: linear => ratio bounded")

    def flag_for_exponent(self, alpha: float) -> bool:
        if alpha == 0:
            return self.reciprocal_summable
        if alpha == 0.5:
            return self.sqrt_weighted_summable
        if alpha == 1:
            return self.linear_weighted_summable
        raise ValueError(f"no summability flag for exponent {alpha}")


@dataclass(frozen=True)
class CertifiedValue:
    """A real number pinned inside [low, high] by an analytic argument."""

    low: Number
    high: Number

    @property
    def width(self) -> Number:
        return self.high - self.low

    def midpoint(self) -> float:
        return (float(self.low) + float(self.high)) / 2.0

    def __float__(self) -> float:
        return self.midpoint()


_ULP_SLACK = 4 * 2.3e-16  # fsum partials are within 1 ulp; pad a few more


def _outward(lo: float, hi: float) -> tuple[float, float]:
    pad = _ULP_SLACK * max(abs(lo), abs(hi), 1e-300)
    return lo - pad, hi + pad


def _convex_tail_bracket(f, integral_from, first: int) -> tuple[float, float]:
    """Bracket sum_{i>=first} f(i) for f decreasing and convex on [first-1/2, inf).

    Trapezoid rule:  integral_first <= sum - f(first)/2
    Midpoint rule:   sum <= integral_{first-1/2}
    """
    base = integral_from(float(first))
    lo = base + 0.5 * f(float(first))
    hi = integral_from(first - 0.5)
    return lo, hi


class WeightFunction:
    """Base class: positive reinforcement weight w on counts."""

    family: str = "?"
    integer_only: bool = False
    domain_min: float = 0.0  # smallest admissible argument

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, x: float) -> float:
        raise NotImplementedError

    def evaluate_exact(self, x: Number) -> Optional[Fraction]:
        """Exact rational value, or None when the family is irrational there."""
        return None

    def log_evaluate(self, x: float) -> float:
        return math.log(self.evaluate(x))

    def __call__(self, x: float) -> float:
        return self.evaluate(x)

    def _check_domain(self, x: Number) -> None:
        if self.integer_only and x != int(x):
            raise WeightDomainError(f"{self.config_string()} is defined on integers only, got {x}")
        if x < self.domain_min:
            raise WeightDomainError(f"{self.config_string()} undefined at {x} (needs x >= {self.domain_min})")

    # -- classification and tails -------------------------------------------

    def classify(self, l0: Number) -> SummabilityClass:
        raise NotImplementedError

    def tail_bracket(self, first: int, base: Number, alpha: float) -> tuple[float, float]:
        """Certified (lo, hi) for sum_{i>=first} i^alpha / w(i+base); first >= 1."""
        raise NotImplementedError

    def tail_upper_exact(self, first: int, base: Number, alpha: int) -> Optional[Fraction]:
        """Rational certified upper bound on the same tail, when available."""
        return None

    def config_string(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<weight {self.config_string()}>"


class PowerWeight(WeightFunction):
    """w(x) = (x + shift)^rho; shift=1 is the explicit shifted form for counts at 0."""

    def __init__(self, rho: float, shift: int = 0):
        if not math.isfinite(rho) or rho <= 0:
            raise ValueError(f"power exponent must be positive and finite, got {rho}")
        if shift not in (0, 1):
            raise ValueError("shift must be 0 or 1")
        self.rho = rho
        self.shift = shift
        self.family = "power" if shift == 0 else "shiftpow"
        self.domain_min = 2.0 ** -52 if shift == 0 else 0.0

    def evaluate(self, x: float) -> float:
        if x + self.shift <= 0:
            raise WeightDomainError(f"{self.config_string()} undefined at {x}")
        y = x + self.shift
        r = self.rho
        if r == 2.0:
            return y * y
        if r == 3.0:
            return y * y * y
        if r == 1.0:
            return y
        return y ** r

    def evaluate_exact(self, x: Number) -> Optional[Fraction]:
        if self.rho != int(self.rho):
            return None
        y = Fraction(x) + self.shift
        if y <= 0:
            raise WeightDomainError(f"{self.config_string()} undefined at {x}")
        return y ** int(self.rho)

    def log_evaluate(self, x: float) -> float:
        if x + self.shift <= 0:
            raise WeightDomainError(f"{self.config_string()} undefined at {x}")
        return self.rho * math.log(x + self.shift)

    def classify(self, l0: Number) -> SummabilityClass:
        r = self.rho
        return SummabilityClass(
            reciprocal_summable=r > 1,
            sqrt_weighted_summable=r > 1.5,
            linear_weighted_summable=r > 2,
            linear_ratio_bounded=r >= 1,
        )

    def tail_bracket(self, first: int, base: Number, alpha: float) -> tuple[float, float]:
        r, s = self.rho, float(base) + self.shift
        if s < 0:
            raise WeightDomainError("base + shift must be >= 0")
        if r - alpha <= 1:
            raise DivergentSumError(f"sum i^{alpha}/w(i+{base}) diverges for {self.config_string()}")
        if alpha == 0:
            # f(x) = (x+s)^-r, decreasing convex; closed-form integral
            f = lambda x: (x + s) ** -r
            integral = lambda x0: (x0 + s) ** (1 - r) / (r - 1)
            return _outward(*_convex_tail_bracket(f, integral, first))
        # envelopes (x+s)^(alpha-r) >= x^alpha (x+s)^-r >= (x/(x+s))^alpha (x+s)^(alpha-r)
        hi_int = lambda x0: (x0 + s) ** (alpha + 1 - r) / (r - alpha - 1)
        f_hi = lambda x: (x + s) ** (alpha - r)
        _, hi = _convex_tail_bracket(f_hi, hi_int, first)
        shrink = (first / (first + s)) ** alpha
        lo = shrink * hi_int(float(first))
        return _outward(lo, hi)

    def tail_upper_exact(self, first: int, base: Number, alpha: int) -> Optional[Fraction]:
        if self.rho != int(self.rho) or alpha not in (0, 1):
            return None
        r = int(self.rho)
        s = Fraction(base) + self.shift
        if r - alpha <= 1:
            raise DivergentSumError(f"divergent tail for {self.config_string()}")
        # sum_{i>=first} i^alpha (i+s)^-r <= f(first) + int_first^inf x^alpha (x+s)^-r dx
        # with x^alpha <= (x+s)^alpha
        fj = Fraction(first) ** alpha / (Fraction(first) + s) ** r
        integral = (Fraction(first) + s) ** (alpha + 1 - r) / (r - alpha - 1)
        return fj + integral

    def config_string(self) -> str:
        rho = int(self.rho) if self.rho == int(self.rho) else self.rho
        return f"{'shiftpow' if self.shift else 'power'}:{rho}"


class PowerLogWeight(WeightFunction):
    """w(x) = x^rho * log(x+1)^beta."""

    family = "powerlog"

    def __init__(self, rho: float, beta: float):
        if not (math.isfinite(rho) and math.isfinite(beta)) or rho <= 0 or beta < 0:
            raise ValueError(f"need rho > 0 and beta >= 0, got rho={rho} beta={beta}")
        self.rho = rho
        self.beta = beta
        self.domain_min = 2.0 ** -52

    def evaluate(self, x: float) -> float:
        if x <= 0:
            raise WeightDomainError(f"{self.config_string()} undefined at {x}")
        return x ** self.rho * math.log(x + 1.0) ** self.beta

    def log_evaluate(self, x: float) -> float:
        if x <= 0:
            raise WeightDomainError(f"{self.config_string()} undefined at {x}")
        return self.rho * math.log(x) + self.beta * math.log(math.log(x + 1.0))

    def classify(self, l0: Number) -> SummabilityClass:
        r, b = self.rho, self.beta
        def log_refined(threshold: float) -> bool:
            return r > threshold or (r == threshold and b > 1)
        return SummabilityClass(
            reciprocal_summable=log_refined(1),
            sqrt_weighted_summable=log_refined(1.5),
            linear_weighted_summable=log_refined(2),
            linear_ratio_bounded=r >= 1,
        )

    def tail_bracket(self, first: int, base: Number, alpha: float) -> tuple[float, float]:
        r, b, s = self.rho, self.beta, float(base)
        if s < 0:
            raise WeightDomainError("base must be >= 0")
        if not (r - alpha > 1 or (r - alpha == 1 and b > 1)):
            raise DivergentSumError(f"sum i^{alpha}/w(i+{base}) diverges for {self.config_string()}")
        if first < 8:
            raise ValueError("powerlog bracket needs first >= 8 (convexity of the integrand)")
        # f(x) = x^alpha (x+s)^-r log(x+s+1)^-b: decreasing and convex for x >= 8
        # (dominant curvature r(r+1)x^(alpha-r-2); log corrections are lower order).
        import mpmath

        mp_f = lambda x: x ** alpha * (x + s) ** (-r) * mpmath.log(x + s + 1) ** (-b)
        with mpmath.workdps(30):
            integral = lambda x0: float(mpmath.quad(mp_f, [x0, mpmath.inf]))
        f = lambda x: x ** alpha * (x + s) ** -r * math.log(x + s + 1.0) ** -b
        lo, hi = _convex_tail_bracket(f, integral, first)
        # pad for quadrature error (dps 30 leaves ~1e-25 relative; pad generously)
        pad = 1e-14 * max(abs(lo), abs(hi))
        return _outward(lo - pad, hi + pad)

    def config_string(self) -> str:
        fmt = lambda v: int(v) if v == int(v) else v
        return f"powerlog:{fmt(self.rho)}:{fmt(self.beta)}"


class ExponentialWeight(WeightFunction):
    """w(x) = exp(lam * x)."""

    family = "exp"
    OVERFLOW_ARG = 709.0  # exp overflows float64 past this

    def __init__(self, lam: float):
        if not math.isfinite(lam) or lam <= 0:
            raise ValueError(f"exponential rate must be positive and finite, got {lam}")
        self.lam = lam

    def evaluate(self, x: float) -> float:
        if x < 0:
            raise WeightDomainError(f"{self.config_string()} undefined at {x}")
        arg = self.lam * x
        if arg > self.OVERFLOW_ARG:
            raise OverflowError(
                f"exp({arg:.3g}) overflows float64; use log-space transition weights"
            )
        return math.exp(arg)

    def log_evaluate(self, x: float) -> float:
        if x < 0:
            raise WeightDomainError(f"{self.config_string()} undefined at {x}")
        return self.lam * x

    def classify(self, l0: Number) -> SummabilityClass:
        return SummabilityClass(True, True, True, True)

    def tail_bracket(self, first: int, base: Number, alpha: float) -> tuple[float, float]:
        lam, s = self.lam, float(base)
        q = math.exp(-lam)
        if alpha == 0:
            # exact geometric: sum_{i>=first} e^(-lam(i+s)) = e^(-lam(first+s))/(1-q)
            v = math.exp(-lam * (first + s)) / (1.0 - q)
            return _outward(v, v)
        # term(i) = i^alpha e^(-lam(i+s)); ratio <= ((j+1)/j)^alpha q
        j = first
        head = 0.0
        while ((j + 1) / j) ** alpha * q >= 1.0:
            head += j ** alpha * math.exp(-lam * (j + s))
            j += 1
        r = ((j + 1) / j) ** alpha * q
        tj = j ** alpha * math.exp(-lam * (j + s))
        hi = head + tj / (1.0 - r)
        lo = head + tj / (1.0 - q)  # term(j+m) >= j^alpha e^(-lam(j+m+s))
        return _outward(lo, hi)

    def config_string(self) -> str:
        return f"exp:{self.lam:g}"


class OscillatingPowerWeight(WeightFunction):
    """w(k) = k^(1+rho) / (2 + (-1)^k) on positive integers."""

    family = "oscpow"
    integer_only = True
    domain_min = 1.0

    def __init__(self, rho: float):
        if not math.isfinite(rho) or rho <= 0:
            raise ValueError(f"oscillating-power exponent must be positive, got {rho}")
        self.rho = rho

    def _denominator(self, k: int) -> int:
        return 2 + (1 if k % 2 == 0 else -1)

    def evaluate(self, x: float) -> float:
        self._check_domain(x)
        k = int(x)
        return k ** (1.0 + self.rho) / self._denominator(k)

    def evaluate_exact(self, x: Number) -> Optional[Fraction]:
        if self.rho != int(self.rho):
            return None
        self._check_domain(x)
        k = int(x)
        return Fraction(k ** (1 + int(self.rho)), self._denominator(k))

    def log_evaluate(self, x: float) -> float:
        self._check_domain(x)
        k = int(x)
        return (1.0 + self.rho) * math.log(k) - math.log(self._denominator(k))

    def classify(self, l0: Number) -> SummabilityClass:
        # sandwiched between k^(1+rho)/3 and k^(1+rho): behaves as power(1+rho)
        r = self.rho
        return SummabilityClass(
            reciprocal_summable=r > 0,
            sqrt_weighted_summable=r > 0.5,
            linear_weighted_summable=r > 1,
            linear_ratio_bounded=r >= 0,
        )

    def _parity_brackets(self, first: int, base: int, alpha: float):
        """Split by parity of k = i + base; each subseries is smooth."""
        p = 1.0 + self.rho
        if p - alpha <= 1:
            raise DivergentSumError(f"sum i^{alpha}/w(i+{base}) diverges for {self.config_string()}")
        out = []
        for start in (first, first + 1):
            k0 = start + base
            num = 3.0 if k0 % 2 == 0 else 1.0
            # terms i = start, start+2, start+4, ...: f(m) = num*(start+2m)^alpha/(start+2m+base)^p
            if alpha == 0:
                f = lambda m, s=start: num / (s + 2 * m + base) ** p
                integral = lambda m0, s=start: num * (s + 2 * m0 + base) ** (1 - p) / (2 * (p - 1))
                out.append(_convex_tail_bracket(f, integral, 0) if False else None)
                # bracket over m >= 0 with the convex rule shifted to m=0
                fm = lambda m, s=start: num / (s + 2 * m + base) ** p
                Im = lambda m0, s=start: num * (s + 2 * m0 + base) ** (1 - p) / (2 * (p - 1))
                lo = Im(0.0) + 0.5 * fm(0.0)
                hi = Im(-0.5)
                out[-1] = (lo, hi)
            else:
                # envelopes as in PowerWeight, applied along the subsequence
                hi_int = lambda m0, s=start: num * (s + 2 * m0 + base) ** (alpha + 1 - p) / (2 * (p - alpha - 1))
                fm_hi = lambda m, s=start: num * (s + 2 * m + base) ** (alpha - p)
                lo_shrink = (first / (first + base)) ** alpha if base > 0 else 1.0
                lo = lo_shrink * hi_int(0.0)
                hi = hi_int(-0.5) + 0.5 * fm_hi(0.0)
                out.append((lo, hi))
        return out

    def tail_bracket(self, first: int, base: Number, alpha: float) -> tuple[float, float]:
        if base != int(base):
            raise WeightDomainError("oscillating families need integer base")
        (lo1, hi1), (lo2, hi2) = self._parity_brackets(first, int(base), alpha)
        return _outward(lo1 + lo2, hi1 + hi2)

    def tail_upper_exact(self, first: int, base: Number, alpha: int) -> Optional[Fraction]:
        if self.rho != int(self.rho) or alpha not in (0, 1) or base != int(base):
            return None
        p = 1 + int(self.rho)
        base = int(base)
        if p - alpha <= 1:
            raise DivergentSumError(f"divergent tail for {self.config_string()}")
        # 1/w(k) <= 3/k^p termwise; reuse the power-family rational bound
        return 3 * PowerWeight(p).tail_upper_exact(first, base, alpha)

    def config_string(self) -> str:
        rho = int(self.rho) if self.rho == int(self.rho) else self.rho
        return f"oscpow:{rho}"


class OscillatingExpWeight(WeightFunction):
    """w(k) = exp(k * (2 + (-1)^k)) on non-negative integers."""

    family = "oscexp"
    integer_only = True
    domain_min = 0.0
    OVERFLOW_ARG = 709.0

    def _rate(self, k: int) -> int:
        return 2 + (1 if k % 2 == 0 else -1)  # 3 for even k, 1 for odd

    def evaluate(self, x: float) -> float:
        self._check_domain(x)
        k = int(x)
        arg = k * self._rate(k)
        if arg > self.OVERFLOW_ARG:
            raise OverflowError(f"exp({arg}) overflows float64; use log-space transition weights")
        return math.exp(arg)

    def log_evaluate(self, x: float) -> float:
        self._check_domain(x)
        k = int(x)
        return float(k * self._rate(k))

    def classify(self, l0: Number) -> SummabilityClass:
        return SummabilityClass(True, True, True, True)

    def tail_bracket(self, first: int, base: Number, alpha: float) -> tuple[float, float]:
        if base != int(base):
            raise WeightDomainError("oscillating families need integer base")
        base = int(base)
        # per-parity geometric series in steps of 2
        lo = hi = 0.0
        for start in (first, first + 1):
            k0 = start + base
            rate = self._rate(k0)
            q = math.exp(-2.0 * rate)
            if alpha == 0:
                v = math.exp(-rate * k0) / (1.0 - q)
                lo += v
                hi += v
            else:
                # term(m) = (start+2m)^alpha e^(-rate(k0+2m)); ratio <= ((s+2)/s)^alpha q
                s = start
                r = ((s + 2) / s) ** alpha * q
                t0 = s ** alpha * math.exp(-rate * k0)
                hi += t0 / (1.0 - r)
                lo += t0 / (1.0 - q)
        return _outward(lo, hi)

    def config_string(self) -> str:
        return "oscexp"


class TableWeight(WeightFunction):
    """Finite table of values, optionally extended by a declared analytic tail family."""

    family = "table"
    integer_only = True

    def __init__(self, values: dict[int, Number], tail: Optional[WeightFunction] = None):
        if not values:
            raise ValueError("empty weight table")
        for k, v in values.items():
            if k != int(k) or k < 0:
                raise ValueError(f"table keys must be non-negative integers, got {k}")
            if v <= 0:
                raise ValueError(f"table value at {k} must be positive, got {v}")
        self.values = {int(k): v for k, v in values.items()}
        self.tail = tail
        self.table_max = max(self.values)
        self.domain_min = float(min(self.values))

    def evaluate(self, x: float) -> float:
        self._check_domain(x)
        k = int(x)
        if k in self.values:
            return float(self.values[k])
        if self.tail is None:
            raise WeightDomainError(f"table weight has no value at {k} and no declared tail")
        return self.tail.evaluate(k)

    def evaluate_exact(self, x: Number) -> Optional[Fraction]:
        k = int(x)
        if k in self.values:
            v = self.values[k]
            return Fraction(v) if isinstance(v, (int, Fraction)) else None
        if self.tail is None:
            raise WeightDomainError(f"table weight has no value at {k} and no declared tail")
        return self.tail.evaluate_exact(x)

    def classify(self, l0: Number) -> SummabilityClass:
        # finitely many table entries never change convergence; the tail decides
        if self.tail is None:
            raise UnclassifiableWeightError(
                "table weight without declared tail: refusing to classify from a finite truncation"
            )
        return self.tail.classify(l0)

    def tail_bracket(self, first: int, base: Number, alpha: float) -> tuple[float, float]:
        if self.tail is None:
            raise UnclassifiableWeightError("table weight without declared tail")
        base = int(base)
        split = max(first, self.table_max - base + 1)
        head_lo = head_hi = 0.0
        for i in range(first, split):
            t = i ** alpha / self.evaluate(i + base)
            head_lo += t
            head_hi += t
        lo, hi = self.tail.tail_bracket(split, base, alpha)
        return _outward(head_lo + lo, head_hi + hi)

    def config_string(self) -> str:
        tail = self.tail.config_string() if self.tail else "none"
        return f"table[{len(self.values)} entries]:tail={tail}"


def parse_weight(spec: str) -> WeightFunction:
    """Parse a configuration string like "power:2", "powerlog:2:2", "exp:0.5", "oscpow:1"."""
    parts = spec.strip().split(":")
    name, args = parts[0], parts[1:]

    def _num(s: str) -> float:
        v = float(Fraction(s)) if "/" in s else float(s)
        return v

    try:
        if name == "power":
            (rho,) = args
            return PowerWeight(_num(rho))
        if name == "shiftpow":
            (rho,) = args
            return PowerWeight(_num(rho), shift=1)
        if name == "powerlog":
            rho, beta = args
            return PowerLogWeight(_num(rho), _num(beta))
        if name == "exp":
            (lam,) = args
            return ExponentialWeight(_num(lam))
        if name == "oscpow":
            (rho,) = args
            return OscillatingPowerWeight(_num(rho))
        if name == "oscexp":
            if args:
                raise ValueError("oscexp takes no parameters")
            return OscillatingExpWeight()
    except ValueError as exc:
        raise ValueError(f"bad weight spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown weight family {name!r}")


def _certified_sum(w: WeightFunction, alpha: float, base: Number, start: int,
                   tol: float, exact: bool) -> CertifiedValue:
    """Partial sum over i in [start, J) plus certified tail bracket from J, J doubling."""
    J = max(16, start + 1)
    if isinstance(w, PowerLogWeight):
        J = max(J, 8)
    while True:
        lo_t, hi_t = w.tail_bracket(J, base, alpha)
        if exact:
            partial = sum(
                Fraction(i) ** int(alpha) / w.evaluate_exact(i + base)
                for i in range(start, J)
            )
            upper = w.tail_upper_exact(J, base, int(alpha))
            if upper is None:
                raise ValueError(f"{w.config_string()} has no exact rational tail")
            val = CertifiedValue(partial + Fraction(lo_t).limit_denominator(10 ** 15) * 0,  # lower: partial alone
                                 partial + upper)
            # the lower end is the partial sum itself (all terms positive)
            val = CertifiedValue(partial, partial + upper)
        else:
            terms = [i ** alpha / w.evaluate(i + base) for i in range(start, J)]
            partial = math.fsum(terms)
            lo, hi = _outward(partial + lo_t, partial + hi_t)
            val = CertifiedValue(lo, hi)
        if val.width <= tol or (exact and val.width <= tol):
            return val
        if J > 60_000_000:
            raise DivergentSumError(
                f"could not certify width <= {tol} for {w.config_string()} (reached J={J})"
            )
        J *= 4


def reciprocal_tail_sum(w: WeightFunction, base: Number, tol: float = 1e-9,
                        exact: bool = False) -> CertifiedValue:
    """c(base) = sum_{l>=0} 1/w(l + base), certified within tol."""
    w.classify(base).check_implications()
    if not w.classify(base).reciprocal_summable:
        raise DivergentSumError(f"sum 1/w diverges for {w.config_string()}")
    head = w.evaluate_exact(base) if exact else None
    if exact:
        if head is None:
            raise ValueError(f"{w.config_string()} is not rational-valued; no exact mode")
        rest = _certified_sum(w, 0.0, base, 1, tol, exact=True)
        return CertifiedValue(1 / head + rest.low, 1 / head + rest.high)
    h = 1.0 / w.evaluate(float(base))
    rest = _certified_sum(w, 0.0, base, 1, tol, exact=False)
    lo, hi = _outward(h + rest.low, h + rest.high)
    return CertifiedValue(lo, hi)


def power_weighted_tail_sum(w: WeightFunction, alpha: float, base: Number,
                            tol: float = 1e-6) -> CertifiedValue:
    """sum_{i>=1} i^alpha / w(i + base), certified within tol; alpha in {0, 1/2, 1}."""
    if alpha not in (0, 0.5, 1):
        raise ValueError(f"alpha must be 0, 1/2 or 1, got {alpha}")
    cls = w.classify(base)
    cls.check_implications()
    if not cls.flag_for_exponent(alpha):
        raise DivergentSumError(
            f"sum i^{alpha}/w(i+{base}) diverges for {w.config_string()}"
        )
    return _certified_sum(w, float(alpha), base, 1, tol, exact=False)


def reciprocal_tail_sum_upper_exact(w: WeightFunction, base: Number,
                                    head_terms: int = 64) -> Fraction:
    """Coarse rational certified upper bound on c(base), for exact bound constants."""
    cls = w.classify(base)
    if not cls.reciprocal_summable:
        raise DivergentSumError(f"sum 1/w diverges for {w.config_string()}")
    partial = Fraction(0)
    for l in range(head_terms):
        v = w.evaluate_exact(l + base)
        if v is None:
            raise ValueError(f"{w.config_string()} is not rational-valued; no exact mode")
        partial += 1 / v
    upper = w.tail_upper_exact(head_terms, base, 0)
    if upper is None:
        raise ValueError(f"{w.config_string()} has no exact rational tail bound")
    return partial + upper
