"""Cubic residuacity and local solution counts.

Two independent classification routes for a prime p = 1 mod 3 live here:
the Euler power test a^((p-1)/3) mod p, and representability by one of the
binary quadratic forms u^2 + 27v^2 / 4u^2 + 2uv + 7v^2. gauss_classify runs
both and refuses to return if they ever disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .arith import Polynomial, factorize, is_prime
from .errors import ConsistencyError, DomainError, ResourceError

BRUTE_FORCE_BUDGET = 10**7  # largest modulus a linear root scan will accept


class CubicTag(Enum):
    RESIDUE = "Residue"
    NONRESIDUE = "Nonresidue"
    NOT_COPRIME = "NotCoprime"


@dataclass(frozen=True)
class CubicClass:
    """Outcome of a cubic residuacity test.

    exponent is only meaningful for p = 1 mod 3: it is m in
    a^((p-1)/3) = zeta^m with zeta the canonical primitive cube root of
    unity, so exponent 0 means residue and 1 or 2 pin down which coset of
    nonresidue. For p = 3 or p = 2 mod 3 every unit is a cube and the
    exponent stays None.
    """

    tag: CubicTag
    exponent: int | None = None

    def __post_init__(self):
        if self.exponent is not None:
            expected = CubicTag.RESIDUE if self.exponent == 0 else CubicTag.NONRESIDUE
            if self.tag is not expected:
                raise ConsistencyError(f"tag {self.tag} inconsistent with exponent {self.exponent}")


@dataclass(frozen=True)
class QuadraticForm:
    """Positive definite primitive binary form a*u^2 + b*uv + c*v^2."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.discriminant >= 0:
            raise DomainError(f"form ({self.a},{self.b},{self.c}) is not positive definite")
        if math.gcd(math.gcd(self.a, self.b), self.c) != 1:
            raise DomainError(f"form ({self.a},{self.b},{self.c}) is not primitive")

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, u: int, v: int) -> int:
        return self.a * u * u + self.b * u * v + self.c * v * v

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


# The two classes of discriminant -108 that split primes p = 1 mod 3 by the
# cubic residuacity of 2.
RESIDUE_FORM = QuadraticForm(1, 0, 27)
NONRESIDUE_FORM = QuadraticForm(4, 2, 7)


class Branch(Enum):
    THREE = "Three"
    TWO_MOD3 = "TwoMod3"
    RESIDUE_FORM = "ResidueForm"
    NONRESIDUE_FORM = "NonresidueForm"


@dataclass(frozen=True)
class PrimeClass:
    """A prime classified against the x^3 + 2 family: which local branch it
    sits on, the form witness when p = 1 mod 3, the local solution count
    rho_p of x^3 + 2 = 0 mod p, and the series factor chi (None off the
    p = 1 mod 3 branch)."""

    p: int
    branch: Branch
    witness: tuple[int, int] | None
    rho_p: int
    chi: float | None


def primitive_cube_root(p: int) -> int:
    """The canonical primitive cube root of unity mod p (p = 1 mod 3, prime):
    the smaller of the two elements of order 3, i.e. the least z in [2, p-1]
    with z^3 = 1."""
    if p % 3 != 1:
        raise DomainError(f"{p} is not 1 mod 3")
    e = (p - 1) // 3
    g = 2
    while True:
        z = pow(g, e, p)
        if z != 1:
            break
        g += 1
    return min(z, z * z % p)


def cubic_residue_euler(a: int, p: int) -> CubicClass:
    """Euler-criterion residuacity of a mod prime p.

    For p = 1 mod 3 the exponent field carries the character value; for
    p = 3 or p = 2 mod 3 the cube map is onto and every coprime a is a
    residue.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    a_mod = a % p
    if a_mod == 0:
        return CubicClass(CubicTag.NOT_COPRIME)
    if p % 3 != 1:
        return CubicClass(CubicTag.RESIDUE)
    t = pow(a_mod, (p - 1) // 3, p)
    if t == 1:
        return CubicClass(CubicTag.RESIDUE, 0)
    z = primitive_cube_root(p)
    if t == z:
        return CubicClass(CubicTag.NONRESIDUE, 1)
    if t == z * z % p:
        return CubicClass(CubicTag.NONRESIDUE, 2)
    raise ConsistencyError(f"a^((p-1)/3) mod {p} is not a cube root of unity")


def cubic_character_exponent(a: int, p: int) -> int:
    """m in {0, 1, 2} with a^((p-1)/3) = zeta^m mod p; requires p = 1 mod 3
    and gcd(a, p) = 1."""
    if not is_prime(p) or p % 3 != 1:
        raise DomainError(f"{p} must be a prime = 1 mod 3")
    if a % p == 0:
        raise DomainError(f"{a} is not coprime to {p}")
    result = cubic_residue_euler(a, p)
    assert result.exponent is not None
    return result.exponent


def represent_by_form(form: QuadraticForm, n: int) -> tuple[int, int] | None:
    """The canonical representation (u, v) of n by the form, or None.

    Exhaustive search over the ellipse form(u, v) = n. Among all integer
    solutions the canonical one minimizes (|v|, |u|), breaking ties by
    preferring v >= 0 and then u >= 0.
    """
    if n < 1:
        raise DomainError(f"representation target {n} must be >= 1")
    a, b = form.a, form.b
    neg_disc = -form.discriminant
    vmax = math.isqrt(4 * a * n // neg_disc)
    two_a = 2 * a
    for av in range(vmax + 1):
        best = None
        for v in (av, -av) if av else (0,):
            disc = 4 * a * n - neg_disc * v * v
            if disc < 0:
                continue
            t = math.isqrt(disc)
            if t * t != disc:
                continue
            for s in (t, -t) if t else (0,):
                num = -b * v + s
                if num % two_a == 0:
                    u = num // two_a
                    key = (abs(u), 0 if v >= 0 else 1, 0 if u >= 0 else 1)
                    if best is None or key < best[0]:
                        best = (key, (u, v))
        if best is not None:
            return best[1]
    return None


def gauss_classify(p: int) -> PrimeClass:
    """Classify prime p against the x^3 + 2 family.

    On the p = 1 mod 3 branch the form search decides residue/nonresidue
    and the Euler criterion on 2 is recomputed as a cross-check; any
    disagreement, or both/neither form representing p, raises
    ConsistencyError rather than returning a guess.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 3:
        return PrimeClass(p, Branch.THREE, None, 1, None)
    if p % 3 == 2:
        return PrimeClass(p, Branch.TWO_MOD3, None, 1, None)
    w_res = represent_by_form(RESIDUE_FORM, p)
    w_non = represent_by_form(NONRESIDUE_FORM, p)
    euler_says_residue = cubic_residue_euler(2, p).tag is CubicTag.RESIDUE
    if (w_res is None) == (w_non is None):
        raise ConsistencyError(f"{p}: forms represent it {'both ways' if w_res else 'no way'}")
    if w_res is not None:
        if not euler_says_residue:
            raise ConsistencyError(f"{p}: u^2+27v^2 representation but Euler says nonresidue")
        return PrimeClass(p, Branch.RESIDUE_FORM, w_res, 3, 1.0)
    if euler_says_residue:
        raise ConsistencyError(f"{p}: 4u^2+2uv+7v^2 representation but Euler says residue")
    return PrimeClass(p, Branch.NONRESIDUE_FORM, w_non, 0, -0.5)


def chi(k: int, p: int) -> float:
    """Series factor for the x^3 + k family at p = 1 mod 3: +1 when -k is a
    cube mod p, else -1/2."""
    if not is_prime(p) or p % 3 != 1:
        raise DomainError(f"{p} must be a prime = 1 mod 3")
    if k % p == 0:
        raise DomainError(f"chi undefined when p = {p} divides k = {k}")
    verdict = cubic_residue_euler((-k) % p, p)
    return 1.0 if verdict.tag is CubicTag.RESIDUE else -0.5


def rho_prime(k: int, p: int) -> int:
    """Number of roots of x^3 + k = 0 mod prime p: always 1 off the
    p = 1 mod 3 branch, 3 or 0 on it by the residuacity of -k."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k % p == 0:
        if p <= 10**5:
            return len(roots_mod(Polynomial.cubic(k), p))
        return 1  # x^3 = 0 mod p forces p | x: exactly the root 0
    if p % 3 != 1:
        return 1
    verdict = cubic_residue_euler((-k) % p, p)
    return 3 if verdict.tag is CubicTag.RESIDUE else 0


def rho(k: int, q: int) -> int:
    """Roots of x^3 + k mod squarefree q, multiplicatively from rho_prime."""
    if q < 1:
        raise DomainError(f"modulus {q} must be >= 1")
    fact = factorize(q)
    if not fact.is_squarefree:
        raise DomainError(f"{q} is not squarefree; use rho_bruteforce for general moduli")
    out = 1
    for p in fact.distinct_primes:
        out *= rho_prime(k, p)
        if out == 0:
            break
    return out


def roots_mod(f: Polynomial, m: int, budget: int = BRUTE_FORCE_BUDGET) -> list[int]:
    """All roots of f mod m by linear scan of [0, m). Moduli above the scan
    budget raise ResourceError."""
    if m < 1:
        raise DomainError(f"modulus {m} must be >= 1")
    if m > budget:
        raise ResourceError(f"modulus {m} exceeds scan budget {budget}")
    if m == 1:
        return [0]
    if m <= 64:
        return [x for x in range(m) if f.eval_mod(x, m) == 0]
    xs = np.arange(m, dtype=np.int64)
    acc = np.full(m, f.coefficients[-1] % m, dtype=np.int64)
    for c in reversed(f.coefficients[:-1]):
        acc = (acc * xs + (c % m)) % m
    return np.flatnonzero(acc == 0).tolist()


def rho_bruteforce(f: Polynomial, q: int) -> int:
    """Root count of f mod q by exhaustive scan; the independent oracle for
    rho and for solvable-modulus membership."""
    return len(roots_mod(f, q))
