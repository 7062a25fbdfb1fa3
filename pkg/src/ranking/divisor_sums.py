"""
Divisor sums and exact divisions shared by every Möbius chain
"""
from typing import Callable, List

from sympy import divisors as _divisors
from sympy.functions.combinatorial.numbers import mobius as _mobius
from sympy.functions.combinatorial.numbers import totient as _totient

from src.errors import ConventionError


def divisors(n: int) -> List[int]:
    return [int(d) for d in _divisors(n)]


def mobius(n: int) -> int:
    return int(_mobius(n))


def totient(n: int) -> int:
    return int(_totient(n))


def exact_divide(total: int, divisor: int, what: str) -> int:
    """Divide, failing loudly on a remainder"""
    quotient, remainder = divmod(total, divisor)
    if remainder:
        raise ConventionError(f"{what}: {total} is not divisible by {divisor}")
    return quotient


def primitive_count(n: int, dividing: Callable[[int], int]) -> int:
    """Möbius inversion: sum over d | n of mu(n/d) * dividing(d)"""
    return sum(mobius(n // d) * dividing(d) for d in divisors(n))
