"""Jack measures at theta = 2 and 1/2, their Pfaffian L-ensembles and kernels.

Exact values come back as fractions.Fraction; complex values as (re, im) pairs of Fractions.
Parameters accept int, Fraction or strings such as "1/3" and "1+i".
"""

import json
from fractions import Fraction

from . import _jackpf
from ._jackpf import JackpfError, conjugate, frobenius, partitions, rng_name, schema_version

__all__ = [
    "JackpfError",
    "conjugate",
    "embed",
    "ensemble_probability",
    "frobenius",
    "inverse_embed",
    "partitions",
    "pfaffian",
    "plancherel_measure",
    "rho",
    "run_cli",
    "sample",
    "series_class",
    "verify",
    "z_measure",
]


def _text(x):
    if isinstance(x, complex):
        return f"{Fraction(x.real)}{Fraction(x.imag):+}i"
    return str(x)


def _gaussian(pair):
    re, im = Fraction(pair[0]), Fraction(pair[1])
    return re if im == 0 else (re, im)


def z_measure(parts, z, zprime, theta):
    """M^(n)_{z,z',theta}(lambda) with n = |lambda|."""
    return _gaussian(_jackpf.z_measure(list(parts), _text(z), _text(zprime), _text(theta)))


def plancherel_measure(parts, theta):
    return Fraction(_jackpf.plancherel_measure(list(parts), _text(theta)))


def series_class(z, zprime, theta):
    return _jackpf.series_class(_text(z), _text(zprime), _text(theta))


def embed(parts, mode="theta2"):
    """(X-, X+) as lists of half-integers."""
    minus, plus = _jackpf.embed(list(parts), mode)
    return [Fraction(x) for x in minus], [Fraction(x) for x in plus]


def inverse_embed(minus, plus, mode="theta2"):
    """Partition for a configuration, or None outside Conf^L."""
    return _jackpf.inverse_embed([str(Fraction(x)) for x in minus], [str(Fraction(x)) for x in plus], mode)


def _spec(kind, z, zprime, xi, eta):
    if kind == "plancherel":
        return kind, "0", "0", _text(eta)
    return kind, _text(z), _text(zprime), _text(xi)


def pfaffian(parts, kind, z=None, zprime=None, xi=None, eta=None):
    """Pf L(X|X) for X = embed(lambda) as a float pair, and whether it matches the closed form exactly."""
    return _jackpf.pfaffian(*_spec(kind, z, zprime, xi, eta), list(parts))


def ensemble_probability(parts, kind, z=None, zprime=None, xi=None, eta=None):
    return complex(*_jackpf.ensemble_probability(*_spec(kind, z, zprime, xi, eta), list(parts)))


def rho(points, kind, radius_twice, z=None, zprime=None, xi=None, eta=None):
    """Floating correlation function on the window |x| <= radius_twice / 2."""
    return complex(*_jackpf.rho_float(*_spec(kind, z, zprime, xi, eta), radius_twice,
                                      [str(Fraction(x)) for x in points]))


def verify(suite, **options):
    return json.loads(_jackpf.verify(suite, **options))


def sample(n, count, seed, theta=2, z=None, zprime=None):
    """Draws from the Plancherel measure on Y_n, or the z-measure when z and zprime are given."""
    plancherel = z is None
    return _jackpf.sample(plancherel, _text(z if z is not None else 0), _text(zprime if zprime is not None else 0),
                          _text(theta), n, count, seed)


def run_cli(*args):
    """Runs the command-line tool in-process; returns (exit code, stdout, stderr)."""
    return _jackpf.run_cli([str(a) for a in args])
